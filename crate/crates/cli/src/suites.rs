//! Verification suites behind the subcommands.

use std::path::Path;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use thiserror::Error;

use ybe_forge::assoc_bd::{AssocBdData, Normalization, Pair, RawBdData};
use ybe_forge::aybe::r_bd_eval;
use ybe_forge::aybe::{verify_general_aybe, verify_skew, AybeKernel, AybePoint, LambdaConvention, KERNEL_CONVENTION};
use ybe_forge::cybe::{
    cybe_residual, sample_ws, singular_part_ok, unitarity_residual, LieBdTriple, RawLieTriple, TrigRMatrix,
};
use ybe_forge::manin::{
    closure_inclusion_checks, extract_gr_from_r, manin_audit, node_ideal_audit, spanning_set, verify_module_closure,
    NamedCheck,
};
use ybe_forge::numerics::{fmt_rational, parse_rational, Sampler};
use ybe_forge::order::{Gluing, OrderModel, PhiRoute};
use ybe_forge::tensor::{unit, Tensor2};
use ybe_forge::{Error, MatQ, Rational, Scalar, Tensor2Q, Tensor3Q};

use crate::args::{AybeArgs, BdArgs, GeometricArgs, OracleChoice, TripleArgs};
use crate::config::ConfigError;
use crate::report::{Check, VerificationReport};

/// Problems with the inputs; these map to exit code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("r0 file: {0}")]
    R0File(String),
}

/// Largest number of residual terms copied into a witness.
const WITNESS_TERMS: usize = 8;

fn q(v: &Rational) -> Value {
    Value::String(fmt_rational(v))
}

fn pairs_json(ps: impl IntoIterator<Item = Pair>) -> Value {
    Value::String(ps.into_iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(","))
}

fn tensor2_witness(t: &Tensor2Q) -> Value {
    let terms = t.terms();
    json!({
        "nonzero_terms": terms.len(),
        "terms": terms.iter().take(WITNESS_TERMS).map(|(c, i, j, k, l)| json!({"coeff": q(c), "slot": [i, j, k, l]})).collect::<Vec<_>>(),
    })
}

fn tensor3_witness(t: &Tensor3Q) -> Value {
    let terms = t.terms();
    json!({
        "nonzero_terms": terms.len(),
        "terms": terms.iter().take(WITNESS_TERMS).map(|(c, s)| json!({"coeff": q(c), "slot": s})).collect::<Vec<_>>(),
    })
}

fn error_witness(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

fn named(c: NamedCheck) -> Check {
    let w = c.witness.map(Value::String).unwrap_or(Value::Null);
    if c.passed {
        Check::pass(c.name, Some(w))
    } else {
        Check::fail(c.name, w)
    }
}

fn raw_bd(a: &BdArgs) -> Result<RawBdData, InputError> {
    Ok(RawBdData::parse(a.n, &a.sigma, &a.gamma1, &a.gamma2)?)
}

fn bd_inputs(data: &AssocBdData) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("n".into(), json!(data.n()));
    m.insert("sigma".into(), Value::String(data.sigma().to_string()));
    m.insert("gamma1".into(), pairs_json(data.gamma1().iter().copied()));
    m.insert("gamma2".into(), pairs_json(data.gamma2().iter().copied()));
    m.insert("pi1".into(), pairs_json(data.pi1().iter().copied()));
    m.insert("pi2".into(), pairs_json(data.pi2().iter().copied()));
    m
}

/// Records the outcome of a per-trial check: pass when every trial yields a zero residual.
fn trial_check<R>(
    name: &str,
    results: Vec<ybe_forge::Result<R>>,
    is_zero: impl Fn(&R) -> bool,
    witness: impl Fn(usize, &R) -> Value,
) -> Check {
    let trials = results.len();
    for (k, r) in results.iter().enumerate() {
        match r {
            Ok(v) if is_zero(v) => {}
            Ok(v) => return Check::fail(name, witness(k, v)),
            Err(e) => return Check::fail(name, json!({"trial": k, "error": e.to_string()})),
        }
    }
    Check::pass(name, Some(json!({ "trials": trials })))
}

pub fn verify_aybe(args: &AybeArgs) -> Result<VerificationReport, InputError> {
    let data = AssocBdData::validate(&raw_bd(&args.data)?, Normalization::AsGiven)?;
    let n = data.n();
    let mut inputs = bd_inputs(&data);
    inputs.insert("trials".into(), json!(args.trials));
    inputs.insert(
        "lambda_convention".into(),
        json!(match KERNEL_CONVENTION {
            LambdaConvention::InverseFirst => "inverse-first",
            LambdaConvention::InverseSecond => "inverse-second",
        }),
    );
    let mut report = VerificationReport::new("verify-aybe", inputs, args.out.seed);
    let mut sampler = Sampler::new(args.out.seed);
    let points: Vec<AybePoint> =
        (0..args.trials).map(|_| AybePoint::sample(&mut sampler, n)).collect::<ybe_forge::Result<_>>()?;
    let kernel = AybeKernel::full(data);
    let point_json = |p: &AybePoint| json!({"lambdas": p.lambdas.iter().map(q).collect::<Vec<_>>(), "ys": p.ys.iter().map(q).collect::<Vec<_>>()});

    let aybe: Vec<_> = points.par_iter().map(|p| verify_general_aybe(&kernel, p, KERNEL_CONVENTION)).collect();
    report.push(trial_check(
        "general_aybe",
        aybe,
        Tensor3Q::is_zero,
        |k, t| json!({"trial": k, "point": point_json(&points[k]), "residual": tensor3_witness(t)}),
    ));
    let skew: Vec<_> = points.par_iter().map(|p| verify_skew(&kernel, &skew_lambda(p), &p.ys[0], &p.ys[1])).collect();
    report.push(trial_check(
        "skew",
        skew,
        Tensor2Q::is_zero,
        |k, t| json!({"trial": k, "point": point_json(&points[k]), "residual": tensor2_witness(t)}),
    ));
    Ok(report)
}

/// Parameter of `r^{x₁x₂}`; admissible whenever the point is.
pub fn skew_lambda(p: &AybePoint) -> Rational {
    KERNEL_CONVENTION.ratio(&p.lambdas[0], &p.lambdas[1])
}

/// `(λ, x, y)` with `λ ≠ 0`, `λ^n ≠ 1` and distinct nonzero `x`, `y`.
fn sample_geometric_point(sampler: &mut Sampler, n: usize) -> ybe_forge::Result<[Rational; 3]> {
    let lambda = sampler.rational(|l| l.pow_i(n as i64) == Rational::from_i64(1))?;
    let x = sampler.rational(|_| false)?;
    let y = sampler.rational(|v| *v == x)?;
    Ok([lambda, x, y])
}

pub fn geometric_compare(args: &GeometricArgs) -> Result<VerificationReport, InputError> {
    let data = AssocBdData::validate(&raw_bd(&args.data)?, Normalization::Auto)?;
    let n = data.n();
    let ms = if args.all_m { data.valid_m() } else { vec![data.choose_m()] };
    let mut inputs = bd_inputs(&data);
    inputs.insert("normalization_shift".into(), json!(data.shift()));
    inputs.insert("m".into(), json!(ms));
    inputs.insert(
        "oracle".into(),
        json!(match args.oracle {
            OracleChoice::Closed => "closed",
            OracleChoice::Solve => "solve",
            OracleChoice::Both => "both",
        }),
    );
    inputs.insert("gluing".into(), json!(if args.corrupt_levi { "identity" } else { "sigma" }));
    inputs.insert("trials".into(), json!(args.trials));
    let mut report = VerificationReport::new("geometric-compare", inputs, args.out.seed);

    let mut sampler = Sampler::new(args.out.seed);
    let points: Vec<[Rational; 3]> =
        (0..args.trials).map(|_| sample_geometric_point(&mut sampler, n)).collect::<ybe_forge::Result<_>>()?;
    let reversed = data.reverse();
    let routes: Vec<PhiRoute> = match args.oracle {
        OracleChoice::Closed => vec![PhiRoute::Closed],
        OracleChoice::Solve => vec![PhiRoute::Solve],
        OracleChoice::Both => vec![PhiRoute::Closed, PhiRoute::Solve],
    };
    let gluing = if args.corrupt_levi { Gluing::Identity } else { Gluing::Sigma };
    let point_json = |p: &[Rational; 3]| json!({"lambda": q(&p[0]), "x": q(&p[1]), "y": q(&p[2])});

    for &m in &ms {
        let model = match OrderModel::build_with(&data, m, gluing) {
            Ok(model) => model,
            Err(e) => {
                report.push(Check::fail(format!("model[m={m}]"), error_witness(&e)));
                continue;
            }
        };
        match model.audit() {
            Ok(a) => {
                let h0 = model.h0_dimension();
                let ok = a.dim_i == n * n && a.contains_identity && a.closed && a.isotropic && h0 == 1;
                report.push(Check::from_bool(
                    format!("model[m={m}]"),
                    ok,
                    json!({
                        "dim_p1": a.dim_p1, "dim_p2": a.dim_p2, "dim_i": a.dim_i,
                        "contains_identity": a.contains_identity, "closed": a.closed, "isotropic": a.isotropic,
                        "theta_plus_index": a.theta_plus_index, "theta_minus_index": a.theta_minus_index, "h0": h0,
                    }),
                ));
            }
            Err(e) => report.push(Check::fail(format!("model[m={m}]"), error_witness(&e))),
        }
        for &route in &routes {
            let label = match route {
                PhiRoute::Closed => "closed",
                PhiRoute::Solve => "solve",
            };
            let results: Vec<_> = points
                .par_iter()
                .map(|p| -> ybe_forge::Result<Tensor2Q> {
                    let geo = model.geometric_rmatrix(&p[0], &p[1], &p[2], route)?;
                    geo.sub(&r_bd_eval(&reversed, &p[0], &p[1], &p[2])?)
                })
                .collect();
            report.push(trial_check(
                &format!("geometric_equals_closed_form[m={m},route={label}]"),
                results,
                Tensor2Q::is_zero,
                |k, t| json!({"trial": k, "point": point_json(&points[k]), "difference": tensor2_witness(t)}),
            ));
        }
        if args.oracle == OracleChoice::Both {
            let results: Vec<_> = points
                .par_iter()
                .map(|p| -> ybe_forge::Result<Option<Pair>> {
                    for i in 1..=n {
                        for j in 1..=n {
                            let b: MatQ = unit(n, i, j);
                            if model.phi_closed(&p[0], &p[1], &p[2], &b)?
                                != model.phi_oracle(&p[0], &p[1], &p[2], &b)?
                            {
                                return Ok(Some((i, j)));
                            }
                        }
                    }
                    Ok(None)
                })
                .collect();
            report.push(trial_check(&format!("phi_closed_equals_oracle[m={m}]"), results, Option::is_none, |k, u| {
                let (i, j) = u.expect("mismatch present");
                json!({"trial": k, "point": point_json(&points[k]), "unit": [i, j]})
            }));
        }
    }
    Ok(report)
}

/// Reads an `(n-1)×(n-1)` matrix `R` and returns `Σ R_ab h_a ⊗ h_b`.
pub fn read_r0_file(path: &Path, triple: &LieBdTriple) -> Result<Tensor2Q, InputError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
    let basis = triple.coxeter().cartan_basis();
    let rows: Vec<Vec<Rational>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split([',', ' ', '\t'])
                .filter(|t| !t.is_empty())
                .map(|t| parse_rational(t).ok_or_else(|| InputError::R0File(format!("bad entry {t:?}"))))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let d = basis.len();
    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
        return Err(InputError::R0File(format!("expected a {d}x{d} matrix")));
    }
    let mut r0 = Tensor2::zeros(triple.n());
    for (a, row) in rows.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if !c.is_zero() {
                r0 = r0.add(&Tensor2::outer(&basis[a], &basis[b]).scale(c))?;
            }
        }
    }
    triple.check_r0(&r0)?;
    Ok(r0)
}

struct TripleSetup {
    triple: LieBdTriple,
    r: TrigRMatrix,
    inputs: Map<String, Value>,
}

fn setup_triple(args: &TripleArgs) -> Result<TripleSetup, InputError> {
    let raw = RawLieTriple::parse(args.n, &args.gamma1, &args.gamma2, &args.tau)?;
    let triple = LieBdTriple::validate(&raw)?;
    let solutions = triple.solve_r0()?;
    let r0 = if args.r0 == "auto" { solutions.particular } else { read_r0_file(Path::new(&args.r0), &triple)? };
    let r = TrigRMatrix::new(&triple, r0);
    let mut inputs = Map::new();
    inputs.insert("n".into(), json!(args.n));
    inputs.insert("gamma1".into(), json!(raw.gamma1));
    inputs.insert("gamma2".into(), json!(raw.gamma2));
    inputs.insert("tau".into(), pairs_json(raw.tau.iter().copied()));
    inputs.insert("r0".into(), json!(args.r0));
    inputs.insert("r0_freedom".into(), json!(solutions.freedom.len()));
    inputs.insert("order".into(), json!(args.order));
    inputs.insert("pole_bound".into(), json!(args.pole_bound));
    inputs.insert("trials".into(), json!(args.trials));
    Ok(TripleSetup { triple, r, inputs })
}

/// `w₁/w₂`, which avoids the poles whenever the triple is admissible.
pub fn unitarity_w(ws: &[Rational; 3]) -> Rational {
    ws[0].clone() / ws[1].clone()
}

fn push_cybe_checks(report: &mut VerificationReport, setup: &TripleSetup, args: &TripleArgs) -> Result<(), InputError> {
    let r = &setup.r;
    let mut sampler = Sampler::new(args.out.seed);
    let points: Vec<[Rational; 3]> =
        (0..args.trials).map(|_| sample_ws(&mut sampler, r.h())).collect::<ybe_forge::Result<_>>()?;
    let ws_json = |w: &[Rational; 3]| json!(w.iter().map(q).collect::<Vec<_>>());
    let cybe: Vec<_> = points.par_iter().map(|w| cybe_residual(r, w)).collect();
    report.push(trial_check(
        "cybe",
        cybe,
        Tensor3Q::is_zero,
        |k, t| json!({"trial": k, "w": ws_json(&points[k]), "residual": tensor3_witness(t)}),
    ));
    let unit: Vec<_> = points.par_iter().map(|w| unitarity_residual(r, &unitarity_w(w))).collect();
    report.push(trial_check(
        "unitarity",
        unit,
        Tensor2Q::is_zero,
        |k, t| json!({"trial": k, "w": q(&unitarity_w(&points[k])), "residual": tensor2_witness(t)}),
    ));
    match singular_part_ok(r, args.order) {
        Ok(ok) => report.push(Check::from_bool("singular_part", ok, json!({"order": args.order}))),
        Err(e) => report.push(Check::fail("singular_part", error_witness(&e))),
    }
    Ok(())
}

pub fn verify_cybe(args: &TripleArgs) -> Result<VerificationReport, InputError> {
    let setup = setup_triple(args)?;
    let mut report = VerificationReport::new("verify-cybe", setup.inputs.clone(), args.out.seed);
    push_cybe_checks(&mut report, &setup, args)?;
    Ok(report)
}

/// Coefficients `a_0 … a_6` and their membership in the node ideals.
pub fn node_ideal_check() -> Check {
    match node_ideal_audit(6) {
        Ok(audit) => {
            let failed: Vec<&str> = audit.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
            let mut w = Map::new();
            for (m, a) in audit.a.iter().enumerate().take(4) {
                w.insert(format!("a{m}"), Value::String(a.to_string()));
            }
            w.insert("checks".into(), json!(audit.checks.len()));
            w.insert("failed".into(), json!(failed));
            Check::from_bool("node_ideal", audit.passed(), Value::Object(w))
        }
        Err(e) => Check::fail("node_ideal", error_witness(&e)),
    }
}

/// `extract_gr_from_r` and `spanning_set` agree for all grades and `m <= m_max`.
pub fn extraction_check(triple: &LieBdTriple, r: &TrigRMatrix, m_max: usize) -> Check {
    let per_grade: Vec<ybe_forge::Result<Option<String>>> = (0..r.h())
        .into_par_iter()
        .map(|j| {
            let ext = extract_gr_from_r(r, triple, j, m_max)?;
            Ok(spanning_set(r, triple, j, m_max)
                .into_iter()
                .find(|e| ext[e.basis_index][e.m] != e.element)
                .map(|e| e.label))
        })
        .collect();
    let mut compared = 0usize;
    for (j, res) in per_grade.into_iter().enumerate() {
        match res {
            Ok(None) => compared += 1,
            Ok(Some(label)) => return Check::fail("extraction_agreement", json!({"grade": j, "element": label})),
            Err(e) => return Check::fail("extraction_agreement", json!({"grade": j, "error": e.to_string()})),
        }
    }
    Check::pass("extraction_agreement", Some(json!({"grades": compared, "m_max": m_max})))
}

pub fn manin_audit_suite(args: &TripleArgs) -> Result<VerificationReport, InputError> {
    let setup = setup_triple(args)?;
    let mut report = VerificationReport::new("manin-audit", setup.inputs.clone(), args.out.seed);
    push_cybe_checks(&mut report, &setup, args)?;
    let (triple, r) = (&setup.triple, &setup.r);
    let p = args.pole_bound;
    report.push(node_ideal_check());
    report.push(extraction_check(triple, r, p + 1));
    match verify_module_closure(r, triple, p) {
        Ok(c) => report.push(named(c)),
        Err(e) => report.push(Check::fail("module_closure", error_witness(&e))),
    }
    match closure_inclusion_checks(r, triple, p + 1) {
        Ok(cs) => cs.into_iter().for_each(|c| report.push(named(c))),
        Err(e) => report.push(Check::fail("closure_inclusions", error_witness(&e))),
    }
    match manin_audit(r, triple, p, args.order.max(p + 1)) {
        Ok(cs) => cs.into_iter().for_each(|c| report.push(named(c))),
        Err(e) => report.push(Check::fail("manin_audit", error_witness(&e))),
    }
    Ok(report)
}
