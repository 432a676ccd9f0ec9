mod common;

use common::{bd, running_example_bd, BD_CORPUS};
use ybe_forge::assoc_bd::Normalization;
use ybe_forge::aybe::r_bd_eval;
use ybe_forge::numerics::Sampler;
use ybe_forge::order::{Gluing, OrderModel, PhiRoute, Theta};
use ybe_forge::tensor::unit;
use ybe_forge::{Error, Rational, Scalar};

fn point(sampler: &mut Sampler, n: usize) -> (Rational, Rational, Rational) {
    let l = sampler.rational(|v| v.pow_i(n as i64) == Rational::from_i64(1)).unwrap();
    let x = sampler.rational(|_| false).unwrap();
    let y = sampler.rational(|v| *v == x).unwrap();
    (l, x, y)
}

#[test]
fn small_models_pass_audits_and_match_the_closed_form() {
    for entry in BD_CORPUS.iter().filter(|e| e.0 <= 4) {
        let d = bd(entry, Normalization::Auto);
        let n = d.n();
        let mut sampler = Sampler::new(3);
        for m in d.valid_m() {
            let (model, audit) = OrderModel::build_audited(&d, m).unwrap();
            assert_eq!(audit.dim_i, n * n);
            assert!(audit.contains_identity && audit.closed && audit.isotropic);
            assert_eq!(model.h0_dimension(), 1, "{entry:?} m={m}");
            let (l, x, y) = point(&mut sampler, n);
            let expected = r_bd_eval(&d.reverse(), &l, &x, &y).unwrap();
            for route in [PhiRoute::Closed, PhiRoute::Solve] {
                assert_eq!(model.geometric_rmatrix(&l, &x, &y, route).unwrap(), expected, "{entry:?} m={m} {route:?}");
            }
            for i in 1..=n {
                for j in 1..=n {
                    let b = unit(n, i, j);
                    assert_eq!(model.phi_closed(&l, &x, &y, &b).unwrap(), model.phi_oracle(&l, &x, &y, &b).unwrap());
                }
            }
        }
    }
}

#[test]
fn running_example_dimensions() {
    let d = running_example_bd(Normalization::Auto);
    let (_, audit) = OrderModel::build_audited(&d, 1).unwrap();
    assert_eq!((audit.dim_p1, audit.dim_p2, audit.dim_i), (24, 24, 36));
    assert_eq!(audit.theta_plus_index, 2);
}

#[test]
fn theta_operators_are_nilpotent() {
    for entry in BD_CORPUS {
        let d = bd(entry, Normalization::Auto);
        let model = OrderModel::build(&d, d.choose_m()).unwrap();
        for which in [Theta::Plus, Theta::Minus] {
            let k = model.nilpotency_index(which).unwrap();
            assert!(k >= 1 && k <= d.n(), "{entry:?} {which:?} {k}");
        }
    }
}

#[test]
fn unnormalized_data_and_bad_cut_points_are_rejected() {
    let raw = running_example_bd(Normalization::AsGiven);
    assert_eq!(OrderModel::build(&raw, 1).unwrap_err(), Error::UnnormalizedGamma);
    let d = running_example_bd(Normalization::Auto);
    // (3,4) ∈ Γ₂ rules out m = 4
    assert_eq!(OrderModel::build(&d, 4).unwrap_err(), Error::InvalidM(4));
}

#[test]
fn identity_gluing_is_caught() {
    let d = running_example_bd(Normalization::Auto);
    assert!(matches!(OrderModel::build_with(&d, 1, Gluing::Identity), Err(Error::LeviMismatch(_))));
    // when the Levi positions agree the wrong gluing still builds but gives the wrong r-matrix
    let small = bd(&BD_CORPUS[0], Normalization::Auto);
    let model = OrderModel::build_with(&small, 1, Gluing::Identity).unwrap();
    let (l, x, y) = point(&mut Sampler::new(9), 2);
    let expected = r_bd_eval(&small.reverse(), &l, &x, &y).unwrap();
    assert_ne!(model.geometric_rmatrix(&l, &x, &y, PhiRoute::Solve).unwrap(), expected);
}
