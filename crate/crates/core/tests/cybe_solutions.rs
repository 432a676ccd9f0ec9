mod common;

use proptest::prelude::*;

use common::{triple, TRIPLE_CORPUS};
use ybe_forge::cybe::{
    cybe_residual, sample_ws, singular_part_ok, unitarity_residual, ChainSigns, Coxeter, LieBdTriple, RawLieTriple,
    TrigRMatrix,
};
use ybe_forge::numerics::Sampler;
use ybe_forge::tensor::Tensor2;
use ybe_forge::{Error, Rational, Scalar};

fn raw(n: usize, g1: &str, g2: &str, t: &str) -> RawLieTriple {
    RawLieTriple::parse(n, g1, g2, t).unwrap()
}

#[test]
fn corpus_solutions_are_unitary_cybe_solutions() {
    for entry in TRIPLE_CORPUS {
        let tr = triple(entry);
        let r = TrigRMatrix::canonical(&tr).unwrap();
        tr.check_r0(r.r0()).unwrap();
        let mut sampler = Sampler::new(17);
        for _ in 0..3 {
            let ws = sample_ws(&mut sampler, r.h()).unwrap();
            assert!(cybe_residual(&r, &ws).unwrap().is_zero(), "{entry:?}");
            let w = ws[0].clone() / ws[1].clone();
            assert!(unitarity_residual(&r, &w).unwrap().is_zero(), "{entry:?}");
        }
        assert!(singular_part_ok(&r, 8).unwrap(), "{entry:?}");
    }
}

#[test]
fn gram_matrix_is_the_affine_cartan_matrix() {
    for n in 3..=5 {
        let g = Coxeter::new(n).unwrap().gram();
        for a in 0..n {
            for b in 0..n {
                let expected = if a == b {
                    2
                } else if (a + 1) % n == b || (b + 1) % n == a {
                    -1
                } else {
                    0
                };
                assert_eq!(*g.get(a, b), Rational::from_i64(expected), "n={n} ({a},{b})");
            }
        }
    }
}

#[test]
fn graded_casimirs_sum_to_the_casimir() {
    let cox = Coxeter::new(4).unwrap();
    let sum = (0..4).fold(Tensor2::zeros(4), |acc, j| acc.add(&cox.omega(j)).unwrap());
    assert_eq!(sum, cox.casimir());
}

#[test]
fn unsigned_chain_images_fail_for_orientation_reversing_tau() {
    let r = raw(4, "1,2", "3,4", "(1,4),(2,3)");
    let plain = LieBdTriple::validate_with(&r, ChainSigns::MatrixUnits).unwrap();
    let signed = LieBdTriple::validate_with(&r, ChainSigns::Bracket).unwrap();
    let ws = sample_ws(&mut Sampler::new(3), 4).unwrap();
    let bad = TrigRMatrix::canonical(&plain).unwrap();
    let good = TrigRMatrix::canonical(&signed).unwrap();
    assert!(!cybe_residual(&bad, &ws).unwrap().is_zero());
    assert!(cybe_residual(&good, &ws).unwrap().is_zero());
}

#[test]
fn mirrored_r0_constraint_breaks_cybe() {
    let tr = triple(&(3, "1", "2", "(1,2)"));
    let good = TrigRMatrix::canonical(&tr).unwrap();
    let mirrored = TrigRMatrix::new(&tr, good.r0().swap_factors());
    assert!(matches!(tr.check_r0(mirrored.r0()), Err(Error::R0ConstraintViolation(_))));
    let ws = sample_ws(&mut Sampler::new(8), 3).unwrap();
    assert!(!cybe_residual(&mirrored, &ws).unwrap().is_zero());
}

#[test]
fn symmetric_perturbation_of_r0_breaks_unitarity() {
    let tr = triple(&(3, "", "", ""));
    let h = &tr.coxeter().cartan_basis()[0];
    let r0 = TrigRMatrix::canonical(&tr).unwrap().r0().add(&Tensor2::outer(h, h)).unwrap();
    assert!(tr.check_r0(&r0).is_err());
    let r = TrigRMatrix::new(&tr, r0);
    assert!(!unitarity_residual(&r, &Rational::from_ratio(2, 3)).unwrap().is_zero());
}

#[test]
fn r0_freedom_dimensions() {
    let dims: Vec<usize> = [(3, "", "", ""), (4, "", "", ""), (4, "1", "3", "(1,3)"), (3, "1", "2", "(1,2)")]
        .iter()
        .map(|e| triple(e).solve_r0().unwrap().freedom.len())
        .collect();
    assert_eq!(dims, vec![1, 3, 1, 0]);
}

#[test]
fn invalid_triples_are_rejected() {
    let v = |n, g1, g2, t| LieBdTriple::validate(&raw(n, g1, g2, t));
    assert!(matches!(v(4, "1,2", "1,3", "(1,1),(2,3)"), Err(Error::GramViolation(_))));
    assert!(matches!(v(3, "1,2,3", "1,2,3", "(1,1),(2,2),(3,3)"), Err(Error::NotNilpotentTau(_))));
    assert!(matches!(v(3, "1,2", "2,1", "(1,2),(2,1)"), Err(Error::NotNilpotentTau(_))));
    assert!(matches!(v(3, "1", "2", "(1,3)"), Err(Error::Index(_))));
    assert!(matches!(v(3, "4", "2", "(4,2)"), Err(Error::Index(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn every_admissible_r0_gives_a_solution(idx in 0usize..3, coef in prop::collection::vec((-5i64..=5, 1i64..=3), 3)) {
        let entry = [(3, "", "", ""), (4, "", "", ""), (4, "1", "3", "(1,3)")][idx];
        let tr = triple(&entry);
        let sols = tr.solve_r0().unwrap();
        let r0 = sols.freedom.iter().zip(&coef).fold(sols.particular.clone(), |acc, (f, &(p, q))| {
            acc.add(&f.scale(&Rational::from_ratio(p, q))).unwrap()
        });
        prop_assert!(tr.check_r0(&r0).is_ok());
        let r = TrigRMatrix::new(&tr, r0);
        let ws = sample_ws(&mut Sampler::new(idx as u64), r.h()).unwrap();
        prop_assert!(cybe_residual(&r, &ws).unwrap().is_zero());
    }
}
