mod common;

use proptest::prelude::*;

use common::{bd, running_example_bd, BD_CORPUS};
use ybe_forge::assoc_bd::Normalization;
use ybe_forge::aybe::{
    r_bd_eval, r_const_eval, verify_general_aybe, verify_skew, AybeFamily, AybeKernel, AybePoint, LambdaConvention,
    Shifted,
};
use ybe_forge::numerics::Sampler;
use ybe_forge::tensor::Tensor2;
use ybe_forge::{Error, Rational, Scalar};

fn q(p: i64, d: i64) -> Rational {
    Rational::from_ratio(p, d)
}

#[test]
fn running_example_tail_has_six_terms() {
    let d = running_example_bd(Normalization::AsGiven);
    let (l, x, y) = (q(2, 3), q(5, 7), q(-4, 9));
    let full = r_bd_eval(&d, &l, &x, &y).unwrap();
    let tail = full.sub(&r_const_eval(d.sigma(), &l, &(x.clone() / y.clone())).unwrap()).unwrap();
    let li = l.inv();
    let mut expected = Tensor2::zeros(6);
    for (c, a, b, cc, dd) in [
        (li.clone(), 4, 3, 1, 2),
        (-l.clone(), 1, 2, 4, 3),
        (x.clone() * li.clone(), 3, 2, 6, 1),
        (x.clone() * li, 4, 2, 6, 2),
        (-(y.clone() * l.clone()), 6, 1, 3, 2),
        (-(y * l), 6, 2, 4, 2),
    ] {
        expected.add_term(c, a, b, cc, dd).unwrap();
    }
    assert_eq!(tail, expected);
}

#[test]
fn both_kernels_and_conventions_satisfy_the_identity() {
    for entry in BD_CORPUS {
        let d = bd(entry, Normalization::AsGiven);
        let mut sampler = Sampler::new(11);
        for kernel in [AybeKernel::constant(d.clone()), AybeKernel::full(d.clone())] {
            for conv in [LambdaConvention::InverseFirst, LambdaConvention::InverseSecond] {
                for _ in 0..3 {
                    let p = AybePoint::sample(&mut sampler, d.n()).unwrap();
                    let res = verify_general_aybe(&kernel, &p, conv).unwrap();
                    assert!(res.is_zero(), "{entry:?} {:?} {conv:?}", kernel.variant);
                }
            }
        }
    }
}

#[test]
fn skew_symmetry_holds_on_the_corpus() {
    for entry in BD_CORPUS {
        let kernel = AybeKernel::full(bd(entry, Normalization::AsGiven));
        let mut sampler = Sampler::new(5);
        for _ in 0..3 {
            let p = AybePoint::sample(&mut sampler, entry.0).unwrap();
            let lambda = LambdaConvention::InverseFirst.ratio(&p.lambdas[0], &p.lambdas[1]);
            assert!(verify_skew(&kernel, &lambda, &p.ys[0], &p.ys[1]).unwrap().is_zero(), "{entry:?}");
        }
    }
}

#[test]
fn perturbed_kernel_is_detected() {
    let kernel = AybeKernel::full(running_example_bd(Normalization::AsGiven));
    let delta = Tensor2::from_terms(6, &[(q(1, 1), 4, 3, 1, 2)]).unwrap();
    let bad = Shifted { inner: &kernel, delta };
    let p = AybePoint::sample(&mut Sampler::new(1), 6).unwrap();
    assert!(!verify_general_aybe(&bad, &p, LambdaConvention::InverseFirst).unwrap().is_zero());
}

#[test]
fn dropping_the_tails_breaks_the_identity_for_nonempty_gamma() {
    // half of the τ tails is not a solution
    let with = AybeKernel::full(running_example_bd(Normalization::AsGiven));
    let without = AybeKernel::constant(running_example_bd(Normalization::AsGiven));
    let p = AybePoint::sample(&mut Sampler::new(2), 6).unwrap();
    let (l, x, y) = (q(2, 1), q(3, 1), q(5, 1));
    let diff = with.eval(&l, &x, &y).unwrap().sub(&without.eval(&l, &x, &y).unwrap()).unwrap();
    assert!(!diff.is_zero());
    let half = Shifted { inner: &without, delta: diff.scale(&q(1, 2)) };
    assert!(!verify_general_aybe(&half, &p, LambdaConvention::InverseFirst).unwrap().is_zero());
}

#[test]
fn singular_parameters_are_rejected() {
    let d = running_example_bd(Normalization::AsGiven);
    assert!(matches!(r_bd_eval(&d, &q(-1, 1), &q(2, 1), &q(3, 1)), Err(Error::SingularParameter(_))));
    assert!(matches!(r_bd_eval(&d, &q(2, 1), &q(3, 1), &q(3, 1)), Err(Error::SingularParameter(_))));
    assert!(matches!(r_bd_eval(&d, &q(2, 1), &q(0, 1), &q(3, 1)), Err(Error::SingularParameter(_))));
}

fn admissible_point(n: usize) -> impl Strategy<Value = AybePoint> {
    let r = (-9i64..=9, 1i64..=5).prop_filter_map("nonzero", |(p, d)| (p != 0).then(|| Rational::from_ratio(p, d)));
    prop::array::uniform6(r)
        .prop_map(|v| AybePoint {
            lambdas: [v[0].clone(), v[1].clone(), v[2].clone()],
            ys: [v[3].clone(), v[4].clone(), v[5].clone()],
        })
        .prop_filter("admissible", move |p| p.is_admissible(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn identity_holds_at_arbitrary_admissible_points(p in admissible_point(5)) {
        let kernel = AybeKernel::full(bd(&BD_CORPUS[8], Normalization::AsGiven));
        prop_assert!(verify_general_aybe(&kernel, &p, LambdaConvention::InverseFirst).unwrap().is_zero());
    }
}
