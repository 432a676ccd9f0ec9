mod common;

use num_traits::One;

use common::triple;
use ybe_forge::cybe::TrigRMatrix;
use ybe_forge::manin::{
    a_coeffs, a_coeffs_direct, closure_inclusion_checks, extract_gr_from_r, manin_audit, membership, node_generators,
    node_ideal_audit, spanning_set, verify_module_closure, GradedElement, Membership,
};
use ybe_forge::numerics::{Point, RatFunc};
use ybe_forge::tensor::{unit, Tensor2};
use ybe_forge::{Error, RatFuncQ, Rational, Scalar};

const TRIPLES: [(usize, &str, &str, &str); 4] =
    [(2, "", "", ""), (3, "", "", ""), (3, "1", "2", "(1,2)"), (4, "1,2", "3,4", "(1,4),(2,3)")];

fn x() -> RatFuncQ {
    RatFunc::var()
}

#[test]
fn node_coefficients_agree_across_routes() {
    assert_eq!(a_coeffs(6), a_coeffs_direct(6).unwrap());
    assert!(node_ideal_audit(6).unwrap().passed());
}

#[test]
fn node_coefficients_hand_values() {
    let a = a_coeffs(2);
    let xm1 = x() - RatFunc::one();
    assert_eq!(a[0], RatFunc::one() / xm1.clone());
    assert_eq!(a[1], x() / xm1.powi(2).unwrap());
    // 1/(2e^{-u} - 1) = 1 + 2u + 3u^2 + ...
    assert_eq!(a[2].eval(&Point::Finite(Rational::from_i64(2))).unwrap(), Rational::from_i64(3));
    let [g2, g3] = node_generators();
    assert_eq!(g2, a[1]);
    assert_eq!(g3, x() / xm1.powi(3).unwrap());
}

#[test]
fn extraction_reproduces_the_spanning_set() {
    for entry in &TRIPLES {
        let tr = triple(entry);
        let r = TrigRMatrix::canonical(&tr).unwrap();
        for j in 0..r.h() {
            let ext = extract_gr_from_r(&r, &tr, j, 4).unwrap();
            let span = spanning_set(&r, &tr, j, 4);
            assert!(!span.is_empty());
            for e in span {
                assert_eq!(ext[e.basis_index][e.m], e.element, "{entry:?} {}", e.label);
                assert!(e.element.within_grading_bounds(r.h()), "{}", e.label);
            }
        }
    }
}

#[test]
fn closure_and_inclusions_hold() {
    for entry in &TRIPLES {
        let tr = triple(entry);
        let r = TrigRMatrix::canonical(&tr).unwrap();
        assert!(verify_module_closure(&r, &tr, 2).unwrap().passed, "{entry:?}");
        for c in closure_inclusion_checks(&r, &tr, 3).unwrap() {
            assert!(c.passed, "{entry:?} {} {:?}", c.name, c.witness);
        }
    }
}

#[test]
fn manin_audit_passes_on_canonical_solutions() {
    for entry in &TRIPLES {
        let tr = triple(entry);
        let r = TrigRMatrix::canonical(&tr).unwrap();
        let checks = manin_audit(&r, &tr, 3, 8).unwrap();
        let names: Vec<&str> = checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["isotropy", "complementarity"]);
        assert!(checks.iter().all(|c| c.passed), "{entry:?} {checks:?}");
    }
}

#[test]
fn non_skew_r0_breaks_isotropy() {
    let tr = triple(&(3, "", "", ""));
    let h = &tr.coxeter().cartan_basis()[0];
    let r0 = TrigRMatrix::canonical(&tr).unwrap().r0().add(&Tensor2::outer(h, h)).unwrap();
    let r = TrigRMatrix::new(&tr, r0);
    let checks = manin_audit(&r, &tr, 2, 8).unwrap();
    assert!(!checks.iter().find(|c| c.name == "isotropy").unwrap().passed);
}

#[test]
fn short_truncation_is_rejected() {
    let tr = triple(&(3, "", "", ""));
    let r = TrigRMatrix::canonical(&tr).unwrap();
    assert!(matches!(manin_audit(&r, &tr, 3, 3), Err(Error::TruncationTooShort(_))));
    assert!(matches!(manin_audit(&r, &tr, 0, 3), Err(Error::TruncationTooShort(_))));
}

#[test]
fn membership_certificates() {
    let tr = triple(&(3, "1", "2", "(1,2)"));
    let r = TrigRMatrix::canonical(&tr).unwrap();
    let span = spanning_set(&r, &tr, 1, 2);
    let combo = span[0].element.add(&span[1].element.scale(&Rational::from_ratio(-3, 2))).unwrap();
    let Membership::InSpan(cert) = membership(&r, &tr, &combo).unwrap() else {
        panic!("combination of spanning elements must be in the span");
    };
    assert!(!cert.is_empty());
    let [g2, _] = node_generators();
    assert!(membership(&r, &tr, &span[2].element.times(&g2)).unwrap().is_in());
}

#[test]
fn membership_rejects_outsiders() {
    let tr = triple(&(3, "", "", ""));
    let r = TrigRMatrix::canonical(&tr).unwrap();
    let e12 = unit(3, 1, 2);
    let constant = GradedElement::from_parts(1, &RatFunc::one(), &e12);
    assert!(!membership(&r, &tr, &constant).unwrap().is_in());
    assert!(!membership(&r, &tr, &GradedElement::from_parts(1, &x(), &e12)).unwrap().is_in());
    let far_pole = RatFunc::one() / (x() - RatFunc::constant(Rational::from_i64(2)));
    assert!(!membership(&r, &tr, &GradedElement::from_parts(1, &far_pole, &e12)).unwrap().is_in());
    let diag =
        ybe_forge::MatQ::from_fn(3, 3, |i, k| if i == k && i == 0 { Rational::one() } else { Rational::from_i64(0) });
    let shifted = GradedElement::from_parts(0, &(x() / (x() - RatFunc::one())), &diag);
    assert!(!membership(&r, &tr, &shifted).unwrap().is_in());
}
