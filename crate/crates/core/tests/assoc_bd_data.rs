mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{bd, running_example_bd, BD_CORPUS};
use ybe_forge::assoc_bd::{chain_closure, AssocBdData, Normalization, Pair, Perm, RawBdData};
use ybe_forge::Error;

#[test]
fn corpus_validates_in_every_mode_that_accepts_it() {
    for entry in BD_CORPUS {
        let given = bd(entry, Normalization::AsGiven);
        let auto = bd(entry, Normalization::Auto);
        assert!(auto.is_normalized(), "{entry:?}");
        if given.is_normalized() {
            assert_eq!(auto, given);
            assert_eq!(auto.shift(), 0);
        } else {
            let raw = RawBdData::parse(entry.0, entry.1, entry.2, entry.3).unwrap();
            assert_eq!(AssocBdData::validate(&raw, Normalization::Require), Err(Error::UnnormalizedGamma));
        }
    }
}

#[test]
fn running_example_chain_sets_and_tau() {
    let d = running_example_bd(Normalization::AsGiven);
    let pi1: BTreeSet<Pair> = [(6, 1), (1, 2), (6, 2)].into_iter().collect();
    let pi2: BTreeSet<Pair> = [(2, 3), (3, 4), (2, 4)].into_iter().collect();
    assert_eq!(d.pi1(), &pi1);
    assert_eq!(d.pi2(), &pi2);
    assert_eq!(d.tau_orbit((6, 1)), vec![(2, 3)]);
    assert_eq!(d.tau_orbit((1, 2)), vec![(3, 4)]);
    assert_eq!(d.tau_orbit((6, 2)), vec![(2, 4)]);
    assert!(pi1.iter().all(|&a| d.tau_pow(a, 2).is_none()));
}

#[test]
fn running_example_normalizes_with_shift_one() {
    let d = running_example_bd(Normalization::Auto);
    assert_eq!(d.shift(), 1);
    assert_eq!(d.sigma().to_string(), "(1,3,5,6,2,4)");
    assert_eq!(d.gamma1(), &[(1, 2), (2, 3)].into_iter().collect::<BTreeSet<_>>());
    assert_eq!(d.gamma2(), &[(3, 4), (4, 5)].into_iter().collect::<BTreeSet<_>>());
    assert_eq!(d.valid_m(), vec![1, 2, 3, 6]);
}

#[test]
fn invalid_inputs_are_rejected() {
    let v = |n, s, g1, g2| AssocBdData::validate(&RawBdData::parse(n, s, g1, g2).unwrap(), Normalization::AsGiven);
    assert!(matches!(v(4, "(12)(34)", "", ""), Err(Error::NotCyclic(_))));
    assert!(matches!(v(3, "(123)", "(1,2),(2,3),(3,1)", "(2,3),(3,1),(1,2)"), Err(Error::NotProperSubset(_))));
    assert!(matches!(v(4, "(1234)", "(1,3)", "(2,4)"), Err(Error::NotProperSubset(_))));
    assert!(matches!(v(4, "(1234)", "(1,2)", "(3,4)"), Err(Error::GammaMismatch(_))));
    assert!(matches!(RawBdData::parse(3, "(1,2", "", ""), Err(Error::Parse(_))));
    assert!(matches!(RawBdData::parse(3, "(124)", "", ""), Err(Error::Parse(_))));
}

#[test]
fn tau_is_a_bijection_from_pi1_to_pi2() {
    for entry in BD_CORPUS {
        let d = bd(entry, Normalization::AsGiven);
        let image: BTreeSet<Pair> = d.pi1().iter().map(|&a| d.tau_pow(a, 1).unwrap()).collect();
        assert_eq!(&image, d.pi2(), "{entry:?}");
        assert_eq!(d.pi1().len(), d.pi2().len());
    }
}

#[test]
fn tau_eventually_leaves_pi1() {
    for entry in BD_CORPUS {
        let d = bd(entry, Normalization::AsGiven);
        for &a in d.pi1() {
            assert!(d.tau_orbit(a).len() < d.n(), "{entry:?} {a:?}");
        }
    }
}

#[test]
fn tau_squared_occurs_on_overlapping_gammas() {
    let d = bd(&BD_CORPUS[8], Normalization::AsGiven);
    assert_eq!(d.tau_orbit((1, 2)), vec![(2, 3), (3, 4)]);
}

#[test]
fn reverse_is_an_involution_and_swaps_chain_sets() {
    for entry in BD_CORPUS {
        let d = bd(entry, Normalization::AsGiven);
        let r = d.reverse();
        assert_eq!(r.reverse(), d);
        assert_eq!(r.pi1(), d.pi2());
        assert_eq!(r.pi2(), d.pi1());
    }
}

proptest! {
    #[test]
    fn relabelling_preserves_structure(idx in 0..BD_CORPUS.len(), s in 0usize..6) {
        let d = bd(&BD_CORPUS[idx], Normalization::AsGiven);
        let n = d.n();
        let s = s % n;
        let r = d.relabel(s);
        prop_assert_eq!(r.pi1().len(), d.pi1().len());
        let lens = |x: &AssocBdData| {
            let mut v: Vec<usize> = x.pi1().iter().map(|&a| x.tau_orbit(a).len()).collect();
            v.sort();
            v
        };
        prop_assert_eq!(lens(&r), lens(&d));
        let back = r.relabel((n - s) % n);
        prop_assert_eq!(back.gamma1(), d.gamma1());
    }

    #[test]
    fn chain_closure_contains_gamma_and_is_closed(n in 3usize..8, mask in 0u32..64) {
        let gamma: BTreeSet<Pair> = (1..n).filter(|i| mask >> i & 1 == 1).map(|i| (i, i + 1)).collect();
        let pi = chain_closure(n, &gamma);
        prop_assert!(gamma.is_subset(&pi));
        for &(a, b) in &pi {
            for &(c, d) in &pi {
                if b == c && a != d {
                    prop_assert!(pi.contains(&(a, d)), "({a},{b}) then ({c},{d})");
                }
            }
        }
    }

    #[test]
    fn permutation_inverse_and_order(images in Just(vec![1usize, 2, 3, 4, 5]).prop_shuffle()) {
        let p = Perm::from_images(images).unwrap();
        let id = Perm::from_images((1..=5).collect()).unwrap();
        prop_assert_eq!(p.compose(&p.inverse()), id.clone());
        if p.is_single_cycle() {
            prop_assert_eq!(p.pow(5), id);
        }
        prop_assert_eq!(Perm::parse_cycles(&p.to_string(), 5).unwrap(), p);
    }
}
