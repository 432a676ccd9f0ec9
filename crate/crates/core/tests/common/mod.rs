#![allow(dead_code)]

use ybe_forge::assoc_bd::{AssocBdData, Normalization, RawBdData};
use ybe_forge::cybe::{LieBdTriple, RawLieTriple};

/// `(n, σ, Γ₁, Γ₂)`
pub const BD_CORPUS: &[(usize, &str, &str, &str)] = &[
    (2, "(12)", "", ""),
    (3, "(123)", "", ""),
    (3, "(132)", "", ""),
    (3, "(123)", "(1,2)", "(2,3)"),
    (4, "(1234)", "(1,2)", "(2,3)"),
    (4, "(1432)", "(2,3)", "(1,2)"),
    (4, "(1234)", "(4,1)", "(1,2)"),
    (5, "(13524)", "", ""),
    (5, "(12345)", "(1,2),(2,3)", "(2,3),(3,4)"),
    (6, "(123456)", "(1,2),(3,4)", "(2,3),(4,5)"),
    (6, "(136245)", "(6,1),(1,2)", "(2,3),(3,4)"),
];

pub fn bd(entry: &(usize, &str, &str, &str), mode: Normalization) -> AssocBdData {
    let raw = RawBdData::parse(entry.0, entry.1, entry.2, entry.3).unwrap();
    AssocBdData::validate(&raw, mode).unwrap()
}

pub fn running_example_bd(mode: Normalization) -> AssocBdData {
    bd(&BD_CORPUS[BD_CORPUS.len() - 1], mode)
}

/// `(n, Γ₁, Γ₂, τ)`
pub const TRIPLE_CORPUS: &[(usize, &str, &str, &str)] = &[
    (2, "", "", ""),
    (3, "", "", ""),
    (4, "", "", ""),
    (2, "1", "2", "(1,2)"),
    (3, "1", "2", "(1,2)"),
    (3, "1,2", "2,3", "(1,2),(2,3)"),
    (4, "1", "3", "(1,3)"),
    (4, "1,2", "2,3", "(1,2),(2,3)"),
    (4, "1,2", "3,4", "(1,4),(2,3)"),
    (4, "1,3", "2,4", "(1,2),(3,4)"),
    (4, "1,2", "3,4", "(1,3),(2,4)"),
];

pub fn triple(entry: &(usize, &str, &str, &str)) -> LieBdTriple {
    LieBdTriple::validate(&RawLieTriple::parse(entry.0, entry.1, entry.2, entry.3).unwrap()).unwrap()
}
