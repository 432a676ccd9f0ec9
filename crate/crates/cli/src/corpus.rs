//! Reference inputs exercised by the integration and acceptance tests.

use ybe_forge::assoc_bd::{AssocBdData, Normalization, RawBdData};
use ybe_forge::cybe::{LieBdTriple, RawLieTriple};

/// Associative BD data `(σ, Γ₁, Γ₂)` in the flag syntax.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BdSpec {
    pub n: usize,
    pub sigma: &'static str,
    pub gamma1: &'static str,
    pub gamma2: &'static str,
}

impl BdSpec {
    pub fn raw(&self) -> RawBdData {
        RawBdData::parse(self.n, self.sigma, self.gamma1, self.gamma2).expect("corpus entries parse")
    }

    pub fn validated(&self, mode: Normalization) -> AssocBdData {
        AssocBdData::validate(&self.raw(), mode).expect("corpus entries are valid")
    }

    pub fn label(&self) -> String {
        format!("n={} sigma={} G1={{{}}} G2={{{}}}", self.n, self.sigma, self.gamma1, self.gamma2)
    }
}

/// The running `n = 6` example.
pub const RUNNING_EXAMPLE: BdSpec = BdSpec { n: 6, sigma: "(136245)", gamma1: "(6,1),(1,2)", gamma2: "(2,3),(3,4)" };

pub const BD_CORPUS: &[BdSpec] = &[
    BdSpec { n: 2, sigma: "(12)", gamma1: "", gamma2: "" },
    BdSpec { n: 3, sigma: "(123)", gamma1: "", gamma2: "" },
    BdSpec { n: 3, sigma: "(132)", gamma1: "", gamma2: "" },
    BdSpec { n: 3, sigma: "(123)", gamma1: "(1,2)", gamma2: "(2,3)" },
    BdSpec { n: 4, sigma: "(1234)", gamma1: "(1,2)", gamma2: "(2,3)" },
    BdSpec { n: 4, sigma: "(1432)", gamma1: "(2,3)", gamma2: "(1,2)" },
    BdSpec { n: 4, sigma: "(1234)", gamma1: "(4,1)", gamma2: "(1,2)" },
    BdSpec { n: 5, sigma: "(13524)", gamma1: "", gamma2: "" },
    BdSpec { n: 5, sigma: "(12345)", gamma1: "(1,2),(2,3)", gamma2: "(2,3),(3,4)" },
    BdSpec { n: 6, sigma: "(123456)", gamma1: "(1,2),(3,4)", gamma2: "(2,3),(4,5)" },
    RUNNING_EXAMPLE,
];

/// Lie BD triple `(Γ₁, Γ₂, τ)` in the flag syntax.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleSpec {
    pub n: usize,
    pub gamma1: &'static str,
    pub gamma2: &'static str,
    pub tau: &'static str,
}

impl TripleSpec {
    pub fn raw(&self) -> RawLieTriple {
        RawLieTriple::parse(self.n, self.gamma1, self.gamma2, self.tau).expect("corpus entries parse")
    }

    pub fn validated(&self) -> LieBdTriple {
        LieBdTriple::validate(&self.raw()).expect("corpus entries are valid")
    }

    pub fn label(&self) -> String {
        format!("n={} G1={{{}}} G2={{{}}} tau={{{}}}", self.n, self.gamma1, self.gamma2, self.tau)
    }
}

pub const TRIPLE_CORPUS: &[TripleSpec] = &[
    TripleSpec { n: 2, gamma1: "", gamma2: "", tau: "" },
    TripleSpec { n: 3, gamma1: "", gamma2: "", tau: "" },
    TripleSpec { n: 4, gamma1: "", gamma2: "", tau: "" },
    TripleSpec { n: 2, gamma1: "1", gamma2: "2", tau: "(1,2)" },
    TripleSpec { n: 3, gamma1: "1", gamma2: "2", tau: "(1,2)" },
    TripleSpec { n: 3, gamma1: "1,2", gamma2: "2,3", tau: "(1,2),(2,3)" },
    TripleSpec { n: 4, gamma1: "1", gamma2: "3", tau: "(1,3)" },
    TripleSpec { n: 4, gamma1: "1,2", gamma2: "2,3", tau: "(1,2),(2,3)" },
    TripleSpec { n: 4, gamma1: "1,2", gamma2: "3,4", tau: "(1,4),(2,3)" },
    TripleSpec { n: 4, gamma1: "1,3", gamma2: "2,4", tau: "(1,2),(3,4)" },
    TripleSpec { n: 4, gamma1: "1,2", gamma2: "3,4", tau: "(1,3),(2,4)" },
];
