//! Exact arithmetic kernels: matrices, polynomials, rational functions and truncated series.

mod matrix;
mod poly;
mod ratfunc;
mod sample;
mod scalar;
mod series;

pub use matrix::{solve_linear, LinearSolution, Matrix};
pub use poly::Poly;
pub use ratfunc::{Point, RatFunc};
pub use sample::{sample_rational, Sampler};
pub use scalar::{fmt_rational, parse_rational, Scalar};
pub use series::{compose_ratfunc_series, exp_series, TruncSeries};
