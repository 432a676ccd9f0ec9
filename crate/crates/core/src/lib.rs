//! Exact constructions and verifiers for trigonometric solutions of the
//! associative and classical Yang-Baxter equations.
//!
//! The kernels in [`numerics`] and [`tensor`] are generic over [`Scalar`];
//! everything that certifies an identity runs over [`Rational`].

pub mod assoc_bd;
pub mod aybe;
pub mod cybe;
pub mod error;
pub mod manin;
pub mod numerics;
pub mod order;
pub mod tensor;

pub use error::{Error, Result};
pub use numerics::Scalar;

pub type Rational = num_rational::BigRational;
pub type MatQ = numerics::Matrix<Rational>;
pub type PolyQ = numerics::Poly<Rational>;
pub type RatFuncQ = numerics::RatFunc<Rational>;
pub type SeriesQ = numerics::TruncSeries<Rational>;
pub type Tensor2Q = tensor::Tensor2<Rational>;
pub type Tensor3Q = tensor::Tensor3<Rational>;
