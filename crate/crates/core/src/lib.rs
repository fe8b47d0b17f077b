//! Braid monodromy and Zariski-van Kampen presentations for complements of
//! plane algebraic curves with rational coefficients.

pub mod exactpoly;
pub mod fixtures;
pub mod grouptheory;
pub mod newtonpuiseux;
pub mod numroots;
pub mod pathtrack;
pub mod pipeline;
pub mod scalar;
pub mod vankampen;

mod error;

pub use error::Error;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;
pub type Integer = BigInt;
pub type QPoly = exactpoly::Poly<BigRational>;
pub type ZPoly = exactpoly::Poly<BigInt>;
pub type GaussianRational = scalar::Cplx<BigRational>;
pub type GaussianPoly = exactpoly::Poly<GaussianRational>;
pub type QBiPoly = exactpoly::BiPoly<BigRational>;
