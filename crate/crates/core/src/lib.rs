//! Exact linear algebra for corings, comodules and their endomorphism
//! rings over prime fields and the rationals.

pub mod algebra;
pub mod coend;
pub mod comodule;
pub mod coring;
pub mod cosemisimple;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod mat;
pub mod moduli;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::{Fp, Rational, Scalar};

pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
pub type Gf5 = Fp<5>;
pub type Q = Rational;
