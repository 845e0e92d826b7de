//! Exact scalar fields: prime fields `GF(p)` and the rationals.
//!
//! Everything downstream is generic over [`Scalar`]. Prime fields are
//! const-generic so that a residue is a plain `u64`; the rationals are
//! arbitrary precision.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// An exact field.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// 0 for the rationals.
    fn characteristic() -> u64;

    /// Number of elements, `None` when infinite.
    fn order() -> Option<u64>;

    /// Short textual tag used in fixtures: `"Q"` or `"GF:p"`.
    fn tag() -> String;

    fn from_i64(n: i64) -> Self;

    fn inv(&self) -> Option<Self>;

    /// Canonical residue in `[0, p)` for prime fields.
    fn residue(&self) -> Option<u64>;

    fn parse(s: &str) -> Result<Self>;

    /// All elements of a finite field in residue order.
    fn elements() -> Option<Vec<Self>> {
        let q = Self::order()?;
        Some((0..q).map(|r| Self::from_i64(r as i64)).collect())
    }

    /// A random element; for the rationals a small integer or half-integer.
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

/// The prime field `GF(P)`. `P` must be prime; [`Fp::new`] normalizes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * Scalar::inv(&rhs).expect("division by zero in GF(p)")
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn characteristic() -> u64 {
        P
    }

    fn order() -> Option<u64> {
        Some(P)
    }

    fn tag() -> String {
        format!("GF:{P}")
    }

    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn residue(&self) -> Option<u64> {
        Some(self.0)
    }

    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n = Self::parse(n)?;
            let d = Self::parse(d)?;
            return d
                .inv()
                .map(|di| n * di)
                .ok_or_else(|| Error::Parse(format!("zero denominator in {s:?}")));
        }
        let v: i128 = s
            .parse()
            .map_err(|_| Error::Parse(format!("not a residue: {s:?}")))?;
        Ok(Fp(v.rem_euclid(P as i128) as u64))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..P))
    }
}

/// Arbitrary-precision rational; a thin newtype so that `Display`
/// and parsing use the fixture notation (`"3/2"`, `"-1"`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(n: i64, d: i64) -> Self {
        Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// True when the value is the square of a rational.
    pub fn is_square(&self) -> bool {
        if self.0.is_negative() {
            return false;
        }
        let n = self.0.numer();
        let d = self.0.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        &(&rn * &rn) == n && &(&rd * &rd) == d
    }
}

impl Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom() == &BigInt::one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! forward_rational_op {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
        impl $atr for Rational {
            fn $am(&mut self, rhs: Rational) {
                self.0.$am(rhs.0);
            }
        }
    };
}

forward_rational_op!(Add, add, AddAssign, add_assign);
forward_rational_op!(Sub, sub, SubAssign, sub_assign);
forward_rational_op!(Mul, mul, MulAssign, mul_assign);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

impl Scalar for Rational {
    fn characteristic() -> u64 {
        0
    }

    fn order() -> Option<u64> {
        None
    }

    fn tag() -> String {
        "Q".to_string()
    }

    fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn residue(&self) -> Option<u64> {
        None
    }

    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational(BigRational::new(n, d)))
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let n = rng.gen_range(-3i64..=3);
        let d = if rng.gen_bool(0.25) { 2 } else { 1 };
        Rational::new(n, d)
    }
}

/// Residue-level arithmetic mod `p^e` on integer lifts, used by the
/// characteristic-p radical algorithm.
pub(crate) fn lift_residue<F: Scalar>(x: &F) -> u64 {
    x.residue().expect("lift_residue on a field without residues")
}

#[cfg(test)]
mod tests {
    use super::*;

    type F3 = Fp<3>;

    #[test]
    fn gf_normalizes_and_inverts() {
        assert_eq!(F3::from_i64(-1).value(), 2);
        assert_eq!(F3::new(7).value(), 1);
        for x in F3::elements().unwrap().into_iter().skip(1) {
            assert_eq!(x * x.inv().unwrap(), F3::one());
        }
        assert!(F3::zero().inv().is_none());
    }

    #[test]
    fn rationals_lowest_terms() {
        let r = Rational::parse("6/-4").unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::parse(" 5 ").unwrap(), Rational::from_i64(5));
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::new(9, 4).is_square());
        assert!(!Rational::new(2, 1).is_square());
    }

    #[test]
    fn gf_parse_fraction() {
        // 1/2 = 2 in GF(3)
        assert_eq!(F3::parse("1/2").unwrap(), F3::new(2));
        assert!(F3::parse("x").is_err());
    }
}
