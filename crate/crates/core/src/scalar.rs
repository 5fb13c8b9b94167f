//! Exact Gaussian-rational arithmetic.
//!
//! `Scalar` is a number `a + b·i` with `a`, `b` arbitrary-precision rationals.
//! It is the base field for every Lie-algebraic computation in this crate:
//! structure constants, Killing pairings and tensor coefficients never touch
//! floating point, so equality tests are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::Error;

/// An exact Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// The rational `num/den`; panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::new(r, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// `|s|² = s·conj(s)`, a nonnegative rational.
    pub fn norm2(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; division by zero is an error.
    pub fn checked_inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm2();
        Ok(Scalar::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, Error> {
        Ok(self.clone() * rhs.checked_inv()?)
    }

    /// Lossy conversion for the floating-point descent experiments.
    pub fn to_complex_f64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Rendered as `a/b + (c/d)i`, losslessly parseable.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(self.re + &rhs.re, self.im + &rhs.im)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        (&self).mul(&rhs)
    }
}

impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = (&*self).mul(&rhs);
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] at API boundaries.
impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse a rational literal `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational literal `{s}`"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| mk_err())?;
        let d: BigInt = den.trim().parse().map_err(|_| mk_err())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(BigRational::from_integer(n))
    }
}

impl Scalar {
    /// Render as `a/b + (c/d)i` (the CLI wire format).
    pub fn render(&self) -> String {
        if self.im.is_zero() {
            fmt_rational(&self.re)
        } else if self.im.is_negative() {
            format!("{} - ({})i", fmt_rational(&self.re), fmt_rational(&(-self.im.clone())))
        } else {
            format!("{} + ({})i", fmt_rational(&self.re), fmt_rational(&self.im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sc(n: i64, d: i64, ni: i64, di: i64) -> Scalar {
        Scalar::new(
            BigRational::new(BigInt::from(n), BigInt::from(d)),
            BigRational::new(BigInt::from(ni), BigInt::from(di)),
        )
    }

    #[test]
    fn conjugation_involution_and_norm() {
        let s = sc(3, 4, -2, 5);
        assert_eq!(s.conj().conj(), s);
        let n = s.norm2();
        assert!(!n.is_negative());
        // |s|² = s·conj(s) with vanishing imaginary part
        let p = (&s).mul(&s.conj());
        assert!(p.im.is_zero());
        assert_eq!(p.re, n);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(Scalar::zero().checked_inv(), Err(Error::DivisionByZero)));
        assert!(Scalar::one().checked_div(&Scalar::zero()).is_err());
    }

    #[test]
    fn render_round_trip_examples() {
        assert_eq!(Scalar::from_ratio(-3, 2).render(), "-3/2");
        assert_eq!(
            (Scalar::from_int(1) + &Scalar::i()).render(),
            "1 + (1)i"
        );
    }

    proptest! {
        #[test]
        fn field_round_trips(a in -50i64..50, b in 1i64..9, c in -50i64..50, d in 1i64..9,
                             e in -50i64..50, f in 1i64..9, g in -50i64..50, h in 1i64..9) {
            let x = sc(a, b, c, d);
            let y = sc(e, f, g, h);
            // (x+y)−y = x exactly
            prop_assert_eq!(x.clone() + y.clone() - y.clone(), x.clone());
            // (x·y)/y = x exactly for y ≠ 0
            if !y.is_zero() {
                prop_assert_eq!((&x).mul(&y).checked_div(&y).unwrap(), x);
            }
        }
    }
}
