//! Exact arithmetic in the real quadratic field Q(sqrt 3) and its complexification.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LieError;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// An element `a + b*sqrt(3)` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rat_text(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rat(s: &str) -> Result<BigRational, LieError> {
    let s = s.trim();
    let bad = || LieError::Parse(format!("bad rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl Scalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Scalar { a, b }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar { a: rat(n, d), b: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// `(n1/d1) + (n2/d2) sqrt 3`
    pub fn with_root(n1: i64, d1: i64, n2: i64, d2: i64) -> Self {
        Scalar { a: rat(n1, d1), b: rat(n2, d2) }
    }

    pub fn sqrt3() -> Self {
        Scalar { a: BigRational::zero(), b: BigRational::one() }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn root3_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b sqrt 3`.
    pub fn conj3(&self) -> Self {
        Scalar { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a^2 - 3 b^2`; zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - rat(3, 1) * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Scalar { a: &self.a / &n, b: -(&self.b / &n) })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    /// Exact sign of the real number `a + b sqrt 3`.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a^2 with 3 b^2
        let lhs = &self.a * &self.a;
        let rhs = rat(3, 1) * &self.b * &self.b;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Scalar::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * SQRT3
    }

    /// Canonical text: `p/q` or `(p/q)+(r/s)√3`.
    pub fn to_text(&self) -> String {
        if self.b.is_zero() {
            rat_text(&self.a)
        } else {
            format!("({})+({})√3", rat_text(&self.a), rat_text(&self.b))
        }
    }

    /// Inverse of [`Scalar::to_text`]; also accepts bare integers.
    pub fn parse(s: &str) -> Result<Self, LieError> {
        let s = s.trim();
        if let Some(body) = s.strip_suffix("√3") {
            let body = body.trim();
            let inner = body
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| LieError::Parse(format!("bad scalar `{s}`")))?;
            let (left, right) = inner
                .split_once(")+(")
                .ok_or_else(|| LieError::Parse(format!("bad scalar `{s}`")))?;
            Ok(Scalar { a: parse_rat(left)?, b: parse_rat(right)? })
        } else {
            Ok(Scalar { a: parse_rat(s)?, b: BigRational::zero() })
        }
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar { a: BigRational::zero(), b: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar { a: BigRational::one(), b: BigRational::zero() }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Scalar {
    type Err = LieError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scalar::parse(s)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Scalar::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, r: &Scalar) -> Scalar {
        Scalar { a: &self.a + &r.a, b: &self.b + &r.b }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, r: &Scalar) -> Scalar {
        Scalar { a: &self.a - &r.a, b: &self.b - &r.b }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, r: &Scalar) -> Scalar {
        let three = rat(3, 1);
        Scalar {
            a: &self.a * &r.a + three * &self.b * &r.b,
            b: &self.a * &r.b + &self.b * &r.a,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, r: &Scalar) -> Scalar {
        self.checked_div(r).expect("division by zero in Q(sqrt 3)")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, r: Scalar) -> Scalar { (&self).$m(&r) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, r: &Scalar) -> Scalar { (&self).$m(r) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, r: Scalar) -> Scalar { self.$m(&r) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b }
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a.clone(), b: -self.b.clone() }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, r: &Scalar) {
        self.a += &r.a;
        self.b += &r.b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, r: &Scalar) {
        self.a -= &r.a;
        self.b -= &r.b;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, r: &Scalar) {
        *self = &*self * r;
    }
}

/// Element of Q(sqrt 3)[i].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl CScalar {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        CScalar { re, im }
    }

    pub fn real(re: Scalar) -> Self {
        CScalar { re, im: Scalar::zero() }
    }

    pub fn i() -> Self {
        CScalar { re: Scalar::zero(), im: Scalar::one() }
    }

    pub fn zero() -> Self {
        CScalar::real(Scalar::zero())
    }

    pub fn one() -> Self {
        CScalar::real(Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        CScalar { re: self.re.clone(), im: -&self.im }
    }

    pub fn add(&self, o: &CScalar) -> CScalar {
        CScalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &CScalar) -> CScalar {
        CScalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn mul(&self, o: &CScalar) -> CScalar {
        CScalar {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn scale(&self, s: &Scalar) -> CScalar {
        CScalar { re: &self.re * s, im: &self.im * s }
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt3_squares_to_three() {
        let s = Scalar::sqrt3();
        assert_eq!(&s * &s, Scalar::from_int(3));
    }

    #[test]
    fn inverse_rationalizes() {
        let x = Scalar::with_root(1, 2, -3, 4);
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, Scalar::one());
    }

    #[test]
    fn sign_is_exact() {
        // 7 - 4 sqrt 3 is about 0.0718
        assert_eq!(Scalar::with_root(7, 1, -4, 1).signum(), 1);
        assert_eq!(Scalar::with_root(-7, 1, 4, 1).signum(), -1);
        assert_eq!(Scalar::with_root(1, 1, -1, 1).signum(), -1);
        assert_eq!(Scalar::zero().signum(), 0);
    }

    #[test]
    fn text_forms() {
        assert_eq!(Scalar::from_ratio(-3, 6).to_text(), "-1/2");
        assert_eq!(Scalar::with_root(0, 1, 1, 2).to_text(), "(0/1)+(1/2)√3");
        assert_eq!(Scalar::parse("(1/3)+(-2/5)√3").unwrap(), Scalar::with_root(1, 3, -2, 5));
        assert_eq!(Scalar::parse("4").unwrap(), Scalar::from_int(4));
        assert!(Scalar::parse("1/0").is_err());
    }

    #[test]
    fn float_view() {
        let x = Scalar::with_root(1, 2, 1, 2);
        assert!((x.to_f64() - (0.5 + 0.5 * 3f64.sqrt())).abs() < 1e-15);
    }
}
