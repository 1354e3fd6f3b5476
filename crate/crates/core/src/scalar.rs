//! Scalar abstraction for numeric evaluation.
//!
//! Exact data (polynomial and series coefficients) lives in `BigInt` /
//! `BigRational`. Evaluations at real points, in particular at the golden
//! ratio inverse, go through the [`Scalar`] trait so the same code runs in
//! plain `f64` or in the 106-bit [`DoubleDouble`] type when more digits are
//! wanted.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Real scalar with the small operation set the numeric layer needs.
pub trait Scalar:
    Clone
    + PartialOrd
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + fmt::Debug
{
    fn from_f64(x: f64) -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;

    fn from_u64(n: u64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// Inverse golden ratio (√5 − 1)/2, computed in-type.
    fn golden_ratio_inv() -> Self {
        let five = Self::from_f64(5.0);
        (five.sqrt() - Self::one()) / Self::from_f64(2.0)
    }
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().unwrap_or(f64::INFINITY)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
}

/// Double-double ("two-float") number: an unevaluated sum `hi + lo` of two
/// doubles with `|lo| <= ulp(hi)/2`, giving roughly 31 significant decimal
/// digits. Classic error-free transformations (Dekker, Knuth) drive the
/// arithmetic; products use the hardware FMA.
#[derive(Clone, Copy, Default)]
pub struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, f64::mul_add(a, b, -p))
}

impl DoubleDouble {
    pub const fn new(hi: f64, lo: f64) -> Self {
        DoubleDouble { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        let (s, e) = quick_two_sum(hi, lo);
        DoubleDouble { hi: s, lo: e }
    }

    pub fn powi(self, mut n: u32) -> Self {
        let mut base = self;
        let mut acc = DoubleDouble::from(1.0);
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            n >>= 1;
            if n > 0 {
                base *= base;
            }
        }
        acc
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }
}

impl fmt::Debug for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dd({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hi + self.lo)
    }
}

impl PartialEq for DoubleDouble {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        DoubleDouble::renorm(s1, s2 + t2)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        DoubleDouble::renorm(p1, p2)
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * DoubleDouble::from(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * DoubleDouble::from(q2);
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        DoubleDouble::renorm(s, e + q3)
    }
}

impl AddAssign for DoubleDouble {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for DoubleDouble {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for DoubleDouble {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Zero for DoubleDouble {
    fn zero() -> Self {
        DoubleDouble { hi: 0.0, lo: 0.0 }
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        DoubleDouble { hi: 1.0, lo: 0.0 }
    }
}

impl Scalar for DoubleDouble {
    fn from_f64(x: f64) -> Self {
        DoubleDouble::from(x)
    }

    fn from_bigint(n: &BigInt) -> Self {
        use num_traits::FromPrimitive;
        let hi = n.to_f64().unwrap_or(f64::INFINITY);
        if !hi.is_finite() {
            return DoubleDouble::from(hi);
        }
        // hi is integral, so the conversion back is exact and the remainder
        // captures the bits the first rounding lost.
        let rem = n - BigInt::from_f64(hi).expect("finite integral f64");
        let lo = rem.to_f64().unwrap_or(0.0);
        DoubleDouble::renorm(hi, lo)
    }

    fn to_f64(&self) -> f64 {
        self.hi + self.lo
    }

    fn abs(&self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -*self
        } else {
            *self
        }
    }

    fn sqrt(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // one Newton step on top of the double estimate doubles the digits
        let x0 = self.hi.sqrt();
        let x = DoubleDouble::from(x0);
        let diff = *self - x * x;
        x + diff / (DoubleDouble::from(2.0) * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dd(x: f64) -> DoubleDouble {
        DoubleDouble::from(x)
    }

    #[test]
    fn basic_arithmetic_exceeds_f64_precision() {
        // 1/3 in dd is accurate to ~1e-32
        let third = dd(1.0) / dd(3.0);
        let back = third * dd(3.0) - dd(1.0);
        assert!(back.to_f64().abs() < 1e-31);
    }

    #[test]
    fn sqrt_five_squares_back() {
        let five = dd(5.0);
        let r = five.sqrt();
        let err = (r * r - five).to_f64().abs();
        assert!(err < 1e-30, "err = {err:e}");
    }

    #[test]
    fn golden_ratio_identity() {
        // q = 1/omega satisfies q^2 + q - 1 = 0
        let q = DoubleDouble::golden_ratio_inv();
        let residual = (q * q + q - dd(1.0)).to_f64().abs();
        assert!(residual < 1e-31, "residual = {residual:e}");
        assert!((q.to_f64() - 0.618033988749895).abs() < 1e-15);
    }

    #[test]
    fn bigint_roundtrip() {
        let n = BigInt::from(964299016u64) * BigInt::from(1_000_000_007u64);
        let v = DoubleDouble::from_bigint(&n);
        // value is ~9.6e17, well above 2^53; dd keeps it exactly
        let back = v.to_f64();
        let exact = ToPrimitive::to_f64(&n).unwrap();
        assert!((back - exact).abs() <= 128.0);
        let direct = BigInt::from(12345u32);
        assert_eq!(DoubleDouble::from_bigint(&direct).to_f64(), 12345.0);
    }

    #[test]
    fn powi_matches_repeated_mul() {
        let q = DoubleDouble::golden_ratio_inv();
        let mut acc = DoubleDouble::one();
        for _ in 0..13 {
            acc *= q;
        }
        assert!((q.powi(13) - acc).to_f64().abs() < 1e-30);
    }
}
