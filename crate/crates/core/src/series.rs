//! Exact truncated power series and the closed-form generating functions
//! used throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{NsgError, Result};
use crate::poly::Poly;

/// Default truncation order; the CLI lets `NSG_TRUNCATION_ORDER` override it.
pub const DEFAULT_ORDER: usize = 64;

/// Power series truncated at order `N`: coefficients of `q^0 .. q^{N-1}` are
/// kept, terms `q^N` and beyond are dropped. All arithmetic is exact up to
/// the truncation order.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T> TruncatedSeries<T>
where
    T: Zero + One + Clone + PartialEq + std::ops::AddAssign + std::ops::Mul<Output = T>,
{
    /// Build from coefficients; the vector length is the truncation order.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![T::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = T::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, power: usize) -> T {
        self.coeffs.get(power).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..n).map(|i| {
                let mut c = self.coeffs[i].clone();
                c += rhs.coeffs[i].clone();
                c
            }).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![T::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                out[i + j] += self.coeffs[i].clone() * rhs.coeffs[j].clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Composition `self(g(q))`; defined only when `g` has no constant term.
    pub fn compose(&self, g: &Self) -> Self {
        assert!(
            g.coeff(0).is_zero(),
            "series composition needs a zero constant term"
        );
        let n = self.order().min(g.order());
        let mut acc = TruncatedSeries::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul(g);
            acc.coeffs[0] += c.clone();
        }
        acc
    }
}

impl<T> TruncatedSeries<T>
where
    T: Zero
        + One
        + Clone
        + PartialEq
        + std::ops::AddAssign
        + std::ops::Mul<Output = T>
        + std::ops::Sub<Output = T>
        + std::ops::Div<Output = T>,
{
    /// Division by a series with non-zero constant term (a unit).
    pub fn div_unit(&self, rhs: &Self) -> Result<Self> {
        if rhs.coeff(0).is_zero() {
            return Err(NsgError::NotExpandable);
        }
        let n = self.order().min(rhs.order());
        let mut out = vec![T::zero(); n];
        for i in 0..n {
            let mut acc = self.coeffs[i].clone();
            for k in 1..=i {
                if !rhs.coeffs[k].is_zero() {
                    acc = acc - rhs.coeffs[k].clone() * out[i - k].clone();
                }
            }
            out[i] = acc / rhs.coeffs[0].clone();
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

/// Exact rational series over `q` with arbitrary-precision rational
/// coefficients; the workhorse instantiation.
pub type RatSeries = TruncatedSeries<BigRational>;

impl RatSeries {
    /// True when every kept coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs().iter().all(BigRational::is_integer)
    }

    pub fn coeff_bigint(&self, power: usize) -> BigInt {
        let c = self.coeff(power);
        debug_assert!(c.is_integer());
        c.to_integer()
    }
}

/// A rational function `numerator / denominator` with integer polynomial
/// parts, expandable as a power series when the denominator has a non-zero
/// constant term.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunctionSpec {
    pub numerator: Poly<BigInt>,
    pub denominator: Poly<BigInt>,
}

impl RationalFunctionSpec {
    pub fn new(numerator: Poly<BigInt>, denominator: Poly<BigInt>) -> Self {
        RationalFunctionSpec { numerator, denominator }
    }

    /// Exact long-division expansion to the given truncation order.
    pub fn expand(&self, order: usize) -> Result<RatSeries> {
        let den0 = self.denominator.coeff(0);
        if den0.is_zero() {
            return Err(NsgError::NotExpandable);
        }
        let num = poly_to_series(&self.numerator, order);
        let den = poly_to_series(&self.denominator, order);
        num.div_unit(&den)
    }
}

fn poly_to_series(p: &Poly<BigInt>, order: usize) -> RatSeries {
    let coeffs = (0..order)
        .map(|i| BigRational::from_integer(p.coeff(i)))
        .collect();
    RatSeries::from_coeffs(coeffs)
}

fn int_poly(coeffs: &[i64]) -> Poly<BigInt> {
    Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Fibonacci generating function `1/(1 - q - q^2)`, with F_0 = F_1 = 1.
pub fn fibonacci_series(order: usize) -> RatSeries {
    RationalFunctionSpec::new(int_poly(&[1]), int_poly(&[1, -1, -1]))
        .expand(order)
        .expect("unit denominator")
}

/// The polynomial `I_n` counting two-part compositions `a + b` with
/// `1 <= a, b <= n <= a + b`, i.e. `sum q^{a+b}` over that range.
pub fn i_poly(n: usize) -> Poly<BigInt> {
    assert!(n >= 1);
    // closed form q^n (−2 + sum_{i=0}^{n} (n+1−i) q^i)
    let mut inner = vec![BigInt::zero(); n + 1];
    for (i, c) in inner.iter_mut().enumerate() {
        *c = BigInt::from((n + 1 - i) as u64);
    }
    inner[0] -= BigInt::from(2);
    Poly::new(inner).shifted(n)
}

/// Generating series of weakly admissible compositions whose maximum is
/// exactly `mu >= 2`; a product of a left factor, the pivot weight `q^mu`
/// and a right factor.
pub fn w_series(mu: usize, order: usize) -> RatSeries {
    assert!(mu >= 2);
    let mut left = Poly::monomial(BigInt::one(), 0);
    for i in mu.div_ceil(2)..=mu {
        left = left + Poly::monomial(BigInt::one(), i);
    }
    let mut right = Poly::monomial(BigInt::one(), 0);
    for i in mu / 2..mu {
        right = right + Poly::monomial(BigInt::one(), i);
    }
    let numerator = (left * right).shifted(mu);
    let one = Poly::monomial(BigInt::one(), 0);
    let denominator = (&one - &i_poly(mu)) * (&one - &i_poly(mu - 1));
    RationalFunctionSpec::new(numerator, denominator)
        .expand(order)
        .expect("constant term 1")
}

/// Denominator `1 - (q^2+q^3)(q+q^2+q^3)` of the lower-bound series; its
/// unit-interval root bounds the convergence radius from below.
pub fn lower_bound_denominator() -> Poly<BigInt> {
    let one = Poly::monomial(BigInt::one(), 0);
    &one - &(int_poly(&[0, 0, 1, 1]) * int_poly(&[0, 1, 1, 1]))
}

/// Lower-bound series `(1 + q^2 + q^3) q^3 / (1 - (q^2+q^3)(q+q^2+q^3))`:
/// its coefficients count an explicit family of compositions with maximum 3
/// ending in a maximal part, so they bound those counts from below.
pub fn lower_bound_series_a(order: usize) -> RatSeries {
    RationalFunctionSpec::new(int_poly(&[1, 0, 1, 1]).shifted(3), lower_bound_denominator())
        .expand(order)
        .expect("constant term 1")
}
