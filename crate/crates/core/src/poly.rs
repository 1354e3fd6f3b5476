//! Dense univariate polynomials in `q`, generic over the coefficient type.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Polynomial with coefficient of `q^i` at index `i`. Trailing zeros are
/// trimmed, so the zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Zero + Clone> Poly<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn monomial(coeff: T, power: usize) -> Self {
        if coeff.is_zero() {
            return Poly::new(vec![]);
        }
        let mut coeffs = vec![T::zero(); power + 1];
        coeffs[power] = coeff;
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> T {
        self.coeffs.get(power).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn map<U: Zero + Clone>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn shifted(&self, power: usize) -> Self {
        if self.coeffs.is_empty() {
            return Poly { coeffs: vec![] };
        }
        let mut coeffs = vec![T::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }
}

impl<T> Poly<T>
where
    T: Zero + One + Clone + AddAssign + Mul<Output = T>,
{
    /// Horner evaluation in the coefficient type itself.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone();
            acc += c.clone();
        }
        acc
    }
}

impl<T: Zero + Clone + AddAssign> Poly<T> {
    pub fn derivative(&self) -> Self
    where
        T: Mul<Output = T> + From<u32>,
    {
        if self.coeffs.len() <= 1 {
            return Poly::new(vec![]);
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.clone() * T::from(i as u32 + 1))
                .collect(),
        )
    }
}

impl Poly<num_bigint::BigInt> {
    /// Evaluate with coefficients converted into the scalar type.
    pub fn eval_scalar<S: Scalar>(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + S::from_bigint(c);
        }
        acc
    }

    /// Derivative evaluated in the scalar type (for Newton steps).
    pub fn eval_derivative_scalar<S: Scalar>(&self, x: &S) -> S {
        let mut acc = S::zero();
        for (i, c) in self.coeffs.iter().enumerate().skip(1).rev() {
            acc = acc * x.clone() + S::from_bigint(&(c * num_bigint::BigInt::from(i)));
        }
        acc
    }
}

impl<T: Zero + Clone + AddAssign> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Zero + Clone + AddAssign> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            if let Some(d) = rhs.coeffs.get(i) {
                c += d.clone();
            }
            out.push(c);
        }
        Poly::new(out)
    }
}

impl<T> Sub for &Poly<T>
where
    T: Zero + Clone + AddAssign + Neg<Output = T>,
{
    type Output = Poly<T>;
    #[allow(clippy::suspicious_arithmetic_impl)] // a - b as a + (-b)
    fn sub(self, rhs: Self) -> Poly<T> {
        self + &rhs.map(|c| -c.clone())
    }
}

impl<T> Sub for Poly<T>
where
    T: Zero + Clone + AddAssign + Neg<Output = T>,
{
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        &self - &rhs
    }
}

impl<T> Mul for &Poly<T>
where
    T: Zero + Clone + AddAssign + Mul<Output = T>,
{
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::new(vec![]);
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T> Mul for Poly<T>
where
    T: Zero + Clone + AddAssign + Mul<Output = T>,
{
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Zero + Clone> Zero for Poly<T>
where
    Poly<T>: Add<Output = Poly<T>>,
{
    fn zero() -> Self {
        Poly::new(vec![])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: fmt::Display + Zero + Clone> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
        }
        Ok(())
    }
}
