//! Power series in `x` truncated at a fixed order, with coefficients in any
//! [`Scalar`].

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{from_i64, Scalar};
use crate::{Error, Result};

/// `c₀ + c₁x + … + c_N x^N  (mod x^{N+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![S::zero(); order + 1],
        }
    }

    pub fn constant(c: S, order: usize) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = c;
        out
    }

    pub fn one(order: usize) -> Self {
        Self::constant(S::one(), order)
    }

    /// From explicit coefficients; missing ones are zero, extra ones dropped.
    pub fn from_coeffs(mut coeffs: Vec<S>, order: usize) -> Self {
        coeffs.resize(order + 1, S::zero());
        TruncatedSeries { coeffs }
    }

    /// `exp(a x)`.
    pub fn exp(a: &S, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = S::one();
        coeffs.push(term.clone());
        for k in 1..=order {
            term = term * a.clone() / from_i64::<S>(k as i64);
            coeffs.push(term.clone());
        }
        TruncatedSeries { coeffs }
    }

    /// `sinh(a x)`: the odd part of `exp(a x)`.
    pub fn sinh(a: &S, order: usize) -> Self {
        Self::parity_part(a, order, 1)
    }

    /// `cosh(a x)`: the even part of `exp(a x)`.
    pub fn cosh(a: &S, order: usize) -> Self {
        Self::parity_part(a, order, 0)
    }

    fn parity_part(a: &S, order: usize, parity: usize) -> Self {
        let mut e = Self::exp(a, order);
        for (k, c) in e.coeffs.iter_mut().enumerate() {
            if k % 2 != parity {
                *c = S::zero();
            }
        }
        e
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// `[x^k]`.
    pub fn coeff(&self, k: usize) -> Result<S> {
        self.coeffs.get(k).cloned().ok_or(Error::OrderExceeded {
            order: self.order(),
            needed: k,
        })
    }

    /// `r! [x^r]`.
    pub fn extract(&self, r: usize) -> Result<S> {
        let mut c = self.coeff(r)?;
        for k in 2..=r {
            c = c * from_i64::<S>(k as i64);
        }
        Ok(c)
    }

    pub fn scale(&self, factor: &S) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect(),
        }
    }

    /// Sum at the smaller of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Self, f: impl Fn(S, S) -> S) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
        }
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        out
    }

    /// `self^k` by binary powering.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut out = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }
}

impl<S: Scalar> Add for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn add(self, rhs: Self) -> TruncatedSeries<S> {
        TruncatedSeries::add(self, rhs)
    }
}

impl<S: Scalar> Sub for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn sub(self, rhs: Self) -> TruncatedSeries<S> {
        TruncatedSeries::sub(self, rhs)
    }
}

impl<S: Scalar> Mul for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn mul(self, rhs: Self) -> TruncatedSeries<S> {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<S: Scalar> Neg for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn neg(self) -> TruncatedSeries<S> {
        self.scale(&-S::one())
    }
}
