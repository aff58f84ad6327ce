//! Identities summing generalized characters over superscripts or subscripts,
//! and the structure constants of `Z₁(n)` they determine.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::Zero;

use super::gamma;
use crate::oracle::to_integer;
use crate::partitions::{enumerate_marked_partitions, factorial};
use crate::tableaux::dimension;
use crate::{Error, MarkedPartition, Partition, Rational, Result};

fn int(v: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(v.into())
}

fn same_n(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SizeMismatch(a, b))
    }
}

/// `Σ_{j ∈ μ} γ^{μ,j}_{λ,i}`, which equals `χ^μ_λ` for every `i`.
pub fn superscript_sum(mu: &Partition, lambda: &Partition, i: usize) -> Result<BigInt> {
    same_n(mu.n(), lambda.n())?;
    let lower = MarkedPartition::new(lambda.clone(), i)?;
    let mut acc = Rational::zero();
    for j in mu.distinct_parts() {
        acc += gamma(&MarkedPartition::new(mu.clone(), j)?, &lower)?;
    }
    to_integer(&acc)
}

/// `d_μ / (|C_λ| d_{j₋(μ)}) · Σ_{i ∈ λ} |C_{λ,i}| γ^{μ,j}_{λ,i}`, which equals
/// `χ^μ_λ` for every `j`.
pub fn subscript_sum_chi(mu: &Partition, j: usize, lambda: &Partition) -> Result<Rational> {
    same_n(mu.n(), lambda.n())?;
    let upper = MarkedPartition::new(mu.clone(), j)?;
    let mut acc = Rational::zero();
    for i in lambda.distinct_parts() {
        let lower = MarkedPartition::new(lambda.clone(), i)?;
        acc += int(lower.class_size()) * gamma(&upper, &lower)?;
    }
    let scale = BigRational::new(
        dimension(mu).into(),
        BigInt::from(lambda.class_size()) * BigInt::from(dimension(&upper.decremented())),
    );
    Ok(acc * scale)
}

/// `Σ_{m(λ) = m, i ∈ λ} |C_{λ,i}| / d_{ℓ₋(ρ)} · γ^{ρ,ℓ}_{λ,i}`, which equals
/// `[t^m] c_ρ(t)`.
pub fn weighted_sum(rho: &Partition, l: usize, m: usize) -> Result<Rational> {
    let upper = MarkedPartition::new(rho.clone(), l)?;
    let n = rho.n();
    if m == 0 || m > n {
        return Err(Error::InvalidArgument(format!("number of parts {m} outside 1..={n}")));
    }
    let mut acc = Rational::zero();
    for lower in enumerate_marked_partitions(n) {
        if lower.shape().len() == m {
            acc += int(lower.class_size()) * gamma(&upper, &lower)?;
        }
    }
    Ok(acc / int(dimension(&upper.decremented())))
}

/// `[K_{ν,k}] K_{λ,i} K_{μ,j}`:
/// `|C_{λ,i}||C_{μ,j}|/n! · Σ_{ρ,ℓ} γ^{ρ,ℓ}_{λ,i} γ^{ρ,ℓ}_{μ,j} γ^{ρ,ℓ}_{ν,k} d_ρ / d_{ℓ₋(ρ)}²`.
///
/// The result counts factorizations, so anything but a nonnegative integer is
/// reported as [`Error::NonIntegral`].
pub fn connection_coefficient(
    a: &MarkedPartition,
    b: &MarkedPartition,
    target: &MarkedPartition,
) -> Result<BigInt> {
    let n = a.n();
    same_n(n, b.n())?;
    same_n(n, target.n())?;
    let mut acc = Rational::zero();
    for rho in enumerate_marked_partitions(n) {
        let ga = gamma(&rho, a)?;
        if ga.is_zero() {
            continue;
        }
        let gb = gamma(&rho, b)?;
        if gb.is_zero() {
            continue;
        }
        let gc = gamma(&rho, target)?;
        let dl = int(dimension(&rho.decremented()));
        acc += ga * gb * gc * int(dimension(rho.shape())) / (&dl * &dl);
    }
    let value = acc * int(a.class_size()) * int(b.class_size()) / int(factorial(n));
    let count = to_integer(&value)?;
    if count.sign() == Sign::Minus {
        return Err(Error::NonIntegral(format!("negative connection coefficient {count}")));
    }
    Ok(count)
}

/// `[K_{μ,j}] ∏_k K_{λ⁽ᵏ⁾,i_k}`:
/// `1/n! · Σ_{ρ,ℓ} γ^{ρ,ℓ}_{μ,j} d_ρ / d_{ℓ₋(ρ)}^r · ∏_k |C_{λ⁽ᵏ⁾,i_k}| γ^{ρ,ℓ}_{λ⁽ᵏ⁾,i_k}`.
pub fn multi_product_coefficient(factors: &[MarkedPartition], target: &MarkedPartition) -> Result<Rational> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("at least one factor is required".into()));
    }
    let n = target.n();
    for f in factors {
        same_n(n, f.n())?;
    }
    let weight: Rational = factors.iter().map(|f| int(f.class_size())).product();
    let mut acc = Rational::zero();
    for rho in enumerate_marked_partitions(n) {
        let mut term = gamma(&rho, target)?;
        for f in factors {
            if term.is_zero() {
                break;
            }
            term *= gamma(&rho, f)?;
        }
        if term.is_zero() {
            continue;
        }
        let dl = int(dimension(&rho.decremented()));
        let denom = num_traits::pow(dl, factors.len());
        acc += term * int(dimension(rho.shape())) / denom;
    }
    Ok(acc * weight / int(factorial(n)))
}

/// `1/n! · Σ_{ρ,k} |C_{ρ,k}| γ^{λ,i}_{ρ,k} γ^{μ,j}_{ρ,k}`, which equals
/// `d_{i₋(λ)}/d_λ` on the diagonal and `0` off it.
pub fn orthogonality_check(a: &MarkedPartition, b: &MarkedPartition) -> Result<Rational> {
    let n = a.n();
    same_n(n, b.n())?;
    let mut acc = Rational::zero();
    for lower in enumerate_marked_partitions(n) {
        let ga = gamma(a, &lower)?;
        if ga.is_zero() {
            continue;
        }
        acc += int(lower.class_size()) * ga * gamma(b, &lower)?;
    }
    Ok(acc / int(factorial(n)))
}

/// The value `orthogonality_check(a, b)` should take.
pub fn orthogonality_target(a: &MarkedPartition, b: &MarkedPartition) -> Rational {
    if a == b {
        BigRational::new(dimension(&a.decremented()).into(), dimension(a.shape()).into())
    } else {
        Rational::zero()
    }
}
