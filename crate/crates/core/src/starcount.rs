//! Counting factorizations `π = τ₁τ₂⋯τ_r` into star transpositions `(k, n)`.
//!
//! The number of such factorizations of `π ∈ C_{λ,i}` is `[K_{λ,i}] J_n^r`,
//! and expanding `J_n^r` in the idempotent basis of `Z₁(n)` gives
//! `Σ_{μ,j} (d_μ/n!) γ^{μ,j}_{λ,i} c_{μ,j}^r`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::Zero;

use crate::characters::chi;
use crate::genchar::genchar;
use crate::oracle::to_integer;
use crate::partitions::{enumerate_marked_partitions, enumerate_partitions, factorial};
use crate::tableaux::{content_polynomial, dimension};
use crate::{Error, MarkedPartition, Partition, QSeries, Rational, Result};

fn int(v: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(v.into())
}

fn count_from(value: Rational, what: &str) -> Result<BigInt> {
    let count = to_integer(&value).map_err(|_| Error::NonIntegral(format!("{what} = {value}")))?;
    if count.sign() == Sign::Minus {
        return Err(Error::NonIntegral(format!("{what} = {count} is negative")));
    }
    Ok(count)
}

fn content_power(c: i64, r: u32) -> BigInt {
    BigInt::from(c).pow(r)
}

/// Number of factorizations of any `π ∈ C_{λ,i}` into `r` star transpositions.
pub fn star_count(lambda: &Partition, i: usize, r: u32) -> Result<BigInt> {
    let lower = MarkedPartition::new(lambda.clone(), i)?;
    let n = lower.n();
    let mut acc = Rational::zero();
    for upper in enumerate_marked_partitions(n) {
        let c = upper.content();
        if c == 0 && r > 0 {
            continue;
        }
        let g = genchar(upper.shape(), upper.mark(), lambda, i)?;
        if g.is_zero() {
            continue;
        }
        acc += g * int(dimension(upper.shape())) * int(content_power(c, r));
    }
    count_from(acc / int(factorial(n)), &format!("star count at {lower}, r = {r}"))
}

/// The three marked classes with hyperbolic-series closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedCase {
    /// `((n), n)`: full cycles.
    FullCycle,
    /// `((n-1,1), 1)`: `n` fixed, everything else on one cycle.
    FixPointMark1,
    /// `((n-1,1), n-1)`: `n` on the long cycle, one other point fixed.
    TransposedMark,
}

impl ClosedCase {
    pub const ALL: [ClosedCase; 3] = [ClosedCase::FullCycle, ClosedCase::FixPointMark1, ClosedCase::TransposedMark];

    /// The marked class counted at size `n ≥ 3`.
    pub fn marked(self, n: usize) -> MarkedPartition {
        match self {
            ClosedCase::FullCycle => MarkedPartition::from_parts(&[n], n),
            ClosedCase::FixPointMark1 => MarkedPartition::from_parts(&[n - 1, 1], 1),
            ClosedCase::TransposedMark => MarkedPartition::from_parts(&[n - 1, 1], n - 1),
        }
    }
}

impl fmt::Display for ClosedCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosedCase::FullCycle => "full-cycle",
            ClosedCase::FixPointMark1 => "fix-point-mark1",
            ClosedCase::TransposedMark => "transposed-mark",
        })
    }
}

impl FromStr for ClosedCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        ClosedCase::ALL
            .into_iter()
            .find(|c| c.to_string() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown case {s:?}")))
    }
}

/// `sinh((n-1)x/2) sinh(x/2)^{n-1}` to the given order.
fn hyperbolic_core(n: usize, order: usize) -> QSeries {
    let half = BigRational::new(1.into(), 2.into());
    let outer = QSeries::sinh(&(int(n - 1) * &half), order);
    let inner = QSeries::sinh(&half, order).pow(n as u32 - 1);
    &outer * &inner
}

/// The closed-form value as an exact rational, with the series truncated at
/// `order`. Fails if `order` is too small for the coefficient needed.
pub fn star_count_closed_value(case: ClosedCase, n: usize, r: u32, order: usize) -> Result<Rational> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("closed forms need n >= 3, got {n}")));
    }
    if r < 1 {
        return Err(Error::InvalidArgument("closed forms need r >= 1".into()));
    }
    let r = r as usize;
    let two_n = int(BigInt::from(2).pow(n as u32));
    let nf = int(factorial(n));
    let n1 = int(n - 1);
    let core = hyperbolic_core(n, order);
    match case {
        ClosedCase::FullCycle => Ok(two_n * core.extract(r + 1)? / (nf * n1)),
        ClosedCase::FixPointMark1 => Ok(two_n * core.extract(r)? / nf),
        ClosedCase::TransposedMark => {
            let a = int(n - 1);
            let first = if n % 2 == 0 {
                QSeries::cosh(&a, order)
            } else {
                QSeries::sinh(&a, order)
            };
            let series = &first.scale(&int(2 * n)) - &core.scale(&two_n);
            Ok(series.extract(r)? / (nf * n1))
        }
    }
}

/// Star factorization counts for the three [`ClosedCase`] classes from their
/// hyperbolic-series closed forms (`n ≥ 3`, `r ≥ 1`). A non-integral or
/// negative value is reported as [`Error::NonIntegral`].
pub fn star_count_closed(case: ClosedCase, n: usize, r: u32) -> Result<BigInt> {
    let value = star_count_closed_value(case, n, r, r as usize + 2)?;
    count_from(value, &format!("{case} closed form at n = {n}, r = {r}"))
}

/// The terms the `((n-1,1), n-1)` closed form leaves out: contributions of
/// `μ = (n-k-1, 2, 1^{k-1})`, `1 ≤ k ≤ n-3`, with `j ≠ 2`, namely
/// `Σ (-1)^k d_{j₋(μ)} c_{μ,j}^r / ((n-1)(n-1)!)`.
///
/// These have `c_{μ,j} ≠ 0` and a nonzero `γ^{μ,j}_{(n-1,1),n-1}`, so they
/// survive for every `r`. They vanish identically for `n ≤ 4`.
pub fn transposed_mark_correction(n: usize, r: u32) -> Result<Rational> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("closed forms need n >= 3, got {n}")));
    }
    let mut acc = Rational::zero();
    for k in 1..=n.saturating_sub(3) {
        let mut parts = vec![n - k - 1, 2];
        parts.extend(std::iter::repeat(1).take(k - 1));
        let mu = Partition::from_parts(&parts);
        for j in mu.distinct_parts() {
            if j == 2 {
                continue;
            }
            let d = int(dimension(&mu.decrement_part(j)?));
            let term = d * int(content_power(mu.marked_content(j)?, r));
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
    }
    Ok(acc / (int(n - 1) * int(factorial(n - 1))))
}

/// Number of star factorizations (of length `r`) over all `π` of cycle type `λ`:
/// `|C_λ|/n! · Σ_μ (Σ_{j ∈ μ} d_{j₋(μ)} c_{μ,j}^r) χ^μ_λ`.
pub fn star_count_class(lambda: &Partition, r: u32) -> Result<BigInt> {
    let n = lambda.n();
    let mut acc = Rational::zero();
    for mu in enumerate_partitions(n) {
        let x = chi(&mu, lambda)?;
        if x.is_zero() {
            continue;
        }
        let mut inner = BigInt::zero();
        for j in mu.distinct_parts() {
            let d: BigInt = dimension(&mu.decrement_part(j)?).into();
            inner += d * content_power(mu.marked_content(j)?, r);
        }
        acc += int(inner * x);
    }
    let value = acc * int(lambda.class_size()) / int(factorial(n));
    count_from(value, &format!("star count over class ({lambda}), r = {r}"))
}

/// Number of length-`r` star factorizations whose product has exactly `k` cycles:
/// `Σ_{μ,j} d_μ d_{j₋(μ)} c_{μ,j}^r / n! · [t^k] c_μ(t)`.
pub fn star_count_by_cycle_count(n: usize, k: usize, r: u32) -> Result<BigInt> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("cycle count {k} outside 1..={n}")));
    }
    let mut acc = BigInt::zero();
    for mu in enumerate_partitions(n) {
        let e = &content_polynomial(&mu)[k];
        if e.is_zero() {
            continue;
        }
        let dm: BigInt = dimension(&mu).into();
        for j in mu.distinct_parts() {
            let d: BigInt = dimension(&mu.decrement_part(j)?).into();
            acc += &dm * d * content_power(mu.marked_content(j)?, r) * e;
        }
    }
    let value = BigRational::new(acc, factorial(n).into());
    count_from(value, &format!("star count with {k} cycles, n = {n}, r = {r}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn small_counts() {
        assert_eq!(star_count(&p(&[3]), 3, 2).unwrap(), b(1));
        assert_eq!(star_count(&p(&[1, 1, 1]), 1, 2).unwrap(), b(2));
        assert_eq!(star_count(&p(&[2, 1]), 2, 3).unwrap(), b(3));
        assert_eq!(star_count(&p(&[2, 1]), 1, 3).unwrap(), b(2));
        assert_eq!(star_count(&p(&[1, 1, 1, 1]), 1, 0).unwrap(), b(1));
        assert_eq!(star_count(&p(&[2, 1, 1]), 2, 0).unwrap(), b(0));
        assert!(star_count(&p(&[2, 1]), 3, 1).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(star_count_closed(ClosedCase::FullCycle, 3, 2).unwrap(), b(1));
        assert_eq!(star_count_closed(ClosedCase::FixPointMark1, 3, 3).unwrap(), b(2));
        assert_eq!(star_count_closed(ClosedCase::TransposedMark, 3, 3).unwrap(), b(3));
        assert!(star_count_closed(ClosedCase::FullCycle, 2, 2).is_err());
        assert!(star_count_closed(ClosedCase::FullCycle, 4, 0).is_err());
    }

    #[test]
    fn closed_forms_for_full_and_fixed_classes() {
        for n in 3..=8 {
            for r in 1..=12 {
                for case in [ClosedCase::FullCycle, ClosedCase::FixPointMark1] {
                    let m = case.marked(n);
                    assert_eq!(
                        star_count_closed(case, n, r).unwrap(),
                        star_count(m.shape(), m.mark(), r).unwrap(),
                        "{case} n={n} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn transposed_mark_series_plus_missing_terms() {
        for n in 3..=8 {
            for r in 1..=12 {
                let m = ClosedCase::TransposedMark.marked(n);
                let series = star_count_closed_value(ClosedCase::TransposedMark, n, r, r as usize + 2).unwrap();
                let corrected = series + transposed_mark_correction(n, r).unwrap();
                let expected = star_count(m.shape(), m.mark(), r).unwrap();
                assert_eq!(corrected, BigRational::from_integer(expected), "n={n} r={r}");
            }
        }
        for n in 3..=4 {
            for r in 1..=12 {
                assert!(transposed_mark_correction(n, r).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn series_order_is_sufficient() {
        for case in ClosedCase::ALL {
            for n in 3..=7 {
                for r in 1..=10u32 {
                    let lo = star_count_closed_value(case, n, r, r as usize + 2).unwrap();
                    let hi = star_count_closed_value(case, n, r, r as usize + 5).unwrap();
                    assert_eq!(lo, hi);
                }
            }
        }
        assert!(matches!(
            star_count_closed_value(ClosedCase::FullCycle, 4, 3, 3),
            Err(Error::OrderExceeded { .. })
        ));
    }

    #[test]
    fn class_and_cycle_examples() {
        assert_eq!(star_count_class(&p(&[2, 1]), 3).unwrap(), b(8));
        assert_eq!(star_count_class(&p(&[1, 1, 1]), 2).unwrap(), b(2));
        assert_eq!(star_count_class(&p(&[3]), 2).unwrap(), b(2));
        assert_eq!(star_count_by_cycle_count(3, 3, 2).unwrap(), b(2));
        assert_eq!(star_count_by_cycle_count(3, 1, 2).unwrap(), b(2));
        assert_eq!(star_count_by_cycle_count(3, 2, 2).unwrap(), b(0));
        assert!(star_count_by_cycle_count(3, 4, 2).is_err());
    }

    #[test]
    fn mass_conservation() {
        for n in 2..=8 {
            for r in 0..=12u32 {
                let total: BigInt = (1..=n).map(|k| star_count_by_cycle_count(n, k, r).unwrap()).sum();
                assert_eq!(total, b(n as i64 - 1).pow(r));
            }
        }
    }

    #[test]
    fn case_names() {
        for c in ClosedCase::ALL {
            assert_eq!(c.to_string().parse::<ClosedCase>().unwrap(), c);
        }
        assert_eq!("FULL_CYCLE".parse::<ClosedCase>().unwrap(), ClosedCase::FullCycle);
        assert!("cycle".parse::<ClosedCase>().is_err());
    }
}
