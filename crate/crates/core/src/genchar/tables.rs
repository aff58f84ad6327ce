//! Closed forms for `γ^{μ,j}_{λ,i}` at particular `(λ, i)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::asf::Table1Row;
use crate::partitions::binomial;
use crate::tableaux::{content_sums, dimension};
use crate::{Error, MarkedPartition, Partition, Rational, Result};

fn int(v: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(v.into())
}

fn frac(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Rational {
    BigRational::new(a.into(), b.into())
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `k` if `μ = (n-k, 1^k)`.
fn hook_leg(mu: &Partition) -> Option<usize> {
    mu.is_hook().then(|| mu.len().saturating_sub(1))
}

/// `k` if `μ = (n-k-1, 2, 1^{k-1})` with `k ≥ 1`.
fn near_hook_leg(mu: &Partition) -> Option<usize> {
    let parts = mu.parts();
    (parts.len() >= 2 && parts[1] == 2 && parts[2..].iter().all(|&p| p == 1)).then(|| parts.len() - 1)
}

fn check_upper(mu: &Partition, j: usize, n: usize) -> Result<MarkedPartition> {
    if mu.n() != n {
        return Err(Error::SizeMismatch(mu.n(), n));
    }
    MarkedPartition::new(mu.clone(), j)
}

/// `γ^{μ,j}_{λ,i}` from the tabulated closed form for `(λ, i)`.
///
/// The `(2,2,1^{n-4}), 2` row uses the constant `2/((n-1)(n-2)(n-3))`, which is
/// what `d_{j₋(μ)}/|C_{λ,i}| · f(𝐜, c)` gives for its almost symmetric
/// polynomial; the shape of the remaining rows is as tabulated.
pub fn genchar_table2(mu: &Partition, j: usize, lambda: &Partition, i: usize) -> Result<Rational> {
    let lower = MarkedPartition::new(lambda.clone(), i)?;
    let n = lower.n();
    check_upper(mu, j, n)?;
    let unsupported = || Error::UnsupportedPattern(format!("gamma at {lower}"));
    if n < 2 {
        return Err(unsupported());
    }
    let row = Table1Row::lookup(&lower).ok_or_else(unsupported)?;

    let smaller = mu.decrement_part(j)?;
    let d = int(dimension(&smaller));
    let c = int(mu.marked_content(j)?);
    let (s1, s2) = content_sums(&smaller);
    let (s1, s2) = (int(s1), int(s2));
    let nn = int(n);
    let n1 = int(n - 1);
    let b = |k: usize| int(binomial(n - 1, k));

    Ok(match row {
        Table1Row::Transposition => c * d / n1,
        Table1Row::TranspositionFixedN => s1 * d / b(2),
        Table1Row::ThreeCycle => (&c * &c - nn + Rational::one()) * d / (int(2) * b(2)),
        Table1Row::DoubleTransposition => {
            let numer = &s1 * &c - &c * &c + &n1;
            int(2) * numer * d / (n1 * int(n - 2) * int(n - 3))
        }
        Table1Row::ThreeCycleFixedN => (s2 - b(2)) * d / (int(2) * b(3)),
        Table1Row::DoubleTranspositionFixedN => {
            let numer = &s1 * &s1 - int(3) * s2 + int((n - 1) * (n - 2));
            numer * d / (int(6) * b(4))
        }
        Table1Row::FullCycle => full_cycle_case(mu, j),
        Table1Row::LongCycleFixedN => long_cycle_fixed_case(mu, j),
    })
}

/// `γ^{μ,j}_{(n),n}`.
fn full_cycle_case(mu: &Partition, j: usize) -> Rational {
    let n = mu.n();
    let Some(k) = hook_leg(mu) else {
        return Rational::zero();
    };
    // For μ = (1ⁿ) both branches name j = 1; the j = 1 branch is the one
    // consistent with χ^{(1ⁿ)} at an n-cycle.
    if j == 1 && k >= 1 {
        frac(sign(k) * k as i64, n as i64 - 1)
    } else if j == n - k {
        frac(sign(k) * (n - k - 1) as i64, n as i64 - 1)
    } else {
        Rational::zero()
    }
}

/// `γ^{μ,j}_{(n-1,1),1}`.
fn long_cycle_fixed_case(mu: &Partition, j: usize) -> Rational {
    let n = mu.n();
    if let Some(k) = near_hook_leg(mu) {
        return if j == 2 { int(sign(k)) } else { Rational::zero() };
    }
    let Some(k) = hook_leg(mu) else {
        return Rational::zero();
    };
    if j == 1 && k >= 1 {
        int(-sign(k))
    } else if j == n - k {
        int(sign(k))
    } else {
        Rational::zero()
    }
}

/// `γ^{μ,j}_{(n-1,1),n-1}` for `n ≥ 3`.
///
/// Besides the tabulated cases this includes `μ = (n-k-1, 2, 1^{k-1})` with
/// `j ≠ 2`, where `γ = (-1)^k n d_{j₋(μ)} / ((n-1) d_μ)`: the rearranged
/// subscript-sum identity gives this value, and it is nonzero.
pub fn genchar_hook_row(mu: &Partition, j: usize) -> Result<Rational> {
    let n = mu.n();
    if n < 3 {
        return Err(Error::UnsupportedPattern(format!("gamma at ({},1)@{} needs n >= 3", n.saturating_sub(1), n.saturating_sub(1))));
    }
    MarkedPartition::new(mu.clone(), j)?;
    let n1 = n as i64 - 1;
    if mu.parts() == [n] {
        return Ok(if j == n { Rational::one() } else { Rational::zero() });
    }
    if mu.parts().iter().all(|&p| p == 1) {
        return Ok(int(sign(n)));
    }
    if let Some(k) = hook_leg(mu) {
        return Ok(if j == n - k {
            frac(-sign(k), n1)
        } else if j == 1 {
            frac(sign(k), n1)
        } else {
            Rational::zero()
        });
    }
    if let Some(k) = near_hook_leg(mu) {
        if j == 2 {
            return Ok(frac(sign(k), (k * (n - k - 2)) as i64));
        }
        let ratio = BigRational::new(dimension(&mu.decrement_part(j)?).into(), dimension(mu).into());
        return Ok(int(sign(k) * n as i64) * ratio / int(n1));
    }
    Ok(Rational::zero())
}

/// `true` iff `(λ, i) = ((n-1,1), n-1)` with `n ≥ 3`.
pub(crate) fn is_hook_row(lower: &MarkedPartition) -> bool {
    let n = lower.n();
    n >= 3 && lower.shape().parts() == [n - 1, 1] && lower.mark() == n - 1
}
