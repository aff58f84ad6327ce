//! Generalized characters `γ^{μ,j}_{λ,i}` of `Z₁(n)` and the identities built
//! on them.
//!
//! `γ^{μ,j}_{λ,i} = (n!/d_μ) [K_{λ,i}] Γ^{μ,j}` where `Γ^{μ,j}` is the
//! orthogonal idempotent of `Z₁(n)` labelled by `(μ, j)`. Values come from
//! closed forms when `(λ, i)` has one and from Strahov's character sum
//! otherwise.

pub mod asf;
mod strahov;
mod sums;
mod tables;

use std::fmt;
use std::str::FromStr;

pub use asf::{evaluate_asf, inner_contents, table1_poly, AlmostSymmetricPoly, Table1Row, VarRange};
pub use strahov::{genchar_strahov, genchar_strahov_at, genchar_strahov_with};
pub use sums::{
    connection_coefficient, multi_product_coefficient, orthogonality_check, orthogonality_target, subscript_sum_chi,
    superscript_sum, weighted_sum,
};
pub use tables::{genchar_hook_row, genchar_table2};

use crate::oracle::{genchar_by_extraction, Guard};
use crate::{Error, MarkedPartition, Partition, Rational, Result};

/// How a generalized character is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Closed form (tabulated row or the `(n-1,1), n-1` row).
    Table,
    /// Strahov's sum over `S_{n-1}`.
    Strahov,
    /// Coefficient extraction from `Γ^{μ,j}` built in the group algebra.
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Table => "table",
            Method::Strahov => "strahov",
            Method::Oracle => "oracle",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Method::Table),
            "strahov" => Ok(Method::Strahov),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

/// Closed form if one applies: tabulated rows first, then `((n-1,1), n-1)`.
pub fn genchar_closed(mu: &Partition, j: usize, lambda: &Partition, i: usize) -> Result<Rational> {
    match genchar_table2(mu, j, lambda, i) {
        Err(Error::UnsupportedPattern(_)) => {}
        other => return other,
    }
    let lower = MarkedPartition::new(lambda.clone(), i)?;
    if tables::is_hook_row(&lower) {
        if mu.n() != lower.n() {
            return Err(Error::SizeMismatch(mu.n(), lower.n()));
        }
        return genchar_hook_row(mu, j);
    }
    Err(Error::UnsupportedPattern(format!("gamma at {lower}")))
}

/// `γ^{μ,j}_{λ,i}`, by closed form when available and Strahov's sum otherwise.
pub fn genchar(mu: &Partition, j: usize, lambda: &Partition, i: usize) -> Result<Rational> {
    genchar_with(mu, j, lambda, i, &Guard::from_env())
}

pub fn genchar_with(mu: &Partition, j: usize, lambda: &Partition, i: usize, guard: &Guard) -> Result<Rational> {
    match genchar_closed(mu, j, lambda, i) {
        Err(Error::UnsupportedPattern(_)) => genchar_strahov_with(mu, j, lambda, i, guard),
        other => other,
    }
}

/// `γ^{μ,j}_{λ,i}` by an explicitly chosen method.
pub fn genchar_by(
    method: Method,
    mu: &Partition,
    j: usize,
    lambda: &Partition,
    i: usize,
    guard: &Guard,
) -> Result<Rational> {
    match method {
        Method::Table => genchar_closed(mu, j, lambda, i),
        Method::Strahov => genchar_strahov_with(mu, j, lambda, i, guard),
        Method::Oracle => genchar_by_extraction(mu, j, lambda, i, guard),
    }
}

/// `γ^{upper}_{lower}` for marked partitions.
pub(crate) fn gamma(upper: &MarkedPartition, lower: &MarkedPartition) -> Result<Rational> {
    genchar(upper.shape(), upper.mark(), lower.shape(), lower.mark())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_marked_partitions;
    use crate::tableaux::dimension;
    use num_rational::BigRational;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    fn q(a: i64, b: i64) -> Rational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn dispatcher_examples() {
        assert_eq!(genchar(&p(&[2, 1]), 1, &p(&[2, 1]), 2).unwrap(), q(-1, 2));
        assert_eq!(genchar(&p(&[1, 1, 1]), 1, &p(&[2, 1]), 2).unwrap(), q(-1, 1));
        assert_eq!(genchar(&p(&[3, 2]), 2, &p(&[3, 2]), 3).unwrap(),
            genchar_strahov(&p(&[3, 2]), 2, &p(&[3, 2]), 3).unwrap());
        for m in enumerate_marked_partitions(5) {
            let v = genchar(m.shape(), m.mark(), &Partition::column(5), 1).unwrap();
            assert_eq!(v, BigRational::from_integer(dimension(&m.decremented()).into()));
        }
    }

    #[test]
    fn all_methods_agree_small() {
        let guard = Guard::default();
        for n in 2..=4 {
            let marked = enumerate_marked_partitions(n);
            for up in &marked {
                for low in &marked {
                    let (mu, j, la, i) = (up.shape(), up.mark(), low.shape(), low.mark());
                    let s = genchar_by(Method::Strahov, mu, j, la, i, &guard).unwrap();
                    let o = genchar_by(Method::Oracle, mu, j, la, i, &guard).unwrap();
                    assert_eq!(s, o, "{up} / {low}");
                    if let Ok(t) = genchar_by(Method::Table, mu, j, la, i, &guard) {
                        assert_eq!(t, s, "{up} / {low}");
                    }
                }
            }
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in [Method::Table, Method::Strahov, Method::Oracle] {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!("closed".parse::<Method>().is_err());
    }
}
