//! Integer partitions and marked partitions.
//!
//! A partition `λ ⊢ n` indexes a conjugacy class `C_λ` of `S_n`. A marked
//! partition `(λ, i)` additionally records the length `i` of the cycle
//! containing the symbol `n`, and indexes the class `C_{λ,i}` whose formal
//! sum `K_{λ,i}` is a standard basis element of `Z₁(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Panicking constructor for literals in code and tests.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1ⁿ)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(n-k, 1^k)`; `None` unless `k < n`.
    pub fn hook(n: usize, k: usize) -> Option<Self> {
        if k >= n {
            return None;
        }
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat(1).take(k));
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `m(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity `m_i(λ)`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn has_part(&self, i: usize) -> bool {
        self.parts.contains(&i)
    }

    /// Distinct part values, largest first.
    pub fn distinct_parts(&self) -> Vec<usize> {
        let mut out = self.parts.clone();
        out.dedup();
        out
    }

    pub fn is_hook(&self) -> bool {
        self.parts.len() < 2 || self.parts[1] == 1
    }

    fn check_part(&self, i: usize) -> Result<()> {
        if self.has_part(i) {
            Ok(())
        } else {
            Err(Error::NotAPart {
                shape: self.to_string(),
                mark: i,
            })
        }
    }

    /// `λ∖i`: one copy of the part `i` removed.
    pub fn remove_part(&self, i: usize) -> Result<Partition> {
        self.check_part(i)?;
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p == i).unwrap();
        parts.remove(pos);
        Ok(Partition { parts })
    }

    /// `λ∪i`: one more copy of the part `i`.
    pub fn add_part(&self, i: usize) -> Result<Partition> {
        if i == 0 {
            return Err(Error::InvalidArgument("cannot add a zero part".into()));
        }
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p < i).unwrap_or(parts.len());
        parts.insert(pos, i);
        Ok(Partition { parts })
    }

    /// `i₋(λ)`: one part `i` replaced by `i-1`, deleting it when `i = 1`.
    ///
    /// Replacing the last copy of `i` keeps the list sorted, so this is the
    /// shape left after removing the corner at the end of a row of length `i`.
    pub fn decrement_part(&self, i: usize) -> Result<Partition> {
        self.check_part(i)?;
        let mut parts = self.parts.clone();
        let pos = parts.iter().rposition(|&p| p == i).unwrap();
        if i == 1 {
            parts.remove(pos);
        } else {
            parts[pos] = i - 1;
        }
        Ok(Partition { parts })
    }

    /// `∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of type `λ`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for i in self.distinct_parts() {
            let m = self.multiplicity(i);
            z *= BigUint::from(i).pow(m as u32) * factorial(m);
        }
        z
    }

    /// `|C_λ| = n! / ∏ i^{m_i} m_i!`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n()) / self.centralizer_order()
    }

    /// `|C_{λ,i}| = (n-1)! i m_i(λ) / ∏ i^{m_i} m_i!`.
    pub fn marked_class_size(&self, i: usize) -> Result<BigUint> {
        self.check_part(i)?;
        let n = self.n();
        Ok(factorial(n - 1) * BigUint::from(i * self.multiplicity(i)) / self.centralizer_order())
    }

    /// Content `c_{λ,i} = i - Σ_{k≥i} m_k(λ)` of the cell at the end of the
    /// last row of length `i`.
    pub fn marked_content(&self, i: usize) -> Result<i64> {
        self.check_part(i)?;
        let rows_at_least = self.parts.iter().filter(|&&p| p >= i).count();
        Ok(i as i64 - rows_at_least as i64)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma separated parts, e.g. `"3,1,1"`. The empty string is `()`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A partition with a distinguished part value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedPartition {
    shape: Partition,
    mark: usize,
}

impl MarkedPartition {
    pub fn new(shape: Partition, mark: usize) -> Result<Self> {
        shape.check_part(mark)?;
        Ok(MarkedPartition { shape, mark })
    }

    /// Panicking constructor for literals.
    pub fn from_parts(parts: &[usize], mark: usize) -> Self {
        Self::new(Partition::from_parts(parts), mark).expect("invalid marked partition literal")
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn class_size(&self) -> BigUint {
        self.shape.marked_class_size(self.mark).unwrap()
    }

    pub fn content(&self) -> i64 {
        self.shape.marked_content(self.mark).unwrap()
    }

    /// `i₋(λ)`.
    pub fn decremented(&self) -> Partition {
        self.shape.decrement_part(self.mark).unwrap()
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.shape, self.mark)
    }
}

impl fmt::Debug for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}),{})", self.shape, self.mark)
    }
}

impl FromStr for MarkedPartition {
    type Err = Error;

    /// `"shape@mark"`, e.g. `"3,1,1@1"`.
    fn from_str(s: &str) -> Result<Self> {
        let (shape, mark) = s
            .split_once('@')
            .ok_or_else(|| Error::InvalidPartition(format!("{s:?} has no @mark")))?;
        let mark = mark
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidPartition(format!("bad mark in {s:?}")))?;
        MarkedPartition::new(shape.parse()?, mark)
    }
}

/// All partitions of `n`, in reverse-lexicographic order (`(n)` first).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for k in (1..=remaining.min(max)).rev() {
        current.push(k);
        fill(remaining - k, k, current, out);
        current.pop();
    }
}

/// Every `(λ, i)` with `λ ⊢ n` and `i` a distinct part of `λ`; partitions in
/// reverse-lex order, marks descending.
pub fn enumerate_marked_partitions(n: usize) -> Vec<MarkedPartition> {
    enumerate_partitions(n)
        .into_iter()
        .flat_map(|shape| {
            shape
                .distinct_parts()
                .into_iter()
                .map(move |mark| MarkedPartition {
                    shape: shape.clone(),
                    mark,
                })
        })
        .collect()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, t| acc * BigUint::from(n - t) / BigUint::from(t + 1))
}
