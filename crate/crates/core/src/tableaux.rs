//! Standard Young tableaux (English convention), contents and dimensions.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partitions::factorial;
use crate::{Partition, Result};

/// A standard filling of a Young diagram by `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Checks shape, row/column increase and that `1..=n` each appear once.
    pub fn new(rows: Vec<Vec<usize>>) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect()).ok()?;
        if shape.parts() != rows.iter().map(|r| r.len()).collect::<Vec<_>>().as_slice() {
            return None;
        }
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &s in row {
                if s == 0 || s > n || seen[s] {
                    return None;
                }
                seen[s] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return None;
            }
        }
        for pair in rows.windows(2) {
            if pair[1].iter().zip(&pair[0]).any(|(below, above)| below <= above) {
                return None;
            }
        }
        Some(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `(row, column)` of a symbol, 0-indexed.
    pub fn position(&self, symbol: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&s| s == symbol).map(|c| (r, c))
        })
    }

    /// `c_T(k)` for a symbol `k`.
    pub fn content_of(&self, symbol: usize) -> Option<i64> {
        self.position(symbol).map(|(r, c)| c as i64 - r as i64)
    }

    /// `(c_T(1), …, c_T(n))`.
    pub fn content_vector(&self) -> Vec<i64> {
        let mut out = vec![0; self.shape.n()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &s) in row.iter().enumerate() {
                out[s - 1] = c as i64 - r as i64;
            }
        }
        out
    }
}

impl fmt::Display for StandardTableau {
    /// One row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let strs: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", strs.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Rows ending in a removable corner, top first.
fn removable_rows(shape: &Partition) -> Vec<usize> {
    let parts = shape.parts();
    (0..parts.len())
        .filter(|&r| r + 1 == parts.len() || parts[r] > parts[r + 1])
        .collect()
}

/// All standard tableaux of shape `λ`, built by placing `n, n-1, …` in the
/// removable corners, top corner first.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.n();
    if n == 0 {
        return vec![StandardTableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }];
    }
    let mut out = Vec::new();
    for r in removable_rows(shape) {
        let len = shape.parts()[r];
        let smaller = shape.decrement_part(len).unwrap();
        for t in enumerate_syt(&smaller) {
            let mut rows = t.rows;
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push(n);
            out.push(StandardTableau {
                shape: shape.clone(),
                rows,
            });
        }
    }
    out
}

/// `SYT_{λ,i}`: tableaux in which `n` ends a row of length `i`.
pub fn enumerate_syt_marked(shape: &Partition, i: usize) -> Result<Vec<StandardTableau>> {
    shape.marked_content(i)?;
    let n = shape.n();
    Ok(enumerate_syt(shape)
        .into_iter()
        .filter(|t| {
            let (r, _) = t.position(n).unwrap();
            t.rows[r].len() == i
        })
        .collect())
}

/// `d_λ` by the hook-length formula; `d_() = 1`.
pub fn dimension(shape: &Partition) -> BigUint {
    let parts = shape.parts();
    let mut hooks = BigUint::one();
    for (r, &len) in parts.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = parts[r + 1..].iter().filter(|&&p| p > c).count();
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    factorial(shape.n()) / hooks
}

/// Multiset of contents `k - j` of all cells, row by row.
pub fn contents(shape: &Partition) -> Vec<i64> {
    shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| c as i64 - r as i64))
        .collect()
}

/// `c_{λ,i}`.
pub fn marked_content(shape: &Partition, i: usize) -> Result<i64> {
    shape.marked_content(i)
}

/// Coefficients (ascending powers of `t`) of `∏_cells (t + content)`.
pub fn content_polynomial(shape: &Partition) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for c in contents(shape) {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (k, a) in coeffs.iter().enumerate() {
            next[k + 1] += a;
            next[k] += a * c;
        }
        coeffs = next;
    }
    coeffs
}

/// `(σ(λ), σ⁽²⁾(λ))`: sum and sum of squares of contents.
pub fn content_sums(shape: &Partition) -> (i64, i64) {
    contents(shape)
        .into_iter()
        .fold((0, 0), |(s, s2), c| (s + c, s2 + c * c))
}

/// `[e_0, e_1, …, e_len]` of a list of integers.
pub fn elementary_symmetric(values: &[i64]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); values.len() + 1];
    e[0] = BigInt::one();
    for (seen, &v) in values.iter().enumerate() {
        for k in (1..=seen + 1).rev() {
            let prev = e[k - 1].clone();
            e[k] += prev * v;
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_marked_partitions, enumerate_partitions, binomial};

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    /// Every filling of the diagram by a permutation of 1..n that is standard.
    fn brute_force_syt_count(shape: &Partition) -> usize {
        let n = shape.n();
        let mut symbols: Vec<usize> = (1..=n).collect();
        let mut count = 0;
        permute(&mut symbols, 0, &mut |perm| {
            let mut rows = Vec::new();
            let mut k = 0;
            for &len in shape.parts() {
                rows.push(perm[k..k + len].to_vec());
                k += len;
            }
            if StandardTableau::new(rows).is_some() {
                count += 1;
            }
        });
        count
    }

    fn permute(v: &mut Vec<usize>, start: usize, visit: &mut dyn FnMut(&[usize])) {
        if start == v.len() {
            visit(v);
            return;
        }
        for k in start..v.len() {
            v.swap(start, k);
            permute(v, start + 1, visit);
            v.swap(start, k);
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(&p(&[2, 1])).len(), 2);
        assert_eq!(enumerate_syt(&p(&[5])).len(), 1);
        assert_eq!(enumerate_syt(&p(&[2, 2])).len(), 2);
        assert_eq!(brute_force_syt_count(&p(&[2, 2])), 2);
        assert_eq!(brute_force_syt_count(&p(&[3, 2])), 5);
        for t in enumerate_syt(&p(&[3, 2, 1])) {
            assert!(StandardTableau::new(t.rows().to_vec()).is_some());
        }
    }

    #[test]
    fn marked_syt() {
        assert_eq!(enumerate_syt_marked(&p(&[2, 1]), 2).unwrap().len(), 1);
        assert_eq!(enumerate_syt_marked(&p(&[2, 1]), 1).unwrap().len(), 1);
        assert_eq!(enumerate_syt_marked(&p(&[4]), 4).unwrap().len(), 1);
        assert!(enumerate_syt_marked(&p(&[2, 1]), 3).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(dimension(&p(&[3, 2])), BigUint::from(5u32));
        assert_eq!(dimension(&Partition::empty()), BigUint::from(1u32));
        for n in 1..=9 {
            for k in 0..n {
                assert_eq!(dimension(&Partition::hook(n, k).unwrap()), binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn dimension_matches_syt_count_and_squares_sum() {
        for n in 1..=8 {
            let mut sum_sq = BigUint::zero();
            for lam in enumerate_partitions(n) {
                let d = dimension(&lam);
                assert_eq!(d, BigUint::from(enumerate_syt(&lam).len()), "{lam:?}");
                sum_sq += &d * &d;
            }
            assert_eq!(sum_sq, factorial(n));
        }
    }

    #[test]
    fn marked_syt_counts_and_contents() {
        for n in 1..=8 {
            for m in enumerate_marked_partitions(n) {
                let ts = enumerate_syt_marked(m.shape(), m.mark()).unwrap();
                assert_eq!(BigUint::from(ts.len()), dimension(&m.decremented()));
                for t in ts {
                    assert_eq!(t.content_of(n), Some(m.content()));
                }
            }
        }
    }

    #[test]
    fn content_vectors() {
        let row = &enumerate_syt(&p(&[3]))[0];
        assert_eq!(row.content_vector(), vec![0, 1, 2]);
        let col = &enumerate_syt(&p(&[1, 1, 1]))[0];
        assert_eq!(col.content_vector(), vec![0, -1, -2]);
        let t = StandardTableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(t.content_vector(), vec![0, 1, -1]);
        assert_eq!(t.to_string(), "1 2\n3");
    }

    #[test]
    fn content_polynomials_and_sums() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(content_polynomial(&p(&[2, 1])), ints(&[0, -1, 0, 1]));
        assert_eq!(content_polynomial(&p(&[3])), ints(&[0, 2, 3, 1]));
        assert_eq!(content_polynomial(&p(&[2, 2])), ints(&[0, 0, -1, 0, 1]));
        assert_eq!(content_sums(&p(&[2, 1])), (0, 2));
        assert_eq!(content_sums(&p(&[1, 1])), (-1, 1));
        assert_eq!(content_sums(&p(&[3, 2])), (2, 6));
    }

    #[test]
    fn content_polynomial_coefficients_are_elementary_symmetric() {
        for n in 1..=8 {
            for lam in enumerate_partitions(n) {
                // ∏(1 + t c) expanded directly; [t^k] of it is e_k.
                let mut direct = vec![BigInt::one()];
                for c in contents(&lam) {
                    let mut next = vec![BigInt::zero(); direct.len() + 1];
                    for (k, a) in direct.iter().enumerate() {
                        next[k] += a;
                        next[k + 1] += a * c;
                    }
                    direct = next;
                }
                let poly = content_polynomial(&lam);
                for m in 0..=n {
                    assert_eq!(poly[m], direct[n - m]);
                }
                assert_eq!(elementary_symmetric(&contents(&lam)), direct);
            }
        }
    }
}
