use std::fmt;

use crate::{Error, MarkedPartition, Partition, Result};

/// A permutation of `{1, …, n}` in one-line form.
///
/// Products compose right to left: `a * b` applies `b` first, then `a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-indexed images.
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "n too large for a permutation");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From 1-indexed images `π(1), …, π(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    /// From disjoint cycles on 1-indexed symbols; unlisted symbols are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || used[a] {
                    return Err(Error::InvalidArgument(format!("bad cycles {cycles:?}")));
                }
                used[a] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    /// The transposition `(a, b)` on 1-indexed symbols.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidArgument(format!("({a},{b}) is not a transposition")));
        }
        Self::from_cycles(n, &[&[a, b]])
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `π(k)` for 1-indexed `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize + 1
    }

    /// 1-indexed images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&k| self.images[k as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v as usize] = k as u8;
        }
        Permutation { images }
    }

    /// `σ π σ⁻¹`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Permutation {
        sigma.compose(self).compose(&sigma.inverse())
    }

    /// Same permutation on `{1, …, n+1}` with `n+1` fixed.
    pub fn embed(&self) -> Permutation {
        let mut images = self.images.clone();
        images.push(self.n() as u8);
        Permutation { images }
    }

    /// Cycles as 1-indexed symbol lists, each starting at its smallest symbol.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.images[k] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// `κ(π)`.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycle_lengths()).unwrap()
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] as usize;
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        lengths
    }

    /// Number of cycles `m(π)`.
    pub fn cycle_count(&self) -> usize {
        self.cycle_lengths().len()
    }

    /// Length of the cycle through the 1-indexed symbol `k`.
    pub fn cycle_length_of(&self, k: usize) -> usize {
        let start = k - 1;
        let mut len = 1;
        let mut j = self.images[start] as usize;
        while j != start {
            j = self.images[j] as usize;
            len += 1;
        }
        len
    }

    /// `(κ(π), length of the cycle through n)`: the class `C_{λ,i}` containing `π`.
    pub fn marked_type(&self) -> MarkedPartition {
        let n = self.n();
        MarkedPartition::new(self.cycle_type(), self.cycle_length_of(n)).unwrap()
    }

    pub fn is_even(&self) -> bool {
        (self.n() - self.cycle_count()) % 2 == 0
    }

    /// Canonical member of `C_{λ,i}`: the cycle `(1 2 … i-1 n)`, then the
    /// remaining parts in decreasing order on consecutive symbols from `i`.
    pub fn representative(marked: &MarkedPartition) -> Permutation {
        let n = marked.n();
        let i = marked.mark();
        let mut first: Vec<usize> = (1..i).collect();
        first.push(n);
        let mut cycles = vec![first];
        let mut next = i;
        for &len in marked.shape().remove_part(i).unwrap().parts() {
            cycles.push((next..next + len).collect());
            next += len;
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(n, &refs).unwrap()
    }

    /// All of `S_n` in lexicographic order of one-line images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<u8> = (0..n as u8).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            if !next_permutation(&mut current) {
                return out;
            }
        }
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points omitted, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let strs: Vec<String> = c.iter().map(|s| s.to_string()).collect();
            write!(f, "({})", strs.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
