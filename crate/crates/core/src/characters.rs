//! Irreducible characters `χ^λ_μ` of `S_n` via the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::enumerate_partitions;
use crate::{Error, Partition, Result};

type Cache = Mutex<HashMap<(Partition, Partition), BigInt>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `χ^λ_μ`, the irreducible character `λ` at a permutation of cycle type `μ`.
pub fn chi(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch(lambda.n(), mu.n()));
    }
    Ok(chi_unchecked(lambda, mu))
}

fn chi_unchecked(lambda: &Partition, mu: &Partition) -> BigInt {
    if mu.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    // Strip a border strip of length μ₁: on the beta-set of λ this moves one
    // bead from b to b - μ₁, with sign (-1)^{beads strictly in between}.
    let strip = mu.parts()[0];
    let rest = Partition::from_parts(&mu.parts()[1..]);
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &p)| p + len - 1 - r)
        .collect();
    let mut value = BigInt::zero();
    for &b in &beta {
        if b < strip || beta.contains(&(b - strip)) {
            continue;
        }
        let target = b - strip;
        let between = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut moved: Vec<usize> = beta.iter().map(|&c| if c == b { target } else { c }).collect();
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(r, &c)| c - (len - 1 - r))
            .filter(|&p| p > 0)
            .collect();
        let term = chi_unchecked(&Partition::from_parts(&shape), &rest);
        if between % 2 == 0 {
            value += term;
        } else {
            value -= term;
        }
    }
    cache().lock().unwrap().insert(key, value.clone());
    value
}

/// `χ^μ_{(n-1,1)}` in closed form: `1` for `(n)`, `(-1)ⁿ` for `(1ⁿ)`,
/// `(-1)^k` for `(n-k-1, 2, 1^{k-1})`, and `0` otherwise.
pub fn chi_near_hook(mu: &Partition) -> BigInt {
    let n = mu.n();
    let parts = mu.parts();
    if parts == [n] {
        return BigInt::one();
    }
    if parts.iter().all(|&p| p == 1) {
        return sign(n);
    }
    // (n-k-1, 2, 1^{k-1}) with k ≥ 1: second part is 2, the rest are ones.
    if parts.len() >= 2 && parts[1] == 2 && parts[2..].iter().all(|&p| p == 1) {
        let k = parts.len() - 1;
        return sign(k);
    }
    BigInt::zero()
}

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Full character table of `S_n`: rows `λ`, columns `μ`, both in
/// reverse-lexicographic order.
pub fn character_table(n: usize) -> (Vec<Partition>, Vec<Vec<BigInt>>) {
    let parts = enumerate_partitions(n);
    let table = parts
        .iter()
        .map(|l| parts.iter().map(|m| chi_unchecked(l, m)).collect())
        .collect();
    (parts, table)
}
