use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::characters::chi;
use crate::oracle::{Guard, Permutation};
use crate::partitions::factorial;
use crate::tableaux::dimension;
use crate::{Error, MarkedPartition, Partition, Rational, Result};

/// Joint cycle-type counts `#{σ ∈ S_{n-1} : κ(πσ⁻¹) = α, κ(σ) = β}` for the
/// canonical representative `π` of a marked class.
type Profile = Vec<(Partition, Partition, u64)>;

type ProfileCache = Mutex<HashMap<MarkedPartition, Arc<Profile>>>;
type ValueCache = Mutex<HashMap<(MarkedPartition, MarkedPartition), Rational>>;

fn profiles() -> &'static ProfileCache {
    static CACHE: OnceLock<ProfileCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn values() -> &'static ValueCache {
    static CACHE: OnceLock<ValueCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn profile_of(pi: &Permutation) -> Profile {
    let n = pi.n();
    let mut counts: HashMap<(Partition, Partition), u64> = HashMap::new();
    for sigma in Permutation::all(n - 1) {
        let embedded = sigma.embed();
        let left = pi.compose(&embedded.inverse()).cycle_type();
        *counts.entry((left, sigma.cycle_type())).or_default() += 1;
    }
    let mut out: Profile = counts.into_iter().map(|((a, b), c)| (a, b, c)).collect();
    out.sort();
    out
}

fn cached_profile(marked: &MarkedPartition) -> Arc<Profile> {
    if let Some(p) = profiles().lock().unwrap().get(marked) {
        return p.clone();
    }
    let p = Arc::new(profile_of(&Permutation::representative(marked)));
    profiles().lock().unwrap().insert(marked.clone(), p.clone());
    p
}

fn sum_over_profile(profile: &Profile, mu: &Partition, smaller: &Partition) -> Rational {
    let n = mu.n();
    let mut acc = BigInt::zero();
    for (left, right, count) in profile {
        let a = chi(mu, left).unwrap();
        if a.is_zero() {
            continue;
        }
        acc += a * chi(smaller, right).unwrap() * BigInt::from(*count);
    }
    let d: BigInt = dimension(smaller).into();
    BigRational::new(acc * d, factorial(n - 1).into())
}

fn check_args(mu: &Partition, j: usize, lambda: &Partition, i: usize) -> Result<(MarkedPartition, MarkedPartition)> {
    if mu.n() != lambda.n() {
        return Err(Error::SizeMismatch(mu.n(), lambda.n()));
    }
    let upper = MarkedPartition::new(mu.clone(), j)?;
    let lower = MarkedPartition::new(lambda.clone(), i)?;
    if upper.n() == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok((upper, lower))
}

/// `γ^{μ,j}_{λ,i} = d_{j₋(μ)}/(n-1)! · Σ_{σ ∈ S_{n-1}} χ^μ(πσ⁻¹) χ^{j₋(μ)}(σ)`
/// at the canonical `π ∈ C_{λ,i}`, using the guard from the environment.
pub fn genchar_strahov(mu: &Partition, j: usize, lambda: &Partition, i: usize) -> Result<Rational> {
    genchar_strahov_with(mu, j, lambda, i, &Guard::from_env())
}

pub fn genchar_strahov_with(
    mu: &Partition,
    j: usize,
    lambda: &Partition,
    i: usize,
    guard: &Guard,
) -> Result<Rational> {
    let (upper, lower) = check_args(mu, j, lambda, i)?;
    guard.check_n("Strahov sum", upper.n())?;
    let key = (upper.clone(), lower.clone());
    if let Some(v) = values().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let profile = cached_profile(&lower);
    let v = sum_over_profile(&profile, mu, &upper.decremented());
    values().lock().unwrap().insert(key, v.clone());
    Ok(v)
}

/// The same sum evaluated at an arbitrary `π`; the value must not depend on
/// which member of `C_{λ,i}` is chosen.
pub fn genchar_strahov_at(mu: &Partition, j: usize, pi: &Permutation, guard: &Guard) -> Result<Rational> {
    let marked = pi.marked_type();
    let (upper, _) = check_args(mu, j, marked.shape(), marked.mark())?;
    guard.check_n("Strahov sum", upper.n())?;
    Ok(sum_over_profile(&profile_of(pi), mu, &upper.decremented()))
}
