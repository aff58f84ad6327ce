//! Brute-force ground truth in the group algebra of `S_n`.
//!
//! Every object here is built literally from its definition: class sums by
//! filtering all of `S_n`, idempotents from character values, Jucys–Murphy
//! powers by repeated multiplication. Nothing in this module calls into the
//! generalized character formulas it is meant to check.

mod algebra;
mod permutation;
pub mod verify;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use algebra::GroupAlgebraElement;
pub use permutation::Permutation;

use crate::characters::chi;
use crate::genchar::asf::{AlmostSymmetricPoly, VarRange};
use crate::partitions::{enumerate_marked_partitions, factorial};
use crate::scalar::{FromRational, Scalar};
use crate::tableaux::dimension;
use crate::{Error, MarkedPartition, Partition, Rational, Result};

/// Environment variable overriding [`Guard::max_n`].
pub const MAX_N_ENV: &str = "NEARCENTRAL_MAX_N";

/// Size limits for enumerations. Exceeding one is an error, never a silent
/// truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    /// Largest `n` for which `S_n` (or `S_{n-1}`) is enumerated.
    pub max_n: usize,
    /// Largest number of factor sequences enumerated literally.
    pub max_sequences: u64,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_n: 9,
            max_sequences: 10_000_000,
        }
    }
}

impl Guard {
    /// Default guard with `max_n` taken from `NEARCENTRAL_MAX_N` when set.
    pub fn from_env() -> Self {
        let mut g = Guard::default();
        if let Some(n) = std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            g.max_n = n;
        }
        g
    }

    pub fn with_max_n(max_n: usize) -> Self {
        Guard {
            max_n,
            ..Guard::default()
        }
    }

    pub fn check_n(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::GuardExceeded {
                what,
                n: n as u64,
                limit: self.max_n as u64,
            });
        }
        Ok(())
    }
}

/// `K_{λ,i}`: the sum of all permutations of type `λ` with `n` on an `i`-cycle.
pub fn class_sum<S: Scalar>(shape: &Partition, i: usize, guard: &Guard) -> Result<GroupAlgebraElement<S>> {
    let marked = MarkedPartition::new(shape.clone(), i)?;
    let n = marked.n();
    guard.check_n("class sum", n)?;
    GroupAlgebraElement::sum_of(
        n,
        Permutation::all(n).into_iter().filter(|p| p.marked_type() == marked),
    )
}

/// `J_k = Σ_{i<k} (i, k)` inside `S_n`.
pub fn jm_element<S: Scalar>(k: usize, n: usize) -> Result<GroupAlgebraElement<S>> {
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!("J_{k} needs 2 ≤ k ≤ n = {n}")));
    }
    GroupAlgebraElement::sum_of(n, (1..k).map(|i| Permutation::transposition(n, i, k).unwrap()))
}

/// `X^λ = (d_λ / n!) Σ_μ χ^λ_μ K_μ`.
pub fn central_idempotent<S: FromRational>(shape: &Partition, guard: &Guard) -> Result<GroupAlgebraElement<S>> {
    let n = shape.n();
    guard.check_n("central idempotent", n)?;
    let scale = BigRational::new(dimension(shape).into(), factorial(n).into());
    let mut values: BTreeMap<Partition, S> = BTreeMap::new();
    let mut out = GroupAlgebraElement::zero(n);
    for p in Permutation::all(n) {
        let ty = p.cycle_type();
        let c = values
            .entry(ty.clone())
            .or_insert_with(|| {
                let v = BigRational::from_integer(chi(shape, &ty).unwrap()) * &scale;
                S::from_rational(&v)
            })
            .clone();
        out.add_term(p, c);
    }
    Ok(out)
}

/// `Γ^{λ,i} = X^λ X^{i₋(λ)}`, the second factor embedded with `n` fixed.
pub fn z1_idempotent<S: FromRational>(shape: &Partition, i: usize, guard: &Guard) -> Result<GroupAlgebraElement<S>> {
    let smaller = shape.decrement_part(i)?;
    let x = central_idempotent::<S>(shape, guard)?;
    let y = central_idempotent::<S>(&smaller, guard)?.embed();
    x.multiply(&y)
}

/// `true` iff `g` commutes with every `(k, k+1)`, `k ≤ n-2`, i.e. with `S_{n-1}`.
pub fn is_near_central<S: Scalar>(g: &GroupAlgebraElement<S>) -> bool {
    let n = g.n();
    (1..n.saturating_sub(1)).all(|k| {
        let s = Permutation::transposition(n, k, k + 1).unwrap();
        g.terms().all(|(p, c)| g.coefficient(&p.conjugate_by(&s)) == *c)
    })
}

/// `[K_{μ,j}] g` for `g ∈ Z₁(n)`. Fails when `g` is not near-central or its
/// coefficients differ across `C_{μ,j}`.
pub fn extract_marked_coefficient<S: Scalar>(
    g: &GroupAlgebraElement<S>,
    mu: &Partition,
    j: usize,
    guard: &Guard,
) -> Result<S> {
    let marked = MarkedPartition::new(mu.clone(), j)?;
    if marked.n() != g.n() {
        return Err(Error::SizeMismatch(marked.n(), g.n()));
    }
    guard.check_n("coefficient extraction", g.n())?;
    if !is_near_central(g) {
        return Err(Error::NotNearCentral("does not commute with S_{n-1}".into()));
    }
    let mut value: Option<S> = None;
    for p in Permutation::all(g.n()).into_iter().filter(|p| p.marked_type() == marked) {
        let c = g.coefficient(&p);
        match &value {
            None => value = Some(c),
            Some(v) if *v != c => {
                return Err(Error::NotNearCentral(format!(
                    "coefficients {v:?} and {c:?} differ on C_{{{marked}}}"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(value.expect("marked classes are nonempty"))
}

/// All standard-basis coordinates of `g ∈ Z₁(n)`, in marked enumeration order.
pub fn marked_coordinates<S: Scalar>(
    g: &GroupAlgebraElement<S>,
    guard: &Guard,
) -> Result<Vec<(MarkedPartition, S)>> {
    let n = g.n();
    guard.check_n("coefficient extraction", n)?;
    let mut seen: BTreeMap<MarkedPartition, S> = BTreeMap::new();
    for p in Permutation::all(n) {
        let m = p.marked_type();
        let c = g.coefficient(&p);
        match seen.get(&m) {
            None => {
                seen.insert(m, c);
            }
            Some(v) if *v != c => {
                return Err(Error::NotNearCentral(format!(
                    "coefficients {v:?} and {c:?} differ on C_{{{m}}}"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(enumerate_marked_partitions(n)
        .into_iter()
        .map(|m| {
            let c = seen.remove(&m).unwrap();
            (m, c)
        })
        .collect())
}

/// Rebuilds `Σ coeff · K_{λ,i}` from standard-basis coordinates.
pub fn from_marked_coordinates<S: Scalar>(
    n: usize,
    coords: &[(MarkedPartition, S)],
    guard: &Guard,
) -> Result<GroupAlgebraElement<S>> {
    guard.check_n("class sum", n)?;
    let lookup: BTreeMap<&MarkedPartition, &S> = coords.iter().map(|(m, c)| (m, c)).collect();
    let mut out = GroupAlgebraElement::zero(n);
    for p in Permutation::all(n) {
        if let Some(c) = lookup.get(&p.marked_type()) {
            out.add_term(p, (*c).clone());
        }
    }
    Ok(out)
}

/// Standard-basis coordinates of `a·b` for `a, b ∈ Z₁(n)`, read off at the
/// canonical representative of each marked class (the product is again in
/// `Z₁(n)`, so one permutation per class suffices).
pub fn z1_product_coordinates<S: Scalar>(
    a: &GroupAlgebraElement<S>,
    b: &GroupAlgebraElement<S>,
) -> Result<Vec<(MarkedPartition, S)>> {
    enumerate_marked_partitions(a.n())
        .into_iter()
        .map(|m| {
            let c = a.product_coefficient(b, &Permutation::representative(&m))?;
            Ok((m, c))
        })
        .collect()
}

/// Standard-basis coordinates of `J_n^r`, by literal repeated multiplication.
pub fn jm_power_coefficients(n: usize, r: u32, guard: &Guard) -> Result<Vec<(MarkedPartition, Rational)>> {
    guard.check_n("Jucys-Murphy power", n)?;
    if n < 2 {
        return marked_coordinates(&GroupAlgebraElement::<Rational>::identity(n), guard);
    }
    let j = jm_element::<BigInt>(n, n)?;
    let power = j.pow(r);
    let coords = marked_coordinates(&power, guard)?;
    Ok(coords
        .into_iter()
        .map(|(m, c)| (m, BigRational::from_integer(c)))
        .collect())
}

/// Number of sequences of `r` star transpositions `(k, n)` whose product is `π`,
/// by enumerating all `(n-1)^r` sequences.
pub fn enumerate_star_factorizations(pi: &Permutation, r: u32, guard: &Guard) -> Result<u64> {
    let n = pi.n();
    if n < 2 {
        return Ok(u64::from(pi == &Permutation::identity(n) && r == 0));
    }
    let total = (n as u64 - 1).checked_pow(r).unwrap_or(u64::MAX);
    if total > guard.max_sequences {
        return Err(Error::GuardExceeded {
            what: "star factorization enumeration",
            n: total,
            limit: guard.max_sequences,
        });
    }
    let stars: Vec<Permutation> = (1..n).map(|k| Permutation::transposition(n, k, n).unwrap()).collect();
    let mut count = 0u64;
    // Prefix products τ₁⋯τ_k, extended on the right.
    let mut stack = vec![(Permutation::identity(n), 0u32)];
    while let Some((prefix, depth)) = stack.pop() {
        if depth == r {
            if &prefix == pi {
                count += 1;
            }
            continue;
        }
        for s in &stars {
            stack.push((prefix.compose(s), depth + 1));
        }
    }
    Ok(count)
}

/// `f(J₂, …, J_n)` in the group algebra. Elementary symmetric generators are
/// expanded through `∏ (1 + t J_i)` truncated at the needed degree.
pub fn evaluate_asf_at_jm<S: FromRational>(
    f: &AlmostSymmetricPoly,
    n: usize,
    guard: &Guard,
) -> Result<GroupAlgebraElement<S>> {
    guard.check_n("Jucys-Murphy evaluation", n)?;
    let jms: Vec<GroupAlgebraElement<S>> = (2..=n).map(|k| jm_element(k, n).unwrap()).collect();
    Ok(eval_jm(f, n, &jms))
}

fn range_slice<S>(jms: &[GroupAlgebraElement<S>], range: VarRange) -> &[GroupAlgebraElement<S>] {
    match range {
        VarRange::Full => jms,
        VarRange::Inner => &jms[..jms.len().saturating_sub(1)],
    }
}

fn eval_jm<S: FromRational>(
    f: &AlmostSymmetricPoly,
    n: usize,
    jms: &[GroupAlgebraElement<S>],
) -> GroupAlgebraElement<S> {
    use AlmostSymmetricPoly as Asf;
    let one = || GroupAlgebraElement::<S>::identity(n);
    match f {
        Asf::Const(c) => one().scaled(&S::from_rational(c)),
        Asf::XN => jms.last().cloned().unwrap_or_else(|| GroupAlgebraElement::zero(n)),
        Asf::PowerSum(k, range) => range_slice(jms, *range)
            .iter()
            .fold(GroupAlgebraElement::zero(n), |acc, j| &acc + &j.pow(*k)),
        Asf::Elementary(k, range) => {
            let k = *k as usize;
            // e[d] = degree-d part of ∏(1 + t J_i) over the prefix seen so far.
            let mut e: Vec<GroupAlgebraElement<S>> = vec![GroupAlgebraElement::zero(n); k + 1];
            e[0] = one();
            for j in range_slice(jms, *range) {
                for d in (1..=k).rev() {
                    if !e[d - 1].is_zero() {
                        e[d] = &e[d] + &(j * &e[d - 1]);
                    }
                }
            }
            e.swap_remove(k)
        }
        Asf::Add(a, b) => &eval_jm(a, n, jms) + &eval_jm(b, n, jms),
        Asf::Mul(a, b) => &eval_jm(a, n, jms) * &eval_jm(b, n, jms),
        Asf::Scale(c, a) => eval_jm(a, n, jms).scaled(&S::from_rational(c)),
        Asf::Pow(a, k) => eval_jm(a, n, jms).pow(*k),
    }
}

/// `γ^{μ,j}_{λ,i} = (n!/d_μ) [K_{λ,i}] Γ^{μ,j}`, read off a literally built `Γ^{μ,j}`.
pub fn genchar_by_extraction(mu: &Partition, j: usize, lambda: &Partition, i: usize, guard: &Guard) -> Result<Rational> {
    if mu.n() != lambda.n() {
        return Err(Error::SizeMismatch(mu.n(), lambda.n()));
    }
    MarkedPartition::new(lambda.clone(), i)?;
    let gamma = z1_idempotent::<Rational>(mu, j, guard)?;
    let coeff = extract_marked_coefficient(&gamma, lambda, i, guard)?;
    let scale = BigRational::new(factorial(mu.n()).into(), dimension(mu).into());
    Ok(coeff * scale)
}

/// `[K_{ν,k}] K_{λ,i} K_{μ,j}` from the literal product of class sums.
pub fn connection_by_product(
    a: &MarkedPartition,
    b: &MarkedPartition,
    target: &MarkedPartition,
    guard: &Guard,
) -> Result<BigInt> {
    let ka = class_sum::<BigInt>(a.shape(), a.mark(), guard)?;
    let kb = class_sum::<BigInt>(b.shape(), b.mark(), guard)?;
    let rep = Permutation::representative(target);
    ka.product_coefficient(&kb, &rep)
}

/// Converts an integral rational, failing otherwise.
pub(crate) fn to_integer(q: &Rational) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NonIntegral(q.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genchar::asf::{table1_poly, Table1Row};
    use crate::partitions::enumerate_partitions;
    use crate::{IntElement, QElement};
    use num_traits::{One, Zero};

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    fn q(a: i64, b: i64) -> Rational {
        BigRational::new(a.into(), b.into())
    }

    fn g() -> Guard {
        Guard::default()
    }

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn class_sums_in_s3() {
        assert_eq!(class_sum::<BigInt>(&p(&[1, 1, 1]), 1, &g()).unwrap(), IntElement::identity(3));
        let k21 = class_sum::<BigInt>(&p(&[2, 1]), 2, &g()).unwrap();
        let expected = IntElement::sum_of(3, [perm(3, &[&[2, 3]]), perm(3, &[&[1, 3]])]).unwrap();
        assert_eq!(k21, expected);
        let k3 = class_sum::<BigInt>(&p(&[3]), 3, &g()).unwrap();
        assert_eq!(k3.support_size(), 2);
        assert!(class_sum::<BigInt>(&p(&[10]), 10, &g()).unwrap_err().is_guard());
    }

    #[test]
    fn jm_elements() {
        assert_eq!(jm_element::<BigInt>(2, 2).unwrap(), IntElement::basis(perm(2, &[&[1, 2]])));
        let j3 = jm_element::<BigInt>(3, 3).unwrap();
        assert_eq!(j3, IntElement::sum_of(3, [perm(3, &[&[1, 3]]), perm(3, &[&[2, 3]])]).unwrap());
        for n in 2..=7 {
            let tn: Vec<usize> = std::iter::once(2).chain(std::iter::repeat(1).take(n - 2)).collect();
            assert_eq!(jm_element::<BigInt>(n, n).unwrap(), class_sum(&p(&tn), 2, &g()).unwrap());
        }
        assert!(jm_element::<BigInt>(1, 3).is_err());
        assert!(jm_element::<BigInt>(4, 3).is_err());
    }

    #[test]
    fn central_idempotents() {
        let triv = central_idempotent::<Rational>(&p(&[3]), &g()).unwrap();
        let sign = central_idempotent::<Rational>(&p(&[1, 1, 1]), &g()).unwrap();
        for pi in Permutation::all(3) {
            assert_eq!(triv.coefficient(&pi), q(1, 6));
            assert_eq!(sign.coefficient(&pi), q(if pi.is_even() { 1 } else { -1 }, 6));
        }
        let x = central_idempotent::<Rational>(&p(&[2, 1]), &g()).unwrap();
        assert_eq!(&x * &x, x);
    }

    #[test]
    fn central_idempotents_are_orthogonal_and_complete() {
        for n in 1..=5 {
            let xs: Vec<QElement> = enumerate_partitions(n)
                .iter()
                .map(|l| central_idempotent(l, &g()).unwrap())
                .collect();
            let mut total = QElement::zero(n);
            for (a, xa) in xs.iter().enumerate() {
                total = &total + xa;
                for (b, xb) in xs.iter().enumerate() {
                    let prod = xa * xb;
                    if a == b {
                        assert_eq!(&prod, xa);
                    } else {
                        assert!(prod.is_zero());
                    }
                }
            }
            assert_eq!(total, QElement::identity(n));
        }
    }

    #[test]
    fn z1_idempotents_in_s3() {
        let g21_2 = z1_idempotent::<Rational>(&p(&[2, 1]), 2, &g()).unwrap();
        let g21_1 = z1_idempotent::<Rational>(&p(&[2, 1]), 1, &g()).unwrap();
        let x21 = central_idempotent::<Rational>(&p(&[2, 1]), &g()).unwrap();
        assert_eq!(&g21_2 + &g21_1, x21);
        assert!((&g21_2 * &g21_1).is_zero());
        let j3 = jm_element::<Rational>(3, 3).unwrap();
        assert_eq!(&j3 * &g21_2, g21_2);
        assert!(is_near_central(&g21_2));
    }

    #[test]
    fn near_centrality() {
        for m in enumerate_marked_partitions(4) {
            assert!(is_near_central(&class_sum::<BigInt>(m.shape(), m.mark(), &g()).unwrap()));
        }
        // (1,2) generates S_2, so δ_(1,2) is near-central; δ_(1,3) is not.
        assert!(is_near_central(&IntElement::basis(perm(3, &[&[1, 2]]))));
        assert!(!is_near_central(&IntElement::basis(perm(3, &[&[1, 3]]))));
        let a = class_sum::<BigInt>(&p(&[2, 1, 1]), 1, &g()).unwrap();
        let b = class_sum::<BigInt>(&p(&[3, 1]), 3, &g()).unwrap();
        assert!(is_near_central(&(&a * &b)));
    }

    #[test]
    fn coefficient_extraction() {
        let k = class_sum::<BigInt>(&p(&[3, 1]), 1, &g()).unwrap();
        assert_eq!(extract_marked_coefficient(&k, &p(&[3, 1]), 1, &g()).unwrap(), BigInt::one());
        let j3 = jm_element::<BigInt>(3, 3).unwrap();
        let sq = &j3 * &j3;
        assert_eq!(extract_marked_coefficient(&sq, &p(&[1, 1, 1]), 1, &g()).unwrap(), BigInt::from(2));
        assert_eq!(extract_marked_coefficient(&sq, &p(&[2, 1]), 2, &g()).unwrap(), BigInt::zero());
        let bad = IntElement::basis(perm(3, &[&[1, 3]]));
        assert!(matches!(
            extract_marked_coefficient(&bad, &p(&[2, 1]), 1, &g()),
            Err(Error::NotNearCentral(_))
        ));
    }

    #[test]
    fn jm_powers_in_s3() {
        let lookup = |coords: &[(MarkedPartition, Rational)], parts: &[usize], i: usize| {
            coords
                .iter()
                .find(|(m, _)| *m == MarkedPartition::from_parts(parts, i))
                .unwrap()
                .1
                .clone()
        };
        let sq = jm_power_coefficients(3, 2, &g()).unwrap();
        assert_eq!(lookup(&sq, &[1, 1, 1], 1), q(2, 1));
        assert_eq!(lookup(&sq, &[3], 3), q(1, 1));
        assert_eq!(lookup(&sq, &[2, 1], 2), q(0, 1));
        let cube = jm_power_coefficients(3, 3, &g()).unwrap();
        assert_eq!(lookup(&cube, &[2, 1], 2), q(3, 1));
        assert_eq!(lookup(&cube, &[2, 1], 1), q(2, 1));
        assert_eq!(lookup(&cube, &[3], 3), q(0, 1));
        let zero = jm_power_coefficients(5, 0, &g()).unwrap();
        for (m, c) in zero {
            let expected = if m.shape() == &Partition::column(5) { 1 } else { 0 };
            assert_eq!(c, q(expected, 1));
        }
    }

    #[test]
    fn jm_power_mass_and_parity() {
        for n in 2..=5 {
            for r in 0..=5u32 {
                let coords = jm_power_coefficients(n, r, &g()).unwrap();
                let mass: Rational = coords
                    .iter()
                    .map(|(m, c)| c * BigRational::from_integer(m.class_size().into()))
                    .sum();
                assert_eq!(mass, BigRational::from_integer(BigInt::from(n - 1).pow(r)));
                for (m, c) in coords {
                    if (r as usize + m.shape().len() + n) % 2 == 1 {
                        assert!(c.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn star_factorizations_in_s3() {
        let t23 = perm(3, &[&[2, 3]]);
        let t12 = perm(3, &[&[1, 2]]);
        assert_eq!(enumerate_star_factorizations(&t23, 3, &g()).unwrap(), 3);
        assert_eq!(enumerate_star_factorizations(&t12, 3, &g()).unwrap(), 2);
        assert_eq!(enumerate_star_factorizations(&Permutation::identity(4), 3, &g()).unwrap(), 0);
        let tight = Guard { max_sequences: 5, ..g() };
        assert!(enumerate_star_factorizations(&t23, 3, &tight).unwrap_err().is_guard());
    }

    #[test]
    fn star_factorizations_depend_only_on_marked_class() {
        for n in 2..=5 {
            for r in 0..=4u32 {
                let coords = jm_power_coefficients(n, r, &g()).unwrap();
                for pi in Permutation::all(n) {
                    let m = pi.marked_type();
                    let expected = &coords.iter().find(|(k, _)| *k == m).unwrap().1;
                    let got = enumerate_star_factorizations(&pi, r, &g()).unwrap();
                    assert_eq!(BigRational::from_integer(got.into()), *expected, "{pi} r={r}");
                }
            }
        }
    }

    #[test]
    fn asf_evaluation_at_jm_small_rows() {
        let guard = g();
        let f = table1_poly(&p(&[2, 1, 1]), 2).unwrap();
        assert_eq!(
            evaluate_asf_at_jm::<Rational>(&f, 4, &guard).unwrap(),
            class_sum(&p(&[2, 1, 1]), 2, &guard).unwrap()
        );
        let f = table1_poly(&p(&[4]), 4).unwrap();
        assert_eq!(
            evaluate_asf_at_jm::<Rational>(&f, 4, &guard).unwrap(),
            class_sum(&p(&[4]), 4, &guard).unwrap()
        );
        let f = Table1Row::ThreeCycle.poly(4).unwrap();
        assert_eq!(
            evaluate_asf_at_jm::<Rational>(&f, 4, &guard).unwrap(),
            class_sum(&p(&[3, 1]), 3, &guard).unwrap()
        );
    }

    #[test]
    fn extraction_and_product_connection() {
        let t = MarkedPartition::from_parts(&[2, 1], 2);
        let id = MarkedPartition::from_parts(&[1, 1, 1], 1);
        let full = MarkedPartition::from_parts(&[3], 3);
        assert_eq!(connection_by_product(&t, &t, &id, &g()).unwrap(), BigInt::from(2));
        assert_eq!(connection_by_product(&t, &t, &full, &g()).unwrap(), BigInt::from(1));
        assert_eq!(
            genchar_by_extraction(&p(&[2, 1]), 2, &p(&[2, 1]), 2, &g()).unwrap(),
            q(1, 2)
        );
        assert_eq!(
            genchar_by_extraction(&p(&[3]), 3, &p(&[2, 1]), 2, &g()).unwrap(),
            q(1, 1)
        );
        assert_eq!(
            genchar_by_extraction(&p(&[2, 1]), 2, &p(&[3]), 3, &g()).unwrap(),
            q(-1, 2)
        );
    }

    #[test]
    fn coordinates_round_trip() {
        let guard = g();
        let gamma = z1_idempotent::<Rational>(&p(&[3, 1]), 1, &guard).unwrap();
        let coords = marked_coordinates(&gamma, &guard).unwrap();
        assert_eq!(from_marked_coordinates(4, &coords, &guard).unwrap(), gamma);
    }
}
