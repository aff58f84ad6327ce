//! The full invariant suite: every formula in the crate checked against the
//! brute-force constructions of this module, size by size.
//!
//! Group-algebra checks are capped at `n = 6` (and the polynomial identities
//! at `n = 7`) whatever `max_n` is; formula-only checks run up to `max_n`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{
    central_idempotent, class_sum, connection_by_product, jm_element, jm_power_coefficients,
    marked_coordinates, evaluate_asf_at_jm, is_near_central, z1_idempotent, z1_product_coordinates,
    GroupAlgebraElement, Guard, Permutation,
};
use crate::characters::{character_table, chi};
use crate::genchar::{
    connection_coefficient, genchar_closed, genchar_strahov_with, orthogonality_check, orthogonality_target, subscript_sum_chi,
    superscript_sum, weighted_sum, Table1Row,
};
use crate::partitions::{enumerate_marked_partitions, enumerate_partitions, factorial};
use crate::starcount::{
    star_count, star_count_by_cycle_count, star_count_class, star_count_closed, ClosedCase,
};
use crate::tableaux::{content_polynomial, dimension, enumerate_syt};
use crate::{Error, MarkedPartition, Rational, Result};

/// Largest `n` for checks that build elements of the group algebra.
pub const ALGEBRA_CAP: usize = 6;
/// Largest `n` for the Jucys–Murphy polynomial identities.
pub const POLYNOMIAL_CAP: usize = 7;
/// Largest factorization length checked against literal powers of `J_n`.
pub const MAX_R: u32 = 6;

/// The first identity that failed, with both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} != {}", self.identity, self.lhs, self.rhs)
    }
}

/// Outcome of a suite run: per-check case counts and the first mismatch, if any.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub max_n: usize,
    pub checks: BTreeMap<&'static str, usize>,
    pub mismatch: Option<Mismatch>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn total_cases(&self) -> usize {
        self.checks.values().sum()
    }
}

enum Stop {
    Mismatch(Mismatch),
    Failed(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Failed(e)
    }
}

type Step = std::result::Result<(), Stop>;

struct Suite {
    report: Report,
}

impl Suite {
    fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        check: &'static str,
        identity: impl FnOnce() -> String,
        lhs: T,
        rhs: T,
    ) -> Step {
        *self.report.checks.entry(check).or_default() += 1;
        if lhs == rhs {
            Ok(())
        } else {
            Err(Stop::Mismatch(Mismatch {
                identity: identity(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }))
        }
    }

    fn holds(&mut self, check: &'static str, identity: impl FnOnce() -> String, ok: bool) -> Step {
        self.eq(check, identity, ok, true)
    }

    fn elements(
        &mut self,
        check: &'static str,
        identity: impl FnOnce() -> String,
        lhs: &GroupAlgebraElement<Rational>,
        rhs: &GroupAlgebraElement<Rational>,
    ) -> Step {
        *self.report.checks.entry(check).or_default() += 1;
        if lhs == rhs {
            return Ok(());
        }
        let diff = lhs - rhs;
        let (p, _) = diff.terms().next().expect("unequal elements differ somewhere");
        Err(Stop::Mismatch(Mismatch {
            identity: format!("{} at {p}", identity()),
            lhs: lhs.coefficient(p).to_string(),
            rhs: rhs.coefficient(p).to_string(),
        }))
    }
}

fn q(v: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(v.into())
}

/// Runs every check for `n = 1..=max_n` (subject to the caps), stopping at the
/// first mismatch. Errors other than mismatches (e.g. a guard) are returned.
pub fn verify(max_n: usize, guard: &Guard) -> Result<Report> {
    let mut suite = Suite {
        report: Report {
            max_n,
            ..Report::default()
        },
    };
    for n in 1..=max_n {
        match run_size(&mut suite, n, guard) {
            Ok(()) => {}
            Err(Stop::Mismatch(m)) => {
                suite.report.mismatch = Some(m);
                break;
            }
            Err(Stop::Failed(e)) => return Err(e),
        }
    }
    Ok(suite.report)
}

fn run_size(s: &mut Suite, n: usize, guard: &Guard) -> Step {
    substrate(s, n, guard)?;
    characters(s, n)?;
    if n <= ALGEBRA_CAP {
        idempotents(s, n, guard)?;
        star_counts_vs_powers(s, n, guard)?;
    }
    if n <= POLYNOMIAL_CAP {
        table1_identities(s, n, guard)?;
    }
    if (3..=5).contains(&n) {
        connections(s, n, guard)?;
    }
    if n <= ALGEBRA_CAP.min(guard.max_n) {
        generalized_characters(s, n, guard)?;
        sum_lemmas(s, n)?;
    }
    closed_forms(s, n)?;
    aggregation(s, n)?;
    Ok(())
}

fn substrate(s: &mut Suite, n: usize, guard: &Guard) -> Step {
    let nf = factorial(n);
    let parts = enumerate_partitions(n);
    let class_total = parts.iter().map(|l| l.class_size()).sum();
    s.eq("class sizes", || format!("sum of class sizes, n={n}"), nf.clone(), class_total)?;
    let marked_total = enumerate_marked_partitions(n).iter().map(|m| m.class_size()).sum();
    s.eq("class sizes", || format!("sum of marked class sizes, n={n}"), nf.clone(), marked_total)?;
    let dims = parts.iter().map(|l| dimension(l) * dimension(l)).sum();
    s.eq("dimensions", || format!("sum of squared dimensions, n={n}"), nf, dims)?;
    if n <= 8 {
        for l in &parts {
            s.eq("dimensions", || format!("hook length vs SYT count for ({l})"), dimension(l), enumerate_syt(l).len().into())?;
        }
    }
    if n <= ALGEBRA_CAP && n <= guard.max_n {
        let all = Permutation::all(n);
        for m in enumerate_marked_partitions(n) {
            let count = all.iter().filter(|p| p.marked_type() == m).count();
            s.eq("class sizes", || format!("|C_{{{m}}}| by enumeration"), m.class_size(), count.into())?;
        }
    }
    Ok(())
}

fn characters(s: &mut Suite, n: usize) -> Step {
    let (parts, table) = character_table(n);
    let nf = BigInt::from(factorial(n));
    for (a, mu) in parts.iter().enumerate() {
        for (b, nu) in parts.iter().enumerate() {
            let sum: BigInt = (0..parts.len()).map(|l| &table[l][a] * &table[l][b]).sum();
            let lhs = sum * BigInt::from(mu.class_size());
            let rhs = if a == b { nf.clone() } else { BigInt::zero() };
            s.eq("characters", || format!("column orthogonality ({mu}) vs ({nu})"), lhs, rhs)?;
        }
    }
    Ok(())
}

fn idempotents(s: &mut Suite, n: usize, guard: &Guard) -> Step {
    let parts = enumerate_partitions(n);
    let xs: Vec<_> = parts
        .iter()
        .map(|l| central_idempotent::<Rational>(l, guard))
        .collect::<Result<_>>()?;
    let mut total = GroupAlgebraElement::zero(n);
    for (a, xa) in xs.iter().enumerate() {
        total = &total + xa;
        for (b, xb) in xs.iter().enumerate() {
            for pi in parts.iter().map(|l| Permutation::representative(&MarkedPartition::new(l.clone(), l.parts()[0]).unwrap())) {
                let lhs = xa.product_coefficient(xb, &pi)?;
                let rhs = if a == b { xa.coefficient(&pi) } else { Rational::zero() };
                s.eq("central idempotents", || format!("X^({}) X^({}) at {pi}", parts[a], parts[b]), lhs, rhs)?;
            }
        }
    }
    s.elements("central idempotents", || format!("sum of X^lambda, n={n}"), &total, &GroupAlgebraElement::identity(n))?;

    let marked = enumerate_marked_partitions(n);
    let gammas: Vec<_> = marked
        .iter()
        .map(|m| z1_idempotent::<Rational>(m.shape(), m.mark(), guard))
        .collect::<Result<_>>()?;
    let coords: Vec<_> = gammas
        .iter()
        .map(|g| marked_coordinates(g, guard))
        .collect::<Result<_>>()?;
    let jn = if n >= 2 { Some(jm_element::<Rational>(n, n)?) } else { None };
    let mut total = GroupAlgebraElement::zero(n);
    for (a, ga) in gammas.iter().enumerate() {
        let ma = &marked[a];
        total = &total + ga;
        s.holds("Z1 idempotents", || format!("Gamma^{{{ma}}} is near-central"), is_near_central(ga))?;
        if let Some(j) = &jn {
            let lhs = j * ga;
            let rhs = ga.scaled(&q(ma.content()));
            s.elements("Z1 idempotents", || format!("J_n Gamma^{{{ma}}} = c Gamma^{{{ma}}}"), &lhs, &rhs)?;
        }
        for (b, gb) in gammas.iter().enumerate() {
            let mb = &marked[b];
            for (target, value) in z1_product_coordinates(ga, gb)? {
                let expected = if a == b {
                    coords[a].iter().find(|(m, _)| *m == target).unwrap().1.clone()
                } else {
                    Rational::zero()
                };
                s.eq("Z1 idempotents", || format!("[K_{{{target}}}] Gamma^{{{ma}}} Gamma^{{{mb}}}"), value, expected)?;
            }
        }
    }
    s.elements("Z1 idempotents", || format!("sum of Gamma, n={n}"), &total, &GroupAlgebraElement::identity(n))?;

    // K_{λ,i} = Σ_{μ,j} |C_{λ,i}|/d_{j₋(μ)} γ^{μ,j}_{λ,i} Γ^{μ,j}
    if n <= 5 {
        let nf = q(factorial(n));
        for lower in &marked {
            let mut rebuilt = GroupAlgebraElement::zero(n);
            for (b, upper) in marked.iter().enumerate() {
                let coeff = coords[b].iter().find(|(m, _)| m == lower).unwrap().1.clone();
                let gamma = coeff * &nf / q(dimension(upper.shape()));
                let weight = q(lower.class_size()) * gamma / q(dimension(&upper.decremented()));
                rebuilt = &rebuilt + &gammas[b].scaled(&weight);
            }
            let k = class_sum::<Rational>(lower.shape(), lower.mark(), guard)?;
            s.elements("Z1 idempotents", || format!("K_{{{lower}}} rebuilt from idempotents"), &rebuilt, &k)?;
        }
    }
    Ok(())
}

fn generalized_characters(s: &mut Suite, n: usize, guard: &Guard) -> Step {
    let marked = enumerate_marked_partitions(n);
    let nf = q(factorial(n));
    for upper in &marked {
        let gamma = z1_idempotent::<Rational>(upper.shape(), upper.mark(), guard)?;
        let coords = marked_coordinates(&gamma, guard)?;
        let scale = &nf / q(dimension(upper.shape()));
        for (lower, coeff) in coords {
            let extracted = coeff * &scale;
            let strahov = genchar_strahov_with(upper.shape(), upper.mark(), lower.shape(), lower.mark(), guard)?;
            s.eq("generalized characters", || format!("Strahov vs extraction, gamma^{{{upper}}}_{{{lower}}}"), strahov, extracted.clone())?;
            match genchar_closed(upper.shape(), upper.mark(), lower.shape(), lower.mark()) {
                Ok(v) => s.eq("generalized characters", || format!("closed form vs extraction, gamma^{{{upper}}}_{{{lower}}}"), v, extracted)?,
                Err(Error::UnsupportedPattern(_)) => {}
                Err(e) => return Err(e.into()),
            }
        }
        for other in &marked {
            let lhs = orthogonality_check(upper, other)?;
            let rhs = orthogonality_target(upper, other);
            s.eq("orthogonality", || format!("<gamma^{{{upper}}}, gamma^{{{other}}}>"), lhs, rhs)?;
        }
    }
    Ok(())
}

fn sum_lemmas(s: &mut Suite, n: usize) -> Step {
    let parts = enumerate_partitions(n);
    for mu in &parts {
        let poly = content_polynomial(mu);
        for j in mu.distinct_parts() {
            for m in 1..=n {
                s.eq("sum lemmas", || format!("weighted sum ({mu})@{j}, m={m}"), weighted_sum(mu, j, m)?, q(poly[m].clone()))?;
            }
            for lambda in &parts {
                let x = chi(mu, lambda)?;
                s.eq("sum lemmas", || format!("subscript sum ({mu})@{j} at ({lambda})"), subscript_sum_chi(mu, j, lambda)?, q(x.clone()))?;
            }
        }
        for lambda in &parts {
            let x = chi(mu, lambda)?;
            for i in lambda.distinct_parts() {
                s.eq("sum lemmas", || format!("superscript sum ({mu}) at ({lambda})@{i}"), superscript_sum(mu, lambda, i)?, x.clone())?;
            }
        }
    }
    Ok(())
}

fn table1_identities(s: &mut Suite, n: usize, guard: &Guard) -> Step {
    for row in Table1Row::ALL {
        let (Some(m), Some(f)) = (row.marked(n), row.poly(n)) else {
            continue;
        };
        let lhs = evaluate_asf_at_jm::<Rational>(&f, n, guard)?;
        let rhs = class_sum::<Rational>(m.shape(), m.mark(), guard)?;
        s.elements("polynomial identities", || format!("{f} = K_{{{m}}}"), &lhs, &rhs)?;
    }
    Ok(())
}

fn connections(s: &mut Suite, n: usize, guard: &Guard) -> Step {
    let marked = enumerate_marked_partitions(n);
    for a in &marked {
        for b in &marked {
            for c in &marked {
                let formula = connection_coefficient(a, b, c)?;
                let product = connection_by_product(a, b, c, guard)?;
                s.eq("connection coefficients", || format!("[K_{{{c}}}] K_{{{a}}} K_{{{b}}}"), formula.clone(), product)?;
                let swapped = connection_coefficient(b, a, c)?;
                s.eq("connection coefficients", || format!("symmetry of [K_{{{c}}}] K_{{{a}}} K_{{{b}}}"), formula, swapped)?;
            }
        }
    }
    Ok(())
}

fn star_counts_vs_powers(s: &mut Suite, n: usize, guard: &Guard) -> Step {
    if n < 2 {
        return Ok(());
    }
    for r in 0..=MAX_R {
        for (m, literal) in jm_power_coefficients(n, r, guard)? {
            let formula = q(star_count(m.shape(), m.mark(), r)?);
            s.eq("star counts", || format!("[K_{{{m}}}] J_{n}^{r}"), formula, literal)?;
        }
    }
    Ok(())
}

fn closed_forms(s: &mut Suite, n: usize) -> Step {
    if !(3..=8).contains(&n) {
        return Ok(());
    }
    for case in ClosedCase::ALL {
        let m = case.marked(n);
        for r in 1..=12 {
            let direct = star_count(m.shape(), m.mark(), r)?;
            let identity = || format!("{case} closed form, n={n}, r={r}");
            match star_count_closed(case, n, r) {
                Ok(v) => s.eq("closed forms", identity, v.to_string(), direct.to_string())?,
                Err(Error::NonIntegral(v)) => s.eq("closed forms", identity, v, direct.to_string())?,
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(())
}

fn aggregation(s: &mut Suite, n: usize) -> Step {
    if n < 2 || n > 8 {
        return Ok(());
    }
    let parts = enumerate_partitions(n);
    for r in 1..=MAX_R {
        let mut by_cycles: BTreeMap<usize, BigInt> = BTreeMap::new();
        for lambda in &parts {
            let mut class_total = BigInt::zero();
            for i in lambda.distinct_parts() {
                let m = MarkedPartition::new(lambda.clone(), i)?;
                class_total += BigInt::from(m.class_size()) * star_count(lambda, i, r)?;
            }
            *by_cycles.entry(lambda.len()).or_default() += &class_total;
            s.eq("aggregation", || format!("class ({lambda}), r={r}"), star_count_class(lambda, r)?, class_total)?;
        }
        let mut mass = BigInt::zero();
        for k in 1..=n {
            let v = star_count_by_cycle_count(n, k, r)?;
            mass += &v;
            let expected = by_cycles.get(&k).cloned().unwrap_or_else(BigInt::zero);
            s.eq("aggregation", || format!("{k} cycles, n={n}, r={r}"), v, expected)?;
        }
        s.eq("aggregation", || format!("mass, n={n}, r={r}"), mass, BigInt::from(n - 1).pow(r))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let report = verify(4, &Guard::default()).unwrap();
        assert!(report.passed(), "{:?}", report.mismatch);
        for check in [
            "class sizes",
            "dimensions",
            "characters",
            "central idempotents",
            "Z1 idempotents",
            "generalized characters",
            "orthogonality",
            "sum lemmas",
            "polynomial identities",
            "connection coefficients",
            "star counts",
            "closed forms",
            "aggregation",
        ] {
            assert!(report.checks.get(check).copied().unwrap_or(0) > 0, "{check} never ran");
        }
    }

    #[test]
    fn guard_errors_surface() {
        let err = verify(3, &Guard::with_max_n(2)).unwrap_err();
        assert!(err.is_guard());
    }
}
