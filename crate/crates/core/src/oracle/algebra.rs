use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::Permutation;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// A finitely supported map `S_n → S`, i.e. an element of the group algebra.
///
/// Zero coefficients are never stored, so two elements are equal exactly
/// when their term maps are.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgebraElement<S> {
    n: usize,
    terms: BTreeMap<Permutation, S>,
}

impl<S: Scalar> GroupAlgebraElement<S> {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    /// The group element `π` itself.
    pub fn basis(p: Permutation) -> Self {
        Self::term(p, S::one())
    }

    pub fn term(p: Permutation, coefficient: S) -> Self {
        let mut out = Self::zero(p.n());
        out.add_term(p, coefficient);
        out
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, S)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (p, c) in terms {
            if p.n() != n {
                return Err(Error::SizeMismatch(n, p.n()));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    /// Sum of the given permutations with unit coefficients.
    pub fn sum_of(n: usize, perms: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        Self::from_terms(n, perms.into_iter().map(|p| (p, S::one())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of permutations with nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> S {
        self.terms.get(p).cloned().unwrap_or_else(S::zero)
    }

    /// Terms in lexicographic order of one-line images.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &S)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, p: Permutation, coefficient: S) {
        debug_assert_eq!(p.n(), self.n);
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coefficient;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, factor: &S) -> Self {
        if factor.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), c.clone() * factor.clone()))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    /// Convolution product; `(ab)(π) = Σ_{στ = π} a(σ) b(τ)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let mut acc: BTreeMap<Permutation, S> = BTreeMap::new();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                let prod = a.clone() * b.clone();
                let key = p.compose(q);
                match acc.get_mut(&key) {
                    Some(v) => *v = v.clone() + prod,
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(GroupAlgebraElement {
            n: self.n,
            terms: acc,
        })
    }

    /// `self^r` by repeated multiplication.
    pub fn pow(&self, r: u32) -> Self {
        let mut out = Self::identity(self.n);
        for _ in 0..r {
            out = out.multiply(self).unwrap();
        }
        out
    }

    /// Coefficient of `π` in `self · other`, without forming the product.
    pub fn product_coefficient(&self, other: &Self, pi: &Permutation) -> Result<S> {
        self.check_size(other)?;
        let mut acc = S::zero();
        for (sigma, a) in &self.terms {
            let tau = sigma.inverse().compose(pi);
            if let Some(b) = other.terms.get(&tau) {
                acc = acc + a.clone() * b.clone();
            }
        }
        Ok(acc)
    }

    /// Every permutation extended by a fixed point `n+1`.
    pub fn embed(&self) -> Self {
        GroupAlgebraElement {
            n: self.n + 1,
            terms: self.terms.iter().map(|(p, c)| (p.embed(), c.clone())).collect(),
        }
    }

    /// `σ g σ⁻¹`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Self {
        GroupAlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.conjugate_by(sigma), c.clone()))
                .collect(),
        }
    }

    /// Coefficient-wise conversion into another scalar type.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> GroupAlgebraElement<T> {
        let mut out = GroupAlgebraElement::zero(self.n);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c));
        }
        out
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::SizeMismatch(self.n, other.n))
        }
    }
}

impl<S: Scalar> Add for &GroupAlgebraElement<S> {
    type Output = GroupAlgebraElement<S>;

    fn add(self, rhs: Self) -> GroupAlgebraElement<S> {
        self.try_add(rhs).expect("group algebra size mismatch")
    }
}

impl<S: Scalar> Sub for &GroupAlgebraElement<S> {
    type Output = GroupAlgebraElement<S>;

    fn sub(self, rhs: Self) -> GroupAlgebraElement<S> {
        self.try_add(&-rhs).expect("group algebra size mismatch")
    }
}

impl<S: Scalar> Neg for &GroupAlgebraElement<S> {
    type Output = GroupAlgebraElement<S>;

    fn neg(self) -> GroupAlgebraElement<S> {
        self.scaled(&-S::one())
    }
}

impl<S: Scalar> Mul for &GroupAlgebraElement<S> {
    type Output = GroupAlgebraElement<S>;

    fn mul(self, rhs: Self) -> GroupAlgebraElement<S> {
        self.multiply(rhs).expect("group algebra size mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntElement, QElement, Rational};
    use num_bigint::BigInt;

    fn t(n: usize, a: usize, b: usize) -> Permutation {
        Permutation::transposition(n, a, b).unwrap()
    }

    #[test]
    fn products_of_transpositions() {
        let a = IntElement::basis(t(3, 1, 3));
        let b = IntElement::basis(t(3, 2, 3));
        let c132 = Permutation::from_cycles(3, &[&[1, 3, 2]]).unwrap();
        let c123 = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(&a * &b, IntElement::basis(c132));
        assert_eq!(&b * &a, IntElement::basis(c123));
        assert_eq!(&a * &IntElement::identity(3), a);
    }

    #[test]
    fn zero_terms_are_dropped() {
        let a = QElement::basis(t(3, 1, 2));
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(diff, QElement::zero(3));
        assert_eq!(a.scaled(&Rational::from_integer(0.into())).support_size(), 0);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let a = IntElement::identity(3);
        let b = IntElement::identity(4);
        assert_eq!(a.multiply(&b), Err(Error::SizeMismatch(3, 4)));
    }

    #[test]
    fn product_coefficient_matches_full_product() {
        let j3 = IntElement::sum_of(3, [t(3, 1, 3), t(3, 2, 3)]).unwrap();
        let sq = &j3 * &j3;
        for p in Permutation::all(3) {
            assert_eq!(j3.product_coefficient(&j3, &p).unwrap(), sq.coefficient(&p));
        }
        assert_eq!(sq.coefficient(&Permutation::identity(3)), BigInt::from(2));
    }

    #[test]
    fn works_over_floats() {
        let j3 = crate::F64Element::sum_of(3, [t(3, 1, 3), t(3, 2, 3)]).unwrap();
        let cube = j3.pow(3);
        assert_eq!(cube.coefficient(&t(3, 2, 3)), 3.0);
        assert_eq!(cube.coefficient(&t(3, 1, 2)), 2.0);
    }
}
