//! Almost symmetric polynomials: polynomials in `x₂, …, x_n` that are
//! symmetric in `x₂, …, x_{n-1}`, written over power sums and elementary
//! symmetric polynomials of the inner variables together with `x_n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partitions::binomial;
use crate::tableaux::{contents, elementary_symmetric};
use crate::{Error, MarkedPartition, Partition, Rational, Result};

/// Which variables a symmetric generator runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarRange {
    /// `x₂, …, x_{n-1}`.
    Inner,
    /// `x₂, …, x_n`.
    Full,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AlmostSymmetricPoly {
    Const(Rational),
    /// `x_n`.
    XN,
    /// `p_k` over the range.
    PowerSum(u32, VarRange),
    /// `e_k` over the range.
    Elementary(u32, VarRange),
    Add(Box<AlmostSymmetricPoly>, Box<AlmostSymmetricPoly>),
    Mul(Box<AlmostSymmetricPoly>, Box<AlmostSymmetricPoly>),
    Scale(Rational, Box<AlmostSymmetricPoly>),
    Pow(Box<AlmostSymmetricPoly>, u32),
}

use AlmostSymmetricPoly as Asf;

impl AlmostSymmetricPoly {
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Asf::Const(BigRational::from_integer(c.into()))
    }

    pub fn pow(self, k: u32) -> Self {
        Asf::Pow(Box::new(self), k)
    }

    pub fn scale(self, c: Rational) -> Self {
        Asf::Scale(c, Box::new(self))
    }

    /// Evaluates with the inner variables set to `inner` (any order) and
    /// `x_n` set to `xn`.
    pub fn evaluate(&self, inner: &[i64], xn: i64) -> Rational {
        let full: Vec<i64> = inner.iter().copied().chain(std::iter::once(xn)).collect();
        self.eval_with(inner, &full, xn)
    }

    fn eval_with(&self, inner: &[i64], full: &[i64], xn: i64) -> Rational {
        let vars = |r: &VarRange| match r {
            VarRange::Inner => inner,
            VarRange::Full => full,
        };
        match self {
            Asf::Const(c) => c.clone(),
            Asf::XN => BigRational::from_integer(xn.into()),
            Asf::PowerSum(k, r) => {
                let s: BigInt = vars(r).iter().map(|&v| BigInt::from(v).pow(*k)).sum();
                BigRational::from_integer(s)
            }
            Asf::Elementary(k, r) => {
                let e = elementary_symmetric(vars(r));
                BigRational::from_integer(e.get(*k as usize).cloned().unwrap_or_else(BigInt::zero))
            }
            Asf::Add(a, b) => a.eval_with(inner, full, xn) + b.eval_with(inner, full, xn),
            Asf::Mul(a, b) => a.eval_with(inner, full, xn) * b.eval_with(inner, full, xn),
            Asf::Scale(c, a) => c * a.eval_with(inner, full, xn),
            Asf::Pow(a, k) => num_traits::pow(a.eval_with(inner, full, xn), *k as usize),
        }
    }
}

impl Add for Asf {
    type Output = Asf;
    fn add(self, rhs: Asf) -> Asf {
        Asf::Add(Box::new(self), Box::new(rhs))
    }
}

impl Mul for Asf {
    type Output = Asf;
    fn mul(self, rhs: Asf) -> Asf {
        Asf::Mul(Box::new(self), Box::new(rhs))
    }
}

impl Neg for Asf {
    type Output = Asf;
    fn neg(self) -> Asf {
        self.scale(-Rational::one())
    }
}

impl Sub for Asf {
    type Output = Asf;
    fn sub(self, rhs: Asf) -> Asf {
        self + (-rhs)
    }
}

impl fmt::Display for AlmostSymmetricPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = |r: &VarRange| match r {
            VarRange::Inner => "J2..J(n-1)",
            VarRange::Full => "J2..Jn",
        };
        match self {
            Asf::Const(c) => write!(f, "{c}"),
            Asf::XN => write!(f, "Jn"),
            Asf::PowerSum(k, r) => write!(f, "p{k}({})", range(r)),
            Asf::Elementary(k, r) => write!(f, "e{k}({})", range(r)),
            Asf::Add(a, b) => write!(f, "({a} + {b})"),
            Asf::Mul(a, b) => write!(f, "{a}*{b}"),
            Asf::Scale(c, a) => write!(f, "{c}*{a}"),
            Asf::Pow(a, k) => write!(f, "{a}^{k}"),
        }
    }
}

/// The rows expressing standard basis elements `K_{λ,i}` as almost symmetric
/// polynomials in Jucys–Murphy elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Table1Row {
    /// `(2,1^{n-2}), 2`
    Transposition,
    /// `(2,1^{n-2}), 1`
    TranspositionFixedN,
    /// `(3,1^{n-3}), 3`
    ThreeCycle,
    /// `(2,2,1^{n-4}), 2`
    DoubleTransposition,
    /// `(3,1^{n-3}), 1`
    ThreeCycleFixedN,
    /// `(2,2,1^{n-4}), 1`
    DoubleTranspositionFixedN,
    /// `(n), n`
    FullCycle,
    /// `(n-1,1), 1`
    LongCycleFixedN,
}

impl Table1Row {
    pub const ALL: [Table1Row; 8] = [
        Table1Row::Transposition,
        Table1Row::TranspositionFixedN,
        Table1Row::ThreeCycle,
        Table1Row::DoubleTransposition,
        Table1Row::ThreeCycleFixedN,
        Table1Row::DoubleTranspositionFixedN,
        Table1Row::FullCycle,
        Table1Row::LongCycleFixedN,
    ];

    /// Smallest `n` at which the row's marked partition exists.
    pub fn min_n(self) -> usize {
        match self {
            Table1Row::Transposition => 2,
            Table1Row::TranspositionFixedN | Table1Row::ThreeCycle => 3,
            Table1Row::DoubleTransposition | Table1Row::ThreeCycleFixedN => 4,
            Table1Row::DoubleTranspositionFixedN => 5,
            Table1Row::FullCycle => 1,
            Table1Row::LongCycleFixedN => 2,
        }
    }

    /// The marked partition this row describes at size `n`.
    pub fn marked(self, n: usize) -> Option<MarkedPartition> {
        if n < self.min_n() {
            return None;
        }
        let with_ones = |head: &[usize], mark: usize| {
            let mut parts = head.to_vec();
            parts.extend(std::iter::repeat(1).take(n - head.iter().sum::<usize>()));
            MarkedPartition::from_parts(&parts, mark)
        };
        Some(match self {
            Table1Row::Transposition => with_ones(&[2], 2),
            Table1Row::TranspositionFixedN => with_ones(&[2], 1),
            Table1Row::ThreeCycle => with_ones(&[3], 3),
            Table1Row::DoubleTransposition => with_ones(&[2, 2], 2),
            Table1Row::ThreeCycleFixedN => with_ones(&[3], 1),
            Table1Row::DoubleTranspositionFixedN => with_ones(&[2, 2], 1),
            Table1Row::FullCycle => MarkedPartition::from_parts(&[n], n),
            Table1Row::LongCycleFixedN => with_ones(&[n - 1], 1),
        })
    }

    /// First row (in table order) describing `(λ, i)`.
    pub fn lookup(marked: &MarkedPartition) -> Option<Table1Row> {
        Self::ALL
            .into_iter()
            .find(|row| row.marked(marked.n()).as_ref() == Some(marked))
    }

    /// The polynomial `f` with `f(J₂, …, J_n) = K_{λ,i}` at size `n`.
    pub fn poly(self, n: usize) -> Option<AlmostSymmetricPoly> {
        self.marked(n)?;
        let n1 = Asf::constant(n as i64 - 1);
        let c2 = || Asf::Const(BigRational::from_integer(binomial(n - 1, 2).into()));
        let p1 = || Asf::PowerSum(1, VarRange::Inner);
        let p2 = || Asf::PowerSum(2, VarRange::Inner);
        Some(match self {
            Table1Row::Transposition => Asf::XN,
            Table1Row::TranspositionFixedN => p1(),
            Table1Row::ThreeCycle => Asf::XN.pow(2) - n1,
            Table1Row::DoubleTransposition => p1() * Asf::XN - Asf::XN.pow(2) + n1,
            Table1Row::ThreeCycleFixedN => p2() - c2(),
            Table1Row::DoubleTranspositionFixedN => {
                let half = BigRational::new(1.into(), 2.into());
                (p1().pow(2) - p2().scale(BigRational::from_integer(3.into()))).scale(half) + c2()
            }
            Table1Row::FullCycle => Asf::Elementary(n as u32 - 1, VarRange::Full),
            Table1Row::LongCycleFixedN => Asf::Elementary(n as u32 - 2, VarRange::Inner),
        })
    }
}

/// The almost symmetric polynomial for `K_{λ,i}`, when `(λ, i)` matches one
/// of the tabulated patterns.
pub fn table1_poly(shape: &Partition, i: usize) -> Result<AlmostSymmetricPoly> {
    let marked = MarkedPartition::new(shape.clone(), i)?;
    Table1Row::lookup(&marked)
        .and_then(|row| row.poly(marked.n()))
        .ok_or_else(|| Error::UnsupportedPattern(format!("K_{{{marked}}}")))
}

/// Inner content multiset for `(μ, j)`: the contents of `j₋(μ)` with one
/// `0` (the cell holding the symbol 1) removed.
pub fn inner_contents(mu: &Partition, j: usize) -> Result<Vec<i64>> {
    let smaller = mu.decrement_part(j)?;
    let mut cs = contents(&smaller);
    if let Some(pos) = cs.iter().position(|&c| c == 0) {
        cs.remove(pos);
    }
    Ok(cs)
}

/// `f(𝐜_{j₋(μ)}, c_{μ,j})`: the eigenvalue of `f(J₂, …, J_n)` on `Γ^{μ,j}`.
pub fn evaluate_asf(f: &AlmostSymmetricPoly, mu: &Partition, j: usize) -> Result<Rational> {
    let inner = inner_contents(mu, j)?;
    let xn = mu.marked_content(j)?;
    Ok(f.evaluate(&inner, xn))
}
