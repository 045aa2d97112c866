use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraError, MultiPoly, Point};

/// A variable of the global universe. Two families share one total order,
/// interleaved as `x1 < y1 < x2 < y2 < ...` by id.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub(crate) u16);

impl Var {
    /// `x_i`, 1-based.
    pub fn x(i: usize) -> Var {
        assert!(i >= 1, "variables are 1-based");
        Var(u16::try_from(2 * (i - 1)).expect("variable index overflow"))
    }

    /// `y_j`, 1-based.
    pub fn y(j: usize) -> Var {
        assert!(j >= 1, "variables are 1-based");
        Var(u16::try_from(2 * (j - 1) + 1).expect("variable index overflow"))
    }

    pub fn id(self) -> usize {
        self.0 as usize
    }

    pub fn from_id(id: usize) -> Var {
        Var(u16::try_from(id).expect("variable index overflow"))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = if self.0.is_multiple_of(2) { 'x' } else { 'y' };
        write!(f, "{}{}", family, self.0 / 2 + 1)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One entry of a [`VarSeq`]: the variable together with its sign flag and its
/// evaluation-time inversion flag.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SeqVar {
    pub var: Var,
    pub negated: bool,
    pub inverted: bool,
}

impl SeqVar {
    /// `±v` as a polynomial.
    pub fn to_poly(self) -> Result<MultiPoly, AlgebraError> {
        if self.inverted {
            return Err(AlgebraError::InvertedSymbolic(self.var));
        }
        let p = MultiPoly::var(self.var);
        Ok(if self.negated { -p } else { p })
    }

    pub fn value(self, point: &Point) -> Result<BigRational, AlgebraError> {
        let mut v = point.get(self.var)?.clone();
        if self.inverted {
            if v.is_zero() {
                return Err(AlgebraError::DivisionByZero(self.var));
            }
            v = BigRational::one() / v;
        }
        if self.negated {
            v = -v;
        }
        Ok(v)
    }
}

/// An ordered sequence of pairwise distinct variables.
///
/// Subsequences keep the relative order, and unions are concatenations with
/// the left operand first. All signs of `Delta(S; T)` style products follow
/// from this single convention.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VarSeq {
    entries: Vec<SeqVar>,
}

impl VarSeq {
    pub fn empty() -> Self {
        VarSeq::default()
    }

    pub fn new(vars: Vec<Var>) -> Result<Self, AlgebraError> {
        Self::from_entries(
            vars.into_iter()
                .map(|var| SeqVar {
                    var,
                    negated: false,
                    inverted: false,
                })
                .collect(),
        )
    }

    pub fn from_entries(entries: Vec<SeqVar>) -> Result<Self, AlgebraError> {
        for (i, a) in entries.iter().enumerate() {
            if entries[..i].iter().any(|b| b.var == a.var) {
                return Err(AlgebraError::DuplicateVariable(a.var));
            }
        }
        Ok(VarSeq { entries })
    }

    /// `(x_1, ..., x_n)`.
    pub fn xs(n: usize) -> Self {
        Self::xs_from(1, n)
    }

    /// `(x_first, ..., x_{first + n - 1})`.
    pub fn xs_from(first: usize, n: usize) -> Self {
        VarSeq::new((first..first + n).map(Var::x).collect()).expect("distinct")
    }

    /// `(y_1, ..., y_m)`.
    pub fn ys(m: usize) -> Self {
        Self::ys_from(1, m)
    }

    pub fn ys_from(first: usize, m: usize) -> Self {
        VarSeq::new((first..first + m).map(Var::y).collect()).expect("distinct")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[SeqVar] {
        &self.entries
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.entries.iter().map(|e| e.var)
    }

    /// `-X`: flips every sign flag.
    pub fn negated(&self) -> Self {
        VarSeq {
            entries: self
                .entries
                .iter()
                .map(|e| SeqVar {
                    negated: !e.negated,
                    ..*e
                })
                .collect(),
        }
    }

    /// `X^{-1}`: flips every inversion flag.
    pub fn inverted(&self) -> Self {
        VarSeq {
            entries: self
                .entries
                .iter()
                .map(|e| SeqVar {
                    inverted: !e.inverted,
                    ..*e
                })
                .collect(),
        }
    }

    /// The same variables with every flag cleared.
    pub fn plain(&self) -> Self {
        VarSeq {
            entries: self
                .entries
                .iter()
                .map(|e| SeqVar {
                    var: e.var,
                    negated: false,
                    inverted: false,
                })
                .collect(),
        }
    }

    pub fn has_inversions(&self) -> bool {
        self.entries.iter().any(|e| e.inverted)
    }

    pub fn negated_vars(&self) -> Vec<Var> {
        self.entries.iter().filter(|e| e.negated).map(|e| e.var).collect()
    }

    /// The subsequence at 0-based positions `idx` (strictly increasing).
    pub fn select(&self, idx: &[usize]) -> Self {
        VarSeq {
            entries: idx.iter().map(|&i| self.entries[i]).collect(),
        }
    }

    /// `self ∪ other` as a concatenation; fails on a repeated variable.
    pub fn concat(&self, other: &VarSeq) -> Result<Self, AlgebraError> {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self::from_entries(entries)
    }

    /// All order-preserving splits into a subsequence of length `size` and its
    /// complement, together with the 0-based positions of the first part.
    /// Splits are listed in lexicographic order of those positions.
    pub fn splits(&self, size: usize) -> Vec<Split> {
        combinations(self.len(), size)
            .into_iter()
            .map(|chosen| {
                let rest: Vec<usize> = (0..self.len()).filter(|i| !chosen.contains(i)).collect();
                Split {
                    first: self.select(&chosen),
                    second: self.select(&rest),
                    positions: chosen,
                }
            })
            .collect()
    }

    /// Values of the entries at a point, with sign and inversion flags applied.
    pub fn values(&self, point: &Point) -> Result<Vec<BigRational>, AlgebraError> {
        self.entries.iter().map(|e| e.value(point)).collect()
    }

    pub fn to_polys(&self) -> Result<Vec<MultiPoly>, AlgebraError> {
        self.entries.iter().map(|e| e.to_poly()).collect()
    }
}

/// A split of a sequence into an order-preserving subsequence and its complement.
#[derive(Clone, Debug)]
pub struct Split {
    pub first: VarSeq,
    pub second: VarSeq,
    pub positions: Vec<usize>,
}

/// All `size`-subsets of `0..n`, as increasing vectors in lexicographic order.
pub fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < left {
                break;
            }
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size <= n {
        rec(0, n, size, &mut Vec::new(), &mut out);
    }
    out
}

impl fmt::Display for VarSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if e.negated {
                write!(f, "-")?;
            }
            write!(f, "{}", e.var)?;
            if e.inverted {
                write!(f, "^-1")?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for VarSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
