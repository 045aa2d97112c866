//! Signed sums of products of Schur and Littlewood-Schur values over
//! factored denominators, compared exactly or on a certified grid.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::Mode;
use crate::littlewood_schur::{ls_combinatorial, ls_eval};
use crate::partitions::Partition;
use crate::polyring::{AlgebraError, CertifiedGrid, Denominator, Frac, MultiPoly, Point, Sign, Var, VarSeq};
use crate::schur::{schur, schur_eval};

#[derive(Clone, Debug)]
pub enum Factor {
    Schur(Partition, VarSeq),
    /// `LS_lambda(X; Y)`, flags included.
    Ls(Partition, VarSeq, VarSeq),
    Poly(MultiPoly),
}

impl Factor {
    fn to_poly(&self) -> Result<MultiPoly, AlgebraError> {
        match self {
            Factor::Schur(l, x) => schur(l, x),
            Factor::Ls(l, x, y) => ls_combinatorial(l, x, y),
            Factor::Poly(p) => Ok(p.clone()),
        }
    }

    fn eval(&self, p: &Point) -> Result<BigRational, AlgebraError> {
        match self {
            Factor::Schur(l, x) => schur_eval(l, x, p),
            Factor::Ls(l, x, y) => ls_eval(l, x, y, p),
            Factor::Poly(q) => q.eval_at(p),
        }
    }

    fn degree_in(&self, v: Var) -> u32 {
        let has = |s: &VarSeq| s.vars().any(|w| w == v);
        match self {
            Factor::Schur(l, x) if has(x) => l.part(1) as u32,
            Factor::Ls(l, x, _) if has(x) => l.part(1) as u32,
            Factor::Ls(l, _, y) if has(y) => l.length() as u32,
            Factor::Poly(q) => q.degree_in(v),
            _ => 0,
        }
    }

    fn variables(&self, out: &mut Vec<Var>) {
        match self {
            Factor::Schur(_, x) => out.extend(x.vars()),
            Factor::Ls(_, x, y) => {
                out.extend(x.vars());
                out.extend(y.vars());
            }
            Factor::Poly(q) => out.extend(q.variables()),
        }
    }
}

/// `sign * prod(factors) / den`.
#[derive(Clone, Debug)]
pub struct Term {
    pub sign: Sign,
    pub factors: Vec<Factor>,
    pub den: Denominator,
}

impl Term {
    pub fn new(sign: Sign) -> Self {
        Term {
            sign,
            factors: Vec::new(),
            den: Denominator::one(),
        }
    }

    pub fn times(mut self, f: Factor) -> Self {
        self.factors.push(f);
        self
    }

    pub fn over(mut self, d: Denominator) -> Self {
        self.den = self.den.mul(&d);
        self
    }

    pub fn to_frac(&self) -> Result<Frac, AlgebraError> {
        let mut acc = MultiPoly::one();
        for f in &self.factors {
            let p = f.to_poly()?;
            if p.is_zero() {
                return Ok(Frac::zero());
            }
            acc = &acc * &p;
        }
        Ok(Frac::new(self.sign.apply(acc), self.den.clone()))
    }

    pub fn eval(&self, p: &Point) -> Result<BigRational, AlgebraError> {
        let mut acc = BigRational::from_integer(1.into());
        for f in &self.factors {
            acc *= f.eval(p)?;
            if acc.is_zero() {
                return Ok(acc);
            }
        }
        let d = self.den.eval_at(p)?;
        if d.is_zero() {
            return Err(AlgebraError::SingularPoint);
        }
        Ok(self.sign.apply_rational(acc / d))
    }
}

/// `lhs - rhs` as an exact polynomial; fails if it is not one.
pub fn difference(lhs: &[Term], rhs: &[Term]) -> Result<Frac, AlgebraError> {
    let l: Vec<Frac> = lhs.iter().map(Term::to_frac).collect::<Result<_, _>>()?;
    let r: Vec<Frac> = rhs.iter().map(Term::to_frac).collect::<Result<_, _>>()?;
    Ok(Frac::sum(&l).sub(&Frac::sum(&r)))
}

/// Per-variable degree bounds for `D * (lhs - rhs)`, where `D` is the lcm of
/// all term denominators. This is the polynomial the grid certifies.
pub fn grid_bounds(terms: &[&Term]) -> Vec<(Var, u32)> {
    let mut vars = Vec::new();
    let mut lcm = Denominator::one();
    for t in terms {
        for f in &t.factors {
            f.variables(&mut vars);
        }
        vars.extend(t.den.variables());
        lcm = lcm.lcm(&t.den);
    }
    vars.sort_unstable();
    vars.dedup();
    vars.into_iter()
        .map(|v| {
            let bound = terms
                .iter()
                .map(|t| {
                    let num: u32 = t.factors.iter().map(|f| f.degree_in(v)).sum();
                    num + lcm.degree_in(v) - t.den.degree_in(v)
                })
                .max()
                .unwrap_or(0);
            (v, bound)
        })
        .collect()
}

/// Compares the two sides. `Ok(None)` means equal; otherwise the witness is
/// the difference (symbolic) or the first point where the sides differ.
pub fn compare(lhs: &[Term], rhs: &[Term], mode: Mode) -> Result<Option<String>, AlgebraError> {
    match mode {
        Mode::Symbolic => {
            let diff = difference(lhs, rhs)?;
            if diff.is_zero() {
                return Ok(None);
            }
            Ok(Some(match diff.clone().into_poly() {
                Ok(p) => p.to_string(),
                Err(_) => diff.to_string(),
            }))
        }
        Mode::Grid => {
            let all: Vec<&Term> = lhs.iter().chain(rhs).collect();
            let grid = CertifiedGrid::new(&grid_bounds(&all));
            for p in grid.points() {
                let mut total = BigRational::zero();
                for t in lhs {
                    total += t.eval(&p)?;
                }
                for t in rhs {
                    total -= t.eval(&p)?;
                }
                if !total.is_zero() {
                    return Ok(Some(format!("sides differ by {total} at {p}")));
                }
            }
            Ok(None)
        }
    }
}

/// Terms keyed for a term-by-term comparison of two expansions.
pub type KeyedTerms = BTreeMap<String, Term>;

/// Whether two keyed expansions have the same keys and, key by key, the
/// same sign, factors and denominator.
pub fn same_terms(a: &KeyedTerms, b: &KeyedTerms) -> Result<Option<String>, AlgebraError> {
    for (k, t) in a {
        let Some(u) = b.get(k) else {
            return Ok(Some(format!("term {k} missing from the second expansion")));
        };
        if !t.to_frac()?.equals(&u.to_frac()?) {
            return Ok(Some(format!("term {k} differs")));
        }
    }
    if let Some(k) = b.keys().find(|k| !a.contains_key(*k)) {
        return Ok(Some(format!("term {k} missing from the first expansion")));
    }
    Ok(None)
}
