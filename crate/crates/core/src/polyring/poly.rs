use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::{AlgebraError, Point, Var};

/// Exponent vector indexed by variable id, trailing zeros trimmed. The
/// derived order is lexicographic with `x1` most significant, which is a
/// monomial order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[u16; 12]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, exp: u32) -> Self {
        let mut m = Monomial::one();
        m.set(v, exp);
        m
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.get(v.id()).copied().unwrap_or(0) as u32
    }

    pub fn set(&mut self, v: Var, exp: u32) {
        let exp = u16::try_from(exp).expect("exponent overflow");
        if v.id() >= self.0.len() {
            if exp == 0 {
                return;
            }
            self.0.resize(v.id() + 1, 0);
        }
        self.0[v.id()] = exp;
        self.trim();
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// `(var, exponent)` pairs with positive exponent, in variable order.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var::from_id(i), e as u32))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (o, &s) in out.iter_mut().zip(short.0.iter()) {
            *o = o.checked_add(s).expect("exponent overflow");
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming [`Monomial::divides`].
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = other.0.clone();
        for (o, &s) in out.iter_mut().zip(self.0.iter()) {
            *o -= s;
        }
        let mut m = Monomial(out);
        m.trim();
        m
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let mut out: SmallVec<[u16; 12]> = SmallVec::with_capacity(len);
        for i in 0..len {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            out.push(a.max(b));
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| other.quotient_of(self))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.factors() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so structural equality
/// is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(), c.into())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Leading term in lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Whether every monomial has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    /// Variables that occur with positive exponent.
    pub fn variables(&self) -> Vec<Var> {
        let mut ids: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.factors() {
                if !ids.contains(&v) {
                    ids.push(v);
                }
            }
        }
        ids.sort();
        ids
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `v -> -v` for every variable in `vars`.
    pub fn negate_vars(&self, vars: &[Var]) -> MultiPoly {
        if vars.is_empty() {
            return self.clone();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let odd = vars.iter().map(|&v| m.exponent(v)).sum::<u32>() % 2 == 1;
                    (m.clone(), if odd { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Renames variables through `map` (which must be injective on the
    /// variables of `self`).
    pub fn rename(&self, map: impl Fn(Var) -> Var) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut out = Monomial::one();
            for (v, e) in m.factors() {
                let w = map(v);
                let prev = out.exponent(w);
                out.set(w, prev + e);
            }
            (out, c.clone())
        }))
    }

    /// The transform `v^a -> v^(shift - a)` on the given variables, i.e.
    /// `e(V)^shift * f(V^{-1})`. Fails if some exponent exceeds `shift`.
    pub fn reciprocal(&self, vars: &[Var], shift: u32) -> Result<MultiPoly, AlgebraError> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            for &v in vars {
                let a = m.exponent(v);
                if a > shift {
                    return Err(AlgebraError::ReciprocalDegree { var: v, degree: a, shift });
                }
                nm.set(v, shift - a);
            }
            out.add_term(nm, c.clone());
        }
        Ok(out)
    }

    /// Exact rational evaluation; every occurring variable must be assigned.
    pub fn eval_at(&self, point: &Point) -> Result<BigRational, AlgebraError> {
        let mut total = BigRational::zero();
        let mut cache: HashMap<(Var, u32), BigRational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut val = BigRational::from_integer(c.clone());
            for (v, e) in m.factors() {
                let pw = match cache.get(&(v, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = num_traits::pow(point.get(v)?.clone(), e as usize);
                        cache.insert((v, e), p.clone());
                        p
                    }
                };
                val *= pw;
            }
            total += val;
        }
        Ok(total)
    }

    /// Integer evaluation at an integer point.
    pub fn eval_int(&self, value: impl Fn(Var) -> BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for (v, e) in m.factors() {
                val *= num_traits::pow(value(v), e as usize);
            }
            total += val;
        }
        total
    }

    /// Exact division; fails with the remainder's leading term when `divisor`
    /// does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        let (lm, lc) = divisor.leading().ok_or(AlgebraError::DivisionByZeroPoly)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        if divisor.terms.len() == 1 {
            // monomial divisor
            let mut out = MultiPoly::zero();
            for (m, c) in &self.terms {
                let (qc, r) = c.div_rem(&lc);
                match m.div(&lm) {
                    Some(qm) if r.is_zero() => {
                        out.terms.insert(qm, qc);
                    }
                    _ => {
                        return Err(AlgebraError::NotExact {
                            remainder: MultiPoly::term(m.clone(), c.clone()).to_string(),
                        })
                    }
                }
            }
            return Ok(out);
        }
        let rest: Vec<(Monomial, BigInt)> = divisor
            .terms
            .iter()
            .rev()
            .skip(1)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.terms.pop_last() {
            let Some(qm) = m.div(&lm) else {
                return Err(AlgebraError::NotExact {
                    remainder: MultiPoly::term(m, c).to_string(),
                });
            };
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return Err(AlgebraError::NotExact {
                    remainder: MultiPoly::term(m, c).to_string(),
                });
            }
            for (dm, dc) in &rest {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.terms.insert(qm, qc);
        }
        Ok(quot)
    }

    /// Greatest common divisor of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        self.is_constant().then(|| self.coefficient(&Monomial::one()))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self -= &rhs;
        self
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let (a, b) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if b.terms.len() == 1 {
            let (m, c) = b.terms.iter().next().expect("one term");
            return a.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(a.terms.len() * 2);
        for (mb, cb) in &b.terms {
            for (ma, ca) in &a.terms {
                let m = ma.mul(mb);
                let prod = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        MultiPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

/// Descending lexicographic order, e.g. `x1^2*y1 - 2*x1*x2 + 3`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(Var::x(i))
    }
    fn y(i: usize) -> MultiPoly {
        MultiPoly::var(Var::y(i))
    }

    #[test]
    fn canonical_form_equality() {
        let f = (&x(1) + &y(1)).pow(2);
        let g = &(&(&x(1) * &x(1)) + &(&x(1) * &y(1)).scale(&BigInt::from(2))) + &(&y(1) * &y(1));
        assert_eq!(f, g);
        assert!((&f - &g).is_zero());
    }

    #[test]
    fn display_order() {
        let f = &(&(&x(1).pow(2) * &y(1)) - &(&x(1) * &x(2)).scale(&BigInt::from(2))) + &MultiPoly::constant(3);
        assert_eq!(f.to_string(), "x1^2*y1 - 2*x1*x2 + 3");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!((-x(1)).to_string(), "-x1");
    }

    #[test]
    fn exact_division() {
        let f = &(&x(1) - &x(2)) * &(&x(1) + &y(1)).pow(3);
        let q = f.div_exact(&(&x(1) - &x(2))).unwrap();
        assert_eq!(q, (&x(1) + &y(1)).pow(3));
        assert!(f.div_exact(&(&x(1) - &y(1))).is_err());
        let mono = MultiPoly::term(Monomial::var_pow(Var::x(1), 2), BigInt::from(3));
        let g = &mono * &(&x(2) + &y(2));
        assert_eq!(g.div_exact(&mono).unwrap(), &x(2) + &y(2));
        assert!(x(2).div_exact(&mono).is_err());
        assert!(f.div_exact(&MultiPoly::zero()).is_err());
    }

    #[test]
    fn negation_and_reciprocal() {
        let f = &x(1).pow(2) + &(&x(1) * &y(1));
        let g = f.negate_vars(&[Var::x(1)]);
        assert_eq!(g, &x(1).pow(2) - &(&x(1) * &y(1)));
        let r = (&x(1) + &x(2)).reciprocal(&[Var::x(1), Var::x(2)], 1).unwrap();
        assert_eq!(r, &x(2) + &x(1));
        assert!(x(1).pow(3).reciprocal(&[Var::x(1)], 2).is_err());
    }

    #[test]
    fn evaluation() {
        let f = &x(1) - &x(2);
        let pt = Point::from_pairs([
            (Var::x(1), BigRational::new(1.into(), 2.into())),
            (Var::x(2), BigRational::new(1.into(), 3.into())),
        ]);
        assert_eq!(f.eval_at(&pt).unwrap(), BigRational::new(1.into(), 6.into()));
        assert!(y(1).eval_at(&pt).is_err());
    }

    #[test]
    fn degrees() {
        let f = &(&x(1).pow(3) * &y(2)) + &y(2).pow(2);
        assert_eq!(f.total_degree(), Some(4));
        assert_eq!(f.degree_in(Var::y(2)), 2);
        assert_eq!(f.variables(), vec![Var::x(1), Var::y(2)]);
        assert!(!f.is_homogeneous_of_degree(4));
    }
}
