use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraError, Monomial, MultiPoly, Point, Sign, Var, VarSeq};

/// A product `±1 * monomial * prod (a - b)^e` of variable differences.
///
/// Keeping denominators factored makes common denominators a componentwise
/// maximum, so fractions never need a multivariate gcd.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Denominator {
    negative: bool,
    monomial: Monomial,
    // key (a, b) with a < b stands for (a - b)
    factors: BTreeMap<(Var, Var), u32>,
}

impl Denominator {
    pub fn one() -> Self {
        Denominator::default()
    }

    /// The factor `a - b`.
    pub fn difference(a: Var, b: Var) -> Result<Self, AlgebraError> {
        if a == b {
            return Err(AlgebraError::DivisionByZeroPoly);
        }
        let mut d = Denominator::one();
        if a < b {
            d.factors.insert((a, b), 1);
        } else {
            d.factors.insert((b, a), 1);
            d.negative = true;
        }
        Ok(d)
    }

    pub fn monomial(m: Monomial) -> Self {
        Denominator {
            monomial: m,
            ..Denominator::one()
        }
    }

    /// `Delta(X; Y)` as a denominator. Entries paired across `X` and `Y` must
    /// carry equal sign flags, so each factor stays a difference.
    pub fn delta_pair(x: &VarSeq, y: &VarSeq) -> Result<Self, AlgebraError> {
        let mut d = Denominator::one();
        for a in x.entries() {
            for b in y.entries() {
                if a.inverted || b.inverted {
                    return Err(AlgebraError::InvertedSymbolic(a.var));
                }
                if a.negated != b.negated {
                    return Err(AlgebraError::UnsupportedDenominator(format!(
                        "{}{} - {}{}",
                        if a.negated { "-" } else { "" },
                        a.var,
                        if b.negated { "-" } else { "" },
                        b.var
                    )));
                }
                let mut f = Denominator::difference(a.var, b.var)?;
                if a.negated {
                    f.negative = !f.negative;
                }
                d = d.mul(&f);
            }
        }
        Ok(d)
    }

    /// `Delta(X)` as a denominator.
    pub fn vandermonde(x: &VarSeq) -> Result<Self, AlgebraError> {
        let mut d = Denominator::one();
        let e = x.entries();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                d = d.mul(&Denominator::delta_pair(
                    &x.select(&[i]),
                    &x.select(&[j]),
                )?);
            }
        }
        Ok(d)
    }

    /// Degree in `v` as a polynomial.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.monomial.exponent(v)
            + self
                .factors
                .iter()
                .filter(|((a, b), _)| *a == v || *b == v)
                .map(|(_, e)| e)
                .sum::<u32>()
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self.monomial.factors().map(|(v, _)| v).collect();
        for (a, b) in self.factors.keys() {
            vars.push(*a);
            vars.push(*b);
        }
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.monomial.is_one() && self.factors.is_empty()
    }

    pub fn sign(&self) -> Sign {
        if self.negative {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn mul(&self, other: &Denominator) -> Denominator {
        let mut factors = self.factors.clone();
        for (k, e) in &other.factors {
            *factors.entry(*k).or_insert(0) += e;
        }
        Denominator {
            negative: self.negative != other.negative,
            monomial: self.monomial.mul(&other.monomial),
            factors,
        }
    }

    /// Least common multiple, normalized to a positive sign.
    pub fn lcm(&self, other: &Denominator) -> Denominator {
        let mut factors = self.factors.clone();
        for (k, e) in &other.factors {
            let slot = factors.entry(*k).or_insert(0);
            *slot = (*slot).max(*e);
        }
        Denominator {
            negative: false,
            monomial: self.monomial.lcm(&other.monomial),
            factors,
        }
    }

    /// `self / other` when `other` divides `self` factorwise.
    pub fn div(&self, other: &Denominator) -> Option<Denominator> {
        let mut factors = self.factors.clone();
        for (k, e) in &other.factors {
            let slot = factors.get_mut(k)?;
            if *slot < *e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                factors.remove(k);
            }
        }
        Some(Denominator {
            negative: self.negative != other.negative,
            monomial: self.monomial.div(&other.monomial)?,
            factors,
        })
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut acc = MultiPoly::term(self.monomial.clone(), BigInt::one());
        for ((a, b), e) in &self.factors {
            let f = &MultiPoly::var(*a) - &MultiPoly::var(*b);
            acc = &acc * &f.pow(*e);
        }
        self.sign().apply(acc)
    }

    pub fn eval_at(&self, point: &Point) -> Result<BigRational, AlgebraError> {
        let mut acc = MultiPoly::term(self.monomial.clone(), BigInt::one()).eval_at(point)?;
        for ((a, b), e) in &self.factors {
            let d = point.get(*a)? - point.get(*b)?;
            acc *= num_traits::pow(d, *e as usize);
        }
        Ok(self.sign().apply_rational(acc))
    }

    /// Divides `num` by this denominator, failing if the quotient is not a
    /// polynomial.
    pub fn divide(&self, num: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        let mut q = num.clone();
        for ((a, b), e) in &self.factors {
            let f = &MultiPoly::var(*a) - &MultiPoly::var(*b);
            for _ in 0..*e {
                q = q.div_exact(&f)?;
            }
        }
        if !self.monomial.is_one() {
            q = q.div_exact(&MultiPoly::term(self.monomial.clone(), BigInt::one()))?;
        }
        Ok(self.sign().apply(q))
    }
}

impl fmt::Display for Denominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        let mut parts: Vec<String> = Vec::new();
        if !self.monomial.is_one() {
            parts.push(self.monomial.to_string());
        }
        for ((a, b), e) in &self.factors {
            if *e == 1 {
                parts.push(format!("({a} - {b})"));
            } else {
                parts.push(format!("({a} - {b})^{e}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for Denominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial over a factored [`Denominator`].
#[derive(Clone, Default)]
pub struct Frac {
    pub num: MultiPoly,
    pub den: Denominator,
}

impl Frac {
    pub fn new(num: MultiPoly, den: Denominator) -> Self {
        Frac { num, den }
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        Frac {
            num,
            den: Denominator::one(),
        }
    }

    pub fn zero() -> Self {
        Frac::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Frac::from_poly(MultiPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        Frac {
            num: &self.num * &other.num,
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Frac {
        Frac {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn neg(&self) -> Frac {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Frac) -> Frac {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            return Frac {
                num: &self.num + &other.num,
                den: self.den.clone(),
            };
        }
        let l = self.den.lcm(&other.den);
        let a = l.div(&self.den).expect("lcm is a multiple").to_poly();
        let b = l.div(&other.den).expect("lcm is a multiple").to_poly();
        Frac {
            num: &(&self.num * &a) + &(&other.num * &b),
            den: l,
        }
    }

    pub fn sub(&self, other: &Frac) -> Frac {
        self.add(&other.neg())
    }

    /// Sums many fractions over one common denominator.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Frac>) -> Frac {
        let items: Vec<&Frac> = items.into_iter().collect();
        let mut l = Denominator::one();
        for f in &items {
            l = l.lcm(&f.den);
        }
        let mut num = MultiPoly::zero();
        for f in &items {
            if f.is_zero() {
                continue;
            }
            let scale = l.div(&f.den).expect("lcm is a multiple");
            if scale.is_one() {
                num += &f.num;
            } else {
                num += &(&f.num * &scale.to_poly());
            }
        }
        Frac { num, den: l }
    }

    /// The polynomial this fraction equals; fails when it is not one.
    pub fn into_poly(self) -> Result<MultiPoly, AlgebraError> {
        if self.den.is_one() {
            return Ok(self.num);
        }
        self.den.divide(&self.num)
    }

    pub fn eval_at(&self, point: &Point) -> Result<BigRational, AlgebraError> {
        let d = self.den.eval_at(point)?;
        if d.is_zero() {
            return Err(AlgebraError::SingularPoint);
        }
        Ok(self.num.eval_at(point)? / d)
    }

    /// Equality as rational functions.
    pub fn equals(&self, other: &Frac) -> bool {
        self.sub(other).num.is_zero()
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
