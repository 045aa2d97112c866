//! Exact polynomial arithmetic over the integers: variables and ordered
//! variable sequences, sparse polynomials, fractions with factored
//! denominators, determinants and rational evaluation.

mod frac;
mod grid;
mod matrix;
mod parse;
mod poly;
mod var;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use frac::{Denominator, Frac};
pub use grid::CertifiedGrid;
pub use matrix::{det_frac, permutation_sign, DetRoute, ExactDiv, FracEntry, Matrix, Ring};
pub use parse::ParsePolyError;
pub use poly::{Monomial, MultiPoly};
pub use var::{combinations, SeqVar, Split, Var, VarSeq};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("variable {0} repeated in sequence")]
    DuplicateVariable(Var),
    #[error("variable {0} has no value at this point")]
    MissingVariable(Var),
    #[error("inverted variable {0} has no polynomial form")]
    InvertedSymbolic(Var),
    #[error("cannot invert {0} at zero")]
    DivisionByZero(Var),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("division is not exact (remainder term {remainder})")]
    NotExact { remainder: String },
    #[error("exponent {degree} of {var} exceeds reciprocal shift {shift}")]
    ReciprocalDegree { var: Var, degree: u32, shift: u32 },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("index set {0:?} is not a strictly increasing subset of the rows")]
    BadIndexSet(Vec<usize>),
    #[error("denominator factor {0} is not a difference of variables")]
    UnsupportedDenominator(String),
    #[error("evaluation point makes a denominator vanish")]
    SingularPoint,
}

/// A point of evaluation: rational values for finitely many variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Point {
    values: BTreeMap<Var, BigRational>,
}

impl Point {
    pub fn new() -> Self {
        Point::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, BigRational)>) -> Self {
        Point {
            values: pairs.into_iter().collect(),
        }
    }

    pub fn set(&mut self, v: Var, value: BigRational) {
        self.values.insert(v, value);
    }

    pub fn get(&self, v: Var) -> Result<&BigRational, AlgebraError> {
        self.values.get(&v).ok_or(AlgebraError::MissingVariable(v))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &BigRational)> {
        self.values.iter()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, r)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}={r}")?;
        }
        write!(f, "}}")
    }
}

/// A sign `±1`. Serialized as the integer `1` or `-1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn pow_neg_one(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn apply(self, p: MultiPoly) -> MultiPoly {
        match self {
            Sign::Plus => p,
            Sign::Minus => -p,
        }
    }

    pub fn apply_rational(self, r: BigRational) -> BigRational {
        match self {
            Sign::Plus => r,
            Sign::Minus => -r,
        }
    }

    pub fn apply_int(self, r: num_bigint::BigInt) -> num_bigint::BigInt {
        match self {
            Sign::Plus => r,
            Sign::Minus => -r,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i64())
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.to_i64())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match i64::deserialize(d)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(serde::de::Error::custom(format!("sign must be 1 or -1, got {other}"))),
        }
    }
}

/// Sign of the permutation sorting `a` into decreasing order: the parity of
/// the number of pairs `i < j` with `a_i < a_j`. `None` if an entry repeats.
pub fn sort_sign(a: &[i64]) -> Option<Sign> {
    let mut inversions = 0i64;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] == a[j] {
                return None;
            }
            if a[i] < a[j] {
                inversions += 1;
            }
        }
    }
    Some(Sign::pow_neg_one(inversions))
}

/// `Delta(X) = prod_{i<j} (x_i - x_j)`, with sign flags applied.
pub fn vandermonde(x: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    let polys = x.to_polys()?;
    let mut acc = MultiPoly::one();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            acc = &acc * &(&polys[i] - &polys[j]);
        }
    }
    Ok(acc)
}

/// `Delta(X; Y) = prod_{x in X, y in Y} (x - y)`.
pub fn delta_pair(x: &VarSeq, y: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    let xs = x.to_polys()?;
    let ys = y.to_polys()?;
    let mut acc = MultiPoly::one();
    for a in &xs {
        for b in &ys {
            acc = &acc * &(a - b);
        }
    }
    Ok(acc)
}

/// Elementary symmetric polynomial `e_r(X)`.
pub fn elem_sym(r: usize, x: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    let xs = x.to_polys()?;
    // e_0..e_r by the recurrence over variables
    let mut e = vec![MultiPoly::zero(); r + 1];
    e[0] = MultiPoly::one();
    for v in &xs {
        for k in (1..=r).rev() {
            let add = &e[k - 1] * v;
            e[k] += &add;
        }
    }
    Ok(e.swap_remove(r))
}

/// `e(X) = prod_{x in X} x`.
pub fn e_prod(x: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    let mut acc = MultiPoly::one();
    for p in x.to_polys()? {
        acc = &acc * &p;
    }
    Ok(acc)
}

/// Rational value of `Delta(X)` at a point.
pub fn vandermonde_eval(x: &VarSeq, point: &Point) -> Result<BigRational, AlgebraError> {
    let v = x.values(point)?;
    let mut acc = BigRational::from_integer(1.into());
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            acc *= &v[i] - &v[j];
        }
    }
    Ok(acc)
}

/// Rational value of `Delta(X; Y)` at a point.
pub fn delta_pair_eval(x: &VarSeq, y: &VarSeq, point: &Point) -> Result<BigRational, AlgebraError> {
    let xv = x.values(point)?;
    let yv = y.values(point)?;
    let mut acc = BigRational::from_integer(1.into());
    for a in &xv {
        for b in &yv {
            acc *= a - b;
        }
    }
    Ok(acc)
}

/// Rational value of `e(X)` at a point.
pub fn e_prod_eval(x: &VarSeq, point: &Point) -> Result<BigRational, AlgebraError> {
    let mut acc = BigRational::from_integer(1.into());
    for v in x.values(point)? {
        acc *= v;
    }
    Ok(acc)
}
