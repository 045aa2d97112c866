use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{AlgebraError, Denominator, Frac, MultiPoly, Sign};

/// The commutative ring operations determinants need.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

/// Rings with an exact division used by fraction-free elimination.
pub trait ExactDiv: Ring {
    /// `self / other`, assuming the quotient exists in the ring.
    fn div_exact(&self, other: &Self) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        debug_assert!(Zero::is_zero(&r), "inexact integer division");
        q
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl ExactDiv for BigRational {
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl ExactDiv for MultiPoly {
    fn div_exact(&self, o: &Self) -> Self {
        MultiPoly::div_exact(self, o).expect("fraction-free elimination divides exactly")
    }
}

/// Which determinant algorithm to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetRoute {
    /// Cofactor expansion, memoized over column subsets.
    Cofactor,
    /// Fraction-free Gaussian elimination.
    Bareiss,
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// The submatrix on the given row and column positions (0-based).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn check_square(&self) -> Result<usize, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Cofactor expansion along successive rows, sharing minors between
    /// branches (one minor per column subset).
    pub fn det_cofactor(&self) -> Result<T, AlgebraError> {
        let n = self.check_square()?;
        if n == 0 {
            return Ok(T::one());
        }
        assert!(n <= 24, "cofactor route limited to 24x24");
        let full = 1usize << n;
        let mut dp: Vec<Option<T>> = vec![None; full];
        dp[0] = Some(T::one());
        // a minor only depends on smaller masks, so increasing order suffices
        for mask in 1..full {
            let row = mask.count_ones() as usize - 1;
            let mut acc = T::zero();
            let mut any = false;
            let mut greater = 0usize;
            for j in (0..n).rev() {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let a = self.get(row, j);
                if !a.is_zero() {
                    if let Some(minor) = &dp[mask & !(1 << j)] {
                        let term = a.mul(minor);
                        acc = if greater.is_multiple_of(2) { acc.add(&term) } else { acc.sub(&term) };
                        any = true;
                    }
                }
                greater += 1;
            }
            if any && !acc.is_zero() {
                dp[mask] = Some(acc);
            }
        }
        Ok(dp[full - 1].take().unwrap_or_else(T::zero))
    }

    /// Laplace expansion along the rows `k` (0-based, strictly increasing):
    /// `sum_J eps(K, J) det A[K, J] det A[K^c, J^c]`.
    pub fn laplace_rows(&self, k: &[usize]) -> Result<T, AlgebraError> {
        let n = self.check_square()?;
        check_index_set(k, n)?;
        let kc = complement(k, n);
        let sk = permutation_sign(&[k, &kc[..]].concat());
        let mut acc = T::zero();
        for j in super::combinations(n, k.len()) {
            let jc = complement(&j, n);
            let sign = sk * permutation_sign(&[&j[..], &jc[..]].concat());
            let a = self.submatrix(k, &j).det_cofactor()?;
            if a.is_zero() {
                continue;
            }
            let b = self.submatrix(&kc, &jc).det_cofactor()?;
            let term = a.mul(&b);
            acc = match sign {
                Sign::Plus => acc.add(&term),
                Sign::Minus => acc.sub(&term),
            };
        }
        Ok(acc)
    }

    /// Laplace expansion along the columns `k` (0-based).
    pub fn laplace_cols(&self, k: &[usize]) -> Result<T, AlgebraError> {
        self.transpose().laplace_rows(k)
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Bareiss fraction-free elimination with row pivoting.
    pub fn det_bareiss(&self) -> Result<T, AlgebraError> {
        let n = self.check_square()?;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a: Vec<Vec<T>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        negate = !negate;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = v.div_exact(&prev);
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    pub fn det(&self, route: DetRoute) -> Result<T, AlgebraError> {
        match route {
            DetRoute::Cofactor => self.det_cofactor(),
            DetRoute::Bareiss => self.det_bareiss(),
        }
    }
}

fn check_index_set(k: &[usize], n: usize) -> Result<(), AlgebraError> {
    if k.windows(2).any(|w| w[0] >= w[1]) || k.iter().any(|&i| i >= n) {
        return Err(AlgebraError::BadIndexSet(k.to_vec()));
    }
    Ok(())
}

fn complement(k: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|i| !k.contains(i)).collect()
}

/// Sign of a permutation given in one-line notation (any distinct values).
pub fn permutation_sign(p: &[usize]) -> Sign {
    let mut inv = 0i64;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    Sign::pow_neg_one(inv)
}

/// Determinant over the fraction field: each row is brought to a common
/// denominator, the polynomial determinant is taken, and the product of the
/// row denominators goes underneath.
pub fn det_frac(m: &Matrix<FracEntry>, route: DetRoute) -> Result<Frac, AlgebraError> {
    let n = m.check_square()?;
    let mut dens = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut l = Denominator::one();
        for j in 0..n {
            l = l.lcm(&m.get(i, j).0.den);
        }
        let row: Vec<MultiPoly> = (0..n)
            .map(|j| {
                let f = &m.get(i, j).0;
                if f.is_zero() {
                    return MultiPoly::zero();
                }
                let s = l.div(&f.den).expect("lcm is a multiple");
                if s.is_one() {
                    f.num.clone()
                } else {
                    &f.num * &s.to_poly()
                }
            })
            .collect();
        rows.push(row);
        dens.push(l);
    }
    let poly = Matrix::from_rows(rows);
    let d = match route {
        DetRoute::Cofactor => poly.det_cofactor()?,
        DetRoute::Bareiss => poly.det_bareiss()?,
    };
    let den = dens.iter().fold(Denominator::one(), |acc, d| acc.mul(d));
    Ok(Frac::new(d, den))
}

/// A [`Frac`] wrapped so it can sit in a [`Matrix`]. Only construction and
/// access are meaningful; determinants go through [`det_frac`].
#[derive(Clone, Debug, Default)]
pub struct FracEntry(pub Frac);

impl PartialEq for FracEntry {
    fn eq(&self, other: &Self) -> bool {
        self.0.equals(&other.0)
    }
}

impl Ring for FracEntry {
    fn zero() -> Self {
        FracEntry(Frac::zero())
    }
    fn one() -> Self {
        FracEntry(Frac::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        FracEntry(self.0.add(&o.0))
    }
    fn sub(&self, o: &Self) -> Self {
        FracEntry(self.0.sub(&o.0))
    }
    fn mul(&self, o: &Self) -> Self {
        FracEntry(self.0.mul(&o.0))
    }
    fn neg(&self) -> Self {
        FracEntry(self.0.neg())
    }
}

/// Nested arrays of entry strings, e.g. `[["x1 - y1","1"],["0","y2^2"]]`.
impl<T: fmt::Display> Serialize for Matrix<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de, T> Deserialize<'de> for Matrix<T>
where
    T: Ring + FromStr,
    T::Err: fmt::Display,
{
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(serde::de::Error::custom("ragged matrix"));
        }
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|e| e.parse::<T>().map_err(serde::de::Error::custom))
                    .collect::<Result<Vec<T>, D::Error>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_rows(rows))
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
