use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Point, Var};

/// A product grid `S_1 x ... x S_k` of positive integers on which a
/// polynomial with degree at most `|S_i| - 1` in its `i`-th variable is
/// determined: if it vanishes on the grid it is zero.
///
/// Value sets of different variables are disjoint and positive, so
/// differences of distinct variables and sums of variables never vanish.
#[derive(Clone, Debug)]
pub struct CertifiedGrid {
    vars: Vec<Var>,
    values: Vec<Vec<BigRational>>,
}

impl CertifiedGrid {
    /// One axis per `(variable, degree bound)`.
    pub fn new(bounds: &[(Var, u32)]) -> Self {
        let mut next = 1i64;
        let mut vars = Vec::new();
        let mut values = Vec::new();
        for &(v, d) in bounds {
            let axis: Vec<BigRational> = (0..=d as i64)
                .map(|t| BigRational::from_integer(BigInt::from(next + t)))
                .collect();
            next += d as i64 + 1;
            vars.push(v);
            values.push(axis);
        }
        CertifiedGrid { vars, values }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    /// Number of grid points.
    pub fn size(&self) -> u128 {
        self.values.iter().map(|a| a.len() as u128).product()
    }

    /// All grid points in odometer order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let k = self.vars.len();
        let mut idx = vec![0usize; k];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let p = Point::from_pairs((0..k).map(|i| (self.vars[i], self.values[i][idx[i]].clone())));
            done = true;
            for i in (0..k).rev() {
                idx[i] += 1;
                if idx[i] < self.values[i].len() {
                    done = false;
                    break;
                }
                idx[i] = 0;
            }
            Some(p)
        })
    }
}
