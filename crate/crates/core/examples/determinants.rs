//! Exact determinants over integers and polynomials: cofactor expansion,
//! Bareiss elimination and Laplace expansion along a set of rows.
//!
//! ```text
//! cargo run --example determinants
//! ```

use std::error::Error;

use num_bigint::BigInt;
use overlap_ls::polyring::{permutation_sign, vandermonde, DetRoute, Matrix};
use overlap_ls::{MultiPoly, Var, VarSeq};

fn main() -> Result<(), Box<dyn Error>> {
    let m = Matrix::from_rows(vec![
        vec![BigInt::from(2), 7.into(), 1.into(), 8.into()],
        vec![2.into(), 8.into(), 1.into(), 8.into()],
        vec![2.into(), 8.into(), 4.into(), 5.into()],
        vec![9.into(), 0.into(), 4.into(), 5.into()],
    ]);
    println!("{m}");
    println!("cofactor {}", m.det(DetRoute::Cofactor)?);
    println!("bareiss  {}", m.det(DetRoute::Bareiss)?);
    println!("laplace on rows 0, 2: {}", m.laplace_rows(&[0, 2])?);

    // the Vandermonde matrix (x_i^(n-j)) has determinant prod_{i<j} (x_i - x_j)
    let n = 4;
    let v = Matrix::from_fn(n, n, |i, j| MultiPoly::var(Var::x(i + 1)).pow((n - 1 - j) as u32));
    let det = v.det(DetRoute::Bareiss)?;
    println!("Vandermonde of 4 variables: {} terms, matches product: {}", det.num_terms(), det == vandermonde(&VarSeq::xs(n))?);

    println!("sign of [2, 0, 3, 1]: {}", permutation_sign(&[2, 0, 3, 1]));
    Ok(())
}
