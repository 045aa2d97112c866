//! Schur polynomials three ways (bialternant, tableaux, branching on values)
//! and the two Schur identities checked as polynomials.
//!
//! ```text
//! cargo run --example schur
//! ```

use std::error::Error;

use num_rational::BigRational;
use overlap_ls::partition;
use overlap_ls::schur::{
    complement_reciprocity_check, factor_rule_check, schur_bialternant, schur_branching, schur_ssyt,
};
use overlap_ls::VarSeq;

fn main() -> Result<(), Box<dyn Error>> {
    let x = VarSeq::xs(3);
    let lambda = partition![2, 1];
    let bi = schur_bialternant(&lambda, &x)?;
    let tab = schur_ssyt(&lambda, &x)?;
    println!("s_{lambda}({x}) = {bi}");
    println!("  {} monomials, tableau route agrees: {}", bi.num_terms(), bi == tab);

    let vals: Vec<BigRational> = [1, 2, 3].iter().map(|&v| BigRational::from_integer(v.into())).collect();
    println!("  at (1, 2, 3): {}", schur_branching(&lambda, &vals));

    println!("{}", factor_rule_check(&lambda, 2, &x)?);
    println!("{}", complement_reciprocity_check(&lambda, 3, &x)?);
    Ok(())
}
