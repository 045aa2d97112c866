//! Subpartitions `sub_N(lambda, K)` and the marked-walk enumeration of every
//! `(lambda, K)` presenting a given `kappa`.
//!
//! ```text
//! cargo run --example subpartitions
//! ```

use std::error::Error;

use overlap_ls::overlap::{c_indices, enumerate_subpartition_pairs, sub_partition, subpartition_to_overlap};
use overlap_ls::partition;

fn main() -> Result<(), Box<dyn Error>> {
    let lambda = partition![5, 4, 4, 2, 1];
    let k = [1, 3, 4];
    println!("sub_5({lambda}, {k:?}) = {}", sub_partition(&lambda, 5, &k)?);
    println!("C_5({k:?}) = {:?}", c_indices(&k, 5)?);

    let kappa = partition![3, 1];
    let (m, n, l) = (2, 1, 2);
    let pairs = enumerate_subpartition_pairs(&kappa, m, n, l)?;
    println!("{} presentations of {kappa} with m = {m}, n = {n}, l = {l}:", pairs.len());
    for p in &pairs {
        let (mu, nu, sign) = subpartition_to_overlap(&p.lambda, &p.k, m, n + l)?;
        println!("  lambda {:<8} K {:?}  overlap pair ({mu}, {nu}) sign {sign}", p.lambda.to_string(), p.k);
    }
    Ok(())
}
