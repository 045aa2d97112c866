//! Overlaps of partition pairs: a finite value with its sign, an infinite
//! overlap with its quasi-partition witness, and a full fiber.
//!
//! ```text
//! cargo run --example overlap
//! ```

use std::error::Error;

use overlap_ls::overlap::{enumerate_overlap_pairs, infinite_overlap_witness};
use overlap_ls::{overlap, partition, OverlapResult};

fn main() -> Result<(), Box<dyn Error>> {
    let (mu, nu) = (partition![9, 6, 1], partition![4, 3, 3, 2]);
    match overlap(&mu, &nu, 3, 5)? {
        OverlapResult::Finite { value, sign } => println!("{mu} *_(3,5) {nu} = {value}, sign {sign}"),
        OverlapResult::Infinite => println!("{mu} *_(3,5) {nu} = inf"),
    }

    // two shifted entries collide, so the overlap is infinite
    let (mu, nu) = (partition![10, 8, 1], partition![4, 2, 2]);
    println!("{mu} *_(3,6) {nu} = {:?}", overlap(&mu, &nu, 3, 6)?);
    if let Some(w) = infinite_overlap_witness(&mu, &nu, 3, 6)? {
        println!("  witness walk {} labels {:?}", w.walk, w.labels);
        let (a, b) = w.reconstruct()?;
        println!("  reconstructs ({a}, {b})");
    }

    let lambda = partition![2, 1];
    let fiber = enumerate_overlap_pairs(&lambda, 2, 1)?;
    println!("fiber of {lambda} under *_(2,1): {} pairs", fiber.len());
    for p in &fiber {
        println!("  {} {:<8} {:<8} sign {}", p.walk, p.mu.to_string(), p.nu.to_string(), p.sign);
    }
    Ok(())
}
