//! Staircase walks in an `n x m` rectangle: the partitions above and below a
//! walk, its complement, splitting, and a labelled ASCII picture.
//!
//! ```text
//! cargo run --example walks
//! ```

use std::error::Error;

use overlap_ls::cli::render::walk_ascii;
use overlap_ls::walks::enumerate_walks;
use overlap_ls::StaircaseWalk;

fn main() -> Result<(), Box<dyn Error>> {
    let pi: StaircaseWalk = "HVVHHHVHH".parse()?;
    println!("walk {pi}: width {} height {}", pi.width(), pi.height());
    println!("  V times {:?}, H times {:?}", pi.v_times(), pi.h_times());
    println!("  mu = {}, nu = {}", pi.mu(), pi.nu());
    let tau = pi.complement();
    println!("  complement {tau} has mu = {}", tau.mu());

    let (head, tail) = pi.split(4)?;
    println!("  split after 4 steps: {head} | {tail}");

    // labels that never decrease by more than allowed along this walk, yet
    // are not a partition: the shape of an infinite overlap
    let sigma: StaircaseWalk = "VVHHHHVHH".parse()?;
    let labels = [4, 2, 3, 1, 1, -1, -1, 0, 0];
    println!("{labels:?} on {sigma} is a quasi-partition: {}", sigma.is_quasi_partition(&labels)?);
    print!("{}", walk_ascii(&sigma, Some(&labels), &[3])?);

    for (n, m) in [(2, 2), (3, 2), (4, 3)] {
        let walks = enumerate_walks(n, m);
        let balanced = walks.iter().all(|w| w.mu().size() + w.nu().size() == n * m);
        println!("{n}x{m}: {} walks, |mu| + |nu| = {} for all: {balanced}", walks.len(), n * m);
    }
    Ok(())
}
