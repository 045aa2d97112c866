//! Pictures of a partition and of a labelled walk, written as SVG files into
//! a directory (default: the system temp dir).
//!
//! ```text
//! cargo run --example render -- ./pictures
//! ```

use std::error::Error;
use std::path::PathBuf;

use overlap_ls::cli::render::{parse_walk_ascii, partition_ascii, partition_svg, walk_ascii, walk_svg};
use overlap_ls::overlap::enumerate_overlap_pairs;
use overlap_ls::partition;

fn main() -> Result<(), Box<dyn Error>> {
    let dir: PathBuf = std::env::args().nth(1).map_or_else(std::env::temp_dir, PathBuf::from);
    std::fs::create_dir_all(&dir)?;

    let lambda = partition![7, 4, 3, 3, 3, 1];
    print!("{}", partition_ascii(&lambda));
    std::fs::write(dir.join("lambda.svg"), partition_svg(&lambda))?;

    // a fiber element of lambda under *_(3,6), labelled by lambda along its walk
    let pairs = enumerate_overlap_pairs(&lambda, 3, 6)?;
    let pair = pairs
        .iter()
        .find(|p| p.mu == partition![9, 8, 2])
        .ok_or("no fiber element with mu = (9,8,2)")?;
    let labels: Vec<i64> = lambda.padded_signed(9);
    let pic = walk_ascii(&pair.walk, Some(&labels), &[])?;
    print!("{pic}");
    println!("mu = {}, nu = {}, sign {}", pair.mu, pair.nu, pair.sign);
    assert_eq!(parse_walk_ascii(&pic)?, pair.walk);
    std::fs::write(dir.join("walk.svg"), walk_svg(&pair.walk, Some(&labels), &[])?)?;

    println!("wrote {}", dir.display());
    Ok(())
}
