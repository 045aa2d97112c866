//! Individual identity checks, symbolic and on certified grids, including the
//! regression instance where the first overlap formula breaks.
//!
//! ```text
//! cargo run --release --example identities
//! ```

use std::error::Error;

use overlap_ls::identities::{
    counterexample_regression, verify_dual_cauchy, verify_first_overlap_schur, verify_labeled_walk_schur,
    verify_second_overlap, verify_sorted_first_overlap, verify_subpartition_schur, verify_walk_split, Mode,
};
use overlap_ls::{partition, VarSeq};

fn main() -> Result<(), Box<dyn Error>> {
    let (x, y) = (VarSeq::xs(3), VarSeq::ys(2));
    let lambda = partition![3, 2, 1];
    for l in 0..=2 {
        for mode in [Mode::Symbolic, Mode::Grid] {
            println!("{}", verify_sorted_first_overlap(&lambda, l, &x, &y, mode)?);
        }
    }

    let (s, t) = (VarSeq::xs(1), VarSeq::xs_from(2, 2));
    println!("{}", verify_second_overlap(&partition![2, 1, 1], &s, &t, &VarSeq::ys(1), Mode::Symbolic)?);
    println!("{}", verify_walk_split(&partition![2, 1, 1], &s, &t, &VarSeq::ys(1), Mode::Symbolic)?);
    println!("{}", verify_labeled_walk_schur(&partition![3, 1], &s, &t, Mode::Symbolic)?);
    println!("{}", verify_subpartition_schur(&partition![2, 1], 2, &s, &t, Mode::Symbolic)?);
    println!("{}", verify_first_overlap_schur(&partition![2, 1], &partition![1], 2, 2, &VarSeq::xs(4), Mode::Grid)?);
    println!("{}", verify_dual_cauchy(&VarSeq::xs(2), &VarSeq::ys(2), Mode::Symbolic)?);

    let broken = counterexample_regression()?;
    println!("{broken}");
    Ok(())
}
