//! Littlewood-Schur functions `LS_lambda(-X; Y)`: the Littlewood-Richardson
//! expansion, the block determinant, and integer evaluation.
//!
//! ```text
//! cargo run --example littlewood_schur -- 3,2,1
//! ```

use std::error::Error;

use num_bigint::BigInt;
use overlap_ls::littlewood_schur::{
    littlewood_square_check, lr_coefficient, ls_combinatorial, ls_expansion, ls_minus_x_det_int,
    ls_minus_x_determinantal, LSSign,
};
use overlap_ls::{partition, Partition, VarSeq};

fn main() -> Result<(), Box<dyn Error>> {
    let lambda: Partition = match std::env::args().nth(1) {
        Some(s) => s.parse()?,
        None => partition![2, 2, 1],
    };
    let (x, y) = (VarSeq::xs(2), VarSeq::ys(2));
    println!("c^(3,2,1)_(2,1),(2,1) = {}", lr_coefficient(&partition![3, 2, 1], &partition![2, 1], &partition![2, 1]));

    println!("LS_{lambda}(X; Y) with l(X) = 2, l(Y) = 2:");
    for (mu, nu_conj, c) in ls_expansion(&lambda, 2, 2) {
        println!("  {c} * s_{mu}(X) s_{nu_conj}(Y)");
    }

    let by_sum = ls_combinatorial(&lambda, &x.negated(), &y)?;
    let by_det = ls_minus_x_determinantal(&lambda, &x, &y)?;
    println!("LS_{lambda}(-X; Y) = {by_sum}");
    println!("  determinant route agrees: {}", by_sum == by_det);
    match LSSign::new(&lambda, 2, 2) {
        Some(s) => println!("  index {} sign {}", s.index, s.value),
        None => println!("  negative index"),
    }

    let xv: Vec<BigInt> = vec![2.into(), 5.into()];
    let yv: Vec<BigInt> = vec![3.into(), 7.into()];
    println!("  at X = (2, 5), Y = (3, 7): {}", ls_minus_x_det_int(&lambda, &xv, &yv)?);

    println!("{}", littlewood_square_check(1, &x, &y)?);
    Ok(())
}
