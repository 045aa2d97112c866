//! Exhaustive or sampled sweeps over every identity in the catalog.
//!
//! ```text
//! cargo run --release --example sweep -- 3 3 symbolic
//! cargo run --release --example sweep -- 3 3 grid 50
//! ```
//! Arguments: box size, variable bound, mode, optional sample size.

use std::error::Error;
use std::time::Instant;

use overlap_ls::identities::catalog::{run_identity, RunConfig};
use overlap_ls::identities::{IdentityId, Mode, Outcome};

fn main() -> Result<(), Box<dyn Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize| args.get(i).map(String::as_str);
    let cfg = RunConfig {
        max_box: arg(0).map_or(Ok(2), str::parse)?,
        max_vars: arg(1).map_or(Ok(2), str::parse)?,
        mode: arg(2).map_or(Ok(Mode::Symbolic), str::parse)?,
        sample: arg(3).map(str::parse).transpose()?,
        seed: 7,
    };
    println!("{cfg:?}");
    let mut failed = 0;
    for id in IdentityId::ALL {
        let start = Instant::now();
        let reports = run_identity(id, &cfg)?;
        let bad: Vec<_> = reports.iter().filter(|r| r.outcome == Outcome::Fail).collect();
        println!("{:<28} {:>5} checked {:>3} failed  {:.2?}", id.name(), reports.len(), bad.len(), start.elapsed());
        failed += bad.len();
        for r in bad.iter().take(3) {
            println!("  {r}");
        }
    }
    std::process::exit(i32::from(failed > 0));
}
