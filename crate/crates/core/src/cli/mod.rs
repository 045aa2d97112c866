//! The `overlap-ls` command line: compute overlaps, stream fibers, walks and
//! subpartition pairs as JSON lines, draw pictures, and run the verifiers.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on a usage error.

pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::identities::catalog::{run_all, run_identity, RunConfig};
use crate::identities::{self, IdentityId, Mode, Outcome, VerificationReport};
use crate::overlap::{enumerate_overlap_pairs, enumerate_subpartition_pairs, infinite_overlap_witness, overlap};
use crate::partitions::Partition;
use crate::polyring::VarSeq;
use crate::walks::{enumerate_walks, StaircaseWalk};

#[derive(Parser, Debug)]
#[command(name = "overlap-ls", version, about = "Partition overlaps and Littlewood-Schur identities")]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// The (m, n)-overlap of two partitions.
    Overlap {
        #[arg(long, value_parser = parse_partition, default_value = "")]
        mu: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        nu: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Add a walk and quasi-partition labelling when the overlap is infinite.
        #[arg(long)]
        infinite_witness: bool,
    },
    /// The fiber of lambda under (m, n)-overlap, one pair per line.
    Pairs {
        #[arg(long, value_parser = parse_partition, default_value = "")]
        lambda: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// All walks with n horizontal and m vertical steps, one per line.
    Walks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// All (lambda, K) with sub_{n+l}(lambda, K) = kappa, one per line.
    Subpairs {
        #[arg(long, value_parser = parse_partition, default_value = "")]
        kappa: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
    },
    /// Draw a Ferrers diagram or a labelled walk.
    Render {
        #[command(subcommand)]
        what: RenderWhat,
        #[arg(long, value_enum, default_value_t = Picture::Ascii, global = true)]
        format: Picture,
    },
    /// Run one verifier, or the whole catalog with `verify all`.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum RenderWhat {
    Partition {
        #[arg(long, value_parser = parse_partition, default_value = "")]
        lambda: Partition,
    },
    /// A walk given by its step word, e.g. HVVHHHVHH.
    Walk {
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        labels: Option<Vec<i64>>,
        /// 1-based step times to highlight.
        #[arg(long, value_delimiter = ',')]
        marked: Vec<usize>,
    },
    /// The labelled walk of an overlap: lambda's parts along the walk for a
    /// finite overlap, the quasi-partition witness for an infinite one.
    Overlap {
        #[arg(long, value_parser = parse_partition, default_value = "")]
        mu: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        nu: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Picture {
    Ascii,
    Svg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// An identity name, or `all`.
    target: String,
    #[arg(long, default_value = "symbolic", value_parser = parse_mode)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Partitions in sweeps range over <B^B>.
    #[arg(long, default_value_t = 2)]
    max_box: usize,
    /// Bound on variable counts in sweeps.
    #[arg(long, default_value_t = 2)]
    vars: usize,
    /// Check this many instances per identity, drawn with the seed.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, env = "OVERLAP_LS_SEED", default_value_t = 0)]
    seed: u64,
    /// Run the sweep of the named identity instead of a single instance.
    #[arg(long)]
    sweep: bool,

    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    nu: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    kappa: Option<Partition>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    tilde_n: Option<usize>,
    /// Number of x variables, `X = (x1, ..)`.
    #[arg(long)]
    nx: Option<usize>,
    /// Number of y variables, `Y = (y1, ..)`.
    #[arg(long)]
    ny: Option<usize>,
    /// `S = (x1, .., x_ns)`; `T` takes the next `nt` x variables.
    #[arg(long)]
    ns: Option<usize>,
    #[arg(long)]
    nt: Option<usize>,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse()
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

/// A failure to report: the message and the exit code.
struct Failure(String, i32);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string(), 2)
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` (unless `--output` is given) and diagnostics to `err`. Returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut buf = Vec::new();
    let code = match dispatch(cli.command, &mut buf) {
        Ok(code) => code,
        Err(Failure(msg, code)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &buf).map_err(|e| e.to_string()),
        None => out.write_all(&buf).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    code
}

fn line(out: &mut Vec<u8>, v: impl serde::Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, &v)?;
    out.push(b'\n');
    Ok(())
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> Result<i32, Failure> {
    match command {
        Command::Overlap {
            mu,
            nu,
            m,
            n,
            infinite_witness,
        } => {
            let result = overlap(&mu, &nu, m, n)?;
            let mut v = serde_json::to_value(&result)?;
            if infinite_witness {
                if let Some(w) = infinite_overlap_witness(&mu, &nu, m, n)? {
                    v["witness"] = serde_json::to_value(w)?;
                }
            }
            line(out, v)?;
        }
        Command::Pairs { lambda, m, n } => {
            for pair in enumerate_overlap_pairs(&lambda, m, n)? {
                line(out, json!({ "mu": pair.mu, "nu": pair.nu, "sign": pair.sign, "walk": pair.walk }))?;
            }
        }
        Command::Walks { n, m } => {
            for w in enumerate_walks(n, m) {
                line(out, json!({ "walk": w, "V": w.v_times(), "H": w.h_times(), "mu": w.mu(), "nu": w.nu() }))?;
            }
        }
        Command::Subpairs { kappa, m, n, l } => {
            for pair in enumerate_subpartition_pairs(&kappa, m, n, l)? {
                line(out, pair)?;
            }
        }
        Command::Render { what, format } => out.extend_from_slice(render_picture(what, format)?.as_bytes()),
        Command::Verify(args) => return verify(args, out),
    }
    Ok(0)
}

fn render_picture(what: RenderWhat, format: Picture) -> Result<String, Failure> {
    let walk_picture = |w: &StaircaseWalk, labels: Option<&[i64]>, marked: &[usize]| match format {
        Picture::Ascii => render::walk_ascii(w, labels, marked),
        Picture::Svg => render::walk_svg(w, labels, marked),
    };
    Ok(match what {
        RenderWhat::Partition { lambda } => match format {
            Picture::Ascii => render::partition_ascii(&lambda),
            Picture::Svg => render::partition_svg(&lambda),
        },
        RenderWhat::Walk { word, labels, marked } => {
            let w: StaircaseWalk = word.parse()?;
            walk_picture(&w, labels.as_deref(), &marked)?
        }
        RenderWhat::Overlap { mu, nu, m, n } => {
            if let Some(value) = overlap(&mu, &nu, m, n)?.value() {
                let pair = enumerate_overlap_pairs(value, m, n)?
                    .into_iter()
                    .find(|p| p.mu == mu && p.nu == nu)
                    .expect("every finite overlap lies in its own fiber");
                let labels = value.padded_signed(m + n);
                walk_picture(&pair.walk, Some(&labels), &[])?
            } else {
                let w = infinite_overlap_witness(&mu, &nu, m, n)?.expect("overlap is infinite");
                walk_picture(&w.walk, Some(&w.labels), &[])?
            }
        }
    })
}

/// An error raised while computing, not by the arguments.
fn internal(e: identities::IdentityError) -> Failure {
    Failure(e.to_string(), 1)
}

fn verify(args: VerifyArgs, out: &mut Vec<u8>) -> Result<i32, Failure> {
    let cfg = RunConfig {
        max_box: args.max_box,
        max_vars: args.vars,
        mode: args.mode,
        sample: args.sample,
        seed: args.seed,
    };
    let reports = if args.target == "all" {
        run_all(&cfg).map_err(internal)?
    } else {
        let id: IdentityId = args.target.parse()?;
        if args.sweep {
            run_identity(id, &cfg).map_err(internal)?
        } else {
            vec![single(id, &args)?]
        }
    };
    let mut failed = false;
    for r in &reports {
        failed |= r.outcome == Outcome::Fail;
        match args.format {
            ReportFormat::Json => line(out, r)?,
            ReportFormat::Text => {
                let status = match r.outcome {
                    Outcome::Pass => "PASS",
                    Outcome::Fail => "FAIL",
                    Outcome::Inapplicable => "SKIP",
                };
                let _ = write!(out, "{status} {} {}", r.identity, r.instance);
                if let Some(w) = &r.witness {
                    let _ = write!(out, " : {w}");
                }
                out.push(b'\n');
            }
        }
    }
    Ok(if failed { 1 } else { 0 })
}

/// One instance of a verifier built from the flags. Missing flags fall back
/// to a small default instance; the first overlap identity for Schur
/// functions defaults to `(9,6,1) ⋆_{3,5} (4,3,3,2)` in eight variables.
fn single(id: IdentityId, a: &VerifyArgs) -> Result<VerificationReport, Failure> {
    let p = |o: &Option<Partition>, d: &[usize]| o.clone().unwrap_or_else(|| Partition::new(d.to_vec()).expect("default partition"));
    let nx = a.nx.unwrap_or(2);
    let ny = a.ny.unwrap_or(2);
    let (x, y) = (VarSeq::xs(nx), VarSeq::ys(ny));
    let ns = a.ns.unwrap_or(1);
    let (s, t) = (VarSeq::xs(ns), VarSeq::xs_from(ns + 1, a.nt.unwrap_or(1)));
    let mode = a.mode;
    let lambda = p(&a.lambda, &[2, 1]);
    let report = match id {
        IdentityId::FirstOverlap => {
            let l = a.l.unwrap_or(1);
            match (&a.mu, &a.nu) {
                (Some(mu), Some(nu)) => identities::verify_first_overlap(&lambda, l, mu, nu, &x, &y, mode)?,
                _ => identities::verify_sorted_first_overlap(&lambda, l, &x, &y, mode)?,
            }
        }
        IdentityId::CorMaxIndex => {
            identities::verify_cor_max_index(&p(&a.mu, &[1]), &p(&a.nu, &[1]), a.l.unwrap_or(1), &x, &y, mode)?
        }
        IdentityId::SecondOverlap => identities::verify_second_overlap(&lambda, &s, &t, &y, mode)?,
        IdentityId::WalkSplit => identities::verify_walk_split(&lambda, &s, &t, &y, mode)?,
        IdentityId::FirstOverlapSchur => {
            let (mu, nu) = (p(&a.mu, &[9, 6, 1]), p(&a.nu, &[4, 3, 3, 2]));
            let (m, n) = (a.m.unwrap_or(3), a.n.unwrap_or(5));
            let x = VarSeq::xs(a.nx.unwrap_or(m + n));
            identities::verify_first_overlap_schur(&mu, &nu, m, n, &x, mode)?
        }
        IdentityId::SecondOverlapSchur => identities::verify_second_overlap_schur(&lambda, &s, &t, mode)?,
        IdentityId::LabeledWalkSchur => identities::verify_labeled_walk_schur(&lambda, &s, &t, mode)?,
        IdentityId::SubpartitionSchur => {
            identities::verify_subpartition_schur(&p(&a.kappa, &[1]), a.l.unwrap_or(1), &s, &t, mode)?
        }
        IdentityId::SubpartitionLs => identities::verify_subpartition_ls(
            &p(&a.kappa, &[2]),
            a.tilde_n.unwrap_or(0),
            a.l.unwrap_or(1),
            &s,
            &t,
            &y,
            mode,
        )?,
        IdentityId::DualCauchy => identities::verify_dual_cauchy(&x, &y, mode)?,
        IdentityId::Counterexample => identities::counterexample_regression()?,
        IdentityId::FactorRule => crate::schur::factor_rule_check(&lambda, a.m.unwrap_or(1), &x)?,
        IdentityId::ComplementReciprocity => {
            crate::schur::complement_reciprocity_check(&lambda, a.m.unwrap_or(2), &x)?
        }
        IdentityId::LittlewoodSquare => crate::littlewood_schur::littlewood_square_check(a.l.unwrap_or(1), &x, &y)?,
        IdentityId::LsRoutes => identities::ls_routes_check(&lambda, &x, &y, mode)?,
    };
    Ok(report)
}
