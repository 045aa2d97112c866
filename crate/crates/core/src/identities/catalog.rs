//! Instance generation for sweeps over every identity.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    counterexample_regression, ls_routes_check, verify_cor_max_index, verify_dual_cauchy, verify_first_overlap,
    verify_first_overlap_schur, verify_labeled_walk_schur, verify_second_overlap, verify_second_overlap_schur,
    verify_subpartition_ls, verify_subpartition_schur, verify_walk_split, IdentityError, IdentityId, Mode, Outcome,
    VerificationReport,
};
use crate::littlewood_schur::littlewood_square_check;
use crate::overlap::enumerate_overlap_pairs;
use crate::partitions::{partitions_in_box, Partition};
use crate::polyring::VarSeq;
use crate::schur::{complement_reciprocity_check, factor_rule_check};

/// Bounds of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    /// Partitions range over `<max_box^max_box>`.
    pub max_box: usize,
    /// Bound on the variable counts of an instance.
    pub max_vars: usize,
    pub mode: Mode,
    /// Check only this many instances per identity, drawn with `seed`.
    pub sample: Option<usize>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_box: 2,
            max_vars: 2,
            mode: Mode::Symbolic,
            sample: None,
            seed: 0,
        }
    }
}

type Check = Box<dyn Fn() -> Result<VerificationReport, IdentityError>>;

fn boxed(cfg: &RunConfig) -> Vec<Partition> {
    partitions_in_box(cfg.max_box, cfg.max_box)
}

/// `(X, Y)` with `1 <= l(X) <= max_vars` and `0 <= l(Y) <= max_vars`.
fn xy_pairs(max_x: usize, max_y: usize) -> Vec<(VarSeq, VarSeq)> {
    let mut out = Vec::new();
    for n in 1..=max_x {
        for m in 0..=max_y {
            out.push((VarSeq::xs(n), VarSeq::ys(m)));
        }
    }
    out
}

/// `(S, T)` with `l(S) + l(T) <= total`, `S = x_1..`, `T` the following `x`s.
fn st_pairs(total: usize) -> Vec<(VarSeq, VarSeq)> {
    let mut out = Vec::new();
    for a in 0..=total {
        for b in 0..=total - a {
            out.push((VarSeq::xs(a), VarSeq::xs_from(a + 1, b)));
        }
    }
    out
}

/// All checks of one identity within the bounds, in a fixed order.
pub fn instances(id: IdentityId, cfg: &RunConfig) -> Vec<Check> {
    let mode = cfg.mode;
    let v = cfg.max_vars;
    let mut out: Vec<Check> = Vec::new();
    match id {
        IdentityId::FirstOverlap => {
            for (x, y) in xy_pairs(v, v) {
                for lambda in boxed(cfg) {
                    let (n, m) = (x.len(), y.len());
                    let k = lambda.index(m, n);
                    if k < 0 || lambda.length() > m + n {
                        continue;
                    }
                    let nk = n - k as usize;
                    let head = lambda.truncate(nk);
                    for l in 0..=nk {
                        let Ok(pairs) = enumerate_overlap_pairs(&head, l, nk - l) else { continue };
                        for pair in pairs {
                            let (lambda, x, y) = (lambda.clone(), x.clone(), y.clone());
                            out.push(Box::new(move || verify_first_overlap(&lambda, l, &pair.mu, &pair.nu, &x, &y, mode)));
                        }
                    }
                }
            }
        }
        IdentityId::CorMaxIndex => {
            for (x, y) in xy_pairs(v, v) {
                for l in 0..=x.len() {
                    for mu in boxed(cfg).into_iter().filter(|p| p.length() <= l) {
                        for nu in boxed(cfg) {
                            let (x, y, mu) = (x.clone(), y.clone(), mu.clone());
                            out.push(Box::new(move || verify_cor_max_index(&mu, &nu, l, &x, &y, mode)));
                        }
                    }
                }
            }
        }
        IdentityId::SecondOverlap | IdentityId::WalkSplit => {
            for (s, t) in st_pairs(v) {
                for m in 0..v {
                    let y = VarSeq::ys(m);
                    for lambda in boxed(cfg) {
                        let (s, t, y) = (s.clone(), t.clone(), y.clone());
                        out.push(if id == IdentityId::SecondOverlap {
                            Box::new(move || verify_second_overlap(&lambda, &s, &t, &y, mode))
                        } else {
                            Box::new(move || verify_walk_split(&lambda, &s, &t, &y, mode))
                        });
                    }
                }
            }
        }
        IdentityId::FirstOverlapSchur => {
            for total in 0..=v {
                for m in 0..=total {
                    let n = total - m;
                    let x = VarSeq::xs(total);
                    for mu in boxed(cfg).into_iter().filter(|p| p.length() <= m) {
                        for nu in boxed(cfg).into_iter().filter(|p| p.length() <= n) {
                            let (x, mu) = (x.clone(), mu.clone());
                            out.push(Box::new(move || verify_first_overlap_schur(&mu, &nu, m, n, &x, mode)));
                        }
                    }
                }
            }
        }
        IdentityId::SecondOverlapSchur | IdentityId::LabeledWalkSchur => {
            for (s, t) in st_pairs(v) {
                for lambda in boxed(cfg).into_iter().filter(|p| p.length() <= s.len() + t.len()) {
                    let (s, t) = (s.clone(), t.clone());
                    out.push(if id == IdentityId::SecondOverlapSchur {
                        Box::new(move || verify_second_overlap_schur(&lambda, &s, &t, mode))
                    } else {
                        Box::new(move || verify_labeled_walk_schur(&lambda, &s, &t, mode))
                    });
                }
            }
        }
        IdentityId::SubpartitionSchur => {
            for (s, t) in st_pairs(v) {
                for l in 0..=cfg.max_box {
                    for kappa in partitions_in_box(s.len() + t.len(), l) {
                        let (s, t) = (s.clone(), t.clone());
                        out.push(Box::new(move || verify_subpartition_schur(&kappa, l, &s, &t, mode)));
                    }
                }
            }
        }
        IdentityId::SubpartitionLs => {
            for (s, t) in st_pairs(v) {
                for q in 0..v {
                    let y = VarSeq::ys(q);
                    for tilde_n in 0..=t.len().min(q) {
                        let width = s.len() + t.len() - tilde_n;
                        for l in 0..=cfg.max_box {
                            for kappa in partitions_in_box(width, l) {
                                if !kappa.contains_cell(width, q - tilde_n) {
                                    continue;
                                }
                                let (s, t, y) = (s.clone(), t.clone(), y.clone());
                                out.push(Box::new(move || verify_subpartition_ls(&kappa, tilde_n, l, &s, &t, &y, mode)));
                            }
                        }
                    }
                }
            }
        }
        IdentityId::DualCauchy => {
            for n in 0..=v {
                for m in 0..=v {
                    out.push(Box::new(move || verify_dual_cauchy(&VarSeq::xs(n), &VarSeq::ys(m), mode)));
                }
            }
        }
        IdentityId::Counterexample => out.push(Box::new(counterexample_regression)),
        IdentityId::FactorRule => {
            for n in 1..=v {
                for m in 0..=cfg.max_box {
                    for lambda in boxed(cfg).into_iter().filter(|p| p.length() <= n) {
                        out.push(Box::new(move || Ok(factor_rule_check(&lambda, m, &VarSeq::xs(n))?)));
                    }
                }
            }
        }
        IdentityId::ComplementReciprocity => {
            for n in 1..=v {
                for m in 0..=cfg.max_box {
                    for lambda in partitions_in_box(m, n) {
                        out.push(Box::new(move || Ok(complement_reciprocity_check(&lambda, m, &VarSeq::xs(n))?)));
                    }
                }
            }
        }
        IdentityId::LittlewoodSquare => {
            for (x, y) in xy_pairs(v, v) {
                for l in 0..=cfg.max_box {
                    let (x, y) = (x.clone(), y.clone());
                    out.push(Box::new(move || Ok(littlewood_square_check(l, &x, &y)?)));
                }
            }
        }
        IdentityId::LsRoutes => {
            for (x, y) in xy_pairs(v, v) {
                for lambda in boxed(cfg) {
                    let (x, y) = (x.clone(), y.clone());
                    out.push(Box::new(move || ls_routes_check(&lambda, &x, &y, mode)));
                }
            }
        }
    }
    out
}

/// Runs the checks of one identity, keeping only applicable instances.
pub fn run_identity(id: IdentityId, cfg: &RunConfig) -> Result<Vec<VerificationReport>, IdentityError> {
    let checks = instances(id, cfg);
    let chosen: Vec<usize> = match cfg.sample {
        Some(n) if n < checks.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ id as u64);
            let mut idx = rand::seq::index::sample(&mut rng, checks.len(), n).into_vec();
            idx.sort_unstable();
            idx
        }
        _ => (0..checks.len()).collect(),
    };
    let mut out = Vec::new();
    for i in chosen {
        let report = checks[i]()?;
        if report.outcome != Outcome::Inapplicable {
            out.push(report);
        }
    }
    Ok(out)
}

/// Every identity in catalog order.
pub fn run_all(cfg: &RunConfig) -> Result<Vec<VerificationReport>, IdentityError> {
    let mut out = Vec::new();
    for id in IdentityId::ALL {
        out.extend(run_identity(id, cfg)?);
    }
    Ok(out)
}
