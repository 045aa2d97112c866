//! One line per acceptance criterion, with its time limit. Exits nonzero if
//! any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use overlap_ls::identities::catalog::{run_identity, RunConfig};
use overlap_ls::identities::{
    counterexample_regression, ls_routes_check, verify_dual_cauchy, verify_sorted_first_overlap, IdentityId, Mode,
    VerificationReport,
};
use overlap_ls::littlewood_schur::littlewood_square_check;
use overlap_ls::overlap::{
    enumerate_overlap_pairs, enumerate_subpartition_pairs, infinite_overlap_witness, overlap, sub_partition,
    subpartition_to_overlap, OverlapResult,
};
use overlap_ls::partitions::{partitions_in_box, Partition};
use overlap_ls::polyring::{Matrix, VarSeq};
use overlap_ls::schur::complement_reciprocity_check;
use overlap_ls::walks::StaircaseWalk;
use overlap_ls::{partition, Sign};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(reports: &[VerificationReport]) -> Check {
    if let Some(r) = reports.iter().find(|r| !r.passed()) {
        return Err(format!("{r}"));
    }
    ensure(!reports.is_empty(), || "no instances were checked".into())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn c1_index() -> Check {
    let l = partition![7, 4, 2, 2];
    for (m, n, k) in [(6, 3, 2), (3, 5, 1), (2, 1, -1)] {
        ensure(l.index(m, n) == k, || format!("index({l}, {m}, {n}) = {}, expected {k}", l.index(m, n)))?;
    }
    Ok(())
}

fn c2_intro_overlap() -> Check {
    let got = overlap(&partition![9, 6, 1], &partition![4, 3, 3, 2], 3, 5).map_err(|e| e.to_string())?;
    let want = OverlapResult::Finite {
        value: partition![4, 2, 2, 2, 2, 1],
        sign: Sign::Minus,
    };
    ensure(got == want, || format!("got {got:?}"))
}

fn c3_walk() -> Check {
    let w: StaircaseWalk = "HVVHHHVHH".parse().map_err(|e| format!("{e}"))?;
    ensure(w.width() == 6 && w.height() == 3, || "wrong rectangle".into())?;
    ensure(w.v_times() == [2, 3, 7], || format!("V = {:?}", w.v_times()))?;
    ensure(w.h_times() == [1, 4, 5, 6, 8, 9], || format!("H = {:?}", w.h_times()))?;
    ensure(w.mu() == partition![5, 5, 2], || format!("mu = {}", w.mu()))?;
    ensure(w.nu() == partition![4, 1, 1], || format!("nu = {}", w.nu()))
}

/// The fiber of every `lambda ⊆ <4^4>` is compared with a brute-force scan:
/// `mu ⋆ nu = lambda` forces `mu_1 <= lambda_1 + n` and `nu_1 <= lambda_1 + m`,
/// so all pairs in `<(4+n)^m> x <(4+m)^n>` are overlapped and bucketed.
fn c4_fiber_bijection() -> Check {
    for m in 0..=3 {
        for n in 0..=3 {
            let mut brute: BTreeMap<Partition, BTreeSet<(Partition, Partition, Sign)>> = BTreeMap::new();
            for mu in partitions_in_box(4 + n, m) {
                for nu in partitions_in_box(4 + m, n) {
                    if let OverlapResult::Finite { value, sign } = overlap(&mu, &nu, m, n).map_err(|e| e.to_string())? {
                        brute.entry(value).or_default().insert((mu.clone(), nu, sign));
                    }
                }
            }
            for lambda in partitions_in_box(4, 4).into_iter().filter(|l| l.length() <= m + n) {
                let pairs = enumerate_overlap_pairs(&lambda, m, n).map_err(|e| e.to_string())?;
                let got: BTreeSet<_> = pairs.iter().map(|p| (p.mu.clone(), p.nu.clone(), p.sign)).collect();
                ensure(pairs.len() == binomial(m + n, m) && got.len() == pairs.len(), || {
                    format!("fiber of {lambda} at ({m},{n}) has {} pairs", pairs.len())
                })?;
                let want = brute.remove(&lambda).unwrap_or_default();
                ensure(got == want, || format!("fiber of {lambda} at ({m},{n}) differs from brute force"))?;
            }
        }
    }
    Ok(())
}

fn c5_infinite_witness() -> Check {
    let mut checked = 0;
    for mu in partitions_in_box(4, 3) {
        for nu in partitions_in_box(4, 3) {
            if !overlap(&mu, &nu, 3, 3).map_err(|e| e.to_string())?.is_infinite() {
                continue;
            }
            let w = infinite_overlap_witness(&mu, &nu, 3, 3)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("no witness for {mu}, {nu}"))?;
            let valid = w.walk.is_quasi_partition(&w.labels).map_err(|e| e.to_string())?;
            let back = w.reconstruct().map_err(|e| e.to_string())?;
            ensure(valid && back == (mu.clone(), nu.clone()), || format!("bad witness for {mu}, {nu}"))?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "no infinite overlaps found".into())?;
    let (mu, nu) = (partition![10, 8, 1], partition![4, 2, 2]);
    let alpha = vec![4, 2, 3, 1, 1, -1, -1, 0, 0];
    let w = infinite_overlap_witness(&mu, &nu, 3, 6)
        .map_err(|e| e.to_string())?
        .ok_or("the worked instance has no witness")?;
    ensure(w.labels == alpha, || format!("labels {:?}", w.labels))?;
    ensure(w.reconstruct().map_err(|e| e.to_string())? == (mu.clone(), nu.clone()), || "round trip".into())?;
    let drawn = StaircaseWalk::from_v_times(9, &[1, 3, 7]);
    ensure(drawn.is_quasi_partition(&alpha).map_err(|e| e.to_string())?, || "drawn walk rejected".into())
}

fn c6_routes() -> Check {
    let mut reports = Vec::new();
    for lambda in partitions_in_box(4, 4) {
        reports.push(ls_routes_check(&lambda, &VarSeq::xs(2), &VarSeq::ys(2), Mode::Symbolic).map_err(|e| e.to_string())?);
        reports.push(ls_routes_check(&lambda, &VarSeq::xs(3), &VarSeq::ys(3), Mode::Grid).map_err(|e| e.to_string())?);
    }
    all_pass(&reports)
}

fn c7_first_overlap() -> Check {
    let cfg = RunConfig {
        max_box: 4,
        max_vars: 3,
        ..RunConfig::default()
    };
    all_pass(&run_identity(IdentityId::FirstOverlap, &cfg).map_err(|e| e.to_string())?)?;
    let mut reports = Vec::new();
    for n in 1..=3 {
        for m in 0..=3 {
            let (x, y) = (VarSeq::xs(n), VarSeq::ys(m));
            for lambda in partitions_in_box(4, 4) {
                let k = lambda.index(m, n);
                if k < 0 || lambda.length() > m + n {
                    continue;
                }
                for l in 0..=n - k as usize {
                    reports.push(verify_sorted_first_overlap(&lambda, l, &x, &y, Mode::Symbolic).map_err(|e| e.to_string())?);
                }
            }
        }
    }
    reports.push(
        verify_sorted_first_overlap(&partition![3, 1], 1, &VarSeq::xs(2), &VarSeq::ys(1), Mode::Symbolic)
            .map_err(|e| e.to_string())?,
    );
    all_pass(&reports)
}

fn c8_second_overlap() -> Check {
    let cfg = RunConfig {
        max_box: 3,
        max_vars: 3,
        ..RunConfig::default()
    };
    all_pass(&run_identity(IdentityId::SecondOverlap, &cfg).map_err(|e| e.to_string())?)?;
    all_pass(&run_identity(IdentityId::WalkSplit, &cfg).map_err(|e| e.to_string())?)
}

fn c9_counterexample() -> Check {
    let r = counterexample_regression().map_err(|e| e.to_string())?;
    ensure(r.passed() && r.witness.as_deref() == Some("y1*y2*y3"), || format!("{r}"))
}

fn c10_dual_cauchy() -> Check {
    let mut reports = Vec::new();
    for n in 0..=3 {
        for m in 0..=3 {
            reports.push(verify_dual_cauchy(&VarSeq::xs(n), &VarSeq::ys(m), Mode::Symbolic).map_err(|e| e.to_string())?);
        }
    }
    all_pass(&reports)
}

fn c11_square_and_reciprocity() -> Check {
    let mut reports = Vec::new();
    for n in 0..=3 {
        for m in 0..=3 {
            for l in 0..=3 {
                reports.push(littlewood_square_check(l, &VarSeq::xs(n), &VarSeq::ys(m)).map_err(|e| e.to_string())?);
            }
            if n > 0 {
                for lambda in partitions_in_box(m, n) {
                    reports.push(complement_reciprocity_check(&lambda, m, &VarSeq::xs(n)).map_err(|e| e.to_string())?);
                }
            }
        }
    }
    all_pass(&reports)
}

fn c12_subpartitions() -> Check {
    for m in 0..=3 {
        for n in 0..=3 {
            for l in 0..=2 {
                for kappa in partitions_in_box(m + n, l) {
                    let pairs = enumerate_subpartition_pairs(&kappa, m, n, l).map_err(|e| e.to_string())?;
                    ensure(pairs.len() == binomial(m + n, m), || {
                        format!("{kappa} at ({m},{n},{l}): {} pairs", pairs.len())
                    })?;
                    let mut image = BTreeSet::new();
                    for p in &pairs {
                        let sub = sub_partition(&p.lambda, n + l, &p.k).map_err(|e| e.to_string())?;
                        ensure(sub == kappa, || format!("sub of {:?} is {sub}", p))?;
                        let (a, b, sign) = subpartition_to_overlap(&p.lambda, &p.k, m, n + l).map_err(|e| e.to_string())?;
                        image.insert((a, b, sign));
                    }
                    let fiber: BTreeSet<_> = enumerate_overlap_pairs(&kappa.conjugate(), m, n)
                        .map_err(|e| e.to_string())?
                        .into_iter()
                        .map(|p| (p.mu, p.nu, p.sign))
                        .collect();
                    ensure(image == fiber, || format!("{kappa} at ({m},{n},{l}): image is not the fiber"))?;
                }
            }
        }
    }
    let lambda = partition![4, 4, 2, 2, 1, 1, 1];
    let k = [1, 4, 5, 7];
    let sub = sub_partition(&lambda, 7, &k).map_err(|e| e.to_string())?;
    ensure(sub == partition![7, 3, 2, 1], || format!("sub = {sub}"))?;
    let pairs = enumerate_subpartition_pairs(&sub, 4, 3, 4).map_err(|e| e.to_string())?;
    ensure(pairs.iter().any(|p| p.lambda == lambda && p.k == k), || "worked instance missing".into())
}

fn c13_laplace() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for trial in 0..200 {
        let rows: Vec<Vec<BigInt>> = (0..6)
            .map(|_| (0..6).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect())
            .collect();
        let m = Matrix::from_rows(rows);
        let direct = m.det_bareiss().map_err(|e| e.to_string())?;
        ensure(m.det_cofactor().map_err(|e| e.to_string())? == direct, || format!("cofactor, trial {trial}"))?;
        for mask in 0u32..64 {
            let k: Vec<usize> = (0..6).filter(|i| mask & (1 << i) != 0).collect();
            let lap = m.laplace_rows(&k).map_err(|e| e.to_string())?;
            ensure(lap == direct, || format!("trial {trial}, rows {k:?}: {lap} vs {direct}"))?;
        }
    }
    Ok(())
}

type Criterion = (&'static str, Duration, fn() -> Check);

fn main() {
    let ms = Duration::from_millis;
    let criteria: [Criterion; 13] = [
        ("index examples", ms(1), c1_index),
        ("intro overlap", ms(1), c2_intro_overlap),
        ("walk example", ms(1), c3_walk),
        ("fiber bijection", ms(60_000), c4_fiber_bijection),
        ("infinite-overlap witness", ms(30_000), c5_infinite_witness),
        ("route equivalence", ms(300_000), c6_routes),
        ("first overlap identity", ms(600_000), c7_first_overlap),
        ("second overlap and walk split", ms(600_000), c8_second_overlap),
        ("counterexample regression", ms(1_000), c9_counterexample),
        ("dual Cauchy", ms(10_000), c10_dual_cauchy),
        ("Littlewood square and complement reciprocity", ms(30_000), c11_square_and_reciprocity),
        ("subpartition correspondence", ms(60_000), c12_subpartitions),
        ("Laplace expansion", ms(60_000), c13_laplace),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match (&result, took <= *limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => "FAIL (over time limit)".to_string(),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {:>2} {name}: {verdict} [{took:.3?} / limit {limit:?}; exact arithmetic, zero tolerance]", i + 1);
    }
    println!("{} of 13 criteria passed", 13 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
