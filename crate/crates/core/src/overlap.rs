//! The `(m, n)`-overlap of two partitions, its sign, and the walk-based
//! enumerations of overlap fibers, infinite overlaps and subpartitions.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::partitions::{rho_seq, Partition, PartitionError};
use crate::polyring::{sort_sign, Sign};
use crate::walks::{enumerate_walks, StaircaseWalk, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OverlapError {
    #[error("partition {partition} has more than {max} parts")]
    TooLong { partition: Partition, max: usize },
    #[error("index sequence {indices:?} is not strictly increasing within 1..={n}")]
    BadIndices { indices: Vec<usize>, n: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Result of `mu ⋆_{m,n} nu`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OverlapResult {
    Finite { value: Partition, sign: Sign },
    /// The shifted sequences collide. The sign of this case is `+1`.
    Infinite,
}

impl OverlapResult {
    pub fn is_infinite(&self) -> bool {
        matches!(self, OverlapResult::Infinite)
    }

    pub fn value(&self) -> Option<&Partition> {
        match self {
            OverlapResult::Finite { value, .. } => Some(value),
            OverlapResult::Infinite => None,
        }
    }

    pub fn sign(&self) -> Sign {
        match self {
            OverlapResult::Finite { sign, .. } => *sign,
            OverlapResult::Infinite => Sign::Plus,
        }
    }
}

/// `{"value":[...],"sign":±1}` or `{"infinite":true}`.
impl Serialize for OverlapResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        match self {
            OverlapResult::Finite { value, sign } => {
                map.serialize_entry("value", value)?;
                map.serialize_entry("sign", sign)?;
            }
            OverlapResult::Infinite => map.serialize_entry("infinite", &true)?,
        }
        map.end()
    }
}

/// One element of an overlap fiber, together with the walk that labels it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OverlapPair {
    pub mu: Partition,
    pub nu: Partition,
    pub sign: Sign,
    pub walk: StaircaseWalk,
}

/// `{"mu":[...],"nu":[...],"sign":±1}`.
impl Serialize for OverlapPair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("mu", &self.mu)?;
        map.serialize_entry("nu", &self.nu)?;
        map.serialize_entry("sign", &self.sign)?;
        map.end()
    }
}

fn check_len(p: &Partition, max: usize) -> Result<(), OverlapError> {
    if p.length() > max {
        return Err(OverlapError::TooLong {
            partition: p.clone(),
            max,
        });
    }
    Ok(())
}

fn shifted(p: &Partition, len: usize) -> Vec<i64> {
    p.padded_signed(len)
        .iter()
        .zip(rho_seq(len))
        .map(|(a, r)| a + r)
        .collect()
}

/// `mu ⋆_{m,n} nu` with its sign.
pub fn overlap(mu: &Partition, nu: &Partition, m: usize, n: usize) -> Result<OverlapResult, OverlapError> {
    check_len(mu, m)?;
    check_len(nu, n)?;
    let mut seq = shifted(mu, m);
    seq.extend(shifted(nu, n));
    let Some(sign) = sort_sign(&seq) else {
        return Ok(OverlapResult::Infinite);
    };
    seq.sort_unstable_by(|a, b| b.cmp(a));
    let total = m + n;
    let parts: Vec<i64> = seq.iter().zip(rho_seq(total)).map(|(a, r)| a - r).collect();
    let value = Partition::from_signed(&parts).expect("a strictly decreasing merge minus rho is a partition");
    Ok(OverlapResult::Finite { value, sign })
}

/// The fiber `{(mu, nu) : mu ⋆_{m,n} nu = lambda}`, one pair per walk in
/// `P(n, m)`, in lexicographic walk order.
pub fn enumerate_overlap_pairs(lambda: &Partition, m: usize, n: usize) -> Result<Vec<OverlapPair>, OverlapError> {
    check_len(lambda, m + n)?;
    let labels = lambda.padded(m + n);
    Ok(enumerate_walks(n, m)
        .into_iter()
        .map(|walk| {
            let mu = add_labels(&walk.mu(), &labels, &walk.v_times());
            let nu = add_labels(&walk.nu_conjugate(), &labels, &walk.h_times());
            let sign = Sign::pow_neg_one(walk.nu().size() as i64);
            OverlapPair { mu, nu, sign, walk }
        })
        .collect())
}

fn add_labels(base: &Partition, labels: &[usize], times: &[usize]) -> Partition {
    let parts = times
        .iter()
        .enumerate()
        .map(|(i, &t)| base.part(i + 1) + labels[t - 1])
        .collect();
    Partition::new(parts).expect("labels along a walk are non-increasing")
}

/// A walk with a quasi-partition labelling that is not a partition, encoding
/// a pair with infinite overlap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfiniteWitness {
    pub walk: StaircaseWalk,
    pub labels: Vec<i64>,
}

impl InfiniteWitness {
    /// The pair encoded by the witness: `(mu(pi) + alpha_V, nu(pi)' + alpha_H)`.
    pub fn reconstruct(&self) -> Result<(Partition, Partition), OverlapError> {
        let pick = |base: &Partition, times: &[usize]| -> Result<Partition, OverlapError> {
            let parts: Vec<i64> = times
                .iter()
                .enumerate()
                .map(|(i, &t)| base.part(i + 1) as i64 + self.labels[t - 1])
                .collect();
            Ok(Partition::from_signed(&parts)?)
        };
        Ok((
            pick(&self.walk.mu(), &self.walk.v_times())?,
            pick(&self.walk.nu_conjugate(), &self.walk.h_times())?,
        ))
    }
}

/// A witness for `mu ⋆_{m,n} nu = ∞`, or `None` when the overlap is finite.
///
/// The merged shifted sequence is sorted and each entry is assigned to a
/// vertical (from `mu`) or horizontal (from `nu`) step. Equal entries leave a
/// choice; the lexicographically smallest set of vertical step times that
/// yields a quasi-partition is returned.
pub fn infinite_overlap_witness(
    mu: &Partition,
    nu: &Partition,
    m: usize,
    n: usize,
) -> Result<Option<InfiniteWitness>, OverlapError> {
    if !overlap(mu, nu, m, n)?.is_infinite() {
        return Ok(None);
    }
    let total = m + n;
    let a = shifted(mu, m);
    let b = shifted(nu, n);
    let mut merged: Vec<(i64, Step)> = a
        .iter()
        .map(|&v| (v, Step::V))
        .chain(b.iter().map(|&v| (v, Step::H)))
        .collect();
    merged.sort_by(|x, y| y.0.cmp(&x.0).then(y.1.cmp(&x.1)));
    let rho = rho_seq(total);
    let alpha: Vec<i64> = merged.iter().zip(&rho).map(|((v, _), r)| v - r).collect();
    // a and b are each strictly decreasing, so a tie pairs one entry of each;
    // try both orientations of every tie
    let ties: Vec<usize> = (0..total - 1).filter(|&i| merged[i].0 == merged[i + 1].0).collect();
    let mut best: Option<InfiniteWitness> = None;
    for choice in 0u64..(1u64 << ties.len()) {
        let mut steps: Vec<Step> = merged.iter().map(|&(_, s)| s).collect();
        for (bit, &i) in ties.iter().enumerate() {
            if choice & (1 << bit) != 0 {
                steps.swap(i, i + 1);
            }
        }
        let walk = StaircaseWalk::new(steps);
        let witness = InfiniteWitness {
            walk,
            labels: alpha.clone(),
        };
        let valid = witness.walk.is_quasi_partition(&witness.labels).unwrap_or(false)
            && witness.reconstruct().ok().as_ref() == Some(&(mu.clone(), nu.clone()));
        if !valid {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => witness.walk.v_times() < b.walk.v_times(),
        };
        if better {
            best = Some(witness);
        }
    }
    Ok(best)
}

fn check_indices(k: &[usize], n: usize) -> Result<(), OverlapError> {
    let ok = k.windows(2).all(|w| w[0] < w[1]) && k.iter().all(|&j| (1..=n).contains(&j));
    if !ok {
        return Err(OverlapError::BadIndices {
            indices: k.to_vec(),
            n,
        });
    }
    Ok(())
}

/// `sub_N(lambda, K)`: `mu_j = lambda_{K_j} + N - K_j - (l(K) - j)`.
pub fn sub_partition(lambda: &Partition, big_n: usize, k: &[usize]) -> Result<Partition, OverlapError> {
    check_len(lambda, big_n)?;
    check_indices(k, big_n)?;
    let len = k.len();
    let parts = k
        .iter()
        .enumerate()
        .map(|(j, &kj)| lambda.part(kj) + big_n - kj - (len - j - 1))
        .collect();
    Ok(Partition::new(parts).expect("subpartition parts are non-increasing"))
}

/// `C_n(K)`: the increasing arrangement of `{n - j + 1 : j in [n] \ K}`.
pub fn c_indices(k: &[usize], n: usize) -> Result<Vec<usize>, OverlapError> {
    check_indices(k, n)?;
    let mut c: Vec<usize> = (1..=n).filter(|j| !k.contains(j)).map(|j| n - j + 1).collect();
    c.sort_unstable();
    Ok(c)
}

/// The overlap pair of a subpartition: `(lambda', sub_n(tilde, C_n(K)))` with
/// sign `(-1)^{|tilde_{C_n(K)}|}`, where `tilde` is the `(m, n)`-complement of
/// `lambda`. Their `(m, l(C_n(K)))`-overlap is `sub_n(lambda, K)'`.
pub fn subpartition_to_overlap(
    lambda: &Partition,
    k: &[usize],
    m: usize,
    n: usize,
) -> Result<(Partition, Partition, Sign), OverlapError> {
    let tilde = lambda.complement(m, n)?;
    let c = c_indices(k, n)?;
    let nu = sub_partition(&tilde, n, &c)?;
    let weight: usize = tilde.select(&c).iter().sum();
    Ok((lambda.conjugate(), nu, Sign::pow_neg_one(weight as i64)))
}

/// A subpartition presentation `sub_{n+l}(lambda, K) = kappa`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SubpartitionPair {
    pub lambda: Partition,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
}

/// All `(lambda ⊆ <m^{n+l}>, K ⊆ [n+l])` with `l(K) = l` and
/// `sub_{n+l}(lambda, K) = kappa`, built from the overlap fiber of `kappa'` by
/// inserting marked horizontal steps into each labelled walk.
pub fn enumerate_subpartition_pairs(
    kappa: &Partition,
    m: usize,
    n: usize,
    l: usize,
) -> Result<Vec<SubpartitionPair>, OverlapError> {
    if !kappa.fits_in(m + n, l) {
        return Err(PartitionError::NotInRectangle {
            partition: kappa.clone(),
            width: m + n,
            height: l,
        }
        .into());
    }
    let conj = kappa.conjugate();
    let labels = conj.padded(m + n);
    let mut out = Vec::new();
    for pair in enumerate_overlap_pairs(&conj, m, n)? {
        // boundary labels: l before the first step, 0 after the last; a drop
        // of d between neighbours receives d marked horizontal steps
        let mut steps: Vec<Step> = Vec::with_capacity(m + n + l);
        let mut marked: Vec<bool> = Vec::with_capacity(m + n + l);
        let mut prev = l;
        for (i, &s) in pair.walk.steps().iter().enumerate() {
            for _ in labels[i]..prev {
                steps.push(Step::H);
                marked.push(true);
            }
            steps.push(s);
            marked.push(false);
            prev = labels[i];
        }
        for _ in 0..prev {
            steps.push(Step::H);
            marked.push(true);
        }
        let tau = StaircaseWalk::new(steps);
        let width = n + l;
        let mut k: Vec<usize> = Vec::with_capacity(l);
        let mut h_index = 0;
        for (s, &is_marked) in tau.steps().iter().zip(&marked) {
            if *s == Step::H {
                h_index += 1;
                if is_marked {
                    k.push(width - h_index + 1);
                }
            }
        }
        k.sort_unstable();
        let lambda = tau.mu().conjugate();
        debug_assert_eq!(sub_partition(&lambda, width, &k).ok().as_ref(), Some(kappa));
        out.push(SubpartitionPair { lambda, k });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partitions::partitions_in_box;
    use std::collections::BTreeSet;

    fn finite(value: Partition, sign: i64) -> OverlapResult {
        OverlapResult::Finite {
            value,
            sign: Sign::pow_neg_one(if sign < 0 { 1 } else { 0 }),
        }
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(
            overlap(&partition![9, 6, 1], &partition![4, 3, 3, 2], 3, 5).unwrap(),
            finite(partition![4, 2, 2, 2, 2, 1], -1)
        );
        // empty partitions only overlap finitely when one side has no rows,
        // otherwise both shifted sequences end in 0
        assert_eq!(
            overlap(&Partition::empty(), &Partition::empty(), 0, 3).unwrap(),
            finite(Partition::empty(), 1)
        );
        assert_eq!(
            overlap(&Partition::empty(), &Partition::empty(), 2, 3).unwrap(),
            OverlapResult::Infinite
        );
        assert_eq!(
            overlap(&partition![10, 8, 1], &partition![4, 2, 2], 3, 6).unwrap(),
            OverlapResult::Infinite
        );
        assert!(overlap(&partition![1, 1], &Partition::empty(), 1, 1).is_err());
    }

    #[test]
    fn json_encodings() {
        let r = overlap(&partition![9, 6, 1], &partition![4, 3, 3, 2], 3, 5).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"value":[4,2,2,2,2,1],"sign":-1}"#);
        assert_eq!(serde_json::to_string(&OverlapResult::Infinite).unwrap(), r#"{"infinite":true}"#);
        let pairs = enumerate_overlap_pairs(&Partition::empty(), 1, 1).unwrap();
        assert_eq!(serde_json::to_string(&pairs[0]).unwrap(), r#"{"mu":[],"nu":[1],"sign":-1}"#);
        assert_eq!(serde_json::to_string(&pairs[1]).unwrap(), r#"{"mu":[1],"nu":[],"sign":1}"#);
    }

    #[test]
    fn definitional_identity() {
        for n in 0..=4 {
            for mu in partitions_in_box(4, 3) {
                for nu in partitions_in_box(4, n) {
                    let mut merged = shifted(&mu, 3);
                    merged.extend(shifted(&nu, n));
                    match overlap(&mu, &nu, 3, n).unwrap() {
                        OverlapResult::Finite { value, .. } => {
                            merged.sort_unstable_by(|a, b| b.cmp(a));
                            assert_eq!(shifted(&value, 3 + n), merged);
                        }
                        OverlapResult::Infinite => {
                            let set: BTreeSet<i64> = merged.iter().copied().collect();
                            assert!(set.len() < merged.len());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fiber_example() {
        let lambda = partition![7, 4, 3, 3, 3, 1];
        let pairs = enumerate_overlap_pairs(&lambda, 3, 6).unwrap();
        let p = pairs.iter().find(|p| p.walk.v_times() == vec![2, 3, 7]).unwrap();
        assert_eq!(p.mu, partition![9, 8, 2]);
        assert_eq!(p.nu, partition![10, 4, 4, 2]);
        let e = enumerate_overlap_pairs(&Partition::empty(), 1, 1).unwrap();
        let got: Vec<(Partition, Partition, Sign)> = e.into_iter().map(|p| (p.mu, p.nu, p.sign)).collect();
        assert_eq!(
            got,
            vec![
                (Partition::empty(), partition![1], Sign::Minus),
                (partition![1], Partition::empty(), Sign::Plus)
            ]
        );
    }

    #[test]
    fn fibers_match_brute_force() {
        for m in 0..=3 {
            for n in 0..=3 {
                for lambda in partitions_in_box(3, m + n) {
                    let pairs = enumerate_overlap_pairs(&lambda, m, n).unwrap();
                    assert_eq!(pairs.len(), binom(m + n, m));
                    let mut got = BTreeSet::new();
                    for p in &pairs {
                        assert_eq!(
                            overlap(&p.mu, &p.nu, m, n).unwrap(),
                            OverlapResult::Finite {
                                value: lambda.clone(),
                                sign: p.sign
                            }
                        );
                        let alt = Sign::pow_neg_one((m * n - p.walk.mu().size()) as i64);
                        assert_eq!(p.sign, alt);
                        assert!(got.insert((p.mu.clone(), p.nu.clone())));
                    }
                    let l1 = lambda.part(1);
                    let mut brute = BTreeSet::new();
                    for mu in partitions_in_box(l1 + n, m) {
                        for nu in partitions_in_box(l1 + m, n) {
                            if overlap(&mu, &nu, m, n).unwrap().value() == Some(&lambda) {
                                brute.insert((mu.clone(), nu));
                            }
                        }
                    }
                    assert_eq!(got, brute, "lambda={lambda} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn complement_skew_commutativity() {
        for m in 0..=3 {
            for n in 0..=3 {
                for l in 0..=3 {
                    for mu in partitions_in_box(n + l, m) {
                        for nu in partitions_in_box(m + l, n) {
                            let OverlapResult::Finite { value, sign } = overlap(&mu, &nu, m, n).unwrap() else {
                                continue;
                            };
                            if !value.fits_in(l, m + n) {
                                continue;
                            }
                            let mt = mu.complement(n + l, m).unwrap();
                            let nt = nu.complement(m + l, n).unwrap();
                            let expect = OverlapResult::Finite {
                                value: value.complement(l, m + n).unwrap(),
                                sign: sign * Sign::pow_neg_one((m * n) as i64),
                            };
                            assert_eq!(overlap(&mt, &nt, m, n).unwrap(), expect);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn infinite_witness_example() {
        let mu = partition![10, 8, 1];
        let nu = partition![4, 2, 2];
        let w = infinite_overlap_witness(&mu, &nu, 3, 6).unwrap().unwrap();
        assert_eq!(w.labels, vec![4, 2, 3, 1, 1, -1, -1, 0, 0]);
        assert_eq!(w.walk.v_times(), vec![1, 2, 7]);
        assert_eq!(w.reconstruct().unwrap(), (mu.clone(), nu.clone()));
        // the walk drawn with vertical times (1, 3, 7) is an equally valid witness
        let drawn = InfiniteWitness {
            walk: StaircaseWalk::from_v_times(9, &[1, 3, 7]),
            labels: w.labels.clone(),
        };
        assert!(drawn.walk.is_quasi_partition(&drawn.labels).unwrap());
        assert_eq!(drawn.reconstruct().unwrap(), (mu, nu));
    }

    #[test]
    fn infinite_witness_round_trip() {
        let mut infinite = 0;
        for mu in partitions_in_box(4, 3) {
            for nu in partitions_in_box(4, 3) {
                let w = infinite_overlap_witness(&mu, &nu, 3, 3).unwrap();
                match overlap(&mu, &nu, 3, 3).unwrap() {
                    OverlapResult::Infinite => {
                        infinite += 1;
                        let w = w.expect("witness exists");
                        assert!(w.walk.is_quasi_partition(&w.labels).unwrap());
                        assert!(w.labels.windows(2).any(|p| p[0] < p[1]) || w.labels.iter().any(|&a| a < 0));
                        assert_eq!(w.reconstruct().unwrap(), (mu.clone(), nu.clone()));
                    }
                    OverlapResult::Finite { .. } => assert!(w.is_none()),
                }
            }
        }
        assert!(infinite > 0);
        // complementary pair in <n^m> overlaps to the empty partition
        let mu = partition![3, 1];
        let nu = mu.complement(3, 2).unwrap().conjugate();
        assert!(infinite_overlap_witness(&mu, &nu, 2, 3).unwrap().is_none());
    }

    #[test]
    fn subpartition_examples() {
        let lambda = partition![4, 4, 2, 2, 1, 1, 1];
        let s = sub_partition(&lambda, 7, &[1, 4, 5, 7]).unwrap();
        assert_eq!(s, partition![7, 3, 2, 1]);
        assert_eq!(s.conjugate(), partition![4, 3, 2, 1, 1, 1, 1]);
        assert_eq!(sub_partition(&lambda, 7, &[1, 2, 3, 4, 5, 6, 7]).unwrap(), lambda);
        assert!(sub_partition(&lambda, 7, &[2, 1]).is_err());
        assert!(sub_partition(&lambda, 7, &[8]).is_err());
        for big_n in 1..=6 {
            for lambda in partitions_in_box(4, big_n.min(4)) {
                for j in 1..=big_n {
                    let k: Vec<usize> = (1..=big_n).filter(|&i| i != j).collect();
                    let expect: Vec<usize> = k
                        .iter()
                        .map(|&i| lambda.part(i) + usize::from(i < j))
                        .collect();
                    assert_eq!(sub_partition(&lambda, big_n, &k).unwrap().padded(big_n - 1), expect);
                }
            }
        }
    }

    #[test]
    fn c_indices_examples() {
        assert_eq!(c_indices(&[1, 2, 4, 5], 6).unwrap(), vec![1, 4]);
        assert_eq!(c_indices(&[1, 4, 5, 7], 7).unwrap(), vec![2, 5, 6]);
        assert!(c_indices(&[1, 2, 3], 3).unwrap().is_empty());
        for n in 0..=8 {
            for size in 0..=n {
                for k in crate::polyring::combinations(n, size) {
                    let k: Vec<usize> = k.into_iter().map(|i| i + 1).collect();
                    assert_eq!(c_indices(&k, n).unwrap().len(), n - k.len());
                }
            }
        }
    }

    #[test]
    fn subpartition_overlap_lemma() {
        let lambda = partition![4, 4, 2, 2, 1, 1, 1];
        let k = [1, 4, 5, 7];
        let (a, b, sign) = subpartition_to_overlap(&lambda, &k, 4, 7).unwrap();
        let c = c_indices(&k, 7).unwrap();
        assert_eq!(
            overlap(&a, &b, 4, c.len()).unwrap(),
            OverlapResult::Finite {
                value: partition![4, 3, 2, 1, 1, 1, 1],
                sign
            }
        );
        for lambda in partitions_in_box(3, 4) {
            for size in 0..=4 {
                for k in crate::polyring::combinations(4, size) {
                    let k: Vec<usize> = k.into_iter().map(|i| i + 1).collect();
                    let (a, b, sign) = subpartition_to_overlap(&lambda, &k, 3, 4).unwrap();
                    let c = c_indices(&k, 4).unwrap();
                    let expect = sub_partition(&lambda, 4, &k).unwrap().conjugate();
                    assert_eq!(
                        overlap(&a, &b, 3, c.len()).unwrap(),
                        OverlapResult::Finite { value: expect, sign }
                    );
                }
            }
        }
        let (a, b, _) = subpartition_to_overlap(&partition![2, 1], &[1, 2], 2, 2).unwrap();
        assert_eq!((a, b), (partition![2, 1], Partition::empty()));
    }

    #[test]
    fn marked_walk_example() {
        let kappa = partition![7, 3, 2, 1];
        let pairs = enumerate_subpartition_pairs(&kappa, 4, 3, 4).unwrap();
        assert_eq!(pairs.len(), binom(7, 4));
        assert!(pairs.contains(&SubpartitionPair {
            lambda: partition![4, 4, 2, 2, 1, 1, 1],
            k: vec![1, 4, 5, 7]
        }));
    }

    #[test]
    fn subpartition_correspondence_brute_force() {
        for m in 0..=3 {
            for n in 0..=3 {
                for l in 0..=2 {
                    for kappa in partitions_in_box(m + n, l) {
                        let pairs = enumerate_subpartition_pairs(&kappa, m, n, l).unwrap();
                        assert_eq!(pairs.len(), binom(m + n, m));
                        let got: BTreeSet<(Partition, Vec<usize>)> =
                            pairs.iter().map(|p| (p.lambda.clone(), p.k.clone())).collect();
                        assert_eq!(got.len(), pairs.len());
                        let mut brute = BTreeSet::new();
                        for lambda in partitions_in_box(m, n + l) {
                            for k in crate::polyring::combinations(n + l, l) {
                                let k: Vec<usize> = k.into_iter().map(|i| i + 1).collect();
                                if sub_partition(&lambda, n + l, &k).unwrap() == kappa {
                                    brute.insert((lambda.clone(), k));
                                }
                            }
                        }
                        assert_eq!(got, brute, "kappa={kappa} m={m} n={n} l={l}");
                        // the image under the overlap map is the fiber of kappa'
                        let fiber: BTreeSet<(Partition, Partition)> = enumerate_overlap_pairs(&kappa.conjugate(), m, n)
                            .unwrap()
                            .into_iter()
                            .map(|p| (p.mu, p.nu))
                            .collect();
                        let image: BTreeSet<(Partition, Partition)> = pairs
                            .iter()
                            .map(|p| {
                                let (a, b, _) = subpartition_to_overlap(&p.lambda, &p.k, m, n + l).unwrap();
                                (a, b)
                            })
                            .collect();
                        assert_eq!(image, fiber);
                    }
                }
            }
        }
    }

    #[test]
    fn empty_kappa_forces_trailing_indices() {
        let pairs = enumerate_subpartition_pairs(&Partition::empty(), 2, 2, 2).unwrap();
        for p in &pairs {
            assert_eq!(p.k, vec![3, 4]);
            assert!(p.lambda.fits_in(2, 2));
        }
        assert_eq!(pairs.len(), 6);
        assert!(enumerate_subpartition_pairs(&partition![5], 2, 2, 1).is_err());
    }
}
