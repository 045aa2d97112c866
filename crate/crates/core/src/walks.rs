//! Staircase walks in a rectangle, read from the top-right corner down to the
//! bottom-left corner.
//!
//! A walk in `P(n, m)` crosses a rectangle of width `n` and height `m`, so it
//! takes `n` horizontal (west) steps and `m` vertical (south) steps. Step
//! times are 1-based.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("invalid step character {0:?}; expected 'H' or 'V'")]
    InvalidStep(char),
    #[error("cut {cut} is outside a walk of {len} steps")]
    CutOutOfRange { cut: usize, len: usize },
    #[error("label sequence has length {labels}, walk has {steps} steps")]
    LengthMismatch { labels: usize, steps: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    H,
    V,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::H => 'H',
            Step::V => 'V',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StaircaseWalk {
    steps: Vec<Step>,
}

impl StaircaseWalk {
    pub fn new(steps: Vec<Step>) -> Self {
        StaircaseWalk { steps }
    }

    /// The walk with the given horizontal and vertical step times.
    pub fn from_v_times(total: usize, v_times: &[usize]) -> Self {
        let mut steps = vec![Step::H; total];
        for &t in v_times {
            steps[t - 1] = Step::V;
        }
        StaircaseWalk { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Width of the bounding rectangle (number of horizontal steps).
    pub fn width(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::H).count()
    }

    /// Height of the bounding rectangle (number of vertical steps).
    pub fn height(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::V).count()
    }

    pub fn v_times(&self) -> Vec<usize> {
        self.times(Step::V)
    }

    pub fn h_times(&self) -> Vec<usize> {
        self.times(Step::H)
    }

    fn times(&self, kind: Step) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == kind)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The partition of boxes above the walk: `mu_i = n + i - V_i`.
    pub fn mu(&self) -> Partition {
        let n = self.width();
        let parts = self
            .v_times()
            .iter()
            .enumerate()
            .map(|(i, &v)| n + i + 1 - v)
            .collect();
        Partition::new(parts).expect("step times increase")
    }

    /// The conjugate of the partition below the walk: `nu'_i = m + i - H_i`.
    pub fn nu_conjugate(&self) -> Partition {
        let m = self.height();
        let parts = self
            .h_times()
            .iter()
            .enumerate()
            .map(|(i, &h)| m + i + 1 - h)
            .collect();
        Partition::new(parts).expect("step times increase")
    }

    /// The partition of boxes below the walk, rotated by 180 degrees.
    pub fn nu(&self) -> Partition {
        self.nu_conjugate().conjugate()
    }

    /// Splits into the first `cut` steps and the remaining steps, each viewed
    /// as a walk in its own bounding rectangle.
    pub fn split(&self, cut: usize) -> Result<(StaircaseWalk, StaircaseWalk), WalkError> {
        if cut > self.len() {
            return Err(WalkError::CutOutOfRange {
                cut,
                len: self.len(),
            });
        }
        let (a, b) = self.steps.split_at(cut);
        Ok((StaircaseWalk::new(a.to_vec()), StaircaseWalk::new(b.to_vec())))
    }

    /// Walking up the stairs and rotating by 180 degrees: the reversed word.
    pub fn complement(&self) -> StaircaseWalk {
        let mut steps = self.steps.clone();
        steps.reverse();
        StaircaseWalk { steps }
    }

    /// Checks the quasi-partition conditions for the labels `alpha`
    /// (`alpha[i - 1]` labels step `i`).
    pub fn is_quasi_partition(&self, alpha: &[i64]) -> Result<bool, WalkError> {
        if alpha.len() != self.len() {
            return Err(WalkError::LengthMismatch {
                labels: alpha.len(),
                steps: self.len(),
            });
        }
        let len = alpha.len();
        if len == 0 {
            return Ok(true);
        }
        if alpha[len - 1] < 0 {
            return Ok(false);
        }
        // no strict double ascent at interior indices
        if alpha.windows(3).any(|w| w[0] < w[1] && w[1] < w[2]) {
            return Ok(false);
        }
        for i in 0..len - 1 {
            let bound = if self.steps[i] == self.steps[i + 1] {
                alpha[i]
            } else {
                alpha[i] + 1
            };
            if alpha[i + 1] > bound {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// All walks in `P(n, m)`: `n` horizontal and `m` vertical steps, in
/// lexicographic order of the step word (`H < V`).
pub fn enumerate_walks(n: usize, m: usize) -> Vec<StaircaseWalk> {
    fn rec(h: usize, v: usize, prefix: &mut Vec<Step>, out: &mut Vec<StaircaseWalk>) {
        if h == 0 && v == 0 {
            out.push(StaircaseWalk::new(prefix.clone()));
            return;
        }
        if h > 0 {
            prefix.push(Step::H);
            rec(h - 1, v, prefix, out);
            prefix.pop();
        }
        if v > 0 {
            prefix.push(Step::V);
            rec(h, v - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, &mut Vec::with_capacity(n + m), &mut out);
    out
}

#[cfg(test)]
/// `(rho_{len})_{times}` for 1-based step times.
pub(crate) fn rho_at(len: usize, times: &[usize]) -> Vec<i64> {
    let rho = crate::partitions::rho_seq(len);
    times.iter().map(|&t| rho[t - 1]).collect()
}

impl fmt::Display for StaircaseWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for StaircaseWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StaircaseWalk({self})")
    }
}

impl std::str::FromStr for StaircaseWalk {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'H' | 'h' => Ok(Step::H),
                'V' | 'v' => Ok(Step::V),
                other => Err(WalkError::InvalidStep(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StaircaseWalk::new(steps))
    }
}

impl Serialize for StaircaseWalk {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for StaircaseWalk {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partitions::{partitions_in_box, rho_seq};

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn sample_walk() -> StaircaseWalk {
        "HVVHHHVHH".parse().unwrap()
    }

    #[test]
    fn enumeration_counts_and_order() {
        let w = enumerate_walks(1, 1);
        assert_eq!(w.iter().map(|w| w.to_string()).collect::<Vec<_>>(), ["HV", "VH"]);
        let w63 = enumerate_walks(6, 3);
        assert_eq!(w63.len(), 84);
        assert!(w63.iter().any(|w| w.v_times() == vec![2, 3, 7]));
        assert_eq!(enumerate_walks(4, 4).len(), 70);
        for n in 0..6 {
            for m in 0..6 {
                let walks = enumerate_walks(n, m);
                assert_eq!(walks.len(), binomial(n + m, m));
                assert!(walks.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }

    #[test]
    fn step_times() {
        let w = sample_walk();
        assert_eq!(w.v_times(), vec![2, 3, 7]);
        assert_eq!(w.h_times(), vec![1, 4, 5, 6, 8, 9]);
        let flat: StaircaseWalk = "HHHH".parse().unwrap();
        assert!(flat.v_times().is_empty());
        assert_eq!(flat.h_times(), vec![1, 2, 3, 4]);
        for n in 0..6 {
            for m in 0..6 {
                for w in enumerate_walks(n, m) {
                    let mut all = w.v_times();
                    all.extend(w.h_times());
                    all.sort();
                    assert_eq!(all, (1..=n + m).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn associated_partitions() {
        let w = sample_walk();
        assert_eq!(w.mu(), partition![5, 5, 2]);
        assert_eq!(w.nu(), partition![4, 1, 1]);
        assert_eq!(w.nu_conjugate(), partition![3, 1, 1, 1]);
        let vfirst: StaircaseWalk = "VVVHH".parse().unwrap();
        assert_eq!(vfirst.mu(), Partition::rectangle(2, 3));
        assert_eq!(vfirst.nu(), Partition::empty());
    }

    #[test]
    fn encoding_and_complementarity_exhaustive() {
        for n in 0..=6 {
            for m in 0..=6 {
                for w in enumerate_walks(n, m) {
                    let mu = w.mu();
                    let nu = w.nu();
                    assert_eq!(mu.size() + nu.size(), m * n);
                    assert_eq!(nu, mu.complement(n, m).unwrap());
                    // mu + rho_m = (rho_{m+n})_V and nu' + rho_n = (rho_{m+n})_H
                    let lhs: Vec<i64> = mu
                        .padded_signed(m)
                        .iter()
                        .zip(rho_seq(m))
                        .map(|(a, b)| a + b)
                        .collect();
                    assert_eq!(lhs, rho_at(m + n, &w.v_times()));
                    let lhs: Vec<i64> = w
                        .nu_conjugate()
                        .padded_signed(n)
                        .iter()
                        .zip(rho_seq(n))
                        .map(|(a, b)| a + b)
                        .collect();
                    assert_eq!(lhs, rho_at(m + n, &w.h_times()));
                }
            }
        }
    }

    #[test]
    fn split_walks() {
        // m = 5, n = 8, k = 4, l = 3: a walk in P(6, 3) with 9 steps
        let w: StaircaseWalk = "HVVHHHVHH".parse().unwrap();
        let (a, b) = w.split(4).unwrap();
        assert_eq!((a.width(), a.height()), (2, 2));
        assert_eq!((b.width(), b.height()), (4, 1));
        let (a, b) = w.split(0).unwrap();
        assert!(a.is_empty());
        assert_eq!(b, w);
        assert!(w.split(10).is_err());
        for total in 0..=8 {
            for m in 0..=total {
                for w in enumerate_walks(total - m, m) {
                    for cut in 0..=total {
                        let (a, b) = w.split(cut).unwrap();
                        let mut steps = a.steps().to_vec();
                        steps.extend_from_slice(b.steps());
                        assert_eq!(steps, w.steps());
                    }
                }
            }
        }
    }

    #[test]
    fn complement_walk() {
        let w = sample_walk();
        let t = w.complement();
        assert_eq!(t.to_string(), "HHVHHHVVH");
        assert_eq!(t.mu(), partition![4, 1, 1]);
        assert_eq!(t.complement(), w);
        for n in 0..=5 {
            for m in 0..=5 {
                for w in enumerate_walks(n, m) {
                    let t = w.complement();
                    assert_eq!(t.mu(), w.nu());
                    assert_eq!(t.nu(), w.mu());
                    let (vp, vt) = (w.v_times(), t.v_times());
                    for i in 0..m {
                        assert_eq!(vp[m - 1 - i], m + n + 1 - vt[i]);
                    }
                }
            }
        }
    }

    #[test]
    fn quasi_partition_examples() {
        let w: StaircaseWalk = "VHVHHHVHH".parse().unwrap();
        assert_eq!(w.v_times(), vec![1, 3, 7]);
        assert!(w.is_quasi_partition(&[4, 2, 3, 1, 1, -1, -1, 0, 0]).unwrap());
        let w: StaircaseWalk = "HVH".parse().unwrap();
        assert!(!w.is_quasi_partition(&[0, 1, 2]).unwrap());
        assert!(w.is_quasi_partition(&[0, 1]).is_err());
    }

    #[test]
    fn partitions_are_quasi_partitions_for_every_walk() {
        for n in 0..=4 {
            for m in 0..=4 {
                if n + m < 3 {
                    continue;
                }
                let walks = enumerate_walks(n, m);
                for l in partitions_in_box(3, n + m) {
                    let alpha = l.padded_signed(n + m);
                    assert!(walks.iter().all(|w| w.is_quasi_partition(&alpha).unwrap()));
                }
            }
        }
    }

    #[test]
    fn quasi_for_all_walks_implies_partition() {
        // converse of the previous property, away from the 1 x 1 exception
        for n in 0..=3usize {
            for m in 0..=3usize {
                if n + m < 3 {
                    continue;
                }
                let len = n + m;
                let walks = enumerate_walks(n, m);
                let mut alpha = vec![-2i64; len];
                loop {
                    let all = walks.iter().all(|w| w.is_quasi_partition(&alpha).unwrap());
                    let is_partition = Partition::from_signed(&alpha).is_ok();
                    assert_eq!(all, is_partition, "{alpha:?} n={n} m={m}");
                    // odometer over [-2, 3]^len
                    let mut i = 0;
                    while i < len && alpha[i] == 3 {
                        alpha[i] = -2;
                        i += 1;
                    }
                    if i == len {
                        break;
                    }
                    alpha[i] += 1;
                }
            }
        }
    }

    #[test]
    fn json_is_step_word() {
        let w = sample_walk();
        assert_eq!(serde_json::to_string(&w).unwrap(), "\"HVVHHHVHH\"");
        let back: StaircaseWalk = serde_json::from_str("\"HVVHHHVHH\"").unwrap();
        assert_eq!(back, w);
        assert!("HXV".parse::<StaircaseWalk>().is_err());
    }
}
