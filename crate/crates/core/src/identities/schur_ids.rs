use serde_json::{json, Value};

use super::engine::{compare, Factor, Term};
use super::{IdentityError, IdentityId, Mode, VerificationReport};
use crate::overlap::{enumerate_overlap_pairs, enumerate_subpartition_pairs, overlap, subpartition_to_overlap, OverlapError, OverlapResult};
use crate::partitions::{partitions_in_box, Partition};
use crate::polyring::{permutation_sign, AlgebraError, Denominator, Matrix, MultiPoly, Sign, VarSeq};
use crate::walks::enumerate_walks;

type Outcome = Result<VerificationReport, IdentityError>;

/// Past this many variables the first overlap identity is checked after
/// multiplying through by `Delta(X)`, which avoids forming the Schur
/// polynomials and the fractions.
const CLEARED_FORM_VARS: usize = 7;

fn finish(id: IdentityId, instance: Value, mode: Mode, lhs: &[Term], rhs: &[Term]) -> Outcome {
    Ok(match compare(lhs, rhs, mode)? {
        None => VerificationReport::pass(id, instance, mode),
        Some(w) => VerificationReport::fail(id, instance, mode, w),
    })
}

fn schur_split_term(sign: Sign, mu: Partition, nu: Partition, s: &VarSeq, t: &VarSeq) -> Result<Term, AlgebraError> {
    Ok(Term::new(sign)
        .times(Factor::Schur(mu, s.clone()))
        .times(Factor::Schur(nu, t.clone()))
        .over(Denominator::delta_pair(s, t)?))
}

/// `s_{mu ⋆ nu}(X) = sum_S sign s_mu(S) s_nu(T) / Delta(S; T)` over `|S| = m`,
/// with `l(X) = m + n`. An infinite overlap gives `0` on the left.
pub fn verify_first_overlap_schur(mu: &Partition, nu: &Partition, m: usize, n: usize, x: &VarSeq, mode: Mode) -> Outcome {
    let id = IdentityId::FirstOverlapSchur;
    let mut instance = json!({ "mu": mu, "nu": nu, "m": m, "n": n, "X": x.to_string() });
    if x.len() != m + n || mu.length() > m || nu.length() > n {
        let why = "need l(X) = m + n, l(mu) <= m, l(nu) <= n".to_string();
        return Ok(VerificationReport::inapplicable(id, instance, mode, why));
    }
    let o = overlap(mu, nu, m, n)?;
    if let Some(v) = o.value() {
        instance["lambda"] = json!(v);
        instance["sign"] = json!(o.sign());
    }
    if mode == Mode::Symbolic && x.len() >= CLEARED_FORM_VARS {
        instance["form"] = json!("cleared");
        return cleared_first_overlap(id, instance, &o, mu, nu, m, n, x);
    }
    let lhs: Vec<Term> = o
        .value()
        .map(|v| Term::new(Sign::Plus).times(Factor::Schur(v.clone(), x.clone())))
        .into_iter()
        .collect();
    let rhs = x
        .splits(m)
        .into_iter()
        .map(|sp| schur_split_term(o.sign(), mu.clone(), nu.clone(), &sp.first, &sp.second))
        .collect::<Result<Vec<_>, _>>()?;
    finish(id, instance, mode, &lhs, &rhs)
}

/// `det(v_i^{e_j})`.
fn alternant(exponents: &[usize], x: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    let vals = x.to_polys()?;
    Matrix::from_fn(vals.len(), vals.len(), |i, j| vals[i].pow(exponents[j] as u32)).det_cofactor()
}

fn shifted_exponents(lambda: &Partition, len: usize) -> Vec<usize> {
    (1..=len).map(|j| lambda.part(j) + len - j).collect()
}

/// `a_{lambda + rho}(X) = sum_S sign sigma(S) a_{mu + rho}(S) a_{nu + rho}(T)`,
/// where `sigma(S)` sorts the positions of `S` followed by those of `T`.
#[allow(clippy::too_many_arguments)]
fn cleared_first_overlap(
    id: IdentityId,
    instance: Value,
    o: &OverlapResult,
    mu: &Partition,
    nu: &Partition,
    m: usize,
    n: usize,
    x: &VarSeq,
) -> Outcome {
    let mut diff = match o.value() {
        Some(v) => alternant(&shifted_exponents(v, m + n), x)?,
        None => MultiPoly::zero(),
    };
    let (em, en) = (shifted_exponents(mu, m), shifted_exponents(nu, n));
    for sp in x.splits(m) {
        let order: Vec<usize> = sp.positions.iter().copied().chain((0..m + n).filter(|i| !sp.positions.contains(i))).collect();
        let sign = o.sign() * permutation_sign(&order);
        let term = &alternant(&em, &sp.first)? * &alternant(&en, &sp.second)?;
        diff -= &sign.apply(term);
    }
    Ok(if diff.is_zero() {
        VerificationReport::pass(id, instance, Mode::Symbolic)
    } else {
        VerificationReport::fail(id, instance, Mode::Symbolic, diff.to_string())
    })
}

/// `s_lambda(S ∪ T) = sum over the (l(S), l(T))-fiber of lambda of
/// sign s_mu(S) s_nu(T) / Delta(S; T)`.
pub fn verify_second_overlap_schur(lambda: &Partition, s: &VarSeq, t: &VarSeq, mode: Mode) -> Outcome {
    let id = IdentityId::SecondOverlapSchur;
    let instance = json!({ "lambda": lambda, "S": s.to_string(), "T": t.to_string() });
    let lhs = [Term::new(Sign::Plus).times(Factor::Schur(lambda.clone(), s.concat(t)?))];
    let pairs = match enumerate_overlap_pairs(lambda, s.len(), t.len()) {
        Ok(pairs) => pairs,
        // too many parts for S ∪ T: the fiber is empty, as is the left side
        Err(OverlapError::TooLong { .. }) => Vec::new(),
        Err(e) => return Err(e.into()),
    };
    let rhs = pairs
        .into_iter()
        .map(|p| schur_split_term(p.sign, p.mu, p.nu, s, t))
        .collect::<Result<Vec<_>, _>>()?;
    finish(id, instance, mode, &lhs, &rhs)
}

/// `s_lambda(S ∪ T) Delta(S; T) = sum_{pi in P(n, m)} (-1)^{|nu(pi)|}
/// s_{mu(pi) + lambda_V}(S) s_{nu(pi)' + lambda_H}(T)` with `m = l(S)`,
/// `n = l(T)`.
pub fn verify_labeled_walk_schur(lambda: &Partition, s: &VarSeq, t: &VarSeq, mode: Mode) -> Outcome {
    let id = IdentityId::LabeledWalkSchur;
    let (m, n) = (s.len(), t.len());
    let instance = json!({ "lambda": lambda, "S": s.to_string(), "T": t.to_string() });
    if lambda.length() > m + n {
        let why = format!("l(lambda) exceeds l(S) + l(T) = {}", m + n);
        return Ok(VerificationReport::inapplicable(id, instance, mode, why));
    }
    let labels = lambda.padded(m + n);
    let pick = |base: Partition, times: Vec<usize>| {
        Partition::new(times.iter().enumerate().map(|(i, &t)| base.part(i + 1) + labels[t - 1]).collect())
    };
    let lhs = [Term::new(Sign::Plus).times(Factor::Schur(lambda.clone(), s.concat(t)?))];
    let mut rhs = Vec::new();
    for walk in enumerate_walks(n, m) {
        let mu = pick(walk.mu(), walk.v_times())?;
        let nu = pick(walk.nu_conjugate(), walk.h_times())?;
        rhs.push(schur_split_term(Sign::pow_neg_one(walk.nu().size() as i64), mu, nu, s, t)?);
    }
    finish(id, instance, mode, &lhs, &rhs)
}

/// `s_{kappa'}(S ∪ T) Delta(S; T) = sum_{(lambda, K)} (-1)^{|tilde_C|}
/// s_{lambda'}(S) s_{sub(tilde, C(K))}(T)` for `kappa ⊆ <(m+n)^l>`.
pub fn verify_subpartition_schur(kappa: &Partition, l: usize, s: &VarSeq, t: &VarSeq, mode: Mode) -> Outcome {
    let id = IdentityId::SubpartitionSchur;
    let (m, n) = (s.len(), t.len());
    let instance = json!({ "kappa": kappa, "l": l, "S": s.to_string(), "T": t.to_string() });
    if !kappa.fits_in(m + n, l) {
        let why = format!("kappa is not contained in <{}^{l}>", m + n);
        return Ok(VerificationReport::inapplicable(id, instance, mode, why));
    }
    let lhs = [Term::new(Sign::Plus).times(Factor::Schur(kappa.conjugate(), s.concat(t)?))];
    let mut rhs = Vec::new();
    for pair in enumerate_subpartition_pairs(kappa, m, n, l)? {
        let (conj, sub, sign) = subpartition_to_overlap(&pair.lambda, &pair.k, m, n + l)?;
        rhs.push(schur_split_term(sign, conj, sub, s, t)?);
    }
    finish(id, instance, mode, &lhs, &rhs)
}

/// The Littlewood-Schur form of the subpartition expansion, with
/// `l(S) = m`, `l(T) = n + tilde_n` and `l(Y) = q`:
/// `LS_{kappa'}(-(S ∪ T); Y)` expanded over `p`, splits `Y = U ∪ V` and the
/// subpartition pairs of `kappa` for `(m - p, n + p, l)`.
pub fn verify_subpartition_ls(
    kappa: &Partition,
    tilde_n: usize,
    l: usize,
    s: &VarSeq,
    t: &VarSeq,
    y: &VarSeq,
    mode: Mode,
) -> Outcome {
    let id = IdentityId::SubpartitionLs;
    let instance = json!({
        "kappa": kappa, "tilde_n": tilde_n, "l": l,
        "S": s.to_string(), "T": t.to_string(), "Y": y.to_string(),
    });
    let m = s.len();
    let q = y.len();
    let bad = |why: String| Ok(VerificationReport::inapplicable(id, instance.clone(), mode, why));
    if tilde_n > t.len() || tilde_n > q {
        return bad(format!("tilde_n = {tilde_n} exceeds l(T) or l(Y)"));
    }
    let n = t.len() - tilde_n;
    if !kappa.fits_in(m + n, l) {
        return bad(format!("kappa is not contained in <{}^{l}>", m + n));
    }
    if !kappa.contains_cell(m + n, q - tilde_n) {
        return bad(format!("cell ({}, {}) is not in kappa", m + n, q - tilde_n));
    }
    let ls = |lambda: Partition, x: &VarSeq, y: &VarSeq| Factor::Ls(lambda, x.negated(), y.clone());
    let lhs = [Term::new(Sign::Plus).times(ls(kappa.conjugate(), &s.concat(t)?, y))];
    let mut rhs = Vec::new();
    for p in 0..=m.min(q) {
        let pairs = enumerate_subpartition_pairs(kappa, m - p, n + p, l)?;
        for sp in y.splits(p) {
            let (u, v) = (&sp.first, &sp.second);
            let num = &crate::polyring::delta_pair(v, s)? * &crate::polyring::delta_pair(t, u)?;
            let den = Denominator::delta_pair(v, u)?.mul(&Denominator::delta_pair(t, s)?);
            for pair in &pairs {
                let (conj, sub, sign) = subpartition_to_overlap(&pair.lambda, &pair.k, m - p, n + p + l)?;
                let reduced = conj.minus_rectangle(q - tilde_n, m - p)?;
                rhs.push(
                    Term::new(sign)
                        .times(ls(reduced, s, u))
                        .times(ls(sub, t, v))
                        .times(Factor::Poly(num.clone()))
                        .over(den.clone()),
                );
            }
        }
    }
    finish(id, instance, mode, &lhs, &rhs)
}

/// `sum_{lambda ⊆ <m^n>} s_lambda(X) s_{lambda'}(Y) = prod (1 + x y)` with
/// `n = l(X)`, `m = l(Y)`.
pub fn verify_dual_cauchy(x: &VarSeq, y: &VarSeq, mode: Mode) -> Outcome {
    let id = IdentityId::DualCauchy;
    let instance = json!({ "X": x.to_string(), "Y": y.to_string() });
    let mut prod = MultiPoly::one();
    let (xp, yp) = (x.to_polys()?, y.to_polys()?);
    for a in &xp {
        for b in &yp {
            prod = &prod * &(&MultiPoly::one() + &(a * b));
        }
    }
    let lhs: Vec<Term> = partitions_in_box(y.len(), x.len())
        .into_iter()
        .map(|lambda| {
            let conj = lambda.conjugate();
            Term::new(Sign::Plus)
                .times(Factor::Schur(lambda, x.clone()))
                .times(Factor::Schur(conj, y.clone()))
        })
        .collect();
    let rhs = [Term::new(Sign::Plus).times(Factor::Poly(prod))];
    finish(id, instance, mode, &lhs, &rhs)
}
