//! Schur polynomials by the bialternant and by tableau branching, plus the
//! factor rule and complement reciprocity checks.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use crate::identities::{IdentityId, Mode, VerificationReport};
use crate::partitions::Partition;
use crate::polyring::{
    e_prod, e_prod_eval, AlgebraError, CertifiedGrid, Matrix, MultiPoly, Point, Ring, Var, VarSeq,
};

pub(crate) fn ring_pow<T: Ring>(base: &T, e: usize) -> T {
    let mut acc = T::one();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

/// `s_lambda(X)` as the alternant `det(x_i^(lambda_j + n - j))` divided by
/// `Delta(X)`, one binomial factor at a time. Every division is checked exact.
pub fn schur_bialternant(lambda: &Partition, x: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    let n = x.len();
    if lambda.length() > n {
        return Ok(MultiPoly::zero());
    }
    let vals = x.to_polys()?;
    let alt = Matrix::from_fn(n, n, |i, j| ring_pow(&vals[i], lambda.part(j + 1) + n - 1 - j));
    let mut q = alt.det_cofactor()?;
    for i in 0..n {
        for j in i + 1..n {
            q = q.div_exact(&(&vals[i] - &vals[j]))?;
        }
    }
    Ok(q)
}

/// Horizontal strips: all `mu` with `lambda_{i+1} <= mu_i <= lambda_i`.
fn strip_predecessors(lambda: &Partition, max_len: usize) -> Vec<Partition> {
    let len = lambda.length();
    if len > max_len + 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(lambda: &Partition, i: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > len {
            out.push(Partition::new(cur.clone()).expect("interlacing parts decrease"));
            return;
        }
        for p in lambda.part(i + 1)..=lambda.part(i) {
            cur.push(p);
            rec(lambda, i + 1, len, cur, out);
            cur.pop();
        }
    }
    rec(lambda, 1, len, &mut cur, &mut out);
    out.retain(|mu| mu.length() <= max_len);
    out
}

/// Sum over semistandard tableaux, evaluated through the branching rule
/// `s_lambda(v_1..v_k) = sum_mu s_mu(v_1..v_{k-1}) v_k^{|lambda/mu|}` over
/// horizontal strips. Values need not be distinct.
pub fn schur_branching<T: Ring>(lambda: &Partition, vals: &[T]) -> T {
    fn go<T: Ring>(
        lambda: &Partition,
        vals: &[T],
        pows: &[Vec<T>],
        memo: &mut HashMap<(Partition, usize), T>,
    ) -> T {
        let k = vals.len();
        if lambda.length() > k {
            return T::zero();
        }
        if k == 0 {
            return T::one();
        }
        if let Some(v) = memo.get(&(lambda.clone(), k)) {
            return v.clone();
        }
        let mut acc = T::zero();
        for mu in strip_predecessors(lambda, k - 1) {
            let sub = go(&mu, &vals[..k - 1], pows, memo);
            if sub.is_zero() {
                continue;
            }
            acc = acc.add(&sub.mul(&pows[k - 1][lambda.size() - mu.size()]));
        }
        memo.insert((lambda.clone(), k), acc.clone());
        acc
    }
    let top = lambda.part(1);
    let pows: Vec<Vec<T>> = vals
        .iter()
        .map(|v| {
            let mut row = vec![T::one()];
            for e in 1..=top {
                let next = row[e - 1].mul(v);
                row.push(next);
            }
            row
        })
        .collect();
    go(lambda, vals, &pows, &mut HashMap::new())
}

/// The tableau route; works for sequences with sign flags.
pub fn schur_ssyt(lambda: &Partition, x: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    Ok(schur_branching(lambda, &x.to_polys()?))
}

type SchurCache = RwLock<HashMap<(Partition, usize), Arc<MultiPoly>>>;

fn cache() -> &'static SchurCache {
    static CACHE: OnceLock<SchurCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `s_lambda(x_1, ..., x_n)`, memoized.
fn canonical(lambda: &Partition, n: usize) -> Arc<MultiPoly> {
    let key = (lambda.clone(), n);
    if let Some(p) = cache().read().expect("schur cache poisoned").get(&key) {
        return p.clone();
    }
    let vals: Vec<MultiPoly> = (1..=n).map(|i| MultiPoly::var(Var::x(i))).collect();
    let p = Arc::new(schur_branching(lambda, &vals));
    cache()
        .write()
        .expect("schur cache poisoned")
        .entry(key)
        .or_insert(p)
        .clone()
}

/// Moves a polynomial in `x_1..x_n` onto the variables of `seq`, applying
/// its sign flags.
pub(crate) fn transport(p: &MultiPoly, seq: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    if let Some(e) = seq.entries().iter().find(|e| e.inverted) {
        return Err(AlgebraError::InvertedSymbolic(e.var));
    }
    let targets: Vec<Var> = seq.vars().collect();
    let renamed = if targets.iter().enumerate().all(|(i, &v)| v == Var::x(i + 1)) {
        p.clone()
    } else {
        p.rename(|v| targets[v.id() / 2])
    };
    Ok(renamed.negate_vars(&seq.negated_vars()))
}

/// `s_lambda(X)`, the fast cached route.
pub fn schur(lambda: &Partition, x: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    if lambda.length() > x.len() {
        return Ok(MultiPoly::zero());
    }
    transport(&canonical(lambda, x.len()), x)
}

/// Exact value of `s_lambda(X)` at a point, honouring sign and inversion
/// flags. Uses the bialternant when the values are distinct.
pub fn schur_eval(lambda: &Partition, x: &VarSeq, point: &Point) -> Result<BigRational, AlgebraError> {
    let vals = x.values(point)?;
    schur_eval_values(lambda, &vals)
}

pub fn schur_eval_values(lambda: &Partition, vals: &[BigRational]) -> Result<BigRational, AlgebraError> {
    let n = vals.len();
    if lambda.length() > n {
        return Ok(<BigRational as Zero>::zero());
    }
    let mut vdm = BigRational::from_integer(1.into());
    for i in 0..n {
        for j in i + 1..n {
            vdm *= &vals[i] - &vals[j];
        }
    }
    if Zero::is_zero(&vdm) {
        return Ok(schur_branching(lambda, vals));
    }
    let alt = Matrix::from_fn(n, n, |i, j| ring_pow(&vals[i], lambda.part(j + 1) + n - 1 - j));
    Ok(alt.det_bareiss()? / vdm)
}

fn diff_report(
    identity: IdentityId,
    instance: serde_json::Value,
    mode: Mode,
    diff: &MultiPoly,
) -> VerificationReport {
    if diff.is_zero() {
        VerificationReport::pass(identity, instance, mode)
    } else {
        VerificationReport::fail(identity, instance, mode, diff.to_string())
    }
}

/// `s_{lambda + <m^n>}(X) = e(X)^m s_lambda(X)` with `n = l(X)`.
pub fn factor_rule_check(lambda: &Partition, m: usize, x: &VarSeq) -> Result<VerificationReport, AlgebraError> {
    let n = x.len();
    let instance = json!({ "lambda": lambda, "m": m, "n": n, "X": x.to_string() });
    let lhs = schur_bialternant(&lambda.add(&Partition::rectangle(m, n)), x)?;
    let rhs = &e_prod(x)?.pow(m as u32) * &schur(lambda, x)?;
    Ok(diff_report(IdentityId::FactorRule, instance, Mode::Symbolic, &(&lhs - &rhs)))
}

/// `s_{complement}(X) = s_lambda(X^{-1}) e(X)^m` for `lambda` inside
/// `<m^n>`, `n = l(X)`. Checked symbolically through the reciprocal transform
/// and by exact evaluation, with inverted variables, on a grid of nonzero
/// points.
pub fn complement_reciprocity_check(
    lambda: &Partition,
    m: usize,
    x: &VarSeq,
) -> Result<VerificationReport, AlgebraError> {
    let n = x.len();
    let instance = json!({ "lambda": lambda, "m": m, "n": n, "X": x.to_string() });
    let id = IdentityId::ComplementReciprocity;
    let Ok(comp) = lambda.complement(m, n) else {
        return Ok(VerificationReport::inapplicable(
            id,
            instance,
            Mode::Symbolic,
            format!("{lambda} is not inside <{m}^{n}>"),
        ));
    };

    let plain = x.plain();
    let vars: Vec<Var> = plain.vars().collect();
    let lhs = schur(&comp, &plain)?;
    let rhs = schur(lambda, &plain)?.reciprocal(&vars, m as u32)?;
    let diff = &lhs - &rhs;
    if !diff.is_zero() {
        return Ok(VerificationReport::fail(id, instance, Mode::Symbolic, diff.to_string()));
    }

    let bounds: Vec<(Var, u32)> = vars.iter().map(|&v| (v, m.max(1) as u32)).collect();
    for p in CertifiedGrid::new(&bounds).points() {
        let l = schur_eval(&comp, x, &p)?;
        let r = schur_eval(lambda, &x.inverted(), &p)? * num_traits::pow(e_prod_eval(x, &p)?, m);
        if l != r {
            return Ok(VerificationReport::fail(id, instance, Mode::Symbolic, format!("differs at {p}")));
        }
    }
    Ok(VerificationReport::pass(id, instance, Mode::Symbolic))
}
