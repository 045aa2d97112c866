//! Littlewood-Richardson coefficients and Littlewood-Schur polynomials, by
//! the defining sum and by the block determinant.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::identities::{IdentityId, Mode, VerificationReport};
use crate::partitions::{partitions_in_box, Partition};
use crate::polyring::{
    delta_pair, e_prod, AlgebraError, Denominator, Matrix, Monomial, MultiPoly, Point, Sign, Var,
    VarSeq,
};
use crate::schur::{ring_pow, schur, schur_eval_values};

/// Number of LR tableaux of shape `lambda / mu` and content `nu`: rows weakly
/// increasing, columns strictly increasing, reverse reading word a lattice
/// word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !mu.is_subset_of(lambda) || !nu.is_subset_of(lambda) || mu.size() + nu.size() != lambda.size() {
        return 0;
    }
    // filling order: rows top to bottom, each row right to left
    let cells: Vec<(usize, usize)> = (1..=lambda.length())
        .flat_map(|r| (mu.part(r) + 1..=lambda.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut tab: Vec<Vec<usize>> = (0..=lambda.length()).map(|r| vec![0; lambda.part(r.max(1)) + 2]).collect();
    let mut counts = vec![0usize; nu.length() + 1];

    struct Ctx<'a> {
        lambda: &'a Partition,
        mu: &'a Partition,
        nu: &'a Partition,
        cells: &'a [(usize, usize)],
    }

    fn rec(ctx: &Ctx, idx: usize, tab: &mut [Vec<usize>], counts: &mut [usize]) -> u64 {
        let Some(&(r, c)) = ctx.cells.get(idx) else {
            return 1;
        };
        let mut hi = ctx.nu.length().min(r);
        if c < ctx.lambda.part(r) {
            hi = hi.min(tab[r][c + 1]);
        }
        let lo = if r > 1 && c > ctx.mu.part(r - 1) { tab[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            if counts[v] + 1 > ctx.nu.part(v) || (v > 1 && counts[v] + 1 > counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            tab[r][c] = v;
            total += rec(ctx, idx + 1, tab, counts);
            counts[v] -= 1;
        }
        tab[r][c] = 0;
        total
    }

    let ctx = Ctx { lambda, mu, nu, cells: &cells };
    rec(&ctx, 0, &mut tab, &mut counts)
}

/// Nonzero terms `(mu, nu', c)` of the defining sum of `LS_lambda` in `n`
/// and `m` variables: `l(mu) <= n` and `l(nu') <= m`.
type LrTerms = Arc<Vec<(Partition, Partition, u64)>>;
type LrCache = RwLock<HashMap<(Partition, usize, usize), LrTerms>>;

/// `(mu, nu', c^lambda_{mu nu})` with `l(mu) <= n` and `l(nu') <= m`, cached.
fn lr_terms(lambda: &Partition, n: usize, m: usize) -> LrTerms {
    static CACHE: OnceLock<LrCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (lambda.clone(), n, m);
    if let Some(t) = cache.read().expect("lr cache poisoned").get(&key) {
        return t.clone();
    }
    let t = Arc::new(lr_terms_uncached(lambda, n, m));
    cache.write().expect("lr cache poisoned").entry(key).or_insert(t).clone()
}

fn lr_terms_uncached(lambda: &Partition, n: usize, m: usize) -> Vec<(Partition, Partition, u64)> {
    let inside: Vec<Partition> = partitions_in_box(lambda.part(1), lambda.length())
        .into_iter()
        .filter(|p| p.is_subset_of(lambda))
        .collect();
    let mut out = Vec::new();
    for mu in inside.iter().filter(|p| p.length() <= n) {
        for nu in inside.iter().filter(|p| p.part(1) <= m && p.size() + mu.size() == lambda.size()) {
            let c = lr_coefficient(lambda, mu, nu);
            if c > 0 {
                out.push((mu.clone(), nu.conjugate(), c));
            }
        }
    }
    out
}

/// The sign `(-1)^{|lambda_[n-k]|} (-1)^{mk} (-1)^{k(k-1)/2}` of the
/// determinantal formula, with the index `k` it was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LSSign {
    pub index: usize,
    pub value: Sign,
}

impl LSSign {
    /// `None` when the `(m, n)`-index is negative.
    pub fn new(lambda: &Partition, m: usize, n: usize) -> Option<LSSign> {
        let k = lambda.index(m, n);
        if k < 0 {
            return None;
        }
        let head = lambda.truncate(n - k as usize).size() as i64;
        let value = Sign::pow_neg_one(head + m as i64 * k + k * (k - 1) / 2);
        Some(LSSign { index: k as usize, value })
    }
}

type LsCache = RwLock<HashMap<(Partition, usize, usize), Arc<MultiPoly>>>;

fn cache() -> &'static LsCache {
    static CACHE: OnceLock<LsCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Moves a polynomial in `x_1..x_n, y_1..y_m` onto `X` and `Y`, applying
/// their sign flags.
fn transport_xy(p: &MultiPoly, x: &VarSeq, y: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    let both = x.concat(y)?;
    if let Some(e) = both.entries().iter().find(|e| e.inverted) {
        return Err(AlgebraError::InvertedSymbolic(e.var));
    }
    let xs: Vec<Var> = x.vars().collect();
    let ys: Vec<Var> = y.vars().collect();
    let identity = xs.iter().enumerate().all(|(i, &v)| v == Var::x(i + 1))
        && ys.iter().enumerate().all(|(j, &v)| v == Var::y(j + 1));
    let renamed = if identity {
        p.clone()
    } else {
        p.rename(|v| if v.id() % 2 == 0 { xs[v.id() / 2] } else { ys[v.id() / 2] })
    };
    Ok(renamed.negate_vars(&both.negated_vars()))
}

fn canonical_plain(lambda: &Partition, n: usize, m: usize) -> Result<Arc<MultiPoly>, AlgebraError> {
    let key = (lambda.clone(), n, m);
    if let Some(p) = cache().read().expect("ls cache poisoned").get(&key) {
        return Ok(p.clone());
    }
    let x = VarSeq::xs(n);
    let y = VarSeq::ys(m);
    let mut acc = MultiPoly::zero();
    for (mu, nu_conj, c) in lr_terms(lambda, n, m).iter() {
        let term = &schur(mu, &x)? * &schur(nu_conj, &y)?;
        acc += &term.scale(&(*c).into());
    }
    let p = Arc::new(acc);
    Ok(cache()
        .write()
        .expect("ls cache poisoned")
        .entry(key)
        .or_insert(p)
        .clone())
}

/// `LS_lambda(X; Y) = sum c^lambda_{mu nu} s_mu(X) s_{nu'}(Y)`. Sign flags
/// on `X` and `Y` are honoured, so `LS_lambda(-X; Y)` is
/// `ls_combinatorial(lambda, &x.negated(), y)`.
pub fn ls_combinatorial(lambda: &Partition, x: &VarSeq, y: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    let p = canonical_plain(lambda, x.len(), y.len())?;
    transport_xy(&p, x, y)
}

/// The block matrix of the determinantal formula after clearing its
/// denominators: rows of `x`-type are scaled by `x_i^a prod_j (x_i - y_j)`
/// and the Cauchy columns by `y_j^b`, so every entry is a polynomial in the
/// given values.
struct ScaledBlock<T> {
    matrix: Matrix<T>,
    a: usize,
    b: usize,
    sign: Sign,
}

fn scaled_block<T: crate::polyring::Ring>(lambda: &Partition, xs: &[T], ys: &[T]) -> Option<ScaledBlock<T>> {
    let n = xs.len();
    let m = ys.len();
    let eps = LSSign::new(lambda, m, n)?;
    let k = eps.index;
    let conj = lambda.conjugate();
    let xe = |j: usize| lambda.part(j) as i64 + n as i64 - m as i64 - j as i64;
    let ye = |i: usize| conj.part(i) as i64 + m as i64 - n as i64 - i as i64;
    let a = (1..=n - k).map(|j| -xe(j)).max().unwrap_or(0).max(0);
    let b = (1..=m - k).map(|i| -ye(i)).max().unwrap_or(0).max(0);

    let diffs: Vec<Vec<T>> = xs.iter().map(|xi| ys.iter().map(|yj| xi.sub(yj)).collect()).collect();
    let size = n + m - k;
    let matrix = Matrix::from_fn(size, size, |r, c| {
        if r < n {
            if c < m {
                let mut e = ring_pow(&xs[r], a as usize).mul(&ring_pow(&ys[c], b as usize));
                for (j, d) in diffs[r].iter().enumerate() {
                    if j != c {
                        e = e.mul(d);
                    }
                }
                e
            } else {
                let mut e = ring_pow(&xs[r], (xe(c - m + 1) + a) as usize);
                for d in &diffs[r] {
                    e = e.mul(d);
                }
                e
            }
        } else if c < m {
            ring_pow(&ys[c], (ye(r - n + 1) + b) as usize)
        } else {
            T::zero()
        }
    });
    // Delta(Y; X) = (-1)^{nm} prod (x_i - y_j), and the product cancels
    // against the row scaling
    let sign = eps.value * Sign::pow_neg_one((n * m) as i64);
    Some(ScaledBlock {
        matrix,
        a: a as usize,
        b: b as usize,
        sign,
    })
}

/// `LS_lambda(-X; Y)` through the block determinant with a Cauchy block.
/// The scaled determinant is divided by `Delta(X) Delta(Y) e(X)^a e(Y)^b`,
/// and the division is checked exact.
pub fn ls_minus_x_determinantal(lambda: &Partition, x: &VarSeq, y: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    x.concat(y)?;
    let n = x.len();
    let m = y.len();
    let xs: Vec<MultiPoly> = (1..=n).map(|i| MultiPoly::var(Var::x(i))).collect();
    let ys: Vec<MultiPoly> = (1..=m).map(|j| MultiPoly::var(Var::y(j))).collect();
    let Some(block) = scaled_block(lambda, &xs, &ys) else {
        return Ok(MultiPoly::zero());
    };
    let det = block.matrix.det_cofactor()?;
    let mut mono = Monomial::one();
    for i in 1..=n {
        mono.set(Var::x(i), block.a as u32);
    }
    for j in 1..=m {
        mono.set(Var::y(j), block.b as u32);
    }
    let den = Denominator::vandermonde(&VarSeq::xs(n))?
        .mul(&Denominator::vandermonde(&VarSeq::ys(m))?)
        .mul(&Denominator::monomial(mono));
    let plain = block.sign.apply(den.divide(&det)?);
    transport_xy(&plain, x, y)
}

/// Value of `LS_lambda(-X; Y)` at integer values by the scaled determinant.
/// Fails with `SingularPoint` if the divisor vanishes.
pub fn ls_minus_x_det_int(lambda: &Partition, xv: &[BigInt], yv: &[BigInt]) -> Result<BigInt, AlgebraError> {
    let Some(block) = scaled_block(lambda, xv, yv) else {
        return Ok(BigInt::zero());
    };
    let det = block.matrix.det_bareiss()?;
    let mut den = BigInt::one();
    for v in [xv, yv] {
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                den *= &v[i] - &v[j];
            }
        }
    }
    for v in xv {
        den *= num_traits::pow(v.clone(), block.a);
    }
    for v in yv {
        den *= num_traits::pow(v.clone(), block.b);
    }
    if Zero::is_zero(&den) {
        return Err(AlgebraError::SingularPoint);
    }
    let (q, r) = det.div_rem(&den);
    if !Zero::is_zero(&r) {
        return Err(AlgebraError::NotExact { remainder: r.to_string() });
    }
    Ok(block.sign.apply_int(q))
}

/// `LS_lambda(X; Y)` by the determinantal route, un-negating `X`.
pub fn ls_determinantal(lambda: &Partition, x: &VarSeq, y: &VarSeq) -> Result<MultiPoly, AlgebraError> {
    ls_minus_x_determinantal(lambda, &x.negated(), y)
}

/// Value of `LS_lambda(-X; Y)` by the determinantal formula at explicit
/// values. Fails with `SingularPoint` when a prefactor or entry is undefined.
pub fn ls_minus_x_det_values(
    lambda: &Partition,
    xv: &[BigRational],
    yv: &[BigRational],
) -> Result<BigRational, AlgebraError> {
    let n = xv.len();
    let m = yv.len();
    let Some(eps) = LSSign::new(lambda, m, n) else {
        return Ok(BigRational::zero());
    };
    let k = eps.index;
    let conj = lambda.conjugate();
    let power = |v: &BigRational, e: i64| -> Result<BigRational, AlgebraError> {
        if e >= 0 {
            Ok(ring_pow(v, e as usize))
        } else if v.is_zero() {
            Err(AlgebraError::SingularPoint)
        } else {
            Ok(ring_pow(&v.recip(), (-e) as usize))
        }
    };
    let size = n + m - k;
    let mut rows = Vec::with_capacity(size);
    for xi in xv {
        let mut row = Vec::with_capacity(size);
        for yj in yv {
            let d = xi - yj;
            if d.is_zero() {
                return Err(AlgebraError::SingularPoint);
            }
            row.push(d.recip());
        }
        for j in 1..=n - k {
            row.push(power(xi, lambda.part(j) as i64 + n as i64 - m as i64 - j as i64)?);
        }
        rows.push(row);
    }
    for i in 1..=m - k {
        let mut row = Vec::with_capacity(size);
        for yj in yv {
            row.push(power(yj, conj.part(i) as i64 + m as i64 - n as i64 - i as i64)?);
        }
        row.resize(size, BigRational::zero());
        rows.push(row);
    }
    let det = Matrix::from_rows(rows).det_bareiss()?;
    let mut pre = BigRational::one();
    for yj in yv {
        for xi in xv {
            pre *= yj - xi;
        }
    }
    let mut den = BigRational::one();
    for v in [xv, yv] {
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                den *= &v[i] - &v[j];
            }
        }
    }
    if Zero::is_zero(&den) {
        return Err(AlgebraError::SingularPoint);
    }
    Ok(eps.value.apply_rational(pre * det / den))
}

/// Exact value of `LS_lambda(X; Y)` at a point, honouring flags. Uses the
/// determinantal formula and falls back to the defining sum at degenerate
/// points.
pub fn ls_eval(lambda: &Partition, x: &VarSeq, y: &VarSeq, point: &Point) -> Result<BigRational, AlgebraError> {
    let xv: Vec<BigRational> = x.values(point)?.into_iter().map(|v| -v).collect();
    let yv = y.values(point)?;
    if xv.iter().chain(&yv).all(|v| v.is_integer()) {
        let xi: Vec<BigInt> = xv.iter().map(|v| v.to_integer()).collect();
        let yi: Vec<BigInt> = yv.iter().map(|v| v.to_integer()).collect();
        match ls_minus_x_det_int(lambda, &xi, &yi) {
            Err(AlgebraError::SingularPoint) => {}
            other => return other.map(BigRational::from_integer),
        }
    }
    match ls_minus_x_det_values(lambda, &xv, &yv) {
        Err(AlgebraError::SingularPoint) => {}
        other => return other,
    }
    ls_sum_values(lambda, &x.values(point)?, &yv)
}

/// `LS_lambda` at explicit values of `X` and `Y` by the defining sum.
pub fn ls_sum_values(lambda: &Partition, xv: &[BigRational], yv: &[BigRational]) -> Result<BigRational, AlgebraError> {
    let mut acc = BigRational::zero();
    for (mu, nu_conj, c) in lr_terms(lambda, xv.len(), yv.len()).iter() {
        acc += schur_eval_values(mu, xv)? * schur_eval_values(nu_conj, yv)? * BigRational::from_integer((*c).into());
    }
    Ok(acc)
}

/// The LR expansion `(mu, nu', c)` of `LS_lambda` in `n` and `m` variables.
pub fn ls_expansion(lambda: &Partition, n: usize, m: usize) -> Vec<(Partition, Partition, u64)> {
    lr_terms(lambda, n, m).to_vec()
}

/// `LS_{<(m+l)^n>}(-X; Y) = e(-X)^l Delta(Y; X)` with `n = l(X)`, `m = l(Y)`,
/// checked for both routes of the left side.
pub fn littlewood_square_check(l: usize, x: &VarSeq, y: &VarSeq) -> Result<VerificationReport, AlgebraError> {
    let n = x.len();
    let m = y.len();
    let instance = json!({ "n": n, "m": m, "l": l, "X": x.to_string(), "Y": y.to_string() });
    let square = Partition::rectangle(m + l, n);
    let rhs = &e_prod(&x.negated())?.pow(l as u32) * &delta_pair(y, x)?;
    let id = IdentityId::LittlewoodSquare;
    for lhs in [
        ls_combinatorial(&square, &x.negated(), y)?,
        ls_minus_x_determinantal(&square, x, y)?,
    ] {
        let diff = &lhs - &rhs;
        if !diff.is_zero() {
            return Ok(VerificationReport::fail(id, instance, Mode::Symbolic, diff.to_string()));
        }
    }
    Ok(VerificationReport::pass(id, instance, Mode::Symbolic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::polyring::{elem_sym, CertifiedGrid};

    #[test]
    fn lr_small_values() {
        let l = partition![2, 1];
        assert_eq!(lr_coefficient(&l, &partition![1], &partition![1, 1]), 1);
        assert_eq!(lr_coefficient(&l, &partition![1], &partition![2]), 1);
        assert_eq!(lr_coefficient(&l, &l, &partition![]), 1);
        assert_eq!(lr_coefficient(&l, &partition![], &l), 1);
        assert_eq!(lr_coefficient(&partition![3, 2, 1], &partition![2, 1], &partition![2, 1]), 2);
        assert_eq!(lr_coefficient(&l, &partition![2], &partition![2]), 0);
    }

    #[test]
    fn lr_reproduces_schur_products() {
        let x = VarSeq::xs(4);
        for mu in partitions_in_box(2, 2) {
            for nu in partitions_in_box(2, 2) {
                let prod = &schur(&mu, &x).unwrap() * &schur(&nu, &x).unwrap();
                let mut sum = MultiPoly::zero();
                for lambda in partitions_in_box(4, 4).iter().filter(|l| l.size() == mu.size() + nu.size()) {
                    let c = lr_coefficient(lambda, &mu, &nu);
                    sum += &schur(lambda, &x).unwrap().scale(&c.into());
                }
                assert_eq!(prod, sum, "{mu} * {nu}");
            }
        }
    }

    #[test]
    fn lr_reproduces_union_expansion() {
        let x = VarSeq::xs(2);
        let x2 = VarSeq::xs_from(3, 2);
        let both = x.concat(&x2).unwrap();
        for lambda in partitions_in_box(3, 3) {
            let mut sum = MultiPoly::zero();
            for mu in partitions_in_box(3, 3) {
                for nu in partitions_in_box(3, 3) {
                    let c = lr_coefficient(&lambda, &mu, &nu);
                    if c > 0 {
                        let t = &schur(&mu, &x).unwrap() * &schur(&nu, &x2).unwrap();
                        sum += &t.scale(&c.into());
                    }
                }
            }
            assert_eq!(sum, schur(&lambda, &both).unwrap(), "{lambda}");
        }
    }

    #[test]
    fn ls_specializations() {
        let x = VarSeq::xs(2);
        let y = VarSeq::ys(3);
        for lambda in partitions_in_box(3, 3) {
            assert_eq!(
                ls_combinatorial(&lambda, &x.negated(), &VarSeq::empty()).unwrap(),
                schur(&lambda, &x.negated()).unwrap()
            );
            assert_eq!(
                ls_combinatorial(&lambda, &VarSeq::empty(), &y).unwrap(),
                schur(&lambda.conjugate(), &y).unwrap()
            );
        }
        let e1 = &elem_sym(1, &x).unwrap() + &elem_sym(1, &y).unwrap();
        assert_eq!(ls_combinatorial(&partition![1], &x, &y).unwrap(), e1);
        assert_eq!(ls_determinantal(&partition![1], &x, &y).unwrap(), e1);
    }

    #[test]
    fn ls_conjugation_duality_and_homogeneity() {
        for nx in 0..=2 {
            for ny in 0..=2 {
                let x = VarSeq::xs(nx);
                let y = VarSeq::ys(ny);
                for lambda in partitions_in_box(3, 3) {
                    let a = ls_combinatorial(&lambda.conjugate(), &x, &y).unwrap();
                    // LS_lambda(Y; X) with Y in the first slot
                    let b = ls_combinatorial(&lambda, &y, &x).unwrap();
                    assert_eq!(a, b);
                    let c = ls_combinatorial(&lambda, &x.negated(), &y).unwrap();
                    assert!(c.is_zero() || c.is_homogeneous_of_degree(lambda.size() as u32));
                }
            }
        }
    }

    #[test]
    fn sign_depends_on_dimensions() {
        let l = partition![7, 4, 2, 2];
        assert_eq!(LSSign::new(&l, 6, 3).unwrap().index, 2);
        assert!(LSSign::new(&l, 2, 1).is_none());
        // head (7) and k = 2: (-1)^7 (-1)^12 (-1)^1 = +1
        assert_eq!(LSSign::new(&l, 6, 3).unwrap().value, Sign::Plus);
    }

    #[test]
    fn routes_agree_symbolically_small() {
        for n in 0..=2 {
            for m in 0..=2 {
                let x = VarSeq::xs(n);
                let y = VarSeq::ys(m);
                for lambda in partitions_in_box(3, 3) {
                    let d = ls_minus_x_determinantal(&lambda, &x, &y).unwrap();
                    let c = ls_combinatorial(&lambda, &x.negated(), &y).unwrap();
                    assert_eq!(d, c, "{lambda} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn routes_agree_on_grid_points() {
        let x = VarSeq::xs(2);
        let y = VarSeq::ys(2);
        let grid = CertifiedGrid::new(&[(Var::x(1), 1), (Var::x(2), 1), (Var::y(1), 1), (Var::y(2), 1)]);
        for lambda in partitions_in_box(3, 3) {
            let poly = ls_combinatorial(&lambda, &x, &y).unwrap();
            for p in grid.points() {
                assert_eq!(ls_eval(&lambda, &x, &y, &p).unwrap(), poly.eval_at(&p).unwrap());
            }
        }
        // x1 = -y1 makes the Cauchy block singular; the defining sum takes over
        let p = Point::from_pairs([
            (Var::x(1), BigRational::from_integer(2.into())),
            (Var::y(1), BigRational::from_integer((-2).into())),
        ]);
        let (x1, y1) = (VarSeq::xs(1), VarSeq::ys(1));
        assert_eq!(ls_eval(&partition![1], &x1, &y1, &p).unwrap(), BigRational::zero());
    }

    #[test]
    fn littlewood_square() {
        let r = littlewood_square_check(0, &VarSeq::xs(1), &VarSeq::ys(1)).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(
            ls_minus_x_determinantal(&partition![1], &VarSeq::xs(1), &VarSeq::ys(1)).unwrap().to_string(),
            "-x1 + y1"
        );
        for n in 0..=2 {
            for m in 0..=2 {
                for l in 0..=2 {
                    let r = littlewood_square_check(l, &VarSeq::xs(n), &VarSeq::ys(m)).unwrap();
                    assert!(r.passed(), "{r}");
                }
            }
        }
    }
}
