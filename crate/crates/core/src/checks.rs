//! Independent-set polynomials, collapse operators, partition counts, and
//! the inequality verifiers built on them.
//!
//! Every verdict is decided in exact integer arithmetic: rational scales are
//! cleared to integers before any comparison.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::lorentzian::{check_hyp, HypVerdict, LorentzError, SymMatrix};
use crate::mask::{all_subsets, k_subsets, SubsetMask};
use crate::matroid::{Matroid, MatroidError};
use crate::poly::{
    DominanceOutcome, ExponentVector, MonomialWitness, MultiPoly, PolyError, RationalScale,
};

/// Work cap for term-pair products in the operator-definition code paths.
const MAX_PRODUCT_WORK: usize = 4_000_000;
/// Work cap for block-assignment enumerations (`p^n` upper bound).
const MAX_ASSIGNMENT_WORK: u128 = 200_000_000;

#[derive(Debug, Error)]
pub enum ChecksError {
    #[error("profile sums to {sum} but the ground set has {n} elements")]
    ProfileSumMismatch { sum: i64, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Lorentz(#[from] LorentzError),
}

pub(crate) fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i as u64);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from((n - i) as u64) / BigInt::from(i as u64 + 1);
    }
    acc
}

/// The independent-set polynomial `f_k(M)`: one squarefree monomial per
/// independent set of size `k`. For `k` above the rank there are no such
/// sets and the result is the zero polynomial.
pub fn independent_sets_poly(m: &Matroid, k: usize) -> MultiPoly {
    let n = m.n();
    let mut out = MultiPoly::zero(n);
    for s in k_subsets(n, k) {
        if m.is_independent(s) {
            out.add_term(multilinear(n, s), BigInt::one());
        }
    }
    out
}

fn multilinear(nvars: usize, s: SubsetMask) -> ExponentVector {
    let mut exps = vec![0u16; nvars];
    for e in s.iter() {
        exps[e] = 1;
    }
    ExponentVector::new(exps)
}

/// The homogenized generating polynomial
/// `G_M = Σ_I x^(n-|I|) Π_{i∈I} x_i`, homogeneous of degree `n` in `n+1`
/// variables. Variable 0 is the homogenizer.
pub fn g_polynomial(m: &Matroid) -> MultiPoly {
    g_embedded(m, m.n() + 1, 0, 1)
}

/// `G_M` written into a larger variable space: the homogenizer sits at
/// `homog`, element `i` at `offset + i`.
fn g_embedded(m: &Matroid, nvars: usize, homog: usize, offset: usize) -> MultiPoly {
    let n = m.n();
    let mut out = MultiPoly::zero(nvars);
    for s in all_subsets(n) {
        if m.is_independent(s) {
            let mut exps = vec![0u16; nvars];
            exps[homog] = (n - s.card()) as u16;
            for e in s.iter() {
                exps[offset + e] = 1;
            }
            out.add_term(ExponentVector::new(exps), BigInt::one());
        }
    }
    out
}

/// The bivariate collapse `S(G_M(x) G_M(y))`. A term of the product survives
/// the operator exactly when its two independent sets partition the ground
/// set, so the coefficient of `x^(n-i) y^i` counts ordered independent
/// bipartitions with first block of size `n-i`. Computed by pairing each
/// independent set with its complement; the operator definition is kept in
/// [`collapse_s_via_operators`] as a cross-check.
pub fn collapse_s(m: &Matroid) -> MultiPoly {
    let n = m.n();
    let mut out = MultiPoly::zero(2);
    for s in all_subsets(n) {
        if m.is_independent(s) && m.is_independent(s.complement(n)) {
            let card = s.card();
            out.add_term(
                ExponentVector::new(vec![(n - card) as u16, card as u16]),
                BigInt::one(),
            );
        }
    }
    out
}

/// `S(G_M(x) G_M(y))` computed literally: build the product in `2n+2`
/// variables, apply `S_i = (∂/∂x_i + ∂/∂y_i)|_(x_i=y_i=0)` for every element,
/// and project onto `(x, y)`.
pub fn collapse_s_via_operators(m: &Matroid) -> Result<MultiPoly, ChecksError> {
    let n = m.n();
    let nvars = 2 * n + 2;
    let gx = g_embedded(m, nvars, 0, 1);
    let gy = g_embedded(m, nvars, n + 1, n + 2);
    let mut f = guarded_mul(&gx, &gy)?;
    for i in 0..n {
        let xi = 1 + i;
        let yi = n + 2 + i;
        f = f
            .partial_derivative(xi)?
            .add(&f.partial_derivative(yi)?)?
            .substitute_zero(xi)
            .substitute_zero(yi);
    }
    Ok(f.restrict_vars(&[0, n + 1])?)
}

/// The `p`-variate collapse `H(G_M(x_1) .. G_M(x_p))`: the coefficient of
/// `x_1^(n-i_1) .. x_p^(n-i_p)` counts ordered partitions of the ground set
/// into `p` independent blocks of sizes `i_1, .., i_p` (blocks may be empty).
/// Computed by assigning elements to blocks with dependence pruning.
pub fn collapse_h(m: &Matroid, p: usize) -> Result<MultiPoly, ChecksError> {
    if p < 2 {
        return Err(ChecksError::InvalidParameter(
            "collapse needs at least two blocks".into(),
        ));
    }
    let n = m.n();
    guard_assignments(p, n)?;
    let mut out = MultiPoly::zero(p);
    let mut blocks = vec![SubsetMask::EMPTY; p];
    assign_all(m, n, 0, &mut blocks, &mut |blocks| {
        let exps: Vec<u16> = blocks.iter().map(|b| (n - b.card()) as u16).collect();
        out.add_term(ExponentVector::new(exps), BigInt::one());
    });
    Ok(out)
}

fn assign_all(
    m: &Matroid,
    n: usize,
    e: usize,
    blocks: &mut Vec<SubsetMask>,
    emit: &mut impl FnMut(&[SubsetMask]),
) {
    if e == n {
        emit(blocks);
        return;
    }
    for b in 0..blocks.len() {
        let grown = blocks[b].with(e);
        if m.is_independent(grown) {
            let saved = blocks[b];
            blocks[b] = grown;
            assign_all(m, n, e + 1, blocks, emit);
            blocks[b] = saved;
        }
    }
}

/// The collapse computed literally from the operator definition, as a
/// cross-check oracle: the product of `p` embedded copies of `G_M` in
/// `p(n+1)` variables, then `H_i = Σ_j ∂/∂x_{j,i}` followed by substituting
/// `x_{j,i} = 0` for all `j`, for every element `i`.
pub fn collapse_h_via_operators(m: &Matroid, p: usize) -> Result<MultiPoly, ChecksError> {
    if p < 2 {
        return Err(ChecksError::InvalidParameter(
            "collapse needs at least two blocks".into(),
        ));
    }
    let n = m.n();
    let stride = n + 1;
    let nvars = p * stride;
    let mut f = MultiPoly::one(nvars);
    for j in 0..p {
        let g = g_embedded(m, nvars, j * stride, j * stride + 1);
        f = guarded_mul(&f, &g)?;
    }
    for i in 0..n {
        let mut sum = MultiPoly::zero(nvars);
        for j in 0..p {
            sum = sum.add(&f.partial_derivative(j * stride + 1 + i)?)?;
        }
        for j in 0..p {
            sum = sum.substitute_zero(j * stride + 1 + i);
        }
        f = sum;
    }
    let keep: Vec<usize> = (0..p).map(|j| j * stride).collect();
    Ok(f.restrict_vars(&keep)?)
}

fn guarded_mul(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, ChecksError> {
    let work = a.term_count().saturating_mul(b.term_count());
    if work > MAX_PRODUCT_WORK {
        return Err(ChecksError::ResourceGuard(format!(
            "product of {} x {} terms exceeds the {MAX_PRODUCT_WORK}-pair budget",
            a.term_count(),
            b.term_count()
        )));
    }
    Ok(a.mul(b)?)
}

fn guard_assignments(p: usize, n: usize) -> Result<(), ChecksError> {
    let work = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if work > MAX_ASSIGNMENT_WORK {
        return Err(ChecksError::ResourceGuard(format!(
            "{p}^{n} block assignments exceed the {MAX_ASSIGNMENT_WORK} budget"
        )));
    }
    Ok(())
}

/// `π` for a prescribed size profile: the number of ordered partitions of
/// the ground set into independent blocks of the given sizes. Profiles with
/// a negative entry (or one above `n`) count zero; a zero entry means an
/// empty block. The entries must sum to `n`.
pub fn pi_tuple(m: &Matroid, sizes: &[i64]) -> Result<BigInt, ChecksError> {
    let n = m.n();
    let sum: i64 = sizes.iter().sum();
    if sum != n as i64 {
        return Err(ChecksError::ProfileSumMismatch { sum, n });
    }
    if sizes.iter().any(|&s| s < 0 || s > n as i64) {
        return Ok(BigInt::zero());
    }
    guard_assignments(sizes.len().max(1), n)?;
    let mut capacity: Vec<usize> = sizes.iter().map(|&s| s as usize).collect();
    let mut blocks = vec![SubsetMask::EMPTY; sizes.len()];
    let mut count = BigInt::zero();
    fill_blocks(m, n, 0, &mut capacity, &mut blocks, &mut count);
    Ok(count)
}

fn fill_blocks(
    m: &Matroid,
    n: usize,
    e: usize,
    capacity: &mut [usize],
    blocks: &mut [SubsetMask],
    count: &mut BigInt,
) {
    if e == n {
        *count += 1;
        return;
    }
    for b in 0..blocks.len() {
        if capacity[b] == 0 {
            continue;
        }
        let grown = blocks[b].with(e);
        if m.is_independent(grown) {
            let saved = blocks[b];
            blocks[b] = grown;
            capacity[b] -= 1;
            fill_blocks(m, n, e + 1, capacity, blocks, count);
            capacity[b] += 1;
            blocks[b] = saved;
        }
    }
}

/// Verdict of a single verification record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckVerdict {
    Pass,
    Fail,
    NotApplicable,
    Skipped,
}

/// Evidence attached to a failed (or tight) comparison.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CheckWitness {
    Monomial {
        alpha: Vec<u16>,
        lhs_scaled: String,
        rhs_scaled: String,
    },
    Profile {
        sizes: Vec<i64>,
        lhs_scaled: String,
        rhs_scaled: String,
    },
}

impl CheckWitness {
    fn from_monomial(w: &MonomialWitness) -> CheckWitness {
        CheckWitness::Monomial {
            alpha: w.alpha.exps().to_vec(),
            lhs_scaled: w.lhs_scaled.to_string(),
            rhs_scaled: w.rhs_scaled.to_string(),
        }
    }
}

/// One verification record: an inequality (or identity) instance with its
/// verdict and, on failure or tightness, a witness.
#[derive(Debug, Clone, Serialize)]
pub struct InequalityCheck {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub verdict: CheckVerdict,
    pub tight: bool,
    pub witness: Option<CheckWitness>,
    pub tight_witness: Option<CheckWitness>,
    pub note: Option<String>,
}

impl InequalityCheck {
    fn new(name: &str, params: BTreeMap<String, String>) -> InequalityCheck {
        InequalityCheck {
            name: name.to_string(),
            params,
            verdict: CheckVerdict::Pass,
            tight: false,
            witness: None,
            tight_witness: None,
            note: None,
        }
    }

    fn from_dominance(
        name: &str,
        params: BTreeMap<String, String>,
        outcome: &DominanceOutcome,
    ) -> InequalityCheck {
        let mut check = InequalityCheck::new(name, params);
        if outcome.holds {
            check.verdict = CheckVerdict::Pass;
            if let Some(t) = &outcome.tight {
                check.tight = true;
                check.tight_witness = Some(CheckWitness::from_monomial(t));
            }
        } else {
            check.verdict = CheckVerdict::Fail;
            check.witness = outcome.witness.as_ref().map(CheckWitness::from_monomial);
        }
        check
    }

    fn from_counts(
        name: &str,
        params: BTreeMap<String, String>,
        sizes_rhs: &[i64],
        lhs_scaled: BigInt,
        rhs_scaled: BigInt,
    ) -> InequalityCheck {
        let mut check = InequalityCheck::new(name, params);
        let witness = CheckWitness::Profile {
            sizes: sizes_rhs.to_vec(),
            lhs_scaled: lhs_scaled.to_string(),
            rhs_scaled: rhs_scaled.to_string(),
        };
        if lhs_scaled >= rhs_scaled {
            check.verdict = CheckVerdict::Pass;
            if lhs_scaled == rhs_scaled && !rhs_scaled.is_zero() {
                check.tight = true;
                check.tight_witness = Some(witness);
            }
        } else {
            check.verdict = CheckVerdict::Fail;
            check.witness = Some(witness);
        }
        check
    }

    fn not_applicable(name: &str, params: BTreeMap<String, String>, reason: &str) -> InequalityCheck {
        let mut check = InequalityCheck::new(name, params);
        check.verdict = CheckVerdict::NotApplicable;
        check.note = Some(reason.to_string());
        check
    }

    pub fn skipped(name: &str, params: BTreeMap<String, String>, reason: &str) -> InequalityCheck {
        let mut check = InequalityCheck::new(name, params);
        check.verdict = CheckVerdict::Skipped;
        check.note = Some(reason.to_string());
        check
    }

    pub fn passed(&self) -> bool {
        self.verdict != CheckVerdict::Fail
    }
}

fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// Coefficientwise log-concavity of the independent-set polynomials:
/// `f_k² >= f_(k-1) f_(k+1)` for every `0 < k < rank`.
pub fn verify_dowling(m: &Matroid) -> Vec<InequalityCheck> {
    bracket_sweep(m, "dowling", |_, _| RationalScale::one())
}

/// The sharpened version with scale `(k+1)/k`, compared in integers as
/// `k·f_k² >= (k+1)·f_(k-1) f_(k+1)`.
pub fn verify_zhao(m: &Matroid) -> Vec<InequalityCheck> {
    bracket_sweep(m, "zhao", |k, _| {
        RationalScale::new(BigInt::from(k as u64 + 1), BigInt::from(k as u64))
    })
}

/// The ultra-log-concave scale `(1+1/k)(1+1/(n-k))`. This one fails in
/// general (the rank-2 uniform matroid on four elements is a counterexample),
/// so violations here are informative rather than alarming.
pub fn verify_ultra(m: &Matroid) -> Vec<InequalityCheck> {
    let n = m.n();
    bracket_sweep(m, "ultra", move |k, _| {
        RationalScale::new(
            BigInt::from((k as u64 + 1) * (n as u64 - k as u64 + 1)),
            BigInt::from(k as u64 * (n as u64 - k as u64)),
        )
    })
}

fn bracket_sweep(
    m: &Matroid,
    name: &str,
    scale_of: impl Fn(usize, usize) -> RationalScale,
) -> Vec<InequalityCheck> {
    let r = m.rank_full();
    let mut out = Vec::new();
    for k in 1..r {
        let fk = independent_sets_poly(m, k);
        let below = independent_sets_poly(m, k - 1);
        let above = independent_sets_poly(m, k + 1);
        let scale = scale_of(k, r);
        let params = params_of(&[
            ("k", k.to_string()),
            ("scale", format!("{}/{}", scale.numer(), scale.denom())),
        ]);
        let lhs = fk.mul(&fk).expect("same variable space");
        let rhs = below.mul(&above).expect("same variable space");
        let outcome = lhs.dominates(&rhs, &scale).expect("same variable space");
        out.push(InequalityCheck::from_dominance(name, params, &outcome));
    }
    out
}

/// The partition inequality for a matroid of even size `2k`:
/// `k·π_(k,k) >= (k+1)·π_(k-1,k+1)`.
pub fn verify_strong_partition(m: &Matroid) -> InequalityCheck {
    let n = m.n();
    let params = params_of(&[("n", n.to_string())]);
    if n == 0 || n % 2 != 0 {
        return InequalityCheck::not_applicable(
            "strong-partition",
            params,
            "needs even size 2k with k >= 1",
        );
    }
    let k = n / 2;
    let balanced = pi_tuple(m, &[k as i64, k as i64]).expect("profile sums to n");
    let offset = pi_tuple(m, &[k as i64 - 1, k as i64 + 1]).expect("profile sums to n");
    let mut params = params;
    params.insert("k".into(), k.to_string());
    params.insert("pi_kk".into(), balanced.to_string());
    params.insert("pi_km".into(), offset.to_string());
    InequalityCheck::from_counts(
        "strong-partition",
        params,
        &[k as i64 - 1, k as i64 + 1],
        BigInt::from(k as u64) * balanced,
        BigInt::from(k as u64 + 1) * offset,
    )
}

/// The `p`-block partition inequality for a matroid of size `p·k`:
/// `π_(k,..,k) >= Π_(i=1)^(p-1) (1 + i/((p-1)k)) · π_(k+1,..,k+1,k-p+1)`,
/// cleared to integers.
pub fn verify_gaojie(m: &Matroid, p: usize) -> InequalityCheck {
    let n = m.n();
    let params = params_of(&[("n", n.to_string()), ("p", p.to_string())]);
    if p < 2 {
        return InequalityCheck::not_applicable("gaojie", params, "needs p >= 2");
    }
    if n == 0 || n % p != 0 {
        return InequalityCheck::not_applicable(
            "gaojie",
            params,
            "ground-set size is not p·k with k >= 1",
        );
    }
    let k = n / p;
    if k < p - 1 {
        return InequalityCheck::not_applicable(
            "gaojie",
            params,
            "needs k >= p-1 so the shifted profile has a nonnegative last entry",
        );
    }
    let balanced_profile = vec![k as i64; p];
    let mut shifted_profile = vec![k as i64 + 1; p - 1];
    shifted_profile.push(k as i64 - (p as i64 - 1));
    let balanced = pi_tuple(m, &balanced_profile).expect("profile sums to n");
    let shifted = pi_tuple(m, &shifted_profile).expect("profile sums to n");
    let base = BigInt::from(((p - 1) * k) as u64);
    let mut den = BigInt::one();
    let mut num = BigInt::one();
    for i in 1..p {
        den *= &base;
        num *= &base + BigInt::from(i as u64);
    }
    let mut params = params;
    params.insert("k".into(), k.to_string());
    params.insert("pi_balanced".into(), balanced.to_string());
    params.insert("pi_shifted".into(), shifted.to_string());
    params.insert("scale".into(), format!("{num}/{den}"));
    InequalityCheck::from_counts(
        "gaojie",
        params,
        &shifted_profile,
        den * balanced,
        num * shifted,
    )
}

/// The higher-power coefficientwise inequality
/// `f_l^p >= Π_(i=1)^(p-1) (1 + i/((p-1)l)) · f_(l+1)^(p-1) f_(l-p+1)`
/// for `p >= 2` and `p-1 < l < rank`.
pub fn verify_highd(m: &Matroid, p: usize, l: usize) -> InequalityCheck {
    let r = m.rank_full();
    let params = params_of(&[("p", p.to_string()), ("l", l.to_string())]);
    if p < 2 || l < p || l >= r {
        return InequalityCheck::not_applicable("highd", params, "needs p >= 2 and p-1 < l < rank");
    }
    let base = BigInt::from(((p - 1) * l) as u64);
    let mut den = BigInt::one();
    let mut num = BigInt::one();
    for i in 1..p {
        den *= &base;
        num *= &base + BigInt::from(i as u64);
    }
    let fl = independent_sets_poly(m, l);
    let fup = independent_sets_poly(m, l + 1);
    let fdown = independent_sets_poly(m, l + 1 - p);
    let lhs = match guarded_pow(&fl, p) {
        Ok(poly) => poly,
        Err(e) => return InequalityCheck::skipped("highd", params, &e.to_string()),
    };
    let rhs = match guarded_pow(&fup, p - 1).and_then(|f| guarded_mul(&f, &fdown)) {
        Ok(poly) => poly,
        Err(e) => return InequalityCheck::skipped("highd", params, &e.to_string()),
    };
    let scale = RationalScale::new(num.clone(), den.clone());
    let mut params = params;
    params.insert("scale".into(), format!("{num}/{den}"));
    let outcome = lhs.dominates(&rhs, &scale).expect("same variable space");
    InequalityCheck::from_dominance("highd", params, &outcome)
}

fn guarded_pow(f: &MultiPoly, exp: usize) -> Result<MultiPoly, ChecksError> {
    let mut out = MultiPoly::one(f.nvars());
    for _ in 0..exp {
        out = guarded_mul(&out, f)?;
    }
    Ok(out)
}

/// How contraction candidates are enumerated in [`verify_prop1_minors`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YEnumeration {
    /// Independent sets of size `l-k` only (each has rank `l-k`).
    IndependentOnly,
    /// Every subset whose rank is `l-k`.
    AllOfMatchingRank,
}

/// Result of a minor sweep, with a truncation marker when the pair budget
/// was exhausted.
#[derive(Debug, Clone)]
pub struct MinorSweepOutcome {
    pub checks: Vec<InequalityCheck>,
    pub pairs_examined: usize,
    pub truncated: bool,
}

/// Sweep the minors `N = M(X ∪ Y)/Y` of size `2k` and depth `l-k` for every
/// `k <= l`, checking `π_(k,k)(N) >= π_(k-1,k+1)(N)` and the sharpened
/// `l·π_(k,k)(N) >= (l+1)·π_(k-1,k+1)(N)` on each.
pub fn verify_prop1_minors(
    m: &Matroid,
    l: usize,
    pair_bound: usize,
    mode: YEnumeration,
) -> MinorSweepOutcome {
    let n = m.n();
    let mut checks = Vec::new();
    let mut pairs = 0usize;
    let mut truncated = false;
    'outer: for k in 0..=l {
        if 2 * k > n {
            break;
        }
        let depth = l - k;
        let ys: Vec<SubsetMask> = match mode {
            YEnumeration::IndependentOnly => m.independents_of_size(depth),
            YEnumeration::AllOfMatchingRank => {
                all_subsets(n).filter(|&y| m.rank(y) == depth).collect()
            }
        };
        for y in ys {
            let rest = y.complement(n);
            if rest.card() < 2 * k {
                continue;
            }
            for x in k_subsets(n, 2 * k) {
                if !x.is_disjoint_from(y) {
                    continue;
                }
                if pairs >= pair_bound {
                    truncated = true;
                    break 'outer;
                }
                pairs += 1;
                let minor = m.minor(x, y).expect("disjoint by construction");
                let balanced =
                    pi_tuple(&minor.matroid, &[k as i64, k as i64]).expect("profile sums");
                let offset = pi_tuple(&minor.matroid, &[k as i64 - 1, k as i64 + 1])
                    .expect("profile sums");
                let params = params_of(&[
                    ("l", l.to_string()),
                    ("k", k.to_string()),
                    ("x", x.to_string()),
                    ("y", y.to_string()),
                ]);
                checks.push(InequalityCheck::from_counts(
                    "prop1-logconcave",
                    params.clone(),
                    &[k as i64 - 1, k as i64 + 1],
                    balanced.clone(),
                    offset.clone(),
                ));
                checks.push(InequalityCheck::from_counts(
                    "prop1-sharpened",
                    params,
                    &[k as i64 - 1, k as i64 + 1],
                    BigInt::from(l as u64) * &balanced,
                    BigInt::from(l as u64 + 1) * &offset,
                ));
            }
        }
    }
    MinorSweepOutcome {
        checks,
        pairs_examined: pairs,
        truncated,
    }
}

/// The coefficient identity behind the product inequalities: for disjoint
/// blocks `X_1, .., X_p` with `Σ j·|X_j| = p·l` and the partition minor
/// `N = M[X, (1,..,p-1)]`, the coefficient of
/// `h = Π_(x∈X_1) x · Π_(x∈X_2) x² .. Π_(x∈X_p) x^p`
/// in `f_(l+n_1) .. f_(l+n_p)`, multiplied by the copy-order normalization
/// `Π_(j<p) (j!)^|X_j|`, equals `π_(k+n_1,..,k+n_p)(N)` with `k = l - |X_p|`.
/// The normalization accounts for the `j!` interchangeable parallel copies an
/// element of `X_j` occupies inside a partition of `N` (direct enumeration
/// fixes the factor; it is 1 whenever `p = 2`, where the identity is exact as
/// commonly stated). Tested for the balanced and the shifted profile, which
/// share the factor, so the derived inequalities are unaffected by it.
pub fn verify_wyx2_coefficient(
    m: &Matroid,
    p: usize,
    l: usize,
    xs: &[SubsetMask],
) -> Result<Vec<InequalityCheck>, ChecksError> {
    if xs.len() != p || p < 2 {
        return Err(ChecksError::InvalidParameter(format!(
            "expected {p} >= 2 blocks, got {}",
            xs.len()
        )));
    }
    let weighted: usize = xs.iter().enumerate().map(|(j, x)| (j + 1) * x.card()).sum();
    if weighted != p * l {
        return Err(ChecksError::InvalidParameter(format!(
            "block sizes weigh {weighted}, expected p·l = {}",
            p * l
        )));
    }
    if xs[p - 1].card() > l {
        return Err(ChecksError::InvalidParameter(
            "the contracted block may not exceed l elements".into(),
        ));
    }
    let k = (l - xs[p - 1].card()) as i64;
    let q: Vec<usize> = (1..p).collect();
    let minor = m.partition_minor(xs, &q)?;

    let n = m.n();
    let mut h_exps = vec![0u16; n];
    for (j, x) in xs.iter().enumerate() {
        for e in x.iter() {
            h_exps[e] = j as u16 + 1;
        }
    }
    let h = ExponentVector::new(h_exps);

    let mut shifts: Vec<Vec<i64>> = vec![vec![0; p]];
    let mut shifted = vec![1i64; p - 1];
    shifted.push(1 - p as i64);
    shifts.push(shifted);

    let mut copy_orderings = BigInt::one();
    for (j, x) in xs[..p - 1].iter().enumerate() {
        for _ in 0..x.card() {
            copy_orderings *= factorial(j + 1);
        }
    }

    let mut out = Vec::new();
    for shift in shifts {
        let mut product = MultiPoly::one(n);
        for &s in &shift {
            let idx = l as i64 + s;
            let factor = if idx < 0 {
                MultiPoly::zero(n)
            } else {
                independent_sets_poly(m, idx as usize)
            };
            product = guarded_mul(&product, &factor)?;
        }
        let lhs = product.coefficient(&h) * &copy_orderings;
        let profile: Vec<i64> = shift.iter().map(|&s| k + s).collect();
        let rhs = pi_tuple(&minor.matroid, &profile)?;
        let params = params_of(&[
            ("p", p.to_string()),
            ("l", l.to_string()),
            ("k", k.to_string()),
            ("profile", format!("{profile:?}")),
            ("monomial", h.to_string()),
            ("depth", minor.depth.to_string()),
            ("xp_independent", minor.y_independent.to_string()),
            ("copy_orderings", copy_orderings.to_string()),
        ]);
        let mut check = InequalityCheck::new("coefficient-identity", params);
        if lhs == rhs {
            check.verdict = CheckVerdict::Pass;
        } else {
            check.verdict = CheckVerdict::Fail;
            check.witness = Some(CheckWitness::Profile {
                sizes: profile,
                lhs_scaled: lhs.to_string(),
                rhs_scaled: rhs.to_string(),
            });
        }
        out.push(check);
    }
    Ok(out)
}

/// Outcome of the bivariate closed-form check, with the derivative
/// computation as ground truth for the constant factors.
#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormOutcome {
    pub applicable: bool,
    pub derivative_matches: bool,
    pub hessian_matches: bool,
    pub hyp_holds: bool,
    pub hyp_vacuous: bool,
    pub detail: String,
}

impl ClosedFormOutcome {
    pub fn passed(&self) -> bool {
        !self.applicable || (self.derivative_matches && self.hessian_matches && self.hyp_holds)
    }
}

/// For a matroid of size `2k`, differentiate the bivariate collapse `k-1`
/// times in each variable and compare with the closed form
/// `½(k+1)!(k-1)!·π_(k-1,k+1)·(x² + y²) + k!k!·π_(k,k)·xy`;
/// then check the 2x2 Hessian entries and the hyperbolicity inequality with
/// `v = (1,0)`, `w = (0,1)`.
pub fn hessian_closed_form_check(m: &Matroid) -> ClosedFormOutcome {
    let n = m.n();
    if n == 0 || n % 2 != 0 {
        return ClosedFormOutcome {
            applicable: false,
            derivative_matches: false,
            hessian_matches: false,
            hyp_holds: false,
            hyp_vacuous: false,
            detail: "needs even size 2k with k >= 1".into(),
        };
    }
    let k = n / 2;
    let mut fm = collapse_s(m);
    for _ in 0..(k - 1) {
        fm = fm.partial_derivative(0).expect("bivariate");
        fm = fm.partial_derivative(1).expect("bivariate");
    }
    let pi_kk = pi_tuple(m, &[k as i64, k as i64]).expect("profile sums");
    let pi_km = pi_tuple(m, &[k as i64 - 1, k as i64 + 1]).expect("profile sums");

    // (k+1)!(k-1)!/2 is integral for k >= 1
    let half_coeff = factorial(k + 1) * factorial(k - 1) / BigInt::from(2);
    let diag_coeff = &half_coeff * &pi_km;
    let cross_coeff = factorial(k) * factorial(k) * &pi_kk;
    let mut closed = MultiPoly::zero(2);
    closed.add_term(ExponentVector::new(vec![2, 0]), diag_coeff.clone());
    closed.add_term(ExponentVector::new(vec![0, 2]), diag_coeff.clone());
    closed.add_term(ExponentVector::new(vec![1, 1]), cross_coeff.clone());
    let derivative_matches = fm == closed;

    // Hessian from the computed derivative; entries must match
    // (k-1)!(k+1)!·π_(k-1,k+1) on the diagonal and k!k!·π_(k,k) off it.
    let xx = fm.coefficient(&ExponentVector::new(vec![2, 0])) * BigInt::from(2);
    let yy = fm.coefficient(&ExponentVector::new(vec![0, 2])) * BigInt::from(2);
    let xy = fm.coefficient(&ExponentVector::new(vec![1, 1]));
    let expected_diag = factorial(k - 1) * factorial(k + 1) * &pi_km;
    let hessian_matches = xx == expected_diag && yy == expected_diag && xy == cross_coeff;

    let hessian = SymMatrix::from_bigint_rows(vec![vec![xx.clone(), xy.clone()], vec![xy, yy]])
        .expect("symmetric by construction");
    let one = RationalScale::one();
    let zero = RationalScale::zero();
    let hyp = check_hyp(&hessian, &[one.clone(), zero.clone()], &[zero, one])
        .expect("dimensions match");
    ClosedFormOutcome {
        applicable: true,
        derivative_matches,
        hessian_matches,
        hyp_holds: hyp.holds(),
        hyp_vacuous: matches!(hyp, HypVerdict::VacuousPass),
        detail: format!(
            "k={k} pi_kk={pi_kk} pi_km={pi_km} derivative={:?}",
            fm.to_lines()
        ),
    }
}

/// Exact equivalence of the bivariate collapse against direct partition
/// enumeration: `[x^(n-i) y^i] S(G·G) = π_(n-i,i)` for every `i`.
pub fn check_collapse_s_matches_pi(m: &Matroid) -> InequalityCheck {
    let n = m.n();
    let collapsed = collapse_s(m);
    let params = params_of(&[("n", n.to_string())]);
    for i in 0..=n {
        let alpha = ExponentVector::new(vec![(n - i) as u16, i as u16]);
        let lhs = collapsed.coefficient(&alpha);
        let rhs = pi_tuple(m, &[(n - i) as i64, i as i64]).expect("profile sums");
        if lhs != rhs {
            let mut check = InequalityCheck::new("oracle-equiv-s", params);
            check.verdict = CheckVerdict::Fail;
            check.witness = Some(CheckWitness::Profile {
                sizes: vec![(n - i) as i64, i as i64],
                lhs_scaled: lhs.to_string(),
                rhs_scaled: rhs.to_string(),
            });
            return check;
        }
    }
    InequalityCheck::new("oracle-equiv-s", params)
}

/// Exact equivalence of the `p`-variate collapse against direct partition
/// enumeration over every size profile, plus permutation invariance of the
/// partition counts.
pub fn check_collapse_h_matches_pi(m: &Matroid, p: usize) -> Result<InequalityCheck, ChecksError> {
    let n = m.n();
    let collapsed = collapse_h(m, p)?;
    let params = params_of(&[("n", n.to_string()), ("p", p.to_string())]);
    let mut profile = vec![0i64; p];
    let mut check = InequalityCheck::new("oracle-equiv-h", params);
    check_profiles(m, &collapsed, n, 0, n, &mut profile, &mut check)?;
    Ok(check)
}

fn check_profiles(
    m: &Matroid,
    collapsed: &MultiPoly,
    n: usize,
    idx: usize,
    remaining: usize,
    profile: &mut Vec<i64>,
    check: &mut InequalityCheck,
) -> Result<(), ChecksError> {
    if check.verdict == CheckVerdict::Fail {
        return Ok(());
    }
    if idx + 1 == profile.len() {
        profile[idx] = remaining as i64;
        let alpha =
            ExponentVector::new(profile.iter().map(|&i| (n as i64 - i) as u16).collect());
        let lhs = collapsed.coefficient(&alpha);
        let rhs = pi_tuple(m, profile)?;
        let mut sorted = profile.clone();
        sorted.sort_unstable();
        let permuted = pi_tuple(m, &sorted)?;
        if lhs != rhs || rhs != permuted {
            check.verdict = CheckVerdict::Fail;
            check.witness = Some(CheckWitness::Profile {
                sizes: profile.clone(),
                lhs_scaled: lhs.to_string(),
                rhs_scaled: format!("{rhs} (permuted: {permuted})"),
            });
        }
        return Ok(());
    }
    for take in 0..=remaining {
        profile[idx] = take as i64;
        check_profiles(m, collapsed, n, idx + 1, remaining - take, profile, check)?;
    }
    Ok(())
}

/// Exact ultra-log-concavity of a coefficient sequence `a_0, .., a_n` against
/// the binomial normalization: `(a_i/C(n,i))² >= (a_(i-1)/C(n,i-1))·(a_(i+1)/C(n,i+1))`.
pub fn binomial_normalized_log_concave(coeffs: &[BigInt]) -> bool {
    if coeffs.len() < 3 {
        return true;
    }
    let n = coeffs.len() - 1;
    for i in 1..n {
        let lhs = &coeffs[i] * &coeffs[i] * binomial(n, i - 1) * binomial(n, i + 1);
        let rhs = &coeffs[i - 1] * &coeffs[i + 1] * binomial(n, i) * binomial(n, i);
        if lhs < rhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::SubsetMask as M;

    fn ev(exps: &[u16]) -> ExponentVector {
        ExponentVector::new(exps.to_vec())
    }

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    #[test]
    fn independent_set_polynomials_of_u24() {
        let m = u(2, 4);
        assert_eq!(independent_sets_poly(&m, 0), MultiPoly::one(4));
        let f1 = independent_sets_poly(&m, 1);
        assert_eq!(f1.term_count(), 4);
        assert_eq!(f1.coefficient(&ev(&[1, 0, 0, 0])), BigInt::one());
        let f2 = independent_sets_poly(&m, 2);
        assert_eq!(f2.term_count(), 6);
        assert_eq!(f2.coefficient(&ev(&[0, 1, 1, 0])), BigInt::one());
        assert_eq!(f2.coefficient(&ev(&[0, 2, 0, 0])), BigInt::zero());
        // above the rank: no independent sets
        assert!(independent_sets_poly(&m, 3).is_zero());
    }

    #[test]
    fn loops_are_left_out() {
        let looped = Matroid::graphic(2, &[(0, 0), (0, 1)]).unwrap();
        let f1 = independent_sets_poly(&looped, 1);
        assert_eq!(f1.coefficient(&ev(&[1, 0])), BigInt::zero());
        assert_eq!(f1.coefficient(&ev(&[0, 1])), BigInt::one());
    }

    #[test]
    fn g_polynomial_examples() {
        // G of U(1,2) is x² + x·x1 + x·x2
        let g = g_polynomial(&u(1, 2));
        assert_eq!(g.term_count(), 3);
        assert_eq!(g.coefficient(&ev(&[2, 0, 0])), BigInt::one());
        assert_eq!(g.coefficient(&ev(&[1, 1, 0])), BigInt::one());
        assert_eq!(g.coefficient(&ev(&[1, 0, 1])), BigInt::one());
        assert_eq!(g.homogeneous_degree(), Some(2));

        let empty = u(0, 0);
        assert_eq!(g_polynomial(&empty), MultiPoly::one(1));

        use num::rational::BigRational;
        let ones = vec![BigRational::one(); 5];
        let total = g_polynomial(&u(2, 4)).evaluate(&ones).unwrap();
        assert_eq!(total, BigRational::from(BigInt::from(11)));
    }

    #[test]
    fn collapse_s_examples() {
        // U(1,1): x + y
        let c = collapse_s(&u(1, 1));
        assert_eq!(c.coefficient(&ev(&[1, 0])), BigInt::one());
        assert_eq!(c.coefficient(&ev(&[0, 1])), BigInt::one());
        assert_eq!(c.term_count(), 2);

        // U(1,2): coefficient of x·y is pi_(1,1) = 2
        let c = collapse_s(&u(1, 2));
        assert_eq!(c.coefficient(&ev(&[1, 1])), BigInt::from(2));

        // coefficients are symmetric in (x, y)
        let c = collapse_s(&u(2, 4));
        for i in 0..=4u16 {
            assert_eq!(
                c.coefficient(&ev(&[4 - i, i])),
                c.coefficient(&ev(&[i, 4 - i]))
            );
        }
    }

    #[test]
    fn collapse_s_operator_path_agrees() {
        for m in [
            u(1, 1),
            u(1, 2),
            u(2, 4),
            u(0, 2),
            Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
        ] {
            assert_eq!(
                collapse_s(&m),
                collapse_s_via_operators(&m).unwrap(),
                "{}",
                m.name()
            );
        }
    }

    #[test]
    fn collapse_h_examples() {
        // p = 2 reduces to the bivariate collapse
        let m = u(2, 4);
        assert_eq!(collapse_h(&m, 2).unwrap(), collapse_s(&m));

        // U(1,1) at p = 2: x1 + x2
        let c = collapse_h(&u(1, 1), 2).unwrap();
        assert_eq!(c.coefficient(&ev(&[1, 0])), BigInt::one());
        assert_eq!(c.coefficient(&ev(&[0, 1])), BigInt::one());

        // U(3,3) at p = 3: all-singleton profile counts 3! partitions
        let c = collapse_h(&u(3, 3), 3).unwrap();
        assert_eq!(c.coefficient(&ev(&[2, 2, 2])), BigInt::from(6));

        assert!(collapse_h(&m, 1).is_err());
    }

    #[test]
    fn collapse_h_operator_path_agrees() {
        for m in [u(1, 2), u(2, 3), Matroid::graphic(3, &[(0, 1), (1, 2)]).unwrap()] {
            assert_eq!(
                collapse_h(&m, 3).unwrap(),
                collapse_h_via_operators(&m, 3).unwrap(),
                "{}",
                m.name()
            );
        }
    }

    #[test]
    fn pi_tuple_examples() {
        assert_eq!(pi_tuple(&u(1, 2), &[1, 1]).unwrap(), BigInt::from(2));
        assert_eq!(pi_tuple(&u(2, 4), &[2, 2]).unwrap(), BigInt::from(6));
        assert_eq!(pi_tuple(&u(2, 4), &[1, 3]).unwrap(), BigInt::zero());
        assert_eq!(pi_tuple(&u(4, 4), &[2, 2]).unwrap(), BigInt::from(6));
        assert_eq!(pi_tuple(&u(4, 4), &[1, 3]).unwrap(), BigInt::from(4));
        // out-of-range entries count zero; mismatched sums are an error
        assert_eq!(pi_tuple(&u(1, 2), &[-1, 3]).unwrap(), BigInt::zero());
        assert!(pi_tuple(&u(1, 2), &[1, 2]).is_err());
        // empty blocks are allowed
        assert_eq!(pi_tuple(&u(2, 2), &[2, 0]).unwrap(), BigInt::one());
    }

    #[test]
    fn dowling_checks() {
        let checks = verify_dowling(&u(2, 4));
        assert_eq!(checks.len(), 1);
        assert_eq!(checks[0].verdict, CheckVerdict::Pass);

        assert!(verify_dowling(&u(1, 3)).is_empty());
        assert!(verify_dowling(&u(0, 2)).is_empty());
    }

    #[test]
    fn zhao_checks_and_counterexample_scale() {
        let m = u(2, 4);
        let checks = verify_zhao(&m);
        assert_eq!(checks.len(), 1);
        assert_eq!(checks[0].verdict, CheckVerdict::Pass);
        assert!(checks[0].tight, "k=1 is tight on the squarefree pairs");

        // the ultra scale 9/4 printed in the counterexample fails on x1·x2
        let f1 = independent_sets_poly(&m, 1);
        let lhs = f1.mul(&f1).unwrap();
        let rhs = independent_sets_poly(&m, 0)
            .mul(&independent_sets_poly(&m, 2))
            .unwrap();
        let out = lhs
            .dominates(&rhs, &RationalScale::new(BigInt::from(9), BigInt::from(4)))
            .unwrap();
        assert!(!out.holds);
        let w = out.witness.unwrap();
        assert_eq!(w.alpha, ev(&[1, 1, 0, 0]));
        assert_eq!(w.lhs_scaled, BigInt::from(8));
        assert_eq!(w.rhs_scaled, BigInt::from(9));

        // the generic ultra sweep also finds a violation on U(2,4)
        let ultra = verify_ultra(&m);
        assert!(ultra.iter().any(|c| c.verdict == CheckVerdict::Fail));
    }

    #[test]
    fn strong_partition_checks() {
        let c = verify_strong_partition(&u(2, 4));
        assert_eq!(c.verdict, CheckVerdict::Pass);
        assert!(!c.tight);

        let c = verify_strong_partition(&u(4, 4));
        assert_eq!(c.verdict, CheckVerdict::Pass);
        assert!(c.tight, "2·6 = 3·4 is an equality case");

        let c = verify_strong_partition(&u(1, 3));
        assert_eq!(c.verdict, CheckVerdict::NotApplicable);

        // a loop next to a coloop: both sides vanish
        let looped = Matroid::graphic(2, &[(0, 0), (0, 1)]).unwrap();
        let c = verify_strong_partition(&looped);
        assert_eq!(c.verdict, CheckVerdict::Pass);
        assert!(!c.tight);
    }

    #[test]
    fn gaojie_checks() {
        // p = 2 agrees with the bivariate inequality
        for m in [u(2, 4), u(4, 4), u(3, 6)] {
            let a = verify_gaojie(&m, 2);
            let b = verify_strong_partition(&m);
            assert_eq!(a.verdict, b.verdict, "{}", m.name());
            assert_eq!(a.tight, b.tight);
        }

        // free matroid on six elements at p = 3: 16·90 >= 30·20
        let c = verify_gaojie(&u(6, 6), 3);
        assert_eq!(c.verdict, CheckVerdict::Pass);
        assert_eq!(c.params["pi_balanced"], "90");
        assert_eq!(c.params["pi_shifted"], "20");

        // rank-2 uniform on six elements: shifted profile needs a 3-set
        let c = verify_gaojie(&u(2, 6), 3);
        assert_eq!(c.verdict, CheckVerdict::Pass);
        assert_eq!(c.params["pi_shifted"], "0");

        assert_eq!(
            verify_gaojie(&u(2, 4), 3).verdict,
            CheckVerdict::NotApplicable
        );
        // k = 1 < p-1 = 2
        assert_eq!(
            verify_gaojie(&u(3, 3), 3).verdict,
            CheckVerdict::NotApplicable
        );
    }

    #[test]
    fn highd_checks() {
        // p = 2 at l = k reduces to the sharpened bivariate sweep
        let m = u(3, 5);
        let direct = verify_highd(&m, 2, 2);
        assert_eq!(direct.verdict, CheckVerdict::Pass);

        // parameter range: l must exceed p-1
        assert_eq!(
            verify_highd(&m, 3, 2).verdict,
            CheckVerdict::NotApplicable
        );
        assert_eq!(
            verify_highd(&u(4, 6), 3, 3).verdict,
            CheckVerdict::Pass
        );
    }

    #[test]
    fn prop1_minor_sweeps() {
        let out = verify_prop1_minors(&u(2, 4), 1, 10_000, YEnumeration::IndependentOnly);
        assert!(!out.truncated);
        assert!(!out.checks.is_empty());
        assert!(out.checks.iter().all(InequalityCheck::passed));

        // truncation is reported
        let out = verify_prop1_minors(&u(2, 4), 1, 2, YEnumeration::IndependentOnly);
        assert!(out.truncated);
        assert_eq!(out.pairs_examined, 2);
    }

    #[test]
    fn coefficient_identity_examples() {
        // p = 2, X2 = ∅: the coefficient of the squarefree monomial over X1
        // in f_l² counts balanced partitions of the restriction
        let m = u(2, 4);
        let checks = verify_wyx2_coefficient(
            &m,
            2,
            2,
            &[M::from_elements([0, 1, 2, 3]), M::EMPTY],
        )
        .unwrap();
        assert!(checks.iter().all(InequalityCheck::passed));

        // p = 2, X = ({0,1}, {2}), l = 2, k = 1
        let checks =
            verify_wyx2_coefficient(&m, 2, 2, &[M::from_elements([0, 1]), M::singleton(2)])
                .unwrap();
        assert!(checks.iter().all(InequalityCheck::passed));

        // p = 3 on the free matroid with singleton blocks: Σ j·|X_j| = 6 = 3l
        let m33 = u(3, 3);
        let checks = verify_wyx2_coefficient(
            &m33,
            3,
            2,
            &[M::singleton(0), M::singleton(1), M::singleton(2)],
        )
        .unwrap();
        assert!(checks.iter().all(InequalityCheck::passed));

        // size equation violated
        assert!(verify_wyx2_coefficient(&m, 2, 2, &[M::singleton(0), M::EMPTY]).is_err());
    }

    #[test]
    fn closed_form_examples() {
        // U(2,4): derivative is 24·xy (the enumeration fixes the constant)
        let out = hessian_closed_form_check(&u(2, 4));
        assert!(out.applicable);
        assert!(out.derivative_matches, "{}", out.detail);
        assert!(out.hessian_matches);
        assert!(out.hyp_holds);
        assert!(out.detail.contains("24 * x0^1 x1^1"));

        // U(1,2): no derivative step; 2·xy
        let out = hessian_closed_form_check(&u(1, 2));
        assert!(out.passed());
        assert!(out.detail.contains("2 * x0^1 x1^1"));

        // U(4,4): all entries positive, (Hyp) holds with equality
        let out = hessian_closed_form_check(&u(4, 4));
        assert!(out.passed());
        assert!(!out.hyp_vacuous);

        assert!(!hessian_closed_form_check(&u(1, 3)).applicable);
    }

    #[test]
    fn oracle_equivalence_checks() {
        for m in [
            u(2, 4),
            u(0, 3),
            Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
        ] {
            assert!(check_collapse_s_matches_pi(&m).passed(), "{}", m.name());
            assert!(
                check_collapse_h_matches_pi(&m, 3).unwrap().passed(),
                "{}",
                m.name()
            );
        }
    }

    #[test]
    fn binomial_normalization_log_concavity() {
        // constant sequence C(n,i) itself is tight
        let coeffs: Vec<BigInt> = (0..=4).map(|i| binomial(4, i)).collect();
        assert!(binomial_normalized_log_concave(&coeffs));
        // a spike in the middle of zeros fails
        let spiky = vec![
            BigInt::from(1),
            BigInt::zero(),
            BigInt::from(5),
            BigInt::zero(),
            BigInt::from(1),
        ];
        assert!(!binomial_normalized_log_concave(&spiky));
    }
}
