//! Lorentzian-property machinery: M-convex support test, exact symmetric
//! matrix inertia, the Lorentzian definition check, directional derivatives,
//! and the hyperbolicity inequality (Hyp).
//!
//! Everything here is exact. Floating point appears only in test oracles.

use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::poly::{ExponentVector, MultiPoly, PolyError, ScaledPoly};

#[derive(Debug, Error)]
pub enum LorentzError {
    #[error("matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("matrix entries do not form a {dim}x{dim} matrix")]
    BadShape { dim: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("support vectors have mixed total degrees ({a} vs {b})")]
    MixedDegrees { a: usize, b: usize },
    #[error("support vectors have mixed lengths")]
    MixedLengths,
    #[error("directional derivative requires a nonnegative direction (entry {index})")]
    NegativeDirection { index: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Eigenvalue sign counts of a symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn dim(&self) -> usize {
        self.pos + self.neg + self.zero
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(pos={}, neg={}, zero={})", self.pos, self.neg, self.zero)
    }
}

/// A symmetric matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<BigRational>, // row-major
}

impl SymMatrix {
    pub fn new(dim: usize, entries: Vec<BigRational>) -> Result<SymMatrix, LorentzError> {
        if entries.len() != dim * dim {
            return Err(LorentzError::BadShape { dim });
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(LorentzError::NotSymmetric { i, j });
                }
            }
        }
        Ok(SymMatrix { dim, entries })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<SymMatrix, LorentzError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(LorentzError::BadShape { dim });
            }
            for &x in row {
                entries.push(BigRational::from(BigInt::from(x)));
            }
        }
        SymMatrix::new(dim, entries)
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Result<SymMatrix, LorentzError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in &rows {
            if row.len() != dim {
                return Err(LorentzError::BadShape { dim });
            }
            for x in row {
                entries.push(BigRational::from(x.clone()));
            }
        }
        SymMatrix::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigRational]) -> Result<Vec<BigRational>, LorentzError> {
        if v.len() != self.dim {
            return Err(LorentzError::DimMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.get(i, j) * &v[j])
                    .fold(BigRational::zero(), |a, b| a + b)
            })
            .collect())
    }

    /// Scale every entry by the least common denominator, yielding an integer
    /// matrix with the same eigenvalue signs.
    fn cleared(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for e in &self.entries {
            lcm = lcm.lcm(e.denom());
        }
        self.entries
            .iter()
            .map(|e| (e * BigRational::from(lcm.clone())).to_integer())
            .collect()
    }

    /// Exact inertia via the characteristic polynomial: Faddeev–LeVerrier for
    /// the coefficients, then Descartes sign-variation counting, which is
    /// exact because a symmetric matrix has an all-real spectrum. The zero
    /// count is the multiplicity of the root 0, read off the lowest
    /// nonvanishing coefficient.
    pub fn inertia(&self) -> Inertia {
        let n = self.dim;
        if n == 0 {
            return Inertia {
                pos: 0,
                neg: 0,
                zero: 0,
            };
        }
        let a = self.cleared();
        // char poly lambda^n + c[0] lambda^(n-1) + .. + c[n-1]
        let coeffs = faddeev_leverrier(n, &a);
        let mut full = Vec::with_capacity(n + 1);
        full.push(BigInt::one());
        full.extend(coeffs);
        // strip zero roots
        let mut zero = 0;
        while zero < n && full[n - zero].is_zero() {
            zero += 1;
        }
        let reduced = &full[..=n - zero];
        let pos = sign_variations(reduced);
        // Descartes on q(-lambda) counts the negative roots; for an all-real
        // spectrum pos + neg must exhaust the nonzero roots.
        let neg_coeffs: Vec<BigInt> = reduced
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        let neg = sign_variations(&neg_coeffs);
        debug_assert_eq!(pos + neg + zero, n, "spectrum must be all-real");
        Inertia { pos, neg, zero }
    }

    /// Inertia by congruence: symmetric elimination with pivoting
    /// (Sylvester's law of inertia). Independent of the characteristic
    /// polynomial route; the two are cross-checked in tests.
    pub fn inertia_by_congruence(&self) -> Inertia {
        let n = self.dim;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut pos = 0;
        let mut neg = 0;
        let mut zero = 0;
        // active block is a[k..][k..]; entries outside it are never read again
        let mut k = 0;
        while k < n {
            if !a[k][k].is_zero() {
                if a[k][k].is_positive() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                // Schur complement of the pivot; stays symmetric
                for i in (k + 1)..n {
                    if a[i][k].is_zero() {
                        continue;
                    }
                    let factor = &a[i][k] / &a[k][k];
                    for j in (k + 1)..n {
                        let delta = &factor * &a[k][j];
                        a[i][j] -= delta;
                    }
                }
                k += 1;
            } else if let Some(p) = ((k + 1)..n).find(|&i| !a[i][i].is_zero()) {
                // bring a nonzero diagonal entry to the front
                a.swap(k, p);
                for row in a.iter_mut() {
                    row.swap(k, p);
                }
            } else if let Some(p) = ((k + 1)..n).find(|&j| !a[k][j].is_zero()) {
                // all-zero diagonal: add row/col p to row/col k, making
                // a[k][k] = 2 a[k][p] nonzero
                for j in k..n {
                    let v = a[p][j].clone();
                    a[k][j] += v;
                }
                for i in k..n {
                    let v = a[i][p].clone();
                    a[i][k] += v;
                }
            } else {
                // row k of the active block vanishes entirely
                zero += 1;
                k += 1;
            }
        }
        Inertia { pos, neg, zero }
    }
}

/// Faddeev–LeVerrier over exact integers: returns `[c1, .., cn]` with
/// `charpoly(A) = lambda^n + c1 lambda^(n-1) + .. + cn`. All divisions are
/// exact for integer input.
fn faddeev_leverrier(n: usize, a: &[BigInt]) -> Vec<BigInt> {
    let idx = |i: usize, j: usize| i * n + j;
    let mut m: Vec<BigInt> = (0..n * n)
        .map(|k| {
            if k / n == k % n {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    let mut coeffs = Vec::with_capacity(n);
    let mut am = vec![BigInt::zero(); n * n];
    for step in 1..=n {
        // am = a * m
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for t in 0..n {
                    acc += &a[idx(i, t)] * &m[idx(t, j)];
                }
                am[idx(i, j)] = acc;
            }
        }
        let trace: BigInt = (0..n).map(|i| am[idx(i, i)].clone()).sum();
        let c = -trace / BigInt::from(step as i64);
        // m = am + c * I
        m.clone_from(&am);
        for i in 0..n {
            m[idx(i, i)] += &c;
        }
        coeffs.push(c);
    }
    coeffs
}

/// Descartes sign variations over the nonzero coefficients.
fn sign_variations(coeffs: &[BigInt]) -> usize {
    let mut variations = 0;
    let mut last: Option<bool> = None;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let positive = c.is_positive();
        if let Some(prev) = last {
            if prev != positive {
                variations += 1;
            }
        }
        last = Some(positive);
    }
    variations
}

/// Verdict of the M-convexity test, with the failing triple on rejection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MConvexVerdict {
    Convex,
    NotConvex {
        alpha: ExponentVector,
        beta: ExponentVector,
        index: usize,
    },
}

impl MConvexVerdict {
    pub fn is_convex(&self) -> bool {
        matches!(self, MConvexVerdict::Convex)
    }
}

/// Exchange test for a set of equal-degree exponent vectors: for every
/// `alpha, beta` and every `i` with `alpha_i > beta_i` there must be a `j`
/// with `alpha_j < beta_j` and `alpha - e_i + e_j` in the set.
pub fn is_m_convex(support: &[ExponentVector]) -> Result<MConvexVerdict, LorentzError> {
    if support.is_empty() {
        return Ok(MConvexVerdict::Convex);
    }
    let nvars = support[0].len();
    let degree = support[0].total_degree();
    for v in support {
        if v.len() != nvars {
            return Err(LorentzError::MixedLengths);
        }
        if v.total_degree() != degree {
            return Err(LorentzError::MixedDegrees {
                a: degree,
                b: v.total_degree(),
            });
        }
    }
    let sorted: BTreeSet<ExponentVector> = support.iter().cloned().collect();
    for beta in &sorted {
        for alpha in &sorted {
            for i in 0..nvars {
                if alpha.get(i) <= beta.get(i) {
                    continue;
                }
                let stepped = alpha
                    .decremented(i)
                    .expect("alpha_i > beta_i >= 0 implies alpha_i > 0");
                let ok = (0..nvars).any(|j| {
                    alpha.get(j) < beta.get(j) && sorted.contains(&stepped.incremented(j))
                });
                if !ok {
                    return Ok(MConvexVerdict::NotConvex {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        index: i,
                    });
                }
            }
        }
    }
    Ok(MConvexVerdict::Convex)
}

/// Why a polynomial failed the Lorentzian check.
#[derive(Debug, Clone)]
pub enum LorentzFailure {
    NegativeCoefficient {
        alpha: ExponentVector,
        coeff: BigInt,
    },
    NotHomogeneous,
    SupportNotMConvex {
        alpha: ExponentVector,
        beta: ExponentVector,
        index: usize,
    },
    HessianPositiveCount {
        alpha: ExponentVector,
        inertia: Inertia,
    },
}

impl fmt::Display for LorentzFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LorentzFailure::NegativeCoefficient { alpha, coeff } => {
                write!(f, "negative coefficient {coeff} on {alpha}")
            }
            LorentzFailure::NotHomogeneous => write!(f, "not homogeneous"),
            LorentzFailure::SupportNotMConvex { alpha, beta, index } => {
                write!(f, "support not M-convex at ({alpha}, {beta}, i={index})")
            }
            LorentzFailure::HessianPositiveCount { alpha, inertia } => {
                write!(f, "Hessian of derivative at {alpha} has inertia {inertia}")
            }
        }
    }
}

/// Outcome of the full Lorentzian definition check.
#[derive(Debug, Clone)]
pub struct LorentzVerdict {
    pub is_lorentzian: bool,
    pub failure: Option<LorentzFailure>,
}

impl LorentzVerdict {
    fn pass() -> LorentzVerdict {
        LorentzVerdict {
            is_lorentzian: true,
            failure: None,
        }
    }

    fn fail(failure: LorentzFailure) -> LorentzVerdict {
        LorentzVerdict {
            is_lorentzian: false,
            failure: Some(failure),
        }
    }
}

/// The full Lorentzian definition: nonnegative coefficients, homogeneous,
/// M-convex support, and every Hessian of a (d-2)-fold partial derivative has
/// at most one positive eigenvalue. Degree 0 and 1 polynomials with
/// nonnegative coefficients count as Lorentzian. The sweep over derivative
/// multi-indices runs in graded-lex order and reports the first failure.
pub fn is_lorentzian(f: &MultiPoly) -> LorentzVerdict {
    for (alpha, c) in f.terms() {
        if c.is_negative() {
            return LorentzVerdict::fail(LorentzFailure::NegativeCoefficient {
                alpha: alpha.clone(),
                coeff: c.clone(),
            });
        }
    }
    let Some(degree) = f.homogeneous_degree() else {
        return LorentzVerdict::fail(LorentzFailure::NotHomogeneous);
    };
    if f.is_zero() || degree <= 1 {
        return LorentzVerdict::pass();
    }
    match is_m_convex(&f.support()) {
        Ok(MConvexVerdict::Convex) => {}
        Ok(MConvexVerdict::NotConvex { alpha, beta, index }) => {
            return LorentzVerdict::fail(LorentzFailure::SupportNotMConvex { alpha, beta, index });
        }
        Err(_) => return LorentzVerdict::fail(LorentzFailure::NotHomogeneous),
    }
    // Only multi-indices alpha <= beta - e_i - e_j for some support vector
    // beta give a nonzero derivative; everything else is a vacuous pass.
    let mut derivative_indices: BTreeSet<ExponentVector> = BTreeSet::new();
    for (beta, _) in f.terms() {
        for i in 0..f.nvars() {
            let Some(b1) = beta.decremented(i) else {
                continue;
            };
            for j in i..f.nvars() {
                if let Some(b2) = b1.decremented(j) {
                    derivative_indices.insert(b2);
                }
            }
        }
    }
    for alpha in derivative_indices {
        let hessian = hessian_of_derivative(f, &alpha);
        let inertia = hessian.inertia();
        if inertia.pos > 1 {
            return LorentzVerdict::fail(LorentzFailure::HessianPositiveCount { alpha, inertia });
        }
    }
    LorentzVerdict::pass()
}

/// Hessian of `∂^alpha f` for homogeneous `f` of degree `|alpha| + 2`; the
/// entries are exact integers read off the coefficients of `f`.
pub fn hessian_of_derivative(f: &MultiPoly, alpha: &ExponentVector) -> SymMatrix {
    let n = f.nvars();
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let target = alpha.incremented(i).incremented(j);
            let c = f.coefficient(&target);
            if c.is_zero() {
                continue;
            }
            // d_i d_j x^target, evaluated after the alpha-fold derivative:
            // multiply by the falling factorials of the exponents
            let mut factor = BigInt::one();
            for t in 0..n {
                let top = target.get(t);
                for step in 0..alpha.get(t) {
                    factor *= BigInt::from(top - step);
                }
            }
            // second derivative of the remaining quadratic part
            let second = if i == j { BigInt::from(2) } else { BigInt::one() };
            let entry = c * factor * second;
            rows[i][j] = entry.clone();
            rows[j][i] = entry;
        }
    }
    SymMatrix::from_bigint_rows(rows).expect("constructed symmetric")
}

/// Directional derivative `Σ v_i ∂_i f` for a nonnegative rational direction.
/// The result carries integer coefficients and the factored-out scale.
pub fn directional_derivative(
    f: &MultiPoly,
    v: &[BigRational],
) -> Result<ScaledPoly, LorentzError> {
    if v.len() != f.nvars() {
        return Err(LorentzError::DimMismatch {
            left: f.nvars(),
            right: v.len(),
        });
    }
    if let Some(index) = v.iter().position(|c| c.is_negative()) {
        return Err(LorentzError::NegativeDirection { index });
    }
    let mut acc: std::collections::BTreeMap<ExponentVector, BigRational> =
        std::collections::BTreeMap::new();
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        let di = f.partial_derivative(i)?;
        for (alpha, c) in di.terms() {
            let add = vi * BigRational::from(c.clone());
            *acc.entry(alpha.clone()).or_insert_with(BigRational::zero) += add;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(crate::poly::clear_denominators(f.nvars(), acc))
}

/// Outcome of the hyperbolicity inequality `(v·Aw)^2 >= (v·Av)(w·Aw)`.
/// The comparison only applies when `w·Aw > 0`; otherwise it is vacuous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypVerdict {
    Pass { lhs: BigRational, rhs: BigRational },
    VacuousPass,
    Fail { lhs: BigRational, rhs: BigRational },
}

impl HypVerdict {
    pub fn holds(&self) -> bool {
        !matches!(self, HypVerdict::Fail { .. })
    }
}

pub fn check_hyp(
    a: &SymMatrix,
    v: &[BigRational],
    w: &[BigRational],
) -> Result<HypVerdict, LorentzError> {
    let aw = a.apply(w)?;
    let av = a.apply(v)?;
    if v.len() != a.dim() {
        return Err(LorentzError::DimMismatch {
            left: a.dim(),
            right: v.len(),
        });
    }
    let dot = |x: &[BigRational], y: &[BigRational]| {
        x.iter()
            .zip(y)
            .map(|(a, b)| a * b)
            .fold(BigRational::zero(), |acc, t| acc + t)
    };
    let w_aw = dot(w, &aw);
    if !w_aw.is_positive() {
        return Ok(HypVerdict::VacuousPass);
    }
    let v_aw = dot(v, &aw);
    let v_av = dot(v, &av);
    let lhs = &v_aw * &v_aw;
    let rhs = v_av * w_aw;
    if lhs >= rhs {
        Ok(HypVerdict::Pass { lhs, rhs })
    } else {
        Ok(HypVerdict::Fail { lhs, rhs })
    }
}
