//! Sparse multivariate polynomials with exact integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector under
//! graded-lexicographic order, so iteration (and every witness derived from
//! it) is deterministic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use serde::Serialize;
use thiserror::Error;

/// Exact rational scale `num/den` used in coefficientwise comparisons.
/// `BigRational` keeps it reduced with a positive denominator.
pub type RationalScale = BigRational;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("point length {got} does not match variable count {nvars}")]
    PointLengthMismatch { got: usize, nvars: usize },
}

/// The monomial `x^α`, stored densely: `exps[i]` is the exponent of `x_i`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u16>);

impl ExponentVector {
    pub fn zeros(nvars: usize) -> ExponentVector {
        ExponentVector(vec![0; nvars])
    }

    pub fn new(exps: Vec<u16>) -> ExponentVector {
        ExponentVector(exps)
    }

    pub fn unit(nvars: usize, i: usize) -> ExponentVector {
        let mut e = ExponentVector::zeros(nvars);
        e.0[i] = 1;
        e
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn incremented(&self, i: usize) -> ExponentVector {
        let mut e = self.clone();
        e.0[i] += 1;
        e
    }

    /// `α - e_i`, or `None` if `α_i = 0`.
    pub fn decremented(&self, i: usize) -> Option<ExponentVector> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.clone();
        e.0[i] -= 1;
        Some(e)
    }

    fn sum(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for ExponentVector {
    /// Graded-lexicographic: total degree first, then entrywise lex.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.total_degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "x{i}^{e}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// A sparse polynomial with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> MultiPoly {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: BigInt) -> MultiPoly {
        let mut p = MultiPoly::zero(nvars);
        p.add_term(ExponentVector::zeros(nvars), value);
        p
    }

    pub fn one(nvars: usize) -> MultiPoly {
        MultiPoly::constant(nvars, BigInt::one())
    }

    pub fn monomial(alpha: ExponentVector, coeff: BigInt) -> MultiPoly {
        let mut p = MultiPoly::zero(alpha.len());
        p.add_term(alpha, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    /// Add `coeff · x^alpha`, dropping the term if it cancels to zero.
    pub fn add_term(&mut self, alpha: ExponentVector, coeff: BigInt) {
        debug_assert_eq!(alpha.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The coefficient of `x^alpha`; zero when the monomial is absent.
    pub fn coefficient(&self, alpha: &ExponentVector) -> BigInt {
        assert_eq!(alpha.len(), self.nvars, "exponent vector length mismatch");
        self.terms.get(alpha).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            out.add_term(alpha.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            out.add_term(alpha.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scaled(&self, factor: &BigInt) -> MultiPoly {
        if factor.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c * factor))
                .collect(),
        }
    }

    /// Exact product by term-pair accumulation.
    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_nvars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.sum(b), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: usize) -> MultiPoly {
        let mut out = MultiPoly::one(self.nvars);
        for _ in 0..exp {
            out = out.mul(self).expect("same variable space");
        }
        out
    }

    /// Exact partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<MultiPoly, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::IndexOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (alpha, c) in &self.terms {
            if let Some(reduced) = alpha.decremented(i) {
                out.add_term(reduced, c * BigInt::from(alpha.get(i)));
            }
        }
        Ok(out)
    }

    /// Substitute `x_i = 0`: drop every term with a positive exponent on `i`.
    pub fn substitute_zero(&self, i: usize) -> MultiPoly {
        if i >= self.nvars {
            return self.clone();
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(alpha, _)| alpha.get(i) == 0)
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    /// Common total degree, or `None` when the terms have mixed degrees.
    /// The zero polynomial reports degree 0.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(ExponentVector::total_degree);
        let Some(first) = degrees.next() else {
            return Some(0);
        };
        if degrees.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn max_degree(&self) -> usize {
        self.terms
            .keys()
            .map(ExponentVector::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLengthMismatch {
                got: point.len(),
                nvars: self.nvars,
            });
        }
        let mut acc = BigRational::zero();
        for (alpha, c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for (i, &e) in alpha.exps().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Floating evaluation, for sampled numeric spot checks only.
    pub fn evaluate_f64(&self, point: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (alpha, c) in &self.terms {
            let mut term = bigint_to_f64(c);
            for (i, &e) in alpha.exps().iter().enumerate() {
                term *= point[i].powi(e as i32);
            }
            acc += term;
        }
        acc
    }

    /// Keep only the listed variables, re-indexing them in the given order.
    /// Fails if any term uses a dropped variable.
    pub fn restrict_vars(&self, keep: &[usize]) -> Result<MultiPoly, PolyError> {
        let mut kept = vec![false; self.nvars];
        for &v in keep {
            if v >= self.nvars {
                return Err(PolyError::IndexOutOfRange {
                    index: v,
                    nvars: self.nvars,
                });
            }
            kept[v] = true;
        }
        let mut out = MultiPoly::zero(keep.len());
        for (alpha, c) in &self.terms {
            for (i, &e) in alpha.exps().iter().enumerate() {
                if e > 0 && !kept[i] {
                    return Err(PolyError::IndexOutOfRange {
                        index: i,
                        nvars: keep.len(),
                    });
                }
            }
            let reduced = ExponentVector::new(keep.iter().map(|&v| alpha.get(v)).collect());
            out.add_term(reduced, c.clone());
        }
        Ok(out)
    }

    /// Substitute `x_i := Σ_j a[i][j] · y_j` for every variable. The result is
    /// returned with integer coefficients and a positive rational scale.
    pub fn compose_linear(&self, a: &[Vec<BigRational>]) -> Result<ScaledPoly, PolyError> {
        if a.len() != self.nvars {
            return Err(PolyError::PointLengthMismatch {
                got: a.len(),
                nvars: self.nvars,
            });
        }
        let out_vars = a.first().map_or(0, Vec::len);
        let mut images: Vec<Vec<(ExponentVector, BigRational)>> = Vec::with_capacity(self.nvars);
        for row in a {
            if row.len() != out_vars {
                return Err(PolyError::PointLengthMismatch {
                    got: row.len(),
                    nvars: out_vars,
                });
            }
            images.push(
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (ExponentVector::unit(out_vars, j), c.clone()))
                    .collect(),
            );
        }
        let mut acc: BTreeMap<ExponentVector, BigRational> = BTreeMap::new();
        for (alpha, c) in &self.terms {
            let mut partial: Vec<(ExponentVector, BigRational)> = vec![(
                ExponentVector::zeros(out_vars),
                BigRational::from(c.clone()),
            )];
            for (i, &e) in alpha.exps().iter().enumerate() {
                for _ in 0..e {
                    let mut next: BTreeMap<ExponentVector, BigRational> = BTreeMap::new();
                    for (ev, cv) in &partial {
                        for (iv, ic) in &images[i] {
                            let key = ev.sum(iv);
                            let val = cv * ic;
                            *next.entry(key).or_insert_with(BigRational::zero) += val;
                        }
                    }
                    partial = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                }
            }
            for (ev, cv) in partial {
                *acc.entry(ev).or_insert_with(BigRational::zero) += cv;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(clear_denominators(out_vars, acc))
    }

    /// Coefficientwise comparison `self >= scale · other`, carried out in
    /// integers as `den·self - num·other >= 0`. Monomials are scanned leading
    /// term first (descending graded-lex); on failure the witness is the
    /// first offending monomial of that scan, and a tight witness records the
    /// first monomial where equality holds with a nonzero right-hand side.
    pub fn dominates(
        &self,
        other: &MultiPoly,
        scale: &RationalScale,
    ) -> Result<DominanceOutcome, PolyError> {
        self.check_nvars(other)?;
        let num = scale.numer();
        let den = scale.denom();
        let mut keys: BTreeSet<&ExponentVector> = self.terms.keys().collect();
        keys.extend(other.terms.keys());
        let mut tight = None;
        for alpha in keys.into_iter().rev() {
            let lhs = self.coefficient(alpha) * den;
            let rhs = other.coefficient(alpha) * num;
            match lhs.cmp(&rhs) {
                Ordering::Less => {
                    return Ok(DominanceOutcome {
                        holds: false,
                        witness: Some(MonomialWitness {
                            alpha: alpha.clone(),
                            lhs_scaled: lhs,
                            rhs_scaled: rhs,
                        }),
                        tight,
                    });
                }
                Ordering::Equal => {
                    if tight.is_none() && !rhs.is_zero() {
                        tight = Some(MonomialWitness {
                            alpha: alpha.clone(),
                            lhs_scaled: lhs.clone(),
                            rhs_scaled: rhs,
                        });
                    }
                }
                Ordering::Greater => {}
            }
        }
        Ok(DominanceOutcome {
            holds: true,
            witness: None,
            tight,
        })
    }

    /// Stable debug rendering: one `coeff * monomial` line per term, in
    /// graded-lex order.
    pub fn to_lines(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_string()];
        }
        self.terms
            .iter()
            .map(|(alpha, c)| format!("{c} * {alpha}"))
            .collect()
    }

    fn check_nvars(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_lines().join(" + "))
    }
}

/// Result of a coefficientwise dominance check.
#[derive(Debug, Clone)]
pub struct DominanceOutcome {
    pub holds: bool,
    pub witness: Option<MonomialWitness>,
    pub tight: Option<MonomialWitness>,
}

/// A monomial with both scaled coefficients, as evidence for a comparison.
#[derive(Debug, Clone, Serialize)]
pub struct MonomialWitness {
    pub alpha: ExponentVector,
    #[serde(serialize_with = "crate::poly::serialize_bigint")]
    pub lhs_scaled: BigInt,
    #[serde(serialize_with = "crate::poly::serialize_bigint")]
    pub rhs_scaled: BigInt,
}

pub(crate) fn serialize_bigint<S: serde::Serializer>(
    value: &BigInt,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

/// An integer-coefficient polynomial together with a positive rational scale;
/// the represented polynomial is `scale · poly`.
#[derive(Debug, Clone)]
pub struct ScaledPoly {
    pub poly: MultiPoly,
    pub scale: BigRational,
}

/// Clear a map of rational coefficients to integers, returning the polynomial
/// and the factored-out scale `1/lcm(denominators)`.
pub(crate) fn clear_denominators(
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigRational>,
) -> ScaledPoly {
    let mut lcm = BigInt::one();
    for c in terms.values() {
        lcm = lcm.lcm(c.denom());
    }
    let mut poly = MultiPoly::zero(nvars);
    for (alpha, c) in terms {
        let cleared = (&c * BigRational::from(lcm.clone()))
            .to_integer();
        poly.add_term(alpha, cleared);
    }
    ScaledPoly {
        poly,
        scale: BigRational::new(BigInt::one(), lcm),
    }
}

fn bigint_to_f64(value: &BigInt) -> f64 {
    use num::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}
