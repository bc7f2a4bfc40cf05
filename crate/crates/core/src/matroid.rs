//! Matroid representations and constructions.
//!
//! A matroid is stored as a ground-set size plus an independence oracle.
//! Primitive kinds (uniform, graphic, linear, explicit) evaluate directly;
//! derived kinds (dual, deletion, contraction, parallel extension) evaluate
//! through their base matroid via the standard rank identities. Matroids are
//! immutable after construction and cheap to clone.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use thiserror::Error;

use crate::mask::{all_subsets, k_subsets, SubsetMask, MAX_GROUND_SIZE};

#[derive(Debug, Error)]
pub enum MatroidError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("ground set too large: {n} elements (cap {MAX_GROUND_SIZE})")]
    TooLarge { n: usize },
    #[error("independence axiom violated: {0}")]
    AxiomViolation(#[from] AxiomViolation),
}

/// Which independence axiom failed, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("empty set is not in the family")]
    EmptyNotIndependent,
    #[error("hereditary violation: {set} is independent but its subset {subset} is not")]
    Hereditary { set: SubsetMask, subset: SubsetMask },
    #[error("exchange violation: no element of {larger} \\ {smaller} extends {smaller}")]
    Exchange {
        smaller: SubsetMask,
        larger: SubsetMask,
    },
}

/// Coarse constructor family, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindTag {
    Uniform,
    Graphic,
    Linear,
    Explicit,
    Derived,
}

impl fmt::Display for KindTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            KindTag::Uniform => "uniform",
            KindTag::Graphic => "graphic",
            KindTag::Linear => "linear",
            KindTag::Explicit => "explicit",
            KindTag::Derived => "derived",
        };
        f.write_str(s)
    }
}

enum Oracle {
    Uniform {
        r: usize,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Linear {
        p: u64,
        rows: usize,
        cols: Vec<Vec<u64>>,
    },
    Explicit {
        independents: BTreeSet<u32>,
    },
    Dual {
        base: Matroid,
    },
    /// Ground set re-indexed to the kept elements; `keep[new] = old`.
    Deleted {
        base: Matroid,
        keep: Vec<usize>,
    },
    /// Contraction of `t` (in base coordinates); `keep[new] = old`.
    Contracted {
        base: Matroid,
        keep: Vec<usize>,
        t: SubsetMask,
        t_rank: usize,
    },
    /// Parallel copies appended after the base ground set;
    /// `origin[new] = (base element, copy index)`.
    Parallel {
        base: Matroid,
        origin: Vec<(usize, usize)>,
    },
}

struct Inner {
    n: usize,
    name: String,
    tag: KindTag,
    oracle: Oracle,
    rank_full: OnceLock<usize>,
    /// Per-subset memo for the rank-identity oracles (dual, contraction).
    memo: Option<DashMap<u32, bool>>,
}

/// An immutable matroid on ground set `{0, .., n-1}`.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid({})", self.name())
    }
}

fn check_size(n: usize) -> Result<(), MatroidError> {
    if n > MAX_GROUND_SIZE {
        Err(MatroidError::TooLarge { n })
    } else {
        Ok(())
    }
}

impl Matroid {
    fn build(n: usize, name: String, tag: KindTag, oracle: Oracle) -> Matroid {
        let memo = match oracle {
            Oracle::Dual { .. } | Oracle::Contracted { .. } => Some(DashMap::new()),
            _ => None,
        };
        Matroid {
            inner: Arc::new(Inner {
                n,
                name,
                tag,
                oracle,
                rank_full: OnceLock::new(),
                memo,
            }),
        }
    }

    /// Uniform matroid `U_{r,n}`: independent sets are all subsets of size at most `r`.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid, MatroidError> {
        check_size(n)?;
        if r > n {
            return Err(MatroidError::InvalidParameter(format!(
                "uniform matroid needs r <= n, got r={r}, n={n}"
            )));
        }
        Ok(Matroid::build(
            n,
            format!("U({r},{n})"),
            KindTag::Uniform,
            Oracle::Uniform { r },
        ))
    }

    /// Cycle matroid of a multigraph. Elements are edges; a subset is
    /// independent iff it is a forest. Self-loops and parallel edges are
    /// allowed; a self-loop is never independent.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid, MatroidError> {
        check_size(edges.len())?;
        for &(u, v) in edges {
            if u >= vertices || v >= vertices {
                return Err(MatroidError::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for {vertices} vertices"
                )));
            }
        }
        let desc: Vec<String> = edges.iter().map(|&(u, v)| format!("{u}-{v}")).collect();
        Ok(Matroid::build(
            edges.len(),
            format!("graphic(v={vertices};{})", desc.join(",")),
            KindTag::Graphic,
            Oracle::Graphic {
                vertices,
                edges: edges.to_vec(),
            },
        ))
    }

    /// Column matroid of a matrix over GF(p). `rows` is given as a list of
    /// matrix rows; element `i` is column `i`.
    pub fn linear(p: u64, rows: &[Vec<u64>]) -> Result<Matroid, MatroidError> {
        if !is_prime(p) {
            return Err(MatroidError::InvalidParameter(format!("{p} is not prime")));
        }
        let ncols = rows.first().map_or(0, Vec::len);
        check_size(ncols)?;
        for row in rows {
            if row.len() != ncols {
                return Err(MatroidError::InvalidParameter(
                    "matrix rows have unequal lengths".into(),
                ));
            }
            for &x in row {
                if x >= p {
                    return Err(MatroidError::InvalidParameter(format!(
                        "matrix entry {x} not reduced mod {p}"
                    )));
                }
            }
        }
        // store column-major
        let cols: Vec<Vec<u64>> = (0..ncols)
            .map(|j| rows.iter().map(|row| row[j]).collect())
            .collect();
        let enc: Vec<String> = cols
            .iter()
            .map(|c| c.iter().map(u64::to_string).collect::<String>())
            .collect();
        Ok(Matroid::build(
            ncols,
            format!("gf{p}[{}x{ncols};{}]", rows.len(), enc.join(",")),
            KindTag::Linear,
            Oracle::Linear {
                p,
                rows: rows.len(),
                cols,
            },
        ))
    }

    /// Matroid given by an explicit list of independent sets. With `validate`
    /// on, the family is checked against the three independence axioms.
    pub fn explicit<I: IntoIterator<Item = SubsetMask>>(
        n: usize,
        independents: I,
        validate: bool,
    ) -> Result<Matroid, MatroidError> {
        check_size(n)?;
        let full = SubsetMask::full(n);
        let mut family = BTreeSet::new();
        for s in independents {
            if !s.is_subset_of(full) {
                return Err(MatroidError::InvalidParameter(format!(
                    "independent set {s} not contained in the ground set of size {n}"
                )));
            }
            family.insert(s.bits());
        }
        if validate {
            validate_family(&family)?;
        }
        let count = family.len();
        Ok(Matroid::build(
            n,
            format!("explicit(n={n},|I|={count})"),
            KindTag::Explicit,
            Oracle::Explicit {
                independents: family,
            },
        ))
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn kind(&self) -> KindTag {
        self.inner.tag
    }

    pub fn ground_set(&self) -> SubsetMask {
        SubsetMask::full(self.inner.n)
    }

    /// The independence oracle.
    pub fn is_independent(&self, s: SubsetMask) -> bool {
        debug_assert!(s.is_subset_of(self.ground_set()));
        match &self.inner.oracle {
            Oracle::Uniform { r } => s.card() <= *r,
            Oracle::Graphic { vertices, edges } => {
                let mut forest = UnionFind::new(*vertices);
                for e in s.iter() {
                    let (u, v) = edges[e];
                    if !forest.join(u, v) {
                        return false;
                    }
                }
                true
            }
            Oracle::Linear { p, rows, cols } => gf_columns_independent(*p, *rows, cols, s),
            Oracle::Explicit { independents } => independents.contains(&s.bits()),
            Oracle::Dual { base } => self.memoized(s, || {
                // S is independent in M* iff E \ S spans M.
                base.rank(s.complement_in(base)) == base.rank_full()
            }),
            Oracle::Deleted { base, keep } => base.is_independent(remap(s, keep)),
            Oracle::Contracted {
                base,
                keep,
                t,
                t_rank,
            } => self.memoized(s, || {
                let mapped = remap(s, keep);
                base.rank(mapped.union(*t)) - t_rank == s.card()
            }),
            Oracle::Parallel { base, origin } => {
                let mut projected = SubsetMask::EMPTY;
                for e in s.iter() {
                    let (orig, _) = origin[e];
                    if projected.contains(orig) {
                        return false; // two parallel copies of the same element
                    }
                    projected = projected.with(orig);
                }
                base.is_independent(projected)
            }
        }
    }

    fn memoized(&self, s: SubsetMask, compute: impl FnOnce() -> bool) -> bool {
        match &self.inner.memo {
            Some(memo) => {
                if let Some(v) = memo.get(&s.bits()) {
                    return *v;
                }
                let v = compute();
                memo.insert(s.bits(), v);
                v
            }
            None => compute(),
        }
    }

    /// Rank of a subset: the size of a maximal independent subset, grown
    /// greedily element by element.
    pub fn rank(&self, s: SubsetMask) -> usize {
        debug_assert!(s.is_subset_of(self.ground_set()));
        let mut current = SubsetMask::EMPTY;
        for e in s.iter() {
            let candidate = current.with(e);
            if self.is_independent(candidate) {
                current = candidate;
            }
        }
        current.card()
    }

    /// Rank of the whole matroid (cached).
    pub fn rank_full(&self) -> usize {
        *self
            .inner
            .rank_full
            .get_or_init(|| self.rank(self.ground_set()))
    }

    /// Dual matroid: bases are the complements of the bases of `self`.
    pub fn dual(&self) -> Matroid {
        Matroid::build(
            self.n(),
            format!("dual({})", self.name()),
            KindTag::Derived,
            Oracle::Dual { base: self.clone() },
        )
    }

    /// Deletion: remove `t`, re-index the remaining elements to `0..n-|t|`.
    pub fn delete(&self, t: SubsetMask) -> Result<Matroid, MatroidError> {
        self.check_subset(t)?;
        let keep: Vec<usize> = self.ground_set().difference(t).iter().collect();
        Ok(Matroid::build(
            keep.len(),
            format!("del({};{t})", self.name()),
            KindTag::Derived,
            Oracle::Deleted {
                base: self.clone(),
                keep,
            },
        ))
    }

    /// Restriction to `t`, i.e. deletion of the complement.
    pub fn restrict(&self, t: SubsetMask) -> Result<Matroid, MatroidError> {
        self.check_subset(t)?;
        self.delete(t.complement(self.n()))
    }

    /// Contraction of `t`, via the rank identity
    /// `r_{M/T}(S) = r_M(S ∪ T) - r_M(T)`.
    pub fn contract(&self, t: SubsetMask) -> Result<Matroid, MatroidError> {
        self.check_subset(t)?;
        let keep: Vec<usize> = self.ground_set().difference(t).iter().collect();
        let t_rank = self.rank(t);
        Ok(Matroid::build(
            keep.len(),
            format!("contract({};{t})", self.name()),
            KindTag::Derived,
            Oracle::Contracted {
                base: self.clone(),
                keep,
                t,
                t_rank,
            },
        ))
    }

    /// The minor `M(X ∪ Y)/Y` with its size `|X|` and depth `r_M(Y)`.
    pub fn minor(&self, x: SubsetMask, y: SubsetMask) -> Result<MinorDescriptor, MatroidError> {
        self.check_subset(x)?;
        self.check_subset(y)?;
        if !x.is_disjoint_from(y) {
            return Err(MatroidError::InvalidParameter(format!(
                "minor requires disjoint X and Y, got X={x}, Y={y}"
            )));
        }
        let restricted = self.restrict(x.union(y))?;
        let y_mapped = map_into_submatroid(y, &restricted);
        let matroid = restricted.contract(y_mapped)?;
        Ok(MinorDescriptor {
            base: self.clone(),
            x_set: x,
            y_set: y,
            size: x.card(),
            depth: self.rank(y),
            y_independent: self.is_independent(y),
            matroid,
        })
    }

    /// Replace each element of `x` by `k` mutually parallel copies. The extra
    /// `k-1` copies per element are appended after the original ground set,
    /// grouped by original element in ascending order.
    pub fn parallel_extension(
        &self,
        x: SubsetMask,
        k: usize,
    ) -> Result<Matroid, MatroidError> {
        self.check_subset(x)?;
        if k < 1 {
            return Err(MatroidError::InvalidParameter(
                "parallel extension needs k >= 1".into(),
            ));
        }
        let n_new = self.n() + (k - 1) * x.card();
        check_size(n_new)?;
        let mut origin: Vec<(usize, usize)> = (0..self.n()).map(|e| (e, 0)).collect();
        for e in x.iter() {
            for copy in 1..k {
                origin.push((e, copy));
            }
        }
        Ok(Matroid::build(
            n_new,
            format!("parext({};X={x},k={k})", self.name()),
            KindTag::Derived,
            Oracle::Parallel {
                base: self.clone(),
                origin,
            },
        ))
    }

    /// The partition minor `(M(X_1 ∪ .. ∪ X_p) ⊙ X_1^{q_1} .. ⊙ X_{p-1}^{q_{p-1}}) / X_p`
    /// for `q = (1, 2, .., p-1)`, with size `Σ q_j·|X_j|` and depth `r_M(X_p)`.
    pub fn partition_minor(
        &self,
        xs: &[SubsetMask],
        q: &[usize],
    ) -> Result<MinorDescriptor, MatroidError> {
        let p = xs.len();
        if p < 2 {
            return Err(MatroidError::InvalidParameter(
                "partition minor needs at least two blocks".into(),
            ));
        }
        if q.len() != p - 1 || q.iter().enumerate().any(|(i, &qi)| qi != i + 1) {
            return Err(MatroidError::InvalidParameter(format!(
                "only q = (1, 2, .., {}) is supported",
                p - 1
            )));
        }
        let mut union = SubsetMask::EMPTY;
        for &x in xs {
            self.check_subset(x)?;
            if !x.is_disjoint_from(union) {
                return Err(MatroidError::InvalidParameter(
                    "partition minor blocks must be pairwise disjoint".into(),
                ));
            }
            union = union.union(x);
        }
        let restricted = self.restrict(union)?;
        // Parallel extension appends copies, so indices of the restricted
        // ground set stay valid across the chain.
        let mut current = restricted.clone();
        for (j, &x) in xs[..p - 1].iter().enumerate() {
            let mapped = map_into_submatroid(x, &restricted);
            current = current.parallel_extension(mapped, q[j])?;
        }
        let xp_mapped = map_into_submatroid(xs[p - 1], &restricted);
        let matroid = current.contract(xp_mapped)?;
        let size: usize = q.iter().zip(xs).map(|(&qj, x)| qj * x.card()).sum();
        debug_assert_eq!(matroid.n(), size);
        let xp = xs[p - 1];
        Ok(MinorDescriptor {
            base: self.clone(),
            x_set: union.difference(xp),
            y_set: xp,
            size,
            depth: self.rank(xp),
            y_independent: self.is_independent(xp),
            matroid,
        })
    }

    /// All independent `k`-subsets in ascending mask order.
    pub fn independents_of_size(&self, k: usize) -> Vec<SubsetMask> {
        k_subsets(self.n(), k)
            .filter(|&s| self.is_independent(s))
            .collect()
    }

    /// Number of independent `k`-subsets.
    pub fn independent_count(&self, k: usize) -> u64 {
        k_subsets(self.n(), k)
            .filter(|&s| self.is_independent(s))
            .count() as u64
    }

    /// Index map of a derived matroid: `map[new] = old`, when the ground set
    /// was re-indexed (deletion, restriction, contraction).
    pub fn index_map(&self) -> Option<&[usize]> {
        match &self.inner.oracle {
            Oracle::Deleted { keep, .. } | Oracle::Contracted { keep, .. } => Some(keep),
            _ => None,
        }
    }

    /// Copy map of a parallel extension: `map[new] = (original, copy index)`.
    pub fn parallel_map(&self) -> Option<&[(usize, usize)]> {
        match &self.inner.oracle {
            Oracle::Parallel { origin, .. } => Some(origin),
            _ => None,
        }
    }

    /// Whether the two matroids have identical oracles on every subset.
    pub fn oracle_eq(&self, other: &Matroid) -> bool {
        self.n() == other.n()
            && all_subsets(self.n()).all(|s| self.is_independent(s) == other.is_independent(s))
    }

    /// Brute-force check of the three independence axioms over all subsets.
    pub fn check_axioms(&self) -> Result<(), AxiomViolation> {
        let family: BTreeSet<u32> = all_subsets(self.n())
            .filter(|&s| self.is_independent(s))
            .map(SubsetMask::bits)
            .collect();
        validate_family(&family)
    }

    fn check_subset(&self, s: SubsetMask) -> Result<(), MatroidError> {
        if !s.is_subset_of(self.ground_set()) {
            return Err(MatroidError::InvalidParameter(format!(
                "subset {s} not contained in the ground set of size {}",
                self.n()
            )));
        }
        Ok(())
    }
}

impl SubsetMask {
    fn complement_in(self, m: &Matroid) -> SubsetMask {
        self.complement(m.n())
    }
}

/// A minor together with its bookkeeping: the sets it was built from, its
/// size, and its depth. `y_independent` records whether the contracted set is
/// independent in the base matroid.
#[derive(Debug, Clone)]
pub struct MinorDescriptor {
    pub base: Matroid,
    pub x_set: SubsetMask,
    pub y_set: SubsetMask,
    pub size: usize,
    pub depth: usize,
    pub y_independent: bool,
    pub matroid: Matroid,
}

/// Map a subset of a restricted matroid's base coordinates into the
/// restricted coordinates.
fn map_into_submatroid(s: SubsetMask, restricted: &Matroid) -> SubsetMask {
    let keep = restricted
        .index_map()
        .expect("restriction carries an index map");
    let mut out = SubsetMask::EMPTY;
    for (new, &old) in keep.iter().enumerate() {
        if s.contains(old) {
            out = out.with(new);
        }
    }
    debug_assert_eq!(out.card(), s.intersection_card(keep));
    out
}

impl SubsetMask {
    fn intersection_card(self, keep: &[usize]) -> usize {
        keep.iter().filter(|&&old| self.contains(old)).count()
    }
}

/// Map a subset through an index map: `new -> keep[new]`.
fn remap(s: SubsetMask, keep: &[usize]) -> SubsetMask {
    let mut out = SubsetMask::EMPTY;
    for e in s.iter() {
        out = out.with(keep[e]);
    }
    out
}

fn validate_family(family: &BTreeSet<u32>) -> Result<(), AxiomViolation> {
    if !family.contains(&0) {
        return Err(AxiomViolation::EmptyNotIndependent);
    }
    // hereditary: removing any single element stays in the family
    for &bits in family {
        let s = SubsetMask(bits);
        for e in s.iter() {
            let sub = s.without(e);
            if !family.contains(&sub.bits()) {
                return Err(AxiomViolation::Hereditary { set: s, subset: sub });
            }
        }
    }
    // exchange, brute force over ordered pairs in ascending mask order
    for &a_bits in family {
        let a = SubsetMask(a_bits);
        for &b_bits in family {
            let b = SubsetMask(b_bits);
            if a.card() < b.card() {
                let extendable = b
                    .difference(a)
                    .iter()
                    .any(|e| family.contains(&a.with(e).bits()));
                if !extendable {
                    return Err(AxiomViolation::Exchange {
                        smaller: a,
                        larger: b,
                    });
                }
            }
        }
    }
    Ok(())
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Gaussian elimination over GF(p) on the selected columns.
fn gf_columns_independent(p: u64, rows: usize, cols: &[Vec<u64>], s: SubsetMask) -> bool {
    let picked: Vec<usize> = s.iter().collect();
    if picked.len() > rows {
        return false;
    }
    let mut mat: Vec<Vec<u64>> = (0..rows)
        .map(|i| picked.iter().map(|&j| cols[j][i]).collect())
        .collect();
    let ncols = picked.len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows).find(|&i| mat[i][col] != 0) else {
            return false; // column is dependent on the previous ones
        };
        mat.swap(rank, pivot);
        let inv = mod_inverse(mat[rank][col], p);
        for x in &mut mat[rank] {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != rank && mat[i][col] != 0 {
                let factor = mat[i][col];
                for j in 0..ncols {
                    let sub = factor * mat[rank][j] % p;
                    mat[i][j] = (mat[i][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank == ncols
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Join the components of `u` and `v`; false if already joined (cycle).
    fn join(&mut self, u: usize, v: usize) -> bool {
        let ru = self.find(u);
        let rv = self.find(v);
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::SubsetMask as M;

    fn mask(elements: &[usize]) -> M {
        M::from_elements(elements.iter().copied())
    }

    #[test]
    fn uniform_oracle() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert!(u24.is_independent(mask(&[1, 2])));
        assert!(!u24.is_independent(mask(&[1, 2, 3])));
        assert!(Matroid::uniform(5, 4).is_err());

        let u03 = Matroid::uniform(0, 3).unwrap();
        assert!(!u03.is_independent(mask(&[0])));
        assert!(u03.is_independent(M::EMPTY));

        let free = Matroid::uniform(4, 4).unwrap();
        assert!(all_subsets(4).all(|s| free.is_independent(s)));
    }

    #[test]
    fn graphic_triangle() {
        let k3 = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.independent_count(0), 1);
        assert_eq!(k3.independent_count(1), 3);
        assert_eq!(k3.independent_count(2), 3);
        assert!(!k3.is_independent(mask(&[0, 1, 2])));
        // brute-force oracle over all 8 subsets: acyclic iff <= 2 edges here
        for s in all_subsets(3) {
            assert_eq!(k3.is_independent(s), s.card() <= 2, "subset {s}");
        }
    }

    #[test]
    fn graphic_loops_and_parallels() {
        let looped = Matroid::graphic(1, &[(0, 0)]).unwrap();
        assert!(!looped.is_independent(mask(&[0])));

        let pair = Matroid::graphic(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(pair.is_independent(mask(&[0])));
        assert!(!pair.is_independent(mask(&[0, 1])));

        assert!(Matroid::graphic(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn linear_gf2() {
        let id3 = Matroid::linear(2, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(all_subsets(3).all(|s| id3.is_independent(s)));

        let m = Matroid::linear(2, &[vec![1, 0, 1, 1], vec![0, 1, 1, 1]]).unwrap();
        assert!(!m.is_independent(mask(&[2, 3])));
        assert!(m.is_independent(mask(&[0, 1])));

        let z = Matroid::linear(2, &[vec![1, 0], vec![0, 0]]).unwrap();
        assert!(!z.is_independent(mask(&[1])));

        assert!(Matroid::linear(4, &[vec![1]]).is_err());
    }

    #[test]
    fn explicit_validation() {
        let u12 = Matroid::explicit(2, [M::EMPTY, mask(&[0]), mask(&[1])], true).unwrap();
        assert_eq!(u12.rank_full(), 1);

        let err = Matroid::explicit(2, [M::EMPTY, mask(&[0, 1])], true).unwrap_err();
        match err {
            MatroidError::AxiomViolation(AxiomViolation::Hereditary { set, .. }) => {
                assert_eq!(set, mask(&[0, 1]));
            }
            other => panic!("expected hereditary violation, got {other:?}"),
        }

        let err = Matroid::explicit(
            3,
            [M::EMPTY, mask(&[0]), mask(&[1]), mask(&[2]), mask(&[0, 1])],
            true,
        )
        .unwrap_err();
        match err {
            MatroidError::AxiomViolation(AxiomViolation::Exchange { smaller, larger }) => {
                assert_eq!(smaller, mask(&[2]));
                assert_eq!(larger, mask(&[0, 1]));
            }
            other => panic!("expected exchange violation, got {other:?}"),
        }
    }

    #[test]
    fn rank_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.rank(mask(&[0, 1, 2])), 2);
        assert_eq!(u24.rank(M::EMPTY), 0);
        let k3 = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.rank(mask(&[0, 1, 2])), 2);
    }

    #[test]
    fn dual_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert!(u24.dual().oracle_eq(&u24));

        let free = Matroid::uniform(3, 3).unwrap();
        let zero = Matroid::uniform(0, 3).unwrap();
        assert!(free.dual().oracle_eq(&zero));

        let k3 = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(k3.dual().dual().oracle_eq(&k3));
    }

    #[test]
    fn delete_restrict_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let r = u24.restrict(mask(&[0, 1])).unwrap();
        assert!(r.oracle_eq(&Matroid::uniform(2, 2).unwrap()));

        let same = u24.delete(M::EMPTY).unwrap();
        assert!(same.oracle_eq(&u24));

        let k3 = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let path = k3.delete(mask(&[0])).unwrap();
        assert!(path.oracle_eq(&Matroid::uniform(2, 2).unwrap()));
        assert_eq!(path.index_map(), Some(&[1, 2][..]));
    }

    #[test]
    fn contract_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert!(u24.contract(M::EMPTY).unwrap().oracle_eq(&u24));

        let c = u24.contract(mask(&[3])).unwrap();
        assert!(c.oracle_eq(&Matroid::uniform(1, 3).unwrap()));

        // contracting one triangle edge leaves two parallel elements
        let k3 = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = k3.contract(mask(&[0])).unwrap();
        assert!(c.is_independent(mask(&[0])));
        assert!(c.is_independent(mask(&[1])));
        assert!(!c.is_independent(mask(&[0, 1])));
    }

    #[test]
    fn contract_matches_dual_definition() {
        // M/T = (M* \ T)* on every subset
        let matroids = vec![
            Matroid::uniform(2, 4).unwrap(),
            Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
            Matroid::graphic(3, &[(0, 1), (0, 1), (1, 2), (2, 2)]).unwrap(),
        ];
        for m in matroids {
            for t in all_subsets(m.n()) {
                let via_rank = m.contract(t).unwrap();
                let via_dual = m.dual().delete(t).unwrap().dual();
                assert!(via_rank.oracle_eq(&via_dual), "{} / {t}", m.name());
            }
        }
    }

    #[test]
    fn minor_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let d = u24.minor(mask(&[0, 1]), mask(&[2])).unwrap();
        assert_eq!(d.size, 2);
        assert_eq!(d.depth, 1);
        assert!(d.matroid.oracle_eq(&Matroid::uniform(1, 2).unwrap()));

        let restriction = u24.minor(mask(&[0, 1]), M::EMPTY).unwrap();
        assert_eq!(restriction.depth, 0);
        assert!(restriction
            .matroid
            .oracle_eq(&Matroid::uniform(2, 2).unwrap()));

        let empty = u24.minor(M::EMPTY, mask(&[1, 2])).unwrap();
        assert_eq!(empty.size, 0);
        assert_eq!(empty.depth, 2);
        assert_eq!(empty.matroid.n(), 0);

        assert!(u24.minor(mask(&[0, 1]), mask(&[1])).is_err());
    }

    #[test]
    fn parallel_extension_examples() {
        let u11 = Matroid::uniform(1, 1).unwrap();
        let doubled = u11.parallel_extension(mask(&[0]), 2).unwrap();
        assert!(doubled.oracle_eq(&Matroid::uniform(1, 2).unwrap()));
        assert_eq!(doubled.parallel_map(), Some(&[(0, 0), (0, 1)][..]));

        let same = u11.parallel_extension(mask(&[0]), 1).unwrap();
        assert!(same.oracle_eq(&u11));

        // copies of a loop stay loops
        let looped = Matroid::graphic(1, &[(0, 0)]).unwrap();
        let ext = looped.parallel_extension(mask(&[0]), 3).unwrap();
        for e in 0..3 {
            assert!(!ext.is_independent(M::singleton(e)));
        }

        assert!(u11.parallel_extension(mask(&[0]), 0).is_err());
    }

    #[test]
    fn partition_minor_examples() {
        let u33 = Matroid::uniform(3, 3).unwrap();
        let d = u33
            .partition_minor(&[mask(&[0]), mask(&[1]), mask(&[2])], &[1, 2])
            .unwrap();
        assert_eq!(d.size, 3);
        assert_eq!(d.depth, 1);
        assert_eq!(d.matroid.n(), 3);

        // p = 2, q = (1) reduces to the plain minor M(X1 ∪ X2)/X2
        let u24 = Matroid::uniform(2, 4).unwrap();
        let via_partition = u24
            .partition_minor(&[mask(&[0, 1]), mask(&[2])], &[1])
            .unwrap();
        let via_minor = u24.minor(mask(&[0, 1]), mask(&[2])).unwrap();
        assert!(via_partition.matroid.oracle_eq(&via_minor.matroid));

        // X2 = ∅ leaves the restriction to X1
        let r = u24
            .partition_minor(&[mask(&[0, 1]), M::EMPTY], &[1])
            .unwrap();
        assert_eq!(r.size, 2);
        assert!(r.matroid.oracle_eq(&Matroid::uniform(2, 2).unwrap()));

        assert!(u24
            .partition_minor(&[mask(&[0, 1]), mask(&[1])], &[1])
            .is_err());
        assert!(u24
            .partition_minor(&[mask(&[0]), mask(&[1])], &[2])
            .is_err());
    }

    #[test]
    fn independents_of_size_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let pairs = u24.independents_of_size(2);
        assert_eq!(pairs.len(), 6);
        assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(u24.independents_of_size(0), vec![M::EMPTY]);

        let k3 = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.independents_of_size(2).len(), 3);
    }

    #[test]
    fn loop_in_uniform_rank0() {
        // every constructed matroid passes the axiom suite
        for m in [
            Matroid::uniform(0, 3).unwrap(),
            Matroid::graphic(2, &[(0, 0), (0, 1), (0, 1)]).unwrap(),
            Matroid::linear(3, &[vec![1, 2, 0], vec![0, 1, 0]]).unwrap(),
        ] {
            m.check_axioms().unwrap();
            m.dual().check_axioms().unwrap();
        }
    }
}
