//! Sweep driver: matroid spec files, deterministic matroid families,
//! check dispatch, and machine-readable reports.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checks::{
    self, ChecksError, CheckVerdict, InequalityCheck,
};
use crate::lorentzian::is_lorentzian;
use crate::mask::SubsetMask;
use crate::matroid::{Matroid, MatroidError};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config error: {0}")]
    Config(String),
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("spec parse error{}: {message}", path.as_ref().map(|p| format!(" in {}", p.display())).unwrap_or_default())]
    Parse {
        path: Option<PathBuf>,
        message: String,
    },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Checks(#[from] ChecksError),
}

/// A matroid description document. The on-disk format is JSON with a `kind`
/// tag; see the repository README for the schema and examples.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidSpec {
    /// `{"kind": "uniform", "r": 2, "n": 4}`
    Uniform { r: usize, n: usize },
    /// `{"kind": "graphic", "vertices": 3, "edges": [[0,1],[1,2],[0,2]]}`
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    /// `{"kind": "linear", "p": 2, "matrix": [[1,0,1],[0,1,1]]}` (matrix rows)
    Linear { p: u64, matrix: Vec<Vec<u64>> },
    /// `{"kind": "explicit", "n": 2, "independents": [[],[0],[1]]}`
    Explicit {
        n: usize,
        independents: Vec<Vec<usize>>,
        #[serde(default = "default_true")]
        validate: bool,
    },
}

fn default_true() -> bool {
    true
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid, MatroidError> {
        match self {
            MatroidSpec::Uniform { r, n } => Matroid::uniform(*r, *n),
            MatroidSpec::Graphic { vertices, edges } => Matroid::graphic(*vertices, edges),
            MatroidSpec::Linear { p, matrix } => Matroid::linear(*p, matrix),
            MatroidSpec::Explicit {
                n,
                independents,
                validate,
            } => {
                let sets = independents
                    .iter()
                    .map(|s| SubsetMask::from_elements(s.iter().copied()));
                Matroid::explicit(*n, sets, *validate)
            }
        }
    }
}

/// Parse a matroid spec document and construct the matroid. Explicit kinds
/// are validated against the independence axioms unless the document opts
/// out.
pub fn parse_matroid_spec(text: &str) -> Result<Matroid, HarnessError> {
    let spec: MatroidSpec =
        serde_json::from_str(text).map_err(|e| HarnessError::Parse {
            path: None,
            message: e.to_string(),
        })?;
    Ok(spec.build()?)
}

/// The checks a run can execute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Dowling,
    Zhao,
    Ultra,
    Strong,
    Gaojie,
    Highd,
    Lorentzian,
    Prop1,
    OracleEquiv,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::Dowling,
        CheckKind::Zhao,
        CheckKind::Ultra,
        CheckKind::Strong,
        CheckKind::Gaojie,
        CheckKind::Highd,
        CheckKind::Lorentzian,
        CheckKind::Prop1,
        CheckKind::OracleEquiv,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            CheckKind::Dowling => "dowling",
            CheckKind::Zhao => "zhao",
            CheckKind::Ultra => "ultra",
            CheckKind::Strong => "strong",
            CheckKind::Gaojie => "gaojie",
            CheckKind::Highd => "highd",
            CheckKind::Lorentzian => "lorentzian",
            CheckKind::Prop1 => "prop1",
            CheckKind::OracleEquiv => "oracle-equiv",
        }
    }

    /// Violations of this check are expected on some matroids and are
    /// reported as findings, not failures.
    pub fn violation_expected(&self) -> bool {
        matches!(self, CheckKind::Ultra)
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dowling" => Ok(CheckKind::Dowling),
            "zhao" => Ok(CheckKind::Zhao),
            "ultra" | "zhao-ultra-counterexample" => Ok(CheckKind::Ultra),
            "strong" => Ok(CheckKind::Strong),
            "gaojie" => Ok(CheckKind::Gaojie),
            "highd" => Ok(CheckKind::Highd),
            "lorentzian" => Ok(CheckKind::Lorentzian),
            "prop1" => Ok(CheckKind::Prop1),
            "oracle-equiv" => Ok(CheckKind::OracleEquiv),
            other => Err(format!(
                "unknown check '{other}' (expected one of: dowling, zhao, ultra, strong, gaojie, highd, lorentzian, prop1, oracle-equiv)"
            )),
        }
    }
}

/// Configuration of a verification run. Defaults match the CLI defaults.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub checks: BTreeSet<CheckKind>,
    /// Generate the built-in families (uniform, graphic, linear). Off when
    /// checking a single spec file.
    pub generated_families: bool,
    /// Uniform-family size cap (the hard limit is 24).
    pub n_max: usize,
    /// Block counts for the multi-block checks.
    pub p_values: Vec<usize>,
    pub seed: u64,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
    /// Number of seeded random GF(2) matroids in the family.
    pub linear_count: usize,
    pub linear_n_max: usize,
    /// Simple graphs on up to this many vertices.
    pub graph_vertex_bound: usize,
    /// Multigraphs on 3 vertices with up to this many edges.
    pub multigraph_edge_bound: usize,
    /// Cap on (X, Y) pairs per minor sweep; hitting it records a truncation.
    pub minor_pair_bound: usize,
    /// Size caps for the expensive sweeps; larger matroids are skipped.
    pub lorentzian_n_cap: usize,
    pub oracle_equiv_s_cap: usize,
    pub oracle_equiv_h_cap: usize,
    /// Include wall-clock timings in records. Off by default so reports are
    /// byte-identical across runs.
    pub include_timings: bool,
    /// Extra matroids from spec files.
    pub spec_files: Vec<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            checks: [CheckKind::Dowling, CheckKind::Zhao, CheckKind::Strong]
                .into_iter()
                .collect(),
            generated_families: true,
            n_max: 6,
            p_values: vec![3],
            seed: 0,
            jobs: 1,
            linear_count: 50,
            linear_n_max: 7,
            graph_vertex_bound: 5,
            multigraph_edge_bound: 4,
            minor_pair_bound: 20_000,
            lorentzian_n_cap: 6,
            oracle_equiv_s_cap: 7,
            oracle_equiv_h_cap: 6,
            include_timings: false,
            spec_files: Vec::new(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.n_max > crate::mask::MAX_GROUND_SIZE {
            return Err(HarnessError::Config(format!(
                "n_max {} exceeds the hard cap {}",
                self.n_max,
                crate::mask::MAX_GROUND_SIZE
            )));
        }
        if self.p_values.iter().any(|&p| p < 2) {
            return Err(HarnessError::Config("p values must be >= 2".into()));
        }
        Ok(())
    }
}

/// A named member of the sweep family.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub name: String,
    pub matroid: Matroid,
}

/// The deterministic matroid family for a config: uniform matroids up to
/// `n_max`, simple graphs up to the vertex bound (canonical-form dedupe),
/// small multigraphs with loops or parallel edges, seeded random GF(2)
/// matroids, and any spec files.
pub fn sweep_families(config: &RunConfig) -> Result<Vec<FamilyMember>, HarnessError> {
    let mut family = Vec::new();
    if !config.generated_families {
        return collect_spec_files(config, family);
    }
    for n in 0..=config.n_max {
        for r in 0..=n {
            let m = Matroid::uniform(r, n).expect("r <= n <= cap");
            family.push(FamilyMember {
                name: m.name().to_string(),
                matroid: m,
            });
        }
    }
    for edges in simple_graphs(config.graph_vertex_bound) {
        let m = Matroid::graphic(config.graph_vertex_bound, &edges)?;
        family.push(FamilyMember {
            name: m.name().to_string(),
            matroid: m,
        });
    }
    for edges in small_multigraphs(config.multigraph_edge_bound) {
        let m = Matroid::graphic(3, &edges)?;
        family.push(FamilyMember {
            name: m.name().to_string(),
            matroid: m,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for i in 0..config.linear_count {
        let n = rng.gen_range(1..=config.linear_n_max.max(1));
        let rows = rng.gen_range(1..=n.min(5));
        let matrix: Vec<Vec<u64>> = (0..rows)
            .map(|_| (0..n).map(|_| u64::from(rng.gen_bool(0.5))).collect())
            .collect();
        let m = Matroid::linear(2, &matrix)?;
        family.push(FamilyMember {
            name: format!("seeded[{i}]:{}", m.name()),
            matroid: m,
        });
    }
    collect_spec_files(config, family)
}

fn collect_spec_files(
    config: &RunConfig,
    mut family: Vec<FamilyMember>,
) -> Result<Vec<FamilyMember>, HarnessError> {
    for path in &config.spec_files {
        let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
            path: path.clone(),
            source,
        })?;
        let matroid = parse_matroid_spec(&text).map_err(|e| match e {
            HarnessError::Parse { message, .. } => HarnessError::Parse {
                path: Some(path.clone()),
                message,
            },
            other => other,
        })?;
        family.push(FamilyMember {
            name: format!("{}:{}", path.display(), matroid.name()),
            matroid,
        });
    }
    Ok(family)
}

/// All nonempty simple graphs on `vertices` labeled vertices, one canonical
/// representative per isomorphism class, in a deterministic order.
fn simple_graphs(vertices: usize) -> Vec<Vec<(usize, usize)>> {
    let mut slots = Vec::new();
    for u in 0..vertices {
        for v in (u + 1)..vertices {
            slots.push((u, v));
        }
    }
    let perms = permutations(vertices);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 1u64..(1u64 << slots.len()) {
        let edges: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let canon = canonical_edge_list(&edges, &perms);
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    }
    out.sort_by_key(|edges| (edges.len(), edges.clone()));
    out
}

/// All multigraphs on 3 vertices with 1..=bound edges (loops and parallel
/// edges allowed) that are not simple graphs, one canonical representative
/// per isomorphism class.
fn small_multigraphs(bound: usize) -> Vec<Vec<(usize, usize)>> {
    let slots: Vec<(usize, usize)> = vec![(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let perms = permutations(3);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut multiplicity = vec![0usize; slots.len()];
    loop {
        let total: usize = multiplicity.iter().sum();
        if total >= 1 && total <= bound {
            let mut edges = Vec::new();
            for (i, &m) in multiplicity.iter().enumerate() {
                for _ in 0..m {
                    edges.push(slots[i]);
                }
            }
            let has_loop = edges.iter().any(|&(u, v)| u == v);
            let mut sorted = edges.clone();
            sorted.sort_unstable();
            let has_parallel = sorted.windows(2).any(|w| w[0] == w[1]);
            if has_loop || has_parallel {
                let canon = canonical_edge_list(&edges, &perms);
                if seen.insert(canon.clone()) {
                    out.push(canon);
                }
            }
        }
        // next multiplicity vector, odometer style
        let mut i = 0;
        loop {
            if i == multiplicity.len() {
                out.sort_by_key(|edges| (edges.len(), edges.clone()));
                return out;
            }
            multiplicity[i] += 1;
            if multiplicity.iter().sum::<usize>() <= bound {
                break;
            }
            multiplicity[i] = 0;
            i += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut out);
    out.sort();
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Minimum edge list over all vertex relabelings: a brute-force canonical
/// form, fine at this scale.
fn canonical_edge_list(
    edges: &[(usize, usize)],
    perms: &[Vec<usize>],
) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|perm| {
            let mut relabeled: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u], perm[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            relabeled.sort_unstable();
            relabeled
        })
        .min()
        .expect("at least the identity permutation")
}

/// One executed check instance.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub matroid: String,
    pub n: usize,
    pub kind: String,
    #[serde(flatten)]
    pub check: InequalityCheck,
    /// Violations of this record's check are expected findings (the
    /// ultra-log-concavity probe), not errors.
    pub expected_violation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub skipped: usize,
    pub tight: usize,
    pub expected_violations: usize,
    /// Failures that would falsify a verified inequality; must stay zero.
    pub violations: usize,
}

/// A full run: tool identification, the config echo, per-check records in
/// deterministic order, and the summary.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: RunConfig,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("matroid,n,check,verdict,tight,note\n");
        for r in &self.records {
            let verdict = serde_json::to_value(r.check.verdict)
                .expect("verdict serializes")
                .as_str()
                .unwrap_or("?")
                .to_string();
            s.push_str(&format!(
                "\"{}\",{},{},{},{},\"{}\"\n",
                r.matroid,
                r.n,
                r.check.name,
                verdict,
                r.check.tight,
                r.check.note.clone().unwrap_or_default()
            ));
        }
        s
    }

    /// Exit status: 0 when all expectations are met, 1 when a verified
    /// inequality was violated.
    pub fn exit_code(&self) -> i32 {
        if self.summary.violations > 0 {
            1
        } else {
            0
        }
    }
}

/// Execute the configured checks over the config's family, collecting
/// records in family × check order regardless of the worker count.
pub fn run(config: &RunConfig) -> Result<Report, HarnessError> {
    config.validate()?;
    let family = sweep_families(config)?;
    run_with_family(config, &family)
}

/// Execute the configured checks over an explicit family.
pub fn run_with_family(
    config: &RunConfig,
    family: &[FamilyMember],
) -> Result<Report, HarnessError> {
    config.validate()?;
    let tasks: Vec<(&FamilyMember, CheckKind)> = family
        .iter()
        .flat_map(|member| config.checks.iter().map(move |&kind| (member, kind)))
        .collect();
    let record_batches: Vec<Vec<CheckRecord>> = if config.jobs == 1 {
        tasks
            .iter()
            .map(|(member, kind)| run_check(member, *kind, config))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| HarnessError::Config(e.to_string()))?;
        pool.install(|| {
            use rayon::prelude::*;
            tasks
                .par_iter()
                .map(|(member, kind)| run_check(member, *kind, config))
                .collect()
        })
    };
    let records: Vec<CheckRecord> = record_batches.into_iter().flatten().collect();
    let mut summary = Summary::default();
    for r in &records {
        summary.total += 1;
        match r.check.verdict {
            CheckVerdict::Pass => summary.passed += 1,
            CheckVerdict::Fail => {
                summary.failed += 1;
                if r.expected_violation {
                    summary.expected_violations += 1;
                } else {
                    summary.violations += 1;
                }
            }
            CheckVerdict::NotApplicable => summary.not_applicable += 1,
            CheckVerdict::Skipped => summary.skipped += 1,
        }
        if r.check.tight {
            summary.tight += 1;
        }
    }
    Ok(Report {
        tool: "matroid-verify".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        config: config.clone(),
        records,
        summary,
    })
}

fn run_check(member: &FamilyMember, kind: CheckKind, config: &RunConfig) -> Vec<CheckRecord> {
    let start = Instant::now();
    let m = &member.matroid;
    let checks: Vec<InequalityCheck> = match kind {
        CheckKind::Dowling => checks::verify_dowling(m),
        CheckKind::Zhao => checks::verify_zhao(m),
        CheckKind::Ultra => checks::verify_ultra(m),
        CheckKind::Strong => vec![checks::verify_strong_partition(m)],
        CheckKind::Gaojie => config
            .p_values
            .iter()
            .map(|&p| checks::verify_gaojie(m, p))
            .collect(),
        CheckKind::Highd => {
            let r = m.rank_full();
            let mut out = Vec::new();
            for &p in &config.p_values {
                for l in p..r {
                    out.push(checks::verify_highd(m, p, l));
                }
            }
            out
        }
        CheckKind::Lorentzian => lorentzian_records(m, config),
        CheckKind::Prop1 => {
            let mut out = Vec::new();
            let r = m.rank_full();
            for l in 1..r {
                let sweep = checks::verify_prop1_minors(
                    m,
                    l,
                    config.minor_pair_bound,
                    checks::YEnumeration::IndependentOnly,
                );
                out.extend(sweep.checks);
                if sweep.truncated {
                    out.push(InequalityCheck::skipped(
                        "prop1-truncated",
                        [("l".to_string(), l.to_string())].into_iter().collect(),
                        &format!(
                            "pair budget {} exhausted after {} pairs",
                            config.minor_pair_bound, sweep.pairs_examined
                        ),
                    ));
                }
            }
            out
        }
        CheckKind::OracleEquiv => {
            let mut out = Vec::new();
            if m.n() <= config.oracle_equiv_s_cap {
                out.push(checks::check_collapse_s_matches_pi(m));
            } else {
                out.push(InequalityCheck::skipped(
                    "oracle-equiv-s",
                    Default::default(),
                    "ground set above the oracle-equivalence cap",
                ));
            }
            for &p in &config.p_values {
                if m.n() <= config.oracle_equiv_h_cap {
                    match checks::check_collapse_h_matches_pi(m, p) {
                        Ok(check) => out.push(check),
                        Err(e) => out.push(InequalityCheck::skipped(
                            "oracle-equiv-h",
                            [("p".to_string(), p.to_string())].into_iter().collect(),
                            &e.to_string(),
                        )),
                    }
                } else {
                    out.push(InequalityCheck::skipped(
                        "oracle-equiv-h",
                        [("p".to_string(), p.to_string())].into_iter().collect(),
                        "ground set above the oracle-equivalence cap",
                    ));
                }
            }
            out
        }
    };
    let wall_ms = config
        .include_timings
        .then(|| start.elapsed().as_millis() as u64);
    checks
        .into_iter()
        .map(|check| CheckRecord {
            matroid: member.name.clone(),
            n: member.matroid.n(),
            kind: kind.token().to_string(),
            check,
            expected_violation: kind.violation_expected(),
            wall_ms,
        })
        .collect()
}

fn lorentzian_records(m: &Matroid, config: &RunConfig) -> Vec<InequalityCheck> {
    if m.n() > config.lorentzian_n_cap {
        return vec![InequalityCheck::skipped(
            "lorentzian-g",
            Default::default(),
            "ground set above the Lorentzian sweep cap",
        )];
    }
    let g = checks::g_polynomial(m);
    let verdict = is_lorentzian(&g);
    let mut check = InequalityCheck::skipped("lorentzian-g", Default::default(), "");
    check.note = None;
    if verdict.is_lorentzian {
        check.verdict = CheckVerdict::Pass;
    } else {
        check.verdict = CheckVerdict::Fail;
        check.note = verdict.failure.map(|f| f.to_string());
    }
    vec![check]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing_examples() {
        let m = parse_matroid_spec(r#"{"kind": "uniform", "r": 2, "n": 4}"#).unwrap();
        assert_eq!(m.name(), "U(2,4)");

        let m = parse_matroid_spec(r#"{"kind": "explicit", "n": 2, "independents": [[],[0],[1]]}"#)
            .unwrap();
        assert!(m.oracle_eq(&Matroid::uniform(1, 2).unwrap()));

        let m = parse_matroid_spec(
            r#"{"kind": "graphic", "vertices": 3, "edges": [[0,1],[1,2],[0,2]]}"#,
        )
        .unwrap();
        assert_eq!(m.rank_full(), 2);
        m.check_axioms().unwrap();

        // axiom violations surface as matroid errors
        let err =
            parse_matroid_spec(r#"{"kind": "explicit", "n": 2, "independents": [[],[0,1]]}"#)
                .unwrap_err();
        assert!(matches!(err, HarnessError::Matroid(_)));

        // schema violations carry the parser message
        let err = parse_matroid_spec(r#"{"kind": "uniform", "rank": 2, "n": 4}"#).unwrap_err();
        assert!(matches!(err, HarnessError::Parse { .. }));
    }

    #[test]
    fn uniform_family_count() {
        let config = RunConfig {
            n_max: 4,
            linear_count: 0,
            graph_vertex_bound: 0,
            multigraph_edge_bound: 0,
            ..RunConfig::default()
        };
        let family = sweep_families(&config).unwrap();
        assert_eq!(family.len(), 15, "sum of n+1 for n <= 4");
    }

    #[test]
    fn family_is_deterministic() {
        let config = RunConfig {
            n_max: 3,
            ..RunConfig::default()
        };
        let a = sweep_families(&config).unwrap();
        let b = sweep_families(&config).unwrap();
        assert_eq!(
            a.iter().map(|f| &f.name).collect::<Vec<_>>(),
            b.iter().map(|f| &f.name).collect::<Vec<_>>()
        );
    }

    #[test]
    fn multigraph_family_contains_parallel_pair() {
        let graphs = small_multigraphs(4);
        assert!(graphs.iter().any(|g| g == &vec![(0, 1), (0, 1)]));
        // no simple graphs sneak in
        for g in &graphs {
            let mut sorted = g.clone();
            sorted.sort_unstable();
            let has_loop = sorted.iter().any(|&(u, v)| u == v);
            let has_parallel = sorted.windows(2).any(|w| w[0] == w[1]);
            assert!(has_loop || has_parallel, "{g:?}");
        }
    }

    #[test]
    fn simple_graph_family_is_deduped() {
        // connected and disconnected patterns on 5 vertices: 33 nonempty classes
        let graphs = simple_graphs(5);
        assert_eq!(graphs.len(), 33);
        // the triangle appears exactly once
        let triangles = graphs
            .iter()
            .filter(|g| g.len() == 3 && g.iter().all(|&(u, v)| u < 3 && v < 3))
            .count();
        assert_eq!(triangles, 1);
    }

    #[test]
    fn empty_check_set_gives_empty_report() {
        let config = RunConfig {
            checks: BTreeSet::new(),
            n_max: 2,
            linear_count: 0,
            graph_vertex_bound: 0,
            multigraph_edge_bound: 0,
            ..RunConfig::default()
        };
        let report = run(&config).unwrap();
        assert_eq!(report.summary.total, 0);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn zhao_sweep_on_small_uniforms_passes() {
        let config = RunConfig {
            checks: [CheckKind::Zhao].into_iter().collect(),
            n_max: 5,
            linear_count: 2,
            graph_vertex_bound: 3,
            multigraph_edge_bound: 3,
            ..RunConfig::default()
        };
        let report = run(&config).unwrap();
        assert_eq!(report.summary.violations, 0);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn ultra_violation_is_expected_not_fatal() {
        let config = RunConfig {
            checks: [CheckKind::Ultra].into_iter().collect(),
            n_max: 4,
            linear_count: 0,
            graph_vertex_bound: 0,
            multigraph_edge_bound: 0,
            ..RunConfig::default()
        };
        let report = run(&config).unwrap();
        assert!(report.summary.expected_violations > 0, "U(2,4) violates ultra");
        assert_eq!(report.summary.violations, 0);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn reports_are_byte_identical_across_jobs() {
        let config = RunConfig {
            checks: [CheckKind::Dowling, CheckKind::Strong].into_iter().collect(),
            n_max: 4,
            linear_count: 3,
            graph_vertex_bound: 3,
            multigraph_edge_bound: 2,
            jobs: 1,
            ..RunConfig::default()
        };
        let a = run(&config).unwrap().to_json();
        let parallel = RunConfig { jobs: 4, ..config };
        let b = run(&parallel).unwrap().to_json();
        // jobs is echoed in the config block; strip it before comparing
        let scrub = |s: &str| {
            s.lines()
                .filter(|l| !l.contains("\"jobs\""))
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(scrub(&a), scrub(&b));
    }
}
