//! Runs every regularity and Betti-number check over a list of small graphs
//! and collects the verdicts into a deterministic report.

mod checks;
mod report;

use std::fmt;
use std::str::FromStr;

use bei_algebra::{BettiTable, DEFAULT_PRIME};
use bei_graph::{
    canonical_form, clique_count, connected_components, enumerate_graphs, is_block_graph,
    is_chordal, is_closed, is_generalized_block_graph, longest_induced_path_length, to_graph6,
    Graph, DEFAULT_CLOSED_LIMIT, DEFAULT_PATH_LIMIT, MAX_CANONICAL_N,
};
use serde::Serialize;

pub use checks::{check_names, CHECKS};
pub use report::{render, Format};

use crate::evidence::IdealComparison;
use crate::invariants::Engine;
use crate::primes::{cut_sets, dim_formula};
use crate::CoreError;

/// Version tag written into every JSON report.
pub const SCHEMA: &str = "bei-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    All,
    ConjA,
    ConjB,
    Colon,
    Join,
    Reduced,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::All,
        Suite::ConjA,
        Suite::ConjB,
        Suite::Colon,
        Suite::Join,
        Suite::Reduced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::ConjA => "conjA",
            Suite::ConjB => "conjB",
            Suite::Colon => "colon",
            Suite::Join => "join",
            Suite::Reduced => "reduced",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!(
                    "unknown suite {s:?}; expected one of all, conjA, conjB, colon, join, reduced"
                )
            })
    }
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusConfig {
    pub characteristic: u32,
    /// When set, Betti tables are recomputed in this characteristic and compared.
    pub second_characteristic: Option<u32>,
    pub suite: Suite,
    /// Checks that compute ideal intersections, quotients or dimensions only
    /// run up to this many vertices.
    pub ideal_n_max: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            characteristic: DEFAULT_PRIME,
            second_characteristic: None,
            suite: Suite::All,
            ideal_n_max: 5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    ResourceError,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::ResourceError => "resource_error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    /// Both sides of every comparison that failed.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub evidence: Vec<IdealComparison>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub connected: bool,
    pub chordal: bool,
    pub closed: Option<bool>,
    pub block: bool,
    pub generalized_block: bool,
    pub forest: bool,
    pub path: bool,
    pub cycle: bool,
    pub complete: bool,
    /// Part sizes when complete multipartite.
    pub multipartite: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub cliques: usize,
    pub longest_induced_path: Option<usize>,
    pub cut_sets: Option<usize>,
    /// Betti numbers of `S/J_G`.
    pub betti: BettiTable,
    pub reg_quotient: i64,
    pub reg_ideal: i64,
    pub pd_quotient: usize,
    pub dim: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalLabel {
    pub n: u8,
    pub bits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub id: usize,
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub canonical: Option<CanonicalLabel>,
    pub characteristic: u32,
    pub flags: Flags,
    pub invariants: Option<Invariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants_error: Option<String>,
    pub checks: Vec<CheckResult>,
}

impl GraphReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub resource_error: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub schema: &'static str,
    pub config: CensusConfig,
    pub summary: Summary,
    pub reports: Vec<GraphReport>,
}

impl CensusReport {
    /// `0` when nothing failed, `1` when a check failed, `2` when nothing
    /// failed but some check ran out of resources.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.resource_error > 0 {
            2
        } else {
            0
        }
    }

    /// All results of one check across the census.
    pub fn results<'a>(
        &'a self,
        name: &'a str,
    ) -> impl Iterator<Item = (&'a GraphReport, &'a CheckResult)> + 'a {
        self.reports
            .iter()
            .filter_map(move |r| r.check(name).map(|c| (r, c)))
    }
}

/// Every isomorphism class on `1..=n_max` vertices, by order and then canonical form.
pub fn enumerate_up_to(n_max: usize) -> Result<Vec<Graph>, CoreError> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_graphs(n)?);
    }
    Ok(out)
}

/// Holds the Betti-table memo, so successive runs share work.
pub struct Census {
    config: CensusConfig,
    engine: Engine,
    second: Option<Engine>,
}

impl Census {
    pub fn new(config: CensusConfig) -> Result<Census, CoreError> {
        let engine = Engine::new(config.characteristic)?;
        let second = config.second_characteristic.map(Engine::new).transpose()?;
        Ok(Census {
            config,
            engine,
            second,
        })
    }

    pub fn config(&self) -> &CensusConfig {
        &self.config
    }

    pub fn engine(&mut self) -> &mut Engine {
        &mut self.engine
    }

    pub fn run(&mut self, graphs: &[Graph]) -> CensusReport {
        let reports: Vec<GraphReport> = graphs
            .iter()
            .enumerate()
            .map(|(id, g)| self.check_graph(id, g))
            .collect();
        let mut summary = Summary {
            graphs: reports.len(),
            ..Summary::default()
        };
        for c in reports.iter().flat_map(|r| &r.checks) {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
                Status::ResourceError => summary.resource_error += 1,
            }
        }
        CensusReport {
            schema: SCHEMA,
            config: self.config.clone(),
            summary,
            reports,
        }
    }

    pub fn check_graph(&mut self, id: usize, g: &Graph) -> GraphReport {
        let flags = flags(g);
        let (invariants, invariants_error) = match self.invariants(g) {
            Ok(i) => (Some(i), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let mut subject = checks::Subject::new(g, &self.config);
        let mut results = Vec::new();
        let suite = self.config.suite;
        for spec in CHECKS
            .iter()
            .filter(|c| suite == Suite::All || c.suites.contains(&suite))
        {
            results.push(checks::run_check(spec, self, &mut subject));
        }
        GraphReport {
            id,
            graph6: to_graph6(g),
            n: g.n(),
            edges: g.edges(),
            canonical: (g.n() <= MAX_CANONICAL_N)
                .then(|| canonical_form(g).ok())
                .flatten()
                .map(|(f, _)| CanonicalLabel {
                    n: f.n,
                    bits: f.bits,
                }),
            characteristic: self.config.characteristic,
            flags,
            invariants,
            invariants_error,
            checks: results,
        }
    }

    fn invariants(&mut self, g: &Graph) -> Result<Invariants, CoreError> {
        let betti = self.engine.betti(g)?;
        Ok(Invariants {
            cliques: clique_count(g),
            longest_induced_path: longest_induced_path_length(g, DEFAULT_PATH_LIMIT).ok(),
            cut_sets: cut_sets(g).ok().map(|c| c.len()),
            reg_quotient: betti.reg_quotient().expect("J_G is proper"),
            reg_ideal: betti.reg_ideal().expect("J_G is proper"),
            pd_quotient: betti.pd_quotient().expect("J_G is proper"),
            dim: dim_formula(g).ok(),
            betti,
        })
    }
}

fn flags(g: &Graph) -> Flags {
    Flags {
        connected: connected_components(g).len() == 1,
        chordal: is_chordal(g),
        closed: is_closed(g, DEFAULT_CLOSED_LIMIT).ok(),
        block: is_block_graph(g),
        generalized_block: is_generalized_block_graph(g),
        forest: g.is_forest(),
        path: g.is_path(),
        cycle: g.is_cycle(),
        complete: g.is_complete(),
        multipartite: g.multipartite_parts(),
    }
}

/// Runs the configured suite over `graphs` with a fresh memo.
pub fn run_census(graphs: &[Graph], config: CensusConfig) -> Result<CensusReport, CoreError> {
    Ok(Census::new(config)?.run(graphs))
}
