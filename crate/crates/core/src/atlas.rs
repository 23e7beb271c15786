//! Exhaustive certification sweep over all small trees.
//!
//! The atlas enumerates one representative per isomorphism class up to a
//! size bound and, for every ordered pair and relation, cross-checks the
//! polynomial deciders against the structural ground truths that hold on
//! trees: mutual containment collapses to isomorphism, the three
//! relations form an implication chain, every positive answer carries a
//! checkable witness, the brute-force oracle agrees where it is feasible,
//! and minor models of branching vertices must spend a branching vertex
//! of the host.  The report aggregates counts and retains a bounded list
//! of concrete violations, so a clean run is a machine-checked certificate
//! for the sweep's size range.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::free_code;
use crate::constructions::enumerate::{enumerate_free_trees, DEFAULT_ENUM_CAP};
use crate::error::{Error, Result};
use crate::relations::decide::decide;
use crate::relations::model::{check_model, check_shape, MinorModel};
use crate::relations::ops::RelKind;
use crate::relations::oracle::{oracle_reachable, DEFAULT_ORACLE_CAP};
use crate::tree::Tree;

/// How far the sweep reaches and which relations it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlasConfig {
    /// Largest tree size enumerated.
    pub n_max: usize,
    /// Relations to certify.
    pub kinds: Vec<RelKind>,
    /// Largest host size on which the oracle is consulted.
    pub oracle_n_max: usize,
    /// Hard ceiling for the enumeration.
    pub enum_cap: usize,
    /// Hard ceiling for the oracle.
    pub oracle_cap: usize,
}

impl Default for AtlasConfig {
    fn default() -> Self {
        AtlasConfig {
            n_max: 6,
            kinds: RelKind::ALL.to_vec(),
            oracle_n_max: 6,
            enum_cap: DEFAULT_ENUM_CAP,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

/// Outcome counts for one check under one relation label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub relation: String,
    pub pairs: usize,
    pub violations: usize,
}

/// One concrete counterexample, identified by canonical codes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub check: String,
    pub relation: String,
    pub pattern: String,
    pub host: String,
    pub detail: String,
}

/// Mutual-containment class count for one relation and size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub relation: String,
    pub n: usize,
    pub classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasReport {
    pub n_max: usize,
    pub oracle_n_max: usize,
    pub relations: Vec<String>,
    /// Isomorphism classes enumerated per size.
    pub tree_counts: Vec<(usize, usize)>,
    /// Classes per size as derived from mutual containment alone.
    pub class_counts: Vec<ClassCount>,
    pub checks: Vec<CheckSummary>,
    /// At most [`MAX_RECORDED_VIOLATIONS`] records per check; the
    /// summaries carry the exact totals.
    pub violations: Vec<ViolationRecord>,
    /// Ordered pairs skipped because the pattern outsizes the host.
    pub pruned_pairs: usize,
    pub elapsed_ms: u128,
}

/// Cap on retained violation records per check name.
pub const MAX_RECORDED_VIOLATIONS: usize = 100;

impl AtlasReport {
    pub fn has_violations(&self) -> bool {
        self.checks.iter().any(|c| c.violations > 0)
    }

    /// A plain-text summary table, one line per check and relation.
    pub fn text_table(&self) -> String {
        let mut out = String::new();
        let trees: usize = self.tree_counts.iter().map(|&(_, c)| c).sum();
        out.push_str(&format!(
            "atlas sweep: sizes 1..={}, {} trees, oracle up to n={}\n",
            self.n_max, trees, self.oracle_n_max
        ));
        out.push_str(&format!(
            "{:<24} {:<14} {:>8} {:>10}\n",
            "check", "relation", "pairs", "violations"
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "{:<24} {:<14} {:>8} {:>10}\n",
                c.name, c.relation, c.pairs, c.violations
            ));
        }
        for relation in &self.relations {
            let per_size: Vec<String> = self
                .class_counts
                .iter()
                .filter(|c| c.relation == *relation)
                .map(|c| c.classes.to_string())
                .collect();
            out.push_str(&format!("mutual-{} classes by size: {}\n", relation, per_size.join(",")));
        }
        out.push_str(&format!("pruned oversized pairs: {}\n", self.pruned_pairs));
        out.push_str(&format!("elapsed: {} ms\n", self.elapsed_ms));
        out
    }
}

/// One check instance evaluated on one ordered pair.
struct Instance {
    check: &'static str,
    relation: String,
    failure: Option<String>,
}

/// Everything a worker learns about one ordered pair.
struct PairOutcome {
    i: usize,
    j: usize,
    instances: Vec<Instance>,
    /// Mutual containment per relation, for same-size pairs.
    mutual: Vec<(RelKind, bool)>,
}

/// Runs the sweep described by `config`.
pub fn run_atlas(config: &AtlasConfig) -> Result<AtlasReport> {
    if config.n_max == 0 {
        return Err(Error::NoVertices);
    }
    if config.oracle_n_max > config.oracle_cap {
        return Err(Error::BadParams(format!(
            "oracle ceiling {} exceeds its cap {}",
            config.oracle_n_max, config.oracle_cap
        )));
    }
    let started = Instant::now();
    let mut trees: Vec<Tree> = Vec::new();
    let mut tree_counts = Vec::new();
    for n in 1..=config.n_max {
        let level = enumerate_free_trees(n, config.enum_cap)?;
        tree_counts.push((n, level.len()));
        trees.extend(level);
    }
    let codes: Vec<String> = trees.iter().map(|t| free_code(t).as_str().to_string()).collect();

    let tasks: Vec<(usize, usize)> = (0..trees.len())
        .flat_map(|i| (0..trees.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| trees[i].n() <= trees[j].n())
        .collect();
    let pruned_pairs = trees.len() * trees.len() - tasks.len();

    let outcomes: Vec<PairOutcome> =
        tasks.par_iter().map(|&(i, j)| examine_pair(i, j, &trees, config)).collect();

    let mut summaries: BTreeMap<(String, String), (usize, usize)> = BTreeMap::new();
    let mut recorded: BTreeMap<String, usize> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut mutual_pairs: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    for out in &outcomes {
        for inst in &out.instances {
            let entry =
                summaries.entry((inst.check.to_string(), inst.relation.clone())).or_insert((0, 0));
            entry.0 += 1;
            if let Some(detail) = &inst.failure {
                entry.1 += 1;
                let seen = recorded.entry(inst.check.to_string()).or_insert(0);
                if *seen < MAX_RECORDED_VIOLATIONS {
                    *seen += 1;
                    violations.push(ViolationRecord {
                        check: inst.check.to_string(),
                        relation: inst.relation.clone(),
                        pattern: codes[out.i].clone(),
                        host: codes[out.j].clone(),
                        detail: detail.clone(),
                    });
                }
            }
        }
        for &(kind, both) in &out.mutual {
            if both {
                mutual_pairs.entry(kind.as_str().to_string()).or_default().push((out.i, out.j));
            }
        }
    }

    let class_counts = count_classes(&trees, &config.kinds, &mutual_pairs);
    let checks = summaries
        .into_iter()
        .map(|((name, relation), (pairs, violations))| CheckSummary {
            name,
            relation,
            pairs,
            violations,
        })
        .collect();

    Ok(AtlasReport {
        n_max: config.n_max,
        oracle_n_max: config.oracle_n_max,
        relations: config.kinds.iter().map(|k| k.as_str().to_string()).collect(),
        tree_counts,
        class_counts,
        checks,
        violations,
        pruned_pairs,
        elapsed_ms: started.elapsed().as_millis(),
    })
}

fn examine_pair(i: usize, j: usize, trees: &[Tree], config: &AtlasConfig) -> PairOutcome {
    let a = &trees[i];
    let b = &trees[j];
    let mut instances = Vec::new();
    let mut mutual = Vec::new();
    let mut forward: BTreeMap<RelKind, Option<MinorModel>> = BTreeMap::new();
    for &kind in &config.kinds {
        forward.insert(kind, decide(a, b, kind));
    }

    for &kind in &config.kinds {
        let result = &forward[&kind];
        if let Some(model) = result {
            let failure =
                check_model(model).err().map(|v| format!("model violation: {}", v)).or_else(|| {
                    check_shape(model, kind).err().map(|v| format!("shape violation: {}", v))
                });
            instances.push(Instance {
                check: "witness-soundness",
                relation: kind.as_str().to_string(),
                failure,
            });
        }

        if b.n() <= config.oracle_n_max {
            let by_search = oracle_reachable(a, b, kind, config.oracle_cap)
                .expect("oracle ceiling is validated against its cap");
            let by_decider = result.is_some();
            let failure = (by_search != by_decider).then(|| {
                format!("decider says {}, operation search says {}", by_decider, by_search)
            });
            instances.push(Instance {
                check: "oracle-agreement",
                relation: kind.as_str().to_string(),
                failure,
            });
        }

        if a.n() == b.n() {
            let back = decide(b, a, kind);
            let both = result.is_some() && back.is_some();
            let iso = free_code(a) == free_code(b);
            let failure = (both != iso)
                .then(|| format!("mutual containment {} but isomorphic {}", both, iso));
            instances.push(Instance {
                check: "mutual-vs-isomorphism",
                relation: kind.as_str().to_string(),
                failure,
            });
            mutual.push((kind, both));
        }

        if kind == RelKind::Minor {
            if let Some(model) = result {
                let host_branching = b.branch_vertices();
                let failure = a
                    .vertices()
                    .filter(|&v| a.degree(v) >= 3)
                    .find(|&v| model.branch_set(v).iter().all(|x| !host_branching.contains(x)))
                    .map(|v| {
                        format!(
                            "pattern vertex {} of degree {} uses no host branching vertex",
                            v,
                            a.degree(v)
                        )
                    });
                instances.push(Instance {
                    check: "minor-branching-cover",
                    relation: kind.as_str().to_string(),
                    failure,
                });
            }
        }
    }

    for (lo, hi) in [
        (RelKind::Embed, RelKind::TopoMinor),
        (RelKind::TopoMinor, RelKind::Minor),
        (RelKind::Embed, RelKind::Minor),
    ] {
        if !config.kinds.contains(&lo) || !config.kinds.contains(&hi) {
            continue;
        }
        let stronger = forward[&lo].is_some();
        let weaker = forward[&hi].is_some();
        let failure = (stronger && !weaker)
            .then(|| format!("{} holds but {} does not", lo.as_str(), hi.as_str()));
        instances.push(Instance {
            check: "implication-chain",
            relation: format!("{}=>{}", lo.as_str(), hi.as_str()),
            failure,
        });
    }

    PairOutcome { i, j, instances, mutual }
}

/// Union-find class counts per relation and size from the mutual pairs.
fn count_classes(
    trees: &[Tree],
    kinds: &[RelKind],
    mutual_pairs: &BTreeMap<String, Vec<(usize, usize)>>,
) -> Vec<ClassCount> {
    let mut out = Vec::new();
    for &kind in kinds {
        let mut parent: Vec<usize> = (0..trees.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        if let Some(pairs) = mutual_pairs.get(kind.as_str()) {
            for &(i, j) in pairs {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
        let mut per_size: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, t) in trees.iter().enumerate() {
            if find(&mut parent, i) == i {
                *per_size.entry(t.n()).or_insert(0) += 1;
            }
        }
        for (n, classes) in per_size {
            out.push(ClassCount { relation: kind.as_str().to_string(), n, classes });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_small_sweep_is_clean_and_counts_classes_like_isomorphism() {
        let config = AtlasConfig { n_max: 5, oracle_n_max: 5, ..AtlasConfig::default() };
        let report = run_atlas(&config).unwrap();
        assert!(!report.has_violations(), "{:?}", report.violations);
        assert_eq!(report.tree_counts, vec![(1, 1), (2, 1), (3, 1), (4, 2), (5, 3)]);
        for cc in &report.class_counts {
            let (_, expected) = report.tree_counts[cc.n - 1];
            assert_eq!(cc.classes, expected, "{} at n={}", cc.relation, cc.n);
        }
        let table = report.text_table();
        assert!(table.contains("mutual-vs-isomorphism"));
        assert!(table.contains("oracle-agreement"));
    }

    #[test]
    fn reports_are_deterministic_up_to_timing() {
        let config = AtlasConfig { n_max: 4, oracle_n_max: 4, ..AtlasConfig::default() };
        let mut first = run_atlas(&config).unwrap();
        let mut second = run_atlas(&config).unwrap();
        first.elapsed_ms = 0;
        second.elapsed_ms = 0;
        assert_eq!(first, second);
    }

    #[test]
    fn the_oracle_ceiling_must_respect_its_cap() {
        let config = AtlasConfig { oracle_n_max: 9, oracle_cap: 8, ..AtlasConfig::default() };
        assert!(matches!(run_atlas(&config), Err(Error::BadParams(_))));
    }

    #[test]
    fn relations_can_be_restricted() {
        let config = AtlasConfig {
            n_max: 4,
            oracle_n_max: 4,
            kinds: vec![RelKind::Minor],
            ..AtlasConfig::default()
        };
        let report = run_atlas(&config).unwrap();
        assert!(!report.has_violations());
        assert!(report.checks.iter().all(|c| !c.relation.contains("=>")));
        assert_eq!(report.relations, vec!["minor"]);
    }
}
