//! Branch-set models: the witness objects behind all three relations.
//!
//! A model assigns every pattern vertex a branch set of host vertices.  The
//! semantic conditions (`check_model`) are the same for all relations:
//! nonempty, in-range, connected, pairwise disjoint sets, one host edge
//! witnessing each pattern edge, and — in the rooted case — the branch-set
//! minima reproducing the pattern's ancestor order exactly.  What varies by
//! relation is the extra shape (`check_shape`): embeddings use singleton
//! sets, and topological minors use sets that chain into a subdivision.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relations::ops::RelKind;
use crate::tree::{RootedTree, Tree, TreeRecord};

/// A branch-set assignment from a pattern tree into a host tree, optionally
/// respecting roots.  Construction checks only arity; semantic validity is
/// the job of [`check_model`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    pattern: Tree,
    host: Tree,
    pattern_root: Option<usize>,
    host_root: Option<usize>,
    branch_sets: Vec<BTreeSet<usize>>,
}

impl MinorModel {
    pub fn unrooted(pattern: Tree, host: Tree, branch_sets: Vec<BTreeSet<usize>>) -> Self {
        assert_eq!(branch_sets.len(), pattern.n(), "one branch set per pattern vertex");
        MinorModel { pattern, host, pattern_root: None, host_root: None, branch_sets }
    }

    pub fn rooted(
        pattern: &RootedTree,
        host: &RootedTree,
        branch_sets: Vec<BTreeSet<usize>>,
    ) -> Self {
        assert_eq!(branch_sets.len(), pattern.n(), "one branch set per pattern vertex");
        MinorModel {
            pattern: pattern.tree().clone(),
            host: host.tree().clone(),
            pattern_root: Some(pattern.root()),
            host_root: Some(host.root()),
            branch_sets,
        }
    }

    /// The identity model of a tree onto itself.
    pub fn identity(t: &Tree) -> Self {
        let sets = t.vertices().map(|v| BTreeSet::from([v])).collect();
        MinorModel::unrooted(t.clone(), t.clone(), sets)
    }

    pub fn identity_rooted(rt: &RootedTree) -> Self {
        let sets = (0..rt.n()).map(|v| BTreeSet::from([v])).collect();
        MinorModel::rooted(rt, rt, sets)
    }

    pub fn pattern(&self) -> &Tree {
        &self.pattern
    }

    pub fn host(&self) -> &Tree {
        &self.host
    }

    pub fn pattern_root(&self) -> Option<usize> {
        self.pattern_root
    }

    pub fn host_root(&self) -> Option<usize> {
        self.host_root
    }

    pub fn is_rooted(&self) -> bool {
        self.pattern_root.is_some()
    }

    pub fn branch_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.branch_sets[v]
    }

    pub fn branch_sets(&self) -> &[BTreeSet<usize>] {
        &self.branch_sets
    }

    /// The same assignment with the root requirement dropped.
    pub fn drop_roots(&self) -> MinorModel {
        MinorModel {
            pattern: self.pattern.clone(),
            host: self.host.clone(),
            pattern_root: None,
            host_root: None,
            branch_sets: self.branch_sets.clone(),
        }
    }
}

/// The first condition a model violates, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelViolation {
    EmptyBranchSet { vertex: usize },
    HostVertexOutOfRange { vertex: usize, host_vertex: usize },
    DisconnectedBranchSet { vertex: usize },
    OverlappingBranchSets { v: usize, w: usize, shared: usize },
    MissingEdge { v: usize, w: usize },
    ManyAttachments { v: usize, w: usize },
    RootOrder { v: usize, w: usize, pattern_le: bool, host_le: bool },
    NotSingleton { vertex: usize },
    NotAPath { vertex: usize },
    NoSubdivisionCenter { vertex: usize },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ModelViolation::*;
        match *self {
            EmptyBranchSet { vertex } => write!(f, "branch set of {} is empty", vertex),
            HostVertexOutOfRange { vertex, host_vertex } => {
                write!(f, "branch set of {} names missing host vertex {}", vertex, host_vertex)
            }
            DisconnectedBranchSet { vertex } => {
                write!(f, "branch set of {} is not connected in the host", vertex)
            }
            OverlappingBranchSets { v, w, shared } => {
                write!(f, "branch sets of {} and {} share host vertex {}", v, w, shared)
            }
            MissingEdge { v, w } => {
                write!(f, "no host edge joins the branch sets of {} and {}", v, w)
            }
            ManyAttachments { v, w } => {
                write!(f, "more than one host edge joins the branch sets of {} and {}", v, w)
            }
            RootOrder { v, w, pattern_le, host_le } => write!(
                f,
                "order broken at ({}, {}): pattern says {}, branch-set minima say {}",
                v, w, pattern_le, host_le
            ),
            NotSingleton { vertex } => {
                write!(f, "branch set of {} is not a singleton", vertex)
            }
            NotAPath { vertex } => {
                write!(f, "branch set of {} does not induce a path", vertex)
            }
            NoSubdivisionCenter { vertex } => write!(
                f,
                "branch set of {} cannot place a subdivision center among its attachments",
                vertex
            ),
        }
    }
}

/// Checks the shared semantic conditions, reporting the first violation in a
/// fixed scan order: per-set conditions, disjointness, edges, then order.
pub fn check_model(m: &MinorModel) -> std::result::Result<(), ModelViolation> {
    let host = m.host();
    for (v, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return Err(ModelViolation::EmptyBranchSet { vertex: v });
        }
        if let Some(&bad) = set.iter().find(|&&x| x >= host.n()) {
            return Err(ModelViolation::HostVertexOutOfRange { vertex: v, host_vertex: bad });
        }
        if !is_connected_in(host, set) {
            return Err(ModelViolation::DisconnectedBranchSet { vertex: v });
        }
    }
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    for (v, set) in m.branch_sets.iter().enumerate() {
        for &x in set {
            if let Some(&w) = owner.get(&x) {
                return Err(ModelViolation::OverlappingBranchSets { v: w, w: v, shared: x });
            }
            owner.insert(x, v);
        }
    }
    for &(v, w) in m.pattern.edges() {
        if attachment_edges(host, &m.branch_sets[v], &m.branch_sets[w]).is_empty() {
            return Err(ModelViolation::MissingEdge { v, w });
        }
    }
    if let (Some(pr), Some(hr)) = (m.pattern_root, m.host_root) {
        let pat = RootedTree::new(m.pattern.clone(), pr).expect("validated root");
        let hos = RootedTree::new(m.host.clone(), hr).expect("validated root");
        let mins: Vec<usize> = m.branch_sets.iter().map(|s| hos.order_min(s)).collect();
        for v in 0..m.pattern.n() {
            for w in 0..m.pattern.n() {
                if v == w {
                    continue;
                }
                let pattern_le = pat.is_ancestor(v, w);
                let host_le = hos.is_ancestor(mins[v], mins[w]);
                if pattern_le != host_le {
                    return Err(ModelViolation::RootOrder { v, w, pattern_le, host_le });
                }
            }
        }
    }
    Ok(())
}

/// Checks the relation-specific shape on top of [`check_model`] (which is
/// assumed to have passed): singletons for embeddings, subdivision shape for
/// topological minors, nothing extra for minors.
pub fn check_shape(m: &MinorModel, kind: RelKind) -> std::result::Result<(), ModelViolation> {
    match kind {
        RelKind::Minor => Ok(()),
        RelKind::Embed => {
            for (v, set) in m.branch_sets.iter().enumerate() {
                if set.len() != 1 {
                    return Err(ModelViolation::NotSingleton { vertex: v });
                }
            }
            Ok(())
        }
        RelKind::TopoMinor => check_subdivision_shape(m),
    }
}

/// The union of branch sets and attachment edges must be a subdivision of
/// the pattern.  Locally: each set induces a path that carries a center
/// vertex holding all attachments except at most one exiting past each end.
fn check_subdivision_shape(m: &MinorModel) -> std::result::Result<(), ModelViolation> {
    let host = m.host();
    for (v, set) in m.branch_sets.iter().enumerate() {
        let path = induced_path(host, set).ok_or(ModelViolation::NotAPath { vertex: v })?;
        let pos: BTreeMap<usize, usize> = path.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut attach = Vec::new();
        for &w in m.pattern.neighbors(v) {
            let edges = attachment_edges(host, set, &m.branch_sets[w]);
            match edges[..] {
                [(a, _)] => attach.push(pos[&a]),
                [] => return Err(ModelViolation::MissingEdge { v, w }),
                _ => return Err(ModelViolation::ManyAttachments { v, w }),
            }
        }
        let k = path.len();
        let center_works = |i: usize| {
            let left: Vec<usize> = attach.iter().copied().filter(|&p| p < i).collect();
            let right: Vec<usize> = attach.iter().copied().filter(|&p| p > i).collect();
            left.len() <= 1
                && left.iter().all(|&p| p == 0)
                && right.len() <= 1
                && right.iter().all(|&p| p == k - 1)
                && (i == 0 || left.len() == 1)
                && (i == k - 1 || right.len() == 1)
        };
        if !(0..k).any(center_works) {
            return Err(ModelViolation::NoSubdivisionCenter { vertex: v });
        }
    }
    Ok(())
}

/// Composes two models: the image of each pattern vertex through the first
/// model, pushed through the second.  The first model's host must equal the
/// second's pattern, including any root.
pub fn compose_models(first: &MinorModel, second: &MinorModel) -> Result<MinorModel> {
    if first.host != second.pattern || first.host_root != second.pattern_root {
        return Err(Error::HostPatternMismatch);
    }
    let branch_sets: Vec<BTreeSet<usize>> = first
        .branch_sets
        .iter()
        .map(|mid| mid.iter().flat_map(|&w| second.branch_sets[w].iter().copied()).collect())
        .collect();
    Ok(MinorModel {
        pattern: first.pattern.clone(),
        host: second.host.clone(),
        pattern_root: first.pattern_root,
        host_root: second.host_root,
        branch_sets,
    })
}

fn is_connected_in(host: &Tree, set: &BTreeSet<usize>) -> bool {
    let start = *set.iter().next().expect("nonempty set");
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in host.neighbors(x) {
            if set.contains(&y) && seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen.len() == set.len()
}

/// Host edges with the first endpoint in `a` and the second in `b`.
fn attachment_edges(host: &Tree, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &(x, y) in host.edges() {
        if a.contains(&x) && b.contains(&y) {
            out.push((x, y));
        } else if a.contains(&y) && b.contains(&x) {
            out.push((y, x));
        }
    }
    out
}

/// Orders `set` as the path it induces in `host`, or `None` if some vertex
/// has three set-neighbors.  Assumes the set is nonempty and connected.
fn induced_path(host: &Tree, set: &BTreeSet<usize>) -> Option<Vec<usize>> {
    let deg_in = |x: usize| host.neighbors(x).iter().filter(|y| set.contains(y)).count();
    if set.iter().any(|&x| deg_in(x) > 2) {
        return None;
    }
    let first = set.iter().copied().find(|&x| deg_in(x) <= 1).expect("a finite path has an end");
    let mut path = vec![first];
    let mut prev = usize::MAX;
    loop {
        let cur = *path.last().unwrap();
        match host.neighbors(cur).iter().copied().find(|&y| set.contains(&y) && y != prev) {
            Some(next) => {
                prev = cur;
                path.push(next);
            }
            None => break,
        }
    }
    (path.len() == set.len()).then_some(path)
}

/// The on-disk witness format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub pattern_n: usize,
    pub host_n: usize,
    pub relation: String,
    pub rooted: bool,
    pub branch_sets: BTreeMap<String, Vec<usize>>,
}

impl WitnessJson {
    pub fn from_model(m: &MinorModel, kind: RelKind) -> Self {
        let branch_sets = m
            .branch_sets
            .iter()
            .enumerate()
            .map(|(v, set)| (v.to_string(), set.iter().copied().collect()))
            .collect();
        WitnessJson {
            pattern_n: m.pattern().n(),
            host_n: m.host().n(),
            relation: kind.as_str().to_string(),
            rooted: m.is_rooted(),
            branch_sets,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::BadParams(format!("bad witness JSON: {}", e)))
    }

    /// Rebinds the witness to concrete trees, checking arity and roots; the
    /// semantic conditions stay with [`check_model`].
    pub fn to_model(
        &self,
        pattern: &TreeRecord,
        host: &TreeRecord,
    ) -> Result<(MinorModel, RelKind)> {
        let kind: RelKind = self.relation.parse()?;
        if pattern.tree().n() != self.pattern_n || host.tree().n() != self.host_n {
            return Err(Error::BadParams(format!(
                "witness is for sizes {} -> {}, got trees of sizes {} -> {}",
                self.pattern_n,
                self.host_n,
                pattern.tree().n(),
                host.tree().n()
            )));
        }
        let mut branch_sets = vec![BTreeSet::new(); self.pattern_n];
        for (key, values) in &self.branch_sets {
            let v: usize = key
                .parse()
                .map_err(|_| Error::BadParams(format!("bad branch set key `{}`", key)))?;
            if v >= self.pattern_n {
                return Err(Error::BadParams(format!("branch set key {} out of range", v)));
            }
            branch_sets[v] = values.iter().copied().collect();
        }
        if self.branch_sets.len() != self.pattern_n {
            return Err(Error::BadParams(format!(
                "expected {} branch sets, got {}",
                self.pattern_n,
                self.branch_sets.len()
            )));
        }
        let model = match (self.rooted, pattern, host) {
            (false, _, _) => {
                MinorModel::unrooted(pattern.tree().clone(), host.tree().clone(), branch_sets)
            }
            (true, TreeRecord::Rooted(p), TreeRecord::Rooted(h)) => {
                MinorModel::rooted(p, h, branch_sets)
            }
            (true, _, _) => {
                return Err(Error::BadParams("rooted witness needs rooted pattern and host".into()))
            }
        };
        Ok((model, kind))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(n: usize, edges: &[(usize, usize)]) -> Tree {
        Tree::new(n, edges.iter().copied()).unwrap()
    }

    fn sets(raw: &[&[usize]]) -> Vec<BTreeSet<usize>> {
        raw.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn the_identity_model_is_valid_for_every_shape() {
        let t = tree(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        let m = MinorModel::identity(&t);
        assert_eq!(check_model(&m), Ok(()));
        for kind in RelKind::ALL {
            assert_eq!(check_shape(&m, kind), Ok(()));
        }
        let rt = RootedTree::new(t, 3).unwrap();
        assert_eq!(check_model(&MinorModel::identity_rooted(&rt)), Ok(()));
    }

    #[test]
    fn each_semantic_clause_reports_its_own_violation() {
        // K1,3 into the spider with legs 2,2,2 (center 0, legs 0-1-2, 0-3-4, 0-5-6).
        let pat = tree(4, &[(0, 1), (0, 2), (0, 3)]);
        let host = tree(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let good = MinorModel::unrooted(
            pat.clone(),
            host.clone(),
            sets(&[&[0, 1], &[2], &[3, 4], &[5, 6]]),
        );
        assert_eq!(check_model(&good), Ok(()));

        let empty = MinorModel::unrooted(pat.clone(), host.clone(), sets(&[&[0], &[], &[3], &[5]]));
        assert_eq!(check_model(&empty), Err(ModelViolation::EmptyBranchSet { vertex: 1 }));

        let oor = MinorModel::unrooted(pat.clone(), host.clone(), sets(&[&[0], &[2], &[3], &[7]]));
        assert_eq!(
            check_model(&oor),
            Err(ModelViolation::HostVertexOutOfRange { vertex: 3, host_vertex: 7 })
        );

        let split =
            MinorModel::unrooted(pat.clone(), host.clone(), sets(&[&[0], &[2, 4], &[3], &[5]]));
        assert_eq!(check_model(&split), Err(ModelViolation::DisconnectedBranchSet { vertex: 1 }));

        let overlap =
            MinorModel::unrooted(pat.clone(), host.clone(), sets(&[&[0, 1], &[1, 2], &[3], &[5]]));
        assert_eq!(
            check_model(&overlap),
            Err(ModelViolation::OverlappingBranchSets { v: 0, w: 1, shared: 1 })
        );

        let apart = MinorModel::unrooted(pat, host, sets(&[&[0], &[1, 2], &[3], &[6]]));
        assert_eq!(check_model(&apart), Err(ModelViolation::MissingEdge { v: 0, w: 3 }));
    }

    #[test]
    fn rooted_models_must_reproduce_the_ancestor_order() {
        // P2 rooted at 0 into P3 rooted at 1, flipped so the child lands above.
        let pat = RootedTree::new(tree(2, &[(0, 1)]), 0).unwrap();
        let host = RootedTree::new(tree(3, &[(0, 1), (1, 2)]), 1).unwrap();
        let good = MinorModel::rooted(&pat, &host, sets(&[&[1], &[2]]));
        assert_eq!(check_model(&good), Ok(()));

        let flipped = MinorModel::rooted(&pat, &host, sets(&[&[2], &[1]]));
        assert_eq!(
            check_model(&flipped),
            Err(ModelViolation::RootOrder { v: 0, w: 1, pattern_le: true, host_le: false })
        );

        // With the pattern rooted at its larger id, the reverse clause of
        // the biconditional fires: the child may not land on the host root.
        let upside = RootedTree::new(tree(2, &[(0, 1)]), 1).unwrap();
        let edge_host = RootedTree::new(tree(2, &[(0, 1)]), 0).unwrap();
        let aligned = MinorModel::rooted(&upside, &edge_host, sets(&[&[1], &[0]]));
        assert_eq!(check_model(&aligned), Ok(()));
        let reversed = MinorModel::rooted(&upside, &edge_host, sets(&[&[0], &[1]]));
        assert_eq!(
            check_model(&reversed),
            Err(ModelViolation::RootOrder { v: 0, w: 1, pattern_le: false, host_le: true })
        );
    }

    #[test]
    fn embed_shape_means_singletons() {
        let pat = tree(2, &[(0, 1)]);
        let host = tree(3, &[(0, 1), (1, 2)]);
        let m = MinorModel::unrooted(pat, host, sets(&[&[0], &[1, 2]]));
        assert_eq!(check_model(&m), Ok(()));
        assert_eq!(check_shape(&m, RelKind::Minor), Ok(()));
        assert_eq!(
            check_shape(&m, RelKind::Embed),
            Err(ModelViolation::NotSingleton { vertex: 1 })
        );
    }

    #[test]
    fn topo_shape_accepts_subdivisions_and_rejects_the_rest() {
        // Two adjacent degree-3 hubs, their joining edge subdivided: the host
        // is the H-shape 1-0-2, 0-3, 3-4, 4-5, 4-6 with hubs 0 and 4.
        let pat = tree(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]);
        let host = tree(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]);
        // Hub 0 keeps the subdivision vertex 3 in its set.
        let m = MinorModel::unrooted(
            pat.clone(),
            host.clone(),
            sets(&[&[0, 3], &[1], &[2], &[4], &[5], &[6]]),
        );
        assert_eq!(check_model(&m), Ok(()));
        assert_eq!(check_shape(&m, RelKind::TopoMinor), Ok(()));

        // A path set whose only attachment lands mid-path leaves both ends
        // loose, and a loose end is not part of any subdivision.
        let leaf_pat = tree(2, &[(0, 1)]);
        let claw_host = tree(4, &[(0, 1), (1, 2), (1, 3)]);
        let dangling = MinorModel::unrooted(leaf_pat, claw_host, sets(&[&[0], &[1, 2, 3]]));
        assert_eq!(check_model(&dangling), Ok(()));
        assert_eq!(check_shape(&dangling, RelKind::Minor), Ok(()));
        assert_eq!(
            check_shape(&dangling, RelKind::TopoMinor),
            Err(ModelViolation::NoSubdivisionCenter { vertex: 1 })
        );

        // A star-shaped branch set is not a path at all.
        let star_host = tree(5, &[(0, 1), (1, 2), (1, 3), (1, 4)]);
        let clumped =
            MinorModel::unrooted(tree(2, &[(0, 1)]), star_host, sets(&[&[0], &[1, 2, 3, 4]]));
        assert_eq!(check_model(&clumped), Ok(()));
        assert_eq!(
            check_shape(&clumped, RelKind::TopoMinor),
            Err(ModelViolation::NotAPath { vertex: 1 })
        );
    }

    #[test]
    fn composition_chains_branch_sets_through_the_middle_tree() {
        // P2 -> P3 -> P5, each step spreading one set.
        let a = tree(2, &[(0, 1)]);
        let b = tree(3, &[(0, 1), (1, 2)]);
        let c = tree(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let first = MinorModel::unrooted(a, b.clone(), sets(&[&[0], &[1, 2]]));
        let second = MinorModel::unrooted(b, c, sets(&[&[0, 1], &[2], &[3, 4]]));
        let composed = compose_models(&first, &second).unwrap();
        assert_eq!(check_model(&composed), Ok(()));
        assert_eq!(composed.branch_sets(), sets(&[&[0, 1], &[2, 3, 4]]).as_slice());

        // Composing with the identity on either side changes nothing.
        let idl = MinorModel::identity(first.pattern());
        let idr = MinorModel::identity(first.host());
        assert_eq!(compose_models(&idl, &first).unwrap(), first);
        assert_eq!(compose_models(&first, &idr).unwrap(), first);

        // Mismatched middle trees are refused.
        let wrong = MinorModel::identity(&tree(4, &[(0, 1), (1, 2), (2, 3)]));
        assert_eq!(compose_models(&first, &wrong), Err(Error::HostPatternMismatch));
    }

    #[test]
    fn witness_json_round_trips_and_orders_keys() {
        let pat = tree(2, &[(0, 1)]);
        let host = tree(3, &[(0, 1), (1, 2)]);
        let m = MinorModel::unrooted(pat.clone(), host.clone(), sets(&[&[1], &[0]]));
        let w = WitnessJson::from_model(&m, RelKind::Embed);
        let json = w.to_json();
        assert_eq!(
            json,
            r#"{"pattern_n":2,"host_n":3,"relation":"embed","rooted":false,"branch_sets":{"0":[1],"1":[0]}}"#
        );
        let back = WitnessJson::from_json(&json).unwrap();
        assert_eq!(back, w);
        let (rebuilt, kind) =
            back.to_model(&TreeRecord::Free(pat), &TreeRecord::Free(host)).unwrap();
        assert_eq!(kind, RelKind::Embed);
        assert_eq!(rebuilt, m);

        assert!(WitnessJson::from_json("{\"pattern_n\": 1}").is_err());
    }
}
