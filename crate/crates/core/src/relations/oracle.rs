//! Brute-force reference decider, independent of the polynomial ones.
//!
//! A pattern relates to a host exactly when some sequence of the
//! relation's local operations shrinks the host onto the pattern's
//! isomorphism class.  This oracle searches that operation space
//! breadth-first, deduplicating intermediate trees by canonical code, and
//! is intended for cross-checking the deciders at small sizes.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use crate::canon::free_code;
use crate::error::{Error, Result};
use crate::relations::ops::{apply_op, OpKind, OpStep, RelKind};
use crate::tree::Tree;

/// Hosts beyond this size make the operation space impractical to sweep.
pub const DEFAULT_ORACLE_CAP: usize = 8;

/// Whether some sequence of `kind`'s operations takes `host` to a tree
/// isomorphic to `pattern`.  Fails with `SizeLimitExceeded` when the host
/// is larger than `cap`.
pub fn oracle_reachable(pattern: &Tree, host: &Tree, kind: RelKind, cap: usize) -> Result<bool> {
    if host.n() > cap {
        return Err(Error::SizeLimitExceeded { n: host.n(), cap });
    }
    if pattern.n() > host.n() {
        return Ok(false);
    }
    let target = free_code(pattern);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(free_code(host));
    queue.push_back(host.clone());
    while let Some(t) = queue.pop_front() {
        if free_code(&t) == target {
            return Ok(true);
        }
        if t.n() <= pattern.n() {
            continue;
        }
        for step in all_steps(&t, kind) {
            let Ok((next, _)) = apply_op(&t, step) else { continue };
            if next.n() < pattern.n() {
                continue;
            }
            if seen.insert(free_code(&next)) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// Every instantiation of the relation's allowed operations on `t`.
fn all_steps(t: &Tree, kind: RelKind) -> Vec<OpStep> {
    let mut steps = Vec::new();
    for op in kind.allowed_ops() {
        match op {
            OpKind::EdgeRemoval => {
                steps.extend(t.edges().iter().map(|&(u, v)| OpStep::RemoveEdge { u, v }));
            }
            OpKind::EdgeContraction => {
                steps.extend(t.edges().iter().map(|&(u, v)| OpStep::ContractEdge { u, v }));
            }
            OpKind::VertexRemoval => {
                steps.extend(t.vertices().map(|v| OpStep::RemoveVertex { v }));
            }
            OpKind::Deg2Dissolution => {
                steps.extend(t.vertices().map(|v| OpStep::DissolveVertex { v }));
            }
        }
    }
    steps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(n: usize, edges: &[(usize, usize)]) -> Tree {
        Tree::new(n, edges.iter().copied()).unwrap()
    }

    fn path(n: usize) -> Tree {
        Tree::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn subpaths_are_reachable_under_every_relation() {
        for kind in RelKind::ALL {
            assert_eq!(oracle_reachable(&path(2), &path(4), kind, 8), Ok(true));
            assert_eq!(oracle_reachable(&path(4), &path(2), kind, 8), Ok(false));
        }
    }

    #[test]
    fn contraction_alone_builds_the_high_degree_vertex() {
        let k14 = tree(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let broom = tree(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]);
        assert_eq!(oracle_reachable(&k14, &broom, RelKind::Minor, 8), Ok(true));
        assert_eq!(oracle_reachable(&k14, &broom, RelKind::TopoMinor, 8), Ok(false));
        assert_eq!(oracle_reachable(&k14, &broom, RelKind::Embed, 8), Ok(false));
    }

    #[test]
    fn dissolution_alone_recovers_a_subdivided_pattern() {
        let pat = tree(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]);
        let host = tree(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]);
        assert_eq!(oracle_reachable(&pat, &host, RelKind::Embed, 8), Ok(false));
        assert_eq!(oracle_reachable(&pat, &host, RelKind::TopoMinor, 8), Ok(true));
        assert_eq!(oracle_reachable(&pat, &host, RelKind::Minor, 8), Ok(true));
    }

    #[test]
    fn equal_sizes_reduce_to_isomorphism() {
        let a = tree(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]);
        let b = tree(5, &[(4, 3), (3, 1), (1, 0), (1, 2)]);
        for kind in RelKind::ALL {
            assert_eq!(oracle_reachable(&a, &b, kind, 8), Ok(true));
            assert_eq!(oracle_reachable(&a, &path(5), kind, 8), Ok(false));
        }
    }

    #[test]
    fn oversized_hosts_are_rejected_not_searched() {
        assert_eq!(
            oracle_reachable(&path(2), &path(9), RelKind::Embed, 8),
            Err(Error::SizeLimitExceeded { n: 9, cap: 8 })
        );
        assert_eq!(oracle_reachable(&path(2), &path(9), RelKind::Embed, 9), Ok(true));
    }
}
