//! Exhaustive enumeration of a tree's minor models in itself.
//!
//! A tree has the same number of branch sets as host vertices when it
//! models itself, so every branch set is forced down to a singleton and a
//! self model is exactly a vertex bijection that carries edges to edges.
//! The enumeration below searches those bijections directly, assigning
//! vertices in breadth-first order and branching only over neighbours of
//! the already-placed parent.  It shares no machinery with the
//! centre-based automorphism computation, which makes the two useful as
//! cross-checks of one another.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::relations::model::{check_model, MinorModel};
use crate::tree::Tree;

/// Every minor model of `t` in itself, sorted by branch-set assignment.
/// Fails with `SizeLimitExceeded` when `t` is larger than `cap`.
pub fn enumerate_self_models(t: &Tree, cap: usize) -> Result<Vec<MinorModel>> {
    if t.n() > cap {
        return Err(Error::SizeLimitExceeded { n: t.n(), cap });
    }
    let order = bfs_order(t);
    let mut image = vec![usize::MAX; t.n()];
    let mut used = vec![false; t.n()];
    let mut found = Vec::new();
    place(t, &order, 0, &mut image, &mut used, &mut found);
    let mut models: Vec<MinorModel> = found
        .into_iter()
        .map(|image| {
            let sets: Vec<BTreeSet<usize>> = image.iter().map(|&x| BTreeSet::from([x])).collect();
            MinorModel::unrooted(t.clone(), t.clone(), sets)
        })
        .collect();
    debug_assert!(models.iter().all(|m| check_model(m).is_ok()));
    models.sort_by(|a, b| a.branch_sets().cmp(b.branch_sets()));
    Ok(models)
}

fn bfs_order(t: &Tree) -> Vec<(usize, Option<usize>)> {
    let mut order = Vec::with_capacity(t.n());
    let mut seen = vec![false; t.n()];
    let mut queue = VecDeque::from([(0, None)]);
    seen[0] = true;
    while let Some((v, from)) = queue.pop_front() {
        order.push((v, from));
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back((w, Some(v)));
            }
        }
    }
    order
}

fn place(
    t: &Tree,
    order: &[(usize, Option<usize>)],
    idx: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Vec<usize>>,
) {
    if idx == order.len() {
        found.push(image.clone());
        return;
    }
    let (v, from) = order[idx];
    let candidates: Vec<usize> = match from {
        None => t.vertices().collect(),
        Some(p) => t.neighbors(image[p]).to_vec(),
    };
    for x in candidates {
        if used[x] || t.degree(x) != t.degree(v) {
            continue;
        }
        used[x] = true;
        image[v] = x;
        place(t, order, idx + 1, image, used, found);
        used[x] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autom::automorphisms;

    fn tree(n: usize, edges: &[(usize, usize)]) -> Tree {
        Tree::new(n, edges.iter().copied()).unwrap()
    }

    fn path(n: usize) -> Tree {
        Tree::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn counts_match_the_automorphism_group() {
        let cases = [
            (Tree::single(), 1),
            (path(2), 2),
            (path(5), 2),
            (tree(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]), 24),
            (tree(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]), 8),
        ];
        for (t, expected) in cases {
            let models = enumerate_self_models(&t, 8).unwrap();
            assert_eq!(models.len(), expected, "n={}", t.n());
            assert_eq!(models.len(), automorphisms(&t).len(), "n={}", t.n());
        }
    }

    #[test]
    fn every_self_model_is_valid_and_the_identity_appears() {
        let t = tree(6, &[(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)]);
        let models = enumerate_self_models(&t, 8).unwrap();
        assert!(models.iter().all(|m| check_model(m).is_ok()));
        let identity: Vec<BTreeSet<usize>> = t.vertices().map(|v| BTreeSet::from([v])).collect();
        assert!(models.iter().any(|m| m.branch_sets() == identity.as_slice()));
    }

    #[test]
    fn the_size_guard_trips_before_the_search() {
        assert_eq!(
            enumerate_self_models(&path(9), 8),
            Err(Error::SizeLimitExceeded { n: 9, cap: 8 })
        );
    }
}
