//! Surgery on the child subtrees of a root.
//!
//! A rooted tree is determined up to isomorphism by the multiset of its
//! root children's subtree classes, so swapping a child subtree for an
//! isomorphic copy, or rewriting how often a class occurs, are the basic
//! moves for building comparable families.

use std::collections::BTreeMap;

use crate::canon::{rooted_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::tree::{RootedTree, Tree};

/// How often each subtree class occurs among a root's children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChildTypeMultiset(pub BTreeMap<CanonicalCode, usize>);

impl ChildTypeMultiset {
    pub fn count(&self, code: &CanonicalCode) -> usize {
        self.0.get(code).copied().unwrap_or(0)
    }
}

/// The multiset of canonical codes of the subtrees at `rt`'s root children.
pub fn child_type_multiset(rt: &RootedTree) -> ChildTypeMultiset {
    let mut counts = BTreeMap::new();
    for &c in rt.children(rt.root()) {
        let (sub, _) = rt.subtree_at(c).expect("children are in range");
        *counts.entry(rooted_code(&sub)).or_insert(0) += 1;
    }
    ChildTypeMultiset(counts)
}

/// Replaces the child subtree hanging at root child `v` with a copy of
/// `s`.  The kept vertices are relabeled in ascending order, then `s`'s
/// vertices follow in their own order.
pub fn replace_child_subtree(rt: &RootedTree, v: usize, s: &RootedTree) -> Result<RootedTree> {
    if !rt.children(rt.root()).contains(&v) {
        return Err(Error::NotAChild(v));
    }
    rebuild(rt, |c| c == v, &[s])
}

/// Removes every root child whose subtree has canonical code `beta`, then
/// attaches `lambda` fresh copies of `k` to the root.
pub fn attach_copies(
    rt: &RootedTree,
    beta: &CanonicalCode,
    k: &RootedTree,
    lambda: usize,
) -> Result<RootedTree> {
    let drop = |c: usize| {
        let (sub, _) = rt.subtree_at(c).expect("children are in range");
        rooted_code(&sub) == *beta
    };
    let copies: Vec<&RootedTree> = std::iter::repeat_n(k, lambda).collect();
    rebuild(rt, drop, &copies)
}

/// Drops the subtrees at root children selected by `drop`, then attaches
/// the given trees as new child subtrees of the root.
fn rebuild(
    rt: &RootedTree,
    drop: impl Fn(usize) -> bool,
    attach: &[&RootedTree],
) -> Result<RootedTree> {
    let mut removed = vec![false; rt.n()];
    for &c in rt.children(rt.root()) {
        if drop(c) {
            for x in rt.subtree_vertices(c) {
                removed[x] = true;
            }
        }
    }
    let kept: Vec<usize> = (0..rt.n()).filter(|&x| !removed[x]).collect();
    let mut old_to_new = vec![usize::MAX; rt.n()];
    for (new, &old) in kept.iter().enumerate() {
        old_to_new[old] = new;
    }
    let mut edges: Vec<(usize, usize)> = rt
        .tree()
        .edges()
        .iter()
        .filter(|&&(u, v)| !removed[u] && !removed[v])
        .map(|&(u, v)| (old_to_new[u], old_to_new[v]))
        .collect();
    let mut total = kept.len();
    let root = old_to_new[rt.root()];
    for s in attach {
        edges.extend(s.tree().edges().iter().map(|&(u, v)| (u + total, v + total)));
        edges.push((root, s.root() + total));
        total += s.n();
    }
    let tree = Tree::new(total, edges)?;
    RootedTree::new(tree, root)
}
