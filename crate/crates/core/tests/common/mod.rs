#![allow(dead_code)]

use proptest::prelude::*;
use treerel::{random_pruefer, RootedTree, Tree};

pub fn tree(n: usize, edges: &[(usize, usize)]) -> Tree {
    Tree::new(n, edges.iter().copied()).unwrap()
}

pub fn rooted(n: usize, edges: &[(usize, usize)], root: usize) -> RootedTree {
    RootedTree::new(tree(n, edges), root).unwrap()
}

/// Seed-driven random trees with 1..=max vertices.
pub fn arb_tree(max: usize) -> impl Strategy<Value = Tree> {
    (1..=max, any::<u64>()).prop_map(|(n, seed)| random_pruefer(n, seed).unwrap())
}

/// As `arb_tree`, rooted at an arbitrary vertex.
pub fn arb_rooted(max: usize) -> impl Strategy<Value = RootedTree> {
    (arb_tree(max), any::<prop::sample::Index>()).prop_map(|(t, idx)| {
        let root = idx.index(t.n());
        RootedTree::new(t, root).unwrap()
    })
}

/// A tree together with a uniformly shuffled relabeling of its vertices.
pub fn arb_tree_with_perm(max: usize) -> impl Strategy<Value = (Tree, Vec<usize>)> {
    arb_tree(max).prop_flat_map(|t| {
        let perm = Just((0..t.n()).collect::<Vec<usize>>()).prop_shuffle();
        (Just(t), perm)
    })
}
