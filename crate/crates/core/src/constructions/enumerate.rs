//! Exhaustive enumeration of isomorphism classes of small trees.
//!
//! Trees are grown by leaf augmentation: every tree on `k + 1` vertices
//! loses some leaf to a tree on `k` vertices, so attaching a new leaf to
//! every vertex of every class representative reaches every class one
//! size up.  Duplicates are collapsed by canonical code, which also fixes
//! the output order.

use std::collections::BTreeMap;

use crate::canon::{free_code, rooted_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::tree::{RootedTree, Tree};

/// Enumeration beyond this many vertices is too large for desk use.
pub const DEFAULT_ENUM_CAP: usize = 10;

/// One representative per isomorphism class of trees on `n` vertices,
/// sorted by canonical code.
pub fn enumerate_free_trees(n: usize, cap: usize) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > cap {
        return Err(Error::SizeLimitExceeded { n, cap });
    }
    let mut level: BTreeMap<CanonicalCode, Tree> =
        BTreeMap::from([(free_code(&Tree::single()), Tree::single())]);
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in t.vertices() {
                let grown = attach_leaf(t, v);
                next.entry(free_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// One representative per isomorphism class of rooted trees on `n`
/// vertices, rooted at 0 and sorted by canonical code.
pub fn enumerate_rooted_trees(n: usize, cap: usize) -> Result<Vec<RootedTree>> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > cap {
        return Err(Error::SizeLimitExceeded { n, cap });
    }
    let single = RootedTree::single();
    let mut level: BTreeMap<CanonicalCode, RootedTree> =
        BTreeMap::from([(rooted_code(&single), single)]);
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for rt in level.values() {
            for v in rt.tree().vertices() {
                let grown = RootedTree::new(attach_leaf(rt.tree(), v), rt.root())
                    .expect("the root survives augmentation");
                next.entry(rooted_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

fn attach_leaf(t: &Tree, v: usize) -> Tree {
    let mut edges = t.edges().to_vec();
    edges.push((v, t.n()));
    Tree::new(t.n() + 1, edges).expect("attaching a leaf keeps a tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_class_counts_match_the_known_sequence() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23];
        for (i, &count) in expected.iter().enumerate() {
            let trees = enumerate_free_trees(i + 1, 10).unwrap();
            assert_eq!(trees.len(), count, "n={}", i + 1);
        }
    }

    #[test]
    fn rooted_class_counts_match_the_known_sequence() {
        let expected = [1, 1, 2, 4, 9, 20, 48];
        for (i, &count) in expected.iter().enumerate() {
            let trees = enumerate_rooted_trees(i + 1, 10).unwrap();
            assert_eq!(trees.len(), count, "n={}", i + 1);
        }
    }

    #[test]
    fn representatives_are_distinct_sorted_and_sized() {
        let trees = enumerate_free_trees(6, 10).unwrap();
        let codes: Vec<CanonicalCode> = trees.iter().map(free_code).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(codes, sorted);
        assert!(trees.iter().all(|t| t.n() == 6));
        let rooted = enumerate_rooted_trees(5, 10).unwrap();
        assert!(rooted.iter().all(|rt| rt.n() == 5 && rt.root() == 0));
    }

    #[test]
    fn the_cap_guards_both_enumerations() {
        assert_eq!(
            enumerate_free_trees(11, 10).unwrap_err(),
            Error::SizeLimitExceeded { n: 11, cap: 10 }
        );
        assert_eq!(
            enumerate_rooted_trees(11, 10).unwrap_err(),
            Error::SizeLimitExceeded { n: 11, cap: 10 }
        );
        assert!(matches!(enumerate_free_trees(0, 10), Err(Error::NoVertices)));
    }
}
