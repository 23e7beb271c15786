//! Canonical codes for rooted and unrooted trees.
//!
//! A rooted tree's code is built bottom-up: a leaf is `()`, and an inner
//! vertex wraps the sorted concatenation of its children's codes.  Two rooted
//! trees are isomorphic exactly when their codes are equal.  An unrooted tree
//! is coded by rooting at its center (taking the lexicographically smaller of
//! the two rootings when the center is an edge), which every isomorphism
//! preserves.

use std::fmt;

use crate::tree::{FixedElement, RootedTree, Tree};

/// A canonical code; equal codes mean isomorphic trees of the same kind.
/// Ordering is lexicographic on the underlying string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Code of a rooted tree.
pub fn rooted_code(rt: &RootedTree) -> CanonicalCode {
    CanonicalCode(subtree_codes(rt)[rt.root()].clone())
}

/// Per-vertex codes of every hanging subtree, processed deepest-first so no
/// recursion is needed.
pub(crate) fn subtree_codes(rt: &RootedTree) -> Vec<String> {
    let mut order: Vec<usize> = (0..rt.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(rt.depth(v)));
    let mut codes = vec![String::new(); rt.n()];
    for v in order {
        let mut parts: Vec<&str> = rt.children(v).iter().map(|&c| codes[c].as_str()).collect();
        parts.sort_unstable();
        let mut code = String::with_capacity(2 + parts.iter().map(|p| p.len()).sum::<usize>());
        code.push('(');
        for p in parts {
            code.push_str(p);
        }
        code.push(')');
        codes[v] = code;
    }
    codes
}

/// Code of an unrooted tree, via center rooting.
pub fn free_code(t: &Tree) -> CanonicalCode {
    match t.center() {
        FixedElement::Vertex(c) => rooted_code(&RootedTree::new(t.clone(), c).unwrap()),
        FixedElement::Edge(u, v) => {
            let at_u = rooted_code(&RootedTree::new(t.clone(), u).unwrap());
            let at_v = rooted_code(&RootedTree::new(t.clone(), v).unwrap());
            at_u.min(at_v)
        }
    }
}

pub fn is_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.n() == b.n() && free_code(a) == free_code(b)
}

pub fn is_rooted_isomorphic(a: &RootedTree, b: &RootedTree) -> bool {
    a.n() == b.n() && rooted_code(a) == rooted_code(b)
}

impl Tree {
    pub fn canonical_code(&self) -> CanonicalCode {
        free_code(self)
    }
}

impl RootedTree {
    pub fn canonical_code(&self) -> CanonicalCode {
        rooted_code(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::Tree;

    fn path(n: usize) -> Tree {
        Tree::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn rooted_codes_sort_children() {
        // Root 0 with a leaf child and a path child, in both child orders.
        let a = RootedTree::new(Tree::new(4, [(0, 1), (0, 2), (2, 3)]).unwrap(), 0).unwrap();
        let b = RootedTree::new(Tree::new(4, [(0, 3), (0, 1), (1, 2)]).unwrap(), 0).unwrap();
        assert_eq!(rooted_code(&a), rooted_code(&b));
        assert_eq!(rooted_code(&a).as_str(), "((())())");
    }

    #[test]
    fn rooting_the_same_tree_differently_changes_the_code() {
        let t = path(3);
        let end = rooted_code(&RootedTree::new(t.clone(), 0).unwrap());
        let mid = rooted_code(&RootedTree::new(t, 1).unwrap());
        assert_eq!(end.as_str(), "((()))");
        assert_eq!(mid.as_str(), "(()())");
        assert_ne!(end, mid);
    }

    #[test]
    fn free_code_is_rooting_invariant_but_shape_sensitive() {
        // P4 and K1,3: the two tree shapes on four vertices.
        let p4 = path(4);
        let k13 = Tree::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(free_code(&p4), free_code(&k13));
        assert!(is_isomorphic(&p4, &Tree::new(4, [(2, 0), (3, 1), (0, 3)]).unwrap()));
        assert!(!is_isomorphic(&p4, &k13));
    }

    #[test]
    fn relabeling_never_changes_the_free_code() {
        let t = Tree::new(7, [(0, 1), (1, 2), (1, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let code = free_code(&t);
        let perm = [3, 0, 6, 2, 5, 1, 4];
        assert_eq!(free_code(&t.relabel(&perm).unwrap()), code);
    }

    #[test]
    fn the_six_tree_shapes_on_six_vertices_get_distinct_codes() {
        let shapes = [
            path(6),
            Tree::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap(),
            Tree::new(6, [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5)]).unwrap(),
            Tree::new(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap(),
            Tree::new(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap(),
            Tree::new(6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap(),
        ];
        let mut codes: Vec<_> = shapes.iter().map(free_code).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 6);
    }

    #[test]
    fn edge_center_takes_the_smaller_rooting() {
        let t = path(6);
        let at_2 = rooted_code(&RootedTree::new(t.clone(), 2).unwrap());
        let at_3 = rooted_code(&RootedTree::new(t.clone(), 3).unwrap());
        assert_eq!(free_code(&t), at_2.min(at_3));
    }
}
