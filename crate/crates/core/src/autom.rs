//! Automorphism enumeration.
//!
//! Rooted isomorphisms are enumerated by pairing equal-coded child subtrees
//! in every possible way.  Unrooted automorphisms reduce to the rooted case
//! through the center: every automorphism fixes it, so a vertex center is a
//! common root, and an edge center splits the tree into two halves that are
//! either preserved or (when isomorphic) swapped.

use crate::canon::subtree_codes;
use crate::tree::{FixedElement, RootedTree, Tree};

/// All root-preserving isomorphisms from `a` to `b`, each a full map
/// `map[v_a] = v_b`, sorted lexicographically.  Empty when not isomorphic.
pub fn rooted_isomorphisms(a: &RootedTree, b: &RootedTree) -> Vec<Vec<usize>> {
    if a.n() != b.n() {
        return Vec::new();
    }
    let mut search = IsoSearch {
        a,
        b,
        code_a: subtree_codes(a),
        code_b: subtree_codes(b),
        map: vec![usize::MAX; a.n()],
        out: Vec::new(),
    };
    if search.code_a[a.root()] == search.code_b[b.root()] {
        let mut tasks = vec![(a.root(), b.root())];
        search.descend(&mut tasks);
    }
    search.out.sort_unstable();
    search.out
}

/// All automorphisms of `t`, sorted lexicographically; `[identity]` at minimum.
pub fn automorphisms(t: &Tree) -> Vec<Vec<usize>> {
    let mut maps = match t.center() {
        FixedElement::Vertex(c) => {
            let r = RootedTree::new(t.clone(), c).unwrap();
            rooted_isomorphisms(&r, &r)
        }
        FixedElement::Edge(u, v) => {
            // Maps fixing the center edge pointwise are exactly the rooted
            // automorphisms at either endpoint.
            let at_u = RootedTree::new(t.clone(), u).unwrap();
            let mut maps = rooted_isomorphisms(&at_u, &at_u);
            // Maps swapping the endpoints glue an isomorphism of one half
            // onto an independent isomorphism of the other.
            let (half_u, verts_u) = split_half(t, u, v);
            let (half_v, verts_v) = split_half(t, v, u);
            let forward = rooted_isomorphisms(&half_u, &half_v);
            let backward = rooted_isomorphisms(&half_v, &half_u);
            for g in &forward {
                for h in &backward {
                    let mut map = vec![usize::MAX; t.n()];
                    for (i, &old) in verts_u.iter().enumerate() {
                        map[old] = verts_v[g[i]];
                    }
                    for (j, &old) in verts_v.iter().enumerate() {
                        map[old] = verts_u[h[j]];
                    }
                    maps.push(map);
                }
            }
            maps
        }
    };
    maps.sort_unstable();
    maps
}

/// The component of `t - {side, other}` containing `side`, rooted at `side`
/// and relabeled; returns it with the new-to-old vertex map.
fn split_half(t: &Tree, side: usize, other: usize) -> (RootedTree, Vec<usize>) {
    let mut verts = vec![side];
    let mut seen = vec![false; t.n()];
    seen[side] = true;
    seen[other] = true;
    let mut i = 0;
    while i < verts.len() {
        for &y in t.neighbors(verts[i]) {
            if !seen[y] {
                seen[y] = true;
                verts.push(y);
            }
        }
        i += 1;
    }
    verts.sort_unstable();
    let mut old_to_new = vec![usize::MAX; t.n()];
    for (new, &old) in verts.iter().enumerate() {
        old_to_new[old] = new;
    }
    let edges = t
        .edges()
        .iter()
        .filter(|&&(a, b)| old_to_new[a] != usize::MAX && old_to_new[b] != usize::MAX)
        .map(|&(a, b)| (old_to_new[a], old_to_new[b]));
    let half = Tree::new(verts.len(), edges).unwrap();
    let rooted = RootedTree::new(half, old_to_new[side]).unwrap();
    (rooted, verts)
}

struct IsoSearch<'a> {
    a: &'a RootedTree,
    b: &'a RootedTree,
    code_a: Vec<String>,
    code_b: Vec<String>,
    map: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl IsoSearch<'_> {
    /// Processes pending subtree pairs depth-first; an empty stack means the
    /// map is complete.
    fn descend(&mut self, tasks: &mut Vec<(usize, usize)>) {
        let Some((av, bv)) = tasks.pop() else {
            self.out.push(self.map.clone());
            return;
        };
        self.map[av] = bv;
        let bchs: Vec<usize> = self.b.children(bv).to_vec();
        let mut used = vec![false; bchs.len()];
        self.match_children(av, 0, &bchs, &mut used, tasks);
        tasks.push((av, bv));
    }

    /// Pairs the `i`-th child of `av` with every unused equal-coded child on
    /// the `b` side, then recurses.
    fn match_children(
        &mut self,
        av: usize,
        i: usize,
        bchs: &[usize],
        used: &mut Vec<bool>,
        tasks: &mut Vec<(usize, usize)>,
    ) {
        let achs = self.a.children(av);
        if i == achs.len() {
            self.descend(tasks);
            return;
        }
        let ac = achs[i];
        for (j, &bc) in bchs.iter().enumerate() {
            if !used[j] && self.code_a[ac] == self.code_b[bc] {
                used[j] = true;
                tasks.push((ac, bc));
                self.match_children(av, i + 1, bchs, used, tasks);
                tasks.pop();
                used[j] = false;
            }
        }
    }
}
