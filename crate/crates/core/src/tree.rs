//! Finite trees on vertex set `{0, .., n-1}`, plus the rooted variant that
//! carries the induced ancestor order.
//!
//! The text format is line oriented: a header `tree <n>` or `rtree <n> <root>`
//! followed by exactly `n - 1` lines `<u> <v>`, one per edge.  Blank lines and
//! `#` comments are ignored.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// An unrooted tree.  Edges are stored normalized (`u < v`) and sorted, and
/// adjacency lists are sorted, so equal trees compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an edge list, validating shape and connectivity.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut seen = BTreeSet::new();
        let mut norm = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            for &x in &[a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge { u, v });
            }
            norm.push((u, v));
            adj[u].push(v);
            adj[v].push(u);
        }
        if norm.len() != n - 1 {
            return Err(Error::WrongEdgeCount { n, edges: norm.len() });
        }
        let mut reached = vec![false; n];
        let mut queue = VecDeque::from([0]);
        reached[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !reached[y] {
                    reached[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        if count != n {
            return Err(Error::Disconnected(n));
        }
        norm.sort_unstable();
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Tree { n, edges: norm, adj })
    }

    /// The one-vertex tree.
    pub fn single() -> Self {
        Tree::new(1, []).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Normalized, sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Vertices of degree at least three.
    pub fn branch_vertices(&self) -> BTreeSet<usize> {
        self.vertices().filter(|&v| self.degree(v) >= 3).collect()
    }

    /// Vertices of infinite degree; always empty on a finite tree.
    pub fn infinite_degree_vertices(&self) -> BTreeSet<usize> {
        BTreeSet::new()
    }

    /// The unique path from `u` to `v`, inclusive of both endpoints.
    pub fn path_between(&self, u: usize, v: usize) -> Vec<usize> {
        assert!(u < self.n && v < self.n, "path endpoints out of range");
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([u]);
        parent[u] = u;
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &y in &self.adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        path
    }

    /// Vertex set of the smallest subtree containing `set`: the union of all
    /// pairwise paths.  Computed by repeatedly stripping removable leaves.
    pub fn closure(&self, set: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        for &v in set {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut alive = vec![true; self.n];
        let mut deg: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut queue: VecDeque<usize> =
            self.vertices().filter(|v| deg[*v] <= 1 && !set.contains(v)).collect();
        while let Some(x) = queue.pop_front() {
            if !alive[x] || deg[x] > 1 || set.contains(&x) {
                continue;
            }
            alive[x] = false;
            for &y in &self.adj[x] {
                if alive[y] {
                    deg[y] -= 1;
                    if deg[y] <= 1 && !set.contains(&y) {
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(self.vertices().filter(|&v| alive[v]).collect())
    }

    /// The center: the vertex or edge left after repeatedly deleting all
    /// current leaves in rounds.  Every automorphism fixes it.
    pub fn center(&self) -> FixedElement {
        let mut alive: BTreeSet<usize> = self.vertices().collect();
        let mut deg: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        while alive.len() > 2 {
            let layer: Vec<usize> = alive.iter().copied().filter(|&v| deg[v] <= 1).collect();
            for &x in &layer {
                alive.remove(&x);
                for &y in &self.adj[x] {
                    if alive.contains(&y) {
                        deg[y] -= 1;
                    }
                }
            }
        }
        let rest: Vec<usize> = alive.into_iter().collect();
        match rest[..] {
            [c] => FixedElement::Vertex(c),
            [u, v] => FixedElement::Edge(u, v),
            _ => unreachable!("leaf stripping always leaves one or two vertices"),
        }
    }

    /// An element stabilized by every self-model of the tree in itself.  On
    /// finite trees self-models are exactly the automorphisms, and the center
    /// is fixed by all of them, so the two notions coincide.
    pub fn fixed_element(&self) -> FixedElement {
        self.center()
    }

    /// Applies a relabeling (`perm[old] = new`); `perm` must be a permutation
    /// of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree> {
        if perm.len() != self.n {
            return Err(Error::BadParams(format!(
                "permutation length {} does not match {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || hit[p] {
                return Err(Error::BadParams("not a permutation".into()));
            }
            hit[p] = true;
        }
        Tree::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("tree {}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

/// A vertex or edge of a tree singled out as an automorphism-fixed element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedElement {
    Vertex(usize),
    /// Normalized so the smaller endpoint comes first.
    Edge(usize, usize),
}

impl fmt::Display for FixedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FixedElement::Vertex(v) => write!(f, "vertex {}", v),
            FixedElement::Edge(u, v) => write!(f, "edge {} {}", u, v),
        }
    }
}

/// A tree together with a distinguished root, exposing the ancestor order
/// `v <= w  iff  v lies on the root-to-w path`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> Result<Self> {
        if root >= tree.n() {
            return Err(Error::RootOutOfRange { root, n: tree.n() });
        }
        let n = tree.n();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        let mut queue = VecDeque::from([root]);
        let mut seen = vec![false; n];
        seen[root] = true;
        while let Some(x) = queue.pop_front() {
            for &y in tree.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    depth[y] = depth[x] + 1;
                    children[x].push(y);
                    queue.push_back(y);
                }
            }
        }
        Ok(RootedTree { tree, root, parent, children, depth })
    }

    /// The one-vertex rooted tree.
    pub fn single() -> Self {
        RootedTree::new(Tree::single(), 0).unwrap()
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Immediate successors of `v` in the tree order, ascending.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Whether `v <= w` in the tree order (`v` is `w` or an ancestor of `w`).
    pub fn is_ancestor(&self, v: usize, w: usize) -> bool {
        let mut x = w;
        while self.depth[x] > self.depth[v] {
            x = self.parent[x].unwrap();
        }
        x == v
    }

    /// The minimum of a nonempty set under the tree order, i.e. its unique
    /// shallowest vertex when the set induces a connected subtree.
    pub fn order_min(&self, set: &BTreeSet<usize>) -> usize {
        set.iter().copied().min_by_key(|&v| (self.depth[v], v)).expect("order_min of an empty set")
    }

    /// Vertices of the subtree hanging at `v`, ascending.
    pub fn subtree_vertices(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend(self.children[x].iter().copied());
        }
        out.sort_unstable();
        out
    }

    /// The subtree hanging at `v` as a tree rooted at `v`, relabeled to
    /// `{0, .., k-1}`; also returns the map from new labels back to old ones.
    pub fn subtree_at(&self, v: usize) -> Result<(RootedTree, Vec<usize>)> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let new_to_old = self.subtree_vertices(v);
        let mut old_to_new = vec![usize::MAX; self.n()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut edges = Vec::with_capacity(new_to_old.len().saturating_sub(1));
        for &old in &new_to_old {
            for &c in &self.children[old] {
                edges.push((old_to_new[old], old_to_new[c]));
            }
        }
        let tree = Tree::new(new_to_old.len(), edges)?;
        Ok((RootedTree::new(tree, old_to_new[v])?, new_to_old))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("rtree {} {}\n", self.n(), self.root);
        for &(u, v) in self.tree.edges() {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

/// One parsed record of the text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeRecord {
    Free(Tree),
    Rooted(RootedTree),
}

impl TreeRecord {
    /// The underlying unrooted tree either way.
    pub fn tree(&self) -> &Tree {
        match self {
            TreeRecord::Free(t) => t,
            TreeRecord::Rooted(rt) => rt.tree(),
        }
    }

    pub fn root(&self) -> Option<usize> {
        match self {
            TreeRecord::Free(_) => None,
            TreeRecord::Rooted(rt) => Some(rt.root()),
        }
    }
}

/// Parses a single `tree`/`rtree` record, ignoring blank and `#` lines.
pub fn parse_tree_text(input: &str) -> Result<TreeRecord> {
    let mut lines = input.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    });

    let (header_no, header) =
        lines.next().ok_or_else(|| Error::Parse { line: 1, msg: "missing header line".into() })?;
    let mut fields = header.split_whitespace();
    let kind = fields.next().unwrap();
    let parse_num = |line: usize, field: Option<&str>, what: &str| -> Result<usize> {
        field
            .ok_or_else(|| Error::Parse { line, msg: format!("missing {}", what) })?
            .parse()
            .map_err(|_| Error::Parse { line, msg: format!("bad {}", what) })
    };
    let (n, root) = match kind {
        "tree" => (parse_num(header_no, fields.next(), "vertex count")?, None),
        "rtree" => {
            let n = parse_num(header_no, fields.next(), "vertex count")?;
            let root = parse_num(header_no, fields.next(), "root")?;
            (n, Some(root))
        }
        other => {
            return Err(Error::Parse {
                line: header_no,
                msg: format!("expected `tree` or `rtree`, got `{}`", other),
            })
        }
    };
    if fields.next().is_some() {
        return Err(Error::Parse { line: header_no, msg: "trailing fields in header".into() });
    }

    let mut edges = Vec::new();
    let mut last_line = header_no;
    for (line_no, line) in lines {
        if n > 0 && edges.len() == n - 1 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected {} edge lines, found more", n - 1),
            });
        }
        let mut fields = line.split_whitespace();
        let u = parse_num(line_no, fields.next(), "edge endpoint")?;
        let v = parse_num(line_no, fields.next(), "edge endpoint")?;
        if fields.next().is_some() {
            return Err(Error::Parse { line: line_no, msg: "trailing fields in edge line".into() });
        }
        edges.push((u, v));
        last_line = line_no;
    }
    if n == 0 || edges.len() != n - 1 {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header announced {} vertices but {} edges followed", n, edges.len()),
        });
    }

    let tree =
        Tree::new(n, edges).map_err(|e| Error::Parse { line: last_line, msg: e.to_string() })?;
    match root {
        None => Ok(TreeRecord::Free(tree)),
        Some(r) => {
            let rt = RootedTree::new(tree, r)
                .map_err(|e| Error::Parse { line: header_no, msg: e.to_string() })?;
            Ok(TreeRecord::Rooted(rt))
        }
    }
}
