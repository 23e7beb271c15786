//! Polynomial deciders for the three relations, with witness extraction.
//!
//! All deciders run over a rooted host and build models in a normal form
//! where every branch set is a vertical path `[entry ..= low]` whose entry
//! vertex receives the parent attachment and whose low vertex carries the
//! children:
//!
//! * `top(v, x)` — the pattern subtree at `v` fits below host vertex `x`
//!   with `x` the highest vertex of `v`'s branch set.  For embeddings the
//!   set is `{x}` and children match injectively into children of `x`; for
//!   topological minors a child may enter a branch anywhere below it
//!   (`desc`), its set swallowing the approach path; for minors `x` grows
//!   into an arbitrary connected set via `absorb`, which distributes the
//!   children over the branches the set reaches into.
//!
//! An unrooted pattern fits iff `top` succeeds with the host rerooted at
//! the image of the pattern root, so the unrooted deciders try every host
//! vertex as that image.  The rooted deciders keep the host root fixed and
//! try every placement `top(root, x)`; rooted topological minors need one
//! extra configuration, where the root's branch set climbs from its low
//! vertex over an apex so that one child can hang off the far side.  The
//! apex is then the set's minimum, which only the root's set may afford.
//!
//! Ties always break toward ascending vertex ids, so witnesses are
//! deterministic functions of the input.

use std::collections::{BTreeSet, HashMap};

use crate::relations::model::MinorModel;
use crate::relations::ops::RelKind;
use crate::tree::{RootedTree, Tree};

/// Whether `pattern` relates to `host` under `kind`, with a witness.
pub fn decide(pattern: &Tree, host: &Tree, kind: RelKind) -> Option<MinorModel> {
    if pattern.n() > host.n() {
        return None;
    }
    let pat = RootedTree::new(pattern.clone(), 0).expect("vertex 0 exists");
    for s in host.vertices() {
        let hos = RootedTree::new(host.clone(), s).expect("host vertex");
        let mut dp = Dp::new(&pat, &hos, kind);
        if dp.top(0, s) {
            let sets = dp.extract_from(0, s);
            return Some(MinorModel::unrooted(pattern.clone(), host.clone(), sets));
        }
    }
    None
}

/// The rooted variant: branch-set minima must reproduce the pattern's
/// ancestor order against the host's fixed root.
pub fn decide_rooted(pattern: &RootedTree, host: &RootedTree, kind: RelKind) -> Option<MinorModel> {
    if pattern.n() > host.n() {
        return None;
    }
    let mut dp = Dp::new(pattern, host, kind);
    let r = pattern.root();
    for x in 0..host.n() {
        if dp.top(r, x) {
            let sets = dp.extract_from(r, x);
            return Some(MinorModel::rooted(pattern, host, sets));
        }
    }
    if kind == RelKind::TopoMinor {
        if let Some(sets) = dp.root_over_apex() {
            return Some(MinorModel::rooted(pattern, host, sets));
        }
    }
    None
}

/// Witnesses in both directions, or `None` unless both hold.
pub fn decide_mutual(a: &Tree, b: &Tree, kind: RelKind) -> Option<(MinorModel, MinorModel)> {
    if a.n() != b.n() {
        return None;
    }
    Some((decide(a, b, kind)?, decide(b, a, kind)?))
}

pub fn decide_mutual_rooted(
    a: &RootedTree,
    b: &RootedTree,
    kind: RelKind,
) -> Option<(MinorModel, MinorModel)> {
    if a.n() != b.n() {
        return None;
    }
    Some((decide_rooted(a, b, kind)?, decide_rooted(b, a, kind)?))
}

struct Dp<'a> {
    pat: &'a RootedTree,
    host: &'a RootedTree,
    kind: RelKind,
    /// Per pattern vertex, the size of its subtree.
    pat_size: Vec<usize>,
    /// Per host vertex, its subtree's vertices in ascending order.
    subtree: Vec<Vec<usize>>,
    top_memo: HashMap<(usize, usize), bool>,
    desc_memo: HashMap<(usize, usize), bool>,
    absorb_memo: HashMap<(usize, usize, u32), bool>,
}

impl<'a> Dp<'a> {
    fn new(pat: &'a RootedTree, host: &'a RootedTree, kind: RelKind) -> Self {
        let pat_size = (0..pat.n()).map(|v| pat.subtree_vertices(v).len()).collect();
        let subtree = (0..host.n()).map(|x| host.subtree_vertices(x)).collect();
        Dp {
            pat,
            host,
            kind,
            pat_size,
            subtree,
            top_memo: HashMap::new(),
            desc_memo: HashMap::new(),
            absorb_memo: HashMap::new(),
        }
    }

    /// Can the pattern subtree at `v` sit below `x` with `x` topping `v`'s set?
    fn top(&mut self, v: usize, x: usize) -> bool {
        if let Some(&hit) = self.top_memo.get(&(v, x)) {
            return hit;
        }
        // Cheap necessary bound: the host subtree must be large enough.
        let result = if self.pat_size[v] > self.subtree[x].len() {
            false
        } else {
            match self.kind {
                RelKind::Minor => {
                    let mask = full_mask(self.pat.children(v).len());
                    self.absorb(v, x, mask)
                }
                RelKind::Embed | RelKind::TopoMinor => self.match_children(v, x).is_some(),
            }
        };
        self.top_memo.insert((v, x), result);
        result
    }

    /// Does the subtree at `w` fit somewhere inside the host branch at `c`?
    fn desc(&mut self, w: usize, c: usize) -> bool {
        if let Some(&hit) = self.desc_memo.get(&(w, c)) {
            return hit;
        }
        let candidates = self.subtree[c].clone();
        let result = candidates.into_iter().any(|y| self.top(w, y));
        self.desc_memo.insert((w, c), result);
        result
    }

    fn child_edge(&mut self, w: usize, c: usize) -> bool {
        match self.kind {
            RelKind::Embed => self.top(w, c),
            RelKind::TopoMinor => self.desc(w, c),
            RelKind::Minor => unreachable!("minors distribute children via absorb"),
        }
    }

    /// An injective assignment of `v`'s children to distinct host children
    /// of `x`, as `(pattern child, host child)` pairs.
    fn match_children(&mut self, v: usize, x: usize) -> Option<Vec<(usize, usize)>> {
        let ws: Vec<usize> = self.pat.children(v).to_vec();
        let cs: Vec<usize> = self.host.children(x).to_vec();
        let edges: Vec<Vec<bool>> =
            ws.iter().map(|&w| cs.iter().map(|&c| self.child_edge(w, c)).collect()).collect();
        let assign = perfect_matching(&edges, cs.len())?;
        Some(assign.into_iter().enumerate().map(|(i, j)| (ws[i], cs[j])).collect())
    }

    /// Minor state: `x` joins `v`'s branch set; the children of `v` listed
    /// in `mask` still need homes in the branches below `x`.
    fn absorb(&mut self, v: usize, x: usize, mask: u32) -> bool {
        if mask == 0 {
            return true;
        }
        if let Some(&hit) = self.absorb_memo.get(&(v, x, mask)) {
            return hit;
        }
        let result = self.cover_stages(v, x, mask).last().unwrap()[mask as usize];
        self.absorb_memo.insert((v, x, mask), result);
        result
    }

    /// `stages[i][m]`: the first `i` host branches below `x` can host the
    /// child subset `m`.  One branch takes one child at its head (`top`),
    /// or is absorbed deeper to host any subset (`absorb`).
    fn cover_stages(&mut self, v: usize, x: usize, mask: u32) -> Vec<Vec<bool>> {
        let branches: Vec<usize> = self.host.children(x).to_vec();
        let mut cur = vec![false; mask as usize + 1];
        cur[0] = true;
        let mut stages = vec![cur.clone()];
        for &c in &branches {
            let mut next = cur.clone();
            let mut m = mask;
            loop {
                if cur[m as usize] {
                    let rem = mask & !m;
                    let mut sub = rem;
                    while sub > 0 {
                        if !next[(m | sub) as usize] && self.branch_hosts(v, c, sub) {
                            next[(m | sub) as usize] = true;
                        }
                        sub = (sub - 1) & rem;
                    }
                }
                if m == 0 {
                    break;
                }
                m = (m - 1) & mask;
            }
            cur = next;
            stages.push(cur.clone());
        }
        stages
    }

    /// Can the single host branch at `c` host exactly the children in `sub`?
    fn branch_hosts(&mut self, v: usize, c: usize, sub: u32) -> bool {
        if sub.count_ones() == 1 {
            let w = self.pat.children(v)[sub.trailing_zeros() as usize];
            if self.top(w, c) {
                return true;
            }
        }
        self.absorb(v, c, sub)
    }

    /// Root placement for rooted topological minors where no flat placement
    /// exists: the root's set is the vertical chain from a low vertex up to
    /// an apex, all children but one hang below the low vertex, and the
    /// leftover child hangs off another branch of the apex.
    fn root_over_apex(&mut self) -> Option<Vec<BTreeSet<usize>>> {
        let r = self.pat.root();
        let kids: Vec<usize> = self.pat.children(r).to_vec();
        if kids.is_empty() {
            return None;
        }
        for apex in 0..self.host.n() {
            let branches: Vec<usize> = self.host.children(apex).to_vec();
            for &head in &branches {
                for low in self.subtree[head].clone() {
                    for (ui, &w_up) in kids.iter().enumerate() {
                        let side =
                            branches.iter().copied().find(|&c| c != head && self.desc(w_up, c));
                        let Some(side) = side else { continue };
                        let rest: Vec<usize> = kids
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != ui)
                            .map(|(_, &w)| w)
                            .collect();
                        let cs: Vec<usize> = self.host.children(low).to_vec();
                        let edges: Vec<Vec<bool>> = rest
                            .iter()
                            .map(|&w| cs.iter().map(|&c| self.desc(w, c)).collect())
                            .collect();
                        let Some(assign) = perfect_matching(&edges, cs.len()) else {
                            continue;
                        };
                        let mut sets = vec![BTreeSet::new(); self.pat.n()];
                        sets[r] = self.vertical_path(apex, low);
                        self.extract_entered(w_up, side, &mut sets);
                        for (i, j) in assign.into_iter().enumerate() {
                            self.extract_entered(rest[i], cs[j], &mut sets);
                        }
                        return Some(sets);
                    }
                }
            }
        }
        None
    }

    /// Rebuilds the witness below a positive `top(v, x)` decision.
    fn extract_from(&mut self, v: usize, x: usize) -> Vec<BTreeSet<usize>> {
        let mut sets = vec![BTreeSet::new(); self.pat.n()];
        match self.kind {
            RelKind::Minor => self.extract_minor(v, x, &mut sets),
            RelKind::Embed | RelKind::TopoMinor => self.extract_lean(v, x, x, &mut sets),
        }
        sets
    }

    /// Lean extraction: `v`'s set is the vertical path from `entry` down to
    /// `x`, and each child continues from its matched branch head.
    fn extract_lean(&mut self, v: usize, entry: usize, x: usize, sets: &mut Vec<BTreeSet<usize>>) {
        sets[v] = self.vertical_path(entry, x);
        let pairs = self.match_children(v, x).expect("extraction follows a yes");
        for (w, c) in pairs {
            match self.kind {
                RelKind::Embed => self.extract_lean(w, c, c, sets),
                RelKind::TopoMinor => self.extract_entered(w, c, sets),
                RelKind::Minor => unreachable!(),
            }
        }
    }

    /// Places `w` inside the branch at `c`, choosing the lowest-numbered
    /// landing vertex.
    fn extract_entered(&mut self, w: usize, c: usize, sets: &mut Vec<BTreeSet<usize>>) {
        let y = self.subtree[c]
            .clone()
            .into_iter()
            .find(|&y| self.top(w, y))
            .expect("desc promised a landing vertex");
        match self.kind {
            RelKind::Minor => unreachable!(),
            RelKind::Embed | RelKind::TopoMinor => self.extract_lean(w, c, y, sets),
        }
    }

    fn extract_minor(&mut self, v: usize, x: usize, sets: &mut Vec<BTreeSet<usize>>) {
        sets[v].insert(x);
        let mask = full_mask(self.pat.children(v).len());
        self.place_minor_children(v, x, mask, sets);
    }

    /// Walks the cover stages backwards, assigning each branch the smallest
    /// child subset that keeps the rest feasible.
    fn place_minor_children(
        &mut self,
        v: usize,
        x: usize,
        mask: u32,
        sets: &mut Vec<BTreeSet<usize>>,
    ) {
        if mask == 0 {
            return;
        }
        let stages = self.cover_stages(v, x, mask);
        let branches: Vec<usize> = self.host.children(x).to_vec();
        let mut need = mask;
        for i in (0..branches.len()).rev() {
            let c = branches[i];
            let mut chosen = None;
            let mut sub = 0u32;
            loop {
                let ok =
                    stages[i][(need & !sub) as usize] && (sub == 0 || self.branch_hosts(v, c, sub));
                if ok {
                    chosen = Some(sub);
                    break;
                }
                if sub == need {
                    break;
                }
                sub = sub.wrapping_sub(need) & need;
            }
            let sub = chosen.expect("stages promised a feasible split");
            if sub != 0 {
                let single = (sub.count_ones() == 1)
                    .then(|| self.pat.children(v)[sub.trailing_zeros() as usize]);
                match single {
                    Some(w) if self.top(w, c) => self.extract_minor(w, c, sets),
                    _ => {
                        sets[v].insert(c);
                        self.place_minor_children(v, c, sub, sets);
                    }
                }
            }
            need &= !sub;
        }
        debug_assert_eq!(need, 0, "every child found a branch");
    }

    /// Host vertices on the vertical path from `hi` down to `lo`, inclusive.
    fn vertical_path(&self, hi: usize, lo: usize) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([lo]);
        let mut cur = lo;
        while cur != hi {
            cur = self.host.parent(cur).expect("hi lies above lo");
            set.insert(cur);
        }
        set
    }
}

fn full_mask(k: usize) -> u32 {
    assert!(k < 32, "pattern degrees beyond 31 are not supported");
    (1u32 << k) - 1
}

/// Kuhn's augmenting-path matching over an explicit edge matrix; returns a
/// full left-to-right assignment if one exists, preferring low indices.
fn perfect_matching(edges: &[Vec<bool>], right: usize) -> Option<Vec<usize>> {
    let left = edges.len();
    if left > right {
        return None;
    }
    let mut owner: Vec<Option<usize>> = vec![None; right];
    fn augment(
        i: usize,
        edges: &[Vec<bool>],
        owner: &mut Vec<Option<usize>>,
        tried: &mut Vec<bool>,
    ) -> bool {
        for j in 0..owner.len() {
            if edges[i][j] && !tried[j] {
                tried[j] = true;
                if owner[j].is_none() || augment(owner[j].unwrap(), edges, owner, tried) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    for i in 0..left {
        let mut tried = vec![false; right];
        if !augment(i, edges, &mut owner, &mut tried) {
            return None;
        }
    }
    let mut assign = vec![usize::MAX; left];
    for (j, &o) in owner.iter().enumerate() {
        if let Some(i) = o {
            assign[i] = j;
        }
    }
    Some(assign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::model::{check_model, check_shape};

    fn tree(n: usize, edges: &[(usize, usize)]) -> Tree {
        Tree::new(n, edges.iter().copied()).unwrap()
    }

    fn path(n: usize) -> Tree {
        Tree::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn assert_valid(m: &MinorModel, kind: RelKind) {
        assert_eq!(check_model(m), Ok(()), "{:?} witness must satisfy the model conditions", kind);
        assert_eq!(check_shape(m, kind), Ok(()), "{:?} witness must satisfy its shape", kind);
    }

    #[test]
    fn paths_nest_and_stars_do_not_fit_in_paths() {
        let k13 = tree(4, &[(0, 1), (0, 2), (0, 3)]);
        for kind in RelKind::ALL {
            let m = decide(&path(2), &path(4), kind).expect("P2 fits in P4");
            assert_valid(&m, kind);
            assert!(decide(&path(4), &path(2), kind).is_none());
            assert!(decide(&k13, &path(4), kind).is_none(), "{:?}", kind);
            assert!(decide(&path(4), &k13, kind).is_none(), "{:?}", kind);
        }
    }

    #[test]
    fn a_squashed_star_is_a_minor_but_no_deeper_relation_holds() {
        // Double broom: 1-0-2 spine, leaves 3,4 at 1 and 5,6 at 2.  Its only
        // degree-4 vertex arises by contracting the spine, so K1,4 is a
        // minor but not a topological minor.
        let k14 = tree(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let broom = tree(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]);
        let m = decide(&k14, &broom, RelKind::Minor).expect("contract the spine");
        assert_valid(&m, RelKind::Minor);
        assert!(decide(&k14, &broom, RelKind::TopoMinor).is_none());
        assert!(decide(&k14, &broom, RelKind::Embed).is_none());
    }

    #[test]
    fn a_subdivided_edge_separates_embedding_from_topological_minor() {
        // Double star with hubs 0, 3; host subdivides the hub-hub edge.
        let pat = tree(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]);
        let host = tree(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]);
        assert!(decide(&pat, &host, RelKind::Embed).is_none());
        let t = decide(&pat, &host, RelKind::TopoMinor).expect("dissolve the middle");
        assert_valid(&t, RelKind::TopoMinor);
        let m = decide(&pat, &host, RelKind::Minor).expect("minors subsume");
        assert_valid(&m, RelKind::Minor);
    }

    #[test]
    fn embeddings_are_witnessed_by_singleton_sets() {
        let spider = tree(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let k13 = tree(4, &[(0, 1), (0, 2), (0, 3)]);
        let m = decide(&k13, &spider, RelKind::Embed).expect("prefix of each leg");
        assert_valid(&m, RelKind::Embed);
        assert!(m.branch_sets().iter().all(|s| s.len() == 1));
    }

    #[test]
    fn rooting_can_break_an_unrooted_yes() {
        let p3 = path(3);
        assert!(decide(&p3, &p3, RelKind::Embed).is_some());
        let end = RootedTree::new(p3.clone(), 0).unwrap();
        let mid = RootedTree::new(p3, 1).unwrap();
        for kind in RelKind::ALL {
            assert!(decide_rooted(&end, &mid, kind).is_none(), "{:?}", kind);
            let m = decide_rooted(&mid, &mid, kind).expect("identity placement");
            assert_valid(&m, kind);
        }
    }

    #[test]
    fn rooted_witnesses_satisfy_the_order_condition() {
        // P2 under every rooting of P4: the child's set must sit below the
        // root image's set.
        let p2 = RootedTree::new(path(2), 0).unwrap();
        for root in 0..4 {
            let host = RootedTree::new(path(4), root).unwrap();
            for kind in RelKind::ALL {
                let m = decide_rooted(&p2, &host, kind).expect("an edge fits anywhere");
                assert_valid(&m, kind);
            }
        }
    }

    #[test]
    fn the_root_set_may_climb_over_the_host_root() {
        // Host rooted at 0: the chain 0-1-2 reaches a vertex with three
        // branches, and 0 carries one more branch of its own.  No vertex
        // has four child branches, so the fourth leaf of K1,4 can only be
        // served by running the root's set up through 0.
        let host_tree = tree(9, &[(0, 1), (1, 2), (2, 3), (2, 4), (2, 5), (0, 6), (5, 7), (6, 8)]);
        let host = RootedTree::new(host_tree, 0).unwrap();
        let k14 = RootedTree::new(tree(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]), 0).unwrap();
        assert!(decide_rooted(&k14, &host, RelKind::Embed).is_none());
        assert!(decide_rooted(&k14, &host, RelKind::Minor).is_some());
        let m = decide_rooted(&k14, &host, RelKind::TopoMinor)
            .expect("three children below 2, one over the apex");
        assert_valid(&m, RelKind::TopoMinor);
        // The root's set must reach the host root to pull this off.
        assert!(m.branch_set(0).contains(&0));
    }

    #[test]
    fn mutual_containment_needs_equal_sizes_and_isomorphy() {
        let a = tree(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]);
        let b = tree(5, &[(4, 3), (3, 1), (1, 0), (1, 2)]);
        for kind in RelKind::ALL {
            let (ab, ba) = decide_mutual(&a, &b, kind).expect("relabelled twins");
            assert_valid(&ab, kind);
            assert_valid(&ba, kind);
        }
        assert!(decide_mutual(&a, &path(5), RelKind::Minor).is_none());
        assert!(decide_mutual(&a, &path(6), RelKind::Minor).is_none());
    }
}
