//! The local operations that generate the containment relations, and the
//! relation kinds themselves.
//!
//! Each operation takes a tree to a strictly smaller tree or fails: removing
//! an edge of a tree always disconnects it, removing a vertex disconnects
//! unless it is a leaf, and dissolving requires degree exactly 2.  Surviving
//! vertices are relabeled down to a contiguous range; the returned map sends
//! new labels to old ones, and a contracted edge survives as its smaller
//! endpoint.

use crate::error::{Error, Result};
use crate::tree::Tree;

/// The four operation kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpKind {
    EdgeRemoval,
    EdgeContraction,
    VertexRemoval,
    Deg2Dissolution,
}

/// One concrete operation against named vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpStep {
    RemoveEdge { u: usize, v: usize },
    ContractEdge { u: usize, v: usize },
    RemoveVertex { v: usize },
    DissolveVertex { v: usize },
}

impl OpStep {
    pub fn kind(&self) -> OpKind {
        match self {
            OpStep::RemoveEdge { .. } => OpKind::EdgeRemoval,
            OpStep::ContractEdge { .. } => OpKind::EdgeContraction,
            OpStep::RemoveVertex { .. } => OpKind::VertexRemoval,
            OpStep::DissolveVertex { .. } => OpKind::Deg2Dissolution,
        }
    }
}

/// Applies one operation, returning the smaller tree and the new-to-old
/// label map.
pub fn apply_op(t: &Tree, step: OpStep) -> Result<(Tree, Vec<usize>)> {
    match step {
        OpStep::RemoveEdge { u, v } => {
            if !t.has_edge(u, v) {
                return Err(Error::MissingTarget(format!("edge {} {}", u, v)));
            }
            Err(Error::WouldDisconnect(format!(
                "every edge of a tree is a bridge, so removing edge {} {} splits it",
                u, v
            )))
        }
        OpStep::ContractEdge { u, v } => {
            if !t.has_edge(u, v) {
                return Err(Error::MissingTarget(format!("edge {} {}", u, v)));
            }
            let keep = u.min(v);
            let drop = u.max(v);
            let new_to_old = drop_label(t.n(), drop);
            let old_to_new = invert(t.n(), &new_to_old);
            let edges = t.edges().iter().filter_map(|&(a, b)| {
                let a = if a == drop { keep } else { a };
                let b = if b == drop { keep } else { b };
                (a != b).then(|| (old_to_new[a], old_to_new[b]))
            });
            Ok((Tree::new(t.n() - 1, edges)?, new_to_old))
        }
        OpStep::RemoveVertex { v } => {
            if v >= t.n() {
                return Err(Error::MissingTarget(format!("vertex {}", v)));
            }
            if t.n() == 1 {
                return Err(Error::WouldDisconnect(
                    "removing the only vertex leaves nothing".into(),
                ));
            }
            if t.degree(v) > 1 {
                return Err(Error::WouldDisconnect(format!(
                    "vertex {} has degree {}, only leaves can go",
                    v,
                    t.degree(v)
                )));
            }
            let new_to_old = drop_label(t.n(), v);
            let old_to_new = invert(t.n(), &new_to_old);
            let edges = t
                .edges()
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| (old_to_new[a], old_to_new[b]));
            Ok((Tree::new(t.n() - 1, edges)?, new_to_old))
        }
        OpStep::DissolveVertex { v } => {
            if v >= t.n() {
                return Err(Error::MissingTarget(format!("vertex {}", v)));
            }
            if t.degree(v) != 2 {
                return Err(Error::NotDegree2 { vertex: v, degree: t.degree(v) });
            }
            let (a, b) = (t.neighbors(v)[0], t.neighbors(v)[1]);
            let new_to_old = drop_label(t.n(), v);
            let old_to_new = invert(t.n(), &new_to_old);
            let edges = t
                .edges()
                .iter()
                .filter(|&&(x, y)| x != v && y != v)
                .map(|&(x, y)| (old_to_new[x], old_to_new[y]))
                .chain([(old_to_new[a], old_to_new[b])]);
            Ok((Tree::new(t.n() - 1, edges)?, new_to_old))
        }
    }
}

/// New-to-old map after deleting label `drop` and closing the gap.
fn drop_label(n: usize, drop: usize) -> Vec<usize> {
    (0..n - 1).map(|x| if x < drop { x } else { x + 1 }).collect()
}

fn invert(n: usize, new_to_old: &[usize]) -> Vec<usize> {
    let mut old_to_new = vec![usize::MAX; n];
    for (new, &old) in new_to_old.iter().enumerate() {
        old_to_new[old] = new;
    }
    old_to_new
}

/// The three containment relations, ordered from finest to coarsest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelKind {
    Embed,
    TopoMinor,
    Minor,
}

impl RelKind {
    pub const ALL: [RelKind; 3] = [RelKind::Embed, RelKind::TopoMinor, RelKind::Minor];

    /// Which operations may shrink a host under this relation.
    pub fn allowed_ops(self) -> &'static [OpKind] {
        match self {
            RelKind::Embed => &[OpKind::EdgeRemoval, OpKind::VertexRemoval],
            RelKind::TopoMinor => {
                &[OpKind::EdgeRemoval, OpKind::VertexRemoval, OpKind::Deg2Dissolution]
            }
            RelKind::Minor => {
                &[OpKind::EdgeRemoval, OpKind::EdgeContraction, OpKind::VertexRemoval]
            }
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RelKind::Embed => "embed",
            RelKind::TopoMinor => "topo",
            RelKind::Minor => "minor",
        }
    }
}

impl std::str::FromStr for RelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "embed" => Ok(RelKind::Embed),
            "topo" => Ok(RelKind::TopoMinor),
            "minor" => Ok(RelKind::Minor),
            other => Err(Error::BadParams(format!(
                "unknown relation `{}` (expected embed, topo, or minor)",
                other
            ))),
        }
    }
}

impl std::fmt::Display for RelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A relation kind together with whether roots are respected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RelationKind {
    pub kind: RelKind,
    pub rooted: bool,
}
