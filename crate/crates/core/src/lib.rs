//! Deciders, witnesses, and exhaustive certification for containment
//! relations on finite trees.
//!
//! Three relations are covered, each generated by a set of local
//! operations on the host:
//!
//! * embedding — vertex removal (subtree containment),
//! * topological minor — vertex removal and dissolution of degree-2
//!   vertices,
//! * minor — vertex removal and edge contraction.
//!
//! Each relation comes in an unrooted and a rooted variant; the rooted
//! variant asks the branch-set minima to reproduce the pattern's ancestor
//! order.  The crate provides polynomial deciders that emit checkable
//! branch-set witnesses ([`decide`], [`decide_rooted`]), an independent
//! witness checker ([`check_model`], [`check_shape`]), a brute-force
//! operation-search oracle ([`oracle_reachable`]), exhaustive enumeration
//! of small trees ([`enumerate_free_trees`]), and an atlas sweep
//! ([`run_atlas`]) that certifies the expected structural facts over all
//! small trees by exhaustion.

pub mod atlas;
pub mod autom;
pub mod canon;
pub mod constructions;
pub mod error;
pub mod relations;
pub mod tree;

pub use atlas::{run_atlas, AtlasConfig, AtlasReport, CheckSummary, ClassCount, ViolationRecord};
pub use autom::{automorphisms, rooted_isomorphisms};
pub use canon::{free_code, is_isomorphic, is_rooted_isomorphic, rooted_code, CanonicalCode};
pub use constructions::enumerate::{
    enumerate_free_trees, enumerate_rooted_trees, DEFAULT_ENUM_CAP,
};
pub use constructions::gen::{caterpillar, path, random_pruefer, spider, star};
pub use constructions::graft::{
    attach_copies, child_type_multiset, replace_child_subtree, ChildTypeMultiset,
};
pub use error::{Error, Result};
pub use relations::decide::{decide, decide_mutual, decide_mutual_rooted, decide_rooted};
pub use relations::model::{
    check_model, check_shape, compose_models, MinorModel, ModelViolation, WitnessJson,
};
pub use relations::ops::{apply_op, OpKind, OpStep, RelKind, RelationKind};
pub use relations::oracle::{oracle_reachable, DEFAULT_ORACLE_CAP};
pub use relations::self_models::enumerate_self_models;
pub use tree::{parse_tree_text, FixedElement, RootedTree, Tree, TreeRecord};
