//! The three containment relations: local operations, branch-set models,
//! polynomial deciders, and brute-force cross-checks.

pub mod decide;
pub mod model;
pub mod ops;
pub mod oracle;
pub mod self_models;
