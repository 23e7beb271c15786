//! Building trees: fixed families, exhaustive enumeration, and root-level
//! grafting surgery.

pub mod enumerate;
pub mod gen;
pub mod graft;
