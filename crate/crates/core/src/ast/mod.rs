//! Typed syntax trees for the analyzed language subset.

mod kind;
pub mod print;
mod span;
mod tree;

pub use kind::{NodeKind, UnknownKind};
pub use span::SourceSpan;
pub use tree::{combine_hash, isomorphic, Ast, AstBuilder, BuildId, Node, NodeId};
