//! Patch analysis over Java-like sources: parse buggy and patched files,
//! compute an AST edit script between them, and detect repair patterns in the
//! resulting change.

pub mod ast;
pub mod cli;
pub mod detect;
pub mod diff;
pub mod harness;
pub mod parser;
