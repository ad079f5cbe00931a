//! Lexical name lookup over a single tree. There is no type information; a
//! name resolves to the nearest declaration visible at a node.

use crate::ast::{Ast, NodeId, NodeKind};

/// Declaration (`VarDecl`, `Parameter`, `FieldDecl`, `CatchClause`) of `name`
/// visible at `at`, if any.
pub fn resolve(ast: &Ast, at: NodeId, name: &str) -> Option<NodeId> {
    if name.is_empty() {
        return None;
    }
    let mut cur = at;
    for anc in ast.ancestors(at) {
        match ast.kind(anc) {
            NodeKind::Block => {
                let upto = ast.position(cur).unwrap_or(0);
                let found = ast.children(anc)[..upto]
                    .iter()
                    .rev()
                    .find(|&&c| ast.kind(c) == NodeKind::VarDecl && ast.label(c) == name);
                if let Some(&d) = found {
                    return Some(d);
                }
            }
            NodeKind::ForLoop => {
                let found = ast
                    .children(anc)
                    .iter()
                    .find(|&&c| ast.kind(c) == NodeKind::VarDecl && ast.label(c) == name);
                if let Some(&d) = found {
                    return Some(d);
                }
            }
            NodeKind::CatchClause if ast.label(anc) == name => return Some(anc),
            NodeKind::MethodDecl => {
                let found = ast
                    .children(anc)
                    .iter()
                    .find(|&&c| ast.kind(c) == NodeKind::Parameter && ast.label(c) == name);
                if let Some(&d) = found {
                    return Some(d);
                }
            }
            NodeKind::ClassDecl => return field(ast, anc, name),
            _ => {}
        }
        cur = anc;
    }
    None
}

fn field(ast: &Ast, class: NodeId, name: &str) -> Option<NodeId> {
    ast.children(class)
        .iter()
        .copied()
        .find(|&c| ast.kind(c) == NodeKind::FieldDecl && ast.label(c) == name)
}

/// Field of the class enclosing `at`.
pub fn resolve_field(ast: &Ast, at: NodeId, name: &str) -> Option<NodeId> {
    let class = ast.enclosing(at, |k| k == NodeKind::ClassDecl)?;
    field(ast, class, name)
}

/// `this.x` / `super.x` style access.
pub fn is_self_access(ast: &Ast, node: NodeId) -> bool {
    ast.kind(node) == NodeKind::FieldAccess
        && ast.child(node, 0).is_some_and(|r| {
            ast.kind(r) == NodeKind::VariableRead && matches!(ast.label(r), "this" | "super")
        })
}

/// Declaration a `VariableRead` or self `FieldAccess` refers to.
pub fn declaration_of(ast: &Ast, node: NodeId) -> Option<NodeId> {
    match ast.kind(node) {
        NodeKind::VariableRead => resolve(ast, node, ast.label(node)),
        NodeKind::FieldAccess if is_self_access(ast, node) => {
            resolve_field(ast, node, ast.label(node))
        }
        _ => None,
    }
}

/// All-uppercase identifier such as `MAX_SIZE`.
pub fn is_constant_name(name: &str) -> bool {
    name.chars().any(|c| c.is_ascii_uppercase())
        && name
            .chars()
            .all(|c| c.is_ascii_uppercase() || c.is_ascii_digit() || c == '_')
}

fn is_constant_field(ast: &Ast, decl: NodeId) -> bool {
    let mut modifiers = ast
        .children(decl)
        .iter()
        .filter(|&&c| ast.kind(c) == NodeKind::Modifier)
        .peekable();
    if modifiers.peek().is_none() {
        return is_constant_name(ast.label(decl));
    }
    modifiers.any(|&m| ast.label(m) == "final")
}

/// Whether a `VariableRead` / `FieldAccess` names a constant: a field that is
/// `final`, or unmodified and all-uppercase. Unresolvable names fall back to
/// the uppercase convention.
pub fn is_constant_ref(ast: &Ast, node: NodeId) -> bool {
    let kind = ast.kind(node);
    if !matches!(kind, NodeKind::VariableRead | NodeKind::FieldAccess) {
        return false;
    }
    let name = ast.label(node);
    if kind == NodeKind::VariableRead && matches!(name, "" | "this" | "super") {
        return false;
    }
    match declaration_of(ast, node) {
        Some(d) if ast.kind(d) == NodeKind::FieldDecl => is_constant_field(ast, d),
        Some(_) => false,
        None => is_constant_name(name),
    }
}

/// Literal or constant reference.
pub fn is_constant_like(ast: &Ast, node: NodeId) -> bool {
    ast.kind(node).is_literal() || is_constant_ref(ast, node)
}

pub fn declares_method(ast: &Ast, name: &str) -> bool {
    ast.ids()
        .any(|id| ast.kind(id) == NodeKind::MethodDecl && ast.label(id) == name)
}
