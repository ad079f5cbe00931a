use std::collections::BTreeSet;

use super::{Anchor, DiffContext, PatternId, PatternInstance, Side};
use crate::ast::{Ast, NodeId, NodeKind, SourceSpan};
use crate::diff::EditAction;

fn update_lines(ast: &Ast, node: NodeId) -> Vec<u32> {
    let span = ast.span(node);
    if ast.children(node).is_empty() {
        span.lines().collect()
    } else {
        vec![span.start_line]
    }
}

fn enclosing_simple_statement(ast: &Ast, node: NodeId) -> Option<NodeId> {
    std::iter::once(node)
        .chain(ast.ancestors(node))
        .find(|&n| ast.kind(n).is_simple_statement())
}

/// A change confined to one physical line, or to one simple statement.
/// Relocating a whole statement is not a one-line change.
pub fn detect_single_line(ctx: &DiffContext) -> Vec<PatternInstance> {
    if ctx.script.is_empty() {
        return Vec::new();
    }
    let moves_statement = ctx.script.iter().any(|a| {
        matches!(a, EditAction::Move { kind, .. } if kind.is_statement() && *kind != NodeKind::Block)
    });
    if moves_statement {
        return Vec::new();
    }
    let first = ctx.script.actions.first().map(anchor_of).unwrap();
    if one_line_each(ctx) || one_statement(ctx) {
        vec![PatternInstance::new(PatternId::SingleLine, vec![first])]
    } else {
        Vec::new()
    }
}

fn anchor_of(action: &EditAction) -> Anchor {
    let (side, span): (Side, &SourceSpan) = match action.before_span() {
        Some(s) => (Side::Before, s),
        None => (Side::After, action.after_span().unwrap()),
    };
    Anchor {
        side,
        span: span.clone(),
    }
}

fn one_line_each(ctx: &DiffContext) -> bool {
    let mut before = BTreeSet::new();
    let mut after = BTreeSet::new();
    for action in &ctx.script {
        match action {
            EditAction::Insert { node, .. } => after.extend(ctx.after.span(*node).lines()),
            EditAction::Delete { node, .. } => before.extend(ctx.before.span(*node).lines()),
            EditAction::Update { node, after: a, .. } => {
                before.extend(update_lines(&ctx.before, *node));
                after.extend(update_lines(&ctx.after, *a));
            }
            EditAction::Move { node, after: a, .. } => {
                before.extend(ctx.before.span(*node).lines());
                after.extend(ctx.after.span(*a).lines());
            }
        }
        if before.len() > 1 || after.len() > 1 {
            return false;
        }
    }
    true
}

fn one_statement(ctx: &DiffContext) -> bool {
    let mut before = BTreeSet::new();
    let mut after = BTreeSet::new();
    for action in &ctx.script {
        if let Some(b) = action.before_node() {
            match enclosing_simple_statement(&ctx.before, b) {
                Some(s) => before.insert(s),
                None => return false,
            };
        }
        if let Some(a) = action.after_node() {
            match enclosing_simple_statement(&ctx.after, a) {
                Some(s) => after.insert(s),
                None => return false,
            };
        }
    }
    if before.len() > 1 || after.len() > 1 {
        return false;
    }
    match (before.first(), after.first()) {
        (Some(&b), Some(&a)) => ctx.mapping.has(b, a),
        _ => true,
    }
}
