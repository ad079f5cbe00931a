use super::scope::declaration_of;
use super::{DiffContext, PatternId, PatternInstance};
use crate::ast::{Ast, NodeId, NodeKind};

/// The variable compared against `null`: `v`, `this.v`, or the receiver of
/// `v.call()`.
fn checked_variable(ast: &Ast, operand: NodeId) -> Option<NodeId> {
    match ast.kind(operand) {
        NodeKind::VariableRead if !matches!(ast.label(operand), "" | "this" | "super") => {
            Some(operand)
        }
        NodeKind::FieldAccess => Some(operand),
        NodeKind::MethodCall => {
            let r = ast.child(operand, 0)?;
            match ast.kind(r) {
                NodeKind::VariableRead if !matches!(ast.label(r), "" | "this" | "super") => Some(r),
                NodeKind::FieldAccess => Some(r),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Code whose execution depends on the condition containing `check`.
fn guarded_region(ast: &Ast, check: NodeId) -> Vec<NodeId> {
    let mut child = check;
    for anc in ast.ancestors(check) {
        let kind = ast.kind(anc);
        match kind {
            NodeKind::If | NodeKind::Ternary | NodeKind::WhileLoop => {
                return if ast.position(child) == Some(0) {
                    ast.children(anc)[1..].to_vec()
                } else {
                    Vec::new()
                };
            }
            NodeKind::ForLoop => {
                let body = ast.children(anc).last().copied();
                return match body {
                    Some(b) if b != child => vec![b],
                    _ => Vec::new(),
                };
            }
            _ if kind.is_expression() => child = anc,
            _ => return Vec::new(),
        }
    }
    Vec::new()
}

/// Added comparisons against `null` on variables that existed before the
/// patch, or on new variables whose check guards existing code.
pub fn detect_missing_null_check(ctx: &DiffContext) -> Vec<PatternInstance> {
    let ast = &ctx.after;
    let mut out = Vec::new();
    for id in ast.ids() {
        if ast.kind(id) != NodeKind::BinaryOp || !ctx.is_inserted(id) {
            continue;
        }
        let polarity = match ast.label(id) {
            "==" => PatternId::MissNullCheckPositive,
            "!=" => PatternId::MissNullCheckNegative,
            _ => continue,
        };
        let &[l, r] = ast.children(id) else {
            continue;
        };
        let other = match (ast.kind(l), ast.kind(r)) {
            (NodeKind::LiteralNull, NodeKind::LiteralNull) => continue,
            (NodeKind::LiteralNull, _) => r,
            (_, NodeKind::LiteralNull) => l,
            _ => continue,
        };
        let Some(var) = checked_variable(ast, other) else {
            continue;
        };
        let is_new = match declaration_of(ast, var) {
            Some(decl) => ctx.is_inserted(decl),
            // Fields reached through other receivers and unresolved names are
            // taken to exist outside the patch.
            None => false,
        };
        let counts = !is_new
            || guarded_region(ast, id)
                .into_iter()
                .any(|g| ctx.has_mapped_in_after(g));
        if counts {
            out.push(
                PatternInstance::new(polarity, vec![ctx.after_anchor(id)])
                    .with_note(ast.label(var)),
            );
        }
    }
    out
}
