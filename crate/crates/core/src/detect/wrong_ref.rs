use super::scope::{declaration_of, declares_method, is_constant_ref};
use super::{DiffContext, PatternId, PatternInstance};
use crate::ast::{Ast, NodeId, NodeKind};
use crate::diff::EditAction;

fn is_declared(ast: &Ast, node: NodeId) -> bool {
    declaration_of(ast, node).is_some()
}

fn implicit_or_self(ast: &Ast, receiver: NodeId) -> bool {
    ast.kind(receiver) == NodeKind::VariableRead && matches!(ast.label(receiver), "" | "this")
}

/// A reference replaced by another declared one: variables via scope lookup,
/// methods via declarations in the file (or any name on an external receiver).
pub fn detect_wrong_reference(ctx: &DiffContext) -> Vec<PatternInstance> {
    let mut out = Vec::new();
    for action in &ctx.script {
        let EditAction::Update {
            node: b,
            after: a,
            kind,
            old_label,
            new_label,
            ..
        } = action
        else {
            continue;
        };
        let (b, a) = (*b, *a);
        match kind {
            NodeKind::VariableRead | NodeKind::FieldAccess => {
                if is_constant_ref(&ctx.before, b) || is_constant_ref(&ctx.after, a) {
                    continue;
                }
                // The old name must still exist afterwards; otherwise this is
                // a rename, not a different reference.
                let old_still_declared = match kind {
                    NodeKind::VariableRead => {
                        super::scope::resolve(&ctx.after, a, old_label).is_some()
                    }
                    _ => super::scope::resolve_field(&ctx.after, a, old_label).is_some(),
                };
                if is_declared(&ctx.before, b) && is_declared(&ctx.after, a) && old_still_declared {
                    out.push(
                        PatternInstance::new(
                            PatternId::WrongVarRef,
                            vec![ctx.before_anchor(b), ctx.after_anchor(a)],
                        )
                        .with_note(format!("{old_label} -> {new_label}")),
                    );
                }
            }
            NodeKind::MethodCall => {
                let (Some(rb), Some(ra)) = (ctx.before.child(b, 0), ctx.after.child(a, 0)) else {
                    continue;
                };
                let same_receiver = ctx.mapping.has(rb, ra)
                    || crate::ast::isomorphic(&ctx.before, rb, &ctx.after, ra);
                if !same_receiver {
                    continue;
                }
                let external = !implicit_or_self(&ctx.after, ra);
                if external || declares_method(&ctx.after, new_label) {
                    out.push(
                        PatternInstance::new(
                            PatternId::WrongMethodRef,
                            vec![ctx.before_anchor(b), ctx.after_anchor(a)],
                        )
                        .with_note(format!("{old_label} -> {new_label}")),
                    );
                }
            }
            _ => {}
        }
    }
    out
}
