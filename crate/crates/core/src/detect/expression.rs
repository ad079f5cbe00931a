use super::scope::is_constant_like;
use super::{DiffContext, PatternId, PatternInstance};
use crate::ast::{Ast, NodeId, NodeKind};
use crate::diff::EditAction;

const CONNECTIVES: &[&str] = &["&&", "||"];
const LOGICAL: &[&str] = &["&&", "||", "==", "!=", "<", "<=", ">", ">="];
const ARITHMETIC: &[&str] = &["+", "-", "*", "/", "%"];
const ARITH_ASSIGN: &[&str] = &["+=", "-=", "*=", "/=", "%="];

fn is_op(ast: &Ast, node: NodeId, ops: &[&str]) -> bool {
    ast.kind(node) == NodeKind::BinaryOp && ops.contains(&ast.label(node))
}

/// Changes to logical and arithmetic expressions: operators updated,
/// operands replaced, conditions expanded or reduced.
pub fn detect_expression_fix(ctx: &DiffContext) -> Vec<PatternInstance> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<PatternInstance>, id, anchors| {
        out.push(PatternInstance::new(id, anchors));
    };

    for action in &ctx.script {
        if let EditAction::Update {
            node,
            after,
            kind,
            old_label,
            new_label,
            ..
        } = action
        {
            let (old, new) = (old_label.as_str(), new_label.as_str());
            let anchors = vec![ctx.before_anchor(*node), ctx.after_anchor(*after)];
            match kind {
                NodeKind::BinaryOp if LOGICAL.contains(&old) || LOGICAL.contains(&new) => {
                    push(&mut out, PatternId::ExpLogicMod, anchors)
                }
                NodeKind::BinaryOp if ARITHMETIC.contains(&old) || ARITHMETIC.contains(&new) => {
                    push(&mut out, PatternId::ExpArithMod, anchors)
                }
                NodeKind::Assignment
                    if ARITH_ASSIGN.contains(&old) || ARITH_ASSIGN.contains(&new) =>
                {
                    push(&mut out, PatternId::ExpArithMod, anchors)
                }
                _ => {}
            }
        }
    }

    let survives_after = |n: NodeId| ctx.after.children(n).iter().any(|&c| !ctx.is_inserted(c));
    let survives_before = |n: NodeId| ctx.before.children(n).iter().any(|&c| !ctx.is_deleted(c));

    for a in ctx.after.ids() {
        if !ctx.is_inserted(a) || !survives_after(a) {
            continue;
        }
        let anchors = vec![ctx.after_anchor(a)];
        if is_op(&ctx.after, a, CONNECTIVES) {
            push(&mut out, PatternId::ExpLogicExpand, anchors);
        } else if is_negation(&ctx.after, a) {
            push(&mut out, PatternId::ExpLogicMod, anchors);
        } else if is_op(&ctx.after, a, ARITHMETIC) && parent_survives_after(ctx, a) {
            push(&mut out, PatternId::ExpArithMod, anchors);
        }
    }
    for b in ctx.before.ids() {
        if !ctx.is_deleted(b) || !survives_before(b) {
            continue;
        }
        let anchors = vec![ctx.before_anchor(b)];
        if is_op(&ctx.before, b, CONNECTIVES) {
            push(&mut out, PatternId::ExpLogicReduce, anchors);
        } else if is_negation(&ctx.before, b) {
            push(&mut out, PatternId::ExpLogicMod, anchors);
        } else if is_op(&ctx.before, b, ARITHMETIC) && parent_survives_before(ctx, b) {
            push(&mut out, PatternId::ExpArithMod, anchors);
        }
    }

    // Operand replaced in place under an operator that survived.
    for (b, a) in ctx.mapping.pairs() {
        if ctx.after.kind(a) != NodeKind::BinaryOp {
            continue;
        }
        let id = if is_op(&ctx.after, a, LOGICAL) {
            PatternId::ExpLogicMod
        } else if is_op(&ctx.after, a, ARITHMETIC) {
            PatternId::ExpArithMod
        } else {
            continue;
        };
        let replaced = ctx
            .before
            .children(b)
            .iter()
            .zip(ctx.after.children(a))
            .any(|(&cb, &ca)| {
                ctx.is_deleted(cb)
                    && ctx.is_inserted(ca)
                    && !(is_constant_like(&ctx.before, cb) && is_constant_like(&ctx.after, ca))
            });
        if replaced {
            push(
                &mut out,
                id,
                vec![ctx.before_anchor(b), ctx.after_anchor(a)],
            );
        }
    }
    out
}

fn is_negation(ast: &Ast, node: NodeId) -> bool {
    ast.kind(node) == NodeKind::UnaryOp && ast.label(node) == "!"
}

fn parent_survives_after(ctx: &DiffContext, a: NodeId) -> bool {
    ctx.after.parent(a).is_some_and(|p| !ctx.is_inserted(p))
}

fn parent_survives_before(ctx: &DiffContext, b: NodeId) -> bool {
    ctx.before.parent(b).is_some_and(|p| !ctx.is_deleted(p))
}
