use super::{Anchor, DiffContext, PatternId, PatternInstance};
use crate::ast::{Ast, NodeId, NodeKind};

/// Added or removed `if` blocks whose then-branch is entirely new (or
/// entirely gone). Else-branches are left to the wraps family: an added
/// `else if` re-nests the existing chain under the new `If`, and that part is
/// a wrap, not a new block.
pub fn detect_conditional_block(ctx: &DiffContext) -> Vec<PatternInstance> {
    let mut out = Vec::new();
    for id in ctx.after.ids() {
        if ctx.after.kind(id) != NodeKind::If || !ctx.is_inserted(id) {
            continue;
        }
        let Some(then) = ctx.after.child(id, 1) else {
            continue;
        };
        if ctx.has_mapped_in_after(then) {
            continue;
        }
        let anchor = ctx.after_anchor(id);
        out.extend(addition_variants(&ctx.after, then, anchor));
    }
    for id in ctx.before.ids() {
        if ctx.before.kind(id) != NodeKind::If || !ctx.is_deleted(id) {
            continue;
        }
        let Some(then) = ctx.before.child(id, 1) else {
            continue;
        };
        if !ctx.has_mapped_in_before(then) {
            out.push(PatternInstance::new(
                PatternId::CondBlockRemoval,
                vec![ctx.before_anchor(id)],
            ));
        }
    }
    out
}

fn addition_variants(ast: &Ast, then: NodeId, anchor: Anchor) -> Vec<PatternInstance> {
    let has = |k| ast.subtree(then).any(|n| ast.kind(n) == k);
    let mut ids = Vec::new();
    if has(NodeKind::Return) {
        ids.push(PatternId::CondBlockAddWithReturn);
    }
    if has(NodeKind::Throw) {
        ids.push(PatternId::CondBlockAddWithException);
    }
    if ids.is_empty() {
        ids.push(PatternId::CondBlockAddition);
    }
    ids.into_iter()
        .map(|id| PatternInstance::new(id, vec![anchor.clone()]))
        .collect()
}
