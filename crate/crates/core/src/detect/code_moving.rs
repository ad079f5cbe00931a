use super::{DiffContext, PatternId, PatternInstance};
use crate::ast::NodeKind;
use crate::diff::EditAction;

/// Statements relocated unchanged. Moves into a new wrapper or out of a
/// removed one are wraps/unwraps, not code moving.
pub fn detect_code_moving(ctx: &DiffContext) -> Vec<PatternInstance> {
    let mut out = Vec::new();
    for action in &ctx.script {
        let EditAction::Move {
            node: b,
            after: a,
            kind,
            ..
        } = action
        else {
            continue;
        };
        let (b, a) = (*b, *a);
        if !kind.is_statement() || *kind == NodeKind::Block {
            continue;
        }
        let new_parent_existed = ctx.after.parent(a).is_some_and(|p| !ctx.is_inserted(p));
        let old_parent_survives = ctx.before.parent(b).is_some_and(|p| !ctx.is_deleted(p));
        if !new_parent_existed || !old_parent_survives {
            continue;
        }
        let untouched = ctx
            .before
            .subtree(b)
            .all(|n| !ctx.is_deleted(n) && !ctx.is_updated(n))
            && ctx.after.subtree(a).all(|n| !ctx.is_inserted(n));
        if untouched {
            out.push(PatternInstance::new(
                PatternId::CodeMoving,
                vec![ctx.before_anchor(b), ctx.after_anchor(a)],
            ));
        }
    }
    out
}
