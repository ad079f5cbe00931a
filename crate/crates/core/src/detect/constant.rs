use super::scope::{is_constant_like, is_constant_ref};
use super::{DiffContext, PatternId, PatternInstance};
use crate::diff::EditAction;

/// Literals changed, or constant references changed or swapped in place.
pub fn detect_constant_change(ctx: &DiffContext) -> Vec<PatternInstance> {
    let mut out = Vec::new();
    for action in &ctx.script {
        if let EditAction::Update {
            node, after, kind, ..
        } = action
        {
            let (b, a) = (*node, *after);
            if kind.is_literal()
                || is_constant_ref(&ctx.before, b)
                || is_constant_ref(&ctx.after, a)
            {
                out.push(PatternInstance::new(
                    PatternId::ConstantChange,
                    vec![ctx.before_anchor(b), ctx.after_anchor(a)],
                ));
            }
        }
    }
    for (pb, pa) in ctx.mapping.pairs() {
        for (&cb, &ca) in ctx.before.children(pb).iter().zip(ctx.after.children(pa)) {
            if ctx.is_deleted(cb)
                && ctx.is_inserted(ca)
                && ctx.before.children(cb).is_empty()
                && ctx.after.children(ca).is_empty()
                && is_constant_like(&ctx.before, cb)
                && is_constant_like(&ctx.after, ca)
            {
                out.push(PatternInstance::new(
                    PatternId::ConstantChange,
                    vec![ctx.before_anchor(cb), ctx.after_anchor(ca)],
                ));
            }
        }
    }
    out
}
