use super::{DiffContext, PatternId, PatternInstance};
use crate::ast::{Ast, NodeId, NodeKind};

/// Role a child plays inside a freshly added (or removed) parent.
enum Step {
    /// The parent wraps the child: report this pattern family member.
    Wrapper(Wrapper),
    /// The parent is transparent; keep climbing.
    Climb,
    /// The child sits somewhere that is not a wrapped body (a condition, a
    /// catch clause, ...). Stop without reporting.
    Stop,
}

#[derive(Clone, Copy)]
enum Wrapper {
    If,
    IfElse,
    Else,
    TryCatch,
    Method,
    Loop,
}

fn classify(
    ast: &Ast,
    parent: NodeId,
    child: NodeId,
    parent_is_new: impl Fn(NodeId) -> bool,
) -> Step {
    let pos = ast.position(child).unwrap_or(0);
    let last = ast.children(parent).len().saturating_sub(1);
    match ast.kind(parent) {
        NodeKind::If => match pos {
            0 => Step::Stop,
            1 if ast.child(parent, 2).is_none() => Step::Wrapper(Wrapper::If),
            _ => Step::Wrapper(Wrapper::IfElse),
        },
        NodeKind::Ternary => match pos {
            0 => Step::Stop,
            _ => Step::Wrapper(Wrapper::IfElse),
        },
        NodeKind::Else => match ast.parent(parent) {
            Some(owner) if !parent_is_new(owner) => Step::Wrapper(Wrapper::Else),
            _ => Step::Climb,
        },
        NodeKind::TryBlock => match pos {
            0 => Step::Wrapper(Wrapper::TryCatch),
            _ => Step::Stop,
        },
        NodeKind::WhileLoop | NodeKind::ForLoop => {
            if pos == last && ast.kind(child) == NodeKind::Block {
                Step::Wrapper(Wrapper::Loop)
            } else {
                Step::Stop
            }
        }
        NodeKind::MethodCall | NodeKind::ConstructorCall => Step::Wrapper(Wrapper::Method),
        NodeKind::CatchClause | NodeKind::FinallyBlock | NodeKind::MethodDecl => Step::Stop,
        _ => Step::Climb,
    }
}

/// Climbs from a surviving node through new ancestors to the first wrapper.
fn find_wrapper(
    ast: &Ast,
    payload: NodeId,
    is_new: impl Fn(NodeId) -> bool,
) -> Option<(Wrapper, NodeId)> {
    let mut child = payload;
    while let Some(parent) = ast.parent(child) {
        if !is_new(parent) {
            return None;
        }
        match classify(ast, parent, child, &is_new) {
            Step::Wrapper(w) => return Some((w, parent)),
            Step::Stop => return None,
            Step::Climb => child = parent,
        }
    }
    None
}

/// Existing code placed under a new structure (wraps), or a removed structure
/// whose body survives (unwraps).
pub fn detect_wraps_unwraps(ctx: &DiffContext) -> Vec<PatternInstance> {
    let mut out = Vec::new();
    for (b, a) in ctx.mapping.pairs() {
        if let Some(p) = ctx.after.parent(a) {
            if ctx.is_inserted(p) {
                if let Some((w, wrapper)) = find_wrapper(&ctx.after, a, |n| ctx.is_inserted(n)) {
                    let id = match w {
                        Wrapper::If => PatternId::WrapsIf,
                        Wrapper::IfElse => PatternId::WrapsIfElse,
                        Wrapper::Else => PatternId::WrapsElse,
                        Wrapper::TryCatch => PatternId::WrapsTryCatch,
                        Wrapper::Method => PatternId::WrapsMethod,
                        Wrapper::Loop => PatternId::WrapsLoop,
                    };
                    out.push(
                        PatternInstance::new(
                            id,
                            vec![ctx.after_anchor(wrapper), ctx.before_anchor(b)],
                        )
                        .with_note(ctx.after.kind(wrapper).name()),
                    );
                }
            }
        }
        if let Some(p) = ctx.before.parent(b) {
            if ctx.is_deleted(p) {
                if let Some((w, wrapper)) = find_wrapper(&ctx.before, b, |n| ctx.is_deleted(n)) {
                    let id = match w {
                        Wrapper::If | Wrapper::IfElse | Wrapper::Else => {
                            Some(PatternId::UnwrapIfElse)
                        }
                        Wrapper::TryCatch => Some(PatternId::UnwrapTryCatch),
                        Wrapper::Method => Some(PatternId::UnwrapMethod),
                        Wrapper::Loop => None,
                    };
                    if let Some(id) = id {
                        out.push(
                            PatternInstance::new(
                                id,
                                vec![ctx.before_anchor(wrapper), ctx.after_anchor(a)],
                            )
                            .with_note(ctx.before.kind(wrapper).name()),
                        );
                    }
                }
            }
        }
    }
    out
}
