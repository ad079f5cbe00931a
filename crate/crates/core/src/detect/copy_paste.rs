use std::collections::BTreeMap;

use super::{Anchor, DetectConfig, DiffContext, PatternId, PatternInstance};
use crate::ast::{combine_hash, Ast, NodeId, NodeKind};
use crate::diff::EditAction;

/// Kinds whose label is an identifier and is ignored when comparing clones.
fn wildcard(kind: NodeKind) -> bool {
    matches!(
        kind,
        NodeKind::VariableRead
            | NodeKind::FieldAccess
            | NodeKind::MethodCall
            | NodeKind::VarDecl
            | NodeKind::Parameter
    )
}

fn shape_label(ast: &Ast, n: NodeId) -> &str {
    if wildcard(ast.kind(n)) {
        ""
    } else {
        ast.label(n)
    }
}

fn shape_hash(ast: &Ast, n: NodeId) -> u64 {
    let children: Vec<u64> = ast
        .children(n)
        .iter()
        .map(|&c| shape_hash(ast, c))
        .collect();
    combine_hash(ast.kind(n), shape_label(ast, n), children.into_iter())
}

fn same_shape(a: &Ast, x: NodeId, b: &Ast, y: NodeId) -> bool {
    a.kind(x) == b.kind(y)
        && shape_label(a, x) == shape_label(b, y)
        && a.children(x).len() == b.children(y).len()
        && a.children(x)
            .iter()
            .zip(b.children(y))
            .all(|(&cx, &cy)| same_shape(a, cx, b, cy))
}

struct Site<'a> {
    ctx: &'a DiffContext,
    root: NodeId,
    parent: Option<NodeId>,
    file: usize,
}

/// Copy/paste within one file.
pub fn detect_copy_paste(ctx: &DiffContext, config: &DetectConfig) -> Vec<PatternInstance> {
    detect_copy_paste_across(std::slice::from_ref(ctx), config)
}

/// The same insertion (up to identifier names) at two or more places, or the
/// same set of label updates applied to two or more statements.
pub fn detect_copy_paste_across(
    contexts: &[DiffContext],
    config: &DetectConfig,
) -> Vec<PatternInstance> {
    let mut out = Vec::new();

    let mut sites: Vec<Site> = Vec::new();
    for (file, ctx) in contexts.iter().enumerate() {
        for a in ctx.after.ids() {
            let parent = ctx.after.parent(a);
            let is_root = ctx.is_inserted(a) && parent.is_none_or(|p| !ctx.is_inserted(p));
            if is_root && ctx.after.size(a) >= config.min_clone_size {
                sites.push(Site {
                    ctx,
                    root: a,
                    parent,
                    file,
                });
            }
        }
    }
    let mut buckets: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, s) in sites.iter().enumerate() {
        buckets
            .entry(shape_hash(&s.ctx.after, s.root))
            .or_default()
            .push(i);
    }
    let mut used = vec![false; sites.len()];
    for members in buckets.values() {
        for (k, &i) in members.iter().enumerate() {
            if used[i] {
                continue;
            }
            let si = &sites[i];
            let mut class = vec![i];
            for &j in &members[k + 1..] {
                let sj = &sites[j];
                if !used[j] && same_shape(&si.ctx.after, si.root, &sj.ctx.after, sj.root) {
                    class.push(j);
                }
            }
            let mut locations: Vec<(usize, Option<NodeId>)> = class
                .iter()
                .map(|&c| (sites[c].file, sites[c].parent))
                .collect();
            locations.sort();
            locations.dedup();
            if locations.len() >= 2 {
                for &c in &class {
                    used[c] = true;
                }
                let anchors: Vec<Anchor> = class
                    .iter()
                    .map(|&c| sites[c].ctx.after_anchor(sites[c].root))
                    .collect();
                out.push(
                    PatternInstance::new(PatternId::CopyPaste, anchors)
                        .with_note(format!("{} sites", locations.len())),
                );
            }
        }
    }

    // Update groups, keyed by the updates applied inside one statement.
    type Key = Vec<(NodeKind, String, String)>;
    let mut groups: BTreeMap<Key, Vec<Anchor>> = BTreeMap::new();
    for ctx in contexts {
        let mut per_stmt: BTreeMap<NodeId, Key> = BTreeMap::new();
        for action in &ctx.script {
            if let EditAction::Update {
                node,
                kind,
                old_label,
                new_label,
                ..
            } = action
            {
                let stmt = std::iter::once(*node)
                    .chain(ctx.before.ancestors(*node))
                    .find(|&n| ctx.before.kind(n).is_simple_statement());
                if let Some(stmt) = stmt {
                    per_stmt.entry(stmt).or_default().push((
                        *kind,
                        old_label.clone(),
                        new_label.clone(),
                    ));
                }
            }
        }
        for (stmt, key) in per_stmt {
            if ctx.before.size(stmt) >= config.min_clone_size {
                groups.entry(key).or_default().push(ctx.before_anchor(stmt));
            }
        }
    }
    for anchors in groups.into_values() {
        if anchors.len() >= 2 {
            let n = anchors.len();
            out.push(
                PatternInstance::new(PatternId::CopyPaste, anchors)
                    .with_note(format!("{n} updated statements")),
            );
        }
    }
    out
}
