//! Repair-pattern detectors. Each family looks at one [`DiffContext`] (copy/paste
//! looks at all changed files of a patch at once) and reports
//! [`PatternInstance`]s.

mod code_moving;
mod cond_block;
mod constant;
mod copy_paste;
mod expression;
mod null_check;
pub mod scope;
mod single_line;
mod wraps;
mod wrong_ref;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ast::{Ast, NodeId, SourceSpan};
use crate::diff::{edit_script, match_trees, EditAction, EditScript, MappingStore, MatchConfig};

pub use code_moving::detect_code_moving;
pub use cond_block::detect_conditional_block;
pub use constant::detect_constant_change;
pub use copy_paste::{detect_copy_paste, detect_copy_paste_across};
pub use expression::detect_expression_fix;
pub use null_check::detect_missing_null_check;
pub use single_line::detect_single_line;
pub use wraps::detect_wraps_unwraps;
pub use wrong_ref::detect_wrong_reference;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PatternGroup {
    ConditionalBlock,
    ExpressionFix,
    WrapsUnwraps,
    SingleLine,
    WrongReference,
    MissingNullCheck,
    CopyPaste,
    ConstantChange,
    CodeMoving,
}

impl PatternGroup {
    pub const ALL: [PatternGroup; 9] = [
        PatternGroup::ConditionalBlock,
        PatternGroup::ExpressionFix,
        PatternGroup::WrapsUnwraps,
        PatternGroup::SingleLine,
        PatternGroup::WrongReference,
        PatternGroup::MissingNullCheck,
        PatternGroup::CopyPaste,
        PatternGroup::ConstantChange,
        PatternGroup::CodeMoving,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternGroup::ConditionalBlock => "conditionalBlock",
            PatternGroup::ExpressionFix => "expressionFix",
            PatternGroup::WrapsUnwraps => "wrapsUnwraps",
            PatternGroup::SingleLine => "singleLine",
            PatternGroup::WrongReference => "wrongReference",
            PatternGroup::MissingNullCheck => "missingNullCheck",
            PatternGroup::CopyPaste => "copyPaste",
            PatternGroup::ConstantChange => "constantChange",
            PatternGroup::CodeMoving => "codeMoving",
        }
    }

    pub fn patterns(self) -> impl Iterator<Item = PatternId> {
        PatternId::ALL
            .into_iter()
            .filter(move |p| p.group() == self)
    }
}

impl fmt::Display for PatternGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the 25 repair-pattern variants. Declaration order follows the
/// groups, so the derived `Ord` sorts by group first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PatternId {
    CondBlockAddition,
    CondBlockAddWithReturn,
    CondBlockAddWithException,
    CondBlockRemoval,
    ExpLogicMod,
    ExpLogicExpand,
    ExpLogicReduce,
    ExpArithMod,
    WrapsIf,
    WrapsIfElse,
    WrapsElse,
    WrapsTryCatch,
    WrapsMethod,
    WrapsLoop,
    UnwrapIfElse,
    UnwrapTryCatch,
    UnwrapMethod,
    SingleLine,
    WrongVarRef,
    WrongMethodRef,
    MissNullCheckPositive,
    MissNullCheckNegative,
    CopyPaste,
    ConstantChange,
    CodeMoving,
}

impl PatternId {
    pub const ALL: [PatternId; 25] = [
        PatternId::CondBlockAddition,
        PatternId::CondBlockAddWithReturn,
        PatternId::CondBlockAddWithException,
        PatternId::CondBlockRemoval,
        PatternId::ExpLogicMod,
        PatternId::ExpLogicExpand,
        PatternId::ExpLogicReduce,
        PatternId::ExpArithMod,
        PatternId::WrapsIf,
        PatternId::WrapsIfElse,
        PatternId::WrapsElse,
        PatternId::WrapsTryCatch,
        PatternId::WrapsMethod,
        PatternId::WrapsLoop,
        PatternId::UnwrapIfElse,
        PatternId::UnwrapTryCatch,
        PatternId::UnwrapMethod,
        PatternId::SingleLine,
        PatternId::WrongVarRef,
        PatternId::WrongMethodRef,
        PatternId::MissNullCheckPositive,
        PatternId::MissNullCheckNegative,
        PatternId::CopyPaste,
        PatternId::ConstantChange,
        PatternId::CodeMoving,
    ];

    pub fn group(self) -> PatternGroup {
        use PatternId::*;
        match self {
            CondBlockAddition
            | CondBlockAddWithReturn
            | CondBlockAddWithException
            | CondBlockRemoval => PatternGroup::ConditionalBlock,
            ExpLogicMod | ExpLogicExpand | ExpLogicReduce | ExpArithMod => {
                PatternGroup::ExpressionFix
            }
            WrapsIf | WrapsIfElse | WrapsElse | WrapsTryCatch | WrapsMethod | WrapsLoop
            | UnwrapIfElse | UnwrapTryCatch | UnwrapMethod => PatternGroup::WrapsUnwraps,
            SingleLine => PatternGroup::SingleLine,
            WrongVarRef | WrongMethodRef => PatternGroup::WrongReference,
            MissNullCheckPositive | MissNullCheckNegative => PatternGroup::MissingNullCheck,
            CopyPaste => PatternGroup::CopyPaste,
            ConstantChange => PatternGroup::ConstantChange,
            CodeMoving => PatternGroup::CodeMoving,
        }
    }

    pub fn name(self) -> &'static str {
        use PatternId::*;
        match self {
            CondBlockAddition => "condBlockAddition",
            CondBlockAddWithReturn => "condBlockAddWithReturn",
            CondBlockAddWithException => "condBlockAddWithException",
            CondBlockRemoval => "condBlockRemoval",
            ExpLogicMod => "expLogicMod",
            ExpLogicExpand => "expLogicExpand",
            ExpLogicReduce => "expLogicReduce",
            ExpArithMod => "expArithMod",
            WrapsIf => "wrapsIf",
            WrapsIfElse => "wrapsIfElse",
            WrapsElse => "wrapsElse",
            WrapsTryCatch => "wrapsTryCatch",
            WrapsMethod => "wrapsMethod",
            WrapsLoop => "wrapsLoop",
            UnwrapIfElse => "unwrapIfElse",
            UnwrapTryCatch => "unwrapTryCatch",
            UnwrapMethod => "unwrapMethod",
            SingleLine => "singleLine",
            WrongVarRef => "wrongVarRef",
            WrongMethodRef => "wrongMethodRef",
            MissNullCheckPositive => "missNullCheckPositive",
            MissNullCheckNegative => "missNullCheckNegative",
            CopyPaste => "copyPaste",
            ConstantChange => "constantChange",
            CodeMoving => "codeMoving",
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown pattern id `{0}`")]
pub struct UnknownPattern(pub String);

impl FromStr for PatternId {
    type Err = UnknownPattern;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PatternId::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| UnknownPattern(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Side {
    Before,
    After,
}

/// A source location supporting a detection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Anchor {
    pub side: Side,
    pub span: SourceSpan,
}

impl Anchor {
    fn sort_key(&self) -> (&str, Side, u32, u32, u32, u32) {
        let s = &self.span;
        (
            &s.file,
            self.side,
            s.start_line,
            s.start_col,
            s.end_line,
            s.end_col,
        )
    }
}

impl Ord for Anchor {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Anchor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternInstance {
    pub id: PatternId,
    /// Never empty.
    pub anchors: Vec<Anchor>,
    pub note: Option<String>,
}

impl PatternInstance {
    pub fn new(id: PatternId, anchors: Vec<Anchor>) -> Self {
        debug_assert!(!anchors.is_empty());
        PatternInstance {
            id,
            anchors,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn group(&self) -> PatternGroup {
        self.id.group()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DetectConfig {
    pub min_clone_size: u32,
}

impl Default for DetectConfig {
    fn default() -> Self {
        DetectConfig { min_clone_size: 4 }
    }
}

/// Trees, mapping and script for one changed file, plus per-node action
/// lookups used by the detectors.
#[derive(Debug, Clone)]
pub struct DiffContext {
    pub before: Ast,
    pub after: Ast,
    pub mapping: MappingStore,
    pub script: EditScript,
    updated: Vec<bool>,
    moved: Vec<bool>,
}

impl DiffContext {
    /// Matches `before` against `after` and derives the script.
    pub fn compute(before: Ast, after: Ast, config: &MatchConfig) -> Self {
        let mapping = match_trees(&before, &after, config);
        let script = edit_script(&before, &after, &mapping);
        DiffContext::new(before, after, mapping, script)
    }

    pub fn new(before: Ast, after: Ast, mapping: MappingStore, script: EditScript) -> Self {
        let mut updated = vec![false; before.len()];
        let mut moved = vec![false; before.len()];
        for action in &script {
            match action {
                EditAction::Update { node, .. } => updated[node.index()] = true,
                EditAction::Move { node, .. } => moved[node.index()] = true,
                _ => {}
            }
        }
        DiffContext {
            before,
            after,
            mapping,
            script,
            updated,
            moved,
        }
    }

    pub fn file(&self) -> &Arc<str> {
        self.after.file()
    }

    /// After-node with no before partner.
    pub fn is_inserted(&self, after: NodeId) -> bool {
        !self.mapping.is_after_mapped(after)
    }

    /// Before-node with no after partner.
    pub fn is_deleted(&self, before: NodeId) -> bool {
        !self.mapping.is_before_mapped(before)
    }

    pub fn is_updated(&self, before: NodeId) -> bool {
        self.updated[before.index()]
    }

    pub fn is_moved(&self, before: NodeId) -> bool {
        self.moved[before.index()]
    }

    pub fn before_anchor(&self, node: NodeId) -> Anchor {
        Anchor {
            side: Side::Before,
            span: self.before.span(node).clone(),
        }
    }

    pub fn after_anchor(&self, node: NodeId) -> Anchor {
        Anchor {
            side: Side::After,
            span: self.after.span(node).clone(),
        }
    }

    /// Any node of the after-subtree rooted at `root` has a before partner.
    pub fn has_mapped_in_after(&self, root: NodeId) -> bool {
        self.after
            .subtree(root)
            .any(|n| self.mapping.is_after_mapped(n))
    }

    /// Any node of the before-subtree rooted at `root` has an after partner.
    pub fn has_mapped_in_before(&self, root: NodeId) -> bool {
        self.before
            .subtree(root)
            .any(|n| self.mapping.is_before_mapped(n))
    }
}

/// All nine families over one file.
pub fn detect_all(ctx: &DiffContext, config: &DetectConfig) -> Vec<PatternInstance> {
    detect_files(std::slice::from_ref(ctx), config)
}

/// All nine families over the changed files of one patch. Copy/paste sites
/// may come from different files.
pub fn detect_files(contexts: &[DiffContext], config: &DetectConfig) -> Vec<PatternInstance> {
    let mut out = Vec::new();
    // A patch touching several files is never a one-line change.
    let changed_files = contexts.iter().filter(|c| !c.script.is_empty()).count();
    for ctx in contexts {
        if ctx.script.is_empty() {
            continue;
        }
        out.extend(detect_conditional_block(ctx));
        out.extend(detect_expression_fix(ctx));
        out.extend(detect_wraps_unwraps(ctx));
        if changed_files == 1 {
            out.extend(detect_single_line(ctx));
        }
        out.extend(detect_wrong_reference(ctx));
        out.extend(detect_missing_null_check(ctx));
        out.extend(detect_constant_change(ctx));
        out.extend(detect_code_moving(ctx));
    }
    out.extend(detect_copy_paste_across(contexts, config));
    normalize(out)
}

/// Sorts by (group, id, first anchor) and drops duplicates by (id, anchor set).
pub fn normalize(mut instances: Vec<PatternInstance>) -> Vec<PatternInstance> {
    for inst in &mut instances {
        inst.anchors.sort();
        inst.anchors.dedup();
    }
    instances.sort_by(|a, b| {
        (a.group(), a.id, &a.anchors, &a.note).cmp(&(b.group(), b.id, &b.anchors, &b.note))
    });
    instances.dedup_by(|a, b| a.id == b.id && a.anchors == b.anchors);
    instances
}

/// Distinct pattern ids, sorted.
pub fn pattern_set(instances: &[PatternInstance]) -> Vec<PatternId> {
    let mut ids: Vec<PatternId> = instances.iter().map(|i| i.id).collect();
    ids.sort();
    ids.dedup();
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_partition_into_nine_groups() {
        let total: usize = PatternGroup::ALL.iter().map(|g| g.patterns().count()).sum();
        assert_eq!(total, 25);
        assert!(PatternGroup::ALL.iter().all(|g| g.patterns().count() > 0));
        let sizes: Vec<usize> = PatternGroup::ALL
            .iter()
            .map(|g| g.patterns().count())
            .collect();
        assert_eq!(sizes, [4, 4, 9, 1, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn names_round_trip_through_serde() {
        for id in PatternId::ALL {
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.name()));
            assert_eq!(id.name().parse::<PatternId>().unwrap(), id);
        }
        assert!("wrapsWhile".parse::<PatternId>().is_err());
    }

    #[test]
    fn order_is_group_major() {
        let mut sorted = PatternId::ALL;
        sorted.sort_by_key(|p| (p.group(), *p));
        assert_eq!(sorted, PatternId::ALL);
    }
}
