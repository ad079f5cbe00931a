//! Tree differencing: node mapping, edit-script derivation and replay.

mod lcs;
mod mapping;
mod matcher;
mod script;

pub use lcs::lcs;
pub use mapping::MappingStore;
pub use matcher::{match_trees, MatchConfig};
pub use script::{
    apply_script, edit_script, ActionCounts, ApplyError, EditAction, EditScript, NodeRef,
};

use crate::ast::Ast;

/// Mapping plus derived script for one pair of trees.
#[derive(Debug, Clone)]
pub struct TreeDiff {
    pub mapping: MappingStore,
    pub script: EditScript,
}

pub fn diff(before: &Ast, after: &Ast, config: &MatchConfig) -> TreeDiff {
    let mapping = match_trees(before, after, config);
    let script = edit_script(before, after, &mapping);
    TreeDiff { mapping, script }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{isomorphic, NodeKind};
    use crate::parser::parse;

    fn roundtrip(a: &str, b: &str) -> EditScript {
        let before = parse(a, "C.java").unwrap();
        let after = parse(b, "C.java").unwrap();
        let d = diff(&before, &after, &MatchConfig::default());
        let applied = apply_script(&before, &d.script).unwrap();
        assert!(
            isomorphic(&applied, applied.root(), &after, after.root()),
            "apply-oracle failed\n{}",
            d.script.dump()
        );
        d.script
    }

    #[test]
    fn identical_trees_give_empty_script() {
        let src = "class C { int m() { return 0; } }";
        assert!(roundtrip(src, src).is_empty());
    }

    #[test]
    fn literal_change_is_a_single_update() {
        let s = roundtrip(
            "class C { int m() { return 0; } }",
            "class C { int m() { return 1; } }",
        );
        assert_eq!(s.len(), 1);
        match &s.actions[0] {
            EditAction::Update {
                kind,
                old_label,
                new_label,
                ..
            } => {
                assert_eq!(*kind, NodeKind::LiteralInt);
                assert_eq!((old_label.as_str(), new_label.as_str()), ("0", "1"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_script_applies_to_identity() {
        let before = parse("class C { }", "C.java").unwrap();
        let out = apply_script(&before, &EditScript::default()).unwrap();
        assert!(isomorphic(&out, out.root(), &before, before.root()));
    }

    #[test]
    fn bad_position_names_the_action() {
        let before = parse("class C { }", "C.java").unwrap();
        let after = parse("class C { int x; }", "C.java").unwrap();
        let mut d = diff(&before, &after, &MatchConfig::default());
        if let EditAction::Insert { position, .. } = &mut d.script.actions[0] {
            *position = 7;
        }
        let err = apply_script(&before, &d.script).unwrap_err();
        assert_eq!((err.index, err.action), (0, "INSERT"));
    }

    #[test]
    fn reorder_and_wrap_roundtrip() {
        roundtrip(
            "class C { void m() { a(); b(); c(); } }",
            "class C { void m() { c(); a(); if (x) { b(); } } }",
        );
        roundtrip(
            "class C { void m() { if (x) { a(); } else { b(); } } }",
            "class C { void m() { b(); try { a(); } catch (E e) { } } }",
        );
    }

    #[test]
    fn root_kind_change_goes_through_virtual_root() {
        use crate::ast::{AstBuilder, SourceSpan};
        let mk = |kind| {
            let mut b = AstBuilder::new("t");
            let f = b.file().clone();
            let s = SourceSpan::new(f, (1, 1), (1, 1));
            let leaf = b.node(NodeKind::LiteralInt, "1", s.clone(), vec![]);
            let leaf2 = b.node(NodeKind::LiteralInt, "2", s.clone(), vec![]);
            let root = b.node(kind, "", s, vec![leaf, leaf2]);
            b.finish(root)
        };
        let before = mk(NodeKind::Block);
        let after = mk(NodeKind::BinaryOp);
        let d = diff(&before, &after, &MatchConfig::default());
        let out = apply_script(&before, &d.script).unwrap();
        assert!(isomorphic(&out, out.root(), &after, after.root()));
    }
}
