#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use patchlens::ast::{Ast, AstBuilder, BuildId, NodeId, NodeKind, SourceSpan};
use patchlens::harness::{load_corpus, PatchCase};
use rand::seq::IndexedRandom;
use rand::Rng;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn corpus(name: &str) -> Vec<PatchCase> {
    load_corpus(&fixtures().join(name)).expect("fixture corpus loads")
}

/// Owned tree used to build and mutate random inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct T {
    pub kind: NodeKind,
    pub label: String,
    pub children: Vec<T>,
}

impl T {
    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(T::depth).max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(T::size).sum::<usize>()
    }

    pub fn from_ast(ast: &Ast, id: NodeId) -> T {
        T {
            kind: ast.kind(id),
            label: ast.label(id).to_string(),
            children: ast
                .children(id)
                .iter()
                .map(|&c| T::from_ast(ast, c))
                .collect(),
        }
    }

    pub fn to_ast(&self) -> Ast {
        let mut b = AstBuilder::new("T.java");
        let mut line = 0;
        let root = self.build(&mut b, &mut line);
        b.finish(root)
    }

    fn build(&self, b: &mut AstBuilder, line: &mut u32) -> BuildId {
        *line += 1;
        let span = SourceSpan::new(Arc::clone(b.file()), (*line, 1), (*line, 1));
        let kids = self.children.iter().map(|c| c.build(b, line)).collect();
        b.node(self.kind, self.label.clone(), span, kids)
    }

    /// Preorder paths (child index sequences) of every node.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for (i, c) in self.children.iter().enumerate() {
            for mut p in c.paths() {
                p.insert(0, i);
                out.push(p);
            }
        }
        out
    }

    pub fn at(&self, path: &[usize]) -> &T {
        path.iter().fold(self, |t, &i| &t.children[i])
    }

    pub fn at_mut(&mut self, path: &[usize]) -> &mut T {
        path.iter().fold(self, |t, &i| &mut t.children[i])
    }

    fn depth_of(path: &[usize]) -> usize {
        path.len() + 1
    }
}

const KINDS: [NodeKind; 8] = [
    NodeKind::Block,
    NodeKind::If,
    NodeKind::ExpressionStmt,
    NodeKind::MethodCall,
    NodeKind::BinaryOp,
    NodeKind::VariableRead,
    NodeKind::LiteralInt,
    NodeKind::Return,
];

const LABELS: [&str; 6] = ["", "a", "b", "x", "+", "foo"];

pub fn random_tree<R: Rng>(rng: &mut R, max_depth: usize, max_branch: usize) -> T {
    let kind = *KINDS.choose(rng).unwrap();
    let label = LABELS.choose(rng).unwrap().to_string();
    let n = if max_depth <= 1 {
        0
    } else {
        rng.random_range(0..=max_branch)
    };
    // Shrink fan-out with depth so trees stay moderate in size.
    let n = if max_depth < 4 { n.min(2) } else { n };
    let children = (0..n)
        .map(|_| random_tree(rng, max_depth - 1, max_branch))
        .collect();
    T {
        kind,
        label,
        children,
    }
}

/// Applies `count` random relabel / insert / delete / move steps, keeping the
/// depth at or below `max_depth`.
pub fn mutate<R: Rng>(rng: &mut R, tree: &T, count: usize, max_depth: usize) -> T {
    let mut t = tree.clone();
    for _ in 0..count {
        let paths = t.paths();
        match rng.random_range(0..4) {
            0 => {
                let p = paths.choose(rng).unwrap();
                let node = t.at_mut(p);
                node.label = LABELS.choose(rng).unwrap().to_string();
                if rng.random_bool(0.2) {
                    node.kind = *KINDS.choose(rng).unwrap();
                }
            }
            1 => {
                let p = paths.choose(rng).unwrap().clone();
                let room = max_depth.saturating_sub(T::depth_of(&p));
                if room == 0 {
                    continue;
                }
                let sub = random_tree(rng, room.min(3), 3);
                let parent = t.at_mut(&p);
                let pos = rng.random_range(0..=parent.children.len());
                parent.children.insert(pos, sub);
            }
            2 => {
                let non_root: Vec<&Vec<usize>> = paths.iter().filter(|p| !p.is_empty()).collect();
                let Some(p) = non_root.choose(rng) else {
                    continue;
                };
                let (last, parent) = p.split_last().unwrap();
                t.at_mut(parent).children.remove(*last);
            }
            _ => {
                let non_root: Vec<&Vec<usize>> = paths.iter().filter(|p| !p.is_empty()).collect();
                let Some(src) = non_root.choose(rng) else {
                    continue;
                };
                let src = (*src).clone();
                let (last, parent) = src.split_last().unwrap();
                let moved = t.at_mut(parent).children.remove(*last);
                let targets: Vec<Vec<usize>> = t
                    .paths()
                    .into_iter()
                    .filter(|p| T::depth_of(p) + moved.depth() <= max_depth)
                    .collect();
                let Some(dst) = targets.choose(rng) else {
                    t.at_mut(parent).children.insert(*last, moved);
                    continue;
                };
                let target = t.at_mut(dst);
                let pos = rng.random_range(0..=target.children.len());
                target.children.insert(pos, moved);
            }
        }
    }
    t
}

/// A node of `ast` whose span is exactly `span`.
pub fn span_exists(ast: &Ast, span: &SourceSpan) -> Option<NodeId> {
    ast.ids().find(|&id| ast.span(id) == span)
}
