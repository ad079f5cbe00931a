//! Edit-script generation from a mapping (the align-then-emit procedure of
//! Chawathe et al.) and replay of a script onto the before-tree.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::lcs::lcs;
use super::MappingStore;
use crate::ast::{Ast, AstBuilder, BuildId, NodeId, NodeKind, SourceSpan};

/// Identifies a node of the tree while a script is being applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "side", content = "id", rename_all = "camelCase")]
pub enum NodeRef {
    /// A node of the before-tree.
    Before(NodeId),
    /// A node created by an earlier `Insert`, named by its after-tree id.
    Inserted(NodeId),
    /// The virtual parent of the tree root.
    Root,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "action", rename_all = "camelCase")]
pub enum EditAction {
    #[serde(rename_all = "camelCase")]
    Insert {
        node: NodeId,
        kind: NodeKind,
        label: String,
        span: SourceSpan,
        parent: NodeRef,
        after_parent: Option<NodeId>,
        parent_kind: Option<NodeKind>,
        position: usize,
    },
    #[serde(rename_all = "camelCase")]
    Delete {
        node: NodeId,
        kind: NodeKind,
        label: String,
        span: SourceSpan,
    },
    #[serde(rename_all = "camelCase")]
    Update {
        node: NodeId,
        after: NodeId,
        kind: NodeKind,
        old_label: String,
        new_label: String,
        before_span: SourceSpan,
        after_span: SourceSpan,
    },
    #[serde(rename_all = "camelCase")]
    Move {
        node: NodeId,
        after: NodeId,
        kind: NodeKind,
        label: String,
        before_span: SourceSpan,
        after_span: SourceSpan,
        parent: NodeRef,
        after_parent: Option<NodeId>,
        parent_kind: Option<NodeKind>,
        position: usize,
    },
}

impl EditAction {
    pub fn kind(&self) -> NodeKind {
        match self {
            EditAction::Insert { kind, .. }
            | EditAction::Delete { kind, .. }
            | EditAction::Update { kind, .. }
            | EditAction::Move { kind, .. } => *kind,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EditAction::Insert { .. } => "INSERT",
            EditAction::Delete { .. } => "DELETE",
            EditAction::Update { .. } => "UPDATE",
            EditAction::Move { .. } => "MOVE",
        }
    }

    pub fn before_node(&self) -> Option<NodeId> {
        match self {
            EditAction::Insert { .. } => None,
            EditAction::Delete { node, .. }
            | EditAction::Update { node, .. }
            | EditAction::Move { node, .. } => Some(*node),
        }
    }

    pub fn after_node(&self) -> Option<NodeId> {
        match self {
            EditAction::Insert { node, .. } => Some(*node),
            EditAction::Delete { .. } => None,
            EditAction::Update { after, .. } | EditAction::Move { after, .. } => Some(*after),
        }
    }

    pub fn before_span(&self) -> Option<&SourceSpan> {
        match self {
            EditAction::Insert { .. } => None,
            EditAction::Delete { span, .. } => Some(span),
            EditAction::Update { before_span, .. } | EditAction::Move { before_span, .. } => {
                Some(before_span)
            }
        }
    }

    pub fn after_span(&self) -> Option<&SourceSpan> {
        match self {
            EditAction::Insert { span, .. } => Some(span),
            EditAction::Delete { .. } => None,
            EditAction::Update { after_span, .. } | EditAction::Move { after_span, .. } => {
                Some(after_span)
            }
        }
    }
}

impl fmt::Display for EditAction {
    /// One line of the `diff-dump` format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parent = |pk: &Option<NodeKind>, pos: usize| match pk {
            Some(k) => format!("  -> parent {k} pos {pos}"),
            None => format!("  -> parent <root> pos {pos}"),
        };
        match self {
            EditAction::Insert {
                kind,
                label,
                span,
                parent_kind,
                position,
                ..
            } => write!(
                f,
                "INSERT  {kind} \"{label}\"  @{span}{}",
                parent(parent_kind, *position)
            ),
            EditAction::Delete {
                kind, label, span, ..
            } => write!(f, "DELETE  {kind} \"{label}\"  @{span}"),
            EditAction::Update {
                kind,
                old_label,
                new_label,
                before_span,
                ..
            } => write!(
                f,
                "UPDATE  {kind} \"{old_label}\"  @{before_span}  -> \"{new_label}\""
            ),
            EditAction::Move {
                kind,
                label,
                before_span,
                parent_kind,
                position,
                ..
            } => write!(
                f,
                "MOVE  {kind} \"{label}\"  @{before_span}{}",
                parent(parent_kind, *position)
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct EditScript {
    pub actions: Vec<EditAction>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionCounts {
    pub insert: usize,
    pub delete: usize,
    pub update: usize,
    #[serde(rename = "move")]
    pub moves: usize,
}

impl EditScript {
    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, EditAction> {
        self.actions.iter()
    }

    pub fn counts(&self) -> ActionCounts {
        let mut c = ActionCounts::default();
        for a in &self.actions {
            match a {
                EditAction::Insert { .. } => c.insert += 1,
                EditAction::Delete { .. } => c.delete += 1,
                EditAction::Update { .. } => c.update += 1,
                EditAction::Move { .. } => c.moves += 1,
            }
        }
        c
    }

    /// The `diff-dump` rendering: one action per line.
    pub fn dump(&self) -> String {
        self.actions.iter().map(|a| format!("{a}\n")).collect()
    }
}

impl<'a> IntoIterator for &'a EditScript {
    type Item = &'a EditAction;
    type IntoIter = std::slice::Iter<'a, EditAction>;

    fn into_iter(self) -> Self::IntoIter {
        self.actions.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("action {index} ({action}) cannot be applied: {reason}")]
pub struct ApplyError {
    pub index: usize,
    pub action: &'static str,
    pub reason: String,
}

/// Mutable tree used while generating or replaying a script. Slot 0 is the
/// virtual root above the real root.
struct WorkTree {
    nodes: Vec<WorkNode>,
    by_before: Vec<Option<usize>>,
    by_inserted: HashMap<NodeId, usize>,
}

struct WorkNode {
    kind: NodeKind,
    label: String,
    span: SourceSpan,
    parent: Option<usize>,
    children: Vec<usize>,
    origin: NodeRef,
}

impl WorkTree {
    fn from_ast(ast: &Ast) -> Self {
        let placeholder = SourceSpan::new(ast.file().clone(), (1, 1), (1, 1));
        let mut nodes = vec![WorkNode {
            kind: NodeKind::CompilationUnit,
            label: String::new(),
            span: placeholder,
            parent: None,
            children: Vec::new(),
            origin: NodeRef::Root,
        }];
        let mut by_before = vec![None; ast.len()];
        for id in ast.ids() {
            let n = ast.node(id);
            let slot = nodes.len();
            by_before[id.index()] = Some(slot);
            let parent = n.parent.map_or(0, |p| by_before[p.index()].unwrap());
            nodes.push(WorkNode {
                kind: n.kind,
                label: n.label.clone(),
                span: n.span.clone(),
                parent: Some(parent),
                children: Vec::new(),
                origin: NodeRef::Before(id),
            });
            nodes[parent].children.push(slot);
        }
        WorkTree {
            nodes,
            by_before,
            by_inserted: HashMap::new(),
        }
    }

    fn resolve(&self, r: NodeRef) -> Option<usize> {
        match r {
            NodeRef::Root => Some(0),
            NodeRef::Before(id) => self.by_before.get(id.index()).copied().flatten(),
            NodeRef::Inserted(id) => self.by_inserted.get(&id).copied(),
        }
    }

    fn index_in_parent(&self, slot: usize) -> usize {
        let p = self.nodes[slot].parent.expect("attached node");
        self.nodes[p]
            .children
            .iter()
            .position(|&c| c == slot)
            .unwrap()
    }

    fn detach(&mut self, slot: usize) {
        if let Some(p) = self.nodes[slot].parent.take() {
            self.nodes[p].children.retain(|&c| c != slot);
        }
    }

    fn attach(&mut self, slot: usize, parent: usize, pos: usize) -> Result<(), String> {
        let len = self.nodes[parent].children.len();
        if pos > len {
            return Err(format!("position {pos} exceeds child count {len}"));
        }
        self.nodes[parent].children.insert(pos, slot);
        self.nodes[slot].parent = Some(parent);
        Ok(())
    }

    fn new_node(
        &mut self,
        kind: NodeKind,
        label: String,
        span: SourceSpan,
        after: NodeId,
    ) -> usize {
        let slot = self.nodes.len();
        self.nodes.push(WorkNode {
            kind,
            label,
            span,
            parent: None,
            children: Vec::new(),
            origin: NodeRef::Inserted(after),
        });
        self.by_inserted.insert(after, slot);
        slot
    }

    fn is_ancestor_or_self(&self, anc: usize, mut node: usize) -> bool {
        loop {
            if node == anc {
                return true;
            }
            match self.nodes[node].parent {
                Some(p) => node = p,
                None => return false,
            }
        }
    }

    fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, false)];
        while let Some((s, expanded)) = stack.pop() {
            if expanded {
                out.push(s);
            } else {
                stack.push((s, true));
                for &c in self.nodes[s].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    fn into_ast(self, file: std::sync::Arc<str>) -> Result<Ast, String> {
        let roots = &self.nodes[0].children;
        if roots.len() != 1 {
            return Err(format!("result has {} roots", roots.len()));
        }
        let mut b = AstBuilder::new(file);
        let mut built: Vec<Option<BuildId>> = vec![None; self.nodes.len()];
        for s in self.postorder() {
            if s == 0 {
                continue;
            }
            let n = &self.nodes[s];
            let children = n.children.iter().map(|&c| built[c].unwrap()).collect();
            built[s] = Some(b.node(n.kind, n.label.clone(), n.span.clone(), children));
        }
        Ok(b.finish(built[roots[0]].unwrap()))
    }
}

/// Derives an edit script that turns `before` into `after` given `mapping`.
pub fn edit_script(before: &Ast, after: &Ast, mapping: &MappingStore) -> EditScript {
    Generator::new(before, after, mapping).run()
}

struct Generator<'a> {
    before: &'a Ast,
    after: &'a Ast,
    work: WorkTree,
    /// Work slot partnered with each after-node.
    partner_of_after: Vec<Option<usize>>,
    /// After-node partnered with each work slot; `None` for slot 0 and unmapped nodes.
    partner_of_work: Vec<Option<NodeId>>,
    in_order_work: Vec<bool>,
    in_order_after: Vec<bool>,
    actions: Vec<EditAction>,
}

impl<'a> Generator<'a> {
    fn new(before: &'a Ast, after: &'a Ast, mapping: &MappingStore) -> Self {
        let work = WorkTree::from_ast(before);
        let mut partner_of_after = vec![None; after.len()];
        let mut partner_of_work = vec![None; work.nodes.len()];
        for (b, a) in mapping.pairs() {
            let slot = work.by_before[b.index()].unwrap();
            partner_of_after[a.index()] = Some(slot);
            partner_of_work[slot] = Some(a);
        }
        let n_work = work.nodes.len();
        Generator {
            before,
            after,
            work,
            partner_of_after,
            partner_of_work,
            in_order_work: vec![false; n_work],
            in_order_after: vec![false; after.len()],
            actions: Vec::new(),
        }
    }

    fn set_in_order_work(&mut self, slot: usize, v: bool) {
        if slot >= self.in_order_work.len() {
            self.in_order_work.resize(slot + 1, false);
        }
        self.in_order_work[slot] = v;
    }

    fn work_parent_of(&self, after_parent: Option<NodeId>) -> usize {
        match after_parent {
            None => 0,
            Some(p) => self.partner_of_after[p.index()].expect("parent visited first"),
        }
    }

    fn parent_ref(&self, slot: usize) -> NodeRef {
        self.work.nodes[slot].origin
    }

    fn run(mut self) -> EditScript {
        if self.after.is_empty() {
            return EditScript::default();
        }
        let mut queue = std::collections::VecDeque::from([self.after.root()]);
        while let Some(x) = queue.pop_front() {
            queue.extend(self.after.children(x).iter().copied());
            let y = self.after.parent(x);
            let z = self.work_parent_of(y);
            let w = match self.partner_of_after[x.index()] {
                None => {
                    let k = self.find_pos(x);
                    let n = self.after.node(x);
                    let w = self
                        .work
                        .new_node(n.kind, n.label.clone(), n.span.clone(), x);
                    self.work.attach(w, z, k).expect("valid insert position");
                    self.partner_of_after[x.index()] = Some(w);
                    self.partner_of_work.push(Some(x));
                    self.actions.push(EditAction::Insert {
                        node: x,
                        kind: n.kind,
                        label: n.label.clone(),
                        span: n.span.clone(),
                        parent: self.parent_ref(z),
                        after_parent: y,
                        parent_kind: y.map(|p| self.after.kind(p)),
                        position: k,
                    });
                    w
                }
                Some(w) => {
                    let an = self.after.node(x);
                    if self.work.nodes[w].label != an.label {
                        let old =
                            std::mem::replace(&mut self.work.nodes[w].label, an.label.clone());
                        self.actions.push(EditAction::Update {
                            node: self.before_id(w),
                            after: x,
                            kind: an.kind,
                            old_label: old,
                            new_label: an.label.clone(),
                            before_span: self.work.nodes[w].span.clone(),
                            after_span: an.span.clone(),
                        });
                    }
                    if self.work.nodes[w].parent != Some(z) {
                        self.work.detach(w);
                        let k = self.find_pos(x);
                        self.work.attach(w, z, k).expect("valid move position");
                        self.push_move(w, x, z, k);
                    }
                    w
                }
            };
            self.set_in_order_work(w, true);
            self.in_order_after[x.index()] = true;
            self.align_children(w, x);
        }
        for slot in self.work.postorder() {
            if slot == 0 || self.partner_of_work[slot].is_some() {
                continue;
            }
            let n = &self.work.nodes[slot];
            debug_assert!(n.children.is_empty(), "unmapped node still has children");
            self.actions.push(EditAction::Delete {
                node: self.before_id(slot),
                kind: n.kind,
                label: n.label.clone(),
                span: n.span.clone(),
            });
            self.work.detach(slot);
        }
        EditScript {
            actions: self.actions,
        }
    }

    fn before_id(&self, slot: usize) -> NodeId {
        match self.work.nodes[slot].origin {
            NodeRef::Before(id) => id,
            other => panic!("slot {slot} is not a before-node: {other:?}"),
        }
    }

    fn push_move(&mut self, w: usize, x: NodeId, z: usize, k: usize) {
        let before_id = self.before_id(w);
        let y = self.after.parent(x);
        self.actions.push(EditAction::Move {
            node: before_id,
            after: x,
            kind: self.after.kind(x),
            label: self.after.label(x).to_string(),
            before_span: self.before.span(before_id).clone(),
            after_span: self.after.span(x).clone(),
            parent: self.parent_ref(z),
            after_parent: y,
            parent_kind: y.map(|p| self.after.kind(p)),
            position: k,
        });
    }

    fn align_children(&mut self, w: usize, x: NodeId) {
        for c in self.work.nodes[w].children.clone() {
            self.set_in_order_work(c, false);
        }
        for &c in self.after.children(x) {
            self.in_order_after[c.index()] = false;
        }
        let s1: Vec<usize> = self.work.nodes[w]
            .children
            .iter()
            .copied()
            .filter(|&c| self.partner_of_work[c].is_some_and(|p| self.after.parent(p) == Some(x)))
            .collect();
        let s2: Vec<NodeId> = self
            .after
            .children(x)
            .iter()
            .copied()
            .filter(|&c| {
                self.partner_of_after[c.index()]
                    .is_some_and(|p| self.work.nodes[p].parent == Some(w))
            })
            .collect();
        let common = lcs(&s1, &s2, |&a, &b| self.partner_of_work[a] == Some(b));
        for &(i, j) in &common {
            self.set_in_order_work(s1[i], true);
            self.in_order_after[s2[j].index()] = true;
        }
        for (j, &b) in s2.iter().enumerate() {
            if common.iter().any(|&(_, cj)| cj == j) {
                continue;
            }
            let a = self.partner_of_after[b.index()].unwrap();
            self.work.detach(a);
            let k = self.find_pos(b);
            self.work.attach(a, w, k).expect("valid align position");
            self.push_move(a, b, w, k);
            self.set_in_order_work(a, true);
            self.in_order_after[b.index()] = true;
        }
    }

    /// Target index in the work tree for after-node `x`: just right of the
    /// partner of its rightmost in-order left sibling.
    fn find_pos(&self, x: NodeId) -> usize {
        let Some(y) = self.after.parent(x) else {
            return 0;
        };
        let siblings = self.after.children(y);
        let idx = siblings.iter().position(|&s| s == x).unwrap();
        for &v in siblings[..idx].iter().rev() {
            if self.in_order_after[v.index()] {
                if let Some(u) = self.partner_of_after[v.index()] {
                    if self.work.nodes[u].parent.is_some() {
                        return self.work.index_in_parent(u) + 1;
                    }
                }
            }
        }
        0
    }
}

/// Replays `script` on a copy of `before`.
pub fn apply_script(before: &Ast, script: &EditScript) -> Result<Ast, ApplyError> {
    let mut work = WorkTree::from_ast(before);
    for (index, action) in script.actions.iter().enumerate() {
        let fail = |reason: String| ApplyError {
            index,
            action: action.name(),
            reason,
        };
        let resolve = |work: &WorkTree, r: NodeRef| {
            work.resolve(r)
                .ok_or_else(|| fail(format!("unknown node {r:?}")))
        };
        match action {
            EditAction::Insert {
                node,
                kind,
                label,
                span,
                parent,
                position,
                ..
            } => {
                if work.by_inserted.contains_key(node) {
                    return Err(fail(format!("after-node {node} inserted twice")));
                }
                let p = resolve(&work, *parent)?;
                let slot = work.new_node(*kind, label.clone(), span.clone(), *node);
                work.attach(slot, p, *position).map_err(fail)?;
            }
            EditAction::Delete { node, .. } => {
                let s = resolve(&work, NodeRef::Before(*node))?;
                if !work.nodes[s].children.is_empty() {
                    return Err(fail(format!("node {node} still has children")));
                }
                if work.nodes[s].parent.is_none() {
                    return Err(fail(format!("node {node} is detached")));
                }
                work.detach(s);
                work.by_before[node.index()] = None;
            }
            EditAction::Update {
                node,
                kind,
                new_label,
                ..
            } => {
                let s = resolve(&work, NodeRef::Before(*node))?;
                if work.nodes[s].kind != *kind {
                    return Err(fail(format!(
                        "kind mismatch: node is {}, action names {kind}",
                        work.nodes[s].kind
                    )));
                }
                work.nodes[s].label = new_label.clone();
            }
            EditAction::Move {
                node,
                parent,
                position,
                ..
            } => {
                let s = resolve(&work, NodeRef::Before(*node))?;
                let p = resolve(&work, *parent)?;
                if work.is_ancestor_or_self(s, p) {
                    return Err(fail(format!("cannot move {node} below itself")));
                }
                work.detach(s);
                work.attach(s, p, *position).map_err(fail)?;
            }
        }
    }
    work.into_ast(before.file().clone())
        .map_err(|reason| ApplyError {
            index: script.actions.len(),
            action: "FINISH",
            reason,
        })
}
