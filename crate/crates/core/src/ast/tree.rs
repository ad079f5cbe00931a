use std::fmt;
use std::hash::Hasher;
use std::sync::Arc;

use fnv::FnvHasher;
use serde::{Deserialize, Serialize};

use super::{NodeKind, SourceSpan};

/// Index of a node inside its [`Ast`]. Ids are assigned in preorder, so the
/// root is always `NodeId(0)` and a subtree occupies a contiguous id range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone)]
pub struct Node {
    pub kind: NodeKind,
    pub label: String,
    pub span: SourceSpan,
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    pub height: u32,
    pub size: u32,
    pub hash: u64,
    pub depth: u32,
}

/// An immutable, arena-backed syntax tree.
#[derive(Debug, Clone)]
pub struct Ast {
    file: Arc<str>,
    nodes: Vec<Node>,
    postorder_index: Vec<u32>,
}

impl Ast {
    pub fn file(&self) -> &Arc<str> {
        &self.file
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.index()]
    }

    pub fn kind(&self, id: NodeId) -> NodeKind {
        self.nodes[id.index()].kind
    }

    pub fn label(&self, id: NodeId) -> &str {
        &self.nodes[id.index()].label
    }

    pub fn span(&self, id: NodeId) -> &SourceSpan {
        &self.nodes[id.index()].span
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id.index()].parent
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.nodes[id.index()].children
    }

    pub fn child(&self, id: NodeId, pos: usize) -> Option<NodeId> {
        self.children(id).get(pos).copied()
    }

    pub fn height(&self, id: NodeId) -> u32 {
        self.nodes[id.index()].height
    }

    pub fn size(&self, id: NodeId) -> u32 {
        self.nodes[id.index()].size
    }

    pub fn structural_hash(&self, id: NodeId) -> u64 {
        self.nodes[id.index()].hash
    }

    /// Position of `id` among its parent's children.
    pub fn position(&self, id: NodeId) -> Option<usize> {
        let parent = self.parent(id)?;
        self.children(parent).iter().position(|&c| c == id)
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = NodeId> + ExactSizeIterator {
        (0..self.nodes.len() as u32).map(NodeId)
    }

    /// Index of `id` in the postorder traversal of the whole tree.
    pub fn postorder_index(&self, id: NodeId) -> u32 {
        self.postorder_index[id.index()]
    }

    /// All nodes of the tree in postorder.
    pub fn postorder(&self) -> Vec<NodeId> {
        self.postorder_from(self.root())
    }

    pub fn postorder_from(&self, root: NodeId) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.size(root) as usize);
        let mut stack = vec![(root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                out.push(id);
            } else {
                stack.push((id, true));
                for &c in self.children(id).iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// The subtree of `root` in preorder (root first).
    pub fn subtree(&self, root: NodeId) -> impl DoubleEndedIterator<Item = NodeId> {
        (root.0..root.0 + self.size(root)).map(NodeId)
    }

    /// Proper descendants of `root`.
    pub fn descendants(&self, root: NodeId) -> impl DoubleEndedIterator<Item = NodeId> {
        (root.0 + 1..root.0 + self.size(root)).map(NodeId)
    }

    pub fn is_descendant_or_self(&self, node: NodeId, ancestor: NodeId) -> bool {
        node.0 >= ancestor.0 && node.0 < ancestor.0 + self.size(ancestor)
    }

    /// Strict ancestors of `id`, nearest first.
    pub fn ancestors(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        std::iter::successors(self.parent(id), move |&p| self.parent(p))
    }

    /// Nearest ancestor-or-self whose kind satisfies `pred`.
    pub fn enclosing(&self, id: NodeId, pred: impl Fn(NodeKind) -> bool) -> Option<NodeId> {
        std::iter::once(id)
            .chain(self.ancestors(id))
            .find(|&a| pred(self.kind(a)))
    }

    /// Indented one-node-per-line rendering:
    /// `KIND "label" [startLine:startCol-endLine:endCol]`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for id in self.ids() {
            let n = self.node(id);
            for _ in 0..n.depth {
                out.push_str("  ");
            }
            out.push_str(&format!("{} \"{}\" [{}]\n", n.kind, n.label, n.span));
        }
        out
    }
}

/// Structural equality of two subtrees: same kind, label and child sequence,
/// recursively. Spans are ignored.
pub fn isomorphic(a: &Ast, a_root: NodeId, b: &Ast, b_root: NodeId) -> bool {
    if a.size(a_root) != b.size(b_root) {
        return false;
    }
    let mut stack = vec![(a_root, b_root)];
    while let Some((x, y)) = stack.pop() {
        let (nx, ny) = (a.node(x), b.node(y));
        if nx.kind != ny.kind || nx.label != ny.label || nx.children.len() != ny.children.len() {
            return false;
        }
        stack.extend(nx.children.iter().copied().zip(ny.children.iter().copied()));
    }
    true
}

/// FNV-1a combination of kind ordinal, label bytes and ordered child hashes.
pub fn combine_hash(kind: NodeKind, label: &str, child_hashes: impl Iterator<Item = u64>) -> u64 {
    let mut h = FnvHasher::default();
    h.write_u8(kind.ordinal());
    h.write_usize(label.len());
    h.write(label.as_bytes());
    let mut n = 0usize;
    for c in child_hashes {
        h.write_u64(c);
        n += 1;
    }
    h.write_usize(n);
    h.finish()
}

/// Handle to a node under construction in an [`AstBuilder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BuildId(usize);

struct Pending {
    kind: NodeKind,
    label: String,
    span: SourceSpan,
    children: Vec<BuildId>,
}

/// Bottom-up tree construction. Children are created before their parent;
/// [`AstBuilder::finish`] renumbers the reachable nodes in preorder and fills
/// in the cached metrics.
pub struct AstBuilder {
    file: Arc<str>,
    pending: Vec<Pending>,
}

impl AstBuilder {
    pub fn new(file: impl Into<Arc<str>>) -> Self {
        AstBuilder {
            file: file.into(),
            pending: Vec::new(),
        }
    }

    pub fn file(&self) -> &Arc<str> {
        &self.file
    }

    pub fn node(
        &mut self,
        kind: NodeKind,
        label: impl Into<String>,
        span: SourceSpan,
        children: Vec<BuildId>,
    ) -> BuildId {
        self.pending.push(Pending {
            kind,
            label: label.into(),
            span,
            children,
        });
        BuildId(self.pending.len() - 1)
    }

    pub fn span_of(&self, id: BuildId) -> &SourceSpan {
        &self.pending[id.0].span
    }

    pub fn kind_of(&self, id: BuildId) -> NodeKind {
        self.pending[id.0].kind
    }

    pub fn finish(self, root: BuildId) -> Ast {
        let AstBuilder { file, mut pending } = self;
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(b) = stack.pop() {
            order.push(b);
            stack.extend(pending[b.0].children.iter().rev().copied());
        }
        let mut new_id = vec![u32::MAX; pending.len()];
        for (i, b) in order.iter().enumerate() {
            assert_eq!(new_id[b.0], u32::MAX, "node reachable twice; not a tree");
            new_id[b.0] = i as u32;
        }
        let mut nodes: Vec<Node> = order
            .iter()
            .map(|b| {
                let p = &mut pending[b.0];
                Node {
                    kind: p.kind,
                    label: std::mem::take(&mut p.label),
                    span: p.span.clone(),
                    parent: None,
                    children: p.children.iter().map(|c| NodeId(new_id[c.0])).collect(),
                    height: 0,
                    size: 0,
                    hash: 0,
                    depth: 0,
                }
            })
            .collect();
        finalize(&mut nodes);
        let postorder_index = postorder_indices(&nodes);
        Ast {
            file,
            nodes,
            postorder_index,
        }
    }
}

/// Fills parent links, depth, height, size and hash. Nodes must be in preorder.
fn finalize(nodes: &mut [Node]) {
    for i in 0..nodes.len() {
        let depth = nodes[i].depth;
        for c in nodes[i].children.clone() {
            nodes[c.index()].parent = Some(NodeId(i as u32));
            nodes[c.index()].depth = depth + 1;
        }
    }
    for i in (0..nodes.len()).rev() {
        let (height, size, hash) = {
            let n = &nodes[i];
            let height = 1 + n
                .children
                .iter()
                .map(|c| nodes[c.index()].height)
                .max()
                .unwrap_or(0);
            let size = 1 + n
                .children
                .iter()
                .map(|c| nodes[c.index()].size)
                .sum::<u32>();
            let hash = combine_hash(
                n.kind,
                &n.label,
                n.children.iter().map(|c| nodes[c.index()].hash),
            );
            (height, size, hash)
        };
        let n = &mut nodes[i];
        n.height = height;
        n.size = size;
        n.hash = hash;
    }
}

fn postorder_indices(nodes: &[Node]) -> Vec<u32> {
    let mut out = vec![0u32; nodes.len()];
    if nodes.is_empty() {
        return out;
    }
    let mut next = 0u32;
    let mut stack = vec![(0usize, false)];
    while let Some((i, expanded)) = stack.pop() {
        if expanded {
            out[i] = next;
            next += 1;
        } else {
            stack.push((i, true));
            for c in nodes[i].children.iter().rev() {
                stack.push((c.index(), false));
            }
        }
    }
    out
}
