use crate::ast::{Ast, NodeId};

/// Partial bijection between the nodes of a before-tree and an after-tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingStore {
    to_after: Vec<Option<NodeId>>,
    to_before: Vec<Option<NodeId>>,
}

impl MappingStore {
    pub fn new(before: &Ast, after: &Ast) -> Self {
        MappingStore {
            to_after: vec![None; before.len()],
            to_before: vec![None; after.len()],
        }
    }

    /// Records `before <-> after`. Both nodes must be unmapped.
    pub fn link(&mut self, before: NodeId, after: NodeId) {
        assert!(
            self.to_after[before.index()].is_none() && self.to_before[after.index()].is_none(),
            "mapping {before} -> {after} would break bijectivity"
        );
        self.to_after[before.index()] = Some(after);
        self.to_before[after.index()] = Some(before);
    }

    pub fn after_of(&self, before: NodeId) -> Option<NodeId> {
        self.to_after[before.index()]
    }

    pub fn before_of(&self, after: NodeId) -> Option<NodeId> {
        self.to_before[after.index()]
    }

    pub fn is_before_mapped(&self, before: NodeId) -> bool {
        self.to_after[before.index()].is_some()
    }

    pub fn is_after_mapped(&self, after: NodeId) -> bool {
        self.to_before[after.index()].is_some()
    }

    pub fn has(&self, before: NodeId, after: NodeId) -> bool {
        self.to_after[before.index()] == Some(after)
    }

    /// Mapped pairs ordered by before-node id.
    pub fn pairs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.to_after
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.map(|a| (NodeId(i as u32), a)))
    }

    pub fn len(&self) -> usize {
        self.to_after.iter().filter(|a| a.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Checks that forward and backward lookups agree.
    pub fn is_bijective(&self) -> bool {
        self.pairs()
            .all(|(b, a)| self.to_before[a.index()] == Some(b))
            && self
                .to_before
                .iter()
                .enumerate()
                .filter_map(|(i, b)| b.map(|b| (b, NodeId(i as u32))))
                .all(|(b, a)| self.to_after[b.index()] == Some(a))
    }
}
