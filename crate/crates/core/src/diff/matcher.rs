//! Two-phase node matching: greedy top-down mapping of the highest isomorphic
//! subtrees, then bottom-up mapping of containers by the dice similarity of
//! their mapped descendants, with a recovery pass inside every container pair.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::lcs::lcs;
use super::MappingStore;
use crate::ast::{isomorphic, Ast, NodeId, NodeKind};

/// Candidates from the before and after tree.
type Sides = (Vec<NodeId>, Vec<NodeId>);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatchConfig {
    /// Smallest subtree height considered by the top-down phase.
    pub min_height: u32,
    /// Smallest dice similarity at which the bottom-up phase maps two containers.
    pub min_dice: f64,
}

impl Default for MatchConfig {
    fn default() -> Self {
        MatchConfig {
            min_height: 2,
            min_dice: 0.5,
        }
    }
}

/// Computes a mapping between `before` and `after`.
pub fn match_trees(before: &Ast, after: &Ast, config: &MatchConfig) -> MappingStore {
    let mut m = MappingStore::new(before, after);
    if before.is_empty() || after.is_empty() {
        return m;
    }
    let mut ctx = Matcher {
        before,
        after,
        m: &mut m,
    };
    ctx.top_down(config.min_height.max(1));
    ctx.bottom_up(config.min_dice);
    m
}

/// Nodes waiting to be examined, bucketed by height.
struct HeightQueue {
    buckets: BTreeMap<u32, Vec<NodeId>>,
}

impl HeightQueue {
    fn new(ast: &Ast) -> Self {
        let mut q = HeightQueue {
            buckets: BTreeMap::new(),
        };
        q.push(ast, ast.root());
        q
    }

    fn push(&mut self, ast: &Ast, id: NodeId) {
        self.buckets.entry(ast.height(id)).or_default().push(id);
    }

    fn open(&mut self, ast: &Ast, id: NodeId) {
        for &c in ast.children(id) {
            self.push(ast, c);
        }
    }

    fn peek_height(&self) -> Option<u32> {
        self.buckets.keys().next_back().copied()
    }

    fn pop(&mut self) -> Vec<NodeId> {
        let (_, mut ids) = self.buckets.pop_last().unwrap_or_default();
        ids.sort();
        ids
    }
}

struct Matcher<'a> {
    before: &'a Ast,
    after: &'a Ast,
    m: &'a mut MappingStore,
}

impl Matcher<'_> {
    fn link_subtrees(&mut self, b: NodeId, a: NodeId) {
        for (x, y) in self.before.subtree(b).zip(self.after.subtree(a)) {
            self.m.link(x, y);
        }
    }

    fn iso(&self, b: NodeId, a: NodeId) -> bool {
        self.before.structural_hash(b) == self.after.structural_hash(a)
            && isomorphic(self.before, b, self.after, a)
    }

    fn top_down(&mut self, min_height: u32) {
        let (before, after) = (self.before, self.after);
        let mut q1 = HeightQueue::new(before);
        let mut q2 = HeightQueue::new(after);
        let mut ambiguous: Vec<(NodeId, NodeId)> = Vec::new();
        while let (Some(h1), Some(h2)) = (q1.peek_height(), q2.peek_height()) {
            if h1.min(h2) < min_height {
                break;
            }
            if h1 != h2 {
                if h1 > h2 {
                    for t in q1.pop() {
                        q1.open(before, t);
                    }
                } else {
                    for t in q2.pop() {
                        q2.open(after, t);
                    }
                }
                continue;
            }
            let hs1 = q1.pop();
            let hs2 = q2.pop();
            let mut by_hash: HashMap<u64, Vec<NodeId>> = HashMap::new();
            for &t2 in &hs2 {
                by_hash
                    .entry(after.structural_hash(t2))
                    .or_default()
                    .push(t2);
            }
            let mut partners1: HashMap<NodeId, Vec<NodeId>> = HashMap::new();
            let mut partners2: HashMap<NodeId, Vec<NodeId>> = HashMap::new();
            for &t1 in &hs1 {
                if let Some(cands) = by_hash.get(&before.structural_hash(t1)) {
                    for &t2 in cands {
                        if isomorphic(before, t1, after, t2) {
                            partners1.entry(t1).or_default().push(t2);
                            partners2.entry(t2).or_default().push(t1);
                        }
                    }
                }
            }
            for &t1 in &hs1 {
                match partners1.get(&t1).map(Vec::as_slice) {
                    None => q1.open(before, t1),
                    Some(&[t2]) if partners2[&t2].len() == 1 => self.link_subtrees(t1, t2),
                    Some(ps) => ambiguous.extend(ps.iter().map(|&t2| (t1, t2))),
                }
            }
            for &t2 in &hs2 {
                if !partners2.contains_key(&t2) {
                    q2.open(after, t2);
                }
            }
        }
        self.resolve_ambiguous(ambiguous);
    }

    /// Picks among isomorphic candidates with several possible partners:
    /// larger subtrees first, then pairs whose parents are mapped to each
    /// other, then by parent similarity, then by postorder distance.
    fn resolve_ambiguous(&mut self, mut candidates: Vec<(NodeId, NodeId)>) {
        while !candidates.is_empty() {
            candidates.retain(|&(b, a)| !self.m.is_before_mapped(b) && !self.m.is_after_mapped(a));
            let Some(best) = candidates.iter().copied().min_by(|&x, &y| {
                let kx = self.candidate_key(x);
                let ky = self.candidate_key(y);
                kx.partial_cmp(&ky).unwrap().then(x.cmp(&y))
            }) else {
                break;
            };
            self.link_subtrees(best.0, best.1);
        }
    }

    fn candidate_key(&self, (b, a): (NodeId, NodeId)) -> (i64, u8, f64, i64) {
        let (pb, pa) = (self.before.parent(b), self.after.parent(a));
        let parents_mapped = match (pb, pa) {
            (Some(pb), Some(pa)) => self.m.has(pb, pa),
            (None, None) => true,
            _ => false,
        };
        let parent_dice = match (pb, pa) {
            (Some(pb), Some(pa)) => self.dice(pb, pa),
            _ => 0.0,
        };
        let distance =
            (self.before.postorder_index(b) as i64 - self.after.postorder_index(a) as i64).abs();
        (
            -(self.before.height(b) as i64),
            u8::from(!parents_mapped),
            -parent_dice,
            distance,
        )
    }

    /// Share of descendants of `b` and `a` that are mapped onto each other.
    fn dice(&self, b: NodeId, a: NodeId) -> f64 {
        let total = (self.before.size(b) - 1) + (self.after.size(a) - 1);
        if total == 0 {
            return 0.0;
        }
        let common = self
            .before
            .descendants(b)
            .filter(|&d| {
                self.m
                    .after_of(d)
                    .is_some_and(|p| p != a && self.after.is_descendant_or_self(p, a))
            })
            .count();
        2.0 * common as f64 / total as f64
    }

    fn bottom_up(&mut self, min_dice: f64) {
        let (before, after) = (self.before, self.after);
        for t1 in before.postorder() {
            if t1 == before.root() {
                let r2 = after.root();
                if !self.m.is_before_mapped(t1)
                    && !self.m.is_after_mapped(r2)
                    && before.kind(t1) == after.kind(r2)
                {
                    self.m.link(t1, r2);
                }
                if self.m.has(t1, r2) {
                    self.recover(t1, r2);
                }
                break;
            }
            if self.m.is_before_mapped(t1) || before.children(t1).is_empty() {
                continue;
            }
            let mut best: Option<(f64, i64, NodeId)> = None;
            for t2 in self.container_candidates(t1) {
                let d = self.dice(t1, t2);
                let dist =
                    (before.postorder_index(t1) as i64 - after.postorder_index(t2) as i64).abs();
                let better = match best {
                    None => true,
                    Some((bd, bdist, bid)) => d > bd || (d == bd && (dist, t2) < (bdist, bid)),
                };
                if better {
                    best = Some((d, dist, t2));
                }
            }
            if let Some((d, _, t2)) = best {
                if d >= min_dice {
                    self.m.link(t1, t2);
                    self.recover(t1, t2);
                }
            }
        }
    }

    /// Unmapped after-nodes of the same kind as `t1` that are ancestors of a
    /// partner of some descendant of `t1`.
    fn container_candidates(&self, t1: NodeId) -> Vec<NodeId> {
        let kind = self.before.kind(t1);
        let mut seen = Vec::new();
        for d in self.before.descendants(t1) {
            let Some(p) = self.m.after_of(d) else {
                continue;
            };
            for anc in self.after.ancestors(p) {
                if self.after.kind(anc) == kind
                    && !self.m.is_after_mapped(anc)
                    && !seen.contains(&anc)
                {
                    seen.push(anc);
                }
            }
        }
        seen.sort();
        seen
    }

    fn unmapped_children_before(&self, id: NodeId) -> Vec<NodeId> {
        self.before
            .children(id)
            .iter()
            .copied()
            .filter(|&c| !self.m.is_before_mapped(c))
            .collect()
    }

    fn unmapped_children_after(&self, id: NodeId) -> Vec<NodeId> {
        self.after
            .children(id)
            .iter()
            .copied()
            .filter(|&c| !self.m.is_after_mapped(c))
            .collect()
    }

    fn subtree_unmapped_before(&self, id: NodeId) -> bool {
        self.before.subtree(id).all(|d| !self.m.is_before_mapped(d))
    }

    fn subtree_unmapped_after(&self, id: NodeId) -> bool {
        self.after.subtree(id).all(|d| !self.m.is_after_mapped(d))
    }

    /// Maps remaining children of a freshly mapped container pair.
    fn recover(&mut self, t1: NodeId, t2: NodeId) {
        let (before, after) = (self.before, self.after);

        // Isomorphic children, in order.
        let c1: Vec<_> = self
            .unmapped_children_before(t1)
            .into_iter()
            .filter(|&c| self.subtree_unmapped_before(c))
            .collect();
        let c2: Vec<_> = self
            .unmapped_children_after(t2)
            .into_iter()
            .filter(|&c| self.subtree_unmapped_after(c))
            .collect();
        for (i, j) in lcs(&c1, &c2, |&x, &y| self.iso(x, y)) {
            self.link_subtrees(c1[i], c2[j]);
        }

        // Same kind and label, in order.
        let c1 = self.unmapped_children_before(t1);
        let c2 = self.unmapped_children_after(t2);
        let pairs = lcs(&c1, &c2, |&x, &y| {
            before.kind(x) == after.kind(y) && before.label(x) == after.label(y)
        });
        for (i, j) in pairs {
            self.m.link(c1[i], c2[j]);
            self.recover(c1[i], c2[j]);
        }

        // Kinds that occur exactly once on each side.
        let c1 = self.unmapped_children_before(t1);
        let c2 = self.unmapped_children_after(t2);
        for &x in &c1 {
            let kind = before.kind(x);
            let same1 = c1.iter().filter(|&&o| before.kind(o) == kind).count();
            let mut same2 = c2.iter().copied().filter(|&o| after.kind(o) == kind);
            let (Some(y), None) = (same2.next(), same2.next()) else {
                continue;
            };
            if same1 == 1 {
                self.m.link(x, y);
                self.recover(x, y);
            }
        }

        // Leaves with a label unique on both sides, below unmapped children.
        let leaves1 = self.unmapped_leaves(t1, true);
        let leaves2 = self.unmapped_leaves(t2, false);
        let mut groups: BTreeMap<(NodeKind, &str), Sides> = BTreeMap::new();
        for &l in &leaves1 {
            groups
                .entry((before.kind(l), before.label(l)))
                .or_default()
                .0
                .push(l);
        }
        for &l in &leaves2 {
            groups
                .entry((after.kind(l), after.label(l)))
                .or_default()
                .1
                .push(l);
        }
        for (_, (g1, g2)) in groups {
            if let ([x], [y]) = (g1.as_slice(), g2.as_slice()) {
                self.m.link(*x, *y);
            }
        }
    }

    /// Unmapped leaves reachable from `root` through unmapped nodes only.
    fn unmapped_leaves(&self, root: NodeId, before_side: bool) -> Vec<NodeId> {
        let ast = if before_side { self.before } else { self.after };
        let mapped = |id: NodeId| {
            if before_side {
                self.m.is_before_mapped(id)
            } else {
                self.m.is_after_mapped(id)
            }
        };
        let mut out = Vec::new();
        let mut stack: Vec<NodeId> = ast.children(root).iter().rev().copied().collect();
        while let Some(id) = stack.pop() {
            if mapped(id) {
                continue;
            }
            let children = ast.children(id);
            if children.is_empty() {
                out.push(id);
            } else {
                stack.extend(children.iter().rev().copied());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn find(ast: &Ast, kind: NodeKind, label: &str) -> NodeId {
        ast.ids()
            .find(|&id| ast.kind(id) == kind && ast.label(id) == label)
            .unwrap_or_else(|| panic!("no {kind} {label:?}"))
    }

    #[test]
    fn identical_trees_map_positionally() {
        let src = "class C { int f(int a) { if (a > 0) { return a; } return -a; } }";
        let a = parse(src, "C.java").unwrap();
        let b = parse(src, "C.java").unwrap();
        let m = match_trees(&a, &b, &MatchConfig::default());
        assert_eq!(m.len(), a.len());
        assert!(a.ids().all(|id| m.after_of(id) == Some(id)));
    }

    #[test]
    fn mapped_pairs_agree_on_kind() {
        let a = parse("class C { void m() { x += y; foo(a, b); } }", "C.java").unwrap();
        let b = parse("class C { void m() { x = f(y); foo(b, a); } }", "C.java").unwrap();
        let m = match_trees(&a, &b, &MatchConfig::default());
        assert!(m.is_bijective());
        for (x, y) in m.pairs() {
            assert_eq!(a.kind(x), b.kind(y));
        }
    }

    #[test]
    fn leaf_operand_survives_condition_expansion() {
        let a = parse("class C { void m() { if (a) { go(); } } }", "C.java").unwrap();
        let b = parse("class C { void m() { if (a && b) { go(); } } }", "C.java").unwrap();
        let m = match_trees(&a, &b, &MatchConfig::default());
        let va = find(&a, NodeKind::VariableRead, "a");
        assert_eq!(m.after_of(va), Some(find(&b, NodeKind::VariableRead, "a")));
    }
}
