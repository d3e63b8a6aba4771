//! A crit-bit (PATRICIA) trie over equal-length orientation bitstrings.
//!
//! Each internal node tests one bit position and the positions increase
//! along every root-to-leaf path, so an operation touches at most `m + 1`
//! nodes and the leftmost leaf is the smallest key.

use crate::bits::OrientationBits;

/// Approximate size of an internal node: bit index plus two child links.
pub const INTERNAL_NODE_BITS: u64 = 96;

#[derive(Debug, Clone)]
enum Node {
    Leaf(OrientationBits),
    Internal { bit: usize, child: [usize; 2] },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Root,
    Child(usize, usize),
}

#[derive(Debug, Clone, Default)]
pub struct BitstringTrie {
    nodes: Vec<Node>,
    free: Vec<usize>,
    root: Option<usize>,
    len: usize,
    key_bits: u64,
}

impl BitstringTrie {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn alloc(&mut self, node: Node) -> usize {
        match self.free.pop() {
            Some(i) => {
                self.nodes[i] = node;
                i
            }
            None => {
                self.nodes.push(node);
                self.nodes.len() - 1
            }
        }
    }

    fn get_slot(&self, slot: Slot) -> usize {
        match slot {
            Slot::Root => self.root.expect("non-empty trie"),
            Slot::Child(p, d) => match &self.nodes[p] {
                Node::Internal { child, .. } => child[d],
                Node::Leaf(_) => unreachable!("leaf has no children"),
            },
        }
    }

    fn set_slot(&mut self, slot: Slot, target: usize) {
        match slot {
            Slot::Root => self.root = Some(target),
            Slot::Child(p, d) => match &mut self.nodes[p] {
                Node::Internal { child, .. } => child[d] = target,
                Node::Leaf(_) => unreachable!("leaf has no children"),
            },
        }
    }

    /// Leaf reached by following `key`'s bits from the root.
    fn closest_leaf(&self, key: &OrientationBits) -> Option<&OrientationBits> {
        let mut at = self.root?;
        loop {
            match &self.nodes[at] {
                Node::Leaf(k) => return Some(k),
                Node::Internal { bit, child } => at = child[key.get(*bit) as usize],
            }
        }
    }

    pub fn contains(&self, key: &OrientationBits) -> bool {
        self.closest_leaf(key) == Some(key)
    }

    /// Inserts `key`; `false` if it was already present.
    pub fn insert(&mut self, key: OrientationBits) -> bool {
        let Some(closest) = self.closest_leaf(&key) else {
            let leaf = self.alloc(Node::Leaf(key));
            self.root = Some(leaf);
            self.record_insert();
            return true;
        };
        assert_eq!(closest.len(), key.len(), "keys must have equal length");
        let Some(crit) = closest.first_difference(&key) else {
            return false;
        };
        let mut slot = Slot::Root;
        loop {
            let at = self.get_slot(slot);
            match &self.nodes[at] {
                Node::Internal { bit, child: _ } if *bit < crit => {
                    slot = Slot::Child(at, key.get(*bit) as usize);
                }
                _ => break,
            }
        }
        let side = key.get(crit) as usize;
        let existing = self.get_slot(slot);
        let leaf = self.alloc(Node::Leaf(key));
        let mut child = [existing; 2];
        child[side] = leaf;
        let internal = self.alloc(Node::Internal { bit: crit, child });
        self.set_slot(slot, internal);
        self.record_insert();
        true
    }

    fn record_insert(&mut self) {
        if self.len == 0 {
            if let Some(Node::Leaf(k)) = self.root.map(|r| &self.nodes[r]) {
                self.key_bits = k.len() as u64;
            }
        }
        self.len += 1;
    }

    /// Removes `key`; `false` if it was absent.
    pub fn remove(&mut self, key: &OrientationBits) -> bool {
        let Some(root) = self.root else {
            return false;
        };
        let (mut parent, mut grand) = (None::<(usize, usize)>, Slot::Root);
        let mut at = root;
        loop {
            match &self.nodes[at] {
                Node::Leaf(k) => {
                    if k != key {
                        return false;
                    }
                    break;
                }
                Node::Internal { bit, child } => {
                    let d = key.get(*bit) as usize;
                    if let Some((p, pd)) = parent {
                        grand = Slot::Child(p, pd);
                    }
                    parent = Some((at, d));
                    at = child[d];
                }
            }
        }
        self.free.push(at);
        match parent {
            None => self.root = None,
            Some((p, d)) => {
                let sibling = match &self.nodes[p] {
                    Node::Internal { child, .. } => child[1 - d],
                    Node::Leaf(_) => unreachable!(),
                };
                self.set_slot(grand, sibling);
                self.free.push(p);
            }
        }
        self.len -= 1;
        true
    }

    /// Removes and returns the smallest key.
    pub fn pop_first(&mut self) -> Option<OrientationBits> {
        let mut at = self.root?;
        let key = loop {
            match &self.nodes[at] {
                Node::Leaf(k) => break k.clone(),
                Node::Internal { child, .. } => at = child[0],
            }
        };
        self.remove(&key);
        Some(key)
    }

    /// Stored bits: one key per leaf plus the internal nodes.
    pub fn memory_bits(&self) -> u64 {
        let internal = self.len.saturating_sub(1) as u64;
        self.len as u64 * self.key_bits + internal * INTERNAL_NODE_BITS
    }

    /// Number of nodes on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        let Some(root) = self.root else {
            return 0;
        };
        let mut best = 0;
        let mut stack = vec![(root, 1)];
        while let Some((at, d)) = stack.pop() {
            match &self.nodes[at] {
                Node::Leaf(_) => best = best.max(d),
                Node::Internal { child, .. } => {
                    stack.push((child[0], d + 1));
                    stack.push((child[1], d + 1));
                }
            }
        }
        best
    }
}
