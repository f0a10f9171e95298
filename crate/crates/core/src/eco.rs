//! The Motzkin generating tree, coded by 132-avoiding permutations without an
//! adjacent factor `a (a+1)`.
//!
//! The root is `21`. A node's children are obtained by inserting the new
//! maximum into each active site, left to right. Sites are tested directly
//! against the two class conditions rather than through a positional case
//! analysis. Labels then follow the succession rule
//! `(2); (k) -> (k+1)(k-1)(k-2)...(2)(1)`.

use serde::Serialize;

use crate::pattern::contains_slice;
use crate::perm::{has_adjacent_consecutive_factor, Permutation};

/// Rule `Omega`: root label 2, `(k) -> (k+1)(k-1)...(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuccessionRule {
    pub root_label: usize,
}

impl SuccessionRule {
    pub const MOTZKIN: SuccessionRule = SuccessionRule { root_label: 2 };

    pub fn produce(&self, label: usize) -> Vec<usize> {
        std::iter::once(label + 1).chain((1..label).rev()).collect()
    }
}

fn in_class(p: &[u32]) -> bool {
    !contains_slice(p, &[1, 3, 2]) && !has_adjacent_consecutive_factor(p)
}

/// Sites (1-based gaps) where inserting the new maximum stays in the class.
pub fn active_sites(pi: &Permutation) -> Vec<usize> {
    (1..=pi.len() + 1)
        .filter(|&site| {
            let child = pi.insert_max(site).expect("site in range");
            in_class(child.as_slice())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub perm: Permutation,
    pub active_sites: Vec<usize>,
    pub label: usize,
}

impl TreeNode {
    pub fn new(perm: Permutation) -> Self {
        let active_sites = active_sites(&perm);
        TreeNode {
            label: active_sites.len(),
            perm,
            active_sites,
        }
    }

    pub fn root() -> Self {
        TreeNode::new(Permutation::from_vec_unchecked(vec![2, 1]))
    }

    pub fn children(&self) -> Vec<TreeNode> {
        self.active_sites
            .iter()
            .map(|&s| TreeNode::new(self.perm.insert_max(s).expect("active site in range")))
            .collect()
    }
}

/// Children labels, in site order, match the rule's production.
pub fn verify_succession(node: &TreeNode) -> bool {
    let labels: Vec<usize> = node.children().iter().map(|c| c.label).collect();
    labels == SuccessionRule::MOTZKIN.produce(node.label)
}

/// All nodes on `level` (root is level 1), left to right. Level 0 is empty.
pub fn expand_level(level: usize) -> Vec<TreeNode> {
    if level == 0 {
        return Vec::new();
    }
    let mut nodes = vec![TreeNode::root()];
    for _ in 1..level {
        nodes = nodes.iter().flat_map(TreeNode::children).collect();
    }
    nodes
}

/// Flattened tree for export: every node up to `depth` with a parent index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExportedNode {
    pub id: usize,
    pub parent: Option<usize>,
    pub level: usize,
    pub perm: Permutation,
    pub label: usize,
    pub active_sites: Vec<usize>,
}

pub fn export_tree(depth: usize) -> Vec<ExportedNode> {
    let mut out = Vec::new();
    if depth == 0 {
        return out;
    }
    let mut frontier: Vec<(usize, TreeNode)> = vec![(0, TreeNode::root())];
    out.push(exported(0, None, 1, &frontier[0].1));
    for level in 2..=depth {
        let mut next = Vec::new();
        for (parent_id, node) in &frontier {
            for child in node.children() {
                let id = out.len();
                out.push(exported(id, Some(*parent_id), level, &child));
                next.push((id, child));
            }
        }
        frontier = next;
    }
    out
}

fn exported(id: usize, parent: Option<usize>, level: usize, node: &TreeNode) -> ExportedNode {
    ExportedNode {
        id,
        parent,
        level,
        perm: node.perm.clone(),
        label: node.label,
        active_sites: node.active_sites.clone(),
    }
}
