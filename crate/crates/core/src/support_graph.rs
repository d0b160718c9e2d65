//! The supporting graph `G` of the crossing model and its extension `Ḡ`.
//!
//! `G` is the disjoint union of base subgraphs `G^1..G^n`; node `v_i^k(j)`
//! lives in `G^k` at level `i` and position `j`. Nodes sharing `(i, j)`
//! across base subgraphs form the multinode `V_i(j)`.
//!
//! The extension `Ḡ` is never stored. Membership and classification of
//! extra nodes are answered from index arithmetic alone.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identity `(k, i, j)` of the node `v_i^k(j)`.
///
/// Ordered canonically by `(i, j, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NodeRef {
    pub k: usize,
    pub i: usize,
    pub j: usize,
}

impl NodeRef {
    pub const fn new(k: usize, i: usize, j: usize) -> Self {
        NodeRef { k, i, j }
    }

    fn key(&self) -> (usize, usize, usize) {
        (self.i, self.j, self.k)
    }
}

impl Ord for NodeRef {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for NodeRef {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v_{}^{}({})", self.i, self.k, self.j)
    }
}

/// Where a node of `Ḡ` sits relative to its base subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeClass {
    InG,
    /// Extended by the upper bound `c_k`.
    LeftExtra,
    /// Extended by the lower bound `d_k`.
    RightExtra,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multinode {
    pub i: usize,
    pub j: usize,
    /// Ordered by increasing `k`.
    pub members: Vec<NodeRef>,
}

/// The four possible incident edges of a node, named by the other endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Neighbors {
    /// Tail of the NW-edge, `v_{i-1}^k(j-1)`.
    pub nw: Option<NodeRef>,
    /// Tail of the SW-edge, `v_{i+1}^k(j)`.
    pub sw: Option<NodeRef>,
    /// Head of the NE-edge, `v_{i-1}^k(j)`.
    pub ne: Option<NodeRef>,
    /// Head of the SE-edge, `v_{i+1}^k(j+1)`.
    pub se: Option<NodeRef>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rhombus {
    pub left: NodeRef,
    pub upper: NodeRef,
    pub right: NodeRef,
    pub lower: NodeRef,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportingGraph {
    n: usize,
    nodes: Vec<NodeRef>,
    // flat (k, i, j) -> canonical position; dims n × (n+2) × (n+2)
    index: Vec<Option<u32>>,
    multinodes: Vec<Multinode>,
}

pub fn build_supporting_graph(n: usize) -> Result<SupportingGraph> {
    SupportingGraph::new(n)
}

impl SupportingGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter("number of colors must be at least 1".into()));
        }
        let mut nodes = Vec::new();
        let mut multinodes = Vec::new();
        for i in 1..=n {
            for j in 1..=i {
                let members: Vec<NodeRef> = (i - j + 1..=n - j + 1).map(|k| NodeRef::new(k, i, j)).collect();
                nodes.extend(members.iter().copied());
                multinodes.push(Multinode { i, j, members });
            }
        }
        let side = n + 2;
        let mut index = vec![None; n * side * side];
        for (pos, v) in nodes.iter().enumerate() {
            index[(v.k - 1) * side * side + v.i * side + v.j] = Some(pos as u32);
        }
        Ok(SupportingGraph { n, nodes, index, multinodes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All G-nodes in canonical `(i, j, k)` order.
    pub fn nodes(&self) -> &[NodeRef] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Canonical position of a G-node, `None` for anything else.
    #[inline]
    pub fn index_of(&self, v: NodeRef) -> Option<usize> {
        if v.k == 0 || v.k > self.n || v.i > self.n + 1 || v.j > self.n + 1 {
            return None;
        }
        let side = self.n + 2;
        self.index[(v.k - 1) * side * side + v.i * side + v.j].map(|p| p as usize)
    }

    pub fn contains(&self, v: NodeRef) -> bool {
        self.index_of(v).is_some()
    }

    /// Whether `v` is a node of the extended graph `Ḡ`.
    pub fn is_extended_node(&self, v: NodeRef) -> bool {
        if v.k == 0 || v.k > self.n {
            return false;
        }
        let (i, j, top) = (v.i, v.j, self.n + 1);
        (i == 0 && j == 0) || (i <= top && j <= top && j <= i + 1 && !(i == top && j == 0))
    }

    pub fn classify(&self, v: NodeRef) -> Option<NodeClass> {
        if !self.is_extended_node(v) {
            return None;
        }
        Some(classify_unchecked(self.n, v))
    }

    pub fn multinodes(&self) -> &[Multinode] {
        &self.multinodes
    }

    /// The G-multinode `V_i(j)` for `1 ≤ j ≤ i ≤ n`.
    pub fn multinode(&self, i: usize, j: usize) -> Option<&Multinode> {
        if j == 0 || j > i || i > self.n {
            return None;
        }
        // levels 1..i-1 hold 1 + 2 + ... + (i-1) multinodes
        self.multinodes.get(i * (i - 1) / 2 + j - 1)
    }

    /// Members `v_i^1(j), ..., v_i^n(j)` of the extended multinode `V̄_i(j)`.
    pub fn extended_multinode(&self, i: usize, j: usize) -> impl Iterator<Item = NodeRef> {
        (1..=self.n).map(move |k| NodeRef::new(k, i, j))
    }

    /// Nodes of the base subgraph `G^k`, canonical order.
    pub fn base_nodes(&self, k: usize) -> Vec<NodeRef> {
        self.nodes.iter().copied().filter(|v| v.k == k).collect()
    }

    pub fn base_size(&self, k: usize) -> usize {
        k * (self.n + 1 - k)
    }

    pub fn left(&self, k: usize) -> NodeRef {
        NodeRef::new(k, k, 1)
    }

    pub fn right(&self, k: usize) -> NodeRef {
        let m = self.n - k + 1;
        NodeRef::new(k, m, m)
    }

    pub fn top(&self, k: usize) -> NodeRef {
        NodeRef::new(k, 1, 1)
    }

    pub fn bottom(&self, k: usize) -> NodeRef {
        NodeRef::new(k, self.n, self.n - k + 1)
    }

    /// Edges of `G` as `(tail, head)`, ascending edges first within each tail,
    /// tails in canonical order.
    pub fn edges(&self) -> Vec<(NodeRef, NodeRef)> {
        let mut out = Vec::new();
        for &v in &self.nodes {
            let nb = self.neighbors(v);
            for head in [nb.ne, nb.se].into_iter().flatten() {
                if self.contains(head) {
                    out.push((v, head));
                }
            }
        }
        out
    }

    /// Successors of a G-node inside `G`.
    pub fn out_neighbors(&self, v: NodeRef) -> Vec<NodeRef> {
        let nb = self.neighbors(v);
        [nb.ne, nb.se].into_iter().flatten().filter(|u| self.contains(*u)).collect()
    }

    /// Predecessors of a G-node inside `G`.
    pub fn in_neighbors(&self, v: NodeRef) -> Vec<NodeRef> {
        let nb = self.neighbors(v);
        [nb.nw, nb.sw].into_iter().flatten().filter(|u| self.contains(*u)).collect()
    }

    /// Incident edges of `v` in `Ḡ`; an entry is `None` when the other end is
    /// not a node of `Ḡ`.
    pub fn neighbors(&self, v: NodeRef) -> Neighbors {
        let node = |i: Option<usize>, j: Option<usize>| -> Option<NodeRef> {
            let w = NodeRef::new(v.k, i?, j?);
            self.is_extended_node(w).then_some(w)
        };
        Neighbors {
            nw: node(v.i.checked_sub(1), v.j.checked_sub(1)),
            sw: node(Some(v.i + 1), Some(v.j)),
            ne: node(v.i.checked_sub(1), Some(v.j)),
            se: node(Some(v.i + 1), Some(v.j + 1)),
        }
    }

    /// The little rhombus whose right node is `right`.
    pub fn rhombus_at(&self, right: NodeRef) -> Result<Rhombus> {
        let corner = |i: Option<usize>, j: Option<usize>| -> Result<NodeRef> {
            let w = NodeRef::new(right.k, i.unwrap_or(usize::MAX), j.unwrap_or(usize::MAX));
            if i.is_some() && j.is_some() && self.is_extended_node(w) {
                Ok(w)
            } else {
                Err(Error::AbsentRhombus(right, w))
            }
        };
        if !self.is_extended_node(right) {
            return Err(Error::AbsentRhombus(right, right));
        }
        let left = corner(Some(right.i), right.j.checked_sub(1))?;
        let upper = corner(right.i.checked_sub(1), right.j.checked_sub(1))?;
        let lower = corner(Some(right.i + 1), Some(right.j))?;
        Ok(Rhombus { left, upper, right, lower })
    }
}

/// Classification of a node already known to lie in `Ḡ`.
#[inline]
pub(crate) fn classify_unchecked(n: usize, v: NodeRef) -> NodeClass {
    let k = v.k as isize;
    let (i, j) = (v.i as isize, v.j as isize);
    let n = n as isize;
    if j >= 1 && j <= n - k + 1 && (0..k).contains(&(i - j)) {
        NodeClass::InG
    } else if j == 0 || i - j > k - 1 {
        NodeClass::LeftExtra
    } else {
        NodeClass::RightExtra
    }
}
