//! Weight functions on the supporting graph and the feasibility test.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::support_graph::{classify_unchecked, NodeClass, NodeRef, SupportingGraph};

/// Double-sided bounds `d_k ≤ f(v) ≤ c_k` on each base subgraph `G^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    c: Vec<i64>,
    d: Vec<i64>,
}

impl Bounds {
    pub fn new(c: Vec<i64>, d: Vec<i64>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::Bounds("bounds must have at least one entry".into()));
        }
        if c.len() != d.len() {
            return Err(Error::Bounds(format!("upper bound has {} entries but lower bound has {}", c.len(), d.len())));
        }
        if let Some(k) = (0..c.len()).find(|&k| c[k] < d[k]) {
            return Err(Error::Bounds(format!("c_{} = {} is below d_{} = {}", k + 1, c[k], k + 1, d[k])));
        }
        Ok(Bounds { c, d })
    }

    /// Upper bound `c` with zero lower bound.
    pub fn zero_lower(c: Vec<i64>) -> Result<Self> {
        let d = vec![0; c.len()];
        Self::new(c, d)
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn upper(&self) -> &[i64] {
        &self.c
    }

    pub fn lower(&self) -> &[i64] {
        &self.d
    }

    /// `c − d`, the parameter of the crystal these bounds produce.
    pub fn span(&self) -> Vec<i64> {
        self.c.iter().zip(&self.d).map(|(c, d)| c - d).collect()
    }

    pub fn has_zero_lower(&self) -> bool {
        self.d.iter().all(|&x| x == 0)
    }

    pub fn contains_tuple(&self, a: &[i64]) -> bool {
        a.len() == self.n() && (0..self.n()).all(|k| self.d[k] <= a[k] && a[k] <= self.c[k])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

/// Which part of the feasibility definition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    Monotone,
    Bounds,
    Switch,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Monotone => "monotone",
            Condition::Bounds => "bounds",
            Condition::Switch => "switch",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    /// The offending node; for a switch failure, the first member of the multinode.
    pub node: NodeRef,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} violated at (i={}, j={}, k={}): {}",
            self.condition, self.node.i, self.node.j, self.node.k, self.detail
        )
    }
}

/// A feasible function: integer weights on `V(G)` in canonical node order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    bounds: Bounds,
    values: Vec<i64>,
}

impl WeightFunction {
    /// Validates feasibility before wrapping.
    pub fn new(g: &SupportingGraph, bounds: Bounds, values: Vec<i64>) -> Result<Self> {
        check_shape(g, &bounds, &values)?;
        is_feasible(g, &values, &bounds).map_err(|v| Error::Infeasible(v.to_string()))?;
        Ok(WeightFunction { bounds, values })
    }

    pub(crate) fn from_parts(bounds: Bounds, values: Vec<i64>) -> Self {
        WeightFunction { bounds, values }
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<i64> {
        self.values
    }

    /// Value at a G-node.
    pub fn value(&self, g: &SupportingGraph, v: NodeRef) -> Option<i64> {
        g.index_of(v).map(|p| self.values[p])
    }

    /// Value at a node of `Ḡ`: `f(v)` on `G`, `c_k` left of `G^k`, `d_k` right of it.
    pub fn extended_value(&self, g: &SupportingGraph, v: NodeRef) -> i64 {
        extended(g, &self.bounds, &self.values, v)
    }

    /// Whether the function is constant on every base subgraph; returns the constants.
    pub fn principal_tuple(&self, g: &SupportingGraph) -> Option<Vec<i64>> {
        principal_tuple(g, &self.values)
    }

    pub fn to_json(&self, g: &SupportingGraph) -> WeightFunctionJson {
        WeightFunctionJson {
            n: g.n(),
            c: self.bounds.c.clone(),
            d: self.bounds.d.clone(),
            values: g.nodes().iter().zip(&self.values).map(|(v, &x)| [v.k as i64, v.i as i64, v.j as i64, x]).collect(),
        }
    }

    /// Parses the JSON form and validates feasibility.
    pub fn from_json(json: &WeightFunctionJson) -> Result<(SupportingGraph, Self)> {
        let g = SupportingGraph::new(json.n)?;
        let d = if json.d.is_empty() { vec![0; json.c.len()] } else { json.d.clone() };
        let bounds = Bounds::new(json.c.clone(), d)?;
        let mut values = vec![None; g.node_count()];
        for entry in &json.values {
            let [k, i, j, x] = *entry;
            let node = NodeRef::new(k.max(0) as usize, i.max(0) as usize, j.max(0) as usize);
            let p = (k > 0 && i > 0 && j > 0)
                .then(|| g.index_of(node))
                .flatten()
                .ok_or_else(|| Error::Infeasible(format!("({k}, {i}, {j}) is not a node of G")))?;
            if values[p].replace(x).is_some() {
                return Err(Error::Infeasible(format!("duplicate value for {node}")));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(p, x)| x.ok_or_else(|| Error::Infeasible(format!("missing value for {}", g.nodes()[p]))))
            .collect::<Result<Vec<_>>>()?;
        let f = WeightFunction::new(&g, bounds, values)?;
        Ok((g, f))
    }
}

/// `{"n", "c", "d", "values": [[k, i, j, value], ...]}`, values in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFunctionJson {
    pub n: usize,
    pub c: Vec<i64>,
    #[serde(default)]
    pub d: Vec<i64>,
    pub values: Vec<[i64; 4]>,
}

fn check_shape(g: &SupportingGraph, bounds: &Bounds, values: &[i64]) -> Result<()> {
    if bounds.n() != g.n() {
        return Err(Error::Bounds(format!("bounds have {} entries for a graph with {} colors", bounds.n(), g.n())));
    }
    if values.len() != g.node_count() {
        return Err(Error::Infeasible(format!("expected {} node values, got {}", g.node_count(), values.len())));
    }
    Ok(())
}

#[inline]
pub(crate) fn extended(g: &SupportingGraph, b: &Bounds, values: &[i64], v: NodeRef) -> i64 {
    match g.index_of(v) {
        Some(p) => values[p],
        None => match classify_unchecked(g.n(), v) {
            NodeClass::LeftExtra => b.c[v.k - 1],
            _ => b.d[v.k - 1],
        },
    }
}

/// `f(u) − f(v)` for the edge of `Ḡ` from `u` to `v`.
#[inline]
fn slope(g: &SupportingGraph, b: &Bounds, values: &[i64], u: NodeRef, v: NodeRef) -> i64 {
    extended(g, b, values, u) - extended(g, b, values, v)
}

/// Switch-condition flags for an ordered member list of one multinode, using
/// extended values.
pub(crate) fn switch_flags(g: &SupportingGraph, b: &Bounds, values: &[i64], members: &[NodeRef]) -> Vec<bool> {
    let m = members.len();
    // se_ok[p]: SE-edges of members[..p] all tight
    let mut se_ok = vec![true; m + 1];
    for p in 0..m {
        let u = members[p];
        let tight = NodeRef::new(u.k, u.i + 1, u.j + 1);
        se_ok[p + 1] = se_ok[p] && slope(g, b, values, u, tight) == 0;
    }
    // sw_ok[p]: SW-edges of members[p..] all tight
    let mut sw_ok = vec![true; m + 1];
    for p in (0..m).rev() {
        let u = members[p];
        let tail = NodeRef::new(u.k, u.i + 1, u.j);
        sw_ok[p] = sw_ok[p + 1] && slope(g, b, values, tail, u) == 0;
    }
    (0..m).map(|p| se_ok[p] && sw_ok[p + 1]).collect()
}

fn pick(members: &[NodeRef], flags: &[bool], dir: Direction) -> Option<NodeRef> {
    let pos = match dir {
        Direction::Forward => flags.iter().position(|&x| x),
        Direction::Backward => flags.iter().rposition(|&x| x),
    };
    pos.map(|p| members[p])
}

/// Switch-node of the extended multinode `V̄_i(j)`.
pub(crate) fn extended_switch_node(
    g: &SupportingGraph,
    b: &Bounds,
    values: &[i64],
    i: usize,
    j: usize,
    dir: Direction,
) -> Option<NodeRef> {
    let members: Vec<NodeRef> = g.extended_multinode(i, j).collect();
    let flags = switch_flags(g, b, values, &members);
    pick(&members, &flags, dir)
}

/// First (forward) or last (backward) member of `V_i(j)` satisfying the
/// switch condition. `None` only for an infeasible function or an
/// out-of-range multinode.
pub fn switch_node(g: &SupportingGraph, f: &WeightFunction, i: usize, j: usize, dir: Direction) -> Option<NodeRef> {
    let members = &g.multinode(i, j)?.members;
    let flags = switch_flags(g, &f.bounds, &f.values, members);
    pick(members, &flags, dir)
}

/// Checks monotonicity, bounds and the switch condition, in that order, each
/// scanned in canonical order.
pub fn is_feasible(g: &SupportingGraph, values: &[i64], b: &Bounds) -> Result<(), Violation> {
    if b.n() != g.n() || values.len() != g.node_count() {
        return Err(Violation {
            condition: Condition::Bounds,
            node: g.nodes()[0],
            detail: "value vector or bounds do not match the graph".into(),
        });
    }
    for (tail, head) in g.edges() {
        let (x, y) = (values[g.index_of(tail).unwrap()], values[g.index_of(head).unwrap()]);
        if x < y {
            return Err(Violation {
                condition: Condition::Monotone,
                node: tail,
                detail: format!("f({tail}) = {x} < f({head}) = {y}"),
            });
        }
    }
    for (v, &x) in g.nodes().iter().zip(values) {
        let (lo, hi) = (b.d[v.k - 1], b.c[v.k - 1]);
        if x < lo || x > hi {
            return Err(Violation {
                condition: Condition::Bounds,
                node: *v,
                detail: format!("f({v}) = {x} outside [{lo}, {hi}]"),
            });
        }
    }
    for m in g.multinodes() {
        if !switch_flags(g, b, values, &m.members).contains(&true) {
            return Err(Violation {
                condition: Condition::Switch,
                node: m.members[0],
                detail: format!("no member of V_{}({}) satisfies the switch condition", m.i, m.j),
            });
        }
    }
    Ok(())
}

/// The principal function `f[a]`, constant `a_k` on each `G^k`.
pub fn principal_function(g: &SupportingGraph, bounds: &Bounds, a: &[i64]) -> Result<WeightFunction> {
    if bounds.n() != g.n() {
        return Err(Error::Bounds(format!("bounds have {} entries, expected {}", bounds.n(), g.n())));
    }
    if !bounds.contains_tuple(a) {
        return Err(Error::Bounds(format!("principal tuple {a:?} outside [{:?}, {:?}]", bounds.d, bounds.c)));
    }
    let values = g.nodes().iter().map(|v| a[v.k - 1]).collect();
    Ok(WeightFunction::from_parts(bounds.clone(), values))
}

pub(crate) fn principal_tuple(g: &SupportingGraph, values: &[i64]) -> Option<Vec<i64>> {
    let mut a: Vec<Option<i64>> = vec![None; g.n()];
    for (v, &x) in g.nodes().iter().zip(values) {
        match a[v.k - 1] {
            None => a[v.k - 1] = Some(x),
            Some(y) if y != x => return None,
            _ => {}
        }
    }
    a.into_iter().collect()
}
