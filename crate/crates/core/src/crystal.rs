//! Crystal graphs: generation from the model, graph-level services and
//! serialization.
//!
//! Vertices are numbered `0..len`; every vertex has at most one outgoing and
//! one incoming edge per color. Colors are `1..=n`.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::axioms::ColoredDigraph;
use crate::error::{Error, Result};
use crate::moves::locate_move;
use crate::support_graph::SupportingGraph;
use crate::weights::{principal_function, principal_tuple, Bounds, Direction, WeightFunction};

pub const DEFAULT_CAP: usize = 2_000_000;

/// String lengths at a vertex: `h_i`, `t_i` and `wt_i = h_i − t_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexAttrs {
    pub h: Vec<i64>,
    pub t: Vec<i64>,
    pub wt: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    n: usize,
    /// Present for graphs produced by [`generate`] and their intervals.
    bounds: Option<Bounds>,
    weights: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    /// `succ[v * n + i - 1]`
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub weights: Vec<i64>,
    pub h: Vec<i64>,
    pub t: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: usize,
    pub to: usize,
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalJson {
    pub n: usize,
    pub c: Option<Vec<i64>>,
    pub d: Option<Vec<i64>>,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

/// `Π_{p<q} (c[p:q−1] + q − p) / (q − p)`, the number of vertices of the
/// crystal with parameter `c`; `None` on overflow.
pub fn weyl_dimension(c: &[i64]) -> Option<u128> {
    fn gcd(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    if c.iter().any(|&x| x < 0) {
        return Some(0);
    }
    let m = c.len() + 1;
    let (mut num, mut den) = (1u128, 1u128);
    for p in 1..m {
        let mut run = 0u128;
        for q in p + 1..=m {
            run += c[q - 2] as u128;
            let top = run + (q - p) as u128;
            let bottom = (q - p) as u128;
            let g1 = gcd(top, den);
            let g2 = gcd(num, bottom);
            num = (num / g2).checked_mul(top / g1)?;
            den = (den / g1) * (bottom / g2);
            let g = gcd(num, den);
            (num, den) = (num / g, den / g);
        }
    }
    debug_assert_eq!(den, 1);
    Some(num)
}

/// `Σ_k (c_k − d_k) · k · (n − k + 1)`, the length of every source-to-sink path.
pub fn source_sink_distance(bounds: &Bounds) -> i64 {
    let n = bounds.n() as i64;
    bounds
        .span()
        .iter()
        .enumerate()
        .map(|(k, &s)| {
            let k = k as i64 + 1;
            s * k * (n - k + 1)
        })
        .sum()
}

/// Generates `K(c, d)` by breadth-first closure under forward moves from the
/// function at `d`, trying colors in increasing order.
pub fn generate(bounds: &Bounds, cap: usize) -> Result<CrystalGraph> {
    let estimate = weyl_dimension(&bounds.span()).unwrap_or(u128::MAX);
    if estimate > cap as u128 {
        return Err(Error::EstimateExceedsCap { cap, estimate });
    }
    let n = bounds.n();
    let g = SupportingGraph::new(n)?;
    let start = principal_function(&g, bounds, bounds.lower())?.into_values();
    let mut out = CrystalGraph::empty(n, Some(bounds.clone()));
    out.push(start);
    let mut next = 0;
    while next < out.len() {
        let v = next;
        next += 1;
        for i in 1..=n {
            let Some((pos, _, _)) = locate_move(&g, bounds, &out.weights[v], i, Direction::Forward) else {
                continue;
            };
            let mut w = out.weights[v].clone();
            w[pos] += 1;
            let id = match out.index.get(&w) {
                Some(&id) => id,
                None => {
                    if out.len() >= cap {
                        return Err(Error::CapExceeded { cap, discovered: out.len() });
                    }
                    out.push(w)
                }
            };
            out.add_edge(v, id, i);
        }
    }
    Ok(out)
}

/// Convenience wrapper with zero lower bounds and the default cap.
pub fn generate_zero(c: &[i64]) -> Result<CrystalGraph> {
    generate(&Bounds::zero_lower(c.to_vec())?, DEFAULT_CAP)
}

impl CrystalGraph {
    fn empty(n: usize, bounds: Option<Bounds>) -> Self {
        CrystalGraph { n, bounds, weights: Vec::new(), index: HashMap::new(), succ: Vec::new(), pred: Vec::new() }
    }

    fn push(&mut self, w: Vec<i64>) -> usize {
        let id = self.weights.len();
        self.index.insert(w.clone(), id);
        self.weights.push(w);
        self.succ.extend(std::iter::repeat_n(None, self.n));
        self.pred.extend(std::iter::repeat_n(None, self.n));
        id
    }

    fn add_edge(&mut self, from: usize, to: usize, color: usize) {
        let (a, b) = (from * self.n + color - 1, to * self.n + color - 1);
        debug_assert!(self.succ[a].is_none() && self.pred[b].is_none(), "parallel {color}-edge at {from}->{to}");
        self.succ[a] = Some(to);
        self.pred[b] = Some(from);
    }

    /// Builds a graph from explicit edges; vertex labels are `[id]`.
    pub fn from_edges(n: usize, vertex_count: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        let mut out = CrystalGraph::empty(n, None);
        for v in 0..vertex_count {
            out.push(vec![v as i64]);
        }
        for &(from, to, color) in edges {
            if from >= vertex_count || to >= vertex_count || color == 0 || color > n {
                return Err(Error::Structure(format!("edge {from} -> {to} of color {color} out of range")));
            }
            if out.succ[from * n + color - 1].is_some() || out.pred[to * n + color - 1].is_some() {
                return Err(Error::Structure(format!("second {color}-edge at {from} -> {to}")));
            }
            out.add_edge(from, to, color);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bounds(&self) -> Option<&Bounds> {
        self.bounds.as_ref()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().filter(|s| s.is_some()).count()
    }

    /// Canonical weight vector of `v` (values on the supporting graph in
    /// canonical node order).
    pub fn weights(&self, v: usize) -> &[i64] {
        &self.weights[v]
    }

    pub fn id_of(&self, weights: &[i64]) -> Option<usize> {
        self.index.get(weights).copied()
    }

    pub fn succ(&self, v: usize, color: usize) -> Option<usize> {
        self.succ[v * self.n + color - 1]
    }

    pub fn pred(&self, v: usize, color: usize) -> Option<usize> {
        self.pred[v * self.n + color - 1]
    }

    /// Edges `(from, to, color)` ordered by source vertex, then color.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.len()).flat_map(move |v| (1..=self.n).filter_map(move |i| self.succ(v, i).map(|w| (v, w, i))))
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| (1..=self.n).all(|i| self.pred(v, i).is_none())).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| (1..=self.n).all(|i| self.succ(v, i).is_none())).collect()
    }

    pub fn source(&self) -> Result<usize> {
        match self.sources()[..] {
            [s] => Ok(s),
            ref all => Err(Error::SourceCount(all.len())),
        }
    }

    pub fn sink(&self) -> Result<usize> {
        match self.sinks()[..] {
            [s] => Ok(s),
            ref all => Err(Error::Structure(format!("graph has {} sinks, expected exactly one", all.len()))),
        }
    }

    /// The feasible function at `v`; only for model graphs.
    pub fn function(&self, v: usize) -> Option<WeightFunction> {
        let b = self.bounds.as_ref()?;
        Some(WeightFunction::from_parts(b.clone(), self.weights[v].clone()))
    }

    /// `Some(a)` when the function at `v` is constant `a_k` on each base
    /// subgraph; only for model graphs.
    pub fn principal_tuple(&self, v: usize) -> Option<Vec<i64>> {
        self.bounds.as_ref()?;
        let g = SupportingGraph::new(self.n).ok()?;
        principal_tuple(&g, &self.weights[v])
    }

    pub fn vertex_attrs(&self) -> Vec<VertexAttrs> {
        let n = self.n;
        let mut h = vec![0i64; self.len() * n];
        let mut t = vec![0i64; self.len() * n];
        for i in 1..=n {
            for start in 0..self.len() {
                if self.pred(start, i).is_some() {
                    continue;
                }
                let mut line = vec![start];
                while let Some(w) = self.succ(*line.last().unwrap(), i) {
                    if line.len() > self.len() {
                        break;
                    }
                    line.push(w);
                }
                let len = line.len() as i64 - 1;
                for (p, &v) in line.iter().enumerate() {
                    t[v * n + i - 1] = p as i64;
                    h[v * n + i - 1] = len - p as i64;
                }
            }
        }
        (0..self.len())
            .map(|v| {
                let hv = h[v * n..(v + 1) * n].to_vec();
                let tv = t[v * n..(v + 1) * n].to_vec();
                let wt = hv.iter().zip(&tv).map(|(a, b)| a - b).collect();
                VertexAttrs { h: hv, t: tv, wt }
            })
            .collect()
    }

    /// Breadth-first distances from `start` along forward edges.
    pub fn distances_from(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for i in 1..=self.n {
                if let Some(w) = self.succ(v, i) {
                    if dist[w].is_none() {
                        dist[w] = Some(dist[v].unwrap() + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        dist
    }

    /// Common length of all source-to-sink paths, if the graph is graded
    /// from its unique source.
    pub fn graded_length(&self) -> Result<Option<usize>> {
        let s = self.source()?;
        let dist = self.distances_from(s);
        let graded = self.edges().all(|(u, v, _)| matches!((dist[u], dist[v]), (Some(a), Some(b)) if b == a + 1));
        Ok(if graded { dist[self.sink()?] } else { None })
    }

    /// Edges reversed, colors preserved.
    pub fn dual(&self) -> CrystalGraph {
        CrystalGraph {
            n: self.n,
            bounds: None,
            weights: self.weights.clone(),
            index: self.index.clone(),
            succ: self.pred.clone(),
            pred: self.succ.clone(),
        }
    }

    /// Renames color `i` to `map(i)`; `map` must permute `1..=n`.
    pub fn recolor(&self, map: impl Fn(usize) -> usize) -> CrystalGraph {
        let n = self.n;
        let mut out = CrystalGraph { bounds: None, ..self.clone() };
        for v in 0..self.len() {
            for i in 1..=n {
                let j = map(i);
                out.succ[v * n + j - 1] = self.succ(v, i);
                out.pred[v * n + j - 1] = self.pred(v, i);
            }
        }
        out
    }

    fn reach(&self, start: usize, forward: bool, colors: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &i in colors {
                let w = if forward { self.succ(v, i) } else { self.pred(v, i) };
                if let Some(w) = w {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        seen
    }

    /// Subgraph on `vertices` (in the given order) keeping the listed colors,
    /// renumbered `1..=colors.len()` in list order. Returns the subgraph and,
    /// for each new vertex, its id here.
    pub fn induced(&self, vertices: &[usize], colors: &[usize]) -> (CrystalGraph, Vec<usize>) {
        let m = colors.len();
        let keep_bounds = m == self.n && colors.iter().enumerate().all(|(p, &i)| p + 1 == i);
        let mut out = CrystalGraph::empty(m, if keep_bounds { self.bounds.clone() } else { None });
        let mut local = HashMap::with_capacity(vertices.len());
        for &v in vertices {
            local.insert(v, out.push(self.weights[v].clone()));
        }
        for &v in vertices {
            for (p, &i) in colors.iter().enumerate() {
                if let Some(w) = self.succ(v, i) {
                    if let Some(&lw) = local.get(&w) {
                        out.add_edge(local[&v], lw, p + 1);
                    }
                }
            }
        }
        (out, vertices.to_vec())
    }

    /// Vertices and edges lying on paths from `u` to `v`, with ids in
    /// increasing order.
    pub fn interval(&self, u: usize, v: usize) -> (CrystalGraph, Vec<usize>) {
        let all: Vec<usize> = (1..=self.n).collect();
        let down = self.reach(u, true, &all);
        let up = self.reach(v, false, &all);
        let members: Vec<usize> = (0..self.len()).filter(|&w| down[w] && up[w]).collect();
        self.induced(&members, &all)
    }

    /// Weakly connected components of the subgraph with the given colors,
    /// each sorted, ordered by smallest member.
    pub fn components(&self, colors: &[usize]) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &i in colors {
                    for w in [self.succ(v, i), self.pred(v, i)].into_iter().flatten() {
                        if comp[w] == usize::MAX {
                            comp[w] = id;
                            members.push(w);
                            stack.push(w);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Applies `H̄_n ⋯ H̄_1` to `start` (rightmost first), where
    /// `H̄_i = H_1 ⋯ H_i` and `H_i` moves to the end of the `i`-string.
    /// Returns the final vertex and the number of edges traversed.
    pub fn find_sink_by_operators(&self, start: usize) -> (usize, usize) {
        let mut v = start;
        let mut steps = 0;
        for outer in 1..=self.n {
            for i in (1..=outer).rev() {
                while let Some(w) = self.succ(v, i) {
                    v = w;
                    steps += 1;
                }
            }
        }
        (v, steps)
    }

    pub fn to_json(&self) -> CrystalJson {
        let attrs = self.vertex_attrs();
        CrystalJson {
            n: self.n,
            c: self.bounds.as_ref().map(|b| b.upper().to_vec()),
            d: self.bounds.as_ref().map(|b| b.lower().to_vec()),
            vertices: attrs
                .into_iter()
                .enumerate()
                .map(|(id, a)| VertexJson { id, weights: self.weights[id].clone(), h: a.h, t: a.t })
                .collect(),
            edges: self.edges().map(|(from, to, color)| EdgeJson { from, to, color }).collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        const PALETTE: [&str; 8] = ["red", "blue", "green4", "orange", "purple", "brown", "cyan4", "magenta"];
        let mut s = String::from("digraph crystal {\n  node [shape=circle];\n");
        for v in 0..self.len() {
            let hash = fnv1a(&self.weights[v]);
            match self.principal_tuple(v) {
                Some(a) => {
                    let a: Vec<String> = a.iter().map(i64::to_string).collect();
                    let _ =
                        writeln!(s, "  {v} [label=\"{v}\\nP({})\\n{hash:016x}\", shape=doublecircle];", a.join(","));
                }
                None => {
                    let _ = writeln!(s, "  {v} [label=\"{v}\\n{hash:016x}\"];");
                }
            }
        }
        for (u, v, i) in self.edges() {
            let _ = writeln!(s, "  {u} -> {v} [color={}, label=\"{i}\"];", PALETTE[(i - 1) % PALETTE.len()]);
        }
        s.push_str("}\n");
        s
    }

    /// Edge list as CSV with header `from,to,color`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("from,to,color\n");
        for (u, v, i) in self.edges() {
            let _ = writeln!(s, "{u},{v},{i}");
        }
        s
    }

    pub fn to_digraph(&self) -> ColoredDigraph {
        ColoredDigraph::new(self.len(), self.n, self.edges().collect())
    }
}

fn fnv1a(values: &[i64]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for x in values {
        for byte in x.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// Rigid isomorphism from `a` to `b`: matches sources and extends along
/// per-color successors and predecessors. Returns the vertex map.
pub fn isomorphism(a: &CrystalGraph, b: &CrystalGraph) -> Result<Option<Vec<usize>>> {
    let (sa, sb) = (a.source()?, b.source()?);
    if a.n != b.n || a.len() != b.len() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; a.len()];
    let mut back = vec![usize::MAX; b.len()];
    map[sa] = sb;
    back[sb] = sa;
    let mut queue = VecDeque::from([sa]);
    while let Some(u) = queue.pop_front() {
        let w = map[u];
        for i in 1..=a.n {
            for (x, y) in [(a.succ(u, i), b.succ(w, i)), (a.pred(u, i), b.pred(w, i))] {
                match (x, y) {
                    (None, None) => {}
                    (Some(x), Some(y)) => {
                        if map[x] == usize::MAX && back[y] == usize::MAX {
                            map[x] = y;
                            back[y] = x;
                            queue.push_back(x);
                        } else if map[x] != y {
                            return Ok(None);
                        }
                    }
                    _ => return Ok(None),
                }
            }
        }
    }
    Ok(map.iter().all(|&m| m != usize::MAX).then_some(map))
}

pub fn isomorphic(a: &CrystalGraph, b: &CrystalGraph) -> Result<bool> {
    Ok(isomorphism(a, b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gt::{count_bounded_patterns, sigma_bound};

    #[test]
    fn weyl_dimension_values() {
        assert_eq!(weyl_dimension(&[1, 2]), Some(15));
        assert_eq!(weyl_dimension(&[1, 1, 1]), Some(64));
        assert_eq!(weyl_dimension(&[1, 0, 1]), Some(15));
        assert_eq!(weyl_dimension(&[3]), Some(4));
        assert_eq!(weyl_dimension(&[0, 0, 0, 0]), Some(1));
        assert_eq!(weyl_dimension(&[1_000_000; 40]), None);
        for c in [vec![2, 1, 0], vec![0, 2, 2], vec![1, 1, 1, 1], vec![3, 0, 2]] {
            assert_eq!(weyl_dimension(&c), Some(count_bounded_patterns(&sigma_bound(&c))));
        }
    }

    #[test]
    fn k12_anchor() {
        let k = generate_zero(&[1, 2]).unwrap();
        assert_eq!(k.len(), 15);
        assert_eq!(k.edge_count(), 18);
        assert_eq!(k.graded_length().unwrap(), Some(6));
        assert_eq!(source_sink_distance(k.bounds().unwrap()), 6);
        assert_eq!(k.source().unwrap(), 0);
        assert_eq!(k.principal_tuple(k.sink().unwrap()), Some(vec![1, 2]));
    }

    #[test]
    fn trivial_crystals() {
        let k = generate(&Bounds::new(vec![2, 1, 3], vec![2, 1, 3]).unwrap(), 10).unwrap();
        assert_eq!((k.len(), k.edge_count()), (1, 0));
        let path = generate_zero(&[3]).unwrap();
        assert_eq!((path.len(), path.edge_count()), (4, 3));
        assert_eq!(path.dual().dual(), CrystalGraph { bounds: None, ..path.clone() });
    }

    #[test]
    fn caps() {
        let b = Bounds::zero_lower(vec![1, 1, 1]).unwrap();
        assert!(matches!(generate(&b, 10), Err(Error::EstimateExceedsCap { cap: 10, estimate: 64 })));
        assert!(generate(&b, 64).is_ok());
    }

    #[test]
    fn shifted_bounds_are_isomorphic() {
        let a = generate(&Bounds::new(vec![1, 2], vec![1, 1]).unwrap(), DEFAULT_CAP).unwrap();
        let b = generate_zero(&[0, 1]).unwrap();
        assert!(isomorphic(&a, &b).unwrap());
        assert!(!isomorphic(&generate_zero(&[1, 2]).unwrap(), &generate_zero(&[2, 1]).unwrap()).unwrap());
    }

    #[test]
    fn isomorphism_rejects_multiple_sources() {
        let two = CrystalGraph::from_edges(1, 2, &[]).unwrap();
        assert!(matches!(isomorphism(&two, &two), Err(Error::SourceCount(2))));
    }

    #[test]
    fn grading_along_edges() {
        let k = generate_zero(&[1, 1, 2]).unwrap();
        let attrs = k.vertex_attrs();
        let n = k.n() as i64;
        for (u, v, i) in k.edges() {
            for j in 1..=k.n() {
                let m = match (i as i64 - j as i64).abs() {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                };
                assert_eq!(attrs[u].wt[j - 1] - attrs[v].wt[j - 1], m, "edge {u}->{v} color {i}, j={j}, n={n}");
            }
        }
    }

    #[test]
    fn anti_symmetry_via_dual() {
        for c in [vec![1, 2], vec![2, 0, 1], vec![1, 1, 1]] {
            let k = generate_zero(&c).unwrap();
            let n = k.n();
            let flipped = k.dual().recolor(|i| n - i + 1);
            assert!(isomorphic(&k, &flipped).unwrap(), "{c:?}");
            let attrs = k.vertex_attrs();
            let (s, t) = (k.source().unwrap(), k.sink().unwrap());
            for i in 1..=n {
                assert_eq!(attrs[s].h[i - 1], attrs[t].t[n - i]);
                assert_eq!(attrs[s].h[i - 1], c[i - 1]);
            }
        }
    }

    #[test]
    fn intervals() {
        let k = generate_zero(&[1, 2]).unwrap();
        let (s, t) = (k.source().unwrap(), k.sink().unwrap());
        let (whole, ids) = k.interval(s, t);
        assert_eq!(whole.len(), k.len());
        assert_eq!(ids, (0..k.len()).collect::<Vec<_>>());
        assert_eq!(k.interval(t, t).0.len(), 1);
        assert_eq!(k.interval(t, s).0.len(), 0);
    }

    #[test]
    fn sink_search() {
        let k = generate_zero(&[1, 2]).unwrap();
        let sink = k.sink().unwrap();
        assert_eq!(k.find_sink_by_operators(sink), (sink, 0));
        let (v, steps) = k.find_sink_by_operators(k.source().unwrap());
        assert_eq!(v, sink);
        assert!(steps <= 6);
    }

    #[test]
    fn predecessors_match_backward_moves() {
        let k = generate_zero(&[2, 1, 1]).unwrap();
        let g = SupportingGraph::new(3).unwrap();
        for v in 0..k.len() {
            let f = k.function(v).unwrap();
            for i in 1..=3 {
                let back = crate::moves::backward_move(&g, &f, i).map(|m| k.id_of(m.function.values()).unwrap());
                assert_eq!(back, k.pred(v, i));
            }
        }
    }

    #[test]
    fn exports_are_stable() {
        let k = generate_zero(&[1, 1]).unwrap();
        assert_eq!(k.to_dot(), generate_zero(&[1, 1]).unwrap().to_dot());
        let dot = k.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert_eq!(dot.matches("doublecircle").count(), 4);
        assert_eq!(dot.matches("->").count(), k.edge_count());
        let csv = k.to_csv();
        assert_eq!(csv.lines().count(), k.edge_count() + 1);
        let json = serde_json::to_value(k.to_json()).unwrap();
        assert_eq!(json["vertices"].as_array().unwrap().len(), 8);
        assert_eq!(json["c"], serde_json::json!([1, 1]));
        assert_eq!(json["edges"][0], serde_json::json!({"from": 0, "to": 1, "color": 1}));
    }

    #[test]
    fn components_partition() {
        let k = generate_zero(&[1, 1, 1]).unwrap();
        let comps = k.components(&[1, 2]);
        assert_eq!(comps.iter().map(Vec::len).sum::<usize>(), k.len());
        let all = k.components(&[1, 2, 3]);
        assert_eq!(all.len(), 1);
    }
}
