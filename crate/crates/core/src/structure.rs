//! Structural analyses of a generated crystal: principal lattice and
//! intervals, skeleton, fundamental strings, and the decomposition into
//! `(n−1)`-colored subcrystals.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::crystal::{generate, isomorphism, CrystalGraph, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::support_graph::{NodeRef, SupportingGraph};
use crate::weights::{principal_tuple, Bounds};

fn model_parts(k: &CrystalGraph) -> Result<(SupportingGraph, Bounds)> {
    let b = k.bounds().ok_or_else(|| Error::Structure("graph carries no model bounds".into()))?;
    Ok((SupportingGraph::new(k.n())?, b.clone()))
}

/// Principal vertices `v[a]` keyed by their tuple `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrincipalLattice {
    entries: BTreeMap<Vec<i64>, usize>,
}

impl PrincipalLattice {
    pub fn get(&self, a: &[i64]) -> Option<usize> {
        self.entries.get(a).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(a, vertex)` in lexicographic order of `a`.
    pub fn iter(&self) -> impl Iterator<Item = (&[i64], usize)> {
        self.entries.iter().map(|(a, &v)| (a.as_slice(), v))
    }

    pub fn tuple_of(&self, v: usize) -> Option<&[i64]> {
        self.entries.iter().find(|(_, &w)| w == v).map(|(a, _)| a.as_slice())
    }
}

pub fn principal_lattice(k: &CrystalGraph) -> Result<PrincipalLattice> {
    let (g, _) = model_parts(k)?;
    let entries = (0..k.len()).filter_map(|v| principal_tuple(&g, k.weights(v)).map(|a| (a, v))).collect();
    Ok(PrincipalLattice { entries })
}

/// `interval(v[a], v[b])`; requires `d ≤ a ≤ b ≤ c`.
pub fn principal_interval(k: &CrystalGraph, a: &[i64], b: &[i64]) -> Result<CrystalGraph> {
    let (_, bounds) = model_parts(k)?;
    if !bounds.contains_tuple(a) || !bounds.contains_tuple(b) || a.iter().zip(b).any(|(x, y)| x > y) {
        return Err(Error::Parameter(format!("need d <= a <= b <= c, got a = {a:?}, b = {b:?}")));
    }
    let lattice = principal_lattice(k)?;
    let missing = || Error::Structure("principal vertex missing from the graph".into());
    let (u, v) = (lattice.get(a).ok_or_else(missing)?, lattice.get(b).ok_or_else(missing)?);
    Ok(k.interval(u, v).0)
}

/// A copy of a base crystal inside the skeleton: vertices constant equal to
/// `fixed[i]` on every base subgraph `i ≠ color`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkeletonPiece {
    pub color: usize,
    /// Entry `color - 1` is unused and set to zero.
    pub fixed: Vec<i64>,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skeleton {
    pub pieces: Vec<SkeletonPiece>,
    /// Union of all pieces, sorted.
    pub vertices: Vec<usize>,
}

pub fn skeleton(k: &CrystalGraph) -> Result<Skeleton> {
    let (g, _) = model_parts(k)?;
    let n = k.n();
    let mut groups: BTreeMap<(usize, Vec<i64>), Vec<usize>> = BTreeMap::new();
    for v in 0..k.len() {
        let w = k.weights(v);
        // per base subgraph: Some(value) if constant
        let mut constant: Vec<Option<Option<i64>>> = vec![None; n];
        for (node, &x) in g.nodes().iter().zip(w) {
            let slot = &mut constant[node.k - 1];
            *slot = match *slot {
                None => Some(Some(x)),
                Some(Some(y)) if y == x => Some(Some(y)),
                _ => Some(None),
            };
        }
        let constant: Vec<Option<i64>> = constant.into_iter().map(Option::flatten).collect();
        for color in 1..=n {
            if (1..=n).filter(|&i| i != color).all(|i| constant[i - 1].is_some()) {
                let fixed = (1..=n).map(|i| if i == color { 0 } else { constant[i - 1].unwrap() }).collect();
                groups.entry((color, fixed)).or_default().push(v);
            }
        }
    }
    let pieces: Vec<SkeletonPiece> =
        groups.into_iter().map(|((color, fixed), vertices)| SkeletonPiece { color, fixed, vertices }).collect();
    let mut vertices: Vec<usize> = pieces.iter().flat_map(|p| p.vertices.iter().copied()).collect();
    vertices.sort_unstable();
    vertices.dedup();
    Ok(Skeleton { pieces, vertices })
}

/// `Σ_k |K^k(c_k)| Π_{i≠k}(c_i+1) − (n−1) Π_i(c_i+1)` for span `c`.
pub fn skeleton_size_formula(span: &[i64]) -> Option<u128> {
    let n = span.len();
    let all: u128 = span.iter().map(|&s| s as u128 + 1).product();
    let mut total = 0u128;
    for k in 0..n {
        let mut unit = vec![0; n];
        unit[k] = span[k];
        let others: u128 = all / (span[k] as u128 + 1);
        total = total.checked_add(crate::crystal::weyl_dimension(&unit)?.checked_mul(others)?)?;
    }
    total.checked_sub((n as u128 - 1) * all)
}

/// Levels of the nodes of a base subgraph in the order their values are
/// raised.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FundamentalString {
    pub color: usize,
    /// Application order, first move first.
    pub levels: Vec<usize>,
}

impl FundamentalString {
    /// The string as written, rightmost letter applied first.
    pub fn word(&self) -> String {
        let sep = if self.levels.iter().any(|&l| l >= 10) { " " } else { "" };
        self.levels.iter().rev().map(usize::to_string).collect::<Vec<_>>().join(sep)
    }
}

/// All linear extensions of the base subgraph `G^k` of the `n`-level model.
pub fn fundamental_strings(n: usize, k: usize) -> Result<Vec<FundamentalString>> {
    if k == 0 || k > n {
        return Err(Error::Parameter(format!("color {k} outside 1..={n}")));
    }
    let g = SupportingGraph::new(n)?;
    let nodes = g.base_nodes(k);
    let pos = |v: NodeRef| nodes.iter().position(|&u| u == v).unwrap();
    let preds: Vec<Vec<usize>> = nodes.iter().map(|&v| g.in_neighbors(v).into_iter().map(pos).collect()).collect();
    fn go(
        nodes: &[NodeRef],
        preds: &[Vec<usize>],
        taken: &mut Vec<bool>,
        order: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if order.len() == nodes.len() {
            out.push(order.iter().map(|&p| nodes[p].i).collect());
            return;
        }
        for p in 0..nodes.len() {
            if !taken[p] && preds[p].iter().all(|&q| taken[q]) {
                taken[p] = true;
                order.push(p);
                go(nodes, preds, taken, order, out);
                order.pop();
                taken[p] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&nodes, &preds, &mut vec![false; nodes.len()], &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    Ok(out.into_iter().map(|levels| FundamentalString { color: k, levels }).collect())
}

/// `w_{n−k+1} ⋯ w_1` with `w_i = (i)(i+1)⋯(i+k−1)`, written right to left.
pub fn canonical_string(n: usize, k: usize) -> Result<FundamentalString> {
    if k == 0 || k > n {
        return Err(Error::Parameter(format!("color {k} outside 1..={n}")));
    }
    let mut written = Vec::new();
    for i in (1..=n - k + 1).rev() {
        written.extend(i..i + k);
    }
    written.reverse();
    Ok(FundamentalString { color: k, levels: written })
}

/// Follows `levels` as forward moves from `start`.
pub fn apply_string(k: &CrystalGraph, start: usize, s: &FundamentalString) -> Option<usize> {
    s.levels.iter().try_fold(start, |v, &i| k.succ(v, i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Colors `1..n−1`.
    Upper,
    /// Colors `2..n`.
    Lower,
}

impl Side {
    pub fn colors(self, n: usize) -> Vec<usize> {
        match self {
            Side::Upper => (1..n).collect(),
            Side::Lower => (2..=n).collect(),
        }
    }
}

/// One `(n−1)`-colored subcrystal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubcrystalRecord {
    pub side: Side,
    /// Values on the bottom-level nodes (upper) or top-level nodes (lower),
    /// indexed by base subgraph.
    pub anchor: Vec<i64>,
    /// `h`-vector of the component source on the side's colors.
    pub parameter: Vec<i64>,
    pub size: usize,
    pub principal_vertex: usize,
    /// `h + t` at the principal vertex per side color; measured only.
    pub widths: Vec<i64>,
    #[serde(skip)]
    pub vertices: Vec<usize>,
}

/// `q_i = c_i − a_i + a_{i+1}` (upper) or `q_i = c_i − a_i + a_{i−1}` (lower),
/// all taken relative to the lower bounds.
pub fn predicted_parameter(bounds: &Bounds, anchor: &[i64], side: Side) -> Vec<i64> {
    let n = bounds.n();
    let span = bounds.span();
    let rel: Vec<i64> = anchor.iter().zip(bounds.lower()).map(|(a, d)| a - d).collect();
    match side {
        Side::Upper => (0..n - 1).map(|i| span[i] - rel[i] + rel[i + 1]).collect(),
        Side::Lower => (1..n).map(|i| span[i] - rel[i] + rel[i - 1]).collect(),
    }
}

fn anchor_nodes(g: &SupportingGraph, side: Side) -> Vec<usize> {
    (1..=g.n())
        .map(|k| {
            let v = match side {
                Side::Upper => g.bottom(k),
                Side::Lower => g.top(k),
            };
            g.index_of(v).unwrap()
        })
        .collect()
}

/// Components of `K` without color `n` (upper) or color 1 (lower), ordered
/// by smallest vertex.
pub fn subcrystals(k: &CrystalGraph, side: Side) -> Result<Vec<SubcrystalRecord>> {
    let (g, _) = model_parts(k)?;
    let n = k.n();
    let colors = side.colors(n);
    let lattice = principal_lattice(k)?;
    let attrs = k.vertex_attrs();
    let at = anchor_nodes(&g, side);
    let mut out = Vec::new();
    for comp in k.components(&colors) {
        let anchor: Vec<i64> = at.iter().map(|&p| k.weights(comp[0])[p]).collect();
        if let Some(&v) = comp.iter().find(|&&v| at.iter().zip(&anchor).any(|(&p, &x)| k.weights(v)[p] != x)) {
            return Err(Error::Structure(format!(
                "anchor differs between vertices {} and {v} of one component",
                comp[0]
            )));
        }
        let principal: Vec<usize> = comp.iter().copied().filter(|&v| lattice.tuple_of(v).is_some()).collect();
        let [principal_vertex] = principal[..] else {
            return Err(Error::Structure(format!(
                "component of vertex {} holds {} principal vertices",
                comp[0],
                principal.len()
            )));
        };
        let sources: Vec<usize> =
            comp.iter().copied().filter(|&v| colors.iter().all(|&i| k.pred(v, i).is_none())).collect();
        let [source] = sources[..] else {
            return Err(Error::Structure(format!("component of vertex {} has {} sources", comp[0], sources.len())));
        };
        out.push(SubcrystalRecord {
            side,
            anchor,
            parameter: colors.iter().map(|&i| attrs[source].h[i - 1]).collect(),
            size: comp.len(),
            principal_vertex,
            widths: colors
                .iter()
                .map(|&i| attrs[principal_vertex].h[i - 1] + attrs[principal_vertex].t[i - 1])
                .collect(),
            vertices: comp,
        });
    }
    Ok(out)
}

/// The subcrystal as a standalone crystal with colors renumbered from 1.
pub fn subcrystal_graph(k: &CrystalGraph, rec: &SubcrystalRecord) -> CrystalGraph {
    k.induced(&rec.vertices, &rec.side.colors(k.n())).0
}

/// Coordinates of `v[a]` in the principal lattice of its subcrystal, found
/// through an isomorphism onto the generated crystal with the measured
/// parameter. Relative to zero lower bounds.
pub fn principal_location(k: &CrystalGraph, a: &[i64], side: Side) -> Result<Vec<i64>> {
    let n = k.n();
    if n == 1 {
        return Ok(Vec::new());
    }
    let lattice = principal_lattice(k)?;
    let v = lattice.get(a).ok_or_else(|| Error::Parameter(format!("no principal vertex at {a:?}")))?;
    let rec = subcrystals(k, side)?
        .into_iter()
        .find(|r| r.principal_vertex == v)
        .ok_or_else(|| Error::Structure("principal vertex in no subcrystal".into()))?;
    let sub = subcrystal_graph(k, &rec);
    let model = generate(&Bounds::zero_lower(rec.parameter.clone())?, DEFAULT_CAP)?;
    let map = isomorphism(&sub, &model)?
        .ok_or_else(|| Error::Structure(format!("subcrystal not isomorphic to K({:?})", rec.parameter)))?;
    let local = rec.vertices.iter().position(|&w| w == v).unwrap();
    model
        .principal_tuple(map[local])
        .ok_or_else(|| Error::Structure("image of the principal vertex is not principal".into()))
}

/// Parameter (`h`-vector at the source) of the component through `v[a]`
/// using colors `r..=n−r+1`.
pub fn middle_parameter(k: &CrystalGraph, a: &[i64], r: usize) -> Result<Vec<i64>> {
    let n = k.n();
    if r == 0 || r > n - r + 1 {
        return Err(Error::Parameter(format!("need 1 <= r <= n - r + 1, got r = {r}")));
    }
    let colors: Vec<usize> = (r..=n - r + 1).collect();
    let v = principal_lattice(k)?.get(a).ok_or_else(|| Error::Parameter(format!("no principal vertex at {a:?}")))?;
    let comp = k.components(&colors).into_iter().find(|c| c.binary_search(&v).is_ok()).unwrap();
    let sub = k.induced(&comp, &colors).0;
    let s = sub.source()?;
    Ok(sub.vertex_attrs()[s].h.clone())
}

/// Number of anchors `a` with `0 ≤ a ≤ c` giving upper parameter `q`,
/// counted directly over `a_n`.
pub fn branching_multiplicity(c: &[i64], q: &[i64]) -> u64 {
    let n = c.len();
    if q.len() + 1 != n {
        return 0;
    }
    let tail = |s: &[i64], i: usize| -> i64 { s[i..n - 1].iter().sum() };
    (0..=c[n - 1]).filter(|&an| (0..n - 1).all(|i| (0..=c[i]).contains(&(tail(c, i) - tail(q, i) + an)))).count() as u64
}

/// Closed form `max(0, min{c_n, q[i:n−1] − c[i+1:n−1]} − max{0, q[i:n−1] − c[i:n−1]} + 1)`.
pub fn branching_multiplicity_closed_form(c: &[i64], q: &[i64]) -> u64 {
    let n = c.len();
    if q.len() + 1 != n {
        return 0;
    }
    let tail = |s: &[i64], from: usize| -> i64 { s[from.min(n - 1)..n - 1].iter().sum() };
    let upper = (0..n - 1).map(|i| tail(q, i) - tail(c, i + 1)).fold(c[n - 1], i64::min);
    let lower = (0..n - 1).map(|i| tail(q, i) - tail(c, i)).fold(0, i64::max);
    (upper - lower + 1).max(0) as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub c: Vec<i64>,
    pub d: Vec<i64>,
    pub vertices: usize,
    pub principal_count: usize,
    pub skeleton_size: usize,
    pub upper: Vec<SubcrystalRecord>,
    pub lower: Vec<SubcrystalRecord>,
}

pub fn decompose(k: &CrystalGraph) -> Result<DecompositionReport> {
    let (_, b) = model_parts(k)?;
    let (upper, lower) =
        if k.n() > 1 { (subcrystals(k, Side::Upper)?, subcrystals(k, Side::Lower)?) } else { (Vec::new(), Vec::new()) };
    Ok(DecompositionReport {
        n: k.n(),
        c: b.upper().to_vec(),
        d: b.lower().to_vec(),
        vertices: k.len(),
        principal_count: principal_lattice(k)?.len(),
        skeleton_size: skeleton(k)?.vertices.len(),
        upper,
        lower,
    })
}

impl DecompositionReport {
    /// One row per subcrystal: `side,anchor,parameter,size,principal_vertex`,
    /// tuples space-separated.
    pub fn to_csv(&self) -> String {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        let mut s = String::from("side,anchor,parameter,size,principal_vertex\n");
        for r in self.upper.iter().chain(&self.lower) {
            let side = match r.side {
                Side::Upper => "upper",
                Side::Lower => "lower",
            };
            let _ = writeln!(s, "{side},{},{},{},{}", join(&r.anchor), join(&r.parameter), r.size, r.principal_vertex);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{generate_zero, isomorphic};

    /// Standard Young tableaux of an `a × b` rectangle by the hook length
    /// formula.
    fn rectangle_tableaux(a: usize, b: usize) -> u128 {
        let cells: u128 = (1..=(a * b) as u128).product();
        let hooks: u128 = (0..a).flat_map(|i| (0..b).map(move |j| ((a - i) + (b - j) - 1) as u128)).product();
        cells / hooks
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(principal_lattice(&generate_zero(&[1, 2]).unwrap()).unwrap().len(), 6);
        assert_eq!(principal_lattice(&generate_zero(&[0, 0, 0]).unwrap()).unwrap().len(), 1);
        assert_eq!(principal_lattice(&generate_zero(&[1, 1, 1]).unwrap()).unwrap().len(), 8);
        let shifted = generate(&Bounds::new(vec![2, 1], vec![1, 0]).unwrap(), DEFAULT_CAP).unwrap();
        let lat = principal_lattice(&shifted).unwrap();
        assert_eq!(lat.len(), 4);
        assert!(lat.get(&[1, 0]).is_some() && lat.get(&[0, 0]).is_none());
    }

    #[test]
    fn intervals_match_generated() {
        let k = generate_zero(&[1, 2]).unwrap();
        let iv = principal_interval(&k, &[0, 1], &[1, 2]).unwrap();
        assert!(isomorphic(&iv, &generate_zero(&[1, 1]).unwrap()).unwrap());
        assert_eq!(principal_interval(&k, &[1, 1], &[1, 1]).unwrap().len(), 1);
        assert_eq!(principal_interval(&k, &[0, 0], &[1, 2]).unwrap().len(), 15);
        assert!(principal_interval(&k, &[1, 0], &[0, 2]).is_err());
        assert!(principal_interval(&k, &[0, 0], &[0, 3]).is_err());
    }

    #[test]
    fn skeleton_examples() {
        let k = generate_zero(&[1, 2]).unwrap();
        assert_eq!(skeleton(&k).unwrap().vertices.len(), 15);
        let k = generate_zero(&[0, 2, 0]).unwrap();
        assert_eq!(skeleton(&k).unwrap().vertices.len(), k.len());
        let k = generate_zero(&[1, 1, 1]).unwrap();
        let s = skeleton(&k).unwrap();
        assert_eq!(s.pieces.len(), 12);
        assert_eq!(s.vertices.len() as u128, skeleton_size_formula(&[1, 1, 1]).unwrap());
        assert!(s.vertices.len() < k.len());
    }

    #[test]
    fn string_examples() {
        let words = |n, k| fundamental_strings(n, k).unwrap().iter().map(FundamentalString::word).collect::<Vec<_>>();
        assert_eq!(words(3, 1), vec!["321"]);
        assert_eq!(words(3, 3), vec!["123"]);
        let mut two = words(3, 2);
        two.sort();
        assert_eq!(two, vec!["2132", "2312"]);
        assert_eq!(canonical_string(4, 2).unwrap().word(), "342312");
        for n in 1..=5 {
            for k in 1..=n {
                let all = fundamental_strings(n, k).unwrap();
                assert_eq!(all.len() as u128, rectangle_tableaux(k, n - k + 1), "n={n} k={k}");
                assert!(all.contains(&canonical_string(n, k).unwrap()));
                assert!(all.iter().all(|s| s.levels.len() == k * (n - k + 1)));
            }
        }
    }

    #[test]
    fn strings_move_between_principal_vertices() {
        let k = generate_zero(&[1, 2, 1]).unwrap();
        let lat = principal_lattice(&k).unwrap();
        for (a, v) in lat.iter() {
            for color in 1..=3 {
                let mut b = a.to_vec();
                b[color - 1] += 1;
                let Some(target) = lat.get(&b) else { continue };
                for s in fundamental_strings(3, color).unwrap() {
                    assert_eq!(apply_string(&k, v, &s), Some(target), "{a:?} {}", s.word());
                }
            }
        }
    }

    #[test]
    fn subcrystal_example() {
        let k = generate_zero(&[1, 1, 1]).unwrap();
        let upper = subcrystals(&k, Side::Upper).unwrap();
        assert_eq!(upper.len(), 8);
        let rec = upper.iter().find(|r| r.anchor == vec![1, 0, 1]).unwrap();
        assert_eq!(rec.parameter, vec![0, 2]);
        assert_eq!(predicted_parameter(k.bounds().unwrap(), &rec.anchor, Side::Upper), vec![0, 2]);
        assert_eq!(principal_location(&k, &[1, 0, 1], Side::Upper).unwrap(), vec![0, 1]);
        assert_eq!(principal_location(&k, &[0, 0, 0], Side::Upper).unwrap(), vec![0, 0]);
        let total: usize = upper.iter().map(|r| r.size).sum();
        assert_eq!(total, k.len());
    }

    #[test]
    fn middle_parameter_is_constant() {
        let c = [2, 1, 1, 2];
        let k = generate_zero(&c).unwrap();
        for (a, _) in principal_lattice(&k).unwrap().iter() {
            assert_eq!(middle_parameter(&k, a, 2).unwrap(), vec![1, 1]);
            assert_eq!(middle_parameter(&k, a, 1).unwrap(), c.to_vec());
        }
    }

    #[test]
    fn branching_examples() {
        assert_eq!(branching_multiplicity(&[1, 1, 1], &[9, 9]), 0);
        assert_eq!(branching_multiplicity(&[1, 1, 1], &[1, 1]), 2);
        for c in [vec![1, 1, 1], vec![2, 1, 2], vec![0, 2, 0], vec![2, 2]] {
            let n = c.len();
            let mut by_q: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
            let b = Bounds::zero_lower(c.clone()).unwrap();
            let mut a = vec![0i64; n];
            loop {
                *by_q.entry(predicted_parameter(&b, &a, Side::Upper)).or_default() += 1;
                let mut p = 0;
                while p < n && a[p] == c[p] {
                    a[p] = 0;
                    p += 1;
                }
                if p == n {
                    break;
                }
                a[p] += 1;
            }
            for (q, count) in &by_q {
                assert_eq!(branching_multiplicity(&c, q), *count);
                assert_eq!(branching_multiplicity_closed_form(&c, q), *count, "{c:?} {q:?}");
                if c.contains(&0) {
                    assert!(*count <= 1);
                }
            }
            let total: u64 = by_q.keys().map(|q| branching_multiplicity(&c, q)).sum();
            assert_eq!(total, c.iter().map(|&x| x as u64 + 1).product::<u64>());
        }
    }

    #[test]
    fn report_formats() {
        let k = generate_zero(&[1, 1]).unwrap();
        let r = decompose(&k).unwrap();
        assert_eq!((r.upper.len(), r.lower.len()), (4, 4));
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 9);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["upper"][0]["side"], "upper");
        assert!(json["upper"][0].get("vertices").is_none());
    }
}
