//! Verifier for the crystal axioms (A1)-(A5) on an explicit colored edge
//! list, plus connectivity, gradedness and source/sink checks.
//!
//! Nothing here depends on the model modules: the input is a bare edge list.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertices `0..vertex_count`, edges `(from, to, color)` with colors
/// `1..=colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    vertex_count: usize,
    colors: usize,
    edges: Vec<(usize, usize, usize)>,
    names: Vec<String>,
}

impl ColoredDigraph {
    /// Panics if an edge refers to a missing vertex or color.
    pub fn new(vertex_count: usize, colors: usize, edges: Vec<(usize, usize, usize)>) -> Self {
        for &(u, v, i) in &edges {
            assert!(u < vertex_count && v < vertex_count, "edge {u}->{v} out of range");
            assert!(i >= 1 && i <= colors, "color {i} out of range");
        }
        let names = (0..vertex_count).map(|v| v.to_string()).collect();
        ColoredDigraph { vertex_count, colors, edges, names }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    /// Name of `v` in the input.
    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn without_edge(&self, index: usize) -> Self {
        let mut out = self.clone();
        out.edges.remove(index);
        out
    }

    pub fn with_edge(&self, edge: (usize, usize, usize)) -> Self {
        let mut out = self.clone();
        out.edges.push(edge);
        out
    }
}

#[derive(Deserialize)]
struct JsonGraph {
    n: usize,
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

#[derive(Deserialize)]
struct JsonVertex {
    id: usize,
}

#[derive(Deserialize)]
struct JsonEdge {
    from: usize,
    to: usize,
    color: usize,
}

/// Parses the crystal JSON schema, ignoring fields other than `n`, vertex
/// ids and edges.
pub fn parse_crystal_json(text: &str) -> Result<ColoredDigraph> {
    let raw: JsonGraph = serde_json::from_str(text)?;
    let mut ids: Vec<usize> = raw.vertices.iter().map(|v| v.id).collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != raw.vertices.len() {
        return Err(Error::Json("duplicate vertex id".into()));
    }
    let pos: HashMap<usize, usize> = ids.iter().enumerate().map(|(p, &id)| (id, p)).collect();
    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in &raw.edges {
        let (Some(&u), Some(&v)) = (pos.get(&e.from), pos.get(&e.to)) else {
            return Err(Error::Json(format!("edge {} -> {} uses an undeclared vertex", e.from, e.to)));
        };
        if e.color == 0 || e.color > raw.n {
            return Err(Error::Json(format!("edge color {} outside 1..={}", e.color, raw.n)));
        }
        edges.push((u, v, e.color));
    }
    let names = ids.iter().map(usize::to_string).collect();
    Ok(ColoredDigraph { vertex_count: ids.len(), colors: raw.n, edges, names })
}

/// Parses lines `from to color`; a line with a single token declares an
/// isolated vertex. `#` starts a comment. Vertex names are numbered in
/// sorted order (numerically when all names are integers).
pub fn parse_edge_list(text: &str, colors: Option<usize>) -> Result<ColoredDigraph> {
    let mut named = BTreeSet::new();
    let mut raw = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: lineno + 1, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[..] {
            [v] => {
                named.insert(v.to_string());
            }
            [u, v, c] => {
                let c: usize = c.parse().map_err(|_| parse_err(format!("invalid color {c:?}")))?;
                if c == 0 {
                    return Err(parse_err("colors start at 1".into()));
                }
                named.insert(u.to_string());
                named.insert(v.to_string());
                raw.push((u.to_string(), v.to_string(), c, lineno + 1));
            }
            _ => return Err(parse_err(format!("expected `from to color`, found {} fields", tokens.len()))),
        }
    }
    let mut names: Vec<String> = named.into_iter().collect();
    if names.iter().all(|s| s.parse::<i64>().is_ok()) {
        names.sort_by_key(|s| s.parse::<i64>().unwrap());
    }
    let pos: HashMap<&str, usize> = names.iter().enumerate().map(|(p, s)| (s.as_str(), p)).collect();
    let max_color = raw.iter().map(|e| e.2).max().unwrap_or(0);
    let colors = match colors {
        Some(n) if n < max_color => {
            let line = raw.iter().find(|e| e.2 > n).unwrap().3;
            return Err(Error::Parse { line, message: format!("color exceeds {n}") });
        }
        Some(n) => n,
        None => max_color.max(1),
    };
    let edges = raw.iter().map(|(u, v, c, _)| (pos[u.as_str()], pos[v.as_str()], *c)).collect();
    Ok(ColoredDigraph { vertex_count: names.len(), colors, edges, names })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Check {
    A1,
    A2,
    A3,
    A4,
    A5,
    EqualCriticals,
    Connectivity,
    Gradedness,
    SourceSink,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Check::A1 => "A1",
            Check::A2 => "A2",
            Check::A3 => "A3",
            Check::A4 => "A4",
            Check::A5 => "A5",
            Check::EqualCriticals => "equal-criticals",
            Check::Connectivity => "connectivity",
            Check::Gradedness => "gradedness",
            Check::SourceSink => "source-sink",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: Check,
    pub passed: bool,
    /// First counterexample in vertex order.
    pub witness: Option<String>,
}

impl Verdict {
    fn pass(check: Check) -> Self {
        Verdict { check, passed: true, witness: None }
    }

    fn fail(check: Check, witness: String) -> Self {
        Verdict { check, passed: false, witness: Some(witness) }
    }

    fn from_result(check: Check, r: std::result::Result<(), String>) -> Self {
        match r {
            Ok(()) => Verdict::pass(check),
            Err(w) => Verdict::fail(check, w),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: pass", self.check),
            Some(w) => write!(f, "{}: FAIL ({w})", self.check),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn get(&self, check: Check) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.check == check)
    }

    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| !v.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Tail and head lengths of the `i`-line through a vertex and its critical
/// vertex with respect to a neighboring color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineInfo {
    pub tail: i64,
    pub head: i64,
    pub critical: usize,
}

/// Monochromatic structure of a graph satisfying (A1): partial operators
/// and string lengths.
#[derive(Debug, Clone)]
pub struct Lines<'g> {
    g: &'g ColoredDigraph,
    n: usize,
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
    h: Vec<i64>,
    t: Vec<i64>,
}

fn neighboring(i: usize, j: usize) -> bool {
    i.abs_diff(j) == 1
}

fn cartan(i: usize, j: usize) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

impl<'g> Lines<'g> {
    /// Fails with the (A1) witness when some monochromatic component is not a
    /// simple finite path.
    pub fn new(g: &'g ColoredDigraph) -> std::result::Result<Self, String> {
        let (n, len) = (g.colors, g.vertex_count);
        let mut succ = vec![None; len * n];
        let mut pred = vec![None; len * n];
        let mut sorted = g.edges.clone();
        sorted.sort_unstable();
        for &(u, v, i) in &sorted {
            if u == v {
                return Err(format!("{i}-loop at {}", g.name(u)));
            }
            if succ[u * n + i - 1].replace(v).is_some() {
                return Err(format!("{} has two outgoing {i}-edges", g.name(u)));
            }
            if pred[v * n + i - 1].replace(u).is_some() {
                return Err(format!("{} has two incoming {i}-edges", g.name(v)));
            }
        }
        let mut h = vec![0; len * n];
        let mut t = vec![0; len * n];
        for i in 1..=n {
            let mut seen = vec![false; len];
            for start in 0..len {
                if pred[start * n + i - 1].is_some() {
                    continue;
                }
                let mut line = vec![start];
                seen[start] = true;
                while let Some(w) = succ[*line.last().unwrap() * n + i - 1] {
                    seen[w] = true;
                    line.push(w);
                }
                let last = line.len() as i64 - 1;
                for (p, &v) in line.iter().enumerate() {
                    t[v * n + i - 1] = p as i64;
                    h[v * n + i - 1] = last - p as i64;
                }
            }
            if let Some(v) = (0..len).find(|&v| !seen[v]) {
                return Err(format!("{} lies on a {i}-cycle", g.name(v)));
            }
        }
        Ok(Lines { g, n, succ, pred, h, t })
    }

    pub fn f(&self, v: usize, i: usize) -> Option<usize> {
        self.succ[v * self.n + i - 1]
    }

    pub fn f_inv(&self, v: usize, i: usize) -> Option<usize> {
        self.pred[v * self.n + i - 1]
    }

    pub fn h(&self, v: usize, i: usize) -> i64 {
        self.h[v * self.n + i - 1]
    }

    pub fn t(&self, v: usize, i: usize) -> i64 {
        self.t[v * self.n + i - 1]
    }

    /// Applies the word right to left; `+i` is `F_i`, `-i` is `F_i^{-1}`.
    pub fn apply(&self, v: usize, word: &[isize]) -> Option<usize> {
        word.iter().rev().try_fold(
            v,
            |v, &op| {
                if op > 0 {
                    self.f(v, op as usize)
                } else {
                    self.f_inv(v, (-op) as usize)
                }
            },
        )
    }

    /// `ℓ_j` of the `i`-edge leaving `u`: 0 if `t_j` drops, 1 if `h_j` grows,
    /// `None` if neither pattern holds.
    pub fn label(&self, u: usize, i: usize, j: usize) -> Option<u8> {
        let v = self.f(u, i)?;
        let dt = self.t(v, j) - self.t(u, j);
        let dh = self.h(v, j) - self.h(u, j);
        match (dt, dh) {
            (-1, 0) => Some(0),
            (0, 1) => Some(1),
            _ => None,
        }
    }

    fn first_on_line(&self, mut v: usize, i: usize) -> usize {
        while let Some(u) = self.f_inv(v, i) {
            v = u;
        }
        v
    }

    /// Tail/head lengths of `P_i(v)` and its critical vertex w.r.t. `j`.
    pub fn line_info(&self, v: usize, i: usize, j: usize) -> std::result::Result<LineInfo, String> {
        let mut u = self.first_on_line(v, i);
        let mut critical = u;
        let mut in_suffix = false;
        while self.f(u, i).is_some() {
            match self.label(u, i, j) {
                Some(0) if !in_suffix => critical = self.f(u, i).unwrap(),
                Some(0) => {
                    return Err(format!("{}-line through {}: label 0 after label 1 w.r.t. {j}", i, self.g.name(v)))
                }
                Some(_) => in_suffix = true,
                None => {
                    return Err(format!(
                        "{i}-edge at {} changes t_{j}, h_{j} by neither (-1, 0) nor (0, +1)",
                        self.g.name(u)
                    ))
                }
            }
            u = self.f(u, i).unwrap();
        }
        Ok(LineInfo { tail: self.t(v, i), head: self.h(v, i), critical })
    }

    fn a2(&self) -> std::result::Result<(), String> {
        let name = |v| self.g.name(v);
        for u in 0..self.g.vertex_count {
            for i in 1..=self.n {
                let Some(v) = self.f(u, i) else { continue };
                for j in (1..=self.n).filter(|&j| j != i) {
                    let dt = self.t(v, j) - self.t(u, j);
                    let dh = self.h(u, j) - self.h(v, j);
                    if dt > 0 || dh > 0 || dt + dh != cartan(i, j) {
                        return Err(format!(
                            "{i}-edge {}->{}: t_{j} {}->{}, h_{j} {}->{}",
                            name(u),
                            name(v),
                            self.t(u, j),
                            self.t(v, j),
                            self.h(u, j),
                            self.h(v, j)
                        ));
                    }
                    if let Some(w) = self.f(v, i) {
                        if self.h(u, j) + self.h(w, j) < 2 * self.h(v, j) {
                            return Err(format!("h_{j} not convex along {i}-edges at {}", name(v)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn neighbor_pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.n).flat_map(|i| (1..=self.n).filter(move |&j| neighboring(i, j)).map(move |j| (i, j))).collect()
    }

    fn a3(&self) -> std::result::Result<(), String> {
        let name = |v| self.g.name(v);
        for v in 0..self.g.vertex_count {
            for (i, j) in self.neighbor_pairs() {
                if self.f(v, i).is_some() && self.f(v, j).is_some() && self.label(v, i, j) == Some(0) {
                    if self.label(v, j, i) != Some(1) {
                        return Err(format!("(a) at {}: l_{j}(F_{i})=0 but l_{i}(F_{j})!=1", name(v)));
                    }
                    let a = self.apply(v, &[i as isize, j as isize]);
                    if a.is_none() || a != self.apply(v, &[j as isize, i as isize]) {
                        return Err(format!("(a) at {}: F_{i}F_{j} != F_{j}F_{i}", name(v)));
                    }
                }
                if let (Some(u), Some(up)) = (self.f_inv(v, i), self.f_inv(v, j)) {
                    if self.label(u, i, j) == Some(1) {
                        if self.label(up, j, i) != Some(0) {
                            return Err(format!("(b) at {}: l_{j}=1 on incoming {i}-edge but l_{i}!=0", name(v)));
                        }
                        let (ii, jj) = (-(i as isize), -(j as isize));
                        let a = self.apply(v, &[ii, jj]);
                        if a.is_none() || a != self.apply(v, &[jj, ii]) {
                            return Err(format!("(b) at {}: inverse operators do not commute", name(v)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn a4(&self, strict: bool) -> std::result::Result<(), String> {
        let name = |v| self.g.name(v);
        for v in 0..self.g.vertex_count {
            for (i, j) in self.neighbor_pairs().into_iter().filter(|(i, j)| i < j) {
                let (fi, fj) = (i as isize, j as isize);
                if self.label(v, i, j) == Some(1) && self.label(v, j, i) == Some(1) {
                    let a = self.apply(v, &[fi, fj, fj, fi]);
                    if a.is_none() || a != self.apply(v, &[fj, fi, fi, fj]) {
                        return Err(format!("(i) at {}: F_{i}F_{j}^2F_{i} != F_{j}F_{i}^2F_{j}", name(v)));
                    }
                }
                if !strict {
                    continue;
                }
                if let (Some(u), Some(up)) = (self.f_inv(v, i), self.f_inv(v, j)) {
                    if self.label(u, i, j) == Some(0) && self.label(up, j, i) == Some(0) {
                        let a = self.apply(v, &[-fi, -fj, -fj, -fi]);
                        if a.is_none() || a != self.apply(v, &[-fj, -fi, -fi, -fj]) {
                            return Err(format!("(ii) at {}: inverse degree-4 relation fails", name(v)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn a5(&self) -> std::result::Result<(), String> {
        for v in 0..self.g.vertex_count {
            for i in 1..=self.n {
                for j in i + 2..=self.n {
                    for a in [i as isize, -(i as isize)] {
                        for b in [j as isize, -(j as isize)] {
                            let (x, y) = (self.apply(v, &[a]), self.apply(v, &[b]));
                            if x.is_none() || y.is_none() {
                                continue;
                            }
                            let ab = self.apply(v, &[a, b]);
                            if ab.is_none() || ab != self.apply(v, &[b, a]) {
                                return Err(format!("operators {a} and {b} do not commute at {}", self.g.name(v)));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn equal_criticals(&self) -> std::result::Result<(), String> {
        for v in 0..self.g.vertex_count {
            for (i, j) in self.neighbor_pairs() {
                let ci = self.line_info(v, i, j)?.critical;
                if ci == v && self.line_info(v, j, i)?.critical != v {
                    return Err(format!(
                        "{} is critical on its {i}-line w.r.t. {j} but not on its {j}-line w.r.t. {i}",
                        self.g.name(v)
                    ));
                }
            }
        }
        Ok(())
    }

    /// Assigns each vertex its per-color edge counts from vertex 0 and checks
    /// they are path independent and match the `wt` differences.
    fn gradedness(&self) -> std::result::Result<(), String> {
        let (n, len) = (self.n, self.g.vertex_count);
        let mut count: Vec<Option<Vec<i64>>> = vec![None; len];
        for root in 0..len {
            if count[root].is_some() {
                continue;
            }
            count[root] = Some(vec![0; n]);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let cv = count[v].clone().unwrap();
                for i in 1..=n {
                    for (w, step) in [(self.f(v, i), 1), (self.f_inv(v, i), -1)] {
                        let Some(w) = w else { continue };
                        let mut cw = cv.clone();
                        cw[i - 1] += step;
                        match &count[w] {
                            None => {
                                count[w] = Some(cw);
                                queue.push_back(w);
                            }
                            Some(existing) if *existing != cw => {
                                return Err(format!("edge counts to {} depend on the path", self.g.name(w)));
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        for (u, v, i) in self.g.edges.iter().copied() {
            for j in 1..=n {
                let wt = |x: usize| self.h(x, j) - self.t(x, j);
                if wt(u) - wt(v) != cartan(i, j) {
                    return Err(format!(
                        "wt_{j} changes by {} along {i}-edge {}->{}",
                        wt(u) - wt(v),
                        self.g.name(u),
                        self.g.name(v)
                    ));
                }
            }
        }
        Ok(())
    }

    fn source_sink(&self) -> std::result::Result<(), String> {
        let len = self.g.vertex_count;
        let sources = (0..len).filter(|&v| (1..=self.n).all(|i| self.f_inv(v, i).is_none())).count();
        let sinks = (0..len).filter(|&v| (1..=self.n).all(|i| self.f(v, i).is_none())).count();
        if sources != 1 || sinks != 1 {
            return Err(format!("{sources} sources and {sinks} sinks"));
        }
        Ok(())
    }
}

fn connectivity(g: &ColoredDigraph) -> std::result::Result<(), String> {
    let len = g.vertex_count;
    if len == 0 {
        return Err("empty graph".into());
    }
    let mut adj = vec![Vec::new(); len];
    for &(u, v, _) in &g.edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; len];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    match (0..len).find(|&v| !seen[v]) {
        Some(v) => Err(format!("{} is not connected to {}", g.name(v), g.name(0))),
        None => Ok(()),
    }
}

fn with_lines(g: &ColoredDigraph, check: Check, f: impl FnOnce(&Lines) -> std::result::Result<(), String>) -> Verdict {
    match Lines::new(g) {
        Ok(lines) => Verdict::from_result(check, f(&lines)),
        Err(w) => Verdict::fail(check, format!("requires A1: {w}")),
    }
}

pub fn check_a1(g: &ColoredDigraph) -> Verdict {
    Verdict::from_result(Check::A1, Lines::new(g).map(|_| ()))
}

pub fn check_a2(g: &ColoredDigraph) -> Verdict {
    with_lines(g, Check::A2, |l| l.a2())
}

pub fn check_a3(g: &ColoredDigraph) -> Verdict {
    with_lines(g, Check::A3, |l| l.a3())
}

pub fn check_a4(g: &ColoredDigraph, strict: bool) -> Verdict {
    with_lines(g, Check::A4, |l| l.a4(strict))
}

pub fn check_a5(g: &ColoredDigraph) -> Verdict {
    with_lines(g, Check::A5, |l| l.a5())
}

pub fn check_equal_criticals(g: &ColoredDigraph) -> Verdict {
    with_lines(g, Check::EqualCriticals, |l| l.equal_criticals())
}

pub fn check_connectivity(g: &ColoredDigraph) -> Verdict {
    Verdict::from_result(Check::Connectivity, connectivity(g))
}

pub fn check_gradedness(g: &ColoredDigraph) -> Verdict {
    with_lines(g, Check::Gradedness, |l| l.gradedness())
}

pub fn check_source_sink(g: &ColoredDigraph) -> Verdict {
    with_lines(g, Check::SourceSink, |l| l.source_sink())
}

/// `(t_i(v), h_i(v), critical vertex of P_i(v) w.r.t. j)`.
pub fn lines_and_critical(g: &ColoredDigraph, v: usize, i: usize, j: usize) -> std::result::Result<LineInfo, String> {
    Lines::new(g)?.line_info(v, i, j)
}

/// Every check in a fixed order; checks other than A1 and connectivity fail
/// with an `requires A1` witness when A1 fails.
pub fn check_all(g: &ColoredDigraph, strict_a4: bool) -> Report {
    let lines = Lines::new(g);
    let run = |check: Check, f: &dyn Fn(&Lines) -> std::result::Result<(), String>| match &lines {
        Ok(l) => Verdict::from_result(check, f(l)),
        Err(w) => Verdict::fail(check, format!("requires A1: {w}")),
    };
    let a1 = Verdict::from_result(Check::A1, lines.as_ref().map(|_| ()).map_err(Clone::clone));
    let verdicts = vec![
        a1,
        run(Check::A2, &|l: &Lines| l.a2()),
        run(Check::A3, &|l: &Lines| l.a3()),
        run(Check::A4, &|l| l.a4(strict_a4)),
        run(Check::A5, &|l: &Lines| l.a5()),
        run(Check::EqualCriticals, &|l: &Lines| l.equal_criticals()),
        check_connectivity(g),
        run(Check::Gradedness, &|l: &Lines| l.gradedness()),
        run(Check::SourceSink, &|l: &Lines| l.source_sink()),
    ];
    Report { verdicts }
}

type LineCheck<'a> = dyn Fn(&Lines) -> std::result::Result<(), String> + 'a;

/// First failing check, running cheap structural checks before the axioms;
/// `None` when everything passes.
pub fn first_failure(g: &ColoredDigraph, strict_a4: bool) -> Option<Verdict> {
    let lines = match Lines::new(g) {
        Ok(l) => l,
        Err(w) => return Some(Verdict::fail(Check::A1, w)),
    };
    if let Err(w) = connectivity(g) {
        return Some(Verdict::fail(Check::Connectivity, w));
    }
    let checks: [(Check, &LineCheck<'_>); 7] = [
        (Check::SourceSink, &|l| l.source_sink()),
        (Check::Gradedness, &|l| l.gradedness()),
        (Check::A2, &|l| l.a2()),
        (Check::A5, &|l| l.a5()),
        (Check::A3, &|l| l.a3()),
        (Check::A4, &|l| l.a4(strict_a4)),
        (Check::EqualCriticals, &|l| l.equal_criticals()),
    ];
    checks.iter().find_map(|(check, f)| f(&lines).err().map(|w| Verdict::fail(*check, w)))
}
