//! Bijection between feasible functions and Gelfand-Tsetlin patterns.
//!
//! A pattern of size `n` is stored as rows `1..=n`, row `i` holding
//! `x_{i,1} ≥ … ≥ x_{i,i}` in the interleaving sense
//! `x_{i+1,j} ≥ x_{i,j} ≥ x_{i+1,j+1}`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::support_graph::{NodeRef, SupportingGraph};
use crate::weights::{is_feasible, Bounds, WeightFunction};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

impl TryFrom<Vec<Vec<i64>>> for GtPattern {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        GtPattern::new(rows)
    }
}

impl From<GtPattern> for Vec<Vec<i64>> {
    fn from(x: GtPattern) -> Self {
        x.rows
    }
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.len() != r + 1 {
                return Err(Error::Pattern(format!("row {} has {} entries, expected {}", r + 1, row.len(), r + 1)));
            }
        }
        if rows.is_empty() {
            return Err(Error::Pattern("empty pattern".into()));
        }
        Ok(GtPattern { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `x_{i,j}` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    pub fn is_interleaving(&self) -> bool {
        (1..self.size())
            .all(|i| (1..=i).all(|j| self.get(i + 1, j) >= self.get(i, j) && self.get(i, j) >= self.get(i + 1, j + 1)))
    }

    /// Interleaving, and `a_j ≥ x_{n,j} ≥ a_{j+1}` with `a_{n+1} = 0`.
    pub fn is_bounded_by(&self, a: &[i64]) -> bool {
        let n = self.size();
        a.len() == n
            && self.is_interleaving()
            && (1..=n).all(|j| {
                let next = if j < n { a[j] } else { 0 };
                a[j - 1] >= self.get(n, j) && self.get(n, j) >= next
            })
    }
}

fn partial(c: &[i64], len: usize) -> i64 {
    c[..len].iter().sum()
}

/// `(c[1:n], c[1:n−1], …, c[1:1])`.
pub fn sigma_bound(c: &[i64]) -> Vec<i64> {
    let n = c.len();
    (1..=n).map(|j| partial(c, n - j + 1)).collect()
}

/// Pattern of a feasible function; lower bounds must be zero.
pub fn to_gt(g: &SupportingGraph, f: &WeightFunction) -> Result<GtPattern> {
    let b = f.bounds();
    if !b.has_zero_lower() {
        return Err(Error::Pattern("patterns are defined for zero lower bounds only".into()));
    }
    let n = g.n();
    let rows = (1..=n)
        .map(|i| {
            (1..=i)
                .map(|j| {
                    let m = g.multinode(i, j).expect("multinode within the triangle");
                    let total: i64 = m.members.iter().map(|&v| f.value(g, v).unwrap()).sum();
                    total + partial(b.upper(), i - j)
                })
                .collect()
        })
        .collect();
    Ok(GtPattern { rows })
}

/// Inverse of [`to_gt`]; fails unless the pattern is bounded by
/// `sigma_bound(c)`.
pub fn from_gt(g: &SupportingGraph, c: &[i64], x: &GtPattern) -> Result<WeightFunction> {
    let n = g.n();
    let bounds = Bounds::zero_lower(c.to_vec())?;
    if x.size() != n {
        return Err(Error::Pattern(format!("pattern has size {}, expected {n}", x.size())));
    }
    if !x.is_bounded_by(&sigma_bound(c)) {
        return Err(Error::Pattern("pattern is not bounded by the partial sums of c".into()));
    }
    let mut values = vec![0i64; g.node_count()];
    let at = |v: NodeRef| g.index_of(v).expect("node in G");
    for j in 1..=n {
        values[at(NodeRef::new(n - j + 1, n, j))] = x.get(n, j) - partial(c, n - j);
    }
    for i in (1..n).rev() {
        for j in 1..=i {
            let members = &g.multinode(i, j).expect("multinode").members;
            let last = members.len() - 1;
            let mut bounds_of = Vec::with_capacity(members.len());
            for (p, &v) in members.iter().enumerate() {
                let nb = g.neighbors(v);
                let hi = if p == 0 { c[v.k - 1] } else { values[at(nb.sw.unwrap())] };
                let lo = if p == last { 0 } else { values[at(nb.se.unwrap())] };
                bounds_of.push((hi, lo));
            }
            let mut excess: i64 = bounds_of.iter().map(|&(hi, _)| hi).sum::<i64>() - (x.get(i, j) - partial(c, i - j));
            for (p, &v) in members.iter().enumerate() {
                let (hi, lo) = bounds_of[p];
                let cut = excess.min(hi - lo).max(0);
                values[at(v)] = hi - cut;
                excess -= cut;
            }
            if excess != 0 {
                return Err(Error::Pattern(format!("cannot realise x_{{{i},{j}}}")));
            }
        }
    }
    is_feasible(g, &values, &bounds).map_err(|v| Error::Pattern(format!("reconstruction failed: {v}")))?;
    Ok(WeightFunction::from_parts(bounds, values))
}

/// Rows admissible above `row`: `row[j] ≥ y[j] ≥ row[j+1]`.
fn rows_above(row: &[i64]) -> Vec<Vec<i64>> {
    let len = row.len() - 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(row: &[i64], len: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let j = cur.len();
        if j == len {
            out.push(cur.clone());
            return;
        }
        for y in row[j + 1]..=row[j] {
            cur.push(y);
            go(row, len, cur, out);
            cur.pop();
        }
    }
    go(row, len, &mut cur, &mut out);
    out
}

fn bottom_rows(a: &[i64]) -> Vec<Vec<i64>> {
    let mut extended = a.to_vec();
    extended.push(0);
    // the bottom row interleaves with the bound sequence itself
    rows_above(&extended)
}

/// Number of patterns bounded by the weakly decreasing tuple `a`.
pub fn count_bounded_patterns(a: &[i64]) -> u128 {
    fn count(row: &[i64], memo: &mut HashMap<Vec<i64>, u128>) -> u128 {
        if row.len() <= 1 {
            return 1;
        }
        if let Some(&v) = memo.get(row) {
            return v;
        }
        let total = rows_above(row).iter().map(|r| count(r, memo)).sum();
        memo.insert(row.to_vec(), total);
        total
    }
    if a.is_empty() || a.windows(2).any(|w| w[0] < w[1]) || a[a.len() - 1] < 0 {
        return 0;
    }
    let mut memo = HashMap::new();
    bottom_rows(a).iter().map(|r| count(r, &mut memo)).sum()
}

/// All patterns bounded by `a`, ordered lexicographically from the bottom row up.
pub fn enumerate_bounded_patterns(a: &[i64]) -> Vec<GtPattern> {
    fn go(rows: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>) {
        let top = rows.last().unwrap();
        if top.len() == 1 {
            let mut r = rows.clone();
            r.reverse();
            out.push(GtPattern { rows: r });
            return;
        }
        for above in rows_above(top) {
            rows.push(above);
            go(rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    if a.is_empty() || a.windows(2).any(|w| w[0] < w[1]) || a[a.len() - 1] < 0 {
        return out;
    }
    for bottom in bottom_rows(a) {
        let mut rows = vec![bottom];
        go(&mut rows, &mut out);
    }
    out
}
