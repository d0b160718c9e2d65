//! Slacks, residual slacks and the crystal operators acting on feasible
//! functions.
//!
//! Everything is computed on the extended graph `Ḡ` through extended values,
//! so boundary multinodes need no special handling. Slack vectors for level
//! `i` are indexed by `j ∈ 0..=i+1`; `eps[0]` and `delta[i+1]` are unused
//! and kept at zero.

use serde::Serialize;

use crate::support_graph::{NodeRef, SupportingGraph};
use crate::weights::{extended, extended_switch_node, Bounds, Direction, WeightFunction};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelSlacks {
    pub level: usize,
    /// Upper slacks `ε_i(j)`.
    pub eps: Vec<i64>,
    /// Lower slacks `δ_i(j)`.
    pub delta: Vec<i64>,
    /// Residual upper slacks.
    pub eps_res: Vec<i64>,
    /// Residual lower slacks.
    pub delta_res: Vec<i64>,
}

/// Result of one forward or backward move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveOutcome {
    pub function: WeightFunction,
    pub changed: NodeRef,
    /// `(i, j)` of the multinode the move acted in.
    pub active: (usize, usize),
}

pub fn level_slacks(g: &SupportingGraph, f: &WeightFunction, i: usize) -> LevelSlacks {
    level_slacks_raw(g, f.bounds(), f.values(), i)
}

pub(crate) fn raw_slacks(g: &SupportingGraph, b: &Bounds, values: &[i64], i: usize) -> (Vec<i64>, Vec<i64>) {
    assert!(i >= 1 && i <= g.n(), "level {i} out of range 1..={}", g.n());
    let mut eps = vec![0; i + 2];
    let mut delta = vec![0; i + 2];
    for k in 1..=g.n() {
        for j in 0..=i + 1 {
            let here = extended(g, b, values, NodeRef::new(k, i, j));
            if j >= 1 {
                eps[j] += extended(g, b, values, NodeRef::new(k, i - 1, j - 1)) - here;
            }
            if j <= i {
                delta[j] += here - extended(g, b, values, NodeRef::new(k, i + 1, j + 1));
            }
        }
    }
    (eps, delta)
}

pub(crate) fn level_slacks_raw(g: &SupportingGraph, b: &Bounds, values: &[i64], i: usize) -> LevelSlacks {
    let (eps, delta) = raw_slacks(g, b, values, i);
    let (eps_res, delta_res) = residual_slacks(&eps, &delta);
    LevelSlacks { level: i, eps, delta, eps_res, delta_res }
}

/// Closed-form residual slacks.
///
/// With `P(x) = Σ_{r=1}^{x} ε(r) − Σ_{r=0}^{x−1} δ(r)` one has
/// `π(p, q) = P(q) − P(p)`, so `ε̃(j) = max(0, P(j) − max_{p<j} P(p))` and
/// `δ̃(j) = max(0, P(j) − max_{q>j} P(q))`.
pub fn residual_slacks(eps: &[i64], delta: &[i64]) -> (Vec<i64>, Vec<i64>) {
    assert_eq!(eps.len(), delta.len());
    let len = eps.len();
    if len == 0 {
        return (vec![], vec![]);
    }
    let mut prefix = vec![0i64; len];
    for x in 1..len {
        prefix[x] = prefix[x - 1] + eps[x] - delta[x - 1];
    }
    let mut eps_res = vec![0; len];
    let mut best = prefix[0];
    for j in 1..len {
        eps_res[j] = (prefix[j] - best).max(0);
        best = best.max(prefix[j]);
    }
    let mut delta_res = vec![0; len];
    let mut best = prefix[len - 1];
    for j in (0..len - 1).rev() {
        delta_res[j] = (prefix[j] - best).max(0);
        best = best.max(prefix[j]);
    }
    (eps_res, delta_res)
}

/// Residual slacks by repeatedly cancelling an upper slack at `j` against a
/// lower slack at `j' < j` with nothing left in between.
pub fn residual_slacks_by_cancelation(eps: &[i64], delta: &[i64]) -> (Vec<i64>, Vec<i64>) {
    assert_eq!(eps.len(), delta.len());
    let len = eps.len();
    let mut white = eps.to_vec();
    let mut black = delta.to_vec();
    if len > 0 {
        white[0] = 0;
        black[len - 1] = 0;
    }
    loop {
        let mut pair = None;
        let mut open: Option<usize> = None;
        for q in 0..len {
            if white[q] > 0 {
                if let Some(p) = open {
                    pair = Some((p, q));
                    break;
                }
            }
            if black[q] > 0 {
                open = Some(q);
            } else if white[q] > 0 {
                open = None;
            }
        }
        let Some((p, q)) = pair else { break };
        let m = white[q].min(black[p]);
        white[q] -= m;
        black[p] -= m;
    }
    (white, black)
}

fn forward_active(eps_res: &[i64], delta_res: &[i64], i: usize) -> Option<usize> {
    // smallest j in 1..=i with δ̃(0..j) = 0 and ε̃(j+1..=i+1) = 0
    let first_black = delta_res.iter().position(|&x| x > 0).unwrap_or(usize::MAX);
    let last_white = eps_res.iter().rposition(|&x| x > 0).unwrap_or(0);
    let j = last_white.max(1);
    if j > i || j > first_black {
        return None;
    }
    (eps_res[j] > 0).then_some(j)
}

fn backward_active(delta_res: &[i64]) -> Option<usize> {
    delta_res.iter().position(|&x| x > 0)
}

/// Active multinode `(i, j)` in level `i`, or `None` when the operator does
/// not act.
pub fn active_multinode(g: &SupportingGraph, f: &WeightFunction, i: usize, dir: Direction) -> Option<(usize, usize)> {
    let s = level_slacks(g, f, i);
    let j = match dir {
        Direction::Forward => forward_active(&s.eps_res, &s.delta_res, i),
        Direction::Backward => backward_active(&s.delta_res),
    }?;
    Some((i, j))
}

/// Locates the node a move in level `i` changes; returns its canonical
/// position and the active multinode.
pub(crate) fn locate_move(
    g: &SupportingGraph,
    b: &Bounds,
    values: &[i64],
    i: usize,
    dir: Direction,
) -> Option<(usize, NodeRef, (usize, usize))> {
    let s = level_slacks_raw(g, b, values, i);
    let j = match dir {
        Direction::Forward => forward_active(&s.eps_res, &s.delta_res, i)?,
        Direction::Backward => backward_active(&s.delta_res)?,
    };
    let v = extended_switch_node(g, b, values, i, j, dir)?;
    let pos = g.index_of(v).unwrap_or_else(|| panic!("switch-node {v} of an active multinode lies outside G"));
    Some((pos, v, (i, j)))
}

fn apply(g: &SupportingGraph, f: &WeightFunction, i: usize, dir: Direction) -> Option<MoveOutcome> {
    let (pos, changed, active) = locate_move(g, f.bounds(), f.values(), i, dir)?;
    let mut values = f.values().to_vec();
    values[pos] += match dir {
        Direction::Forward => 1,
        Direction::Backward => -1,
    };
    Some(MoveOutcome { function: WeightFunction::from_parts(f.bounds().clone(), values), changed, active })
}

/// The operator `φ_i`.
pub fn forward_move(g: &SupportingGraph, f: &WeightFunction, i: usize) -> Option<MoveOutcome> {
    apply(g, f, i, Direction::Forward)
}

/// The operator `ψ_i`, inverse to `φ_i`.
pub fn backward_move(g: &SupportingGraph, f: &WeightFunction, i: usize) -> Option<MoveOutcome> {
    apply(g, f, i, Direction::Backward)
}

/// `(h_i, t_i)`: the number of forward and backward `i`-moves available from `f`.
pub fn string_lengths(g: &SupportingGraph, f: &WeightFunction, i: usize) -> (i64, i64) {
    let s = level_slacks(g, f, i);
    (s.eps_res.iter().sum(), s.delta_res.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{is_feasible, principal_function};
    use proptest::prelude::*;

    /// Direct transcription of the residual-slack definition, O(i²).
    fn reduce_oracle(eps: &[i64], delta: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let len = eps.len();
        let pi = |p: usize, q: usize| -> i64 {
            (p + 1..=q).map(|r| eps[r]).sum::<i64>() - (p..q).map(|r| delta[r]).sum::<i64>()
        };
        let e = (0..len).map(|j| (0..j).map(|p| pi(p, j)).min().map_or(0, |m| m.max(0))).collect();
        let d = (0..len).map(|j| (j + 1..len).map(|q| -pi(j, q)).min().map_or(0, |m| m.max(0))).collect();
        (e, d)
    }

    fn setup(c: &[i64]) -> (SupportingGraph, Bounds) {
        let g = SupportingGraph::new(c.len()).unwrap();
        (g, Bounds::zero_lower(c.to_vec()).unwrap())
    }

    #[test]
    fn slacks_at_source_of_k12() {
        let (g, b) = setup(&[1, 2]);
        let f = principal_function(&g, &b, &[0, 0]).unwrap();
        let s = level_slacks(&g, &f, 1);
        assert_eq!(s.eps[1], 3);
        assert_eq!(s.delta[0], 2);
        assert_eq!(s.eps_res[1], 1);
        let s = level_slacks(&g, &f, 2);
        assert_eq!(s.eps_res[1], 2);
        assert_eq!(s.eps_res[2], 0);
    }

    #[test]
    fn no_forward_slack_at_sink() {
        let (g, b) = setup(&[1, 2, 1]);
        let f = principal_function(&g, &b, &[1, 2, 1]).unwrap();
        for i in 1..=3 {
            assert!(level_slacks(&g, &f, i).eps_res.iter().all(|&x| x == 0));
            assert_eq!(active_multinode(&g, &f, i, Direction::Forward), None);
        }
        let f0 = principal_function(&g, &b, &[0, 0, 0]).unwrap();
        for i in 1..=3 {
            assert_eq!(active_multinode(&g, &f0, i, Direction::Backward), None);
            assert!(backward_move(&g, &f0, i).is_none());
        }
    }

    #[test]
    fn cancelation_examples() {
        assert_eq!(residual_slacks_by_cancelation(&[0; 4], &[0; 4]), (vec![0; 4], vec![0; 4]));
        let (e, d) = residual_slacks_by_cancelation(&[0, 3, 0], &[2, 0, 0]);
        assert_eq!(e, vec![0, 1, 0]);
        assert_eq!(d, vec![0, 0, 0]);
        assert_eq!(residual_slacks(&[0, 3, 0], &[2, 0, 0]), (e, d));
    }

    #[test]
    fn forward_and_backward_examples() {
        let (g, b) = setup(&[1, 2]);
        let f0 = principal_function(&g, &b, &[0, 0]).unwrap();
        assert_eq!(active_multinode(&g, &f0, 1, Direction::Forward), Some((1, 1)));
        let m1 = forward_move(&g, &f0, 1).unwrap();
        assert_eq!(m1.changed, NodeRef::new(1, 1, 1));
        let m2 = forward_move(&g, &f0, 2).unwrap();
        assert_eq!(m2.changed, NodeRef::new(2, 2, 1));
        assert_eq!(m2.active, (2, 1));
        let back = backward_move(&g, &m1.function, 1).unwrap();
        assert_eq!(back.function, f0);
        let sink = principal_function(&g, &b, &[1, 2]).unwrap();
        assert!(forward_move(&g, &sink, 1).is_none());
        assert!(forward_move(&g, &sink, 2).is_none());
    }

    #[test]
    fn string_lengths_at_extremes() {
        let (g, b) = setup(&[1, 2]);
        let f0 = principal_function(&g, &b, &[0, 0]).unwrap();
        assert_eq!(string_lengths(&g, &f0, 1), (1, 0));
        assert_eq!(string_lengths(&g, &f0, 2), (2, 0));
        let fc = principal_function(&g, &b, &[1, 2]).unwrap();
        assert_eq!(string_lengths(&g, &fc, 1), (0, 2));
        assert_eq!(string_lengths(&g, &fc, 2), (0, 1));
    }

    #[test]
    fn source_moves_raise_the_left_node() {
        // from f_0 each φ_i raises v_i^i(1) until it reaches c_i
        let c = [2, 1, 3];
        let (g, b) = setup(&c);
        for i in 1..=3 {
            let mut f = principal_function(&g, &b, &[0, 0, 0]).unwrap();
            for _ in 0..c[i - 1] {
                let m = forward_move(&g, &f, i).unwrap();
                assert_eq!(m.changed, NodeRef::new(i, i, 1));
                f = m.function;
            }
            assert!(forward_move(&g, &f, i).is_none());
        }
    }

    /// All functions with values in [d_k, c_k] passing the feasibility test.
    fn brute_force_feasible(g: &SupportingGraph, b: &Bounds) -> Vec<Vec<i64>> {
        let nodes = g.nodes();
        let mut out = Vec::new();
        let mut cur: Vec<i64> = nodes.iter().map(|v| b.lower()[v.k - 1]).collect();
        loop {
            if is_feasible(g, &cur, b).is_ok() {
                out.push(cur.clone());
            }
            let mut p = 0;
            loop {
                if p == cur.len() {
                    return out;
                }
                let k = nodes[p].k - 1;
                if cur[p] < b.upper()[k] {
                    cur[p] += 1;
                    break;
                }
                cur[p] = b.lower()[k];
                p += 1;
            }
        }
    }

    #[test]
    fn moves_on_every_feasible_function() {
        for c in [vec![1, 2], vec![2, 2], vec![1, 1, 1], vec![2, 0, 1], vec![1, 1, 1, 1]] {
            let (g, b) = setup(&c);
            for values in brute_force_feasible(&g, &b) {
                let f = WeightFunction::from_parts(b.clone(), values);
                for i in 1..=g.n() {
                    let s = level_slacks(&g, &f, i);
                    assert!(s.eps[1] >= s.delta[0]);
                    assert_eq!(s.eps[i + 1], 0);
                    assert_eq!(
                        residual_slacks_by_cancelation(&s.eps, &s.delta),
                        (s.eps_res.clone(), s.delta_res.clone())
                    );
                    // no residual upper slack to the right of a residual lower slack
                    for j in 0..=i + 1 {
                        for jp in 0..j {
                            assert!(!(s.eps_res[j] > 0 && s.delta_res[jp] > 0));
                        }
                    }
                    if let Some(m) = forward_move(&g, &f, i) {
                        let r = is_feasible(&g, m.function.values(), &b);
                        assert!(r.is_ok(), "{c:?} {:?} i={i} -> {:?}: {:?}", f.values(), m.changed, r);
                        let diff: Vec<i64> = m
                            .function
                            .values()
                            .iter()
                            .zip(f.values())
                            .map(|(a, b)| a - b)
                            .filter(|&x| x != 0)
                            .collect();
                        assert_eq!(diff, vec![1]);
                        assert_eq!(backward_move(&g, &m.function, i).unwrap().function, f);
                    }
                    if let Some(m) = backward_move(&g, &f, i) {
                        assert!(is_feasible(&g, m.function.values(), &b).is_ok());
                        assert_eq!(forward_move(&g, &m.function, i).unwrap().function, f);
                    }
                    let (h, t) = string_lengths(&g, &f, i);
                    let mut count = 0;
                    let mut cur = f.clone();
                    while let Some(m) = forward_move(&g, &cur, i) {
                        cur = m.function;
                        count += 1;
                    }
                    assert_eq!(count, h);
                    let mut count = 0;
                    let mut cur = f.clone();
                    while let Some(m) = backward_move(&g, &cur, i) {
                        cur = m.function;
                        count += 1;
                    }
                    assert_eq!(count, t);
                }
            }
        }
    }

    #[test]
    fn nonzero_lower_bounds_shift_moves() {
        let g = SupportingGraph::new(3).unwrap();
        let shifted = Bounds::new(vec![2, 0, 3], vec![1, -1, 2]).unwrap();
        let plain = Bounds::zero_lower(shifted.span()).unwrap();
        let f = principal_function(&g, &shifted, &[1, -1, 2]).unwrap();
        let f0 = principal_function(&g, &plain, &[0, 0, 0]).unwrap();
        for i in 1..=3 {
            assert_eq!(string_lengths(&g, &f, i), string_lengths(&g, &f0, i));
            let a = forward_move(&g, &f, i).map(|m| m.changed);
            let b = forward_move(&g, &f0, i).map(|m| m.changed);
            assert_eq!(a, b);
        }
    }

    proptest! {
        #[test]
        fn closed_form_matches_definition(
            eps in proptest::collection::vec(0i64..6, 2..8),
            delta_seed in proptest::collection::vec(0i64..6, 8),
        ) {
            let delta: Vec<i64> = delta_seed[..eps.len()].to_vec();
            let mut eps = eps;
            eps[0] = 0;
            let mut delta = delta;
            let last = delta.len() - 1;
            delta[last] = 0;
            let oracle = reduce_oracle(&eps, &delta);
            prop_assert_eq!(residual_slacks(&eps, &delta), oracle.clone());
            prop_assert_eq!(residual_slacks_by_cancelation(&eps, &delta), oracle);
        }
    }
}
