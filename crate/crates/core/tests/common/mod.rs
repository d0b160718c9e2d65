#![allow(dead_code)]

/// All tuples of length `n` with entries in `0..=max`, lexicographic.
pub fn grid(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=max).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Parameters covered by the exhaustive checks: n ≤ 3 with entries ≤ 2 and
/// n = 4 with entries ≤ 1.
pub fn desk_parameters() -> Vec<Vec<i64>> {
    let mut all = Vec::new();
    for n in 1..=3 {
        all.extend(grid(n, 2));
    }
    all.extend(grid(4, 1));
    all
}

pub fn cartan(i: usize, j: usize) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}
