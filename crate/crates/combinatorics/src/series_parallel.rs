//! Brute-force construction of labeled series-parallel posets on ≤ 5 points.

use std::collections::{HashMap, HashSet};

/// Strict order relation on points `0..n`, bit `i * n + j` meaning i < j.
type Relation = u32;

fn build(n: usize) -> HashMap<u32, HashSet<Relation>> {
    assert!(n <= 5, "series-parallel counting is limited to 5 points");
    let mut table: HashMap<u32, HashSet<Relation>> = HashMap::new();
    for mask in 1u32..(1 << n) {
        let mut set = HashSet::new();
        if mask.count_ones() == 1 {
            set.insert(0);
        } else {
            let mut a = (mask - 1) & mask;
            while a > 0 {
                let b = mask & !a;
                let between: Relation = (0..n)
                    .filter(|&i| a >> i & 1 == 1)
                    .flat_map(|i| (0..n).filter(move |&j| b >> j & 1 == 1).map(move |j| 1 << (i * n + j)))
                    .fold(0, |acc, bit| acc | bit);
                for p in &table[&a] {
                    for q in &table[&b] {
                        set.insert(p | q);
                        set.insert(p | q | between);
                    }
                }
                a = (a - 1) & mask;
            }
        }
        table.insert(mask, set);
    }
    table
}

fn connected(r: Relation, n: usize) -> bool {
    let mut seen = 1u32;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            let linked = r >> (i * n + j) & 1 == 1 || r >> (j * n + i) & 1 == 1;
            if linked && seen >> j & 1 == 0 {
                seen |= 1 << j;
                stack.push(j);
            }
        }
    }
    seen == (1 << n) - 1
}

/// d_n (all) or f_n (connected) labeled series-parallel posets on n points.
pub fn count(n: usize, connected_only: bool) -> u64 {
    if n == 0 {
        return 0;
    }
    let table = build(n);
    let full = &table[&((1 << n) - 1)];
    if connected_only {
        full.iter().filter(|&&r| connected(r, n)).count() as u64
    } else {
        full.len() as u64
    }
}

/// The labeled series-parallel posets on points 1..=n, each given by its
/// strict relations (i, j) meaning i < j, sorted.
pub fn posets(n: usize, connected_only: bool) -> Vec<Vec<(usize, usize)>> {
    if n == 0 {
        return Vec::new();
    }
    let table = build(n);
    let mut out: Vec<Vec<(usize, usize)>> = table[&((1 << n) - 1)]
        .iter()
        .filter(|&&r| !connected_only || connected(r, n))
        .map(|&r| {
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| r >> (i * n + j) & 1 == 1)
                .map(|(i, j)| (i + 1, j + 1))
                .collect()
        })
        .collect();
    out.sort();
    out
}

/// `{1<2, 1<3}`; the antichain is `{}`.
pub fn format_poset(relations: &[(usize, usize)]) -> String {
    let parts: Vec<String> = relations.iter().map(|(i, j)| format!("{i}<{j}")).collect();
    format!("{{{}}}", parts.join(", "))
}
