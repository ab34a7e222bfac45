//! Slow reference implementations used as oracles by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use tokengraphs::{Graph, Subset};

/// Maximum matching size by memoized recursion over vertex subsets.
pub fn brute_matching(g: &Graph) -> usize {
    assert!(g.order() <= 20, "oracle is exponential");
    fn go(g: &Graph, mask: u32, memo: &mut HashMap<u32, usize>) -> usize {
        if mask.count_ones() < 2 {
            return 0;
        }
        if let Some(&v) = memo.get(&mask) {
            return v;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(g, rest, memo);
        for &u in g.neighbors(v) {
            if rest >> u & 1 == 1 {
                best = best.max(1 + go(g, rest & !(1 << u), memo));
            }
        }
        memo.insert(mask, best);
        best
    }
    let full = if g.order() == 32 {
        u32::MAX
    } else {
        (1u32 << g.order()) - 1
    };
    go(g, full, &mut HashMap::new())
}

/// Independence number by include/exclude recursion on the lowest remaining vertex.
pub fn enumerate_mis(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 64, "oracle uses u64 masks");
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    fn go(nbr: &[u64], alive: u64) -> usize {
        if alive == 0 {
            return 0;
        }
        let v = alive.trailing_zeros() as usize;
        let rest = alive & !(1u64 << v);
        let take = 1 + go(nbr, rest & !nbr[v]);
        if nbr[v] & rest == 0 {
            return take;
        }
        take.max(go(nbr, rest))
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    go(&nbr, full)
}

/// Whether every subset `S` of `side` has `|N(S)| >= |S|`.
pub fn hall_holds(g: &Graph, side: &[usize]) -> bool {
    assert!(side.len() <= 20, "oracle is exponential");
    (1u32..1 << side.len()).all(|pick| {
        let chosen: Vec<usize> = (0..side.len())
            .filter(|i| pick >> i & 1 == 1)
            .map(|i| side[i])
            .collect();
        let mut nbhd: Vec<usize> = chosen
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .collect();
        nbhd.sort_unstable();
        nbhd.dedup();
        nbhd.len() >= chosen.len()
    })
}

/// Neighborhood of a vertex set, sorted.
pub fn neighborhood(g: &Graph, set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().copied())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn two_colorable(g: &Graph) -> bool {
    let n = g.order();
    assert!(n <= 20, "oracle is exponential");
    (0u32..1 << n.max(1)).any(|c| g.edges().iter().all(|&(u, v)| (c >> u & 1) != (c >> v & 1)))
}

/// All k-subsets of `0..n` in increasing bit order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    (0u64..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(Subset)
        .collect()
}

/// Edge set of `F_k(G)` as subset pairs, found by checking every pair of k-subsets.
pub fn brute_token_edges(g: &Graph, k: usize) -> Vec<(Subset, Subset)> {
    let subsets = k_subsets(g.order(), k);
    let mut out = Vec::new();
    for (i, &a) in subsets.iter().enumerate() {
        for &b in &subsets[i + 1..] {
            if let Some((x, y)) = a.symmetric_difference(b).as_pair() {
                if g.has_edge(x, y) {
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    out.sort();
    out
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
