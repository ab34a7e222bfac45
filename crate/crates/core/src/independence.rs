//! Exact independence numbers: a branch-and-bound solver, a brute-force
//! oracle, the class-saturation shortcut for bipartite token graphs, and the
//! recursive bounds relating `F_k(G)` to token graphs of vertex-deleted
//! subgraphs.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::matching::saturates;
use crate::token::{token_graph, TokenGraph};

/// Resource limits for the exact solver. Exceeding one is an error, never a
/// silently suboptimal answer.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(secs: f64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_secs_f64(secs)),
            max_nodes: None,
        }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            deadline: None,
            max_nodes: Some(max_nodes),
        }
    }

    /// A fresh budget of the same shape, restarted now. `None` seconds means unlimited.
    pub fn from_option(secs: Option<f64>) -> Self {
        secs.map_or_else(Budget::unlimited, Budget::seconds)
    }
}

/// A set of pairwise non-adjacent vertices of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependentSet {
    vertices: Vec<usize>,
}

impl IndependentSet {
    pub fn new(g: &Graph, mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        let set = IndependentSet { vertices };
        set.validate(g)?;
        Ok(set)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        for (i, &u) in self.vertices.iter().enumerate() {
            if let Some(&v) = self.vertices[i + 1..].iter().find(|&&v| g.has_edge(u, v)) {
                return Err(Error::InvalidIndependentSet(format!(
                    "{u} and {v} are adjacent"
                )));
            }
        }
        Ok(())
    }
}

/// A maximum independent set of `g`, without resource limits.
pub fn max_independent_set(g: &Graph) -> IndependentSet {
    max_independent_set_with_budget(g, &Budget::unlimited())
        .expect("an unlimited budget cannot be exceeded")
}

/// A maximum independent set of `g` by branch and bound.
///
/// Per node: vertices of degree 0 or 1 are taken outright, a greedy clique
/// cover bounds the remainder, disconnected remainders are solved per
/// component, and otherwise the search branches on the highest-degree vertex
/// (lowest id on ties), include branch first. A later branch replaces the
/// incumbent only when strictly larger, which fixes the returned witness.
pub fn max_independent_set_with_budget(g: &Graph, budget: &Budget) -> Result<IndependentSet> {
    let mut search = Search {
        rows: (0..g.order()).map(|v| g.neighbor_row(v).clone()).collect(),
        nodes: 0,
        budget: *budget,
    };
    let mut all = FixedBitSet::with_capacity(g.order());
    all.insert_range(..);
    let mut vertices = search
        .solve(all, 0)?
        .expect("floor 0 always yields a solution");
    vertices.sort_unstable();
    Ok(IndependentSet { vertices })
}

struct Search {
    rows: Vec<FixedBitSet>,
    nodes: u64,
    budget: Budget,
}

impl Search {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                return Err(Error::BudgetExceeded);
            }
        }
        if self.nodes % 1024 == 1 {
            if let Some(deadline) = self.budget.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::BudgetExceeded);
                }
            }
        }
        Ok(())
    }

    #[inline]
    fn degree_in(&self, v: usize, cand: &FixedBitSet) -> usize {
        self.rows[v].intersection_count(cand)
    }

    /// The maximum independent set of `G[cand]` if its size is at least
    /// `floor`, otherwise `None`.
    fn solve(&mut self, mut cand: FixedBitSet, floor: usize) -> Result<Option<Vec<usize>>> {
        self.tick()?;
        let mut chosen = self.reduce(&mut cand);
        let need = floor.saturating_sub(chosen.len());

        if cand.is_clear() {
            return Ok((chosen.len() >= floor).then_some(chosen));
        }
        if self.clique_cover_bound(&cand) < need {
            return Ok(None);
        }

        let components = self.components(&cand);
        if components.len() > 1 {
            let mut bounds: Vec<usize> = components
                .iter()
                .map(|c| self.clique_cover_bound(c))
                .collect();
            for (i, comp) in components.into_iter().enumerate() {
                let others: usize = bounds
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, b)| b)
                    .sum();
                match self.solve(comp, need.saturating_sub(others))? {
                    None => return Ok(None),
                    Some(part) => {
                        bounds[i] = part.len();
                        chosen.extend(part);
                    }
                }
            }
            return Ok((chosen.len() >= floor).then_some(chosen));
        }

        let pivot = cand
            .ones()
            .map(|v| (self.degree_in(v, &cand), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v)| v)
            .expect("candidate set is non-empty");

        let mut best: Option<Vec<usize>> = None;
        let mut with_pivot = cand.clone();
        with_pivot.difference_with(&self.rows[pivot]);
        with_pivot.set(pivot, false);
        if let Some(mut part) = self.solve(with_pivot, need.saturating_sub(1))? {
            part.push(pivot);
            best = Some(part);
        }
        let exclude_floor = best.as_ref().map_or(need, |b| need.max(b.len() + 1));
        let mut without_pivot = cand;
        without_pivot.set(pivot, false);
        if let Some(part) = self.solve(without_pivot, exclude_floor)? {
            best = Some(part);
        }
        Ok(best.map(|part| {
            chosen.extend(part);
            chosen
        }))
    }

    /// Takes every vertex of degree 0 or 1 in `G[cand]` (some maximum
    /// independent set contains it) until none is left.
    fn reduce(&self, cand: &mut FixedBitSet) -> Vec<usize> {
        let mut chosen = Vec::new();
        loop {
            let mut changed = false;
            let snapshot: Vec<usize> = cand.ones().collect();
            for v in snapshot {
                if !cand.contains(v) {
                    continue;
                }
                match self.degree_in(v, cand) {
                    0 => {
                        cand.set(v, false);
                        chosen.push(v);
                        changed = true;
                    }
                    1 => {
                        let u = self.rows[v].intersection(cand).next().expect("degree one");
                        cand.set(v, false);
                        cand.set(u, false);
                        chosen.push(v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return chosen;
            }
        }
    }

    /// Number of cliques in a greedy clique partition of `G[cand]`; an
    /// independent set meets each clique at most once.
    fn clique_cover_bound(&self, cand: &FixedBitSet) -> usize {
        // each entry: vertices adjacent to every member of the clique so far
        let mut commons: Vec<FixedBitSet> = Vec::new();
        for v in cand.ones() {
            match commons.iter_mut().find(|c| c.contains(v)) {
                Some(common) => common.intersect_with(&self.rows[v]),
                None => {
                    let mut common = self.rows[v].clone();
                    common.intersect_with(cand);
                    commons.push(common);
                }
            }
        }
        commons.len()
    }

    fn components(&self, cand: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut left = cand.clone();
        let mut out = Vec::new();
        while let Some(root) = left.minimum() {
            let mut comp = FixedBitSet::with_capacity(cand.len());
            comp.insert(root);
            let mut frontier = vec![root];
            left.set(root, false);
            while let Some(u) = frontier.pop() {
                let fresh: Vec<usize> = self.rows[u].intersection(&left).collect();
                for w in fresh {
                    left.set(w, false);
                    comp.insert(w);
                    frontier.push(w);
                }
            }
            out.push(comp);
        }
        out
    }
}

/// Largest vertex count accepted by [`brute_force_mis`].
pub const BRUTE_FORCE_LIMIT: usize = 26;

/// Independence number by exhaustive enumeration of independent sets over
/// adjacency masks. Only for small graphs; used as an oracle.
pub fn brute_force_mis(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();

    fn best(rest: u32, adj: &[u32]) -> usize {
        if rest == 0 {
            return 0;
        }
        let v = rest.trailing_zeros() as usize;
        let without = rest & !(1 << v);
        if adj[v] & rest == 0 {
            return 1 + best(without, adj);
        }
        best(without, adj).max(1 + best(without & !adj[v], adj))
    }

    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Ok(best(all, &adj))
}

/// The exact independence number from class saturation: if the smaller of
/// the two classes can be matched into the larger, the larger class is a
/// maximum independent set. `None` when Hall's condition fails.
pub fn beta_via_saturation(t: &TokenGraph, labels: &Bipartition) -> Result<Option<usize>> {
    labels.validate(t.graph())?;
    let small = labels.smaller_side();
    if saturates(t.graph(), labels, small)? {
        Ok(Some(labels.part_len(small.other())))
    } else {
        Ok(None)
    }
}

/// Lower and upper bound on an independence number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsPair {
    pub lower: usize,
    pub upper: usize,
}

impl BoundsPair {
    pub fn contains(&self, value: usize) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// Something that returns exact independence numbers.
pub trait BetaOracle {
    fn beta(&mut self, g: &Graph) -> Result<usize>;
}

impl<F: FnMut(&Graph) -> Result<usize>> BetaOracle for F {
    fn beta(&mut self, g: &Graph) -> Result<usize> {
        self(g)
    }
}

/// Oracle backed by [`max_independent_set_with_budget`].
pub struct SolverOracle {
    pub budget: Budget,
}

impl BetaOracle for SolverOracle {
    fn beta(&mut self, g: &Graph) -> Result<usize> {
        Ok(max_independent_set_with_budget(g, &self.budget)?.len())
    }
}

/// `beta(F_j(h))` extended to every `j >= 0`: one vertex when `j = 0` or
/// `j = |h|`, none when `j > |h|`.
pub fn beta_token(h: &Graph, j: usize, oracle: &mut dyn BetaOracle) -> Result<usize> {
    let n = h.order();
    if j > n {
        Ok(0)
    } else if j == 0 || j == n {
        Ok(1)
    } else {
        oracle.beta(token_graph(h, j)?.graph())
    }
}

/// For `2 <= k <= n-1`:
/// `max_v [beta(F_{k-1}(G-v)) + beta(F_k(G-N[v]))] <= beta(F_k(G))
///  <= floor(sum_v beta(F_{k-1}(G-v)) / k)`.
pub fn recursive_bounds(g: &Graph, k: usize, oracle: &mut dyn BetaOracle) -> Result<BoundsPair> {
    let n = g.order();
    if k < 2 || k >= n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    let mut lower = 0;
    let mut sum = 0;
    for v in 0..n {
        let (minus_v, _) = g.delete_vertices(&[v])?;
        let (minus_closed, _) = g.delete_vertices(&g.closed_neighborhood(v))?;
        let b = beta_token(&minus_v, k - 1, oracle)?;
        sum += b;
        lower = lower.max(b + beta_token(&minus_closed, k, oracle)?);
    }
    let upper = sum / k;
    if lower > upper {
        return Err(Error::Internal(format!(
            "recursive bounds crossed: {lower} > {upper}"
        )));
    }
    Ok(BoundsPair { lower, upper })
}

/// For vertex-transitive `G` and `2 <= k <= n-2`:
/// `beta(F_k(G)) <= min{ floor(n/k beta(F_{k-1}(G-w))), floor(n/(n-k) beta(F_k(G-w))) }`.
///
/// The caller vouches for vertex-transitivity; only regularity is checked.
pub fn vertex_transitive_bound(
    g: &Graph,
    k: usize,
    w: usize,
    oracle: &mut dyn BetaOracle,
) -> Result<usize> {
    let n = g.order();
    if k < 2 || k + 2 > n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    if w >= n {
        return Err(Error::VertexOutOfRange {
            vertex: w,
            order: n,
        });
    }
    if g.degrees().windows(2).any(|d| d[0] != d[1]) {
        return Err(Error::BadParameter(
            "graph is not regular, hence not vertex-transitive".into(),
        ));
    }
    let (minus_w, _) = g.delete_vertices(&[w])?;
    let first = n * beta_token(&minus_w, k - 1, oracle)? / k;
    let second = n * beta_token(&minus_w, k, oracle)? / (n - k);
    Ok(first.min(second))
}
