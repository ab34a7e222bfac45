//! Explicit witnesses: large matchings in token graphs of graphs with
//! (almost) perfect matchings, isolated token vertices of matching graphs,
//! the layer sets of `F_2(C_p)` and the independent set built from them, and
//! the bipartite witness graphs whose 2-token graphs have independence
//! number equal to one class size.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{family, Bipartition, Graph, Side};
use crate::independence::IndependentSet;
use crate::matching::Matching;
use crate::subset::{binomial, subsets_of_size, Subset};
use crate::token::{token_graph, TokenGraph};

/// A matching of `F_k(G)` written with subsets rather than ranks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TokenMatching {
    pub k: usize,
    pub pairs: Vec<(Subset, Subset)>,
}

impl TokenMatching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Rank form, validated as a matching of `t`.
    pub fn to_matching(&self, t: &TokenGraph) -> Result<Matching> {
        if t.k() != self.k {
            return Err(Error::InvalidMatching(format!(
                "built for k = {}, token graph has k = {}",
                self.k,
                t.k()
            )));
        }
        let edges = self
            .pairs
            .iter()
            .map(|&(a, b)| Ok((t.rank_of(a)?, t.rank_of(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Matching::from_edges(t.graph(), &edges)
    }

    fn covered(&self) -> Subset64Set {
        let mut seen = Subset64Set::default();
        for &(a, b) in &self.pairs {
            seen.insert(a);
            seen.insert(b);
        }
        seen
    }
}

#[derive(Default)]
struct Subset64Set {
    members: std::collections::HashSet<Subset>,
    collision: bool,
}

impl Subset64Set {
    fn insert(&mut self, s: Subset) {
        if !self.members.insert(s) {
            self.collision = true;
        }
    }
}

/// Checks that every pair is an edge of `F_size(G[ground])` and that the
/// pairs are vertex-disjoint.
fn check_token_pairs(
    g: &Graph,
    ground: Subset,
    pairs: &[(Subset, Subset)],
    size: usize,
) -> Result<()> {
    for &(a, b) in pairs {
        let ok = a.len() == size
            && b.len() == size
            && a.union(b).is_subset_of(ground)
            && a.symmetric_difference(b)
                .as_pair()
                .is_some_and(|(u, v)| g.has_edge(u, v));
        if !ok {
            return Err(Error::InvalidMatching(format!(
                "[{a}, {b}] is not an edge of the {size}-token graph"
            )));
        }
    }
    let covered = TokenMatching {
        k: size,
        pairs: pairs.to_vec(),
    }
    .covered();
    if covered.collision {
        return Err(Error::InvalidMatching("pairs share a token vertex".into()));
    }
    Ok(())
}

/// Combines matchings of `F_k(H)` and `F_{k-2}(H)`, `H = G - {v, w}`, into a
/// matching of `F_k(G)` for an edge `[v, w]`: `N` as is, every `[B, B']` of
/// `L` lifted to `[B + v + w, B' + v + w]`, and `[A + v, A + w]` for every
/// (k-1)-subset `A` avoiding `v` and `w`. The result has
/// `|N| + |L| + C(n-2, k-1)` edges.
///
/// Subsets use the vertex ids of `G`; `N` and `L` must avoid `v` and `w`.
pub fn lemma_times_combine(
    g: &Graph,
    edge: (usize, usize),
    n_part: &[(Subset, Subset)],
    l_part: &[(Subset, Subset)],
    k: usize,
) -> Result<TokenMatching> {
    let n = g.order();
    if n < 6 {
        return Err(Error::BadParameter(format!(
            "needs order at least 6, got {n}"
        )));
    }
    if k < 3 || k + 3 > n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    combine_within(g, g.vertex_mask(), edge, n_part, l_part, k)
}

fn combine_within(
    g: &Graph,
    ground: Subset,
    (v, w): (usize, usize),
    n_part: &[(Subset, Subset)],
    l_part: &[(Subset, Subset)],
    k: usize,
) -> Result<TokenMatching> {
    if !g.has_edge(v, w) || !ground.contains(v) || !ground.contains(w) {
        return Err(Error::BadParameter(format!(
            "[{v}, {w}] is not an edge of the graph"
        )));
    }
    let rest = ground.without(v).without(w);
    check_token_pairs(g, rest, n_part, k)?;
    check_token_pairs(g, rest, l_part, k - 2)?;

    let vw = Subset::EMPTY.with(v).with(w);
    let mut pairs = Vec::with_capacity(n_part.len() + l_part.len());
    pairs.extend_from_slice(n_part);
    pairs.extend(l_part.iter().map(|&(a, b)| (a.union(vw), b.union(vw))));
    pairs.extend(subsets_of_size(rest, k - 1).map(|a| (a.with(v), a.with(w))));

    let expected = n_part.len() + l_part.len() + binomial(rest.len() as u64, k as u64 - 1) as usize;
    let out = TokenMatching { k, pairs };
    if out.len() != expected || out.covered().collision {
        return Err(Error::Internal(
            "combined matching is not vertex-disjoint".into(),
        ));
    }
    Ok(out)
}

/// Vertex names of `matching_graph(m, s)` used by the 2-token construction:
/// `a_i = 2(i-1)`, `b_i = 2(i-1) + 1`, and for `s = 1` the isolated vertex
/// `b_{m+1} = 2m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingGraphLabels {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

pub fn matching_graph_labels(m: usize, s: usize) -> MatchingGraphLabels {
    let a = (0..m).map(|i| 2 * i).collect();
    let mut b: Vec<usize> = (0..m).map(|i| 2 * i + 1).collect();
    if s == 1 {
        b.push(2 * m);
    }
    MatchingGraphLabels { a, b }
}

/// `M1 = {[{a_i, a_j}, {a_j, b_i}] : i < j <= m}` and
/// `M2 = {[{b_i, b_j}, {a_i, b_j}] : i < j <= m + s}`.
fn f2_pairs(labels: &MatchingGraphLabels) -> Vec<(Subset, Subset)> {
    let (a, b) = (&labels.a, &labels.b);
    let pair = |x: usize, y: usize| Subset::EMPTY.with(x).with(y);
    let mut out = Vec::new();
    for j in 0..a.len() {
        for i in 0..j {
            out.push((pair(a[i], a[j]), pair(a[j], b[i])));
        }
    }
    for j in 0..b.len() {
        for i in 0..j {
            out.push((pair(b[i], b[j]), pair(a[i], b[j])));
        }
    }
    out
}

/// The explicit matching of `F_2(matching_graph(m, s))` with
/// `C(m, 2) + C(m + s, 2) = (C(2m + s, 2) - m) / 2` edges.
pub fn f2_matching_construction(m: usize, s: usize) -> Result<TokenMatching> {
    if s > 1 {
        return Err(Error::BadParameter("s must be 0 or 1".into()));
    }
    if 2 * m + s < 3 {
        return Err(Error::BadParameter("order must be at least 3".into()));
    }
    let g = family("matching_graph", &[m, s])?;
    let pairs = f2_pairs(&matching_graph_labels(m, s));
    check_token_pairs(&g, g.vertex_mask(), &pairs, 2)?;
    let expected = binomial(m as u64, 2) + binomial((m + s) as u64, 2);
    debug_assert_eq!(2 * expected, binomial((2 * m + s) as u64, 2) - m as u64);
    if pairs.len() as u64 != expected {
        return Err(Error::Internal(
            "2-token construction has the wrong size".into(),
        ));
    }
    Ok(TokenMatching { k: 2, pairs })
}

/// The guaranteed size of [`theorem1_matching`] for a graph of order `n`
/// with a perfect (n even) or almost perfect (n odd) matching:
/// `C(n,k)/2` for n even and k odd, `(C(n,k) - C(n/2, k/2))/2` for n and k
/// even, `(C(n,k) - C((n-1)/2, floor(k/2)))/2` for n odd.
pub fn theorem1_size(n: usize, k: usize) -> u64 {
    let (n64, k64) = (n as u64, k as u64);
    let all = binomial(n64, k64);
    if n.is_multiple_of(2) && k % 2 == 1 {
        all / 2
    } else if n.is_multiple_of(2) {
        (all - binomial(n64 / 2, k64 / 2)) / 2
    } else {
        (all - binomial((n64 - 1) / 2, k64 / 2)) / 2
    }
}

/// A matching of `F_k(G)` reaching [`theorem1_size`], built from a perfect
/// or almost perfect matching `m` of `G` by peeling off one edge of `m` at a
/// time and recombining with [`lemma_times_combine`]. The cases `k = 1`,
/// `k = 2` and their complements `n-1`, `n-2` are built directly.
pub fn theorem1_matching(g: &Graph, m: &Matching, k: usize) -> Result<TokenMatching> {
    let n = g.order();
    if n > crate::subset::MAX_BASE_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: crate::subset::MAX_BASE_ORDER,
        });
    }
    if k == 0 || k >= n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    m.validate(g)?;
    if 2 * m.len() + 1 < n {
        return Err(Error::InvalidMatching(format!(
            "a matching of size {} is neither perfect nor almost perfect on {n} vertices",
            m.len()
        )));
    }
    let out = peel(g, g.vertex_mask(), m.edges(), k)?;
    if out.len() as u64 != theorem1_size(n, k) {
        return Err(Error::Internal(format!(
            "construction produced {} edges, expected {}",
            out.len(),
            theorem1_size(n, k)
        )));
    }
    Ok(out)
}

fn peel(g: &Graph, ground: Subset, medges: &[(usize, usize)], k: usize) -> Result<TokenMatching> {
    let n = ground.len();
    let complement = |t: TokenMatching| TokenMatching {
        k: n - t.k,
        pairs: t
            .pairs
            .into_iter()
            .map(|(a, b)| (ground.difference(a), ground.difference(b)))
            .collect(),
    };
    if k == 1 {
        let pairs = medges
            .iter()
            .map(|&(a, b)| (Subset::singleton(a), Subset::singleton(b)))
            .collect();
        return Ok(TokenMatching { k: 1, pairs });
    }
    if k == n - 1 {
        return Ok(complement(peel(g, ground, medges, 1)?));
    }
    if k == 2 {
        let mut labels = MatchingGraphLabels {
            a: medges.iter().map(|e| e.0).collect(),
            b: medges.iter().map(|e| e.1).collect(),
        };
        let matched: Subset = medges.iter().flat_map(|&(x, y)| [x, y]).collect();
        labels.b.extend(ground.difference(matched).iter());
        return Ok(TokenMatching {
            k: 2,
            pairs: f2_pairs(&labels),
        });
    }
    if k == n - 2 {
        return Ok(complement(peel(g, ground, medges, 2)?));
    }
    let (v, w) = medges[0];
    let rest = ground.without(v).without(w);
    let n_part = peel(g, rest, &medges[1..], k)?;
    let l_part = peel(g, rest, &medges[1..], k - 2)?;
    combine_within(g, ground, (v, w), &n_part.pairs, &l_part.pairs, k)
}

/// The isolated vertices of `F_k(matching_graph(m, s))`: unions of `k/2`
/// matching edges for even k, and for `s = 1` and odd k such unions of
/// `floor(k/2)` edges plus the isolated base vertex. There are
/// `C(m, floor(k/2))` of them when they exist.
pub fn isolated_tokens(m: usize, s: usize, k: usize) -> Result<Vec<Subset>> {
    let g = family("matching_graph", &[m, s])?;
    let n = g.order();
    if k == 0 || k >= n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    if k % 2 == 1 && s == 0 {
        return Ok(Vec::new());
    }
    let extra = if k % 2 == 1 {
        Subset::singleton(2 * m)
    } else {
        Subset::EMPTY
    };
    let out: Vec<Subset> = subsets_of_size(Subset::full(m), k / 2)
        .map(|chosen| {
            chosen
                .iter()
                .fold(extra, |acc, i| acc.with(2 * i).with(2 * i + 1))
        })
        .collect();
    for &a in &out {
        let closed = a
            .iter()
            .all(|v| g.neighbors(v).iter().all(|&u| a.contains(u)));
        if a.len() != k || !closed {
            return Err(Error::Internal(format!(
                "{a} is not an isolated token vertex"
            )));
        }
    }
    Ok(out)
}

/// `L_i = {{j, p - (i - j)} : 1 <= j <= i}` in 1-based cycle labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerSet {
    pub p: usize,
    pub index: usize,
    /// Members as 0-based vertex sets of `C_p`.
    pub members: Vec<Subset>,
}

pub fn cycle_layer(p: usize, i: usize) -> Result<LayerSet> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::BadParameter(format!(
            "layer sets need an odd cycle, got p = {p}"
        )));
    }
    if i == 0 || i >= p {
        return Err(Error::BadParameter(format!(
            "layer index {i} outside 1..{}",
            p - 1
        )));
    }
    let members = (1..=i)
        .map(|j| Subset::EMPTY.with(j - 1).with(p - i + j - 1))
        .collect();
    Ok(LayerSet {
        p,
        index: i,
        members,
    })
}

fn cycle_edge(p: usize, x: usize, y: usize) -> bool {
    let (lo, hi) = (x.min(y), x.max(y));
    hi - lo == 1 || (lo == 0 && hi == p - 1)
}

/// An edge of `F_2(C_p)` between `L_i` and `L_j`, found by exhaustive search.
pub fn find_link(p: usize, i: usize, j: usize) -> Result<Option<(Subset, Subset)>> {
    let (li, lj) = (cycle_layer(p, i)?, cycle_layer(p, j)?);
    for &a in &li.members {
        for &b in &lj.members {
            if let Some((x, y)) = a.symmetric_difference(b).as_pair() {
                if a.len() == 2 && b.len() == 2 && cycle_edge(p, x, y) {
                    return Ok(Some((a, b)));
                }
            }
        }
    }
    Ok(None)
}

/// Whether some member of `L_i` is adjacent in `F_2(C_p)` to some member of
/// `L_j` (for `i = j`: whether `L_i` fails to be independent).
pub fn layers_linked(p: usize, i: usize, j: usize) -> Result<bool> {
    Ok(find_link(p, i, j)?.is_some())
}

/// The closed-form linkage rule: consecutive layers, or indices summing to `p + 1`.
pub fn layers_linked_rule(p: usize, i: usize, j: usize) -> bool {
    i.abs_diff(j) == 1 || i + j == p + 1
}

/// Layer indices whose union is the large independent set of `F_2(C_p)`:
/// odd indices up to `t` then every other index from `t + 3` (t odd), or odd
/// indices below `t` then every other index from `t + 2` (t even), `t = floor(p/2)`.
pub fn cycle_independent_layers(p: usize) -> Result<Vec<usize>> {
    if p < 5 || p.is_multiple_of(2) {
        return Err(Error::BadParameter(format!(
            "needs an odd cycle of length at least 5, got {p}"
        )));
    }
    let t = p / 2;
    let (low_end, high_start) = if t % 2 == 1 {
        (t, t + 3)
    } else {
        (t - 1, t + 2)
    };
    Ok((1..=low_end)
        .step_by(2)
        .chain((high_start..p).step_by(2))
        .collect())
}

/// An independent set of size `floor(p floor(p/2) / 2)` in `F_2(C_p)`, as
/// ranks of `token_graph(cycle(p), 2)`.
pub fn cycle_independent_set(p: usize) -> Result<IndependentSet> {
    let layers = cycle_independent_layers(p)?;
    let t = token_graph(&family("cycle", &[p])?, 2)?;
    let mut ranks = Vec::new();
    for i in layers {
        for a in cycle_layer(p, i)?.members {
            ranks.push(t.rank_of(a)?);
        }
    }
    let set = IndependentSet::new(t.graph(), ranks)?;
    let expected = p * (p / 2) / 2;
    if set.len() != expected {
        return Err(Error::Internal(format!(
            "layer union has {} members, expected {expected}",
            set.len()
        )));
    }
    Ok(set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PhiDirection {
    /// 2-subsets of `[s]` into `[m]`.
    PairsToIndices,
    /// `[m]` into 2-subsets of `[s]`.
    IndicesToPairs,
}

/// The fixed injection between 2-subsets of `[s]` (colex order) and `[m]`,
/// 1-based on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectionPhi {
    pub direction: PhiDirection,
    /// `(index, (i, j))` with `i < j`; index is the position in colex order.
    pub table: Vec<(usize, (usize, usize))>,
}

/// Bipartite witness graph on `B = {b_1..b_m}` (ids `0..m`) and
/// `R = {r_1..r_{m+s}}` (ids `m..2m+s`).
#[derive(Clone, Debug)]
pub struct WitnessGraph {
    pub graph: Graph,
    pub parts: Bipartition,
    pub phi: InjectionPhi,
    /// The class that is a maximum independent set of `F_2`.
    pub claimed_class: Side,
    pub claimed_beta: u64,
}

fn colex_pairs(s: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=s).flat_map(|j| (1..j).map(move |i| (i, j)))
}

/// `C(s, 2) < m`, i.e. `s < (1 + sqrt(1 + 8m)) / 2`.
fn below_threshold(m: usize, s: usize) -> bool {
    binomial(s as u64, 2) < m as u64
}

fn witness_parts(m: usize, s: usize) -> Result<Bipartition> {
    let r: Vec<usize> = (m..2 * m + s).collect();
    Bipartition::with_r_part(2 * m + s, &r)
}

/// `b_i ~ r_i` for `i <= m`, and for `s >= 2` also `b_phi({i,j}) ~ r_{m+i}`,
/// `b_phi({i,j}) ~ r_{m+j}` with `phi` numbering the 2-subsets of `[s]` in
/// colex order. Requires `C(s, 2) < m`; then `beta(F_2) = |R-class| = m(m+s)`.
pub fn witness_graph_small_s(m: usize, s: usize) -> Result<WitnessGraph> {
    if m == 0 {
        return Err(Error::BadParameter("m must be positive".into()));
    }
    if !below_threshold(m, s) {
        return Err(Error::BadParameter(format!(
            "s = {s} is not below the threshold for m = {m}"
        )));
    }
    let b = |i: usize| i - 1;
    let r = |j: usize| m + j - 1;
    let mut edges: Vec<(usize, usize)> = (1..=m).map(|i| (b(i), r(i))).collect();
    let mut table = Vec::new();
    if s >= 2 {
        for (idx, (i, j)) in colex_pairs(s).enumerate().map(|(x, p)| (x + 1, p)) {
            edges.push((b(idx), r(m + i)));
            edges.push((b(idx), r(m + j)));
            table.push((idx, (i, j)));
        }
    }
    let graph = Graph::new(2 * m + s, &edges)?;
    let parts = witness_parts(m, s)?;
    parts.validate(&graph)?;
    Ok(WitnessGraph {
        graph,
        parts,
        phi: InjectionPhi {
            direction: PhiDirection::PairsToIndices,
            table,
        },
        claimed_class: Side::R,
        claimed_beta: (m * (m + s)) as u64,
    })
}

/// `b_i ~ r_i`, `b_i ~ r_{m+i1}`, `b_i ~ r_{m+i2}` with `phi(i) = (i1, i2)`
/// the i-th 2-subset of `[s]` in colex order. Requires `C(s, 2) >= m`; then
/// `beta(F_2) = |B-class| = C(2m+s, 2) - m(m+s)`.
pub fn witness_graph_large_s(m: usize, s: usize) -> Result<WitnessGraph> {
    if m == 0 {
        return Err(Error::BadParameter("m must be positive".into()));
    }
    if below_threshold(m, s) {
        return Err(Error::BadParameter(format!(
            "s = {s} is below the threshold for m = {m}"
        )));
    }
    let b = |i: usize| i - 1;
    let r = |j: usize| m + j - 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut table = Vec::new();
    for (i, (i1, i2)) in (1..=m).zip(colex_pairs(s)) {
        edges.push((b(i), r(i)));
        edges.push((b(i), r(m + i1)));
        edges.push((b(i), r(m + i2)));
        table.push((i, (i1, i2)));
    }
    let graph = Graph::new(2 * m + s, &edges)?;
    let parts = witness_parts(m, s)?;
    parts.validate(&graph)?;
    let total = binomial((2 * m + s) as u64, 2);
    Ok(WitnessGraph {
        graph,
        parts,
        phi: InjectionPhi {
            direction: PhiDirection::IndicesToPairs,
            table,
        },
        claimed_class: Side::B,
        claimed_beta: total - (m * (m + s)) as u64,
    })
}
