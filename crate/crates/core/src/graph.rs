//! Simple undirected graphs, standard families, and bipartitions.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_BASE_ORDER};

/// A simple undirected graph on vertices `0..n`.
///
/// Immutable after construction. Adjacency is kept twice: sorted neighbor
/// lists for iteration and one bit row per vertex for O(1) edge queries.
#[derive(Clone, Debug)]
pub struct Graph {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges && self.order() == other.order()
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Self::from_sorted_edges(n, normalized))
    }

    /// `edges` must be normalized (`u < v`), sorted and free of duplicates.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            rows[u].insert(v);
            rows[v].insert(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { edges, adj, rows }
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u].contains(v)
    }

    /// Neighborhood of `v` as a bit row over `0..n`.
    #[inline]
    pub fn neighbor_row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    /// Neighborhood of `v` as a word mask. Only meaningful for order <= 64.
    pub fn neighbor_mask(&self, v: usize) -> Subset {
        debug_assert!(self.order() <= MAX_BASE_ORDER);
        self.adj[v].iter().copied().collect()
    }

    /// All vertices as a mask. Only meaningful for order <= 64.
    pub fn vertex_mask(&self) -> Subset {
        Subset::full(self.order())
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Induced subgraph on `V \ removed`, vertices relabeled densely in
    /// increasing order of their old ids.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(Graph, Relabeling)> {
        let n = self.order();
        let mut gone = vec![false; n];
        for &v in removed {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            gone[v] = true;
        }
        let mut old_to_new = vec![None; n];
        let mut new_to_old = Vec::with_capacity(n);
        for v in (0..n).filter(|&v| !gone[v]) {
            old_to_new[v] = Some(new_to_old.len());
            new_to_old.push(v);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?)))
            .collect();
        let graph = Graph::from_sorted_edges(new_to_old.len(), edges);
        Ok((
            graph,
            Relabeling {
                old_to_new,
                new_to_old,
            },
        ))
    }

    /// Closed neighborhood `N[v]` in increasing order.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        out
    }

    /// Edge-list text: first line `n m`, then one `u v` line per edge, 1-based.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.size());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }

    /// Parses the edge-list text produced by [`Graph::to_edge_list`].
    /// Blank lines and lines starting with `#` are ignored.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let [n, m] = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let [u, v] = parse_pair(line)?;
            if u == 0 || v == 0 {
                return Err(Error::Parse(format!("labels are 1-based: `{line}`")));
            }
            edges.push((u - 1, v - 1));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, &edges)
    }

    /// Graphviz rendering with 1-based vertex labels.
    pub fn to_dot(&self, name: &str) -> String {
        self.to_dot_with_labels(name, |v| (v + 1).to_string())
    }

    pub fn to_dot_with_labels<F: Fn(usize) -> String>(&self, name: &str, label: F) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for v in 0..self.order() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", label(v));
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!("expected two integers: `{line}`")));
    }
    let mut out = [0usize; 2];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: `{field}`")))?;
    }
    Ok(out)
}

/// Vertex correspondence produced by [`Graph::delete_vertices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

/// The standard families used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `P_n`, vertices in traversal order.
    Path(usize),
    /// `C_n`, vertices in traversal order.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{m,n}`: the `m` vertices of part B first, then the `n` of part R.
    CompleteBipartite(usize, usize),
    /// `K_{1,n}` with the center at vertex 0.
    Star(usize),
    /// `m` disjoint edges `(2i, 2i+1)` plus `s` isolated vertices, `s` in {0, 1}.
    MatchingGraph(usize, usize),
}

impl Family {
    /// Parses a family kind name and its parameter list.
    pub fn from_kind(kind: &str, params: &[usize]) -> Result<Self> {
        let arity = |expected: usize| {
            if params.len() == expected {
                Ok(())
            } else {
                Err(Error::BadArity {
                    family: kind.to_string(),
                    expected,
                    got: params.len(),
                })
            }
        };
        let family = match kind {
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(params[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "complete_bipartite" | "kbip" => {
                arity(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "matching_graph" | "match" => {
                arity(2)?;
                Family::MatchingGraph(params[0], params[1])
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }

    pub fn build(self) -> Result<Graph> {
        let positive = |x: usize, what: &str| {
            if x == 0 {
                Err(Error::BadParameter(format!("{what} must be positive")))
            } else {
                Ok(())
            }
        };
        let graph = match self {
            Family::Path(n) => {
                positive(n, "path order")?;
                Graph::from_sorted_edges(n, (1..n).map(|i| (i - 1, i)).collect())
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::BadParameter("cycle order must be at least 3".into()));
                }
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                edges.push((0, n - 1));
                edges.sort_unstable();
                Graph::from_sorted_edges(n, edges)
            }
            Family::Complete(n) => {
                positive(n, "complete graph order")?;
                let edges = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect();
                Graph::from_sorted_edges(n, edges)
            }
            Family::CompleteBipartite(m, n) => {
                positive(m, "part size")?;
                positive(n, "part size")?;
                let edges = (0..m)
                    .flat_map(|b| (m..m + n).map(move |r| (b, r)))
                    .collect();
                Graph::from_sorted_edges(m + n, edges)
            }
            Family::Star(n) => {
                positive(n, "star leaf count")?;
                Graph::from_sorted_edges(n + 1, (1..=n).map(|leaf| (0, leaf)).collect())
            }
            Family::MatchingGraph(m, s) => {
                positive(m, "matching size")?;
                if s > 1 {
                    return Err(Error::BadParameter(
                        "matching graph takes s in {0, 1}".into(),
                    ));
                }
                Graph::from_sorted_edges(2 * m + s, (0..m).map(|i| (2 * i, 2 * i + 1)).collect())
            }
        };
        Ok(graph)
    }
}

/// Builds a family member from a kind name and parameters.
pub fn family(kind: &str, params: &[usize]) -> Result<Graph> {
    Family::from_kind(kind, params)?.build()
}

/// Erdos-Renyi `G(n, p)`: each pair becomes an edge independently with probability `p`.
pub fn random_graph<R: rand::Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_sorted_edges(n, edges)
}

/// One side of a bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    R,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::R => Side::B,
            Side::B => Side::R,
        }
    }
}

/// A split of the vertex set into parts R and B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    pub fn from_sides(sides: Vec<Side>) -> Self {
        Bipartition { sides }
    }

    /// Bipartition of a graph of order `n` with the listed vertices in R.
    pub fn with_r_part(n: usize, r_part: &[usize]) -> Result<Self> {
        let mut sides = vec![Side::B; n];
        for &v in r_part {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            sides[v] = Side::R;
        }
        Ok(Bipartition { sides })
    }

    #[inline]
    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn order(&self) -> usize {
        self.sides.len()
    }

    pub fn part(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len())
            .filter(|&v| self.sides[v] == side)
            .collect()
    }

    pub fn part_len(&self, side: Side) -> usize {
        self.sides.iter().filter(|&&s| s == side).count()
    }

    /// Part R as a word mask. Only meaningful for order <= 64.
    pub fn r_mask(&self) -> Subset {
        self.part(Side::R).into_iter().collect()
    }

    /// Whether `|B| <= |R|`, the usual labeling convention.
    pub fn is_conventional(&self) -> bool {
        self.part_len(Side::B) <= self.part_len(Side::R)
    }

    /// The side with fewer vertices (B on ties).
    pub fn smaller_side(&self) -> Side {
        if self.part_len(Side::R) < self.part_len(Side::B) {
            Side::R
        } else {
            Side::B
        }
    }

    pub fn swapped(&self) -> Self {
        Bipartition {
            sides: self.sides.iter().map(|s| s.other()).collect(),
        }
    }

    /// Checks that the order matches and every edge crosses.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.sides.len() != g.order() {
            return Err(Error::InvalidBipartition(format!(
                "labels cover {} vertices, graph has {}",
                self.sides.len(),
                g.order()
            )));
        }
        if let Some(&(u, v)) = g
            .edges()
            .iter()
            .find(|&&(u, v)| self.sides[u] == self.sides[v])
        {
            return Err(Error::InvalidBipartition(format!(
                "edge ({u}, {v}) lies inside one part"
            )));
        }
        Ok(())
    }
}

/// A proper 2-coloring when one exists. The lowest vertex of every connected
/// component goes to B.
pub fn bipartition_of(g: &Graph) -> Option<Bipartition> {
    let n = g.order();
    let mut sides: Vec<Option<Side>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if sides[root].is_some() {
            continue;
        }
        sides[root] = Some(Side::B);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = sides[u].expect("queued vertices are colored");
            for &w in g.neighbors(u) {
                match sides[w] {
                    None => {
                        sides[w] = Some(su.other());
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Bipartition {
        sides: sides.into_iter().map(|s| s.expect("all colored")).collect(),
    })
}
