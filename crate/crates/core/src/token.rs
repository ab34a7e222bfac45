//! Token graphs `F_k(G)` and the k-subset codec behind their vertex ids.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bipartition_of, Bipartition, Graph, Side};
use crate::subset::{binomial_table, subsets_of_size, Subset, MAX_BASE_ORDER};

/// Upper limit on `C(n, k)`; each token vertex carries an `O(C(n, k))` bit row.
pub const MAX_TOKEN_VERTICES: u64 = 1 << 14;

/// Colexicographic combinadic ranking of the k-subsets of `{0, .., n-1}`.
///
/// `rank({c_0 < c_1 < .. < c_{k-1}}) = sum_i C(c_i, i + 1)`, so rank order is
/// colex order and ranks are dense in `0..C(n, k)`.
#[derive(Clone, Debug)]
pub struct SubsetCodec {
    n: usize,
    k: usize,
    table: Vec<Vec<u64>>,
}

impl SubsetCodec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n > MAX_BASE_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                limit: MAX_BASE_ORDER,
            });
        }
        if k > n {
            return Err(Error::TokenCountOutOfRange { k, n });
        }
        Ok(SubsetCodec {
            n,
            k,
            table: binomial_table(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of k-subsets, `C(n, k)`.
    pub fn count(&self) -> u64 {
        self.table[self.n][self.k]
    }

    pub fn rank(&self, subset: Subset) -> Result<u64> {
        if subset.len() != self.k {
            return Err(Error::SubsetSize {
                expected: self.k,
                got: subset.len(),
            });
        }
        if !subset.is_subset_of(Subset::full(self.n)) {
            let v = subset
                .difference(Subset::full(self.n))
                .iter()
                .next()
                .unwrap_or(self.n);
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(self.rank_unchecked(subset))
    }

    #[inline]
    pub(crate) fn rank_unchecked(&self, subset: Subset) -> u64 {
        subset
            .iter()
            .enumerate()
            .map(|(i, c)| self.table[c][i + 1])
            .sum()
    }

    pub fn unrank(&self, rank: u64) -> Result<Subset> {
        if rank >= self.count() {
            return Err(Error::RankOutOfRange {
                rank,
                count: self.count(),
            });
        }
        let mut rest = rank;
        let mut out = Subset::EMPTY;
        let mut c = self.n;
        for i in (1..=self.k).rev() {
            // largest c with C(c, i) <= rest
            c -= 1;
            while self.table[c][i] > rest {
                c -= 1;
            }
            rest -= self.table[c][i];
            out = out.with(c);
        }
        Ok(out)
    }
}

/// `F_k(G)` together with the codec that names its vertices.
#[derive(Clone, Debug)]
pub struct TokenGraph {
    base: Graph,
    k: usize,
    graph: Graph,
    codec: SubsetCodec,
    subsets: Vec<Subset>,
    classes: Option<Bipartition>,
}

impl TokenGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The derived graph on `C(n, k)` vertices.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn codec(&self) -> &SubsetCodec {
        &self.codec
    }

    /// Token vertex `rank` as a subset of base vertices.
    #[inline]
    pub fn subset(&self, rank: usize) -> Subset {
        self.subsets[rank]
    }

    pub fn subsets(&self) -> &[Subset] {
        &self.subsets
    }

    pub fn rank_of(&self, subset: Subset) -> Result<usize> {
        Ok(self.codec.rank(subset)? as usize)
    }

    /// R/B classes induced by the base graph's canonical bipartition, when
    /// the base graph is bipartite.
    pub fn classes(&self) -> Option<&Bipartition> {
        self.classes.as_ref()
    }

    /// Adjacency by definition: both are k-subsets and their symmetric
    /// difference is a base edge. Independent of the stored edge list.
    pub fn adjacent_by_definition(&self, a: Subset, b: Subset) -> bool {
        a.len() == self.k
            && b.len() == self.k
            && a.symmetric_difference(b)
                .as_pair()
                .is_some_and(|(u, v)| self.base.has_edge(u, v))
    }

    /// JSON export: `{n, k, vertices: [1-based subsets in rank order], edges: [rank pairs]}`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Export<'a> {
            n: usize,
            k: usize,
            vertices: &'a [Subset],
            edges: &'a [(usize, usize)],
        }
        serde_json::to_value(Export {
            n: self.base.order(),
            k: self.k,
            vertices: &self.subsets,
            edges: self.graph.edges(),
        })
        .expect("token graph export is plain data")
    }

    /// Graphviz rendering with subset labels such as `{1,3,4}`.
    pub fn to_dot(&self, name: &str) -> String {
        self.graph
            .to_dot_with_labels(name, |v| self.subsets[v].to_string())
    }
}

/// Builds `F_k(G)` for `1 <= k <= n - 1`.
///
/// Edges are emitted per base edge `[u, v]` and (k-1)-subset `A` avoiding
/// both endpoints, as `[A + u, A + v]`; there is no pairwise comparison of
/// token vertices.
pub fn token_graph(base: &Graph, k: usize) -> Result<TokenGraph> {
    let n = base.order();
    if n > MAX_BASE_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: MAX_BASE_ORDER,
        });
    }
    if k == 0 || k >= n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    let codec = SubsetCodec::new(n, k)?;
    let count = codec.count();
    if count > MAX_TOKEN_VERTICES {
        return Err(Error::OrderTooLarge {
            order: usize::try_from(count).unwrap_or(usize::MAX),
            limit: MAX_TOKEN_VERTICES as usize,
        });
    }
    let subsets: Vec<Subset> = subsets_of_size(Subset::full(n), k).collect();
    debug_assert_eq!(subsets.len() as u64, count);

    let all = Subset::full(n);
    let mut edges = Vec::new();
    for &(u, v) in base.edges() {
        let rest = all.without(u).without(v);
        for a in subsets_of_size(rest, k - 1) {
            let x = codec.rank_unchecked(a.with(u)) as usize;
            let y = codec.rank_unchecked(a.with(v)) as usize;
            edges.push((x.min(y), x.max(y)));
        }
    }
    edges.sort_unstable();
    let graph = Graph::from_sorted_edges(subsets.len(), edges);

    let classes = bipartition_of(base).map(|p| classes_from(&subsets, p.r_mask()));
    Ok(TokenGraph {
        base: base.clone(),
        k,
        graph,
        codec,
        subsets,
        classes,
    })
}

fn classes_from(subsets: &[Subset], r_mask: Subset) -> Bipartition {
    Bipartition::from_sides(
        subsets
            .iter()
            .map(|a| {
                if a.intersection(r_mask).len() % 2 == 1 {
                    Side::R
                } else {
                    Side::B
                }
            })
            .collect(),
    )
}

/// The R/B classes of `F_k(G)` for a given bipartition of the base graph:
/// a token vertex `A` is in R iff `|R ∩ A|` is odd.
pub fn token_bipartition(t: &TokenGraph, base: &Bipartition) -> Result<Bipartition> {
    base.validate(t.base())?;
    Ok(classes_from(&t.subsets, base.r_mask()))
}

/// The map `A -> V(G) \ A` as a rank table from `F_k(G)` to `F_{n-k}(G)`.
pub fn complement_map(t: &TokenGraph) -> Vec<usize> {
    let n = t.base.order();
    let target = SubsetCodec::new(n, n - t.k).expect("n - k is in range when k is");
    t.subsets
        .iter()
        .map(|a| target.rank_unchecked(a.complement(n)) as usize)
        .collect()
}

/// Whether `map` is a bijection `V(g) -> V(h)` carrying edges onto edges.
pub fn is_isomorphism(map: &[usize], g: &Graph, h: &Graph) -> bool {
    if map.len() != g.order() || g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut seen = vec![false; h.order()];
    for &x in map {
        if x >= h.order() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;
    use crate::subset::binomial;

    fn fam(kind: &str, p: &[usize]) -> Graph {
        family(kind, p).unwrap()
    }

    #[test]
    fn codec_examples() {
        let c = SubsetCodec::new(4, 2).unwrap();
        assert_eq!(c.rank(Subset::from_slice(&[0, 1])).unwrap(), 0);
        assert_eq!(c.rank(Subset::from_slice(&[2, 3])).unwrap(), 5);
        let c = SubsetCodec::new(5, 3).unwrap();
        for r in 0..10 {
            assert_eq!(c.rank(c.unrank(r).unwrap()).unwrap(), r);
        }
    }

    #[test]
    fn codec_errors() {
        let c = SubsetCodec::new(4, 2).unwrap();
        assert!(matches!(
            c.rank(Subset::from_slice(&[0])),
            Err(Error::SubsetSize {
                expected: 2,
                got: 1
            })
        ));
        assert!(matches!(c.unrank(6), Err(Error::RankOutOfRange { .. })));
        assert!(matches!(
            c.rank(Subset::from_slice(&[0, 5])),
            Err(Error::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn token_graph_examples() {
        let t = token_graph(&fam("cycle", &[3]), 2).unwrap();
        assert_eq!((t.graph().order(), t.graph().size()), (3, 3));

        let t = token_graph(&fam("path", &[5]), 3).unwrap();
        assert_eq!((t.graph().order(), t.graph().size()), (10, 12));

        let t = token_graph(&fam("match", &[2, 0]), 2).unwrap();
        assert_eq!((t.graph().order(), t.graph().size()), (6, 4));
        let isolated: Vec<Subset> = t
            .graph()
            .isolated_vertices()
            .into_iter()
            .map(|v| t.subset(v))
            .collect();
        assert_eq!(
            isolated,
            vec![Subset::from_slice(&[0, 1]), Subset::from_slice(&[2, 3])]
        );
    }

    #[test]
    fn p5_k3_matches_pairwise_brute_force() {
        let t = token_graph(&fam("path", &[5]), 3).unwrap();
        let mut brute = 0;
        for (i, &a) in t.subsets().iter().enumerate() {
            for &b in &t.subsets()[i + 1..] {
                if t.adjacent_by_definition(a, b) {
                    brute += 1;
                }
            }
        }
        assert_eq!(brute, 12);
        assert_eq!(4 * binomial(3, 2), 12);
    }

    #[test]
    fn token_graph_range_errors() {
        let p4 = fam("path", &[4]);
        assert!(matches!(
            token_graph(&p4, 0),
            Err(Error::TokenCountOutOfRange { .. })
        ));
        assert!(matches!(
            token_graph(&p4, 4),
            Err(Error::TokenCountOutOfRange { .. })
        ));
        assert!(matches!(
            token_graph(&Graph::empty(65), 1),
            Err(Error::OrderTooLarge { .. })
        ));
        assert!(matches!(
            token_graph(&fam("path", &[30]), 15),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn complement_map_examples() {
        let k3 = fam("complete", &[3]);
        let t1 = token_graph(&k3, 1).unwrap();
        let t2 = token_graph(&k3, 2).unwrap();
        let map = complement_map(&t1);
        assert_eq!(t2.subset(map[0]), Subset::from_slice(&[1, 2]));
        assert!(is_isomorphism(&map, t1.graph(), t2.graph()));

        let p5 = fam("path", &[5]);
        let t2 = token_graph(&p5, 2).unwrap();
        let t3 = token_graph(&p5, 3).unwrap();
        assert!(is_isomorphism(&complement_map(&t2), t2.graph(), t3.graph()));

        let c6 = fam("cycle", &[6]);
        let t = token_graph(&c6, 3).unwrap();
        assert!(is_isomorphism(&complement_map(&t), t.graph(), t.graph()));
    }

    #[test]
    fn is_isomorphism_rejects_non_bijections() {
        let g = fam("path", &[3]);
        assert!(!is_isomorphism(&[0, 0, 1], &g, &g));
        assert!(!is_isomorphism(&[1, 0, 2], &g, &g));
        assert!(is_isomorphism(&[2, 1, 0], &g, &g));
    }

    #[test]
    fn token_bipartition_examples() {
        let count = |kind: &str, p: &[usize], k: usize| {
            let g = fam(kind, p);
            let t = token_graph(&g, k).unwrap();
            let labels = token_bipartition(&t, &bipartition_of(&g).unwrap()).unwrap();
            labels.validate(t.graph()).unwrap();
            (labels.part_len(Side::R), labels.part_len(Side::B))
        };
        assert_eq!(count("kbip", &[2, 5], 2), (10, 11));
        assert_eq!(count("kbip", &[3, 3], 2), (9, 6));
        assert_eq!(count("star", &[4], 2), (4, 6));
    }

    #[test]
    fn token_bipartition_rejects_invalid_base() {
        let g = fam("path", &[4]);
        let t = token_graph(&g, 2).unwrap();
        let bad = Bipartition::with_r_part(4, &[0, 1]).unwrap();
        assert!(matches!(
            token_bipartition(&t, &bad),
            Err(Error::InvalidBipartition(_))
        ));
    }

    #[test]
    fn exports() {
        let t = token_graph(&fam("path", &[3]), 2).unwrap();
        let json = t.to_json();
        assert_eq!(json["n"], 3);
        assert_eq!(json["vertices"][0], serde_json::json!([1, 2]));
        assert!(t.to_dot("f2p3").contains("label=\"{1,3}\""));
    }
}
