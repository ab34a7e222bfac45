//! Maximum matchings on general graphs (Edmonds' blossom algorithm), Hall's
//! condition via saturation, and the asymptotic matching-fraction bound.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, Side};

/// A set of pairwise vertex-disjoint edges of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    /// Validates `edges` against `g` and normalizes them (`u < v`, sorted).
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> Result<Self> {
        let mut edges: Vec<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        let m = Matching { edges };
        m.validate(g)?;
        Ok(m)
    }

    fn from_mates(mate: &[Option<usize>]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(u, &m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `mate[v]` for a host graph of the given order.
    pub fn mates(&self, order: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; order];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// Every edge is present in `g` and no vertex is covered twice.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut covered = vec![false; g.order()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidMatching(format!("({u}, {v}) is not an edge")));
            }
            for w in [u, v] {
                if std::mem::replace(&mut covered[w], true) {
                    return Err(Error::InvalidMatching(format!("vertex {w} covered twice")));
                }
            }
        }
        Ok(())
    }

    pub fn is_perfect(&self, g: &Graph) -> Result<bool> {
        self.validate(g)?;
        Ok(2 * self.len() == g.order())
    }

    pub fn is_almost_perfect(&self, g: &Graph) -> Result<bool> {
        self.validate(g)?;
        Ok(2 * self.len() + 1 == g.order())
    }
}

/// A maximum matching of `g`.
///
/// Greedy initialization followed by one augmenting-path search per exposed
/// vertex, both in increasing vertex order, so the result is a deterministic
/// function of the input.
pub fn max_matching(g: &Graph) -> Matching {
    Matching::from_mates(&Blossom::new(g).solve())
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn solve(mut self) -> Vec<Option<usize>> {
        let n = self.g.order();
        for u in 0..n {
            if self.mate[u].is_none() {
                if let Some(&v) = self
                    .g
                    .neighbors(u)
                    .iter()
                    .find(|&&v| self.mate[v].is_none())
                {
                    self.mate[u] = Some(v);
                    self.mate[v] = Some(u);
                }
            }
        }
        for root in 0..n {
            if self.mate[root].is_some() {
                continue;
            }
            if let Some(end) = self.find_augmenting_path(root) {
                self.augment(end);
            }
        }
        self.mate
    }

    fn augment(&mut self, mut v: usize) {
        while let Some(pv) = self.parent[v] {
            let next = self.mate[pv];
            self.mate[v] = Some(pv);
            self.mate[pv] = Some(v);
            match next {
                Some(w) => v = w,
                None => break,
            }
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("outer vertex on a tree path"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            let m = self.mate[b].expect("path below the root is matched");
            b = self.parent[m].expect("outer vertex on a tree path");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom path vertices are matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("outer vertex on a tree path");
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.g.degree(v) {
                let to = self.g.neighbors(v)[idx];
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer =
                    to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_outer {
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }
}

/// Whether a maximum matching of the bipartite graph `g` covers every vertex
/// of `side`; by Hall's theorem, whether `|N(S)| >= |S|` for all `S` on that side.
pub fn saturates(g: &Graph, parts: &Bipartition, side: Side) -> Result<bool> {
    parts.validate(g)?;
    let m = max_matching(g);
    // every matching edge crosses, so it covers exactly one vertex of `side`
    Ok(m.len() == parts.part_len(side))
}

/// A set violating Hall's condition, with its neighborhood.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HallViolation {
    pub set: Vec<usize>,
    pub neighborhood: Vec<usize>,
}

impl HallViolation {
    pub fn deficiency(&self) -> usize {
        self.set.len() - self.neighborhood.len()
    }
}

/// `None` iff `side` saturates. Otherwise the side vertices reachable by
/// alternating paths from the vertices a maximum matching leaves exposed;
/// their neighborhood is exactly the matched partners reached on the way.
pub fn hall_witness(g: &Graph, parts: &Bipartition, side: Side) -> Result<Option<HallViolation>> {
    parts.validate(g)?;
    let n = g.order();
    let mate = max_matching(g).mates(n);
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n)
        .filter(|&v| parts.side(v) == side && mate[v].is_none())
        .collect();
    if queue.is_empty() {
        return Ok(None);
    }
    for &v in &queue {
        seen[v] = true;
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if seen[y] {
                continue;
            }
            seen[y] = true;
            let partner = mate[y].ok_or_else(|| {
                Error::Internal("augmenting path left by maximum matching".into())
            })?;
            if !seen[partner] {
                seen[partner] = true;
                queue.push_back(partner);
            }
        }
    }
    let (set, neighborhood): (Vec<usize>, Vec<usize>) = (0..n)
        .filter(|&v| seen[v])
        .partition(|&v| parts.side(v) == side);
    Ok(Some(HallViolation { set, neighborhood }))
}

/// Lower bound on `nu(F_k(G)) / C(n, k)` for graphs with `nu(G) = floor(n/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionBound {
    pub value: BigRational,
    /// The exponent is zero and the bound degenerates to 0.
    pub vacuous: bool,
    /// n even and k odd: the fraction is exactly 1/2.
    pub exact: bool,
}

/// `(1 - (k/n)^e) / 2` with `e = k/2` for n even and `e = floor(k/2)` for
/// n odd; for n even and k odd the perfect-matching case gives exactly 1/2.
pub fn matching_fraction_bound(n: usize, k: usize) -> Result<FractionBound> {
    if k == 0 || k >= n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if n.is_multiple_of(2) && k % 2 == 1 {
        return Ok(FractionBound {
            value: half,
            vacuous: false,
            exact: true,
        });
    }
    let exponent = k / 2;
    if exponent == 0 {
        return Ok(FractionBound {
            value: BigRational::zero(),
            vacuous: true,
            exact: false,
        });
    }
    let ratio = BigRational::new(BigInt::from(k), BigInt::from(n));
    let power = num_traits::pow(ratio, exponent);
    Ok(FractionBound {
        value: (BigRational::one() - power) * half,
        vacuous: false,
        exact: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition_of, family};
    use crate::token::token_graph;

    fn fam(kind: &str, p: &[usize]) -> Graph {
        family(kind, p).unwrap()
    }

    #[test]
    fn max_matching_examples() {
        let t = token_graph(&fam("match", &[2, 0]), 2).unwrap();
        assert_eq!(max_matching(t.graph()).len(), 2);
        let t = token_graph(&fam("star", &[5]), 3).unwrap();
        let m = max_matching(t.graph());
        assert_eq!(m.len(), 10);
        assert!(m.is_perfect(t.graph()).unwrap());
        let t = token_graph(&fam("path", &[5]), 3).unwrap();
        assert_eq!(max_matching(t.graph()).len(), 4);
    }

    #[test]
    fn blossom_needed() {
        // Two triangles joined by a path: greedy order alone gets stuck.
        let g = Graph::new(
            8,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (5, 7),
            ],
        )
        .unwrap();
        assert_eq!(max_matching(&g).len(), 4);
        // Petersen graph has a perfect matching.
        let petersen = Graph::new(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(max_matching(&petersen).len(), 5);
    }

    #[test]
    fn perfect_predicates() {
        let c6 = fam("cycle", &[6]);
        let m = max_matching(&c6);
        assert!(m.is_perfect(&c6).unwrap());
        let c5 = fam("cycle", &[5]);
        let m = max_matching(&c5);
        assert!(m.is_almost_perfect(&c5).unwrap());
        assert!(!m.is_perfect(&c5).unwrap());
        let k13 = fam("star", &[3]);
        let m = max_matching(&k13);
        assert_eq!(m.len(), 1);
        assert!(!m.is_perfect(&k13).unwrap() && !m.is_almost_perfect(&k13).unwrap());
    }

    #[test]
    fn invalid_matchings() {
        let p4 = fam("path", &[4]);
        assert!(Matching::from_edges(&p4, &[(0, 2)]).is_err());
        assert!(Matching::from_edges(&p4, &[(0, 1), (1, 2)]).is_err());
        let m = Matching::from_edges(&p4, &[(1, 0), (3, 2)]).unwrap();
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);
        let bogus = Matching::from_edges(&fam("complete", &[4]), &[(0, 2)]).unwrap();
        assert!(bogus.is_perfect(&p4).is_err());
    }

    #[test]
    fn saturation_examples() {
        let k13 = fam("star", &[3]);
        let p = bipartition_of(&k13).unwrap();
        // center is B, leaves R
        assert!(!saturates(&k13, &p, Side::R).unwrap());
        assert!(saturates(&k13, &p, Side::B).unwrap());
        let w = hall_witness(&k13, &p, Side::R).unwrap().unwrap();
        assert_eq!(w.set, vec![1, 2, 3]);
        assert_eq!(w.neighborhood, vec![0]);
        assert!(hall_witness(&k13, &p, Side::B).unwrap().is_none());

        let star = fam("star", &[4]);
        let t = token_graph(&star, 2).unwrap();
        let classes = t.classes().unwrap();
        assert_eq!(classes.part_len(Side::R), 4);
        assert!(saturates(t.graph(), classes, Side::R).unwrap());

        let mg = fam("match", &[3, 0]);
        let p = bipartition_of(&mg).unwrap();
        assert!(saturates(&mg, &p, Side::R).unwrap());
        assert!(saturates(&mg, &p, Side::B).unwrap());
    }

    #[test]
    fn saturation_rejects_invalid_bipartition() {
        let c4 = fam("cycle", &[4]);
        let bad = Bipartition::with_r_part(4, &[0, 1]).unwrap();
        assert!(matches!(
            saturates(&c4, &bad, Side::R),
            Err(Error::InvalidBipartition(_))
        ));
        assert!(hall_witness(&c4, &bad, Side::R).is_err());
    }

    #[test]
    fn fraction_bound_examples() {
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(matching_fraction_bound(10, 4).unwrap().value, r(21, 50));
        let b = matching_fraction_bound(8, 1).unwrap();
        assert_eq!(b.value, r(1, 2));
        assert!(b.exact);
        assert_eq!(matching_fraction_bound(9, 3).unwrap().value, r(1, 3));
        let b = matching_fraction_bound(9, 1).unwrap();
        assert!(b.vacuous);
        assert_eq!(b.value, r(0, 1));
        assert!(matching_fraction_bound(5, 5).is_err());
        assert!(matching_fraction_bound(5, 0).is_err());
    }
}
