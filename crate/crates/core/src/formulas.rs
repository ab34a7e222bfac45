//! Closed-form values for matching and independence numbers of token
//! graphs, integer sequence cross-checks, and the two exhaustive scanners
//! over small complete bipartite graphs and their subgraphs.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{family, Bipartition, Graph, Side};
use crate::independence::{beta_token, max_independent_set_with_budget, BetaOracle, Budget};
use crate::matching::{hall_witness, HallViolation};
use crate::subset::binomial;
use crate::token::{token_bipartition, token_graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Number {
    Integer(u64),
    Rational(BigRational),
}

impl Number {
    pub fn as_rational(&self) -> BigRational {
        match self {
            Number::Integer(v) => BigRational::from_integer(BigInt::from(*v)),
            Number::Rational(q) => q.clone(),
        }
    }

    /// Reduces to an integer when the denominator is 1.
    pub fn normalized(q: BigRational) -> Number {
        if q.is_integer() {
            if let Ok(v) = u64::try_from(q.to_integer()) {
                return Number::Integer(v);
            }
        }
        Number::Rational(q)
    }
}

impl std::fmt::Display for Number {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Number::Integer(v) => write!(f, "{v}"),
            Number::Rational(q) => write!(f, "{q}"),
        }
    }
}

impl Serialize for Number {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Number::Integer(v) => s.serialize_u64(*v),
            Number::Rational(q) => s.serialize_str(&q.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueKind {
    Exact,
    LowerBound,
    UpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub value: Number,
    pub kind: ValueKind,
    pub tight_for: Option<String>,
}

impl FormulaValue {
    fn exact(v: u64) -> Self {
        FormulaValue {
            value: Number::Integer(v),
            kind: ValueKind::Exact,
            tight_for: None,
        }
    }

    /// Whether `actual` is consistent with this value.
    pub fn admits(&self, actual: u64) -> bool {
        let actual = BigRational::from_integer(BigInt::from(actual));
        let v = self.value.as_rational();
        match self.kind {
            ValueKind::Exact => actual == v,
            ValueKind::LowerBound => actual >= v,
            ValueKind::UpperBound => actual <= v,
        }
    }
}

fn c(n: usize, k: usize) -> u64 {
    binomial(n as u64, k as u64)
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    Ok(())
}

/// Matching number of `F_k(G)` for a graph of order `n` whose matching
/// number is `floor(n/2)`: exact for n even and k odd, otherwise a lower
/// bound that is attained by the matching graph.
pub fn nu_token_formula(n: usize, k: usize) -> Result<FormulaValue> {
    check_k(n, k)?;
    let all = c(n, k);
    Ok(if n.is_multiple_of(2) && k % 2 == 1 {
        FormulaValue::exact(all / 2)
    } else if n.is_multiple_of(2) {
        FormulaValue {
            value: Number::Integer((all - c(n / 2, k / 2)) / 2),
            kind: ValueKind::LowerBound,
            tight_for: Some(format!("matching_graph({}, 0)", n / 2)),
        }
    } else {
        FormulaValue {
            value: Number::Integer((all - c((n - 1) / 2, k / 2)) / 2),
            kind: ValueKind::LowerBound,
            tight_for: Some(format!("matching_graph({}, 1)", (n - 1) / 2)),
        }
    })
}

/// Sizes `(|R-class|, |B-class|)` of `F_k(K_{m,n})` where `R` is the part of size `n`.
pub fn class_sizes(m: usize, n: usize, k: usize) -> Result<(u64, u64)> {
    let r = r_value(m, n, k)?;
    Ok((r, c(m + n, k) - r))
}

/// `r = sum_{i >= 1} C(n, 2i-1) C(m, k-2i+1)`: the number of k-subsets
/// meeting an n-set in an odd number of elements.
pub fn r_value(m: usize, n: usize, k: usize) -> Result<u64> {
    if m == 0 || n == 0 {
        return Err(Error::BadParameter("part sizes must be positive".into()));
    }
    check_k(m + n, k)?;
    Ok((1..=k.div_ceil(2))
        .filter(|&i| 2 * i - 1 <= k)
        .map(|i| c(n, 2 * i - 1) * c(m, k + 1 - 2 * i))
        .sum())
}

/// `beta(F_2(K_{m,n})) = max(mn, C(m+n, 2) - mn)`.
pub fn beta_kmn_f2(m: usize, n: usize) -> Result<u64> {
    if m == 0 || n == 0 {
        return Err(Error::BadParameter("part sizes must be positive".into()));
    }
    let cross = (m * n) as u64;
    Ok(cross.max(c(m + n, 2) - cross))
}

/// `beta(F_2(C_p)) = floor(p floor(p/2) / 2)`.
pub fn beta_cycle_f2(p: usize) -> Result<u64> {
    if p < 3 {
        return Err(Error::BadParameter(format!(
            "cycle length must be at least 3, got {p}"
        )));
    }
    Ok((p * (p / 2) / 2) as u64)
}

/// `beta(F_k(K_{1,n}))`: `C(n, k)` for `2k <= n + 1`, else `C(n, k-1)`.
pub fn beta_star(n: usize, k: usize) -> Result<u64> {
    if k == 0 || k > n {
        return Err(Error::TokenCountOutOfRange { k, n: n + 1 });
    }
    Ok(if 2 * k <= n + 1 { c(n, k) } else { c(n, k - 1) })
}

/// `max(r, C(p,k) - r)` with `r = sum C(ceil(p/2), 2i-1) C(floor(p/2), k-2i+1)`;
/// the independence number of `F_k` of `P_p`, `K_{t,t}` (p = 2t) and `K_{t,t+1}` (p = 2t+1).
pub fn beta_balanced_family(p: usize, k: usize) -> Result<u64> {
    if p < 2 {
        return Err(Error::TokenCountOutOfRange { k, n: p });
    }
    let (r, b) = class_sizes(p / 2, p.div_ceil(2), k)?;
    Ok(r.max(b))
}

/// `C(n, k) / 2` for n even and k odd: the independence number of `F_k(G)`
/// for a bipartite graph `G` of order `n` with a perfect matching.
pub fn beta_bipartite_perfect(n: usize, k: usize) -> Result<u64> {
    check_k(n, k)?;
    if n % 2 == 1 || k.is_multiple_of(2) {
        return Err(Error::BadParameter("needs even order and odd k".into()));
    }
    Ok(c(n, k) / 2)
}

/// `(1 + sqrt(1 + 8m)) / 2`, for display; decisions use [`class_order_predicate`].
pub fn s_threshold(m: usize) -> f64 {
    (1.0 + (1.0 + 8.0 * m as f64).sqrt()) / 2.0
}

/// For `K_{m,n}`, `m <= n`, k = 2: whether the B-class is at least as large
/// as the R-class, decided by the integer test `C(n - m, 2) >= m`.
pub fn class_order_predicate(m: usize, n: usize) -> Result<bool> {
    if m == 0 || n < m {
        return Err(Error::BadParameter(format!(
            "needs 1 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    Ok(c(n - m, 2) >= m as u64)
}

/// Lower and upper bound on an independence number; the upper bound may be fractional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sandwich {
    pub lower: u64,
    pub upper: Number,
}

impl Sandwich {
    pub fn holds(&self, beta: u64) -> bool {
        let b = BigRational::from_integer(BigInt::from(beta));
        self.lower <= beta && b <= self.upper.as_rational()
    }

    pub fn lower_tight(&self, beta: u64) -> bool {
        self.lower == beta
    }

    pub fn upper_tight(&self, beta: u64) -> bool {
        self.upper == Number::Integer(beta)
    }
}

fn ratio(n: usize, k: usize, beta: u64) -> BigRational {
    BigRational::new(BigInt::from(n as u64 * beta), BigInt::from(k as u64))
}

fn min_number(a: BigRational, b: BigRational) -> Number {
    Number::normalized(if a <= b { a } else { b })
}

/// `beta(F_j(P_q))` with the conventions `0` for `j > q` and `1` for `j` in `{0, q}`.
fn beta_path(q: usize, j: usize) -> u64 {
    match (q, j) {
        _ if j > q => 0,
        _ if j == 0 || j == q => 1,
        _ => beta_balanced_family(q, j).expect("range checked"),
    }
}

/// Bounds on `beta(F_k(C_n))` from path values:
/// `beta(F_{k-1}(P_{n-1})) + beta(F_k(P_{n-3}))` below and
/// `min(n/k beta(F_{k-1}(P_{n-1})), n/(n-k) beta(F_k(P_{n-1})))` above.
pub fn cycle_sandwich(n: usize, k: usize) -> Result<Sandwich> {
    if n < 4 || k < 2 || k + 2 > n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    let lower = beta_path(n - 1, k - 1) + beta_path(n - 3, k);
    let upper = min_number(
        ratio(n, k, beta_path(n - 1, k - 1)),
        ratio(n, n - k, beta_path(n - 1, k)),
    );
    Ok(Sandwich { lower, upper })
}

/// Bounds on `beta(J(n, k))` from `beta(J(n-1, k-1))` and `beta(J(n-1, k))`
/// supplied by `oracle`.
pub fn johnson_sandwich(n: usize, k: usize, oracle: &mut dyn BetaOracle) -> Result<Sandwich> {
    if n < 4 || k < 2 || k + 2 > n {
        return Err(Error::TokenCountOutOfRange { k, n });
    }
    let smaller = family("complete", &[n - 1])?;
    let down = beta_token(&smaller, k - 1, oracle)? as u64;
    let same = beta_token(&smaller, k, oracle)? as u64;
    Ok(Sandwich {
        lower: down,
        upper: min_number(ratio(n, k, down), ratio(n, n - k, same)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sequence {
    A091044,
    A000217,
    A002620,
    A189889,
}

impl std::str::FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A091044" => Ok(Sequence::A091044),
            "A000217" => Ok(Sequence::A000217),
            "A002620" => Ok(Sequence::A002620),
            "A189889" => Ok(Sequence::A189889),
            _ => Err(Error::UnknownSequence(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OeisTerm {
    /// Index in the sequence's own numbering, e.g. `"n=3,m=1"` or `"p=7"`.
    pub index: String,
    pub value: u64,
    /// Token graph whose independence number this term should equal.
    pub instance: Option<String>,
    pub solver: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OeisReport {
    pub sequence: Sequence,
    pub terms: Vec<OeisTerm>,
    pub matched: bool,
}

/// Token graphs above this size are not cross-checked by the solver.
pub const OEIS_SOLVER_LIMIT: u64 = 256;
pub const OEIS_MAX_COUNT: usize = 20;

fn solver_beta(kind: &str, params: &[usize], k: usize, budget: &Budget) -> Result<Option<u64>> {
    let g = family(kind, params)?;
    if k == 0 || k >= g.order() || c(g.order(), k) > OEIS_SOLVER_LIMIT {
        return Ok(None);
    }
    let t = token_graph(&g, k)?;
    match max_independent_set_with_budget(t.graph(), budget) {
        Ok(set) => Ok(Some(set.len() as u64)),
        Err(Error::BudgetExceeded) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The first `count` terms of a sequence generated from closed forms, each
/// cross-checked against the exact solver on the token graph it counts when
/// that graph is small.
///
/// `A000217(i)` matches `beta(F_2(K_{1,i+1}))` only from `i = 2`: for the
/// path `K_{1,2}` the star formula gives 2, not 1.
pub fn oeis_check(seq: Sequence, count: usize, budget: &Budget) -> Result<OeisReport> {
    if count > OEIS_MAX_COUNT {
        return Err(Error::BadParameter(format!(
            "count must be at most {OEIS_MAX_COUNT}"
        )));
    }
    let mut terms = Vec::with_capacity(count);
    match seq {
        Sequence::A091044 => {
            let cells = (1..).flat_map(|n: usize| (0..n).map(move |m| (n, m)));
            for (n, m) in cells.take(count) {
                let k = 2 * m + 1;
                let value = beta_balanced_family(2 * n, k)?;
                debug_assert_eq!(value, c(2 * n, k) / 2);
                terms.push(OeisTerm {
                    index: format!("n={n},m={m}"),
                    value,
                    instance: Some(format!("F_{k}(P_{})", 2 * n)),
                    solver: solver_beta("path", &[2 * n], k, budget)?,
                });
            }
        }
        Sequence::A000217 => {
            for i in 0..count {
                let value = (i * (i + 1) / 2) as u64;
                let (instance, solver) = if i >= 2 {
                    debug_assert_eq!(beta_star(i + 1, 2)?, value);
                    (
                        Some(format!("F_2(K_1,{})", i + 1)),
                        solver_beta("star", &[i + 1], 2, budget)?,
                    )
                } else {
                    (None, None)
                };
                terms.push(OeisTerm {
                    index: format!("n={i}"),
                    value,
                    instance,
                    solver,
                });
            }
        }
        Sequence::A002620 => {
            for t in 0..count {
                let value = (t * t / 4) as u64;
                let (instance, solver) = if t >= 3 {
                    if beta_balanced_family(t, 2)? != value {
                        return Err(Error::Internal(format!(
                            "path formula disagrees at t = {t}"
                        )));
                    }
                    (
                        Some(format!("F_2(P_{t})")),
                        solver_beta("path", &[t], 2, budget)?,
                    )
                } else {
                    (None, None)
                };
                terms.push(OeisTerm {
                    index: format!("n={t}"),
                    value,
                    instance,
                    solver,
                });
            }
        }
        Sequence::A189889 => {
            for p in (3..).take(count) {
                terms.push(OeisTerm {
                    index: format!("p={p}"),
                    value: beta_cycle_f2(p)?,
                    instance: Some(format!("F_2(C_{p})")),
                    solver: solver_beta("cycle", &[p], 2, budget)?,
                });
            }
        }
    }
    let matched = terms.iter().all(|t| t.solver.is_none_or(|s| s == t.value));
    Ok(OeisReport {
        sequence: seq,
        terms,
        matched,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanHit {
    /// Bit `i` set when the i-th edge of `K_{2,5}` (row-major, B first) is present.
    pub edge_mask: u16,
    #[serde(serialize_with = "serialize_edges")]
    pub graph: Graph,
    pub beta: u64,
    /// `max(|R-class|, |B-class|) = 11`.
    pub bound: u64,
    pub violation: HallViolation,
}

fn serialize_edges<S: Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    let one_based: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect();
    one_based.serialize(s)
}

/// Every subgraph of `K_{2,5}` (B = {0, 1}, R = {2..6}) whose 2-token graph
/// has independence number above 11, each with a Hall violation on the
/// smaller token class. With `skip_isolated`, subgraphs with an isolated
/// vertex are not examined.
pub fn counterexample_scan_2x5(skip_isolated: bool, budget: &Budget) -> Result<Vec<ScanHit>> {
    let full = family("complete_bipartite", &[2, 5])?;
    let parts = Bipartition::with_r_part(7, &[2, 3, 4, 5, 6])?;
    let (r, b) = class_sizes(2, 5, 2)?;
    let bound = r.max(b);
    let mut hits = Vec::new();
    for mask in 0u16..1 << full.size() {
        let edges: Vec<(usize, usize)> = full
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(7, &edges)?;
        if skip_isolated && !g.isolated_vertices().is_empty() {
            continue;
        }
        let t = token_graph(&g, 2)?;
        let beta = max_independent_set_with_budget(t.graph(), budget)?.len() as u64;
        if beta <= bound {
            continue;
        }
        let classes = token_bipartition(&t, &parts)?;
        let side = classes.smaller_side();
        let violation = hall_witness(t.graph(), &classes, side)?.ok_or_else(|| {
            Error::Internal(format!("edge mask {mask:#x} has beta {beta} but saturates"))
        })?;
        hits.push(ScanHit {
            edge_mask: mask,
            graph: g,
            beta,
            bound,
            violation,
        });
    }
    Ok(hits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    Agrees,
    Violation,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub r_class: u64,
    pub b_class: u64,
    pub beta: Option<u64>,
    pub status: ScanStatus,
    /// Side of the larger class when a violation is found.
    pub larger_side: Option<Side>,
    /// A maximum independent set (token vertex ranks) for violating rows.
    pub witness: Option<Vec<usize>>,
}

pub const SCAN_MAX_ORDER: usize = 10;
pub const SCAN_MAX_K: usize = 4;

/// Compares `beta(F_k(K_{m,n}))` with the larger token class for every
/// `1 <= m <= n`, `m + n <= max_order`, `2 <= k <= min(max_k, m + n - 2)`.
/// Rows are ordered by `(m, n, k)`.
pub fn conjecture_scan(
    max_order: usize,
    max_k: usize,
    budget: &Budget,
) -> Result<Vec<ConjectureRow>> {
    if max_order > SCAN_MAX_ORDER || max_k > SCAN_MAX_K {
        return Err(Error::BadParameter(format!(
            "scan limited to order {SCAN_MAX_ORDER} and k {SCAN_MAX_K}"
        )));
    }
    let mut rows = Vec::new();
    for m in 1..=max_order / 2 {
        for n in m..=max_order - m {
            for k in 2..=max_k.min((m + n).saturating_sub(2)) {
                let (r_class, b_class) = class_sizes(m, n, k)?;
                let t = token_graph(&family("complete_bipartite", &[m, n])?, k)?;
                let row = match max_independent_set_with_budget(t.graph(), budget) {
                    Ok(set) => {
                        let beta = set.len() as u64;
                        let agrees = beta == r_class.max(b_class);
                        ConjectureRow {
                            m,
                            n,
                            k,
                            r_class,
                            b_class,
                            beta: Some(beta),
                            status: if agrees {
                                ScanStatus::Agrees
                            } else {
                                ScanStatus::Violation
                            },
                            larger_side: (!agrees).then_some(if r_class >= b_class {
                                Side::R
                            } else {
                                Side::B
                            }),
                            witness: (!agrees).then(|| set.vertices().to_vec()),
                        }
                    }
                    Err(Error::BudgetExceeded) => ConjectureRow {
                        m,
                        n,
                        k,
                        r_class,
                        b_class,
                        beta: None,
                        status: ScanStatus::BudgetExceeded,
                        larger_side: None,
                        witness: None,
                    },
                    Err(e) => return Err(e),
                };
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::SolverOracle;

    #[test]
    fn nu_formula_examples() {
        let v = nu_token_formula(6, 3).unwrap();
        assert_eq!((v.value, v.kind), (Number::Integer(10), ValueKind::Exact));
        let v = nu_token_formula(6, 2).unwrap();
        assert_eq!(
            (v.value, v.kind),
            (Number::Integer(6), ValueKind::LowerBound)
        );
        let v = nu_token_formula(5, 2).unwrap();
        assert_eq!(
            (v.value, v.kind),
            (Number::Integer(4), ValueKind::LowerBound)
        );
        assert!(nu_token_formula(5, 5).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(beta_kmn_f2(3, 3).unwrap(), 9);
        assert_eq!(beta_kmn_f2(2, 5).unwrap(), 11);
        assert_eq!(beta_kmn_f2(1, 1).unwrap(), 1);
        assert_eq!(beta_cycle_f2(5).unwrap(), 5);
        assert_eq!(beta_cycle_f2(3).unwrap(), 1);
        assert_eq!(beta_cycle_f2(7).unwrap(), 10);
        assert_eq!(beta_cycle_f2(8).unwrap(), 16);
        assert!(beta_cycle_f2(2).is_err());
        assert_eq!(beta_star(4, 2).unwrap(), 6);
        assert_eq!(beta_star(5, 4).unwrap(), 10);
        assert_eq!(beta_star(6, 1).unwrap(), 6);
        assert!(beta_star(3, 4).is_err());
        assert_eq!(r_value(3, 3, 2).unwrap(), 9);
        assert_eq!(r_value(2, 5, 2).unwrap(), 10);
        assert_eq!(r_value(4, 7, 1).unwrap(), 7);
        assert_eq!(beta_balanced_family(4, 2).unwrap(), 4);
        assert_eq!(beta_balanced_family(5, 2).unwrap(), 6);
        assert_eq!(beta_balanced_family(6, 3).unwrap(), 10);
        assert_eq!(beta_bipartite_perfect(6, 3).unwrap(), 10);
    }

    #[test]
    fn threshold_examples() {
        assert!(class_order_predicate(3, 6).unwrap());
        assert_eq!(class_sizes(3, 6, 2).unwrap(), (18, 18));
        assert!(class_order_predicate(2, 5).unwrap());
        assert!(!class_order_predicate(5, 6).unwrap());
        assert!((s_threshold(2) - 2.561).abs() < 1e-3);
        for m in 1..40 {
            for n in m.max(2)..60 {
                let (r, b) = class_sizes(m, n, 2).unwrap();
                let float = (n - m) as f64 >= s_threshold(m) - 1e-9;
                assert_eq!(class_order_predicate(m, n).unwrap(), b >= r, "m={m} n={n}");
                assert_eq!(float, b >= r, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn sandwich_shapes() {
        let s = cycle_sandwich(5, 2).unwrap();
        assert_eq!(s.lower, 2 + 1);
        assert!(s.holds(5));
        let mut oracle = SolverOracle {
            budget: Budget::unlimited(),
        };
        let s = johnson_sandwich(7, 3, &mut oracle).unwrap();
        assert!(s.holds(7));
        assert!(cycle_sandwich(5, 4).is_err());
    }

    #[test]
    fn oeis_prefixes() {
        let b = Budget::unlimited();
        let terms = |s| {
            let rep = oeis_check(s, 10, &b).unwrap();
            assert!(rep.matched);
            rep.terms.iter().map(|t| t.value).collect::<Vec<_>>()
        };
        assert_eq!(terms(Sequence::A189889)[..5], [1, 4, 5, 9, 10]);
        assert_eq!(terms(Sequence::A000217)[..7], [0, 1, 3, 6, 10, 15, 21]);
        assert_eq!(terms(Sequence::A002620)[..7], [0, 0, 1, 2, 4, 6, 9]);
        assert_eq!(terms(Sequence::A091044), [1, 2, 2, 3, 10, 3, 4, 28, 28, 4]);
        let rep = oeis_check(Sequence::A000217, 6, &b).unwrap();
        assert_eq!(
            rep.terms[2..5].iter().map(|t| t.solver).collect::<Vec<_>>(),
            [Some(3), Some(6), Some(10)]
        );
        assert!(oeis_check(Sequence::A000217, 21, &b).is_err());
        assert!("A000045".parse::<Sequence>().is_err());
    }

    #[test]
    fn conjecture_scan_small() {
        let rows = conjecture_scan(6, 3, &Budget::unlimited()).unwrap();
        assert!(rows.iter().all(|r| r.status == ScanStatus::Agrees));
        let k23 = rows.iter().find(|r| (r.m, r.n, r.k) == (2, 3, 2)).unwrap();
        assert_eq!((k23.r_class, k23.beta), (6, Some(6)));
        let keys: Vec<_> = rows.iter().map(|r| (r.m, r.n, r.k)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(conjecture_scan(11, 2, &Budget::unlimited()).is_err());
    }
}
