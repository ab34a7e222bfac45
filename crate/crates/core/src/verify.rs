//! Named verification suites. Each suite walks a range of small instances,
//! compares closed forms and constructions against the exact solvers, and
//! returns one report row per instance.

use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::constructions::{
    cycle_independent_set, f2_matching_construction, isolated_tokens, theorem1_matching,
    witness_graph_large_s, witness_graph_small_s, WitnessGraph,
};
use crate::error::{Error, Result};
use crate::formulas::{
    beta_balanced_family, beta_bipartite_perfect, beta_cycle_f2, beta_kmn_f2, beta_star,
    class_order_predicate, counterexample_scan_2x5, cycle_sandwich, johnson_sandwich,
    nu_token_formula, s_threshold, FormulaValue, Number, Sandwich, ScanHit,
};
use crate::graph::{family, random_graph, Bipartition, Graph, Side};
use crate::independence::{
    beta_token, max_independent_set_with_budget, recursive_bounds, vertex_transitive_bound, Budget,
    SolverOracle,
};
use crate::matching::max_matching;
use crate::report::{ReportRow, Status, VerificationReport};
use crate::subset::{binomial, subsets_of_size, Subset};
use crate::token::{token_graph, TokenGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteId {
    Thm1,
    Thm2,
    Thm3,
    Lemma3,
    Lemma5,
    Lemma6,
    Cor3,
    Cor4,
    Star,
    Prop3,
    Eq1,
    Eq2,
    Eq3,
    Fig1,
    Fig2,
    Fig34,
    J73,
}

impl SuiteId {
    pub const ALL: [SuiteId; 17] = [
        SuiteId::Thm1,
        SuiteId::Thm2,
        SuiteId::Thm3,
        SuiteId::Lemma3,
        SuiteId::Lemma5,
        SuiteId::Lemma6,
        SuiteId::Cor3,
        SuiteId::Cor4,
        SuiteId::Star,
        SuiteId::Prop3,
        SuiteId::Eq1,
        SuiteId::Eq2,
        SuiteId::Eq3,
        SuiteId::Fig1,
        SuiteId::Fig2,
        SuiteId::Fig34,
        SuiteId::J73,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::Thm1 => "thm1",
            SuiteId::Thm2 => "thm2",
            SuiteId::Thm3 => "thm3",
            SuiteId::Lemma3 => "lemma3",
            SuiteId::Lemma5 => "lemma5",
            SuiteId::Lemma6 => "lemma6",
            SuiteId::Cor3 => "cor3",
            SuiteId::Cor4 => "cor4",
            SuiteId::Star => "star",
            SuiteId::Prop3 => "prop3",
            SuiteId::Eq1 => "eq1",
            SuiteId::Eq2 => "eq2",
            SuiteId::Eq3 => "eq3",
            SuiteId::Fig1 => "fig1",
            SuiteId::Fig2 => "fig2",
            SuiteId::Fig34 => "fig34",
            SuiteId::J73 => "j73",
        }
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTarget(s.to_string()))
    }
}

impl std::fmt::Display for SuiteId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Overrides every order limit of the suite.
    pub max_n: Option<usize>,
    /// Solver time per instance; `None` is unlimited.
    pub budget_seconds: Option<f64>,
    /// Record wall time per row. Off by default so reports are reproducible byte for byte.
    pub timings: bool,
}

/// Seed of the random corpus used by the recursive-bound suite.
pub const CORPUS_SEED: u64 = 0x746f_6b65_6e73;
pub const CORPUS_SIZE: usize = 50;

pub fn run_suite(id: SuiteId, opts: &VerifyOptions) -> Result<VerificationReport> {
    let mut r = Runner {
        id,
        opts,
        rows: Vec::new(),
    };
    match id {
        SuiteId::Thm1 => thm1(&mut r)?,
        SuiteId::Thm2 => thm2(&mut r)?,
        SuiteId::Thm3 => thm3(&mut r)?,
        SuiteId::Lemma3 => lemma3(&mut r)?,
        SuiteId::Lemma5 => witness_suite(&mut r, false)?,
        SuiteId::Lemma6 => witness_suite(&mut r, true)?,
        SuiteId::Cor3 => cor3(&mut r)?,
        SuiteId::Cor4 => cor4(&mut r)?,
        SuiteId::Star => star(&mut r)?,
        SuiteId::Prop3 => prop3(&mut r)?,
        SuiteId::Eq1 => eq1(&mut r)?,
        SuiteId::Eq2 => eq2(&mut r)?,
        SuiteId::Eq3 => eq3(&mut r)?,
        SuiteId::Fig1 => fig1(&mut r)?,
        SuiteId::Fig2 => fig2(&mut r)?,
        SuiteId::Fig34 => fig34(&mut r)?,
        SuiteId::J73 => j73(&mut r)?,
    }
    Ok(VerificationReport { rows: r.rows })
}

struct Outcome {
    formula: Option<String>,
    solver: Option<String>,
    witness: Option<Value>,
    status: Status,
}

impl Outcome {
    fn new(formula: impl ToString, solver: impl ToString, ok: bool) -> Self {
        Outcome {
            formula: Some(formula.to_string()),
            solver: Some(solver.to_string()),
            witness: None,
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    fn equal(formula: u64, solver: u64) -> Self {
        Outcome::new(formula, solver, formula == solver)
    }

    fn bound(formula: impl ToString, solver: u64, holds: bool) -> Self {
        Outcome {
            status: if holds {
                Status::BoundHolds
            } else {
                Status::Fail
            },
            ..Outcome::new(formula, solver, holds)
        }
    }

    fn witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }
}

struct Runner<'a> {
    id: SuiteId,
    opts: &'a VerifyOptions,
    rows: Vec<ReportRow>,
}

impl Runner<'_> {
    fn cap(&self, default: usize) -> usize {
        self.opts.max_n.unwrap_or(default)
    }

    fn check(
        &mut self,
        instance: impl Into<String>,
        f: impl FnOnce(&Budget) -> Result<Outcome>,
    ) -> Result<()> {
        let start = Instant::now();
        let budget = Budget::from_option(self.opts.budget_seconds);
        let o = match f(&budget) {
            Ok(o) => o,
            Err(Error::BudgetExceeded) => Outcome {
                formula: None,
                solver: None,
                witness: None,
                status: Status::BudgetExceeded,
            },
            Err(e) => return Err(e),
        };
        self.rows.push(ReportRow {
            theorem: self.id.as_str().to_string(),
            instance: instance.into(),
            formula: o.formula,
            solver: o.solver,
            witness: o.witness,
            status: o.status,
            wall_time_ms: self
                .opts
                .timings
                .then(|| start.elapsed().as_secs_f64() * 1e3),
        });
        Ok(())
    }
}

fn fam(kind: &str, params: &[usize]) -> Result<Graph> {
    family(kind, params)
}

fn beta(g: &Graph, k: usize, budget: &Budget) -> Result<u64> {
    Ok(beta_token(g, k, &mut SolverOracle { budget: *budget })? as u64)
}

fn nu(g: &Graph, k: usize) -> Result<u64> {
    Ok(max_matching(token_graph(g, k)?.graph()).len() as u64)
}

fn int(v: &FormulaValue) -> Result<u64> {
    match v.value {
        Number::Integer(x) => Ok(x),
        _ => Err(Error::Internal(format!(
            "expected an integer formula value, got {}",
            v.value
        ))),
    }
}

fn labels(t: &TokenGraph, ranks: &[usize]) -> Value {
    json!(ranks
        .iter()
        .map(|&r| t.subset(r).one_based())
        .collect::<Vec<_>>())
}

fn pair_labels(pairs: &[(Subset, Subset)]) -> Value {
    json!(pairs
        .iter()
        .map(|(a, b)| [a.one_based(), b.one_based()])
        .collect::<Vec<_>>())
}

fn edge_labels(g: &Graph) -> Value {
    json!(g
        .edges()
        .iter()
        .map(|&(u, v)| [u + 1, v + 1])
        .collect::<Vec<_>>())
}

fn matching_name(m: usize, s: usize) -> String {
    format!("matching_graph({m},{s})")
}

fn thm1(r: &mut Runner) -> Result<()> {
    let cap = r.cap(10);
    let perfect = [
        ("C_6", fam("cycle", &[6])?),
        ("K_{3,3}", fam("complete_bipartite", &[3, 3])?),
        ("matching_graph(3,0)", fam("matching_graph", &[3, 0])?),
        ("matching_graph(4,0)", fam("matching_graph", &[4, 0])?),
    ];
    for (name, g) in &perfect {
        let n = g.order();
        if n > cap {
            continue;
        }
        for k in (1..n).step_by(2) {
            r.check(format!("{name}, k={k}"), |_| {
                let formula = int(&nu_token_formula(n, k)?)?;
                let t = token_graph(g, k)?;
                let built = theorem1_matching(g, &max_matching(g), k)?;
                let built_len = built.to_matching(&t)?.len() as u64;
                let solver = max_matching(t.graph()).len() as u64;
                Ok(
                    Outcome::new(formula, solver, solver == formula && built_len == formula)
                        .witness(json!({ "construction": built_len })),
                )
            })?;
        }
    }
    for order in 3..=cap {
        let (m, s) = (order / 2, order % 2);
        let g = fam("matching_graph", &[m, s])?;
        for k in 1..order {
            r.check(format!("{}, k={k}", matching_name(m, s)), |_| {
                let formula = int(&nu_token_formula(order, k)?)?;
                let t = token_graph(&g, k)?;
                let built = theorem1_matching(&g, &max_matching(&g), k)?;
                let built_len = built.to_matching(&t)?.len() as u64;
                let solver = max_matching(t.graph()).len() as u64;
                let isolated = isolated_tokens(m, s, k)?.len() as u64;
                let expected = if s == 0 && k % 2 == 1 {
                    0
                } else {
                    binomial(m as u64, k as u64 / 2)
                };
                let ok = solver == formula && built_len == formula && isolated == expected;
                Ok(Outcome::new(formula, solver, ok)
                    .witness(json!({ "construction": built_len, "isolated": isolated })))
            })?;
        }
    }
    Ok(())
}

fn lemma3(r: &mut Runner) -> Result<()> {
    for order in 3..=r.cap(10) {
        let (m, s) = (order / 2, order % 2);
        r.check(format!("{}, k=2", matching_name(m, s)), |_| {
            let g = fam("matching_graph", &[m, s])?;
            let t = token_graph(&g, 2)?;
            let built = f2_matching_construction(m, s)?;
            let built_len = built.to_matching(&t)?.len() as u64;
            let formula = (binomial(order as u64, 2) - m as u64) / 2;
            let solver = max_matching(t.graph()).len() as u64;
            Ok(
                Outcome::new(formula, solver, solver == formula && built_len == formula)
                    .witness(pair_labels(&built.pairs)),
            )
        })?;
    }
    Ok(())
}

fn thm2(r: &mut Runner) -> Result<()> {
    let cap = r.cap(10);
    for m in 2..=cap / 2 {
        for n in m..=cap - m {
            r.check(format!("K_{{{m},{n}}}, k=2"), |b| {
                let g = fam("complete_bipartite", &[m, n])?;
                Ok(Outcome::equal(beta_kmn_f2(m, n)?, beta(&g, 2, b)?))
            })?;
        }
    }
    Ok(())
}

fn thm3(r: &mut Runner) -> Result<()> {
    for p in 3..=r.cap(11) {
        r.check(format!("C_{p}, k=2"), |b| {
            let formula = beta_cycle_f2(p)?;
            let solver = beta(&fam("cycle", &[p])?, 2, b)?;
            if p % 2 == 1 && p >= 5 {
                let t = token_graph(&fam("cycle", &[p])?, 2)?;
                let set = cycle_independent_set(p)?;
                let ok = solver == formula && set.len() as u64 == formula;
                Ok(Outcome::new(formula, solver, ok).witness(labels(&t, set.vertices())))
            } else {
                Ok(Outcome::equal(formula, solver))
            }
        })?;
    }
    Ok(())
}

/// `(|R-class|, |B-class|)` of `F_2(G)` by direct enumeration.
fn count_classes(parts: &Bipartition) -> (u64, u64) {
    let n = parts.order();
    let r_mask = parts.r_mask();
    subsets_of_size(Subset::full(n), 2).fold((0, 0), |(r, b), a| {
        if a.intersection(r_mask).len() % 2 == 1 {
            (r + 1, b)
        } else {
            (r, b + 1)
        }
    })
}

fn witness_suite(r: &mut Runner, large: bool) -> Result<()> {
    let cap = r.cap(9);
    let super_cap = r.cap(8);
    for order in 2..=cap {
        for m in 1..=order / 2 {
            let s = order - 2 * m;
            let below = binomial(s as u64, 2) < m as u64;
            if below == large {
                continue;
            }
            let w = if large {
                witness_graph_large_s(m, s)?
            } else {
                witness_graph_small_s(m, s)?
            };
            let kind = if large { "large-s" } else { "small-s" };
            r.check(format!("{kind} witness (m={m}, s={s}), k=2"), |b| {
                let solver = beta(&w.graph, 2, b)?;
                let (rc, bc) = count_classes(&w.parts);
                let class = if w.claimed_class == Side::R { rc } else { bc };
                let ok = solver == w.claimed_beta && class == w.claimed_beta;
                Ok(Outcome::new(w.claimed_beta, solver, ok).witness(json!({
                    "edges": edge_labels(&w.graph),
                    "phi": w.phi.table,
                })))
            })?;
            if order <= super_cap {
                supergraph_row(r, &w, kind, m, s)?;
            }
        }
    }
    Ok(())
}

fn supergraph_row(r: &mut Runner, w: &WitnessGraph, kind: &str, m: usize, s: usize) -> Result<()> {
    let missing: Vec<(usize, usize)> = w
        .parts
        .part(Side::B)
        .into_iter()
        .flat_map(|b| w.parts.part(Side::R).into_iter().map(move |x| (b, x)))
        .filter(|&(b, x)| !w.graph.has_edge(b, x))
        .collect();
    if missing.is_empty() {
        return Ok(());
    }
    r.check(
        format!(
            "{kind} witness (m={m}, s={s}) plus one edge, {} supergraphs",
            missing.len()
        ),
        |b| {
            let (rc, bc) = count_classes(&w.parts);
            let target = rc.max(bc);
            let mut off = Vec::new();
            for &e in &missing {
                let mut edges = w.graph.edges().to_vec();
                edges.push(e);
                let g = Graph::new(w.graph.order(), &edges)?;
                let value = beta(&g, 2, b)?;
                if value != target {
                    off.push(json!({ "edge": [e.0 + 1, e.1 + 1], "beta": value }));
                }
            }
            let solver = if off.is_empty() {
                target.to_string()
            } else {
                format!("{} differ", off.len())
            };
            Ok(Outcome::new(target, solver, off.is_empty()).witness(json!(off)))
        },
    )
}

fn cor3(r: &mut Runner) -> Result<()> {
    let cap = r.cap(8);
    for half in 1..=cap / 2 {
        let order = 2 * half;
        let mut bases = vec![(format!("P_{order}"), fam("path", &[order])?)];
        if order >= 4 {
            bases.push((format!("C_{order}"), fam("cycle", &[order])?));
        }
        bases.push((
            format!("K_{{{half},{half}}}"),
            fam("complete_bipartite", &[half, half])?,
        ));
        for (name, g) in &bases {
            for k in (1..order).step_by(2) {
                r.check(format!("{name}, k={k}"), |b| {
                    Ok(Outcome::equal(
                        beta_bipartite_perfect(order, k)?,
                        beta(g, k, b)?,
                    ))
                })?;
            }
        }
    }
    Ok(())
}

fn cor4(r: &mut Runner) -> Result<()> {
    for p in 2..=r.cap(8) {
        let g = fam("path", &[p])?;
        for k in 1..p {
            r.check(format!("P_{p}, k={k}"), |b| {
                Ok(Outcome::equal(beta_balanced_family(p, k)?, beta(&g, k, b)?))
            })?;
        }
    }
    for order in 2..=r.cap(9) {
        let (t, u) = (order / 2, order.div_ceil(2));
        let g = fam("complete_bipartite", &[t, u])?;
        for k in 1..order {
            r.check(format!("K_{{{t},{u}}}, k={k}"), |b| {
                Ok(Outcome::equal(
                    beta_balanced_family(order, k)?,
                    beta(&g, k, b)?,
                ))
            })?;
        }
    }
    Ok(())
}

fn star(r: &mut Runner) -> Result<()> {
    for n in 1..=r.cap(7) {
        let g = fam("star", &[n])?;
        for k in 1..=n {
            r.check(format!("K_{{1,{n}}}, k={k}"), |b| {
                Ok(Outcome::equal(beta_star(n, k)?, beta(&g, k, b)?))
            })?;
        }
    }
    Ok(())
}

fn prop3(r: &mut Runner) -> Result<()> {
    let cap = r.cap(12);
    for m in 1..=cap / 2 {
        for n in m.max(3 - m.min(2))..=cap - m {
            if m + n < 3 {
                continue;
            }
            r.check(format!("K_{{{m},{n}}}, k=2"), |_| {
                let r_part: Vec<usize> = (m..m + n).collect();
                let (rc, bc) = count_classes(&Bipartition::with_r_part(m + n, &r_part)?);
                let predicate = class_order_predicate(m, n)?;
                let float = (n - m) as f64 >= s_threshold(m);
                let ok = predicate == (bc >= rc) && float == predicate;
                Ok(Outcome::new(
                    format!("C({},2) >= {m}: {predicate}", n - m),
                    format!("|R|={rc}, |B|={bc}"),
                    ok,
                ))
            })?;
        }
    }
    Ok(())
}

fn named_graphs(order: usize) -> Result<Vec<(String, Graph)>> {
    let mut out = vec![
        (format!("P_{order}"), fam("path", &[order])?),
        (format!("C_{order}"), fam("cycle", &[order])?),
        (format!("K_{order}"), fam("complete", &[order])?),
        (format!("K_{{1,{}}}", order - 1), fam("star", &[order - 1])?),
        (
            matching_name(order / 2, order % 2),
            fam("matching_graph", &[order / 2, order % 2])?,
        ),
    ];
    for a in 2..=order / 2 {
        out.push((
            format!("K_{{{a},{}}}", order - a),
            fam("complete_bipartite", &[a, order - a])?,
        ));
    }
    Ok(out)
}

/// The fixed random corpus: orders 4 to `max_order`, densities cycling
/// through 0.3, 0.5 and 0.7.
pub fn random_corpus(size: usize, max_order: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let densities = [0.3, 0.5, 0.7];
    (0..size)
        .map(|i| {
            let n = rng.gen_range(4..=max_order.max(4));
            random_graph(n, densities[i % densities.len()], &mut rng)
        })
        .collect()
}

fn sandwich_row(r: &mut Runner, name: String, g: &Graph, k: usize) -> Result<()> {
    r.check(name, |b| {
        let bounds = recursive_bounds(g, k, &mut SolverOracle { budget: *b })?;
        let value = beta(g, k, b)? as usize;
        Ok(Outcome::bound(
            format!("[{}, {}]", bounds.lower, bounds.upper),
            value as u64,
            bounds.contains(value),
        ))
    })
}

fn eq1(r: &mut Runner) -> Result<()> {
    let cap = r.cap(8);
    for order in 3..=cap {
        for (name, g) in named_graphs(order)? {
            for k in 2..order {
                sandwich_row(r, format!("{name}, k={k}"), &g, k)?;
            }
        }
    }
    for (i, g) in random_corpus(CORPUS_SIZE, cap, CORPUS_SEED)
        .iter()
        .enumerate()
    {
        for k in 2..g.order() {
            sandwich_row(
                r,
                format!("random #{i} (n={}, m={}), k={k}", g.order(), g.size()),
                g,
                k,
            )?;
        }
    }
    let k13 = fam("star", &[3])?;
    r.check("K_{1,3}, k=2, lower bound attained", |b| {
        let bounds = recursive_bounds(&k13, 2, &mut SolverOracle { budget: *b })?;
        let value = beta(&k13, 2, b)?;
        Ok(Outcome::new(
            bounds.lower,
            value,
            bounds.lower as u64 == value,
        ))
    })?;
    let k4 = fam("complete", &[4])?;
    r.check("K_4, k=2, upper bound attained", |b| {
        let bounds = recursive_bounds(&k4, 2, &mut SolverOracle { budget: *b })?;
        let value = beta(&k4, 2, b)?;
        Ok(Outcome::new(
            bounds.upper,
            value,
            bounds.upper as u64 == value,
        ))
    })?;
    for order in 4..=cap {
        for (name, g) in [
            (format!("C_{order}"), fam("cycle", &[order])?),
            (format!("K_{order}"), fam("complete", &[order])?),
        ] {
            for k in 2..=order - 2 {
                r.check(format!("{name}, k={k}, vertex-transitive bound"), |b| {
                    let bound =
                        vertex_transitive_bound(&g, k, 0, &mut SolverOracle { budget: *b })?;
                    let value = beta(&g, k, b)?;
                    Ok(Outcome::bound(
                        format!("<= {bound}"),
                        value,
                        value <= bound as u64,
                    ))
                })?;
            }
        }
    }
    Ok(())
}

fn sandwich_outcome(s: &Sandwich, value: u64) -> Outcome {
    Outcome::bound(format!("[{}, {}]", s.lower, s.upper), value, s.holds(value))
}

fn eq2(r: &mut Runner) -> Result<()> {
    for n in 4..=r.cap(9) {
        let g = fam("cycle", &[n])?;
        for k in 2..=n - 2 {
            r.check(format!("C_{n}, k={k}"), |b| {
                Ok(sandwich_outcome(&cycle_sandwich(n, k)?, beta(&g, k, b)?))
            })?;
        }
    }
    Ok(())
}

fn eq3(r: &mut Runner) -> Result<()> {
    for n in 4..=r.cap(7) {
        let g = fam("complete", &[n])?;
        for k in 2..=(n - 2).min(3) {
            r.check(format!("J({n},{k})"), |b| {
                let s = johnson_sandwich(n, k, &mut SolverOracle { budget: *b })?;
                Ok(sandwich_outcome(&s, beta(&g, k, b)?))
            })?;
        }
    }
    Ok(())
}

fn fig1(r: &mut Runner) -> Result<()> {
    let star5 = fam("star", &[5])?;
    r.check("F_3(K_{1,5}) has a perfect matching", |_| {
        let t = token_graph(&star5, 3)?;
        let m = max_matching(t.graph());
        let perfect = m.is_perfect(t.graph())?;
        let pairs: Vec<_> = m
            .edges()
            .iter()
            .map(|&(a, b)| (t.subset(a), t.subset(b)))
            .collect();
        Ok(
            Outcome::new("10 (perfect)", m.len(), perfect && m.len() == 10)
                .witness(pair_labels(&pairs)),
        )
    })?;
    r.check("K_{1,5} has no perfect matching", |_| {
        let m = max_matching(&star5);
        Ok(Outcome::new("< 3", m.len(), !m.is_perfect(&star5)?))
    })?;
    Ok(())
}

fn fig2(r: &mut Runner) -> Result<()> {
    let p5 = fam("path", &[5])?;
    r.check("F_3(P_5) has no perfect matching", |_| {
        let value = nu(&p5, 3)?;
        Ok(Outcome::new("4 < 5", value, value == 4))
    })?;
    let two = fam("matching_graph", &[2, 0])?;
    r.check("F_2(matching_graph(2,0)) has no perfect matching", |_| {
        let value = nu(&two, 2)?;
        Ok(Outcome::new("2 < 3", value, value == 2))
    })?;
    Ok(())
}

/// An independent set of 12 pairs shown for the counterexample graph, in
/// 1-based labels with `{1, 2}` one side of the bipartition.
pub const FIG3_INDEPENDENT_SET: [[usize; 2]; 12] = [
    [1, 3],
    [1, 4],
    [1, 5],
    [1, 6],
    [1, 7],
    [2, 3],
    [4, 5],
    [4, 6],
    [4, 7],
    [5, 6],
    [5, 7],
    [6, 7],
];

fn fig34(r: &mut Runner) -> Result<()> {
    let mut hits = Vec::new();
    r.check("subgraphs of K_{2,5} with beta(F_2) > 11", |b| {
        hits = counterexample_scan_2x5(false, b)?;
        let top = hits.iter().map(|h| h.beta).max().unwrap_or(0);
        let ok = !hits.is_empty() && hits.iter().any(|h| h.beta == 12);
        let spanning = |h: &&ScanHit| h.graph.isolated_vertices().is_empty();
        let witness =
            hits.iter()
                .filter(spanning)
                .find(|h| h.beta == 12)
                .map(|h| -> Result<Value> {
                    let t = token_graph(&h.graph, 2)?;
                    Ok(json!({
                        "edges": edge_labels(&h.graph),
                        "hall_set": labels(&t, &h.violation.set),
                        "neighborhood": labels(&t, &h.violation.neighborhood),
                    }))
                });
        let out = Outcome::new(
            "some graph with beta 12",
            format!(
                "{} graphs ({} without isolated vertices), max beta {top}",
                hits.len(),
                hits.iter().filter(spanning).count()
            ),
            ok,
        );
        Ok(match witness {
            Some(w) => out.witness(w?),
            None => out,
        })
    })?;
    r.check("K_{2,5} is not a counterexample", |b| {
        let value = beta(&fam("complete_bipartite", &[2, 5])?, 2, b)?;
        let full = hits.iter().any(|h| h.graph.size() == 10);
        Ok(Outcome::new(11, value, value == 11 && !full))
    })?;
    r.check("shown 12-set is independent in some counterexample", |_| {
        let set: Vec<Subset> = FIG3_INDEPENDENT_SET
            .iter()
            .map(|&[a, b]| Subset::from_slice(&[a - 1, b - 1]))
            .collect();
        let carrier = hits
            .iter()
            .filter(|h| h.graph.isolated_vertices().is_empty())
            .find(|h| {
                set.iter().enumerate().all(|(i, &a)| {
                    set[i + 1..].iter().all(|&b| {
                        a.symmetric_difference(b)
                            .as_pair()
                            .is_none_or(|(x, y)| !h.graph.has_edge(x, y))
                    })
                })
            });
        let solver = carrier.map_or("none".to_string(), |h| {
            format!("edges {}", edge_labels(&h.graph))
        });
        Ok(Outcome::new("12", solver, carrier.is_some()))
    })?;
    Ok(())
}

fn j73(r: &mut Runner) -> Result<()> {
    r.check("J(7,3)", |b| {
        let t = token_graph(&fam("complete", &[7])?, 3)?;
        let set = max_independent_set_with_budget(t.graph(), b)?;
        let value = set.len() as u64;
        Ok(
            Outcome::new("7 (refuted closed form gives 6)", value, value == 7)
                .witness(labels(&t, set.vertices())),
        )
    })
}
