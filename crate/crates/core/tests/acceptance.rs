//! The twelve acceptance criteria. Each test prints one PASS/FAIL line with
//! its elapsed time and limit, then fails if any check or the limit failed.
//! All numeric comparisons are exact (tolerance 0).

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tokengraphs::formulas::{
    beta_balanced_family, beta_cycle_f2, beta_kmn_f2, beta_star, class_sizes, conjecture_scan,
    counterexample_scan_2x5, cycle_sandwich, johnson_sandwich, r_value, ScanStatus,
};
use tokengraphs::graph::random_graph;
use tokengraphs::independence::BRUTE_FORCE_LIMIT;
use tokengraphs::token::is_isomorphism;
use tokengraphs::verify::{random_corpus, CORPUS_SEED, CORPUS_SIZE};
use tokengraphs::{
    beta_token, bipartition_of, brute_force_mis, complement_map, cycle_independent_set, family,
    max_independent_set, max_matching, recursive_bounds, theorem1_matching, token_bipartition,
    token_graph, Budget, Graph, Result, Side, SolverOracle, Subset,
};

use common::*;

struct Checks {
    failures: Vec<String>,
    checked: usize,
}

impl Checks {
    fn new() -> Self {
        Checks {
            failures: Vec::new(),
            checked: 0,
        }
    }

    fn ensure(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        got: T,
        want: T,
        what: impl FnOnce() -> String,
    ) {
        self.checked += 1;
        if got != want {
            self.failures
                .push(format!("{}: got {got:?}, expected {want:?}", what()));
        }
    }
}

fn criterion(id: u32, name: &str, limit_secs: u64, body: impl FnOnce(&mut Checks) -> Result<()>) {
    let limit = Duration::from_secs(limit_secs);
    let start = Instant::now();
    let mut checks = Checks::new();
    if let Err(e) = body(&mut checks) {
        checks.failures.push(format!("error: {e}"));
    }
    let elapsed = start.elapsed();
    if elapsed > limit {
        checks.failures.push(format!(
            "runtime {elapsed:.2?} over the {limit_secs} s limit"
        ));
    }
    let verdict = if checks.failures.is_empty() {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "{verdict} criterion {id:2}: {name} ({} checks, {:.2?}, limit {limit_secs} s)",
        checks.checked, elapsed
    );
    for f in checks.failures.iter().take(20) {
        println!("    {f}");
    }
    assert!(checks.failures.is_empty(), "criterion {id} failed");
}

fn fam(kind: &str, params: &[usize]) -> Graph {
    family(kind, params).unwrap()
}

fn solver_beta(g: &Graph, k: usize) -> Result<usize> {
    beta_token(
        g,
        k,
        &mut SolverOracle {
            budget: Budget::unlimited(),
        },
    )
}

#[test]
fn criterion_01_odd_k_perfect_matchings() {
    criterion(
        1,
        "odd k token graphs of graphs with a perfect matching",
        10,
        |c| {
            for (name, g) in [
                ("C_6", fam("cycle", &[6])),
                ("K_3,3", fam("complete_bipartite", &[3, 3])),
                ("matching_graph(3,0)", fam("matching_graph", &[3, 0])),
                ("matching_graph(4,0)", fam("matching_graph", &[4, 0])),
            ] {
                let n = g.order();
                for k in (1..n).step_by(2) {
                    let t = token_graph(&g, k)?;
                    let want = binom(n, k) / 2;
                    let built = theorem1_matching(&g, &max_matching(&g), k)?.to_matching(&t)?;
                    let solver = max_matching(t.graph());
                    solver.validate(t.graph())?;
                    c.eq(built.len(), want, || format!("{name} k={k} construction"));
                    c.eq(solver.len(), want, || format!("{name} k={k} blossom"));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_02_matching_graph_tightness() {
    criterion(
        2,
        "matching graphs attain the matching bound; isolated token count",
        60,
        |c| {
            for order in 3..=10 {
                let (m, s) = (order / 2, order % 2);
                let g = fam("matching_graph", &[m, s]);
                for k in 1..order {
                    let t = token_graph(&g, k)?;
                    let nu = max_matching(t.graph()).len();
                    let isolated = t.graph().isolated_vertices().len();
                    let perfect_case = s == 0 && k % 2 == 1;
                    let (want_nu, want_iso) = if perfect_case {
                        (binom(order, k) / 2, 0)
                    } else {
                        let iso = binom(order / 2, k / 2);
                        ((binom(order, k) - iso) / 2, iso)
                    };
                    c.eq(nu, want_nu, || format!("nu F_{k}(matching_graph({m},{s}))"));
                    c.eq(isolated, want_iso, || {
                        format!("isolated in F_{k}(matching_graph({m},{s}))")
                    });
                    let built = theorem1_matching(&g, &max_matching(&g), k)?;
                    c.eq(built.to_matching(&t)?.len(), want_nu, || {
                        format!("construction k={k} m={m} s={s}")
                    });
                    let listed = tokengraphs::isolated_tokens(m, s, k)?.len();
                    c.eq(listed, want_iso, || format!("isolated_tokens({m},{s},{k})"));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_03_complete_bipartite_two_tokens() {
    criterion(3, "beta(F_2(K_m,n)) = max(mn, C(m+n,2) - mn)", 120, |c| {
        for m in 2..=5 {
            for n in m..=10 - m {
                let t = token_graph(&fam("complete_bipartite", &[m, n]), 2)?;
                let set = max_independent_set(t.graph());
                set.validate(t.graph())?;
                let want = (m * n).max(binom(m + n, 2) - m * n);
                c.eq(set.len(), want, || format!("K_{m},{n}"));
                c.eq(beta_kmn_f2(m, n)?, want as u64, || {
                    format!("formula K_{m},{n}")
                });
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_cycles_two_tokens() {
    criterion(
        4,
        "beta(F_2(C_p)) = floor(p floor(p/2) / 2), layered set attains it",
        120,
        |c| {
            for p in 3..=11 {
                let g = fam("cycle", &[p]);
                let want = p * (p / 2) / 2;
                c.eq(solver_beta(&g, 2)?, want, || format!("solver C_{p}"));
                c.eq(beta_cycle_f2(p)? as usize, want, || {
                    format!("formula C_{p}")
                });
                if p % 2 == 1 && p >= 5 {
                    let t = token_graph(&g, 2)?;
                    let set = cycle_independent_set(p)?;
                    let members: Vec<Subset> =
                        set.vertices().iter().map(|&v| t.subset(v)).collect();
                    let independent = members.iter().enumerate().all(|(i, &a)| {
                        members[i + 1..].iter().all(|&b| {
                            a.symmetric_difference(b)
                                .as_pair()
                                .is_none_or(|(x, y)| !g.has_edge(x, y))
                        })
                    });
                    c.ensure(independent, || {
                        format!("layered set of C_{p} is not independent")
                    });
                    c.eq(members.len(), want, || format!("layered set size C_{p}"));
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_05_figures_one_and_two() {
    criterion(
        5,
        "F_3(K_1,5) has a perfect matching, F_3(P_5) has nu 4",
        1,
        |c| {
            let t = token_graph(&fam("star", &[5]), 3)?;
            let m = max_matching(t.graph());
            c.eq(m.len(), 10, || "nu F_3(K_1,5)".into());
            c.ensure(m.is_perfect(t.graph())?, || {
                "F_3(K_1,5) matching not perfect".into()
            });
            c.ensure(
                !max_matching(&fam("star", &[5])).is_perfect(&fam("star", &[5]))?,
                || "K_1,5 has a perfect matching".into(),
            );
            let t = token_graph(&fam("path", &[5]), 3)?;
            c.eq(max_matching(t.graph()).len(), 4, || "nu F_3(P_5)".into());
            c.eq(brute_matching(t.graph()), 4, || "brute nu F_3(P_5)".into());
            Ok(())
        },
    );
}

#[test]
fn criterion_06_counterexample_scan() {
    criterion(
        6,
        "subgraph of K_2,5 with beta(F_2) = 12 > 11 and a Hall violation",
        300,
        |c| {
            let hits = counterexample_scan_2x5(false, &Budget::unlimited())?;
            c.ensure(!hits.is_empty(), || "no counterexample found".into());
            c.ensure(hits.iter().any(|h| h.beta == 12), || {
                "no hit with beta 12".into()
            });
            c.ensure(hits.iter().all(|h| h.graph.size() < 10), || {
                "K_2,5 reported".into()
            });
            let parts = tokengraphs::Bipartition::with_r_part(7, &[2, 3, 4, 5, 6])?;
            for h in hits.iter().filter(|h| h.beta == 12) {
                let t = token_graph(&h.graph, 2)?;
                c.eq(enumerate_mis(t.graph()), 12, || {
                    format!("enumerated beta, mask {:#x}", h.edge_mask)
                });
                let classes = token_bipartition(&t, &parts)?;
                let set = &h.violation.set;
                let nbhd = neighborhood(t.graph(), set);
                c.ensure(set.iter().all(|&v| classes.side(v) == Side::R), || {
                    "Hall set leaves the R class".into()
                });
                c.ensure(nbhd.len() < set.len(), || {
                    format!("|N(S)| = {} >= |S| = {}", nbhd.len(), set.len())
                });
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_07_johnson_refutation() {
    criterion(7, "beta(J(7,3)) = 7, not 6", 5, |c| {
        let t = token_graph(&fam("complete", &[7]), 3)?;
        let set = max_independent_set(t.graph());
        set.validate(t.graph())?;
        c.eq(set.len(), 7, || "beta J(7,3)".into());
        // pairwise intersections of at most one element
        let members: Vec<Subset> = set.vertices().iter().map(|&v| t.subset(v)).collect();
        let spread = members.iter().enumerate().all(|(i, a)| {
            members[i + 1..]
                .iter()
                .all(|b| a.intersection(*b).len() <= 1)
        });
        c.ensure(spread, || "witness has two triples sharing a pair".into());
        Ok(())
    });
}

#[test]
fn criterion_08_balanced_families_and_stars() {
    criterion(
        8,
        "closed forms for paths, balanced complete bipartite graphs, stars",
        300,
        |c| {
            for p in 2..=8 {
                let g = fam("path", &[p]);
                for k in 1..p {
                    c.eq(
                        solver_beta(&g, k)? as u64,
                        beta_balanced_family(p, k)?,
                        || format!("P_{p} k={k}"),
                    );
                }
            }
            for order in 2..=9 {
                let g = fam("complete_bipartite", &[order / 2, order.div_ceil(2)]);
                for k in 1..order {
                    c.eq(
                        solver_beta(&g, k)? as u64,
                        beta_balanced_family(order, k)?,
                        || format!("K_{},{} k={k}", order / 2, order.div_ceil(2)),
                    );
                }
            }
            for n in 1..=7 {
                let g = fam("star", &[n]);
                for k in 1..=n {
                    c.eq(solver_beta(&g, k)? as u64, beta_star(n, k)?, || {
                        format!("K_1,{n} k={k}")
                    });
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_09_recursive_bound_sandwiches() {
    criterion(
        9,
        "recursive, cycle and Johnson bounds sandwich beta",
        120,
        |c| {
            let mut brute = |h: &Graph| Ok(enumerate_mis(h));
            let mut corpus = random_corpus(CORPUS_SIZE, 8, CORPUS_SEED);
            for order in 3..=8 {
                corpus.push(fam("path", &[order]));
                corpus.push(fam("cycle", &[order]));
                corpus.push(fam("complete", &[order]));
                corpus.push(fam("star", &[order - 1]));
                corpus.push(fam("matching_graph", &[order / 2, order % 2]));
                for a in 2..=order / 2 {
                    corpus.push(fam("complete_bipartite", &[a, order - a]));
                }
            }
            for (i, g) in corpus.iter().enumerate() {
                for k in 2..g.order() {
                    let bounds = recursive_bounds(g, k, &mut brute)?;
                    let beta = solver_beta(g, k)?;
                    c.ensure(bounds.contains(beta), || {
                        format!("graph #{i} k={k}: {beta} outside {bounds:?}")
                    });
                }
            }
            let k13 = recursive_bounds(&fam("star", &[3]), 2, &mut brute)?;
            c.eq(k13.lower, solver_beta(&fam("star", &[3]), 2)?, || {
                "K_1,3 lower bound attained".into()
            });
            let k4 = recursive_bounds(&fam("complete", &[4]), 2, &mut brute)?;
            c.eq(k4.upper, solver_beta(&fam("complete", &[4]), 2)?, || {
                "K_4 upper bound attained".into()
            });
            for n in 4..=9 {
                for k in 2..=n - 2 {
                    let beta = solver_beta(&fam("cycle", &[n]), k)? as u64;
                    let s = cycle_sandwich(n, k)?;
                    c.ensure(s.holds(beta), || {
                        format!("C_{n} k={k}: {beta} outside {s:?}")
                    });
                }
            }
            for n in 4..=7 {
                for k in 2..=(n - 2).min(3) {
                    let beta = solver_beta(&fam("complete", &[n]), k)? as u64;
                    let s = johnson_sandwich(n, k, &mut brute)?;
                    c.ensure(s.holds(beta), || {
                        format!("J({n},{k}): {beta} outside {s:?}")
                    });
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_10_oracle_equivalence() {
    criterion(
        10,
        "branch and bound vs brute force MIS, blossom vs brute force matching",
        120,
        |c| {
            let densities = [0.1, 0.3, 0.5];
            for i in 0..200u64 {
                let mut rng = ChaCha8Rng::seed_from_u64(1000 + i);
                let n = rng.gen_range(6..=BRUTE_FORCE_LIMIT);
                let g = random_graph(n, densities[i as usize % 3], &mut rng);
                c.eq(max_independent_set(&g).len(), brute_force_mis(&g)?, || {
                    format!("MIS seed {}", 1000 + i)
                });
            }
            for i in 0..200u64 {
                let mut rng = ChaCha8Rng::seed_from_u64(5000 + i);
                let n = rng.gen_range(2..=14);
                let g = random_graph(n, densities[i as usize % 3], &mut rng);
                let m = max_matching(&g);
                m.validate(&g)?;
                c.eq(m.len(), brute_matching(&g), || {
                    format!("matching seed {}", 5000 + i)
                });
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_11_structural_invariants() {
    criterion(
        11,
        "edge counts, complement isomorphism, token classes",
        60,
        |c| {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            let mut graphs = Vec::new();
            for n in 2..=8 {
                graphs.push(fam("path", &[n]));
                graphs.push(fam("complete", &[n]));
                graphs.push(fam("star", &[n - 1]));
                for _ in 0..6 {
                    graphs.push(random_graph(n, rng.gen_range(0.2..0.8), &mut rng));
                }
            }
            for g in &graphs {
                let n = g.order();
                for k in 1..n {
                    let t = token_graph(g, k)?;
                    c.eq(t.graph().size(), g.size() * binom(n - 2, k - 1), || {
                        format!("edge count n={n} k={k}")
                    });
                    let dual = token_graph(g, n - k)?;
                    c.ensure(
                        is_isomorphism(&complement_map(&t), t.graph(), dual.graph()),
                        || format!("complement map n={n} k={k}"),
                    );
                    if let Some(parts) = bipartition_of(g) {
                        let (b, r) = (parts.part_len(Side::B), parts.part_len(Side::R));
                        if b == 0 || r == 0 {
                            continue;
                        }
                        let classes = token_bipartition(&t, &parts)?;
                        c.ensure(classes.validate(t.graph()).is_ok(), || {
                            format!("classes not proper n={n} k={k}")
                        });
                        c.eq(classes.part_len(Side::R) as u64, r_value(b, r, k)?, || {
                            format!("|R| n={n} k={k}")
                        });
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_12_conjecture_scan() {
    criterion(
        12,
        "no violation for K_m,n with m+n <= 9, k <= 4",
        600,
        |c| {
            let rows = conjecture_scan(9, 4, &Budget::unlimited())?;
            let mut expected = Vec::new();
            for m in 1..=4 {
                for n in m..=9 - m {
                    for k in 2..=4.min(m + n - 2) {
                        expected.push((m, n, k));
                    }
                }
            }
            c.eq(
                rows.iter().map(|r| (r.m, r.n, r.k)).collect::<Vec<_>>(),
                expected,
                || "row order".into(),
            );
            for r in &rows {
                let (rc, bc) = class_sizes(r.m, r.n, r.k)?;
                c.eq((r.r_class, r.b_class), (rc, bc), || {
                    format!("class sizes {:?}", (r.m, r.n, r.k))
                });
                c.eq(r.status, ScanStatus::Agrees, || {
                    format!("K_{},{} k={} beta {:?}", r.m, r.n, r.k, r.beta)
                });
            }
            Ok(())
        },
    );
}
