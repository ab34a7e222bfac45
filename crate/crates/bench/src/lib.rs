//! Fixed benchmark instances shared by the criterion benches.

use tokengraphs::{family, Graph};

/// A base graph and token count to benchmark on.
pub struct Instance {
    pub name: &'static str,
    pub graph: Graph,
    pub k: usize,
}

fn instance(name: &'static str, kind: &str, params: &[usize], k: usize) -> Instance {
    let graph = family(kind, params).expect("benchmark family parameters are valid");
    Instance { name, graph, k }
}

/// Instances for token graph construction and matching.
pub fn construction_instances() -> Vec<Instance> {
    vec![
        instance("F2(C11)", "cycle", &[11], 2),
        instance("F3(K_3,3)", "complete_bipartite", &[3, 3], 3),
        instance("J(7,3)", "complete", &[7], 3),
        instance("F5(P12)", "path", &[12], 5),
        instance("F6(K_6,6)", "complete_bipartite", &[6, 6], 6),
    ]
}

/// Instances small enough for the exact independence solver.
pub fn independence_instances() -> Vec<Instance> {
    vec![
        instance("F2(C11)", "cycle", &[11], 2),
        instance("J(7,3)", "complete", &[7], 3),
        instance("F2(K_4,5)", "complete_bipartite", &[4, 5], 2),
        instance("F3(P8)", "path", &[8], 3),
    ]
}
