//! Small named instances used by the examples and tests.

use crate::graph::SimpleGraph;
use crate::monomial::{Monomial, MonomialIdeal, Var};
use crate::oriented::{ForbiddenKind, WeightedOrientedGraph};

fn graph(names: &[&str], weights: &[u32], arcs: &[(&str, &str)]) -> WeightedOrientedGraph {
    let idx = |s: &str| names.iter().position(|n| *n == s).expect("known vertex");
    WeightedOrientedGraph::new(
        names.iter().map(|s| s.to_string()).collect(),
        weights.to_vec(),
        arcs.iter().map(|(u, v)| (idx(u), idx(v))),
    )
    .expect("fixture is valid")
}

/// Six vertices whose heavy vertices `x4` (weight 2) and `x5` (weight 4) are
/// sinks. `I(D) = (x1x2, x2x6, x2x3, x2x5^4, x1x4^2, x3x4^2)`.
pub fn sink_example() -> WeightedOrientedGraph {
    graph(
        &["x1", "x2", "x3", "x4", "x5", "x6"],
        &[1, 1, 1, 2, 4, 1],
        &[
            ("x1", "x2"),
            ("x2", "x6"),
            ("x2", "x3"),
            ("x2", "x5"),
            ("x1", "x4"),
            ("x3", "x4"),
        ],
    )
}

/// Five vertices with the single heavy vertex `x1` of weight 4.
/// `I(D) = (x4x1^4, x2x1^4, x1x3, x4x3, x2x3, x3x5, x2x5, x4x2)`.
pub fn single_heavy_vertex_example() -> WeightedOrientedGraph {
    graph(
        &["x1", "x2", "x3", "x4", "x5"],
        &[4, 1, 1, 1, 1],
        &[
            ("x4", "x1"),
            ("x2", "x1"),
            ("x1", "x3"),
            ("x4", "x3"),
            ("x2", "x3"),
            ("x3", "x5"),
            ("x2", "x5"),
            ("x4", "x2"),
        ],
    )
}

/// Edge ideal of the 5-cycle `x0 x1 x2 x3 x4`.
pub fn five_cycle_ideal() -> MonomialIdeal {
    SimpleGraph::cycle(5).edge_ideal()
}

/// The three-vertex configuration `kind` on vertices `a, b, c` with the
/// given weights (source weights are normalized to 1).
pub fn forbidden_instance(kind: ForbiddenKind, weights: [u32; 3]) -> WeightedOrientedGraph {
    let arcs: &[(&str, &str)] = match kind {
        ForbiddenKind::D1 => &[("a", "b"), ("b", "c")],
        ForbiddenKind::D2 => &[("b", "a"), ("b", "c")],
        ForbiddenKind::D3 => &[("a", "b"), ("b", "c"), ("c", "a")],
        ForbiddenKind::D4 => &[("a", "b"), ("c", "b"), ("a", "c")],
    };
    graph(&["a", "b", "c"], &weights, arcs)
}

/// A graph whose complement is the `n`-cycle `0 1 … n-1`, with vertex 0 of
/// weight `d` made a sink and every other edge oriented from the smaller
/// index to the larger.
pub fn cycle_complement_with_heavy_sink(n: usize, d: u32) -> WeightedOrientedGraph {
    let g = SimpleGraph::cycle(n).complement();
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| if u == 0 { (v, u) } else { (u, v) })
        .collect();
    let mut weights = vec![1; n];
    weights[0] = d;
    WeightedOrientedGraph::numbered(weights, arcs).expect("fixture is valid")
}

/// `(x0^a, x2^b)`, a complete intersection of pure powers.
pub fn pure_powers(a: u32, b: u32) -> MonomialIdeal {
    MonomialIdeal::in_vars(
        vec![Monomial::var_pow(Var(0), a), Monomial::var_pow(Var(2), b)],
        3,
    )
    .expect("variables in range")
}
