//! Chordality certificates and the weight-one linearity test on a few graphs.

use cwl::graph::Chordality;
use cwl::{has_linear_resolution, FieldSpec, SimpleGraph};

fn main() -> cwl::Result<()> {
    let graphs = [
        ("C4", SimpleGraph::cycle(4)),
        ("C5", SimpleGraph::cycle(5)),
        ("complement of C6", SimpleGraph::cycle(6).complement()),
        ("P5", SimpleGraph::path(5)),
        ("K4", SimpleGraph::complete(4)),
    ];
    for (label, g) in graphs {
        let cert = match g.complement().chordality() {
            Chordality::Chordal(order) => format!("complement chordal, elimination order {order:?}"),
            Chordality::NotChordal(cycle) => format!("complement has induced cycle {cycle:?}"),
        };
        let linear = has_linear_resolution(&g.edge_ideal(), FieldSpec::Rationals)?;
        println!("{label:<18} linear = {linear:<5} {cert}");
        println!(
            "{:<18} bipartite = {}, split = {}, simplicial vertices {:?}",
            "",
            g.is_bipartite(),
            g.is_split(),
            g.simplicial_vertices()
        );
    }
    Ok(())
}
