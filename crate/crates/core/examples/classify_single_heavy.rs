//! A graph with exactly one heavy vertex: the classifier compares the
//! underlying graph with the graph of the degree-two generators.

use cwl::classifier::{classify, power_obstruction};
use cwl::deciders::check_all;
use cwl::fixtures::single_heavy_vertex_example;
use cwl::FieldSpec;

fn main() -> cwl::Result<()> {
    let d = single_heavy_vertex_example();
    let g = d.underlying();
    let h = d.quadratic_part_graph();
    let edges = |g: &cwl::SimpleGraph| {
        g.edges()
            .map(|(u, v)| format!("{}{}", g.name(u), g.name(v)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("G edges: {}", edges(&g));
    println!("H edges: {}", edges(&h));
    println!("G co-chordal: {}, H co-chordal: {}", g.is_co_chordal(), h.is_co_chordal());
    println!("power obstruction: {:?}", power_obstruction(&d).map(|w| w.cycle));

    let cert = classify(&d);
    println!("classifier: {:?} via {}", cert.value, cert.theorem_tag);

    let r = check_all(&d.edge_ideal(), FieldSpec::Rationals)?;
    println!(
        "engine: cl = {}, lq = {}, vs = {}, reg = {:?}",
        r.is_cl(),
        r.is_lq(),
        r.is_vs(),
        r.regularity
    );
    Ok(())
}
