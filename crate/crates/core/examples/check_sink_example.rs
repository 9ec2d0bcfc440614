//! Classify a graph whose heavy vertices are all sinks, then confirm with the
//! exact deciders.

use cwl::classifier::classify;
use cwl::deciders::check_all;
use cwl::fixtures::sink_example;
use cwl::FieldSpec;

fn main() -> cwl::Result<()> {
    let d = sink_example();
    let names = d.var_names();
    let ideal = d.edge_ideal();
    println!("I(D) = ({})", names.render_ideal(&ideal).join(", "));

    let cert = classify(&d);
    println!("classifier: {:?} via {}", cert.value, cert.theorem_tag);
    println!("  {}", cert.reason);

    let r = check_all(&ideal, FieldSpec::Rationals)?;
    println!("cl = {}, lq = {}, vs = {}", r.is_cl(), r.is_lq(), r.is_vs());
    println!(
        "reg = {:?}, max generator degree = {:?}",
        r.regularity, r.max_gen_degree
    );
    if let Some(order) = &r.lq {
        let shown: Vec<String> = order.monomials(&ideal).map(|m| names.render(m)).collect();
        println!("linear quotient order: {}", shown.join(" < "));
    }
    for d in &r.cl.degrees {
        println!(
            "  degree {} component: {} generators, linear = {} ({:?})",
            d.degree, d.generators, d.linear, d.method
        );
    }
    Ok(())
}
