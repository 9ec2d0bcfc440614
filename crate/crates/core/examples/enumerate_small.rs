//! Every weighted oriented graph on three vertices with weights up to 2,
//! checked by the classifier and the exact deciders.

use cwl::harness::fuzz::{enumerate_instances, evaluate_all, summarize};
use cwl::harness::{FuzzConfig, Mode};

fn main() -> cwl::Result<()> {
    let config = FuzzConfig {
        n: 3,
        max_weight: 2,
        mode: Mode::Enumerate,
        verify_all: true,
        ..FuzzConfig::default()
    };
    let instances = enumerate_instances(config.n, config.max_weight);
    let outcomes = evaluate_all(&instances, &config)?;
    for o in &outcomes {
        let e = o.engine.as_ref().expect("enumeration runs the engine");
        let names = o.graph.var_names();
        println!(
            "{:<40} cl={:<5} lq={:<5} vs={:<5} {}",
            format!("({})", names.render_ideal(&o.graph.edge_ideal()).join(", ")),
            e.is_cl(),
            e.is_lq(),
            e.is_vs(),
            o.certificate.theorem_tag
        );
    }
    print!("\n{}", summarize(&config, &outcomes).to_pretty());
    Ok(())
}
