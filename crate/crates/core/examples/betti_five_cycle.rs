//! Betti numbers of the 5-cycle edge ideal and of its square.

use cwl::betti::{betti_table, has_linear_resolution, lcm_lattice_points, BettiTable};
use cwl::fixtures::five_cycle_ideal;
use cwl::FieldSpec;

fn show(label: &str, t: &BettiTable) {
    println!("{label}: totals {:?}, regularity {:?}", t.totals(), t.regularity());
    for ((i, j), r) in t.graded() {
        println!("  beta_{{{i},{j}}} = {r}");
    }
}

fn main() -> cwl::Result<()> {
    let i = five_cycle_ideal();
    let sq = i.power(2);
    println!("lcm lattice sizes: {} and {}", lcm_lattice_points(&i).len(), lcm_lattice_points(&sq).len());

    show("I(C5)", &betti_table(&i, FieldSpec::Rationals)?);
    show("I(C5)^2", &betti_table(&sq, FieldSpec::Rationals)?);

    println!("I(C5) linear: {}", has_linear_resolution(&i, FieldSpec::Rationals)?);
    println!("I(C5)^2 linear: {}", has_linear_resolution(&sq, FieldSpec::Rationals)?);
    Ok(())
}
