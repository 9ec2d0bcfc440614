//! Polarize a monomial ideal read from text and compare graded Betti numbers
//! before and after.

use cwl::betti::betti_table;
use cwl::monomial::{parse_ideal, VarNames};
use cwl::FieldSpec;

const INPUT: &str = "\
vars: x y z
x^2*y
y^3
x*z^2
";

fn main() -> cwl::Result<()> {
    let named = parse_ideal(INPUT)?;
    let p = named.ideal.polarize();
    let names = VarNames::new(
        p.origin
            .iter()
            .map(|(v, slot)| format!("{}_{slot}", named.names.name(*v))),
    );
    println!("I   = ({})", named.names.render_ideal(&named.ideal).join(", "));
    println!("I^P = ({})", names.render_ideal(&p.ideal).join(", "));

    let before = betti_table(&named.ideal, FieldSpec::Rationals)?.graded();
    let after = betti_table(&p.ideal, FieldSpec::Rationals)?.graded();
    println!("graded Betti numbers agree: {}", before == after);
    for ((i, j), r) in &before {
        println!("  beta_{{{i},{j}}} = {r}");
    }
    Ok(())
}
