//! Regularity of the four forbidden three-vertex configurations over all
//! weights in {2, 3}.

use std::collections::BTreeSet;

use cwl::fixtures::forbidden_instance;
use cwl::oriented::ForbiddenKind;
use cwl::{regularity, FieldSpec};

fn main() -> cwl::Result<()> {
    for kind in [ForbiddenKind::D1, ForbiddenKind::D2, ForbiddenKind::D3, ForbiddenKind::D4] {
        // sources are normalized to weight 1, so some tuples coincide
        let mut seen = BTreeSet::new();
        for a in 2..=3 {
            for b in 2..=3 {
                for c in 2..=3 {
                    let d = forbidden_instance(kind, [a, b, c]);
                    if !seen.insert(d.weights().to_vec()) {
                        continue;
                    }
                    let reg = regularity(&d.edge_ideal(), FieldSpec::Rationals)?;
                    println!(
                        "{kind} weights {:?}: reg = {reg}, max weight + 1 = {}",
                        d.weights(),
                        d.max_weight() + 1
                    );
                }
            }
        }
    }
    Ok(())
}
