//! Combinatorial classification of `I(D)` without touching the Betti engine.

use std::fmt;

use serde::Serialize;

use crate::graph::Chordality;
use crate::monomial::Monomial;
use crate::oriented::WeightedOrientedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremTag {
    CochordalNecessary,
    ForbiddenConfig,
    SinkCharacterization,
    Vplus1Characterization,
    BipartiteEquiv,
    ChordalEquiv,
    StarAllWeights,
    PowerObstruction,
    Unknown,
}

impl TheoremTag {
    pub const ALL: [TheoremTag; 9] = [
        TheoremTag::CochordalNecessary,
        TheoremTag::ForbiddenConfig,
        TheoremTag::SinkCharacterization,
        TheoremTag::Vplus1Characterization,
        TheoremTag::BipartiteEquiv,
        TheoremTag::ChordalEquiv,
        TheoremTag::StarAllWeights,
        TheoremTag::PowerObstruction,
        TheoremTag::Unknown,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremTag::CochordalNecessary => "cochordal-necessary",
            TheoremTag::ForbiddenConfig => "forbidden-config",
            TheoremTag::SinkCharacterization => "sink-characterization",
            TheoremTag::Vplus1Characterization => "vplus1-characterization",
            TheoremTag::BipartiteEquiv => "bipartite-equiv",
            TheoremTag::ChordalEquiv => "chordal-equiv",
            TheoremTag::StarAllWeights => "star-all-weights",
            TheoremTag::PowerObstruction => "power-obstruction",
            TheoremTag::Unknown => "unknown",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of [`classify`]. `value` is present exactly when `decided`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub decided: bool,
    pub value: Option<bool>,
    pub reason: String,
    pub theorem_tag: TheoremTag,
}

impl Certificate {
    fn decided(tag: TheoremTag, value: bool, reason: String) -> Self {
        Certificate {
            decided: true,
            value: Some(value),
            reason,
            theorem_tag: tag,
        }
    }

    fn undecided(tag: TheoremTag, reason: String) -> Self {
        Certificate {
            decided: false,
            value: None,
            reason,
            theorem_tag: tag,
        }
    }
}

fn names(d: &WeightedOrientedGraph, vs: &[usize]) -> String {
    vs.iter().map(|&v| d.name(v)).collect::<Vec<_>>().join(" ")
}

/// Decides componentwise linearity of `I(D)` when a known characterization
/// applies. Checks run cheapest first and the first conclusive one wins.
pub fn classify(d: &WeightedOrientedGraph) -> Certificate {
    let g = d.underlying();
    if let Chordality::NotChordal(cycle) = g.complement().chordality() {
        return Certificate::decided(
            TheoremTag::CochordalNecessary,
            false,
            format!(
                "complement of the underlying graph has the induced cycle {}",
                names(d, &cycle)
            ),
        );
    }

    if let Some(m) = d.forbidden_configurations().first() {
        return Certificate::decided(
            TheoremTag::ForbiddenConfig,
            false,
            format!("induced configuration {} on {}", m.kind, names(d, &m.vertices)),
        );
    }

    let sources = d.sources();
    let all_heavy = (0..d.len())
        .filter(|v| !sources.contains(v))
        .all(|v| d.weight(v) > 1);
    if all_heavy {
        return match d.star_root() {
            Some(Some(r)) => Certificate::decided(
                TheoremTag::StarAllWeights,
                true,
                format!("every arc points at {} and non-sources are heavy", d.name(r)),
            ),
            Some(None) => Certificate::decided(
                TheoremTag::StarAllWeights,
                true,
                "no arcs, the edge ideal is zero".to_string(),
            ),
            None => Certificate::decided(
                TheoremTag::StarAllWeights,
                false,
                "non-sources are heavy but the arcs do not all share one target".to_string(),
            ),
        };
    }

    let v_plus = d.v_plus();
    if d.v_plus_are_sinks() {
        let crowded = (0..d.len())
            .find(|&x| g.neighbors(x).filter(|u| v_plus.contains(u)).count() > 1);
        return match crowded {
            Some(x) => Certificate::decided(
                TheoremTag::SinkCharacterization,
                false,
                format!("heavy vertices are sinks and {} has two heavy neighbours", d.name(x)),
            ),
            None => Certificate::decided(
                TheoremTag::SinkCharacterization,
                true,
                "heavy vertices are sinks, the complement is chordal and no vertex has two heavy neighbours"
                    .to_string(),
            ),
        };
    }

    if v_plus.len() <= 1 {
        let h = d.quadratic_part_graph();
        return match h.complement().chordality() {
            Chordality::NotChordal(cycle) => Certificate::decided(
                TheoremTag::Vplus1Characterization,
                false,
                format!(
                    "one heavy vertex and the complement of the quadratic part has the induced cycle {}",
                    names(d, &cycle)
                ),
            ),
            Chordality::Chordal(_) => Certificate::decided(
                TheoremTag::Vplus1Characterization,
                true,
                "one heavy vertex, the graph and its quadratic part are co-chordal".to_string(),
            ),
        };
    }

    if g.is_bipartite() {
        return Certificate::undecided(
            TheoremTag::BipartiteEquiv,
            "bipartite: linear quotients decide componentwise linearity".to_string(),
        );
    }
    if g.is_chordal() {
        return Certificate::undecided(
            TheoremTag::ChordalEquiv,
            "chordal: linear quotients decide componentwise linearity".to_string(),
        );
    }
    Certificate::undecided(TheoremTag::Unknown, "no characterization applies".to_string())
}

/// A pair of coprime generators of `I(D)` with no third generator supported
/// on their union. It exists exactly when the complement of the underlying
/// graph has an induced 4-cycle, and then no power of `I(D)` is
/// componentwise linear.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerObstruction {
    /// `a-b-c-d-a` is an induced cycle of the complement.
    pub cycle: [usize; 4],
    pub u: Monomial,
    pub v: Monomial,
}

impl PowerObstruction {
    pub fn certificate(&self, d: &WeightedOrientedGraph) -> Certificate {
        Certificate::decided(
            TheoremTag::PowerObstruction,
            false,
            format!(
                "complement has the induced 4-cycle {}, so no power is componentwise linear",
                names(d, &self.cycle)
            ),
        )
    }
}

pub fn power_obstruction(d: &WeightedOrientedGraph) -> Option<PowerObstruction> {
    let [a, b, c, e] = d.underlying().complement().induced_four_cycle()?;
    let ideal = d.edge_ideal();
    let generator_on = |p: usize, q: usize| {
        ideal
            .generators()
            .iter()
            .find(|g| {
                let s: Vec<usize> = g.support().map(|v| v.index()).collect();
                s == [p.min(q), p.max(q)]
            })
            .cloned()
            .expect("the diagonals of a complement 4-cycle are arcs")
    };
    Some(PowerObstruction {
        cycle: [a, b, c, e],
        u: generator_on(a, c),
        v: generator_on(b, e),
    })
}
