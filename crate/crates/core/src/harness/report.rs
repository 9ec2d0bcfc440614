use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::betti::FieldSpec;
use crate::budget::Budget;
use crate::classifier::{classify, power_obstruction, Certificate};
use crate::deciders::{
    self, CheckAll, DegreeCheck, ImplicationViolation, LinearityMethod, SplitTree,
};
use crate::error::Result;
use crate::monomial::{MonomialIdeal, VarNames};
use crate::oriented::{parse_oriented_graph, OrientedGraphJson, WeightedOrientedGraph};

/// Wall-clock milliseconds spent per phase.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Timings {
    pub classify: f64,
    pub componentwise: f64,
    pub linear_quotients: f64,
    pub vertex_splittable: f64,
    pub regularity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EngineReport {
    pub cl: bool,
    pub cl_degrees: Vec<DegreeCheck>,
    pub lq: bool,
    pub lq_order: Option<Vec<String>>,
    pub vs: bool,
    pub vs_tree: Option<Value>,
    pub regularity: Option<u32>,
    pub max_gen_degree: Option<u32>,
}

impl EngineReport {
    pub fn new(ideal: &MonomialIdeal, names: &VarNames, r: &CheckAll) -> Self {
        EngineReport {
            cl: r.is_cl(),
            cl_degrees: r.cl.degrees.clone(),
            lq: r.is_lq(),
            lq_order: r
                .lq
                .as_ref()
                .map(|o| o.monomials(ideal).map(|m| names.render(m)).collect()),
            vs: r.is_vs(),
            vs_tree: r.vs.as_ref().map(|t| tree_json(t, names)),
            regularity: r.regularity,
            max_gen_degree: r.max_gen_degree,
        }
    }
}

/// JSON form of a split tree with variables shown by name.
pub fn tree_json(t: &SplitTree, names: &VarNames) -> Value {
    match t {
        SplitTree::Zero => json!({ "leaf": "zero" }),
        SplitTree::Unit => json!({ "leaf": "unit" }),
        SplitTree::Principal(m) => json!({ "leaf": "principal", "generator": names.render(m) }),
        SplitTree::Split {
            variable,
            left,
            right,
        } => json!({
            "split": names.name(*variable),
            "left": tree_json(left, names),
            "right": tree_json(right, names),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionReport {
    pub cycle: Vec<String>,
    pub u: String,
    pub v: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub input: OrientedGraphJson,
    pub ideal: Vec<String>,
    pub field: FieldSpec,
    pub certificate: Certificate,
    pub power_obstruction: Option<ObstructionReport>,
    pub engine: EngineReport,
    /// Classifier and engine agree whenever the classifier decided.
    pub classifier_agrees: bool,
    /// `cl = lq = vs`.
    pub conjecture_consistent: bool,
    pub implication_violation: Option<ImplicationViolation>,
    pub timings_ms: Timings,
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

/// Classifies `d` and runs every exact decider on `I(D)`.
pub fn check_graph(d: &WeightedOrientedGraph, field: FieldSpec, budget: &Budget) -> Result<ClassificationReport> {
    let names = d.var_names();
    let ideal = d.edge_ideal();
    let mut timings = Timings::default();

    let t = Instant::now();
    let certificate = classify(d);
    let obstruction = power_obstruction(d).map(|w| ObstructionReport {
        cycle: w.cycle.iter().map(|&v| d.name(v).to_string()).collect(),
        u: names.render(&w.u),
        v: names.render(&w.v),
    });
    timings.classify = millis(t);

    let t = Instant::now();
    let cl = deciders::is_componentwise_linear_within(&ideal, field, budget)?;
    timings.componentwise = millis(t);
    let t = Instant::now();
    let lq = deciders::is_linear_quotient_within(&ideal, budget)?;
    timings.linear_quotients = millis(t);
    let t = Instant::now();
    let vs = deciders::is_vertex_splittable_within(&ideal, budget)?;
    timings.vertex_splittable = millis(t);
    let t = Instant::now();
    let regularity = deciders::regularity_or_none(&ideal, field, budget)?;
    timings.regularity = millis(t);

    let all = CheckAll::assemble(&ideal, cl, lq, vs, regularity);
    Ok(ClassificationReport {
        input: d.to_json(),
        ideal: names.render_ideal(&ideal),
        field,
        classifier_agrees: certificate.value.is_none_or(|v| v == all.is_cl()),
        certificate,
        power_obstruction: obstruction,
        conjecture_consistent: all.conjecture_consistent(),
        implication_violation: all.implication_violation,
        engine: EngineReport::new(&ideal, &names, &all),
        timings_ms: timings,
    })
}

/// Parses a weighted oriented graph (JSON or text form) and checks it.
pub fn run_check(input: &str, field: FieldSpec, budget: &Budget) -> Result<ClassificationReport> {
    let d = parse_oriented_graph(input)?;
    check_graph(&d, field, budget)
}

impl ClassificationReport {
    pub fn to_pretty(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut s = String::new();
        s.push_str(&format!("ideal        ({})\n", self.ideal.join(", ")));
        s.push_str(&format!("field        {}\n", self.field));
        let verdict = match self.certificate.value {
            Some(true) => "componentwise linear",
            Some(false) => "not componentwise linear",
            None => "undecided",
        };
        s.push_str(&format!(
            "classifier   {verdict} [{}]\n             {}\n",
            self.certificate.theorem_tag, self.certificate.reason
        ));
        if let Some(o) = &self.power_obstruction {
            s.push_str(&format!(
                "obstruction  {} and {} on complement cycle {}\n",
                o.u,
                o.v,
                o.cycle.join(" ")
            ));
        }
        let e = &self.engine;
        s.push_str(&format!("cl           {}\n", yn(e.cl)));
        for d in &e.cl_degrees {
            s.push_str(&format!(
                "  degree {:<3} {:>4} generators  {:<4} via {}\n",
                d.degree,
                d.generators,
                yn(d.linear),
                match d.method {
                    LinearityMethod::LinearQuotients => "linear quotients",
                    LinearityMethod::BettiNumbers => "Betti numbers",
                }
            ));
        }
        s.push_str(&format!("lq           {}", yn(e.lq)));
        if let Some(o) = e.lq_order.as_ref().filter(|o| !o.is_empty()) {
            s.push_str(&format!("  order {}", o.join(" < ")));
        }
        s.push('\n');
        s.push_str(&format!("vs           {}\n", yn(e.vs)));
        let opt = |x: Option<u32>| x.map_or("-".to_string(), |v| v.to_string());
        s.push_str(&format!(
            "regularity   {}  (max generator degree {})\n",
            opt(e.regularity),
            opt(e.max_gen_degree)
        ));
        s.push_str(&format!(
            "consistent   {}  classifier agrees {}\n",
            yn(self.conjecture_consistent),
            yn(self.classifier_agrees)
        ));
        if let Some(v) = self.implication_violation {
            s.push_str(&format!("VIOLATION    {v:?}\n"));
        }
        s
    }
}
