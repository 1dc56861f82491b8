//! Named property checks over exhaustive or seeded random instances.
//!
//! Exhaustive checks return one summary report naming the first failing
//! instance; sampled checks return one report per trial. Every failing or
//! inconclusive report embeds its instance, and [`run_instance`] re-runs it.

mod checks;
pub mod instances;

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::named::{reflexive_cycle, square_y};
use crate::graph::{GraphFile, PointedGraph};
use crate::hom::build_hom_star;
use crate::par::Execution;
use crate::report::{Instance, Status, VerificationReport};
use checks::Outcome;
use instances::{instance_rng, pointed_graphs_up_to, random_connected, random_foldable, random_pointed};
use rand::Rng;

/// Registered check names.
pub const CHECKS: [&str; 12] = [
    "adjunction",
    "adjunction-homotopy",
    "pointcomponent",
    "fold-invariance",
    "interval-contractible",
    "path-contractible",
    "commute",
    "loop-example",
    "hom-groups",
    "circle-example",
    "sequence-maps",
    "pointed-unpointed",
];

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest vertex count for generated graphs.
    pub size: Option<usize>,
    pub trials: Option<usize>,
    /// Largest interval length, stage or bound, depending on the check.
    pub n: Option<usize>,
    pub seed: u64,
    pub exec: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            size: None,
            trials: None,
            n: None,
            seed: 42,
            exec: Execution::default(),
        }
    }
}

fn check_name(name: &str) -> Result<&'static str> {
    CHECKS.iter().copied().find(|c| *c == name).ok_or_else(|| Error::UnknownCheck {
        name: name.to_string(),
        available: CHECKS.join(", "),
    })
}

fn instance(graphs: &[&PointedGraph], n: Option<usize>) -> Instance {
    Instance {
        graphs: graphs.iter().map(|g| GraphFile::from_pointed(g)).collect(),
        n,
    }
}

fn describe(inst: &Instance) -> String {
    let graphs: Vec<String> = inst
        .graphs
        .iter()
        .map(|g| {
            let edges: Vec<String> = g.edges.iter().map(|[a, b]| format!("{a}-{b}")).collect();
            match &g.basepoint {
                Some(b) => format!("[{} | {} | *{}]", g.vertices.join(","), edges.join(" "), b),
                None => format!("[{} | {}]", g.vertices.join(","), edges.join(" ")),
            }
        })
        .collect();
    match inst.n {
        Some(n) => format!("{} n={n}", graphs.join(" ")),
        None => graphs.join(" "),
    }
}

fn pointed(inst: &Instance, count: usize) -> Result<Vec<PointedGraph>> {
    if inst.graphs.len() != count {
        return Err(Error::InvalidPath(format!("instance needs {count} graphs, got {}", inst.graphs.len())));
    }
    inst.graphs.iter().map(|g| g.to_pointed()).collect()
}

/// Evaluate one instance of a check.
fn evaluate(name: &str, inst: &Instance, exec: Execution) -> Outcome {
    let run = || -> Result<Outcome> {
        match name {
            "adjunction" => {
                let g = pointed(inst, 3)?;
                checks::adjunction(&g[0], &g[1], &g[2])
            }
            "adjunction-homotopy" => {
                let g = pointed(inst, 3)?;
                checks::adjunction_homotopy(&g[0], &g[1], &g[2])
            }
            "pointcomponent" => {
                let g = pointed(inst, 2)?;
                checks::pointcomponent(&g[0], &g[1])
            }
            "fold-invariance" => {
                let g = pointed(inst, 2)?;
                checks::fold_invariance(&g[0], &g[1])
            }
            "interval-contractible" => checks::interval_contractible(&pointed(inst, 1)?[0], inst.n.unwrap_or(3)),
            "path-contractible" => checks::path_contractible(&pointed(inst, 1)?[0], inst.n.unwrap_or(3)),
            "commute" => {
                let g = pointed(inst, 2)?;
                checks::commute(&g[0], &g[1], inst.n.unwrap_or(3))
            }
            "loop-example" => checks::loop_example(&pointed(inst, 1)?[0]),
            "hom-groups" => checks::hom_groups(&pointed(inst, 1)?[0], inst.n.unwrap_or(12), exec),
            "circle-example" => {
                let g = pointed(inst, 2)?;
                let p = build_hom_star(&g[0], &g[1])?;
                let found = checks::circle_signature(&p)?;
                let details = json!({ "elements": p.len() });
                Ok(if found {
                    Outcome { status: Status::Pass, violation: None, details }
                } else {
                    Outcome {
                        status: Status::Fail,
                        violation: Some("Hom_*(G,H) lacks the invariants of a circle".into()),
                        details,
                    }
                })
            }
            "sequence-maps" => checks::sequence_maps(&pointed(inst, 1)?[0], inst.n.unwrap_or(2)),
            "pointed-unpointed" => {
                if inst.graphs.len() != 2 {
                    return Err(Error::InvalidPath("instance needs 2 graphs".into()));
                }
                checks::pointed_unpointed(&inst.graphs[0].to_graph()?, &inst.graphs[1].to_graph()?)
            }
            _ => unreachable!("names are checked against the registry"),
        }
    };
    run().unwrap_or_else(Outcome::from_error)
}

fn report(name: &str, inst: &Instance, outcome: Outcome) -> VerificationReport {
    let failed = outcome.status != Status::Pass;
    VerificationReport {
        check_name: name.to_string(),
        instance: describe(inst),
        status: outcome.status,
        violation: outcome.violation,
        counterexample: failed.then(|| inst.clone()),
        details: outcome.details,
    }
}

/// Re-run a single embedded instance.
pub fn run_instance(name: &str, inst: &Instance) -> Result<VerificationReport> {
    let name = check_name(name)?;
    Ok(report(name, inst, evaluate(name, inst, Execution::default())))
}

/// One report summarising an exhaustive run.
fn summarize(name: &str, description: String, insts: &[Instance], outcomes: Vec<Outcome>) -> VerificationReport {
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    let (passed, failed, inconclusive) = (count(Status::Pass), count(Status::Fail), count(Status::Inconclusive));
    let first_bad = outcomes
        .iter()
        .position(|o| o.status == Status::Fail)
        .or_else(|| outcomes.iter().position(|o| o.status == Status::Inconclusive));
    let status = if failed > 0 {
        Status::Fail
    } else if inconclusive > 0 {
        Status::Inconclusive
    } else {
        Status::Pass
    };
    let mut details = json!({ "instances": insts.len(), "passed": passed, "failed": failed, "inconclusive": inconclusive });
    let (violation, counterexample) = match first_bad {
        Some(i) => {
            details["first_failure"] = outcomes[i].details.clone();
            (
                outcomes[i].violation.as_ref().map(|v| format!("{v} at {}", describe(&insts[i]))),
                Some(insts[i].clone()),
            )
        }
        None => (None, None),
    };
    VerificationReport {
        check_name: name.to_string(),
        instance: description,
        status,
        violation,
        counterexample,
        details,
    }
}

fn triples(size: usize) -> Vec<Instance> {
    let gs = pointed_graphs_up_to(size);
    let mut out = Vec::with_capacity(gs.len().pow(3));
    for a in &gs {
        for b in &gs {
            for c in &gs {
                out.push(instance(&[a, b, c], None));
            }
        }
    }
    out
}

fn pairs(size: usize, n: Option<usize>) -> Vec<Instance> {
    let gs = pointed_graphs_up_to(size);
    gs.iter().flat_map(|a| gs.iter().map(move |b| instance(&[a, b], n))).collect()
}

/// Run a registered check.
pub fn run_check(name: &str, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let name = check_name(name)?;
    let exec = opts.exec;
    let size = |d: usize| opts.size.unwrap_or(d);
    let trials = |d: usize| opts.trials.unwrap_or(d);
    let sampled = |insts: Vec<Instance>| -> Vec<VerificationReport> {
        let outcomes = exec.map(&insts, |i| evaluate(name, i, Execution::Sequential));
        insts.iter().zip(outcomes).map(|(i, o)| report(name, i, o)).collect()
    };
    let exhaustive = |description: String, insts: Vec<Instance>| -> Vec<VerificationReport> {
        let outcomes = exec.map(&insts, |i| evaluate(name, i, Execution::Sequential));
        vec![summarize(name, description, &insts, outcomes)]
    };
    let random = |t: usize, make: &(dyn Fn(&mut rand_chacha::ChaCha8Rng) -> Instance + Sync)| -> Vec<Instance> {
        (0..t).map(|i| make(&mut instance_rng(opts.seed, i as u64))).collect()
    };

    let reports = match name {
        "adjunction" | "adjunction-homotopy" => {
            let s = size(3);
            let insts = triples(s);
            exhaustive(format!("all {} pointed triples with at most {s} vertices each", insts.len()), insts)
        }
        "commute" => {
            let (s, n) = (size(3), opts.n.unwrap_or(3));
            let insts = pairs(s, Some(n));
            exhaustive(format!("all {} pointed pairs (G,T) with at most {s} vertices, N ≤ {n}", insts.len()), insts)
        }
        "sequence-maps" => {
            let (s, n) = (size(3), opts.n.unwrap_or(2));
            let insts: Vec<Instance> = pointed_graphs_up_to(s).iter().map(|g| instance(&[g], Some(n))).collect();
            exhaustive(format!("all {} pointed graphs with at most {s} vertices, n ≤ {n}", insts.len()), insts)
        }
        "circle-example" => {
            let s = size(4);
            let targets = checks::square_targets();
            let sources = pointed_graphs_up_to(s);
            let insts: Vec<Instance> =
                targets.iter().flat_map(|h| sources.iter().map(move |g| instance(&[g, h], None))).collect();
            let outcomes = exec.map(&insts, |i| evaluate(name, i, Execution::Sequential));
            let found: Vec<usize> = (0..insts.len()).filter(|&i| outcomes[i].status == Status::Pass).collect();
            let errors = outcomes.iter().filter(|o| o.details.is_null()).count();
            let mut details = json!({ "pairs_searched": insts.len(), "circle_pairs": found.len(), "errors": errors });
            let status = if found.is_empty() || errors > 0 { Status::Fail } else { Status::Pass };
            if let Some(&i) = found.first() {
                details["example"] = json!(insts[i]);
                details["example_description"] = json!(describe(&insts[i]));
            }
            vec![VerificationReport {
                check_name: name.into(),
                instance: format!(
                    "{} sources with at most {s} vertices against {} targets on y,1,2,3 looped at y",
                    sources.len(),
                    targets.len()
                ),
                status,
                violation: (status == Status::Fail).then(|| "no pair with circle invariants, or a pair errored".into()),
                counterexample: None,
                details,
            }]
        }
        "loop-example" => sampled(vec![instance(&[&square_y(false)], None), instance(&[&square_y(true)], None)]),
        "hom-groups" => {
            let inst = instance(&[&reflexive_cycle(size(5))], Some(opts.n.unwrap_or(12)));
            let outcome = evaluate(name, &inst, exec);
            vec![report(name, &inst, outcome)]
        }
        "fold-invariance" => {
            let s = size(4);
            sampled(random(trials(50), &|rng| {
                let g = random_foldable(rng, s);
                let k = rng.gen_range(1..=s);
                let h = random_pointed(rng, k);
                instance(&[&g, &h], None)
            }))
        }
        "pointcomponent" => {
            let s = size(4);
            sampled(random(trials(50), &|rng| {
                let (a, b) = (rng.gen_range(1..=s), rng.gen_range(1..=s));
                let g = random_pointed(rng, a);
                let h = random_pointed(rng, b);
                instance(&[&g, &h], None)
            }))
        }
        "interval-contractible" | "path-contractible" => {
            let (s, n) = (size(4), opts.n.unwrap_or(3));
            sampled(random(trials(25), &|rng| {
                let k = rng.gen_range(1..=s);
                instance(&[&random_pointed(rng, k)], Some(n))
            }))
        }
        "pointed-unpointed" => {
            let s = size(3);
            sampled(random(trials(50), &|rng| {
                let g = random_connected(rng, s);
                let k = rng.gen_range(1..=s);
                let h = crate::verify::instances::random_graph(rng, k);
                Instance {
                    graphs: vec![GraphFile::from_graph(&g), GraphFile::from_graph(&h)],
                    n: None,
                }
            }))
        }
        _ => unreachable!("names are checked against the registry"),
    };
    Ok(reports)
}
