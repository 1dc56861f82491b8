//! Per-instance property checks. Each returns an [`Outcome`]; library errors
//! count as failures except size limits, which make the instance inconclusive.

use std::collections::{HashMap, HashSet};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::named::{one_star, square_y};
use crate::graph::{
    add_disjoint_basepoint, enumerate_pointed_homs, find_fold, make_interval, Adjunction, Graph, PointedGraph,
};
use crate::hom::{adjunction_closure, build_hom, build_hom_star, fold_closures, x_homotopy_classes, HomPoset, Multihom};
use crate::loops::{
    cycle_positions, inverse_contraction, loop_component_group_with, loop_concat, loop_concat_at, loop_inverse,
    omega_exp_iso, path_exp_iso, path_graph, rows_adjacent, fiber_homotopy_maps, LoopGraph, TruncatedPath,
};
use crate::par::Execution;
use crate::report::Status;
use crate::topology::{AbelianInvariants, Invariants, SimplicialComplex};

#[derive(Clone, Debug)]
pub(crate) struct Outcome {
    pub status: Status,
    pub violation: Option<String>,
    pub details: Value,
}

impl Outcome {
    fn pass(details: Value) -> Outcome {
        Outcome { status: Status::Pass, violation: None, details }
    }

    fn fail(reason: impl Into<String>, details: Value) -> Outcome {
        Outcome { status: Status::Fail, violation: Some(reason.into()), details }
    }

    fn inconclusive(reason: impl Into<String>, details: Value) -> Outcome {
        Outcome { status: Status::Inconclusive, violation: Some(reason.into()), details }
    }

    pub(crate) fn from_error(e: Error) -> Outcome {
        match e {
            Error::TooLarge(_) | Error::TargetTooLarge(_) => Outcome::inconclusive(e.to_string(), Value::Null),
            _ => Outcome::fail(e.to_string(), Value::Null),
        }
    }
}

fn signature(inv: &Invariants) -> Value {
    json!({ "pi0": inv.pi0, "euler": inv.euler, "h1": inv.h1 })
}

fn complex_signature(c: &SimplicialComplex) -> (usize, i64, AbelianInvariants) {
    (c.components().1, c.euler_characteristic(), c.h1())
}

/// Bijection between `G_*(A∧B, C)` and `G_*(A, C^B)` with both round trips.
pub(crate) fn adjunction(a: &PointedGraph, b: &PointedGraph, c: &PointedGraph) -> Result<Outcome> {
    let adj = Adjunction::new(a, b, c)?;
    let left = enumerate_pointed_homs(&adj.smash.graph, c);
    let right = enumerate_pointed_homs(a, &adj.exp.graph);
    let details = json!({ "smash_maps": left.len(), "exponential_maps": right.len() });
    if left.len() != right.len() {
        return Ok(Outcome::fail("hom sets differ in size", details));
    }
    let right_set: HashSet<&[usize]> = right.iter().map(|f| f.assignment()).collect();
    for f in &left {
        let g = adj.forward(f)?;
        if !right_set.contains(g.assignment()) {
            return Ok(Outcome::fail(format!("forward image of {:?} is not enumerated", f.assignment()), details));
        }
        if adj.backward(&g)? != *f {
            return Ok(Outcome::fail(format!("backward(forward(f)) != f for {:?}", f.assignment()), details));
        }
    }
    for g in &right {
        if adj.forward(&adj.backward(g)?)? != *g {
            return Ok(Outcome::fail(format!("forward(backward(g)) != g for {:?}", g.assignment()), details));
        }
    }
    Ok(Outcome::pass(details))
}

/// `j`, the closure `c`, `j(P) = c(Q)` and matching invariants.
pub(crate) fn adjunction_homotopy(a: &PointedGraph, b: &PointedGraph, c: &PointedGraph) -> Result<Outcome> {
    let ac = adjunction_closure(a, b, c)?;
    let mut details = json!({ "p_elements": ac.p.len(), "q_elements": ac.q.len() });
    if let Err(e) = ac.check() {
        return Ok(Outcome::fail(e, details));
    }
    let (ip, iq) = (ac.p.invariants(false)?, ac.q.invariants(false)?);
    details["p"] = signature(&ip);
    details["q"] = signature(&iq);
    if ip.signature() != iq.signature() {
        return Ok(Outcome::fail("invariants of Hom_*(A∧B,C) and Hom_*(A,C^B) differ", details));
    }
    Ok(Outcome::pass(details))
}

/// Closure maps for the first fold of `g`, and invariants on both sides.
pub(crate) fn fold_invariance(g: &PointedGraph, h: &PointedGraph) -> Result<Outcome> {
    let Some(fold) = find_fold(g) else {
        return Ok(Outcome::fail("G admits no fold", Value::Null));
    };
    let fc = fold_closures(g, fold, h)?;
    let mut details = json!({
        "fold": [g.graph().label(fold.vertex), g.graph().label(fold.onto)],
        "hom_g_h": fc.from_g.len(),
        "hom_folded_h": fc.from_folded.len(),
        "hom_h_g": fc.into_g.len(),
        "hom_h_folded": fc.into_folded.len(),
    });
    if let Err(e) = fc.check() {
        return Ok(Outcome::fail(e, details));
    }
    let pairs = [
        ("source", &fc.from_g, &fc.from_folded),
        ("target", &fc.into_g, &fc.into_folded),
    ];
    for (side, before, after) in pairs {
        let (x, y) = (before.invariants(false)?, after.invariants(false)?);
        details[side] = json!({ "before": signature(&x), "after": signature(&y) });
        if x.signature() != y.signature() {
            return Ok(Outcome::fail(format!("fold changes the invariants on the {side} side"), details));
        }
    }
    Ok(Outcome::pass(details))
}

/// `Hom_*(I_k, G)` for `k = 1..=n`: contractible invariants and a verified
/// collapse certificate.
pub(crate) fn interval_contractible(g: &PointedGraph, n: usize) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut missing = None;
    for k in 1..=n {
        let p = build_hom_star(&make_interval(k), g)?;
        let inv = p.invariants(false)?;
        let faces = p.face_poset()?;
        let cert = faces.collapse_to_point();
        let verified = cert.as_ref().is_some_and(|c| faces.verify(c));
        rows.push(json!({
            "n": k,
            "elements": p.len(),
            "invariants": signature(&inv),
            "certificate_steps": cert.as_ref().map(|c| c.steps.len()),
            "certificate_verified": verified,
        }));
        if !inv.looks_contractible() {
            return Ok(Outcome::fail(format!("Hom_*(I_{k}, G) has non-contractible invariants"), json!(rows)));
        }
        if !verified && missing.is_none() {
            missing = Some(k);
        }
    }
    Ok(match missing {
        Some(k) => Outcome::inconclusive(format!("no collapse certificate for Hom_*(I_{k}, G)"), json!(rows)),
        None => Outcome::pass(json!(rows)),
    })
}

/// `Hom_*(1_*, G^{I_k})`, through the clique complex of looped paths, against
/// `Hom_*(I_k, G)`.
pub(crate) fn path_contractible(g: &PointedGraph, n: usize) -> Result<Outcome> {
    let mut rows = Vec::new();
    for k in 1..=n {
        let pg = path_graph(g, k)?;
        let clique = SimplicialComplex::clique_complex(pg.graph.graph());
        let (pi0, euler, h1) = complex_signature(&clique);
        let direct = build_hom_star(&make_interval(k), g)?.invariants(false)?;
        rows.push(json!({
            "n": k,
            "looped_paths": clique.vertex_count(),
            "path_space": { "pi0": pi0, "euler": euler, "h1": h1 },
            "interval_maps": signature(&direct),
        }));
        let contractible = pi0 == 1 && euler == 1 && h1.is_trivial();
        if !contractible || direct.signature() != (pi0, euler, &h1) {
            return Ok(Outcome::fail(format!("Hom_*(1_*, G^I_{k}) is not contractible"), json!(rows)));
        }
    }
    Ok(Outcome::pass(json!(rows)))
}

/// Components of `Hom_*(G,H)` against ×-homotopy classes of pointed maps.
pub(crate) fn pointcomponent(g: &PointedGraph, h: &PointedGraph) -> Result<Outcome> {
    let p = build_hom_star(g, h)?;
    let skel = p.cell_skeleton()?;
    let (comp, pi0) = skel.complex.components();
    let classes = x_homotopy_classes(g, h);
    let details = json!({ "maps": classes.homs.len(), "classes": classes.count, "pi0": pi0 });
    if classes.count != pi0 {
        return Ok(Outcome::fail("class count differs from the number of components", details));
    }
    let mut class_to_comp = HashMap::new();
    let mut comp_to_class = HashMap::new();
    for (f, &class) in classes.homs.iter().zip(&classes.class_of) {
        let idx = p.index_of(Multihom::from_map(f).sets()).expect("every map is an atom");
        let atom = skel.atoms.binary_search(&idx).expect("atoms are 0-cells");
        let c = comp[atom];
        if *class_to_comp.entry(class).or_insert(c) != c || *comp_to_class.entry(c).or_insert(class) != class {
            return Ok(Outcome::fail(format!("map {:?} sits in the wrong component", f.assignment()), details));
        }
    }
    Ok(Outcome::pass(details))
}

/// `Hom_*(G_*, H_*) = (Hom(G,H))_*` for connected `G` with an edge.
pub(crate) fn pointed_unpointed(g: &Graph, h: &Graph) -> Result<Outcome> {
    let (gs, hs) = (add_disjoint_basepoint(g), add_disjoint_basepoint(h));
    let star = build_hom_star(&gs, &hs)?;
    let plain = build_hom(g, h)?;
    let details = json!({ "pointed": star.len(), "unpointed": plain.len() });
    if star.len() != plain.len() + 1 {
        return Ok(Outcome::fail("element counts do not differ by the added basepoint", details));
    }
    let (n, star_bit) = (g.vertex_count(), 1u64 << h.vertex_count());
    let mut image = vec![None; star.len()];
    let mut extra = None;
    for i in 0..star.len() {
        let sets = &star.sets(i)[..n];
        if sets.iter().all(|&s| s == star_bit) {
            if extra.replace(i).is_some() {
                return Ok(Outcome::fail("two elements collapse onto the basepoint", details));
            }
        } else if sets.iter().any(|&s| s & star_bit != 0) {
            return Ok(Outcome::fail(format!("{} mixes the basepoint with other vertices", star.label(i)), details));
        } else {
            match plain.index_of(sets) {
                Some(j) => image[i] = Some(j),
                None => return Ok(Outcome::fail(format!("{} has no unpointed counterpart", star.label(i)), details)),
            }
        }
    }
    let Some(extra) = extra else {
        return Ok(Outcome::fail("no element maps everything to the basepoint", details));
    };
    for i in 0..star.len() {
        for j in 0..star.len() {
            let expected = match (image[i], image[j]) {
                (Some(a), Some(b)) => plain.le(a, b),
                _ => i == j && i == extra,
            };
            if star.le(i, j) != expected {
                return Ok(Outcome::fail(format!("order differs at ({}, {})", star.label(i), star.label(j)), details));
            }
        }
    }
    Ok(Outcome::pass(details))
}

/// The swap isomorphisms for stages `0..=n`.
pub(crate) fn commute(g: &PointedGraph, t: &PointedGraph, n: usize) -> Result<Outcome> {
    let mut rows = Vec::new();
    for k in 0..=n {
        let omega = omega_exp_iso(g, t, k)?;
        let path = path_exp_iso(g, t, k)?;
        rows.push(json!({ "n": k, "loop_vertices": omega.left.vertex_count(), "path_vertices": path.left.vertex_count() }));
        if !omega.is_inverse_pair() {
            return Ok(Outcome::fail(format!("α and β are not inverse on Ω_{k}"), json!(rows)));
        }
        if !path.is_inverse_pair() {
            return Ok(Outcome::fail(format!("α and β are not inverse on G^I_{k}"), json!(rows)));
        }
    }
    Ok(Outcome::pass(json!(rows)))
}

/// Nonempty cliques of looped vertices, as sorted vertex lists.
fn looped_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let looped: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.is_looped(v)).collect();
    (1..1u64 << looped.len())
        .map(|m| looped.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect::<Vec<_>>())
        .filter(|c| c.iter().all(|&a| c.iter().all(|&b| g.is_adjacent(a, b))))
        .collect()
}

/// The maps and homotopies for every `γ ⊆ γ'`, `v ∈ γ`, stage `0..=n`.
pub(crate) fn sequence_maps(g: &PointedGraph, n: usize) -> Result<Outcome> {
    let cliques = looped_cliques(g.graph());
    let mut checked = 0;
    for gamma in &cliques {
        for gp in cliques.iter().filter(|c| gamma.iter().all(|v| c.contains(v))) {
            for &v in gamma {
                for k in 0..=n {
                    let maps = fiber_homotopy_maps(g, gamma, gp, v, k);
                    let failure = match maps {
                        Ok(m) => m.check().err(),
                        Err(e) => Some(e.to_string()),
                    };
                    if let Some(reason) = failure {
                        return Ok(Outcome::fail(
                            reason,
                            json!({ "gamma": gamma, "gamma_prime": gp, "v": v, "n": k }),
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(Outcome::pass(json!({ "cliques": cliques.len(), "configurations": checked })))
}

/// The worked loop example on the square `y,1,2,3` at bound 10.
pub(crate) fn loop_example(g: &PointedGraph) -> Result<Outcome> {
    let f = TruncatedPath::from_labels(g, &["y", "1", "2", "3", "y"])?;
    let expected_inverse = TruncatedPath::from_labels(g, &["y", "3", "2", "1", "y"])?;
    let inverse = loop_inverse(&f, 4)?;
    let product_word: Vec<&str> = "y,1,2,3,y,y,3,2,1,y,y".split(',').collect();
    let product = loop_concat_at(&loop_inverse(&f, 10)?, &f, 5, 10)?;
    let table = [
        "y,1,2,3,y,y,3,2,1,y,y",
        "y,1,2,3,3,3,3,2,1,y,y",
        "y,1,2,2,2,2,2,2,1,y,y",
        "y,1,1,1,1,1,1,1,1,y,y",
        "y,y,y,y,y,y,y,y,y,y,y",
    ];
    let rows = inverse_contraction(&f, 10)?;
    let table_ok = rows.len() == table.len()
        && rows.iter().zip(table).all(|(r, t)| r.display(g.graph()) == format!("({t})"));
    let adjacent = rows_adjacent(g.graph(), &rows);
    let lg = LoopGraph::new(g, 10)?;
    let comps = lg.components();
    let fw = loop_concat(&f, &loop_inverse(&f, 10)?, 10)?;
    let component = lg.index_of(fw.word()).and_then(|i| comps.component(i));
    let details = json!({
        "inverse": inverse.display(g.graph()),
        "inverse_matches": inverse == expected_inverse,
        "inverse_product": product.display(g.graph()),
        "inverse_product_matches": product == TruncatedPath::from_labels(g, &product_word)?,
        "rows": rows.iter().map(|r| r.display(g.graph())).collect::<Vec<_>>(),
        "table_matches": table_ok,
        "rows_adjacent": adjacent,
        "product_component": component,
    });
    let reason = if inverse != expected_inverse {
        Some("inverse differs from (y,3,2,1,y)".to_string())
    } else if details["inverse_product_matches"] != json!(true) {
        Some("inverse product differs from (y,1,2,3,y,y,3,2,1,y,y)".into())
    } else if !table_ok {
        Some("contraction rows differ from the table".into())
    } else if !adjacent {
        let bad = rows.windows(2).position(|p| !rows_adjacent(g.graph(), p)).unwrap_or(0);
        Some(format!("rows {bad} and {} are not adjacent looped words", bad + 1))
    } else if component != Some(comps.identity()) {
        Some("[f]·[f]⁻¹ is not a looped word in the component of the constant loop".into())
    } else {
        None
    };
    Ok(match reason {
        Some(r) => Outcome::fail(r, details),
        None => Outcome::pass(details),
    })
}

/// `H₁` of `Hom_*(1_*, C'_m)` and the loop group of `C'_m` at `bound`.
pub(crate) fn hom_groups(g: &PointedGraph, bound: usize, exec: Execution) -> Result<Outcome> {
    let Some(pos) = cycle_positions(g) else {
        return Ok(Outcome::fail("graph is not a reflexive cycle with at least four vertices", Value::Null));
    };
    let m = pos.len();
    let h1 = build_hom_star(&one_star(), g)?.invariants(false)?.h1;
    let grp = loop_component_group_with(g, bound, exec)?;
    let windings: Vec<i64> = grp.components.iter().map(|c| c.winding.expect("cycle ambient")).collect();
    let mut expected: Vec<i64> = (-((bound / m) as i64)..=(bound / m) as i64).collect();
    let mut sorted = windings.clone();
    sorted.sort_unstable();
    expected.sort_unstable();

    let lg = LoopGraph::with_execution(g, bound, exec)?;
    let per_word: Vec<(u64, bool)> = exec.map_range(lg.len(), |i| {
        let (mut edges, mut ok) = (0u64, true);
        let w = lg.winding(i);
        lg.for_each_looped_neighbor(i, |nb| {
            edges += 1;
            ok &= Some(crate::loops::winding_of(&pos, nb)) == w;
        });
        (edges, ok)
    });
    let edges: u64 = per_word.iter().map(|p| p.0).sum();
    let edges_ok = per_word.iter().all(|p| p.1);
    let sums_ok = grp.products.iter().all(|&(a, b, c)| windings[a] + windings[b] == windings[c]);
    let details = json!({
        "h1": h1,
        "bound": bound,
        "loop_vertices": grp.loop_vertices,
        "windings": windings,
        "adjacent_pairs_checked": edges,
        "products": grp.products.len(),
        "undefined_pairs": grp.undefined.len(),
    });
    let reason = if h1 != AbelianInvariants::free(1) {
        Some("H₁ of Hom_*(1_*, G) is not Z")
    } else if sorted != expected {
        Some("component windings are not exactly the attainable winding numbers")
    } else if !edges_ok {
        Some("an edge of the loop graph changes the winding number")
    } else if !sums_ok {
        Some("a product does not add winding numbers")
    } else if !grp.laws.holds() {
        Some("group laws fail inside the window")
    } else {
        None
    };
    Ok(match reason {
        Some(r) => Outcome::fail(r, details),
        None => Outcome::pass(details),
    })
}

/// Pointed graphs on `{y,1,2,3}` with a loop at `y`, up to isomorphism.
pub(crate) fn square_targets() -> Vec<PointedGraph> {
    let labels: Vec<String> = square_y(false).graph().labels().to_vec();
    super::instances::pointed_graphs_on(4)
        .into_iter()
        .map(|g| PointedGraph::new(g.graph().relabel(labels.clone()).expect("four labels"), 0).expect("y looped"))
        .collect()
}

/// Does `Hom_*(G,H)` have the invariants of a circle?
pub(crate) fn circle_signature(p: &HomPoset) -> Result<bool> {
    if p.is_empty() {
        return Ok(false);
    }
    let inv = p.invariants(false)?;
    Ok(inv.pi0 == 1 && inv.euler == 0 && inv.h1 == AbelianInvariants::free(1))
}
