//! Weight cycling: starting from one modular weight, repeatedly apply the
//! two Hecke operators at `p` and keep every weight that is forced modular
//! because it is the only predicted weight among the implied ones.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::elimination::{eliminate, Verdict};
use crate::error::{Error, Result};
use crate::induction::{implied_weights, in_hecke_range};
use crate::predicted::{enumerate_predicted, is_predicted, PredictedSet};
use crate::tame_types::{OrderThreePerm, TameType};
use crate::weights::WeightClass;

/// Parameters `(a, b, c)` with `a - b > 5`, `b - c > 4`, `a - c < p - 7` such
/// that the type (case A) or its dual twisted by `ε^2` (case B) is
/// `τ((1 2 3), (a+2, b+1, c))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Normalized {
    CaseA(i64, i64, i64),
    CaseB(i64, i64, i64),
}

impl Normalized {
    pub fn params(&self) -> (i64, i64, i64) {
        match *self {
            Normalized::CaseA(a, b, c) | Normalized::CaseB(a, b, c) => (a, b, c),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: WeightClass,
    pub to: WeightClass,
    /// `1` for `T_1`, `2` for `T_2`.
    pub op: u8,
}

/// One application of a Hecke operator during the closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Application {
    pub at: WeightClass,
    pub op: u8,
    pub implied: BTreeSet<WeightClass>,
    /// The implied weights that survive elimination.
    pub surviving: BTreeSet<WeightClass>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Complete,
    Stuck { missing: WeightClass, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclingGraph {
    pub start: WeightClass,
    pub normalized: Normalized,
    pub nodes: BTreeSet<WeightClass>,
    pub edges: Vec<Edge>,
    pub applications: Vec<Application>,
    pub predicted: PredictedSet,
    pub status: Status,
    /// Implied weights outside both ranges of the elimination procedure, for
    /// which its verdict could not be compared with the prediction.
    pub unchecked: usize,
}

fn fits(abc: (i64, i64, i64), p: i64) -> bool {
    let (a, b, c) = abc;
    a - b > 5 && b - c > 4 && a - c < p - 7
}

fn reparametrizations(w: &WeightClass) -> Vec<(i64, i64, i64)> {
    let (x, y, z) = w.xyz();
    let q = w.p().get();
    if x - z < q - 2 {
        vec![(x, y, z)]
    } else {
        vec![(z + q - 2, y, x - q + 2), (z + q - 1, y - 1, x - q + 2)]
    }
}

fn matching(t: &TameType, w: &WeightClass) -> Option<(i64, i64, i64)> {
    let p = w.p();
    let mut found: Vec<(i64, i64, i64)> = reparametrizations(w)
        .into_iter()
        .filter(|&abc| fits(abc, p.get()))
        .filter(|&(a, b, c)| TameType::tau(OrderThreePerm::Xi123, (a + 2, b + 1, c), p).iso(t))
        .map(|(a, b, c)| {
            let canon = WeightClass::gl3(p, a, b, c).expect("parameters are restricted");
            let shift = canon.xyz().2 - c;
            (a + shift, b + shift, c + shift)
        })
        .collect();
    // More than one reparametrization may fit; take the least.
    found.sort_unstable();
    found.into_iter().next()
}

/// Finds the normalization of `t` relative to a strongly generic predicted
/// weight `start`.
pub fn normalize_step1(t: &TameType, start: &WeightClass) -> Result<Normalized> {
    if !start.is_strongly_generic() {
        return Err(Error::Hypothesis(format!("{start} is not 6-generic")));
    }
    normalize(t, start)
}

// Once a type is normalized, every predicted weight is 4-generic and any of
// them may seed the closure, so `cycle` only asks for genericity.
fn normalize(t: &TameType, start: &WeightClass) -> Result<Normalized> {
    if !start.is_generic() {
        return Err(Error::Hypothesis(format!("{start} is not 4-generic")));
    }
    if !is_predicted(start, t)? {
        return Err(Error::Hypothesis(format!("{start} is not a predicted weight of {t}")));
    }
    if let Some((a, b, c)) = matching(t, start) {
        return Ok(Normalized::CaseA(a, b, c));
    }
    if let Some((a, b, c)) = matching(&t.dual_twist(2), &start.dual()) {
        return Ok(Normalized::CaseB(a, b, c));
    }
    Err(Error::Hypothesis(format!(
        "no normalization of {t} matches {start}"
    )))
}

/// Closure of `{start}` under forced modularity. The start must be a
/// 4-generic predicted weight of `t`.
pub fn cycle(t: &TameType, start: &WeightClass) -> Result<CyclingGraph> {
    let normalized = normalize(t, start)?;
    match normalized {
        Normalized::CaseA(..) => run(t, start, normalized),
        Normalized::CaseB(..) => {
            let dual = run(&t.dual_twist(2), &start.dual(), normalized)?;
            let nodes: BTreeSet<WeightClass> = dual.nodes.iter().map(|w| w.dual()).collect();
            let edges = dual
                .edges
                .iter()
                .map(|e| Edge {
                    from: e.from.dual(),
                    to: e.to.dual(),
                    op: 3 - e.op,
                })
                .collect();
            let applications = dual
                .applications
                .iter()
                .map(|a| Application {
                    at: a.at.dual(),
                    op: 3 - a.op,
                    implied: a.implied.iter().map(|w| w.dual()).collect(),
                    surviving: a.surviving.iter().map(|w| w.dual()).collect(),
                })
                .collect();
            let predicted = enumerate_predicted(t)?;
            let status = status_of(&nodes, &predicted);
            Ok(CyclingGraph {
                start: *start,
                normalized,
                nodes,
                edges,
                applications,
                predicted,
                status,
                unchecked: dual.unchecked,
            })
        }
    }
}

fn status_of(nodes: &BTreeSet<WeightClass>, predicted: &PredictedSet) -> Status {
    // Nodes are predicted by construction, so only missing weights can occur.
    match predicted.weights.iter().find(|w| !nodes.contains(w)) {
        None => Status::Complete,
        Some(&w) => Status::Stuck {
            missing: w,
            reason: "no Hecke operator forces this weight".into(),
        },
    }
}

fn run(t: &TameType, start: &WeightClass, normalized: Normalized) -> Result<CyclingGraph> {
    let predicted = enumerate_predicted(t)?;
    let mut nodes = BTreeSet::from([*start]);
    let mut frontier = BTreeSet::from([*start]);
    let mut edges = Vec::new();
    let mut applications = Vec::new();
    let mut unchecked = 0;
    while let Some(w) = frontier.pop_first() {
        if !in_hecke_range(&w) {
            continue;
        }
        for op in 1..=2u8 {
            let implied = implied_weights(&w, op as usize)?;
            let mut surviving = BTreeSet::new();
            for v in &implied {
                let predicted_here = is_predicted(v, t)?;
                match eliminate(v, t) {
                    Ok(report) => {
                        if (report.verdict == Verdict::Consistent) != predicted_here {
                            return Err(Error::Verification(format!(
                                "elimination and prediction disagree on {v} for {t}"
                            )));
                        }
                    }
                    Err(Error::Unsupported(_)) => unchecked += 1,
                    Err(e) => return Err(e),
                }
                if predicted_here {
                    surviving.insert(*v);
                }
            }
            if surviving.len() == 1 {
                let to = *surviving.first().unwrap();
                edges.push(Edge { from: w, to, op });
                if nodes.insert(to) {
                    frontier.insert(to);
                }
            }
            applications.push(Application {
                at: w,
                op,
                implied,
                surviving,
            });
        }
    }
    let status = status_of(&nodes, &predicted);
    Ok(CyclingGraph {
        start: *start,
        normalized,
        nodes,
        edges,
        applications,
        predicted,
        status,
        unchecked,
    })
}

/// `lower`, `shadow` or `upper`.
pub fn node_kind(w: &WeightClass, predicted: &PredictedSet) -> &'static str {
    match w.alcove() {
        Ok(a) if a.in_lower_closure() => "lower",
        _ => match w.shadow() {
            Ok(s) if predicted.contains(&s) => "shadow",
            _ => "upper",
        },
    }
}

/// Graphviz rendering. Nodes are listed in canonical order and edges sorted,
/// so equal graphs give identical text.
pub fn emit_dot(g: &CyclingGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph cycling {\n");
    match &g.status {
        Status::Complete => out.push_str("  // status: Complete\n"),
        Status::Stuck { missing, reason } => {
            let _ = writeln!(out, "  // status: Stuck at {missing}: {reason}");
        }
    }
    let _ = writeln!(out, "  // start: {}", g.start);
    for w in &g.nodes {
        let kind = node_kind(w, &g.predicted);
        let shape = match kind {
            "lower" => "box",
            "shadow" => "diamond",
            _ => "ellipse",
        };
        let _ = writeln!(out, "  \"{w}\" [label=\"{w}\", group=\"{kind}\", shape={shape}];");
    }
    let mut edges = g.edges.clone();
    edges.sort();
    edges.dedup();
    for e in &edges {
        let _ = writeln!(out, "  \"{}\" -> \"{}\" [label=\"T{}\"];", e.from, e.to, e.op);
    }
    out.push_str("}\n");
    out
}
