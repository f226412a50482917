//! End-to-end runs across modules at a fixed example.

use std::collections::BTreeSet;

use gl3_serre::cycling::{cycle, emit_dot, normalize_step1, Normalized, Status};
use gl3_serre::elimination::{eliminate, Verdict};
use gl3_serre::predicted::{enumerate_predicted, nine_weight_table};
use gl3_serre::{OrderThreePerm, Prime, TameType, WeightClass};

fn setup() -> (Prime, TameType) {
    let p = Prime::new(29).unwrap();
    (p, TameType::tau(OrderThreePerm::Xi123, (17, 9, 0), p))
}

#[test]
fn predicted_weights_survive_elimination_where_supported() {
    let (_, t) = setup();
    let set = enumerate_predicted(&t).unwrap();
    assert_eq!(set.len(), 9);
    for w in &set.weights {
        if let Ok(r) = eliminate(w, &t) {
            assert_eq!(r.verdict, Verdict::Consistent, "{w}");
        }
    }
}

#[test]
fn cycling_reaches_the_table_from_every_start() {
    let (p, t) = setup();
    let table = nine_weight_table((15, 8, 0), p).unwrap();
    assert_eq!(enumerate_predicted(&t).unwrap().weights, table.weights);
    for start in &table.weights {
        let g = cycle(&t, start).unwrap();
        assert_eq!(g.status, Status::Complete, "{start}");
        assert_eq!(g.nodes, table.weights);
        assert_eq!(g.unchecked, 0);
    }
}

#[test]
fn dual_problem_gives_dual_graph() {
    let (_, t) = setup();
    let start = WeightClass::gl3(t.p(), 15, 8, 0).unwrap();
    assert_eq!(normalize_step1(&t, &start).unwrap(), Normalized::CaseA(15, 8, 0));
    let g = cycle(&t, &start).unwrap();
    let h = cycle(&t.dual_twist(2), &start.dual()).unwrap();
    assert!(matches!(h.normalized, Normalized::CaseB(..)));
    let dual_edges: BTreeSet<_> = g.edges.iter().map(|e| (e.from.dual(), e.to.dual(), 3 - e.op)).collect();
    let edges: BTreeSet<_> = h.edges.iter().map(|e| (e.from, e.to, e.op)).collect();
    assert_eq!(dual_edges, edges);
}

#[test]
fn dot_output_is_stable() {
    let (_, t) = setup();
    let start = WeightClass::gl3(t.p(), 15, 8, 0).unwrap();
    let a = emit_dot(&cycle(&t, &start).unwrap());
    let b = emit_dot(&cycle(&t, &start).unwrap());
    assert_eq!(a, b);
    assert_eq!(a.matches("[label=\"F(").count(), 9);
    assert!(a.matches("label=\"T").count() >= 9);
    assert!(a.contains("// status: Complete"));
}
