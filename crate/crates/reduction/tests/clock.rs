mod common;

use qgadget::IntState;
use reduction::{clock_projectors, sparse_projectors, Circuit, ClockOptions, ClockPairs, ReductionError, SatInstance};

fn multiset(inst: &SatInstance) -> Vec<(String, Vec<usize>, IntState)> {
    let mut v: Vec<_> = inst.terms.iter().map(|t| (t.provenance.clone(), t.qubits.clone(), t.state.clone())).collect();
    v.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
    v
}

fn expect(rows: &[(&str, &[usize], &str)]) -> Vec<(String, Vec<usize>, IntState)> {
    let mut v: Vec<_> = rows.iter().map(|(p, q, s)| (p.to_string(), q.to_vec(), IntState::parse(s).unwrap())).collect();
    v.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
    v
}

#[test]
fn one_gate_circuit_has_no_pair_terms() {
    let c = Circuit::parse("qubits 2\nwitness 1\ncnot 1 0\n").unwrap();
    let inst = clock_projectors(&c, ClockOptions::default()).unwrap();
    assert_eq!(inst.n, 4);
    let want = expect(&[
        ("clock1", &[2, 3], "|00>"),
        ("clock2", &[2, 3], "|11>"),
        ("prop", &[2, 3, 1, 0], "-|0100> + |1000>"),
        ("prop", &[2, 3, 1, 0], "-|0101> + |1001>"),
        ("prop", &[2, 3, 1, 0], "-|0110> + |1011>"),
        ("prop", &[2, 3, 1, 0], "-|0111> + |1010>"),
        ("in", &[0, 2, 3], "|101>"),
        ("out", &[0, 2, 3], "|110>"),
    ]);
    assert_eq!(multiset(&inst), want);
}

#[test]
fn two_gate_term_multiset_by_hand() {
    let c = Circuit::parse("qubits 2\nwitness 1\ncnot 0 1\npyth 1\n").unwrap();
    let inst = clock_projectors(&c, ClockOptions::default()).unwrap();
    let p = &[2usize, 3, 4, 5][..];
    let want = expect(&[
        ("clock1", &[2, 3], "|00>"),
        ("clock2", &[4, 5], "|11>"),
        ("clock3", p, "|0101>"),
        ("clock3", p, "|0110>"),
        ("clock3", p, "|1001>"),
        ("clock3", p, "|1010>"),
        ("clock4", p, "|0111>"),
        ("clock4", p, "|1011>"),
        ("clock4+clock5", p, "|0011>"),
        ("clock5", p, "|0001>"),
        ("clock5", p, "|0010>"),
        ("clock6", p, "|1100>"),
        ("prop", &[2, 3, 0, 1], "-|0100> + |1000>"),
        ("prop", &[2, 3, 0, 1], "-|0101> + |1001>"),
        ("prop", &[2, 3, 0, 1], "-|0110> + |1011>"),
        ("prop", &[2, 3, 0, 1], "-|0111> + |1010>"),
        ("prop", &[4, 5, 1], "-5|010> + 3|100> - 4|101>"),
        ("prop", &[4, 5, 1], "-5|011> + 4|100> + 3|101>"),
        ("prop'", p, "|1000> - |1101>"),
        ("in", &[0, 2, 3], "|101>"),
        ("out", &[0, 4, 5], "|110>"),
    ]);
    assert_eq!(multiset(&inst), want);
    assert_eq!(inst.locality(), 4);
}

#[test]
fn identity_gates_only_advance_the_clock() {
    let c = Circuit::parse("qubits 1\nid 0\n").unwrap();
    let inst = clock_projectors(&c, ClockOptions::default()).unwrap();
    let prop: Vec<_> = inst.terms.iter().filter(|t| t.provenance == "prop").collect();
    assert_eq!(prop.len(), 1);
    assert_eq!(prop[0].qubits, vec![1, 2]);
    assert_eq!(prop[0].state, IntState::parse("|01> - |10>").unwrap());
}

#[test]
fn pair_policies_differ_only_in_reach() {
    let c = Circuit::parse("qubits 2\ncnot 0 1\ncnot 1 0\ncnot 0 1\n").unwrap();
    let all = clock_projectors(&c, ClockOptions::default()).unwrap();
    let adj = clock_projectors(&c, ClockOptions { pairs: ClockPairs::Adjacent, relocate_inputs: false }).unwrap();
    let pairwise = |i: &SatInstance| i.terms.iter().filter(|t| t.provenance.starts_with("clock3")).count();
    assert_eq!(pairwise(&all), 3 * 4);
    assert_eq!(pairwise(&adj), 2 * 4);
    assert_eq!(all.terms.len() - adj.terms.len(), 4 + 5);
}

#[test]
fn relocated_input_checks_sit_on_first_use() {
    let c = Circuit::parse("qubits 3\ncnot 0 1\ncnot 1 2\n").unwrap();
    let inst = clock_projectors(&c, ClockOptions::sparse()).unwrap();
    let ins: Vec<_> = inst.terms.iter().filter(|t| t.provenance == "in").map(|t| t.qubits.clone()).collect();
    assert_eq!(ins, vec![vec![0, 3, 4], vec![1, 3, 4], vec![2, 5, 6]]);
}

#[test]
fn empty_circuits_are_rejected() {
    let c = Circuit::parse("qubits 2\n").unwrap();
    assert!(matches!(clock_projectors(&c, ClockOptions::default()), Err(ReductionError::Invalid(_))));
}

#[test]
fn instance_json_round_trips() {
    let c = Circuit::parse("qubits 2\nwitness 1\npyth 0\ncnot 0 1\n").unwrap();
    let inst = sparse_projectors(&c).unwrap();
    let text = inst.to_json();
    assert!(text.contains("\"provenance\""));
    assert_eq!(SatInstance::from_json(&text).unwrap(), inst);
    assert!(SatInstance::from_json(r#"{"n": 1, "terms": [{"provenance": "x", "qubits": [3], "state": {"n": 1, "terms": {"1": 1}}}]}"#).is_err());
}
