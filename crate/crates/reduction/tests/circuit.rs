mod common;

use common::accepting_dimension;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reduction::{nearest_neighbor, sparsify, Circuit, Gate, ReductionError};

fn random_circuit(rng: &mut ChaCha8Rng, max_n: usize, max_gates: usize) -> Circuit {
    let n = rng.random_range(2..=max_n);
    let m = rng.random_range(1..=max_gates);
    let gates = (0..m)
        .map(|_| {
            let a = rng.random_range(0..n);
            if rng.random_bool(0.25) {
                Gate::Pyth { qubit: a }
            } else {
                let b = (a + rng.random_range(1..n)) % n;
                Gate::Cnot { control: a, target: b }
            }
        })
        .collect();
    let witness: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
    Circuit::new(n, witness, vec![rng.random_range(0..n)], gates).unwrap()
}

#[test]
fn parses_the_basic_format() {
    let c = Circuit::parse("qubits 2\nwitness 1\ncnot 0 1\n").unwrap();
    assert_eq!(c.n, 2);
    assert_eq!(c.gates, vec![Gate::Cnot { control: 0, target: 1 }]);
    assert_eq!(c.inputs(), vec![0]);
    assert_eq!(c.outputs, vec![0]);

    let c = Circuit::parse("# rotation only\nqubits 1\npyth 0   # trailing\noutput 0\n").unwrap();
    assert_eq!(c.gates, vec![Gate::Pyth { qubit: 0 }]);
    assert!(c.witness.is_empty());
}

#[test]
fn text_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let c = random_circuit(&mut rng, 5, 6);
        assert_eq!(Circuit::parse(&c.to_text()).unwrap(), c);
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let line = |text: &str| match Circuit::parse(text) {
        Err(ReductionError::Parse { line, .. }) => line,
        other => panic!("expected a parse error, got {other:?}"),
    };
    assert_eq!(line("qubits 2\ncnot 0 2\n"), 2);
    assert_eq!(line("qubits 2\n\nhadamard 0\n"), 3);
    assert_eq!(line("cnot 0 1\n"), 1);
    assert_eq!(line("qubits 2\ncnot 1 1\n"), 2);
    assert_eq!(line("qubits 2\npyth 0 1\n"), 2);
    assert_eq!(line("qubits 2\nwitness x\n"), 2);
    assert_eq!(line("qubits 0\n"), 1);
    assert!(matches!(Circuit::parse("# nothing\n"), Err(ReductionError::Parse { .. })));
}

#[test]
fn nearest_neighbour_circuits_are_untouched() {
    let c = Circuit::parse("qubits 2\ncnot 0 1\ncnot 1 0\npyth 1\n").unwrap();
    assert_eq!(nearest_neighbor(&c), c.gates);
}

#[test]
fn distant_gates_are_wrapped_in_swaps() {
    let c = Circuit::parse("qubits 3\ncnot 0 2\n").unwrap();
    let swap: Vec<Gate> = Gate::swap(0, 1).to_vec();
    let mut want = swap.clone();
    want.push(Gate::Cnot { control: 1, target: 2 });
    want.extend(swap);
    assert_eq!(nearest_neighbor(&c), want);

    let c = Circuit::parse("qubits 4\ncnot 3 0\n").unwrap();
    let out = nearest_neighbor(&c);
    assert_eq!(out.len(), 2 * 3 * 2 + 1);
    assert_eq!(out[6], Gate::Cnot { control: 1, target: 0 });
}

#[test]
fn nearest_neighbour_form_computes_the_same_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let c = random_circuit(&mut rng, 5, 4);
        let nn = Circuit { gates: nearest_neighbor(&c), ..c.clone() };
        assert!(nn.gates.iter().all(|g| g.operands().windows(2).all(|w| w[0].abs_diff(w[1]) == 1)));
        assert_eq!(accepting_dimension(&nn), accepting_dimension(&c));
    }
}

#[test]
fn grid_layout_shape() {
    let c = Circuit::parse("qubits 2\nwitness 1\ncnot 0 1\npyth 1\n").unwrap();
    let s = sparsify(&c);
    assert_eq!((s.rows, s.columns), (2, 2));
    let g = &s.circuit.gates;
    // column 0: the CNOT covers both rows; then swaps bottom row first
    assert_eq!(g[0], Gate::Cnot { control: 0, target: 1 });
    assert_eq!(&g[1..4], &Gate::swap(1, 3));
    assert_eq!(&g[4..7], &Gate::swap(0, 2));
    // column 1: identity on the top row, rotation on the bottom row
    assert_eq!(&g[7..], &[Gate::Id { qubit: 2 }, Gate::Pyth { qubit: 3 }]);
    assert_eq!(s.circuit.witness.iter().copied().collect::<Vec<_>>(), vec![1, 2, 3]);
    assert_eq!(s.circuit.outputs, vec![s.qubit(0, 1)]);
}

#[test]
fn every_grid_qubit_is_in_at_most_seven_gates() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let c = random_circuit(&mut rng, 5, 6);
        let s = sparsify(&c);
        assert!(s.circuit.gate_counts().iter().all(|&k| (1..=7).contains(&k)), "{c:?}");
    }
}

#[test]
fn sparsified_circuits_accept_the_same_witnesses() {
    // dummy qubits are free witnesses, so each contributes a factor of two
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    while checked < 15 {
        let c = random_circuit(&mut rng, 3, 3);
        let s = sparsify(&c);
        if s.circuit.n > 12 {
            continue;
        }
        let dummies = s.circuit.n - c.n;
        assert_eq!(accepting_dimension(&s.circuit), accepting_dimension(&c) << dummies, "{c:?}");
        checked += 1;
    }
}
