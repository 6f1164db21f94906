//! Zero-energy sectors of the hard-core model against independence-complex
//! homology computed by the homology engine.

use proptest::prelude::*;
use qgadget::catalog::{build_named, CATALOG};
use qgadget::register::triangle_graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use susy::*;
use topo::complex::full_clique_complex;
use topo::{homology_report, Exec, Graph, Limits};

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.1..0.8);
    let mut g = Graph::with_vertices(n);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// β̃_{p−1} of I(g) from the homology engine, listed by p.
fn engine_shifted(g: &Graph) -> Vec<usize> {
    let k = full_clique_complex(&g.complement(), &Limits::default(), Exec::Parallel).unwrap();
    let mut v = vec![0];
    v.extend(homology_report(&k, Exec::Parallel).unwrap().betti_reduced);
    v
}

fn assert_correspondence(g: &Graph) {
    let r = susy_check(g, DEFAULT_STATE_CAP, Exec::Parallel).unwrap();
    assert!(r.forms_agree, "hopping and boundary forms differ");
    assert!(r.matches_homology);
    let mut want = engine_shifted(g);
    want.resize(r.groundspace_dims.len(), 0);
    assert_eq!(r.groundspace_dims, want);
}

#[test]
fn single_triangle() {
    let g = triangle_graph(1).unwrap();
    let s = Sectors::new(&g, DEFAULT_STATE_CAP, Exec::Sequential).unwrap();
    assert_eq!(s.dims(), vec![1, 3]);
    // the vacuum pairs with the uniform one-fermion state
    assert_eq!(hopping_form(&g, &s, 0).to_dense(), vec![vec![3]]);
    let h1 = hopping_form(&g, &s, 1);
    assert_eq!(h1.to_dense(), vec![vec![1; 3]; 3]);
    assert_eq!(h1.quadratic_form(&[1, 1, 1]), 9);
    assert_eq!(h1.kernel_dim(), 2);
    assert_eq!(susy_groundspace_dims(&g, DEFAULT_STATE_CAP, Exec::Sequential).unwrap(), vec![0, 2]);
}

#[test]
fn single_vertex_is_one_doublet() {
    let g = Graph::with_vertices(1);
    assert_eq!(susy_groundspace_dims(&g, DEFAULT_STATE_CAP, Exec::Sequential).unwrap(), vec![0, 0]);
}

#[test]
fn qubit_registers() {
    for n in 1..=4 {
        let g = triangle_graph(n).unwrap();
        let dims = susy_groundspace_dims(&g, DEFAULT_STATE_CAP, Exec::Parallel).unwrap();
        let mut want = vec![0; n + 1];
        want[n] = 1 << n;
        assert_eq!(dims, want, "n = {n}");
        assert_correspondence(&g);
    }
}

#[test]
fn classical_gadget_sector() {
    let g = build_named("classical-00").unwrap().to_graph().unwrap();
    assert_eq!(susy_groundspace_dims(&g, DEFAULT_STATE_CAP, Exec::Parallel).unwrap()[2], 3);
}

#[test]
fn shipped_gadgets() {
    for name in CATALOG {
        let g = build_named(name).unwrap().to_graph().unwrap();
        assert_correspondence(&g);
    }
}

#[test]
fn random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for _ in 0..60 {
        assert_correspondence(&random_graph(&mut rng, 12));
    }
}

fn dense(cols: &[Vec<(u32, i64)>], rows: usize) -> Vec<Vec<i128>> {
    let mut m = vec![vec![0i128; cols.len()]; rows];
    for (c, col) in cols.iter().enumerate() {
        for &(r, v) in col {
            m[r as usize][c] = v as i128;
        }
    }
    m
}

fn mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect()).collect()
}

fn transpose(a: &[Vec<i128>], cols: usize) -> Vec<Vec<i128>> {
    (0..cols).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

fn trace(a: &[Vec<i128>]) -> i128 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

#[test]
fn nonzero_spectra_pair_up() {
    // Q†Q on sector p and QQ† on sector p−1 share their nonzero spectrum:
    // equal traces of every power up to the sector size pin it down
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..25 {
        let g = random_graph(&mut rng, 8);
        let s = Sectors::new(&g, DEFAULT_STATE_CAP, Exec::Sequential).unwrap();
        let dims = s.dims();
        for p in 1..dims.len() {
            let d = dense(&s.supercharge(p), dims[p - 1]);
            let dt = transpose(&d, dims[p]);
            let (up, down) = (mul(&dt, &d), mul(&d, &dt));
            let (mut a, mut b) = (up.clone(), down.clone());
            for _ in 0..dims[p].min(dims[p - 1]).min(6) {
                assert_eq!(trace(&a), trace(&b));
                a = mul(&a, &up);
                b = mul(&b, &down);
            }
        }
    }
}

#[test]
fn state_cap_is_enforced() {
    let g = Graph::with_vertices(12);
    assert!(matches!(Sectors::new(&g, 100, Exec::Sequential), Err(SusyError::Resource { states: 4096, cap: 100 })));
}

#[test]
fn report_json_shape() {
    let r = susy_check(&triangle_graph(2).unwrap(), DEFAULT_STATE_CAP, Exec::Parallel).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["sector_dims"], serde_json::json!([1, 6, 9]));
    assert_eq!(v["groundspace_dims"], serde_json::json!([0, 0, 4]));
    assert_eq!(v["matches_homology"], serde_json::json!(true));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hamiltonian_is_positive_semidefinite(seed in any::<u64>(), xs in proptest::collection::vec(-5i64..=5, 64)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 9);
        let s = Sectors::new(&g, DEFAULT_STATE_CAP, Exec::Sequential).unwrap();
        for (p, &dim) in s.dims().iter().enumerate() {
            let h = boundary_form(&s, p);
            prop_assert!(h.is_symmetric());
            prop_assert_eq!(h.kernel_dim(), groundspace_dim(&s, p));
            let x: Vec<i64> = (0..dim).map(|i| xs[i % xs.len()] + (i / xs.len()) as i64).collect();
            prop_assert!(h.quadratic_form(&x) >= 0);
        }
    }

    #[test]
    fn forms_agree_entrywise(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 10);
        let s = Sectors::new(&g, DEFAULT_STATE_CAP, Exec::Sequential).unwrap();
        for p in 0..s.dims().len() {
            prop_assert_eq!(hopping_form(&g, &s, p), boundary_form(&s, p));
        }
    }
}
