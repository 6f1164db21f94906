mod common;

use common::{brute_cliques, dense_rank, jacobi_eigenvalues, oracle_betti, random_graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use topo::laplacian::{laplacian_dense, laplacian_kernel_dim};
use topo::{betti, boundary_matrix, clique_complex, homology_report, independence_complex, Chain, Exec, Limits};

fn full(g: &topo::Graph) -> topo::SimplicialComplex {
    clique_complex(g, 25, &Limits::default(), Exec::Parallel).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn faces_match_brute_force(n in 1u32..11, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let k = full(&g);
        let cl = brute_cliques(&g);
        let f: Vec<usize> = cl[1..].iter().map(Vec::len).collect();
        prop_assert_eq!(k.f_vector(), f);
        for (d, faces) in cl[1..].iter().enumerate() {
            let t = k.faces(d as isize).unwrap();
            let got: Vec<Vec<u32>> = t.iter().map(<[u32]>::to_vec).collect();
            prop_assert_eq!(&got, faces);
        }
    }

    #[test]
    fn flag_by_construction(n in 1u32..12, p in 0.1f64..0.9, seed in any::<u64>()) {
        prop_assert!(full(&random_graph(n, p, seed)).is_flag(Exec::Sequential));
    }

    #[test]
    fn independence_is_clique_of_complement(n in 1u32..11, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let lim = Limits::default();
        let a = independence_complex(&g, 25, &lim, Exec::Sequential).unwrap();
        let b = clique_complex(&g.complement(), 25, &lim, Exec::Parallel).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn boundary_squares_to_zero(n in 2u32..11, p in 0.3f64..0.9, seed in any::<u64>()) {
        let k = full(&random_graph(n, p, seed));
        for d in 1..k.top_dim() {
            let lo = boundary_matrix(&k, d).unwrap().to_dense();
            let hi = boundary_matrix(&k, d + 1).unwrap().to_dense();
            for row in &lo {
                for j in 0..hi[0].len() {
                    let s: i64 = row.iter().zip(&hi).map(|(x, r)| x * r[j]).sum();
                    prop_assert_eq!(s, 0);
                }
            }
        }
    }

    #[test]
    fn ranks_match_dense_oracle(n in 2u32..11, p in 0.2f64..0.9, seed in any::<u64>()) {
        let k = full(&random_graph(n, p, seed));
        for d in 1..=k.top_dim() {
            let m = boundary_matrix(&k, d).unwrap();
            prop_assert_eq!(topo::rank_exact(&m), dense_rank(&m.to_dense()));
        }
    }

    #[test]
    fn betti_matches_smith_oracle(n in 1u32..11, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let r = homology_report(&full(&g), Exec::Parallel).unwrap();
        prop_assert_eq!(r.betti, oracle_betti(&g));
    }

    #[test]
    fn euler_poincare_and_reduced(n in 1u32..12, p in 0.1f64..0.9, seed in any::<u64>()) {
        let k = full(&random_graph(n, p, seed));
        let r = homology_report(&k, Exec::Sequential).unwrap();
        let alt = |v: &[usize]| v.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum::<i64>();
        prop_assert_eq!(alt(&r.f_vector), alt(&r.betti));
        prop_assert_eq!(r.euler_reduced, 1 - r.euler);
        prop_assert_eq!(r.betti_reduced[0] + 1, r.betti[0]);
        prop_assert_eq!(&r.betti_reduced[1..], &r.betti[1..]);
        for d in 0..=k.top_dim() {
            prop_assert_eq!(betti(&k, d, false).unwrap(), r.betti[d as usize]);
            prop_assert_eq!(betti(&k, d, true).unwrap(), r.betti_reduced[d as usize]);
        }
    }

    #[test]
    fn laplacian_kernel_is_betti(n in 1u32..12, p in 0.1f64..0.9, seed in any::<u64>()) {
        let k = full(&random_graph(n, p, seed));
        for d in 0..=k.top_dim() + 1 {
            prop_assert_eq!(laplacian_kernel_dim(&k, d, false).unwrap(), if d > k.top_dim() { 0 } else { betti(&k, d, false).unwrap() });
            if d <= k.top_dim() {
                prop_assert_eq!(laplacian_kernel_dim(&k, d, true).unwrap(), betti(&k, d, true).unwrap());
            }
        }
    }

    #[test]
    fn window_betti_matches_full(n in 1u32..11, p in 0.2f64..0.9, seed in any::<u64>()) {
        let g = random_graph(n, p, seed);
        let r = homology_report(&full(&g), Exec::Parallel).unwrap();
        for (d, &b) in r.betti.iter().enumerate() {
            prop_assert_eq!(topo::homology::clique_betti(&g, d, false, Exec::Sequential), b);
            prop_assert_eq!(topo::homology::clique_betti(&g, d, true, Exec::Parallel), r.betti_reduced[d]);
        }
    }

    #[test]
    fn membership_witness_has_right_boundary(n in 3u32..10, p in 0.4f64..0.9, seed in any::<u64>(), pick in any::<u64>()) {
        let k = full(&random_graph(n, p, seed));
        prop_assume!(k.top_dim() >= 1);
        // boundary of a random combination of 1- and 2-faces' boundaries
        let faces = k.faces(1).unwrap();
        let s = faces.get((pick as usize) % faces.len()).to_vec();
        let c = Chain::simplex(s).boundary();
        let psi = topo::solve_boundary_membership(&k, &c).unwrap().unwrap();
        prop_assert_eq!(psi.boundary(), c);
    }

    #[test]
    fn wedge_graded_antisymmetry(a in proptest::collection::btree_set(0u32..12, 1..4), b in proptest::collection::btree_set(12u32..24, 1..4)) {
        let sa = Chain::simplex(a.iter().copied().collect());
        let sb = Chain::simplex(b.iter().copied().collect());
        let (p, q) = (a.len() - 1, b.len() - 1);
        let sign = if ((p + 1) * (q + 1)) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(sa.wedge(&sb), sb.wedge(&sa).scale_int(sign));
    }
}

#[test]
fn complete_graph_f_vector_is_binomial() {
    for n in 1..9u32 {
        let mut g = topo::Graph::with_vertices(n as usize);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        let f = full(&g).f_vector();
        let mut binom = vec![n as usize];
        for k in 1..n as usize {
            binom.push(binom[k - 1] * (n as usize - k) / (k + 1));
        }
        assert_eq!(f, binom);
    }
}

#[test]
fn simplex_reduced_laplacian_spectrum() {
    // full simplex on n+1 vertices: reduced L_0 = (n+1)·I
    for n in 1..9u32 {
        let g = topo::Graph::with_vertices(n as usize + 1).complement();
        let k = full(&g);
        let est = topo::laplacian::laplacian_min_eigenvalue_estimate(&k, 0, true, &Limits::default()).unwrap().unwrap();
        assert_eq!(est.zero_modes, 0);
        assert!((est.min_nonzero.unwrap() - (n + 1) as f64).abs() < 1e-9);
        let dense = laplacian_dense(&k, 0, true).unwrap();
        let rows: Vec<Vec<f64>> = (0..dense.nrows()).map(|i| dense.row(i).iter().copied().collect()).collect();
        for ev in jacobi_eigenvalues(&rows) {
            assert!((ev - (n + 1) as f64).abs() < 1e-9);
        }
    }
}

#[test]
fn eigen_estimate_agrees_with_jacobi() {
    for seed in 0..6 {
        let k = full(&random_graph(9, 0.5, seed));
        for d in 0..=k.top_dim() {
            let Some(est) = topo::laplacian::laplacian_min_eigenvalue_estimate(&k, d, false, &Limits::default()).unwrap() else { continue };
            let dense = laplacian_dense(&k, d, false).unwrap();
            let rows: Vec<Vec<f64>> = (0..dense.nrows()).map(|i| dense.row(i).iter().copied().collect()).collect();
            let ev = jacobi_eigenvalues(&rows);
            let zeros = ev.iter().filter(|x| x.abs() < 1e-7).count();
            assert_eq!(zeros, est.zero_modes);
            assert_eq!(zeros, betti(&k, d, false).unwrap());
            let gap = ev.iter().copied().find(|x| *x > 1e-7);
            match (gap, est.min_nonzero) {
                (Some(a), Some(b)) => assert!((a - b).abs() < 1e-6),
                (None, None) => {}
                other => panic!("mismatch {other:?}"),
            }
        }
    }
}

#[test]
fn disconnected_complex_has_two_zero_modes() {
    let g = topo::Graph::from_edges(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
    let k = full(&g);
    assert_eq!(laplacian_kernel_dim(&k, 0, false).unwrap(), 2);
    assert_eq!(betti(&k, 0, false).unwrap(), 2);
}

#[test]
fn rational_chain_membership() {
    let g = topo::Graph::with_vertices(3).complement();
    let k = full(&g);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let c = Chain::simplex(vec![0, 1, 2]).boundary().scale(&half);
    let psi = topo::solve_boundary_membership(&k, &c).unwrap().unwrap();
    assert_eq!(psi, Chain::simplex(vec![0, 1, 2]).scale(&half));
}
