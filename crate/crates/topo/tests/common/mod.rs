//! Independent reference implementations used only by tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topo::Graph;

pub fn random_graph(n: u32, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(n as usize);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Cliques by brute force over vertex subsets, grouped by size.
pub fn brute_cliques(g: &Graph) -> Vec<Vec<Vec<u32>>> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let mut out: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n + 1];
    for mask in 1u32..(1 << n) {
        let vs: Vec<u32> = (0..n as u32).filter(|i| mask >> i & 1 == 1).collect();
        let ok = vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if ok {
            out[vs.len()].push(vs);
        }
    }
    while out.last().is_some_and(Vec::is_empty) {
        out.pop();
    }
    for faces in out.iter_mut() {
        faces.sort();
    }
    out
}

/// Rank over ℚ by textbook Gaussian elimination on a dense matrix.
pub fn dense_rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for k in c..cols {
                    let t = &f * &a[rank][k];
                    a[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Nonzero invariant factors of an integer matrix (Smith normal form).
pub fn smith_diagonal(m: &[Vec<i64>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for r in a.iter_mut() {
            r.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = &a[i][t] / &a[t][t];
            if !q.is_zero() {
                for j in t..cols {
                    let s = &q * &a[t][j];
                    a[i][j] -= s;
                }
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            let q = &a[t][j] / &a[t][t];
            if !q.is_zero() {
                for i in t..rows {
                    let s = &q * &a[i][t];
                    a[i][j] -= s;
                }
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue; // remainders are smaller; repeat with a new pivot
        }
        // divisibility of the rest of the block by the pivot
        let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| {
            !(&a[i][j] % &a[t][t]).is_zero()
        });
        if let Some((i, _)) = bad {
            for j in t..cols {
                let s = a[i][j].clone();
                a[t][j] += s;
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut a = m.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}

/// Betti numbers from brute-force cliques and dense ranks.
pub fn oracle_betti(g: &Graph) -> Vec<usize> {
    let cl = brute_cliques(g);
    let f: Vec<usize> = cl[1..].iter().map(Vec::len).collect();
    let idx = |faces: &Vec<Vec<u32>>, s: &[u32]| faces.iter().position(|t| t == s).unwrap();
    let mut ranks = vec![0usize; f.len() + 1];
    for p in 1..f.len() {
        let (lower, upper) = (&cl[p], &cl[p + 1]);
        let mut m = vec![vec![0i64; upper.len()]; lower.len()];
        for (j, s) in upper.iter().enumerate() {
            for skip in 0..s.len() {
                let fct: Vec<u32> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                m[idx(lower, &fct)][j] = if skip % 2 == 0 { 1 } else { -1 };
            }
        }
        ranks[p] = smith_diagonal(&m).len();
    }
    (0..f.len()).map(|p| f[p] - ranks[p] - ranks[p + 1]).collect()
}
