//! Exact sparse elimination over the integers.
//!
//! Vectors are reduced fraction-free against registered pivot rows. Each
//! stored row is primitive (content 1, positive pivot). Arithmetic runs in
//! `i64` with overflow checks and restarts in `BigInt` when a step overflows.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Debug;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer arithmetic where every operation may refuse (overflow).
pub trait Ring: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    // i64::MIN is treated as overflow so that gcd and negation stay total.
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o).filter(|&v| v != i64::MIN)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o).filter(|&v| v != i64::MIN)
    }
    fn neg(&self) -> Option<Self> {
        Some(-*self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        *self / *o
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Debug)]
struct Overflow;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Store<T> {
    dim: usize,
    rows: Vec<Vec<(u32, T)>>,
    pivot_col: Vec<u32>,
    pivot_val: Vec<T>,
    /// row index owning each column as pivot, or NONE
    pivot_of: Vec<u32>,
}

impl<T: Ring> Store<T> {
    fn new(dim: usize) -> Self {
        Store { dim, rows: Vec::new(), pivot_col: Vec::new(), pivot_val: Vec::new(), pivot_of: vec![NONE; dim] }
    }

    fn convert<U: Ring>(&self, f: impl Fn(&T) -> U) -> Store<U> {
        Store {
            dim: self.dim,
            rows: self.rows.iter().map(|r| r.iter().map(|(c, v)| (*c, f(v))).collect()).collect(),
            pivot_col: self.pivot_col.clone(),
            pivot_val: self.pivot_val.iter().map(f).collect(),
            pivot_of: self.pivot_of.clone(),
        }
    }
}

struct Work<T> {
    dense: Vec<T>,
    seen: Vec<bool>,
    touched: Vec<u32>,
}

impl<T: Ring> Work<T> {
    fn new(dim: usize) -> Self {
        Work { dense: vec![T::zero(); dim], seen: vec![false; dim], touched: Vec::new() }
    }

    fn clear(&mut self) {
        for &t in &self.touched {
            self.dense[t as usize] = T::zero();
            self.seen[t as usize] = false;
        }
        self.touched.clear();
    }

    fn drain(&mut self) -> Vec<(u32, T)> {
        let mut out: Vec<(u32, T)> = self
            .touched
            .iter()
            .filter(|&&t| !self.dense[t as usize].is_zero())
            .map(|&t| (t, self.dense[t as usize].clone()))
            .collect();
        out.sort_unstable_by_key(|e| e.0);
        self.clear();
        out
    }

    /// Reduce `v` against `store`; returns the residual and the factor `s`
    /// with residual = s·v − (combination of rows).
    fn reduce(&mut self, store: &Store<T>, v: &[(u32, T)]) -> Result<(Vec<(u32, T)>, T), Overflow> {
        let mut heap = BinaryHeap::new();
        for (c, x) in v {
            let i = *c as usize;
            if !self.seen[i] {
                self.seen[i] = true;
                self.touched.push(*c);
            }
            self.dense[i] = x.clone();
            if store.pivot_of[i] != NONE {
                heap.push(Reverse((store.pivot_of[i], *c)));
            }
        }
        let mut scale = T::one();
        let res = self.eliminate(store, &mut heap, &mut scale);
        if res.is_err() {
            self.clear();
        }
        res.map(|_| (self.drain(), scale))
    }

    fn eliminate(
        &mut self,
        store: &Store<T>,
        heap: &mut BinaryHeap<Reverse<(u32, u32)>>,
        scale: &mut T,
    ) -> Result<(), Overflow> {
        while let Some(Reverse((r, c))) = heap.pop() {
            let a = self.dense[c as usize].clone();
            if a.is_zero() {
                continue;
            }
            let p = &store.pivot_val[r as usize];
            let g = a.gcd(p);
            let (mp, ma) = (p.div_exact(&g), a.div_exact(&g));
            if !mp.is_one() {
                for &t in &self.touched {
                    let d = &mut self.dense[t as usize];
                    if !d.is_zero() {
                        *d = d.mul(&mp).ok_or(Overflow)?;
                    }
                }
                *scale = scale.mul(&mp).ok_or(Overflow)?;
            }
            for (j, x) in &store.rows[r as usize] {
                let i = *j as usize;
                if !self.seen[i] {
                    self.seen[i] = true;
                    self.touched.push(*j);
                }
                let was_zero = self.dense[i].is_zero();
                self.dense[i] = self.dense[i].sub(&ma.mul(x).ok_or(Overflow)?).ok_or(Overflow)?;
                let q = store.pivot_of[i];
                if was_zero && q != NONE && *j != c {
                    heap.push(Reverse((q, *j)));
                }
            }
            debug_assert!(self.dense[c as usize].is_zero());
            if !mp.is_one() {
                self.shrink(scale);
            }
        }
        Ok(())
    }

    /// Divide the workspace and the scale by their common content.
    fn shrink(&mut self, scale: &mut T) {
        let mut g = scale.clone();
        for &t in &self.touched {
            if g.is_one() {
                return;
            }
            let d = &self.dense[t as usize];
            if !d.is_zero() {
                g = g.gcd(d);
            }
        }
        if g.is_one() || g.is_zero() {
            return;
        }
        for &t in &self.touched {
            let d = &mut self.dense[t as usize];
            if !d.is_zero() {
                *d = d.div_exact(&g);
            }
        }
        *scale = scale.div_exact(&g);
    }
}

fn build<T: Ring>(
    dim: usize,
    vectors: &[Vec<(u32, T)>],
    order: &[usize],
    col_count: &[u32],
    limit: usize,
) -> Result<Store<T>, Overflow> {
    let mut store = Store::new(dim);
    let mut work = Work::new(dim);
    for &k in order {
        let (mut res, _) = work.reduce(&store, &vectors[k])?;
        let pivot = res
            .iter()
            .filter(|(c, _)| (*c as usize) < limit)
            .min_by_key(|(c, _)| (col_count[*c as usize], *c))
            .map(|(c, _)| *c);
        let Some(pc) = pivot else { continue };
        let mut g = T::zero();
        for (_, x) in &res {
            g = g.gcd(x);
        }
        let pv = res.iter().find(|(c, _)| *c == pc).map(|(_, x)| x.clone()).expect("pivot present");
        if pv.is_negative() {
            g = g.neg().ok_or(Overflow)?;
        }
        if !g.is_one() {
            for (_, x) in res.iter_mut() {
                *x = x.div_exact(&g);
            }
        }
        let pv = pv.div_exact(&g);
        store.pivot_of[pc as usize] = store.rows.len() as u32;
        store.pivot_col.push(pc);
        store.pivot_val.push(pv);
        store.rows.push(res);
    }
    Ok(store)
}

/// Row-echelon data for the span of a family of integer vectors.
#[derive(Debug)]
pub struct Echelon {
    limit: usize,
    small: Option<Store<i64>>,
    big: OnceLock<Store<BigInt>>,
}

/// Result of reducing a vector: `residual = scale·v − (element of the span)`,
/// with the residual zero on every pivot column and `scale > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub entries: Vec<(u32, BigInt)>,
    pub scale: BigInt,
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries with column below `limit` are all zero.
    pub fn vanishes_below(&self, limit: usize) -> bool {
        self.entries.iter().all(|(c, _)| *c as usize >= limit)
    }
}

impl Echelon {
    /// Echelon of `vectors` (sparse, entries indexed below `dim`). Only
    /// columns below `pivot_limit` may serve as pivots; vectors whose
    /// residual vanishes there are dropped.
    pub fn new(dim: usize, vectors: &[Vec<(u32, i64)>], pivot_limit: Option<usize>) -> Echelon {
        let limit = pivot_limit.unwrap_or(dim).min(dim);
        let mut col_count = vec![0u32; dim];
        for v in vectors {
            for (c, _) in v {
                col_count[*c as usize] += 1;
            }
        }
        let mut order: Vec<usize> = (0..vectors.len()).collect();
        order.sort_by_key(|&k| vectors[k].len());
        let clean: Vec<Vec<(u32, i64)>> = vectors
            .iter()
            .map(|v| v.iter().copied().filter(|(_, x)| *x != 0).collect())
            .collect();
        let small = if clean.iter().flatten().any(|(_, x)| *x == i64::MIN) {
            None
        } else {
            build::<i64>(dim, &clean, &order, &col_count, limit).ok()
        };
        let big = OnceLock::new();
        if small.is_none() {
            let bv: Vec<Vec<(u32, BigInt)>> =
                clean.iter().map(|v| v.iter().map(|(c, x)| (*c, BigInt::from(*x))).collect()).collect();
            let s = build::<BigInt>(dim, &bv, &order, &col_count, limit).expect("BigInt never overflows");
            let _ = big.set(s);
        }
        Echelon { limit, small, big }
    }

    fn big(&self) -> &Store<BigInt> {
        self.big.get_or_init(|| self.small.as_ref().expect("one store exists").convert(Ring::to_big))
    }

    pub fn dim(&self) -> usize {
        self.small.as_ref().map_or_else(|| self.big().dim, |s| s.dim)
    }

    pub fn rank(&self) -> usize {
        self.small.as_ref().map_or_else(|| self.big().rows.len(), |s| s.rows.len())
    }

    pub fn pivot_limit(&self) -> usize {
        self.limit
    }

    /// Whether arithmetic had to leave `i64`.
    pub fn used_bigint(&self) -> bool {
        self.small.is_none()
    }

    pub fn pivot_columns(&self) -> Vec<u32> {
        self.small.as_ref().map_or_else(|| self.big().pivot_col.clone(), |s| s.pivot_col.clone())
    }

    pub fn reduce(&self, v: &[(u32, BigInt)]) -> Residual {
        let v: Vec<(u32, BigInt)> = v.iter().filter(|(_, x)| !Zero::is_zero(x)).cloned().collect();
        if let Some(s) = &self.small {
            let fits: Option<Vec<(u32, i64)>> =
                v.iter().map(|(c, x)| x.to_i64().filter(|&y| y != i64::MIN).map(|y| (*c, y))).collect();
            if let Some(sv) = fits {
                if let Ok((res, scale)) = Work::new(s.dim).reduce(s, &sv) {
                    return Residual {
                        entries: res.into_iter().map(|(c, x)| (c, BigInt::from(x))).collect(),
                        scale: BigInt::from(scale),
                    };
                }
            }
        }
        let s = self.big();
        let (entries, scale) = Work::new(s.dim).reduce(s, &v).expect("BigInt never overflows");
        Residual { entries, scale }
    }

    pub fn reduce_i64(&self, v: &[(u32, i64)]) -> Residual {
        let b: Vec<(u32, BigInt)> = v.iter().map(|(c, x)| (*c, BigInt::from(*x))).collect();
        self.reduce(&b)
    }
}

/// Rank of the span of integer vectors of length `dim`.
pub fn rank(dim: usize, vectors: &[Vec<(u32, i64)>]) -> usize {
    Echelon::new(dim, vectors, None).rank()
}

/// Reduced row echelon form of a dense rational matrix (in place); returns
/// the pivot column of each nonzero row.
pub fn rref(a: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of {λ : Σ_j λ_j·col_j = 0} for sparse rational columns.
pub fn nullspace(cols: &[Vec<(u32, BigRational)>]) -> Vec<Vec<BigRational>> {
    let mut rows: Vec<u32> = cols.iter().flatten().map(|(i, _)| *i).collect();
    rows.sort_unstable();
    rows.dedup();
    let n = cols.len();
    let mut a = vec![vec![BigRational::zero(); n]; rows.len()];
    for (j, col) in cols.iter().enumerate() {
        for (i, x) in col {
            let r = rows.binary_search(i).expect("collected");
            a[r][j] += x;
        }
    }
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank of dense rational vectors.
pub fn rank_rational(vectors: &[Vec<BigRational>]) -> usize {
    let mut a = vectors.to_vec();
    rref(&mut a).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let v = vec![vec![(0, 1), (1, 1)], vec![(1, 1), (2, 1)], vec![(0, 1), (2, -1)]];
        assert_eq!(rank(3, &v), 2);
        assert_eq!(rank(3, &[]), 0);
    }

    #[test]
    fn residual_is_canonical() {
        let v = vec![vec![(0, 2), (1, 1)], vec![(1, 3), (2, 1)]];
        let e = Echelon::new(3, &v, None);
        // 2·v0 − v1 style combinations reduce to zero
        let w = vec![(0u32, 4i64), (1, -1), (2, -1)];
        assert!(e.reduce_i64(&w).is_zero());
        let a = e.reduce_i64(&[(2, 1)]);
        let b = e.reduce_i64(&[(2, 1), (0, 2), (1, 1)]);
        // same class, same normal form after dividing by scale
        let na: Vec<_> = a.entries.iter().map(|(c, x)| (c, num_rational::BigRational::new(x.clone(), a.scale.clone()))).collect();
        let nb: Vec<_> = b.entries.iter().map(|(c, x)| (c, num_rational::BigRational::new(x.clone(), b.scale.clone()))).collect();
        assert_eq!(na, nb);
    }

    #[test]
    fn overflow_falls_back() {
        let big = i64::MAX / 3;
        let v = vec![vec![(0, big), (1, 7)], vec![(0, 7), (1, big)], vec![(0, 1), (1, 1), (2, big)]];
        let e = Echelon::new(3, &v, None);
        assert_eq!(e.rank(), 3);
    }
}
