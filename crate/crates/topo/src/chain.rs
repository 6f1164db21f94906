//! Oriented simplices and chains with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Canonical simplex: strictly increasing vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    /// Sort `verts` into canonical order. Returns `None` on a repeated vertex,
    /// otherwise the permutation sign and the canonical simplex.
    pub fn oriented(mut verts: Vec<u32>) -> Option<(i32, Simplex)> {
        let mut sign = 1;
        // insertion sort, counting transpositions
        for i in 1..verts.len() {
            let mut j = i;
            while j > 0 && verts[j - 1] > verts[j] {
                verts.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if verts.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((sign, Simplex(verts)))
    }

    /// Wrap an already-sorted vertex list.
    pub fn sorted(verts: Vec<u32>) -> Simplex {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        Simplex(verts)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    /// Facets with their signs in the alternating-sum boundary.
    pub fn facets(&self) -> impl Iterator<Item = (i32, Simplex)> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut f = self.0.clone();
            f.remove(i);
            (if i % 2 == 0 { 1 } else { -1 }, Simplex(f))
        })
    }
}

/// Sparse formal sum of simplices of one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Chain {
    terms: BTreeMap<Simplex, BigRational>,
}

impl Chain {
    pub fn zero() -> Chain {
        Chain::default()
    }

    /// Single oriented simplex given in any vertex order (zero if degenerate).
    pub fn simplex(verts: Vec<u32>) -> Chain {
        let mut c = Chain::zero();
        if let Some((s, simp)) = Simplex::oriented(verts) {
            c.add_term(simp, BigRational::from_integer(BigInt::from(s)));
        }
        c
    }

    pub fn vertex(v: u32) -> Chain {
        Chain::simplex(vec![v])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dimension of the terms, `None` for the zero chain.
    pub fn dim(&self) -> Option<isize> {
        self.terms.keys().next().map(Simplex::dim)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &Simplex) -> BigRational {
        self.terms.get(s).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, s: Simplex, c: BigRational) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.dim().is_none_or(|d| d == s.dim()), "mixed dimensions");
        match self.terms.entry(s) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Chain {
        if k.is_zero() {
            return Chain::zero();
        }
        Chain { terms: self.terms.iter().map(|(s, c)| (s.clone(), c * k)).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Chain {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn neg(&self) -> Chain {
        self.scale_int(-1)
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        self.add(&other.neg())
    }

    /// Bilinear wedge: concatenate vertex lists, drop repeats, sort with sign.
    pub fn wedge(&self, other: &Chain) -> Chain {
        let mut out = Chain::zero();
        for (s, c) in &self.terms {
            for (t, d) in &other.terms {
                let mut v = s.0.clone();
                v.extend_from_slice(&t.0);
                if let Some((sign, simp)) = Simplex::oriented(v) {
                    let k = c * d;
                    out.add_term(simp, if sign < 0 { -k } else { k });
                }
            }
        }
        out
    }

    /// Alternating-sum boundary (the empty simplex is dropped, so the
    /// boundary of a 0-chain is zero).
    pub fn boundary(&self) -> Chain {
        let mut out = Chain::zero();
        for (s, c) in &self.terms {
            if s.0.len() < 2 {
                continue;
            }
            for (sign, f) in s.facets() {
                out.add_term(f, if sign < 0 { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// Sum of coefficients of a 0-chain (the augmentation map).
    pub fn augmentation(&self) -> BigRational {
        self.terms.iter().filter(|(s, _)| s.0.len() == 1).map(|(_, c)| c.clone()).sum()
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn max_abs_coeff(&self) -> BigRational {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero)
    }

    pub fn one() -> BigRational {
        BigRational::one()
    }

    /// Render with vertex names, e.g. `[x:0 a:1] - 2[a:0 a:1]`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> ChainDisplay<'a> {
        ChainDisplay { chain: self, names }
    }
}

pub struct ChainDisplay<'a> {
    chain: &'a Chain,
    names: &'a [String],
}

impl fmt::Display for ChainDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chain.is_zero() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.chain.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            let names: Vec<&str> = s.0.iter().map(|&v| self.names[v as usize].as_str()).collect();
            write!(f, "[{}]", names.join(" "))?;
        }
        Ok(())
    }
}
