//! Integer-coefficient qubit states over computational bitstrings.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{GadgetError, Result};

/// Σ n_e |e⟩ with integer n_e. Bit j of a key is the state of slot j.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "StateJson", into = "StateJson")]
pub struct IntState {
    n: usize,
    terms: BTreeMap<Vec<u8>, i64>,
}

#[derive(Serialize, Deserialize)]
struct StateJson {
    n: usize,
    terms: BTreeMap<String, i64>,
}

impl TryFrom<StateJson> for IntState {
    type Error = GadgetError;
    fn try_from(j: StateJson) -> Result<Self> {
        IntState::from_strs(j.n, j.terms.iter().map(|(k, v)| (k.as_str(), *v)))
    }
}

impl From<IntState> for StateJson {
    fn from(s: IntState) -> StateJson {
        StateJson { n: s.n, terms: s.terms.iter().map(|(k, v)| (bits_to_string(k), *v)).collect() }
    }
}

pub fn bits_to_string(b: &[u8]) -> String {
    b.iter().map(|&x| if x == 0 { '0' } else { '1' }).collect()
}

fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(GadgetError::InvalidState(format!("bad bitstring `{s}`"))),
        })
        .collect()
}

impl IntState {
    /// Terms with equal bitstrings are summed; zero coefficients dropped.
    pub fn new(n: usize, terms: impl IntoIterator<Item = (Vec<u8>, i64)>) -> Result<IntState> {
        let mut map: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
        for (bits, c) in terms {
            if bits.len() != n || bits.iter().any(|&b| b > 1) {
                return Err(GadgetError::InvalidState(format!("bitstring {bits:?} is not {n} bits")));
            }
            *map.entry(bits).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        if map.is_empty() {
            return Err(GadgetError::InvalidState("all coefficients are zero".into()));
        }
        Ok(IntState { n, terms: map })
    }

    pub fn from_strs<'a>(n: usize, terms: impl IntoIterator<Item = (&'a str, i64)>) -> Result<IntState> {
        let parsed: Result<Vec<(Vec<u8>, i64)>> = terms.into_iter().map(|(s, c)| Ok((parse_bits(s)?, c))).collect();
        IntState::new(n, parsed?)
    }

    /// Single computational basis state.
    pub fn basis(bits: &[u8]) -> IntState {
        IntState::new(bits.len(), [(bits.to_vec(), 1)]).expect("valid basis state")
    }

    /// Parse "3|011> - 4|100>" style text with bare "|01>" meaning coefficient 1.
    pub fn parse(text: &str) -> Result<IntState> {
        let mut terms = Vec::new();
        let mut n = None;
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = cleaned.as_str();
        while !rest.is_empty() {
            let bar = rest.find('|').ok_or_else(|| GadgetError::InvalidState(format!("expected `|` in `{text}`")))?;
            let coef = match &rest[..bar] {
                "" | "+" => 1,
                "-" => -1,
                c => c.parse::<i64>().map_err(|_| GadgetError::InvalidState(format!("bad coefficient `{c}`")))?,
            };
            let close = rest.find('>').ok_or_else(|| GadgetError::InvalidState(format!("expected `>` in `{text}`")))?;
            let bits = parse_bits(&rest[bar + 1..close])?;
            if *n.get_or_insert(bits.len()) != bits.len() {
                return Err(GadgetError::InvalidState("bitstrings of different lengths".into()));
            }
            terms.push((bits, coef));
            rest = &rest[close + 1..];
        }
        IntState::new(n.unwrap_or(0), terms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], i64)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    pub fn coeff(&self, bits: &[u8]) -> i64 {
        self.terms.get(bits).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Divide by the gcd of the coefficients and make the first one positive.
    pub fn normalized(&self) -> IntState {
        let g = self.terms.values().fold(0i64, |a, &b| a.gcd(&b));
        let sign = if self.terms.values().next().is_some_and(|&c| c < 0) { -1 } else { 1 };
        IntState { n: self.n, terms: self.terms.iter().map(|(k, v)| (k.clone(), sign * v / g)).collect() }
    }

    /// Dense coefficient vector indexed by bitstring read as binary, slot 0 most significant.
    pub fn to_dense(&self) -> Vec<i64> {
        let mut v = vec![0; 1 << self.n];
        for (k, c) in &self.terms {
            v[index_of(k)] = *c;
        }
        v
    }

    pub fn from_dense(n: usize, v: &[i64]) -> Result<IntState> {
        IntState::new(n, v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (bits_of(i, n), *c)))
    }

    /// Insert a fixed bit at slot `pos`.
    pub fn insert_bit(&self, pos: usize, bit: u8) -> IntState {
        IntState {
            n: self.n + 1,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let mut k = k.clone();
                    k.insert(pos, bit);
                    (k, *v)
                })
                .collect(),
        }
    }

    /// Keep slots in the order given by `order` (a permutation of 0..n).
    pub fn permute(&self, order: &[usize]) -> IntState {
        IntState {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (order.iter().map(|&i| k[i]).collect(), *v)).collect(),
        }
    }

    /// Flip the bit of every slot in `mask`.
    pub fn flip(&self, mask: &[bool]) -> IntState {
        IntState {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.iter().zip(mask).map(|(&b, &f)| if f { 1 - b } else { b }).collect(), *v))
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> IntState {
        IntState { n: self.n, terms: self.terms.iter().map(|(b, v)| (b.clone(), v * k)).collect() }
    }
}

pub fn index_of(bits: &[u8]) -> usize {
    bits.iter().fold(0, |a, &b| a << 1 | b as usize)
}

pub fn bits_of(i: usize, n: usize) -> Vec<u8> {
    (0..n).map(|j| (i >> (n - 1 - j) & 1) as u8).collect()
}

/// All 2ⁿ bitstrings in increasing binary order.
pub fn all_bitstrings(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0..1usize << n).map(move |i| bits_of(i, n))
}

impl fmt::Display for IntState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let b = bits_to_string(k);
            match (i, *c) {
                (0, 1) => write!(f, "|{b}>")?,
                (0, -1) => write!(f, "-|{b}>")?,
                (0, c) => write!(f, "{c}|{b}>")?,
                (_, 1) => write!(f, " + |{b}>")?,
                (_, -1) => write!(f, " - |{b}>")?,
                (_, c) if c < 0 => write!(f, " - {}|{b}>", -c)?,
                (_, c) => write!(f, " + {c}|{b}>")?,
            }
        }
        Ok(())
    }
}
