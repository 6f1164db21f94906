//! The two gadgets for the propagation terms of the rational rotation gate,
//! built by cutting copies of computational cycles along a slit and gluing
//! them into one sphere that carries the weighted state.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gadget::GadgetGraph;
use crate::register::Corner;
use crate::state::IntState;
use crate::surface::{FillPolicy, Surface};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PythVariant {
    /// −5|011⟩ + 4|100⟩ + 3|101⟩
    First,
    /// −5|010⟩ + 3|100⟩ − 4|101⟩
    Second,
}

impl PythVariant {
    pub fn target(self) -> IntState {
        let text = match self {
            PythVariant::First => "-5|011> + 4|100> + 3|101>",
            PythVariant::Second => "-5|010> + 3|100> - 4|101>",
        };
        IntState::parse(text).expect("valid literal")
    }
}

/// Surface faces with orientation signs; the signed sum of the faces, read
/// on the qubit vertices, is the cycle of the variant's target.
pub struct Surgery {
    pub faces: Vec<Vec<String>>,
    pub signs: Vec<i64>,
    pub log: Vec<String>,
}

fn original(label: &str) -> &str {
    label.split('_').next().expect("nonempty")
}

fn origin_of(label: &str) -> (usize, Corner) {
    let o = original(label);
    let corner = match &o[..1] {
        "x" => Corner::X,
        "a" => Corner::A,
        _ => Corner::B,
    };
    (o[1..].parse::<usize>().expect("qubit digit") - 1, corner)
}

/// Wedge expansion of a three-qubit bitstring: (sign, vertex names) per face.
fn wedge_faces(bits: [u8; 3]) -> Vec<(i64, [String; 3])> {
    (0..8u8)
        .map(|pick| {
            let mut sign = 1;
            let vs: [String; 3] = std::array::from_fn(|i| {
                if pick >> (2 - i) & 1 == 0 {
                    format!("x{}", i + 1)
                } else {
                    sign = -sign;
                    format!("{}{}", if bits[i] == 0 { 'a' } else { 'b' }, i + 1)
                }
            });
            (sign, vs)
        })
        .collect()
}

fn sorted3(f: &[String; 3]) -> [String; 3] {
    let mut s = f.clone();
    s.sort();
    s
}

fn parity(f: &[String]) -> i64 {
    let mut sign = 1;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if f[i] > f[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// First variant: five copies of |011⟩ (sign reversed), four of |100⟩ and
/// three of |101⟩. Each |100⟩/|101⟩ copy is slit along x2–b1–a2 with b1
/// duplicated, the copies chained cyclically through the duplicates; the
/// |011⟩ copies are attached by cancelling shared faces.
pub fn surgery_first() -> Surgery {
    let hosts: Vec<(char, usize)> = (0..4).map(|k| ('B', k)).chain((0..3).map(|k| ('C', k))).collect();
    let attach: BTreeMap<(char, usize), usize> =
        [(('B', 2), 0), (('B', 3), 1), (('C', 0), 2), (('C', 1), 3), (('C', 2), 4)].into_iter().collect();
    let n = hosts.len();
    let label = |idx: usize, v: &str, side: usize| -> String {
        let (kind, k) = hosts[idx];
        match v {
            "x2" | "a2" => v.to_string(),
            "b1" => format!("b1_{}", if side == 0 { idx } else { (idx + 1) % n }),
            _ => format!("{v}_{kind}{k}"),
        }
    };
    let key = |a: &str, b: &str, c: &str| [a.to_string(), b.to_string(), c.to_string()];
    let mut s = Surgery { faces: Vec::new(), signs: Vec::new(), log: Vec::new() };
    for (idx, &(kind, k)) in hosts.iter().enumerate() {
        let bits = if kind == 'B' { [1, 0, 0] } else { [1, 0, 1] };
        let mut cancel: BTreeSet<[String; 3]> = BTreeSet::new();
        if attach.contains_key(&(kind, k)) {
            cancel.insert(key("x1", "x2", "x3"));
            if kind == 'C' {
                cancel.insert(key("b3", "x1", "x2"));
            }
        }
        for (sign, f) in wedge_faces(bits) {
            if cancel.contains(&sorted3(&f)) {
                continue;
            }
            let side = if f.iter().any(|v| v == "x3") { 0 } else { 1 };
            s.faces.push(f.iter().map(|v| label(idx, v, side)).collect());
            s.signs.push(sign);
        }
        s.log.push(format!("copy {kind}{k}: slit along x2-b1-a2"));
        if let Some(&j) = attach.get(&(kind, k)) {
            for (sign, f) in wedge_faces([0, 1, 1]) {
                if cancel.contains(&sorted3(&f)) {
                    continue;
                }
                let glued = |v: &String| {
                    let shared = matches!(v.as_str(), "x1" | "x2" | "x3") || (kind == 'C' && v == "b3");
                    if shared {
                        label(idx, v, 0)
                    } else {
                        format!("{v}_A{j}")
                    }
                };
                s.faces.push(f.iter().map(glued).collect());
                s.signs.push(-sign);
            }
            s.log.push(format!("copy A{j} attached to {kind}{k} cancelling {} faces", cancel.len()));
        }
    }
    s
}

/// Faces of Σ c_e·cycle(e), oriented by coefficient sign and repeated |c_e|
/// times, in sorted face order.
fn chain_faces(terms: &[(i64, [u8; 3])]) -> Vec<[String; 3]> {
    let mut total: BTreeMap<[String; 3], i64> = BTreeMap::new();
    for &(coef, bits) in terms {
        for (sign, f) in wedge_faces(bits) {
            let oriented = if sign > 0 { f.clone() } else { [f[1].clone(), f[0].clone(), f[2].clone()] };
            *total.entry(sorted3(&oriented)).or_insert(0) += coef * parity(&oriented);
        }
    }
    let mut out = Vec::new();
    for (cf, v) in total {
        let f = if v > 0 { cf.clone() } else { [cf[1].clone(), cf[0].clone(), cf[2].clone()] };
        for _ in 0..v.abs() {
            out.push(f.clone());
        }
    }
    out
}

/// Second variant: three copies of (|101⟩ + |010⟩ − |100⟩), one of |101⟩ and
/// two of |010⟩. In each copy the face [x1x2x3] is cut open through
/// duplicates of x2 and x3; copies are chained through the x2 duplicates and
/// share the x3 duplicate.
pub fn surgery_second() -> Surgery {
    let (b, c, d) = ([1, 0, 0], [1, 0, 1], [0, 1, 0]);
    let mixed = chain_faces(&[(1, c), (1, d), (-1, b)]);
    let pieces = vec![mixed.clone(), mixed.clone(), mixed, chain_faces(&[(1, c)]), chain_faces(&[(1, d)]), chain_faces(&[(1, d)])];
    let k = pieces.len();
    let mut s = Surgery { faces: Vec::new(), signs: Vec::new(), log: Vec::new() };
    for (i, piece) in pieces.iter().enumerate() {
        let label = |v: &str| -> String {
            match v {
                "x3" => "x3".into(),
                "x3*" => "x3_S".into(),
                "x2" => format!("x2_K{i}"),
                "x2*" => format!("x2_K{}", (i + 1) % k),
                _ => format!("{v}_C{i}"),
            }
        };
        for f in piece {
            let cut: Vec<[&str; 3]> = if sorted3(f) == [String::from("x1"), "x2".into(), "x3".into()] {
                // rotated to start at x1 this face reads x1 x2 x3
                debug_assert_eq!(parity(f), 1);
                vec![["x1", "x2", "x3*"], ["x1", "x3*", "x2*"], ["x1", "x2*", "x3"]]
            } else {
                vec![[f[0].as_str(), f[1].as_str(), f[2].as_str()]]
            };
            for g in cut {
                s.faces.push(g.iter().map(|v| label(v)).collect());
                s.signs.push(1);
            }
        }
        s.log.push(format!("piece {i}: {} faces, [x1x2x3] cut through x2/x3 duplicates", piece.len() + 2));
    }
    s
}

/// Face each vertex fan of the first variant starts from.
const FIRST_FAN_STARTS: &[(&str, [&str; 3])] = &[
    ("a1_A0", ["a1_A0", "b2_A0", "b3_A0"]),
    ("a1_A1", ["a1_A1", "x2", "x3_B3"]),
    ("a1_A2", ["a1_A2", "x2", "x3_C0"]),
    ("a1_A3", ["a1_A3", "x2", "x3_C1"]),
    ("a1_A4", ["a1_A4", "b2_A4", "b3_C2"]),
    ("a2", ["x1_B0", "a2", "x3_B0"]),
    ("a3_B0", ["x1_B0", "a2", "a3_B0"]),
    ("a3_B1", ["b1_2", "x2", "a3_B1"]),
    ("a3_B2", ["x1_B2", "x2", "a3_B2"]),
    ("a3_B3", ["b1_4", "a2", "a3_B3"]),
    ("b1_0", ["b1_0", "x2", "x3_B0"]),
    ("b1_1", ["b1_1", "x2", "x3_B1"]),
    ("b1_2", ["b1_2", "x2", "x3_B2"]),
    ("b1_3", ["b1_3", "x2", "x3_B3"]),
    ("b1_4", ["b1_4", "x2", "x3_C0"]),
    ("b1_5", ["b1_5", "a2", "x3_C1"]),
    ("b1_6", ["b1_6", "a2", "x3_C2"]),
    ("b2_A0", ["x1_B2", "b2_A0", "b3_A0"]),
    ("b2_A1", ["x1_B3", "b2_A1", "x3_B3"]),
    ("b2_A2", ["x1_C0", "b2_A2", "b3_C0"]),
    ("b2_A3", ["x1_C1", "b2_A3", "b3_C1"]),
    ("b2_A4", ["a1_A4", "b2_A4", "x3_C2"]),
    ("b3_A0", ["a1_A0", "b2_A0", "b3_A0"]),
    ("b3_A1", ["x1_B3", "b2_A1", "b3_A1"]),
    ("b3_C0", ["x1_C0", "b2_A2", "b3_C0"]),
    ("b3_C1", ["a1_A3", "b2_A3", "b3_C1"]),
    ("b3_C2", ["b1_0", "x2", "b3_C2"]),
    ("x1_B0", ["x1_B0", "a2", "x3_B0"]),
    ("x1_B1", ["x1_B1", "x2", "a3_B1"]),
    ("x1_B2", ["x1_B2", "a2", "a3_B2"]),
    ("x1_B3", ["x1_B3", "a2", "x3_B3"]),
    ("x1_C0", ["x1_C0", "a2", "x3_C0"]),
    ("x1_C1", ["x1_C1", "b2_A3", "x3_C1"]),
    ("x1_C2", ["x1_C2", "a2", "x3_C2"]),
    ("x2", ["x1_B3", "x2", "a3_B3"]),
    ("x3_B0", ["b1_0", "a2", "x3_B0"]),
    ("x3_B1", ["b1_1", "a2", "x3_B1"]),
    ("x3_B2", ["b1_2", "x2", "x3_B2"]),
    ("x3_B3", ["a1_A1", "b2_A1", "x3_B3"]),
    ("x3_C0", ["x1_C0", "b2_A2", "x3_C0"]),
    ("x3_C1", ["x1_C1", "b2_A3", "x3_C1"]),
    ("x3_C2", ["x1_C2", "a2", "x3_C2"]),
];

pub fn surgery(which: PythVariant) -> Surgery {
    match which {
        PythVariant::First => surgery_first(),
        PythVariant::Second => surgery_second(),
    }
}

pub fn surface(which: PythVariant) -> Result<Surface> {
    let s = surgery(which);
    let origin = s.faces.iter().flatten().map(|l| (l.clone(), origin_of(l))).collect();
    Surface::new(s.faces, origin)
}

/// Build either gadget on `qubits` (slot order: the two clock qubits, then
/// the computational qubit).
pub fn gadget_pythagorean(id: &str, qubits: &[usize], which: PythVariant) -> Result<GadgetGraph> {
    let s = surgery(which);
    let surf = surface(which)?;
    let starts: Option<BTreeMap<String, BTreeSet<String>>> = match which {
        PythVariant::First => Some(
            FIRST_FAN_STARTS
                .iter()
                .map(|(l, f)| (l.to_string(), f.iter().map(|x| x.to_string()).collect()))
                .collect(),
        ),
        PythVariant::Second => None,
    };
    let mut g = surf.fill(id, qubits, FillPolicy::EdgeAndVertexFans, starts.as_ref())?;
    let mut log = s.log;
    log.push(format!("re-identified {} labels onto 9 qubit vertices", surf.labels().len()));
    log.append(&mut g.construction_log);
    g.construction_log = log;
    g.targets.push(crate::builders::to_sorted_slots(qubits, &which.target()));
    g.log(format!("pythagorean {id} on {qubits:?} {which:?}"));
    Ok(g)
}
