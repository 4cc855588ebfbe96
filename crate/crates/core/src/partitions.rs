//! Transition systems, circuit tracing, the matrix `I_P`, and the
//! exhaustive check of `|P| = nullity(I_P) + c(G)`.
//!
//! A transition at a vertex is a perfect matching on its four half-edges.
//! Relative to an Euler system `C` whose two passages through `v` are
//! `i1 -> o1` and `i2 -> o2`, the three matchings are
//!
//! * `Follow`: `{i1 o1, i2 o2}` (the transitions of `C` itself),
//! * `Cross`:  `{i1 o2, i2 o1}` (orientation-consistent, not following `C`),
//! * `Flip`:   `{i1 i2, o1 o2}` (orientation-inconsistent).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::graph::{mate, EulerSystem, Multigraph};
use crate::interlace::{interlace_matrix, interlaced_index};

/// Default vertex cap for `3^n` assignment sweeps in [`verify_extended_cle`].
pub const DEFAULT_CLE_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Transition {
    Follow,
    Cross,
    Flip,
}

impl Transition {
    pub const ALL: [Transition; 3] = [Transition::Follow, Transition::Cross, Transition::Flip];

    /// One-letter code used by the assignment text format.
    pub fn code(self) -> char {
        match self {
            Transition::Follow => 'F',
            Transition::Cross => 'C',
            Transition::Flip => 'X',
        }
    }
}

impl FromStr for Transition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "f" => Ok(Transition::Follow),
            "C" | "c" => Ok(Transition::Cross),
            "X" | "x" => Ok(Transition::Flip),
            _ => Err(Error::Format(format!(
                "unknown transition `{s}` (expected F, C or X)"
            ))),
        }
    }
}

/// A transition choice at every vertex, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransitionAssignment {
    choice: Vec<Transition>,
}

impl TransitionAssignment {
    pub fn new(choice: Vec<Transition>) -> Self {
        TransitionAssignment { choice }
    }

    pub fn uniform(n: usize, t: Transition) -> Self {
        Self::new(vec![t; n])
    }

    /// Decodes an assignment from its base-3 index (`0 = Follow`,
    /// `1 = Cross`, `2 = Flip`; vertex 0 is the least significant digit).
    pub fn from_index(n: usize, mut code: u64) -> Self {
        let choice = (0..n)
            .map(|_| {
                let t = Transition::ALL[(code % 3) as usize];
                code /= 3;
                t
            })
            .collect();
        Self::new(choice)
    }

    /// Builds an assignment from `(label, transition)` pairs covering every
    /// vertex of `g`.
    pub fn from_labels<S: AsRef<str>>(g: &Multigraph, pairs: &[(S, Transition)]) -> Result<Self> {
        let mut choice: Vec<Option<Transition>> = vec![None; g.vertex_count()];
        for (l, t) in pairs {
            choice[g.vertex(l.as_ref())?] = Some(*t);
        }
        let choice = choice
            .into_iter()
            .enumerate()
            .map(|(v, t)| t.ok_or_else(|| Error::IncompleteAssignment(g.label(v).to_string())))
            .collect::<Result<_>>()?;
        Ok(Self::new(choice))
    }

    /// Parses `v:F v:C v:X` tokens (whitespace or comma separated).
    pub fn parse(g: &Multigraph, text: &str) -> Result<Self> {
        let pairs = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|tok| {
                let (l, t) = tok
                    .rsplit_once(':')
                    .ok_or_else(|| Error::Format(format!("malformed assignment token `{tok}`")))?;
                Ok((l.to_string(), t.parse()?))
            })
            .collect::<Result<Vec<(String, Transition)>>>()?;
        Self::from_labels(g, &pairs)
    }

    /// Text form, vertices in graph order.
    pub fn format(&self, g: &Multigraph) -> String {
        self.choice
            .iter()
            .enumerate()
            .map(|(v, t)| format!("{}:{}", g.label(v), t.code()))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn get(&self, v: usize) -> Transition {
        self.choice[v]
    }

    pub fn set(&mut self, v: usize, t: Transition) {
        self.choice[v] = t;
    }

    pub fn len(&self) -> usize {
        self.choice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choice.is_empty()
    }

    pub fn choices(&self) -> &[Transition] {
        &self.choice
    }

    fn mask_of(&self, t: Transition) -> u64 {
        self.choice
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == t)
            .fold(0, |m, (v, _)| m | 1 << v)
    }
}

/// A transition system: the partner of every half-edge at its vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pairing {
    partner: Vec<usize>,
}

impl Pairing {
    /// Wraps a partner table after checking it is a fixed-point-free
    /// involution that never leaves a vertex.
    pub fn new(g: &Multigraph, partner: Vec<usize>) -> Result<Self> {
        if partner.len() != g.half_edge_count() {
            return Err(Error::InvalidPairing("wrong number of half-edges".into()));
        }
        for (h, &p) in partner.iter().enumerate() {
            if p >= partner.len() || p == h || partner[p] != h {
                return Err(Error::InvalidPairing(format!(
                    "half-edge {h} is not matched"
                )));
            }
            if g.half_vertex(h) != g.half_vertex(p) {
                return Err(Error::InvalidPairing(format!(
                    "half-edges {h} and {p} sit at different vertices"
                )));
            }
        }
        Ok(Pairing { partner })
    }

    pub fn partner(&self, h: usize) -> usize {
        self.partner[h]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.partner
    }
}

/// The two half-edge pairs realising transition `t` at vertex `v`.
pub fn pairing_at_vertex(es: &EulerSystem, v: usize, t: Transition) -> [(usize, usize); 2] {
    let [(i1, o1), (i2, o2)] = es.passages(v);
    match t {
        Transition::Follow => [(i1, o1), (i2, o2)],
        Transition::Cross => [(i1, o2), (i2, o1)],
        Transition::Flip => [(i1, i2), (o1, o2)],
    }
}

pub(crate) fn fill_partner_raw(
    es: &EulerSystem,
    choice: impl Fn(usize) -> Transition,
    partner: &mut [usize],
) {
    for v in 0..es.graph().vertex_count() {
        for (a, b) in pairing_at_vertex(es, v, choice(v)) {
            partner[a] = b;
            partner[b] = a;
        }
    }
}

fn fill_partner(es: &EulerSystem, t: &TransitionAssignment, partner: &mut [usize]) {
    fill_partner_raw(es, |v| t.get(v), partner)
}

/// The transition system selected by an assignment.
pub fn transition_pairing(es: &EulerSystem, t: &TransitionAssignment) -> Pairing {
    assert_eq!(
        t.len(),
        es.graph().vertex_count(),
        "assignment size mismatch"
    );
    let mut partner = vec![0; es.graph().half_edge_count()];
    fill_partner(es, t, &mut partner);
    Pairing { partner }
}

/// Which of Follow/Cross/Flip each vertex's transition is, relative to `es`.
pub fn classify(es: &EulerSystem, pairing: &Pairing) -> TransitionAssignment {
    let n = es.graph().vertex_count();
    let choice = (0..n)
        .map(|v| {
            let [(i1, o1), (_, o2)] = es.passages(v);
            let p = pairing.partner(i1);
            if p == o1 {
                Transition::Follow
            } else if p == o2 {
                Transition::Cross
            } else {
                Transition::Flip
            }
        })
        .collect();
    TransitionAssignment::new(choice)
}

/// A partition of the edges into closed trails. Each circuit is a half-edge
/// sequence in the same layout as an Euler-system circuit, canonicalised to
/// its least rotation over both directions; circuits are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircuitPartition {
    circuits: Vec<Vec<usize>>,
}

impl CircuitPartition {
    pub fn size(&self) -> usize {
        self.circuits.len()
    }

    pub fn circuits(&self) -> &[Vec<usize>] {
        &self.circuits
    }

    /// Vertex word of each circuit, as labels.
    pub fn words(&self, g: &Multigraph) -> Vec<Vec<String>> {
        self.circuits
            .iter()
            .map(|s| {
                s.iter()
                    .step_by(2)
                    .map(|&h| g.label(g.half_vertex(h)).to_string())
                    .collect()
            })
            .collect()
    }

    /// Vertex word of each circuit, as vertex indices.
    pub fn vertex_words(&self, g: &Multigraph) -> Vec<Vec<usize>> {
        self.circuits
            .iter()
            .map(|s| s.iter().step_by(2).map(|&h| g.half_vertex(h)).collect())
            .collect()
    }
}

fn canonical_circuit(s: Vec<usize>) -> Vec<usize> {
    let len = s.len();
    let rev: Vec<usize> = s.iter().rev().copied().collect();
    let mut best = s.clone();
    for w in [&s, &rev] {
        for r in (0..len).step_by(2) {
            if w[r..].iter().chain(&w[..r]).lt(best.iter()) {
                best = w[r..].iter().chain(&w[..r]).copied().collect();
            }
        }
    }
    best
}

/// Walks every closed trail of a transition system: leave through a
/// half-edge, cross its edge, switch to the partner of the arriving
/// half-edge, and repeat. Each trail starts at its smallest unused half-edge.
pub fn trace_pairing(g: &Multigraph, pairing: &Pairing) -> CircuitPartition {
    let mut used = vec![false; g.half_edge_count()];
    let mut circuits = Vec::new();
    for start in 0..used.len() {
        if used[start] {
            continue;
        }
        let mut s = Vec::new();
        let mut h = start;
        loop {
            used[h] = true;
            used[mate(h)] = true;
            s.push(h);
            s.push(mate(h));
            h = pairing.partner(mate(h));
            if h == start {
                break;
            }
        }
        circuits.push(canonical_circuit(s));
    }
    circuits.sort();
    CircuitPartition { circuits }
}

/// Number of closed trails of a transition system given as a partner table.
pub fn count_circuits(partner: &[usize], used: &mut Vec<bool>) -> usize {
    used.clear();
    used.resize(partner.len(), false);
    let mut count = 0;
    for start in 0..partner.len() {
        if used[start] {
            continue;
        }
        count += 1;
        let mut h = start;
        loop {
            used[h] = true;
            used[mate(h)] = true;
            h = partner[mate(h)];
            if h == start {
                break;
            }
        }
    }
    count
}

/// Traces the circuit partition selected by `t` relative to `es`.
pub fn trace(es: &EulerSystem, t: &TransitionAssignment) -> CircuitPartition {
    trace_pairing(es.graph(), &transition_pairing(es, t))
}

/// `I_P`: the interlace matrix with Follow rows/columns removed and the
/// diagonal set to 1 at Flip vertices.
pub fn partition_matrix(es: &EulerSystem, t: &TransitionAssignment) -> Gf2Matrix {
    partition_matrix_from(&interlace_matrix(es), t)
}

/// [`partition_matrix`] against a precomputed interlace matrix.
pub fn partition_matrix_from(interlace: &Gf2Matrix, t: &TransitionAssignment) -> Gf2Matrix {
    let keep: Vec<usize> = (0..t.len())
        .filter(|&v| t.get(v) != Transition::Follow)
        .collect();
    let mut m = interlace.principal_by_index(&keep);
    for (i, &v) in keep.iter().enumerate() {
        if t.get(v) == Transition::Flip {
            m.set(i, i, true);
        }
    }
    m
}

/// `nullity(I_P) + c(G)`.
pub fn predicted_size(es: &EulerSystem, t: &TransitionAssignment) -> usize {
    partition_matrix(es, t).nullity() + es.component_count()
}

/// The assignment relative to `C*a` describing the same transitions as
/// `t` relative to `C`, for `t(a) = Flip`: `a` becomes Follow and every
/// vertex interlaced with `a` swaps Cross and Flip.
pub fn reassign_after_kappa(
    es: &EulerSystem,
    t: &TransitionAssignment,
    a: usize,
) -> TransitionAssignment {
    let mut out = t.clone();
    out.set(a, Transition::Follow);
    for v in (0..t.len()).filter(|&v| interlaced_index(es, a, v)) {
        out.set(
            v,
            match t.get(v) {
                Transition::Cross => Transition::Flip,
                Transition::Flip => Transition::Cross,
                Transition::Follow => Transition::Follow,
            },
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleFailure {
    pub assignment: String,
    pub traced: usize,
    pub predicted: usize,
}

/// Result of an exhaustive sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleReport {
    pub checked: u64,
    pub failures: Vec<CleFailure>,
}

impl CleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

pub(crate) fn check_cap(n: usize, cap: usize, base: u32) -> Result<()> {
    if n > cap {
        let sweep = match (base as u128).checked_pow(n as u32) {
            Some(total) => format!("{base}^{n} = {total}"),
            None => format!("{base}^{n}"),
        };
        return Err(Error::SweepTooLarge {
            vertices: n,
            cap,
            sweep,
        });
    }
    Ok(())
}

/// Traces every one of the `3^n` assignments and compares the circuit count
/// with `nullity(I_P) + c(G)`. Refuses graphs with more than `cap` vertices.
pub fn verify_extended_cle(es: &EulerSystem, cap: usize) -> Result<CleReport> {
    let g = es.graph();
    let n = g.vertex_count();
    check_cap(n, cap.min(40), 3)?;
    let total = 3u64.pow(n as u32);
    let interlace = interlace_matrix(es);
    let c = es.component_count();
    let failures: Vec<CleFailure> = (0..total)
        .into_par_iter()
        .map_init(
            || (vec![0usize; g.half_edge_count()], Vec::new()),
            |(partner, used), code| {
                let t = TransitionAssignment::from_index(n, code);
                fill_partner(es, &t, partner);
                let traced = count_circuits(partner, used);
                let keep = !t.mask_of(Transition::Follow) & low_mask(n);
                let nullity = if n <= 64 {
                    interlace.principal_nullity_mask_toggled(keep, t.mask_of(Transition::Flip))
                } else {
                    partition_matrix_from(&interlace, &t).nullity()
                };
                let predicted = nullity + c;
                (traced != predicted).then(|| CleFailure {
                    assignment: t.format(g),
                    traced,
                    predicted,
                })
            },
        )
        .flatten()
        .collect();
    Ok(CleReport {
        checked: total,
        failures,
    })
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Display for CleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}/{} assignments verified",
            self.checked - self.failures.len() as u64,
            self.checked
        )?;
        for fail in &self.failures {
            writeln!(
                f,
                "counterexample: {} traced {} predicted {}",
                fail.assignment, fail.traced, fail.predicted
            )?;
        }
        Ok(())
    }
}
