//! Orbit counting for permutations: directly, through the nullity of the
//! interleaving matrix of disjoint transpositions, and through circuit
//! partitions of the 2-in 2-out digraph built on a pairing of the points.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::graph::{EulerSystem, Multigraph};
use crate::partitions::{classify, partition_matrix, trace_pairing, Pairing, Transition};

/// Default size cap for [`verify_permutation_reduction`].
pub const DEFAULT_REDUCTION_CAP: usize = 512;

/// A bijection of `{1, ..., m}`. Stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// From one-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        let mut hit = vec![false; m];
        let mut image = Vec::with_capacity(m);
        for &x in images {
            if x == 0 || x > m {
                return Err(Error::InvalidPermutation(format!("{x} is outside 1..={m}")));
            }
            if std::mem::replace(&mut hit[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("{x} is hit twice")));
            }
            image.push(x - 1);
        }
        Ok(Permutation { image })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            image: (0..m).collect(),
        }
    }

    /// The cycle `(1 2 ... m)`.
    pub fn full_cycle(m: usize) -> Self {
        Permutation {
            image: (0..m).map(|i| (i + 1) % m).collect(),
        }
    }

    /// Product of cycles given one-based, on `{1, ..., m}`.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..m).collect();
        let mut seen = vec![false; m];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                if x == 0 || x > m {
                    return Err(Error::InvalidPermutation(format!("{x} is outside 1..={m}")));
                }
                if std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "{x} appears in two cycles"
                    )));
                }
                image[x - 1] = cyc[(k + 1) % cyc.len()] - 1;
            }
        }
        Ok(Permutation { image })
    }

    /// Parses image notation (`3 1 2 5 4`) or cycle notation
    /// (`(1 3 2)(4 5)`, fixed points optional). Cycle notation acts on
    /// `{1, ..., size}` where `size` defaults to the largest element named.
    pub fn parse(text: &str, size: Option<usize>) -> Result<Self> {
        let text = text.trim();
        let number = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidPermutation(format!("`{t}` is not a positive integer")))
        };
        if text.contains('(') {
            let mut cycles = Vec::new();
            let mut rest = text;
            while let Some(open) = rest.find('(') {
                if !rest[..open].trim().is_empty() {
                    return Err(Error::InvalidPermutation(format!(
                        "unexpected `{}`",
                        rest[..open].trim()
                    )));
                }
                let close = rest[open..]
                    .find(')')
                    .ok_or_else(|| Error::InvalidPermutation("unclosed cycle".into()))?
                    + open;
                let cyc = rest[open + 1..close]
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(number)
                    .collect::<Result<Vec<usize>>>()?;
                if !cyc.is_empty() {
                    cycles.push(cyc);
                }
                rest = &rest[close + 1..];
            }
            if !rest.trim().is_empty() {
                return Err(Error::InvalidPermutation(format!(
                    "unexpected `{}`",
                    rest.trim()
                )));
            }
            let largest = cycles.iter().flatten().copied().max().unwrap_or(0);
            let m = size.unwrap_or(largest);
            if m < largest {
                return Err(Error::InvalidPermutation(format!(
                    "{largest} exceeds size {m}"
                )));
            }
            Self::from_cycles(m, &cycles)
        } else {
            let images = text
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(number)
                .collect::<Result<Vec<usize>>>()?;
            if let Some(m) = size {
                if m != images.len() {
                    return Err(Error::InvalidPermutation(format!(
                        "{} images for size {m}",
                        images.len()
                    )));
                }
            }
            Self::from_images(&images)
        }
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    /// Image of the one-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    /// One-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|x| x + 1).collect()
    }

    /// `self` followed by `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.size(),
            other.size(),
            "composing permutations of different sizes"
        );
        Permutation {
            image: self.image.iter().map(|&x| other.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    /// Cycles in one-based form, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for s in 0..self.size() {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.image[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Number of orbits, by walking each cycle once.
    pub fn orbit_count(&self) -> usize {
        let mut seen = vec![false; self.size()];
        let mut count = 0;
        for s in 0..self.size() {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x];
            }
        }
        count
    }

    /// For odd size `2n - 1`, the permutation of `{1, ..., 2n}` that agrees
    /// below `2n - 1`, sends `2n - 1` to `2n`, and sends `2n` to the old
    /// image of `2n - 1`. Even sizes are returned unchanged.
    pub fn even_extension(&self) -> Permutation {
        let m = self.size();
        if m.is_multiple_of(2) {
            return self.clone();
        }
        let mut image = self.image.clone();
        let old = image[m - 1];
        image[m - 1] = m;
        image.push(old);
        Permutation { image }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points written out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

fn normalize_transpositions(m: usize, ts: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let mut used = vec![false; m + 1];
    let mut out = Vec::with_capacity(ts.len());
    for &(a, b) in ts {
        if a == b || a == 0 || b == 0 || a > m || b > m {
            return Err(Error::BadTransposition(a, b));
        }
        for x in [a, b] {
            if std::mem::replace(&mut used[x], true) {
                return Err(Error::OverlappingTranspositions(x));
            }
        }
        out.push((a.min(b), a.max(b)));
    }
    Ok(out)
}

/// `pi = sigma sigma_1 ... sigma_k` read left to right: apply the cycle
/// `(1 ... m)` first, then each transposition.
pub fn compose_with_cycle(m: usize, transpositions: &[(usize, usize)]) -> Result<Permutation> {
    let ts = normalize_transpositions(m, transpositions)?;
    let mut p = Permutation::full_cycle(m);
    for (a, b) in ts {
        let t = Permutation::from_cycles(m, &[vec![a, b]])?;
        p = p.then(&t);
    }
    Ok(p)
}

/// The `k x k` matrix with entry `(i, j) = 1` iff `sigma_i = (a b)` and
/// `sigma_j = (c d)` interleave: `a < c < b < d` or `c < a < d < b`.
pub fn cohn_lempel_matrix(m: usize, transpositions: &[(usize, usize)]) -> Result<Gf2Matrix> {
    let ts = normalize_transpositions(m, transpositions)?;
    let mut mat = Gf2Matrix::zeros_numbered(ts.len());
    for (i, &(a, b)) in ts.iter().enumerate() {
        for (j, &(c, d)) in ts.iter().enumerate() {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                mat.set(i, j, true);
            }
        }
    }
    Ok(mat)
}

/// `1 + nullity` of the interleaving matrix.
pub fn orbit_count_via_nullity(m: usize, transpositions: &[(usize, usize)]) -> Result<usize> {
    Ok(1 + cohn_lempel_matrix(m, transpositions)?.nullity())
}

/// Writes `p` as `(1 ... m)` followed by disjoint transpositions, if it has
/// that form.
pub fn as_cycle_times_transpositions(p: &Permutation) -> Option<Vec<(usize, usize)>> {
    let m = p.size();
    if m == 0 {
        return None;
    }
    // p = sigma then tau  =>  tau = sigma^-1 then p
    let tau = Permutation::full_cycle(m).inverse().then(p);
    let mut ts = Vec::new();
    for i in 1..=m {
        let j = tau.apply(i);
        if tau.apply(j) != i {
            return None;
        }
        if i < j {
            ts.push((i, j));
        }
    }
    Some(ts)
}

/// The 2-in 2-out digraph of a permutation of `{1, ..., 2n}` over a pairing
/// of its points, with the transition system whose circuits are the orbits.
///
/// Vertex `k` (label `k`, one-based) is the `k`-th pair. Edge `i - 1` is the
/// point `i`; it runs from half-edge `2(i-1)` at the vertex of the pair
/// holding `i` to half-edge `2(i-1) + 1` at the vertex of the pair holding
/// `pi(i)`.
#[derive(Debug, Clone)]
pub struct PairDigraph {
    pub graph: Arc<Multigraph>,
    pub permutation: Permutation,
    pub pairs: Vec<(usize, usize)>,
    /// Transitions `i -> pi(i)`: the head of edge `i` meets the tail of
    /// edge `pi(i)`.
    pub orbit_pairing: Pairing,
}

impl PairDigraph {
    /// Euler circuits that respect the edge directions.
    pub fn directed_euler_system(&self) -> EulerSystem {
        EulerSystem::hierholzer_with(self.graph.clone(), |h| h % 2 == 0)
            .expect("a 2-in 2-out digraph has directed Euler circuits")
    }
}

/// Builds the pair digraph. Odd sizes are first replaced by their even
/// extension. `pairing` defaults to `{1,2}, {3,4}, ...`.
pub fn permutation_to_digraph(
    p: &Permutation,
    pairing: Option<&[(usize, usize)]>,
) -> Result<PairDigraph> {
    let p = p.even_extension();
    let m = p.size();
    if m == 0 {
        return Err(Error::InvalidPermutation("empty permutation".into()));
    }
    let pairs: Vec<(usize, usize)> = match pairing {
        Some(pairs) => pairs.to_vec(),
        None => (0..m / 2).map(|k| (2 * k + 1, 2 * k + 2)).collect(),
    };
    let mut pair_of = vec![usize::MAX; m + 1];
    if pairs.len() * 2 != m {
        return Err(Error::InvalidPairing(format!(
            "{} pairs cannot cover {m} points",
            pairs.len()
        )));
    }
    for (k, &(a, b)) in pairs.iter().enumerate() {
        for x in [a, b] {
            if x == 0 || x > m || a == b {
                return Err(Error::InvalidPairing(format!("bad pair ({a}, {b})")));
            }
            if pair_of[x] != usize::MAX {
                return Err(Error::InvalidPairing(format!("{x} is in two pairs")));
            }
            pair_of[x] = k + 1;
        }
    }
    let edges: Vec<(String, String)> = (1..=m)
        .map(|i| (pair_of[i].to_string(), pair_of[p.apply(i)].to_string()))
        .collect();
    let graph = Multigraph::from_edge_list(&edges)?;
    let mut partner = vec![0; 2 * m];
    for i in 1..=m {
        let head = 2 * (i - 1) + 1;
        let tail = 2 * (p.apply(i) - 1);
        partner[head] = tail;
        partner[tail] = head;
    }
    let orbit_pairing = Pairing::new(&graph, partner)?;
    Ok(PairDigraph {
        graph: Arc::new(graph),
        permutation: p,
        pairs,
        orbit_pairing,
    })
}

/// Outcome of checking a permutation's orbit count against the circuit
/// partition of its pair digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub size: usize,
    pub extended_size: usize,
    pub orbits: usize,
    pub extended_orbits: usize,
    pub traced: usize,
    pub nullity: usize,
    pub components: usize,
    pub assignment: String,
    pub agree: bool,
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "orbits {} (extended {}), traced {}, nullity {} + components {} = {}: {}",
            self.orbits,
            self.extended_orbits,
            self.traced,
            self.nullity,
            self.components,
            self.nullity + self.components,
            if self.agree { "agree" } else { "MISMATCH" }
        )
    }
}

/// Counts the orbits of `p` through the pair digraph: the orbit partition is
/// expressed as a transition assignment relative to a directed Euler system
/// and `nullity(I_P) + c` is compared with the direct count.
pub fn verify_permutation_reduction(p: &Permutation, cap: usize) -> Result<ReductionReport> {
    if p.size() > cap {
        return Err(Error::SweepTooLarge {
            vertices: p.size(),
            cap,
            sweep: format!("a {}-point reduction", p.size()),
        });
    }
    let d = permutation_to_digraph(p, None)?;
    let es = d.directed_euler_system();
    let t = classify(&es, &d.orbit_pairing);
    let traced = trace_pairing(&d.graph, &d.orbit_pairing).size();
    let nullity = partition_matrix(&es, &t).nullity();
    let components = es.component_count();
    let orbits = p.orbit_count();
    let extended_orbits = d.permutation.orbit_count();
    let consistent = t.choices().iter().all(|&c| c != Transition::Flip);
    Ok(ReductionReport {
        size: p.size(),
        extended_size: d.permutation.size(),
        orbits,
        extended_orbits,
        traced,
        nullity,
        components,
        assignment: t.format(&d.graph),
        agree: consistent
            && orbits == extended_orbits
            && traced == extended_orbits
            && nullity + components == extended_orbits,
    })
}
