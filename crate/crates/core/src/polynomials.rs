//! Interlace polynomials of looped graphs, computed two ways: as sums of
//! GF(2) nullities over vertex subsets, and as generating functions over
//! traced circuit partitions of a 4-regular graph whose (decorated)
//! interlace graph is the looped graph in question.
//!
//! The nullity sums are accumulated as counts in the shifted variables
//! `x - 1`, `y - 1` and expanded once at the end.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::EulerSystem;
use crate::interlace::LoopedGraph;
use crate::partitions::{check_cap, count_circuits, fill_partner_raw, Transition};
use crate::poly::MultiPoly;

/// Default vertex cap for `2^n` subset sweeps.
pub const DEFAULT_SUBSET_CAP: usize = 14;
/// Default vertex cap for `3^n` sweeps over disjoint pairs `(A, B)`.
pub const DEFAULT_PAIR_CAP: usize = 9;

/// Hard limit from the packed-mask representation of vertex subsets.
const MASK_LIMIT: usize = 40;

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        rows.push(row);
    }
    rows
}

fn signed_binomial(table: &[Vec<BigInt>], a: u32, i: u32) -> BigInt {
    let c = table[a as usize][i as usize].clone();
    if (a - i) % 2 == 1 {
        -c
    } else {
        c
    }
}

/// Expands `sum count * (x-1)^a (y-1)^b` over `[x, y]`.
fn expand_xy(counts: &BTreeMap<(u32, u32), u64>) -> MultiPoly {
    let top = counts.keys().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
    let table = binomials(top as usize);
    let mut p = MultiPoly::zero(["x", "y"]);
    for (&(a, b), &c) in counts {
        let c = BigInt::from(c);
        for i in 0..=a {
            let ca = &c * signed_binomial(&table, a, i);
            for j in 0..=b {
                p.add_term(vec![i, j], &ca * signed_binomial(&table, b, j));
            }
        }
    }
    p
}

/// Expands `sum count * (y-1)^b` over `[y]`.
fn expand_y(counts: &BTreeMap<u32, u64>) -> MultiPoly {
    let top = counts.keys().copied().max().unwrap_or(0);
    let table = binomials(top as usize);
    let mut p = MultiPoly::zero(["y"]);
    for (&b, &c) in counts {
        let c = BigInt::from(c);
        for j in 0..=b {
            p.add_term(vec![j], &c * signed_binomial(&table, b, j));
        }
    }
    p
}

fn merge<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Counts of `(|S| - nu, nu)` over all vertex subsets `S`.
fn subset_nullity_counts(h: &LoopedGraph) -> BTreeMap<(u32, u32), u64> {
    let n = h.vertex_count();
    assert!(n <= MASK_LIMIT, "subset sweep over {n} vertices");
    let m = h.matrix();
    (0..1u64 << n)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc, mask| {
            let nu = m.principal_nullity_mask(mask) as u32;
            *acc.entry((mask.count_ones() - nu, nu)).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, merge)
}

/// Vertex-nullity interlace polynomial: `sum_S (y-1)^nullity(A(H)[S])`.
pub fn q_nullity(h: &LoopedGraph) -> MultiPoly {
    let mut by_nu = BTreeMap::new();
    for ((_, nu), c) in subset_nullity_counts(h) {
        *by_nu.entry(nu).or_insert(0) += c;
    }
    expand_y(&by_nu)
}

/// Two-variable interlace polynomial:
/// `sum_S (x-1)^(|S| - nullity) (y-1)^nullity`.
pub fn q_two_variable(h: &LoopedGraph) -> MultiPoly {
    expand_xy(&subset_nullity_counts(h))
}

/// Resolves a loop set to per-vertex flags.
fn loop_flags<S: AsRef<str>>(es: &EulerSystem, loop_set: &[S]) -> Result<Vec<bool>> {
    let mut flags = vec![false; es.graph().vertex_count()];
    for l in loop_set {
        flags[es.graph().vertex(l.as_ref())?] = true;
    }
    Ok(flags)
}

/// `(|S|, |P_S| - c(G))` for every subset `S`, where `P_S` follows `es` off
/// `S`, flips at looped vertices of `S`, and crosses at the rest of `S`.
fn subset_partition_counts(es: &EulerSystem, looped: &[bool]) -> BTreeMap<(u32, u32), u64> {
    let n = looped.len();
    let c = es.component_count();
    let halves = es.graph().half_edge_count();
    let looped_mask: u64 = (0..n).filter(|&v| looped[v]).fold(0, |m, v| m | 1 << v);
    (0..1u64 << n)
        .into_par_iter()
        .fold(
            || (BTreeMap::new(), vec![0usize; halves], Vec::new()),
            |(mut acc, mut partner, mut used), s| {
                let choice = |v: usize| {
                    if s >> v & 1 == 0 {
                        Transition::Follow
                    } else if looped_mask >> v & 1 == 1 {
                        Transition::Flip
                    } else {
                        Transition::Cross
                    }
                };
                fill_partner_raw(es, choice, &mut partner);
                let k = (count_circuits(&partner, &mut used) - c) as u32;
                *acc.entry((s.count_ones(), k)).or_insert(0) += 1;
                (acc, partner, used)
            },
        )
        .map(|(acc, _, _)| acc)
        .reduce(BTreeMap::new, merge)
}

/// `q_N` of the decorated interlace graph, computed from circuit partitions:
/// `sum_S (y-1)^(|P_S| - c(G))`.
pub fn q_from_partitions<S: AsRef<str>>(
    es: &EulerSystem,
    loop_set: &[S],
    cap: usize,
) -> Result<MultiPoly> {
    let looped = loop_flags(es, loop_set)?;
    check_cap(looped.len(), cap.min(MASK_LIMIT), 2)?;
    let mut by_k = BTreeMap::new();
    for ((_, k), c) in subset_partition_counts(es, &looped) {
        *by_k.entry(k).or_insert(0) += c;
    }
    Ok(expand_y(&by_k))
}

/// Two-variable `q` of the decorated interlace graph from circuit
/// partitions: `sum_S (x-1)^(|S| - |P_S| + c(G)) (y-1)^(|P_S| - c(G))`.
pub fn q2_from_partitions<S: AsRef<str>>(
    es: &EulerSystem,
    loop_set: &[S],
    cap: usize,
) -> Result<MultiPoly> {
    let looped = loop_flags(es, loop_set)?;
    check_cap(looped.len(), cap.min(MASK_LIMIT), 2)?;
    let mut counts = BTreeMap::new();
    for ((size, k), c) in subset_partition_counts(es, &looped) {
        if k > size {
            return Err(Error::NegativeExponent {
                a: first_negative_subset(es, &looped, size, k),
                b: Vec::new(),
            });
        }
        *counts.entry((size - k, k)).or_insert(0) += c;
    }
    Ok(expand_xy(&counts))
}

/// Labels of the first subset `S` with `|S| = size` and `|P_S| - c(G) = k`.
fn first_negative_subset(es: &EulerSystem, looped: &[bool], size: u32, k: u32) -> Vec<String> {
    let n = looped.len();
    let c = es.component_count();
    let mut partner = vec![0; es.graph().half_edge_count()];
    let mut used = Vec::new();
    for s in (0..1u64 << n).filter(|s| s.count_ones() == size) {
        let choice = |v: usize| match (s >> v & 1 == 1, looped[v]) {
            (false, _) => Transition::Follow,
            (true, true) => Transition::Flip,
            (true, false) => Transition::Cross,
        };
        fill_partner_raw(es, choice, &mut partner);
        if count_circuits(&partner, &mut used) - c == k as usize {
            return (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .map(|v| es.graph().label(v).to_string())
                .collect();
        }
    }
    Vec::new()
}

/// The variable list of Courcelle's polynomial over `labels`:
/// `u, v, x_<label>..., y_<label>...`.
pub fn courcelle_vars(labels: &[String]) -> Vec<String> {
    let mut vars = vec!["u".to_string(), "v".to_string()];
    vars.extend(labels.iter().map(|l| format!("x_{l}")));
    vars.extend(labels.iter().map(|l| format!("y_{l}")));
    vars
}

/// Decodes a base-3 code into disjoint masks `(A, B)`: digit 1 puts the
/// vertex in `A`, digit 2 in `B`.
fn pair_masks(n: usize, mut code: u64) -> (u64, u64) {
    let (mut a, mut b) = (0, 0);
    for v in 0..n {
        match code % 3 {
            1 => a |= 1 << v,
            2 => b |= 1 << v,
            _ => {}
        }
        code /= 3;
    }
    (a, b)
}

fn courcelle_exponents(n: usize, a: u64, b: u64, u: u32, v: u32) -> Vec<u32> {
    let mut e = vec![0; 2 + 2 * n];
    e[0] = u;
    e[1] = v;
    for i in 0..n {
        e[2 + i] = (a >> i & 1) as u32;
        e[2 + n + i] = (b >> i & 1) as u32;
    }
    e
}

/// Courcelle's multivariate interlace polynomial
/// `sum_{A,B disjoint} x_A y_B u^(|A u B| - nu) v^nu`, where `nu` is the
/// nullity of `(H with loops toggled on B)[A u B]`.
pub fn courcelle(h: &LoopedGraph, cap: usize) -> Result<MultiPoly> {
    let n = h.vertex_count();
    check_cap(n, cap.min(MASK_LIMIT), 3)?;
    let m = h.matrix();
    let exps: Vec<Vec<u32>> = (0..3u64.pow(n as u32))
        .into_par_iter()
        .map(|code| {
            let (a, b) = pair_masks(n, code);
            let nu = m.principal_nullity_mask_toggled(a | b, b) as u32;
            courcelle_exponents(n, a, b, (a | b).count_ones() - nu, nu)
        })
        .collect();
    let mut p = MultiPoly::zero(courcelle_vars(h.labels()));
    for e in exps {
        p.add_term(e, BigInt::one());
    }
    Ok(p)
}

/// Courcelle's polynomial of the decorated interlace graph from circuit
/// partitions. `P_{A,B}` follows `es` off `A u B`, flips at looped vertices
/// of `A` and unlooped vertices of `B`, and crosses elsewhere in `A u B`;
/// the term is `x_A y_B u^(|A u B| - k) v^k` with `k = |P_{A,B}| - c(G)`.
pub fn courcelle_from_partitions<S: AsRef<str>>(
    es: &EulerSystem,
    loop_set: &[S],
    cap: usize,
) -> Result<MultiPoly> {
    let looped = loop_flags(es, loop_set)?;
    let n = looped.len();
    check_cap(n, cap.min(MASK_LIMIT), 3)?;
    let c = es.component_count();
    let halves = es.graph().half_edge_count();
    let looped_mask: u64 = (0..n).filter(|&v| looped[v]).fold(0, |m, v| m | 1 << v);
    let exps: Vec<std::result::Result<Vec<u32>, (u64, u64)>> = (0..3u64.pow(n as u32))
        .into_par_iter()
        .map_init(
            || (vec![0usize; halves], Vec::new()),
            |(partner, used), code| {
                let (a, b) = pair_masks(n, code);
                let flip = (a & looped_mask) | (b & !looped_mask);
                let choice = |v: usize| {
                    if (a | b) >> v & 1 == 0 {
                        Transition::Follow
                    } else if flip >> v & 1 == 1 {
                        Transition::Flip
                    } else {
                        Transition::Cross
                    }
                };
                fill_partner_raw(es, choice, partner);
                let k = (count_circuits(partner, used) - c) as u32;
                let size = (a | b).count_ones();
                if k > size {
                    return Err((a, b));
                }
                Ok(courcelle_exponents(n, a, b, size - k, k))
            },
        )
        .collect();
    let labels = es.graph().labels();
    let mut p = MultiPoly::zero(courcelle_vars(labels));
    for e in exps {
        match e {
            Ok(e) => p.add_term(e, BigInt::one()),
            Err((a, b)) => {
                let names = |m: u64| {
                    (0..n)
                        .filter(|&i| m >> i & 1 == 1)
                        .map(|i| labels[i].clone())
                        .collect()
                };
                return Err(Error::NegativeExponent {
                    a: names(a),
                    b: names(b),
                });
            }
        }
    }
    Ok(p)
}

/// Specialises Courcelle's polynomial over `labels` to the two-variable
/// interlace polynomial: `y_b = 0`, `x_a = 1`, `u = x - 1`, `v = y - 1`.
pub fn specialize_courcelle(p: &MultiPoly, labels: &[String]) -> MultiPoly {
    let xy = ["x", "y"];
    let one = MultiPoly::one(xy);
    let mut bind: HashMap<String, MultiPoly> = HashMap::new();
    for l in labels {
        bind.insert(format!("x_{l}"), one.clone());
        bind.insert(format!("y_{l}"), MultiPoly::zero(xy));
    }
    bind.insert("u".into(), &MultiPoly::var(xy, "x").unwrap() - &one);
    bind.insert("v".into(), &MultiPoly::var(xy, "y").unwrap() - &one);
    p.substitute(&bind)
        .with_vars(&xy)
        .expect("only x and y remain")
}

/// Sets `x = 2` in a two-variable polynomial, leaving a polynomial in `y`.
pub fn at_x_equals_two(p: &MultiPoly) -> MultiPoly {
    let mut bind = HashMap::new();
    bind.insert("x".to_string(), MultiPoly::constant(["y"], 2));
    p.substitute(&bind)
        .with_vars(&["y"])
        .expect("only y remains")
}

/// Convenience: `q_N` of the decorated interlace graph via nullities.
pub fn q_nullity_of_interlace<S: AsRef<str>>(
    es: &EulerSystem,
    loop_set: &[S],
) -> Result<MultiPoly> {
    Ok(q_nullity(&crate::interlace::interlace_graph(es, loop_set)?))
}

/// Subset cap check for nullity-side sweeps.
pub fn check_subset_cap(n: usize, cap: usize) -> Result<()> {
    check_cap(n, cap.min(MASK_LIMIT), 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    fn dow(words: &[&str]) -> EulerSystem {
        let w: Vec<Vec<&str>> = words
            .iter()
            .map(|w| w.split_whitespace().collect())
            .collect();
        Multigraph::from_double_occurrence_words(&w).unwrap().1
    }

    fn single(looped: bool) -> LoopedGraph {
        let loops: Vec<&str> = if looped { vec!["a"] } else { vec![] };
        LoopedGraph::new(&["a"], &[], &loops).unwrap()
    }

    fn y() -> MultiPoly {
        MultiPoly::var(["y"], "y").unwrap()
    }

    #[test]
    fn one_vertex_values() {
        assert_eq!(q_nullity(&single(false)), y());
        assert_eq!(q_nullity(&single(true)), MultiPoly::constant(["y"], 2));
        assert_eq!(q_two_variable(&single(false)).to_string(), "y");
        assert_eq!(q_two_variable(&single(true)).to_string(), "x");
        let empty = LoopedGraph::new::<&str>(&[], &[], &[]).unwrap();
        assert_eq!(q_nullity(&empty).to_string(), "1");
        assert_eq!(
            courcelle(&empty, DEFAULT_PAIR_CAP).unwrap().to_string(),
            "1"
        );
        let c = courcelle(&single(false), DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(c.to_string(), "u*y_a + v*x_a + 1");
    }

    #[test]
    fn isolated_vertices_give_y_to_the_n() {
        for n in 0..6 {
            let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let h = LoopedGraph::new(&labels, &[], &[]).unwrap();
            assert_eq!(q_nullity(&h), y().pow(n as u32));
            let mut pt = HashMap::new();
            pt.insert("y".to_string(), BigInt::from(2));
            assert_eq!(
                q_nullity(&h).evaluate(&pt).unwrap(),
                BigInt::from(1u64 << n)
            );
        }
    }

    #[test]
    fn looped_single_vertex_from_partitions() {
        let es = dow(&["v v"]);
        let q = q_from_partitions(&es, &["v"], DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(q, MultiPoly::constant(["y"], 2));
        let q = q_from_partitions::<&str>(&es, &[], DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(q, y());
    }

    #[test]
    fn k5_partition_and_nullity_sides_agree() {
        let es = dow(&["1 2 3 4 5 1 3 5 2 4"]);
        let labels = es.graph().labels().to_vec();
        for mask in 0u32..32 {
            let loops: Vec<&String> = (0..5)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &labels[i])
                .collect();
            let h = crate::interlace::interlace_graph(&es, &loops).unwrap();
            assert_eq!(q_from_partitions(&es, &loops, 14).unwrap(), q_nullity(&h));
            let q2 = q2_from_partitions(&es, &loops, 14).unwrap();
            assert_eq!(q2, q_two_variable(&h));
            assert_eq!(at_x_equals_two(&q2), q_nullity(&h));
        }
    }

    #[test]
    fn doubled_triangle_courcelle_terms() {
        let es = dow(&["1 2 3 1 2 3"]);
        let c = courcelle_from_partitions::<&str>(&es, &[], DEFAULT_PAIR_CAP).unwrap();
        let h = crate::interlace::interlace_graph::<&str>(&es, &[]).unwrap();
        assert_eq!(c, courcelle(&h, DEFAULT_PAIR_CAP).unwrap());
        assert_eq!(c.coefficient(&[0; 8]), BigInt::one());
        // A = {1,2,3}: all-Cross, nullity(J - I) = 1
        let e = c.coefficient_of(&[("x_1", 1), ("x_2", 1), ("x_3", 1), ("u", 2), ("v", 1)]);
        assert_eq!(e, BigInt::one());
        // B = {1,2,3}: the parallel-pair partition, nullity(J) = 2
        let e = c.coefficient_of(&[("y_1", 1), ("y_2", 1), ("y_3", 1), ("u", 1), ("v", 2)]);
        assert_eq!(e, BigInt::one());
    }

    #[test]
    fn specialisation_chain_on_small_graph() {
        let h = LoopedGraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &["c"]).unwrap();
        let c = courcelle(&h, DEFAULT_PAIR_CAP).unwrap();
        let q2 = q_two_variable(&h);
        assert_eq!(specialize_courcelle(&c, h.labels()), q2);
        assert_eq!(at_x_equals_two(&q2), q_nullity(&h));
        let mut pt = HashMap::new();
        pt.insert("y".to_string(), BigInt::one());
        // at y = 1 only nullity-0 subsets survive
        let nonsingular = (0..8u64)
            .filter(|&m| h.matrix().principal_nullity_mask(m) == 0)
            .count();
        assert_eq!(
            q_nullity(&h).evaluate(&pt).unwrap(),
            BigInt::from(nonsingular)
        );
    }

    #[test]
    fn caps() {
        let labels: Vec<String> = (0..10).map(|i| i.to_string()).collect();
        let h = LoopedGraph::new(&labels, &[], &[]).unwrap();
        assert!(matches!(
            courcelle(&h, DEFAULT_PAIR_CAP),
            Err(Error::SweepTooLarge {
                vertices: 10,
                cap: 9,
                ..
            })
        ));
    }
}
