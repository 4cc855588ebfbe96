//! Brute-force oracles and random generators shared by integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use interlace_core::graph::{EulerSystem, Multigraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Nullity over GF(2) by plain row reduction on bytes.
pub fn nullity(rows: &[Vec<u8>]) -> usize {
    let n = rows.len();
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| m[r][col] == 1) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] == 1 {
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x ^= p;
                }
            }
        }
        rank += 1;
    }
    n - rank
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) -> bool {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra == rb {
        return false;
    }
    parent[ra] = rb;
    true
}

/// Circuits of a transition pairing: every half-edge meets its mate and its
/// partner, so each circuit is one union-find class.
pub fn circuit_count(partner: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..partner.len()).collect();
    let mut classes = partner.len();
    for (h, &p) in partner.iter().enumerate() {
        if union(&mut parent, h, h ^ 1) {
            classes -= 1;
        }
        if union(&mut parent, h, p) {
            classes -= 1;
        }
    }
    classes
}

/// Connected components of a graph given by its vertex count and edges.
pub fn component_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut classes = n;
    for &(u, v) in edges {
        if union(&mut parent, u, v) {
            classes -= 1;
        }
    }
    classes
}

pub fn graph_edges(g: &Multigraph) -> Vec<(usize, usize)> {
    (0..g.edge_count()).map(|e| g.edge(e)).collect()
}

/// Interlace matrix straight from the words: `u` and `v` are interlaced when
/// exactly one occurrence of `v` lies strictly between the occurrences of `u`.
pub fn interlace_rows(es: &EulerSystem) -> Vec<Vec<u8>> {
    let n = es.graph().vertex_count();
    let mut m = vec![vec![0u8; n]; n];
    for c in 0..es.component_count() {
        let w = es.word(c);
        let pos = |v: usize| -> Vec<usize> {
            w.iter()
                .enumerate()
                .filter(|(_, &x)| x == v)
                .map(|(i, _)| i)
                .collect()
        };
        let verts: Vec<usize> = {
            let mut v = w.clone();
            v.sort();
            v.dedup();
            v
        };
        for &u in &verts {
            let pu = pos(u);
            for &v in &verts {
                if u == v {
                    continue;
                }
                let between = pos(v).iter().filter(|&&p| pu[0] < p && p < pu[1]).count();
                m[u][v] = (between == 1) as u8;
            }
        }
    }
    m
}

/// `I_P` from interlace rows and per-vertex codes `F`, `C`, `X`.
pub fn partition_rows(interlace: &[Vec<u8>], codes: &[char]) -> Vec<Vec<u8>> {
    let keep: Vec<usize> = (0..codes.len()).filter(|&v| codes[v] != 'F').collect();
    keep.iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| {
                    if i == j {
                        (codes[i] == 'X') as u8
                    } else {
                        interlace[i][j]
                    }
                })
                .collect()
        })
        .collect()
}

/// A uniformly random perfect matching of the `4n` vertex ends: a random
/// 4-regular multigraph with loops and parallels, possibly disconnected.
pub fn random_four_regular<R: Rng>(rng: &mut R, n: usize) -> Multigraph {
    let mut ends: Vec<usize> = (0..4 * n).map(|i| i / 4 + 1).collect();
    ends.shuffle(rng);
    let edges: Vec<(String, String)> = ends
        .chunks(2)
        .map(|p| (p[0].to_string(), p[1].to_string()))
        .collect();
    Multigraph::from_edge_list(&edges).unwrap()
}

/// Random double occurrence words on `1..=n`, split over one to three
/// components.
pub fn random_words<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<String>> {
    let parts = rng.gen_range(1..=3.min(n));
    let mut group: Vec<usize> = (0..n)
        .map(|i| {
            if i < parts {
                i
            } else {
                rng.gen_range(0..parts)
            }
        })
        .collect();
    group.shuffle(rng);
    (0..parts)
        .map(|p| {
            let mut w: Vec<String> = (0..n)
                .filter(|&v| group[v] == p)
                .flat_map(|v| [(v + 1).to_string(), (v + 1).to_string()])
                .collect();
            w.shuffle(rng);
            w
        })
        .collect()
}

pub fn random_euler_system<R: Rng>(rng: &mut R, n: usize) -> EulerSystem {
    Multigraph::from_double_occurrence_words(&random_words(rng, n))
        .unwrap()
        .1
}

pub fn hierholzer<R: Rng>(rng: &mut R, n: usize) -> EulerSystem {
    EulerSystem::hierholzer(Arc::new(random_four_regular(rng, n)))
}

/// Orbits of a one-based image list.
pub fn orbits(images: &[usize]) -> usize {
    let mut seen = vec![false; images.len()];
    let mut count = 0;
    for s in 0..images.len() {
        if !seen[s] {
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = images[x] - 1;
            }
        }
    }
    count
}

/// `(1 2 ... m)` followed by the given transpositions, as one-based images.
pub fn compose(m: usize, transpositions: &[(usize, usize)]) -> Vec<usize> {
    (1..=m)
        .map(|i| {
            let mut x = i % m + 1;
            for &(a, b) in transpositions {
                if x == a {
                    x = b;
                } else if x == b {
                    x = a;
                }
            }
            x
        })
        .collect()
}

/// Random disjoint transpositions of `{1, ..., m}`.
pub fn random_transpositions<R: Rng>(rng: &mut R, m: usize) -> Vec<(usize, usize)> {
    let mut pts: Vec<usize> = (1..=m).collect();
    pts.shuffle(rng);
    let k = rng.gen_range(0..=m / 2);
    (0..k).map(|i| (pts[2 * i], pts[2 * i + 1])).collect()
}
