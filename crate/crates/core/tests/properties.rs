mod common;

use std::collections::{HashMap, HashSet};

use interlace_core::graph::{Direction, EulerSystem};
use interlace_core::interlace::{interlace_matrix, LoopedGraph};
use interlace_core::partitions::trace_pairing;
use interlace_core::partitions::{
    classify, partition_matrix, trace, transition_pairing, TransitionAssignment,
};
use interlace_core::permutations::{orbit_count_via_nullity, permutation_to_digraph, Permutation};
use interlace_core::poly::MultiPoly;
use interlace_core::polynomials::{courcelle, q_nullity, q_two_variable, DEFAULT_PAIR_CAP};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_looped<R: Rng>(rng: &mut R, prefix: &str, n: usize) -> LoopedGraph {
    let vs: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((vs[i].clone(), vs[j].clone()));
            }
        }
    }
    let loops: Vec<String> = vs.iter().filter(|_| rng.gen_bool(0.3)).cloned().collect();
    LoopedGraph::new(&vs, &edges, &loops).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_systems_satisfy_invariants(seed in any::<u64>(), n in 1usize..8) {
        let es = common::hierholzer(&mut rng(seed), n);
        let g = es.graph().clone();
        prop_assert!(EulerSystem::new(g.clone(), es.circuits().to_vec()).is_ok());
        let mut seen = vec![0; n];
        for c in 0..es.component_count() {
            for v in es.word(c) {
                seen[v] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&k| k == 2));
        let parts: usize = g.components().iter().map(|c| c.len()).sum();
        prop_assert_eq!(parts, n);
        prop_assert_eq!(g.component_count(), common::component_count(n, &common::graph_edges(&g)));
        let view = es.orient();
        for v in 0..n {
            prop_assert_eq!(view.halves_at(&g, v, Direction::Incoming).len(), 2);
            prop_assert_eq!(view.halves_at(&g, v, Direction::Outgoing).len(), 2);
        }
    }

    #[test]
    fn interlace_matrix_shape(seed in any::<u64>(), n in 1usize..9) {
        let es = common::random_euler_system(&mut rng(seed), n);
        let m = interlace_matrix(&es);
        let g = es.graph();
        prop_assert!(m.is_symmetric());
        prop_assert_eq!(m.to_rows(), common::interlace_rows(&es));
        for u in 0..n {
            prop_assert!(!m.get(u, u));
            for v in 0..n {
                if m.get(u, v) {
                    prop_assert_eq!(g.component_of(u), g.component_of(v));
                }
            }
        }
    }

    #[test]
    fn orientation_reversal_changes_nothing(seed in any::<u64>(), n in 1usize..8) {
        let mut r = rng(seed);
        let es = common::hierholzer(&mut r, n);
        let code = r.gen_range(0..3u64.pow(n as u32));
        let t = TransitionAssignment::from_index(n, code);
        for other in std::iter::once(es.reversed())
            .chain((0..es.component_count()).map(|c| es.reverse_component(c)))
        {
            prop_assert_eq!(trace(&other, &t), trace(&es, &t));
            prop_assert_eq!(partition_matrix(&other, &t), partition_matrix(&es, &t));
        }
    }

    #[test]
    fn disjoint_unions(seed in any::<u64>(), n1 in 0usize..5, n2 in 0usize..5) {
        let mut r = rng(seed);
        let (h1, h2) = (random_looped(&mut r, "a", n1), random_looped(&mut r, "b", n2));
        let h = h1.disjoint_union(&h2).unwrap();
        prop_assert_eq!(q_nullity(&h), &q_nullity(&h1) * &q_nullity(&h2));
        prop_assert_eq!(q_two_variable(&h), &q_two_variable(&h1) * &q_two_variable(&h2));
        let c = courcelle(&h, DEFAULT_PAIR_CAP).unwrap();
        let c1 = courcelle(&h1, DEFAULT_PAIR_CAP).unwrap();
        let c2 = courcelle(&h2, DEFAULT_PAIR_CAP).unwrap();
        prop_assert_eq!(&c, &(&c1 * &c2));
        prop_assert_eq!(MultiPoly::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn partition_sizes_add_over_components(seed in any::<u64>(), n in 2usize..8) {
        let mut r = rng(seed);
        let es = common::random_euler_system(&mut r, n);
        let t = TransitionAssignment::from_index(n, r.gen_range(0..3u64.pow(n as u32)));
        let p = trace(&es, &t);
        let g = es.graph();
        let mut per_component = vec![0; g.component_count()];
        for c in p.circuits() {
            per_component[g.component_of(g.half_vertex(c[0]))] += 1;
        }
        prop_assert_eq!(per_component.iter().sum::<usize>(), p.size());
        let ip = partition_matrix(&es, &t);
        for i in 0..ip.n() {
            for j in 0..ip.n() {
                if i != j && ip.get(i, j) {
                    let (u, v) = (g.vertex(&ip.labels()[i]).unwrap(), g.vertex(&ip.labels()[j]).unwrap());
                    prop_assert_eq!(g.component_of(u), g.component_of(v));
                }
            }
        }
    }

    #[test]
    fn evaluations_count_subsets(seed in any::<u64>(), n in 0usize..8) {
        let h = random_looped(&mut rng(seed), "v", n);
        let rows = h.matrix().to_rows();
        let nonsingular = (0..1u32 << n)
            .filter(|s| {
                let keep: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
                let sub: Vec<Vec<u8>> = keep.iter().map(|&i| keep.iter().map(|&j| rows[i][j]).collect()).collect();
                common::nullity(&sub) == 0
            })
            .count();
        let at = |y: i64| HashMap::from([("y".to_string(), BigInt::from(y))]);
        prop_assert_eq!(q_nullity(&h).evaluate(&at(1)).unwrap(), BigInt::from(nonsingular));
        let edgeless = LoopedGraph::new::<String>(h.labels(), &[], &[]).unwrap();
        prop_assert_eq!(q_nullity(&edgeless).evaluate(&at(2)).unwrap(), BigInt::from(1u64 << n));
    }

    #[test]
    fn transposition_orbits(seed in any::<u64>(), m in 1usize..24) {
        let ts = common::random_transpositions(&mut rng(seed), m);
        let mut shuffled = ts.clone();
        shuffled.reverse();
        let want = common::orbits(&common::compose(m, &ts));
        prop_assert_eq!(common::orbits(&common::compose(m, &shuffled)), want);
        prop_assert_eq!(orbit_count_via_nullity(m, &ts).unwrap(), want);
    }

    #[test]
    fn pairing_independence(seed in any::<u64>(), half in 1usize..8) {
        let mut r = rng(seed);
        let m = 2 * half;
        let mut images: Vec<usize> = (1..=m).collect();
        images.shuffle(&mut r);
        let p = Permutation::from_images(&images).unwrap();
        let mut pts: Vec<usize> = (1..=m).collect();
        pts.shuffle(&mut r);
        let pairs: Vec<(usize, usize)> = pts.chunks(2).map(|c| (c[0], c[1])).collect();
        let want = common::orbits(&images);
        for pairing in [None, Some(pairs.as_slice())] {
            let d = permutation_to_digraph(&p, pairing).unwrap();
            prop_assert_eq!(trace_pairing(&d.graph, &d.orbit_pairing).size(), want);
            let es = d.directed_euler_system();
            let t = classify(&es, &d.orbit_pairing);
            prop_assert_eq!(partition_matrix(&es, &t).nullity() + es.component_count(), want);
        }
    }
}

#[test]
fn assignments_and_pairings_correspond() {
    let mut r = rng(11);
    for n in 1..=5 {
        let es = common::hierholzer(&mut r, n);
        let mut seen = HashSet::new();
        for code in 0..3u64.pow(n as u32) {
            let t = TransitionAssignment::from_index(n, code);
            let pairing = transition_pairing(&es, &t);
            assert_eq!(classify(&es, &pairing), t);
            assert!(seen.insert(pairing));
        }
    }
}
