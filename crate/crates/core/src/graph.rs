//! 4-regular multigraphs on half-edges, and Euler systems over them.
//!
//! Edge `e` owns half-edges `2e` and `2e + 1`; the mate of half-edge `h` is
//! `h ^ 1`. Half-edge ids follow input order, and every tie in this module
//! is broken by the smallest id.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2::strip_comment;

/// Mate of a half-edge: the other end of its edge.
#[inline]
pub fn mate(h: usize) -> usize {
    h ^ 1
}

/// Orders vertex labels: numerically when every label is an integer,
/// lexicographically otherwise.
pub fn sort_labels(labels: &mut [String]) {
    let numeric: Option<Vec<i128>> = labels.iter().map(|l| l.parse().ok()).collect();
    if numeric.is_some() {
        labels.sort_by(|a, b| {
            let (x, y): (i128, i128) = (a.parse().unwrap(), b.parse().unwrap());
            x.cmp(&y).then_with(|| a.cmp(b))
        });
    } else {
        labels.sort();
    }
}

/// An undirected 4-regular multigraph. Loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    half_vertex: Vec<usize>,
    incident: Vec<[usize; 4]>,
    component_of: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl Multigraph {
    /// Builds the multigraph with one edge per pair, in order. `(v, v)` is a
    /// loop. Fails unless every vertex ends up with degree 4.
    pub fn from_edge_list<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut seen = HashMap::new();
        for (u, v) in pairs {
            for l in [u.as_ref(), v.as_ref()] {
                if !seen.contains_key(l) {
                    seen.insert(l.to_string(), ());
                    labels.push(l.to_string());
                }
            }
        }
        sort_labels(&mut labels);
        let index: HashMap<String, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let half_vertex: Vec<usize> = pairs
            .iter()
            .flat_map(|(u, v)| [index[u.as_ref()], index[v.as_ref()]])
            .collect();

        let mut incident = vec![Vec::with_capacity(4); labels.len()];
        for (h, &v) in half_vertex.iter().enumerate() {
            incident[v].push(h);
        }
        if let Some(v) = (0..labels.len()).find(|&v| incident[v].len() != 4) {
            return Err(Error::NotFourRegular {
                label: labels[v].clone(),
                degree: incident[v].len(),
            });
        }
        let incident: Vec<[usize; 4]> = incident
            .into_iter()
            .map(|hs| [hs[0], hs[1], hs[2], hs[3]])
            .collect();

        let mut g = Multigraph {
            labels,
            index,
            half_vertex,
            incident,
            component_of: Vec::new(),
            components: Vec::new(),
        };
        g.compute_components();
        Ok(g)
    }

    /// Builds the multigraph traced by a list of double occurrence words,
    /// together with the Euler system that reads each word in order.
    pub fn from_double_occurrence_words<S: AsRef<str>>(
        words: &[Vec<S>],
    ) -> Result<(Arc<Multigraph>, EulerSystem)> {
        let mut count: HashMap<&str, (usize, usize)> = HashMap::new();
        let mut order: Vec<&str> = Vec::new();
        for (w, word) in words.iter().enumerate() {
            if word.is_empty() {
                return Err(Error::EmptyWord);
            }
            for l in word {
                let l = l.as_ref();
                let e = count.entry(l).or_insert_with(|| {
                    order.push(l);
                    (0, w)
                });
                if e.1 != w {
                    return Err(Error::BadOccurrence {
                        label: l.to_string(),
                        count: e.0 + 1,
                    });
                }
                e.0 += 1;
            }
        }
        if let Some(l) = order.iter().find(|l| count[*l].0 != 2) {
            return Err(Error::BadOccurrence {
                label: l.to_string(),
                count: count[l].0,
            });
        }

        let mut pairs = Vec::new();
        let mut circuits = Vec::new();
        for word in words {
            let start = 2 * pairs.len();
            let len = word.len();
            for k in 0..len {
                pairs.push((word[k].as_ref(), word[(k + 1) % len].as_ref()));
            }
            circuits.push((start..start + 2 * len).collect::<Vec<_>>());
        }
        let g = Arc::new(Multigraph::from_edge_list(&pairs)?);
        let es = EulerSystem::new(g.clone(), circuits)?;
        Ok((g, es))
    }

    /// Parses an edge-list file: one `u v` edge per line.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::parse(
                    lineno + 1,
                    format!("expected `u v`, got `{line}`"),
                ));
            }
            pairs.push((toks[0].to_string(), toks[1].to_string()));
        }
        Self::from_edge_list(&pairs)
    }

    fn compute_components(&mut self) {
        let n = self.labels.len();
        self.component_of = vec![usize::MAX; n];
        self.components.clear();
        for h in 0..self.half_vertex.len() {
            let root = self.half_vertex[h];
            if self.component_of[root] != usize::MAX {
                continue;
            }
            let c = self.components.len();
            let mut part = vec![root];
            self.component_of[root] = c;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &h in &self.incident[v] {
                    let w = self.half_vertex[mate(h)];
                    if self.component_of[w] == usize::MAX {
                        self.component_of[w] = c;
                        part.push(w);
                        stack.push(w);
                    }
                }
            }
            part.sort_unstable();
            self.components.push(part);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.half_vertex.len() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_vertex.len()
    }

    /// Vertex labels in vertex-index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Vertex a half-edge is attached to.
    #[inline]
    pub fn half_vertex(&self, h: usize) -> usize {
        self.half_vertex[h]
    }

    /// The four half-edges at `v`, ascending.
    pub fn incident(&self, v: usize) -> [usize; 4] {
        self.incident[v]
    }

    /// Endpoints of edge `e` as vertex indices.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        (self.half_vertex[2 * e], self.half_vertex[2 * e + 1])
    }

    /// Connected components as sorted vertex-index lists, ordered by their
    /// smallest half-edge id.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    /// Components as label sets.
    pub fn component_labels(&self) -> Vec<Vec<String>> {
        self.components
            .iter()
            .map(|c| c.iter().map(|&v| self.labels[v].clone()).collect())
            .collect()
    }

    /// Edge list in input order, as labels.
    pub fn edge_list(&self) -> Vec<(String, String)> {
        (0..self.edge_count())
            .map(|e| {
                let (u, v) = self.edge(e);
                (self.labels[u].clone(), self.labels[v].clone())
            })
            .collect()
    }
}

/// Direction of a half-edge relative to an Euler system's traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// The circuit leaves the vertex through this half-edge.
    Outgoing,
    /// The circuit arrives at the vertex through this half-edge.
    Incoming,
}

/// One oriented Euler circuit per component of a multigraph.
///
/// A circuit is a cyclic half-edge sequence `s` of even length where
/// `(s[2k], s[2k+1])` traverses one edge and `(s[2k+1], s[2k+2])` is the
/// transition through a vertex. The vertex of `s[2k]` is the `k`-th letter
/// of the circuit's double occurrence word.
#[derive(Debug, Clone)]
pub struct EulerSystem {
    graph: Arc<Multigraph>,
    circuits: Vec<Vec<usize>>,
    /// Per vertex: owning circuit and the two word positions, ascending.
    occurrences: Vec<(usize, [usize; 2])>,
    /// Per half-edge: circuit and position in that circuit.
    position: Vec<(usize, usize)>,
}

impl PartialEq for EulerSystem {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph && self.circuits == other.circuits
    }
}

impl Eq for EulerSystem {}

impl EulerSystem {
    /// Wraps half-edge circuits after checking every Euler-system invariant.
    pub fn new(graph: Arc<Multigraph>, circuits: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidEulerSystem(m));
        let halves = graph.half_edge_count();
        let mut position = vec![(usize::MAX, 0); halves];
        let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); graph.vertex_count()];
        let mut seen_components = vec![false; graph.component_count()];
        for (c, s) in circuits.iter().enumerate() {
            if s.is_empty() || s.len() % 2 != 0 {
                return bad(format!("circuit {c} has odd or zero length"));
            }
            let len = s.len();
            for (i, &h) in s.iter().enumerate() {
                if h >= halves {
                    return bad(format!("half-edge {h} does not exist"));
                }
                if position[h].0 != usize::MAX {
                    return bad(format!("half-edge {h} appears twice"));
                }
                position[h] = (c, i);
                if i % 2 == 0 {
                    if s[i + 1] != mate(h) {
                        return bad(format!("half-edges {h} and {} are not one edge", s[i + 1]));
                    }
                    occ[graph.half_vertex(h)].push((c, i / 2));
                } else if graph.half_vertex(h) != graph.half_vertex(s[(i + 1) % len]) {
                    return bad(format!(
                        "transition {h} -> {} changes vertex",
                        s[(i + 1) % len]
                    ));
                }
            }
            let comp = graph.component_of(graph.half_vertex(s[0]));
            if std::mem::replace(&mut seen_components[comp], true) {
                return bad(format!("two circuits in component {comp}"));
            }
        }
        if let Some(h) = position.iter().position(|p| p.0 == usize::MAX) {
            return bad(format!("half-edge {h} is not covered"));
        }
        let occurrences = occ
            .into_iter()
            .map(|o| {
                debug_assert!(o.len() == 2 && o[0].0 == o[1].0);
                (o[0].0, [o[0].1.min(o[1].1), o[0].1.max(o[1].1)])
            })
            .collect();
        Ok(EulerSystem {
            graph,
            circuits,
            occurrences,
            position,
        })
    }

    /// Hierholzer's algorithm in every component, always leaving along the
    /// smallest unused half-edge. Each circuit starts at the component's
    /// smallest half-edge.
    pub fn hierholzer(graph: Arc<Multigraph>) -> Self {
        Self::hierholzer_with(graph, |_| true)
            .expect("every 4-regular component has an Euler circuit")
    }

    /// Hierholzer restricted to departures through half-edges accepted by
    /// `may_leave`. With `may_leave(h) = h is even` on a 2-in 2-out graph
    /// whose edges run from half `2e` to half `2e + 1`, this yields directed
    /// Euler circuits.
    pub fn hierholzer_with(
        graph: Arc<Multigraph>,
        may_leave: impl Fn(usize) -> bool,
    ) -> Result<Self> {
        let mut used = vec![false; graph.half_edge_count()];
        let mut circuits = Vec::with_capacity(graph.component_count());
        for comp in graph.components() {
            let start = comp
                .iter()
                .flat_map(|&v| graph.incident(v))
                .filter(|&h| may_leave(h))
                .min()
                .ok_or_else(|| Error::InvalidEulerSystem("no departing half-edge".into()))?;
            let mut stack: Vec<usize> = Vec::new();
            let mut out: Vec<usize> = Vec::new();
            let mut cur = graph.half_vertex(start);
            loop {
                let next = graph
                    .incident(cur)
                    .into_iter()
                    .find(|&h| !used[h] && may_leave(h));
                match next {
                    Some(h) => {
                        used[h] = true;
                        used[mate(h)] = true;
                        stack.push(h);
                        cur = graph.half_vertex(mate(h));
                    }
                    None => match stack.pop() {
                        Some(h) => {
                            out.push(h);
                            cur = graph.half_vertex(h);
                        }
                        None => break,
                    },
                }
            }
            out.reverse();
            circuits.push(out.into_iter().flat_map(|h| [h, mate(h)]).collect());
        }
        Self::new(graph, circuits)
    }

    pub fn graph(&self) -> &Arc<Multigraph> {
        &self.graph
    }

    pub fn circuits(&self) -> &[Vec<usize>] {
        &self.circuits
    }

    pub fn component_count(&self) -> usize {
        self.circuits.len()
    }

    /// Double occurrence word of circuit `c`, as vertex indices.
    pub fn word(&self, c: usize) -> Vec<usize> {
        self.circuits[c]
            .iter()
            .step_by(2)
            .map(|&h| self.graph.half_vertex(h))
            .collect()
    }

    /// All double occurrence words, as labels.
    pub fn words(&self) -> Vec<Vec<String>> {
        (0..self.circuits.len())
            .map(|c| {
                self.word(c)
                    .into_iter()
                    .map(|v| self.graph.label(v).to_string())
                    .collect()
            })
            .collect()
    }

    /// Circuit holding `v`, and the two word positions of `v` (ascending).
    pub fn occurrences(&self, v: usize) -> (usize, [usize; 2]) {
        self.occurrences[v]
    }

    /// Circuit and position of a half-edge.
    pub fn position(&self, h: usize) -> (usize, usize) {
        self.position[h]
    }

    /// The two passages of the circuit through `v` as `(incoming, outgoing)`
    /// half-edge pairs, in word order.
    pub fn passages(&self, v: usize) -> [(usize, usize); 2] {
        let (c, [k1, k2]) = self.occurrences[v];
        let s = &self.circuits[c];
        let len = s.len();
        let at = |k: usize| (s[(2 * k + len - 1) % len], s[2 * k]);
        [at(k1), at(k2)]
    }

    /// Direction of each half-edge under this system's traversal.
    pub fn orient(&self) -> DirectedView {
        let dirs = self
            .position
            .iter()
            .map(|&(_, i)| {
                if i % 2 == 0 {
                    Direction::Outgoing
                } else {
                    Direction::Incoming
                }
            })
            .collect();
        DirectedView { dirs }
    }

    /// The same system with circuit `c` traversed backwards.
    pub fn reverse_component(&self, c: usize) -> Self {
        let mut circuits = self.circuits.clone();
        circuits[c].reverse();
        Self::new(self.graph.clone(), circuits).expect("reversal keeps an Euler system valid")
    }

    /// The same system with every circuit reversed.
    pub fn reversed(&self) -> Self {
        let circuits = self
            .circuits
            .iter()
            .map(|s| s.iter().rev().copied().collect())
            .collect();
        Self::new(self.graph.clone(), circuits).expect("reversal keeps an Euler system valid")
    }

    /// Edge set traversed, as a sorted list of edge ids per circuit.
    pub fn edge_sets(&self) -> Vec<Vec<usize>> {
        self.circuits
            .iter()
            .map(|s| {
                let mut e: Vec<usize> = s.iter().step_by(2).map(|h| h / 2).collect();
                e.sort_unstable();
                e
            })
            .collect()
    }
}

/// Direction of every half-edge induced by an Euler system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedView {
    dirs: Vec<Direction>,
}

impl DirectedView {
    pub fn direction(&self, h: usize) -> Direction {
        self.dirs[h]
    }

    pub fn halves_at(&self, g: &Multigraph, v: usize, dir: Direction) -> Vec<usize> {
        g.incident(v)
            .into_iter()
            .filter(|&h| self.dirs[h] == dir)
            .collect()
    }

    /// Directed edges `(tail, head)` as vertex indices, by edge id.
    pub fn arcs(&self, g: &Multigraph) -> Vec<(usize, usize)> {
        (0..g.edge_count())
            .map(|e| {
                let (a, b) = (2 * e, 2 * e + 1);
                if self.dirs[a] == Direction::Outgoing {
                    (g.half_vertex(a), g.half_vertex(b))
                } else {
                    (g.half_vertex(b), g.half_vertex(a))
                }
            })
            .collect()
    }
}

/// Parses a double-occurrence-word file: one component per line.
pub fn parse_dow(text: &str) -> Result<Vec<Vec<String>>> {
    let words: Vec<Vec<String>> = text
        .lines()
        .map(strip_comment)
        .filter(|l| !l.is_empty())
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect();
    Ok(words)
}

/// Least rotation of a cyclic word or its reversal.
pub fn canonical_cyclic<T: Ord + Clone>(word: &[T]) -> Vec<T> {
    let n = word.len();
    let mut best: Option<Vec<T>> = None;
    let rev: Vec<T> = word.iter().rev().cloned().collect();
    for w in [word, &rev[..]] {
        for r in 0..n.max(1) {
            let cand: Vec<T> = w[r..].iter().chain(&w[..r]).cloned().collect();
            if best.as_ref().is_none_or(|b| cand.cmp(b) == Ordering::Less) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dow(words: &[&str]) -> (Arc<Multigraph>, EulerSystem) {
        let w: Vec<Vec<&str>> = words
            .iter()
            .map(|w| w.split_whitespace().collect())
            .collect();
        Multigraph::from_double_occurrence_words(&w).unwrap()
    }

    fn doubled_triangle() -> Multigraph {
        Multigraph::from_edge_list(&[
            ("1", "2"),
            ("1", "2"),
            ("2", "3"),
            ("2", "3"),
            ("3", "1"),
            ("3", "1"),
        ])
        .unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let g = Multigraph::from_edge_list(&[("1", "1"), ("1", "1")]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.incident(0), [0, 1, 2, 3]);
        assert_eq!(doubled_triangle().edge_count(), 6);
        assert_eq!(
            Multigraph::from_edge_list(&[("1", "2")]),
            Err(Error::NotFourRegular {
                label: "1".into(),
                degree: 1
            })
        );
        let empty = Multigraph::from_edge_list::<&str>(&[]).unwrap();
        assert_eq!(empty.component_count(), 0);
    }

    #[test]
    fn label_order() {
        let mut l: Vec<String> = ["10", "9", "2"].iter().map(|s| s.to_string()).collect();
        sort_labels(&mut l);
        assert_eq!(l, ["2", "9", "10"]);
        let mut l: Vec<String> = ["10", "b", "9"].iter().map(|s| s.to_string()).collect();
        sort_labels(&mut l);
        assert_eq!(l, ["10", "9", "b"]);
    }

    #[test]
    fn words_build_graphs() {
        let (g, es) = dow(&["1 2 3 4 5 1 3 5 2 4"]);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 10);
        // K5: every pair of vertices joined exactly once
        let mut pairs: Vec<(usize, usize)> = (0..10)
            .map(|e| {
                let (u, v) = g.edge(e);
                (u.min(v), u.max(v))
            })
            .collect();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 10);
        assert_eq!(
            es.words(),
            vec![["1", "2", "3", "4", "5", "1", "3", "5", "2", "4"]]
        );

        let (g, es) = dow(&["a a"]);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge(0), (0, 0));
        assert_eq!(g.edge(1), (0, 0));
        assert_eq!(es.words(), vec![["a", "a"]]);

        let (g, _) = dow(&["a b a b"]);
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|e| {
            let (u, v) = g.edge(e);
            u != v
        }));
    }

    #[test]
    fn bad_words() {
        let bad = |w: &[&str]| {
            let w: Vec<Vec<&str>> = w.iter().map(|w| w.split_whitespace().collect()).collect();
            Multigraph::from_double_occurrence_words(&w).unwrap_err()
        };
        assert_eq!(
            bad(&["a b a"]),
            Error::BadOccurrence {
                label: "b".into(),
                count: 1
            }
        );
        assert_eq!(
            bad(&["a a a b b"]),
            Error::BadOccurrence {
                label: "a".into(),
                count: 3
            }
        );
        assert!(matches!(bad(&["a b a", "b"]), Error::BadOccurrence { label, .. } if label == "b"));
        assert_eq!(bad(&["a a", ""]), Error::EmptyWord);
    }

    #[test]
    fn components_partition_vertices() {
        assert_eq!(doubled_triangle().component_count(), 1);
        let g = Multigraph::from_edge_list(&[
            ("1", "2"),
            ("a", "b"),
            ("1", "2"),
            ("2", "3"),
            ("2", "3"),
            ("a", "b"),
            ("b", "c"),
            ("3", "1"),
            ("b", "c"),
            ("c", "a"),
            ("3", "1"),
            ("c", "a"),
        ])
        .unwrap();
        assert_eq!(
            g.component_labels(),
            vec![vec!["1", "2", "3"], vec!["a", "b", "c"]]
        );
    }

    #[test]
    fn hierholzer_fixed_outputs() {
        let loops = Arc::new(Multigraph::from_edge_list(&[("v", "v"), ("v", "v")]).unwrap());
        let es = EulerSystem::hierholzer(loops);
        assert_eq!(es.words(), vec![["v", "v"]]);

        // 0→1 reaches 2; smallest unused there is half 3 (back to 1); then 9
        // (to 3), 5 (to 2), 6 (to 3), 10 (to 1).
        let es = EulerSystem::hierholzer(Arc::new(doubled_triangle()));
        assert_eq!(es.words(), vec![["1", "2", "1", "3", "2", "3"]]);
        assert_eq!(es.circuits()[0], vec![0, 1, 3, 2, 9, 8, 5, 4, 6, 7, 10, 11]);

        let (g, _) = dow(&["1 2 3 4 5 1 3 5 2 4"]);
        let es = EulerSystem::hierholzer(g.clone());
        assert_eq!(es.component_count(), 1);
        assert_eq!(es.word(0).len(), 10);
    }

    #[test]
    fn orientation() {
        let (_, es) = dow(&["a a"]);
        let d = es.orient();
        for e in 0..2 {
            assert_ne!(d.direction(2 * e), d.direction(2 * e + 1));
        }
        let (g5, es5) = dow(&["1 2 3 4 5 1 3 5 2 4"]);
        let arcs = es5.orient().arcs(&g5);
        let w = es5.word(0);
        for (k, arc) in arcs.iter().enumerate() {
            assert_eq!(*arc, (w[k], w[(k + 1) % 10]));
        }
        let r = es5.reversed().orient();
        for h in 0..20 {
            assert_ne!(r.direction(h), es5.orient().direction(h));
        }
        for v in 0..5 {
            assert_eq!(es5.orient().halves_at(&g5, v, Direction::Incoming).len(), 2);
        }
    }

    #[test]
    fn validator_rejects_broken_systems() {
        let (g, es) = dow(&["a b a b"]);
        let short: Vec<usize> = es.circuits()[0][..6].to_vec();
        assert!(EulerSystem::new(g.clone(), vec![short]).is_err());
        let mut swapped = es.circuits()[0].clone();
        swapped.swap(1, 3);
        assert!(EulerSystem::new(g.clone(), vec![swapped]).is_err());
        let twice = vec![es.circuits()[0].clone(), es.circuits()[0].clone()];
        assert!(EulerSystem::new(g, twice).is_err());
    }

    #[test]
    fn canonical_words() {
        assert_eq!(canonical_cyclic(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cyclic(&[2, 1, 3]), vec![1, 2, 3]);
        assert_eq!(canonical_cyclic::<u8>(&[]), Vec::<u8>::new());
    }
}
