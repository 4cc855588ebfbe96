//! Interlacement, interlace matrices and graphs, and kappa-transforms of
//! Euler systems.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{strip_comment, Gf2Matrix};
use crate::graph::{sort_labels, EulerSystem};

/// A simple undirected graph that may carry a loop at any vertex, stored as
/// its GF(2) adjacency matrix with loop indicators on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopedGraph {
    matrix: Gf2Matrix,
}

impl LoopedGraph {
    /// Wraps a symmetric matrix; the diagonal marks looped vertices.
    pub fn from_matrix(matrix: Gf2Matrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::Format("adjacency matrix is not symmetric".into()));
        }
        Ok(LoopedGraph { matrix })
    }

    /// Builds a looped graph from vertex labels, undirected edges and looped
    /// vertices. Parallel edges collapse; an edge `(a, a)` is a loop.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)], loops: &[S]) -> Result<Self> {
        let mut m = Gf2Matrix::zeros(vertices.iter().map(|v| v.as_ref().to_string()))?;
        let idx = |l: &S| {
            m.index_of(l.as_ref())
                .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
        };
        let edges: Vec<(usize, usize)> = edges
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<_>>()?;
        let loops: Vec<usize> = loops.iter().map(idx).collect::<Result<_>>()?;
        for (a, b) in edges {
            m.set(a, b, true);
            m.set(b, a, true);
        }
        for l in loops {
            m.set(l, l, true);
        }
        Ok(LoopedGraph { matrix: m })
    }

    /// Parses the looped-graph file format:
    ///
    /// ```text
    /// vertices: a b c
    /// loops: a c
    /// a b
    /// b c
    /// ```
    ///
    /// The `loops:` line is optional. Vertices are kept in the listed order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices: Option<Vec<String>> = None;
        let mut loops: Vec<(usize, String)> = Vec::new();
        let mut edges: Vec<(usize, String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vertices:") {
                if vertices.is_some() {
                    return Err(Error::parse(lineno, "duplicate vertices line"));
                }
                vertices = Some(rest.split_whitespace().map(str::to_string).collect());
            } else if let Some(rest) = line.strip_prefix("loops:") {
                loops.extend(rest.split_whitespace().map(|l| (lineno, l.to_string())));
            } else {
                let toks: Vec<&str> = line.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(Error::parse(
                        lineno,
                        format!("expected `u v`, got `{line}`"),
                    ));
                }
                edges.push((lineno, toks[0].to_string(), toks[1].to_string()));
            }
        }
        let vertices = vertices.ok_or_else(|| Error::parse(1, "missing `vertices:` line"))?;
        let mut m = Gf2Matrix::zeros(vertices).map_err(|e| Error::parse(1, e.to_string()))?;
        let lookup = |m: &Gf2Matrix, line: usize, l: &str| {
            m.index_of(l)
                .ok_or_else(|| Error::parse(line, format!("unknown vertex `{l}`")))
        };
        for (line, l) in &loops {
            let i = lookup(&m, *line, l)?;
            m.set(i, i, true);
        }
        for (line, a, b) in &edges {
            let (i, j) = (lookup(&m, *line, a)?, lookup(&m, *line, b)?);
            m.set(i, j, true);
            m.set(j, i, true);
        }
        Ok(LoopedGraph { matrix: m })
    }

    /// The matrix with adjacency off the diagonal and loops on it.
    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    pub fn labels(&self) -> &[String] {
        self.matrix.labels()
    }

    pub fn vertex_count(&self) -> usize {
        self.matrix.n()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.matrix.get(i, j)
    }

    pub fn looped(&self, i: usize) -> bool {
        self.matrix.get(i, i)
    }

    pub fn loops(&self) -> Vec<String> {
        (0..self.vertex_count())
            .filter(|&i| self.looped(i))
            .map(|i| self.labels()[i].clone())
            .collect()
    }

    /// Disjoint union; labels must not collide.
    pub fn disjoint_union(&self, other: &LoopedGraph) -> Result<Self> {
        let (a, b) = (self.vertex_count(), other.vertex_count());
        let labels = self.labels().iter().chain(other.labels()).cloned();
        let mut m = Gf2Matrix::zeros(labels)?;
        for i in 0..a {
            for j in 0..a {
                m.set(i, j, self.matrix.get(i, j));
            }
        }
        for i in 0..b {
            for j in 0..b {
                m.set(a + i, a + j, other.matrix.get(i, j));
            }
        }
        Ok(LoopedGraph { matrix: m })
    }
}

/// Whether `u` and `v` (vertex indices) alternate `u v u v` in their circuit.
pub fn interlaced_index(es: &EulerSystem, u: usize, v: usize) -> bool {
    let (cu, [p1, p2]) = es.occurrences(u);
    let (cv, [q1, q2]) = es.occurrences(v);
    if u == v || cu != cv {
        return false;
    }
    let inside = |q: usize| p1 < q && q < p2;
    inside(q1) != inside(q2)
}

/// Whether two labelled vertices are interlaced in `es`.
pub fn interlaced(es: &EulerSystem, u: &str, v: &str) -> Result<bool> {
    let g = es.graph();
    Ok(interlaced_index(es, g.vertex(u)?, g.vertex(v)?))
}

/// The interlace matrix: entry `(u, v)` is 1 iff `u != v` are interlaced.
/// Rows follow the graph's vertex order.
pub fn interlace_matrix(es: &EulerSystem) -> Gf2Matrix {
    let g = es.graph();
    let n = g.vertex_count();
    let mut m = Gf2Matrix::zeros(g.labels().iter().cloned()).expect("graph labels are distinct");
    for u in 0..n {
        for v in u + 1..n {
            if interlaced_index(es, u, v) {
                m.set(u, v, true);
                m.set(v, u, true);
            }
        }
    }
    m
}

/// The interlace graph of `es` with loops attached at `loop_set`.
pub fn interlace_graph<S: AsRef<str>>(es: &EulerSystem, loop_set: &[S]) -> Result<LoopedGraph> {
    let mut m = interlace_matrix(es);
    for l in loop_set {
        let i = es.graph().vertex(l.as_ref())?;
        m.set(i, i, true);
    }
    Ok(LoopedGraph { matrix: m })
}

/// Like [`interlace_graph`] with the loop set given by vertex index.
pub fn interlace_graph_indexed(es: &EulerSystem, looped: &[bool]) -> LoopedGraph {
    let mut m = interlace_matrix(es);
    for (i, &l) in looped.iter().enumerate() {
        if l {
            m.set(i, i, true);
        }
    }
    LoopedGraph { matrix: m }
}

/// Kappa-transform at vertex index `a`: writing a's circuit as
/// `a C1 a C2` from the first occurrence of `a`, returns `a C1 a rev(C2)`.
/// The transformed circuit starts at that first occurrence; other circuits
/// are untouched.
pub fn kappa_transform_index(es: &EulerSystem, a: usize) -> EulerSystem {
    let (c, [k1, k2]) = es.occurrences(a);
    let s = &es.circuits()[c];
    let len = s.len();
    let rotated: Vec<usize> = (0..len).map(|i| s[(2 * k1 + i) % len]).collect();
    let split = 2 * (k2 - k1);
    let mut out = rotated[..split].to_vec();
    out.extend(rotated[split..].iter().rev());
    let mut circuits = es.circuits().to_vec();
    circuits[c] = out;
    EulerSystem::new(es.graph().clone(), circuits).expect("kappa-transform is an Euler system")
}

/// Kappa-transform at a labelled vertex.
pub fn kappa_transform(es: &EulerSystem, a: &str) -> Result<EulerSystem> {
    Ok(kappa_transform_index(es, es.graph().vertex(a)?))
}

/// The double transform `C*a*b*a`.
pub fn double_transform(es: &EulerSystem, a: &str, b: &str) -> Result<EulerSystem> {
    let e = kappa_transform(es, a)?;
    let e = kappa_transform(&e, b)?;
    kappa_transform(&e, a)
}

/// Outcome of comparing interlacement before and after a kappa-transform.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToggleReport {
    pub vertex: String,
    pub pairs_checked: usize,
    pub toggled: usize,
    /// Pairs whose interlacement changed (or failed to change) against the
    /// toggle law.
    pub violations: Vec<(String, String)>,
    /// Vertices whose interlacement with `vertex` itself changed.
    pub row_changes: Vec<String>,
}

impl ToggleReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.row_changes.is_empty()
    }
}

/// Checks the toggle law at `a`: for `v, w != a`, interlacement flips under
/// the kappa-transform exactly when both `v` and `w` are interlaced with `a`.
pub fn interlacement_toggle_check(es: &EulerSystem, a: &str) -> Result<ToggleReport> {
    let g = es.graph();
    let ai = g.vertex(a)?;
    let after = kappa_transform_index(es, ai);
    let n = g.vertex_count();
    let mut report = ToggleReport {
        vertex: a.to_string(),
        pairs_checked: 0,
        toggled: 0,
        violations: Vec::new(),
        row_changes: Vec::new(),
    };
    for v in (0..n).filter(|&v| v != ai) {
        if interlaced_index(es, ai, v) != interlaced_index(&after, ai, v) {
            report.row_changes.push(g.label(v).to_string());
        }
        for w in (v + 1..n).filter(|&w| w != ai) {
            report.pairs_checked += 1;
            let changed = interlaced_index(es, v, w) != interlaced_index(&after, v, w);
            let expected = interlaced_index(es, v, ai) && interlaced_index(es, w, ai);
            if changed {
                report.toggled += 1;
            }
            if changed != expected {
                report
                    .violations
                    .push((g.label(v).to_string(), g.label(w).to_string()));
            }
        }
    }
    Ok(report)
}

/// Parses a comma- or whitespace-separated label list.
pub fn parse_label_set(text: &str) -> Vec<String> {
    let set: BTreeSet<String> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect();
    let mut v: Vec<String> = set.into_iter().collect();
    sort_labels(&mut v);
    v
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

    const K5: &str = "1 2 3 4 5 1 3 5 2 4";

    #[test]
    fn interlacement_examples() {
        let es = dow(&[K5]);
        assert!(interlaced(&es, "1", "2").unwrap());
        assert!(!interlaced(&es, "2", "3").unwrap());
        assert!(interlaced(&es, "3", "5").unwrap());
        assert!(interlaced(&dow(&["a b a b"]), "a", "b").unwrap());
        assert!(!interlaced(&dow(&["a a b b"]), "a", "b").unwrap());
        assert!(!interlaced(&dow(&["a b a b", "c c"]), "a", "c").unwrap());
        assert!(interlaced(&es, "1", "9").is_err());
    }

    #[test]
    fn k5_interlace_matrix() {
        let es = dow(&[K5]);
        let m = interlace_matrix(&es);
        assert!(m.is_symmetric());
        let sub = m.principal_submatrix(&["2", "3", "4", "5"]).unwrap();
        assert_eq!(
            sub.to_rows(),
            vec![
                vec![0, 0, 1, 0],
                vec![0, 0, 1, 1],
                vec![1, 1, 0, 0],
                vec![0, 1, 0, 0]
            ]
        );
        // vertex 1 is interlaced with every other vertex
        assert_eq!(m.to_rows()[0], vec![0, 1, 1, 1, 1]);
    }

    #[test]
    fn small_interlace_matrices() {
        assert_eq!(interlace_matrix(&dow(&["v v"])).to_rows(), vec![vec![0]]);
        let m = interlace_matrix(&dow(&["a b a b", "c d c d"]));
        assert_eq!(
            m.to_rows(),
            vec![
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 1, 0]
            ]
        );
    }

    #[test]
    fn decorated_interlace_graphs() {
        let es = dow(&[K5]);
        let plain = interlace_graph::<&str>(&es, &[]).unwrap();
        assert_eq!(plain.matrix(), &interlace_matrix(&es));
        let h = interlace_graph(&es, &["2", "3"]).unwrap();
        let sub = h
            .matrix()
            .principal_submatrix(&["2", "3", "4", "5"])
            .unwrap();
        assert_eq!(
            sub.to_rows(),
            vec![
                vec![1, 0, 1, 0],
                vec![0, 1, 1, 1],
                vec![1, 1, 0, 0],
                vec![0, 1, 0, 0]
            ]
        );
        let all = interlace_graph(&es, &["1", "2", "3", "4", "5"]).unwrap();
        assert!((0..5).all(|i| all.looped(i)));
        assert_eq!(
            interlace_graph(&es, &["7"]),
            Err(Error::UnknownLabel("7".into()))
        );
    }

    #[test]
    fn kappa_examples() {
        let es = dow(&["a b a b"]);
        let t = kappa_transform(&es, "a").unwrap();
        assert_eq!(t.words(), vec![["a", "b", "a", "b"]]);

        let es = dow(&["a x b y a x z b y w z w"]);
        let t = double_transform(&es, "a", "b").unwrap();
        // a C1 b C2 a C3 b C4 -> a C1 b C4 a C3 b C2
        let word: Vec<String> = t.words()[0].clone();
        let got = crate::graph::canonical_cyclic(&word);
        let want = crate::graph::canonical_cyclic(
            &["a", "x", "b", "y", "w", "z", "w", "a", "x", "z", "b", "y"].map(String::from),
        );
        assert_eq!(got, want);

        let es = dow(&["a a"]);
        let t = kappa_transform(&es, "a").unwrap();
        assert_eq!(t.words(), vec![["a", "a"]]);
        assert!(kappa_transform(&es, "q").is_err());
    }

    #[test]
    fn kappa_involution_on_k5() {
        let es = dow(&[K5]);
        for v in es.graph().labels().to_vec() {
            let once = kappa_transform(&es, &v).unwrap();
            let twice = kappa_transform(&once, &v).unwrap();
            let w0 = crate::graph::canonical_cyclic(&es.word(0));
            let w2 = crate::graph::canonical_cyclic(&twice.word(0));
            assert_eq!(w0, w2);
            assert_eq!(once.edge_sets(), es.edge_sets());
        }
    }

    #[test]
    fn toggle_examples() {
        let r = interlacement_toggle_check(&dow(&["a a b c b c"]), "a").unwrap();
        assert!(r.holds());
        assert_eq!(r.toggled, 0);

        let r = interlacement_toggle_check(&dow(&["a b c a b c"]), "a").unwrap();
        assert!(r.holds());
        assert_eq!(r.toggled, 1);

        let r = interlacement_toggle_check(&dow(&[K5]), "1").unwrap();
        assert!(r.holds());
        assert_eq!(r.pairs_checked, 6);
        assert_eq!(r.toggled, 6);
    }

    #[test]
    fn looped_graph_file() {
        let h = LoopedGraph::parse("vertices: a b c\nloops: a c\na b\nb c\n# x\n").unwrap();
        assert_eq!(h.loops(), vec!["a", "c"]);
        assert!(h.adjacent(0, 1) && h.adjacent(1, 2) && !h.adjacent(0, 2));
        assert!(matches!(
            LoopedGraph::parse("vertices: a\na z\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        let g = LoopedGraph::new(&["p", "q"], &[("p", "q"), ("p", "q")], &["q"]).unwrap();
        assert_eq!(g.matrix().to_rows(), vec![vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn label_sets() {
        assert_eq!(parse_label_set("3,1, 2"), vec!["1", "2", "3"]);
        assert!(parse_label_set("").is_empty());
    }
}
