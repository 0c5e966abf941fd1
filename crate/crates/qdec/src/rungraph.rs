//! Fibonacci-run graphs: the induced subgraphs of the hypercube on
//! run-constrained strings (every 1-run immediately followed by a
//! strictly longer 0-run). Vertices of R_n are the reversals of the
//! 1-decreasing words of length n+2 starting with 0, and reversing
//! the recursive 1-Gray code yields a Hamiltonian path.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::generation::{gray1_z, WordList};
use crate::word::Word;
use crate::Error;

/// Vertex and edge sets of the Fibonacci-run graph R_n. Vertices are
/// words of length n+2 and the edge set is exactly the set of pairs
/// at Hamming distance 1. Immutable once built.
#[derive(Debug, Clone)]
pub struct RunGraph {
    n: usize,
    vertices: Vec<Word>,
    edges: Vec<(usize, usize)>,
}

impl RunGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    /// Edges as index pairs (i, j) with i < j into `vertices`,
    /// sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.vertices.binary_search(w).is_ok()
    }

    /// Labels with the trailing two zeros dropped, matching the
    /// shorter vertex names used elsewhere for these graphs. Every
    /// vertex ends in 00 because the underlying words start with 00.
    pub fn short_labels(&self) -> Vec<String> {
        self.vertices
            .iter()
            .map(|w| {
                let s = w.to_string();
                debug_assert!(s.ends_with("00"));
                s[..s.len() - 2].to_string()
            })
            .collect()
    }
}

/// Build R_n: reverse every word of the length-(n+2) zero-led 1-Gray
/// code, then connect all pairs at Hamming distance 1 via single-bit
/// flips against a hash set.
pub fn build_run_graph(n: usize) -> RunGraph {
    assert!(n >= 1);
    let len = n + 2;
    let mut vertices: Vec<Word> = gray1_z(len)
        .into_words()
        .into_iter()
        .map(|w| w.reversed())
        .collect();
    vertices.sort();
    let index: HashMap<&Word, usize> = vertices.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    for (i, w) in vertices.iter().enumerate() {
        for bit in 0..len {
            let mut flipped = w.clone();
            flipped.flip(bit);
            if let Some(&j) = index.get(&flipped) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    RunGraph { n, vertices, edges }
}

/// The Hamiltonian path of R_n: the zero-led 1-Gray code of length
/// n+2 with every word reversed, in list order.
pub fn hamiltonian_path(n: usize) -> WordList {
    assert!(n >= 1);
    let reversed: Vec<Word> = gray1_z(n + 2)
        .into_words()
        .into_iter()
        .map(|w| w.reversed())
        .collect();
    WordList::from_words(reversed)
}

/// Whether a path closes into a cycle: its endpoints are adjacent and
/// it has at least 3 vertices.
pub fn is_hamiltonian_cycle(path: &WordList) -> bool {
    if path.len() < 3 {
        return false;
    }
    match (path.first(), path.last()) {
        (Some(a), Some(b)) => a.hamming(b) == Ok(1),
        _ => false,
    }
}

/// Render the graph as deterministic DOT text: nodes sorted
/// lexicographically, edges sorted; when a path is given its edges
/// are drawn bold and colored with arrowheads following the path,
/// remaining edges dashed.
pub fn export_dot(g: &RunGraph, path: Option<&WordList>) -> Result<String, Error> {
    // orientation of each path edge, keyed by sorted vertex pair:
    // true when the path walks from the smaller word to the larger
    let mut path_dir: HashMap<(usize, usize), bool> = HashMap::new();
    if let Some(p) = path {
        let mut idx = Vec::with_capacity(p.len());
        for w in p.words() {
            match g.vertices.binary_search(w) {
                Ok(i) => idx.push(i),
                Err(_) => return Err(Error::PathVertexNotInGraph(w.to_string())),
            }
        }
        for pair in idx.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let key = (a.min(b), a.max(b));
            path_dir.insert(key, a < b);
        }
    }

    let mut out = String::new();
    writeln!(out, "graph run_graph_{} {{", g.n).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for w in &g.vertices {
        writeln!(out, "  \"{w}\";").unwrap();
    }
    for &(i, j) in &g.edges {
        let (a, b) = (&g.vertices[i], &g.vertices[j]);
        match path_dir.get(&(i, j)) {
            Some(true) => writeln!(
                out,
                "  \"{a}\" -- \"{b}\" [color=blue, style=bold, dir=forward];"
            )
            .unwrap(),
            Some(false) => writeln!(
                out,
                "  \"{a}\" -- \"{b}\" [color=blue, style=bold, dir=back];"
            )
            .unwrap(),
            None if path.is_some() => {
                writeln!(out, "  \"{a}\" -- \"{b}\" [style=dashed];").unwrap()
            }
            None => writeln!(out, "  \"{a}\" -- \"{b}\";").unwrap(),
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}
