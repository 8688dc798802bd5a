//! Grid graphs of k-bonacci polyominoes: cell corners are vertices and cell
//! sides are edges.

mod hamilton;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyomino::Polyomino;
use crate::words::Word;

/// Lattice point `(x, y)`.
pub type Point = (i64, i64);

/// An undirected lattice graph with vertices sorted by `(x, y)` and edges
/// stored as sorted index pairs `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridGraph {
    vertices: Vec<Point>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct DegreeProfile {
    pub d2: usize,
    pub d3: usize,
    pub d4: usize,
}

impl DegreeProfile {
    pub fn total(&self) -> usize {
        self.d2 + self.d3 + self.d4
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.d2, self.d3, self.d4]
    }
}

impl GridGraph {
    fn from_point_edges(edge_set: BTreeSet<(Point, Point)>) -> Self {
        let vertices: Vec<Point> = edge_set
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index = |p: &Point| vertices.binary_search(p).expect("endpoint is a vertex");
        let mut edges: Vec<(usize, usize)> = edge_set
            .iter()
            .map(|(a, b)| {
                let (i, j) = (index(a), index(b));
                (i.min(j), i.max(j))
            })
            .collect();
        edges.sort_unstable();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for &(i, j) in &edges {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        GridGraph {
            vertices,
            edges,
            adjacency,
        }
    }

    /// Union of the corners and sides of every cell.
    pub fn from_polyomino(p: &Polyomino) -> Self {
        let mut sides = BTreeSet::new();
        for (x, y) in p.cells() {
            let corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)];
            for i in 0..4 {
                let (a, b) = (corners[i], corners[(i + 1) % 4]);
                sides.insert((a.min(b), a.max(b)));
            }
        }
        Self::from_point_edges(sides)
    }

    pub fn from_word(w: &Word) -> Result<Self> {
        Ok(Self::from_polyomino(&Polyomino::from_word(w)?))
    }

    /// The grid `P_rows × P_cols`: `rows · cols` vertices. Needs at least two
    /// vertices so that there is an edge.
    pub fn grid(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 || rows * cols < 2 {
            return Err(Error::Domain(format!("grid {rows}x{cols} has no edges")));
        }
        let mut sides = BTreeSet::new();
        for x in 0..cols as i64 {
            for y in 0..rows as i64 {
                if x + 1 < cols as i64 {
                    sides.insert(((x, y), (x + 1, y)));
                }
                if y + 1 < rows as i64 {
                    sides.insert(((x, y), (x, y + 1)));
                }
            }
        }
        Ok(Self::from_point_edges(sides))
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Counts of degree-2, -3 and -4 vertices. Any other degree is an
    /// invariant violation for k-bonacci graphs.
    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        let mut profile = DegreeProfile::default();
        for v in 0..self.vertex_count() {
            match self.degree(v) {
                2 => profile.d2 += 1,
                3 => profile.d3 += 1,
                4 => profile.d4 += 1,
                d => {
                    return Err(Error::Invariant(format!(
                        "vertex {:?} has degree {d}",
                        self.vertices[v]
                    )))
                }
            }
        }
        Ok(profile)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Image under `x ↦ width − x`, where width is the largest x coordinate.
    pub fn mirrored(&self) -> GridGraph {
        let width = self.vertices.iter().map(|p| p.0).max().unwrap_or(0);
        let flip = |(x, y): Point| (width - x, y);
        let sides = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (flip(self.vertices[i]), flip(self.vertices[j]));
                (a.min(b), a.max(b))
            })
            .collect();
        Self::from_point_edges(sides)
    }

    /// Some Hamiltonian cycle as a vertex sequence, if one exists.
    pub fn hamiltonian_cycle(&self) -> Result<Option<Vec<usize>>> {
        if self.vertex_count() < 3 {
            return Err(Error::Domain(format!(
                "Hamiltonicity needs at least 3 vertices, got {}",
                self.vertex_count()
            )));
        }
        Ok(hamilton::find_cycle(self))
    }

    pub fn is_hamiltonian(&self) -> Result<bool> {
        Ok(self.hamiltonian_cycle()?.is_some())
    }

    /// Graphviz rendering with pinned lattice positions.
    pub fn to_dot(&self, name: &str) -> String {
        let id = |p: Point| format!("v{}_{}", p.0, p.1);
        let mut out = format!("graph \"{name}\" {{\n  node [shape=point];\n");
        for &p in &self.vertices {
            let _ = writeln!(out, "  {} [pos=\"{},{}!\"];", id(p), p.0, p.1);
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(
                out,
                "  {} -- {};",
                id(self.vertices[i]),
                id(self.vertices[j])
            );
        }
        out.push_str("}\n");
        out
    }
}

/// `2(n+1) + (number of 1's) + (number of maximal runs of 1's)`.
pub fn vertex_count_closed(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::Domain("the empty word has no graph".into()));
    }
    Ok(2 * (w.len() + 1) + w.ones() + w.one_runs().len())
}

/// Grid `P_m × P_n` is Hamiltonian iff `m·n` is even or `m = n = 1`. Only
/// meaningful for grids with both sides at least 2 (plus the lone vertex);
/// thinner grids are paths.
pub fn grid_hamiltonian_rule(m: usize, n: usize) -> bool {
    (m * n).is_multiple_of(2) || (m == 1 && n == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub word: String,
    pub vertices: usize,
    pub edges: usize,
    pub deg: [usize; 3],
    /// `None` when the Hamiltonicity search was skipped.
    pub hamiltonian: Option<bool>,
}

impl GraphJson {
    pub fn new(w: &Word, with_hamiltonicity: bool) -> Result<Self> {
        let g = GridGraph::from_word(w)?;
        Ok(GraphJson {
            word: w.to_ascii(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            deg: g.degree_profile()?.as_array(),
            hamiltonian: if with_hamiltonicity {
                Some(g.is_hamiltonian()?)
            } else {
                None
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate_words;

    fn graph(s: &str, k: usize) -> GridGraph {
        GridGraph::from_word(&Word::parse(s, k).unwrap()).unwrap()
    }

    fn profile(s: &str) -> [usize; 3] {
        graph(s, 5).degree_profile().unwrap().as_array()
    }

    #[test]
    fn counts() {
        let g = graph("0", 2);
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        let g = graph("1", 2);
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 7));
        let g = graph("11", 3);
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 12));
    }

    #[test]
    fn degree_profiles() {
        assert_eq!(profile("0"), [4, 0, 0]);
        assert_eq!(profile("00"), [4, 2, 0]);
        assert_eq!(profile("11"), [4, 4, 1]);
        let path = GridGraph::grid(1, 3).unwrap();
        assert!(matches!(path.degree_profile(), Err(Error::Invariant(_))));
    }

    #[test]
    fn hamiltonicity_examples() {
        assert!(graph("0", 2).is_hamiltonian().unwrap());
        assert!(!graph("11", 3).is_hamiltonian().unwrap());
        assert!(graph("1", 2).is_hamiltonian().unwrap());
        assert!(GridGraph::grid(1, 2).unwrap().is_hamiltonian().is_err());
    }

    #[test]
    fn grid_rule() {
        assert!(!grid_hamiltonian_rule(3, 3));
        assert!(grid_hamiltonian_rule(2, 3));
        assert!(grid_hamiltonian_rule(1, 1));
        // search agrees with the rule wherever the search is defined
        for m in 1..=5 {
            for n in 1..=5 {
                if m < 2 || n < 2 {
                    continue;
                }
                let g = GridGraph::grid(m, n).unwrap();
                assert_eq!(
                    g.is_hamiltonian().unwrap(),
                    grid_hamiltonian_rule(m, n),
                    "{m}x{n}"
                );
            }
        }
    }

    #[test]
    fn witness_cycles_are_valid() {
        for n in 1..=9 {
            for w in enumerate_words(n, 4).unwrap() {
                let g = GridGraph::from_word(&w).unwrap();
                if let Some(cycle) = g.hamiltonian_cycle().unwrap() {
                    assert_eq!(cycle.len(), g.vertex_count());
                    let distinct: BTreeSet<_> = cycle.iter().collect();
                    assert_eq!(distinct.len(), cycle.len());
                    for i in 0..cycle.len() {
                        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                        assert!(g.neighbors(a).contains(&b), "{w}: {a}-{b} is not an edge");
                    }
                }
            }
        }
    }

    #[test]
    fn structural_invariants() {
        for k in 2..=5 {
            for n in 1..=12 {
                for w in enumerate_words(n, k).unwrap() {
                    let g = GridGraph::from_word(&w).unwrap();
                    let d = g.degree_profile().unwrap();
                    assert!(g.is_connected());
                    assert_eq!(d.total(), g.vertex_count());
                    assert_eq!(2 * g.edge_count(), 2 * d.d2 + 3 * d.d3 + 4 * d.d4);
                    assert_eq!(g.vertex_count(), vertex_count_closed(&w).unwrap(), "{w}");
                    if n <= 10 {
                        let r = GridGraph::from_word(&w.reverse()).unwrap();
                        assert_eq!(g.mirrored(), r, "{w}");
                        assert_eq!(r.degree_profile().unwrap(), d);
                    }
                }
            }
        }
    }

    #[test]
    fn dot_output() {
        let dot = graph("0", 2).to_dot("w0");
        assert!(dot.starts_with("graph \"w0\" {"));
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert!(dot.contains("v1_1 [pos=\"1,1!\"];"));
    }

    #[test]
    fn json_form() {
        let w = Word::parse("1", 2).unwrap();
        let json = serde_json::to_string(&GraphJson::new(&w, true).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"word":"1","vertices":6,"edges":7,"deg":[4,2,0],"hamiltonian":true}"#
        );
    }
}
