//! Hamiltonian cycle search with forced-edge propagation.
//!
//! Every edge is undecided, in, or out. A vertex with exactly two usable edges
//! forces both in; a vertex with two chosen edges forces the rest out. Chosen
//! edges form vertex-disjoint paths whose endpoints are tracked so that a
//! premature cycle is rejected the moment it closes. Remaining choices are
//! branched on in vertex order (lowest `(x, y)` first).

use super::GridGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Open,
    In,
    Out,
}

#[derive(Clone)]
struct Search<'g> {
    graph: &'g GridGraph,
    incident: &'g [Vec<usize>],
    state: Vec<EdgeState>,
    chosen_at: Vec<u8>,
    usable_at: Vec<u8>,
    /// For a path endpoint, the other endpoint; isolated vertices map to themselves.
    path_end: Vec<usize>,
    chosen: usize,
    closed: bool,
}

impl<'g> Search<'g> {
    fn new(graph: &'g GridGraph, incident: &'g [Vec<usize>]) -> Self {
        let n = graph.vertex_count();
        Search {
            graph,
            incident,
            state: vec![EdgeState::Open; graph.edge_count()],
            chosen_at: vec![0; n],
            usable_at: (0..n).map(|v| incident[v].len() as u8).collect(),
            path_end: (0..n).collect(),
            chosen: 0,
            closed: false,
        }
    }

    fn include(&mut self, e: usize, queue: &mut Vec<usize>) -> bool {
        match self.state[e] {
            EdgeState::In => return true,
            EdgeState::Out => return false,
            EdgeState::Open => {}
        }
        let (u, v) = self.graph.edges()[e];
        if self.closed || self.chosen_at[u] >= 2 || self.chosen_at[v] >= 2 {
            return false;
        }
        let (a, b) = (self.path_end[u], self.path_end[v]);
        if a == v {
            // closing a cycle is only allowed with the final edge
            if self.chosen + 1 != self.graph.vertex_count() {
                return false;
            }
            self.closed = true;
        } else {
            self.path_end[a] = b;
            self.path_end[b] = a;
        }
        self.state[e] = EdgeState::In;
        self.chosen += 1;
        self.chosen_at[u] += 1;
        self.chosen_at[v] += 1;
        queue.extend([u, v]);
        true
    }

    fn exclude(&mut self, e: usize, queue: &mut Vec<usize>) -> bool {
        match self.state[e] {
            EdgeState::Out => return true,
            EdgeState::In => return false,
            EdgeState::Open => {}
        }
        let (u, v) = self.graph.edges()[e];
        self.state[e] = EdgeState::Out;
        self.usable_at[u] -= 1;
        self.usable_at[v] -= 1;
        if self.usable_at[u] < 2 || self.usable_at[v] < 2 {
            return false;
        }
        queue.extend([u, v]);
        true
    }

    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(v) = queue.pop() {
            let incident = self.incident;
            if self.chosen_at[v] == 2 {
                for &e in &incident[v] {
                    if self.state[e] == EdgeState::Open && !self.exclude(e, &mut queue) {
                        return false;
                    }
                }
            } else if self.usable_at[v] == 2 {
                for &e in &incident[v] {
                    if self.state[e] == EdgeState::Open && !self.include(e, &mut queue) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// First open edge at the lowest vertex that still needs edges.
    fn branch_edge(&self) -> Option<usize> {
        (0..self.graph.vertex_count())
            .filter(|&v| self.chosen_at[v] < 2)
            .find_map(|v| {
                self.incident[v]
                    .iter()
                    .copied()
                    .find(|&e| self.state[e] == EdgeState::Open)
            })
    }

    fn solve(self) -> Option<Search<'g>> {
        if self.closed {
            return Some(self);
        }
        let e = self.branch_edge()?;
        let mut with = self.clone();
        let mut queue = Vec::new();
        if with.include(e, &mut queue) && with.propagate(queue) {
            if let Some(done) = with.solve() {
                return Some(done);
            }
        }
        let mut without = self;
        let mut queue = Vec::new();
        if without.exclude(e, &mut queue) && without.propagate(queue) {
            return without.solve();
        }
        None
    }

    fn cycle(&self) -> Vec<usize> {
        let n = self.graph.vertex_count();
        let mut next: Vec<Vec<usize>> = vec![Vec::with_capacity(2); n];
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            if self.state[e] == EdgeState::In {
                next[u].push(v);
                next[v].push(u);
            }
        }
        let mut order = Vec::with_capacity(n);
        let (mut prev, mut cur) = (usize::MAX, 0);
        for _ in 0..n {
            order.push(cur);
            let step = if next[cur][0] != prev {
                next[cur][0]
            } else {
                next[cur][1]
            };
            prev = cur;
            cur = step;
        }
        order
    }
}

pub(super) fn find_cycle(graph: &GridGraph) -> Option<Vec<usize>> {
    let mut incident = vec![Vec::new(); graph.vertex_count()];
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    // order each vertex's edges by neighbour index (= neighbour coordinates)
    for (v, list) in incident.iter_mut().enumerate() {
        list.sort_by_key(|&e| {
            let (a, b) = graph.edges()[e];
            a + b - v
        });
    }
    let mut search = Search::new(graph, &incident);
    if search.usable_at.iter().any(|&d| d < 2) {
        return None;
    }
    let queue: Vec<usize> = (0..graph.vertex_count()).collect();
    if !search.propagate(queue) {
        return None;
    }
    search.solve().map(|s| s.cycle())
}
