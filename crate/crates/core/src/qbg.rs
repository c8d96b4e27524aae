//! Parabolic quantum Bruhat graphs on minimal coset representatives.
//!
//! Building a graph also computes all-pairs shortest-path lengths and the
//! projected weights `wt^J(w => v)`. Weights are propagated along the whole
//! shortest-path DAG, and the build fails if two shortest paths disagree.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{CorootVec, NodeSet, RootVec};
use crate::weyl::{WeylElt, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QbgEdge {
    pub source: WeylElt,
    pub target: WeylElt,
    /// Index into the positive roots of the datum.
    pub root: usize,
    pub label: RootVec,
    pub kind: EdgeKind,
}

const UNREACHABLE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct QbgGraph {
    j: NodeSet,
    rank: usize,
    vertices: Vec<WeylElt>,
    /// Vertex index per group element, `u32::MAX` off `W^J`.
    slot: Vec<u32>,
    edges: Vec<QbgEdge>,
    out: Vec<Vec<usize>>,
    dist: Vec<u32>,
    /// Flattened projected weights, `rank` entries per ordered pair.
    wts: Vec<i64>,
}

impl QbgGraph {
    pub fn build(group: &WeylGroup, j: NodeSet) -> Result<QbgGraph> {
        let datum = group.datum();
        let rank = datum.rank();
        let vertices = group.min_coset_reps(j);
        let mut slot = vec![UNREACHABLE; group.order()];
        for (k, v) in vertices.iter().enumerate() {
            slot[v.0 as usize] = k as u32;
        }
        let roots: Vec<(usize, RootVec, WeylElt, i64)> = datum
            .positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.supported_in(j))
            .map(|(k, b)| {
                let refl = group.reflection(b).expect("positive root");
                let shift = datum.two_rho_minus_rho_j(j, &datum.positive_coroots()[k]);
                (k, b.clone(), refl, shift)
            })
            .collect();

        let mut edges = Vec::new();
        let mut out = vec![Vec::new(); vertices.len()];
        for (a, &w) in vertices.iter().enumerate() {
            let lw = group.length(w) as i64;
            for (k, beta, refl, shift) in &roots {
                let target = group.min_coset_rep(group.mul(w, *refl), j);
                let lt = group.length(target) as i64;
                let kind = if lt == lw + 1 {
                    EdgeKind::Bruhat
                } else if lt == lw + 1 - shift {
                    EdgeKind::Quantum
                } else {
                    continue;
                };
                out[a].push(edges.len());
                edges.push(QbgEdge { source: w, target, root: *k, label: beta.clone(), kind });
            }
        }

        let mut graph = QbgGraph { j, rank, vertices, slot, edges, out, dist: Vec::new(), wts: Vec::new() };
        graph.compute_shortest(group)?;
        Ok(graph)
    }

    fn compute_shortest(&mut self, group: &WeylGroup) -> Result<()> {
        let nv = self.vertices.len();
        let n = self.rank;
        let coroots = group.datum().positive_coroots();
        self.dist = vec![UNREACHABLE; nv * nv];
        self.wts = vec![0; nv * nv * n];
        let mut known = vec![false; nv];
        for s in 0..nv {
            let dist = &mut self.dist[s * nv..(s + 1) * nv];
            dist[s] = 0;
            let mut order = vec![s];
            let mut head = 0;
            while head < order.len() {
                let u = order[head];
                head += 1;
                for &e in &self.out[u] {
                    let t = self.slot[self.edges[e].target.0 as usize] as usize;
                    if dist[t] == UNREACHABLE {
                        dist[t] = dist[u] + 1;
                        order.push(t);
                    }
                }
            }
            if order.len() != nv {
                return Err(Error::UniquenessViolation(format!(
                    "quantum Bruhat graph for J = {} is not strongly connected",
                    self.j
                )));
            }
            // weights along the shortest-path DAG, in BFS order
            known.iter_mut().for_each(|k| *k = false);
            known[s] = true;
            for &u in &order {
                let base: Vec<i64> = self.wts[(s * nv + u) * n..(s * nv + u + 1) * n].to_vec();
                for &e in &self.out[u] {
                    let edge = &self.edges[e];
                    let t = self.slot[edge.target.0 as usize] as usize;
                    if self.dist[s * nv + t] != self.dist[s * nv + u] + 1 {
                        continue;
                    }
                    let mut cand = base.clone();
                    if edge.kind == EdgeKind::Quantum {
                        for (c, q) in cand.iter_mut().zip(coroots[edge.root].coords()) {
                            *c += q;
                        }
                    }
                    for (k, c) in cand.iter_mut().enumerate() {
                        if self.j.contains(k + 1) {
                            *c = 0;
                        }
                    }
                    let slot = &mut self.wts[(s * nv + t) * n..(s * nv + t + 1) * n];
                    if known[t] {
                        if slot != cand.as_slice() {
                            return Err(Error::UniquenessViolation(format!(
                                "shortest paths {} => {} carry different weights",
                                group.render(self.vertices[s]),
                                group.render(self.vertices[t])
                            )));
                        }
                    } else {
                        slot.copy_from_slice(&cand);
                        known[t] = true;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn parabolic(&self) -> NodeSet {
        self.j
    }

    pub fn vertices(&self) -> &[WeylElt] {
        &self.vertices
    }

    pub fn edges(&self) -> &[QbgEdge] {
        &self.edges
    }

    /// Outgoing edges of a vertex.
    pub fn out_edges(&self, w: WeylElt) -> impl Iterator<Item = &QbgEdge> {
        self.out[self.index(w)].iter().map(move |&e| &self.edges[e])
    }

    pub fn contains(&self, w: WeylElt) -> bool {
        self.slot[w.0 as usize] != UNREACHABLE
    }

    fn index(&self, w: WeylElt) -> usize {
        let k = self.slot[w.0 as usize];
        assert!(k != UNREACHABLE, "element {} is not a minimal coset representative for J = {}", w.0, self.j);
        k as usize
    }

    /// `ℓ^J(w => v)`.
    pub fn dist(&self, w: WeylElt, v: WeylElt) -> usize {
        let nv = self.vertices.len();
        self.dist[self.index(w) * nv + self.index(v)] as usize
    }

    /// `wt^J(w => v)`, with the coordinates at nodes of `J` zeroed.
    pub fn wt(&self, w: WeylElt, v: WeylElt) -> CorootVec {
        let nv = self.vertices.len();
        let n = self.rank;
        let k = self.index(w) * nv + self.index(v);
        CorootVec::from_slice(&self.wts[k * n..(k + 1) * n])
    }

    pub fn shortest_data(&self, w: WeylElt, v: WeylElt) -> (usize, CorootVec) {
        (self.dist(w, v), self.wt(w, v))
    }

    /// The `w`-tilted Bruhat order: `v1 <=_w v2` iff some shortest path from
    /// `w` to `v2` passes through `v1`.
    pub fn tilted_leq(&self, w: WeylElt, v1: WeylElt, v2: WeylElt) -> bool {
        self.dist(w, v2) == self.dist(w, v1) + self.dist(v1, v2)
    }

    /// Graphviz rendering: Bruhat edges solid, quantum edges dashed, labels in
    /// simple-root coordinates.
    pub fn to_dot(&self, group: &WeylGroup) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph qbg {{");
        for &v in &self.vertices {
            let _ = writeln!(s, "  \"{}\";", group.render(v));
        }
        for e in &self.edges {
            let style = match e.kind {
                EdgeKind::Bruhat => "solid",
                EdgeKind::Quantum => "dashed",
            };
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\", style={style}];",
                group.render(e.source),
                group.render(e.target),
                e.label
            );
        }
        s.push_str("}\n");
        s
    }

    /// One line per ordered pair: source, target, length, projected weight.
    pub fn distance_table(&self, group: &WeylGroup) -> String {
        let mut s = String::new();
        for &w in &self.vertices {
            for &v in &self.vertices {
                let (len, wt) = self.shortest_data(w, v);
                let _ = writeln!(s, "{}\t{}\t{}\t{}", group.render(w), group.render(v), len, wt);
            }
        }
        s
    }
}

/// `min(v W_J, <=_w)`, found by brute force over the coset; `full` must be
/// the graph with `J` empty.
pub fn deodhar_lift(group: &WeylGroup, full: &QbgGraph, v: WeylElt, j: NodeSet, w: WeylElt) -> Result<WeylElt> {
    debug_assert!(full.parabolic().is_empty());
    let coset = group.coset(v, j);
    let minimal: Vec<WeylElt> = coset
        .iter()
        .copied()
        .filter(|&r| coset.iter().all(|&u| full.tilted_leq(w, r, u)))
        .collect();
    match minimal.as_slice() {
        [r] => Ok(*r),
        _ => Err(Error::UniquenessViolation(format!(
            "coset of {} for J = {} has {} minimal elements in the {}-tilted order",
            group.render(v),
            j,
            minimal.len(),
            group.render(w)
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::RootDatum;

    fn group(s: &str) -> WeylGroup {
        WeylGroup::new(RootDatum::build(s.parse().unwrap()).unwrap()).unwrap()
    }

    /// Brute-force edge list straight from the definition, for every pair
    /// (w, beta).
    fn edge_oracle(g: &WeylGroup, j: NodeSet) -> Vec<(WeylElt, WeylElt, RootVec, EdgeKind)> {
        let d = g.datum();
        let mut out = Vec::new();
        let rho_minus = |beta: &RootVec| -> i64 {
            // 2<rho, beta^vee> - sum over positive roots of J of <gamma, beta^vee>
            let c = d.dual_root(beta).unwrap();
            let mut two = 0;
            for gamma in d.positive_roots() {
                if !gamma.supported_in(j) {
                    two += d.pair(gamma, &c);
                }
            }
            two
        };
        for w in g.elements().filter(|&w| g.is_min_coset_rep(w, j)) {
            for beta in d.positive_roots().iter().filter(|b| !b.supported_in(j)) {
                let mut t = g.mul(w, g.reflection(beta).unwrap());
                // minimal representative by exhaustive search over the coset
                t = *g.coset(t, j).iter().min_by_key(|u| g.length(**u)).unwrap();
                let (lw, lt) = (g.length(w) as i64, g.length(t) as i64);
                if lt == lw + 1 {
                    out.push((w, t, beta.clone(), EdgeKind::Bruhat));
                } else if lt == lw + 1 - rho_minus(beta) {
                    out.push((w, t, beta.clone(), EdgeKind::Quantum));
                }
            }
        }
        out
    }

    #[test]
    fn edges_match_brute_force() {
        for t in ["A1", "A2", "B2", "G2", "A3"] {
            let g = group(t);
            for j in NodeSet::all_subsets(g.rank()) {
                let qbg = QbgGraph::build(&g, j).unwrap();
                let got: Vec<_> = qbg.edges().iter().map(|e| (e.source, e.target, e.label.clone(), e.kind)).collect();
                assert_eq!(got, edge_oracle(&g, j), "{t} {j}");
            }
        }
    }

    #[test]
    fn a1_graph() {
        let g = group("A1");
        let qbg = QbgGraph::build(&g, NodeSet::EMPTY).unwrap();
        let s1 = g.simple(1);
        let e = g.identity();
        assert_eq!(qbg.edges().len(), 2);
        assert_eq!(qbg.edges()[0].kind, EdgeKind::Bruhat);
        assert_eq!((qbg.edges()[1].source, qbg.edges()[1].target, qbg.edges()[1].kind), (s1, e, EdgeKind::Quantum));
        assert_eq!(qbg.shortest_data(s1, e), (1, CorootVec::from_slice(&[1])));
        assert_eq!(qbg.shortest_data(e, e), (0, CorootVec::from_slice(&[0])));
        let dot = qbg.to_dot(&g);
        assert_eq!(dot.matches("dashed").count(), 1);
        assert_eq!(dot.matches(" -> ").count(), 2);
    }

    #[test]
    fn a2_graphs() {
        let g = group("A2");
        let qbg = QbgGraph::build(&g, NodeSet::EMPTY).unwrap();
        for &v in qbg.vertices() {
            assert!(qbg.out_edges(v).count() >= 1);
        }
        let theta = g.datum().theta().clone();
        assert!(qbg
            .edges()
            .iter()
            .any(|e| e.source == g.longest() && e.target == g.identity() && e.label == theta && e.kind == EdgeKind::Quantum));
        let par = QbgGraph::build(&g, NodeSet::from_nodes([2])).unwrap();
        assert_eq!(par.vertices().len(), 3);
        assert_eq!(par.to_dot(&g).matches(";\n").count() - par.edges().len(), 3);
    }

    #[test]
    fn weight_to_longest_vanishes() {
        for t in ["A2", "B2", "G2", "A3"] {
            let g = group(t);
            let qbg = QbgGraph::build(&g, NodeSet::EMPTY).unwrap();
            for w in g.elements() {
                assert!(qbg.wt(w, g.longest()).is_zero());
            }
        }
    }

    #[test]
    fn non_shortest_paths_weigh_more() {
        // every edge u -> v satisfies [wt(s => u) + wt(edge)]^J >= wt(s => v), so by
        // induction every path is at least as heavy as a shortest one
        for t in ["A2", "B2", "G2"] {
            let g = group(t);
            let coroots = g.datum().positive_coroots().to_vec();
            for j in NodeSet::all_subsets(g.rank()) {
                let qbg = QbgGraph::build(&g, j).unwrap();
                for &s in qbg.vertices() {
                    for e in qbg.edges() {
                        let mut via = qbg.wt(s, e.source);
                        if e.kind == EdgeKind::Quantum {
                            via += &coroots[e.root];
                        }
                        let diff = &via.project_away(j) - &qbg.wt(s, e.target);
                        assert!(diff.is_nonnegative());
                    }
                }
            }
        }
    }

    #[test]
    fn tilted_order_examples() {
        let g = group("A1");
        let qbg = QbgGraph::build(&g, NodeSet::EMPTY).unwrap();
        let (e, s1) = (g.identity(), g.simple(1));
        assert!(qbg.tilted_leq(s1, s1, s1));
        assert!(!qbg.tilted_leq(s1, e, s1));
        assert!(qbg.tilted_leq(s1, s1, e));
    }

    #[test]
    fn tilted_order_is_partial_order() {
        for t in ["A2", "B2", "G2"] {
            let g = group(t);
            let qbg = QbgGraph::build(&g, NodeSet::EMPTY).unwrap();
            let all: Vec<_> = g.elements().collect();
            for &w in &all {
                for &a in &all {
                    assert!(qbg.tilted_leq(w, a, a));
                    for &b in &all {
                        if a != b && qbg.tilted_leq(w, a, b) {
                            assert!(!qbg.tilted_leq(w, b, a));
                        }
                        for &c in &all {
                            if qbg.tilted_leq(w, a, b) && qbg.tilted_leq(w, b, c) {
                                assert!(qbg.tilted_leq(w, a, c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn deodhar_lift_examples() {
        let g = group("A2");
        let full = QbgGraph::build(&g, NodeSet::EMPTY).unwrap();
        let j = NodeSet::from_nodes([2]);
        for v in g.elements() {
            assert_eq!(deodhar_lift(&g, &full, v, j, g.identity()).unwrap(), g.min_coset_rep(v, j));
            assert_eq!(deodhar_lift(&g, &full, v, NodeSet::EMPTY, g.simple(1)).unwrap(), v);
        }
        assert_eq!(deodhar_lift(&g, &full, g.identity(), j, g.simple(2)).unwrap(), g.simple(2));
    }
}
