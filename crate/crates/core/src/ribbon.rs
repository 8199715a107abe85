//! Ribbon graphs as signed rotation systems.
//!
//! Each vertex disc lists its half-edges in cyclic order. A half-edge `h`
//! occupies a segment of the vertex boundary with two endpoints, `(h, 0)`
//! then `(h, 1)` in the cyclic direction. The boundary of a ribbon
//! subgraph alternates between vertex arcs, which join `(h_i, 1)` to
//! `(h_{i+1}, 0)` around a vertex, and edge sides. An untwisted edge with
//! ends `a`, `b` has sides `(a,0)-(b,1)` and `(a,1)-(b,0)`; a twisted edge
//! has sides `(a,0)-(b,0)` and `(a,1)-(b,1)`.

use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::delta::DeltaMatroid;
use crate::error::Error;
use crate::subset::{GroundSet, Subset, MAX_GROUND};
use crate::system::SetSystem;

/// Edge-count limit for quasi-tree enumeration.
pub const RIBBON_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonEdge {
    pub label: String,
    pub ends: [usize; 2],
    pub twisted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    half_labels: Vec<String>,
    vertices: Vec<Vec<usize>>,
    edges: Vec<RibbonEdge>,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
}

/// One boundary point: a half-edge and which end of its segment.
pub type Corner = (usize, u8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryTrace {
    pub components: usize,
    /// Corner sequences, one per component; a vertex with no edges gives an empty walk.
    pub walks: Vec<Vec<Corner>>,
}

impl RibbonGraph {
    /// Builds a ribbon graph from vertex rotations and `(edge, half, half, twisted)`
    /// tuples, all given by label.
    pub fn from_labels(
        vertices: &[&[&str]],
        edges: &[(&str, &str, &str, bool)],
    ) -> Result<RibbonGraph, Error> {
        let vertices: Vec<Vec<String>> = vertices
            .iter()
            .map(|v| v.iter().map(|h| h.to_string()).collect())
            .collect();
        let edges: Vec<(String, String, String, bool)> = edges
            .iter()
            .map(|(e, a, b, t)| (e.to_string(), a.to_string(), b.to_string(), *t))
            .collect();
        RibbonGraph::new(vertices, edges)
    }

    pub fn new(
        vertices: Vec<Vec<String>>,
        edges: Vec<(String, String, String, bool)>,
    ) -> Result<RibbonGraph, Error> {
        if edges.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: edges.len(),
                max: MAX_GROUND,
            });
        }
        let mut half_labels: Vec<String> = Vec::new();
        let mut vertex_of = Vec::new();
        let mut rotations = Vec::with_capacity(vertices.len());
        for (v, rot) in vertices.into_iter().enumerate() {
            let mut ids = Vec::with_capacity(rot.len());
            for h in rot {
                if half_labels.contains(&h) {
                    return Err(Error::MalformedRibbon(alloc::format!(
                        "half-edge `{h}` appears at more than one vertex position"
                    )));
                }
                ids.push(half_labels.len());
                half_labels.push(h);
                vertex_of.push(v);
            }
            rotations.push(ids);
        }
        let mut edge_of = vec![usize::MAX; half_labels.len()];
        let mut out_edges: Vec<RibbonEdge> = Vec::with_capacity(edges.len());
        for (i, (label, a, b, twisted)) in edges.into_iter().enumerate() {
            if out_edges.iter().any(|e| e.label == label) {
                return Err(Error::DuplicateLabel(label));
            }
            let mut ends = [0usize; 2];
            for (slot, h) in [a, b].into_iter().enumerate() {
                let id = half_labels.iter().position(|x| *x == h).ok_or_else(|| {
                    Error::MalformedRibbon(alloc::format!("half-edge `{h}` is on no vertex"))
                })?;
                if edge_of[id] != usize::MAX {
                    return Err(Error::MalformedRibbon(alloc::format!(
                        "half-edge `{h}` belongs to more than one edge end"
                    )));
                }
                edge_of[id] = i;
                ends[slot] = id;
            }
            out_edges.push(RibbonEdge {
                label,
                ends,
                twisted,
            });
        }
        if let Some(h) = edge_of.iter().position(|&e| e == usize::MAX) {
            return Err(Error::MalformedRibbon(alloc::format!(
                "half-edge `{}` belongs to no edge",
                half_labels[h]
            )));
        }
        Ok(RibbonGraph {
            half_labels,
            vertices: rotations,
            edges: out_edges,
            vertex_of,
            edge_of,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[RibbonEdge] {
        &self.edges
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn half_label(&self, h: usize) -> &str {
        &self.half_labels[h]
    }

    /// Edge labels, the ground set of the associated delta-matroid.
    pub fn edge_ground(&self) -> GroundSet {
        GroundSet::new(self.edges.iter().map(|e| e.label.clone()).collect())
            .expect("edge labels checked distinct")
    }

    fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        let [a, b] = self.edges[e].ends;
        (self.vertex_of[a], self.vertex_of[b])
    }

    /// Boundary walk of the spanning ribbon subgraph with edge set `a`.
    pub fn boundary_trace(&self, a: Subset) -> BoundaryTrace {
        let points = 2 * self.half_labels.len();
        let mut vertex_next = vec![usize::MAX; points];
        let mut walks: Vec<Vec<Corner>> = Vec::new();
        for rot in &self.vertices {
            let kept: Vec<usize> = rot
                .iter()
                .copied()
                .filter(|&h| a.contains(self.edge_of[h]))
                .collect();
            if kept.is_empty() {
                walks.push(Vec::new());
                continue;
            }
            for (i, &h) in kept.iter().enumerate() {
                let nxt = kept[(i + 1) % kept.len()];
                vertex_next[2 * h + 1] = 2 * nxt;
                vertex_next[2 * nxt] = 2 * h + 1;
            }
        }
        let mut edge_side = vec![usize::MAX; points];
        for e in a.iter() {
            let edge = &self.edges[e];
            let [x, y] = edge.ends;
            let pairs = if edge.twisted {
                [(2 * x, 2 * y), (2 * x + 1, 2 * y + 1)]
            } else {
                [(2 * x, 2 * y + 1), (2 * x + 1, 2 * y)]
            };
            for (p, q) in pairs {
                edge_side[p] = q;
                edge_side[q] = p;
            }
        }
        let mut seen = vec![false; points];
        for start in 0..points {
            if seen[start] || edge_side[start] == usize::MAX {
                continue;
            }
            let mut walk = Vec::new();
            let mut p = start;
            loop {
                let q = vertex_next[p];
                seen[p] = true;
                seen[q] = true;
                walk.push((p / 2, (p % 2) as u8));
                walk.push((q / 2, (q % 2) as u8));
                p = edge_side[q];
                if p == start {
                    break;
                }
            }
            walks.push(walk);
        }
        BoundaryTrace {
            components: walks.len(),
            walks,
        }
    }

    pub fn boundary_components(&self, a: Subset) -> usize {
        self.boundary_trace(a).components
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let adj = self.adjacency();
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `(neighbour, edge)` lists; a loop appears once at its vertex.
    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in 0..self.edge_count() {
            let (u, v) = self.edge_endpoints(e);
            adj[u].push((v, e));
            if u != v {
                adj[v].push((u, e));
            }
        }
        adj
    }

    /// Delta-matroid of quasi-trees: edge sets whose spanning ribbon
    /// subgraph has exactly one boundary component.
    pub fn delta_matroid(&self) -> Result<DeltaMatroid, Error> {
        if !self.is_connected() || self.vertex_count() == 0 {
            return Err(Error::Disconnected);
        }
        if self.edge_count() > RIBBON_LIMIT {
            return Err(Error::GroundTooLarge {
                size: self.edge_count(),
                max: RIBBON_LIMIT,
            });
        }
        let ground = self.edge_ground();
        let feasible = ground
            .full()
            .subsets()
            .filter(|&a| self.boundary_components(a) == 1)
            .collect();
        DeltaMatroid::new(SetSystem::from_unsorted(ground, feasible))
    }

    /// Partial Petrial: flips the twist of every edge in `a`.
    pub fn petrial(&self, a: Subset) -> RibbonGraph {
        let mut g = self.clone();
        for e in a.iter() {
            g.edges[e].twisted = !g.edges[e].twisted;
        }
        g
    }

    /// Every cycle carries an even number of twisted edges, checked by
    /// propagating vertex orientations along a spanning forest.
    pub fn is_orientable(&self) -> bool {
        let n = self.vertex_count();
        let adj = self.adjacency();
        let mut flip: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let fv = flip[v].expect("visited");
                for &(w, e) in &adj[v] {
                    let want = fv ^ self.edges[e].twisted;
                    match flip[w] {
                        None => {
                            flip[w] = Some(want);
                            queue.push_back(w);
                        }
                        Some(fw) if fw != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Underlying multigraph has no odd cycle; a loop is an odd cycle.
    pub fn underlying_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let cv = colour[v].expect("visited");
                for &(w, _) in &adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Every vertex has even degree, loops counting twice.
    pub fn underlying_eulerian(&self) -> bool {
        self.vertices.iter().all(|rot| rot.len() % 2 == 0)
    }
}
