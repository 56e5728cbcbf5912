//! Uniform hypergraphs stored as a vertex count plus an edge list.
//!
//! Vertices are the dense range `0..n`. Every edge is kept as a sorted vertex
//! list; edge indices are stable for the lifetime of a value. Operations never
//! mutate in place, they return a new hypergraph (and a vertex map when ids are
//! re-compacted).

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// An r-uniform hypergraph on the vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<VertexId>>,
}

/// Degree class of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Isolated,
    /// degree exactly one
    Core,
    /// degree two or more
    Intersection,
}

/// Result of a deletion that re-compacts vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reindexed {
    pub hypergraph: Hypergraph,
    /// `old_to_new[v]` is the new id of old vertex `v`, or `None` if it was removed.
    pub old_to_new: Vec<Option<VertexId>>,
}

/// Alternating vertex/edge sequence `v0 e0 v1 e1 ... vk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Path {
    /// Number of edges on the path.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Structural findings about a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub uniform: bool,
    pub linear: bool,
    pub connected: bool,
    pub acyclic: bool,
    pub is_hypertree: bool,
    pub violations: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    r: usize,
    n: usize,
    edges: Vec<Vec<VertexId>>,
}

impl Hypergraph {
    /// Builds a hypergraph and enforces uniformity, linearity, vertex range and
    /// the absence of duplicate edges.
    pub fn new(r: usize, n: usize, edges: Vec<Vec<VertexId>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidHypergraph(format!("edge size r={r} must be at least 2")));
        }
        let h = Self::from_raw(r, n, edges)?;
        let report = h.validate();
        if !report.uniform || !report.linear {
            return Err(Error::InvalidHypergraph(report.violations.join("; ")));
        }
        Ok(h)
    }

    /// Builds a hypergraph checking only that vertex ids are in range. Use
    /// [`Hypergraph::validate`] to inspect uniformity and linearity.
    pub fn from_raw(r: usize, n: usize, edges: Vec<Vec<VertexId>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(edges.len());
        for mut e in edges {
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            e.sort_unstable();
            e.dedup();
            sorted.push(e);
        }
        Ok(Hypergraph { r, n, edges: sorted })
    }

    /// `n` isolated vertices.
    pub fn empty(r: usize, n: usize) -> Self {
        Hypergraph { r, n, edges: Vec::new() }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Order (vertex count).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size (edge count).
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<VertexId>] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<&[VertexId]> {
        self.edges
            .get(e)
            .map(Vec::as_slice)
            .ok_or(Error::InvalidEdge { edge: e, m: self.m() })
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// `incidence()[v]` lists the edges containing `v` (the set E_v).
    pub fn incidence(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(&v)).count())
    }

    pub fn vertex_kind(&self, v: VertexId) -> Result<VertexKind> {
        Ok(match self.degree(v)? {
            0 => VertexKind::Isolated,
            1 => VertexKind::Core,
            _ => VertexKind::Intersection,
        })
    }

    /// An edge is pendent when at least `r - 1` of its vertices are core
    /// vertices. A lone edge (all `r` vertices core) counts as pendent.
    pub fn is_pendent(&self, e: EdgeId) -> Result<bool> {
        let edge = self.edge(e)?;
        let deg = self.degrees();
        let core = edge.iter().filter(|&&v| deg[v] == 1).count();
        Ok(core + 1 >= self.r)
    }

    pub fn pendent_edges(&self) -> Vec<EdgeId> {
        let deg = self.degrees();
        (0..self.m())
            .filter(|&i| self.edges[i].iter().filter(|&&v| deg[v] == 1).count() + 1 >= self.r)
            .collect()
    }

    /// Checks every structural property at once.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        let mut uniform = true;
        for (i, e) in self.edges.iter().enumerate() {
            if e.len() != self.r {
                uniform = false;
                violations.push(format!(
                    "edge {i} has {} distinct vertices, expected {}",
                    e.len(),
                    self.r
                ));
            }
        }

        let mut linear = true;
        for i in 0..self.edges.len() {
            for j in (i + 1)..self.edges.len() {
                let shared = intersection_size(&self.edges[i], &self.edges[j]);
                if shared > 1 {
                    linear = false;
                    if self.edges[i] == self.edges[j] {
                        violations.push(format!("edges {i} and {j} are duplicates"));
                    } else {
                        violations.push(format!("edges {i} and {j} share {shared} vertices"));
                    }
                }
            }
        }

        let connected = self.is_connected();
        if !connected {
            violations.push(format!("{} connected components", self.components().len()));
        }
        let acyclic = self.is_acyclic();
        if !acyclic {
            violations.push("vertex-edge incidence graph contains a cycle".to_string());
        }

        ValidationReport {
            uniform,
            linear,
            connected,
            acyclic,
            is_hypertree: connected && acyclic,
            violations,
        }
    }

    /// Acyclicity, decided as "the bipartite incidence graph is a forest".
    pub fn is_acyclic(&self) -> bool {
        let mut uf = UnionFind::new(self.n + self.m());
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                if !uf.union(v, self.n + i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_hypertree(&self) -> bool {
        self.is_connected() && self.is_acyclic()
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            for w in e.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let mut index = vec![usize::MAX; self.n];
        let mut comps: Vec<Vec<VertexId>> = Vec::new();
        for v in 0..self.n {
            let root = uf.find(v);
            if index[root] == usize::MAX {
                index[root] = comps.len();
                comps.push(Vec::new());
            }
            comps[index[root]].push(v);
        }
        comps
    }

    /// Partial hypergraph on the given vertices keeping exactly the edges that
    /// lie inside it; ids are re-compacted in increasing order.
    pub fn induced(&self, keep: &[bool]) -> Reindexed {
        let mut old_to_new = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if keep[v] {
                old_to_new[v] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| keep[v]))
            .map(|e| e.iter().map(|&v| old_to_new[v].unwrap()).collect())
            .collect();
        Reindexed {
            hypergraph: Hypergraph { r: self.r, n: next, edges },
            old_to_new,
        }
    }

    /// H \ e: drops the edge, keeps every vertex (ids unchanged).
    pub fn delete_edge(&self, e: EdgeId) -> Result<Hypergraph> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Hypergraph { r: self.r, n: self.n, edges })
    }

    /// Drops several edges at once, keeping every vertex.
    pub fn delete_edges(&self, remove: &[EdgeId]) -> Result<Hypergraph> {
        for &e in remove {
            self.edge(e)?;
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, e)| e.clone())
            .collect();
        Ok(Hypergraph { r: self.r, n: self.n, edges })
    }

    /// H − S.
    pub fn delete_vertices(&self, set: &[VertexId]) -> Result<Reindexed> {
        let mut keep = vec![true; self.n];
        for &v in set {
            self.check_vertex(v)?;
            keep[v] = false;
        }
        Ok(self.induced(&keep))
    }

    /// H − v.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Reindexed> {
        self.delete_vertices(&[v])
    }

    /// H − V(e).
    pub fn delete_edge_closed(&self, e: EdgeId) -> Result<Reindexed> {
        let edge = self.edge(e)?.to_vec();
        self.delete_vertices(&edge)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.r != other.r {
            return Err(Error::UniformityMismatch { left: self.r, right: other.r });
        }
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| e.iter().map(|&v| v + self.n).collect()),
        );
        Ok(Hypergraph { r: self.r, n: self.n + other.n, edges })
    }

    /// `copies` disjoint copies of `self` (the hypergraph aG).
    pub fn copies(&self, copies: usize) -> Hypergraph {
        let mut out = Hypergraph::empty(self.r, 0);
        for _ in 0..copies {
            out = out.disjoint_union(self).expect("same r");
        }
        out
    }

    /// Shortest path between `u` and `v`, found by breadth-first search on the
    /// incidence graph. In a hypertree this is the unique path.
    pub fn find_path(&self, u: VertexId, v: VertexId) -> Result<Option<Path>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(Path { vertices: vec![u], edges: vec![] }));
        }
        let inc = self.incidence();
        // parent[w] = (previous vertex, edge used)
        let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; self.n];
        let mut seen_edge = vec![false; self.m()];
        let mut seen = vec![false; self.n];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &e in &inc[x] {
                if seen_edge[e] {
                    continue;
                }
                seen_edge[e] = true;
                for &y in &self.edges[e] {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some((x, e));
                        if y == v {
                            let mut vertices = vec![v];
                            let mut edges = Vec::new();
                            let mut cur = v;
                            while let Some((p, pe)) = parent[cur] {
                                edges.push(pe);
                                vertices.push(p);
                                cur = p;
                            }
                            vertices.reverse();
                            edges.reverse();
                            return Ok(Some(Path { vertices, edges }));
                        }
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(None)
    }

    /// True if every pair of edges in `family` meets.
    pub fn is_intersecting_family(&self, family: &[EdgeId]) -> Result<bool> {
        for &e in family {
            self.edge(e)?;
        }
        for (i, &a) in family.iter().enumerate() {
            for &b in &family[i + 1..] {
                if intersection_size(&self.edges[a], &self.edges[b]) == 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Lowest-id vertex shared by every edge of `family`, if any. For an
    /// intersecting family in a hypertree such a vertex always exists (Helly).
    pub fn common_vertex(&self, family: &[EdgeId]) -> Result<Option<VertexId>> {
        let (&first, rest) = family.split_first().ok_or(Error::EmptyFamily)?;
        let mut common: BTreeSet<VertexId> = self.edge(first)?.iter().copied().collect();
        for &e in rest {
            let edge = self.edge(e)?;
            common.retain(|v| edge.contains(v));
        }
        Ok(common.into_iter().next())
    }

    /// Edge list in the canonical write order: each edge ascending, edges
    /// sorted lexicographically.
    pub fn sorted_edges(&self) -> Vec<Vec<VertexId>> {
        let mut edges = self.edges.clone();
        edges.sort();
        edges
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&HypergraphJson {
            r: self.r,
            n: self.n,
            edges: self.sorted_edges(),
        })
        .expect("plain integers serialize")
    }

    /// Parses the JSON form and enforces every hypergraph invariant.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: HypergraphJson = serde_json::from_str(s)?;
        Hypergraph::new(raw.r, raw.n, raw.edges)
    }

    /// Parses the JSON form checking only vertex ranges.
    pub fn from_json_str_raw(s: &str) -> Result<Self> {
        let raw: HypergraphJson = serde_json::from_str(s)?;
        Hypergraph::from_raw(raw.r, raw.n, raw.edges)
    }

    /// Same hypergraph with vertices renamed through `perm` (old → new) and
    /// edges listed in the order given by `edge_order`.
    pub fn relabel(&self, perm: &[VertexId], edge_order: &[EdgeId]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: perm.len() });
        }
        if edge_order.len() != self.m() {
            return Err(Error::LengthMismatch { expected: self.m(), got: edge_order.len() });
        }
        let edges = edge_order
            .iter()
            .map(|&e| self.edge(e).map(|edge| edge.iter().map(|&v| perm[v]).collect()))
            .collect::<Result<Vec<Vec<_>>>>()?;
        Hypergraph::from_raw(self.r, self.n, edges)
    }

    pub(crate) fn from_parts_unchecked(r: usize, n: usize, edges: Vec<Vec<VertexId>>) -> Self {
        Hypergraph { r, n, edges }
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        HypergraphJson { r: self.r, n: self.n, edges: self.sorted_edges() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = HypergraphJson::deserialize(deserializer)?;
        Hypergraph::new(raw.r, raw.n, raw.edges).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn intersection_size(a: &[VertexId], b: &[VertexId]) -> usize {
    // both sorted
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
