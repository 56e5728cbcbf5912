//! Canonical codes for hyperforests.
//!
//! A hyperforest is encoded through its vertex/edge incidence forest. Each
//! component is rooted at its center (or, with two centers, at whichever gives
//! the smaller code) and written as a nested bracket string: `( … )` for a
//! vertex node and `[ … ]` for an edge node, children sorted. Component codes
//! are sorted and concatenated. Two hyperforests get equal codes exactly when
//! they are isomorphic.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("codes are ascii")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

struct IncidenceForest {
    /// number of vertex nodes; nodes >= split are edge nodes
    split: usize,
    adj: Vec<Vec<usize>>,
}

impl IncidenceForest {
    fn new(h: &Hypergraph) -> Self {
        let split = h.n();
        let mut adj = vec![Vec::new(); h.n() + h.m()];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                adj[v].push(split + i);
                adj[split + i].push(v);
            }
        }
        IncidenceForest { split, adj }
    }

    fn component_of(&self, start: usize, seen: &mut [bool]) -> Vec<usize> {
        let mut comp = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        comp
    }

    /// One or two centers of a tree component, by repeated leaf removal.
    fn centers(&self, comp: &[usize]) -> Vec<usize> {
        if comp.len() <= 2 {
            return comp.to_vec();
        }
        let mut degree: Vec<usize> = vec![0; self.adj.len()];
        for &x in comp {
            degree[x] = self.adj[x].len();
        }
        let mut leaves: Vec<usize> = comp.iter().copied().filter(|&x| degree[x] <= 1).collect();
        let mut remaining = comp.len();
        while remaining > 2 {
            remaining -= leaves.len();
            let mut next = Vec::new();
            for &leaf in &leaves {
                degree[leaf] = 0;
                for &y in &self.adj[leaf] {
                    if degree[y] > 0 {
                        degree[y] -= 1;
                        if degree[y] == 1 {
                            next.push(y);
                        }
                    }
                }
            }
            leaves = next;
        }
        leaves
    }

    fn encode(&self, node: usize, parent: Option<usize>, out: &mut Vec<u8>) {
        let mut children: Vec<Vec<u8>> = self.adj[node]
            .iter()
            .filter(|&&c| Some(c) != parent)
            .map(|&c| {
                let mut buf = Vec::new();
                self.encode(c, Some(node), &mut buf);
                buf
            })
            .collect();
        children.sort();
        let (open, close) = if node < self.split { (b'(', b')') } else { (b'[', b']') };
        out.push(open);
        for c in children {
            out.extend_from_slice(&c);
        }
        out.push(close);
    }
}

/// Canonical code of a hyperforest. Fails if `h` contains a cycle.
pub fn canonical_code(h: &Hypergraph) -> Result<CanonicalCode> {
    if !h.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let forest = IncidenceForest::new(h);
    let mut seen = vec![false; forest.adj.len()];
    let mut codes: Vec<Vec<u8>> = Vec::new();
    for start in 0..forest.adj.len() {
        if seen[start] {
            continue;
        }
        let comp = forest.component_of(start, &mut seen);
        let code = forest
            .centers(&comp)
            .into_iter()
            .map(|c| {
                let mut buf = Vec::new();
                forest.encode(c, None, &mut buf);
                buf
            })
            .min()
            .expect("component has a center");
        codes.push(code);
    }
    codes.sort();
    let mut bytes = format!("r{}:", h.r()).into_bytes();
    for c in codes {
        bytes.extend_from_slice(&c);
    }
    Ok(CanonicalCode(bytes))
}

/// Isomorphism test for hyperforests via canonical codes.
pub fn is_isomorphic(g: &Hypergraph, h: &Hypergraph) -> Result<bool> {
    if g.r() != h.r() || g.n() != h.n() || g.m() != h.m() {
        // still reject cyclic inputs consistently
        canonical_code(g)?;
        canonical_code(h)?;
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Hypergraph {
        Hypergraph::new(3, 7, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6]]).unwrap()
    }

    #[test]
    fn relabeled_paths_agree() {
        let other =
            Hypergraph::new(3, 7, vec![vec![6, 3, 0], vec![0, 1, 5], vec![5, 2, 4]]).unwrap();
        assert_eq!(canonical_code(&path3()).unwrap(), canonical_code(&other).unwrap());
        assert!(is_isomorphic(&path3(), &other).unwrap());
    }

    #[test]
    fn star_differs_from_path() {
        let star = Hypergraph::new(3, 7, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]).unwrap();
        assert_ne!(canonical_code(&star).unwrap(), canonical_code(&path3()).unwrap());
        assert!(!is_isomorphic(&star, &path3()).unwrap());
    }

    #[test]
    fn union_order_irrelevant() {
        let e = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let a = e.disjoint_union(&path3()).unwrap();
        let b = path3().disjoint_union(&e).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
    }

    #[test]
    fn isolated_vertices_count() {
        let a = Hypergraph::empty(2, 2);
        let b = Hypergraph::empty(2, 3);
        assert_ne!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
        assert_eq!(canonical_code(&a).unwrap().as_str(), "r2:()()");
    }

    #[test]
    fn cycles_rejected() {
        let tri = Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(canonical_code(&tri), Err(Error::NotAcyclic));
    }

    #[test]
    fn two_edge_relabel() {
        let a = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let b = Hypergraph::new(3, 5, vec![vec![4, 3, 0], vec![0, 1, 2]]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
        assert_eq!(canonical_code(&a).unwrap().as_str(), "r3:([()()][()()])");
    }
}
