//! Structural operations on hypertrees: edge moving, edge releasing, the
//! matching-polynomial order and majorization chains of composition vectors.

mod majorization;
mod order;

pub use majorization::{is_majorized, majorization_chain, majorization_step};
pub use order::{compare_order, DirectionWitness, OrderRelation, OrderTag};

use crate::error::{Error, Result};
use crate::hypergraph::{intersection_size, EdgeId, Hypergraph, VertexId};

/// Moves each edge `e_i` off `v_i` onto `u`: `e_i` becomes `(e_i ∖ {v_i}) ∪ {u}`.
/// Edge ids are preserved. The result must stay linear.
pub fn move_edges(h: &Hypergraph, u: VertexId, moves: &[(EdgeId, VertexId)]) -> Result<Hypergraph> {
    if u >= h.n() {
        return Err(Error::InvalidVertex { vertex: u, n: h.n() });
    }
    let mut edges = h.edges().to_vec();
    let mut seen = vec![false; h.m()];
    for &(e, v) in moves {
        let edge = h.edge(e)?;
        if std::mem::replace(&mut seen[e], true) {
            return Err(Error::Precondition(format!("edge {e} is moved twice")));
        }
        if edge.contains(&u) {
            return Err(Error::Precondition(format!("edge {e} already contains {u}")));
        }
        if !edge.contains(&v) {
            return Err(Error::Precondition(format!("vertex {v} is not in edge {e}")));
        }
        edges[e] = edge.iter().map(|&w| if w == v { u } else { w }).collect();
        edges[e].sort_unstable();
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if intersection_size(&edges[i], &edges[j]) > 1 {
                return Err(Error::NonLinear(format!("edges {i} and {j} would share more than one vertex")));
            }
        }
    }
    Ok(Hypergraph::from_parts_unchecked(h.r(), h.n(), edges))
}

/// Edge-releasing of `e` at `u ∈ e`: every edge meeting `e` away from `u` is
/// moved to `u`.
pub fn edge_release_at(h: &Hypergraph, e: EdgeId, u: VertexId) -> Result<Hypergraph> {
    if !h.is_hypertree() {
        return Err(Error::NotHypertree);
    }
    let edge = h.edge(e)?.to_vec();
    if !edge.contains(&u) {
        return Err(Error::Precondition(format!("vertex {u} is not in edge {e}")));
    }
    let moves: Vec<(EdgeId, VertexId)> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|&(f, _)| f != e)
        .filter_map(|(f, other)| {
            let w = *other.iter().find(|w| edge.contains(w))?;
            (w != u).then_some((f, w))
        })
        .collect();
    move_edges(h, u, &moves)
}

/// Edge-releasing of a non-pendent edge at its lowest-id vertex. Any other
/// vertex of `e` gives an isomorphic result.
pub fn edge_release(h: &Hypergraph, e: EdgeId) -> Result<Hypergraph> {
    if h.is_pendent(e)? {
        return Err(Error::Precondition(format!("edge {e} is pendent")));
    }
    let u = h.edge(e)?[0];
    edge_release_at(h, e, u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use crate::constructions::hyperstar;

    fn p4() -> Hypergraph {
        Hypergraph::new(2, 4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap()
    }

    fn path3() -> Hypergraph {
        Hypergraph::new(3, 7, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6]]).unwrap()
    }

    #[test]
    fn move_in_p4() {
        let s = move_edges(&p4(), 1, &[(2, 2)]).unwrap();
        assert_eq!(s.sorted_edges(), vec![vec![0, 1], vec![1, 2], vec![1, 3]]);
        assert_eq!(move_edges(&p4(), 1, &[]).unwrap(), p4());
    }

    #[test]
    fn move_path_to_star() {
        let s = move_edges(&path3(), 3, &[(0, 2), (2, 4)]).unwrap();
        assert!(is_isomorphic(&s, &hyperstar(3, 3).unwrap()).unwrap());
    }

    #[test]
    fn move_rejections() {
        let h = p4();
        assert!(matches!(move_edges(&h, 1, &[(0, 0)]), Err(Error::Precondition(_))));
        assert!(matches!(move_edges(&h, 0, &[(2, 1)]), Err(Error::Precondition(_))));
        assert!(matches!(move_edges(&h, 9, &[]), Err(Error::InvalidVertex { .. })));
        // {2,3} would become a second copy of {1,2}
        let t = Hypergraph::new(2, 4, vec![vec![1, 2], vec![2, 3]]).unwrap();
        assert!(matches!(move_edges(&t, 1, &[(1, 3)]), Err(Error::NonLinear(_))));
    }

    #[test]
    fn release_examples() {
        let s = edge_release(&path3(), 1).unwrap();
        assert!(is_isomorphic(&s, &hyperstar(3, 3).unwrap()).unwrap());
        let s = edge_release(&p4(), 1).unwrap();
        assert!(is_isomorphic(&s, &hyperstar(3, 2).unwrap()).unwrap());
        assert!(matches!(edge_release(&p4(), 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn release_at_center_is_identity() {
        let star = hyperstar(3, 3).unwrap();
        assert_eq!(edge_release_at(&star, 0, 0).unwrap(), star);
        let other = edge_release_at(&path3(), 1, 3).unwrap();
        assert!(is_isomorphic(&other, &edge_release(&path3(), 1).unwrap()).unwrap());
    }
}
