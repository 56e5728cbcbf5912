use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{canonical_code, CanonicalCode};
use crate::constructions::hyperstar;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::matching::matching_number;
use crate::spectral::spectral_radius_polyroot;

/// Two spectral radii closer than this count as a tie.
pub const DEFAULT_TIE_TOL: f64 = 1e-9;

/// One isomorphism class of `T_{m,k,r}`.
#[derive(Debug, Clone, Serialize)]
pub struct EnumerationRecord {
    pub code: CanonicalCode,
    pub hypergraph: Hypergraph,
    pub nu: usize,
    pub rho: f64,
    /// attains the maximum ρ of its family (within the tie tolerance)
    pub is_extremal: bool,
}

/// Largest `m` enumerated for edge size `r`.
pub fn enumeration_limit(r: usize) -> usize {
    match r {
        2 => 9,
        3 => 7,
        _ => 5,
    }
}

fn check_guard(m: usize, r: usize) -> Result<()> {
    if m < 1 || r < 2 {
        return Err(Error::BadParameters(format!("need m ≥ 1, r ≥ 2 (got m={m}, r={r})")));
    }
    let limit = enumeration_limit(r);
    if m > limit {
        return Err(Error::GuardExceeded(format!("enumeration for r={r} is limited to m ≤ {limit}, got {m}")));
    }
    Ok(())
}

fn attach_pendent(h: &Hypergraph, v: VertexId) -> Hypergraph {
    let r = h.r();
    let n = h.n();
    let mut edges = h.edges().to_vec();
    let mut e = vec![v];
    e.extend(n..n + r - 1);
    edges.push(e);
    Hypergraph::from_parts_unchecked(r, n + r - 1, edges)
}

/// One hypertree per isomorphism class with `m` edges, sorted by canonical
/// code. Every hypertree with at least two edges has a pendent edge whose
/// removal leaves a hypertree, so growing each smaller class by one pendent
/// edge at every vertex reaches every class.
pub fn enumerate_hypertrees(m: usize, r: usize) -> Result<Vec<Hypergraph>> {
    Ok(enumerate_with_codes(m, r)?.into_iter().map(|(_, h)| h).collect())
}

pub(crate) fn enumerate_with_codes(m: usize, r: usize) -> Result<Vec<(CanonicalCode, Hypergraph)>> {
    check_guard(m, r)?;
    let seed = hyperstar(1, r)?;
    let mut level = vec![(canonical_code(&seed)?, seed)];
    for _ in 1..m {
        let grown: Vec<Vec<(CanonicalCode, Hypergraph)>> = level
            .par_iter()
            .map(|(_, h)| {
                (0..h.n())
                    .map(|v| {
                        let g = attach_pendent(h, v);
                        let code = canonical_code(&g).expect("growth keeps hypertrees acyclic");
                        (code, g)
                    })
                    .collect()
            })
            .collect();
        let mut classes = BTreeMap::new();
        for (code, g) in grown.into_iter().flatten() {
            classes.entry(code).or_insert(g);
        }
        level = classes.into_iter().collect();
    }
    Ok(level)
}

/// Every class with `m` edges together with its matching number and ρ.
pub(crate) fn family(m: usize, r: usize) -> Result<Vec<EnumerationRecord>> {
    enumerate_with_codes(m, r)?
        .into_par_iter()
        .map(|(code, hypergraph)| {
            let nu = matching_number(&hypergraph);
            let rho = spectral_radius_polyroot(&hypergraph)?.rho;
            Ok(EnumerationRecord { code, hypergraph, nu, rho, is_extremal: false })
        })
        .collect()
}

pub(crate) fn select(records: &[EnumerationRecord], k: usize, at_least: bool, tie_tol: f64) -> Vec<EnumerationRecord> {
    let mut out: Vec<EnumerationRecord> = records
        .iter()
        .filter(|rec| if at_least { rec.nu >= k } else { rec.nu == k })
        .cloned()
        .collect();
    let best = out.iter().map(|rec| rec.rho).fold(f64::NEG_INFINITY, f64::max);
    for rec in &mut out {
        rec.is_extremal = best - rec.rho <= tie_tol;
    }
    out
}

/// The classes of `T_{m,k,r}`: hypertrees with `m` edges and matching number
/// exactly `k`, or at least `k` when `at_least` is set.
pub fn enumerate_t_mkr(m: usize, k: usize, r: usize, at_least: bool) -> Result<Vec<EnumerationRecord>> {
    Ok(select(&family(m, r)?, k, at_least, DEFAULT_TIE_TOL))
}
