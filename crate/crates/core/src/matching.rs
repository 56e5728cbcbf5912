//! Matching counts and the matching polynomial
//! `φ(H, x) = Σ_k (-1)^k m(H, k) x^(n - k r)`.
//!
//! Counts come from the edge-deletion recurrence
//! `M(G) = M(G \ e) + t · M(G - V(e))` on the matching generating function
//! `M(G) = Σ_k m(G, k) t^k`, splitting into connected components and
//! memoizing components by canonical code. Hyperforests always offer a
//! pendent edge to split on, which keeps every branch acyclic.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, UnionFind, VertexId};
use crate::poly::IntPoly;

/// Exact counts `m(H, 0), …, m(H, ν)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatchingProfile {
    pub counts: Vec<BigUint>,
}

impl MatchingProfile {
    fn from_counts(mut counts: Vec<BigUint>) -> Self {
        while counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        MatchingProfile { counts }
    }

    /// Matching number ν(H).
    pub fn nu(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    /// Counts as `u64`, for tests and reports on small inputs.
    pub fn to_u64(&self) -> Vec<u64> {
        self.counts
            .iter()
            .map(|c| u64::try_from(c.clone()).expect("count fits in u64"))
            .collect()
    }
}

/// The matching polynomial of a hypergraph of order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchPoly {
    pub n: usize,
    pub r: usize,
    /// exponent → coefficient, nonzero entries only
    pub coeffs: BTreeMap<usize, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct MatchPolyJson {
    n: usize,
    r: usize,
    coeffs: BTreeMap<String, String>,
}

impl MatchPoly {
    pub fn from_profile(n: usize, r: usize, profile: &MatchingProfile) -> Self {
        let coeffs = profile
            .counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let c = BigInt::from(c.clone());
                (n - k * r, if k % 2 == 0 { c } else { -c })
            })
            .collect();
        MatchPoly { n, r, coeffs }
    }

    /// Dense polynomial in `x`.
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::from_terms(self.coeffs.iter().map(|(&e, c)| (e, c.clone())))
    }

    /// Writes `φ(x) = x^t · P(x^r)` with `t = n mod r`; returns `(t, P)`.
    pub fn z_form(&self) -> (usize, IntPoly) {
        let t = self.n % self.r;
        let p = IntPoly::from_terms(self.coeffs.iter().map(|(&e, c)| ((e - t) / self.r, c.clone())));
        (t, p)
    }

    /// `p(z) = Σ (-1)^k m_k z^(ν - k)`, the z-form with the trivial root at 0
    /// divided out.
    pub fn reduced_z_form(&self) -> IntPoly {
        let (_, p) = self.z_form();
        let low = p.terms().next().map(|(e, _)| e).unwrap_or(0);
        IntPoly::from_terms(p.terms().map(|(e, c)| (e - low, c.clone())))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Degree-n leading coefficient 1, strictly alternating signs, exponents ≡ n (mod r).
    pub fn is_well_formed(&self) -> bool {
        let lead_ok = self.coeffs.get(&self.n).is_some_and(One::is_one)
            && self.coeffs.keys().all(|&e| e <= self.n);
        let mut sign_ok = true;
        for (&e, c) in &self.coeffs {
            if (self.n - e) % self.r != 0 {
                return false;
            }
            let k = (self.n - e) / self.r;
            let positive = c > &BigInt::zero();
            sign_ok &= positive == (k % 2 == 0);
        }
        lead_ok && sign_ok
    }

    pub fn to_json_string(&self) -> String {
        let json = MatchPolyJson {
            n: self.n,
            r: self.r,
            coeffs: self.coeffs.iter().map(|(e, c)| (e.to_string(), c.to_string())).collect(),
        };
        serde_json::to_string(&json).expect("strings serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: MatchPolyJson = serde_json::from_str(s)?;
        let mut coeffs = BTreeMap::new();
        for (e, c) in raw.coeffs {
            let e: usize = e.parse().map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
            let c: BigInt = c.parse().map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))?;
            if !c.is_zero() {
                coeffs.insert(e, c);
            }
        }
        Ok(MatchPoly { n: raw.n, r: raw.r, coeffs })
    }
}

impl std::fmt::Display for MatchPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.to_poly().fmt(f)
    }
}

#[derive(Hash, PartialEq, Eq)]
enum MemoKey {
    Code(CanonicalCode),
    Structure(Vec<Vec<VertexId>>),
}

/// Generating polynomial in `t`, low degree first.
type GenPoly = Vec<BigUint>;

fn gen_add_shifted(a: &GenPoly, b: &GenPoly) -> GenPoly {
    // a + t·b
    let len = a.len().max(b.len() + 1);
    (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = if i == 0 { BigUint::zero() } else { b.get(i - 1).cloned().unwrap_or_default() };
            x + y
        })
        .collect()
}

fn gen_mul(a: &GenPoly, b: &GenPoly) -> GenPoly {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[derive(Default)]
struct Counter {
    memo: HashMap<MemoKey, GenPoly>,
}

impl Counter {
    /// Edges only; isolated vertices never affect matchings.
    fn count(&mut self, r: usize, edges: &[Vec<VertexId>]) -> GenPoly {
        if edges.is_empty() {
            return vec![BigUint::one()];
        }
        if edges.len() == 1 {
            return vec![BigUint::one(), BigUint::one()];
        }
        let comps = split_components(edges);
        if comps.len() > 1 {
            return comps
                .iter()
                .map(|c| self.count_connected(r, c))
                .fold(vec![BigUint::one()], |acc, p| gen_mul(&acc, &p));
        }
        self.count_connected(r, &comps[0])
    }

    fn count_connected(&mut self, r: usize, edges: &[Vec<VertexId>]) -> GenPoly {
        if edges.len() == 1 {
            return vec![BigUint::one(), BigUint::one()];
        }
        let h = compact(r, edges);
        let key = match canonical_code(&h) {
            Ok(code) => MemoKey::Code(code),
            Err(_) => MemoKey::Structure(h.sorted_edges()),
        };
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let pick = h.pendent_edges().first().copied().unwrap_or(0);
        let e = &h.edges()[pick];
        let without: Vec<Vec<VertexId>> = h
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pick)
            .map(|(_, f)| f.clone())
            .collect();
        let disjoint: Vec<Vec<VertexId>> = without
            .iter()
            .filter(|f| !f.iter().any(|v| e.contains(v)))
            .cloned()
            .collect();
        let a = self.count(r, &without);
        let b = self.count(r, &disjoint);
        let result = gen_add_shifted(&a, &b);
        self.memo.insert(key, result.clone());
        result
    }
}

fn split_components(edges: &[Vec<VertexId>]) -> Vec<Vec<Vec<VertexId>>> {
    let max_v = edges.iter().flatten().copied().max().unwrap_or(0);
    let mut uf = UnionFind::new(max_v + 1);
    for e in edges {
        for w in e.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut groups: BTreeMap<usize, Vec<Vec<VertexId>>> = BTreeMap::new();
    for e in edges {
        groups.entry(uf.find(e[0])).or_default().push(e.clone());
    }
    groups.into_values().collect()
}

fn compact(r: usize, edges: &[Vec<VertexId>]) -> Hypergraph {
    let mut ids: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for &v in edges.iter().flatten() {
        let next = ids.len();
        ids.entry(v).or_insert(next);
    }
    let relabeled = edges
        .iter()
        .map(|e| {
            let mut f: Vec<VertexId> = e.iter().map(|v| ids[v]).collect();
            f.sort_unstable();
            f
        })
        .collect();
    Hypergraph::from_parts_unchecked(r, ids.len(), relabeled)
}

/// Exact k-matching counts via the deletion recurrence.
pub fn matching_counts(h: &Hypergraph) -> MatchingProfile {
    let mut counter = Counter::default();
    MatchingProfile::from_counts(counter.count(h.r(), h.edges()))
}

/// Matching number ν(H).
pub fn matching_number(h: &Hypergraph) -> usize {
    matching_counts(h).nu()
}

pub fn matching_polynomial(h: &Hypergraph) -> MatchPoly {
    MatchPoly::from_profile(h.n(), h.r(), &matching_counts(h))
}

/// Largest edge count accepted by [`brute_force_counts`].
pub const BRUTE_FORCE_MAX_EDGES: usize = 25;

/// Independent oracle: enumerates every edge subset and counts the pairwise
/// disjoint ones by size.
pub fn brute_force_counts(h: &Hypergraph) -> Result<MatchingProfile> {
    let m = h.m();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::GuardExceeded(format!(
            "brute force limited to {BRUTE_FORCE_MAX_EDGES} edges, got {m}"
        )));
    }
    let mut disjoint = vec![0u32; m];
    for i in 0..m {
        for j in 0..m {
            if i != j && !h.edges()[i].iter().any(|v| h.edges()[j].contains(v)) {
                disjoint[i] |= 1 << j;
            }
        }
    }
    let mut counts = vec![0u64; m + 1];
    for mask in 0u32..(1u32 << m) {
        let mut ok = true;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if rest & !disjoint[i] != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(MatchingProfile::from_counts(counts.into_iter().map(BigUint::from).collect()))
}

/// All maximum matchings, as sorted edge-index lists. Exponential; intended
/// for small inputs.
pub fn maximum_matchings(h: &Hypergraph) -> Result<Vec<Vec<usize>>> {
    let m = h.m();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::GuardExceeded(format!("{m} edges")));
    }
    let mut best: Vec<Vec<usize>> = Vec::new();
    let mut best_size = 0;
    for mask in 0u32..(1u32 << m) {
        let set: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        let pairwise = set.iter().enumerate().all(|(a, &i)| {
            set[a + 1..].iter().all(|&j| !h.edges()[i].iter().any(|v| h.edges()[j].contains(v)))
        });
        if !pairwise {
            continue;
        }
        match set.len().cmp(&best_size) {
            std::cmp::Ordering::Greater => {
                best_size = set.len();
                best = vec![set];
            }
            std::cmp::Ordering::Equal => best.push(set),
            std::cmp::Ordering::Less => {}
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Hypergraph {
        Hypergraph::new(2, 4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap()
    }

    fn path3() -> Hypergraph {
        Hypergraph::new(3, 7, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6]]).unwrap()
    }

    fn star(m: usize, r: usize) -> Hypergraph {
        let edges = (0..m)
            .map(|i| {
                let mut e = vec![0];
                e.extend((0..r - 1).map(|j| 1 + i * (r - 1) + j));
                e
            })
            .collect();
        Hypergraph::new(r, m * (r - 1) + 1, edges).unwrap()
    }

    #[test]
    fn counts_match_hand_enumeration() {
        assert_eq!(matching_counts(&star(5, 3)).to_u64(), vec![1, 5]);
        assert_eq!(matching_counts(&p4()).to_u64(), vec![1, 3, 1]);
        assert_eq!(matching_counts(&path3()).to_u64(), vec![1, 3, 1]);
        assert_eq!(matching_counts(&Hypergraph::empty(3, 4)).to_u64(), vec![1]);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_counts(&Hypergraph::empty(3, 0)).unwrap().to_u64(), vec![1]);
        assert_eq!(brute_force_counts(&star(2, 3)).unwrap().to_u64(), vec![1, 2]);
        assert_eq!(brute_force_counts(&path3()).unwrap().to_u64(), vec![1, 3, 1]);
        let big = star(26, 2);
        assert!(matches!(brute_force_counts(&big), Err(Error::GuardExceeded(_))));
    }

    #[test]
    fn matching_numbers() {
        assert_eq!(matching_number(&star(5, 3)), 1);
        assert_eq!(matching_number(&p4()), 2);
        assert_eq!(matching_number(&Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()), 1);
    }

    #[test]
    fn polynomials() {
        assert_eq!(matching_polynomial(&star(3, 2)).to_string(), "x^4 - 3x^2");
        assert_eq!(matching_polynomial(&p4()).to_string(), "x^4 - 3x^2 + 1");
        let phi = matching_polynomial(&path3());
        assert_eq!(phi.to_string(), "x^7 - 3x^4 + x");
        assert!(phi.is_well_formed());
        let (t, p) = phi.z_form();
        assert_eq!(t, 1);
        assert_eq!(p, IntPoly::from_i64(&[1, -3, 1]));
    }

    #[test]
    fn cyclic_input_uses_structural_memo() {
        // triangle plus a pendant: only {0,1},{2,3} is a 2-matching
        let h = Hypergraph::new(2, 4, vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![2, 3]]).unwrap();
        assert_eq!(matching_counts(&h), brute_force_counts(&h).unwrap());
        assert_eq!(matching_counts(&h).to_u64(), vec![1, 4, 1]);
    }

    #[test]
    fn json_round_trip_keeps_big_coefficients() {
        let phi = matching_polynomial(&p4());
        let s = phi.to_json_string();
        assert_eq!(s, r#"{"n":4,"r":2,"coeffs":{"0":"1","2":"-3","4":"1"}}"#);
        assert_eq!(MatchPoly::from_json_str(&s).unwrap(), phi);
    }

    #[test]
    fn maximum_matchings_of_path() {
        assert_eq!(maximum_matchings(&path3()).unwrap(), vec![vec![0, 2]]);
    }
}
