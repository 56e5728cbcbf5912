use serde::{Deserialize, Serialize};

use crate::canonical::{canonical_code, is_isomorphic};
use crate::constructions::{build_a, extremal_params, perfect_matching_bound, rho_bound, BoundResult};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matching::maximum_matchings;

use super::enumerate::{family, select, EnumerationRecord, DEFAULT_TIE_TOL};

/// Allowed distance between the winner's ρ and the closed-form bound.
pub const DEFAULT_BOUND_TOL: f64 = 1e-8;

/// Which hypertrees count as having a k-matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Interpretation {
    #[serde(rename = "exact-nu")]
    ExactNu,
    #[serde(rename = "at-least-nu")]
    AtLeastNu,
}

impl Interpretation {
    pub fn from_flag(at_least: bool) -> Self {
        if at_least {
            Interpretation::AtLeastNu
        } else {
            Interpretation::ExactNu
        }
    }

    pub fn at_least(self) -> bool {
        self == Interpretation::AtLeastNu
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub bound: f64,
    pub tie: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { bound: DEFAULT_BOUND_TOL, tie: DEFAULT_TIE_TOL }
    }
}

/// Outcome of checking one `(m, k, r)` triple against the bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub m: usize,
    pub k: usize,
    pub r: usize,
    pub q: usize,
    pub s: usize,
    pub l: i64,
    pub feasible: bool,
    pub interpretation: Interpretation,
    pub class_count: usize,
    pub winner_code: Option<String>,
    pub winner_rho: Option<f64>,
    pub bound_rho: Option<f64>,
    pub alpha0: Option<f64>,
    /// ρ gap between the best and second best class
    pub gap: Option<f64>,
    pub unique: bool,
    pub isomorphic_to_a: bool,
    pub matches_bound: bool,
    /// some maximum matching of the winner uses pendent edges only
    pub pendent_matching: Option<bool>,
    /// for such a matching, the remaining edges share a vertex
    pub common_vertex: Option<bool>,
    pub failures: Vec<String>,
}

impl VerificationReport {
    /// Infeasible triples are not failures.
    pub fn passed(&self) -> bool {
        !self.feasible || self.failures.is_empty()
    }

    pub(crate) fn infeasible(m: usize, k: usize, r: usize, interpretation: Interpretation) -> Result<Self> {
        let p = extremal_params(m, k, r)?;
        Ok(VerificationReport {
            m,
            k,
            r,
            q: p.q,
            s: p.s,
            l: p.l,
            feasible: false,
            interpretation,
            class_count: 0,
            winner_code: None,
            winner_rho: None,
            bound_rho: None,
            alpha0: None,
            gap: None,
            unique: false,
            isomorphic_to_a: false,
            matches_bound: false,
            pendent_matching: None,
            common_vertex: None,
            failures: Vec::new(),
        })
    }
}

/// Checks the two structural facts behind the extremal argument on `t`: a
/// maximum matching made of pendent edges whose complement is intersecting.
fn matching_claims(t: &Hypergraph) -> Result<(bool, bool)> {
    let pendent: Vec<bool> = (0..t.m()).map(|e| t.is_pendent(e)).collect::<Result<_>>()?;
    let mut found_pendent = false;
    for matching in maximum_matchings(t)? {
        if !matching.iter().all(|&e| pendent[e]) {
            continue;
        }
        found_pendent = true;
        let rest: Vec<usize> = (0..t.m()).filter(|e| !matching.contains(e)).collect();
        if rest.is_empty() || t.common_vertex(&rest)?.is_some() {
            return Ok((true, true));
        }
    }
    Ok((found_pendent, false))
}

pub(crate) fn verify_against(
    records: &[EnumerationRecord],
    k: usize,
    interpretation: Interpretation,
    bound: &BoundResult,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    let p = bound.params;
    let (m, r) = (p.m, p.r);
    let selected = select(records, k, interpretation.at_least(), tol.tie);
    let mut report = VerificationReport::infeasible(m, k, r, interpretation)?;
    report.feasible = true;
    report.class_count = selected.len();
    report.bound_rho = Some(bound.rho);
    report.alpha0 = Some(bound.alpha0);

    let mut order: Vec<&EnumerationRecord> = selected.iter().collect();
    order.sort_by(|a, b| b.rho.total_cmp(&a.rho).then_with(|| a.code.cmp(&b.code)));
    let Some(best) = order.first() else {
        report.failures.push("no hypertree in the family".into());
        return Ok(report);
    };
    report.winner_code = Some(best.code.to_string());
    report.winner_rho = Some(best.rho);
    report.gap = order.get(1).map(|second| best.rho - second.rho);
    report.unique = selected.iter().filter(|rec| rec.is_extremal).count() == 1;
    if !report.unique {
        report.failures.push("maximum ρ is attained by more than one class".into());
    }

    let a = build_a(m, p.k, r)?;
    report.isomorphic_to_a = canonical_code(&a)? == best.code;
    debug_assert_eq!(report.isomorphic_to_a, is_isomorphic(&a, &best.hypergraph)?);
    if !report.isomorphic_to_a {
        report.failures.push(format!("winner {} is not A({m},{},{r})", best.code, p.k));
    }
    report.matches_bound = (best.rho - bound.rho).abs() <= tol.bound;
    if !report.matches_bound {
        report.failures.push(format!("winner ρ {} differs from bound {}", best.rho, bound.rho));
    }

    let (pendent, common) = matching_claims(&best.hypergraph)?;
    report.pendent_matching = Some(pendent);
    report.common_vertex = Some(common);
    if !pendent {
        report.failures.push("no maximum matching of pendent edges".into());
    } else if !common {
        report.failures.push("edges outside every pendent maximum matching share no vertex".into());
    }
    Ok(report)
}

/// Exhaustively checks that `A(m, k, r)` is the unique maximizer of ρ over
/// `T_{m,k,r}` and that its ρ equals the closed-form bound.
pub fn verify_extremal(m: usize, k: usize, r: usize, at_least: bool) -> Result<VerificationReport> {
    verify_extremal_with(m, k, r, Interpretation::from_flag(at_least), &Tolerances::default())
}

pub fn verify_extremal_with(
    m: usize,
    k: usize,
    r: usize,
    interpretation: Interpretation,
    tol: &Tolerances,
) -> Result<VerificationReport> {
    let bound = rho_bound(m, k, r)?;
    verify_against(&family(m, r)?, k, interpretation, &bound, tol)
}

/// The perfect-matching case: `m = (kr − 1)/(r − 1)` edges, matching number `k`,
/// checked against the perfect-matching bound.
pub fn verify_perfect_matching(r: usize, k: usize) -> Result<VerificationReport> {
    if r < 2 || k < 1 {
        return Err(Error::BadParameters(format!("need r ≥ 2, k ≥ 1 (got r={r}, k={k})")));
    }
    if (k * r - 1) % (r - 1) != 0 {
        return Err(Error::BadParameters(format!(
            "m = ({k}·{r} − 1)/({r} − 1) is not an integer"
        )));
    }
    let m = (k * r - 1) / (r - 1);
    let bound = perfect_matching_bound(m, r)?;
    verify_against(&family(m, r)?, k, Interpretation::ExactNu, &bound, &Tolerances::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_is_extremal() {
        let rep = verify_extremal(3, 2, 3, false).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.class_count, 1);
        assert!(rep.unique && rep.matches_bound && rep.isomorphic_to_a);
        assert!((rep.winner_rho.unwrap() - 1.378240772).abs() < 1e-8);
    }

    #[test]
    fn p4_is_extremal() {
        let rep = verify_extremal(3, 2, 2, false).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.winner_code.as_deref(), Some(canonical_code(&build_a(3, 2, 2).unwrap()).unwrap().as_str()));
        assert!((rep.winner_rho.unwrap() - 1.6180340).abs() < 1e-7);
    }

    #[test]
    fn stars_win_k1() {
        for (m, r) in [(3, 2), (4, 3), (5, 4)] {
            let rep = verify_extremal(m, 1, r, false).unwrap();
            assert!(rep.passed(), "{rep:?}");
            assert!((rep.winner_rho.unwrap() - (m as f64).powf(1.0 / r as f64)).abs() < 1e-9);
        }
    }

    #[test]
    fn perfect_matching_cases() {
        let rep = verify_perfect_matching(2, 2).unwrap();
        assert_eq!(rep.m, 3);
        assert!(rep.passed(), "{rep:?}");
        let rep = verify_perfect_matching(3, 3).unwrap();
        assert_eq!(rep.m, 4);
        assert!(rep.passed(), "{rep:?}");
        assert!((rep.winner_rho.unwrap() - 1.4655712318767682).abs() < 1e-9);
        assert!(verify_perfect_matching(3, 2).is_err());
    }

    #[test]
    fn infeasible_is_an_error() {
        assert!(matches!(verify_extremal(5, 4, 3, false), Err(Error::Infeasible { .. })));
    }
}
