//! Deterministic builders for the named hypertree families and the
//! closed-form bound on the spectral radius of hypertrees with `m` edges and a
//! `k`-matching.
//!
//! New vertices are always appended after the existing ones, and pendant edges
//! are attached at the lowest-id free core vertices.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::matching::matching_number;

/// Non-increasing vector of nonnegative integers bounded by a cap `c`, i.e. an
/// element of the set of integer vectors `c ≥ x1 ≥ … ≥ xb ≥ 0` with fixed sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CompositionVector {
    entries: Vec<usize>,
    cap: usize,
}

impl CompositionVector {
    pub fn new(entries: Vec<usize>, cap: usize) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadParameters(format!("{entries:?} is not non-increasing")));
        }
        if entries.first().is_some_and(|&x| x > cap) {
            return Err(Error::BadParameters(format!("{entries:?} exceeds cap {cap}")));
        }
        Ok(CompositionVector { entries, cap })
    }

    /// Uses the largest entry as the cap.
    pub fn uncapped(entries: Vec<usize>) -> Result<Self> {
        let cap = entries.first().copied().unwrap_or(0);
        Self::new(entries, cap)
    }

    /// Parses a comma separated list such as `"3,2,1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::uncapped(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub(crate) fn with_entries(&self, entries: Vec<usize>) -> Self {
        CompositionVector { entries, cap: self.cap }
    }
}

impl fmt::Display for CompositionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// The hyperstar `S_m^r` with center 0.
pub fn hyperstar(m: usize, r: usize) -> Result<Hypergraph> {
    if m < 1 || r < 2 {
        return Err(Error::BadParameters(format!("hyperstar needs m ≥ 1, r ≥ 2 (got m={m}, r={r})")));
    }
    let edges = (0..m)
        .map(|i| {
            let mut e = vec![0];
            e.extend((0..r - 1).map(|j| 1 + i * (r - 1) + j));
            e
        })
        .collect();
    Hypergraph::new(r, m * (r - 1) + 1, edges)
}

/// Adds a fresh edge through `at`, returning the new (appended) vertices.
fn attach_edge(r: usize, n: &mut usize, edges: &mut Vec<Vec<VertexId>>, at: VertexId) -> Vec<VertexId> {
    let fresh: Vec<VertexId> = (*n..*n + r - 1).collect();
    *n += r - 1;
    let mut e = vec![at];
    e.extend(&fresh);
    edges.push(e);
    fresh
}

/// `S(a_1, …, a_b)`: the hyperstar `S_b^r` with `a_i` pendent edges hung at
/// distinct core vertices of its i-th edge.
pub fn build_s(composition: &[usize], r: usize) -> Result<Hypergraph> {
    let b = composition.len();
    if b == 0 {
        return Err(Error::BadParameters("S(…) needs at least one star edge".into()));
    }
    if let Some(&a) = composition.iter().find(|&&a| a > r - 1) {
        return Err(Error::BadParameters(format!(
            "{a} pendants exceed the {} core vertices of a star edge",
            r - 1
        )));
    }
    let star = hyperstar(b, r)?;
    let mut n = star.n();
    let mut edges = star.edges().to_vec();
    for (i, &a) in composition.iter().enumerate() {
        let cores: Vec<VertexId> = edges[i][1..].to_vec();
        for &c in cores.iter().take(a) {
            attach_edge(r, &mut n, &mut edges, c);
        }
    }
    Hypergraph::new(r, n, edges)
}

/// `R_a`: an edge `e` whose first `a` vertices each carry a pendent edge.
pub fn build_r_a(a: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 || a < 1 || a > r {
        return Err(Error::BadParameters(format!("R_a needs 1 ≤ a ≤ r (got a={a}, r={r})")));
    }
    let mut n = r;
    let mut edges = vec![(0..r).collect::<Vec<_>>()];
    for v in 0..a {
        attach_edge(r, &mut n, &mut edges, v);
    }
    Hypergraph::new(r, n, edges)
}

/// `T(v; a)`: glue a core vertex of `R_a` onto vertex `v` of `t`. The new edge
/// through `v` carries `a` pendent edges.
pub fn build_t_v_a(t: &Hypergraph, v: VertexId, a: usize) -> Result<Hypergraph> {
    let r = t.r();
    if v >= t.n() {
        return Err(Error::InvalidVertex { vertex: v, n: t.n() });
    }
    if a > r - 1 {
        return Err(Error::BadParameters(format!("T(v;a) needs a ≤ r − 1 (got a={a}, r={r})")));
    }
    let mut n = t.n();
    let mut edges = t.edges().to_vec();
    let fresh = attach_edge(r, &mut n, &mut edges, v);
    for &w in fresh.iter().take(a) {
        attach_edge(r, &mut n, &mut edges, w);
    }
    Hypergraph::new(r, n, edges)
}

/// `T(v; a, b)`: `T(v; b)` with a further copy of `R_a` glued at `v`.
pub fn build_t_v_ab(t: &Hypergraph, v: VertexId, a: usize, b: usize) -> Result<Hypergraph> {
    let inner = build_t_v_a(t, v, b)?;
    build_t_v_a(&inner, v, a)
}

/// The parameters `q, s, l` of `k − 1 = (r − 1) q + s`, `0 ≤ s < r − 1`, and
/// `m = q r + s + 1 + l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalParams {
    pub m: usize,
    pub k: usize,
    pub r: usize,
    pub q: usize,
    pub s: usize,
    pub l: i64,
    /// `l ≥ 0` and a k-matching fits in `m (r − 1) + 1` vertices
    pub feasible: bool,
}

impl ExtremalParams {
    /// `((r−1)^(q), s, 0^(l))`.
    pub fn composition(&self) -> Option<Vec<usize>> {
        if !self.feasible {
            return None;
        }
        let mut c = vec![self.r - 1; self.q];
        c.push(self.s);
        c.extend(std::iter::repeat(0).take(self.l as usize));
        Some(c)
    }

    fn infeasible(&self) -> Error {
        let n = self.m * (self.r - 1) + 1;
        let reason = if self.l < 0 {
            format!("l = {} < 0", self.l)
        } else {
            format!("a {}-matching needs {} vertices but a hypertree with {} edges has {n}", self.k, self.k * self.r, self.m)
        };
        Error::Infeasible { m: self.m, k: self.k, r: self.r, reason }
    }
}

/// Computes `(q, s, l)` by Euclidean division and decides feasibility.
pub fn extremal_params(m: usize, k: usize, r: usize) -> Result<ExtremalParams> {
    if m < 1 || k < 1 || r < 2 {
        return Err(Error::BadParameters(format!("need m ≥ 1, k ≥ 1, r ≥ 2 (got m={m}, k={k}, r={r})")));
    }
    let q = (k - 1) / (r - 1);
    let s = (k - 1) % (r - 1);
    let l = m as i64 - (q * r + s + 1) as i64;
    let feasible = l >= 0 && k * r <= m * (r - 1) + 1;
    Ok(ExtremalParams { m, k, r, q, s, l, feasible })
}

/// The extremal hypertree `A(m, k, r) = S((r−1)^(q), s, 0^(l))`.
pub fn build_a(m: usize, k: usize, r: usize) -> Result<Hypergraph> {
    let params = extremal_params(m, k, r)?;
    let composition = params.composition().ok_or_else(|| params.infeasible())?;
    let t = build_s(&composition, r)?;
    let nu = matching_number(&t);
    if t.m() != m || nu != k {
        return Err(Error::Precondition(format!(
            "A({m},{k},{r}) came out with {} edges and matching number {nu}",
            t.m()
        )));
    }
    Ok(t)
}

/// Solution of the bound equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundResult {
    pub params: ExtremalParams,
    pub alpha0: f64,
    /// `(1 / (1 − α0))^(1/r)`
    pub rho: f64,
}

const BISECT_WIDTH: f64 = 1e-14;
const CERTIFY_POINTS: usize = 10_000;
const SCAN_FLOOR: f64 = 1e-9;

/// `g(α) = α^(r−1) (1/(1−α) − α^(−s) − l) − q`.
fn bound_equation(p: &ExtremalParams, alpha: f64) -> f64 {
    let r = p.r as i32;
    alpha.powi(r - 1) * (1.0 / (1.0 - alpha) - alpha.powi(-(p.s as i32)) - p.l as f64) - p.q as f64
}

fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    // f(lo) ≤ 0 < f(hi)
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// No sign change of `f` on a uniform grid of `(root, 1)`.
fn certify_no_larger_root<F: Fn(f64) -> f64>(f: F, root: f64) -> bool {
    let step = (1.0 - root) / (CERTIFY_POINTS + 1) as f64;
    (1..=CERTIFY_POINTS).all(|i| f(root + step * i as f64 + BISECT_WIDTH) > 0.0)
}

/// The largest root α0 in (0,1) of the bound equation and the resulting bound
/// on ρ. For `m = 1` the root degenerates to α0 = 0 (ρ = 1).
pub fn rho_bound(m: usize, k: usize, r: usize) -> Result<BoundResult> {
    let params = extremal_params(m, k, r)?;
    if !params.feasible {
        return Err(params.infeasible());
    }
    if params.m == 1 {
        return Ok(BoundResult { params, alpha0: 0.0, rho: 1.0 });
    }
    let g = |a: f64| bound_equation(&params, a);
    // scan 1 − α over a geometric grid, starting next to 1
    let mut gap = 1e-12;
    let mut prev = 1.0 - gap;
    if g(prev) <= 0.0 {
        return Err(Error::Bracketing(format!("g(1 − 1e-12) = {} is not positive", g(prev))));
    }
    let mut trace = Vec::new();
    let mut bracket = None;
    while 1.0 - gap > SCAN_FLOOR {
        gap = (gap * 1.25).min(1.0 - SCAN_FLOOR);
        let alpha = 1.0 - gap;
        let value = g(alpha);
        trace.push((alpha, value));
        if value <= 0.0 {
            bracket = Some((alpha, prev));
            break;
        }
        prev = alpha;
    }
    let Some((lo, hi)) = bracket else {
        let tail: Vec<String> = trace.iter().rev().take(5).map(|(a, v)| format!("g({a:.3e})={v:.3e}")).collect();
        return Err(Error::Bracketing(format!("no sign change found; last points {}", tail.join(", "))));
    };
    let alpha0 = bisect(g, lo, hi);
    if !certify_no_larger_root(g, alpha0) {
        return Err(Error::Bracketing(format!("sign change above α0 = {alpha0}")));
    }
    Ok(BoundResult { params, alpha0, rho: (1.0 / (1.0 - alpha0)).powf(1.0 / r as f64) })
}

/// Bound for hypertrees with a perfect matching: α0 is the root in [0, 1) of
/// `r α^r = (m − 1)(1 − α)`.
pub fn perfect_matching_bound(m: usize, r: usize) -> Result<BoundResult> {
    if m < 1 || r < 2 {
        return Err(Error::BadParameters(format!("need m ≥ 1, r ≥ 2 (got m={m}, r={r})")));
    }
    let n = m * (r - 1) + 1;
    if n % r != 0 {
        return Err(Error::Infeasible {
            m,
            k: n / r,
            r,
            reason: format!("{n} vertices cannot be covered by edges of size {r}"),
        });
    }
    let params = extremal_params(m, n / r, r)?;
    let h = |a: f64| r as f64 * a.powi(r as i32) - (m - 1) as f64 * (1.0 - a);
    let alpha0 = if m == 1 { 0.0 } else { bisect(h, 0.0, 1.0) };
    Ok(BoundResult { params, alpha0, rho: (1.0 / (1.0 - alpha0)).powf(1.0 / r as f64) })
}
