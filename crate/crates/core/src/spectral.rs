//! Spectral radius of the adjacency tensor.
//!
//! Two independent routes are provided:
//!
//! * [`spectral_radius_power`]: shifted power iteration on the map
//!   `x ↦ (A x + σ x^[r-1])^[1/(r-1)]`, bracketing `ρ + σ` between the smallest
//!   and largest ratio `(A x + σ x^[r-1])_i / x_i^(r-1)` (Collatz–Wielandt
//!   bounds). Requires a connected hypergraph.
//! * [`spectral_radius_polyroot`]: for a hypertree, `ρ` is the largest root of
//!   the matching polynomial. With `z = x^r` the problem reduces to the largest
//!   real root of an integer polynomial of degree `ν`, isolated exactly with a
//!   Sturm chain and then bisected.
//!
//! The tensor is never materialized: `(A x)_i = Σ_{e ∋ i} Π_{j ∈ e, j ≠ i} x_j`.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matching::matching_polynomial;
use crate::sturm::{dyadic_epsilon, largest_real_root, QPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Power,
    Polyroot,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Positive eigenvector with unit r-norm; empty for the polyroot route
    /// unless certified.
    pub eigenvector: Vec<f64>,
    /// Max-norm defect of `A x = ρ x^[r-1]`, when an eigenvector is known.
    pub residual: Option<f64>,
    pub iterations: usize,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions {
    /// stop once the ratio bracket is this narrow
    pub tol: f64,
    pub max_iter: usize,
    /// diagonal shift σ
    pub shift: f64,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions { tol: 1e-10, max_iter: 1_000_000, shift: 1.0 }
    }
}

/// `(A x)_i` for every vertex.
pub fn apply_adjacency(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != h.n() {
        return Err(Error::LengthMismatch { expected: h.n(), got: x.len() });
    }
    let mut y = vec![0.0; h.n()];
    for e in h.edges() {
        // product of all entries, divided out per vertex unless that entry is 0
        let zeros = e.iter().filter(|&&v| x[v] == 0.0).count();
        match zeros {
            0 => {
                let prod: f64 = e.iter().map(|&v| x[v]).product();
                for &v in e {
                    y[v] += prod / x[v];
                }
            }
            1 => {
                let z = *e.iter().find(|&&v| x[v] == 0.0).unwrap();
                y[z] += e.iter().filter(|&&v| v != z).map(|&v| x[v]).product::<f64>();
            }
            _ => {}
        }
    }
    Ok(y)
}

/// `max_i |(A x)_i − λ x_i^(r−1)|`.
pub fn residual(h: &Hypergraph, lambda: f64, x: &[f64]) -> Result<f64> {
    let ax = apply_adjacency(h, x)?;
    if x.iter().all(|&v| v == 0.0) {
        return Err(Error::ZeroVector);
    }
    let p = h.r() as i32 - 1;
    Ok(ax
        .iter()
        .zip(x)
        .map(|(a, xi)| (a - lambda * xi.powi(p)).abs())
        .fold(0.0, f64::max))
}

fn normalize_r(x: &mut [f64], r: usize) {
    let norm: f64 = x.iter().map(|v| v.powi(r as i32)).sum::<f64>().powf(1.0 / r as f64);
    if norm > 0.0 {
        for v in x.iter_mut() {
            *v /= norm;
        }
    }
}

/// Power iteration, reporting each `(lower, upper)` bracket of `ρ` to `observe`.
pub fn spectral_radius_power_with<F>(
    h: &Hypergraph,
    opts: &PowerOptions,
    mut observe: F,
) -> Result<SpectralResult>
where
    F: FnMut(usize, f64, f64),
{
    if !(opts.tol > 0.0) {
        return Err(Error::BadParameters(format!("tol must be positive, got {}", opts.tol)));
    }
    if !h.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = h.n();
    let r = h.r();
    if n == 0 {
        return Ok(SpectralResult {
            rho: 0.0,
            eigenvector: Vec::new(),
            residual: Some(0.0),
            iterations: 0,
            method: Method::Power,
        });
    }
    let p = r as i32 - 1;
    let sigma = opts.shift;
    let mut x = vec![1.0; n];
    normalize_r(&mut x, r);
    let (mut lower, mut upper) = (0.0, f64::INFINITY);
    for iter in 1..=opts.max_iter {
        let mut y = apply_adjacency(h, &x)?;
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for (yi, xi) in y.iter_mut().zip(&x) {
            let xp = xi.powi(p);
            *yi += sigma * xp;
            let ratio = *yi / xp;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        lower = lo - sigma;
        upper = hi - sigma;
        observe(iter, lower, upper);
        if hi - lo <= opts.tol {
            let rho = 0.5 * (lower + upper);
            let residual = residual(h, rho, &x)?;
            return Ok(SpectralResult {
                rho,
                eigenvector: x,
                residual: Some(residual),
                iterations: iter,
                method: Method::Power,
            });
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi.powf(1.0 / p as f64);
        }
        normalize_r(&mut x, r);
    }
    Err(Error::NoConvergence { iterations: opts.max_iter, lower, upper })
}

/// Power iteration for a connected hypergraph.
pub fn spectral_radius_power(h: &Hypergraph, opts: &PowerOptions) -> Result<SpectralResult> {
    spectral_radius_power_with(h, opts, |_, _, _| {})
}

/// Width (in `z = x^r`) to which the largest root is bisected.
const POLYROOT_Z_WIDTH_BITS: u32 = 47; // 2^-47 ≈ 7.1e-15

/// Largest root of the matching polynomial of a hypertree.
pub fn spectral_radius_polyroot(t: &Hypergraph) -> Result<SpectralResult> {
    if !t.is_hypertree() {
        return Err(Error::NotHypertree);
    }
    let phi = matching_polynomial(t);
    let p = phi.reduced_z_form();
    let q = QPoly::from_int(&p);
    let Some(mut root) = largest_real_root(&q) else {
        // no edges: the zero tensor
        return Ok(SpectralResult {
            rho: 0.0,
            eigenvector: Vec::new(),
            residual: None,
            iterations: 0,
            method: Method::Polyroot,
        });
    };
    let steps_before = root.steps;
    root.refine_to(&dyadic_epsilon(POLYROOT_Z_WIDTH_BITS));
    let mut z = root.to_f64();
    if root.exact().is_none() {
        // one Newton polish in floating point, kept only if it stays bracketed
        let dp = q.derivative();
        let slope = dp.eval_f64(z);
        if slope != 0.0 {
            let polished = z - p.eval_f64(z) / slope;
            let (lo, hi) = (root.lo.to_f64().unwrap(), root.hi.to_f64().unwrap());
            if polished > lo && polished <= hi {
                z = polished;
            }
        }
    }
    Ok(SpectralResult {
        rho: z.powf(1.0 / t.r() as f64),
        eigenvector: Vec::new(),
        residual: None,
        iterations: root.steps - steps_before,
        method: Method::Polyroot,
    })
}

/// Attaches the power-method eigenvector to a polyroot result and records the
/// residual of the polyroot `ρ` against it.
pub fn certify(t: &Hypergraph, result: &mut SpectralResult, opts: &PowerOptions) -> Result<()> {
    let power = spectral_radius_power(t, opts)?;
    result.residual = Some(residual(t, result.rho, &power.eigenvector)?);
    result.eigenvector = power.eigenvector;
    Ok(())
}

/// ρ of any hypergraph: the maximum over its components, using the
/// polynomial route on acyclic components and power iteration otherwise.
pub fn spectral_radius(h: &Hypergraph) -> Result<f64> {
    let opts = PowerOptions::default();
    let mut best = 0.0f64;
    for comp in h.components() {
        let mut keep = vec![false; h.n()];
        for &v in &comp {
            keep[v] = true;
        }
        let sub = h.induced(&keep).hypergraph;
        if sub.m() == 0 {
            continue;
        }
        let rho = if sub.is_acyclic() {
            spectral_radius_polyroot(&sub)?.rho
        } else {
            spectral_radius_power(&sub, &opts)?.rho
        };
        best = best.max(rho);
    }
    Ok(best)
}
