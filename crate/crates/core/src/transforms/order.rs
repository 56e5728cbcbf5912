//! The order on hyperforests of equal order: `T ⪯ T′` when
//! `φ(T, x) ≥ φ(T′, x)` for every `x ≥ ρ(T)`, strict when the difference does
//! not vanish at `x = ρ(T)`.
//!
//! Everything is decided exactly. Writing `φ(T, x) = x^t P(x^r)`, the sign of
//! the difference for `x > 0` is the sign of `D = P − P′` at `z = x^r`. So
//! `T ⪯ T′` iff `D` has positive leading coefficient and no root of odd
//! multiplicity above `z₁ = ρ(T)^r`, an algebraic number held as an isolating
//! interval of the square-free part of `P`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matching::matching_polynomial;
use crate::poly::IntPoly;
use crate::sturm::{dyadic_epsilon, largest_real_root, IsolatedRoot, QPoly, SturmChain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderTag {
    PrecedesStrict,
    PrecedesWeak,
    SucceedsStrict,
    SucceedsWeak,
    EqualPoly,
    Incomparable,
}

impl OrderTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrderTag::PrecedesStrict => "precedes_strict",
            OrderTag::PrecedesWeak => "precedes_weak",
            OrderTag::SucceedsStrict => "succeeds_strict",
            OrderTag::SucceedsWeak => "succeeds_weak",
            OrderTag::EqualPoly => "equal_poly",
            OrderTag::Incomparable => "incomparable",
        }
    }
}

/// Exact evidence for one direction, `T_a ⪯ T_b`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirectionWitness {
    /// `ρ(T_a)` rounded to f64
    pub rho: f64,
    /// `ρ(T_a)^r` lies in `(z_lo, z_hi]` (both exact rationals)
    pub z_lo: String,
    pub z_hi: String,
    pub leading_sign: i8,
    /// distinct odd-multiplicity roots of the difference above `ρ(T_a)^r`
    pub odd_roots_above: usize,
    /// the difference is nonzero at `x = ρ(T_a)`
    pub boundary_nonzero: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderRelation {
    pub tag: OrderTag,
    /// `φ(T1, x) − φ(T2, x)`
    pub difference: String,
    /// evidence for `T1 ⪯ T2`
    pub forward: Option<DirectionWitness>,
    /// evidence for `T2 ⪯ T1`
    pub backward: Option<DirectionWitness>,
}

/// `z = ρ^r`, or exactly zero for an edgeless forest.
enum Boundary {
    Zero,
    Root(IsolatedRoot),
}

fn boundary(h: &Hypergraph, p: &IntPoly) -> Boundary {
    if h.m() == 0 {
        return Boundary::Zero;
    }
    match largest_real_root(&QPoly::from_int(p)) {
        Some(root) => Boundary::Root(root),
        None => Boundary::Zero,
    }
}

/// Product of the square-free factors of odd multiplicity.
fn odd_part(d: &QPoly) -> QPoly {
    d.squarefree_decomposition()
        .into_iter()
        .step_by(2)
        .fold(QPoly::one(), |acc, f| acc.mul(&f))
}

fn direction(h: &Hypergraph, p: &IntPoly, d: &IntPoly, t: usize) -> DirectionWitness {
    let dq = QPoly::from_int(d);
    let odd = odd_part(&dq);
    let odd_chain = SturmChain::new(&odd);
    let leading_sign = if d.leading().is_positive() { 1 } else { -1 };
    let r = h.r() as f64;
    let (rho, lo, hi, odd_roots_above, boundary_nonzero) = match boundary(h, p) {
        Boundary::Zero => {
            let zero = BigRational::zero();
            let above = odd_chain.count_above(&zero);
            let nonzero = t == 0 && !d.coeff(0).is_zero();
            (0.0, zero.clone(), zero, above, nonzero)
        }
        Boundary::Root(mut root) => {
            let on_odd = odd.degree().unwrap_or(0) > 0 && root.is_root_of(&odd);
            root.refine_until_count(&odd_chain, usize::from(on_odd));
            let above = odd_chain.count_above(&root.hi);
            let nonzero = !root.is_root_of(&dq);
            let (lo, hi) = (root.lo.clone(), root.hi.clone());
            root.refine_to(&dyadic_epsilon(60));
            (root.to_f64().powf(1.0 / r), lo, hi, above, nonzero)
        }
    };
    DirectionWitness {
        rho,
        z_lo: lo.to_string(),
        z_hi: hi.to_string(),
        leading_sign,
        odd_roots_above,
        boundary_nonzero,
        holds: leading_sign > 0 && odd_roots_above == 0,
    }
}

/// Decides how `T1` and `T2` (hyperforests of equal order and edge size) are
/// related.
pub fn compare_order(t1: &Hypergraph, t2: &Hypergraph) -> Result<OrderRelation> {
    if t1.r() != t2.r() {
        return Err(Error::UniformityMismatch { left: t1.r(), right: t2.r() });
    }
    if t1.n() != t2.n() {
        return Err(Error::OrderMismatch { left: t1.n(), right: t2.n() });
    }
    if !t1.is_acyclic() || !t2.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let phi1 = matching_polynomial(t1);
    let phi2 = matching_polynomial(t2);
    let difference = (&phi1.to_poly() - &phi2.to_poly()).to_string();
    let (t, p1) = phi1.z_form();
    let (_, p2) = phi2.z_form();
    let d = &p1 - &p2;
    if d.is_zero() {
        return Ok(OrderRelation { tag: OrderTag::EqualPoly, difference, forward: None, backward: None });
    }
    let neg_d = -&d;
    let forward = direction(t1, &p1, &d, t);
    let backward = direction(t2, &p2, &neg_d, t);
    let tag = if forward.holds {
        if forward.boundary_nonzero {
            OrderTag::PrecedesStrict
        } else {
            OrderTag::PrecedesWeak
        }
    } else if backward.holds {
        if backward.boundary_nonzero {
            OrderTag::SucceedsStrict
        } else {
            OrderTag::SucceedsWeak
        }
    } else {
        OrderTag::Incomparable
    };
    Ok(OrderRelation { tag, difference, forward: Some(forward), backward: Some(backward) })
}
