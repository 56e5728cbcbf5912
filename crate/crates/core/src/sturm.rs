//! Exact real-root isolation over the rationals.
//!
//! Polynomials are converted from [`IntPoly`] to rational coefficients; Sturm
//! chains count distinct real roots in half-open intervals `(a, b]`, and all
//! bisection points are dyadic rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::IntPoly;

/// Rational polynomial, `coeffs[i]` for `x^i`, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_int(p: &IntPoly) -> Self {
        Self::from_coeffs(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![BigRational::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        Self::from_coeffs(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly { coeffs: Vec::new() };
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly { coeffs: Vec::new() }, self.clone());
        }
        let lead = d.leading();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free decomposition (Yun): returns `[f1, f2, …]`, monic, pairwise
    /// coprime and square-free, with `self = c · f1 · f2² · f3³ · …`.
    pub fn squarefree_decomposition(&self) -> Vec<QPoly> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = sub(&c, &b.derivative());
        loop {
            let a = b.gcd(&d);
            out.push(a.clone());
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = sub(&c, &b.derivative());
        }
        out
    }

    /// Product of the distinct irreducible factors: same real roots, all simple.
    pub fn squarefree_part(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn root_bound(&self) -> BigRational {
        let lead = self.leading().abs();
        let max = self
            .coeffs
            .iter()
            .take(self.coeffs.len().saturating_sub(1))
            .map(|c| c.abs() / &lead)
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        // round up to an integer to keep bisection points dyadic
        (max + BigRational::one()).ceil() + BigRational::one()
    }
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let len = a.coeffs.len().max(b.coeffs.len());
    QPoly::from_coeffs(
        (0..len)
            .map(|i| {
                a.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
                    - b.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
            })
            .collect(),
    )
}

pub fn sign_of(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Sturm chain of a nonzero polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<QPoly>,
}

impl SturmChain {
    pub fn new(p: &QPoly) -> Self {
        let mut chain = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return SturmChain { chain };
        }
        chain.push(p.derivative());
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        SturmChain { chain }
    }

    pub fn poly(&self) -> &QPoly {
        &self.chain[0]
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        count_variations(self.chain.iter().map(|p| sign_of(&p.eval(x))))
    }

    fn variations_at_pos_inf(&self) -> usize {
        count_variations(self.chain.iter().map(|p| sign_of(&p.leading())))
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots in `(a, ∞)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at_pos_inf())
    }
}

fn count_variations<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// A real algebraic number: the unique root of a square-free polynomial in
/// the half-open interval `(lo, hi]`.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    chain: SturmChain,
    pub lo: BigRational,
    pub hi: BigRational,
    /// bisection steps performed so far
    pub steps: usize,
}

impl IsolatedRoot {
    pub fn poly(&self) -> &QPoly {
        self.chain.poly()
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Exact value when the root is the right endpoint.
    pub fn exact(&self) -> Option<BigRational> {
        self.poly().eval(&self.hi).is_zero().then(|| self.hi.clone())
    }

    /// One bisection step keeping exactly one root in `(lo, hi]`.
    pub fn bisect(&mut self) {
        self.steps += 1;
        let mid = midpoint(&self.lo, &self.hi);
        if self.chain.count(&self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Bisects until the interval is no wider than `width`.
    pub fn refine_to(&mut self, width: &BigRational) {
        while &self.width() > width {
            if self.exact().is_some() {
                // collapse onto the rational root
                self.lo = &self.hi - width / BigRational::from_integer(BigInt::from(2));
                break;
            }
            self.bisect();
        }
    }

    /// Bisects until `other` (any nonzero polynomial) has exactly `expected`
    /// distinct roots in `(lo, hi]`.
    pub fn refine_until_count(&mut self, other: &SturmChain, expected: usize) {
        while other.count(&self.lo, &self.hi) != expected {
            self.bisect();
        }
    }

    /// Whether this number is a root of `p`.
    pub fn is_root_of(&self, p: &QPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        let g = self.poly().gcd(p);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        SturmChain::new(&g).count(&self.lo, &self.hi) == 1
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(x) = self.exact() {
            return x.to_f64().unwrap_or(f64::NAN);
        }
        midpoint(&self.lo, &self.hi).to_f64().unwrap_or(f64::NAN)
    }
}

/// Isolates the largest real root of `p`, or `None` if it has no real root.
pub fn largest_real_root(p: &QPoly) -> Option<IsolatedRoot> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    let sqf = p.squarefree_part();
    let chain = SturmChain::new(&sqf);
    let bound = sqf.root_bound();
    let mut root = IsolatedRoot { chain, lo: -bound.clone(), hi: bound, steps: 0 };
    if root.chain.count(&root.lo, &root.hi) == 0 {
        return None;
    }
    while root.chain.count(&root.lo, &root.hi) > 1 {
        let mid = midpoint(&root.lo, &root.hi);
        if root.chain.count(&mid, &root.hi) >= 1 {
            root.lo = mid;
        } else {
            root.hi = mid;
        }
    }
    Some(root)
}

/// Isolating intervals for every distinct real root of `p` in `(a, ∞)`,
/// ascending.
pub fn isolate_roots_above(p: &QPoly, a: &BigRational) -> Vec<IsolatedRoot> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sqf = p.squarefree_part();
    let chain = SturmChain::new(&sqf);
    let bound = sqf.root_bound();
    let hi = if &bound > a { bound } else { a + BigRational::one() };
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), hi)];
    while let Some((l, h)) = stack.pop() {
        match chain.count(&l, &h) {
            0 => {}
            1 => out.push(IsolatedRoot { chain: chain.clone(), lo: l, hi: h, steps: 0 }),
            _ => {
                let mid = midpoint(&l, &h);
                stack.push((l, mid.clone()));
                stack.push((mid, h));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// `2^-bits` as a rational.
pub fn dyadic_epsilon(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// Exact rational value of a finite float.
pub fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}
