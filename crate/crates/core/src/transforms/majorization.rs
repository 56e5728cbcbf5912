use crate::constructions::CompositionVector;
use crate::error::{Error, Result};

/// `π ⊲ π′`: every prefix sum of `π` is at most the matching prefix sum of
/// `π′`, and the totals agree.
pub fn is_majorized(pi: &[usize], pi_prime: &[usize]) -> Result<bool> {
    if pi.len() != pi_prime.len() {
        return Err(Error::LengthMismatch { expected: pi_prime.len(), got: pi.len() });
    }
    let (mut a, mut b) = (0usize, 0usize);
    for (x, y) in pi.iter().zip(pi_prime) {
        a += x;
        b += y;
        if a > b {
            return Ok(false);
        }
    }
    Ok(a == b)
}

/// One step from `π′` towards `π`: with `p` the first index where `π` exceeds
/// `π′` and `q < p` the last index before it where `π` falls short, move one
/// unit of `π′` from position `q` to position `p`.
pub fn majorization_step(pi: &CompositionVector, pi_prime: &CompositionVector) -> Result<CompositionVector> {
    let (a, b) = (pi.entries(), pi_prime.entries());
    if !is_majorized(a, b)? {
        return Err(Error::NotMajorized(format!("{pi} is not majorized by {pi_prime}")));
    }
    if a == b {
        return Err(Error::Precondition("the vectors are equal".into()));
    }
    let p = (0..a.len()).find(|&i| a[i] > b[i]).expect("equal sums force an excess");
    let q = (0..p).rev().find(|&i| a[i] < b[i]).expect("prefix dominance forces a deficit before p");
    let mut next = b.to_vec();
    next[q] -= 1;
    next[p] += 1;
    Ok(pi_prime.with_entries(next))
}

/// The chain `π′ = π_0, π_1, …, π` of successive steps.
pub fn majorization_chain(pi: &CompositionVector, pi_prime: &CompositionVector) -> Result<Vec<CompositionVector>> {
    if !is_majorized(pi.entries(), pi_prime.entries())? {
        return Err(Error::NotMajorized(format!("{pi} is not majorized by {pi_prime}")));
    }
    let mut chain = vec![pi_prime.clone()];
    while chain.last().expect("nonempty").entries() != pi.entries() {
        let next = majorization_step(pi, chain.last().expect("nonempty"))?;
        chain.push(next);
    }
    Ok(chain)
}
