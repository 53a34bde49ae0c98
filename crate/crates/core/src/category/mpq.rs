use super::{cat_principal_congruence, cat_quotient, ArrowId, CatMorphism, FiniteCategory};
use crate::congruence::{CatCongruence, Congruence};
use crate::error::{Error, Result};

/// `k` is nontrivial and every pair it relates generates all of `k`.
pub fn is_minimal_nontrivial(c: &FiniteCategory, k: &CatCongruence) -> Result<bool> {
    if k.is_trivial() {
        return Ok(false);
    }
    for (x, y) in k.pairs() {
        if cat_principal_congruence(c, x, y)? != *k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximal proper quotient: `(φ)` is minimal among nontrivial congruences.
pub fn is_mpq(phi: &CatMorphism) -> Result<bool> {
    phi.require_quotient()?;
    let k = phi.kernel();
    if k.is_trivial() {
        return Err(Error::Injective);
    }
    is_minimal_nontrivial(&phi.source, &k)
}

/// Least (by arrow pair) principal congruence below `bound` that is minimal.
fn least_minimal_principal(c: &FiniteCategory, bound: &CatCongruence) -> Result<CatCongruence> {
    for (x, y) in bound.pairs() {
        let p = cat_principal_congruence(c, x, y)?;
        if is_minimal_nontrivial(c, &p)? {
            return Ok(p);
        }
    }
    Err(Error::InvariantViolation(
        "nontrivial congruence without a minimal principal below it".into(),
    ))
}

/// Factors a quotient morphism into a chain of maximal proper quotients.
/// An injective `φ` yields the empty chain.
pub fn mpq_factorize(phi: &CatMorphism) -> Result<Vec<CatMorphism>> {
    phi.require_quotient()?;
    let mut chain: Vec<CatMorphism> = Vec::new();
    let mut current = phi.source.clone();
    // rest[a] = image in the target of φ of the current arrow a
    let mut rest: Vec<ArrowId> = phi.arrow_map.clone();
    loop {
        let remaining = Congruence::from_labels(&rest);
        if remaining.is_trivial() {
            break;
        }
        let p = least_minimal_principal(&current, &remaining)?;
        let (next, step) = cat_quotient(&current, &p)?;
        let reps = p.representatives();
        rest = reps.iter().map(|&r| rest[r]).collect();
        chain.push(step);
        current = next;
    }
    if let Some(last) = chain.last_mut() {
        last.arrow_map = last.arrow_map.iter().map(|&b| rest[b]).collect();
        last.target = phi.target.clone();
    }
    Ok(chain)
}
