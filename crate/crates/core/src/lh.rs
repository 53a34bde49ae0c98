//! Local monoids, maximal subgroups, and the `LH` membership tests.

use crate::congruence::MonoidMorphism;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::monoid::{ElementId, FiniteMonoid};
use crate::pvar::Pseudovariety;

/// The local monoid `eSe` with identity `e`, plus its embedding into `S`.
pub fn local_monoid(s: &FiniteMonoid, e: ElementId) -> Result<(FiniteMonoid, Vec<ElementId>)> {
    check_idempotent(s, e)?;
    let mut carrier: Vec<ElementId> = s.elements().map(|x| s.mul(s.mul(e, x), e)).collect();
    carrier.sort_unstable();
    carrier.dedup();
    let m = s.restrict(&carrier, Some(e))?;
    Ok((m, carrier))
}

/// The maximal subgroup `H_e`, computed as the group of units of `eSe`.
pub fn maximal_subgroup(s: &FiniteMonoid, e: ElementId) -> Result<(FiniteGroup, Vec<ElementId>)> {
    let (local, carrier) = local_monoid(s, e)?;
    let unit = local.identity().expect("local monoids have an identity");
    let units: Vec<usize> = local
        .elements()
        .filter(|&x| {
            local
                .elements()
                .any(|y| local.mul(x, y) == unit && local.mul(y, x) == unit)
        })
        .collect();
    let group = FiniteGroup::from_monoid(local.restrict(&units, Some(unit))?)?;
    Ok((group, units.into_iter().map(|i| carrier[i]).collect()))
}

fn check_idempotent(s: &FiniteMonoid, e: ElementId) -> Result<()> {
    if e >= s.size() {
        return Err(Error::IndexOutOfRange {
            index: e,
            size: s.size(),
        });
    }
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    Ok(())
}

/// `S ∈ LH`: every local monoid `eSe` is a group belonging to `h`.
/// Accepts semigroups (tables without identity).
pub fn is_in_lh(s: &FiniteMonoid, h: &Pseudovariety) -> Result<bool> {
    h.require_group_kind()?;
    for e in s.idempotents() {
        let (local, _) = local_monoid(s, e)?;
        match FiniteGroup::from_monoid(local) {
            Ok(g) => {
                if !h.contains_group(&g)? {
                    return Ok(false);
                }
            }
            Err(_) => return Ok(false),
        }
    }
    Ok(true)
}

/// The preimage of an idempotent as a semigroup (identity absent), with its
/// embedding into the source.
pub fn idempotent_preimage(phi: &MonoidMorphism, e: ElementId) -> Result<(FiniteMonoid, Vec<ElementId>)> {
    let elements = phi.preimage(e);
    let s = phi.source.restrict(&elements, None)?;
    Ok((s, elements))
}

/// A surjective morphism is an `LH`-morphism when the preimage of every
/// idempotent of the target lies in `LH`.
pub fn is_lh_morphism(phi: &MonoidMorphism, h: &Pseudovariety) -> Result<bool> {
    h.require_group_kind()?;
    if !phi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    for e in phi.target.idempotents() {
        let (pre, _) = idempotent_preimage(phi, e)?;
        if !is_in_lh(&pre, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}
