use std::collections::HashMap;

use super::{cat_quotient, is_lh_morphism_cat, CatMorphism, FiniteCategory};
use crate::congruence::{CatCongruence, Congruence};
use crate::error::{Error, Result};
use crate::ggm::{lh_canonical_congruence, malcev_membership};
use crate::groups::FiniteGroup;
use crate::pvar::{Pseudovariety, PvarKind};

/// `C ∈ ℓV`: every local monoid passes `pv`. For a group-kind predicate each
/// local monoid must also be a group.
pub fn ell_membership(c: &FiniteCategory, pv: &Pseudovariety) -> Result<bool> {
    for o in 0..c.num_objects() {
        let (local, _) = c.local_monoid_at(o)?;
        let ok = match pv.kind() {
            PvarKind::Monoid => pv.contains_monoid(&local)?,
            PvarKind::Group => match FiniteGroup::from_monoid(local) {
                Ok(g) => pv.contains_group(&g)?,
                Err(_) => false,
            },
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C ∈ ℓ(LH ⓜ V)`.
pub fn ell_malcev_membership(c: &FiniteCategory, h: &Pseudovariety, v: &Pseudovariety) -> Result<bool> {
    for o in 0..c.num_objects() {
        let (local, _) = c.local_monoid_at(o)?;
        if !malcev_membership(&local, h, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct Supertech {
    pub congruence: CatCongruence,
    pub quotient: FiniteCategory,
    pub projection: CatMorphism,
}

/// Quotient of `C` by the congruence induced from the canonical
/// `LH`-congruence of `C^cd`, restricted to coterminal arrows. Checks that its
/// restriction to each local monoid is the local canonical congruence.
pub fn supertech_construct(c: &FiniteCategory, h: &Pseudovariety) -> Result<Supertech> {
    h.require_fitting()?;
    let (cd, embed) = c.consolidation();
    let big = lh_canonical_congruence(&cd, h)?;
    let mut ids = HashMap::new();
    let labels: Vec<usize> = (0..c.num_arrows())
        .map(|a| {
            let key = (big.class_of(embed[a]), c.arrows()[a]);
            let next = ids.len();
            *ids.entry(key).or_insert(next)
        })
        .collect();
    let congruence = Congruence::from_labels(&labels);
    let (quotient, projection) = cat_quotient(c, &congruence)?;
    for o in 0..c.num_objects() {
        let (local, arrows) = c.local_monoid_at(o)?;
        let restricted = Congruence::from_labels(&arrows.iter().map(|&a| congruence.class_of(a)).collect::<Vec<_>>());
        if restricted != lh_canonical_congruence(&local, h)? {
            return Err(Error::InvariantViolation(format!(
                "restriction to object {o} differs from the local canonical congruence"
            )));
        }
    }
    Ok(Supertech {
        congruence,
        quotient,
        projection,
    })
}

/// Runs the construction and, when `C ∈ ℓ(LH ⓜ V)`, checks that the result
/// lies in `ℓV` through an `LH`-morphism. Returns whether the hypothesis held.
pub fn supertech_check(c: &FiniteCategory, h: &Pseudovariety, v: &Pseudovariety) -> Result<(Supertech, bool)> {
    let st = supertech_construct(c, h)?;
    let member = ell_malcev_membership(c, h, v)?;
    if member {
        if !ell_membership(&st.quotient, v)? {
            return Err(Error::InvariantViolation("supertech quotient not in ℓV".into()));
        }
        if !is_lh_morphism_cat(&st.projection, h)? {
            return Err(Error::InvariantViolation(
                "supertech projection not an LH-morphism".into(),
            ));
        }
    }
    Ok((st, member))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pvar;
    use crate::zoo;

    #[test]
    fn trivial_category_is_fixed() {
        let c = zoo::trivial_category();
        let st = supertech_construct(&c, &pvar::trivial_group()).unwrap();
        assert_eq!(st.quotient, c);
        assert_eq!(st.projection, CatMorphism::identity(&c));
    }

    #[test]
    fn one_object_matches_monoid_case() {
        for m in [zoo::b21(), zoo::s3(), zoo::cyclic_group(4), zoo::u1()] {
            let c = FiniteCategory::from_monoid(&m).unwrap();
            for h in [pvar::trivial_group(), pvar::p_group(2).unwrap(), pvar::all_groups()] {
                let st = supertech_construct(&c, &h).unwrap();
                assert_eq!(st.congruence, lh_canonical_congruence(&m, &h).unwrap());
            }
        }
    }

    #[test]
    fn c2_with_trivial_under_g2() {
        let c = zoo::c2_with_trivial();
        let h = pvar::p_group(2).unwrap();
        let (st, member) = supertech_check(&c, &h, &pvar::trivial_monoid()).unwrap();
        assert!(member);
        for o in 0..2 {
            assert_eq!(st.quotient.local_monoid_at(o).unwrap().0.size(), 1);
        }
        assert!(is_lh_morphism_cat(&st.projection, &h).unwrap());
    }

    #[test]
    fn ell_membership_examples() {
        let t = zoo::trivial_category();
        assert!(ell_membership(&t, &pvar::semilattice()).unwrap());
        assert!(ell_membership(&t, &pvar::trivial_group()).unwrap());
        let b = FiniteCategory::from_monoid(&zoo::b21()).unwrap();
        assert!(!ell_membership(&b, &pvar::semilattice()).unwrap());
        assert!(!ell_malcev_membership(&b, &pvar::trivial_group(), &pvar::semilattice()).unwrap());
        let g = zoo::groupoid_c2();
        assert!(ell_membership(&g, &pvar::p_group(2).unwrap()).unwrap());
        assert!(!ell_membership(&g, &pvar::trivial_group()).unwrap());
    }

    #[test]
    fn requires_fitting() {
        let c = zoo::trivial_category();
        assert!(matches!(
            supertech_construct(&c, &pvar::semilattice()),
            Err(Error::WrongPredicateKind { .. })
        ));
        let odd = Pseudovariety::group("odd", false, false, |g| g.order() % 2 == 1);
        assert!(matches!(supertech_construct(&c, &odd), Err(Error::NotFitting(_))));
    }
}
