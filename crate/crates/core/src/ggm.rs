//! Radical congruences `≡_(J, G_J, N)`, GGM quotients, the canonical
//! maximal `LH`-morphism and Mal'cev membership.

use std::collections::HashMap;

use log::debug;

use crate::congruence::{quotient, Congruence, MonoidMorphism};
use crate::error::{Error, Result};
use crate::greens::{greens, ClassId, GreensData};
use crate::groups::{h_radical, Subgroup};
use crate::lh::is_lh_morphism;
use crate::monoid::{ElementId, FiniteMonoid};
use crate::pvar::Pseudovariety;
use crate::rees::{rees_representation, ReducedRees, ReesElement, ReesRepresentation};

#[derive(Clone, Debug)]
pub struct GgmResult {
    pub jclass: ClassId,
    pub congruence: Congruence,
    pub quotient: FiniteMonoid,
    pub projection: MonoidMorphism,
}

/// Partition of `S` by the signatures `t -> (x t y) η ψ` over context pairs.
pub(crate) fn signature_congruence(
    s: &FiniteMonoid,
    rep: &ReesRepresentation,
    red: &ReducedRees,
    left: &[ElementId],
    right: &[ElementId],
) -> Result<Congruence> {
    let mut ids: HashMap<Vec<ReesElement>, usize> = HashMap::new();
    let mut labels = Vec::with_capacity(s.size());
    for t in s.elements() {
        let mut sig = Vec::with_capacity(left.len() * right.len());
        for &x in left {
            let xt = s.mul(x, t);
            for &y in right {
                sig.push(red.psi(rep.eta(s.mul(xt, y))?));
            }
        }
        let next = ids.len();
        labels.push(*ids.entry(sig).or_insert(next));
    }
    Ok(Congruence::from_labels(&labels))
}

fn j_idempotents(s: &FiniteMonoid, g: &GreensData, j: ClassId) -> Vec<ElementId> {
    g.j_members(j).into_iter().filter(|&x| s.is_idempotent(x)).collect()
}

/// `≡_(J, G_J, N)`; `n` is a normal subgroup of the group of
/// `rees_representation(s, greens(s), j)`. Contexts range over the
/// idempotents of `J`.
pub fn ggm_congruence(s: &FiniteMonoid, j: ClassId, n: &Subgroup) -> Result<Congruence> {
    let g = greens(s);
    let rep = rees_representation(s, &g, j)?;
    ggm_congruence_with(s, &g, &rep, n)
}

pub(crate) fn ggm_congruence_with(
    s: &FiniteMonoid,
    g: &GreensData,
    rep: &ReesRepresentation,
    n: &Subgroup,
) -> Result<Congruence> {
    let red = rep.reduce(n)?;
    let idem = j_idempotents(s, g, rep.jclass);
    let k = signature_congruence(s, rep, &red, &idem, &idem)?;
    k.check_compatible(s)
        .map_err(|e| Error::InvariantViolation(format!("radical relation is not a congruence: {e}")))?;
    Ok(k)
}

/// `GGM(J, G_J, N)` with its projection.
pub fn ggm_quotient(s: &FiniteMonoid, j: ClassId, n: &Subgroup) -> Result<GgmResult> {
    let g = greens(s);
    let rep = rees_representation(s, &g, j)?;
    ggm_quotient_with(s, &g, &rep, n)
}

fn ggm_quotient_with(s: &FiniteMonoid, g: &GreensData, rep: &ReesRepresentation, n: &Subgroup) -> Result<GgmResult> {
    let congruence = ggm_congruence_with(s, g, rep, n)?;
    let (q, projection) = quotient(s, &congruence)?;
    check_faithful(s, g, rep.jclass, &congruence)?;
    Ok(GgmResult {
        jclass: rep.jclass,
        congruence,
        quotient: q,
        projection,
    })
}

/// The image of `F(J)` is the zero of the quotient and the quotient acts
/// faithfully on both sides of the image of `J`.
fn check_faithful(s: &FiniteMonoid, g: &GreensData, j: ClassId, k: &Congruence) -> Result<()> {
    let below: Vec<ElementId> = g
        .below_mask(j)
        .iter()
        .enumerate()
        .filter(|p| *p.1)
        .map(|p| p.0)
        .collect();
    let Some(&f0) = below.first() else {
        debug!("J-class {j} has empty F(J); faithfulness check skipped");
        return Ok(());
    };
    let zero = k.class_of(f0);
    let fail = |what: String| {
        Err(Error::InvariantViolation(format!(
            "GGM quotient at J-class {j}: {what}"
        )))
    };
    if below.iter().any(|&f| k.class_of(f) != zero) {
        return fail("F(J) is not a single class".into());
    }
    for x in s.elements() {
        if k.class_of(s.mul(x, f0)) != zero || k.class_of(s.mul(f0, x)) != zero {
            return fail("image of F(J) is not a zero".into());
        }
    }
    let reps = k.representatives();
    let members = g.j_members(j);
    for (i, &u) in reps.iter().enumerate() {
        for &v in &reps[i + 1..] {
            let left = members.iter().any(|&x| !k.related(s.mul(x, u), s.mul(x, v)));
            let right = members.iter().any(|&x| !k.related(s.mul(u, x), s.mul(v, x)));
            if !left || !right {
                return fail(format!("classes of {u} and {v} act identically"));
            }
        }
    }
    Ok(())
}

/// Per-J-class radical congruences `≡_(J, G_J, Rad_H G_J)`.
pub fn radical_congruences(s: &FiniteMonoid, h: &Pseudovariety) -> Result<Vec<(ClassId, Congruence)>> {
    h.require_fitting()?;
    let g = greens(s);
    g.regular_j_classes()
        .into_iter()
        .map(|j| {
            let rep = rees_representation(s, &g, j)?;
            let rad = h_radical(&rep.group, h)?;
            Ok((j, ggm_congruence_with(s, &g, &rep, &rad)?))
        })
        .collect()
}

/// Kernel of the product of the canonical morphisms to
/// `GGM(J, G_J, Rad_H G_J)` over the regular J-classes.
pub fn lh_canonical_congruence(s: &FiniteMonoid, h: &Pseudovariety) -> Result<Congruence> {
    let k = radical_congruences(s, h)?
        .into_iter()
        .fold(Congruence::universal(s.size()), |acc, (_, c)| acc.meet(&c));
    let (_, phi) = quotient(s, &k)?;
    if !is_lh_morphism(&phi, h)? {
        return Err(Error::InvariantViolation(format!(
            "canonical congruence for {} is not an LH-morphism",
            h.name()
        )));
    }
    Ok(k)
}

/// GGM quotients `GGM(J, G_J, Rad_H G_J)` for every regular J-class.
pub fn canonical_ggm_quotients(s: &FiniteMonoid, h: &Pseudovariety) -> Result<Vec<GgmResult>> {
    h.require_fitting()?;
    let g = greens(s);
    g.regular_j_classes()
        .into_iter()
        .map(|j| {
            let rep = rees_representation(s, &g, j)?;
            let rad = h_radical(&rep.group, h)?;
            ggm_quotient_with(s, &g, &rep, &rad)
        })
        .collect()
}

/// `M ∈ LH ⓜ V`: every `GGM(J, G_J, Rad_H G_J)` lies in `v`.
pub fn malcev_membership(m: &FiniteMonoid, h: &Pseudovariety, v: &Pseudovariety) -> Result<bool> {
    h.require_fitting()?;
    if v.kind() != crate::pvar::PvarKind::Monoid {
        return Err(Error::WrongPredicateKind {
            name: v.name().to_string(),
            expected: "monoid",
        });
    }
    for r in canonical_ggm_quotients(m, h)? {
        if !v.contains_monoid(&r.quotient)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cosets, subgroup_generated, FiniteGroup};
    use crate::pvar;
    use crate::zoo;

    fn main_j(s: &FiniteMonoid, x: ElementId) -> ClassId {
        greens(s).j_class[x]
    }

    #[test]
    fn group_case_gives_cosets() {
        let s = zoo::cyclic_group(4);
        let g = FiniteGroup::from_monoid(s.clone()).unwrap();
        let n = subgroup_generated(&g, &[2]).unwrap();
        let r = ggm_quotient(&s, 0, &n).unwrap();
        assert_eq!(r.congruence.class_ids(), &cosets(&g, &n).unwrap().coset_of[..]);
        assert_eq!(r.quotient.size(), 2);
    }

    #[test]
    fn brandt_is_already_ggm() {
        let b = zoo::b21();
        let j = main_j(&b, 1);
        let k = ggm_congruence(&b, j, &FiniteGroup::trivial().whole()).unwrap();
        assert!(k.is_trivial());
        assert_eq!(
            ggm_quotient(&b, j, &FiniteGroup::trivial().whole())
                .unwrap()
                .quotient
                .size(),
            6
        );
    }

    #[test]
    fn u1_at_zero_is_universal() {
        let u = zoo::u1();
        let k = ggm_congruence(&u, main_j(&u, 1), &FiniteGroup::trivial().whole()).unwrap();
        assert!(k.is_universal());
    }

    #[test]
    fn canonical_congruence_examples() {
        let s3 = zoo::s3();
        let k = lh_canonical_congruence(&s3, &pvar::p_group(3).unwrap()).unwrap();
        assert_eq!(k.num_classes(), 2);
        assert!(lh_canonical_congruence(&zoo::trivial(), &pvar::all_groups())
            .unwrap()
            .is_trivial());
        let k = lh_canonical_congruence(&zoo::b21(), &pvar::all_groups()).unwrap();
        assert!(k.is_trivial());
        assert!(matches!(
            lh_canonical_congruence(&s3, &pvar::semilattice()),
            Err(Error::WrongPredicateKind { .. })
        ));
    }

    #[test]
    fn malcev_examples() {
        assert!(!malcev_membership(&zoo::b21(), &pvar::trivial_group(), &pvar::semilattice()).unwrap());
        assert!(malcev_membership(
            &zoo::cyclic_group(2),
            &pvar::p_group(2).unwrap(),
            &pvar::trivial_monoid()
        )
        .unwrap());
        assert!(malcev_membership(&zoo::u1(), &pvar::trivial_group(), &pvar::semilattice()).unwrap());
        assert!(matches!(
            malcev_membership(&zoo::u1(), &pvar::trivial_group(), &pvar::all_groups()),
            Err(Error::WrongPredicateKind { .. })
        ));
    }
}
