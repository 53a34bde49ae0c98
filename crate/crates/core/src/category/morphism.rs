use super::{ArrowId, FiniteCategory, ObjectId};
use crate::congruence::{CatCongruence, Congruence, MonoidMorphism};
use crate::error::{Error, Result};
use crate::lh::is_lh_morphism;
use crate::pvar::Pseudovariety;

/// Identity-on-objects functor given by its arrow map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatMorphism {
    pub source: FiniteCategory,
    pub target: FiniteCategory,
    pub arrow_map: Vec<ArrowId>,
}

impl CatMorphism {
    pub fn new(source: FiniteCategory, target: FiniteCategory, arrow_map: Vec<ArrowId>) -> Result<Self> {
        if source.num_objects() != target.num_objects() {
            return Err(Error::NotAMorphism("object sets differ".into()));
        }
        if arrow_map.len() != source.num_arrows() {
            return Err(Error::NotAMorphism("arrow map has the wrong length".into()));
        }
        for (a, &b) in arrow_map.iter().enumerate() {
            if b >= target.num_arrows() {
                return Err(Error::IndexOutOfRange {
                    index: b,
                    size: target.num_arrows(),
                });
            }
            if source.arrows()[a] != target.arrows()[b] {
                return Err(Error::NotAMorphism(format!("arrow {a} changes endpoints")));
            }
        }
        for c in 0..source.num_objects() {
            if arrow_map[source.identity(c)] != target.identity(c) {
                return Err(Error::NotAMorphism(format!("identity at {c} not preserved")));
            }
        }
        for i in 0..source.num_arrows() {
            for &j in source.out_arrows(source.dst(i)) {
                let lhs = arrow_map[source.compose_unchecked(i, j)];
                if Some(lhs) != target.compose(arrow_map[i], arrow_map[j]) {
                    return Err(Error::NotAMorphism(format!("composition fails on ({i}, {j})")));
                }
            }
        }
        Ok(CatMorphism {
            source,
            target,
            arrow_map,
        })
    }

    pub fn identity(c: &FiniteCategory) -> Self {
        CatMorphism {
            source: c.clone(),
            target: c.clone(),
            arrow_map: (0..c.num_arrows()).collect(),
        }
    }

    /// A monoid morphism viewed as a morphism of one-object categories.
    pub fn from_monoid_morphism(phi: &MonoidMorphism) -> Result<Self> {
        CatMorphism::new(
            FiniteCategory::from_monoid(&phi.source)?,
            FiniteCategory::from_monoid(&phi.target)?,
            phi.map.clone(),
        )
    }

    pub fn is_quotient(&self) -> bool {
        let mut hit = vec![false; self.target.num_arrows()];
        for &b in &self.arrow_map {
            hit[b] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub(crate) fn require_quotient(&self) -> Result<()> {
        if self.is_quotient() {
            Ok(())
        } else {
            Err(Error::NotQuotient("not surjective on arrows".into()))
        }
    }

    /// The associated congruence `(φ)`.
    pub fn kernel(&self) -> CatCongruence {
        Congruence::from_labels(&self.arrow_map)
    }

    pub fn preimage(&self, b: ArrowId) -> Vec<ArrowId> {
        (0..self.source.num_arrows())
            .filter(|&a| self.arrow_map[a] == b)
            .collect()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &CatMorphism) -> Result<CatMorphism> {
        if self.target != next.source {
            return Err(Error::NotAMorphism("composition: codomain/domain mismatch".into()));
        }
        Ok(CatMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            arrow_map: self.arrow_map.iter().map(|&b| next.arrow_map[b]).collect(),
        })
    }

    /// Restriction `C_c -> D_c` to local monoids.
    pub fn local_restriction(&self, c: ObjectId) -> Result<MonoidMorphism> {
        let (src, src_arrows) = self.source.local_monoid_at(c)?;
        let (dst, dst_arrows) = self.target.local_monoid_at(c)?;
        let mut index = vec![usize::MAX; self.target.num_arrows()];
        for (i, &b) in dst_arrows.iter().enumerate() {
            index[b] = i;
        }
        let map = src_arrows.iter().map(|&a| index[self.arrow_map[a]]).collect();
        Ok(MonoidMorphism {
            source: src,
            target: dst,
            map,
        })
    }

    /// `φ_cd: C^cd -> D^cd`, extending by `0 -> 0` and `1 -> 1`.
    pub fn consolidated(&self) -> MonoidMorphism {
        let (src, _) = self.source.consolidation();
        let (dst, _) = self.target.consolidation();
        let mut map = Vec::with_capacity(src.size());
        map.push(0);
        map.extend(self.arrow_map.iter().map(|&b| b + 1));
        map.push(dst.size() - 1);
        MonoidMorphism {
            source: src,
            target: dst,
            map,
        }
    }
}

/// `LH`-morphism test through the local restrictions: `φ` is an
/// `LH`-morphism iff every `φ|C_c` is one.
pub fn is_lh_morphism_cat(phi: &CatMorphism, h: &Pseudovariety) -> Result<bool> {
    h.require_group_kind()?;
    phi.require_quotient()?;
    for c in 0..phi.source.num_objects() {
        if !is_lh_morphism(&phi.local_restriction(c)?, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::cat_quotient;
    use crate::pvar;
    use crate::zoo;

    #[test]
    fn identity_is_lh() {
        for c in [
            zoo::trivial_category(),
            zoo::two_object_arrow_category(),
            zoo::groupoid_c2(),
        ] {
            let id = CatMorphism::identity(&c);
            assert!(is_lh_morphism_cat(&id, &pvar::trivial_group()).unwrap());
        }
    }

    #[test]
    fn one_object_defers_to_monoid_case() {
        let b = zoo::b21();
        let c = FiniteCategory::from_monoid(&b).unwrap();
        let k = crate::congruence::principal_congruence(&b, 3, 5).unwrap();
        let (_, phi) = cat_quotient(&c, &k).unwrap();
        let (_, psi) = crate::congruence::quotient(&b, &k).unwrap();
        for h in [pvar::trivial_group(), pvar::all_groups()] {
            assert_eq!(is_lh_morphism_cat(&phi, &h).unwrap(), is_lh_morphism(&psi, &h).unwrap());
        }
    }

    #[test]
    fn consolidation_agrees_on_two_object_example() {
        let c = zoo::c2_with_trivial();
        let k = crate::category::cat_principal_congruence(&c, 0, 1).unwrap();
        let (_, phi) = cat_quotient(&c, &k).unwrap();
        for h in [
            pvar::trivial_group(),
            pvar::p_group(2).unwrap(),
            pvar::p_group(3).unwrap(),
        ] {
            assert_eq!(
                is_lh_morphism_cat(&phi, &h).unwrap(),
                is_lh_morphism(&phi.consolidated(), &h).unwrap(),
                "{}",
                h.name()
            );
        }
        assert!(is_lh_morphism_cat(&phi, &pvar::p_group(2).unwrap()).unwrap());
        assert!(!is_lh_morphism_cat(&phi, &pvar::trivial_group()).unwrap());
    }

    #[test]
    fn not_quotient_rejected() {
        let c = zoo::two_object_arrow_category();
        let phi = CatMorphism {
            source: c.clone(),
            target: c.clone(),
            arrow_map: vec![0, 1, 2],
        };
        assert!(phi.is_quotient());
        let d = zoo::parallel_arrows();
        let inc = CatMorphism::new(c, d, vec![0, 1, 2]).unwrap();
        assert!(matches!(
            is_lh_morphism_cat(&inc, &pvar::trivial_group()),
            Err(Error::NotQuotient(_))
        ));
    }

    #[test]
    fn bad_morphisms_rejected() {
        let c = zoo::two_object_arrow_category();
        assert!(CatMorphism::new(c.clone(), c.clone(), vec![1, 0, 2]).is_err());
    }
}
