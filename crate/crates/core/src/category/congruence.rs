use std::collections::{BTreeSet, HashSet};

use super::{ArrowId, CatMorphism, FiniteCategory};
use crate::congruence::{CatCongruence, Congruence, UnionFind};
use crate::error::{Error, Result};

/// Default cap on the number of arrows for congruence enumeration.
pub const DEFAULT_CAT_CONGRUENCE_CAP: usize = 12;

/// Checks that classes are coterminal and stable under composition.
pub fn check_cat_congruence(c: &FiniteCategory, k: &CatCongruence) -> Result<()> {
    if k.len() != c.num_arrows() {
        return Err(Error::IncompatiblePartition(format!(
            "partition of {} arrows on a category with {}",
            k.len(),
            c.num_arrows()
        )));
    }
    let reps = k.representatives();
    for x in 0..c.num_arrows() {
        let r = reps[k.class_of(x)];
        if r == x {
            continue;
        }
        if !c.coterminal(x, r) {
            return Err(Error::NotCoterminal(r, x));
        }
        for &v in c.out_arrows(c.dst(x)) {
            if !k.related(c.compose_unchecked(x, v), c.compose_unchecked(r, v)) {
                return Err(Error::IncompatiblePartition(format!("{x} ~ {r} but not after ;{v}")));
            }
        }
        for u in 0..c.num_arrows() {
            if c.dst(u) == c.src(x) && !k.related(c.compose_unchecked(u, x), c.compose_unchecked(u, r)) {
                return Err(Error::IncompatiblePartition(format!("{x} ~ {r} but not after {u};")));
            }
        }
    }
    Ok(())
}

/// Smallest category congruence containing the given coterminal pairs.
pub fn cat_congruence_generated(c: &FiniteCategory, pairs: &[(ArrowId, ArrowId)]) -> Result<CatCongruence> {
    let n = c.num_arrows();
    for &(x, y) in pairs {
        if x >= n || y >= n {
            return Err(Error::IndexOutOfRange {
                index: x.max(y),
                size: n,
            });
        }
        if !c.coterminal(x, y) {
            return Err(Error::NotCoterminal(x, y));
        }
    }
    let incoming: Vec<Vec<ArrowId>> = (0..c.num_objects())
        .map(|o| (0..n).filter(|&u| c.dst(u) == o).collect())
        .collect();
    let mut uf = UnionFind::new(n);
    let mut work = pairs.to_vec();
    while let Some((p, q)) = work.pop() {
        if uf.union(p, q) {
            for &v in c.out_arrows(c.dst(p)) {
                work.push((c.compose_unchecked(p, v), c.compose_unchecked(q, v)));
            }
            for &u in &incoming[c.src(p)] {
                work.push((c.compose_unchecked(u, p), c.compose_unchecked(u, q)));
            }
        }
    }
    Ok(Congruence::from_labels(&uf.labels()))
}

pub fn cat_principal_congruence(c: &FiniteCategory, x: ArrowId, y: ArrowId) -> Result<CatCongruence> {
    if x == y {
        return Err(Error::SamePair(x));
    }
    cat_congruence_generated(c, &[(x, y)])
}

fn cat_join(c: &FiniteCategory, a: &CatCongruence, b: &CatCongruence) -> CatCongruence {
    let pairs: Vec<(ArrowId, ArrowId)> = a.pairs().into_iter().chain(b.pairs()).collect();
    cat_congruence_generated(c, &pairs).expect("pairs of congruences are coterminal")
}

/// Every category congruence, as joins of principal congruences. Sorted by
/// decreasing number of classes, then by class vector.
pub fn all_cat_congruences(c: &FiniteCategory, cap: usize) -> Result<Vec<CatCongruence>> {
    let n = c.num_arrows();
    if n > cap {
        return Err(Error::SizeLimitExceeded {
            what: "category congruence enumeration",
            limit: cap,
        });
    }
    let mut principal = Vec::new();
    let mut seen = HashSet::new();
    for x in 0..n {
        for y in x + 1..n {
            if c.coterminal(x, y) {
                let k = cat_congruence_generated(c, &[(x, y)])?;
                if seen.insert(k.clone()) {
                    principal.push(k);
                }
            }
        }
    }
    let mut found: BTreeSet<CatCongruence> = principal.iter().cloned().collect();
    found.insert(Congruence::trivial(n));
    let mut frontier = principal.clone();
    while let Some(k) = frontier.pop() {
        for p in &principal {
            if p.refines(&k) {
                continue;
            }
            let j = cat_join(c, &k, p);
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<CatCongruence> = found.into_iter().collect();
    out.sort_by(|a, b| b.num_classes().cmp(&a.num_classes()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Quotient category; arrow classes are numbered (and represented) by their
/// least arrow.
pub fn cat_quotient(c: &FiniteCategory, k: &CatCongruence) -> Result<(FiniteCategory, CatMorphism)> {
    check_cat_congruence(c, k)?;
    let reps = k.representatives();
    let arrows = reps.iter().map(|&r| c.arrows()[r]).collect();
    let identities = c.identities().iter().map(|&a| k.class_of(a)).collect();
    let q = FiniteCategory::build(c.num_objects(), arrows, identities, |i, j| {
        c.compose(reps[i], reps[j]).map(|a| k.class_of(a))
    })?;
    let morphism = CatMorphism {
        source: c.clone(),
        target: q.clone(),
        arrow_map: k.class_ids().to_vec(),
    };
    Ok((q, morphism))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::principal_congruence;
    use crate::zoo;

    #[test]
    fn trivial_congruence_gives_isomorphic_copy() {
        let c = zoo::two_object_arrow_category();
        let (q, phi) = cat_quotient(&c, &Congruence::trivial(3)).unwrap();
        assert_eq!(q, c);
        assert_eq!(phi.arrow_map, vec![0, 1, 2]);
    }

    #[test]
    fn group_c2_collapses_to_trivial() {
        let c = FiniteCategory::from_monoid(&zoo::cyclic_group(2)).unwrap();
        let k = cat_principal_congruence(&c, 0, 1).unwrap();
        let (q, _) = cat_quotient(&c, &k).unwrap();
        assert_eq!(q.num_arrows(), 1);
    }

    #[test]
    fn principal_matches_monoid_case_on_one_object() {
        for m in [zoo::b21(), zoo::u1(), zoo::cyclic_group(4)] {
            let c = FiniteCategory::from_monoid(&m).unwrap();
            for x in m.elements() {
                for y in x + 1..m.size() {
                    assert_eq!(
                        cat_principal_congruence(&c, x, y).unwrap(),
                        principal_congruence(&m, x, y).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn principal_errors() {
        let c = zoo::two_object_arrow_category();
        assert!(matches!(
            cat_principal_congruence(&c, 0, 1),
            Err(Error::NotCoterminal(0, 1))
        ));
        assert!(matches!(cat_principal_congruence(&c, 2, 2), Err(Error::SamePair(2))));
    }

    #[test]
    fn non_coterminal_partition_rejected() {
        let c = zoo::two_object_arrow_category();
        let k = Congruence::from_labels(&[0, 0, 1]);
        assert!(matches!(cat_quotient(&c, &k), Err(Error::NotCoterminal(..))));
    }

    #[test]
    fn enumeration_on_c4() {
        let c = FiniteCategory::from_monoid(&zoo::cyclic_group(4)).unwrap();
        assert_eq!(all_cat_congruences(&c, 12).unwrap().len(), 3);
    }
}
