//! Brute-force reference implementations used to cross-check the main
//! algorithms. Everything here is exponential or cubic and meant for desk
//! scale only.

use std::collections::{BTreeSet, HashSet};

use crate::category::{
    all_cat_congruences, cat_quotient, ell_membership, is_lh_morphism_cat, kernel_category, CatMorphism,
    FiniteCategory, DEFAULT_KERNEL_OBJECT_CAP,
};
use crate::congruence::{all_congruences, principal_congruence, quotient, Congruence, MonoidMorphism};
use crate::error::Result;
use crate::ggm::signature_congruence;
use crate::greens::{greens, ClassId};
use crate::groups::{is_p_group, subgroup_generated, FiniteGroup, Subgroup};
use crate::lh::{is_in_lh, is_lh_morphism};
use crate::monoid::{ElementId, FiniteMonoid};
use crate::pvar::Pseudovariety;
use crate::rees::rees_representation;

/// Green's R, L, J partitions by comparing the ideals `xS¹`, `S¹x`, `S¹xS¹`.
pub struct NaiveGreens {
    pub r: Congruence,
    pub l: Congruence,
    pub j: Congruence,
}

pub fn greens_naive(s: &FiniteMonoid) -> NaiveGreens {
    let n = s.size();
    let ideal = |x: ElementId, left: bool, right: bool| -> Vec<bool> {
        let mut set = vec![false; n];
        set[x] = true;
        for u in s.elements() {
            if left {
                set[s.mul(u, x)] = true;
            }
            if right {
                set[s.mul(x, u)] = true;
            }
            if left && right {
                for v in s.elements() {
                    set[s.mul(s.mul(u, x), v)] = true;
                }
            }
        }
        set
    };
    let partition = |left: bool, right: bool| {
        let sets: Vec<Vec<bool>> = s.elements().map(|x| ideal(x, left, right)).collect();
        let labels: Vec<usize> = (0..n)
            .map(|x| sets.iter().position(|t| *t == sets[x]).unwrap())
            .collect();
        Congruence::from_labels(&labels)
    };
    NaiveGreens {
        r: partition(false, true),
        l: partition(true, false),
        j: partition(true, true),
    }
}

/// Brute-force isomorphism test by backtracking.
pub fn isomorphic(a: &FiniteMonoid, b: &FiniteMonoid) -> bool {
    find_isomorphism(a, b).is_some()
}

pub fn find_isomorphism(a: &FiniteMonoid, b: &FiniteMonoid) -> Option<Vec<ElementId>> {
    let n = a.size();
    if n != b.size() || a.identity().is_some() != b.identity().is_some() {
        return None;
    }
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if let (Some(ia), Some(ib)) = (a.identity(), b.identity()) {
        img[ia] = ib;
        used[ib] = true;
    }
    let order: Vec<ElementId> = (0..n).filter(|&x| img[x] == usize::MAX).collect();
    fn consistent(a: &FiniteMonoid, b: &FiniteMonoid, img: &[usize], x: ElementId) -> bool {
        for y in a.elements() {
            if img[y] == usize::MAX {
                continue;
            }
            for (p, q) in [(x, y), (y, x)] {
                let r = img[a.mul(p, q)];
                if r != usize::MAX && r != b.mul(img[p], img[q]) {
                    return false;
                }
            }
        }
        true
    }
    fn go(
        a: &FiniteMonoid,
        b: &FiniteMonoid,
        order: &[ElementId],
        k: usize,
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for t in b.elements() {
            if used[t] || a.is_idempotent(x) != b.is_idempotent(t) {
                continue;
            }
            img[x] = t;
            used[t] = true;
            if consistent(a, b, img, x) && go(a, b, order, k + 1, img, used) {
                return true;
            }
            img[x] = usize::MAX;
            used[t] = false;
        }
        false
    }
    go(a, b, &order, 0, &mut img, &mut used).then_some(img)
}

/// Intersection of all Sylow `p`-subgroups, found by growing `p`-subgroups
/// one `p`-element at a time.
pub fn sylow_intersection(g: &FiniteGroup, p: usize) -> Result<Subgroup> {
    let p_elements: Vec<ElementId> = g
        .elements()
        .filter(|&x| {
            let mut o = g.element_order(x);
            while o.is_multiple_of(p) {
                o /= p;
            }
            o == 1
        })
        .collect();
    let mut seen: HashSet<Vec<ElementId>> = HashSet::new();
    let mut frontier = vec![g.trivial_subgroup()];
    let mut all = Vec::new();
    seen.insert(g.trivial_subgroup().elements().to_vec());
    while let Some(sub) = frontier.pop() {
        for &x in &p_elements {
            if sub.contains(x) {
                continue;
            }
            let mut gens = sub.elements().to_vec();
            gens.push(x);
            let next = subgroup_generated(g, &gens)?;
            let table = g.subgroup_table(&next);
            if is_p_group(&table, p) && seen.insert(next.elements().to_vec()) {
                frontier.push(next);
            }
        }
        all.push(sub);
    }
    let max = all.iter().map(|s| s.order()).max().unwrap_or(1);
    let sylows: Vec<&Subgroup> = all.iter().filter(|s| s.order() == max).collect();
    let mut out = sylows[0].clone();
    for s in &sylows[1..] {
        out = out.intersection(s);
    }
    Ok(out)
}

/// The radical congruence with `x, y` ranging over the whole J-class rather than its idempotents.
pub fn radcong_unrestricted(s: &FiniteMonoid, j: ClassId, n: &Subgroup) -> Result<Congruence> {
    let g = greens(s);
    let rep = rees_representation(s, &g, j)?;
    let red = rep.reduce(n)?;
    let members = g.j_members(j);
    signature_congruence(s, &rep, &red, &members, &members)
}

/// Every congruence whose projection is an `LH`-morphism.
pub fn lh_congruences(s: &FiniteMonoid, h: &Pseudovariety, cap: usize) -> Result<Vec<Congruence>> {
    let mut out = Vec::new();
    for c in all_congruences(s, cap)? {
        let (_, phi) = quotient(s, &c)?;
        if is_lh_morphism(&phi, h)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Some congruence has a quotient in `v` and an `LH` projection.
pub fn exists_lh_quotient_in(s: &FiniteMonoid, h: &Pseudovariety, v: &Pseudovariety, cap: usize) -> Result<bool> {
    for c in all_congruences(s, cap)? {
        let (q, phi) = quotient(s, &c)?;
        if v.contains_monoid(&q)? && is_lh_morphism(&phi, h)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `LH`-morphism test for categories straight from the definition: the
/// preimage of every idempotent arrow lies in `LH`.
pub fn is_lh_morphism_cat_direct(phi: &CatMorphism, h: &Pseudovariety) -> Result<bool> {
    let c = &phi.source;
    for e in 0..phi.target.num_arrows() {
        if !phi.target.is_idempotent(e) {
            continue;
        }
        let pre = phi.preimage(e);
        let rows = pre
            .iter()
            .map(|&x| {
                pre.iter()
                    .map(|&y| pre.iter().position(|&z| z == c.compose(x, y).unwrap()).unwrap())
                    .collect()
            })
            .collect();
        let s = FiniteMonoid::from_table(rows, None)?;
        if !is_in_lh(&s, h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximal proper surmorphism: the kernel is a minimal nontrivial monoid
/// congruence.
pub fn is_mps(phi: &MonoidMorphism) -> Result<bool> {
    let k = phi.kernel();
    if k.is_trivial() {
        return Ok(false);
    }
    for (x, y) in k.pairs() {
        if principal_congruence(&phi.source, x, y)? != k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Some quotient of `c` lies in `ℓV` through an `LH`-morphism.
pub fn exists_lh_quotient_in_ell(c: &FiniteCategory, h: &Pseudovariety, v: &Pseudovariety, cap: usize) -> Result<bool> {
    for k in all_cat_congruences(c, cap)? {
        let (d, phi) = cat_quotient(c, &k)?;
        if ell_membership(&d, v)? && is_lh_morphism_cat(&phi, h)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Checks constructively that `K_φ` is isomorphic to the full subcategory of
/// `K_(φ_cd)` on the objects `(n_L + 1, n_R + 1)`. Returns a description of
/// the first failure.
pub fn kernel_embeds_in_consolidation(phi: &CatMorphism) -> Result<std::result::Result<(), String>> {
    let k = kernel_category(phi, DEFAULT_KERNEL_OBJECT_CAP)?;
    let big_phi = CatMorphism::from_monoid_morphism(&phi.consolidated())?;
    let big = kernel_category(&big_phi, DEFAULT_KERNEL_OBJECT_CAP)?;

    let mut object_map = Vec::with_capacity(k.objects.len());
    for &(n_l, n_r) in &k.objects {
        match big.object_index(n_l + 1, n_r + 1) {
            Some(o) => object_map.push(o),
            None => return Ok(Err(format!("object ({n_l}, {n_r}) missing"))),
        }
    }
    let in_sub: HashSet<usize> = object_map.iter().copied().collect();
    let sub_arrows: BTreeSet<usize> = (0..big.category.num_arrows())
        .filter(|&a| {
            let (s, d) = big.category.arrows()[a];
            in_sub.contains(&s) && in_sub.contains(&d)
        })
        .collect();

    let mut arrow_map = Vec::with_capacity(k.arrows.len());
    for (a, &(n_l, m, n_r)) in k.arrows.iter().enumerate() {
        let Some(b) = big.class_of(n_l + 1, m + 1, n_r + 1) else {
            return Ok(Err(format!("triple of arrow {a} missing")));
        };
        let (s, d) = k.category.arrows()[a];
        if big.category.arrows()[b] != (object_map[s], object_map[d]) {
            return Ok(Err(format!("arrow {a} changes endpoints")));
        }
        arrow_map.push(b);
    }
    let image: BTreeSet<usize> = arrow_map.iter().copied().collect();
    if image.len() != arrow_map.len() {
        return Ok(Err("arrow map not injective".into()));
    }
    if image != sub_arrows {
        return Ok(Err("arrow map misses part of the full subcategory".into()));
    }
    for (o, &id) in k.category.identities().iter().enumerate() {
        if arrow_map[id] != big.category.identity(object_map[o]) {
            return Ok(Err(format!("identity at object {o} not preserved")));
        }
    }
    for x in 0..k.category.num_arrows() {
        for &y in k.category.out_arrows(k.category.dst(x)) {
            let xy = k.category.compose(x, y).unwrap();
            if big.category.compose(arrow_map[x], arrow_map[y]) != Some(arrow_map[xy]) {
                return Ok(Err(format!("composition of {x}, {y} not preserved")));
            }
        }
    }
    Ok(Ok(()))
}
