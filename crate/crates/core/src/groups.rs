//! Finite groups as tables: subgroups, normal subgroups, series and radicals.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monoid::{ElementId, FiniteMonoid};
use crate::pvar::Pseudovariety;

/// Default cap on the order of a group whose normal subgroups are enumerated.
pub const DEFAULT_NORMAL_SUBGROUP_CAP: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    monoid: FiniteMonoid,
    inverse: Vec<ElementId>,
}

impl FiniteGroup {
    /// Checks that every element is invertible and records the inverses.
    pub fn from_monoid(monoid: FiniteMonoid) -> Result<Self> {
        let e = monoid
            .identity()
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(monoid.size());
        for x in monoid.elements() {
            let inv = monoid
                .elements()
                .find(|&y| monoid.mul(x, y) == e && monoid.mul(y, x) == e)
                .ok_or_else(|| Error::NotAGroup(format!("{x} has no inverse")))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup { monoid, inverse })
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_monoid(FiniteMonoid::from_flat_unchecked(1, Some(0), vec![0])).expect("trivial group")
    }

    pub fn order(&self) -> usize {
        self.monoid.size()
    }

    pub fn identity(&self) -> ElementId {
        self.monoid.identity().expect("groups have an identity")
    }

    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.monoid.mul(x, y)
    }

    #[inline]
    pub fn inv(&self, x: ElementId) -> ElementId {
        self.inverse[x]
    }

    pub fn as_monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn into_monoid(self) -> FiniteMonoid {
        self.monoid
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        self.monoid.elements()
    }

    /// `x^-1 y^-1 x y`.
    pub fn commutator(&self, x: ElementId, y: ElementId) -> ElementId {
        let xy = self.mul(x, y);
        self.mul(self.mul(self.inv(x), self.inv(y)), xy)
    }

    pub fn conjugate(&self, x: ElementId, by: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(by), x), by)
    }

    /// Induced group on the members of a subgroup.
    pub fn subgroup_table(&self, sub: &Subgroup) -> FiniteGroup {
        let monoid = self
            .monoid
            .restrict(sub.elements(), Some(self.identity()))
            .expect("subgroups are closed");
        FiniteGroup::from_monoid(monoid).expect("subgroups are groups")
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.order(), self.elements().collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(self.order(), vec![self.identity()])
    }

    pub fn element_order(&self, x: ElementId) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity() {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }
}

/// A subgroup recorded by its members inside a fixed parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<ElementId>,
    mask: Vec<bool>,
}

impl Subgroup {
    fn from_sorted(parent_order: usize, elements: Vec<ElementId>) -> Self {
        let mut mask = vec![false; parent_order];
        for &x in &elements {
            mask[x] = true;
        }
        Subgroup { elements, mask }
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements = self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::from_sorted(self.mask.len(), elements)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// Closure of `gens ∪ {1}` under products.
pub fn subgroup_generated(g: &FiniteGroup, gens: &[ElementId]) -> Result<Subgroup> {
    if let Some(&bad) = gens.iter().find(|&&x| x >= g.order()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            size: g.order(),
        });
    }
    Ok(closure(g, gens))
}

fn closure(g: &FiniteGroup, gens: &[ElementId]) -> Subgroup {
    let mut mask = vec![false; g.order()];
    let mut members = vec![g.identity()];
    mask[g.identity()] = true;
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for &s in gens {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                members.push(y);
            }
        }
        i += 1;
    }
    members.sort_unstable();
    Subgroup {
        elements: members,
        mask,
    }
}

pub fn is_normal(g: &FiniteGroup, n: &Subgroup) -> bool {
    n.elements()
        .iter()
        .all(|&x| g.elements().all(|y| n.contains(g.conjugate(x, y))))
}

/// Smallest normal subgroup containing `x`.
pub fn normal_closure(g: &FiniteGroup, x: ElementId) -> Subgroup {
    let conjugates: BTreeSet<ElementId> = g.elements().map(|y| g.conjugate(x, y)).collect();
    closure(g, &conjugates.into_iter().collect::<Vec<_>>())
}

/// Product of two normal subgroups.
pub fn normal_join(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut gens: Vec<ElementId> = a.elements().to_vec();
    gens.extend_from_slice(b.elements());
    closure(g, &gens)
}

/// Every normal subgroup, as the join-closure of element normal closures.
/// Sorted by order, then by members.
pub fn all_normal_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    if g.order() > cap {
        return Err(Error::SizeLimitExceeded {
            what: "normal subgroup enumeration",
            limit: cap,
        });
    }
    let closures: BTreeSet<Subgroup> = g.elements().map(|x| normal_closure(g, x)).collect();
    let closures: Vec<Subgroup> = closures.into_iter().collect();
    let mut found: BTreeSet<Subgroup> = closures.iter().cloned().collect();
    found.insert(g.trivial_subgroup());
    let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
    while let Some(n) = frontier.pop() {
        for c in &closures {
            if c.is_subset_of(&n) {
                continue;
            }
            let j = normal_join(g, &n, c);
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    Ok(out)
}

/// Largest normal subgroup of `g` in the Fitting pseudovariety `h`.
pub fn h_radical(g: &FiniteGroup, h: &Pseudovariety) -> Result<Subgroup> {
    if !h.is_fitting() {
        return Err(Error::NotFitting(h.name().to_string()));
    }
    h_radical_with_cap(g, h, DEFAULT_NORMAL_SUBGROUP_CAP)
}

pub fn h_radical_with_cap(g: &FiniteGroup, h: &Pseudovariety, cap: usize) -> Result<Subgroup> {
    if !h.is_fitting() {
        return Err(Error::NotFitting(h.name().to_string()));
    }
    let normals = all_normal_subgroups(g, cap)?;
    let mut members = Vec::new();
    for n in &normals {
        if h.contains_group(&g.subgroup_table(n))? {
            members.push(n);
        }
    }
    let radical = members
        .iter()
        .fold(g.trivial_subgroup(), |acc, n| normal_join(g, &acc, n));
    if !h.contains_group(&g.subgroup_table(&radical))? {
        return Err(Error::InvariantViolation(format!(
            "join of normal {}-subgroups left {} (is it really Fitting?)",
            h.name(),
            h.name()
        )));
    }
    if !is_normal(g, &radical) || !members.iter().all(|n| n.is_subset_of(&radical)) {
        return Err(Error::InvariantViolation(
            "radical is not the largest normal member".into(),
        ));
    }
    Ok(radical)
}

/// Subgroup generated by commutators `[a, b]` with `a ∈ x`, `b ∈ y`.
pub fn commutator_subgroup(g: &FiniteGroup, x: &Subgroup, y: &Subgroup) -> Subgroup {
    let gens: BTreeSet<ElementId> = x
        .elements()
        .iter()
        .flat_map(|&a| y.elements().iter().map(move |&b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    closure(g, &gens.into_iter().collect::<Vec<_>>())
}

/// `G ⊵ G' ⊵ G'' ⊵ ...` until it stabilizes (last entry repeated once).
pub fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![g.whole()];
    loop {
        let last = series.last().expect("non-empty");
        let next = commutator_subgroup(g, last, last);
        let done = next == *last;
        series.push(next);
        if done {
            return series;
        }
    }
}

/// `G = γ1 ⊵ γ2 = [γ1, G] ⊵ ...` until it stabilizes.
pub fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let whole = g.whole();
    let mut series = vec![whole.clone()];
    loop {
        let last = series.last().expect("non-empty");
        let next = commutator_subgroup(g, last, &whole);
        let done = next == *last;
        series.push(next);
        if done {
            return series;
        }
    }
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    derived_series(g).last().is_some_and(Subgroup::is_trivial)
}

pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    lower_central_series(g).last().is_some_and(Subgroup::is_trivial)
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `|G| = p^k`, `k >= 0`.
pub fn is_p_group(g: &FiniteGroup, p: usize) -> bool {
    let mut n = g.order();
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Cosets of a normal subgroup, numbered by least representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub coset_of: Vec<usize>,
    pub quotient: FiniteGroup,
}

pub fn cosets(g: &FiniteGroup, n: &Subgroup) -> Result<CosetTable> {
    if n.mask.len() != g.order() {
        return Err(Error::IndexOutOfRange {
            index: n.mask.len(),
            size: g.order(),
        });
    }
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &m in n.elements() {
            coset_of[g.mul(x, m)] = reps.len();
        }
        reps.push(x);
    }
    let k = reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &x in &reps {
        for &y in &reps {
            table.push(coset_of[g.mul(x, y)]);
        }
    }
    let quotient = FiniteGroup::from_monoid(FiniteMonoid::from_flat_unchecked(
        k,
        Some(coset_of[g.identity()]),
        table,
    ))?;
    Ok(CosetTable { coset_of, quotient })
}
