//! Finite categories with a partial composition table.
//!
//! Composition is written left to right: `compose(i, j)` is defined exactly
//! when `dst(i) == src(j)` and runs from `src(i)` to `dst(j)`. Morphisms are
//! identity-on-objects quotients throughout.

mod congruence;
mod kernel;
mod morphism;
mod mpq;
mod supertech;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use congruence::{
    all_cat_congruences, cat_congruence_generated, cat_principal_congruence, cat_quotient, check_cat_congruence,
    DEFAULT_CAT_CONGRUENCE_CAP,
};
pub use kernel::{kernel_category, KernelCategory, DEFAULT_KERNEL_OBJECT_CAP};
pub use morphism::{is_lh_morphism_cat, CatMorphism};
pub use mpq::{is_minimal_nontrivial, is_mpq, mpq_factorize};
pub use supertech::{ell_malcev_membership, ell_membership, supertech_check, supertech_construct, Supertech};

use crate::error::{Error, Result};
use crate::monoid::{ElementId, FiniteMonoid};

pub type ObjectId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    num_objects: usize,
    arrows: Vec<(ObjectId, ObjectId)>,
    identities: Vec<ArrowId>,
    out_arrows: Vec<Vec<ArrowId>>,
    out_pos: Vec<usize>,
    /// `compose[i][k]` is `i` followed by `out_arrows[dst(i)][k]`.
    compose: Vec<Vec<ArrowId>>,
}

impl FiniteCategory {
    /// Builds and fully validates a category. `compose` must return `Some`
    /// exactly on composable pairs.
    pub fn new<F>(
        num_objects: usize,
        arrows: Vec<(ObjectId, ObjectId)>,
        identities: Vec<ArrowId>,
        compose: F,
    ) -> Result<Self>
    where
        F: Fn(ArrowId, ArrowId) -> Option<ArrowId>,
    {
        let n = arrows.len();
        for i in 0..n {
            for j in 0..n {
                let composable = arrows[i].1 == arrows[j].0;
                match (composable, compose(i, j)) {
                    (true, None) => return Err(Error::BadComposition(format!("{i};{j} is composable but undefined"))),
                    (false, Some(_)) => {
                        return Err(Error::BadComposition(format!("{i};{j} defined but not composable")))
                    }
                    _ => {}
                }
            }
        }
        let c = Self::build(num_objects, arrows, identities, compose)?;
        c.validate()?;
        Ok(c)
    }

    /// Builds without the associativity and identity checks; used for
    /// categories produced by constructions that guarantee them.
    pub(crate) fn build<F>(
        num_objects: usize,
        arrows: Vec<(ObjectId, ObjectId)>,
        identities: Vec<ArrowId>,
        compose: F,
    ) -> Result<Self>
    where
        F: Fn(ArrowId, ArrowId) -> Option<ArrowId>,
    {
        let n = arrows.len();
        if identities.len() != num_objects {
            return Err(Error::BadIdentity(format!(
                "{} identities for {num_objects} objects",
                identities.len()
            )));
        }
        for &(s, d) in &arrows {
            for o in [s, d] {
                if o >= num_objects {
                    return Err(Error::IndexOutOfRange {
                        index: o,
                        size: num_objects,
                    });
                }
            }
        }
        for (c, &a) in identities.iter().enumerate() {
            if a >= n {
                return Err(Error::IndexOutOfRange { index: a, size: n });
            }
            if arrows[a] != (c, c) {
                return Err(Error::BadIdentity(format!("arrow {a} is not a loop at {c}")));
            }
        }
        let mut out_arrows = vec![Vec::new(); num_objects];
        let mut out_pos = vec![0; n];
        for (a, &(s, _)) in arrows.iter().enumerate() {
            out_pos[a] = out_arrows[s].len();
            out_arrows[s].push(a);
        }
        let mut table = Vec::with_capacity(n);
        for i in 0..n {
            let (src, dst) = arrows[i];
            let mut row = Vec::with_capacity(out_arrows[dst].len());
            for &j in &out_arrows[dst] {
                let k = compose(i, j)
                    .ok_or_else(|| Error::BadComposition(format!("{i};{j} is composable but undefined")))?;
                if k >= n {
                    return Err(Error::IndexOutOfRange { index: k, size: n });
                }
                if arrows[k] != (src, arrows[j].1) {
                    return Err(Error::BadComposition(format!("{i};{j} = {k} has the wrong endpoints")));
                }
                row.push(k);
            }
            table.push(row);
        }
        Ok(FiniteCategory {
            num_objects,
            arrows,
            identities,
            out_arrows,
            out_pos,
            compose: table,
        })
    }

    pub fn validate(&self) -> Result<()> {
        for (c, &id) in self.identities.iter().enumerate() {
            for a in 0..self.num_arrows() {
                if self.arrows[a].0 == c && self.compose(id, a) != Some(a) {
                    return Err(Error::BadIdentity(format!("identity {id} fails on {a}")));
                }
                if self.arrows[a].1 == c && self.compose(a, id) != Some(a) {
                    return Err(Error::BadIdentity(format!("identity {id} fails on {a}")));
                }
            }
        }
        for x in 0..self.num_arrows() {
            for &y in &self.out_arrows[self.dst(x)] {
                let xy = self.compose_unchecked(x, y);
                for &z in &self.out_arrows[self.dst(y)] {
                    if self.compose_unchecked(xy, z) != self.compose_unchecked(x, self.compose_unchecked(y, z)) {
                        return Err(Error::NonAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    /// A monoid viewed as a one-object category.
    pub fn from_monoid(m: &FiniteMonoid) -> Result<Self> {
        let id = m
            .identity()
            .ok_or_else(|| Error::BadIdentity("semigroups are not one-object categories".into()))?;
        Self::build(1, vec![(0, 0); m.size()], vec![id], |x, y| Some(m.mul(x, y)))
    }

    pub fn num_objects(&self) -> usize {
        self.num_objects
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[(ObjectId, ObjectId)] {
        &self.arrows
    }

    #[inline]
    pub fn src(&self, a: ArrowId) -> ObjectId {
        self.arrows[a].0
    }

    #[inline]
    pub fn dst(&self, a: ArrowId) -> ObjectId {
        self.arrows[a].1
    }

    pub fn identity(&self, c: ObjectId) -> ArrowId {
        self.identities[c]
    }

    pub fn identities(&self) -> &[ArrowId] {
        &self.identities
    }

    pub fn is_identity(&self, a: ArrowId) -> bool {
        self.identities[self.src(a)] == a
    }

    #[inline]
    pub fn compose(&self, i: ArrowId, j: ArrowId) -> Option<ArrowId> {
        if self.dst(i) == self.src(j) {
            Some(self.compose[i][self.out_pos[j]])
        } else {
            None
        }
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, i: ArrowId, j: ArrowId) -> ArrowId {
        self.compose[i][self.out_pos[j]]
    }

    /// Arrows leaving `c`, in increasing order.
    pub fn out_arrows(&self, c: ObjectId) -> &[ArrowId] {
        &self.out_arrows[c]
    }

    pub fn hom(&self, c: ObjectId, d: ObjectId) -> Vec<ArrowId> {
        self.out_arrows[c]
            .iter()
            .copied()
            .filter(|&a| self.dst(a) == d)
            .collect()
    }

    pub fn coterminal(&self, a: ArrowId, b: ArrowId) -> bool {
        self.arrows[a] == self.arrows[b]
    }

    pub fn is_idempotent(&self, a: ArrowId) -> bool {
        self.compose(a, a) == Some(a)
    }

    /// The local monoid `C(c, c)` and the arrows it consists of.
    pub fn local_monoid_at(&self, c: ObjectId) -> Result<(FiniteMonoid, Vec<ArrowId>)> {
        if c >= self.num_objects {
            return Err(Error::IndexOutOfRange {
                index: c,
                size: self.num_objects,
            });
        }
        let arrows = self.hom(c, c);
        let mut index = vec![usize::MAX; self.num_arrows()];
        for (i, &a) in arrows.iter().enumerate() {
            index[a] = i;
        }
        let k = arrows.len();
        let mut table = Vec::with_capacity(k * k);
        for &x in &arrows {
            for &y in &arrows {
                table.push(index[self.compose_unchecked(x, y)]);
            }
        }
        let m = FiniteMonoid::from_flat_unchecked(k, Some(index[self.identities[c]]), table);
        Ok((m, arrows))
    }

    /// `C^cd`: arrows plus an adjoined identity (element 0) and zero (last
    /// element); arrow `a` is element `a + 1`. Undefined composites are zero.
    /// Local identities stay distinct from the adjoined identity.
    pub fn consolidation(&self) -> (FiniteMonoid, Vec<ElementId>) {
        let n = self.num_arrows();
        let size = n + 2;
        let zero = n + 1;
        let mut table = vec![zero; size * size];
        for x in 0..size {
            table[x] = x;
            table[x * size] = x;
        }
        for i in 0..n {
            for &j in &self.out_arrows[self.dst(i)] {
                table[(i + 1) * size + j + 1] = self.compose_unchecked(i, j) + 1;
            }
        }
        let m = FiniteMonoid::from_flat_unchecked(size, Some(0), table);
        (m, (0..n).map(|a| a + 1).collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CategoryJson::from(self)).expect("category serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CategoryJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArrowJson {
    pub src: ObjectId,
    pub dst: ObjectId,
}

/// Wire form: `{"objects": k, "arrows": [{"src":i,"dst":j}], "identities": [...],
/// "compose": {"i,j": k}}`.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct CategoryJson {
    pub objects: usize,
    pub arrows: Vec<ArrowJson>,
    pub identities: Vec<ArrowId>,
    pub compose: BTreeMap<String, ArrowId>,
}

impl From<&FiniteCategory> for CategoryJson {
    fn from(c: &FiniteCategory) -> Self {
        let mut compose = BTreeMap::new();
        for i in 0..c.num_arrows() {
            for &j in c.out_arrows(c.dst(i)) {
                compose.insert(format!("{i},{j}"), c.compose_unchecked(i, j));
            }
        }
        CategoryJson {
            objects: c.num_objects,
            arrows: c.arrows.iter().map(|&(src, dst)| ArrowJson { src, dst }).collect(),
            identities: c.identities.clone(),
            compose,
        }
    }
}

impl TryFrom<CategoryJson> for FiniteCategory {
    type Error = Error;

    fn try_from(raw: CategoryJson) -> Result<Self> {
        let n = raw.arrows.len();
        let mut table: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (key, &v) in &raw.compose {
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad compose key {key:?}")))?;
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad compose key {key:?}")))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad compose key {key:?}")))?;
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange {
                    index: a.max(b),
                    size: n,
                });
            }
            table.insert((a, b), v);
        }
        let arrows = raw.arrows.iter().map(|a| (a.src, a.dst)).collect();
        FiniteCategory::new(raw.objects, arrows, raw.identities, |i, j| table.get(&(i, j)).copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn trivial_category() {
        let c = zoo::trivial_category();
        assert_eq!((c.num_objects(), c.num_arrows()), (1, 1));
        let (m, _) = c.local_monoid_at(0).unwrap();
        assert_eq!(m.size(), 1);
        let (cd, emb) = c.consolidation();
        assert_eq!(cd.size(), 3);
        assert_eq!(emb, vec![1]);
        assert_eq!(cd.mul(1, 1), 1);
        cd.validate().unwrap();
    }

    #[test]
    fn monoid_as_one_object_category() {
        let b = zoo::b21();
        let c = FiniteCategory::from_monoid(&b).unwrap();
        c.validate().unwrap();
        let (local, _) = c.local_monoid_at(0).unwrap();
        assert_eq!((local.rows(), local.identity()), (b.rows(), b.identity()));
        let back = FiniteCategory::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn two_object_arrow_category() {
        let c = zoo::two_object_arrow_category();
        // arrows: id0 = 0, id1 = 1, u = 2
        assert_eq!(c.compose(2, 1), Some(2));
        assert_eq!(c.compose(0, 2), Some(2));
        assert_eq!(c.compose(2, 2), None);
        assert_eq!(c.local_monoid_at(0).unwrap().0.size(), 1);
        let (cd, _) = c.consolidation();
        assert_eq!(cd.size(), 5);
        let (u, id0, id1, zero) = (3, 1, 2, 4);
        assert_eq!(cd.mul(u, u), zero);
        assert_eq!(cd.mul(id0, u), u);
        assert_eq!(cd.mul(u, id1), u);
        assert_eq!(cd.mul(id1, u), zero);
        cd.validate().unwrap();
    }

    #[test]
    fn consolidation_size_formula() {
        let c = zoo::groupoid_c2();
        assert_eq!(c.num_arrows(), 8);
        assert_eq!(c.consolidation().0.size(), 10);
    }

    #[test]
    fn json_validation_errors() {
        let ok = zoo::two_object_arrow_category().to_json();
        assert!(FiniteCategory::from_json(&ok).is_ok());
        let missing = ok.replace("\"0,2\":2,", "");
        assert!(matches!(
            FiniteCategory::from_json(&missing),
            Err(Error::BadComposition(_))
        ));
        let bad_identity = ok.replace("\"identities\":[0,1]", "\"identities\":[2,1]");
        assert!(matches!(
            FiniteCategory::from_json(&bad_identity),
            Err(Error::BadIdentity(_))
        ));
        let extra = ok.replace("\"0,2\":2", "\"0,2\":2,\"2,0\":2");
        assert!(matches!(
            FiniteCategory::from_json(&extra),
            Err(Error::BadComposition(_))
        ));
    }

    #[test]
    fn non_associative_rejected() {
        // one object, arrows {id, x, y}; x;x = y, x;y = x, y;x = y, y;y = y
        let table = [[0, 1, 2], [1, 2, 1], [2, 2, 2]];
        let r = FiniteCategory::new(1, vec![(0, 0); 3], vec![0], |i, j| Some(table[i][j]));
        assert!(matches!(r, Err(Error::NonAssociative { .. })));
    }
}
