//! Finite monoids and semigroups stored as dense multiplication tables.
//!
//! Elements are the indices `0..size`. Products are read left to right:
//! `mul(x, y)` is the entry in row `x`, column `y`. A table whose identity is
//! absent is a semigroup; the same type serves both so that subsemigroups such
//! as the preimage of an idempotent can be handled by one code path.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type ElementId = usize;

/// Default cap on the size of a monoid enumerated from generators.
pub const DEFAULT_GENERATOR_CAP: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    identity: Option<ElementId>,
    table: Vec<ElementId>,
    labels: Option<Vec<String>>,
}

impl FiniteMonoid {
    /// Builds a monoid (or, with `identity = None`, a semigroup) from a square
    /// table, checking ranges, the identity and associativity.
    pub fn from_table(rows: Vec<Vec<ElementId>>, identity: Option<ElementId>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        let mut table = Vec::with_capacity(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::MalformedTable(format!(
                    "row {i} has length {} (expected {size})",
                    row.len()
                )));
            }
            table.extend(row);
        }
        let m = FiniteMonoid {
            size,
            identity,
            table,
            labels: None,
        };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_flat_unchecked(size: usize, identity: Option<ElementId>, table: Vec<ElementId>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        FiniteMonoid {
            size,
            identity,
            table,
            labels: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.size;
        if let Some(&bad) = self.table.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange { index: bad, size: n });
        }
        if let Some(e) = self.identity {
            if e >= n {
                return Err(Error::IndexOutOfRange { index: e, size: n });
            }
            if let Some(x) = (0..n).find(|&x| self.mul(e, x) != x || self.mul(x, e) != x) {
                return Err(Error::BadIdentity(format!("{e} does not fix {x}")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(Error::NonAssociative { x, y, z });
                    }
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(Error::MalformedTable(format!(
                    "{} labels for {n} elements",
                    labels.len()
                )));
            }
        }
        Ok(())
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::MalformedTable(format!(
                "{} labels for {} elements",
                labels.len(),
                self.size
            )));
        }
        self.labels = Some(labels.into_iter().map(Into::into).collect());
        Ok(self)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn identity(&self) -> Option<ElementId> {
        self.identity
    }

    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.table[x * self.size + y]
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: ElementId) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn is_idempotent(&self, x: ElementId) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<ElementId> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    /// The zero element, if there is one.
    pub fn zero(&self) -> Option<ElementId> {
        self.elements()
            .find(|&z| self.elements().all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    pub fn is_group(&self) -> bool {
        let Some(e) = self.identity else { return false };
        self.elements()
            .all(|x| self.elements().any(|y| self.mul(x, y) == e && self.mul(y, x) == e))
    }

    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Induced table on a subset closed under multiplication. The result's
    /// element `i` is `elements[i]` of `self`; `identity` is given as an
    /// element of `self`.
    pub fn restrict(&self, elements: &[ElementId], identity: Option<ElementId>) -> Result<Self> {
        let mut index = vec![usize::MAX; self.size];
        for (i, &x) in elements.iter().enumerate() {
            if x >= self.size {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    size: self.size,
                });
            }
            index[x] = i;
        }
        let k = elements.len();
        if k == 0 {
            return Err(Error::MalformedTable("empty subset".into()));
        }
        let mut table = Vec::with_capacity(k * k);
        for &x in elements {
            for &y in elements {
                let p = index[self.mul(x, y)];
                if p == usize::MAX {
                    return Err(Error::MalformedTable(format!(
                        "subset not closed: {x}*{y} = {}",
                        self.mul(x, y)
                    )));
                }
                table.push(p);
            }
        }
        let identity = match identity {
            Some(e) if index[e] == usize::MAX => return Err(Error::BadIdentity(format!("{e} not in subset"))),
            Some(e) => Some(index[e]),
            None => None,
        };
        let mut m = FiniteMonoid::from_flat_unchecked(k, identity, table);
        if let Some(e) = m.identity {
            if let Some(x) = m.elements().find(|&x| m.mul(e, x) != x || m.mul(x, e) != x) {
                return Err(Error::BadIdentity(format!("{e} does not fix {x}")));
            }
        }
        if let Some(l) = &self.labels {
            m.labels = Some(elements.iter().map(|&x| l[x].clone()).collect());
        }
        Ok(m)
    }

    /// Adjoins a fresh identity element (index 0), shifting existing indices by one.
    pub fn with_adjoined_identity(&self) -> Self {
        let n = self.size + 1;
        let mut table = vec![0; n * n];
        for x in 0..n {
            table[x] = x;
            table[x * n] = x;
        }
        for x in 0..self.size {
            for y in 0..self.size {
                table[(x + 1) * n + y + 1] = self.mul(x, y) + 1;
            }
        }
        let mut m = FiniteMonoid::from_flat_unchecked(n, Some(0), table);
        if let Some(l) = &self.labels {
            let mut labels = vec!["1".to_string()];
            labels.extend(l.iter().cloned());
            m.labels = Some(labels);
        }
        m
    }

    /// Adjoins a zero element (the new last index).
    pub fn with_adjoined_zero(&self) -> Self {
        let n = self.size + 1;
        let z = self.size;
        let mut table = vec![z; n * n];
        for x in 0..self.size {
            for y in 0..self.size {
                table[x * n + y] = self.mul(x, y);
            }
        }
        let mut m = FiniteMonoid::from_flat_unchecked(n, self.identity, table);
        if let Some(l) = &self.labels {
            let mut labels = l.clone();
            labels.push("0".into());
            m.labels = Some(labels);
        }
        m
    }

    pub fn direct_product(&self, other: &FiniteMonoid) -> Self {
        let (n, m) = (self.size, other.size);
        let size = n * m;
        let mut table = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                let (x1, x2) = (x / m, x % m);
                let (y1, y2) = (y / m, y % m);
                table.push(self.mul(x1, y1) * m + other.mul(x2, y2));
            }
        }
        let identity = match (self.identity, other.identity) {
            (Some(a), Some(b)) => Some(a * m + b),
            _ => None,
        };
        FiniteMonoid::from_flat_unchecked(size, identity, table)
    }

    /// Relabels elements by a permutation: element `x` of `self` becomes
    /// `perm[x]` of the result.
    pub fn permuted(&self, perm: &[ElementId]) -> Self {
        let n = self.size;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.mul(x, y)];
            }
        }
        let mut m = FiniteMonoid::from_flat_unchecked(n, self.identity.map(|e| perm[e]), table);
        if let Some(l) = &self.labels {
            let mut labels = vec![String::new(); n];
            for x in 0..n {
                labels[perm[x]] = l[x].clone();
            }
            m.labels = Some(labels);
        }
        m
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MonoidJson::from(self)).expect("monoid serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MonoidJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

/// Wire form: `{"size": n, "identity": i|null, "table": [[...]], "labels": [...]?}`.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct MonoidJson {
    pub size: usize,
    pub identity: Option<ElementId>,
    pub table: Vec<Vec<ElementId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&FiniteMonoid> for MonoidJson {
    fn from(m: &FiniteMonoid) -> Self {
        MonoidJson {
            size: m.size,
            identity: m.identity,
            table: m.rows(),
            labels: m.labels.clone(),
        }
    }
}

impl TryFrom<MonoidJson> for FiniteMonoid {
    type Error = Error;

    fn try_from(raw: MonoidJson) -> Result<Self> {
        if raw.table.len() != raw.size {
            return Err(Error::MalformedTable(format!(
                "size {} but {} rows",
                raw.size,
                raw.table.len()
            )));
        }
        let m = FiniteMonoid::from_table(raw.table, raw.identity)?;
        match raw.labels {
            Some(l) => m.with_labels(l),
            None => Ok(m),
        }
    }
}

/// Validated monoid from a square table.
pub fn monoid_from_table(table: Vec<Vec<ElementId>>, identity: ElementId) -> Result<FiniteMonoid> {
    FiniteMonoid::from_table(table, Some(identity))
}

/// Validated semigroup (no identity) from a square table.
pub fn semigroup_from_table(table: Vec<Vec<ElementId>>) -> Result<FiniteMonoid> {
    FiniteMonoid::from_table(table, None)
}

/// A transformation monoid together with the maps realizing its elements.
#[derive(Clone, Debug)]
pub struct TransformationMonoid {
    pub monoid: FiniteMonoid,
    pub maps: Vec<Vec<usize>>,
}

/// Enumerates the monoid generated by total self-maps of `{0..degree}`.
///
/// Maps act on the right: the product `f*g` is "first `f`, then `g`". Element
/// 0 is always the identity map; the rest appear in breadth-first order of
/// their shortest words.
pub fn monoid_from_generators(degree: usize, gens: &[Vec<usize>], cap: usize) -> Result<TransformationMonoid> {
    for g in gens {
        if g.len() != degree {
            return Err(Error::DomainMismatch {
                expected: degree,
                found: g.len(),
            });
        }
        if let Some(&p) = g.iter().find(|&&p| p >= degree) {
            return Err(Error::IndexOutOfRange { index: p, size: degree });
        }
    }
    let compose = |f: &[usize], g: &[usize]| -> Vec<usize> { f.iter().map(|&p| g[p]).collect() };

    let identity: Vec<usize> = (0..degree).collect();
    let mut maps = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, ElementId> = HashMap::new();
    index.insert(identity, 0);
    let mut i = 0;
    while i < maps.len() {
        for g in gens {
            let next = compose(&maps[i], g);
            if !index.contains_key(&next) {
                if maps.len() >= cap {
                    return Err(Error::SizeLimitExceeded {
                        what: "generated monoid",
                        limit: cap,
                    });
                }
                index.insert(next.clone(), maps.len());
                maps.push(next);
            }
        }
        i += 1;
    }
    let n = maps.len();
    let mut table = Vec::with_capacity(n * n);
    for f in &maps {
        for g in &maps {
            table.push(index[&compose(f, g)]);
        }
    }
    Ok(TransformationMonoid {
        monoid: FiniteMonoid::from_flat_unchecked(n, Some(0), table),
        maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn trivial_table() {
        let m = monoid_from_table(vec![vec![0]], 0).unwrap();
        assert_eq!(m.size(), 1);
        assert_eq!(m.identity(), Some(0));
    }

    #[test]
    fn two_element_semilattice() {
        let m = monoid_from_table(vec![vec![0, 1], vec![1, 1]], 0).unwrap();
        assert!(m.is_idempotent(1));
        assert_eq!(m.zero(), Some(1));
    }

    #[test]
    fn brandt_table_accepted() {
        let b = zoo::b21();
        assert_eq!(b.size(), 6);
        b.validate().unwrap();
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(matches!(
            monoid_from_table(vec![vec![0, 2], vec![1, 1]], 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            monoid_from_table(vec![vec![0, 1], vec![1, 1]], 1),
            Err(Error::BadIdentity(_))
        ));
        // x*y = y+1 capped: (0*0)*0 = 1*0 = 1, 0*(0*0) = 0*1 = 2
        let bad = vec![vec![1, 2, 2], vec![1, 2, 2], vec![2, 2, 2]];
        assert!(matches!(semigroup_from_table(bad), Err(Error::NonAssociative { .. })));
        assert!(matches!(
            FiniteMonoid::from_table(vec![vec![0, 1]], None),
            Err(Error::MalformedTable(_))
        ));
    }

    #[test]
    fn generators_empty_is_trivial() {
        let t = monoid_from_generators(3, &[], DEFAULT_GENERATOR_CAP).unwrap();
        assert_eq!(t.monoid.size(), 1);
    }

    #[test]
    fn generators_constant_map() {
        let t = monoid_from_generators(2, &[vec![0, 0]], DEFAULT_GENERATOR_CAP).unwrap();
        assert_eq!(t.monoid.size(), 2);
        assert_eq!(t.monoid.mul(1, 1), 1);
        assert_eq!(t.monoid.identity(), Some(0));
    }

    #[test]
    fn generators_domain_mismatch_and_cap() {
        assert!(matches!(
            monoid_from_generators(3, &[vec![0, 1]], 10),
            Err(Error::DomainMismatch { .. })
        ));
        // full transformation monoid on 3 points has 27 elements
        let gens = vec![vec![1, 2, 0], vec![1, 0, 2], vec![0, 0, 2]];
        assert_eq!(monoid_from_generators(3, &gens, 100).unwrap().monoid.size(), 27);
        assert!(matches!(
            monoid_from_generators(3, &gens, 10),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn generated_tables_are_associative() {
        let gens = vec![vec![1, 2, 0, 3], vec![0, 0, 2, 3], vec![3, 1, 2, 3]];
        let t = monoid_from_generators(4, &gens, 1000).unwrap();
        t.monoid.validate().unwrap();
    }

    #[test]
    fn json_round_trip_with_labels() {
        let b = zoo::b21();
        let back = FiniteMonoid::from_json(&b.to_json()).unwrap();
        assert_eq!(b, back);
        let plain = zoo::cyclic_group(3);
        assert!(!plain.to_json().contains("labels"));
        assert_eq!(FiniteMonoid::from_json(&plain.to_json()).unwrap(), plain);
    }

    #[test]
    fn semigroup_json_has_null_identity() {
        let s = semigroup_from_table(vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert!(s.to_json().contains("\"identity\":null"));
        assert_eq!(FiniteMonoid::from_json(&s.to_json()).unwrap(), s);
    }
}
