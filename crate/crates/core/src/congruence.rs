//! Partitions compatible with multiplication, quotients, and monoid morphisms.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::greens::{renumber, ClassId};
use crate::monoid::{ElementId, FiniteMonoid};

/// Default cap on the size of a monoid whose congruence lattice is enumerated.
pub const DEFAULT_CONGRUENCE_CAP: usize = 10;

/// Union by least index, so the root of a class is its least member.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            let grand = self.parent[self.parent[x]];
            self.parent[x] = grand;
            x = grand;
        }
        x
    }

    /// Returns false when already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        true
    }

    pub fn labels(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|x| self.find(x)).collect()
    }
}

/// An equivalence relation on `0..n`, classes numbered by least member.
///
/// Used for congruences on monoids (over elements) and on categories (over
/// arrows).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    class_of: Vec<ClassId>,
    num_classes: usize,
}

/// Congruences on categories share the representation; classes must consist
/// of coterminal arrows.
pub type CatCongruence = Congruence;

impl Congruence {
    /// Normalizes arbitrary labels into canonical class ids.
    pub fn from_labels(labels: &[usize]) -> Self {
        let (class_of, num_classes) = renumber(labels);
        Congruence { class_of, num_classes }
    }

    pub fn trivial(n: usize) -> Self {
        Congruence {
            class_of: (0..n).collect(),
            num_classes: n,
        }
    }

    pub fn universal(n: usize) -> Self {
        Congruence {
            class_of: vec![0; n],
            num_classes: usize::from(n > 0),
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> ClassId {
        self.class_of[x]
    }

    pub fn class_ids(&self) -> &[ClassId] {
        &self.class_of
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn is_trivial(&self) -> bool {
        self.num_classes == self.class_of.len()
    }

    pub fn is_universal(&self) -> bool {
        self.num_classes <= 1
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Least member of each class, in class order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.num_classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = x;
            }
        }
        reps
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Congruence) -> bool {
        let reps = self.representatives();
        self.class_of
            .iter()
            .enumerate()
            .all(|(x, &c)| other.related(x, reps[c]))
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let pairs: Vec<usize> = self
            .class_of
            .iter()
            .zip(&other.class_of)
            .map(|(&a, &b)| a * other.num_classes.max(1) + b)
            .collect();
        Congruence::from_labels(&pairs)
    }

    /// Join as equivalence relations. For congruences the join of relations
    /// generated this way is again a congruence only after closure; callers
    /// use [`congruence_generated`] when that matters.
    pub fn join_equivalence(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.len());
        for cong in [self, other] {
            let reps = cong.representatives();
            for (x, &c) in cong.class_of.iter().enumerate() {
                uf.union(x, reps[c]);
            }
        }
        Congruence::from_labels(&uf.labels())
    }

    /// Non-diagonal pairs `(x, y)` with `x < y`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for class in self.classes() {
            for (i, &x) in class.iter().enumerate() {
                for &y in &class[i + 1..] {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Checks two-sided compatibility with the multiplication of `s`.
    pub fn check_compatible(&self, s: &FiniteMonoid) -> Result<()> {
        if self.len() != s.size() {
            return Err(Error::IncompatiblePartition(format!(
                "partition of {} elements on a monoid of size {}",
                self.len(),
                s.size()
            )));
        }
        let reps = self.representatives();
        for x in s.elements() {
            let r = reps[self.class_of[x]];
            if r == x {
                continue;
            }
            for u in s.elements() {
                if !self.related(s.mul(x, u), s.mul(r, u)) || !self.related(s.mul(u, x), s.mul(u, r)) {
                    return Err(Error::IncompatiblePartition(format!(
                        "{x} ~ {r} but not after multiplying by {u}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Image of this congruence under a quotient whose kernel it contains:
    /// `projection[x]` is the class of `x` in the intermediate quotient.
    pub fn push_forward(&self, projection: &[usize], target_size: usize) -> Result<Congruence> {
        let mut labels = vec![usize::MAX; target_size];
        for (x, &p) in projection.iter().enumerate() {
            let c = self.class_of[x];
            if labels[p] == usize::MAX {
                labels[p] = c;
            } else if labels[p] != c {
                return Err(Error::IncompatiblePartition(
                    "congruence does not contain the kernel of the projection".into(),
                ));
            }
        }
        Ok(Congruence::from_labels(&labels))
    }
}

#[derive(Serialize, Deserialize)]
struct CongruenceJson {
    classes: Vec<usize>,
}

impl Congruence {
    /// `{"classes": [class id per element]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&CongruenceJson {
            classes: self.class_of.clone(),
        })
        .expect("congruence serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CongruenceJson = serde_json::from_str(text)?;
        Ok(Congruence::from_labels(&raw.classes))
    }
}

/// Closes a relation under two-sided translations by elements of `S^1`.
pub fn congruence_generated(s: &FiniteMonoid, pairs: &[(ElementId, ElementId)]) -> Congruence {
    let mut uf = UnionFind::new(s.size());
    let mut work: Vec<(ElementId, ElementId)> = pairs.to_vec();
    while let Some((p, q)) = work.pop() {
        if uf.union(p, q) {
            for u in s.elements() {
                work.push((s.mul(p, u), s.mul(q, u)));
                work.push((s.mul(u, p), s.mul(u, q)));
            }
        }
    }
    Congruence::from_labels(&uf.labels())
}

/// Smallest congruence identifying `x` and `y`.
pub fn principal_congruence(s: &FiniteMonoid, x: ElementId, y: ElementId) -> Result<Congruence> {
    for z in [x, y] {
        if z >= s.size() {
            return Err(Error::IndexOutOfRange {
                index: z,
                size: s.size(),
            });
        }
    }
    if x == y {
        return Err(Error::SamePair(x));
    }
    Ok(congruence_generated(s, &[(x, y)]))
}

/// Join of two congruences (as congruences).
pub fn join(s: &FiniteMonoid, a: &Congruence, b: &Congruence) -> Congruence {
    let mut pairs = Vec::new();
    for c in [a, b] {
        let reps = c.representatives();
        pairs.extend(
            (0..c.len())
                .filter(|&x| reps[c.class_of(x)] != x)
                .map(|x| (x, reps[c.class_of(x)])),
        );
    }
    congruence_generated(s, &pairs)
}

/// Every congruence on `s`, closed under joins of principal congruences.
/// Sorted by decreasing number of classes, then by class vector.
pub fn all_congruences(s: &FiniteMonoid, cap: usize) -> Result<Vec<Congruence>> {
    if s.size() > cap {
        return Err(Error::SizeLimitExceeded {
            what: "congruence enumeration",
            limit: cap,
        });
    }
    let n = s.size();
    let mut principal: Vec<Congruence> = Vec::new();
    let mut seen_principal = HashSet::new();
    for x in 0..n {
        for y in x + 1..n {
            let c = congruence_generated(s, &[(x, y)]);
            if seen_principal.insert(c.clone()) {
                principal.push(c);
            }
        }
    }
    let mut found: BTreeSet<Congruence> = BTreeSet::new();
    found.insert(Congruence::trivial(n));
    let mut frontier: Vec<Congruence> = principal.clone();
    for c in &principal {
        found.insert(c.clone());
    }
    while let Some(c) = frontier.pop() {
        for p in &principal {
            if p.refines(&c) {
                continue;
            }
            let j = join(s, &c, p);
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Congruence> = found.into_iter().collect();
    out.sort_by(|a, b| b.num_classes().cmp(&a.num_classes()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// A monoid (or semigroup) homomorphism given by its element map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidMorphism {
    pub source: FiniteMonoid,
    pub target: FiniteMonoid,
    pub map: Vec<ElementId>,
}

impl MonoidMorphism {
    pub fn new(source: FiniteMonoid, target: FiniteMonoid, map: Vec<ElementId>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::NotAMorphism(format!(
                "map has {} entries for {} elements",
                map.len(),
                source.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.size()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: target.size(),
            });
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(Error::NotAMorphism(format!("fails on ({x}, {y})")));
                }
            }
        }
        if let (Some(a), Some(b)) = (source.identity(), target.identity()) {
            if map[a] != b {
                return Err(Error::NotAMorphism("identity not preserved".into()));
            }
        }
        Ok(MonoidMorphism { source, target, map })
    }

    pub fn identity(m: &FiniteMonoid) -> Self {
        MonoidMorphism {
            source: m.clone(),
            target: m.clone(),
            map: m.elements().collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: ElementId) -> ElementId {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// The associated congruence `x ~ y iff map(x) = map(y)`.
    pub fn kernel(&self) -> Congruence {
        Congruence::from_labels(&self.map)
    }

    /// Preimage of a target element, in increasing order.
    pub fn preimage(&self, y: ElementId) -> Vec<ElementId> {
        self.source.elements().filter(|&x| self.map[x] == y).collect()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &MonoidMorphism) -> Result<MonoidMorphism> {
        if self.target != next.source {
            return Err(Error::NotAMorphism("composition: codomain/domain mismatch".into()));
        }
        Ok(MonoidMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&y| next.map[y]).collect(),
        })
    }
}

/// Quotient by a congruence; classes are numbered by least member.
pub fn quotient(s: &FiniteMonoid, c: &Congruence) -> Result<(FiniteMonoid, MonoidMorphism)> {
    c.check_compatible(s)?;
    let reps = c.representatives();
    let k = c.num_classes();
    let mut table = Vec::with_capacity(k * k);
    for &x in &reps {
        for &y in &reps {
            table.push(c.class_of(s.mul(x, y)));
        }
    }
    let q = FiniteMonoid::from_flat_unchecked(k, s.identity().map(|e| c.class_of(e)), table);
    let map = c.class_ids().to_vec();
    let morphism = MonoidMorphism {
        source: s.clone(),
        target: q.clone(),
        map,
    };
    Ok((q, morphism))
}
