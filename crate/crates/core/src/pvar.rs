//! Pseudovariety membership predicates and the builtin registry.
//!
//! A group-kind predicate tests finite groups and carries the Fitting and
//! extension-closed flags; a monoid-kind predicate tests finite monoids.
//! Flags on user-supplied predicates are trusted: there is no general way to
//! verify that a predicate is Fitting, so the test corpus is the only check.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::greens::greens;
use crate::groups::{self, FiniteGroup};
use crate::lh::maximal_subgroup;
use crate::monoid::FiniteMonoid;

pub type GroupTest = Arc<dyn Fn(&FiniteGroup) -> bool + Send + Sync>;
pub type MonoidTest = Arc<dyn Fn(&FiniteMonoid) -> bool + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PvarKind {
    Group,
    Monoid,
}

#[derive(Clone)]
enum Test {
    Group(GroupTest),
    Monoid(MonoidTest),
}

#[derive(Clone)]
pub struct Pseudovariety {
    name: String,
    test: Test,
    fitting: bool,
    extension_closed: bool,
}

impl fmt::Debug for Pseudovariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Pseudovariety")
            .field("name", &self.name)
            .field("kind", &self.kind())
            .field("fitting", &self.fitting)
            .field("extension_closed", &self.extension_closed)
            .finish()
    }
}

impl Pseudovariety {
    pub fn group<F>(name: impl Into<String>, fitting: bool, extension_closed: bool, test: F) -> Self
    where
        F: Fn(&FiniteGroup) -> bool + Send + Sync + 'static,
    {
        Pseudovariety {
            name: name.into(),
            test: Test::Group(Arc::new(test)),
            fitting,
            extension_closed,
        }
    }

    pub fn monoid<F>(name: impl Into<String>, test: F) -> Self
    where
        F: Fn(&FiniteMonoid) -> bool + Send + Sync + 'static,
    {
        Pseudovariety {
            name: name.into(),
            test: Test::Monoid(Arc::new(test)),
            fitting: false,
            extension_closed: false,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> PvarKind {
        match self.test {
            Test::Group(_) => PvarKind::Group,
            Test::Monoid(_) => PvarKind::Monoid,
        }
    }

    pub fn is_fitting(&self) -> bool {
        self.fitting
    }

    pub fn is_extension_closed(&self) -> bool {
        self.extension_closed
    }

    pub fn contains_group(&self, g: &FiniteGroup) -> Result<bool> {
        match &self.test {
            Test::Group(t) => Ok(t(g)),
            Test::Monoid(_) => Err(self.wrong_kind("group")),
        }
    }

    pub fn contains_monoid(&self, m: &FiniteMonoid) -> Result<bool> {
        match &self.test {
            Test::Monoid(t) => Ok(t(m)),
            Test::Group(_) => Err(self.wrong_kind("monoid")),
        }
    }

    pub(crate) fn require_group_kind(&self) -> Result<()> {
        match self.kind() {
            PvarKind::Group => Ok(()),
            PvarKind::Monoid => Err(self.wrong_kind("group")),
        }
    }

    pub(crate) fn require_fitting(&self) -> Result<()> {
        self.require_group_kind()?;
        if self.fitting {
            Ok(())
        } else {
            Err(Error::NotFitting(self.name.clone()))
        }
    }

    fn wrong_kind(&self, expected: &'static str) -> Error {
        Error::WrongPredicateKind {
            name: self.name.clone(),
            expected,
        }
    }
}

pub fn trivial_group() -> Pseudovariety {
    Pseudovariety::group("triv", true, true, |g| g.order() == 1)
}

/// `G_p`; `p` must be prime.
pub fn p_group(p: usize) -> Result<Pseudovariety> {
    if !groups::is_prime(p) {
        return Err(Error::UnknownPredicate(format!("p:{p} (not prime)")));
    }
    Ok(Pseudovariety::group(format!("p:{p}"), true, true, move |g| {
        groups::is_p_group(g, p)
    }))
}

pub fn nilpotent() -> Pseudovariety {
    Pseudovariety::group("nil", true, false, groups::is_nilpotent)
}

pub fn solvable() -> Pseudovariety {
    Pseudovariety::group("sol", true, true, groups::is_solvable)
}

pub fn all_groups() -> Pseudovariety {
    Pseudovariety::group("all", true, true, |_| true)
}

/// Idempotent commutative monoids.
pub fn semilattice() -> Pseudovariety {
    Pseudovariety::monoid("sl", |m| {
        m.elements()
            .all(|x| m.is_idempotent(x) && m.elements().all(|y| m.mul(x, y) == m.mul(y, x)))
    })
}

pub fn trivial_monoid() -> Pseudovariety {
    Pseudovariety::monoid("mtriv", |m| m.size() == 1)
}

/// Monoids whose regular J-classes are subsemigroups.
pub fn ds() -> Pseudovariety {
    Pseudovariety::monoid("ds", is_ds)
}

/// `DS ∩ H̄`: DS monoids all of whose subgroups lie in `h`.
pub fn ds_and_hbar(h: Pseudovariety) -> Result<Pseudovariety> {
    h.require_group_kind()?;
    let name = format!("ds-hbar:{}", h.name());
    Ok(Pseudovariety::monoid(name, move |m| {
        is_ds(m) && subgroups_in(m, &h).expect("group-kind predicate")
    }))
}

pub fn is_ds(m: &FiniteMonoid) -> bool {
    let g = greens(m);
    (0..g.num_j).filter(|&j| g.is_regular(j)).all(|j| {
        let members = g.j_members(j);
        members
            .iter()
            .all(|&x| members.iter().all(|&y| g.j_class[m.mul(x, y)] == j))
    })
}

/// Every maximal subgroup of `m` belongs to the group pseudovariety `h`.
pub fn subgroups_in(m: &FiniteMonoid, h: &Pseudovariety) -> Result<bool> {
    h.require_group_kind()?;
    for e in m.idempotents() {
        let (g, _) = maximal_subgroup(m, e)?;
        if !h.contains_group(&g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parses a registry name: `triv|p:<q>|nil|sol|all|sl|mtriv|ds|ds-hbar:<h>`.
pub fn parse(name: &str) -> Result<Pseudovariety> {
    match name {
        "triv" => Ok(trivial_group()),
        "nil" => Ok(nilpotent()),
        "sol" => Ok(solvable()),
        "all" => Ok(all_groups()),
        "sl" => Ok(semilattice()),
        "mtriv" => Ok(trivial_monoid()),
        "ds" => Ok(ds()),
        _ => {
            if let Some(p) = name.strip_prefix("p:") {
                let p: usize = p.parse().map_err(|_| Error::UnknownPredicate(name.into()))?;
                p_group(p)
            } else if let Some(h) = name.strip_prefix("ds-hbar:") {
                ds_and_hbar(parse(h)?)
            } else {
                Err(Error::UnknownPredicate(name.into()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn group(m: FiniteMonoid) -> FiniteGroup {
        FiniteGroup::from_monoid(m).unwrap()
    }

    #[test]
    fn trivial_group_in_all_group_predicates() {
        let t = FiniteGroup::trivial();
        for h in [
            trivial_group(),
            p_group(2).unwrap(),
            nilpotent(),
            solvable(),
            all_groups(),
        ] {
            assert!(h.contains_group(&t).unwrap(), "{}", h.name());
        }
    }

    #[test]
    fn s3_memberships() {
        let s3 = group(zoo::s3());
        assert!(solvable().contains_group(&s3).unwrap());
        assert!(!nilpotent().contains_group(&s3).unwrap());
        assert!(!p_group(2).unwrap().contains_group(&s3).unwrap());
        let q8 = group(zoo::q8());
        assert!(p_group(2).unwrap().contains_group(&q8).unwrap());
        assert!(nilpotent().contains_group(&q8).unwrap());
    }

    #[test]
    fn brandt_not_in_ds() {
        assert!(!ds().contains_monoid(&zoo::b21()).unwrap());
        assert!(ds().contains_monoid(&zoo::u1()).unwrap());
        assert!(ds().contains_monoid(&zoo::s3()).unwrap());
    }

    #[test]
    fn semilattice_predicate() {
        let sl = semilattice();
        assert!(sl.contains_monoid(&zoo::u1()).unwrap());
        assert!(!sl.contains_monoid(&zoo::cyclic_group(2)).unwrap());
        assert!(!sl.contains_monoid(&zoo::left_zero_monoid()).unwrap());
    }

    #[test]
    fn kinds_are_enforced() {
        assert!(matches!(
            semilattice().contains_group(&FiniteGroup::trivial()),
            Err(Error::WrongPredicateKind { .. })
        ));
        assert!(matches!(
            trivial_group().contains_monoid(&zoo::u1()),
            Err(Error::WrongPredicateKind { .. })
        ));
    }

    #[test]
    fn registry_names() {
        for name in [
            "triv",
            "p:2",
            "p:3",
            "nil",
            "sol",
            "all",
            "sl",
            "mtriv",
            "ds",
            "ds-hbar:p:2",
        ] {
            assert_eq!(parse(name).unwrap().name(), name);
        }
        assert!(matches!(parse("p:4"), Err(Error::UnknownPredicate(_))));
        assert!(matches!(parse("bogus"), Err(Error::UnknownPredicate(_))));
        assert!(parse("ds-hbar:sl").is_err());
        assert!(!nilpotent().is_extension_closed());
        assert!(nilpotent().is_fitting());
    }

    #[test]
    fn ds_and_hbar_checks_subgroups() {
        let pv = ds_and_hbar(p_group(2).unwrap()).unwrap();
        assert!(pv.contains_monoid(&zoo::cyclic_group(4)).unwrap());
        assert!(!pv.contains_monoid(&zoo::cyclic_group(3)).unwrap());
        assert!(!pv.contains_monoid(&zoo::b21()).unwrap());
    }
}
