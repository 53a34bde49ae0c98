use std::path::Path;

use semicat::category::{cat_congruence_generated, cat_quotient, CatMorphism, FiniteCategory};
use semicat::congruence::{congruence_generated, quotient, Congruence, MonoidMorphism};
use semicat::error::{Error, Result};
use semicat::monoid::FiniteMonoid;
use semicat::zoo::{self, ZooEntry};

pub enum Object {
    Monoid(FiniteMonoid),
    Category(FiniteCategory),
}

impl Object {
    pub fn monoid(self) -> Result<FiniteMonoid> {
        match self {
            Object::Monoid(m) => Ok(m),
            Object::Category(c) if c.num_objects() == 1 => Ok(c.local_monoid_at(0)?.0),
            Object::Category(_) => Err(Error::Parse("expected a monoid, found a category".into())),
        }
    }

    pub fn category(self) -> Result<FiniteCategory> {
        match self {
            Object::Monoid(m) => FiniteCategory::from_monoid(&m),
            Object::Category(c) => Ok(c),
        }
    }
}

/// Reads a monoid or category from a JSON file. A path that does not exist
/// is looked up in the builtin zoo.
pub fn load(source: &str) -> Result<Object> {
    let path = Path::new(source);
    if !path.exists() {
        return match zoo::lookup(source) {
            Ok(ZooEntry::Monoid(m)) => Ok(Object::Monoid(m)),
            Ok(ZooEntry::Category(c)) => Ok(Object::Category(c)),
            Err(_) => Err(Error::Parse(format!("{source}: no such file or builtin"))),
        };
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
    if value.get("objects").is_some() {
        Ok(Object::Category(FiniteCategory::from_json(&text)?))
    } else {
        Ok(Object::Monoid(FiniteMonoid::from_json(&text)?))
    }
}

pub fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `x,y`, got {s:?}"))?;
    let a = a.trim().parse().map_err(|_| format!("bad index {a:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad index {b:?}"))?;
    Ok((a, b))
}

/// The congruence named by `--congruence FILE` or generated by `--pair`s.
pub fn congruence(
    size: usize,
    file: Option<&Path>,
    pairs: &[(usize, usize)],
    generate: impl FnOnce(&[(usize, usize)]) -> Result<Congruence>,
) -> Result<Congruence> {
    let k = match file {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            Congruence::from_json(&text)?
        }
        None if pairs.is_empty() => return Err(Error::Parse("give --congruence or at least one --pair".into())),
        None => generate(pairs)?,
    };
    if k.len() != size {
        return Err(Error::Parse(format!(
            "congruence has {} entries, expected {size}",
            k.len()
        )));
    }
    Ok(k)
}

pub fn monoid_projection(m: &FiniteMonoid, file: Option<&Path>, pairs: &[(usize, usize)]) -> Result<MonoidMorphism> {
    let k = congruence(m.size(), file, pairs, |p| {
        for &(x, y) in p {
            for z in [x, y] {
                if z >= m.size() {
                    return Err(Error::IndexOutOfRange {
                        index: z,
                        size: m.size(),
                    });
                }
            }
        }
        Ok(congruence_generated(m, p))
    })?;
    Ok(quotient(m, &k)?.1)
}

pub fn category_projection(c: &FiniteCategory, file: Option<&Path>, pairs: &[(usize, usize)]) -> Result<CatMorphism> {
    let k = congruence(c.num_arrows(), file, pairs, |p| cat_congruence_generated(c, p))?;
    Ok(cat_quotient(c, &k)?.1)
}
