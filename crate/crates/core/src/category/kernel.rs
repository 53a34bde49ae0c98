use std::collections::HashMap;

use super::{ArrowId, CatMorphism, FiniteCategory, ObjectId};
use crate::error::{Error, Result};

pub const DEFAULT_KERNEL_OBJECT_CAP: usize = 2000;

/// `K_φ` together with the labels of its objects and arrows.
#[derive(Clone, Debug)]
pub struct KernelCategory {
    pub category: FiniteCategory,
    /// Object `i` is the pair `(n_L, n_R)` of target arrows.
    pub objects: Vec<(ArrowId, ArrowId)>,
    /// A representative triple `(n_L, m, n_R)` of each arrow class.
    pub arrows: Vec<(ArrowId, ArrowId, ArrowId)>,
    class_of: HashMap<(ArrowId, ArrowId, ArrowId), ArrowId>,
}

impl KernelCategory {
    pub fn object_index(&self, n_l: ArrowId, n_r: ArrowId) -> Option<ObjectId> {
        self.objects.iter().position(|&p| p == (n_l, n_r))
    }

    /// The arrow of `K_φ` containing the triple `(n_L, m, n_R)`.
    pub fn class_of(&self, n_l: ArrowId, m: ArrowId, n_r: ArrowId) -> Option<ArrowId> {
        self.class_of.get(&(n_l, m, n_r)).copied()
    }
}

/// Builds `W_φ` and its quotient by agreement on all liftings, checking the identification
/// is a congruence.
pub fn kernel_category(phi: &CatMorphism, object_cap: usize) -> Result<KernelCategory> {
    phi.require_quotient()?;
    let c = &phi.source;
    let d = &phi.target;
    let f = &phi.arrow_map;

    let mut objects = Vec::new();
    let mut object_id = HashMap::new();
    for n_l in 0..d.num_arrows() {
        for &n_r in d.out_arrows(d.dst(n_l)) {
            if objects.len() == object_cap {
                return Err(Error::SizeLimitExceeded {
                    what: "kernel category objects",
                    limit: object_cap,
                });
            }
            object_id.insert((n_l, n_r), objects.len());
            objects.push((n_l, n_r));
        }
    }

    let preimages: Vec<Vec<ArrowId>> = (0..d.num_arrows()).map(|b| phi.preimage(b)).collect();

    // Triples (n_L, m, n_R) keyed by endpoints and their values on all liftings.
    let mut class_of: HashMap<(ArrowId, ArrowId, ArrowId), usize> = HashMap::new();
    let mut keys: HashMap<(usize, usize, Vec<ArrowId>), usize> = HashMap::new();
    let mut members: Vec<Vec<(ArrowId, ArrowId, ArrowId)>> = Vec::new();
    let mut ends: Vec<(ObjectId, ObjectId)> = Vec::new();
    for n_l in 0..d.num_arrows() {
        for (&m, &n_r) in c
            .out_arrows(d.dst(n_l))
            .iter()
            .flat_map(|m| d.out_arrows(c.dst(*m)).iter().map(move |n_r| (m, n_r)))
        {
            let from = object_id[&(n_l, d.compose_unchecked(f[m], n_r))];
            let to = object_id[&(d.compose_unchecked(n_l, f[m]), n_r)];
            let mut sig = Vec::with_capacity(preimages[n_l].len() * preimages[n_r].len());
            for &m_l in &preimages[n_l] {
                let lm = c.compose_unchecked(m_l, m);
                for &m_r in &preimages[n_r] {
                    sig.push(c.compose_unchecked(lm, m_r));
                }
            }
            let next = members.len();
            let id = *keys.entry((from, to, sig)).or_insert(next);
            if id == next {
                members.push(Vec::new());
                ends.push((from, to));
            }
            members[id].push((n_l, m, n_r));
            class_of.insert((n_l, m, n_r), id);
        }
    }

    let product = |(n_l, m, _): (ArrowId, ArrowId, ArrowId), (_, m2, n_r): (ArrowId, ArrowId, ArrowId)| {
        class_of[&(n_l, c.compose_unchecked(m, m2), n_r)]
    };
    let reps: Vec<_> = members.iter().map(|v| v[0]).collect();
    for (i, mi) in members.iter().enumerate() {
        for (j, mj) in members.iter().enumerate() {
            if ends[i].1 != ends[j].0 {
                continue;
            }
            let want = product(reps[i], reps[j]);
            let stable =
                mi.iter().all(|&x| product(x, reps[j]) == want) && mj.iter().all(|&y| product(reps[i], y) == want);
            if !stable {
                return Err(Error::InvariantViolation(format!(
                    "kernel identification not compatible on classes {i}, {j}"
                )));
            }
        }
    }

    let identities = objects
        .iter()
        .map(|&(n_l, n_r)| class_of[&(n_l, c.identity(d.dst(n_l)), n_r)])
        .collect();
    let category = FiniteCategory::build(objects.len(), ends.clone(), identities, |i, j| {
        (ends[i].1 == ends[j].0).then(|| product(reps[i], reps[j]))
    })?;
    Ok(KernelCategory {
        category,
        objects,
        arrows: reps,
        class_of,
    })
}
