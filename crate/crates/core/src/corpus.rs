//! Seeded test corpora: random transformation monoids, Karoubi-envelope
//! categories and quotient morphisms between them.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{cat_congruence_generated, cat_quotient, CatMorphism, FiniteCategory};
use crate::congruence::Congruence;
use crate::monoid::{monoid_from_generators, ElementId, FiniteMonoid};
use crate::zoo;

/// Distinct random transformation monoids with at most `max_size` elements,
/// each generated by one or two maps on two to four points.
pub fn random_monoids(seed: u64, count: usize, max_size: usize) -> Vec<(String, FiniteMonoid)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 200 {
        attempts += 1;
        let degree = rng.gen_range(2..=4);
        let ngens = rng.gen_range(1..=2);
        let gens: Vec<Vec<usize>> = (0..ngens)
            .map(|_| (0..degree).map(|_| rng.gen_range(0..degree)).collect())
            .collect();
        let Ok(t) = monoid_from_generators(degree, &gens, max_size) else {
            continue;
        };
        if seen.insert(t.monoid.rows()) {
            out.push((format!("rand{}", out.len()), t.monoid));
        }
    }
    out
}

/// Karoubi envelope restricted to the given idempotents: objects are the
/// idempotents, arrows `e -> f` are the elements of `eMf`.
pub fn karoubi(m: &FiniteMonoid, idempotents: &[ElementId]) -> FiniteCategory {
    let mut arrows = Vec::new();
    let mut label: Vec<(usize, ElementId, usize)> = Vec::new();
    for (i, &e) in idempotents.iter().enumerate() {
        for (j, &f) in idempotents.iter().enumerate() {
            let mut hom: Vec<ElementId> = m.elements().map(|x| m.mul(m.mul(e, x), f)).collect();
            hom.sort_unstable();
            hom.dedup();
            for x in hom {
                arrows.push((i, j));
                label.push((i, x, j));
            }
        }
    }
    let identities = idempotents
        .iter()
        .enumerate()
        .map(|(i, &e)| label.iter().position(|&l| l == (i, e, i)).unwrap())
        .collect();
    FiniteCategory::new(idempotents.len(), arrows, identities, |a, b| {
        let (i, x, j) = label[a];
        let (k, y, l) = label[b];
        (j == k).then(|| label.iter().position(|&t| t == (i, m.mul(x, y), l)).unwrap())
    })
    .expect("Karoubi envelopes are categories")
}

/// Builtin categories plus random Karoubi envelopes of random monoids with
/// at most `max_objects` objects and `max_arrows` arrows.
pub fn random_categories(
    seed: u64,
    count: usize,
    max_objects: usize,
    max_arrows: usize,
) -> Vec<(String, FiniteCategory)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6361_7473);
    let pool: Vec<FiniteMonoid> = random_monoids(seed, 120, 6)
        .into_iter()
        .map(|(_, m)| m)
        .chain(zoo::builtin_monoids(8).into_iter().map(|(_, m)| m))
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 100 {
        attempts += 1;
        let m = pool.choose(&mut rng).unwrap();
        let mut idem = m.idempotents();
        idem.shuffle(&mut rng);
        let k = rng.gen_range(1..=max_objects.min(idem.len()));
        idem.truncate(k);
        idem.sort_unstable();
        let c = karoubi(m, &idem);
        if c.num_arrows() > max_arrows || !seen.insert(c.to_json()) {
            continue;
        }
        out.push((format!("karoubi{}", out.len()), c));
    }
    out
}

/// Quotient morphisms out of each category: every principal congruence plus
/// a few random two-pair joins, and the identity.
pub fn quotient_morphisms(
    seed: u64,
    categories: &[(String, FiniteCategory)],
    per_category: usize,
) -> Vec<(String, CatMorphism)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7175_6f74);
    let mut out = Vec::new();
    for (name, c) in categories {
        let pairs: Vec<(usize, usize)> = (0..c.num_arrows())
            .flat_map(|x| (x + 1..c.num_arrows()).map(move |y| (x, y)))
            .filter(|&(x, y)| c.coterminal(x, y))
            .collect();
        let mut seen: HashSet<Congruence> = HashSet::new();
        let mut push = |k: Congruence, out: &mut Vec<(String, CatMorphism)>| {
            if seen.insert(k.clone()) {
                let (_, phi) = cat_quotient(c, &k).expect("generated congruences are valid");
                out.push((format!("{name}/q{}", seen.len() - 1), phi));
            }
        };
        push(Congruence::trivial(c.num_arrows()), &mut out);
        let mut chosen = pairs.clone();
        chosen.shuffle(&mut rng);
        for &(x, y) in chosen.iter().take(per_category) {
            push(cat_congruence_generated(c, &[(x, y)]).unwrap(), &mut out);
        }
        if pairs.len() >= 2 {
            for _ in 0..per_category / 2 {
                let two: Vec<_> = pairs.choose_multiple(&mut rng, 2).copied().collect();
                push(cat_congruence_generated(c, &two).unwrap(), &mut out);
            }
        }
    }
    out
}
