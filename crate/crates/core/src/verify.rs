//! Named invariant suites run over a seeded corpus.

use rayon::prelude::*;
use serde::Serialize;

use crate::category::{
    ell_malcev_membership, ell_membership, is_lh_morphism_cat, is_minimal_nontrivial, is_mpq, kernel_category,
    mpq_factorize, supertech_check, CatMorphism, FiniteCategory, DEFAULT_KERNEL_OBJECT_CAP,
};
use crate::congruence::{all_congruences, quotient, Congruence, MonoidMorphism};
use crate::corpus;
use crate::error::{Error, Result};
use crate::ggm::{ggm_congruence, ggm_congruence_with, lh_canonical_congruence, malcev_membership};
use crate::greens::greens;
use crate::groups::{all_normal_subgroups, h_radical, is_normal, is_prime, FiniteGroup, DEFAULT_NORMAL_SUBGROUP_CAP};
use crate::lh::{is_lh_morphism, maximal_subgroup};
use crate::monoid::FiniteMonoid;
use crate::oracle;
use crate::pvar::{self, Pseudovariety};
use crate::rees::{rees_representation, rees_representation_with, RepChoice};
use crate::zoo;

pub const SUITES: &[&str] = &[
    "greens",
    "rees",
    "radical-sylow",
    "radcong-idempotent",
    "maximality",
    "membership",
    "putcha-schutzenberger",
    "LHtocd",
    "toconsolidate",
    "technical",
    "kernelin",
    "passtocat",
    "supertech",
    "jrelpasses",
    "maxsubgroups",
    "unionofH",
    "comp",
    "mpq-factor",
];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Largest monoid handed to congruence-lattice oracles.
    pub bound: usize,
    pub random_monoids: usize,
    pub random_max_size: usize,
    pub congruence_cap: usize,
    pub greens_bound: usize,
    pub group_bound: usize,
    pub categories: usize,
    pub morphisms_per_category: usize,
    /// Bounds on categories for the supertech round trip.
    pub tiny_objects: usize,
    pub tiny_arrows: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            bound: 8,
            random_monoids: 200,
            random_max_size: 6,
            congruence_cap: crate::congruence::DEFAULT_CONGRUENCE_CAP,
            greens_bound: 50,
            group_bound: 24,
            categories: 40,
            morphisms_per_category: 4,
            tiny_objects: 2,
            tiny_arrows: 10,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn hs() -> Vec<Pseudovariety> {
    vec![
        pvar::trivial_group(),
        pvar::p_group(2).unwrap(),
        pvar::solvable(),
        pvar::all_groups(),
    ]
}

/// Builtin monoids up to `builtin_bound` followed by the random ones.
pub fn corpus_monoids(cfg: &VerifyConfig, builtin_bound: usize) -> Vec<(String, FiniteMonoid)> {
    let mut out = zoo::builtin_monoids(builtin_bound);
    out.extend(corpus::random_monoids(
        cfg.seed,
        cfg.random_monoids,
        cfg.random_max_size.min(builtin_bound),
    ));
    out
}

pub fn corpus_categories(cfg: &VerifyConfig) -> Vec<(String, FiniteCategory)> {
    let mut out = zoo::builtin_categories();
    out.extend(corpus::random_categories(cfg.seed, cfg.categories, 3, 12));
    out
}

pub fn corpus_morphisms(cfg: &VerifyConfig) -> Vec<(String, CatMorphism)> {
    corpus::quotient_morphisms(cfg.seed, &corpus_categories(cfg), cfg.morphisms_per_category)
}

fn run<T: Sync>(suite: &str, items: &[(String, T)], check: impl Fn(&T) -> Result<Vec<String>> + Sync) -> SuiteReport {
    let failures: Vec<String> = items
        .par_iter()
        .flat_map_iter(|(name, item)| match check(item) {
            Ok(fails) => fails.into_iter().map(|f| format!("{name}: {f}")).collect::<Vec<_>>(),
            Err(e) => vec![format!("{name}: error {e}")],
        })
        .collect();
    SuiteReport {
        suite: suite.to_string(),
        checked: items.len(),
        failures,
    }
}

macro_rules! expect {
    ($fails:ident, $cond:expr, $($msg:tt)*) => {
        if !$cond {
            $fails.push(format!($($msg)*));
        }
    };
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let report = match name {
        "greens" => run(name, &corpus_monoids(cfg, cfg.greens_bound), check_greens),
        "rees" => run(name, &corpus_monoids(cfg, cfg.greens_bound), |m| {
            check_rees(m, cfg.bound)
        }),
        "radical-sylow" => run(name, &corpus_groups(cfg), check_radical_sylow),
        "radcong-idempotent" => run(name, &corpus_monoids(cfg, cfg.bound), check_radcong_idempotent),
        "maximality" => run(name, &corpus_monoids(cfg, cfg.bound), |m| {
            check_maximality(m, cfg.congruence_cap)
        }),
        "membership" => run(name, &corpus_monoids(cfg, cfg.bound), |m| {
            check_membership(m, cfg.congruence_cap)
        }),
        "putcha-schutzenberger" => run(
            name,
            &corpus_monoids(cfg, cfg.greens_bound),
            check_putcha_schutzenberger,
        ),
        "LHtocd" => run(name, &corpus_morphisms(cfg), check_lh_to_cd),
        "toconsolidate" => run(name, &corpus_morphisms(cfg), check_to_consolidate),
        "technical" => run(name, &corpus_categories(cfg), check_technical),
        "kernelin" => run(name, &corpus_morphisms(cfg), check_kernel_in),
        "passtocat" => run(name, &corpus_morphisms(cfg), check_pass_to_cat),
        "supertech" => {
            let tiny: Vec<_> = corpus_categories(cfg)
                .into_iter()
                .filter(|(_, c)| c.num_objects() <= cfg.tiny_objects && c.num_arrows() <= cfg.tiny_arrows)
                .collect();
            run(name, &tiny, |c| check_supertech(c, cfg.tiny_arrows))
        }
        "jrelpasses" => run(name, &corpus_categories(cfg), check_j_rel_passes),
        "maxsubgroups" => run(name, &corpus_categories(cfg), check_max_subgroups),
        "unionofH" => run(name, &corpus_categories(cfg), check_union_of_h),
        "comp" => run(name, &corpus_monoids(cfg, cfg.random_max_size), |m| {
            check_comp(m, cfg.congruence_cap)
        }),
        "mpq-factor" => run(name, &corpus_morphisms(cfg), check_mpq_factor),
        _ => return Err(Error::UnknownName(format!("suite {name}"))),
    };
    Ok(report)
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s, cfg).expect("registered suite"))
        .collect()
}

fn check_greens(m: &FiniteMonoid) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let g = greens(m);
    let naive = oracle::greens_naive(m);
    let r = Congruence::from_labels(&g.r_class);
    let l = Congruence::from_labels(&g.l_class);
    expect!(fails, r == naive.r, "R differs from the ideal oracle");
    expect!(fails, l == naive.l, "L differs from the ideal oracle");
    expect!(
        fails,
        Congruence::from_labels(&g.j_class) == naive.j,
        "J differs from the ideal oracle"
    );
    expect!(
        fails,
        Congruence::from_labels(&g.h_class) == r.meet(&l),
        "H is not R ∧ L"
    );
    for j in 0..g.num_j {
        let members = g.j_members(j);
        for &x in &members {
            for &y in &members {
                let meets = members
                    .iter()
                    .any(|&z| g.r_class[z] == g.r_class[x] && g.l_class[z] == g.l_class[y]);
                expect!(fails, meets, "egg-box fails in J-class {j}");
            }
        }
        let has_idem = members.iter().any(|&x| m.is_idempotent(x));
        expect!(fails, g.is_regular(j) == has_idem, "regular flag wrong on J-class {j}");
    }
    Ok(fails)
}

fn check_rees(m: &FiniteMonoid, independence_bound: usize) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let g = greens(m);
    for j in g.regular_j_classes() {
        let rep = rees_representation(m, &g, j)?;
        for &x in rep.members() {
            let (a, gi, b) = rep.coord(x).unwrap();
            expect!(fails, rep.uncoord(a, gi, b) == x, "coord/uncoord disagree at {x}");
        }
        for n in all_normal_subgroups(&rep.group, DEFAULT_NORMAL_SUBGROUP_CAP)? {
            let red = rep.reduce(&n)?;
            for &x in rep.members() {
                for &y in rep.members() {
                    let lhs = red.psi(rep.eta(m.mul(x, y))?);
                    let rhs = red.multiply(red.psi(rep.eta(x)?), red.psi(rep.eta(y)?));
                    expect!(fails, lhs == rhs, "ψ not multiplicative on ({x}, {y}) at J-class {j}");
                }
            }
        }
        if m.size() <= independence_bound {
            let other = rees_representation_with(m, &g, j, RepChoice::Greatest)?;
            for h in hs() {
                let k1 = ggm_congruence_with(m, &g, &rep, &h_radical(&rep.group, &h)?)?;
                let k2 = ggm_congruence_with(m, &g, &other, &h_radical(&other.group, &h)?)?;
                let (q1, _) = quotient(m, &k1)?;
                let (q2, _) = quotient(m, &k2)?;
                expect!(
                    fails,
                    k1 == k2,
                    "GGM congruence depends on representatives at J-class {j}"
                );
                expect!(
                    fails,
                    oracle::isomorphic(&q1, &q2),
                    "GGM quotients not isomorphic at J-class {j}"
                );
            }
        }
    }
    Ok(fails)
}

fn corpus_groups(cfg: &VerifyConfig) -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    let mut push = |name: String, g: FiniteGroup| {
        if g.order() <= cfg.group_bound && !out.iter().any(|(_, h)| h.as_monoid().rows() == g.as_monoid().rows()) {
            out.push((name, g));
        }
    };
    for (name, m) in corpus_monoids(cfg, cfg.greens_bound) {
        for e in m.idempotents() {
            if let Ok((g, _)) = maximal_subgroup(&m, e) {
                push(format!("{name}@{e}"), g);
            }
        }
    }
    for n in 1..=cfg.group_bound {
        push(format!("c{n}"), FiniteGroup::from_monoid(zoo::cyclic_group(n)).unwrap());
    }
    for n in 3..=cfg.group_bound / 2 {
        push(format!("d{n}"), FiniteGroup::from_monoid(zoo::dihedral(n)).unwrap());
    }
    let c2 = zoo::cyclic_group(2);
    push(
        "c2^3".into(),
        FiniteGroup::from_monoid(c2.direct_product(&c2).direct_product(&c2)).unwrap(),
    );
    push(
        "s3xc2".into(),
        FiniteGroup::from_monoid(zoo::s3().direct_product(&c2)).unwrap(),
    );
    push(
        "q8xc2".into(),
        FiniteGroup::from_monoid(zoo::q8().direct_product(&c2)).unwrap(),
    );
    out
}

fn check_radical_sylow(g: &FiniteGroup) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    for p in (2..=g.order()).filter(|&p| is_prime(p) && g.order().is_multiple_of(p)) {
        let rad = h_radical(g, &pvar::p_group(p)?)?;
        let syl = oracle::sylow_intersection(g, p)?;
        expect!(fails, rad == syl, "Rad_G{p} differs from the Sylow intersection");
    }
    let normals = all_normal_subgroups(g, DEFAULT_NORMAL_SUBGROUP_CAP)?;
    for h in hs().into_iter().chain([pvar::nilpotent(), pvar::p_group(3)?]) {
        let rad = h_radical(g, &h)?;
        expect!(fails, is_normal(g, &rad), "Rad_{} not normal", h.name());
        expect!(
            fails,
            h.contains_group(&g.subgroup_table(&rad))?,
            "Rad_{} not in H",
            h.name()
        );
        for n in &normals {
            if h.contains_group(&g.subgroup_table(n))? {
                expect!(
                    fails,
                    n.is_subset_of(&rad),
                    "Rad_{} misses a normal H-subgroup",
                    h.name()
                );
            }
        }
    }
    Ok(fails)
}

fn check_radcong_idempotent(m: &FiniteMonoid) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let g = greens(m);
    for j in g.regular_j_classes() {
        let rep = rees_representation(m, &g, j)?;
        for n in all_normal_subgroups(&rep.group, DEFAULT_NORMAL_SUBGROUP_CAP)? {
            let restricted = ggm_congruence(m, j, &n)?;
            let full = oracle::radcong_unrestricted(m, j, &n)?;
            expect!(
                fails,
                restricted == full,
                "idempotent contexts differ at J-class {j}, |N| = {}",
                n.order()
            );
        }
    }
    Ok(fails)
}

fn check_maximality(m: &FiniteMonoid, cap: usize) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    for h in hs() {
        let canon = lh_canonical_congruence(m, &h)?;
        let lh = oracle::lh_congruences(m, &h, cap)?;
        for c in &lh {
            expect!(
                fails,
                c.refines(&canon),
                "{}: an LH congruence escapes the canonical one",
                h.name()
            );
        }
        expect!(
            fails,
            lh.contains(&canon),
            "{}: canonical congruence is not an LH congruence",
            h.name()
        );
    }
    Ok(fails)
}

fn check_membership(m: &FiniteMonoid, cap: usize) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let sl = pvar::semilattice();
    for h in hs() {
        let fast = malcev_membership(m, &h, &sl)?;
        let slow = oracle::exists_lh_quotient_in(m, &h, &sl, cap)?;
        expect!(fails, fast == slow, "{}: decision {fast}, brute force {slow}", h.name());
    }
    Ok(fails)
}

fn check_putcha_schutzenberger(m: &FiniteMonoid) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let sl = pvar::semilattice();
    for h in hs() {
        let lhs = malcev_membership(m, &h, &sl)?;
        let rhs = pvar::is_ds(m) && pvar::subgroups_in(m, &h)?;
        expect!(fails, lhs == rhs, "{}: Mal'cev {lhs}, DS ∩ H̄ {rhs}", h.name());
    }
    Ok(fails)
}

fn check_lh_to_cd(phi: &CatMorphism) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let cd = phi.consolidated();
    for h in hs() {
        let local = is_lh_morphism_cat(phi, &h)?;
        let direct = oracle::is_lh_morphism_cat_direct(phi, &h)?;
        let consolidated = is_lh_morphism(&cd, &h)?;
        expect!(
            fails,
            local == direct,
            "{}: local {local}, definition {direct}",
            h.name()
        );
        expect!(
            fails,
            local == consolidated,
            "{}: category {local}, consolidation {consolidated}",
            h.name()
        );
    }
    Ok(fails)
}

fn check_to_consolidate(phi: &CatMorphism) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let mpq = is_minimal_nontrivial(&phi.source, &phi.kernel())?;
    let mps = oracle::is_mps(&phi.consolidated())?;
    expect!(fails, mpq == mps, "MPQ {mpq}, MPS of consolidation {mps}");
    Ok(fails)
}

fn check_technical(c: &FiniteCategory) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let (cd, embed) = c.consolidation();
    let g = greens(&cd);
    let locals: Vec<_> = (0..c.num_objects())
        .map(|o| c.local_monoid_at(o))
        .collect::<Result<_>>()?;
    for j in g.regular_j_classes() {
        let rep = rees_representation(&cd, &g, j)?;
        for h in hs() {
            let big = ggm_congruence_with(&cd, &g, &rep, &h_radical(&rep.group, &h)?)?;
            for (o, (local, arrows)) in locals.iter().enumerate() {
                let labels: Vec<usize> = arrows.iter().map(|&a| big.class_of(embed[a])).collect();
                let restricted = Congruence::from_labels(&labels);
                let hit = arrows.iter().position(|&a| g.j_class[embed[a]] == j);
                let expected = match hit {
                    None => Congruence::universal(local.size()),
                    Some(i) => {
                        let lg = greens(local);
                        let jc = lg.j_class[i];
                        let lrep = rees_representation(local, &lg, jc)?;
                        ggm_congruence_with(local, &lg, &lrep, &h_radical(&lrep.group, &h)?)?
                    }
                };
                expect!(
                    fails,
                    restricted == expected,
                    "{}: J-class {j} restricted to object {o} differs",
                    h.name()
                );
            }
        }
    }
    Ok(fails)
}

fn check_kernel_in(phi: &CatMorphism) -> Result<Vec<String>> {
    Ok(oracle::kernel_embeds_in_consolidation(phi)?.err().into_iter().collect())
}

fn check_pass_to_cat(phi: &CatMorphism) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    if phi.kernel().is_trivial() || !is_mpq(phi)? {
        return Ok(fails);
    }
    let k = kernel_category(phi, DEFAULT_KERNEL_OBJECT_CAP)?;
    for h in [pvar::p_group(2)?, pvar::solvable(), pvar::all_groups()] {
        if is_lh_morphism_cat(phi, &h)? {
            expect!(
                fails,
                ell_membership(&k.category, &h)?,
                "{}: MPQ LH-morphism with K_φ ∉ ℓH",
                h.name()
            );
        }
    }
    Ok(fails)
}

fn check_supertech(c: &FiniteCategory, cap: usize) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let sl = pvar::semilattice();
    for h in hs() {
        let (_, member) = supertech_check(c, &h, &sl)?;
        expect!(
            fails,
            member == ell_malcev_membership(c, &h, &sl)?,
            "{}: membership unstable",
            h.name()
        );
        let brute = oracle::exists_lh_quotient_in_ell(c, &h, &sl, cap)?;
        expect!(
            fails,
            member == brute,
            "{}: ℓ(LH ⓜ Sl) {member}, LH quotient into ℓSl {brute}",
            h.name()
        );
    }
    Ok(fails)
}

fn check_j_rel_passes(c: &FiniteCategory) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let (cd, embed) = c.consolidation();
    let g = greens(&cd);
    for o in 0..c.num_objects() {
        let (local, arrows) = c.local_monoid_at(o)?;
        let lg = greens(&local);
        for x in local.elements() {
            for y in local.elements() {
                let big = g.j_class[embed[arrows[x]]] == g.j_class[embed[arrows[y]]];
                let small = lg.j_class[x] == lg.j_class[y];
                expect!(fails, big == small, "object {o}: J on ({x}, {y}) differs");
            }
        }
    }
    Ok(fails)
}

fn check_max_subgroups(c: &FiniteCategory) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let (cd, embed) = c.consolidation();
    let g = greens(&cd);
    for o in 0..c.num_objects() {
        let (local, arrows) = c.local_monoid_at(o)?;
        let lg = greens(&local);
        for x in local.elements() {
            let mut big: Vec<usize> = g.h_members(g.h_class[embed[arrows[x]]]);
            big.sort_unstable();
            let mut small: Vec<usize> = lg
                .h_members(lg.h_class[x])
                .into_iter()
                .map(|y| embed[arrows[y]])
                .collect();
            small.sort_unstable();
            expect!(fails, big == small, "object {o}: H-class of {x} differs");
            if local.is_idempotent(x) {
                let (gb, _) = maximal_subgroup(&cd, embed[arrows[x]])?;
                let (gs, _) = maximal_subgroup(&local, x)?;
                expect!(
                    fails,
                    oracle::isomorphic(gb.as_monoid(), gs.as_monoid()),
                    "object {o}: maximal subgroup at {x} differs"
                );
            }
        }
    }
    Ok(fails)
}

fn check_union_of_h(c: &FiniteCategory) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let (cd, embed) = c.consolidation();
    let g = greens(&cd);
    for o in 0..c.num_objects() {
        let (local, arrows) = c.local_monoid_at(o)?;
        let lg = greens(&local);
        for j in 0..g.num_j {
            let jc: Vec<usize> = (0..local.size())
                .filter(|&x| g.j_class[embed[arrows[x]]] == j)
                .collect();
            if jc.is_empty() {
                continue;
            }
            let lj = lg.j_class[jc[0]];
            expect!(fails, lg.j_members(lj) == jc, "object {o}: J ∩ C_c is not a J-class");
            for &x in &jc {
                let hc = g.h_members(g.h_class[embed[arrows[x]]]);
                let inside = hc.iter().all(|&y| jc.iter().any(|&z| embed[arrows[z]] == y));
                expect!(fails, inside, "object {o}: J ∩ C_c is not a union of H-classes");
            }
            expect!(
                fails,
                g.is_regular(j) == lg.is_regular(lj),
                "object {o}: regularity differs"
            );
        }
    }
    Ok(fails)
}

fn check_comp(m: &FiniteMonoid, cap: usize) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let congruences = all_congruences(m, cap)?;
    let projections: Vec<_> = congruences.iter().map(|c| quotient(m, c)).collect::<Result<_>>()?;
    for h in hs() {
        let lh: Vec<bool> = projections
            .iter()
            .map(|(_, p)| is_lh_morphism(p, &h))
            .collect::<Result<_>>()?;
        for (i, fine) in congruences.iter().enumerate() {
            for (k, coarse) in congruences.iter().enumerate() {
                if !lh[k] || !fine.refines(coarse) {
                    continue;
                }
                let (qf, _) = &projections[i];
                let (qc, _) = &projections[k];
                let map = fine.representatives().iter().map(|&r| coarse.class_of(r)).collect();
                let psi = MonoidMorphism::new(qf.clone(), qc.clone(), map)?;
                expect!(fails, lh[i], "{}: γ not LH although φ = ψγ is", h.name());
                expect!(
                    fails,
                    is_lh_morphism(&psi, &h)?,
                    "{}: ψ not LH although φ = ψγ is",
                    h.name()
                );
            }
        }
    }
    Ok(fails)
}

fn check_mpq_factor(phi: &CatMorphism) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let chain = mpq_factorize(phi)?;
    if chain.is_empty() {
        expect!(
            fails,
            phi.kernel().is_trivial(),
            "empty chain for a non-injective morphism"
        );
        return Ok(fails);
    }
    let mut composite = chain[0].clone();
    for f in &chain[1..] {
        composite = composite.then(f)?;
    }
    expect!(fails, composite == *phi, "chain does not compose to φ");
    for (i, f) in chain.iter().enumerate() {
        expect!(fails, is_mpq(f)?, "factor {i} is not an MPQ");
    }
    for h in hs() {
        if is_lh_morphism_cat(phi, &h)? {
            for (i, f) in chain.iter().enumerate() {
                expect!(fails, is_lh_morphism_cat(f, &h)?, "{}: factor {i} is not LH", h.name());
            }
        }
    }
    Ok(fails)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            run_suite("nope", &VerifyConfig::default()),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn small_run_of_every_suite() {
        let cfg = VerifyConfig {
            random_monoids: 10,
            categories: 4,
            morphisms_per_category: 2,
            ..Default::default()
        };
        for name in SUITES {
            let r = run_suite(name, &cfg).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.failures);
            assert!(r.checked > 0, "{name}");
        }
    }
}
