use proptest::prelude::*;

use semicat::category::{cat_congruence_generated, cat_quotient, is_mpq, mpq_factorize, CatMorphism, FiniteCategory};
use semicat::congruence::{congruence_generated, quotient, Congruence};
use semicat::corpus::karoubi;
use semicat::ggm::{ggm_congruence, lh_canonical_congruence};
use semicat::groups::{all_normal_subgroups, h_radical, is_normal, FiniteGroup};
use semicat::lh::is_lh_morphism;
use semicat::monoid::{monoid_from_generators, FiniteMonoid};
use semicat::rees::rees_representation;
use semicat::{greens, oracle, pvar, zoo};

fn monoid() -> impl Strategy<Value = FiniteMonoid> {
    (2usize..=4)
        .prop_flat_map(|n| prop::collection::vec(prop::collection::vec(0..n, n), 1..=2).prop_map(move |g| (n, g)))
        .prop_filter_map("too large", |(n, gens)| {
            monoid_from_generators(n, &gens, 12).ok().map(|t| t.monoid)
        })
}

fn monoid_with_pairs() -> impl Strategy<Value = (FiniteMonoid, Vec<(usize, usize)>)> {
    monoid().prop_flat_map(|m| {
        let n = m.size();
        (Just(m), prop::collection::vec((0..n, 0..n), 0..3))
    })
}

fn group() -> impl Strategy<Value = FiniteGroup> {
    prop::sample::select(vec!["c4", "c6", "s3", "d4", "q8", "c2xc2", "a4", "c5"]).prop_map(|n| {
        match zoo::lookup(n).unwrap() {
            zoo::ZooEntry::Monoid(m) => FiniteGroup::from_monoid(m).unwrap(),
            zoo::ZooEntry::Category(_) => unreachable!(),
        }
    })
}

fn category() -> impl Strategy<Value = FiniteCategory> {
    monoid().prop_flat_map(|m| {
        let idem = m.idempotents();
        prop::sample::subsequence(idem.clone(), 1..=idem.len().min(3)).prop_map(move |s| karoubi(&m, &s))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_congruence_is_least((m, pairs) in monoid_with_pairs()) {
        let c = congruence_generated(&m, &pairs);
        c.check_compatible(&m).unwrap();
        for &(x, y) in &pairs {
            prop_assert!(c.related(x, y));
        }
        let (q, p) = quotient(&m, &c).unwrap();
        q.validate().unwrap();
        prop_assert_eq!(p.kernel(), c);
    }

    #[test]
    fn meet_of_congruences_is_congruence((m, pairs) in monoid_with_pairs(), x in 0usize..12, y in 0usize..12) {
        let a = congruence_generated(&m, &pairs);
        let b = congruence_generated(&m, &[(x % m.size(), y % m.size())]);
        let c = a.meet(&b);
        c.check_compatible(&m).unwrap();
        prop_assert!(c.refines(&a) && c.refines(&b));
    }

    #[test]
    fn congruence_json_round_trip((m, pairs) in monoid_with_pairs()) {
        let c = congruence_generated(&m, &pairs);
        prop_assert_eq!(Congruence::from_json(&c.to_json()).unwrap(), c);
        prop_assert_eq!(FiniteMonoid::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn greens_matches_ideal_oracle(m in monoid()) {
        let g = greens(&m);
        let naive = oracle::greens_naive(&m);
        prop_assert_eq!(Congruence::from_labels(&g.r_class), naive.r);
        prop_assert_eq!(Congruence::from_labels(&g.l_class), naive.l);
        prop_assert_eq!(Congruence::from_labels(&g.j_class), naive.j);
    }

    #[test]
    fn greens_invariant_under_relabelling(m in monoid(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (1..m.size()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        perm.insert(0, 0);
        let p = m.permuted(&perm);
        prop_assert_eq!(greens(&m).num_j, greens(&p).num_j);
        prop_assert_eq!(greens(&m).regular_j_classes().len(), greens(&p).regular_j_classes().len());
    }

    #[test]
    fn rees_coordinates_are_bijective_and_multiplicative(m in monoid()) {
        let g = greens(&m);
        for j in g.regular_j_classes() {
            let rep = rees_representation(&m, &g, j).unwrap();
            prop_assert_eq!(rep.members().len(), rep.num_rows() * rep.num_cols() * rep.group.order());
            for &x in rep.members() {
                for &y in rep.members() {
                    prop_assert_eq!(rep.eta(m.mul(x, y)).unwrap(), rep.multiply(rep.eta(x).unwrap(), rep.eta(y).unwrap()));
                }
            }
        }
    }

    #[test]
    fn radical_is_largest_normal_h_subgroup(g in group()) {
        for h in [pvar::p_group(2).unwrap(), pvar::p_group(3).unwrap(), pvar::nilpotent(), pvar::solvable()] {
            let rad = h_radical(&g, &h).unwrap();
            prop_assert!(is_normal(&g, &rad));
            for n in all_normal_subgroups(&g, 128).unwrap() {
                if h.contains_group(&g.subgroup_table(&n)).unwrap() {
                    prop_assert!(n.is_subset_of(&rad));
                }
            }
        }
    }

    #[test]
    fn ggm_congruence_coarsens_with_n(m in monoid()) {
        let g = greens(&m);
        for j in g.regular_j_classes() {
            let rep = rees_representation(&m, &g, j).unwrap();
            let normals = all_normal_subgroups(&rep.group, 128).unwrap();
            let ks: Vec<_> = normals.iter().map(|n| ggm_congruence(&m, j, n).unwrap()).collect();
            for (a, na) in normals.iter().enumerate() {
                for (b, nb) in normals.iter().enumerate() {
                    if na.is_subset_of(nb) {
                        prop_assert!(ks[a].refines(&ks[b]));
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_projection_is_lh(m in monoid()) {
        for h in [pvar::trivial_group(), pvar::p_group(2).unwrap(), pvar::all_groups()] {
            let k = lh_canonical_congruence(&m, &h).unwrap();
            let (_, p) = quotient(&m, &k).unwrap();
            prop_assert!(is_lh_morphism(&p, &h).unwrap());
        }
    }

    #[test]
    fn category_json_round_trip(c in category()) {
        c.validate().unwrap();
        prop_assert_eq!(FiniteCategory::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn consolidation_embeds_arrows(c in category()) {
        let (cd, embed) = c.consolidation();
        for x in 0..c.num_arrows() {
            for y in 0..c.num_arrows() {
                match c.compose(x, y) {
                    Some(xy) => prop_assert_eq!(cd.mul(embed[x], embed[y]), embed[xy]),
                    None => prop_assert_eq!(Some(cd.mul(embed[x], embed[y])), cd.zero()),
                }
            }
        }
    }

    #[test]
    fn mpq_chain_composes(c in category(), x in 0usize..64, y in 0usize..64) {
        let pairs: Vec<_> = (0..c.num_arrows())
            .flat_map(|a| (0..c.num_arrows()).map(move |b| (a, b)))
            .filter(|&(a, b)| a < b && c.coterminal(a, b))
            .collect();
        let k = if pairs.is_empty() {
            Congruence::trivial(c.num_arrows())
        } else {
            cat_congruence_generated(&c, &[pairs[x % pairs.len()], pairs[y % pairs.len()]]).unwrap()
        };
        let (_, phi) = cat_quotient(&c, &k).unwrap();
        let chain = mpq_factorize(&phi).unwrap();
        if let Some((first, rest)) = chain.split_first() {
            let mut total: CatMorphism = first.clone();
            for f in rest {
                total = total.then(f).unwrap();
            }
            prop_assert_eq!(total, phi);
            for f in &chain {
                prop_assert!(is_mpq(f).unwrap());
            }
        } else {
            prop_assert!(k.is_trivial());
        }
    }
}
