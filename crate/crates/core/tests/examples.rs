use semicat::category::{ell_malcev_membership, is_lh_morphism_cat, kernel_category, supertech_check, CatMorphism};
use semicat::congruence::{quotient, Congruence};
use semicat::ggm::{lh_canonical_congruence, malcev_membership};
use semicat::groups::{h_radical, FiniteGroup};
use semicat::lh::is_lh_morphism;
use semicat::{greens, pvar, zoo};

#[test]
fn brandt_monoid_structure() {
    let b = zoo::b21();
    let g = greens(&b);
    assert_eq!(g.num_j, 3);
    assert_eq!(g.regular_j_classes().len(), 3);
    assert!(!pvar::is_ds(&b));
    let sl = pvar::semilattice();
    for h in [pvar::trivial_group(), pvar::all_groups()] {
        assert!(!malcev_membership(&b, &h, &sl).unwrap());
    }
}

#[test]
fn brandt_onto_u1_is_not_lh() {
    let b = zoo::b21();
    let one = b.identity().unwrap();
    let labels: Vec<usize> = b.elements().map(|x| usize::from(x != one)).collect();
    let (_, p) = quotient(&b, &Congruence::from_labels(&labels)).unwrap();
    assert_eq!(p.target.size(), 2);
    assert!(!is_lh_morphism(&p, &pvar::all_groups()).unwrap());
}

#[test]
fn groups_collapse_under_their_own_pseudovariety() {
    let s3 = zoo::s3();
    let k = lh_canonical_congruence(&s3, &pvar::solvable()).unwrap();
    assert!(k.is_universal());
    let k = lh_canonical_congruence(&s3, &pvar::p_group(3).unwrap()).unwrap();
    assert_eq!(k.num_classes(), 2);
    let g = FiniteGroup::from_monoid(s3).unwrap();
    assert_eq!(h_radical(&g, &pvar::p_group(3).unwrap()).unwrap().order(), 3);
    assert_eq!(h_radical(&g, &pvar::p_group(2).unwrap()).unwrap().order(), 1);
}

#[test]
fn groupoid_supertech() {
    let c = zoo::groupoid_c2();
    let h = pvar::p_group(2).unwrap();
    let sl = pvar::semilattice();
    assert!(ell_malcev_membership(&c, &h, &sl).unwrap());
    let (st, member) = supertech_check(&c, &h, &sl).unwrap();
    assert!(member);
    assert!(is_lh_morphism_cat(&st.projection, &h).unwrap());
    for o in 0..c.num_objects() {
        assert_eq!(st.quotient.local_monoid_at(o).unwrap().0.size(), 1);
    }
}

#[test]
fn kernel_of_identity_is_trivial_locally() {
    for (_, c) in zoo::builtin_categories() {
        let k = kernel_category(&CatMorphism::identity(&c), 2000).unwrap();
        for o in 0..k.category.num_objects() {
            assert_eq!(k.category.local_monoid_at(o).unwrap().0.size(), 1);
        }
    }
}
