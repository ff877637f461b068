mod common;

use std::sync::Arc;

use hopfian::act::ActHom;
use hopfian::congruence::{congruence_closure, image_congruence, kernel_congruence, Relation};
use hopfian::decide::{i_chain_index, k_chain_index, Criterion};
use hopfian::endo::is_strongly_pi_regular;
use hopfian::format::{parse_input, InputDocument, NamedAct, NamedMonoid};
use hopfian::harness::sample_instances;
use hopfian::monoid::{direct_product, split_index, validate_monoid};
use hopfian::{Act, Congruence, Decider, Monoid};
use proptest::prelude::*;
use proptest::sample::Index;

use common::corpus;

fn corpus_act() -> impl Strategy<Value = Act> {
    any::<Index>().prop_map(|i| i.get(&corpus().acts).clone())
}

/// Random act of size ≤ 6 over a random transformation monoid of size ≤ 8.
fn sampled_act() -> impl Strategy<Value = Act> {
    any::<u64>().prop_map(|seed| sample_instances(seed, 1).unwrap().1.remove(0))
}

fn any_act() -> impl Strategy<Value = Act> {
    prop_oneof![corpus_act(), sampled_act()]
}

fn any_monoid() -> impl Strategy<Value = Arc<Monoid>> {
    prop_oneof![
        any::<Index>().prop_map(|i| i.get(&corpus().monoids).clone()),
        any::<u64>().prop_map(|seed| sample_instances(seed, 1).unwrap().0.remove(0)),
    ]
}

fn act_with_endo() -> impl Strategy<Value = (Act, ActHom)> {
    (any_act(), any::<Index>()).prop_map(|(act, i)| {
        let end = Decider::default().end_monoid(&act).unwrap();
        let f = i.get(end.elements()).clone();
        (act, f)
    })
}

fn act_with_congruence() -> impl Strategy<Value = (Act, Congruence)> {
    (any_act(), any::<Index>()).prop_map(|(act, i)| {
        let lattice = Decider::default().congruences(&act).unwrap();
        let rho = i.get(&lattice).clone();
        (act, rho)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn right_relation_is_a_kernel_congruence(m in any_monoid(), s in any::<Index>()) {
        let s = s.index(m.size());
        let regular = Act::regular(m.clone());
        let r = m.right_relation(s);
        let lambda = ActHom::left_translation(&regular, s);
        prop_assert_eq!(&r, &kernel_congruence(&lambda).into_partition());
        prop_assert!(Congruence::new(&regular, r).is_ok());
    }

    #[test]
    fn powers_add(m in any_monoid(), s in any::<Index>(), a in 1usize..6, b in 1usize..6) {
        let s = s.index(m.size());
        prop_assert_eq!(m.power(s, a + b), m.mul(m.power(s, a), m.power(s, b)));
    }

    #[test]
    fn eventual_idempotence(m in any_monoid()) {
        for s in m.elements() {
            let found = (1..=m.size()).any(|n| {
                let sn = m.power(s, n);
                m.elements().any(|t| m.mul(m.power(s, n + 1), t) == sn)
            });
            prop_assert!(found);
        }
    }

    #[test]
    fn product_projections_are_homomorphisms(
        i in any::<Index>(), j in any::<Index>(), x in any::<Index>(), y in any::<Index>()
    ) {
        let ms = &corpus().monoids;
        let (a, b) = (i.get(ms), j.get(ms));
        let p = direct_product(&[(**a).clone(), (**b).clone()]).unwrap();
        let sizes = [a.size(), b.size()];
        let (x, y) = (x.index(p.size()), y.index(p.size()));
        let (cx, cy, cxy) = (split_index(&sizes, x), split_index(&sizes, y), split_index(&sizes, p.mul(x, y)));
        prop_assert_eq!(cxy[0], a.mul(cx[0], cy[0]));
        prop_assert_eq!(cxy[1], b.mul(cx[1], cy[1]));
        prop_assert_eq!(split_index(&sizes, p.identity()), vec![0, 0]);
    }

    #[test]
    fn validation_relabels_to_an_isomorphic_table(m in any_monoid(), seed in any::<u64>()) {
        let n = m.size();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for k in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (state >> 33) as usize % (k + 1));
        }
        let mut inverse = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|s| (0..n).map(|t| perm[m.mul(inverse[s], inverse[t])]).collect())
            .collect();
        let (v, relabel) = validate_monoid(n, &rows).unwrap();
        prop_assert_eq!(v.identity(), 0);
        for s in 0..n {
            for t in 0..n {
                prop_assert_eq!(relabel[rows[s][t]], v.mul(relabel[s], relabel[t]));
            }
        }
    }

    #[test]
    fn images_are_subacts((act, f) in act_with_endo()) {
        let image = f.image_subact();
        prop_assert!(act.is_closed(image.members()));
        prop_assert_eq!(image.members(), &f.image()[..]);
    }

    #[test]
    fn canonical_epimorphism_has_kernel_rho((act, rho) in act_with_congruence()) {
        let (factor, pi) = act.quotient(&rho);
        prop_assert_eq!(factor.size(), rho.num_classes());
        prop_assert!(pi.is_surjective());
        prop_assert_eq!(kernel_congruence(&pi), rho);
    }

    #[test]
    fn powers_compose((_act, f) in act_with_endo(), a in 1usize..5, b in 1usize..5) {
        let lhs = f.power(a + b).unwrap();
        let rhs = ActHom::compose(&f.power(a).unwrap(), &f.power(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_and_image_are_congruences((act, f) in act_with_endo()) {
        prop_assert!(Congruence::new(&act, kernel_congruence(&f).into_partition()).is_ok());
        prop_assert!(Congruence::new(&act, image_congruence(&f).unwrap().into_partition()).is_ok());
    }

    #[test]
    fn chains_are_monotone_and_bounded((act, f) in act_with_endo()) {
        for n in 1..=act.size() + 1 {
            let (fn_, fn1) = (f.power(n).unwrap(), f.power(n + 1).unwrap());
            prop_assert!(kernel_congruence(&fn_).is_subset(&kernel_congruence(&fn1)));
            prop_assert!(image_congruence(&fn1).unwrap().is_subset(&image_congruence(&fn_).unwrap()));
        }
        prop_assert!(k_chain_index(&f).unwrap().index <= act.size());
        prop_assert!(i_chain_index(&f).unwrap().index <= act.size());
    }

    #[test]
    fn surjective_iff_injective_on_finite_acts((_act, f) in act_with_endo()) {
        prop_assert_eq!(f.is_surjective(), f.is_injective());
    }

    #[test]
    fn closure_is_the_least_congruence(act in any_act(), pairs in prop::collection::vec((any::<Index>(), any::<Index>()), 0..4)) {
        let n = act.size();
        let relation = Relation::from_pairs(n, pairs.iter().map(|(a, b)| (a.index(n), b.index(n))));
        let closure = congruence_closure(&act, &relation).unwrap();
        prop_assert!(relation.pairs().all(|(a, b)| closure.related(a, b)));
        prop_assert!(Congruence::new(&act, closure.partition().clone()).is_ok());
        for rho in Decider::default().congruences(&act).unwrap() {
            if relation.pairs().all(|(a, b)| rho.related(a, b)) {
                prop_assert!(closure.is_subset(&rho));
            }
        }
    }

    #[test]
    fn meet_and_join_absorb((_act, rho) in act_with_congruence(), sigma in any::<Index>()) {
        let lattice = Decider::default().congruences(rho.act()).unwrap();
        let sigma = sigma.get(&lattice);
        prop_assert_eq!(rho.join(&rho.meet(sigma).unwrap()).unwrap(), rho.clone());
        prop_assert_eq!(rho.meet(&rho.join(sigma).unwrap()).unwrap(), rho.clone());
        prop_assert_eq!(rho.join(sigma).unwrap(), sigma.join(&rho).unwrap());
    }

    #[test]
    fn pi_regular_end_gives_both_strong_properties(act in any_act()) {
        let decider = Decider::default();
        let end = decider.end_monoid(&act).unwrap();
        if is_strongly_pi_regular(&end).holds {
            prop_assert!(decider.is_strongly_hopfian(&act, Criterion::Definition).unwrap().holds);
            prop_assert!(decider.is_strongly_co_hopfian(&act, Criterion::Definition).unwrap().holds);
        }
    }

    #[test]
    fn documents_round_trip(acts in prop::collection::vec(any_act(), 1..4)) {
        let mut doc = InputDocument::default();
        for (i, act) in acts.iter().enumerate() {
            let monoid = format!("M{i}");
            doc.monoids.push(NamedMonoid { name: monoid.clone(), monoid: act.monoid().clone() });
            doc.acts.push(NamedAct { name: format!("A{i}"), monoid, act: act.clone() });
        }
        prop_assert_eq!(parse_input(&doc.to_text()).unwrap(), doc);
    }
}
