mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use hopfian::act::ActHom;
use hopfian::congruence::kernel_congruence;
use hopfian::harness::{enumerate_acts, enumerate_monoids};
use hopfian::monoid::validate_monoid;
use hopfian::{Act, Congruence, Decider, Monoid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

/// Corpus acts plus every act of size 5 over the monoids of size ≤ 2.
fn acts_up_to_five() -> Vec<Act> {
    let mut acts = corpus().acts.clone();
    for m in corpus().monoids.iter().filter(|m| m.size() <= 2) {
        acts.extend(enumerate_acts(m, 5).unwrap());
    }
    acts
}

#[test]
fn homomorphisms_match_all_maps() {
    let decider = Decider::default();
    let acts = acts_up_to_five();
    let mut pairs = 0;
    for a in &acts {
        for b in acts.iter().filter(|b| b.same_monoid(a) && b.size() <= 4) {
            let fast: Vec<Vec<usize>> = decider
                .homomorphisms(a, b)
                .unwrap()
                .iter()
                .map(|f| f.map().to_vec())
                .collect();
            assert_eq!(fast, brute_homs(a, b), "{:?} -> {:?}", a.rows(), b.rows());
            pairs += 1;
        }
        let endos: Vec<Vec<usize>> = decider
            .homomorphisms(a, a)
            .unwrap()
            .iter()
            .map(|f| f.map().to_vec())
            .collect();
        assert_eq!(endos, brute_homs(a, a));
    }
    assert!(pairs > 1000);
}

#[test]
fn congruences_match_partition_filter() {
    let decider = Decider::default();
    for a in acts_up_to_five() {
        let fast: BTreeSet<Vec<usize>> = decider
            .congruences(&a)
            .unwrap()
            .iter()
            .map(|c| c.partition().labels().to_vec())
            .collect();
        assert_eq!(fast, brute_congruences(&a), "{:?}", a.rows());
    }
}

#[test]
fn join_is_the_chain_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let acts: Vec<&Act> = corpus().acts.iter().filter(|a| a.size() >= 3).collect();
    let decider = Decider::default();
    for _ in 0..200 {
        let act = acts[rng.gen_range(0..acts.len())];
        let lattice = decider.congruences(act).unwrap();
        let rho = &lattice[rng.gen_range(0..lattice.len())];
        let sigma = &lattice[rng.gen_range(0..lattice.len())];
        let join = rho.join(sigma).unwrap();
        let chains = chain_join(act.size(), rho.partition(), sigma.partition());
        for a in 0..act.size() {
            for b in 0..act.size() {
                assert_eq!(join.related(a, b), chains.contains(&(a, b)));
            }
        }
        assert!(rho.is_subset(&join) && sigma.is_subset(&join));
        for upper in lattice
            .iter()
            .filter(|u| rho.is_subset(u) && sigma.is_subset(u))
        {
            assert!(join.is_subset(upper));
        }
    }
}

#[test]
fn monoid_enumeration_matches_brute_force() {
    for n in 1..=3 {
        let mut classes = BTreeSet::new();
        for flat in all_maps(n * n, n) {
            let rows: Vec<Vec<usize>> = flat.chunks(n).map(<[usize]>::to_vec).collect();
            if validate_monoid(n, &rows).is_ok() {
                classes.insert(brute_monoid_class(&rows));
            }
        }
        let enumerated: BTreeSet<Vec<usize>> = enumerate_monoids(n)
            .unwrap()
            .iter()
            .map(|m| brute_monoid_class(&m.rows()))
            .collect();
        assert_eq!(enumerated, classes);
        assert_eq!(enumerate_monoids(n).unwrap().len(), classes.len());
    }
    assert_eq!(enumerate_monoids(4).unwrap().len(), 35);
}

#[test]
fn act_enumeration_matches_brute_force() {
    for m in &corpus().monoids {
        for size in 1..=3 {
            let valid: Vec<Act> = all_maps(size * m.size(), size)
                .into_iter()
                .filter_map(|flat| {
                    let rows: Vec<Vec<usize>> =
                        flat.chunks(m.size()).map(<[usize]>::to_vec).collect();
                    Act::new(m.clone(), &rows).ok()
                })
                .collect();
            let enumerated = enumerate_acts(m, size).unwrap();
            for (i, a) in enumerated.iter().enumerate() {
                for b in &enumerated[i + 1..] {
                    assert!(!brute_isomorphic(a, b));
                }
            }
            for a in &valid {
                assert_eq!(
                    enumerated.iter().filter(|b| brute_isomorphic(a, b)).count(),
                    1
                );
            }
        }
    }
}

#[test]
fn homomorphism_theorem_on_the_corpus() {
    let decider = Decider::default();
    for act in corpus().acts.iter().filter(|a| a.size() <= 4) {
        for f in decider.end_monoid(act).unwrap().elements() {
            let kernel = kernel_congruence(f);
            let (factor, pi) = act.quotient(&kernel);
            let (image, _) = act.restrict(&f.image_subact());
            assert!(brute_isomorphic(&factor, &image));
            assert!(pi.is_surjective());
            assert_eq!(kernel_congruence(&pi), kernel);
        }
    }
}

#[test]
fn end_monoid_is_a_monoid() {
    let decider = Decider::default();
    for act in &corpus().acts {
        let end = decider.end_monoid(act).unwrap();
        let (validated, relabel) = validate_monoid(end.len(), &end.monoid().rows()).unwrap();
        assert_eq!(&validated, end.monoid());
        assert_eq!(relabel, (0..end.len()).collect::<Vec<_>>());
        for (i, g) in end.elements().iter().enumerate() {
            for (j, f) in end.elements().iter().enumerate() {
                let gf = ActHom::compose(g, f).unwrap();
                assert_eq!(end.index_of(&gf), Some(end.monoid().mul(i, j)));
            }
        }
    }
}

#[test]
fn fixed_examples() {
    let decider = Decider::default();
    let a = a2();
    assert_eq!(brute_homs(&a, &a), vec![vec![0, 1], vec![1, 1]]);
    assert_eq!(
        decider.congruences(&a).unwrap(),
        vec![Congruence::diagonal(&a), Congruence::universal(&a)]
    );
    let z = z4();
    assert_eq!(decider.end_monoid(&z).unwrap().len(), 4);
    let single = Act::regular(Arc::new(Monoid::trivial()));
    assert_eq!(decider.congruences(&single).unwrap().len(), 1);
}

/// Smallest generating subset, sizes ascending and ties lexicographic.
fn exhaustive_generators(act: &Act) -> Vec<usize> {
    let n = act.size();
    let mut subsets: Vec<Vec<usize>> = (1u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    subsets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    subsets
        .into_iter()
        .find(|g| act.subact_generated(g).unwrap().is_whole())
        .unwrap()
}

#[test]
fn generating_sets_match_exhaustive_search() {
    for act in acts_up_to_five() {
        assert_eq!(
            act.minimal_generating_set(),
            exhaustive_generators(&act),
            "{:?}",
            act.rows()
        );
    }
}
