mod common;

use std::collections::BTreeSet;

use common::*;
use monideal::borel::{
    borel_witness, borel_witness_with_offset, exchange_closure, is_borel_type, is_borel_type_by_saturation, saturate,
};
use monideal::witness::verify_witness;
use monideal::{
    BorelReport, Clutter, Decomposition, Error, MonomialIdeal, PrimeSupport, RingContext, SymmetricPatternIdeal,
    VertexSet,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn clutter_strategy() -> impl Strategy<Value = Clutter> {
    (2usize..=7)
        .prop_flat_map(|s| (Just(s), prop::collection::vec(prop::collection::btree_set(0..s, 1..=3), 1..=6)))
        .prop_map(|(s, raw)| {
            let edges: Vec<_> = raw
                .iter()
                .filter(|e| !raw.iter().any(|f| f != *e && f.is_subset(e)))
                .cloned()
                .collect();
            Clutter::new(RingContext::new(s).unwrap(), edges).unwrap()
        })
}

fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4, any::<u64>(), any::<bool>()).prop_map(|(n, seed, close)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ring = RingContext::new(n).unwrap();
        let i = MonomialIdeal::new(ring, random_generators(&mut rng, n, 3, 4)).unwrap();
        if close {
            exchange_closure(&i)
        } else {
            i
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn good_stable_sets_give_neighbor_primes(c in clutter_strategy()) {
        let i: MonomialIdeal = c.edge_ideal();
        let s = c.vertex_count();
        for a in c.good_stable_sets().unwrap() {
            let t_a = monideal::Monomial::squarefree(s, a.vertices()).unwrap();
            let n_a = c.neighbor_set(&a).unwrap();
            let p = MonomialIdeal::prime(i.ring().clone(), n_a.vertices()).unwrap();
            prop_assert!(oracle_colon_equals(i.generators(), &t_a, &p));
        }
        for a in c.maximal_stable_sets().unwrap() {
            let n_a = c.neighbor_set(&a).unwrap();
            prop_assert_eq!(n_a.vertices().collect::<Vec<_>>(), (0..s).filter(|v| !a.contains(*v)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn associated_primes_are_minimal_covers(c in clutter_strategy()) {
        let i: MonomialIdeal = c.edge_ideal();
        let d = Decomposition::compute(&i).unwrap();
        let covers: BTreeSet<Vec<usize>> = c.minimal_vertex_covers().unwrap().iter().map(|k| k.vertices().collect()).collect();
        let ass: BTreeSet<Vec<usize>> = d.associated_primes().iter().map(|p| p.vars().to_vec()).collect();
        prop_assert_eq!(ass, covers);
        for p in d.associated_primes() {
            let t_a: monideal::Monomial = c.witness_base(&p).unwrap();
            prop_assert!(t_a.is_squarefree());
            prop_assert!(p.vars().iter().all(|&x| t_a.exponent(x) == 0));
            prop_assert!(verify_witness(&i, &p, &t_a).unwrap());
        }
    }

    /// Borel type holds exactly when every associated prime is a prefix prime.
    #[test]
    fn borel_detection_matches_prefix_primes(i in small_ideal()) {
        let report = is_borel_type(&i).unwrap();
        let prefix_only = Decomposition::compute(&i).unwrap().associated_primes().iter().all(|p| p.is_prefix());
        prop_assert_eq!(report.is_borel_type(), prefix_only);
        prop_assert_eq!(is_borel_type_by_saturation(&i).unwrap(), prefix_only);
        if let BorelReport::NotBorelType { violation } = report {
            prop_assert!(violation.recheck(&i).unwrap());
            prop_assert!(!i.contains(&violation.probe()).unwrap());
        }
    }

    #[test]
    fn exchange_closure_is_borel(i in small_ideal()) {
        let closed = exchange_closure(&i);
        prop_assert!(closed.contains_ideal(&i).unwrap());
        prop_assert!(is_borel_type(&closed).unwrap().is_borel_type());
        prop_assert_eq!(exchange_closure(&closed), closed);
    }

    #[test]
    fn borel_witnesses_use_one_extra_variable(i in small_ideal(), offset in 0u32..3) {
        prop_assume!(is_borel_type(&i).unwrap().is_borel_type());
        let d = Decomposition::compute(&i).unwrap();
        for q in d.components() {
            let p = q.prime();
            let v = borel_witness_with_offset(&d, &p, q, offset).unwrap();
            prop_assert!(oracle_colon_equals(i.generators(), &v, &p.to_ideal()));
            let outside: Vec<usize> = p.complement().into_iter().filter(|&x| v.exponent(x) > 0).collect();
            prop_assert!(outside.len() <= 1);
            prop_assert!(outside.iter().all(|&x| x == p.k()));
        }
    }

    #[test]
    fn symmetric_pattern_witnesses(n in 1usize..=4, raw in prop::collection::vec(1u32..=3, 1..=4), lift in 0u32..2) {
        prop_assume!(raw.len() <= n);
        let ring = RingContext::new(n).unwrap();
        let s = SymmetricPatternIdeal::new(ring.clone(), raw).unwrap();
        let i = s.build();
        let d = Decomposition::compute(&i).unwrap();
        let mut shown = s.pattern_components();
        shown.sort();
        shown.dedup();
        prop_assert_eq!(shown.as_slice(), d.components());
        for j in 0..s.breaks().len() {
            let size = s.prime_size(j);
            let vars: Vec<usize> = (n - size..n).collect();
            let k_j = s.breaks()[j];
            let b: Vec<u32> = s.exps()[k_j..].iter().map(|a| a + lift).collect();
            let (p, v) = s.witness(j, &vars, &b).unwrap();
            prop_assert!(oracle_colon_equals(i.generators(), &v, &p.to_ideal()));
        }
    }
}

#[test]
fn path_graph() {
    let ring = RingContext::with_names(["t1", "t2", "t3"]).unwrap();
    let c = Clutter::new(ring.clone(), [vec![0, 1], vec![1, 2]]).unwrap();
    let i: MonomialIdeal = c.edge_ideal();
    assert_eq!(i.generators_text(), "t1*t2, t2*t3");
    let a = VertexSet::new([0, 2]);
    assert!(c.is_stable(&a).unwrap());
    assert_eq!(c.neighbor_set(&a).unwrap(), VertexSet::new([1]));
    assert!(c.is_minimal_vertex_cover(&VertexSet::new([1])));
    assert_eq!(c.maximal_stable_sets().unwrap(), vec![VertexSet::new([1]), VertexSet::new([0, 2])]);
    let p = PrimeSupport::new(ring, [1]).unwrap();
    assert_eq!(c.witness_base::<u32>(&p).unwrap(), mono(&[1, 0, 1]));
}

#[test]
fn four_cycle_and_triangle() {
    let c4 = Clutter::new(RingContext::new(4).unwrap(), [vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
    assert_eq!(c4.maximal_stable_sets().unwrap(), vec![VertexSet::new([0, 2]), VertexSet::new([1, 3])]);
    let ring = RingContext::new(3).unwrap();
    let tri = Clutter::new(ring.clone(), [vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    let p = PrimeSupport::new(ring, [0, 1]).unwrap();
    assert_eq!(tri.witness_base::<u32>(&p).unwrap(), mono(&[0, 0, 1]));
}

#[test]
fn invalid_clutters() {
    let ring = RingContext::new(3).unwrap();
    assert!(matches!(Clutter::new(ring.clone(), [vec![0, 1], vec![0, 1, 2]]), Err(Error::InvalidClutter(_))));
    assert!(matches!(Clutter::new(ring.clone(), [Vec::<usize>::new()]), Err(Error::InvalidClutter(_))));
    let c = Clutter::new(ring, [vec![0, 1]]).unwrap().with_enumeration_limit(2);
    assert!(matches!(c.maximal_stable_sets(), Err(Error::EnumerationLimit { .. })));
}

#[test]
fn borel_examples() {
    let ring = RingContext::new(3).unwrap();
    let borel = ideal(&ring, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]);
    assert!(is_borel_type(&borel).unwrap().is_borel_type());
    let not_borel = ideal(&ring, &[&[0, 1, 0]]);
    match is_borel_type(&not_borel).unwrap() {
        BorelReport::NotBorelType { violation } => assert_eq!((violation.i, violation.j), (1, 0)),
        other => panic!("{other:?}"),
    }
    let d = Decomposition::compute(&borel).unwrap();
    let q = &d.components()[0];
    let v = borel_witness(&d, &q.prime(), q).unwrap();
    assert!(verify_witness(&borel, &q.prime(), &v).unwrap());
    assert!(matches!(borel_witness(&Decomposition::compute(&not_borel).unwrap(), &q.prime(), q), Err(Error::NotBorelType)));

    let x1 = MonomialIdeal::prime(ring.clone(), [0]).unwrap();
    assert_eq!(saturate(&borel, &x1).unwrap(), MonomialIdeal::unit(ring));
}
