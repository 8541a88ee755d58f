//! Randomized checks of the structural laws each module promises.

use std::collections::{BTreeMap, HashSet};

use og_schubert::index_sets::{all_index_sets, leq, preceq, Bijection, IndexSet};
use og_schubert::partition::{
    enumerate_typed, index_bar, typed_of_size, GrassParams, KStrict, Typed,
};
use og_schubert::pieri::{chern_pieri, collect, quantum_chern_pieri, ClassKind, Mode};
use og_schubert::raising::{expand, giambelli_special, PairRule};
use og_schubert::rational::{int, Q};
use og_schubert::ring::{Ring, RingSpec, SchubertExpr};
use og_schubert::weyl::{partition_perm, perm_partition, reduced_word, SignedPerm};
use proptest::prelude::*;

fn pick<T: Clone>(items: &[T], i: usize) -> T {
    items[i % items.len()].clone()
}

fn typed(k: u32, total: u32, i: usize) -> Typed {
    pick(&typed_of_size(k, total, None, None), i)
}

fn even_params() -> impl Strategy<Value = GrassParams> {
    (1u32..=2, 0u32..=2).prop_map(|(k, extra)| GrassParams::even(k, k + extra + 1).unwrap())
}

fn any_params() -> impl Strategy<Value = GrassParams> {
    (6u32..=10, 1u32..=4).prop_filter_map("valid space", |(big_n, m)| {
        let p = GrassParams::new(big_n, m).ok()?;
        // keep the exhaustive set enumeration small
        (p.m <= 3).then_some(p)
    })
}

fn ring_pair(spec: RingSpec, i: usize, j: usize) -> (Ring, SchubertExpr, SchubertExpr) {
    let ring = Ring::new(spec).unwrap();
    let basis = ring.basis().unwrap();
    let a = SchubertExpr::basis(spec, pick(&basis, i), [0, 0]).unwrap();
    let b = SchubertExpr::basis(spec, pick(&basis, j), [0, 0]).unwrap();
    (ring, a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bijection_round_trip(params in any_params(), i in any::<usize>()) {
        let bij = Bijection::new(&params).unwrap();
        let labels = og_schubert::index_sets::class_labels(&params);
        let lambda = pick(&labels, i);
        let set = bij.index_set(&lambda).unwrap();
        prop_assert_eq!(bij.partition(set).unwrap(), &lambda);
        prop_assert!(index_bar(lambda.shape(), &params).iter().all(|&p| p != params.n + 1));
    }

    #[test]
    fn enumeration_is_clean(k in 0u32..=2, rows in 0u32..=3, cols in 0u32..=5) {
        let all = enumerate_typed(k, rows, cols);
        let distinct: HashSet<_> = all.iter().collect();
        prop_assert_eq!(distinct.len(), all.len());
        for l in &all {
            prop_assert!(Typed::from_parts(l.parts().to_vec(), k, l.ty()).is_ok());
        }
    }

    #[test]
    fn pieri_coefficients_are_signed_powers_of_two(k in 1u32..=2, total in 0u32..=6, i in any::<usize>(), p in 1u32..=6) {
        let lambda = typed(k, total, i);
        for mode in [Mode::Hat, Mode::Typed, Mode::Tilde] {
            for t in chern_pieri(&lambda, p, 2 * k, mode) {
                prop_assert!(t.pow2 >= 0);
                prop_assert_eq!(t.sign, 1, "{:?} {}", mode, lambda);
                prop_assert_eq!(t.mu.iter().sum::<u32>(), lambda.size() + p);
            }
        }
    }

    #[test]
    fn typed_pieri_sums_to_hat(k in 1u32..=2, total in 0u32..=6, i in any::<usize>(), p in 1u32..=6) {
        let lambda = typed(k, total, i);
        let versions = og_schubert::partition::typed_versions(lambda.shape());
        let mut typed_sum: BTreeMap<(Vec<u32>, u8), Q> = BTreeMap::new();
        for v in &versions {
            for ((class, mu, _), c) in collect(&chern_pieri(v, p, 2 * k, Mode::Typed)) {
                let ClassKind::Typed(ty) = class else { unreachable!() };
                *typed_sum.entry((mu, ty)).or_insert_with(|| int(0)) += c;
            }
        }
        let hat = collect(&chern_pieri(&lambda, p, 2 * k, Mode::Hat));
        let mut expected: BTreeMap<(Vec<u32>, u8), Q> = BTreeMap::new();
        for ((_, mu, _), c) in hat {
            let types = og_schubert::partition::typed_versions(&KStrict::new(mu.clone(), k).unwrap());
            for t in types {
                expected.insert((mu.clone(), t.ty()), c.clone());
            }
        }
        prop_assert_eq!(typed_sum, expected);
    }

    #[test]
    fn quantum_pieri_is_graded(params in even_params(), i in any::<usize>(), p in 1u32..=4) {
        prop_assume!(params.k >= 2);
        let labels = enumerate_typed(params.k, params.rows(), params.cols());
        let lambda = pick(&labels, i);
        let terms = quantum_chern_pieri(lambda.shape(), p, &params, Mode::Hat).unwrap();
        for t in terms {
            let qdeg = (t.q[0] + t.q[1]) * params.qdeg();
            prop_assert_eq!(t.mu.iter().sum::<u32>() + qdeg, lambda.size() + p);
            prop_assert_eq!(t.sign, 1);
        }
    }

    #[test]
    fn giambelli_type_symmetry_and_integrality(k in 1u32..=2, total in 1u32..=7, i in any::<usize>()) {
        let lambda = typed(k, total, i);
        let g = giambelli_special(&lambda).unwrap();
        prop_assert!(g.has_integer_tau_coefficients());
        if lambda.ty() > 0 {
            prop_assert_eq!(giambelli_special(&lambda.swapped()).unwrap(), g.swap_markers());
        }
    }

    #[test]
    fn raising_cap_is_stable(k in 1u32..=2, total in 1u32..=7, i in any::<usize>(), extra in 1u32..=6) {
        let lambda = typed(k, total, i);
        let parts = lambda.parts();
        let rule = PairRule::Threshold(2 * k);
        let cap = og_schubert::raising::default_cap(parts);
        prop_assert_eq!(
            expand(parts, rule, None, None).unwrap(),
            expand(parts, rule, None, Some(cap + extra)).unwrap()
        );
    }

    #[test]
    fn classical_ring_laws(params in even_params(), i in any::<usize>(), j in any::<usize>()) {
        let spec = RingSpec::classical(params);
        let (ring, a, b) = ring_pair(spec, i, j);
        let ab = ring.multiply(&a, &b).unwrap();
        prop_assert_eq!(&ab, &ring.multiply(&b, &a).unwrap());
        prop_assert_eq!(&ring.multiply(&a, &SchubertExpr::one(spec)).unwrap(), &a);
        prop_assert!(ab.has_integer_coefficients());
        if !ab.is_zero() {
            let da = a.homogeneous_degree().unwrap();
            let db = b.homogeneous_degree().unwrap();
            prop_assert_eq!(ab.homogeneous_degree(), Some(da + db));
        }
        let swapped = ring.multiply(&a.swap_types(), &b.swap_types()).unwrap();
        prop_assert_eq!(swapped, ab.swap_types());
    }

    #[test]
    fn quantum_ring_laws(params in even_params(), i in any::<usize>(), j in any::<usize>()) {
        let spec = RingSpec::quantum(params).unwrap();
        let (ring, a, b) = ring_pair(spec, i, j);
        let ab = ring.multiply(&a, &b).unwrap();
        prop_assert_eq!(&ab, &ring.multiply(&b, &a).unwrap());
        prop_assert!(ab.has_integer_coefficients());
        let da = a.homogeneous_degree().unwrap();
        let db = b.homogeneous_degree().unwrap();
        prop_assert!(ab.is_zero() || ab.homogeneous_degree() == Some(da + db));
    }

    #[test]
    fn odd_ring_is_commutative(k in 0u32..=2, extra in 0u32..=2, i in any::<usize>(), j in any::<usize>()) {
        let params = GrassParams::odd(k, k + extra + 1).unwrap();
        let (ring, a, b) = ring_pair(RingSpec::classical(params), i, j);
        prop_assert_eq!(ring.multiply(&a, &b).unwrap(), ring.multiply(&b, &a).unwrap());
    }

    #[test]
    fn expression_json_round_trip(params in even_params(), i in any::<usize>(), j in any::<usize>()) {
        let spec = RingSpec::quantum(params).unwrap();
        let (ring, a, b) = ring_pair(spec, i, j);
        let ab = ring.multiply(&a, &b).unwrap();
        let json = ab.to_json();
        prop_assert_eq!(SchubertExpr::from_json(&json, spec).unwrap(), ab);
        let text = serde_json::to_string(&json).unwrap();
        prop_assert_eq!(text, serde_json::to_string(&ring.multiply(&a, &b).unwrap().to_json()).unwrap());
    }

    #[test]
    fn signed_perm_words(k in 1u32..=2, total in 0u32..=6, i in any::<usize>()) {
        let lambda = typed(k, total, i);
        let w = partition_perm(&lambda).unwrap();
        let word = reduced_word(&w);
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(SignedPerm::from_word(&word, w.n()), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(perm_partition(&w, k).unwrap(), lambda);
    }

    #[test]
    fn closure_order_laws(params in any_params(), i in any::<usize>(), j in any::<usize>()) {
        let sets = all_index_sets(&params);
        let bij = Bijection::new(&params).unwrap();
        let (q, p) = (pick(&sets, i), pick(&sets, j));
        let codim = |s: &IndexSet| bij.partition(s).unwrap().size();
        if preceq(&q, &p).holds {
            prop_assert!(codim(&q) >= codim(&p));
            prop_assert!(leq(&q, &p));
        }
        if params.is_even() {
            let below_bar = leq(&q, &p.bar());
            let union = preceq(&q, &p).holds || preceq(&q, &p.iota()).holds;
            prop_assert_eq!(below_bar, union, "{} {}", q, p);
            prop_assert_eq!(preceq(&q.iota(), &p.iota()).holds, preceq(&q, &p).holds);
        }
    }
}
