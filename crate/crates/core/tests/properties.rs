use collar_algebra::freeprod::{
    canonical_u, partial_conjugation, partial_conjugation_power, random_fp_element, tuple_automorphism_power,
    FPElement, TupleElement,
};
use collar_algebra::groupring::{determinant, smith_normal_form, FiniteGroup, GRMatrix, IntMatrix};
use collar_algebra::presentation::{evaluate, normal_form, BSElement, Dyadic};
use collar_algebra::primes::PrimeSeq;
use collar_algebra::thompson::{random_element, TreePair};
use collar_algebra::tower::{
    bonding_map, random_tower_element, random_tower_word, section, tower_generator_images, tower_inverse,
    tower_multiply, tower_semidirect, TowerGroup,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn v(seed: u64) -> TreePair {
    random_element(&mut rng(seed), 5)
}

fn prime_seq() -> impl Strategy<Value = PrimeSeq> {
    proptest::sample::subsequence(vec![2u64, 3, 5, 7], 0..=3).prop_map(|p| PrimeSeq::new(p).unwrap())
}

fn groups() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![Just(FiniteGroup::cyclic(2)), Just(FiniteGroup::cyclic(3)), Just(FiniteGroup::symmetric3())]
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(proptest::collection::vec(-4i64..=4, cols), rows)
        .prop_map(|r| IntMatrix::from_rows(&r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn v_is_a_group(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (a, b, c) = (v(a), v(b), v(c));
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        prop_assert!(a.multiply(&a.inverse()).is_identity());
        prop_assert!(a.inverse().multiply(&a).is_identity());
        prop_assert_eq!(a.inverse().inverse(), a);
    }

    #[test]
    fn reduction_is_confluent(a in any::<u64>(), leaves in proptest::collection::vec(0usize..8, 1..4), seed in any::<u64>()) {
        let a = v(a);
        let mut x = a.clone();
        for l in leaves {
            x = x.expand(l % x.leaf_count());
        }
        prop_assert_eq!(x.reduce(), a.clone());
        prop_assert_eq!(x.reduce_in_random_order(&mut rng(seed)), a.clone());
        prop_assert_eq!(a.reduce(), a);
    }

    #[test]
    fn powers_add(a in any::<u64>(), j in -6i64..6, k in -6i64..6) {
        let a = v(a);
        prop_assert_eq!(a.pow(j).multiply(&a.pow(k)), a.pow(j + k));
    }

    #[test]
    fn tree_pair_json_round_trip(a in any::<u64>()) {
        let a = v(a);
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<TreePair>(&s).unwrap(), a);
    }

    #[test]
    fn free_product_is_a_group(seed in any::<u64>()) {
        let mut r = rng(seed);
        let [a, b, c] = std::array::from_fn(|_| random_fp_element(&mut r, 4, 2));
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        prop_assert!(a.multiply(&a.inverse()).is_identity());
        let adjacent = a.syllables().windows(2).all(|w| w[0].factor != w[1].factor);
        prop_assert!(adjacent && a.syllables().iter().all(|s| !s.element.is_identity()));
    }

    #[test]
    fn partial_conjugation_is_an_automorphism(seed in any::<u64>(), k in -4i64..4) {
        let mut r = rng(seed);
        let u = random_element(&mut r, 3);
        let a = random_fp_element(&mut r, 4, 2);
        let b = random_fp_element(&mut r, 4, 2);
        prop_assert_eq!(
            partial_conjugation(&u, &a.multiply(&b)),
            partial_conjugation(&u, &a).multiply(&partial_conjugation(&u, &b))
        );
        prop_assert_eq!(partial_conjugation(&u.inverse(), &partial_conjugation(&u, &a)), a.clone());
        let p1 = FPElement::p1(random_element(&mut r, 3));
        prop_assert_eq!(partial_conjugation(&u, &p1), p1);
        let mut iterated = a.clone();
        for _ in 0..k.unsigned_abs() {
            iterated = partial_conjugation(&if k < 0 { u.inverse() } else { u.clone() }, &iterated);
        }
        prop_assert_eq!(partial_conjugation_power(&u, k, &a), iterated);
    }

    #[test]
    fn torsion_automorphism_period(p in prop_oneof![Just(2u64), Just(3), Just(5), Just(7)], seed in any::<u64>()) {
        let u = canonical_u(p).unwrap();
        let w = random_fp_element(&mut rng(seed), 4, 2);
        prop_assert_eq!(partial_conjugation_power(&u, p as i64, &w), w.clone());
        let s = PrimeSeq::new(vec![p]).unwrap();
        let t = TupleElement { components: vec![w] };
        prop_assert_eq!(tuple_automorphism_power(&s, p as i64, &t).unwrap(), t);
    }

    #[test]
    fn tower_is_a_group(s in prime_seq(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = s.len();
        let [a, b, c] = std::array::from_fn(|_| random_tower_element(&mut r, n, 2, 2, 3));
        let ab = tower_multiply(&a, &b, &s).unwrap();
        prop_assert_eq!(
            tower_multiply(&ab, &c, &s).unwrap(),
            tower_multiply(&a, &tower_multiply(&b, &c, &s).unwrap(), &s).unwrap()
        );
        prop_assert!(tower_multiply(&a, &tower_inverse(&a, &s).unwrap(), &s).unwrap().is_identity());
    }

    #[test]
    fn bonding_map_is_a_split_epimorphism(s in prime_seq(), seed in any::<u64>()) {
        prop_assume!(!s.is_empty());
        let mut r = rng(seed);
        let n = s.len();
        let lower = s.prefix(n - 1);
        let a = random_tower_element(&mut r, n, 2, 2, 3);
        let b = random_tower_element(&mut r, n, 2, 2, 3);
        prop_assert_eq!(
            bonding_map(&tower_multiply(&a, &b, &s).unwrap()).unwrap(),
            tower_multiply(&bonding_map(&a).unwrap(), &bonding_map(&b).unwrap(), &lower).unwrap()
        );
        let c = random_tower_element(&mut r, n - 1, 2, 2, 3);
        prop_assert_eq!(bonding_map(&section(&c)).unwrap(), c);
    }

    #[test]
    fn normal_form_preserves_value(s in prime_seq(), seed in any::<u64>(), len in 0usize..20) {
        let mut r = rng(seed);
        let (_, _, sd) = tower_semidirect(&s).unwrap();
        let images = tower_generator_images(&s).unwrap();
        let g = TowerGroup::new(s.clone());
        let w = random_tower_word(&mut r, &s, len);
        let nf = normal_form(&w, &sd).unwrap();
        prop_assert_eq!(evaluate(&g, &w, &images).unwrap(), evaluate(&g, &nf, &images).unwrap());
        prop_assert_eq!(normal_form(&nf, &sd).unwrap(), nf.clone());
        let first_q = nf.letters.iter().position(|l| sd.q_gens.contains(&l.generator)).unwrap_or(nf.len());
        prop_assert!(nf.letters[first_q..].iter().all(|l| sd.q_gens.contains(&l.generator)));
    }

    #[test]
    fn bs_matrix_model(ks in proptest::collection::vec((-5i64..5, -20i64..20, 0i64..6), 3)) {
        let [a, b, c] = std::array::from_fn(|i| {
            let (k, m, e) = ks[i];
            BSElement { k, a: Dyadic::new(m, -e) }
        });
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        prop_assert!(a.multiply(&a.inverse()).is_identity());
        prop_assert_eq!(a.multiply(&b).project(), a.project() + b.project());
    }

    #[test]
    fn flattening_is_multiplicative(q in groups(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let (i, j, k) = (r.random_range(1..3), r.random_range(1..3), r.random_range(1..3));
        let a = GRMatrix::random(&mut r, &q, i, j, 2);
        let b = GRMatrix::random(&mut r, &q, j, k, 2);
        prop_assert_eq!(a.mul(&b).unwrap().flatten(), a.flatten().mul(&b.flatten()).unwrap());
        prop_assert_eq!(a.add(&a.neg()).unwrap(), GRMatrix::zeros(&q, i, j));
    }

    #[test]
    fn smith_form_certificate(m in (1usize..4, 1usize..4).prop_flat_map(|(r, c)| int_matrix(r, c))) {
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert_eq!(determinant(&s.u).unwrap().magnitude().clone(), 1u32.into());
        prop_assert_eq!(determinant(&s.v).unwrap().magnitude().clone(), 1u32.into());
        let f = s.invariant_factors();
        prop_assert!(f.iter().all(|x| *x > BigInt::from(0)));
        prop_assert!(f.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                prop_assert!(i == j || s.d.get(i, j) == &BigInt::from(0));
            }
        }
    }

    #[test]
    fn prime_seq_round_trip(s in prime_seq()) {
        let text = s.primes().iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        prop_assert_eq!(text.parse::<PrimeSeq>().unwrap(), s.clone());
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<PrimeSeq>(&json).unwrap(), s);
    }
}
