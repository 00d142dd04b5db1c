//! Worked examples per module, checked against small independent oracles.

use std::collections::{BTreeMap, HashSet, VecDeque};

use collar_algebra::freeprod::{
    partial_conjugation, probe_generators, straightening_pattern, FPElement, Factor, PatternShape, Syllable,
    TupleElement,
};
use collar_algebra::groupring::{
    integer_kernel_basis, kernel_split, smith_normal_form, FiniteGroup, GRMatrix, GroupRingElem, IntMatrix,
};
use collar_algebra::perm::catalog::{alternating, symmetric};
use collar_algebra::perm::{check_extension_lemmas, PermGroup, Permutation};
use collar_algebra::presentation::{
    gt_tower_presentation, normal_form, semidirect_presentation, verify_hom, BSElement, BsGroup, GenWord,
    Presentation, SemidirectData,
};
use collar_algebra::primes::PrimeSeq;
use collar_algebra::thompson::{element_of_order, BinTree, Order, TreePair};
use collar_algebra::tower::{
    build_epi, iso_decide, ladder_search, outer_action_order, pro_distinct, tower_multiply, LadderResult,
    ProDistinct, TowerElement,
};
use num_bigint::BigInt;

fn seq(p: &[u64]) -> PrimeSeq {
    PrimeSeq::new(p.to_vec()).unwrap()
}

fn perm(images: &[u32]) -> Permutation {
    Permutation::from_images(images.to_vec()).unwrap()
}

// ---- permutation groups ----

/// Closure by breadth-first search over plain image vectors.
fn closure_oracle(degree: usize, gens: &[Vec<u32>]) -> HashSet<Vec<u32>> {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<u32> = (0..degree).map(|i| g[x[i] as usize]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn commutator_oracle(elems: &HashSet<Vec<u32>>, degree: usize) -> HashSet<Vec<u32>> {
    let inv = |p: &Vec<u32>| {
        let mut out = vec![0; degree];
        for (i, &x) in p.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        out
    };
    let mul = |p: &Vec<u32>, q: &Vec<u32>| -> Vec<u32> { (0..degree).map(|i| q[p[i] as usize]).collect() };
    let comms: Vec<Vec<u32>> = elems
        .iter()
        .flat_map(|a| elems.iter().map(move |b| (a, b)))
        .map(|(a, b)| mul(&mul(&mul(&inv(a), &inv(b)), a), b))
        .collect();
    closure_oracle(degree, &comms)
}

#[test]
fn generated_group_orders() {
    assert_eq!(PermGroup::generate(2, vec![perm(&[1, 0])]).unwrap().order(), 2);
    let s3 = PermGroup::generate(3, vec![perm(&[1, 2, 0]), perm(&[1, 0, 2])]).unwrap();
    assert_eq!(s3.order(), closure_oracle(3, &[vec![1, 2, 0], vec![1, 0, 2]]).len());
    assert_eq!(s3.order(), 6);
    assert_eq!(PermGroup::generate(4, vec![]).unwrap().order(), 1);
}

#[test]
fn derived_series_matches_commutator_closure() {
    for g in [symmetric(3), symmetric(4), alternating(5)] {
        let d = g.degree();
        let mut expected = vec![g.order()];
        let mut cur: HashSet<Vec<u32>> = g.elements().iter().map(|p| p.images().to_vec()).collect();
        loop {
            let next = commutator_oracle(&cur, d);
            if next.len() == cur.len() {
                break;
            }
            expected.push(next.len());
            cur = next;
        }
        let got: Vec<usize> = g.derived_series().unwrap().iter().map(PermGroup::order).collect();
        assert_eq!(got, expected);
    }
    assert_eq!(symmetric(3).derived_series().unwrap().iter().map(PermGroup::order).collect::<Vec<_>>(), [6, 3, 1]);
    assert_eq!(alternating(5).derived_series().unwrap().len(), 1);
}

#[test]
fn perfect_cores() {
    let s5 = symmetric(5);
    assert_eq!(s5.perfect_core().unwrap().order(), 60);
    assert!(!s5.is_hypo_abelian().unwrap());
    assert!(symmetric(3).is_hypo_abelian().unwrap());
    let e = PermGroup::trivial(3);
    assert!(e.is_perfect().unwrap() && e.is_hypo_abelian().unwrap());
}

#[test]
fn extension_lemma_examples() {
    let a5 = alternating(5);
    let g = a5.direct_product(&a5).unwrap();
    let first = PermGroup::generate(10, a5.generators().iter().map(|p| {
        let mut im = p.images().to_vec();
        im.extend(5..10);
        Permutation::from_images(im).unwrap()
    }).collect()).unwrap();
    let r = check_extension_lemmas(&g, &first).unwrap();
    assert!(r.kernel_perfect && r.quotient_perfect && r.group_perfect && r.holds());

    let s3 = symmetric(3);
    let a3 = s3.derived_series().unwrap()[1].clone();
    let r = check_extension_lemmas(&s3, &a3).unwrap();
    assert!(r.kernel_hypo_abelian && r.quotient_hypo_abelian && r.group_hypo_abelian && r.holds());

    let r = check_extension_lemmas(&a5, &a5).unwrap();
    assert_eq!(r.quotient_order, 1);
    assert!(r.holds());
}

// ---- Thompson's group V ----

fn leaves(t: &BinTree, path: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
    match t {
        BinTree::Leaf => out.push(path.clone()),
        BinTree::Node(l, r) => {
            path.push(false);
            leaves(l, path, out);
            path.pop();
            path.push(true);
            leaves(r, path, out);
            path.pop();
        }
    }
}

/// Action of a diagram on a long enough binary string.
fn act(x: &TreePair, bits: &[bool]) -> Vec<bool> {
    let (mut d, mut r) = (Vec::new(), Vec::new());
    leaves(x.domain(), &mut Vec::new(), &mut d);
    leaves(x.range(), &mut Vec::new(), &mut r);
    let i = d.iter().position(|p| bits.starts_with(p)).expect("string is long enough");
    let mut out = r[x.perm()[i]].clone();
    out.extend_from_slice(&bits[d[i].len()..]);
    out
}

fn tp(d: &str, r: &str, p: Vec<usize>) -> TreePair {
    TreePair::new(d.parse().unwrap(), r.parse().unwrap(), p).unwrap()
}

#[test]
fn reduction_examples() {
    let id3 = TreePair::new_unreduced("(*,(*,*))".parse().unwrap(), "(*,(*,*))".parse().unwrap(), vec![0, 1, 2])
        .unwrap();
    assert_eq!(id3.reduce(), TreePair::identity());
    let x = tp("((*,*),*)", "(*,(*,*))", vec![0, 1, 2]);
    let expanded = x.expand(2);
    assert_eq!(expanded.leaf_count(), x.leaf_count() + 1);
    assert_eq!(expanded.reduce(), x);
}

#[test]
fn multiplication_matches_action() {
    let a = tp("((*,*),*)", "(*,(*,*))", vec![0, 1, 2]);
    let b = tp("(*,(*,*))", "(*,(*,*))", vec![2, 0, 1]);
    let ab = a.multiply(&b);
    for word in 0u32..64 {
        let bits: Vec<bool> = (0..6).map(|k| word >> k & 1 == 1).collect();
        assert_eq!(act(&ab, &bits), act(&a, &act(&b, &bits)));
    }
    assert_eq!(a.multiply(&TreePair::identity()), a);
    assert!(a.multiply(&a.inverse()).is_identity());
    assert!(TreePair::identity().inverse().is_identity());
}

#[test]
fn orders() {
    assert_eq!(TreePair::identity().order(10), Order::Finite(1));
    for p in [2u64, 3, 5] {
        let x = element_of_order(p).unwrap();
        assert_eq!(x.leaf_count(), p as usize);
        // the shift returns a point to itself after exactly p steps
        let bits = vec![true; p as usize + 2];
        let mut y = bits.clone();
        let mut steps = 0;
        loop {
            y = act(&x, &y);
            steps += 1;
            if y == bits {
                break;
            }
        }
        assert_eq!(steps, p as usize);
        assert_eq!(x.order(100), Order::Finite(p as usize));
    }
    assert_eq!(tp("((*,*),*)", "(*,(*,*))", vec![0, 1, 2]).order(64), Order::ExceedsCap);
}

// ---- free products ----

fn gens() -> Vec<TreePair> {
    collar_algebra::thompson::standard_generators()
}

#[test]
fn free_product_reduction() {
    let g = gens();
    let a = FPElement::p1(g[0].clone());
    assert_eq!(a.multiply(&FPElement::identity()), a);
    assert!(a.multiply(&FPElement::p1(g[0].inverse())).is_identity());
    let left = FPElement::new(vec![
        Syllable { factor: Factor::P1, element: g[0].clone() },
        Syllable { factor: Factor::P2, element: g[1].clone() },
    ]);
    let right = FPElement::new(vec![
        Syllable { factor: Factor::P2, element: g[1].inverse() },
        Syllable { factor: Factor::P1, element: g[2].clone() },
    ]);
    assert_eq!(left.multiply(&right), FPElement::p1(g[0].multiply(&g[2])));
}

#[test]
fn partial_conjugation_examples() {
    let g = gens();
    let u = element_of_order(3).unwrap();
    let p1 = FPElement::p1(g[0].clone());
    assert_eq!(partial_conjugation(&u, &p1), p1);
    let x = FPElement::p2(g[1].clone());
    let expected = FPElement::p1(u.clone()).multiply(&x).multiply(&FPElement::p1(u.inverse()));
    assert_eq!(partial_conjugation(&u, &x), expected);
    let w = p1.multiply(&x).multiply(&FPElement::p1(g[2].clone()));
    let expected = p1.multiply(&expected).multiply(&FPElement::p1(g[2].clone()));
    assert_eq!(partial_conjugation(&u, &w), expected);
}

#[test]
fn straightening_patterns() {
    let probes = probe_generators();
    let map = |n: usize, m: usize, slot: &dyn Fn(usize) -> Option<usize>| -> Vec<Vec<TupleElement>> {
        (0..n)
            .map(|i| {
                probes
                    .iter()
                    .map(|g| match slot(i) {
                        Some(j) => TupleElement::embed(m, j, g.clone()),
                        None => TupleElement::identity(m),
                    })
                    .collect()
            })
            .collect()
    };
    let id = straightening_pattern(&map(2, 2, &Some), 2).unwrap();
    assert_eq!(id.cells, [[true, false], [false, true]]);
    assert_eq!(id.shape, PatternShape::Permutation);
    let swap = straightening_pattern(&map(2, 2, &|i| Some(1 - i)), 2).unwrap();
    assert_eq!(swap.cells, [[false, true], [true, false]]);
    assert_eq!(swap.shape, PatternShape::Permutation);
    let crush = straightening_pattern(&map(3, 2, &|i| (i < 2).then_some(i)), 2).unwrap();
    assert_eq!(crush.cells, [[true, false], [false, true], [false, false]]);
    assert_eq!(crush.shape, PatternShape::Injection);
}

// ---- presentations ----

fn word(pairs: &[(&str, i8)]) -> GenWord {
    GenWord::from_pairs(pairs)
}

fn z_action(image: GenWord, inverse: GenWord) -> SemidirectData {
    SemidirectData {
        k_gens: vec!["a".into()],
        q_gens: vec!["b".into()],
        action: BTreeMap::from([("b".into(), BTreeMap::from([("a".into(), image)]))]),
        inverse_action: BTreeMap::from([("b".into(), BTreeMap::from([("a".into(), inverse)]))]),
    }
}

#[test]
fn free_reduction_examples() {
    assert!(word(&[("a", 1), ("a", -1)]).free_reduce().is_empty());
    assert!(GenWord::empty().free_reduce().is_empty());
    assert_eq!(word(&[("a", 1), ("b", 1), ("b", -1), ("a", 1)]).free_reduce(), word(&[("a", 1), ("a", 1)]));
}

#[test]
fn semidirect_examples() {
    let k = Presentation::free(&["a"]);
    let q = Presentation::free(&["b"]);
    let z2 = semidirect_presentation(&k, &q, &z_action(word(&[("a", 1)]), word(&[("a", 1)]))).unwrap();
    assert_eq!(z2.relators(), [word(&[("b", 1), ("a", 1), ("b", -1), ("a", -1)])]);
    let klein = semidirect_presentation(&k, &q, &z_action(word(&[("a", -1)]), word(&[("a", -1)]))).unwrap();
    assert_eq!(klein.relators(), [word(&[("b", 1), ("a", 1), ("b", -1), ("a", 1)])]);

    let trivial = z_action(word(&[("a", 1)]), word(&[("a", 1)]));
    assert_eq!(normal_form(&word(&[("b", 1), ("a", 1)]), &trivial).unwrap(), word(&[("a", 1), ("b", 1)]));
    let flip = z_action(word(&[("a", -1)]), word(&[("a", -1)]));
    assert_eq!(normal_form(&word(&[("b", 1), ("a", 1)]), &flip).unwrap(), word(&[("a", -1), ("b", 1)]));
    let normal = word(&[("a", 1), ("a", 1), ("b", -1)]);
    assert_eq!(normal_form(&normal, &flip).unwrap(), normal);
}

#[test]
fn homomorphisms_into_bs() {
    let z2 = Presentation::new(vec!["a".into(), "b".into()], vec![word(&[("b", 1), ("a", 1), ("b", -1), ("a", -1)])])
        .unwrap();
    let images = BTreeMap::from([("a".to_string(), BSElement::identity()), ("b".to_string(), BSElement::t())]);
    assert!(verify_hom(&z2, &BsGroup, &images).unwrap().is_verified());

    let bs = Presentation::new(
        vec!["t".into(), "x".into()],
        vec![word(&[("x", -1), ("t", 1), ("x", 1), ("x", 1), ("t", -1)])],
    )
    .unwrap();
    let images = BTreeMap::from([("t".to_string(), BSElement::t()), ("x".to_string(), BSElement::x())]);
    assert!(verify_hom(&bs, &BsGroup, &images).unwrap().is_verified());
    let images = BTreeMap::from([("t".to_string(), BSElement::t()), ("x".to_string(), BSElement::t())]);
    assert!(!verify_hom(&bs, &BsGroup, &images).unwrap().is_verified());
}

#[test]
fn gt_tower_relators() {
    let base = Presentation::free(&["t0"]);
    let one = gt_tower_presentation(&base, "t0", 1).unwrap();
    assert_eq!(one.generators(), ["t0", "t1"]);
    assert_eq!(one.relators(), [word(&[("t1", -1), ("t1", -1), ("t0", -1), ("t1", 1), ("t0", 1)])]);
    let two = gt_tower_presentation(&base, "t0", 2).unwrap();
    assert_eq!(&two.relators()[..1], one.relators());
    assert_eq!(two.relators()[1], word(&[("t2", -1), ("t2", -1), ("t1", -1), ("t2", 1), ("t1", 1)]));
}

// ---- towers ----

#[test]
fn tower_multiplication_examples() {
    let s = seq(&[2, 3]);
    let g = gens();
    let x = TowerElement::kernel(TupleElement::embed(2, 1, FPElement::p2(g[0].clone())));
    let y = TowerElement::kernel(TupleElement::embed(2, 0, FPElement::p1(g[1].clone())));
    let xy = tower_multiply(&x, &y, &s).unwrap();
    assert_eq!(xy.z, 0);
    assert_eq!(xy.tuple, x.tuple.multiply(&y.tuple).unwrap());

    let shift = TowerElement::shift(2);
    let inv = TowerElement { tuple: TupleElement::identity(2), z: -1 };
    let conj = tower_multiply(&tower_multiply(&shift, &x, &s).unwrap(), &inv, &s).unwrap();
    let u = collar_algebra::freeprod::canonical_u(3).unwrap();
    let expected = FPElement::p1(u.clone()).multiply(&FPElement::p2(g[0].clone())).multiply(&FPElement::p1(u.inverse()));
    assert_eq!(conj, TowerElement::kernel(TupleElement::embed(2, 1, expected)));
    assert_eq!(tower_multiply(&x, &TowerElement::identity(2), &s).unwrap(), x);
}

#[test]
fn decisions() {
    assert!(iso_decide(&seq(&[2, 3, 5]), &seq(&[2, 3, 5])).iso);
    assert!(!iso_decide(&seq(&[2, 3]), &seq(&[2, 5])).iso);
    assert!(iso_decide(&PrimeSeq::empty(), &PrimeSeq::empty()).iso);

    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
    let epi = build_epi(&seq(&[2, 3, 5]), &seq(&[2, 5])).unwrap();
    assert!(epi.verify(&mut rng, 50).unwrap());
    assert!(build_epi(&seq(&[2, 3]), &seq(&[5])).is_err());
    let to_z = build_epi(&seq(&[3, 7]), &PrimeSeq::empty()).unwrap();
    assert_eq!(to_z.crushed(), [0, 1]);

    assert_eq!(outer_action_order(&PrimeSeq::empty()).unwrap().order, 1);
    assert_eq!(outer_action_order(&seq(&[2])).unwrap().order, 2);
    let r = outer_action_order(&seq(&[2, 3])).unwrap();
    assert_eq!((r.order, r.necessity.clone()), (6, vec![(2, true), (3, true)]));
}

/// All zig-zags of `depth` prefix levels, alternating sides, each level
/// mapping onto the previous one, levels increasing per side and all beyond
/// the common prefix.
fn ladder_oracle(a: &[u64], b: &[u64], depth: usize) -> bool {
    let common = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    let onto = |hi: &[u64], lo: &[u64]| lo.iter().all(|p| hi.contains(p));
    let sides = [a, b];
    let mut found = false;
    let total = a.len().max(b.len());
    // every assignment of levels to the zig-zag positions
    let positions = depth;
    let mut idx = vec![common + 1; positions];
    'outer: loop {
        for start in 0..2 {
            let ok = (0..positions).all(|k| idx[k] <= sides[(start + k) % 2].len())
                && (1..positions).all(|k| {
                    let (s, t) = ((start + k) % 2, (start + k - 1) % 2);
                    onto(&sides[s][..idx[k]], &sides[t][..idx[k - 1]])
                })
                && (2..positions).all(|k| idx[k] > idx[k - 2]);
            found |= ok;
        }
        for i in idx.iter_mut() {
            if *i < total {
                *i += 1;
                continue 'outer;
            }
            *i = common + 1;
        }
        break;
    }
    found
}

#[test]
fn pro_distinctness() {
    assert_eq!(pro_distinct(&seq(&[2, 3, 5, 7]), &seq(&[2, 3, 5, 7])).unwrap(), ProDistinct::EqualPrefix);
    assert_eq!(pro_distinct(&seq(&[2, 3, 5]), &seq(&[2, 5, 7])).unwrap(), ProDistinct::Distinct { witness: 3 });
    assert_eq!(pro_distinct(&seq(&[3, 5]), &seq(&[2, 3])).unwrap(), ProDistinct::Distinct { witness: 2 });
    assert!(ladder_oracle(&[2, 5], &[2, 3, 5], 2));
    assert!(!ladder_oracle(&[2, 3, 5], &[2, 5, 7], 3));
    assert!(!ladder_oracle(&[2, 3, 5, 7, 11], &[2, 3, 5, 7, 13], 4));
}

#[test]
fn ladder_examples() {
    let a = seq(&[2, 3, 5]);
    assert!(matches!(ladder_search(&a, &a, 3), LadderResult::Found { .. }));
    assert_eq!(ladder_search(&a, &seq(&[2, 5, 7]), 3), LadderResult::Exhausted);
    assert_eq!(ladder_search(&seq(&[2, 3, 5, 7, 11]), &seq(&[2, 3, 5, 7, 13]), 4), LadderResult::Exhausted);
    for (x, y) in [(vec![2, 5], vec![2, 3, 5]), (vec![3], vec![2, 3]), (vec![2, 3, 7], vec![2, 7])] {
        for depth in 1..=3 {
            let found = matches!(ladder_search(&seq(&x), &seq(&y), depth), LadderResult::Found { .. });
            assert_eq!(found, ladder_oracle(&x, &y, depth), "{x:?} {y:?} depth {depth}");
        }
    }
}

// ---- group rings ----

fn ints(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

#[test]
fn flattening() {
    let z2 = FiniteGroup::cyclic(2);
    let e = GroupRingElem::basis(&z2, 0);
    let g = GroupRingElem::basis(&z2, 1);
    let m = |x: GroupRingElem| GRMatrix::from_rows(&z2, vec![vec![x]]).unwrap().flatten();
    assert_eq!(m(e.clone()), ints(&[vec![1, 0], vec![0, 1]]));
    assert_eq!(m(g.clone()), ints(&[vec![0, 1], vec![1, 0]]));
    assert_eq!(m(e.add(&g)), ints(&[vec![1, 1], vec![1, 1]]));
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn det(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
            (if j % 2 == 0 { 1 } else { -1 }) * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n).flat_map(|last| subsets(last, k - 1).into_iter().map(move |mut s| { s.push(last); s })).collect()
}

/// Invariant factors from determinantal divisors: `d_k = gcd of k×k minors`.
fn invariant_factor_oracle(m: &[Vec<i64>]) -> Vec<i64> {
    let (r, c) = (m.len(), m[0].len());
    let mut divisors = vec![1];
    for k in 1..=r.min(c) {
        let g = subsets(r, k)
            .iter()
            .flat_map(|rows| subsets(c, k).into_iter().map(move |cols| (rows.clone(), cols)))
            .map(|(rows, cols)| det(&rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect::<Vec<_>>()))
            .fold(0, gcd);
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| w[1] / w[0]).collect()
}

#[test]
fn smith_forms() {
    let cases = [
        vec![vec![2, 0], vec![0, 3]],
        vec![vec![4, 6, 2], vec![2, 8, -4]],
        vec![vec![1, 2], vec![3, 4], vec![5, 6]],
        vec![vec![6, 10], vec![10, 15]],
    ];
    for m in cases {
        let got: Vec<i64> = smith_normal_form(&ints(&m))
            .invariant_factors()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        assert_eq!(got, invariant_factor_oracle(&m), "{m:?}");
    }
    assert_eq!(smith_normal_form(&ints(&[vec![2, 0], vec![0, 3]])).invariant_factors(), [BigInt::from(1), BigInt::from(6)]);
    let zero = IntMatrix::zeros(2, 3);
    assert_eq!(smith_normal_form(&zero).rank, 0);
    assert_eq!(integer_kernel_basis(&zero).len(), 3);
    assert!(integer_kernel_basis(&IntMatrix::identity(3)).is_empty());
}

#[test]
fn kernel_split_examples() {
    let q = FiniteGroup::cyclic(3);
    let b_part = GRMatrix::from_rows(
        &q,
        vec![vec![GroupRingElem::basis(&q, 1), GroupRingElem::scalar(&q, 2)]],
    )
    .unwrap();
    let theta = GRMatrix::identity(&q, 1).hstack(&b_part).unwrap();
    let s = kernel_split(&theta, 1).unwrap();
    assert!(s.verified());
    assert_eq!(s.alpha, b_part);
    assert_eq!(s.kernel_rank_a, 0);
    assert_eq!(s.kernel_rank, 2 * q.order());

    let s = kernel_split(&GRMatrix::identity(&q, 2), 2).unwrap();
    assert!(s.verified());
    assert_eq!(s.phi, GRMatrix::identity(&q, 2));
    assert_eq!(s.psi, GRMatrix::identity(&q, 2));
}

#[test]
fn kernel_lift_examples() {
    let z2 = FiniteGroup::cyclic(2);
    let l = collar_algebra::groupring::equivariant_kernel_lift(&ints(&[vec![0]]), &z2).unwrap();
    assert_eq!((l.basis.cols(), l.flattened_kernel_rank), (1, 2));
    assert!(l.certified());
    let l = collar_algebra::groupring::equivariant_kernel_lift(&ints(&[vec![2]]), &z2).unwrap();
    assert_eq!((l.basis.cols(), l.downstairs_rank, l.flattened_kernel_rank), (0, 0, 0));
}
