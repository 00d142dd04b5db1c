//! The acceptance battery: nine exact checks with wall-clock limits.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::freeprod::{partial_conjugation, random_fp_element, FPElement};
use crate::groupring::{
    chain_check, cocompact_dual_check, equivariant_kernel_lift, kernel_split, random_split_instance, FiniteGroup,
    IntMatrix, SplitInstance,
};
use crate::perm::catalog::fixture_groups;
use crate::perm::{check_extension_lemmas, PermGroup};
use crate::presentation::{
    evaluate, gt_tower_epi, normal_form, verify_hom, BSElement, BsGroup, Dyadic, GenWord, Presentation,
};
use crate::primes::{first_primes, primes_up_to, PrimeSeq};
use crate::thompson::{self, element_of_order, Order};
use crate::tower::{
    bonding_map, build_epi, iso_decide, ladder_search, outer_action_order, pro_distinct, random_tower_element,
    random_tower_word, section, tower_generator_images, tower_multiply, tower_semidirect, LadderResult, ProDistinct,
    TowerGroup,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}]: {} ({}; {:.2} s of {} s)",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail,
            self.elapsed_ms as f64 / 1000.0,
            self.limit_ms / 1000
        )
    }
}

type Check = fn(u64) -> Result<(bool, String)>;

pub const CRITERIA: [(u8, &str, u64, Check); 9] = [
    (1, "normal-form oracle equivalence", 60, normal_form_oracle),
    (2, "torsion orders", 10, torsion_orders),
    (3, "decision procedures vs ladder oracle", 300, decision_agreement),
    (4, "epimorphism soundness", 120, epi_soundness),
    (5, "kernel splitting", 120, kernel_splitting),
    (6, "chain and cochain checks", 60, chain_and_cochain),
    (7, "finite-group lemmas", 120, finite_group_lemmas),
    (8, "BS(1,2) model", 5, bs_model),
    (9, "V and free-product axioms", 60, group_axioms),
];

pub fn run_criterion(id: u8, seed: u64) -> Option<CriterionResult> {
    let &(id, name, limit_s, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = check(seed.wrapping_add(u64::from(id)));
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_s);
    let (ok, detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Some(CriterionResult {
        id,
        name,
        passed: ok && elapsed <= limit,
        detail,
        elapsed_ms: elapsed.as_millis(),
        limit_ms: limit.as_millis(),
    })
}

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    CRITERIA.iter().filter_map(|c| run_criterion(c.0, seed)).collect()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn seq(p: &[u64]) -> PrimeSeq {
    PrimeSeq::new(p.to_vec()).expect("valid prime sequence")
}

fn normal_form_oracle(seed: u64) -> Result<(bool, String)> {
    let mut rng = rng(seed);
    let pool = [2, 3, 5];
    let mut words = 0;
    let mut failures = 0;
    for n in 1..=3 {
        let seqs: Vec<PrimeSeq> = PrimeSeq::all_up_to(&pool, n).into_iter().filter(|s| s.len() == n).collect();
        let setups = seqs
            .iter()
            .map(|s| Ok((s.clone(), tower_semidirect(s)?.2, tower_generator_images(s)?)))
            .collect::<Result<Vec<_>>>()?;
        for _ in 0..1000 {
            let (s, sd, images) = setups.choose(&mut rng).expect("nonempty");
            let group = TowerGroup::new(s.clone());
            let len = rng.random_range(0..=30);
            let w = random_tower_word(&mut rng, s, len);
            let nf = normal_form(&w, sd)?;
            words += 1;
            if evaluate(&group, &w, images)? != evaluate(&group, &nf, images)? {
                failures += 1;
            }
        }
    }
    Ok((failures == 0, format!("{words} words, {failures} mismatches")))
}

fn torsion_orders(_seed: u64) -> Result<(bool, String)> {
    let mut ok = true;
    for p in first_primes(8) {
        ok &= element_of_order(p)?.order(p as usize + 1) == Order::Finite(p as usize);
    }
    let report = outer_action_order(&seq(&[2, 3]))?;
    ok &= report.order == 6 && report.certified();
    Ok((ok, format!("first 8 primes; φ for (2,3) has order {} certified {}", report.order, report.certified())))
}

fn decision_agreement(seed: u64) -> Result<(bool, String)> {
    let mut rng = rng(seed);
    let seqs = PrimeSeq::all_up_to(&primes_up_to(29), 4);
    let mut pairs = 0usize;
    let mut bad = 0usize;
    for a in &seqs {
        for b in &seqs {
            if a == b {
                continue;
            }
            pairs += 1;
            let distinct = matches!(pro_distinct(a, b)?, ProDistinct::Distinct { .. });
            let exhausted = ladder_search(a, b, 3) == LadderResult::Exhausted;
            if !distinct || !exhausted {
                bad += 1;
            }
        }
    }
    let mut equal_bad = 0usize;
    for a in &seqs {
        let iso = iso_decide(a, a).iso;
        let there = build_epi(a, a)?;
        let back = build_epi(a, a)?;
        let identity_slots: Vec<usize> = (0..a.len()).collect();
        let composite: Vec<usize> = back.slots.iter().map(|&i| there.slots[i]).collect();
        let maps_ok = there.verify(&mut rng, 5)? && back.verify(&mut rng, 5)? && composite == identity_slots;
        let ladder = matches!(ladder_search(a, a, a.len().min(2)), LadderResult::Found { .. });
        if !(iso && maps_ok && ladder) {
            equal_bad += 1;
        }
    }
    Ok((
        bad == 0 && equal_bad == 0,
        format!("{pairs} distinct pairs ({bad} disagreements), {} equal pairs ({equal_bad} failures)", seqs.len()),
    ))
}

fn random_subsequence<R: Rng>(rng: &mut R, s: &PrimeSeq) -> PrimeSeq {
    seq(&s.primes().iter().copied().filter(|_| rng.random_bool(0.5)).collect::<Vec<_>>())
}

fn epi_soundness(seed: u64) -> Result<(bool, String)> {
    let mut rng = rng(seed);
    let pool = primes_up_to(29);
    let mut failures = 0;
    for _ in 0..50 {
        let len = rng.random_range(1..=4);
        let mut chosen: Vec<u64> = pool.choose_multiple(&mut rng, len).copied().collect();
        chosen.sort_unstable();
        let a = seq(&chosen);
        let b = random_subsequence(&mut rng, &a);
        if !build_epi(&a, &b)?.verify(&mut rng, 500)? {
            failures += 1;
        }
    }
    let s = seq(&[2, 3, 5]);
    let lower = seq(&[2, 3]);
    let mut section_failures = 0;
    for _ in 0..1000 {
        let b = random_tower_element(&mut rng, 2, 3, 3, 3);
        if bonding_map(&section(&b))? != b {
            section_failures += 1;
        }
    }
    for _ in 0..200 {
        let x = random_tower_element(&mut rng, 3, 2, 3, 3);
        let y = random_tower_element(&mut rng, 3, 2, 3, 3);
        let lhs = bonding_map(&tower_multiply(&x, &y, &s)?)?;
        if lhs != tower_multiply(&bonding_map(&x)?, &bonding_map(&y)?, &lower)? {
            section_failures += 1;
        }
    }
    Ok((
        failures == 0 && section_failures == 0,
        format!("50 epimorphisms x 500 pairs ({failures} failures); bonding/section {section_failures} failures"),
    ))
}

fn test_groups() -> [FiniteGroup; 3] {
    [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()]
}

/// The instances shared by criteria 5 and 6.
fn split_instances(seed: u64) -> Result<Vec<SplitInstance>> {
    let mut rng = rng(seed);
    let groups = test_groups();
    (0..100)
        .map(|i| {
            let q = &groups[i % 3];
            let c = rng.random_range(1..=2);
            let a = c + rng.random_range(0..=2);
            let b = rng.random_range(0..=2);
            random_split_instance(&mut rng, q, c, a, b)
        })
        .collect()
}

fn kernel_splitting(seed: u64) -> Result<(bool, String)> {
    let mut split_failures = 0;
    for inst in split_instances(seed)? {
        if !kernel_split(&inst.theta, inst.split)?.verified() {
            split_failures += 1;
        }
    }
    let mut rng = rng(seed ^ 0x5eed);
    let groups = test_groups();
    let mut lift_failures = 0;
    for i in 0..50 {
        let rows = rng.random_range(1..=3);
        let cols = rng.random_range(1..=4);
        let d: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.random_range(-2..=2)).collect()).collect();
        let lift = equivariant_kernel_lift(&IntMatrix::from_rows(&d)?, &groups[i % 3])?;
        if !lift.certified() {
            lift_failures += 1;
        }
    }
    Ok((
        split_failures == 0 && lift_failures == 0,
        format!("100 splittings ({split_failures} failures), 50 lifts ({lift_failures} failures)"),
    ))
}

fn chain_and_cochain(seed: u64) -> Result<(bool, String)> {
    let mut failures = 0;
    for inst in split_instances(seed.wrapping_sub(1))? {
        let split = kernel_split(&inst.theta, inst.split)?;
        let cx = inst.complex(&split.alpha)?;
        if !chain_check(&cx)?.acyclic || !cocompact_dual_check(&cx, None)?.holds() {
            failures += 1;
        }
    }
    Ok((failures == 0, format!("100 complexes ({failures} failures)")))
}

/// Independent test for a nontrivial perfect subgroup: one exists iff some
/// two-generated subgroup is nontrivial and perfect, since a minimal
/// non-solvable subgroup is perfect and two-generated.
fn has_perfect_subgroup(g: &PermGroup) -> Result<bool> {
    let elems = g.elements();
    for (i, a) in elems.iter().enumerate() {
        for b in &elems[i + 1..] {
            let h = PermGroup::generate(g.degree(), vec![a.clone(), b.clone()])?;
            if !h.is_trivial() && h.is_perfect()? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn finite_group_lemmas(_seed: u64) -> Result<(bool, String)> {
    let mut groups = 0;
    let mut instances = 0;
    let mut failures = Vec::new();
    for entry in fixture_groups() {
        let g = &entry.group;
        groups += 1;
        let series = g.derived_series()?;
        let core_trivial = series.last().expect("nonempty").is_trivial();
        if g.is_hypo_abelian()? != core_trivial || core_trivial == has_perfect_subgroup(g)? {
            failures.push(entry.name.clone());
        }
        for n in g.normal_subgroups()? {
            instances += 1;
            if !check_extension_lemmas(g, &n)?.holds() {
                failures.push(format!("{} / order {}", entry.name, n.order()));
            }
        }
    }
    Ok((
        failures.is_empty(),
        format!("{groups} groups, {instances} normal-subgroup instances, failures {failures:?}"),
    ))
}

fn bs_model(seed: u64) -> Result<(bool, String)> {
    let mut rng = rng(seed);
    let (t, x) = (BSElement::t(), BSElement::x());
    let relation = t.multiply(&x.pow(2)).multiply(&t.inverse()) == x;
    let bs = Presentation::new(
        vec!["t".into(), "x".into()],
        vec![GenWord::from_pairs(&[("x", -1), ("t", 1), ("x", 1), ("x", 1), ("t", -1)])],
    )?;
    let images = BTreeMap::from([("t".to_string(), t.clone()), ("x".to_string(), x.clone())]);
    let hom = verify_hom(&bs, &BsGroup, &images)?.is_verified();

    let random = |rng: &mut ChaCha8Rng| {
        (0..12).fold(BSElement::identity(), |acc, _| {
            let g = if rng.random_bool(0.5) { &t } else { &x };
            acc.multiply(&if rng.random_bool(0.5) { g.clone() } else { g.inverse() })
        })
    };
    let mut projection = true;
    for _ in 0..500 {
        let (p, q) = (random(&mut rng), random(&mut rng));
        projection &= p.multiply(&q).project() == p.project() + q.project();
        // kernel: exactly the k = 0 elements
        projection &= (p.project() == 0) == (p.k == 0);
    }
    projection &= (-10..=10).all(|k| t.pow(k).project() == k);
    // every dyadic m / 2^e with k = 0 is t^e x^m t^-e, so the kernel is Z[1/2]
    let mut kernel = true;
    for m in -7i64..=7 {
        for e in 0..6 {
            let w = t.pow(e).multiply(&x.pow(m)).multiply(&t.pow(-e));
            kernel &= w == BSElement { k: 0, a: Dyadic::new(m, -e) };
        }
    }
    let mut gt = true;
    for base in [Presentation::free(&["t0"]), bs.clone()] {
        let t0 = base.generators()[0].clone();
        for j in 1..=5 {
            let r = gt_tower_epi(&base, &t0, j)?;
            let top = r.source.relators().last().expect("level relator");
            gt &= top.substitute(&r.images)?.is_empty() && r.verify()?.is_none();
        }
    }
    Ok((
        relation && hom && projection && kernel && gt,
        format!("relation {relation}, hom {hom}, projection {projection}, kernel {kernel}, tower epis {gt}"),
    ))
}

fn group_axioms(seed: u64) -> Result<(bool, String)> {
    let mut rng = rng(seed);
    let mut v_ok = true;
    for _ in 0..1000 {
        let [a, b, c] = std::array::from_fn(|_| thompson::random_element(&mut rng, 4));
        v_ok &= a.multiply(&b).multiply(&c) == a.multiply(&b.multiply(&c));
        v_ok &= a.multiply(&a.inverse()).is_identity();
        let leaf = rng.random_range(0..a.leaf_count());
        let expanded = a.expand(leaf).expand(0);
        let r = expanded.reduce();
        v_ok &= r == a && r.reduce() == r && expanded.reduce_in_random_order(&mut rng) == r;
    }
    let mut fp_ok = true;
    let mut phi_ok = true;
    for _ in 0..1000 {
        let [a, b, c] = std::array::from_fn(|_| random_fp_element(&mut rng, 3, 2));
        fp_ok &= a.multiply(&b).multiply(&c) == a.multiply(&b.multiply(&c));
        fp_ok &= a.multiply(&a.inverse()).is_identity();
        let u = thompson::random_element(&mut rng, 3);
        phi_ok &= partial_conjugation(&u, &a.multiply(&b)) == partial_conjugation(&u, &a).multiply(&partial_conjugation(&u, &b));
        let p1 = FPElement::p1(thompson::random_element(&mut rng, 3));
        phi_ok &= partial_conjugation(&u, &p1) == p1;
    }
    Ok((
        v_ok && fp_ok && phi_ok,
        format!("V {v_ok}, free product {fp_ok}, partial conjugation {phi_ok} (1000 samples each)"),
    ))
}
