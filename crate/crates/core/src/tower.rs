//! The groups `G_(ω,n) = S^n ⋊ Z`, where the generator of `Z` acts on the
//! `i`-th copy of `S = V * V` by the partial conjugation `φ_{u_i}` with
//! `u_i` of order `ω_i`.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freeprod::{
    canonical_u, partial_conjugation_power, random_fp_element, tuple_automorphism_power, FPElement, TupleElement,
};
use crate::presentation::{GenWord, Group, Letter, Presentation, SemidirectData};
pub use crate::primes::PrimeSeq;
use crate::thompson::{self, Order, TreePair};

/// `(k, z)` standing for `k · a^z` with `k ∈ S^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TowerElement {
    pub tuple: TupleElement,
    pub z: i64,
}

impl TowerElement {
    pub fn identity(n: usize) -> Self {
        Self { tuple: TupleElement::identity(n), z: 0 }
    }

    /// The generator of `Z`.
    pub fn shift(n: usize) -> Self {
        Self { tuple: TupleElement::identity(n), z: 1 }
    }

    pub fn kernel(tuple: TupleElement) -> Self {
        Self { tuple, z: 0 }
    }

    pub fn len(&self) -> usize {
        self.tuple.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuple.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.z == 0 && self.tuple.is_identity()
    }
}

fn check_len(seq: &PrimeSeq, a: &TowerElement) -> Result<()> {
    if seq.len() != a.len() {
        return Err(Error::LengthMismatch { left: seq.len(), right: a.len() });
    }
    Ok(())
}

/// `(k1, m1)(k2, m2) = (k1 · φ^m1(k2), m1 + m2)`.
pub fn tower_multiply(a: &TowerElement, b: &TowerElement, seq: &PrimeSeq) -> Result<TowerElement> {
    check_len(seq, a)?;
    check_len(seq, b)?;
    let moved = tuple_automorphism_power(seq, a.z, &b.tuple)?;
    Ok(TowerElement { tuple: a.tuple.multiply(&moved)?, z: a.z + b.z })
}

/// `(k, m)⁻¹ = (φ^-m(k⁻¹), -m)`.
pub fn tower_inverse(a: &TowerElement, seq: &PrimeSeq) -> Result<TowerElement> {
    check_len(seq, a)?;
    Ok(TowerElement { tuple: tuple_automorphism_power(seq, -a.z, &a.tuple.inverse())?, z: -a.z })
}

/// `G_(ω,n)` for the prefix `seq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerGroup {
    seq: PrimeSeq,
}

impl TowerGroup {
    pub fn new(seq: PrimeSeq) -> Self {
        Self { seq }
    }

    pub fn seq(&self) -> &PrimeSeq {
        &self.seq
    }

    pub fn level(&self) -> usize {
        self.seq.len()
    }
}

impl Group for TowerGroup {
    type Elem = TowerElement;

    fn identity(&self) -> TowerElement {
        TowerElement::identity(self.level())
    }

    fn multiply(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        tower_multiply(a, b, &self.seq).expect("element length matches the tower level")
    }

    fn inverse(&self, a: &TowerElement) -> TowerElement {
        tower_inverse(a, &self.seq).expect("element length matches the tower level")
    }

    fn is_identity(&self, a: &TowerElement) -> bool {
        a.is_identity()
    }
}

/// `α_n: G_(ω,n) → G_(ω,n-1)`, crushing the last factor.
pub fn bonding_map(a: &TowerElement) -> Result<TowerElement> {
    if a.is_empty() {
        return Err(Error::Precondition("bonding map needs level n >= 1".into()));
    }
    let mut tuple = a.tuple.clone();
    tuple.components.pop();
    Ok(TowerElement { tuple, z: a.z })
}

/// Right inverse of [`bonding_map`]: appends a trivial last component.
pub fn section(b: &TowerElement) -> TowerElement {
    let mut tuple = b.tuple.clone();
    tuple.components.push(FPElement::identity());
    TowerElement { tuple, z: b.z }
}

/// The inverse sequence `G_(ω,0) ← G_(ω,1) ← …` for a finite prefix of `ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSequence {
    seq: PrimeSeq,
}

impl InverseSequence {
    pub fn new(seq: PrimeSeq) -> Self {
        Self { seq }
    }

    pub fn depth(&self) -> usize {
        self.seq.len()
    }

    pub fn level(&self, n: usize) -> Result<TowerGroup> {
        if n > self.depth() {
            return Err(Error::InvalidInput(format!("level {n} beyond prefix length {}", self.depth())));
        }
        Ok(TowerGroup::new(self.seq.prefix(n)))
    }

    /// Image of a level-`from` element at level `to <= from`.
    pub fn bond(&self, a: &TowerElement, to: usize) -> Result<TowerElement> {
        if to > a.len() {
            return Err(Error::InvalidInput(format!("cannot bond level {} up to level {to}", a.len())));
        }
        let mut out = a.clone();
        while out.len() > to {
            out = bonding_map(&out)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoDecision {
    pub iso: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

/// Isomorphism of `G_(ω,n)` and `G_(η,n)`: equal prime sets.
pub fn iso_decide(a: &PrimeSeq, b: &PrimeSeq) -> IsoDecision {
    if a.len() != b.len() {
        return IsoDecision {
            iso: false,
            diagnostic: Some(format!(
                "levels differ ({} vs {}); the criterion covers equal levels only",
                a.len(),
                b.len()
            )),
        };
    }
    IsoDecision { iso: a == b, diagnostic: None }
}

/// An epimorphism `G_(ω,n) → G_(η,m)` exists iff the primes of `b` occur in `a`.
pub fn epi_decide(a: &PrimeSeq, b: &PrimeSeq) -> bool {
    b.is_subset_of(a)
}

/// The epimorphism `G_a → G_b` keeping factors whose primes match and
/// crushing the others, with `z ↦ z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerEpi {
    pub source: PrimeSeq,
    pub target: PrimeSeq,
    /// `slots[j]` is the source factor sent onto target factor `j`.
    pub slots: Vec<usize>,
}

impl TowerEpi {
    pub fn apply(&self, x: &TowerElement) -> Result<TowerElement> {
        check_len(&self.source, x)?;
        let components = self.slots.iter().map(|&i| x.tuple.components[i].clone()).collect();
        Ok(TowerElement { tuple: TupleElement { components }, z: x.z })
    }

    /// Source factors sent to the identity.
    pub fn crushed(&self) -> Vec<usize> {
        (0..self.source.len()).filter(|i| !self.slots.contains(i)).collect()
    }

    /// Checks `f(xy) = f(x) f(y)` on `pairs` random pairs and that every
    /// target generator has a preimage among the source generators.
    pub fn verify<R: Rng>(&self, rng: &mut R, pairs: usize) -> Result<bool> {
        for _ in 0..pairs {
            let x = random_tower_element(rng, self.source.len(), 3, 3, 3);
            let y = random_tower_element(rng, self.source.len(), 3, 3, 3);
            let lhs = self.apply(&tower_multiply(&x, &y, &self.source)?)?;
            let rhs = tower_multiply(&self.apply(&x)?, &self.apply(&y)?, &self.target)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        let images: Vec<TowerElement> =
            tower_generator_images(&self.source)?.values().map(|g| self.apply(g)).collect::<Result<_>>()?;
        let onto = tower_generator_images(&self.target)?.values().all(|g| images.contains(g));
        Ok(onto)
    }
}

pub fn build_epi(a: &PrimeSeq, b: &PrimeSeq) -> Result<TowerEpi> {
    let slots = b
        .primes()
        .iter()
        .map(|&p| a.primes().iter().position(|&q| q == p).ok_or(Error::NoEpimorphism { missing: p }))
        .collect::<Result<_>>()?;
    Ok(TowerEpi { source: a.clone(), target: b.clone(), slots })
}

/// Exact order of `φ_seq` with certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionOrderReport {
    pub order: u64,
    /// `φ^order` fixes every witness.
    pub restores_witnesses: bool,
    /// For each prime `p`: whether `φ^(order/p)` moves that factor's witness.
    pub necessity: Vec<(u64, bool)>,
}

impl ActionOrderReport {
    pub fn certified(&self) -> bool {
        self.restores_witnesses && self.necessity.iter().all(|&(_, moved)| moved)
    }
}

/// `φ_seq^k` evaluated directly as conjugation by `u_i^k`, without
/// reducing `k` modulo the orders.
fn unreduced_power(us: &[TreePair], k: i64, t: &TupleElement) -> TupleElement {
    TupleElement {
        components: us.iter().zip(&t.components).map(|(u, x)| partial_conjugation_power(u, k, x)).collect(),
    }
}

/// Order of the automorphism `φ_seq` of `S^n`: the product of the primes,
/// certified on the generators of each factor.
pub fn outer_action_order(seq: &PrimeSeq) -> Result<ActionOrderReport> {
    let n = seq.len();
    let order = seq.product().ok_or_else(|| Error::InvalidInput("product of primes overflows".into()))?;
    let us: Vec<TreePair> = seq.primes().iter().map(|&p| canonical_u(p)).collect::<Result<_>>()?;
    for (u, &p) in us.iter().zip(seq.primes()) {
        if u.order(p as usize) != Order::Finite(p as usize) {
            return Err(Error::Verification(format!("u for {p} does not have order {p}")));
        }
    }
    let witnesses: Vec<TupleElement> = (0..n)
        .flat_map(|i| {
            crate::freeprod::probe_generators().into_iter().map(move |g| TupleElement::embed(n, i, g))
        })
        .collect();
    let k = i64::try_from(order).map_err(|_| Error::InvalidInput("order too large".into()))?;
    let restores_witnesses = witnesses.iter().all(|w| unreduced_power(&us, k, w) == *w);
    let moving = FPElement::p2(thompson::standard_generators()[0].clone());
    let necessity = seq
        .primes()
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let w = TupleElement::embed(n, i, moving.clone());
            (p, unreduced_power(&us, k / p as i64, &w) != w)
        })
        .collect();
    Ok(ActionOrderReport { order, restores_witnesses, necessity })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProDistinct {
    EqualPrefix,
    Distinct { witness: u64 },
}

impl Serialize for ProDistinct {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            Self::EqualPrefix => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("distinct", &false)?;
                m.end()
            }
            Self::Distinct { witness } => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("distinct", &true)?;
                m.serialize_entry("witness", witness)?;
                m.end()
            }
        }
    }
}

fn common_prefix_len(a: &PrimeSeq, b: &PrimeSeq) -> usize {
    a.primes().iter().zip(b.primes()).take_while(|(x, y)| x == y).count()
}

/// Whether the inverse sequences through the prefixes `a` and `b` can be
/// pro-isomorphic. Past the common prefix the smaller next prime occurs in
/// one sequence only, so no later level of the other sequence maps onto a
/// later level of this one, and no three-level zig-zag exists.
pub fn pro_distinct(a: &PrimeSeq, b: &PrimeSeq) -> Result<ProDistinct> {
    if a == b {
        return Ok(ProDistinct::EqualPrefix);
    }
    let c = common_prefix_len(a, b);
    let witness = match (a.primes().get(c), b.primes().get(c)) {
        (Some(&x), Some(&y)) => x.min(y),
        (Some(&x), None) | (None, Some(&x)) => x,
        (None, None) => unreachable!("distinct sequences differ somewhere"),
    };
    if let LadderResult::Found { levels } = ladder_search(a, b, 3) {
        return Err(Error::Verification(format!("ladder {levels:?} contradicts witness {witness}")));
    }
    Ok(ProDistinct::Distinct { witness })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LadderLevel {
    pub side: Side,
    /// Prefix length.
    pub level: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum LadderResult {
    Found { levels: Vec<LadderLevel> },
    Exhausted,
}

/// Brute-force search for a zig-zag of `depth` levels alternating between
/// prefixes of `a` and `b`, each epimorphic onto the one before (by the
/// prime-set criterion), with strictly increasing levels on each side. Only
/// levels beyond the common prefix are used unless `a = b`.
pub fn ladder_search(a: &PrimeSeq, b: &PrimeSeq, depth: usize) -> LadderResult {
    let min_level = if a == b { 1 } else { common_prefix_len(a, b) + 1 };
    let prefix = |side: Side, n: usize| match side {
        Side::A => a.prefix(n),
        Side::B => b.prefix(n),
    };
    let max = |side: Side| match side {
        Side::A => a.len(),
        Side::B => b.len(),
    };

    fn extend(
        chain: &mut Vec<LadderLevel>,
        depth: usize,
        min_level: usize,
        prefix: &dyn Fn(Side, usize) -> PrimeSeq,
        max: &dyn Fn(Side) -> usize,
    ) -> bool {
        if chain.len() == depth {
            return true;
        }
        let last = *chain.last().expect("chain starts nonempty");
        let side = if last.side == Side::A { Side::B } else { Side::A };
        let floor = chain.iter().rev().find(|l| l.side == side).map_or(min_level, |l| l.level + 1);
        for n in floor..=max(side) {
            // the higher level maps onto the lower one
            if epi_decide(&prefix(side, n), &prefix(last.side, last.level)) {
                chain.push(LadderLevel { side, level: n });
                if extend(chain, depth, min_level, prefix, max) {
                    return true;
                }
                chain.pop();
            }
        }
        false
    }

    if depth == 0 {
        return LadderResult::Found { levels: Vec::new() };
    }
    for start in [Side::A, Side::B] {
        for n in min_level..=max(start) {
            let mut chain = vec![LadderLevel { side: start, level: n }];
            if extend(&mut chain, depth, min_level, &prefix, &max) {
                return LadderResult::Found { levels: chain };
            }
        }
    }
    LadderResult::Exhausted
}

/// Generator names of the tower presentation for factor `i`.
pub fn factor_generators(i: usize) -> Vec<String> {
    let names = ["A", "B", "C", "pi0", "pi1"];
    let mut out: Vec<String> = names.iter().map(|g| format!("s{i}.p1.{g}")).collect();
    out.push(format!("s{i}.p1.u"));
    out.extend(names.iter().map(|g| format!("s{i}.p2.{g}")));
    out
}

pub const Z_GENERATOR: &str = "z";

/// Kernel and quotient presentations plus action data for `G_(ω,n)`. The
/// kernel presentation records the order of each `u_i` and that distinct
/// factors commute.
pub fn tower_semidirect(seq: &PrimeSeq) -> Result<(Presentation, Presentation, SemidirectData)> {
    let n = seq.len();
    let k_gens: Vec<String> = (0..n).flat_map(factor_generators).collect();
    let mut k_rel = Vec::new();
    for (i, &p) in seq.primes().iter().enumerate() {
        let u = format!("s{i}.p1.u");
        k_rel.push(GenWord { letters: vec![Letter::new(u, 1); p as usize] });
        for j in i + 1..n {
            for x in factor_generators(i) {
                for y in factor_generators(j) {
                    k_rel.push(GenWord::from_pairs(&[(&x, -1), (&y, -1), (&x, 1), (&y, 1)]));
                }
            }
        }
    }
    let pres_k = Presentation::new(k_gens.clone(), k_rel)?;
    let pres_q = Presentation::free(&[Z_GENERATOR]);
    let mut action = BTreeMap::new();
    let mut inverse_action = BTreeMap::new();
    for i in 0..n {
        let u = format!("s{i}.p1.u");
        for g in factor_generators(i) {
            let (fwd, back) = if g.contains(".p2.") {
                (
                    GenWord::from_pairs(&[(&u, 1), (&g, 1), (&u, -1)]),
                    GenWord::from_pairs(&[(&u, -1), (&g, 1), (&u, 1)]),
                )
            } else {
                (GenWord::generator(&g), GenWord::generator(&g))
            };
            action.insert(g.clone(), fwd);
            inverse_action.insert(g, back);
        }
    }
    let sd = SemidirectData {
        k_gens,
        q_gens: vec![Z_GENERATOR.to_string()],
        action: BTreeMap::from([(Z_GENERATOR.to_string(), action)]),
        inverse_action: BTreeMap::from([(Z_GENERATOR.to_string(), inverse_action)]),
    };
    Ok((pres_k, pres_q, sd))
}

pub fn tower_presentation(seq: &PrimeSeq) -> Result<Presentation> {
    let (k, q, sd) = tower_semidirect(seq)?;
    crate::presentation::semidirect_presentation(&k, &q, &sd)
}

/// The concrete element of `G_(ω,n)` named by each presentation generator.
pub fn tower_generator_images(seq: &PrimeSeq) -> Result<BTreeMap<String, TowerElement>> {
    let n = seq.len();
    let v = thompson::standard_generators();
    let mut out = BTreeMap::new();
    for (i, &p) in seq.primes().iter().enumerate() {
        let names = factor_generators(i);
        let mut elems: Vec<FPElement> = v.iter().cloned().map(FPElement::p1).collect();
        elems.push(FPElement::p1(canonical_u(p)?));
        elems.extend(v.iter().cloned().map(FPElement::p2));
        for (name, x) in names.into_iter().zip(elems) {
            out.insert(name, TowerElement::kernel(TupleElement::embed(n, i, x)));
        }
    }
    out.insert(Z_GENERATOR.to_string(), TowerElement::shift(n));
    Ok(out)
}

/// A uniformly random word of length `len` in the tower generators.
pub fn random_tower_word<R: Rng>(rng: &mut R, seq: &PrimeSeq, len: usize) -> GenWord {
    let mut gens: Vec<String> = (0..seq.len()).flat_map(factor_generators).collect();
    gens.push(Z_GENERATOR.to_string());
    let letters = (0..len)
        .map(|_| {
            let g = gens[rng.random_range(0..gens.len())].clone();
            Letter::new(g, if rng.random_bool(0.5) { 1 } else { -1 })
        })
        .collect();
    GenWord { letters }
}

/// A random element of `G_(ω,n)`, `n = len`, with `|z| <= z_bound`.
pub fn random_tower_element<R: Rng>(
    rng: &mut R,
    n: usize,
    syllables: usize,
    v_len: usize,
    z_bound: i64,
) -> TowerElement {
    let components = (0..n).map(|_| random_fp_element(rng, syllables, v_len)).collect();
    TowerElement { tuple: TupleElement { components }, z: rng.random_range(-z_bound..=z_bound) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{evaluate, normal_form, verify_hom};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn seq(p: &[u64]) -> PrimeSeq {
        PrimeSeq::new(p.to_vec()).unwrap()
    }

    #[test]
    fn multiplication_without_shift_is_componentwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = seq(&[2, 3]);
        let mut x = random_tower_element(&mut rng, 2, 3, 3, 0);
        let y = random_tower_element(&mut rng, 2, 3, 3, 4);
        x.z = 0;
        let xy = tower_multiply(&x, &y, &s).unwrap();
        assert_eq!(xy.tuple, x.tuple.multiply(&y.tuple).unwrap());
        assert_eq!(xy.z, y.z);
        assert_eq!(tower_multiply(&x, &TowerElement::identity(2), &s).unwrap(), x);
    }

    #[test]
    fn shift_conjugates_by_u() {
        let s = seq(&[2, 3, 5]);
        let x = FPElement::p2(thompson::standard_generators()[1].clone());
        for i in 0..3 {
            let k = TowerElement::kernel(TupleElement::embed(3, i, x.clone()));
            let a = TowerElement::shift(3);
            let c = tower_multiply(&tower_multiply(&a, &k, &s).unwrap(), &tower_inverse(&a, &s).unwrap(), &s).unwrap();
            let u = canonical_u(s.primes()[i]).unwrap();
            let expected = FPElement::p1(u.clone()).multiply(&x).multiply(&FPElement::p1(u.inverse()));
            assert_eq!(c, TowerElement::kernel(TupleElement::embed(3, i, expected)));
        }
    }

    #[test]
    fn group_axioms_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for p in [&[2][..], &[2, 3], &[2, 3, 5]] {
            let s = seq(p);
            let g = TowerGroup::new(s.clone());
            for _ in 0..40 {
                let [x, y, z] = std::array::from_fn(|_| random_tower_element(&mut rng, s.len(), 2, 2, 3));
                assert_eq!(g.multiply(&g.multiply(&x, &y), &z), g.multiply(&x, &g.multiply(&y, &z)));
                assert!(g.multiply(&x, &g.inverse(&x)).is_identity());
                assert!(g.multiply(&g.inverse(&x), &x).is_identity());
            }
        }
        let err = tower_multiply(&TowerElement::identity(1), &TowerElement::identity(2), &seq(&[2])).unwrap_err();
        assert!(matches!(err, Error::LengthMismatch { .. }));
    }

    #[test]
    fn bonding_and_section() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = seq(&[2, 3, 5]);
        let lower = seq(&[2, 3]);
        for _ in 0..50 {
            let b = random_tower_element(&mut rng, 2, 3, 3, 3);
            assert_eq!(bonding_map(&section(&b)).unwrap(), b);
            let x = random_tower_element(&mut rng, 3, 3, 3, 3);
            let y = random_tower_element(&mut rng, 3, 3, 3, 3);
            let lhs = bonding_map(&tower_multiply(&x, &y, &s).unwrap()).unwrap();
            let rhs = tower_multiply(&bonding_map(&x).unwrap(), &bonding_map(&y).unwrap(), &lower).unwrap();
            assert_eq!(lhs, rhs);
        }
        let killed = TowerElement::kernel(TupleElement::embed(3, 2, random_fp_element(&mut rng, 3, 3)));
        assert!(bonding_map(&killed).unwrap().is_identity());
        let mut shifted = TowerElement::identity(3);
        shifted.z = 2;
        assert!(!bonding_map(&shifted).unwrap().is_identity());
        assert!(bonding_map(&TowerElement::identity(0)).is_err());

        let inv = InverseSequence::new(s);
        assert_eq!(inv.level(2).unwrap().seq(), &lower);
        assert_eq!(inv.bond(&killed, 0).unwrap(), TowerElement::identity(0));
    }

    #[test]
    fn iso_examples() {
        assert!(iso_decide(&seq(&[2, 3, 5]), &seq(&[2, 3, 5])).iso);
        assert!(!iso_decide(&seq(&[2, 3]), &seq(&[2, 5])).iso);
        assert!(iso_decide(&seq(&[]), &seq(&[])).iso);
        let d = iso_decide(&seq(&[2]), &seq(&[2, 3]));
        assert!(!d.iso && d.diagnostic.is_some());
    }

    #[test]
    fn epi_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(epi_decide(&seq(&[2, 3, 5]), &seq(&[2, 5])));
        let f = build_epi(&seq(&[2, 3, 5]), &seq(&[2, 5])).unwrap();
        assert_eq!(f.slots, vec![0, 2]);
        assert_eq!(f.crushed(), vec![1]);
        assert!(f.verify(&mut rng, 30).unwrap());
        assert!(!epi_decide(&seq(&[2, 3]), &seq(&[5, 7])));
        assert_eq!(build_epi(&seq(&[2, 3]), &seq(&[5, 7])), Err(Error::NoEpimorphism { missing: 5 }));
        assert!(epi_decide(&seq(&[3, 7]), &seq(&[])));
        assert!(build_epi(&seq(&[3, 7]), &seq(&[])).unwrap().verify(&mut rng, 10).unwrap());
    }

    #[test]
    fn wrong_epi_fails_verification() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        // factor with prime 3 sent onto the factor with prime 2
        let f = TowerEpi { source: seq(&[2, 3]), target: seq(&[2]), slots: vec![1] };
        assert!(!f.verify(&mut rng, 30).unwrap());
    }

    #[test]
    fn action_orders() {
        let r = outer_action_order(&seq(&[])).unwrap();
        assert_eq!(r.order, 1);
        assert!(r.certified());
        let r = outer_action_order(&seq(&[2])).unwrap();
        assert_eq!(r.order, 2);
        assert!(r.certified());
        let r = outer_action_order(&seq(&[2, 3])).unwrap();
        assert_eq!(r.order, 6);
        assert_eq!(r.necessity, vec![(2, true), (3, true)]);
        assert!(r.restores_witnesses);
    }

    #[test]
    fn pro_distinct_examples() {
        assert_eq!(pro_distinct(&seq(&[2, 3, 5, 7]), &seq(&[2, 3, 5, 7])).unwrap(), ProDistinct::EqualPrefix);
        assert_eq!(
            pro_distinct(&seq(&[2, 3, 5]), &seq(&[2, 5, 7])).unwrap(),
            ProDistinct::Distinct { witness: 3 }
        );
        assert_eq!(pro_distinct(&seq(&[3, 5]), &seq(&[2, 3])).unwrap(), ProDistinct::Distinct { witness: 2 });
        assert_eq!(
            serde_json::to_string(&ProDistinct::Distinct { witness: 3 }).unwrap(),
            r#"{"distinct":true,"witness":3}"#
        );
    }

    #[test]
    fn ladder_examples() {
        let found = ladder_search(&seq(&[2, 3, 5]), &seq(&[2, 3, 5]), 3);
        assert!(matches!(found, LadderResult::Found { ref levels } if levels.len() == 3));
        assert_eq!(ladder_search(&seq(&[2, 3, 5]), &seq(&[2, 5, 7]), 3), LadderResult::Exhausted);
        assert_eq!(ladder_search(&seq(&[2, 3, 5, 7, 11]), &seq(&[2, 3, 5, 7, 13]), 4), LadderResult::Exhausted);
    }

    #[test]
    fn presentation_maps_onto_the_concrete_group() {
        for p in [&[2][..], &[2, 3]] {
            let s = seq(p);
            let pres = tower_presentation(&s).unwrap();
            let images = tower_generator_images(&s).unwrap();
            assert!(verify_hom(&pres, &TowerGroup::new(s.clone()), &images).unwrap().is_verified());
        }
    }

    #[test]
    fn normal_form_evaluates_to_the_same_element() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let s = seq(&[2, 3]);
        let (_, _, sd) = tower_semidirect(&s).unwrap();
        let g = TowerGroup::new(s.clone());
        let images = tower_generator_images(&s).unwrap();
        for _ in 0..30 {
            let w = random_tower_word(&mut rng, &s, 15);
            let nf = normal_form(&w, &sd).unwrap();
            assert_eq!(evaluate(&g, &w, &images).unwrap(), evaluate(&g, &nf, &images).unwrap());
            assert_eq!(nf.exponent_sum(Z_GENERATOR), w.exponent_sum(Z_GENERATOR));
        }
    }
}
