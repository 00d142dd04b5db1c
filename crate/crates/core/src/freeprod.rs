//! The free product `S = P1 * P2` of two copies of Thompson's group V.
//!
//! Elements are reduced syllable words: no identity syllables and no two
//! adjacent syllables from the same factor. Partial conjugation `φ_u` for
//! `u ∈ P1` fixes `P1` pointwise and sends `x ∈ P2` to the free-product
//! word `u x u⁻¹`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::PrimeSeq;
use crate::thompson::{self, element_of_order, Order, TreePair};

/// Which copy of V a syllable lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Factor {
    P1,
    P2,
}

impl TryFrom<u8> for Factor {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Self::P1),
            2 => Ok(Self::P2),
            _ => Err(Error::InvalidInput(format!("factor must be 1 or 2, got {v}"))),
        }
    }
}

impl From<Factor> for u8 {
    fn from(f: Factor) -> u8 {
        match f {
            Factor::P1 => 1,
            Factor::P2 => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Syllable {
    pub factor: Factor,
    pub element: TreePair,
}

/// A reduced word in `P1 * P2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Syllable>", into = "Vec<Syllable>")]
pub struct FPElement {
    syllables: Vec<Syllable>,
}

impl From<Vec<Syllable>> for FPElement {
    fn from(s: Vec<Syllable>) -> Self {
        Self::new(s)
    }
}

impl From<FPElement> for Vec<Syllable> {
    fn from(e: FPElement) -> Self {
        e.syllables
    }
}

impl FPElement {
    /// Reduces an arbitrary syllable list.
    pub fn new(syllables: Vec<Syllable>) -> Self {
        let mut out: Vec<Syllable> = Vec::with_capacity(syllables.len());
        for s in syllables {
            push_reduced(&mut out, s);
        }
        Self { syllables: out }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn single(factor: Factor, element: TreePair) -> Self {
        Self::new(vec![Syllable { factor, element }])
    }

    pub fn p1(element: TreePair) -> Self {
        Self::single(Factor::P1, element)
    }

    pub fn p2(element: TreePair) -> Self {
        Self::single(Factor::P2, element)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = self.syllables.clone();
        for s in &other.syllables {
            push_reduced(&mut out, s.clone());
        }
        Self { syllables: out }
    }

    pub fn inverse(&self) -> Self {
        Self {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable { factor: s.factor, element: s.element.inverse() })
                .collect(),
        }
    }

    /// True when every syllable lies in `P1`.
    pub fn in_p1(&self) -> bool {
        self.syllables.iter().all(|s| s.factor == Factor::P1)
    }
}

fn push_reduced(out: &mut Vec<Syllable>, s: Syllable) {
    if s.element.is_identity() {
        return;
    }
    match out.last_mut() {
        Some(top) if top.factor == s.factor => {
            let merged = top.element.multiply(&s.element);
            if merged.is_identity() {
                out.pop();
            } else {
                top.element = merged;
            }
        }
        _ => out.push(s),
    }
}

/// `φ_u(w)`: `P1` syllables fixed, each `P2` syllable `x` replaced by `u x u⁻¹`.
pub fn partial_conjugation(u: &TreePair, w: &FPElement) -> FPElement {
    let u_inv = u.inverse();
    let mut out = Vec::with_capacity(w.syllables.len() * 3);
    for s in &w.syllables {
        match s.factor {
            Factor::P1 => out.push(s.clone()),
            Factor::P2 => {
                out.push(Syllable { factor: Factor::P1, element: u.clone() });
                out.push(s.clone());
                out.push(Syllable { factor: Factor::P1, element: u_inv.clone() });
            }
        }
    }
    FPElement::new(out)
}

/// `φ_u^k(w)`. Powers of a single partial conjugation satisfy `φ_u^k = φ_{u^k}`.
pub fn partial_conjugation_power(u: &TreePair, k: i64, w: &FPElement) -> FPElement {
    partial_conjugation(&u.pow(k), w)
}

/// Order of `φ_u` checked at the automorphism level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismOrderReport {
    pub order: usize,
    /// `φ_u^order` fixes every sample word.
    pub restores_sample: bool,
    /// The `P2` witness is moved by every `φ_u^k`, `0 < k < order`.
    pub witness_moved_below_order: bool,
}

impl AutomorphismOrderReport {
    pub fn holds(&self) -> bool {
        self.restores_sample && self.witness_moved_below_order
    }
}

pub const ORDER_CAP: usize = 1_000;

pub fn automorphism_order_check(u: &TreePair, sample: &[FPElement]) -> Result<AutomorphismOrderReport> {
    let order = match u.order(ORDER_CAP) {
        Order::Finite(p) => p,
        Order::ExceedsCap => return Err(Error::InfiniteOrder { cap: ORDER_CAP }),
    };
    let phi_p = |w: &FPElement| partial_conjugation_power(u, order as i64, w);
    let restores_sample = sample.iter().all(|w| phi_p(w) == *w);
    let witness = FPElement::p2(thompson::standard_generators()[0].clone());
    let witness_moved_below_order =
        (1..order).all(|k| partial_conjugation_power(u, k as i64, &witness) != witness);
    Ok(AutomorphismOrderReport { order, restores_sample, witness_moved_below_order })
}

/// An element of `S^n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TupleElement {
    pub components: Vec<FPElement>,
}

impl TupleElement {
    pub fn identity(n: usize) -> Self {
        Self { components: vec![FPElement::identity(); n] }
    }

    /// `x` placed in slot `i` of an otherwise trivial `n`-tuple.
    pub fn embed(n: usize, i: usize, x: FPElement) -> Self {
        let mut t = Self::identity(n);
        t.components[i] = x;
        t
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(FPElement::is_identity)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(Self {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a.multiply(b)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        Self { components: self.components.iter().map(FPElement::inverse).collect() }
    }
}

/// The canonical `u` of prime order `p`.
pub fn canonical_u(p: u64) -> Result<TreePair> {
    element_of_order(p)
}

/// `φ_seq^k(t)`, acting by `φ_{u_i}^k` on component `i`.
pub fn tuple_automorphism_power(seq: &PrimeSeq, k: i64, t: &TupleElement) -> Result<TupleElement> {
    if seq.len() != t.len() {
        return Err(Error::LengthMismatch { left: seq.len(), right: t.len() });
    }
    if k == 0 {
        return Ok(t.clone());
    }
    let components = seq
        .primes()
        .iter()
        .zip(&t.components)
        .map(|(&p, x)| {
            let u = canonical_u(p)?;
            let reduced = k.rem_euclid(p as i64);
            Ok(partial_conjugation_power(&u, reduced, x))
        })
        .collect::<Result<_>>()?;
    Ok(TupleElement { components })
}

pub fn tuple_automorphism(seq: &PrimeSeq, t: &TupleElement) -> Result<TupleElement> {
    tuple_automorphism_power(seq, 1, t)
}

/// Generators of `S` probed when deciding whether a homomorphism kills a
/// factor: the standard generators of each copy of V.
pub fn probe_generators() -> Vec<FPElement> {
    let gens = thompson::standard_generators();
    gens.iter()
        .cloned()
        .map(FPElement::p1)
        .chain(gens.iter().cloned().map(FPElement::p2))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternShape {
    /// Exactly one nontrivial cell in every row and every column.
    Permutation,
    /// Exactly one per column, at most one per row.
    Injection,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StraighteningPattern {
    /// `cells[i][j]`: some probe generator of source factor `i` has a
    /// nontrivial `j`-th projection.
    pub cells: Vec<Vec<bool>>,
    pub shape: PatternShape,
}

/// Homomorphism `S^n -> S^m` given by the images of [`probe_generators`] in
/// each source factor: `images[i][g]` is the image of generator `g` of `S_i`.
pub fn straightening_pattern(images: &[Vec<TupleElement>], m: usize) -> Result<StraighteningPattern> {
    let probes = probe_generators().len();
    let mut cells = vec![vec![false; m]; images.len()];
    for (i, row) in images.iter().enumerate() {
        if row.len() != probes {
            return Err(Error::LengthMismatch { left: probes, right: row.len() });
        }
        for t in row {
            if t.len() != m {
                return Err(Error::LengthMismatch { left: m, right: t.len() });
            }
            for (j, c) in t.components.iter().enumerate() {
                cells[i][j] |= !c.is_identity();
            }
        }
    }
    let row_counts: Vec<usize> = cells.iter().map(|r| r.iter().filter(|&&c| c).count()).collect();
    let col_counts: Vec<usize> = (0..m).map(|j| cells.iter().filter(|r| r[j]).count()).collect();
    let shape = if row_counts.iter().all(|&c| c == 1) && col_counts.iter().all(|&c| c == 1) {
        PatternShape::Permutation
    } else if col_counts.iter().all(|&c| c == 1) && row_counts.iter().all(|&c| c <= 1) {
        PatternShape::Injection
    } else {
        PatternShape::Other
    };
    Ok(StraighteningPattern { cells, shape })
}

/// A random reduced word with up to `syllables` syllables of random V elements.
pub fn random_fp_element<R: Rng>(rng: &mut R, syllables: usize, v_len: usize) -> FPElement {
    let mut factor = if rng.random_bool(0.5) { Factor::P1 } else { Factor::P2 };
    let count = rng.random_range(0..=syllables);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(Syllable { factor, element: thompson::random_element(rng, v_len.max(1)) });
        factor = if factor == Factor::P1 { Factor::P2 } else { Factor::P1 };
    }
    FPElement::new(out)
}
