//! Finite presentations and words in their generators.
//!
//! Generators are named by strings. A word is a list of letters, each a
//! generator with exponent `±1`. Wire format of a presentation:
//! `{"generators": [...], "relators": [[["a", 1], ["b", -1]], ...]}`.

mod bs;
mod gt;
mod semidirect;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bs::{bs_inverse, bs_multiply, bs_project, BSElement, BsGroup, Dyadic};
pub use gt::{gt_tower_epi, gt_tower_presentation, GtEpi};
pub use semidirect::{normal_form, semidirect_presentation, SemidirectData};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(String, i8)", into = "(String, i8)")]
pub struct Letter {
    pub generator: String,
    /// `+1` or `-1`.
    pub exp: i8,
}

impl TryFrom<(String, i8)> for Letter {
    type Error = Error;

    fn try_from((generator, exp): (String, i8)) -> Result<Self> {
        if exp != 1 && exp != -1 {
            return Err(Error::InvalidInput(format!("exponent of {generator} must be ±1, got {exp}")));
        }
        Ok(Self { generator, exp })
    }
}

impl From<Letter> for (String, i8) {
    fn from(l: Letter) -> Self {
        (l.generator, l.exp)
    }
}

impl Letter {
    pub fn new(generator: impl Into<String>, exp: i8) -> Self {
        Self::try_from((generator.into(), exp)).expect("exponent is ±1")
    }

    pub fn inverse(&self) -> Self {
        Self { generator: self.generator.clone(), exp: -self.exp }
    }

    fn cancels(&self, other: &Self) -> bool {
        self.generator == other.generator && self.exp == -other.exp
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "{}", self.generator)
        } else {
            write!(f, "{}^-1", self.generator)
        }
    }
}

/// A word in named generators.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GenWord {
    pub letters: Vec<Letter>,
}

impl fmt::Debug for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| format!("{l:?}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl GenWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a word from `(generator, exponent)` pairs.
    pub fn from_pairs(pairs: &[(&str, i8)]) -> Self {
        Self { letters: pairs.iter().map(|&(g, e)| Letter::new(g, e)).collect() }
    }

    pub fn generator(name: &str) -> Self {
        Self::from_pairs(&[(name, 1)])
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Self { letters }
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            push_reduced(&mut out, l.clone());
        }
        Self { letters: out }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(&w[1]))
    }

    /// Sum of exponents of `generator`.
    pub fn exponent_sum(&self, generator: &str) -> i64 {
        self.letters.iter().filter(|l| l.generator == generator).map(|l| i64::from(l.exp)).sum()
    }

    /// Replaces every letter by the image word of its generator (inverted for
    /// exponent `-1`) and freely reduces.
    pub fn substitute(&self, images: &BTreeMap<String, GenWord>) -> Result<Self> {
        let mut out = Vec::new();
        for l in &self.letters {
            let img = images.get(&l.generator).ok_or_else(|| Error::UnmappedGenerator(l.generator.clone()))?;
            let img = if l.exp == 1 { img.clone() } else { img.inverse() };
            for x in img.letters {
                push_reduced(&mut out, x);
            }
        }
        Ok(Self { letters: out })
    }

    pub fn mentions_only(&self, gens: &HashSet<&str>) -> bool {
        self.letters.iter().all(|l| gens.contains(l.generator.as_str()))
    }
}

pub(crate) fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last().is_some_and(|top| top.cancels(&l)) {
        out.pop();
    } else {
        out.push(l);
    }
}

pub fn free_reduce(w: &GenWord) -> GenWord {
    w.free_reduce()
}

/// `⟨generators | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<GenWord>,
}

#[derive(Deserialize)]
struct PresentationRepr {
    generators: Vec<String>,
    relators: Vec<GenWord>,
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PresentationRepr::deserialize(d)?;
        Presentation::new(r.generators, r.relators).map_err(serde::de::Error::custom)
    }
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<GenWord>) -> Result<Self> {
        let set: HashSet<&str> = generators.iter().map(String::as_str).collect();
        if set.len() != generators.len() {
            return Err(Error::InvalidInput("duplicate generator names".into()));
        }
        for r in &relators {
            if let Some(l) = r.letters.iter().find(|l| !set.contains(l.generator.as_str())) {
                return Err(Error::UnknownGenerator(l.generator.clone()));
            }
        }
        Ok(Self { generators, relators })
    }

    /// A free group: generators, no relators.
    pub fn free(generators: &[&str]) -> Self {
        Self::new(generators.iter().map(|s| s.to_string()).collect(), Vec::new()).expect("distinct names")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[GenWord] {
        &self.relators
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.generators.iter().any(|g| g == name)
    }

    /// Same generators and the same relators after free reduction, in order.
    pub fn equivalent_after_reduction(&self, other: &Self) -> bool {
        self.generators == other.generators
            && self.relators.len() == other.relators.len()
            && self.relators.iter().zip(&other.relators).all(|(a, b)| a.free_reduce() == b.free_reduce())
    }
}

/// The group operations needed to evaluate words.
pub trait Group {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }
}

/// Evaluates a word given images of its generators.
pub fn evaluate<G: Group>(group: &G, word: &GenWord, images: &BTreeMap<String, G::Elem>) -> Result<G::Elem> {
    let mut acc = group.identity();
    for l in &word.letters {
        let g = images.get(&l.generator).ok_or_else(|| Error::UnmappedGenerator(l.generator.clone()))?;
        acc = if l.exp == 1 { group.multiply(&acc, g) } else { group.multiply(&acc, &group.inverse(g)) };
    }
    Ok(acc)
}

/// Result of checking that generator images respect every relator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HomCheck {
    Verified,
    Failed { relator_index: usize, relator: GenWord },
}

impl HomCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self, Self::Verified)
    }
}

/// Checks that `images` defines a homomorphism from `pres` to `target`.
pub fn verify_hom<G: Group>(
    pres: &Presentation,
    target: &G,
    images: &BTreeMap<String, G::Elem>,
) -> Result<HomCheck> {
    if let Some(g) = pres.generators.iter().find(|g| !images.contains_key(*g)) {
        return Err(Error::UnmappedGenerator(g.clone()));
    }
    for (i, r) in pres.relators.iter().enumerate() {
        if !target.is_identity(&evaluate(target, r, images)?) {
            return Ok(HomCheck::Failed { relator_index: i, relator: r.clone() });
        }
    }
    Ok(HomCheck::Verified)
}
