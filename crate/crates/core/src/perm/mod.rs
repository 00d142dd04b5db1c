//! Finite permutation groups.
//!
//! Groups are always fully enumerated: the closure is computed breadth-first
//! with a hash set and refused beyond a configurable cap. Every structural
//! question (derived series, perfect core, normal subgroups, quotients) is
//! answered by direct manipulation of the enumerated element set, so the
//! results serve as brute-force ground truth for the extension lemmas.

pub mod catalog;
mod hom;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use hom::{are_isomorphic, PermHom};

/// Default closure cap.
pub const DEFAULT_CAP: usize = 20_000;

/// A bijection of `{0..n-1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidInput(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                if p as usize >= degree {
                    return Err(Error::InvalidInput(format!("point {p} out of range")));
                }
                images[p as usize] = next;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// `self * other`, acting as `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self { images: other.images.iter().map(|&p| self.images[p as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u32;
        }
        Self { images }
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.inverse().compose(&b.inverse()).compose(a).compose(b)
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.compose(self).compose(&g.inverse())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<u32>::deserialize(d)?;
        Permutation::from_images(images).map_err(serde::de::Error::custom)
    }
}

/// Wire format of a group: degree plus generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

/// A finite permutation group together with its enumerated closure.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::generate_with_cap(degree, generators, DEFAULT_CAP)
    }

    pub fn generate_with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let next = elements[i].compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::SizeLimit { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(Self { degree, generators, elements, index })
    }

    pub fn from_spec(spec: GroupSpec) -> Result<Self> {
        Self::generate(spec.degree, spec.generators)
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec { degree: self.degree, generators: self.generators.clone() }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::generate(degree, Vec::new()).expect("trivial group fits any cap")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Same element set. Orders are compared first, so this is cheap when they differ.
    pub fn same_elements(&self, other: &Self) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Normal closure of `seeds` inside `self`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<Self> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = Self::trivial(self.degree);
        let mut pending: Vec<Permutation> = seeds.to_vec();
        loop {
            for s in pending.drain(..) {
                if !current.contains(&s) {
                    gens.push(s);
                    current = Self::generate(self.degree, gens.clone())?;
                }
            }
            for g in &self.generators {
                for n in &gens {
                    let c = n.conjugate_by(g);
                    if !current.contains(&c) {
                        pending.push(c);
                    }
                }
            }
            if pending.is_empty() {
                return Ok(current);
            }
        }
    }

    /// The subgroup generated by all commutators: the normal closure of the
    /// commutators of generator pairs.
    pub fn commutator_subgroup(&self) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut seeds = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() && seen.insert(c.clone()) {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(&seeds)
    }

    /// `[G, G^(1), G^(2), ...]`, stopping at the first term equal to its
    /// commutator subgroup. The last entry is the perfect core.
    pub fn derived_series(&self) -> Result<Vec<Self>> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("non-empty");
            let next = last.commutator_subgroup()?;
            if next.order() == last.order() {
                return Ok(series);
            }
            series.push(next);
        }
    }

    pub fn perfect_core(&self) -> Result<Self> {
        Ok(self.derived_series()?.pop().expect("non-empty"))
    }

    pub fn is_perfect(&self) -> Result<bool> {
        Ok(self.commutator_subgroup()?.order() == self.order())
    }

    /// Finite groups only: hypo-Abelian iff the perfect core is trivial.
    pub fn is_hypo_abelian(&self) -> Result<bool> {
        Ok(self.perfect_core()?.is_trivial())
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Checks that `n` is a normal subgroup of `self`.
    pub fn check_normal(&self, n: &Self) -> Result<()> {
        if n.degree != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: n.degree });
        }
        if let Some(bad) = n.generators.iter().find(|x| !self.contains(x)) {
            return Err(Error::InvalidInput(format!("{bad:?} is not an element of the group")));
        }
        for (gi, g) in self.generators.iter().enumerate() {
            for x in &n.generators {
                if !n.contains(&x.conjugate_by(g)) {
                    return Err(Error::NotNormal { generator: gi, element: x.images.clone() });
                }
            }
        }
        Ok(())
    }

    /// Conjugacy classes as lists of element indices.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut k = 0;
            while k < members.len() {
                let x = &self.elements[members[k]];
                for g in &self.generators {
                    let y = self.index[&x.conjugate_by(g)];
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            classes.push(members);
        }
        classes
    }

    /// Every normal subgroup, ordered by size.
    pub fn normal_subgroups(&self) -> Result<Vec<Self>> {
        let key = |h: &Self| -> Vec<usize> {
            let mut k: Vec<usize> = h.elements.iter().map(|e| self.index[e]).collect();
            k.sort_unstable();
            k
        };
        let mut found: Vec<Self> = Vec::new();
        let mut keys = HashSet::new();
        let trivial = Self::trivial(self.degree);
        keys.insert(key(&trivial));
        found.push(trivial);
        for class in self.conjugacy_classes() {
            let n = self.normal_closure(&[self.elements[class[0]].clone()])?;
            if keys.insert(key(&n)) {
                found.push(n);
            }
        }
        // joins of normal subgroups are normal; every normal subgroup is a
        // join of normal closures of single elements
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let mut gens = found[i].generators.clone();
                gens.extend(found[j].generators.iter().cloned());
                let joined = Self::generate(self.degree, gens)?;
                if keys.insert(key(&joined)) {
                    found.push(joined);
                }
            }
            i += 1;
        }
        found.sort_by_key(Self::order);
        Ok(found)
    }

    /// Quotient by a normal subgroup, realised as the action on left cosets.
    pub fn quotient(&self, n: &Self) -> Result<Quotient> {
        self.check_normal(n)?;
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(i);
            for x in &n.elements {
                coset_of[self.index[&g.compose(x)]] = c;
            }
        }
        let action = |x: &Permutation| -> Permutation {
            let images = reps
                .iter()
                .map(|&r| coset_of[self.index[&x.compose(&self.elements[r])]] as u32)
                .collect();
            Permutation { images }
        };
        let images: Vec<Permutation> = self.generators.iter().map(action).collect();
        let group = Self::generate(reps.len(), images.clone())?;
        let map = PermHom::from_generator_images(self, &group, &images)?;
        Ok(Quotient { group, map })
    }

    /// Direct product on the disjoint union of the point sets.
    pub fn direct_product(&self, other: &Self) -> Result<Self> {
        let degree = self.degree + other.degree;
        let shift = self.degree as u32;
        let mut gens = Vec::new();
        for g in &self.generators {
            let mut images = g.images.clone();
            images.extend(shift..degree as u32);
            gens.push(Permutation { images });
        }
        for g in &other.generators {
            let mut images: Vec<u32> = (0..shift).collect();
            images.extend(g.images.iter().map(|p| p + shift));
            gens.push(Permutation { images });
        }
        Self::generate(degree, gens)
    }
}

/// A coset-action quotient together with its projection map.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: PermGroup,
    pub map: PermHom,
}

/// Outcome of checking the perfect and hypo-Abelian extension lemmas on one
/// normal subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub group_order: usize,
    pub kernel_order: usize,
    pub quotient_order: usize,
    pub kernel_perfect: bool,
    pub quotient_perfect: bool,
    pub group_perfect: bool,
    pub kernel_hypo_abelian: bool,
    pub quotient_hypo_abelian: bool,
    pub group_hypo_abelian: bool,
    /// Perfect-by-perfect implies perfect.
    pub perfect_lemma_holds: bool,
    /// Hypo-Abelian-by-hypo-Abelian implies hypo-Abelian.
    pub hypo_lemma_holds: bool,
}

impl ExtensionReport {
    pub fn holds(&self) -> bool {
        self.perfect_lemma_holds && self.hypo_lemma_holds
    }
}

/// Checks both extension lemmas for `1 -> n -> g -> g/n -> 1`.
pub fn check_extension_lemmas(g: &PermGroup, n: &PermGroup) -> Result<ExtensionReport> {
    let q = g.quotient(n)?.group;
    let kernel_perfect = n.is_perfect()?;
    let quotient_perfect = q.is_perfect()?;
    let group_perfect = g.is_perfect()?;
    let kernel_hypo_abelian = n.is_hypo_abelian()?;
    let quotient_hypo_abelian = q.is_hypo_abelian()?;
    let group_hypo_abelian = g.is_hypo_abelian()?;
    Ok(ExtensionReport {
        group_order: g.order(),
        kernel_order: n.order(),
        quotient_order: q.order(),
        kernel_perfect,
        quotient_perfect,
        group_perfect,
        kernel_hypo_abelian,
        quotient_hypo_abelian,
        group_hypo_abelian,
        perfect_lemma_holds: !(kernel_perfect && quotient_perfect) || group_perfect,
        hypo_lemma_holds: !(kernel_hypo_abelian && quotient_hypo_abelian) || group_hypo_abelian,
    })
}

/// Outcome of composing two quotient maps `G -> G/N1 -> G/N2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionReport {
    pub first_onto: bool,
    pub first_kernel_perfect: bool,
    pub second_onto: bool,
    pub second_kernel_perfect: bool,
    pub composite_onto: bool,
    pub composite_kernel_order: usize,
    pub composite_kernel_perfect: bool,
    pub holds: bool,
}

/// Composition of epimorphisms with perfect kernels, for normal subgroups
/// `inner <= outer` of `g`. Kernels are found by enumerating preimages of the
/// identity, not read off from the subgroups passed in.
pub fn check_composition_lemma(
    g: &PermGroup,
    inner: &PermGroup,
    outer: &PermGroup,
) -> Result<CompositionReport> {
    if !inner.is_subgroup_of(outer) {
        return Err(Error::InvalidInput("inner subgroup is not contained in outer".into()));
    }
    let first = g.quotient(inner)?;
    let last = g.quotient(outer)?;
    let second = PermHom::from_generator_images(&first.group, &last.group, last.map.generator_images())?;

    let first_kernel = first.map.kernel()?;
    let second_kernel = second.kernel()?;
    let composite = first.map.then(&second);
    let composite_kernel = composite.kernel()?;

    let first_onto = first.map.is_onto()?;
    let first_kernel_perfect = first_kernel.is_perfect()?;
    let second_onto = second.is_onto()?;
    let second_kernel_perfect = second_kernel.is_perfect()?;
    let composite_onto = composite.is_onto()?;
    let composite_kernel_perfect = composite_kernel.is_perfect()?;
    let premise = first_onto && first_kernel_perfect && second_onto && second_kernel_perfect;
    Ok(CompositionReport {
        first_onto,
        first_kernel_perfect,
        second_onto,
        second_kernel_perfect,
        composite_onto,
        composite_kernel_order: composite_kernel.order(),
        composite_kernel_perfect,
        holds: !premise || (composite_onto && composite_kernel_perfect),
    })
}
