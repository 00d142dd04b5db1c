use std::collections::{HashMap, VecDeque};

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// A homomorphism between enumerated permutation groups, stored as the full
/// table of images indexed by source element.
#[derive(Clone, Debug)]
pub struct PermHom {
    source: PermGroup,
    target: PermGroup,
    generator_images: Vec<Permutation>,
    images: Vec<Permutation>,
}

impl PermHom {
    /// Extends generator images to the whole source group. Fails if the
    /// assignment does not respect the relations of the source.
    pub fn from_generator_images(
        source: &PermGroup,
        target: &PermGroup,
        generator_images: &[Permutation],
    ) -> Result<Self> {
        if generator_images.len() != source.generators().len() {
            return Err(Error::LengthMismatch {
                left: source.generators().len(),
                right: generator_images.len(),
            });
        }
        if let Some(bad) = generator_images.iter().find(|p| !target.contains(p)) {
            return Err(Error::InvalidInput(format!("{bad:?} is not in the target group")));
        }
        let mut images: Vec<Option<Permutation>> = vec![None; source.order()];
        images[0] = Some(target.identity());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let img = images[i].clone().expect("queued elements have images");
            for (g, gi) in source.generators().iter().zip(generator_images) {
                let j = source.index[&source.elements[i].compose(g)];
                let candidate = img.compose(gi);
                match &images[j] {
                    Some(existing) if *existing != candidate => {
                        return Err(Error::Verification(
                            "generator images do not define a homomorphism".into(),
                        ));
                    }
                    Some(_) => {}
                    None => {
                        images[j] = Some(candidate);
                        queue.push_back(j);
                    }
                }
            }
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            generator_images: generator_images.to_vec(),
            images: images.into_iter().map(|p| p.expect("closure reaches every element")).collect(),
        })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    pub fn apply(&self, p: &Permutation) -> Option<&Permutation> {
        self.source.index_of(p).map(|i| &self.images[i])
    }

    /// Kernel, found by enumerating the preimage of the identity.
    pub fn kernel(&self) -> Result<PermGroup> {
        let gens = self
            .source
            .elements()
            .iter()
            .zip(&self.images)
            .filter(|(_, img)| img.is_identity())
            .map(|(x, _)| x.clone())
            .collect();
        PermGroup::generate(self.source.degree(), gens)
    }

    pub fn image(&self) -> Result<PermGroup> {
        PermGroup::generate(self.target.degree(), self.generator_images.clone())
    }

    pub fn is_onto(&self) -> Result<bool> {
        Ok(self.image()?.order() == self.target.order())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PermHom) -> PermHom {
        let generator_images = self
            .generator_images
            .iter()
            .map(|p| other.apply(p).expect("composable maps").clone())
            .collect();
        let images = self
            .images
            .iter()
            .map(|p| other.apply(p).expect("composable maps").clone())
            .collect();
        PermHom {
            source: self.source.clone(),
            target: other.target.clone(),
            generator_images,
            images,
        }
    }
}

fn element_order(p: &Permutation) -> usize {
    let mut x = p.clone();
    let mut k = 1;
    while !x.is_identity() {
        x = x.compose(p);
        k += 1;
    }
    k
}

fn order_profile(g: &PermGroup) -> Vec<usize> {
    let mut v: Vec<usize> = g.elements().iter().map(element_order).collect();
    v.sort_unstable();
    v
}

fn center_order(g: &PermGroup) -> usize {
    g.elements()
        .iter()
        .filter(|x| g.generators().iter().all(|y| x.compose(y) == y.compose(x)))
        .count()
}

/// A small generating set picked greedily, preferring high-order elements.
fn greedy_generators(g: &PermGroup) -> Result<Vec<Permutation>> {
    let mut candidates: Vec<&Permutation> = g.elements().iter().collect();
    candidates.sort_by_key(|p| std::cmp::Reverse(element_order(p)));
    let mut gens = Vec::new();
    let mut current = PermGroup::trivial(g.degree());
    for c in candidates {
        if current.order() == g.order() {
            break;
        }
        if !current.contains(c) {
            gens.push(c.clone());
            current = PermGroup::generate(g.degree(), gens.clone())?;
        }
    }
    Ok(gens)
}

/// Brute-force isomorphism test for small groups: cheap invariants first, then
/// a backtracking search over images of a greedy generating set.
pub fn are_isomorphic(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    if g.order() != h.order() || order_profile(g) != order_profile(h) {
        return Ok(false);
    }
    if center_order(g) != center_order(h)
        || g.commutator_subgroup()?.order() != h.commutator_subgroup()?.order()
    {
        return Ok(false);
    }
    let gens = greedy_generators(g)?;
    let source = PermGroup::generate(g.degree(), gens.clone())?;
    let mut by_order: HashMap<usize, Vec<&Permutation>> = HashMap::new();
    for x in h.elements() {
        by_order.entry(element_order(x)).or_default().push(x);
    }
    let choices: Vec<&Vec<&Permutation>> = gens
        .iter()
        .map(|x| by_order.get(&element_order(x)).expect("profiles match"))
        .collect();
    let mut picked: Vec<Permutation> = Vec::with_capacity(gens.len());
    search(&source, h, &choices, &mut picked)
}

fn search(
    source: &PermGroup,
    target: &PermGroup,
    choices: &[&Vec<&Permutation>],
    picked: &mut Vec<Permutation>,
) -> Result<bool> {
    if picked.len() == choices.len() {
        return Ok(match PermHom::from_generator_images(source, target, picked) {
            Ok(hom) => hom.kernel()?.is_trivial(),
            Err(_) => false,
        });
    }
    for &c in choices[picked.len()] {
        picked.push(c.clone());
        if search(source, target, choices, picked)? {
            return Ok(true);
        }
        picked.pop();
    }
    Ok(false)
}
