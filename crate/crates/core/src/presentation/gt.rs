use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::{GenWord, Presentation};
use crate::error::{Error, Result};

fn level_name(i: usize) -> String {
    format!("t{i}")
}

/// Name of the level-`i` generator: `t0` for `i = 0`, otherwise `t{i}`.
fn t_name(t0: &str, i: usize) -> String {
    if i == 0 {
        t0.to_string()
    } else {
        level_name(i)
    }
}

/// `t_i⁻¹ [t_i, t_{i-1}]` with `[a, b] = a⁻¹ b⁻¹ a b`, freely reduced.
fn level_relator(t0: &str, i: usize) -> GenWord {
    let ti = t_name(t0, i);
    let tp = t_name(t0, i - 1);
    GenWord::from_pairs(&[(&ti, -1), (&ti, -1), (&tp, -1), (&ti, 1), (&tp, 1)]).free_reduce()
}

/// Adds generators `t1..tj` to `pres0` with one relator `t_i = [t_i, t_{i-1}]`
/// per level. Generator names `t1..tj` must not already occur in `pres0`.
pub fn gt_tower_presentation(pres0: &Presentation, t0: &str, j: usize) -> Result<Presentation> {
    if !pres0.has_generator(t0) {
        return Err(Error::UnknownGenerator(t0.to_string()));
    }
    if j == 0 {
        return Err(Error::InvalidInput("tower level must be at least 1".into()));
    }
    let mut generators = pres0.generators().to_vec();
    let mut relators = pres0.relators().to_vec();
    for i in 1..=j {
        let name = level_name(i);
        if generators.contains(&name) {
            return Err(Error::InvalidInput(format!("generator {name} already present in the base presentation")));
        }
        generators.push(name);
        relators.push(level_relator(t0, i));
    }
    Presentation::new(generators, relators)
}

/// A generator-image map between two presentations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GtEpi {
    pub source: Presentation,
    pub target: Presentation,
    pub images: BTreeMap<String, GenWord>,
}

impl GtEpi {
    /// Checks symbolically that every source relator maps to a word that
    /// freely reduces to the empty word or to a target relator. Returns the
    /// index of the first relator that does neither.
    pub fn verify(&self) -> Result<Option<usize>> {
        let targets: HashSet<GenWord> = self.target.relators().iter().map(GenWord::free_reduce).collect();
        for (i, r) in self.source.relators().iter().enumerate() {
            let img = r.substitute(&self.images)?;
            if !img.is_empty() && !targets.contains(&img) {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &GtEpi) -> Result<GtEpi> {
        if self.target != other.source {
            return Err(Error::InvalidInput("maps are not composable".into()));
        }
        let images = self
            .images
            .iter()
            .map(|(g, w)| Ok((g.clone(), w.substitute(&other.images)?)))
            .collect::<Result<_>>()?;
        Ok(GtEpi { source: self.source.clone(), target: other.target.clone(), images })
    }

    /// Source generators sent to the empty word.
    pub fn killed(&self) -> Vec<String> {
        self.source.generators().iter().filter(|g| self.images[*g].is_empty()).cloned().collect()
    }
}

/// `r_j: G_j → G_{j-1}`, sending `t_j` to the identity and fixing every
/// other generator.
pub fn gt_tower_epi(pres0: &Presentation, t0: &str, j: usize) -> Result<GtEpi> {
    let source = gt_tower_presentation(pres0, t0, j)?;
    let target = if j == 1 { pres0.clone() } else { gt_tower_presentation(pres0, t0, j - 1)? };
    let top = level_name(j);
    let images = source
        .generators()
        .iter()
        .map(|g| {
            let w = if *g == top { GenWord::empty() } else { GenWord::generator(g) };
            (g.clone(), w)
        })
        .collect();
    Ok(GtEpi { source, target, images })
}
