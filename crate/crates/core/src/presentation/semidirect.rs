use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{push_reduced, GenWord, Letter, Presentation};
use crate::error::{Error, Result};

/// Action data for `K ⋊ Q`: for every quotient generator `β` and kernel
/// generator `α`, the word `ψ(β)(α)` over the kernel generators. Rewriting
/// past `β⁻¹` needs `ψ(β)⁻¹(α)` as well, supplied in `inverse_action`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemidirectData {
    pub k_gens: Vec<String>,
    pub q_gens: Vec<String>,
    /// `action[β][α] = ψ(β)(α)`.
    pub action: BTreeMap<String, BTreeMap<String, GenWord>>,
    /// `inverse_action[β][α] = ψ(β)⁻¹(α)`.
    #[serde(default)]
    pub inverse_action: BTreeMap<String, BTreeMap<String, GenWord>>,
}

impl SemidirectData {
    /// Checks name disjointness and that action words use kernel generators only.
    pub fn validate(&self) -> Result<()> {
        let k: HashSet<&str> = self.k_gens.iter().map(String::as_str).collect();
        if let Some(q) = self.q_gens.iter().find(|q| k.contains(q.as_str())) {
            return Err(Error::InvalidInput(format!("generator {q} is in both K and Q")));
        }
        for table in [&self.action, &self.inverse_action] {
            for (q, row) in table {
                if !self.q_gens.contains(q) {
                    return Err(Error::UnknownGenerator(q.clone()));
                }
                for (a, w) in row {
                    if !k.contains(a.as_str()) {
                        return Err(Error::UnknownGenerator(a.clone()));
                    }
                    if let Some(l) = w.letters.iter().find(|l| !k.contains(l.generator.as_str())) {
                        return Err(Error::InvalidInput(format!(
                            "action word for ({q}, {a}) uses non-kernel generator {}",
                            l.generator
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn image(&self, q: &Letter, k: &str) -> Result<&GenWord> {
        let (table, err) = if q.exp == 1 {
            (&self.action, Error::MissingAction { q_gen: q.generator.clone(), k_gen: k.to_string() })
        } else {
            (
                &self.inverse_action,
                Error::NonInvertibleAction { q_gen: q.generator.clone(), k_gen: k.to_string() },
            )
        };
        table.get(&q.generator).and_then(|row| row.get(k)).ok_or(err)
    }

    /// Moves `q` across a kernel word: `q · w = ψ(q)(w) · q`.
    fn slide(&self, q: &Letter, w: &[Letter]) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        for a in w {
            let img = self.image(q, &a.generator)?;
            let img = if a.exp == 1 { img.clone() } else { img.inverse() };
            for l in img.letters {
                push_reduced(&mut out, l);
            }
        }
        Ok(out)
    }
}

/// `⟨α_i, β_j | r_k, s_l, β_j α_i β_j⁻¹ ψ(β_j)(α_i)⁻¹⟩`, with one slide
/// relator per (quotient generator, kernel generator) pair.
pub fn semidirect_presentation(
    pres_k: &Presentation,
    pres_q: &Presentation,
    sd: &SemidirectData,
) -> Result<Presentation> {
    sd.validate()?;
    if pres_k.generators() != sd.k_gens.as_slice() || pres_q.generators() != sd.q_gens.as_slice() {
        return Err(Error::InvalidInput("presentations disagree with the action's generator lists".into()));
    }
    let mut generators = sd.k_gens.clone();
    generators.extend(sd.q_gens.iter().cloned());
    let mut relators: Vec<GenWord> = pres_k.relators().to_vec();
    relators.extend(pres_q.relators().iter().cloned());
    for q in &sd.q_gens {
        for a in &sd.k_gens {
            let price = sd
                .action
                .get(q)
                .and_then(|row| row.get(a))
                .ok_or_else(|| Error::MissingAction { q_gen: q.clone(), k_gen: a.clone() })?;
            let slide = GenWord::from_pairs(&[(q, 1), (a, 1), (q, -1)]).concat(&price.inverse());
            relators.push(slide.free_reduce());
        }
    }
    Presentation::new(generators, relators)
}

/// Rewrites `w` so that every kernel letter precedes every quotient letter,
/// using `β α = ψ(β)(α) β` and `β⁻¹ α = ψ(β)⁻¹(α) β⁻¹`. Both parts of the
/// output are freely reduced.
pub fn normal_form(w: &GenWord, sd: &SemidirectData) -> Result<GenWord> {
    let k: HashSet<&str> = sd.k_gens.iter().map(String::as_str).collect();
    let q: HashSet<&str> = sd.q_gens.iter().map(String::as_str).collect();
    let mut k_part: Vec<Letter> = Vec::new();
    let mut q_part: Vec<Letter> = Vec::new();
    for l in &w.letters {
        if q.contains(l.generator.as_str()) {
            push_reduced(&mut q_part, l.clone());
        } else if k.contains(l.generator.as_str()) {
            let mut moved = vec![l.clone()];
            for ql in q_part.iter().rev() {
                moved = sd.slide(ql, &moved)?;
            }
            for m in moved {
                push_reduced(&mut k_part, m);
            }
        } else {
            return Err(Error::UnknownGenerator(l.generator.clone()));
        }
    }
    k_part.extend(q_part);
    Ok(GenWord { letters: k_part })
}
