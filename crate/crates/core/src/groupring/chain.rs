use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::intmat::{determinant, integer_kernel_basis, smith_normal_form, solve_with, IntMatrix};
use super::kernel::solve_columns;
use super::GRMatrix;
use crate::error::{Error, Result};

/// `… → C_{k+1} → C_k → …` of free `ZQ`-modules; `boundaries[i]` maps
/// `C_{bottom+i+1}` to `C_{bottom+i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ChainComplexRepr")]
pub struct ChainComplex {
    pub bottom_degree: usize,
    pub boundaries: Vec<GRMatrix>,
}

#[derive(Deserialize)]
struct ChainComplexRepr {
    #[serde(default)]
    bottom_degree: usize,
    boundaries: Vec<GRMatrix>,
}

impl TryFrom<ChainComplexRepr> for ChainComplex {
    type Error = Error;

    fn try_from(r: ChainComplexRepr) -> Result<Self> {
        Self::new(r.bottom_degree, r.boundaries)
    }
}

impl ChainComplex {
    pub fn new(bottom_degree: usize, boundaries: Vec<GRMatrix>) -> Result<Self> {
        for w in boundaries.windows(2) {
            if w[0].group() != w[1].group() {
                return Err(Error::InvalidInput("boundaries over different groups".into()));
            }
            if w[0].cols() != w[1].rows() {
                return Err(Error::DegreeMismatch { expected: w[0].cols(), found: w[1].rows() });
            }
        }
        Ok(Self { bottom_degree, boundaries })
    }

    /// `ZQ`-ranks of `C_bottom, C_bottom+1, …`.
    pub fn module_ranks(&self) -> Vec<usize> {
        match self.boundaries.first() {
            None => Vec::new(),
            Some(first) => std::iter::once(first.rows()).chain(self.boundaries.iter().map(GRMatrix::cols)).collect(),
        }
    }
}

/// Integer homology of the flattened complex in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Homology {
    pub degree: usize,
    pub rank: usize,
    #[serde(with = "super::coeffs::flat")]
    pub torsion: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub boundary_squares_zero: bool,
    pub homology: Vec<Homology>,
    pub acyclic: bool,
}

pub fn chain_check(cx: &ChainComplex) -> Result<ChainReport> {
    let mut boundary_squares_zero = true;
    for w in cx.boundaries.windows(2) {
        boundary_squares_zero &= w[0].mul(&w[1])?.is_zero();
    }
    let dims = cx.module_ranks();
    let snfs: Vec<_> = cx.boundaries.iter().map(|b| smith_normal_form(&b.flatten())).collect();
    let n = cx.boundaries.first().map_or(1, |b| b.group().order());
    let homology: Vec<Homology> = dims
        .iter()
        .enumerate()
        .map(|(i, &dim)| {
            let outgoing = if i == 0 { 0 } else { snfs[i - 1].rank };
            let (incoming, torsion) = snfs.get(i).map_or((0, Vec::new()), |s| (s.rank, s.torsion()));
            Homology { degree: cx.bottom_degree + i, rank: dim * n - outgoing - incoming, torsion }
        })
        .collect();
    let acyclic = boundary_squares_zero && homology.iter().all(|h| h.rank == 0 && h.torsion.is_empty());
    Ok(ChainReport { boundary_squares_zero, homology, acyclic })
}

/// Checks on the dual of an acyclic complex `C3 → C2 → C1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualReport {
    /// `ι: C1 → C2` with `∂2 ι = id`.
    pub section: GRMatrix,
    /// `∂3(C3) ⊕ ι(C1) = C2`.
    pub section_splits: bool,
    pub delta2_injective: bool,
    pub delta3_surjective: bool,
    pub image_equals_kernel: bool,
}

impl DualReport {
    pub fn holds(&self) -> bool {
        self.section_splits && self.delta2_injective && self.delta3_surjective && self.image_equals_kernel
    }
}

fn is_unimodular(m: &IntMatrix) -> Result<bool> {
    Ok(m.rows() == m.cols() && determinant(m)?.magnitude() == &1u32.into())
}

/// Dualizes `0 → C3 → C2 → C1 → 0` (a single boundary is read as `C3 = 0`)
/// and checks `δ2: C1* → C2*` injective, `δ3: C2* → C3*` onto and
/// `im δ2 = ker δ3`. With finite `Q` the finitely supported dual is the
/// ordinary transpose.
pub fn cocompact_dual_check(cx: &ChainComplex, section: Option<&GRMatrix>) -> Result<DualReport> {
    let (d2, d3) = match cx.boundaries.as_slice() {
        [d2] => (d2.clone(), GRMatrix::zeros(d2.group(), d2.cols(), 0)),
        [d2, d3] => (d2.clone(), d3.clone()),
        _ => return Err(Error::InvalidInput("expected one or two boundary maps".into())),
    };
    if !chain_check(cx)?.acyclic {
        return Err(Error::Precondition("complex is not acyclic".into()));
    }
    let q = d2.group();
    let c1 = d2.rows();
    let identity = GRMatrix::identity(q, c1);
    let section = match section {
        Some(s) => {
            if d2.mul(s)? != identity {
                return Err(Error::Precondition("supplied map is not a section of ∂2".into()));
            }
            s.clone()
        }
        None => solve_columns(&d2, &identity)?
            .ok_or_else(|| Error::Precondition("∂2 has no section".into()))?,
    };
    let section_splits = is_unimodular(&d3.flatten().hstack(&section.flatten())?)?;

    let delta2 = d2.flatten().transpose();
    let delta3 = d3.flatten().transpose();
    let s2 = smith_normal_form(&delta2);
    let s3 = smith_normal_form(&delta3);
    let delta2_injective = s2.rank == delta2.cols();
    let delta3_surjective = s3.rank == delta3.rows() && s3.is_saturated();
    let mut image_equals_kernel = delta3.mul(&delta2)?.is_zero();
    for v in integer_kernel_basis(&delta3) {
        image_equals_kernel &= solve_with(&s2, &v)?.is_some();
    }
    Ok(DualReport { section, section_splits, delta2_injective, delta3_surjective, image_equals_kernel })
}
