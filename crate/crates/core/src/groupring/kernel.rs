use num_bigint::BigInt;
use rand::Rng;
use serde::Serialize;

use super::chain::ChainComplex;
use super::intmat::{integer_kernel_basis, rank, smith_normal_form, solve_with, IntMatrix};
use super::{FiniteGroup, GRMatrix, GroupRingElem};
use crate::error::{Error, Result};

/// Splitting `ker Θ ≅ ker(Θ|_A) ⊕ B` for `Θ: A ⊕ B → C` with `Θ|_A` onto.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelSplit {
    /// `α: B → A` with `Θ(α(b), 0) = Θ(0, b)`.
    pub alpha: GRMatrix,
    /// `φ(x, b) = (x - α(b), b)`.
    pub phi: GRMatrix,
    /// `ψ(z) = (π1(z) + α(π2(z)), π2(z))`.
    pub psi: GRMatrix,
    pub alpha_lifts: bool,
    pub phi_psi_identity: bool,
    pub psi_phi_identity: bool,
    /// `φ` maps a basis of `ker(Θ|_A) ⊕ B` into `ker Θ`.
    pub phi_into_kernel: bool,
    /// `ψ` maps a basis of `ker Θ` into `ker(Θ|_A) ⊕ B`.
    pub psi_into_kernel: bool,
    /// Integer ranks of the flattened kernels: `rank ker Θ = rank ker Θ|_A + |B|·|Q|`.
    pub kernel_rank: usize,
    pub kernel_rank_a: usize,
    pub rank_matches: bool,
}

impl KernelSplit {
    pub fn verified(&self) -> bool {
        self.alpha_lifts
            && self.phi_psi_identity
            && self.psi_phi_identity
            && self.phi_into_kernel
            && self.psi_into_kernel
            && self.rank_matches
    }
}

/// `[[I, s·α], [0, I]]`.
fn shear(q: &FiniteGroup, alpha: &GRMatrix, negate: bool) -> Result<GRMatrix> {
    let (a, b) = (alpha.rows(), alpha.cols());
    let corner = if negate { alpha.neg() } else { alpha.clone() };
    let top = GRMatrix::identity(q, a).hstack(&corner)?;
    let bottom = GRMatrix::zeros(q, b, a).hstack(&GRMatrix::identity(q, b))?;
    top.vstack(&bottom)
}

/// Solves `M X = T` column by column over `ZQ` by flattening. `M` must
/// be onto with all invariant factors 1 for every column to have a preimage.
pub(super) fn solve_columns(m: &GRMatrix, t: &GRMatrix) -> Result<Option<GRMatrix>> {
    let q = m.group();
    let snf = smith_normal_form(&m.flatten());
    let mut out = GRMatrix::zeros(q, m.cols(), 0);
    for j in 0..t.cols() {
        let Some(y) = solve_with(&snf, &t.flat_column(j))? else { return Ok(None) };
        out = out.hstack(&GRMatrix::from_flat_column(q, &y)?)?;
    }
    Ok(Some(out))
}

fn pad(v: &[BigInt], before: usize, after: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); before];
    out.extend_from_slice(v);
    out.resize(before + v.len() + after, BigInt::from(0));
    out
}

pub fn kernel_split(theta: &GRMatrix, split: usize) -> Result<KernelSplit> {
    if split > theta.cols() {
        return Err(Error::InvalidInput(format!("split {split} exceeds column count {}", theta.cols())));
    }
    let q = theta.group();
    let n = q.order();
    let (a, b) = (split, theta.cols() - split);
    let theta_a = theta.columns(0..a);
    let theta_b = theta.columns(a..a + b);
    let fa = theta_a.flatten();
    let snf = smith_normal_form(&fa);
    if snf.rank != fa.rows() || !snf.is_saturated() {
        return Err(Error::Precondition("Θ restricted to A is not onto".into()));
    }
    let alpha = solve_columns(&theta_a, &theta_b)?.ok_or(Error::NoPreimage)?;
    let phi = shear(q, &alpha, true)?;
    let psi = shear(q, &alpha, false)?;
    let id = GRMatrix::identity(q, a + b);

    let alpha_lifts = theta_a.mul(&alpha)? == theta_b;
    let phi_psi_identity = phi.mul(&psi)? == id;
    let psi_phi_identity = psi.mul(&phi)? == id;

    let ft = theta.flatten();
    let fphi = phi.flatten();
    let fpsi = psi.flatten();
    let ker_a = integer_kernel_basis(&fa);
    let ker = integer_kernel_basis(&ft);
    let domain_basis = ker_a
        .iter()
        .map(|v| pad(v, 0, b * n))
        .chain((0..b * n).map(|k| pad(&[BigInt::from(1)], a * n + k, b * n - k - 1)));
    let mut phi_into_kernel = true;
    for v in domain_basis {
        let img = fphi.mul_vec(&v)?;
        phi_into_kernel &= ft.mul_vec(&img)?.iter().all(|x| *x == BigInt::from(0));
    }
    let mut psi_into_kernel = true;
    for v in &ker {
        let img = fpsi.mul_vec(v)?;
        psi_into_kernel &= fa.mul_vec(&img[..a * n])?.iter().all(|x| *x == BigInt::from(0));
    }
    let kernel_rank = ker.len();
    let kernel_rank_a = ker_a.len();
    Ok(KernelSplit {
        alpha,
        phi,
        psi,
        alpha_lifts,
        phi_psi_identity,
        psi_phi_identity,
        phi_into_kernel,
        psi_into_kernel,
        kernel_rank,
        kernel_rank_a,
        rank_matches: kernel_rank == kernel_rank_a + b * n,
    })
}

/// Lift of the integer kernel of a boundary map to the `Q`-cover, where the
/// boundary has the same integer entries (embedded as `k · e`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelLift {
    /// Columns: lifts of an integer kernel basis.
    pub basis: GRMatrix,
    pub downstairs_rank: usize,
    pub flattened_kernel_rank: usize,
    pub rank_equality: bool,
    pub lifts_in_kernel: bool,
    /// No nontrivial `ZQ`-combination of the lifts vanishes.
    pub lifts_independent: bool,
    /// The lifts span the whole flattened kernel over `Z`.
    pub lifts_generate: bool,
}

impl KernelLift {
    pub fn certified(&self) -> bool {
        self.rank_equality && self.lifts_in_kernel && self.lifts_independent && self.lifts_generate
    }
}

pub fn equivariant_kernel_lift(d: &IntMatrix, q: &FiniteGroup) -> Result<KernelLift> {
    let n = q.order();
    let down = integer_kernel_basis(d);
    let basis = GRMatrix::from_scalar(q, &IntMatrix::from_columns(d.cols(), &down));
    let up = GRMatrix::from_scalar(q, d).flatten();
    let flattened_kernel_rank = up.cols() - rank(&up);
    let span = basis.flatten();
    let span_snf = smith_normal_form(&span);
    let lifts_in_kernel = up.mul(&span)?.is_zero();
    let lifts_independent = span_snf.rank == down.len() * n;
    Ok(KernelLift {
        downstairs_rank: down.len(),
        flattened_kernel_rank,
        rank_equality: flattened_kernel_rank == n * down.len(),
        lifts_in_kernel,
        lifts_independent,
        lifts_generate: lifts_in_kernel && span_snf.rank == flattened_kernel_rank && span_snf.is_saturated(),
        basis,
    })
}

/// A random `Θ = [Θ_A | Θ_B]: ZQ^a ⊕ ZQ^b → ZQ^c` with `Θ_A` onto by
/// construction, together with a `ZQ`-basis of `ker Θ_A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitInstance {
    pub theta: GRMatrix,
    pub split: usize,
    /// `a x (a - c)`, columns a free basis of `ker Θ_A`.
    pub kernel_a: GRMatrix,
}

fn elementary(q: &FiniteGroup, n: usize, i: usize, j: usize, r: GroupRingElem) -> GRMatrix {
    let mut e = GRMatrix::identity(q, n);
    e.set(i, j, r);
    e
}

fn random_pair<R: Rng>(rng: &mut R, n: usize) -> (usize, usize) {
    let i = rng.random_range(0..n);
    let j = (i + rng.random_range(1..n)) % n;
    (i, j)
}

/// `Θ_A = E · [I_c | R] · F` with `E`, `F` products of elementary matrices,
/// so `ker Θ_A = F⁻¹ · [-R; I]`. Requires `c <= a`.
pub fn random_split_instance<R: Rng>(rng: &mut R, q: &FiniteGroup, c: usize, a: usize, b: usize) -> Result<SplitInstance> {
    if c > a {
        return Err(Error::InvalidInput("need c <= a for Θ_A to be onto".into()));
    }
    let r = GRMatrix::random(rng, q, c, a - c, 2);
    let mut theta_a = GRMatrix::identity(q, c).hstack(&r)?;
    let mut kernel_a = r.neg().vstack(&GRMatrix::identity(q, a - c))?;
    if c >= 2 {
        for _ in 0..2 {
            let (i, j) = random_pair(rng, c);
            theta_a = elementary(q, c, i, j, GroupRingElem::random(rng, q, 1)).mul(&theta_a)?;
        }
    }
    if a >= 2 {
        for _ in 0..2 {
            let (i, j) = random_pair(rng, a);
            let x = GroupRingElem::random(rng, q, 1);
            theta_a = theta_a.mul(&elementary(q, a, i, j, x.clone()))?;
            kernel_a = elementary(q, a, i, j, x.neg()).mul(&kernel_a)?;
        }
    }
    let theta_b = GRMatrix::random(rng, q, c, b, 2);
    Ok(SplitInstance { theta: theta_a.hstack(&theta_b)?, split: a, kernel_a })
}

impl SplitInstance {
    /// `0 → ker(Θ_A) ⊕ B → A ⊕ B → C → 0` with the first map
    /// `[[K_A, -α], [0, I]]`, i.e. `φ` restricted to the kernel basis.
    pub fn complex(&self, alpha: &GRMatrix) -> Result<ChainComplex> {
        let q = self.theta.group();
        let b = self.theta.cols() - self.split;
        let k = self.kernel_a.cols();
        let top = self.kernel_a.hstack(&alpha.neg())?;
        let bottom = GRMatrix::zeros(q, b, k).hstack(&GRMatrix::identity(q, b))?;
        ChainComplex::new(1, vec![self.theta.clone(), top.vstack(&bottom)?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupring::chain_check;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_on_a_forces_alpha() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let q = FiniteGroup::cyclic(3);
        let theta_b = GRMatrix::random(&mut rng, &q, 2, 2, 2);
        let theta = GRMatrix::identity(&q, 2).hstack(&theta_b).unwrap();
        let s = kernel_split(&theta, 2).unwrap();
        assert!(s.verified());
        assert_eq!(s.alpha, theta_b);
        assert_eq!(s.kernel_rank_a, 0);
        assert_eq!(s.kernel_rank, 2 * 3);
    }

    #[test]
    fn empty_b_gives_identity_maps() {
        let q = FiniteGroup::cyclic(2);
        let theta = GRMatrix::from_rows(&q, vec![vec![GroupRingElem::one(&q), GroupRingElem::basis(&q, 1)]]).unwrap();
        let s = kernel_split(&theta, 2).unwrap();
        assert!(s.verified());
        assert_eq!(s.phi, GRMatrix::identity(&q, 2));
        assert_eq!(s.psi, GRMatrix::identity(&q, 2));
    }

    #[test]
    fn non_surjective_a_is_rejected() {
        let q = FiniteGroup::cyclic(2);
        let two = GroupRingElem::scalar(&q, 2);
        let theta = GRMatrix::from_rows(&q, vec![vec![two, GroupRingElem::one(&q)]]).unwrap();
        assert!(matches!(kernel_split(&theta, 1), Err(Error::Precondition(_))));
        // 1 + g is not a unit in Z[Z2]
        let norm = GroupRingElem::one(&q).add(&GroupRingElem::basis(&q, 1));
        let theta = GRMatrix::from_rows(&q, vec![vec![norm]]).unwrap();
        assert!(matches!(kernel_split(&theta, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn random_instances_split() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for q in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric3()] {
            for _ in 0..5 {
                let inst = random_split_instance(&mut rng, &q, 2, 3, 2).unwrap();
                assert!(inst.theta.columns(0..3).mul(&inst.kernel_a).unwrap().is_zero());
                let s = kernel_split(&inst.theta, inst.split).unwrap();
                assert!(s.verified(), "{s:?}");
                let report = chain_check(&inst.complex(&s.alpha).unwrap()).unwrap();
                assert!(report.acyclic, "{report:?}");
            }
        }
    }

    #[test]
    fn lift_examples() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let l = equivariant_kernel_lift(&IntMatrix::from_rows(&[vec![0]]).unwrap(), &z2).unwrap();
        assert_eq!((l.downstairs_rank, l.flattened_kernel_rank), (1, 2));
        assert!(l.certified());
        let l = equivariant_kernel_lift(&IntMatrix::from_rows(&[vec![2]]).unwrap(), &z2).unwrap();
        assert_eq!((l.downstairs_rank, l.flattened_kernel_rank), (0, 0));
        assert!(l.certified());
        let l = equivariant_kernel_lift(&IntMatrix::from_rows(&[vec![1, 1]]).unwrap(), &z3).unwrap();
        assert_eq!((l.downstairs_rank, l.flattened_kernel_rank), (1, 3));
        assert!(l.certified());
    }
}
