//! `BS(1,2) = ⟨t, x | x = t x² t⁻¹⟩` as affine matrices `[[2^-k, a], [0, 1]]`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Group;

/// `mantissa · 2^exp` with the mantissa odd, or zero with `exp = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(BigInt, i64)", into = "(BigInt, i64)")]
pub struct Dyadic {
    mantissa: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mantissa: impl Into<BigInt>, exp: i64) -> Self {
        let mut mantissa = mantissa.into();
        let mut exp = exp;
        if mantissa.is_zero() {
            return Self::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        mantissa >>= tz;
        exp += tz as i64;
        Self { mantissa, exp }
    }

    pub fn zero() -> Self {
        Self { mantissa: BigInt::zero(), exp: 0 }
    }

    pub fn integer(n: i64) -> Self {
        Self::new(n, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    /// Multiplies by `2^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { mantissa: self.mantissa.clone(), exp: self.exp + k }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let lhs = &self.mantissa << (self.exp - e) as u64;
        let rhs = &other.mantissa << (other.exp - e) as u64;
        Self::new(lhs + rhs, e)
    }

    pub fn neg(&self) -> Self {
        Self { mantissa: -&self.mantissa, exp: self.exp }
    }
}

impl From<(BigInt, i64)> for Dyadic {
    fn from((m, e): (BigInt, i64)) -> Self {
        Self::new(m, e)
    }
}

impl From<Dyadic> for (BigInt, i64) {
    fn from(d: Dyadic) -> Self {
        (d.mantissa, d.exp)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 {
            write!(f, "{}", &self.mantissa << self.exp as u64)
        } else {
            write!(f, "{}/2^{}", self.mantissa, -self.exp)
        }
    }
}

/// The matrix `[[2^-k, a], [0, 1]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BSElement {
    pub k: i64,
    pub a: Dyadic,
}

impl BSElement {
    pub fn identity() -> Self {
        Self { k: 0, a: Dyadic::zero() }
    }

    pub fn t() -> Self {
        Self { k: 1, a: Dyadic::zero() }
    }

    pub fn x() -> Self {
        Self { k: 0, a: Dyadic::integer(1) }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Self { k: self.k + other.k, a: self.a.add(&other.a.shift(-self.k)) }
    }

    pub fn inverse(&self) -> Self {
        Self { k: -self.k, a: self.a.shift(self.k).neg() }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Self::identity(), |acc, _| acc.multiply(&base))
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.a.is_zero()
    }

    /// The `t`-exponent, i.e. the image in `Z`.
    pub fn project(&self) -> i64 {
        self.k
    }

    /// `[[2^-k, a], [0, 1]]` with exact dyadic entries.
    pub fn matrix(&self) -> [[Dyadic; 2]; 2] {
        [[Dyadic::new(BigInt::one(), -self.k), self.a.clone()], [Dyadic::zero(), Dyadic::integer(1)]]
    }
}

pub fn bs_multiply(a: &BSElement, b: &BSElement) -> BSElement {
    a.multiply(b)
}

pub fn bs_inverse(a: &BSElement) -> BSElement {
    a.inverse()
}

pub fn bs_project(a: &BSElement) -> i64 {
    a.project()
}

/// The group `BS(1,2)` in the matrix model.
#[derive(Clone, Copy, Debug, Default)]
pub struct BsGroup;

impl Group for BsGroup {
    type Elem = BSElement;

    fn identity(&self) -> BSElement {
        BSElement::identity()
    }

    fn multiply(&self, a: &BSElement, b: &BSElement) -> BSElement {
        a.multiply(b)
    }

    fn inverse(&self, a: &BSElement) -> BSElement {
        a.inverse()
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::super::{evaluate, verify_hom, GenWord, HomCheck, Presentation};
    use super::*;

    fn bs_presentation() -> Presentation {
        // x^-1 t x x t^-1
        Presentation::new(
            vec!["t".into(), "x".into()],
            vec![GenWord::from_pairs(&[("x", -1), ("t", 1), ("x", 1), ("x", 1), ("t", -1)])],
        )
        .unwrap()
    }

    /// Exact 2x2 product over rationals `num / 2^e` computed entrywise.
    fn matrix_product(p: &BSElement, q: &BSElement) -> [[Dyadic; 2]; 2] {
        let (m, n) = (p.matrix(), q.matrix());
        let mul = |a: &Dyadic, b: &Dyadic| Dyadic::new(a.mantissa() * b.mantissa(), a.exp() + b.exp());
        let mut out = [[Dyadic::zero(), Dyadic::zero()], [Dyadic::zero(), Dyadic::zero()]];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = mul(&m[i][0], &n[0][j]).add(&mul(&m[i][1], &n[1][j]));
            }
        }
        out
    }

    #[test]
    fn dyadic_canonical_form() {
        assert_eq!(Dyadic::new(12, -3), Dyadic::new(3, -1));
        assert_eq!(Dyadic::new(0, 7), Dyadic::zero());
        assert_eq!(Dyadic::new(1, -1).add(&Dyadic::new(1, -1)), Dyadic::integer(1));
        assert_eq!(Dyadic::new(3, -2).add(&Dyadic::new(-3, -2)), Dyadic::zero());
    }

    #[test]
    fn relation_holds_in_the_model() {
        let (t, x) = (BSElement::t(), BSElement::x());
        assert_eq!(t.multiply(&x.pow(2)).multiply(&t.inverse()), x);
        assert!(BSElement::identity().is_identity());
        assert_eq!(BSElement::identity(), BSElement { k: 0, a: Dyadic::zero() });
    }

    #[test]
    fn projection_is_t_exponent() {
        let (t, x) = (BSElement::t(), BSElement::x());
        let g = x.pow(5).multiply(&t.pow(3)).multiply(&x.pow(-2));
        assert_eq!(bs_project(&g), 3);
    }

    #[test]
    fn multiplication_matches_matrices() {
        let elems = [
            BSElement::t(),
            BSElement::x(),
            BSElement { k: -3, a: Dyadic::new(5, -4) },
            BSElement { k: 2, a: Dyadic::new(-7, 1) },
        ];
        for p in &elems {
            for q in &elems {
                assert_eq!(bs_multiply(p, q).matrix(), matrix_product(p, q));
            }
            assert!(p.multiply(&bs_inverse(p)).is_identity());
            assert!(bs_inverse(p).multiply(p).is_identity());
        }
    }

    #[test]
    fn homomorphism_checks() {
        let bs = bs_presentation();
        let good = BTreeMap::from([("t".to_string(), BSElement::t()), ("x".to_string(), BSElement::x())]);
        assert_eq!(verify_hom(&bs, &BsGroup, &good).unwrap(), HomCheck::Verified);
        let bad = BTreeMap::from([("t".to_string(), BSElement::t()), ("x".to_string(), BSElement::t())]);
        assert!(!verify_hom(&bs, &BsGroup, &bad).unwrap().is_verified());

        let z2 = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![GenWord::from_pairs(&[("a", -1), ("b", -1), ("a", 1), ("b", 1)])],
        )
        .unwrap();
        let images = BTreeMap::from([("a".to_string(), BSElement::identity()), ("b".to_string(), BSElement::t())]);
        assert!(verify_hom(&z2, &BsGroup, &images).unwrap().is_verified());
        let w = GenWord::from_pairs(&[("b", 1), ("b", 1), ("a", -1)]);
        assert_eq!(evaluate(&BsGroup, &w, &images).unwrap().project(), 2);
    }
}
