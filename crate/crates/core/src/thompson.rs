//! Thompson's group V as reduced tree-pair diagrams.
//!
//! An element is a pair of full binary trees with the same number of leaves
//! and a bijection between the leaves: domain leaf `i` is sent affinely onto
//! range leaf `perm[i]`. Reduced diagrams are canonical, so equality of group
//! elements is structural equality.
//!
//! Products compose as functions: `a.multiply(b)` applies `b` first and then
//! `a`. Arithmetic is done on the leaf-address form, where a leaf is the
//! left/right path from the root.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::is_prime;

/// A full binary tree: every node has zero or two children.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinTree {
    Leaf,
    Node(Box<BinTree>, Box<BinTree>),
}

type Addr = Vec<bool>;

impl BinTree {
    pub fn caret() -> Self {
        Self::node(Self::Leaf, Self::Leaf)
    }

    pub fn node(left: Self, right: Self) -> Self {
        Self::Node(Box::new(left), Box::new(right))
    }

    /// Right comb with `n >= 1` leaves: `(*,(*,(*,...)))`.
    pub fn right_comb(n: usize) -> Self {
        assert!(n >= 1, "a tree has at least one leaf");
        (1..n).fold(Self::Leaf, |acc, _| Self::node(Self::Leaf, acc))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Self::Leaf => 1,
            Self::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Leaf addresses in left-to-right order.
    fn leaves(&self) -> Vec<Addr> {
        fn walk(t: &BinTree, path: &mut Addr, out: &mut Vec<Addr>) {
            match t {
                BinTree::Leaf => out.push(path.clone()),
                BinTree::Node(l, r) => {
                    path.push(false);
                    walk(l, path, out);
                    path.pop();
                    path.push(true);
                    walk(r, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Rebuilds a tree from a complete prefix code sorted left to right.
    fn from_leaves(leaves: &[Addr]) -> Self {
        fn build(leaves: &[Addr], depth: usize) -> BinTree {
            if leaves.len() == 1 && leaves[0].len() == depth {
                return BinTree::Leaf;
            }
            let split = leaves.partition_point(|a| !a[depth]);
            BinTree::node(build(&leaves[..split], depth + 1), build(&leaves[split..], depth + 1))
        }
        build(leaves, 0)
    }
}

impl fmt::Display for BinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Leaf => write!(f, "*"),
            Self::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl fmt::Debug for BinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BinTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree(&bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::InvalidInput(format!("trailing input in tree {s:?}")));
        }
        Ok(tree)
    }
}

fn parse_tree(b: &[u8], pos: &mut usize) -> Result<BinTree> {
    let bad = |what: &str| Error::InvalidInput(format!("malformed tree: {what}"));
    match b.get(*pos) {
        Some(b'*') => {
            *pos += 1;
            Ok(BinTree::Leaf)
        }
        Some(b'(') => {
            *pos += 1;
            let left = parse_tree(b, pos)?;
            if b.get(*pos) != Some(&b',') {
                return Err(bad("expected ','"));
            }
            *pos += 1;
            let right = parse_tree(b, pos)?;
            if b.get(*pos) != Some(&b')') {
                return Err(bad("expected ')'"));
            }
            *pos += 1;
            Ok(BinTree::node(left, right))
        }
        _ => Err(bad("expected '*' or '('")),
    }
}

/// An element of V as a reduced tree-pair diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TreePairRepr", into = "TreePairRepr")]
pub struct TreePair {
    domain: BinTree,
    range: BinTree,
    perm: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TreePairRepr {
    domain: String,
    range: String,
    perm: Vec<usize>,
}

impl TryFrom<TreePairRepr> for TreePair {
    type Error = Error;

    fn try_from(r: TreePairRepr) -> Result<Self> {
        TreePair::new(r.domain.parse()?, r.range.parse()?, r.perm)
    }
}

impl From<TreePair> for TreePairRepr {
    fn from(t: TreePair) -> Self {
        TreePairRepr { domain: t.domain.to_string(), range: t.range.to_string(), perm: t.perm }
    }
}

impl fmt::Debug for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} -> {} {:?}]", self.domain, self.range, self.perm)
    }
}

/// Result of an order computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    ExceedsCap,
}

impl TreePair {
    /// Validates and reduces a diagram.
    pub fn new(domain: BinTree, range: BinTree, perm: Vec<usize>) -> Result<Self> {
        Self::new_unreduced(domain, range, perm).map(|t| t.reduce())
    }

    /// Validates a diagram without reducing it.
    pub fn new_unreduced(domain: BinTree, range: BinTree, perm: Vec<usize>) -> Result<Self> {
        let n = domain.leaf_count();
        if range.leaf_count() != n {
            return Err(Error::InvalidInput(format!(
                "leaf counts differ: {n} vs {}",
                range.leaf_count()
            )));
        }
        if perm.len() != n {
            return Err(Error::InvalidInput(format!("perm has {} entries for {n} leaves", perm.len())));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidInput(format!("{perm:?} is not a bijection")));
            }
            seen[p] = true;
        }
        Ok(Self { domain, range, perm })
    }

    pub fn identity() -> Self {
        Self { domain: BinTree::Leaf, range: BinTree::Leaf, perm: vec![0] }
    }

    pub fn is_identity(&self) -> bool {
        self.domain == BinTree::Leaf
    }

    pub fn domain(&self) -> &BinTree {
        &self.domain
    }

    pub fn range(&self) -> &BinTree {
        &self.range
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn leaf_count(&self) -> usize {
        self.perm.len()
    }

    fn pairs(&self) -> Vec<(Addr, Addr)> {
        let range = self.range.leaves();
        self.domain
            .leaves()
            .into_iter()
            .zip(&self.perm)
            .map(|(d, &p)| (d, range[p].clone()))
            .collect()
    }

    fn from_pairs(mut pairs: Vec<(Addr, Addr)>) -> Self {
        pairs.sort();
        let domain: Vec<Addr> = pairs.iter().map(|p| p.0.clone()).collect();
        let mut range: Vec<Addr> = pairs.iter().map(|p| p.1.clone()).collect();
        range.sort();
        let perm = pairs
            .iter()
            .map(|p| range.binary_search(&p.1).expect("range leaf present"))
            .collect();
        Self { domain: BinTree::from_leaves(&domain), range: BinTree::from_leaves(&range), perm }
    }

    /// Cancels carets until none remain: a domain caret whose two leaves go,
    /// in order, onto the two leaves of a range caret.
    pub fn reduce(&self) -> Self {
        let mut pairs = self.pairs();
        while let Some(k) = reducible_carets(&pairs).first().copied() {
            cancel_caret(&mut pairs, k);
        }
        Self::from_pairs(pairs)
    }

    /// Reduction choosing the next caret at random; used to test confluence.
    pub fn reduce_in_random_order<R: Rng>(&self, rng: &mut R) -> Self {
        let mut pairs = self.pairs();
        loop {
            let carets = reducible_carets(&pairs);
            if carets.is_empty() {
                return Self::from_pairs(pairs);
            }
            cancel_caret(&mut pairs, carets[rng.random_range(0..carets.len())]);
        }
    }

    /// Splits domain leaf `leaf` and its image into two children each,
    /// giving an unreduced diagram for the same element.
    pub fn expand(&self, leaf: usize) -> Self {
        let mut pairs = self.pairs();
        let (d, r) = pairs.swap_remove(leaf);
        for bit in [false, true] {
            let mut d2 = d.clone();
            d2.push(bit);
            let mut r2 = r.clone();
            r2.push(bit);
            pairs.push((d2, r2));
        }
        Self::from_pairs(pairs)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn multiply(&self, other: &Self) -> Self {
        let inner = other.pairs();
        let outer = self.pairs();
        let middle = common_refinement(
            inner.iter().map(|p| &p.1),
            outer.iter().map(|p| &p.0),
        );
        let mut composed = Vec::with_capacity(middle.len());
        for w in &middle {
            let (d, r) = inner.iter().find(|p| w.starts_with(&p.1)).expect("refinement covers");
            let mut from = d.clone();
            from.extend_from_slice(&w[r.len()..]);
            let (d2, r2) = outer.iter().find(|p| w.starts_with(&p.0)).expect("refinement covers");
            let mut to = r2.clone();
            to.extend_from_slice(&w[d2.len()..]);
            composed.push((from, to));
        }
        Self::from_pairs(composed).reduce()
    }

    pub fn inverse(&self) -> Self {
        Self::from_pairs(self.pairs().into_iter().map(|(d, r)| (r, d)).collect()).reduce()
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }

    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.multiply(self).multiply(&u.inverse())
    }

    /// Least `k <= cap` with `self^k = 1`.
    pub fn order(&self, cap: usize) -> Order {
        let mut x = self.clone();
        for k in 1..=cap {
            if x.is_identity() {
                return Order::Finite(k);
            }
            x = x.multiply(self);
        }
        Order::ExceedsCap
    }
}

fn reducible_carets(pairs: &[(Addr, Addr)]) -> Vec<usize> {
    let mut sorted: Vec<usize> = (0..pairs.len()).collect();
    sorted.sort_by(|&a, &b| pairs[a].0.cmp(&pairs[b].0));
    sorted
        .windows(2)
        .filter(|w| {
            let (d0, r0) = &pairs[w[0]];
            let (d1, r1) = &pairs[w[1]];
            is_left_right_sibling(d0, d1) && is_left_right_sibling(r0, r1)
        })
        .map(|w| w[0])
        .collect()
}

fn is_left_right_sibling(a: &Addr, b: &Addr) -> bool {
    !a.is_empty()
        && a.len() == b.len()
        && !a[a.len() - 1]
        && b[b.len() - 1]
        && a[..a.len() - 1] == b[..b.len() - 1]
}

fn cancel_caret(pairs: &mut Vec<(Addr, Addr)>, left: usize) {
    let (mut d, mut r) = pairs[left].clone();
    d.pop();
    r.pop();
    let mut right_domain = d.clone();
    right_domain.push(true);
    pairs.retain(|p| !p.0.starts_with(&d));
    debug_assert!(!pairs.iter().any(|p| p.0 == right_domain));
    pairs.push((d, r));
}

/// Leaves of the union of two trees given by their leaf sets.
fn common_refinement<'a>(
    a: impl Iterator<Item = &'a Addr>,
    b: impl Iterator<Item = &'a Addr>,
) -> Vec<Addr> {
    let mut all: Vec<&Addr> = a.chain(b).collect();
    all.sort();
    all.dedup();
    all.iter()
        .enumerate()
        .filter(|(i, x)| all.get(i + 1).is_none_or(|next| !next.starts_with(x)))
        .map(|(_, x)| (*x).clone())
        .collect()
}

/// Torsion element of prime order `p`: right comb with `p` leaves on both
/// sides and the cyclic shift `i -> i + 1 mod p`.
pub fn element_of_order(p: u64) -> Result<TreePair> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = p as usize;
    TreePair::new(BinTree::right_comb(n), BinTree::right_comb(n), (0..n).map(|i| (i + 1) % n).collect())
}

/// The generators `A, B, C, π0, π1` of V (Cannon–Floyd–Parry).
pub fn standard_generators() -> Vec<TreePair> {
    let t = |d: &str, r: &str, p: Vec<usize>| {
        TreePair::new(d.parse().expect("valid"), r.parse().expect("valid"), p).expect("valid")
    };
    vec![
        t("((*,*),*)", "(*,(*,*))", vec![0, 1, 2]),
        t("(*,((*,*),*))", "(*,(*,(*,*)))", vec![0, 1, 2, 3]),
        t("(*,(*,*))", "(*,(*,*))", vec![2, 0, 1]),
        t("(*,(*,*))", "(*,(*,*))", vec![0, 2, 1]),
        t("(*,(*,(*,*)))", "(*,(*,(*,*)))", vec![0, 1, 3, 2]),
    ]
}

/// A product of `len` random standard generators and their inverses.
pub fn random_element<R: Rng>(rng: &mut R, len: usize) -> TreePair {
    let gens = standard_generators();
    let mut acc = TreePair::identity();
    for _ in 0..len {
        let g = &gens[rng.random_range(0..gens.len())];
        acc = if rng.random_bool(0.5) { acc.multiply(g) } else { acc.multiply(&g.inverse()) };
    }
    acc
}
