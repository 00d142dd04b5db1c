//! Permutation models of small groups.
//!
//! [`small_groups`] lists one representative of every isomorphism class of
//! groups of order at most 24, built from a handful of generic constructions.
//! Abstract constructions are turned into permutation groups through the left
//! regular representation.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use super::{PermGroup, Permutation};

/// Number of isomorphism classes of groups of order `n`, for `n = 1..=24`.
pub const GROUP_COUNTS: [usize; 24] =
    [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: PermGroup,
}

/// Left regular representation of the group generated by `gens` under `mul`.
pub fn regular<T, F>(gens: Vec<T>, identity: T, mul: F) -> PermGroup
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let next = mul(&elements[i], g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    let perms = gens
        .iter()
        .map(|g| {
            let images = elements.iter().map(|x| index[&mul(g, x)] as u32).collect();
            Permutation::from_images(images).expect("left multiplication is a bijection")
        })
        .collect();
    PermGroup::generate(elements.len(), perms).expect("small regular representation")
}

pub fn cyclic(n: usize) -> PermGroup {
    if n == 1 {
        return PermGroup::trivial(1);
    }
    let cycle: Vec<u32> = (0..n as u32).collect();
    let g = Permutation::from_cycles(n, &[&cycle]).expect("valid cycle");
    PermGroup::generate(n, vec![g]).expect("small group")
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n.max(1));
    }
    let cycle: Vec<u32> = (0..n as u32).collect();
    let gens = vec![
        Permutation::from_cycles(n, &[&[0, 1]]).expect("valid"),
        Permutation::from_cycles(n, &[&cycle]).expect("valid"),
    ];
    PermGroup::generate(n, gens).expect("small group")
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n.max(1));
    }
    let gens = (0..n as u32 - 2)
        .map(|i| Permutation::from_cycles(n, &[&[i, i + 1, i + 2]]).expect("valid"))
        .collect();
    PermGroup::generate(n, gens).expect("small group")
}

/// `D_n` of order `2n`.
pub fn dihedral(n: usize) -> PermGroup {
    metacyclic(n as i64, 2, n as i64 - 1)
}

/// `Z_m ⋊ Z_n` with the generator of `Z_n` acting as multiplication by `r`.
pub fn metacyclic(m: i64, n: i64, r: i64) -> PermGroup {
    assert_eq!(pow_mod(r, n, m), 1 % m, "r^n must be 1 mod m");
    let mul = |x: &(i64, i64), y: &(i64, i64)| {
        ((x.0 + pow_mod(r, x.1, m) * y.0).rem_euclid(m), (x.1 + y.1).rem_euclid(n))
    };
    regular(vec![(1, 0), (0, 1)], (0, 0), mul)
}

/// Dicyclic group of order `4n`: `<a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>`.
pub fn dicyclic(n: i64) -> PermGroup {
    let m = 2 * n;
    let mul = |x: &(i64, i64), y: &(i64, i64)| {
        let sign = if x.1 == 1 { -1 } else { 1 };
        let mut k = x.0 + sign * y.0;
        let mut e = x.1 + y.1;
        if e == 2 {
            k += n;
            e = 0;
        }
        (k.rem_euclid(m), e)
    };
    regular(vec![(1, 0), (0, 1)], (0, 0), mul)
}

/// `(Z_p)^d ⋊ Z_m` where the generator of `Z_m` acts by the matrix `a`.
pub fn abelian_by_cyclic(p: i64, a: Vec<Vec<i64>>, m: i64) -> PermGroup {
    let d = a.len();
    let apply = |v: &[i64], times: i64| -> Vec<i64> {
        let mut v = v.to_vec();
        for _ in 0..times {
            v = (0..d).map(|i| (0..d).map(|j| a[i][j] * v[j]).sum::<i64>().rem_euclid(p)).collect();
        }
        v
    };
    let mul = |x: &(Vec<i64>, i64), y: &(Vec<i64>, i64)| {
        let moved = apply(&y.0, x.1);
        let v = x.0.iter().zip(&moved).map(|(s, t)| (s + t).rem_euclid(p)).collect();
        (v, (x.1 + y.1).rem_euclid(m))
    };
    let mut gens: Vec<(Vec<i64>, i64)> = (0..d)
        .map(|i| ((0..d).map(|j| i64::from(i == j)).collect(), 0))
        .collect();
    gens.push((vec![0; d], 1));
    regular(gens, (vec![0; d], 0), mul)
}

fn matrix_group(p: i64, gens: Vec<[i64; 4]>) -> PermGroup {
    let mul = |x: &[i64; 4], y: &[i64; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]).rem_euclid(p),
            (x[0] * y[1] + x[1] * y[3]).rem_euclid(p),
            (x[2] * y[0] + x[3] * y[2]).rem_euclid(p),
            (x[2] * y[1] + x[3] * y[3]).rem_euclid(p),
        ]
    };
    regular(gens, [1, 0, 0, 1], mul)
}

/// `SL(2, 3)`.
pub fn sl2_3() -> PermGroup {
    matrix_group(3, vec![[1, 1, 0, 1], [0, 2, 1, 0]])
}

/// The Pauli group: generated by `X`, `Z` and `iI`, over `GF(5)` where `2^2 = -1`.
pub fn pauli() -> PermGroup {
    matrix_group(5, vec![[0, 1, 1, 0], [1, 0, 0, 4], [2, 0, 0, 2]])
}

/// `Z_3 ⋊ D_8` where the kernel of the action is the Klein four subgroup
/// `<r^2, s>`.
pub fn z3_by_d8() -> PermGroup {
    // (a, k, e) = a · r^k s^e; r inverts Z_3, s centralises it
    let mul = |x: &(i64, i64, i64), y: &(i64, i64, i64)| {
        let chi = if x.1 % 2 == 0 { 1 } else { -1 };
        let d8_sign = if x.2 == 1 { -1 } else { 1 };
        ((x.0 + chi * y.0).rem_euclid(3), (x.1 + d8_sign * y.1).rem_euclid(4), (x.2 + y.2) % 2)
    };
    regular(vec![(1, 0, 0), (0, 1, 0), (0, 0, 1)], (0, 0, 0), mul)
}

fn pow_mod(b: i64, e: i64, m: i64) -> i64 {
    let mut r = 1 % m;
    for _ in 0..e {
        r = (r * b).rem_euclid(m);
    }
    r
}

fn product(groups: &[PermGroup]) -> PermGroup {
    let mut it = groups.iter();
    let first = it.next().expect("at least one factor").clone();
    it.fold(first, |acc, g| acc.direct_product(g).expect("small product"))
}

fn abelian(orders: &[usize]) -> PermGroup {
    product(&orders.iter().map(|&n| cyclic(n)).collect::<Vec<_>>())
}

/// One representative of every group of order `<= 24`.
pub fn small_groups() -> Vec<CatalogEntry> {
    let e = |name: &str, group: PermGroup| CatalogEntry { name: name.to_string(), group };
    let s3 = dihedral(3);
    let d8 = dihedral(4);
    let q8 = dicyclic(2);
    let a4 = abelian_by_cyclic(2, vec![vec![0, 1], vec![1, 1]], 3);
    let dic3 = dicyclic(3);
    let mut out = vec![e("1", PermGroup::trivial(1))];
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23] {
        out.push(e(&format!("Z{p}"), cyclic(p)));
    }
    out.extend([
        e("Z4", cyclic(4)),
        e("Z2^2", abelian(&[2, 2])),
        e("Z6", cyclic(6)),
        e("S3", s3.clone()),
        e("Z8", cyclic(8)),
        e("Z4xZ2", abelian(&[4, 2])),
        e("Z2^3", abelian(&[2, 2, 2])),
        e("D8", d8.clone()),
        e("Q8", q8.clone()),
        e("Z9", cyclic(9)),
        e("Z3^2", abelian(&[3, 3])),
        e("Z10", cyclic(10)),
        e("D10", dihedral(5)),
        e("Z12", cyclic(12)),
        e("Z6xZ2", abelian(&[6, 2])),
        e("D12", dihedral(6)),
        e("A4", a4.clone()),
        e("Dic3", dic3.clone()),
        e("Z14", cyclic(14)),
        e("D14", dihedral(7)),
        e("Z15", cyclic(15)),
        e("Z16", cyclic(16)),
        e("Z4^2", abelian(&[4, 4])),
        e("Z2^2:Z4", abelian_by_cyclic(2, vec![vec![0, 1], vec![1, 0]], 4)),
        e("Z4:Z4", metacyclic(4, 4, 3)),
        e("Z8xZ2", abelian(&[8, 2])),
        e("M16", metacyclic(8, 2, 5)),
        e("D16", dihedral(8)),
        e("SD16", metacyclic(8, 2, 3)),
        e("Q16", dicyclic(4)),
        e("Z4xZ2^2", abelian(&[4, 2, 2])),
        e("Z2xD8", product(&[cyclic(2), d8.clone()])),
        e("Z2xQ8", product(&[cyclic(2), q8.clone()])),
        e("Pauli", pauli()),
        e("Z2^4", abelian(&[2, 2, 2, 2])),
        e("Z18", cyclic(18)),
        e("Z6xZ3", abelian(&[6, 3])),
        e("D18", dihedral(9)),
        e("Z3xS3", product(&[cyclic(3), s3.clone()])),
        e("Z3^2:Z2", abelian_by_cyclic(3, vec![vec![2, 0], vec![0, 2]], 2)),
        e("Z20", cyclic(20)),
        e("Z10xZ2", abelian(&[10, 2])),
        e("D20", dihedral(10)),
        e("Dic5", dicyclic(5)),
        e("F20", metacyclic(5, 4, 2)),
        e("Z21", cyclic(21)),
        e("Z7:Z3", metacyclic(7, 3, 2)),
        e("Z22", cyclic(22)),
        e("D22", dihedral(11)),
        e("Z3:Z8", metacyclic(3, 8, 2)),
        e("Z24", cyclic(24)),
        e("SL(2,3)", sl2_3()),
        e("Dic6", dicyclic(6)),
        e("Z4xS3", product(&[cyclic(4), s3.clone()])),
        e("D24", dihedral(12)),
        e("Z2xDic3", product(&[cyclic(2), dic3])),
        e("Z3:D8", z3_by_d8()),
        e("Z12xZ2", abelian(&[12, 2])),
        e("Z3xD8", product(&[cyclic(3), d8])),
        e("Z3xQ8", product(&[cyclic(3), q8])),
        e("S4", symmetric(4)),
        e("Z2xA4", product(&[cyclic(2), a4])),
        e("Z2^2xS3", product(&[cyclic(2), cyclic(2), s3])),
        e("Z2^2xZ6", abelian(&[2, 2, 6])),
    ]);
    out.sort_by_key(|c| c.group.order());
    out
}

/// The fixture set for the finite-group lemmas: every group of order `<= 24`
/// plus `A5`, `S5` and `A5 x A5`.
pub fn fixture_groups() -> Vec<CatalogEntry> {
    let mut out = small_groups();
    let a5 = alternating(5);
    out.push(CatalogEntry { name: "A5".into(), group: a5.clone() });
    out.push(CatalogEntry { name: "S5".into(), group: symmetric(5) });
    out.push(CatalogEntry {
        name: "A5xA5".into(),
        group: a5.direct_product(&a5).expect("order 3600 fits the cap"),
    });
    out
}
