//! Small-prime helpers and strictly increasing prime sequences.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    (2..).filter(|&n| is_prime(n)).take(count).collect()
}

/// All primes `<= bound`.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime(n)).collect()
}

/// A strictly increasing finite sequence of primes: a prefix `(ω, n)` of
/// some `ω ∈ Ω`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PrimeSeq(Vec<u64>);

impl PrimeSeq {
    pub fn new(primes: Vec<u64>) -> Result<Self> {
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        if primes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!("{primes:?} is not strictly increasing")));
        }
        Ok(Self(primes))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn primes(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The prefix of length `n`.
    pub fn prefix(&self, n: usize) -> Self {
        Self(self.0[..n].to_vec())
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    /// Set inclusion of the underlying prime sets.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.0.iter().all(|&p| other.contains(p))
    }

    /// Product of the primes, or `None` on overflow.
    pub fn product(&self) -> Option<u64> {
        self.0.iter().try_fold(1u64, |acc, &p| acc.checked_mul(p))
    }

    /// Every strictly increasing sequence of length `<= max_len` over `pool`.
    pub fn all_up_to(pool: &[u64], max_len: usize) -> Vec<Self> {
        let mut out = vec![Self::empty()];
        let mut frontier = vec![(Vec::<u64>::new(), 0usize)];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for (seq, start) in &frontier {
                for (i, &p) in pool.iter().enumerate().skip(*start) {
                    let mut s = seq.clone();
                    s.push(p);
                    out.push(Self(s.clone()));
                    next.push((s, i + 1));
                }
            }
            frontier = next;
        }
        out
    }
}

impl fmt::Display for PrimeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Parses comma-separated primes; the empty string is the empty sequence.
impl FromStr for PrimeSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        let primes = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|e| Error::InvalidInput(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(primes)
    }
}

impl<'de> Deserialize<'de> for PrimeSeq {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::<u64>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
