//! Integer partitions and the plain symmetric group.
//!
//! A [`Partition`] is stored as a weakly decreasing list of positive parts.
//! Exponential notation `(1^2,3,6^2)` is only a formatting view.

use std::cmp::Reverse;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
pub use crate::perm::{all_permutations, Perm as PlainPermutation};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` decreasingly and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by_key(|&p| Reverse(p));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^count)`.
    pub fn ones(count: usize) -> Self {
        Partition {
            parts: vec![1; count],
        }
    }

    /// Builds from `(part, multiplicity)` pairs.
    pub fn from_multiplicities(pairs: &[(usize, usize)]) -> Self {
        let mut parts = Vec::new();
        for &(part, mult) in pairs {
            parts.extend(std::iter::repeat_n(part, mult));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m_i(λ)`
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs in increasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// True when no part equals 1.
    pub fn is_proper(&self) -> bool {
        self.multiplicity(1) == 0
    }

    /// Multiset union: multiplicities add.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.length() + other.length());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Multiset difference; fails when some `m_i(self) < m_i(other)`.
    pub fn subtract(&self, other: &Partition) -> Result<Partition> {
        let mut parts = Vec::with_capacity(self.length());
        let mut j = 0;
        for &p in &self.parts {
            if j < other.parts.len() && other.parts[j] == p {
                j += 1;
            } else if j < other.parts.len() && other.parts[j] > p {
                break;
            } else {
                parts.push(p);
            }
        }
        if j < other.parts.len() {
            return Err(Error::NotSubtractable {
                minuend: self.to_string(),
                subtrahend: other.to_string(),
            });
        }
        Ok(Partition { parts })
    }

    /// `λ̄ = λ \ (1^{m_1(λ)})`.
    pub fn proper_part(&self) -> Partition {
        Partition {
            parts: self.parts.iter().copied().filter(|&p| p != 1).collect(),
        }
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .fold(BigUint::one(), |acc, (i, m)| {
                acc * BigUint::from(i).pow(m as u32) * factorial(m)
            })
    }

    /// Exponential notation, e.g. `(1^2,3,6^2)`; `∅` for the empty partition.
    pub fn exponential(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let inner: Vec<String> = self
            .multiplicities()
            .into_iter()
            .map(|(p, m)| {
                if m == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{m}")
                }
            })
            .collect();
        format!("({})", inner.join(","))
    }

    /// Parses `[3,1,1]` (brackets optional, parts in any order).
    pub fn parse(text: &str) -> Result<Partition> {
        let t = text.trim();
        let t = t.strip_prefix('[').unwrap_or(t);
        let t = t.strip_suffix(']').unwrap_or(t);
        let mut parts = Vec::new();
        for piece in t.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let p: usize = piece
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {piece:?} in {text:?}")))?;
            if p == 0 {
                return Err(Error::Parse(format!("zero part in {text:?}")));
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", inner.join(","))
    }
}

/// Every partition of `m`, in reverse lexicographic order: `(m)` first, `(1^m)` last.
pub fn enumerate_partitions(m: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

pub fn z(lambda: &Partition) -> BigUint {
    lambda.z()
}

pub fn union(lambda: &Partition, delta: &Partition) -> Partition {
    lambda.union(delta)
}

pub fn subtract(lambda: &Partition, delta: &Partition) -> Result<Partition> {
    lambda.subtract(delta)
}

pub fn proper_part(lambda: &Partition) -> Partition {
    lambda.proper_part()
}

pub fn cycle_type(sigma: &PlainPermutation) -> Partition {
    sigma.cycle_type()
}

/// `|C_λ| = m!/z_λ` in `S_m`.
pub fn symmetric_class_size(lambda: &Partition) -> BigUint {
    factorial(lambda.size()) / lambda.z()
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}
