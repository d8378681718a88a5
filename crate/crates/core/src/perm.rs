//! Permutations of `{0, .., m-1}` in one-line form.
//!
//! Internally everything is 0-based; the text forms are 1-based, matching the
//! usual mathematical one-line and cycle notations.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A permutation of `[m]`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &j in &images {
            if j >= degree || seen[j] {
                return Err(Error::NotBijection { degree });
            }
            seen[j] = true;
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let zero = images
            .iter()
            .map(|&j| j.checked_sub(1).ok_or(Error::NotBijection { degree }))
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(zero)
    }

    /// Builds a permutation of `[degree]` from 1-based cycles; unlisted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                let b = cycle[(idx + 1) % cycle.len()];
                if a == 0 || b == 0 || a > degree || b > degree || touched[a - 1] {
                    return Err(Error::NotBijection { degree });
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Perm::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            out.push(cycle);
        }
        out
    }

    /// The partition of `degree` formed by the cycle lengths.
    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur];
            }
            lengths.push(len);
        }
        Partition::new(lengths)
    }

    /// Steps to the lexicographically next permutation; returns `false` after the last one.
    pub(crate) fn advance_lex(&mut self) -> bool {
        let v = &mut self.images;
        if v.len() < 2 {
            return false;
        }
        let mut i = v.len() - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = v.len() - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    /// Space separated 1-based images.
    pub fn one_line(&self) -> String {
        self.images
            .iter()
            .map(|j| (j + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Cycle notation with fixed points shown, e.g. `(1,4)(2)(3)`.
    pub fn cycle_notation(&self) -> String {
        if self.degree() == 0 {
            return "()".to_string();
        }
        self.cycles()
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }

    /// Parses space (or comma) separated 1-based images.
    pub fn parse_one_line(text: &str) -> Result<Perm> {
        let images = parse_usize_list(text)?;
        Perm::from_one_based(&images)
    }
}

pub(crate) fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a positive integer: {s:?}")))
        })
        .collect()
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

/// All permutations of `[m]` in lexicographic order of their one-line forms.
pub fn all_permutations(m: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p = Perm::identity(m);
    loop {
        out.push(p.clone());
        if !p.advance_lex() {
            break;
        }
    }
    out
}
