//! Wreath coordinates `((σ_1, .., σ_n); p)` of `S_k ≀ S_n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

use super::BlockPermutation;

/// An element of `S_k ≀ S_n` in coordinates.
///
/// `locals[i]` is the local permutation applied to the block that the outer
/// permutation sends to block `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    k: usize,
    locals: Vec<Perm>,
    outer: Perm,
}

impl WreathElement {
    pub fn new(k: usize, locals: Vec<Perm>, outer: Perm) -> Result<Self> {
        if locals.len() != outer.degree() {
            return Err(Error::Malformed(format!(
                "{} local permutations for an outer permutation of degree {}",
                locals.len(),
                outer.degree()
            )));
        }
        if let Some(bad) = locals.iter().find(|s| s.degree() != k) {
            return Err(Error::Malformed(format!(
                "local permutation of degree {} in a wreath product with k={k}",
                bad.degree()
            )));
        }
        Ok(WreathElement { k, locals, outer })
    }

    pub fn identity(k: usize, n: usize) -> Self {
        WreathElement {
            k,
            locals: vec![Perm::identity(k); n],
            outer: Perm::identity(n),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.outer.degree()
    }

    pub fn locals(&self) -> &[Perm] {
        &self.locals
    }

    pub fn outer(&self) -> &Perm {
        &self.outer
    }

    fn check_same_shape(&self, other: &WreathElement) -> Result<()> {
        if self.k != other.k || self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                k1: self.k,
                n1: self.n(),
                k2: other.k,
                n2: other.n(),
            });
        }
        Ok(())
    }

    /// `((σ_i ε_{p⁻¹(i)})_i; pq)`.
    pub fn multiply(&self, other: &WreathElement) -> Result<WreathElement> {
        self.check_same_shape(other)?;
        let p_inv = self.outer.inverse();
        let locals = (0..self.n())
            .map(|i| self.locals[i].compose(&other.locals[p_inv.apply(i)]))
            .collect();
        Ok(WreathElement {
            k: self.k,
            locals,
            outer: self.outer.compose(&other.outer),
        })
    }

    /// `((σ⁻¹_{p(i)})_i; p⁻¹)`.
    pub fn inverse(&self) -> WreathElement {
        let locals = (0..self.n())
            .map(|i| self.locals[self.outer.apply(i)].inverse())
            .collect();
        WreathElement {
            k: self.k,
            locals,
            outer: self.outer.inverse(),
        }
    }

    /// The block permutation `σ(k a + b) = k p(a) + σ_{p(a)}(b)`.
    pub fn to_block_permutation(&self) -> BlockPermutation {
        let (k, n) = (self.k, self.n());
        let mut images = vec![0; k * n];
        for a in 0..n {
            let target = self.outer.apply(a);
            let local = &self.locals[target];
            for b in 0..k {
                images[k * a + b] = k * target + local.apply(b);
            }
        }
        BlockPermutation::from_parts_unchecked(k, n, Perm::from_images_unchecked(images))
    }

    /// Compact view in cycle notation, e.g. `(((1,3),1,(1,2));(1,2)(3))`; identity locals print as `1`.
    pub fn pretty(&self) -> String {
        let locals: Vec<String> = self.locals.iter().map(compact_cycles).collect();
        format!("(({});{})", locals.join(","), self.outer.cycle_notation())
    }
}

/// Cycle notation without fixed points; `1` for the identity.
pub fn compact_cycles(p: &Perm) -> String {
    let parts: Vec<String> = p
        .cycles()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            format!("({})", inner.join(","))
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.concat()
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}
