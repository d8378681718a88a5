//! The group `B_{kn}^k` of permutations of `[kn]` that map blocks onto blocks.
//!
//! Blocks are `{ik, .., ik + k - 1}` for `i in 0..n` (0-based internally).
//! Composition is right-to-left: `(a ∘ b)(i) = a(b(i))`.

mod class_type;
mod element;

use num_bigint::BigUint;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};
use crate::perm::{parse_usize_list, Perm};

pub use class_type::{slot_keys, ClassType};
pub use element::{compact_cycles, WreathElement};

/// An element of `B_{kn}^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockPermutation {
    k: usize,
    n: usize,
    images: Perm,
}

impl BlockPermutation {
    /// Checks that `images` (0-based) is a bijection sending every block onto a block.
    pub fn new(k: usize, images: Vec<usize>) -> Result<Self> {
        if k == 0 || !images.len().is_multiple_of(k) {
            return Err(Error::BadLength {
                len: images.len(),
                k,
            });
        }
        let n = images.len() / k;
        let images = Perm::from_images(images)?;
        for block in 0..n {
            let target = images.apply(block * k) / k;
            if (1..k).any(|b| images.apply(block * k + b) / k != target) {
                return Err(Error::NotBlockPreserving { block: block + 1 });
            }
        }
        Ok(BlockPermutation { k, n, images })
    }

    /// Same as [`BlockPermutation::new`] but with 1-based images.
    pub fn from_one_line(k: usize, images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let zero = images
            .iter()
            .map(|&j| j.checked_sub(1).ok_or(Error::NotBijection { degree }))
            .collect::<Result<Vec<_>>>()?;
        BlockPermutation::new(k, zero)
    }

    /// Parses space separated 1-based images.
    pub fn parse(k: usize, text: &str) -> Result<Self> {
        BlockPermutation::from_one_line(k, &parse_usize_list(text)?)
    }

    pub(crate) fn from_parts_unchecked(k: usize, n: usize, images: Perm) -> Self {
        BlockPermutation { k, n, images }
    }

    pub fn identity(k: usize, n: usize) -> Self {
        BlockPermutation {
            k,
            n,
            images: Perm::identity(k * n),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_perm(&self) -> &Perm {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images.apply(i)
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_identity()
    }

    fn check_same_shape(&self, other: &BlockPermutation) -> Result<()> {
        if self.k != other.k || self.n != other.n {
            return Err(Error::DimensionMismatch {
                k1: self.k,
                n1: self.n,
                k2: other.k,
                n2: other.n,
            });
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BlockPermutation) -> Result<BlockPermutation> {
        self.check_same_shape(other)?;
        Ok(BlockPermutation {
            k: self.k,
            n: self.n,
            images: self.images.compose(&other.images),
        })
    }

    pub fn inverse(&self) -> BlockPermutation {
        BlockPermutation {
            k: self.k,
            n: self.n,
            images: self.images.inverse(),
        }
    }

    /// `γ ∘ self ∘ γ⁻¹`.
    pub fn conjugate_by(&self, gamma: &BlockPermutation) -> Result<BlockPermutation> {
        gamma.compose(self)?.compose(&gamma.inverse())
    }

    /// `p_ω`: block `i` goes to block `p_ω(i)`.
    pub fn blocks_permutation(&self) -> Perm {
        let images = (0..self.n)
            .map(|i| self.images.apply(i * self.k) / self.k)
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// Normalized restriction `ω_i` (0-based block index): the local action on the
    /// block that lands on block `i`, in block-relative coordinates.
    pub fn restriction(&self, i: usize) -> Perm {
        assert!(i < self.n, "block index {i} out of range for n={}", self.n);
        let k = self.k;
        let source = (0..self.n)
            .find(|&j| self.images.apply(j * k) / k == i)
            .expect("block permutation is a bijection on blocks");
        let images = (0..k)
            .map(|b| self.images.apply(source * k + b) % k)
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// `ψ(ω) = ((ω_1, .., ω_n); p_ω)`.
    pub fn to_wreath(&self) -> WreathElement {
        let (k, n) = (self.k, self.n);
        let mut locals = vec![Perm::identity(k); n];
        for source in 0..n {
            let target = self.images.apply(source * k) / k;
            let images = (0..k)
                .map(|b| self.images.apply(source * k + b) % k)
                .collect();
            locals[target] = Perm::from_images_unchecked(images);
        }
        WreathElement::new(k, locals, self.blocks_permutation())
            .expect("restrictions have degree k")
    }

    /// Pads with fixed blocks up to `new_n` blocks.
    pub fn extend(&self, new_n: usize) -> Result<BlockPermutation> {
        if new_n < self.n {
            return Err(Error::ShrinkNotAllowed {
                from: self.n,
                to: new_n,
            });
        }
        let mut images = self.images.images().to_vec();
        images.extend(self.k * self.n..self.k * new_n);
        Ok(BlockPermutation {
            k: self.k,
            n: new_n,
            images: Perm::from_images_unchecked(images),
        })
    }

    /// The cycle product over the `p_ω`-cycle through `block`, whose length is `len`:
    /// the permutation of `[k]` obtained by following `ω` once around that cycle.
    fn cycle_product(&self, block: usize, len: usize) -> Perm {
        let k = self.k;
        let base = block * k;
        let images = (0..k)
            .map(|b| {
                let mut cur = base + b;
                for _ in 0..len {
                    cur = self.images.apply(cur);
                }
                cur - base
            })
            .collect();
        Perm::from_images_unchecked(images)
    }

    /// `ty(ω)`.
    pub fn class_type(&self) -> ClassType {
        TypeExtractor::new(self.k).type_of(self)
    }

    pub fn one_line(&self) -> String {
        self.images.one_line()
    }

    pub fn cycle_notation(&self) -> String {
        self.images.cycle_notation()
    }
}

impl std::fmt::Display for BlockPermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.one_line())
    }
}

/// Computes `ty(ω)` with the partitions of `k` looked up once.
#[derive(Clone, Debug)]
pub struct TypeExtractor {
    k: usize,
    keys: Vec<Partition>,
}

impl TypeExtractor {
    pub fn new(k: usize) -> Self {
        TypeExtractor {
            k,
            keys: slot_keys(k),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn keys(&self) -> &[Partition] {
        &self.keys
    }

    fn slot_index(&self, rho: &Partition) -> usize {
        self.keys
            .iter()
            .position(|key| key == rho)
            .expect("cycle type of a permutation of [k] is a partition of k")
    }

    /// Raw `(cycle length, slot)` contributions, one per cycle of `p_ω`.
    fn contributions(&self, omega: &BlockPermutation) -> Vec<(usize, usize)> {
        assert_eq!(omega.k, self.k, "extractor built for a different k");
        let k = self.k;
        let mut seen = vec![false; omega.n];
        let mut out = Vec::new();
        for start in 0..omega.n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = omega.images.apply(cur * k) / k;
            }
            let rho = omega.cycle_product(start, len).cycle_type();
            out.push((len, self.slot_index(&rho)));
        }
        out
    }

    pub fn type_of(&self, omega: &BlockPermutation) -> ClassType {
        let mut raw: Vec<Vec<usize>> = vec![Vec::new(); self.keys.len()];
        for (len, slot) in self.contributions(omega) {
            raw[slot].push(len);
        }
        ClassType::from_slots_unchecked(self.k, raw.into_iter().map(Partition::new).collect())
    }
}

pub fn type_of(omega: &BlockPermutation) -> ClassType {
    omega.class_type()
}

pub fn psi(omega: &BlockPermutation) -> WreathElement {
    omega.to_wreath()
}

pub fn phi(w: &WreathElement) -> BlockPermutation {
    w.to_block_permutation()
}

pub fn conjugate(gamma: &BlockPermutation, omega: &BlockPermutation) -> Result<BlockPermutation> {
    omega.conjugate_by(gamma)
}

/// `|B_{kn}^k| = (k!)^n n!`.
pub fn group_order(k: usize, n: usize) -> BigUint {
    factorial(k).pow(n as u32) * factorial(n)
}

/// Iterates `B_{kn}^k` through wreath coordinates: outer permutation in
/// lexicographic order, then the local tuple `(σ_1, .., σ_n)` lexicographically.
pub fn enumerate_group(k: usize, n: usize, budget: &Budget) -> Result<GroupIter> {
    if k == 0 {
        return Err(Error::BadLength { len: 0, k });
    }
    budget.check(&group_order(k, n))?;
    Ok(GroupIter {
        k,
        outer: Perm::identity(n),
        locals: vec![Perm::identity(k); n],
        done: false,
    })
}

#[derive(Clone, Debug)]
pub struct GroupIter {
    k: usize,
    outer: Perm,
    locals: Vec<Perm>,
    done: bool,
}

impl GroupIter {
    fn advance(&mut self) {
        for local in self.locals.iter_mut().rev() {
            if local.advance_lex() {
                return;
            }
            *local = Perm::identity(self.k);
        }
        if !self.outer.advance_lex() {
            self.done = true;
        }
    }
}

impl Iterator for GroupIter {
    type Item = BlockPermutation;

    fn next(&mut self) -> Option<BlockPermutation> {
        if self.done {
            return None;
        }
        let w = WreathElement::new(self.k, self.locals.clone(), self.outer.clone())
            .expect("iterator keeps coordinates well formed");
        self.advance();
        Some(w.to_block_permutation())
    }
}

#[cfg(test)]
mod tests;
