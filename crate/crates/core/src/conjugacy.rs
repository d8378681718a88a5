//! Conjugacy classes of `B_{kn}^k`: labels, sizes, representatives and
//! direct generation of class members.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::One;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, Partition};
use crate::perm::{all_permutations, Perm};
use crate::wreath::{slot_keys, BlockPermutation, ClassType};

/// A class type whose `x(1^k)` has no part equal to 1.
///
/// Padding it with `n - |x|` fixed blocks gives the label of the extended
/// class `C_x(n)` for every `n ≥ |x|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProperClassFamily(ClassType);

impl ProperClassFamily {
    pub fn new(family: ClassType) -> Result<Self> {
        if !family.is_proper() {
            return Err(Error::NotProper);
        }
        Ok(ProperClassFamily(family))
    }

    /// Strips the fixed blocks (parts 1 of `x(1^k)`) from any class type.
    pub fn from_class_type(x: &ClassType) -> Self {
        let mut proper = x.clone();
        let stripped = proper.fixed_slot().proper_part();
        *proper.slot_mut(0) = stripped;
        ProperClassFamily(proper)
    }

    pub fn parse(k: usize, text: &str) -> Result<Self> {
        ProperClassFamily::new(ClassType::parse(k, text)?)
    }

    pub fn k(&self) -> usize {
        self.0.k()
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn as_class_type(&self) -> &ClassType {
        &self.0
    }

    /// The label of `C_x(n)`.
    pub fn pad(&self, n: usize) -> Result<ClassType> {
        pad(self, n)
    }
}

impl std::fmt::Display for ProperClassFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// All families `(x(ρ))_{ρ⊢k}` with `|x| = n`.
///
/// Slots are filled in key order; each slot takes its largest admissible size
/// first and runs through partitions in reverse lexicographic order.
pub fn enumerate_class_types(k: usize, n: usize) -> Vec<ClassType> {
    let slot_count = slot_keys(k).len();
    let partitions_by_size: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(slot_count);

    fn rec(
        k: usize,
        slot_count: usize,
        remaining: usize,
        by_size: &[Vec<Partition>],
        current: &mut Vec<Partition>,
        out: &mut Vec<ClassType>,
    ) {
        if current.len() + 1 == slot_count {
            for lambda in &by_size[remaining] {
                current.push(lambda.clone());
                out.push(ClassType::from_slots_unchecked(k, current.clone()));
                current.pop();
            }
            return;
        }
        for size in (0..=remaining).rev() {
            for lambda in &by_size[size] {
                current.push(lambda.clone());
                rec(k, slot_count, remaining - size, by_size, current, out);
                current.pop();
            }
        }
    }

    rec(
        k,
        slot_count,
        n,
        &partitions_by_size,
        &mut current,
        &mut out,
    );
    out
}

/// `n! (k!)^n / ∏_ρ z_{x(ρ)} z_ρ^{l(x(ρ))}`.
pub fn class_size(x: &ClassType) -> BigUint {
    let (k, n) = (x.k(), x.size());
    let numerator = factorial(n) * factorial(k).pow(n as u32);
    numerator / centralizer_order(x)
}

/// The denominator `∏_ρ z_{x(ρ)} z_ρ^{l(x(ρ))}`, i.e. the centralizer order.
pub fn centralizer_order(x: &ClassType) -> BigUint {
    slot_keys(x.k())
        .iter()
        .zip(x.slots())
        .fold(BigUint::one(), |acc, (rho, part)| {
            acc * part.z() * rho.z().pow(part.length() as u32)
        })
}

/// Hyperoctahedral form: `2^n n! / (2^{l(λ)+l(δ)} z_λ z_δ)` with `n = |λ| + |δ|`.
pub fn class_size_k2(lambda: &Partition, delta: &Partition) -> BigUint {
    let n = lambda.size() + delta.size();
    let two = BigUint::from(2u32);
    let numerator = two.pow(n as u32) * factorial(n);
    let denominator = two.pow((lambda.length() + delta.length()) as u32) * lambda.z() * delta.z();
    numerator / denominator
}

/// `k = 3` form: `2^{n-l(α)-l(β)} 3^{n-l(α)-l(γ)} n! / (z_α z_β z_γ)`.
pub fn class_size_k3(alpha: &Partition, beta: &Partition, gamma: &Partition) -> BigUint {
    let n = alpha.size() + beta.size() + gamma.size();
    let twos = n - alpha.length() - beta.length();
    let threes = n - alpha.length() - gamma.length();
    BigUint::from(2u32).pow(twos as u32) * BigUint::from(3u32).pow(threes as u32) * factorial(n)
        / (alpha.z() * beta.z() * gamma.z())
}

/// Replaces `x(1^k)` by `x(1^k) ∪ (1^{n-|x|})`.
pub fn pad(x: &ProperClassFamily, n: usize) -> Result<ClassType> {
    let size = x.size();
    if n < size {
        return Err(Error::TooSmall { n, size });
    }
    let mut out = x.as_class_type().clone();
    let padded = out.fixed_slot().union(&Partition::ones(n - size));
    *out.slot_mut(0) = padded;
    Ok(out)
}

/// `|C_x(n)| = n! (k!)^{n₀-l(x(1^k))} / (z_{x(1^k)} (n-n₀)! ∏_{ρ≠1^k} z_{x(ρ)} z_ρ^{l(x(ρ))})`
/// where `n₀ = |x|`.
pub fn extended_class_size(x: &ProperClassFamily, n: usize) -> Result<BigUint> {
    let n0 = x.size();
    if n < n0 {
        return Err(Error::TooSmall { n, size: n0 });
    }
    let family = x.as_class_type();
    let fixed = family.fixed_slot();
    let numerator = factorial(n) * factorial(x.k()).pow((n0 - fixed.length()) as u32);
    let rest = slot_keys(x.k())
        .iter()
        .zip(family.slots())
        .skip(1)
        .fold(BigUint::one(), |acc, (rho, part)| {
            acc * part.z() * rho.z().pow(part.length() as u32)
        });
    Ok(numerator / (fixed.z() * factorial(n - n0) * rest))
}

/// `(x(1,1), x(2))`.
pub fn k2_view(x: &ClassType) -> Result<(Partition, Partition)> {
    if x.k() != 2 {
        return Err(Error::WrongK {
            expected: 2,
            got: x.k(),
        });
    }
    Ok((x.slot(0).clone(), x.slot(1).clone()))
}

/// `(α, β, γ) = (x(1^3), x(2,1), x(3))`.
pub fn k3_view(x: &ClassType) -> Result<(Partition, Partition, Partition)> {
    if x.k() != 3 {
        return Err(Error::WrongK {
            expected: 3,
            got: x.k(),
        });
    }
    Ok((x.slot(0).clone(), x.slot(1).clone(), x.slot(2).clone()))
}

/// The first permutation of `[k]`, in lexicographic order, with cycle type `rho`.
fn lex_min_of_type(rho: &Partition) -> Perm {
    all_permutations(rho.size())
        .into_iter()
        .find(|p| &p.cycle_type() == rho)
        .expect("every partition is a cycle type")
}

/// Canonical element of the class `x`.
///
/// Blocks are handed out in slot order from `(k)` down to `(1^k)`, parts in
/// decreasing order. A part `m` of `x(ρ)` uses the next `m` blocks `b_0 .. b_{m-1}`,
/// cycled as `b_0 → b_1 → .. → b_{m-1} → b_0`; every step is the identity locally
/// except the closing one, which applies the lexicographically least
/// permutation of cycle type `ρ`.
pub fn representative(x: &ClassType) -> BlockPermutation {
    let (k, n) = (x.k(), x.size());
    let keys = slot_keys(k);
    let mut outer = vec![0; n];
    let mut locals = vec![Perm::identity(k); n];
    let mut next = 0;
    for (rho, part) in keys.iter().zip(x.slots()).rev() {
        if part.is_empty() {
            continue;
        }
        let closing = lex_min_of_type(rho);
        for &m in part.parts() {
            let blocks: Vec<usize> = (next..next + m).collect();
            next += m;
            for j in 0..m {
                outer[blocks[j]] = blocks[(j + 1) % m];
            }
            locals[blocks[0]] = closing.clone();
        }
    }
    let w = crate::wreath::WreathElement::new(k, locals, Perm::from_images_unchecked(outer))
        .expect("well formed coordinates");
    w.to_block_permutation()
}

/// Visits every element of the class `x` exactly once without touching the
/// rest of the group. Memory use is `O(kn)` plus the visitor's own.
///
/// Elements are built in wreath coordinates: the cycle through the smallest
/// unused block is chosen together with its slot, the local permutations on
/// all but the first block of that cycle are free, and the first one is solved
/// for so that the cycle product runs through the class of `ρ`.
pub fn for_each_class_element<F>(
    x: &ClassType,
    budget: &Budget,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&BlockPermutation) -> ControlFlow<()>,
{
    budget.check(&class_size(x))?;
    let mut generator = ClassGenerator::new(x);
    Ok(generator.next_cycle(&mut visit))
}

/// Collects the class `x`; see [`for_each_class_element`].
pub fn class_elements(x: &ClassType, budget: &Budget) -> Result<Vec<BlockPermutation>> {
    let mut out = Vec::new();
    let _ = for_each_class_element(x, budget, |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

struct CycleKind {
    len: usize,
    slot: usize,
    remaining: usize,
}

struct ClassGenerator {
    k: usize,
    n: usize,
    kinds: Vec<CycleKind>,
    used: Vec<bool>,
    outer: Vec<usize>,
    locals: Vec<Perm>,
    symmetric: Vec<Perm>,
    slot_classes: Vec<Vec<Perm>>,
    buffer: Vec<usize>,
}

impl ClassGenerator {
    fn new(x: &ClassType) -> Self {
        let (k, n) = (x.k(), x.size());
        let symmetric = all_permutations(k);
        let slot_classes = slot_keys(k)
            .iter()
            .map(|rho| {
                symmetric
                    .iter()
                    .filter(|p| &p.cycle_type() == rho)
                    .cloned()
                    .collect()
            })
            .collect();
        let mut kinds = Vec::new();
        for (slot, part) in x.slots().iter().enumerate() {
            for (len, remaining) in part.multiplicities() {
                kinds.push(CycleKind {
                    len,
                    slot,
                    remaining,
                });
            }
        }
        ClassGenerator {
            k,
            n,
            kinds,
            used: vec![false; n],
            outer: vec![0; n],
            locals: vec![Perm::identity(k); n],
            symmetric,
            slot_classes,
            buffer: vec![0; k * n],
        }
    }

    fn emit<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&BlockPermutation) -> ControlFlow<()>,
    {
        let k = self.k;
        for a in 0..self.n {
            let target = self.outer[a];
            let local = &self.locals[target];
            for b in 0..k {
                self.buffer[k * a + b] = k * target + local.apply(b);
            }
        }
        let g = BlockPermutation::from_parts_unchecked(
            k,
            self.n,
            Perm::from_images_unchecked(self.buffer.clone()),
        );
        visit(&g)
    }

    fn next_cycle<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&BlockPermutation) -> ControlFlow<()>,
    {
        let Some(start) = self.used.iter().position(|u| !u) else {
            return self.emit(visit);
        };
        let free = self.used.iter().filter(|u| !**u).count();
        for kind in 0..self.kinds.len() {
            if self.kinds[kind].remaining == 0 || self.kinds[kind].len > free {
                continue;
            }
            self.kinds[kind].remaining -= 1;
            self.used[start] = true;
            let mut cycle = vec![start];
            let flow = self.grow_cycle(kind, &mut cycle, visit);
            self.used[start] = false;
            self.kinds[kind].remaining += 1;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn grow_cycle<F>(
        &mut self,
        kind: usize,
        cycle: &mut Vec<usize>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&BlockPermutation) -> ControlFlow<()>,
    {
        let len = self.kinds[kind].len;
        if cycle.len() == len {
            for j in 0..len {
                self.outer[cycle[j]] = cycle[(j + 1) % len];
            }
            return self.fill_locals(kind, cycle, 1, visit);
        }
        for block in 0..self.n {
            if self.used[block] {
                continue;
            }
            self.used[block] = true;
            cycle.push(block);
            let flow = self.grow_cycle(kind, cycle, visit);
            cycle.pop();
            self.used[block] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn fill_locals<F>(
        &mut self,
        kind: usize,
        cycle: &[usize],
        j: usize,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&BlockPermutation) -> ControlFlow<()>,
    {
        if j < cycle.len() {
            for s in 0..self.symmetric.len() {
                self.locals[cycle[j]] = self.symmetric[s].clone();
                self.fill_locals(kind, cycle, j + 1, visit)?;
            }
            return ControlFlow::Continue(());
        }
        // rest = σ_{c[len-1]} ∘ .. ∘ σ_{c[1]}; the closing local is g ∘ rest⁻¹
        let rest_inverse = cycle[1..]
            .iter()
            .fold(Perm::identity(self.k), |acc, &b| {
                self.locals[b].compose(&acc)
            })
            .inverse();
        let slot = self.kinds[kind].slot;
        for g in 0..self.slot_classes[slot].len() {
            self.locals[cycle[0]] = self.slot_classes[slot][g].compose(&rest_inverse);
            self.next_cycle(visit)?;
        }
        ControlFlow::Continue(())
    }
}
