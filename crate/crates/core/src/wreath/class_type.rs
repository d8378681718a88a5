//! Conjugacy-class labels: families of partitions indexed by the partitions of `k`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};

/// Partitions of `k` in the order used for class-type slots: increasing
/// lexicographic, so `(1^k)` comes first and `(k)` last.
pub fn slot_keys(k: usize) -> Vec<Partition> {
    let mut keys = enumerate_partitions(k);
    keys.reverse();
    keys
}

/// A family `x = (x(ρ))_{ρ ⊢ k}`.
///
/// Every partition of `k` has a slot, empty slots included, so two labels are
/// equal exactly when they describe the same class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassType {
    k: usize,
    slots: Vec<Partition>,
}

impl ClassType {
    /// The all-empty family (the label of the trivial group `B_0^k`).
    pub fn empty(k: usize) -> Self {
        let count = slot_keys(k).len();
        ClassType {
            k,
            slots: vec![Partition::empty(); count],
        }
    }

    /// Label of the identity class of `B_{kn}^k`.
    pub fn identity(k: usize, n: usize) -> Self {
        let mut x = ClassType::empty(k);
        x.slots[0] = Partition::ones(n);
        x
    }

    /// Builds a family from `(ρ, x(ρ))` pairs; unspecified slots are empty.
    pub fn new(k: usize, assignment: &[(Partition, Partition)]) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidClassType(
                "block size must be positive".into(),
            ));
        }
        let keys = slot_keys(k);
        let mut x = ClassType::empty(k);
        let mut filled = vec![false; keys.len()];
        for (rho, part) in assignment {
            let idx = keys.iter().position(|key| key == rho).ok_or_else(|| {
                Error::InvalidClassType(format!("{rho} is not a partition of {k}"))
            })?;
            if filled[idx] {
                return Err(Error::InvalidClassType(format!("slot {rho} given twice")));
            }
            filled[idx] = true;
            x.slots[idx] = part.clone();
        }
        Ok(x)
    }

    /// Builds from slot values aligned with [`slot_keys`].
    pub fn from_slots(k: usize, slots: Vec<Partition>) -> Result<Self> {
        let expected = slot_keys(k).len();
        if k == 0 || slots.len() != expected {
            return Err(Error::InvalidClassType(format!(
                "expected {expected} slots for k={k}, got {}",
                slots.len()
            )));
        }
        Ok(ClassType { k, slots })
    }

    pub(crate) fn from_slots_unchecked(k: usize, slots: Vec<Partition>) -> Self {
        ClassType { k, slots }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn keys(&self) -> Vec<Partition> {
        slot_keys(self.k)
    }

    pub fn slots(&self) -> &[Partition] {
        &self.slots
    }

    pub fn slot(&self, idx: usize) -> &Partition {
        &self.slots[idx]
    }

    pub(crate) fn slot_mut(&mut self, idx: usize) -> &mut Partition {
        &mut self.slots[idx]
    }

    /// `x(ρ)`; `None` if `ρ` is not a partition of `k`.
    pub fn get(&self, rho: &Partition) -> Option<&Partition> {
        slot_keys(self.k)
            .iter()
            .position(|key| key == rho)
            .map(|i| &self.slots[i])
    }

    /// `x(1^k)`, the slot that absorbs fixed blocks.
    pub fn fixed_slot(&self) -> &Partition {
        &self.slots[0]
    }

    /// `|x| = Σ_ρ |x(ρ)|`, which is the number of blocks `n`.
    pub fn size(&self) -> usize {
        self.slots.iter().map(Partition::size).sum()
    }

    /// Number of blocks not fixed pointwise: `|x| - m_1(x(1^k))`.
    pub fn moved_blocks(&self) -> usize {
        self.size() - self.slots[0].multiplicity(1)
    }

    /// True when `x(1^k)` has no part equal to 1.
    pub fn is_proper(&self) -> bool {
        self.slots[0].is_proper()
    }

    /// `∪_ρ x(ρ)`: the cycle type of the induced block permutation.
    pub fn union_of_slots(&self) -> Partition {
        self.slots
            .iter()
            .fold(Partition::empty(), |acc, p| acc.union(p))
    }

    /// Parses the text form `{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}`.
    pub fn parse(k: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| {
                Error::Parse(format!("class type must be wrapped in braces: {text:?}"))
            })?;
        let mut assignment = Vec::new();
        for entry in inner.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = entry
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("missing ':' in {entry:?}")))?;
            assignment.push((Partition::parse(key)?, Partition::parse(value)?));
        }
        ClassType::new(k, &assignment)
    }
}

impl fmt::Display for ClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keys = slot_keys(self.k);
        let entries: Vec<String> = keys
            .iter()
            .zip(&self.slots)
            .filter(|(_, v)| !v.is_empty())
            .map(|(key, v)| format!("{key}:{v}"))
            .collect();
        write!(f, "{{{}}}", entries.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn slot_order_starts_with_fixed_slot() {
        assert_eq!(slot_keys(3), vec![p(&[1, 1, 1]), p(&[2, 1]), p(&[3])]);
        assert_eq!(slot_keys(1), vec![p(&[1])]);
    }

    #[test]
    fn text_round_trip() {
        let x = ClassType::new(
            3,
            &[
                (p(&[3]), p(&[2, 2])),
                (p(&[2, 1]), p(&[2, 1])),
                (p(&[1, 1, 1]), p(&[1])),
            ],
        )
        .unwrap();
        let text = x.to_string();
        assert_eq!(text, "{[1,1,1]:[1]; [2,1]:[2,1]; [3]:[2,2]}");
        assert_eq!(ClassType::parse(3, &text).unwrap(), x);
        assert_eq!(x.size(), 8);
        assert_eq!(x.union_of_slots(), p(&[2, 2, 2, 1, 1]));
    }

    #[test]
    fn parse_accepts_empty_values_and_any_order() {
        let a = ClassType::parse(2, "{[2]:[2]; [1,1]:[3,2,1]}").unwrap();
        let b = ClassType::parse(2, "{[1,1]:[3,2,1]; [2]:[2]; }").unwrap();
        let c = ClassType::parse(2, "{[1,1]:[3,2,1]; [2]:[2]}").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(
            ClassType::parse(2, "{[1,1]:[]; [2]:[1]}").unwrap().size(),
            1
        );
        assert_eq!(ClassType::parse(2, "{}").unwrap(), ClassType::empty(2));
    }

    #[test]
    fn parse_errors() {
        assert!(ClassType::parse(2, "{[3]:[1]}").is_err());
        assert!(ClassType::parse(2, "{[2]:[1]; [2]:[1]}").is_err());
        assert!(ClassType::parse(2, "[2]:[1]").is_err());
        assert!(ClassType::parse(2, "{[2][1]}").is_err());
        assert!(ClassType::parse(0, "{}").is_err());
    }
}
