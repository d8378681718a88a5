use std::collections::{BTreeMap, BTreeSet, HashSet};

use proptest::prelude::*;

use super::*;
use crate::perm::all_permutations;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

fn bp(k: usize, line: &str) -> BlockPermutation {
    BlockPermutation::parse(k, line).unwrap()
}

fn cyc(degree: usize, cycles: &[&[usize]]) -> Perm {
    Perm::from_cycles(degree, cycles).unwrap()
}

const OMEGA_24: &str = "12 10 11 20 21 19 8 7 9 1 2 3 16 18 17 15 14 13 5 4 6 22 23 24";
const ALPHA_18: &str = "12 10 11 5 6 4 8 7 9 15 13 14 16 18 17 3 2 1";
const BETA_18: &str = "4 5 6 18 17 16 8 9 7 1 2 3 12 11 10 15 14 13";
const ALPHA_BETA_18: &str = "5 6 4 1 2 3 7 9 8 12 10 11 14 13 15 17 18 16";
const OMEGA_16: &str = "14 13 1 2 16 15 7 8 12 11 10 9 4 3 5 6";

#[test]
fn validate_examples() {
    assert!(BlockPermutation::parse(3, "1 3 2 6 5 4").is_ok());
    assert!(matches!(
        BlockPermutation::parse(3, "1 3 6 2 4 6"),
        Err(Error::NotBijection { .. })
    ));
    assert!(matches!(
        BlockPermutation::parse(3, "1 2 4 3 5 6"),
        Err(Error::NotBlockPreserving { block: 1 })
    ));
    assert!(matches!(
        BlockPermutation::parse(3, "1 2 3 4"),
        Err(Error::BadLength { .. })
    ));
    for k in [1, 2, 3, 6] {
        assert!(BlockPermutation::new(k, (0..6).collect()).is_ok());
    }
}

#[test]
fn golden_type_and_block_permutation() {
    let omega = bp(3, OMEGA_24);
    assert_eq!(
        omega.cycle_notation(),
        "(1,12,3,11,2,10)(4,20)(5,21,6,19)(7,8)(9)(13,16,15,17,14,18)(22)(23)(24)"
    );
    assert_eq!(
        omega.blocks_permutation(),
        cyc(8, &[&[1, 4], &[2, 7], &[3], &[5, 6], &[8]])
    );
    let x = omega.class_type();
    assert_eq!(x.get(&p(&[3])).unwrap(), &p(&[2, 2]));
    assert_eq!(x.get(&p(&[2, 1])).unwrap(), &p(&[2, 1]));
    assert_eq!(x.get(&p(&[1, 1, 1])).unwrap(), &p(&[1]));
    assert_eq!(x.size(), 8);
    assert_eq!(x.union_of_slots(), omega.blocks_permutation().cycle_type());
    assert_eq!(
        x.union_of_slots(),
        Partition::from_multiplicities(&[(1, 2), (2, 3)])
    );
}

#[test]
fn golden_signed_permutation_type() {
    let omega = bp(2, OMEGA_16);
    assert_eq!(
        omega.cycle_notation(),
        "(1,14,3)(2,13,4)(5,16,6,15)(7)(8)(9,12)(10,11)"
    );
    let x = omega.class_type();
    assert_eq!(x.get(&p(&[1, 1])).unwrap(), &p(&[3, 2, 1]));
    assert_eq!(x.get(&p(&[2])).unwrap(), &p(&[2]));
}

#[test]
fn golden_restrictions() {
    let alpha = bp(3, ALPHA_18);
    assert_eq!(alpha.blocks_permutation(), cyc(6, &[&[1, 4, 5, 6]]));
    let expected = [
        cyc(3, &[&[1, 3]]),
        cyc(3, &[&[1, 2, 3]]),
        cyc(3, &[&[1, 2]]),
        cyc(3, &[&[1, 3, 2]]),
        cyc(3, &[&[1, 3, 2]]),
        cyc(3, &[&[2, 3]]),
    ];
    for (i, e) in expected.iter().enumerate() {
        assert_eq!(&alpha.restriction(i), e, "alpha_{}", i + 1);
    }
    let id = BlockPermutation::identity(4, 3);
    for i in 0..3 {
        assert!(id.restriction(i).is_identity());
    }
}

#[test]
fn golden_composition_and_isomorphism() {
    let alpha = bp(3, ALPHA_18);
    let beta = bp(3, BETA_18);
    let ab = alpha.compose(&beta).unwrap();
    assert_eq!(ab.one_line(), ALPHA_BETA_18);

    let psi_a = alpha.to_wreath();
    let psi_b = beta.to_wreath();
    let psi_ab = ab.to_wreath();
    assert_eq!(
        psi_a.pretty(),
        "(((1,3),(1,2,3),(1,2),(1,3,2),(1,3,2),(2,3));(1,4,5,6)(2)(3))"
    );
    assert_eq!(
        psi_b.pretty(),
        "((1,1,(1,2,3),(1,3),(1,3),(1,3));(1,2,6,5,4)(3))"
    );
    assert_eq!(
        psi_ab.pretty(),
        "((1,(1,2,3),(2,3),(1,3,2),(1,2),(1,2,3));(1,2)(3)(4)(5)(6))"
    );
    assert_eq!(psi_a.multiply(&psi_b).unwrap(), psi_ab);
    assert_eq!(psi_a.to_block_permutation(), alpha);
    assert_eq!(psi_b.to_block_permutation(), beta);
    assert_eq!(phi(&psi_a.multiply(&psi_b).unwrap()), ab);
}

#[test]
fn inverse_of_alpha() {
    let alpha = bp(3, ALPHA_18);
    let inv = alpha.inverse();
    // inverted by hand from the one-line form
    assert_eq!(
        inv.one_line(),
        "18 17 16 6 4 5 8 7 9 2 3 1 11 12 10 13 15 14"
    );
    assert!(alpha.compose(&inv).unwrap().is_identity());
    assert!(inv.compose(&alpha).unwrap().is_identity());
    assert_eq!(
        BlockPermutation::identity(2, 3).inverse(),
        BlockPermutation::identity(2, 3)
    );
}

#[test]
fn dimension_mismatch() {
    let a = BlockPermutation::identity(2, 3);
    let b = BlockPermutation::identity(3, 2);
    assert!(matches!(
        a.compose(&b),
        Err(Error::DimensionMismatch { .. })
    ));
    assert!(matches!(
        WreathElement::identity(2, 3).multiply(&WreathElement::identity(2, 2)),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn identity_type_and_coordinates() {
    for (k, n) in [(1, 4), (2, 3), (3, 2), (4, 0)] {
        let id = BlockPermutation::identity(k, n);
        assert_eq!(id.class_type(), ClassType::identity(k, n));
        assert_eq!(id.to_wreath(), WreathElement::identity(k, n));
        assert_eq!(phi(&WreathElement::identity(k, n)), id);
        assert!(id.blocks_permutation().is_identity());
    }
}

#[test]
fn extend_pads_fixed_blocks() {
    assert_eq!(
        BlockPermutation::identity(3, 2).extend(5).unwrap(),
        BlockPermutation::identity(3, 5)
    );
    let omega = bp(3, OMEGA_24);
    assert_eq!(omega.extend(8).unwrap(), omega);
    let wide = omega.extend(9).unwrap();
    assert_eq!(wide.n(), 9);
    let x = wide.class_type();
    assert_eq!(x.fixed_slot(), &p(&[1, 1]));
    assert_eq!(x.get(&p(&[3])).unwrap(), &p(&[2, 2]));
    assert!(matches!(
        omega.extend(7),
        Err(Error::ShrinkNotAllowed { .. })
    ));
}

#[test]
fn enumerate_group_counts() {
    let b = Budget::default();
    assert_eq!(enumerate_group(1, 3, &b).unwrap().count(), 6);
    assert_eq!(enumerate_group(2, 2, &b).unwrap().count(), 8);
    assert_eq!(enumerate_group(3, 2, &b).unwrap().count(), 72);
    assert_eq!(enumerate_group(2, 0, &b).unwrap().count(), 1);
    assert!(matches!(
        enumerate_group(3, 4, &Budget::new(1000)),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn enumerate_group_starts_at_identity_and_is_ordered() {
    let all: Vec<_> = enumerate_group(2, 2, &Budget::default()).unwrap().collect();
    assert!(all[0].is_identity());
    // first outer rank (identity) covers the first (k!)^n elements
    assert!(all[..4]
        .iter()
        .all(|g| g.blocks_permutation().is_identity()));
    assert!(all[4..]
        .iter()
        .all(|g| !g.blocks_permutation().is_identity()));
}

/// Filters all of `S_{kn}` through validation; independent of wreath coordinates.
fn brute_force_group(k: usize, n: usize) -> BTreeSet<BlockPermutation> {
    all_permutations(k * n)
        .into_iter()
        .filter_map(|s| BlockPermutation::new(k, s.images().to_vec()).ok())
        .collect()
}

#[test]
fn enumerate_group_matches_filtered_symmetric_group() {
    for (k, n) in [(1, 4), (2, 2), (2, 3), (3, 2), (6, 1)] {
        let listed: Vec<_> = enumerate_group(k, n, &Budget::default()).unwrap().collect();
        let unique: BTreeSet<_> = listed.iter().cloned().collect();
        assert_eq!(unique.len(), listed.len(), "duplicates at ({k},{n})");
        assert_eq!(BigUint::from(listed.len()), group_order(k, n));
        assert_eq!(unique, brute_force_group(k, n), "({k},{n})");
    }
}

#[test]
fn type_union_is_block_cycle_type_exhaustive() {
    for (k, n) in [(2, 2), (2, 3), (3, 2)] {
        for g in enumerate_group(k, n, &Budget::default()).unwrap() {
            let x = g.class_type();
            assert_eq!(x.size(), n);
            assert_eq!(x.union_of_slots(), g.blocks_permutation().cycle_type());
        }
    }
}

#[test]
fn conjugation_invariance_exhaustive_2_2() {
    let all: Vec<_> = enumerate_group(2, 2, &Budget::default()).unwrap().collect();
    for g in &all {
        for w in &all {
            assert_eq!(conjugate(g, w).unwrap().class_type(), w.class_type());
        }
    }
}

/// Conjugacy classes found by brute-force orbit computation coincide with the
/// fibres of `type_of`, which gives both directions of "same type iff conjugate".
#[test]
fn conjugacy_classes_are_type_fibres() {
    for (k, n) in [(2, 2), (2, 3), (3, 2)] {
        let all: Vec<_> = enumerate_group(k, n, &Budget::default()).unwrap().collect();
        let mut orbit_of: BTreeMap<BlockPermutation, usize> = BTreeMap::new();
        let mut orbits: Vec<BTreeSet<BlockPermutation>> = Vec::new();
        for w in &all {
            if orbit_of.contains_key(w) {
                continue;
            }
            let orbit: BTreeSet<_> = all.iter().map(|g| conjugate(g, w).unwrap()).collect();
            for member in &orbit {
                orbit_of.insert(member.clone(), orbits.len());
            }
            orbits.push(orbit);
        }
        let mut fibres: BTreeMap<ClassType, BTreeSet<BlockPermutation>> = BTreeMap::new();
        for w in &all {
            fibres.entry(w.class_type()).or_default().insert(w.clone());
        }
        let fibre_sets: HashSet<Vec<BlockPermutation>> = fibres
            .values()
            .map(|s| s.iter().cloned().collect())
            .collect();
        let orbit_sets: HashSet<Vec<BlockPermutation>> =
            orbits.iter().map(|s| s.iter().cloned().collect()).collect();
        assert_eq!(fibre_sets, orbit_sets, "({k},{n})");
    }
}

/// Each cycle of `ω` meeting a block met by a `p_ω`-cycle of length `m` has length
/// `m` times the number of its points in that block, and those cycles cover `m k` points.
#[test]
fn cycle_length_divisibility() {
    for (k, n) in [(2, 3), (3, 2), (3, 3)] {
        for g in enumerate_group(k, n, &Budget::default()).unwrap() {
            check_cycle_lengths(&g);
        }
    }
    check_cycle_lengths(&bp(3, OMEGA_24));
}

fn check_cycle_lengths(g: &BlockPermutation) {
    let k = g.k();
    let block_cycles = g.blocks_permutation().cycles();
    let cycles = g.as_perm().cycles();
    for bc in &block_cycles {
        let m = bc.len();
        let block = bc[0];
        let meeting: Vec<&Vec<usize>> = cycles
            .iter()
            .filter(|c| c.iter().any(|&i| i / k == block))
            .collect();
        let mut total = 0;
        for c in &meeting {
            let in_block = c.iter().filter(|&&i| i / k == block).count();
            assert_eq!(c.len(), m * in_block, "{g}");
            total += c.len();
        }
        assert_eq!(total, m * k);
    }
}

fn perm_strategy(m: usize) -> impl Strategy<Value = Perm> {
    Just((0..m).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn wreath_strategy(k: usize, n: usize) -> impl Strategy<Value = WreathElement> {
    (
        proptest::collection::vec(perm_strategy(k), n),
        perm_strategy(n),
    )
        .prop_map(move |(locals, outer)| WreathElement::new(k, locals, outer).unwrap())
}

fn block_strategy(k: usize, n: usize) -> impl Strategy<Value = BlockPermutation> {
    wreath_strategy(k, n).prop_map(|w| w.to_block_permutation())
}

fn shape() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![
        Just((2, 3)),
        Just((3, 2)),
        Just((3, 3)),
        Just((2, 5)),
        Just((4, 3))
    ]
}

proptest! {
    #[test]
    fn closure_under_composition(a in block_strategy(2, 3), b in block_strategy(2, 3)) {
        let c = a.compose(&b).unwrap();
        prop_assert!(BlockPermutation::new(2, c.as_perm().images().to_vec()).is_ok());
    }

    #[test]
    fn double_inverse(a in block_strategy(3, 4)) {
        prop_assert_eq!(a.inverse().inverse(), a.clone());
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn psi_is_homomorphism(
        (a, b) in shape().prop_flat_map(|(k, n)| (block_strategy(k, n), block_strategy(k, n)))
    ) {
        let lhs = a.compose(&b).unwrap().to_wreath();
        let rhs = a.to_wreath().multiply(&b.to_wreath()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(phi(&psi(&a)), a.clone());
    }

    #[test]
    fn psi_phi_round_trip(w in shape().prop_flat_map(|(k, n)| wreath_strategy(k, n))) {
        prop_assert_eq!(psi(&phi(&w)), w.clone());
        let id = WreathElement::identity(w.k(), w.n());
        prop_assert_eq!(w.multiply(&w.inverse()).unwrap(), id.clone());
        prop_assert_eq!(w.inverse().multiply(&w).unwrap(), id);
    }

    #[test]
    fn wreath_product_associative(
        x in wreath_strategy(2, 3), y in wreath_strategy(2, 3), z in wreath_strategy(2, 3)
    ) {
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn conjugation_preserves_type(
        (g, w) in prop_oneof![Just((2usize, 3usize)), Just((3, 2)), Just((3, 3))]
            .prop_flat_map(|(k, n)| (block_strategy(k, n), block_strategy(k, n)))
    ) {
        prop_assert_eq!(conjugate(&g, &w).unwrap().class_type(), w.class_type());
        let w_self = conjugate(&w, &w).unwrap();
        prop_assert_eq!(w_self, w.clone());
    }

    #[test]
    fn type_union_is_block_cycle_type(w in shape().prop_flat_map(|(k, n)| block_strategy(k, n))) {
        let x = w.class_type();
        prop_assert_eq!(x.size(), w.n());
        prop_assert_eq!(x.union_of_slots(), w.blocks_permutation().cycle_type());
    }

    #[test]
    fn extension_adds_fixed_blocks(w in block_strategy(3, 3), extra in 0usize..4) {
        let wide = w.extend(3 + extra).unwrap();
        let before = w.class_type();
        let after = wide.class_type();
        prop_assert_eq!(after.fixed_slot(), &before.fixed_slot().union(&Partition::ones(extra)));
        prop_assert_eq!(&after.slots()[1..], &before.slots()[1..]);
    }
}
