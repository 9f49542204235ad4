#![allow(dead_code)]

use fusion_burnside::group::Permutation;
use fusion_burnside::named::{self, D8_LABELS};
use fusion_burnside::{BigInt, BurnsideRing, FiniteGroup, FusionSystem, IntElement, SylowPin};

/// Class indices of D8 in canonical order.
pub const ONE: usize = 0;
pub const Z: usize = 1;
pub const RS: usize = 2;
pub const S: usize = 3;
pub const C: usize = 4;
pub const K_RS: usize = 5;
pub const K_S: usize = 6;
pub const D8: usize = 7;

/// Table of marks of D8 as printed in the literature (rows [S/Q], columns P).
pub const D8_MARKS: [[u64; 8]; 8] = [
    [8, 0, 0, 0, 0, 0, 0, 0],
    [4, 4, 0, 0, 0, 0, 0, 0],
    [4, 0, 2, 0, 0, 0, 0, 0],
    [4, 0, 0, 2, 0, 0, 0, 0],
    [2, 2, 0, 0, 2, 0, 0, 0],
    [2, 2, 2, 0, 0, 2, 0, 0],
    [2, 2, 0, 2, 0, 0, 2, 0],
    [1, 1, 1, 1, 1, 1, 1, 1],
];

pub fn d8_ring() -> BurnsideRing {
    BurnsideRing::new(named::d8()).unwrap()
}

pub fn pin_for(ambient: &FiniteGroup, words: &[Permutation]) -> SylowPin {
    SylowPin {
        members: words
            .iter()
            .map(|p| ambient.index_of_permutation(p).unwrap())
            .collect(),
        labels: Some(D8_LABELS.iter().map(|s| s.to_string()).collect()),
    }
}

pub fn s4_fusion() -> FusionSystem {
    let s4 = named::s4().unwrap();
    let pin = pin_for(&s4, &named::s4_d8_embedding());
    FusionSystem::from_ambient(s4, 2, Some(&pin)).unwrap()
}

pub fn a6_fusion() -> FusionSystem {
    let a6 = named::a6().unwrap();
    let pin = pin_for(&a6, &named::a6_d8_embedding());
    FusionSystem::from_ambient(a6, 2, Some(&pin)).unwrap()
}

pub fn inner_fusion() -> FusionSystem {
    FusionSystem::inner(named::d8(), 2).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn element(ring: &BurnsideRing, coeffs: &[(usize, i64)]) -> IntElement {
    let mut x = ring.zero();
    for &(i, c) in coeffs {
        x.add_term(i, BigInt::from(c));
    }
    x
}
