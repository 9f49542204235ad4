//! Small groups used throughout the examples and tests.

use crate::error::Result;
use crate::group::{from_cycles, FiniteGroup, Permutation, DEFAULT_ORDER_CAP};

/// Element order of [`d8`]: `r^a s^b` as `(a, b)`.
pub const D8_WORDS: [(usize, usize); 8] = [(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (3, 1), (0, 1), (2, 1)];
pub const D8_LABELS: [&str; 8] = ["1", "r", "r^2", "r^3", "rs", "r^3s", "s", "r^2s"];

/// The dihedral group of order 8, `<r, s | r^4 = s^2 = 1, srs = r^-1>`.
///
/// Elements are ordered so that canonical subgroup ordering lists the
/// classes as `1, Z, <rs>, <s>, C, <r^2,rs>, <r^2,s>, D8`.
pub fn d8() -> FiniteGroup {
    let index = |a: usize, b: usize| {
        D8_WORDS
            .iter()
            .position(|&w| w == (a % 4, b % 2))
            .expect("every word is listed")
    };
    // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b + d)
    let table: Vec<Vec<usize>> = D8_WORDS
        .iter()
        .map(|&(a, b)| {
            D8_WORDS
                .iter()
                .map(|&(c, d)| {
                    let rot = if b == 0 { a + c } else { a + 4 - c };
                    index(rot, b + d)
                })
                .collect()
        })
        .collect();
    let labels = D8_LABELS.iter().map(|s| s.to_string()).collect();
    FiniteGroup::from_cayley(&table, Some(labels))
        .expect("dihedral table is a group")
        .with_name("D8")
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_cayley(&table, None)
        .expect("cyclic table is a group")
        .with_name(format!("C{n}"))
}

/// `G x H` with element `(g, h)` at index `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.order();
    let n = g.order() * m;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
                .collect()
        })
        .collect();
    FiniteGroup::from_cayley(&table, None).expect("product of groups is a group")
}

/// The quaternion group `{±1, ±i, ±j, ±k}`.
pub fn q8() -> FiniteGroup {
    // index = 2 * unit + sign, unit in (1, i, j, k)
    // unit products: (unit, sign flip)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let table: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (u, s) = UNIT[x / 2][y / 2];
                    2 * u + ((x % 2 + y % 2 + s) % 2)
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_cayley(&table, Some(labels))
        .expect("quaternion table is a group")
        .with_name("Q8")
}

pub fn s4_generators() -> Vec<Permutation> {
    vec![from_cycles(4, &[&[0, 1]]), from_cycles(4, &[&[0, 1, 2, 3]])]
}

pub fn s4() -> Result<FiniteGroup> {
    Ok(FiniteGroup::from_permutations(4, &s4_generators(), DEFAULT_ORDER_CAP)?.with_name("S4"))
}

pub fn a6_generators() -> Vec<Permutation> {
    vec![from_cycles(6, &[&[0, 1, 2]]), from_cycles(6, &[&[1, 2, 3, 4, 5]])]
}

pub fn a6() -> Result<FiniteGroup> {
    Ok(FiniteGroup::from_permutations(6, &a6_generators(), DEFAULT_ORDER_CAP)?.with_name("A6"))
}

/// Images of the [`d8`] elements for a dihedral subgroup generated by the
/// permutations `r` and `s`, in [`D8_WORDS`] order.
pub fn d8_words_as_permutations(r: &[usize], s: &[usize]) -> Vec<Permutation> {
    use crate::group::compose;
    let degree = r.len();
    let power = |a: usize| (0..a).fold((0..degree).collect::<Permutation>(), |acc, _| compose(&acc, r));
    D8_WORDS
        .iter()
        .map(|&(a, b)| if b == 0 { power(a) } else { compose(&power(a), s) })
        .collect()
}

/// The Sylow 2-subgroup of `S4` in which `<r^2, rs>` is the Klein group of
/// double transpositions: `r = (0 1 2 3)`, `s = (1 3)`.
pub fn s4_d8_embedding() -> Vec<Permutation> {
    d8_words_as_permutations(&from_cycles(4, &[&[0, 1, 2, 3]]), &from_cycles(4, &[&[1, 3]]))
}

/// A Sylow 2-subgroup of `A6`: `r = (0 1 2 3)(4 5)`, `s = (1 3)(4 5)`.
pub fn a6_d8_embedding() -> Vec<Permutation> {
    d8_words_as_permutations(
        &from_cycles(6, &[&[0, 1, 2, 3], &[4, 5]]),
        &from_cycles(6, &[&[1, 3], &[4, 5]]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(d8().order(), 8);
        assert_eq!(q8().order(), 8);
        assert_eq!(cyclic(4).order(), 4);
        assert_eq!(direct_product(&cyclic(2), &cyclic(2)).order(), 4);
        assert_eq!(s4().unwrap().order(), 24);
        assert_eq!(a6().unwrap().order(), 360);
    }

    #[test]
    fn q8_has_one_involution() {
        let g = q8();
        let involutions = g.elements().filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn embeddings_land_in_ambient() {
        let s4 = s4().unwrap();
        assert!(s4_d8_embedding().iter().all(|p| s4.index_of_permutation(p).is_some()));
        let a6 = a6().unwrap();
        assert!(a6_d8_embedding().iter().all(|p| a6.index_of_permutation(p).is_some()));
    }
}
