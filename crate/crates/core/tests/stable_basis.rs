mod common;

use common::*;
use fusion_burnside::group::from_cycles;
use fusion_burnside::named;
use fusion_burnside::{
    compute_alpha_basis, is_f_stable, is_f_stable_by_restriction, localize, Basis, BigInt, BurnsideElement, Error,
    FiniteGroup, FusionSystem, IntElement, PLocal, Scalar,
};
use proptest::prelude::*;

fn all_d8_systems() -> Vec<FusionSystem> {
    vec![inner_fusion(), s4_fusion(), a6_fusion()]
}

/// Odometer over `0..=bound[i]` in every coordinate.
fn boxed(bounds: &[i64]) -> impl Iterator<Item = Vec<i64>> + '_ {
    let total: usize = bounds.iter().map(|&b| (b + 1) as usize).product();
    (0..total).map(move |mut k| {
        bounds
            .iter()
            .map(|&b| {
                let r = (k % (b as usize + 1)) as i64;
                k /= b as usize + 1;
                r
            })
            .collect()
    })
}

fn dense(v: &[i64]) -> IntElement {
    BurnsideElement::from_dense(Basis::Transitive, ints(v))
}

#[test]
fn stability_tests_agree_on_transitive_sets() {
    for f in all_d8_systems() {
        let ring = f.ring();
        for q in 0..ring.rank() {
            let x = ring.transitive::<BigInt>(q);
            assert_eq!(is_f_stable(&f, &x), is_f_stable_by_restriction(&f, &x).unwrap(), "class {q}");
        }
    }
}

#[test]
fn transitive_sets_that_are_stable() {
    let f = s4_fusion();
    let stable: Vec<usize> = (0..8).filter(|&q| is_f_stable(&f, &f.ring().transitive::<BigInt>(q))).collect();
    // stable exactly when the marks at <r^2> and <rs> agree, read off the table
    let expected: Vec<usize> = (0..8).filter(|&q| D8_MARKS[q][Z] == D8_MARKS[q][RS]).collect();
    assert_eq!(expected, vec![ONE, S, K_RS, D8]);
    assert_eq!(stable, expected);
}

#[test]
fn marks_matrix_is_triangular_with_weyl_diagonal() {
    for f in all_d8_systems() {
        let b = compute_alpha_basis(&f).unwrap();
        let n = f.class_count();
        for c in 0..n {
            let p0 = f.fully_normalized(c);
            assert_eq!(b.mark(c, p0), &BigInt::from(f.ring().weyl_order(p0)));
            for d in 0..n {
                let below = f.f_subconj(d, c);
                assert_eq!(*b.mark(c, f.fully_normalized(d)) != BigInt::from(0), below);
                if d > c {
                    assert!(!below);
                }
            }
        }
    }
}

#[test]
fn stable_elements_in_a_box_have_natural_alpha_coordinates() {
    for f in all_d8_systems() {
        let b = compute_alpha_basis(&f).unwrap();
        let mut stable = 0;
        for v in boxed(&[3; 8]) {
            let x = dense(&v);
            if !is_f_stable(&f, &x) {
                assert!(matches!(b.to_alpha(&f, &x), Err(Error::NotFStable)));
                continue;
            }
            stable += 1;
            let y = b.to_alpha(&f, &x).unwrap();
            assert!(y.is_effective(), "{v:?} -> {y:?}");
            assert_eq!(b.from_alpha(&y).unwrap(), x);
        }
        if f.class_count() == 8 {
            assert_eq!(stable, 4usize.pow(8));
        } else {
            assert!(stable > 4usize.pow(4));
        }
    }
}

#[test]
fn alphas_are_irreducible() {
    for f in all_d8_systems() {
        let b = compute_alpha_basis(&f).unwrap();
        for alpha in b.alphas() {
            let top = alpha.dense();
            let bounds: Vec<i64> = top.iter().map(|c| i64::try_from(c).unwrap()).collect();
            for v in boxed(&bounds) {
                let x = dense(&v);
                if x.is_zero() || &x == alpha {
                    continue;
                }
                let rest = alpha.sub(&x).unwrap();
                assert!(!(is_f_stable(&f, &x) && is_f_stable(&f, &rest)), "{alpha:?} splits at {v:?}");
            }
        }
    }
}

fn a4_on_v4() -> FusionSystem {
    let gens = vec![from_cycles(4, &[&[0, 1, 2]]), from_cycles(4, &[&[0, 1], &[2, 3]])];
    let a4 = FiniteGroup::from_permutations(4, &gens, 100).unwrap();
    FusionSystem::from_ambient(a4, 2, None).unwrap()
}

#[test]
fn representative_choice_does_not_change_ghosts() {
    let mut systems = all_d8_systems();
    systems.push(a4_on_v4());
    let mut ties = 0;
    for f in systems {
        let base = compute_alpha_basis(&f).unwrap();
        for c in 0..f.class_count() {
            for &j in f.s_classes(c) {
                let Ok(g) = f.clone().with_representative(c, j) else {
                    continue;
                };
                if j != f.fully_normalized(c) {
                    ties += 1;
                }
                let other = compute_alpha_basis(&g).unwrap();
                assert_eq!(other.marks(), base.marks());
            }
        }
    }
    // the three involution classes of V4 are fused by A4 with equal normalizers
    assert!(ties >= 2);
}

#[test]
fn inner_systems_recover_transitive_sets() {
    for s in [
        named::cyclic(2),
        named::cyclic(4),
        named::direct_product(&named::cyclic(2), &named::cyclic(2)),
        named::d8(),
        named::q8(),
    ] {
        let f = FusionSystem::inner(s, 2).unwrap();
        let b = compute_alpha_basis(&f).unwrap();
        assert_eq!(f.class_count(), f.ring().rank());
        for c in 0..f.class_count() {
            assert_eq!(b.alpha(c), &f.ring().transitive::<BigInt>(f.fully_normalized(c)));
        }
    }
}

#[test]
fn alpha_coordinates_of_a_sample() {
    let f = a6_fusion();
    let b = compute_alpha_basis(&f).unwrap();
    let x = f.ring().unghost(&fusion_burnside::MarkVector::new(ints(&[28, 4, 4, 4, 0, 0, 0, 0]))).unwrap();
    let y = b.to_alpha(&f, &x).unwrap();
    let z = f.f_class_of(Z);
    assert_eq!(y.terms().map(|(c, v)| (c, v.clone())).collect::<Vec<_>>(), vec![(0, 1.into()), (z, 1.into())]);
}

#[test]
fn localization() {
    let f = s4_fusion();
    let b = compute_alpha_basis(&f).unwrap();
    let top = f.top_class();
    let x: IntElement = b.unit_vector::<BigInt>(1).scale(&BigInt::from(3));
    let lx = localize(&x, 2);
    assert_eq!(lx.dense().iter().map(|c| c.to_rational()).collect::<Vec<_>>(), x.dense().iter().map(|c| c.to_rational()).collect::<Vec<_>>());
    let third = PLocal::new(1.into(), 3.into(), 2).unwrap();
    let y = b.unit_vector::<PLocal>(top).scale(&third);
    assert_eq!(b.mark_of(0, &y), third);
    assert!(matches!(PLocal::new(1.into(), 2.into(), 2), Err(Error::DenominatorDivisibleByP { .. })));
    let product = b.product(&f, &localize(&b.unit_vector(1), 2), &y).unwrap();
    assert_eq!(product, b.unit_vector::<PLocal>(1).scale(&third));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn alpha_products_two_ways(a in prop::collection::vec(-4i64..=4, 7), c in prop::collection::vec(-4i64..=4, 7)) {
        let f = s4_fusion();
        let b = compute_alpha_basis(&f).unwrap();
        let x = BurnsideElement::from_dense(Basis::Alpha, ints(&a));
        let y = BurnsideElement::from_dense(Basis::Alpha, ints(&c));
        prop_assert_eq!(b.product(&f, &x, &y).unwrap(), b.product_by_marks(&f, &x, &y).unwrap());
    }
}
