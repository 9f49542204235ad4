mod common;

use common::*;
use fusion_burnside::burnside::mark;
use fusion_burnside::named;
use fusion_burnside::{Basis, BigInt, BurnsideElement, BurnsideRing, Error, IntElement, IntMarks, MarkVector};
use proptest::prelude::*;

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 8)
}

fn dense(v: &[i64]) -> IntElement {
    BurnsideElement::from_dense(Basis::Transitive, ints(v))
}

/// Marks counted as fixed cosets, independent of the transporter formula.
fn fixed_cosets(ring: &BurnsideRing, p: usize, q: usize) -> u64 {
    let g = ring.group();
    let p = ring.classes().rep(p);
    let q = ring.classes().rep(q);
    let cosets: std::collections::BTreeSet<Vec<usize>> = g
        .elements()
        .map(|x| {
            let mut c: Vec<usize> = q.members().iter().map(|&y| g.mul(x, y)).collect();
            c.sort_unstable();
            c
        })
        .collect();
    cosets
        .iter()
        .filter(|c| {
            p.members().iter().all(|&a| {
                let mut moved: Vec<usize> = c.iter().map(|&y| g.mul(a, y)).collect();
                moved.sort_unstable();
                &moved == *c
            })
        })
        .count() as u64
}

#[test]
fn marks_agree_with_fixed_point_count() {
    let ring = d8_ring();
    for q in 0..8 {
        for p in 0..8 {
            assert_eq!(ring.table_of_marks().get(q, p), fixed_cosets(&ring, p, q));
            let reps = ring.classes();
            assert_eq!(mark(ring.group(), reps.rep(p), reps.rep(q)), fixed_cosets(&ring, p, q));
        }
    }
}

#[test]
fn determinant_is_product_of_weyl_orders() {
    for g in [named::d8(), named::q8(), named::cyclic(4), named::s4().unwrap()] {
        let ring = BurnsideRing::new(g).unwrap();
        let expected: BigInt = (0..ring.rank()).map(|q| BigInt::from(ring.weyl_order(q))).product();
        assert_eq!(ring.table_of_marks().determinant(), expected);
        assert!(ring.table_of_marks().is_lower_triangular());
    }
}

#[test]
fn worked_products() {
    let ring = d8_ring();
    let sq = |q: usize| ring.product(&ring.transitive(q), &ring.transitive(q)).unwrap();
    assert_eq!(sq(C), element(&ring, &[(C, 2)]));
    assert_eq!(sq(S), element(&ring, &[(ONE, 1), (S, 2)]));
    assert_eq!(ring.transitive_product(S, RS), vec![(ONE, 2)]);
}

#[test]
fn double_coset_products_match_ghost_products() {
    let ring = d8_ring();
    for p in 0..8 {
        for q in 0..8 {
            let (x, y) = (ring.transitive::<BigInt>(p), ring.transitive::<BigInt>(q));
            let via_cosets = ring.product(&x, &y).unwrap();
            let via_ghost = ring.unghost(&ring.ghost(&x).pointwise_mul(&ring.ghost(&y))).unwrap();
            assert_eq!(via_cosets, via_ghost);
            for (r, _) in ring.transitive_product(p, q) {
                assert!(ring.classes().subconj(r, p) && ring.classes().subconj(r, q));
            }
        }
    }
}

#[test]
fn unghost_examples() {
    let ring = d8_ring();
    let v: IntMarks = MarkVector::new(ints(&[20, 4, 4, 4, 0, 0, 0, 0]));
    assert_eq!(ring.unghost(&v).unwrap(), element(&ring, &[(Z, 1), (RS, 2), (S, 2)]));
    let bad: IntMarks = MarkVector::new(ints(&[1, 0, 0, 0, 0, 0, 0, 0]));
    assert!(matches!(ring.unghost(&bad), Err(Error::NotInImage)));
    let rational = ring.unghost_rational(&bad).unwrap();
    assert_eq!(rational.coeff(ONE).to_string(), "1/8");
}

#[test]
fn restriction_examples() {
    let ring = d8_ring();
    let g = ring.group();
    let c = ring.classes().rep(C).clone();
    let (c_group, inclusion) = g.subgroup_as_group(&c, None).unwrap();
    let c_ring = BurnsideRing::new(c_group).unwrap();
    let restricted = ring.restrict(&c_ring, &inclusion, &ring.transitive::<BigInt>(S)).unwrap();
    // four cosets of <s>, permuted freely by the four rotations
    assert_eq!(fixed_cosets(&ring, ONE, S), 4);
    assert_eq!(restricted, element(&c_ring, &[(0, 1)]));
    assert_eq!(c_ring.mark_of(0, &restricted), BigInt::from(4));
    let top = ring.restrict(&c_ring, &inclusion, &ring.unit::<BigInt>()).unwrap();
    assert_eq!(top, c_ring.unit());
    let identity: Vec<usize> = g.elements().collect();
    let x = element(&ring, &[(S, 3), (K_RS, -1)]);
    assert_eq!(ring.restrict(&ring, &identity, &x).unwrap(), x);
    let not_hom = vec![0, 1, 1, 1];
    assert!(matches!(
        ring.restrict(&c_ring, &not_hom, &x),
        Err(Error::NotAHomomorphism { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn marks_are_ring_homomorphisms(a in coeffs(), b in coeffs()) {
        let ring = d8_ring();
        let (x, y) = (dense(&a), dense(&b));
        let xy = ring.product(&x, &y).unwrap();
        for p in 0..8 {
            prop_assert_eq!(ring.mark_of(p, &xy), ring.mark_of(p, &x) * ring.mark_of(p, &y));
        }
    }

    #[test]
    fn product_is_commutative_associative_unital(a in coeffs(), b in coeffs(), c in coeffs()) {
        let ring = d8_ring();
        let (x, y, z) = (dense(&a), dense(&b), dense(&c));
        let xy = ring.product(&x, &y).unwrap();
        prop_assert_eq!(&xy, &ring.product(&y, &x).unwrap());
        prop_assert_eq!(
            ring.product(&xy, &z).unwrap(),
            ring.product(&x, &ring.product(&y, &z).unwrap()).unwrap()
        );
        prop_assert_eq!(ring.product(&x, &ring.unit()).unwrap(), x);
    }

    #[test]
    fn unghost_inverts_ghost(a in coeffs()) {
        let ring = d8_ring();
        let x = dense(&a);
        prop_assert_eq!(ring.unghost(&ring.ghost(&x)).unwrap(), x);
    }

    #[test]
    fn restriction_is_a_ring_map(a in coeffs(), b in coeffs(), class in 0usize..8) {
        let ring = d8_ring();
        let g = ring.group();
        let sub = ring.classes().rep(class).clone();
        let (h, inclusion) = g.subgroup_as_group(&sub, None).unwrap();
        let h_ring = BurnsideRing::new(h).unwrap();
        let (x, y) = (dense(&a), dense(&b));
        let res = |z: &IntElement| ring.restrict(&h_ring, &inclusion, z).unwrap();
        prop_assert_eq!(
            res(&ring.product(&x, &y).unwrap()),
            h_ring.product(&res(&x), &res(&y)).unwrap()
        );
        prop_assert_eq!(res(&ring.unit()), h_ring.unit());
    }
}
