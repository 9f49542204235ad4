//! Prime ideals of `A(F)` and `A(F)_(p)`.
//!
//! Every prime ideal is the kernel of a mark `Phi_P` reduced modulo a prime
//! `q` (or not reduced, `q = 0`). Ideals are represented by the pair
//! `([P]_F, q)`; membership is one exact evaluation and the generator sets
//! are derived artifacts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::burnside::{Basis, BurnsideElement};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::scalar::{is_prime, Scalar, ScalarKind};
use crate::stable::AlphaBasis;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKind {
    /// `A(F)`
    Integral,
    /// `A(F)_(p)`
    PLocal,
}

impl RingKind {
    fn accepts(self, kind: ScalarKind) -> bool {
        matches!(
            (self, kind),
            (RingKind::Integral, ScalarKind::Integer) | (RingKind::PLocal, ScalarKind::PLocal)
        )
    }
}

/// Canonical name of a prime ideal: the `F`-class of the evaluating subgroup
/// and the residue characteristic `q` (`0` or a prime). All type `p` ideals
/// coincide, so they are always named by `[S]_F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IdealDescriptor {
    ring: RingKind,
    f_class: usize,
    q: u64,
}

impl IdealDescriptor {
    pub fn new(f: &FusionSystem, ring: RingKind, f_class: usize, q: u64) -> Result<Self> {
        if f_class >= f.class_count() {
            return Err(Error::Invalid(format!("no F-class {f_class}")));
        }
        if q != 0 && !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if ring == RingKind::PLocal && q != 0 && q != f.p() {
            return Err(Error::RingMismatch(format!(
                "{q} is a unit in Z_({}); only q = 0 or q = {} give prime ideals",
                f.p(),
                f.p()
            )));
        }
        let f_class = if q == f.p() { f.top_class() } else { f_class };
        Ok(IdealDescriptor { ring, f_class, q })
    }

    pub fn ring(&self) -> RingKind {
        self.ring
    }

    pub fn f_class(&self) -> usize {
        self.f_class
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Characteristic of the quotient ring.
    pub fn residue_characteristic(&self) -> u64 {
        self.q
    }

    /// `I_{P,q}` for the integral ring, `J_{P,q}` for the localized one.
    pub fn display(&self, f: &FusionSystem) -> String {
        let letter = match self.ring {
            RingKind::Integral => "I",
            RingKind::PLocal => "J",
        };
        format!("{letter}_{{{},{}}}", f.label(self.f_class), self.q)
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Integral => write!(f, "Z"),
            RingKind::PLocal => write!(f, "Z_(p)"),
        }
    }
}

/// Generators in alpha coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet<T: Scalar> {
    pub gens: Vec<BurnsideElement<T>>,
}

fn check_alpha<T: Scalar>(b: &AlphaBasis, x: &BurnsideElement<T>) -> Result<()> {
    if x.basis() != Basis::Alpha || x.dim() != b.len() {
        return Err(Error::BasisMismatch("expected alpha coordinates".into()));
    }
    Ok(())
}

/// `Phi_P(x) = 0` (for `q = 0`) or `Phi_P(x) = 0 mod q`, where `P` is the
/// fully normalized representative of `f_class`. No canonicalization.
pub fn mark_kernel_contains<T: Scalar>(
    f: &FusionSystem,
    b: &AlphaBasis,
    f_class: usize,
    q: u64,
    x: &BurnsideElement<T>,
) -> Result<bool> {
    check_alpha(b, x)?;
    let value = b.mark_of(f.fully_normalized(f_class), x);
    Ok(if q == 0 { value.is_zero() } else { value.divisible_by(q) })
}

pub fn membership<T: Scalar>(
    f: &FusionSystem,
    b: &AlphaBasis,
    ideal: &IdealDescriptor,
    x: &BurnsideElement<T>,
) -> Result<bool> {
    if !ideal.ring.accepts(T::KIND) {
        return Err(Error::RingMismatch(format!(
            "{:?} coefficients for an ideal of the {:?} ring",
            T::KIND,
            ideal.ring
        )));
    }
    mark_kernel_contains(f, b, ideal.f_class, ideal.q, x)
}

/// All prime ideals: the type `p` ideal, one type `0` ideal per class, and
/// (integral ring only) one type `q` ideal per class for every listed prime
/// `q != p`. Classes are listed from `[S]_F` downwards.
pub fn enumerate_primes(f: &FusionSystem, ring: RingKind, primes: &[u64]) -> Result<Vec<IdealDescriptor>> {
    let n = f.class_count();
    let mut out = vec![IdealDescriptor::new(f, ring, f.top_class(), f.p())?];
    for c in (0..n).rev() {
        out.push(IdealDescriptor::new(f, ring, c, 0)?);
    }
    if ring == RingKind::Integral {
        let mut qs: Vec<u64> = primes.iter().copied().filter(|&q| q != f.p()).collect();
        qs.sort_unstable();
        qs.dedup();
        for q in qs {
            for c in (0..n).rev() {
                out.push(IdealDescriptor::new(f, ring, c, q)?);
            }
        }
    }
    Ok(out)
}

/// Generators of the ideal, as elements of the ideal's ring.
///
/// * type `p`: every `alpha_c` with `c != [S]_F`, then `p * alpha_S`;
/// * type `0` at `[P]_F`: `alpha_c - Phi_P(alpha_c) * alpha_S` for `c != [S]_F`;
/// * type `q`: the type `0` generators and `q * alpha_S`.
///
/// Type `0` generators are listed with the uncorrected ones first, each group
/// in ascending class order.
pub fn generators<T: Scalar>(f: &FusionSystem, b: &AlphaBasis, ideal: &IdealDescriptor) -> GeneratorSet<T> {
    let n = f.class_count();
    let top = f.top_class();
    let alpha = |c: usize| b.unit_vector::<T>(c);
    let scaled_unit = |k: u64| alpha(top).scale(&T::from_u64(k));
    let mut gens = Vec::new();
    if ideal.q == f.p() {
        gens.extend((0..n).filter(|&c| c != top).map(alpha));
        gens.push(scaled_unit(f.p()));
        return GeneratorSet { gens };
    }
    let col = f.fully_normalized(ideal.f_class);
    let mut plain = Vec::new();
    let mut corrected = Vec::new();
    for c in (0..n).filter(|&c| c != top) {
        let m = b.mark(c, col);
        if m.is_zero() {
            plain.push(alpha(c));
        } else {
            let term = alpha(top).scale(&T::from_integer(m.clone()));
            corrected.push(alpha(c).sub(&term).expect("same space"));
        }
    }
    gens.extend(plain);
    gens.extend(corrected);
    if ideal.q != 0 {
        gens.push(scaled_unit(ideal.q));
    }
    GeneratorSet { gens }
}

/// Closed-form inclusion between prime ideals.
pub fn included(f: &FusionSystem, i: &IdealDescriptor, j: &IdealDescriptor) -> Result<bool> {
    if i.ring != j.ring {
        return Err(Error::RingMismatch("ideals of different rings".into()));
    }
    let p = f.p();
    let same_class = i.f_class == j.f_class;
    Ok((i.q == j.q && same_class)
        || (i.q == 0 && j.q != 0 && j.q != p && same_class)
        || (i.q == 0 && j.q == p))
}

pub fn equal(f: &FusionSystem, i: &IdealDescriptor, j: &IdealDescriptor) -> Result<bool> {
    Ok(included(f, i, j)? && included(f, j, i)?)
}

/// The unique `F`-subconjugation-minimal class whose alpha is not in the ideal.
pub fn minimal_nonmember_alpha(f: &FusionSystem, b: &AlphaBasis, ideal: &IdealDescriptor) -> Result<usize> {
    let n = f.class_count();
    let mut outside = Vec::new();
    for c in 0..n {
        let e = b.unit_vector::<BigInt>(c);
        if !mark_kernel_contains(f, b, ideal.f_class, ideal.q, &e)? {
            outside.push(c);
        }
    }
    let minimal: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&c| !outside.iter().any(|&d| d != c && f.f_subconj(d, c)))
        .collect();
    match minimal.as_slice() {
        [c] => Ok(*c),
        _ => Err(Error::NoSolution {
            class: ideal.f_class,
            reason: format!("expected one minimal non-member, found {minimal:?}"),
        }),
    }
}

/// The `alpha_S`-multiple that a type `0` generator set misses: `x` minus
/// `Phi_P(x) * alpha_S` lies in the type `0` ideal at `P`.
pub fn split_off_unit<T: Scalar>(f: &FusionSystem, b: &AlphaBasis, f_class: usize, x: &BurnsideElement<T>) -> (T, BurnsideElement<T>) {
    let value = b.mark_of(f.fully_normalized(f_class), x);
    let top = f.top_class();
    let rest = x
        .sub(&b.unit_vector::<T>(top).scale(&value))
        .expect("same space");
    (value, rest)
}

/// Whether every coordinate of `x` outside `[S]_F` can be written with the
/// type `0` generators at `f_class`: true exactly when the `alpha_S`
/// coordinate matches `sum_c x_c (-Phi_P(alpha_c))`.
pub fn in_type_zero_span<T: Scalar>(f: &FusionSystem, b: &AlphaBasis, f_class: usize, x: &BurnsideElement<T>) -> bool {
    let top = f.top_class();
    let col = f.fully_normalized(f_class);
    let mut expected = T::zero();
    for (c, coeff) in x.terms() {
        if c != top {
            expected = expected - coeff.clone() * T::from_integer(b.mark(c, col).clone());
        }
    }
    debug_assert!(b.mark(top, col).is_one());
    x.coeff(top) == expected
}
