//! Burnside rings of finite groups and of saturated fusion systems.
//!
//! The pipeline runs bottom-up: a [`FiniteGroup`] and its subgroup classes,
//! the ring [`BurnsideRing`] with its table of marks, a [`FusionSystem`]
//! induced on a Sylow subgroup by an ambient group, the irreducible stable
//! basis [`AlphaBasis`] of `A(F)`, and finally the prime ideals of `A(F)` and
//! of its `p`-localization.
//!
//! Coefficients are exact and generic over [`Scalar`]; the aliases below fix
//! the three rings that actually occur.

pub mod bits;
pub mod burnside;
pub mod error;
pub mod fusion;
pub mod group;
pub mod ideals;
pub mod io;
pub mod lattice;
pub mod named;
pub mod scalar;
pub mod stable;

pub use burnside::{Basis, BurnsideElement, BurnsideRing, MarkVector, TableOfMarks};
pub use error::{Error, Result};
pub use fusion::{FusionSystem, SylowPin};
pub use group::{FiniteGroup, Subgroup};
pub use ideals::{GeneratorSet, IdealDescriptor, RingKind};
pub use lattice::{enumerate_subgroups, SubgroupClassTable};
pub use scalar::{PLocal, Scalar, ScalarKind};
pub use stable::{compute_alpha_basis, is_f_stable, is_f_stable_by_restriction, localize, AlphaBasis};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Elements of `A(G)` or `A(F)` with integer coefficients.
pub type IntElement = BurnsideElement<BigInt>;
/// Elements of the `p`-localized rings.
pub type LocalElement = BurnsideElement<PLocal>;
/// Rational combinations, e.g. ghost preimages outside the image.
pub type RatElement = BurnsideElement<BigRational>;
pub type IntMarks = MarkVector<BigInt>;
pub type LocalMarks = MarkVector<PLocal>;
