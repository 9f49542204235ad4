use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {reason}{}", witness_suffix(.witness))]
    NotAGroup {
        reason: String,
        witness: Option<(usize, usize, usize)>,
    },

    #[error("group order exceeds the closure cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("elements {members:?} do not form a subgroup")]
    NotASubgroup { members: Vec<usize> },

    #[error("not a subgroup of the Sylow subgroup: {0:?}")]
    NotASubgroupOfS(Vec<usize>),

    #[error("subgroup of order {order} is not a Sylow {p}-subgroup (expected order {expected})")]
    NotSylow { p: u64, order: usize, expected: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("map is not a homomorphism: phi({a}*{b}) != phi({a})*phi({b})")]
    NotAHomomorphism { a: usize, b: usize },

    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("mark vector is not in the image of the ghost map")]
    NotInImage,

    #[error("element is not stable under the fusion system")]
    NotFStable,

    #[error("coordinates are not integral in the requested ring")]
    NotIntegral,

    #[error("denominator {den} is divisible by {p}")]
    DenominatorDivisibleByP { den: String, p: u64 },

    #[error("no ambient group available to recover morphisms")]
    NoAmbientData,

    #[error("no stable combination found for class {class}: {reason}")]
    NoSolution { class: usize, reason: String },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

fn witness_suffix(w: &Option<(usize, usize, usize)>) -> String {
    match w {
        Some((a, b, c)) => format!(" (witness {a}, {b}, {c})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
