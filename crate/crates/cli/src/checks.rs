//! The invariant suite behind `check`.
//!
//! Each check returns `Err(detail)` on the first counterexample. Random
//! trials use a fixed seed so reports are reproducible.

use fusion_burnside::ideals::{
    enumerate_primes, equal, generators, in_type_zero_span, included, mark_kernel_contains, membership,
};
use fusion_burnside::named;
use fusion_burnside::{
    compute_alpha_basis, is_f_stable, is_f_stable_by_restriction, localize, AlphaBasis, Basis, BigInt,
    BurnsideElement, BurnsideRing, FusionSystem, IdealDescriptor, IntElement, RingKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bundled;
use crate::job::JobError;
use crate::report::{CheckLine, CheckReport};

const SEED: u64 = 0x005e_edd8;

type Check = fn(&Suite) -> Result<(), String>;

pub struct Suite {
    pub ring: BurnsideRing,
    pub systems: Vec<(&'static str, FusionSystem, AlphaBasis)>,
}

impl Suite {
    pub fn load() -> fusion_burnside::Result<Self> {
        let ring = BurnsideRing::new(bundled::group("d8.json")?)?;
        let systems = bundled::d8_systems()?
            .into_iter()
            .map(|(name, f)| {
                let b = compute_alpha_basis(&f)?;
                Ok((name, f, b))
            })
            .collect::<fusion_burnside::Result<_>>()?;
        Ok(Suite { ring, systems })
    }
}

/// Checks run by default, in report order.
pub const CORE: [(&str, Check); 8] = [
    ("ring homomorphism law", ring_homomorphism),
    ("double coset products", double_coset_products),
    ("stability by restriction", stability_by_restriction),
    ("alpha basis properties", alpha_properties),
    ("prime ideal completeness", prime_completeness),
    ("inclusion lattice", inclusion_lattice),
    ("dress cross-check", dress_cross_check),
    ("localization", localization),
];

/// Slower searches added by `--all`.
pub const EXTENDED: [(&str, Check); 3] = [
    ("generator soundness and completeness", generator_completeness),
    ("alpha irreducibility", alpha_irreducibility),
    ("representative independence", representative_independence),
];

pub fn run_suite(name: &str, all: bool) -> Result<CheckReport, JobError> {
    if name != "d8-suite" {
        return Err(JobError::Validation(format!("unknown suite {name}; available: d8-suite")));
    }
    let suite = Suite::load()?;
    let mut checks: Vec<(&str, Check)> = CORE.to_vec();
    if all {
        checks.extend(EXTENDED);
    }
    let lines = checks
        .into_iter()
        .map(|(name, check)| {
            let result = check(&suite);
            CheckLine {
                name: name.to_string(),
                passed: result.is_ok(),
                detail: result.err().unwrap_or_default(),
            }
        })
        .collect();
    Ok(CheckReport {
        suite: name.to_string(),
        checks: lines,
    })
}

/// Runs one named check.
pub fn run_check(suite: &Suite, name: &str) -> Option<Result<(), String>> {
    CORE.iter()
        .chain(EXTENDED.iter())
        .find(|(n, _)| *n == name)
        .map(|(_, check)| check(suite))
}

fn random_element(rng: &mut ChaCha8Rng, basis: Basis, dim: usize, bound: i64) -> IntElement {
    let coeffs = (0..dim).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    BurnsideElement::from_dense(basis, coeffs)
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn ring_homomorphism(s: &Suite) -> Result<(), String> {
    let ring = &s.ring;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..100 {
        let x = random_element(&mut rng, Basis::Transitive, ring.rank(), 5);
        let y = random_element(&mut rng, Basis::Transitive, ring.rank(), 5);
        let xy = ring.product(&x, &y).map_err(|e| e.to_string())?;
        for p in 0..ring.rank() {
            ensure(ring.mark_of(p, &xy) == ring.mark_of(p, &x) * ring.mark_of(p, &y), || {
                format!("Phi_{} fails on {x:?} * {y:?}", ring.label(p))
            })?;
        }
    }
    Ok(())
}

fn double_coset_products(s: &Suite) -> Result<(), String> {
    let ring = &s.ring;
    let mut pairs = 0;
    for p in 0..ring.rank() {
        for q in p..ring.rank() {
            let (x, y) = (ring.transitive::<BigInt>(p), ring.transitive::<BigInt>(q));
            let direct = ring.product(&x, &y).map_err(|e| e.to_string())?;
            let ghost = ring.ghost(&x).pointwise_mul(&ring.ghost(&y));
            let via_marks = ring.unghost(&ghost).map_err(|e| e.to_string())?;
            ensure(direct == via_marks, || {
                format!("[S/{}] x [S/{}]", ring.label(p), ring.label(q))
            })?;
            pairs += 1;
        }
    }
    ensure(pairs == 36, || format!("{pairs} pairs"))
}

fn stability_by_restriction(s: &Suite) -> Result<(), String> {
    for (name, f, _) in &s.systems {
        let ring = f.ring();
        for q in 0..ring.rank() {
            let x = ring.transitive::<BigInt>(q);
            let by_marks = is_f_stable(f, &x);
            let by_restriction = is_f_stable_by_restriction(f, &x).map_err(|e| e.to_string())?;
            ensure(by_marks == by_restriction, || {
                format!("{name}: [S/{}] marks say {by_marks}", ring.label(q))
            })?;
        }
    }
    Ok(())
}

fn alpha_properties(s: &Suite) -> Result<(), String> {
    for (name, f, b) in &s.systems {
        b.check_properties(f)
            .map_err(|(c, reason)| format!("{name}: alpha_{}: {reason}", f.label(c)))?;
    }
    Ok(())
}

fn descriptor(f: &FusionSystem, ring: RingKind, c: usize, q: u64) -> Result<IdealDescriptor, String> {
    IdealDescriptor::new(f, ring, c, q).map_err(|e| e.to_string())
}

fn member(f: &FusionSystem, b: &AlphaBasis, i: &IdealDescriptor, x: &IntElement) -> Result<bool, String> {
    membership(f, b, i, x).map_err(|e| e.to_string())
}

/// A random element of `I_{c,q}`: a random `x` with its `Phi_P` value moved
/// onto `alpha_S`, plus a random multiple of `q alpha_S`.
fn random_member(rng: &mut ChaCha8Rng, f: &FusionSystem, b: &AlphaBasis, c: usize, q: u64) -> IntElement {
    let x = random_element(rng, Basis::Alpha, f.class_count(), 5);
    let value = b.mark_of(f.fully_normalized(c), &x);
    let k = BigInt::from(rng.gen_range(-3..=3) * q as i64);
    x.sub(&b.unit_vector::<BigInt>(f.top_class()).scale(&(value - k)))
        .expect("same space")
}

fn prime_completeness(s: &Suite) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for (name, f, b) in &s.systems {
        let n = f.class_count();
        for q in [0u64, 2, 3, 5] {
            for c in 0..n {
                let ideal = descriptor(f, RingKind::Integral, c, q)?;
                for _ in 0..200 {
                    let m = random_member(&mut rng, f, b, ideal.f_class(), q);
                    ensure(member(f, b, &ideal, &m)?, || format!("{name}: sampled non-member"))?;
                    let y = random_element(&mut rng, Basis::Alpha, n, 5);
                    let my = b.product(f, &m, &y).map_err(|e| e.to_string())?;
                    ensure(member(f, b, &ideal, &my)?, || {
                        format!("{name}: {} not closed under products", ideal.display(f))
                    })?;
                    let x = random_element(&mut rng, Basis::Alpha, n, 5);
                    let xy = b.product(f, &x, &y).map_err(|e| e.to_string())?;
                    let prime = member(f, b, &ideal, &xy)? == (member(f, b, &ideal, &x)? || member(f, b, &ideal, &y)?);
                    ensure(prime, || format!("{name}: {} is not prime", ideal.display(f)))?;
                }
            }
            // kernels of Phi_P mod q, before canonicalization
            for c in 0..n {
                for d in c + 1..n {
                    let mut differ = false;
                    for e in 0..n {
                        let x = b.unit_vector::<BigInt>(e).sub(
                            &b.unit_vector::<BigInt>(f.top_class())
                                .scale(b.mark(e, f.fully_normalized(c))),
                        )
                        .expect("same space");
                        let at = |k: usize| mark_kernel_contains(f, b, k, q, &x).map_err(|e| e.to_string());
                        differ |= at(c)? != at(d)?;
                    }
                    if q == 2 {
                        ensure(!differ, || format!("{name}: type 2 kernels at classes {c}, {d} differ"))?;
                    } else {
                        ensure(differ, || format!("{name}: q = {q} kernels at classes {c}, {d} coincide"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn inclusion_lattice(s: &Suite) -> Result<(), String> {
    for (name, f, b) in &s.systems {
        let all = enumerate_primes(f, RingKind::Integral, &[3]).map_err(|e| e.to_string())?;
        for i in &all {
            let gens = generators::<BigInt>(f, b, i).gens;
            for j in &all {
                let mut contained = true;
                for g in &gens {
                    contained &= member(f, b, j, g)?;
                }
                let closed = included(f, i, j).map_err(|e| e.to_string())?;
                ensure(contained == closed, || {
                    format!("{name}: {} in {}: generators say {contained}", i.display(f), j.display(f))
                })?;
            }
        }
    }
    Ok(())
}

fn dress_cross_check(_: &Suite) -> Result<(), String> {
    let groups = [
        named::cyclic(2),
        named::cyclic(4),
        named::direct_product(&named::cyclic(2), &named::cyclic(2)),
        named::d8(),
        named::q8(),
    ];
    for s in groups {
        let name = s.name().unwrap_or("C2xC2").to_string();
        let f = FusionSystem::inner(s, 2).map_err(|e| e.to_string())?;
        let b = compute_alpha_basis(&f).map_err(|e| e.to_string())?;
        let n = f.class_count();
        ensure(n == f.ring().rank(), || format!("{name}: classes were fused"))?;
        for c in 0..n {
            ensure(b.alpha(c) == &f.ring().transitive::<BigInt>(f.fully_normalized(c)), || {
                format!("{name}: alpha_{} is not transitive", f.label(c))
            })?;
        }
        let primes = [2, 3, 5];
        let all = enumerate_primes(&f, RingKind::Integral, &primes).map_err(|e| e.to_string())?;
        ensure(all.len() == 1 + n * primes.len(), || format!("{name}: {} descriptors", all.len()))?;
        for (k, i) in all.iter().enumerate() {
            for j in &all[k + 1..] {
                ensure(!equal(&f, i, j).map_err(|e| e.to_string())?, || {
                    format!("{name}: {} = {}", i.display(&f), j.display(&f))
                })?;
                // distinct kernels: some generator of one lies outside the other
                let separated = generators::<BigInt>(&f, &b, i)
                    .gens
                    .iter()
                    .chain(generators::<BigInt>(&f, &b, j).gens.iter())
                    .any(|g| {
                        membership(&f, &b, i, g).unwrap_or(false) != membership(&f, &b, j, g).unwrap_or(false)
                    });
                ensure(separated, || {
                    format!("{name}: {} and {} have equal kernels", i.display(&f), j.display(&f))
                })?;
            }
        }
    }
    Ok(())
}

fn localization(s: &Suite) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    for (name, f, b) in &s.systems {
        for _ in 0..100 {
            let y = random_element(&mut rng, Basis::Alpha, f.class_count(), 6);
            let x = b.from_alpha(&y).map_err(|e| e.to_string())?;
            ensure(is_f_stable(f, &x), || format!("{name}: sample not stable"))?;
            let back = b.to_alpha(f, &x).map_err(|e| e.to_string())?;
            for c in 0..f.class_count() {
                for q in [0, f.p()] {
                    let i = descriptor(f, RingKind::Integral, c, q)?;
                    let j = descriptor(f, RingKind::PLocal, c, q)?;
                    let local = membership(f, b, &j, &localize(&back, f.p())).map_err(|e| e.to_string())?;
                    ensure(member(f, b, &i, &back)? == local, || {
                        format!("{name}: {} disagrees after localizing", i.display(f))
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn box_points(n: usize, radius: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * radius + 1) as usize;
    (0..side.pow(n as u32)).map(move |mut k| {
        (0..n)
            .map(|_| {
                let v = (k % side) as i64 - radius;
                k /= side;
                v
            })
            .collect()
    })
}

fn generator_completeness(s: &Suite) -> Result<(), String> {
    for (name, f, b) in &s.systems {
        let n = f.class_count();
        for ideal in enumerate_primes(f, RingKind::Integral, &[3]).map_err(|e| e.to_string())? {
            for g in generators::<BigInt>(f, b, &ideal).gens {
                ensure(member(f, b, &ideal, &g)?, || {
                    format!("{name}: generator {g:?} not in {}", ideal.display(f))
                })?;
            }
            let p0 = f.fully_normalized(ideal.f_class());
            let radius = if n > 7 { 1 } else { 2 };
            for v in box_points(n, radius) {
                let x = BurnsideElement::from_dense(Basis::Alpha, v.iter().map(|&a| BigInt::from(a)).collect());
                let value = b.mark_of(p0, &x);
                // x = (x - value alpha_S) + value alpha_S, the first part in the type 0 span
                let rest = x
                    .sub(&b.unit_vector::<BigInt>(f.top_class()).scale(&value))
                    .expect("same space");
                let spanned = in_type_zero_span(f, b, ideal.f_class(), &rest)
                    && match ideal.q() {
                        0 => value == BigInt::from(0),
                        q => value % BigInt::from(q) == BigInt::from(0),
                    };
                ensure(spanned == member(f, b, &ideal, &x)?, || {
                    format!("{name}: {} at {v:?}", ideal.display(f))
                })?;
            }
        }
    }
    Ok(())
}

/// Odometer over `0..=bound[i]`.
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

fn alpha_irreducibility(s: &Suite) -> Result<(), String> {
    for (name, f, b) in &s.systems {
        for (c, alpha) in b.alphas().iter().enumerate() {
            let bounds: Vec<i64> = alpha
                .dense()
                .iter()
                .map(|v| i64::try_from(v).unwrap_or(i64::MAX))
                .collect();
            for v in boxed(&bounds) {
                let x = BurnsideElement::from_dense(Basis::Transitive, v.iter().map(|&a| BigInt::from(a)).collect());
                if x.is_zero() || &x == alpha {
                    continue;
                }
                let rest = alpha.sub(&x).expect("same space");
                ensure(!(is_f_stable(f, &x) && is_f_stable(f, &rest)), || {
                    format!("{name}: alpha_{} splits off {v:?}", f.label(c))
                })?;
            }
        }
        // every effective stable element with coefficients up to 3 is a
        // natural combination of alphas
        for v in boxed(&[3; 8]) {
            let x = BurnsideElement::from_dense(Basis::Transitive, v.iter().map(|&a| BigInt::from(a)).collect());
            if !is_f_stable(f, &x) {
                continue;
            }
            let y = b.to_alpha(f, &x).map_err(|e| e.to_string())?;
            ensure(y.is_effective(), || format!("{name}: {v:?} has coordinates {y:?}"))?;
        }
    }
    Ok(())
}

fn representative_independence(s: &Suite) -> Result<(), String> {
    for (name, f, b) in &s.systems {
        for c in 0..f.class_count() {
            for &j in f.s_classes(c) {
                let Ok(g) = f.clone().with_representative(c, j) else {
                    continue;
                };
                let other = compute_alpha_basis(&g).map_err(|e| e.to_string())?;
                ensure(other.marks() == b.marks(), || {
                    format!("{name}: representative {} changes the basis", f.ring().label(j))
                })?;
            }
        }
    }
    Ok(())
}
