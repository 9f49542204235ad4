//! Stable elements of `A(S)` under a fusion system, the irreducible stable
//! basis of `A(F)`, and the `p`-localized scalars.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::burnside::{Basis, BurnsideElement, BurnsideRing, MarkVector};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::scalar::{PLocal, Scalar};

/// `true` when the marks of `x` are constant on every `F`-isomorphism class.
pub fn is_f_stable<T: Scalar>(f: &FusionSystem, x: &BurnsideElement<T>) -> bool {
    let ghost = f.ring().ghost(x);
    (0..f.class_count()).all(|c| {
        let members = f.s_classes(c);
        members.iter().all(|&j| ghost.values[j] == ghost.values[members[0]])
    })
}

/// Stability checked against the definition: for every `P <= S` and every
/// morphism `P -> S` of the system, restricting along the morphism agrees
/// with restricting along the inclusion.
pub fn is_f_stable_by_restriction<T: Scalar>(f: &FusionSystem, x: &BurnsideElement<T>) -> Result<bool> {
    let ring = f.ring();
    let s = f.sylow();
    if f.embedding().len() != s.order() {
        return Err(Error::NoAmbientData);
    }
    for p in ring.classes().subgroups() {
        let (p_group, inclusion) = s.subgroup_as_group(p, None)?;
        let p_ring = BurnsideRing::new(p_group)?;
        let along_inclusion = ring.restrict(&p_ring, &inclusion, x)?;
        for image in f.morphisms_from(p) {
            if image == inclusion {
                continue;
            }
            if ring.restrict(&p_ring, &image, x)? != along_inclusion {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The basis `{alpha_c}` of `A(F)`, one element per `F`-class, each an
/// effective combination of transitive `S`-sets.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaBasis {
    alphas: Vec<BurnsideElement<BigInt>>,
    /// `marks[c][j]`: mark of the `S`-class `j` on `alpha_c`.
    marks: Vec<Vec<BigInt>>,
}

/// Builds each `alpha_c` by starting from the row of its fully normalized
/// class in the table of marks and adding the exact multiples of lower rows
/// needed to equalize the marks on each `F`-class, highest violation first.
/// The result is checked against the basis properties before returning.
pub fn compute_alpha_basis(f: &FusionSystem) -> Result<AlphaBasis> {
    let ring = f.ring();
    let k = ring.rank();
    let n = f.class_count();
    let mut alphas = vec![BurnsideElement::zero(Basis::Transitive, k); n];
    for c in (0..n).rev() {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs[f.fully_normalized(c)] = BigInt::one();
        let mut steps = 0;
        loop {
            let x = BurnsideElement::from_dense(Basis::Transitive, coeffs.clone());
            let ghost = ring.ghost(&x);
            let violation = (0..k).rev().find(|&j| {
                let members = f.s_classes(f.f_class_of(j));
                members.iter().any(|&i| ghost.values[i] != ghost.values[j])
            });
            let Some(j) = violation else {
                alphas[c] = x;
                break;
            };
            steps += 1;
            if steps > k + 1 {
                return Err(Error::NoSolution {
                    class: c,
                    reason: "leveling did not converge".into(),
                });
            }
            let members = f.s_classes(f.f_class_of(j));
            let target = leveling_target(ring, members, &ghost).ok_or_else(|| Error::NoSolution {
                class: c,
                reason: format!("no common level for S-classes {members:?}"),
            })?;
            for &i in members {
                let deficit = &target - &ghost.values[i];
                if deficit.is_positive() {
                    coeffs[i] += deficit / BigInt::from(ring.weyl_order(i));
                }
            }
        }
    }
    let marks = alphas.iter().map(|a| ring.ghost(a).values).collect();
    let basis = AlphaBasis { alphas, marks };
    basis.check_properties(f).map_err(|(class, reason)| Error::NoSolution { class, reason })?;
    Ok(basis)
}

/// Smallest value at least the current maximum that every member can reach
/// by adding whole copies of its own row.
fn leveling_target(ring: &BurnsideRing, members: &[usize], ghost: &MarkVector<BigInt>) -> Option<BigInt> {
    let max = members.iter().map(|&i| ghost.values[i].clone()).max()?;
    let period = members
        .iter()
        .fold(BigInt::one(), |acc, &i| acc.lcm(&BigInt::from(ring.weyl_order(i))));
    let mut target = max;
    let mut tries = BigInt::zero();
    while tries <= period {
        let reachable = members
            .iter()
            .all(|&i| (&target - &ghost.values[i]).is_multiple_of(&BigInt::from(ring.weyl_order(i))));
        if reachable {
            return Some(target);
        }
        target += 1;
        tries += 1;
    }
    None
}

impl AlphaBasis {
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn alpha(&self, class: usize) -> &BurnsideElement<BigInt> {
        &self.alphas[class]
    }

    pub fn alphas(&self) -> &[BurnsideElement<BigInt>] {
        &self.alphas
    }

    /// Ghost vectors of the alphas, one row per `F`-class.
    pub fn marks(&self) -> &[Vec<BigInt>] {
        &self.marks
    }

    /// Mark of the `S`-class `s_class` on `alpha_class`.
    pub fn mark(&self, class: usize, s_class: usize) -> &BigInt {
        &self.marks[class][s_class]
    }

    /// Mark of the `S`-class `s_class` on an element in alpha coordinates.
    pub fn mark_of<T: Scalar>(&self, s_class: usize, y: &BurnsideElement<T>) -> T {
        let mut total = T::zero();
        for (c, coeff) in y.terms() {
            let m = &self.marks[c][s_class];
            if !m.is_zero() {
                total = total + coeff.clone() * T::from_integer(m.clone());
            }
        }
        total
    }

    /// Verifies stability, effectiveness and the four structural properties
    /// of the basis. On failure returns the offending class and a reason.
    pub fn check_properties(&self, f: &FusionSystem) -> std::result::Result<(), (usize, String)> {
        let ring = f.ring();
        let n = f.class_count();
        if self.alphas.len() != n {
            return Err((0, "wrong number of basis elements".into()));
        }
        let top = f.top_class();
        if self.alphas[top] != ring.unit() {
            return Err((top, "alpha of [S] is not [S/S]".into()));
        }
        for c in 0..n {
            let alpha = &self.alphas[c];
            let p0 = f.fully_normalized(c);
            if !alpha.is_effective() {
                return Err((c, "not effective".into()));
            }
            if !is_f_stable(f, alpha) {
                return Err((c, "not stable".into()));
            }
            // (i) support below the class
            if let Some(j) = alpha.support().find(|&j| !f.f_subconj(f.f_class_of(j), c)) {
                return Err((c, format!("support contains S-class {j} outside the class")));
            }
            // (ii) exactly one copy of [S/P0], and none in the other alphas
            if alpha.coeff(p0) != BigInt::one() {
                return Err((c, "coefficient of the fully normalized class is not 1".into()));
            }
            for (d, other) in self.alphas.iter().enumerate() {
                if d != c && !other.coeff(p0).is_zero() {
                    return Err((c, format!("alpha {d} contains [S/P0] of class {c}")));
                }
            }
            // (iii) mark at P0 is |N_S(P0)|/|P0|
            if self.marks[c][p0] != BigInt::from(ring.weyl_order(p0)) {
                return Err((c, "mark at the fully normalized class is wrong".into()));
            }
            // (iv) nonzero marks exactly below the class
            for j in 0..ring.rank() {
                let below = f.f_subconj(f.f_class_of(j), c);
                if below == self.marks[c][j].is_zero() {
                    return Err((c, format!("mark at S-class {j} has the wrong support")));
                }
            }
        }
        Ok(())
    }

    /// Coordinates of a stable element of `A(S)` in the alpha basis.
    pub fn to_alpha<T: Scalar>(&self, f: &FusionSystem, x: &BurnsideElement<T>) -> Result<BurnsideElement<T>> {
        if x.basis() != Basis::Transitive || x.dim() != f.ring().rank() {
            return Err(Error::BasisMismatch("expected an element of A(S)".into()));
        }
        if !is_f_stable(f, x) {
            return Err(Error::NotFStable);
        }
        let ghost = f.ring().ghost(x);
        let y = self.solve_from_marks(f, |col| ghost.values[col].to_rational());
        let coords: Option<Vec<T>> = y.iter().map(|r| T::from_rational(r, f.p())).collect();
        let coords = coords.ok_or(Error::NotIntegral)?;
        let out = BurnsideElement::from_dense(Basis::Alpha, coords);
        if self.from_alpha(&out)? != *x {
            return Err(Error::NotFStable);
        }
        Ok(out)
    }

    /// `sum y_c alpha_c` as an element of `A(S)`.
    pub fn from_alpha<T: Scalar>(&self, y: &BurnsideElement<T>) -> Result<BurnsideElement<T>> {
        if y.basis() != Basis::Alpha || y.dim() != self.len() {
            return Err(Error::BasisMismatch("expected alpha coordinates".into()));
        }
        let dim = self.alphas.first().map_or(0, |a| a.dim());
        let mut out = BurnsideElement::zero(Basis::Transitive, dim);
        for (c, coeff) in y.terms() {
            for (j, a) in self.alphas[c].terms() {
                out.add_term(j, coeff.clone() * T::from_integer(a.clone()));
            }
        }
        Ok(out)
    }

    /// `alpha_c` in its own coordinates.
    pub fn unit_vector<T: Scalar>(&self, class: usize) -> BurnsideElement<T> {
        BurnsideElement::basis_vector(Basis::Alpha, self.len(), class)
    }

    /// Product in `A(F)`: multiply in `A(S)` and convert back.
    pub fn product<T: Scalar>(
        &self,
        f: &FusionSystem,
        x: &BurnsideElement<T>,
        y: &BurnsideElement<T>,
    ) -> Result<BurnsideElement<T>> {
        let xs = self.from_alpha(x)?;
        let ys = self.from_alpha(y)?;
        self.to_alpha(f, &f.ring().product(&xs, &ys)?)
    }

    /// Product computed on marks: pointwise product at the fully normalized
    /// classes, then back substitution.
    pub fn product_by_marks<T: Scalar>(
        &self,
        f: &FusionSystem,
        x: &BurnsideElement<T>,
        y: &BurnsideElement<T>,
    ) -> Result<BurnsideElement<T>> {
        let coords = self.solve_from_marks(f, |col| (self.mark_of(col, x) * self.mark_of(col, y)).to_rational());
        let coords: Option<Vec<T>> = coords.iter().map(|r| T::from_rational(r, f.p())).collect();
        Ok(BurnsideElement::from_dense(Basis::Alpha, coords.ok_or(Error::NotIntegral)?))
    }

    /// Back substitution on the alpha marks restricted to the fully
    /// normalized columns, which is triangular along `Cl(F)`.
    fn solve_from_marks(&self, f: &FusionSystem, mark_at: impl Fn(usize) -> BigRational) -> Vec<BigRational> {
        let n = self.len();
        let mut y = vec![BigRational::zero(); n];
        for d in (0..n).rev() {
            let col = f.fully_normalized(d);
            let mut rest = mark_at(col);
            for (c, yc) in y.iter().enumerate().skip(d + 1) {
                let m = &self.marks[c][col];
                if !m.is_zero() {
                    rest -= yc * BigRational::from_integer(m.clone());
                }
            }
            y[d] = rest / BigRational::from_integer(self.marks[d][col].clone());
        }
        y
    }
}

/// `1 (x) x` in `A(F)_(p)`.
pub fn localize(x: &BurnsideElement<BigInt>, p: u64) -> BurnsideElement<PLocal> {
    x.map_scalars(|c| PLocal::from_ratio(BigRational::from_integer(c.clone()), p).expect("integers are p-local"))
}
