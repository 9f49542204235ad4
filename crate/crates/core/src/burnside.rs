//! The Burnside ring `A(G)`: transitive basis, marks, ghost map, products and
//! restriction along homomorphisms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::lattice::{enumerate_subgroups, SubgroupClassTable};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `[G/Q]`, one per conjugacy class of subgroups.
    Transitive,
    /// The irreducible stable basis of a fusion system, one per `Cl(F)` class.
    Alpha,
}

/// A virtual `G`-set (or stable element) as a sparse coefficient vector.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct BurnsideElement<T> {
    basis: Basis,
    dim: usize,
    coeffs: BTreeMap<usize, T>,
}

impl<T: Scalar> BurnsideElement<T> {
    pub fn zero(basis: Basis, dim: usize) -> Self {
        BurnsideElement {
            basis,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector at `index`.
    pub fn basis_vector(basis: Basis, dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range {dim}");
        let mut e = Self::zero(basis, dim);
        e.coeffs.insert(index, T::one());
        e
    }

    pub fn from_coeffs(basis: Basis, dim: usize, coeffs: impl IntoIterator<Item = (usize, T)>) -> Result<Self> {
        let mut e = Self::zero(basis, dim);
        for (i, c) in coeffs {
            if i >= dim {
                return Err(Error::BasisMismatch(format!("index {i} out of range {dim}")));
            }
            e.add_term(i, c);
        }
        Ok(e)
    }

    pub fn from_dense(basis: Basis, values: Vec<T>) -> Self {
        let dim = values.len();
        Self::from_coeffs(basis, dim, values.into_iter().enumerate()).expect("dense indices are in range")
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(&i).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn dense(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.coeff(i)).collect()
    }

    /// Adds `c` to coordinate `i`, dropping the entry if it cancels.
    pub fn add_term(&mut self, i: usize, c: T) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&i) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(i, sum);
        }
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis || self.dim != other.dim {
            return Err(Error::BasisMismatch(format!(
                "{:?}/{} vs {:?}/{}",
                self.basis, self.dim, other.basis, other.dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = Self::zero(self.basis, self.dim);
        for (i, c) in self.terms() {
            out.add_term(i, k.clone() * c.clone());
        }
        out
    }

    pub fn map_scalars<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BurnsideElement<U> {
        let mut out = BurnsideElement::zero(self.basis, self.dim);
        for (i, c) in self.terms() {
            out.add_term(i, f(c));
        }
        out
    }

    /// All coefficients nonnegative, i.e. the class of an actual `G`-set.
    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|c| !c.to_rational().is_negative())
    }
}

impl<T: Scalar> fmt::Debug for BurnsideElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{{", self.basis)?;
        for (k, (i, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}: {c}")?;
        }
        write!(f, "}}/{}", self.dim)
    }
}

/// Values of all marks, indexed by `Cl(G)` in class order.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkVector<T> {
    pub values: Vec<T>,
}

impl<T: Scalar> MarkVector<T> {
    pub fn new(values: Vec<T>) -> Self {
        MarkVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn pointwise_mul(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        MarkVector {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() * b.clone())
                .collect(),
        }
    }
}

/// `m[Q][P]` is the number of `P`-fixed points of `G/Q`: rows are the
/// transitive sets, columns the evaluating subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableOfMarks {
    m: Vec<Vec<u64>>,
}

impl TableOfMarks {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.m
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.m[row][col]
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.m
            .iter()
            .enumerate()
            .all(|(q, row)| row.iter().skip(q + 1).all(|&v| v == 0))
    }

    /// Product of the diagonal, which is the determinant of a triangular matrix.
    pub fn determinant(&self) -> BigInt {
        (0..self.len()).map(|i| BigInt::from(self.m[i][i])).product()
    }
}

/// `A(G)` with its class table and table of marks.
#[derive(Clone, Debug)]
pub struct BurnsideRing {
    group: Arc<FiniteGroup>,
    classes: SubgroupClassTable,
    marks: TableOfMarks,
}

impl BurnsideRing {
    pub fn new(group: FiniteGroup) -> Result<Self> {
        Self::from_arc(Arc::new(group))
    }

    pub fn from_arc(group: Arc<FiniteGroup>) -> Result<Self> {
        let classes = enumerate_subgroups(&group)?;
        let k = classes.len();
        let mut m = vec![vec![0u64; k]; k];
        for (q, row) in m.iter_mut().enumerate() {
            for (p, entry) in row.iter_mut().enumerate() {
                *entry = mark(&group, classes.rep(p), classes.rep(q));
            }
        }
        Ok(BurnsideRing {
            group,
            classes,
            marks: TableOfMarks { m },
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn classes(&self) -> &SubgroupClassTable {
        &self.classes
    }

    pub fn table_of_marks(&self) -> &TableOfMarks {
        &self.marks
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn label(&self, class: usize) -> String {
        self.classes.label(&self.group, class)
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.rank()).map(|c| self.label(c)).collect()
    }

    /// `[G/Q]` for the class `q`.
    pub fn transitive<T: Scalar>(&self, q: usize) -> BurnsideElement<T> {
        BurnsideElement::basis_vector(Basis::Transitive, self.rank(), q)
    }

    pub fn unit<T: Scalar>(&self) -> BurnsideElement<T> {
        self.transitive(self.rank() - 1)
    }

    pub fn zero<T: Scalar>(&self) -> BurnsideElement<T> {
        BurnsideElement::zero(Basis::Transitive, self.rank())
    }

    /// `|N_G(Q)| / |Q|` for the class `q`.
    pub fn weyl_order(&self, q: usize) -> u64 {
        self.marks.get(q, q)
    }

    fn check(&self, x: &BurnsideElement<impl Scalar>) -> Result<()> {
        if x.basis() != Basis::Transitive || x.dim() != self.rank() {
            return Err(Error::BasisMismatch(format!(
                "expected transitive basis of rank {}, got {:?}/{}",
                self.rank(),
                x.basis(),
                x.dim()
            )));
        }
        Ok(())
    }

    /// Decomposes `[G/P] x [G/Q]` as `sum over P\G/Q of [G/(P ∩ gQg^-1)]`.
    pub fn transitive_product(&self, p: usize, q: usize) -> Vec<(usize, u64)> {
        let g = &self.group;
        let (pr, qr) = (self.classes.rep(p), self.classes.rep(q));
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for d in g.double_cosets(pr, qr) {
            let conj = g.conjugate(d, qr);
            let meet = pr.bits().intersection(conj.bits());
            let class = self
                .classes
                .class_of_bits(&meet)
                .expect("intersection of subgroups is a subgroup");
            *counts.entry(class).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    pub fn product<T: Scalar>(&self, x: &BurnsideElement<T>, y: &BurnsideElement<T>) -> Result<BurnsideElement<T>> {
        self.check(x)?;
        self.check(y)?;
        let mut out = self.zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let ab = a.clone() * b.clone();
                for (k, n) in self.transitive_product(i, j) {
                    out.add_term(k, ab.clone() * T::from_u64(n));
                }
            }
        }
        Ok(out)
    }

    /// The mark of the class `p` on `x`.
    pub fn mark_of<T: Scalar>(&self, p: usize, x: &BurnsideElement<T>) -> T {
        let mut total = T::zero();
        for (q, c) in x.terms() {
            let m = self.marks.get(q, p);
            if m != 0 {
                total = total + c.clone() * T::from_u64(m);
            }
        }
        total
    }

    pub fn ghost<T: Scalar>(&self, x: &BurnsideElement<T>) -> MarkVector<T> {
        debug_assert!(self.check(x).is_ok());
        MarkVector::new((0..self.rank()).map(|p| self.mark_of(p, x)).collect())
    }

    /// Exact rational preimage of a mark vector (back substitution on the
    /// lower triangular table of marks).
    pub fn unghost_rational<T: Scalar>(&self, v: &MarkVector<T>) -> Result<BurnsideElement<BigRational>> {
        if v.len() != self.rank() {
            return Err(Error::BasisMismatch(format!(
                "mark vector of length {} for rank {}",
                v.len(),
                self.rank()
            )));
        }
        let k = self.rank();
        let mut x = vec![BigRational::zero(); k];
        for p in (0..k).rev() {
            let mut rest = v.values[p].to_rational();
            for (q, xq) in x.iter().enumerate().skip(p + 1) {
                let m = self.marks.get(q, p);
                if m != 0 {
                    rest -= xq * BigRational::from_integer(m.into());
                }
            }
            x[p] = rest / BigRational::from_integer(self.marks.get(p, p).into());
        }
        Ok(BurnsideElement::from_dense(Basis::Transitive, x))
    }

    /// The unique integral preimage under the ghost map, or `NotInImage`.
    pub fn unghost(&self, v: &MarkVector<BigInt>) -> Result<BurnsideElement<BigInt>> {
        let rational = self.unghost_rational(v)?;
        if rational.terms().any(|(_, c)| !c.is_integer()) {
            return Err(Error::NotInImage);
        }
        Ok(rational.map_scalars(|c| c.to_integer()))
    }

    /// Pulls `x` back along `phi: T -> G`, where `target` is `A(T)`. Each orbit
    /// `G/Q` splits into `T`-orbits under `t.gQ = phi(t)gQ`.
    pub fn restrict<S: Scalar>(
        &self,
        target: &BurnsideRing,
        phi: &[usize],
        x: &BurnsideElement<S>,
    ) -> Result<BurnsideElement<S>> {
        self.check(x)?;
        let g = &self.group;
        let t = target.group();
        g.check_homomorphism(t, phi)?;
        let mut out = target.zero();
        for (q, c) in x.terms() {
            for (stab, count) in self.orbit_stabilizers(target, phi, self.classes.rep(q)) {
                out.add_term(stab, c.clone() * S::from_u64(count));
            }
        }
        Ok(out)
    }

    /// Stabilizer classes (in `A(T)`) of the `T`-orbits on `G/Q`, with multiplicity.
    fn orbit_stabilizers(&self, target: &BurnsideRing, phi: &[usize], q: &Subgroup) -> Vec<(usize, u64)> {
        let g = &self.group;
        let t = target.group();
        let coset_of = |h: usize| q.members().iter().map(|&y| g.mul(h, y)).min().expect("nonempty");
        let mut coset_index: HashMap<usize, usize> = HashMap::new();
        let mut coset_reps = Vec::new();
        for h in g.elements() {
            let c = coset_of(h);
            if let std::collections::hash_map::Entry::Vacant(e) = coset_index.entry(c) {
                e.insert(coset_reps.len());
                coset_reps.push(h);
            }
        }
        let mut seen = vec![false; coset_reps.len()];
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for start in 0..coset_reps.len() {
            if seen[start] {
                continue;
            }
            let h = coset_reps[start];
            for u in t.elements() {
                seen[coset_index[&coset_of(g.mul(phi[u], h))]] = true;
            }
            let h_inv = g.inv(h);
            let stab: Vec<usize> = t
                .elements()
                .filter(|&u| q.contains(g.mul(g.mul(h_inv, phi[u]), h)))
                .collect();
            let stab = t.subgroup(&stab).expect("stabilizers are subgroups");
            let class = target.classes().class_of(&stab).expect("enumerated");
            *counts.entry(class).or_default() += 1;
        }
        counts.into_iter().collect()
    }
}

/// `|{g : g P g^-1 <= Q}| / |Q|`, the number of `P`-fixed points on `G/Q`.
pub fn mark(group: &FiniteGroup, p: &Subgroup, q: &Subgroup) -> u64 {
    let n = group.transporter(p, q).len();
    assert_eq!(n % q.order(), 0, "transporter is a union of right Q-cosets");
    (n / q.order()) as u64
}
