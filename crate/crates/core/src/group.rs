//! Finite groups given by a full multiplication table on indices `0..n`.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::scalar::is_prime;

/// Tables up to this order are checked for associativity on every triple.
pub const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 10_000;
pub const DEFAULT_ORDER_CAP: usize = 10_000;

pub type Permutation = Vec<usize>;

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
    name: Option<String>,
    permutations: Option<Vec<Permutation>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

/// A subgroup, stored both as a sorted member list and as a bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
    bits: BitSet,
}

impl Subgroup {
    pub(crate) fn from_bits(bits: BitSet) -> Self {
        Subgroup {
            members: bits.iter().collect(),
            bits,
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.bits.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

/// Canonical ordering: by order, then lexicographically on sorted members.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FiniteGroup {
    /// Validates a Cayley table and derives identity and inverses.
    pub fn from_cayley(table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(not_a_group("empty table", None));
        }
        if let Some(labels) = &labels {
            if labels.len() != n {
                return Err(Error::Invalid(format!(
                    "{} labels for a table of order {n}",
                    labels.len()
                )));
            }
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(not_a_group(&format!("row {i} has length {}", row.len()), None));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(not_a_group(&format!("entry {bad} out of range in row {i}"), None));
            }
            mul.extend_from_slice(row);
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                let r = mul[i * n + j];
                if std::mem::replace(&mut row_seen[r], true) {
                    return Err(not_a_group(&format!("row {i} repeats {r}"), None));
                }
                let c = mul[j * n + i];
                if std::mem::replace(&mut col_seen[c], true) {
                    return Err(not_a_group(&format!("column {i} repeats {c}"), None));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] == x && mul[x * n + e] == x))
            .ok_or_else(|| not_a_group("no identity element", None))?;
        let mut inv = vec![0; n];
        for (x, slot) in inv.iter_mut().enumerate() {
            *slot = (0..n)
                .find(|&y| mul[x * n + y] == identity && mul[y * n + x] == identity)
                .ok_or_else(|| not_a_group(&format!("element {x} has no inverse"), None))?;
        }
        let group = FiniteGroup {
            order: n,
            mul,
            identity,
            inv,
            labels,
            name: None,
            permutations: None,
        };
        group.check_associativity()?;
        Ok(group)
    }

    /// Enumerates the closure of `generators` breadth-first. Element 0 is the
    /// identity; products compose as functions, `(a*b)(x) = a(b(x))`.
    pub fn from_permutations(degree: usize, generators: &[Permutation], cap: usize) -> Result<Self> {
        for g in generators {
            check_permutation(degree, g)?;
        }
        let identity: Permutation = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = compose(&elements[x], g);
                if !index.contains_key(&y) {
                    if elements.len() == cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mul.push(index[&compose(a, b)]);
            }
        }
        let inv = elements.iter().map(|a| index[&invert(a)]).collect();
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        Ok(FiniteGroup {
            order: n,
            mul,
            identity: 0,
            inv,
            labels: Some(labels),
            name: None,
            permutations: Some(elements),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::Invalid(format!(
                "{} labels for a group of order {}",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(not_a_group("associativity fails", Some((a, b, c))));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn permutations(&self) -> Option<&[Permutation]> {
        self.permutations.as_deref()
    }

    /// Index of a permutation in a permutation group.
    pub fn index_of_permutation(&self, perm: &[usize]) -> Option<usize> {
        self.permutations.as_ref()?.iter().position(|p| p == perm)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv[g])
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(self.order, [self.identity]))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(self.order, 0..self.order))
    }

    /// Validates an explicit member list.
    pub fn subgroup(&self, members: &[usize]) -> Result<Subgroup> {
        let bad = || Error::NotASubgroup {
            members: members.to_vec(),
        };
        if members.iter().any(|&g| g >= self.order) {
            return Err(bad());
        }
        let bits = BitSet::from_indices(self.order, members.iter().copied());
        if !bits.contains(self.identity) || bits.count() != members.len() {
            return Err(bad());
        }
        for a in bits.iter() {
            if !bits.contains(self.inv[a]) {
                return Err(bad());
            }
            for b in bits.iter() {
                if !bits.contains(self.mul(a, b)) {
                    return Err(bad());
                }
            }
        }
        Ok(Subgroup::from_bits(bits))
    }

    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut bits = BitSet::new(self.order);
        bits.insert(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if bits.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_bits(bits)
    }

    pub fn conjugate(&self, g: usize, p: &Subgroup) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(
            self.order,
            p.members.iter().map(|&x| self.conj(g, x)),
        ))
    }

    /// `true` when `g P g^-1 <= Q`.
    pub fn conjugates_into(&self, g: usize, p: &Subgroup, q: &Subgroup) -> bool {
        p.members.iter().all(|&x| q.contains(self.conj(g, x)))
    }

    /// `{g : g P g^-1 <= Q}`.
    pub fn transporter(&self, p: &Subgroup, q: &Subgroup) -> Vec<usize> {
        if p.order() > q.order() || !q.order().is_multiple_of(p.order()) {
            return Vec::new();
        }
        self.elements()
            .filter(|&g| self.conjugates_into(g, p, q))
            .collect()
    }

    pub fn is_subconjugate(&self, p: &Subgroup, q: &Subgroup) -> bool {
        q.order().is_multiple_of(p.order()) && self.elements().any(|g| self.conjugates_into(g, p, q))
    }

    pub fn normalizer(&self, p: &Subgroup) -> Subgroup {
        Subgroup::from_bits(BitSet::from_indices(self.order, self.transporter(p, p)))
    }

    /// One representative (the smallest index) per double coset `P g Q`.
    pub fn double_cosets(&self, p: &Subgroup, q: &Subgroup) -> Vec<usize> {
        let mut seen = BitSet::new(self.order);
        let mut reps = Vec::new();
        for g in self.elements() {
            if seen.contains(g) {
                continue;
            }
            reps.push(g);
            for &x in &p.members {
                let xg = self.mul(x, g);
                for &y in &q.members {
                    seen.insert(self.mul(xg, y));
                }
            }
        }
        reps
    }

    /// The largest power of `p` dividing the group order.
    pub fn p_part(&self, p: u64) -> usize {
        let p = p as usize;
        let mut n = self.order;
        let mut part = 1;
        while n.is_multiple_of(p) {
            n /= p;
            part *= p;
        }
        part
    }

    /// A Sylow `p`-subgroup, chosen as the smallest in canonical order among
    /// all conjugates. Returns the trivial subgroup when `p` does not divide
    /// the order.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let target = self.p_part(p);
        let mut sylow = self.trivial_subgroup();
        let mut gens = Vec::new();
        while sylow.order() < target {
            let g = self
                .elements()
                .find(|&g| {
                    !sylow.contains(g)
                        && self.conjugates_into(g, &sylow, &sylow)
                        && is_power_of(self.order_modulo(g, &sylow), p as usize)
                })
                .expect("a proper p-subgroup has a p-element in its normalizer quotient");
            gens.push(g);
            sylow = self.generate(&gens);
        }
        let best = self
            .elements()
            .map(|g| self.conjugate(g, &sylow))
            .min()
            .expect("group is nonempty");
        Ok(best)
    }

    /// Smallest `m > 0` with `g^m` in `p`.
    fn order_modulo(&self, g: usize, p: &Subgroup) -> usize {
        let mut x = g;
        let mut m = 1;
        while !p.contains(x) {
            x = self.mul(x, g);
            m += 1;
        }
        m
    }

    /// Realizes `p` as a standalone group whose element `i` is `order[i]`.
    /// Returns the group and the embedding back into `self`.
    pub fn subgroup_as_group(&self, p: &Subgroup, order: Option<&[usize]>) -> Result<(FiniteGroup, Vec<usize>)> {
        let embedding: Vec<usize> = match order {
            Some(o) => {
                let mut sorted = o.to_vec();
                sorted.sort_unstable();
                if sorted != p.members {
                    return Err(Error::Invalid(
                        "member ordering is not a permutation of the subgroup".into(),
                    ));
                }
                o.to_vec()
            }
            None => p.members.clone(),
        };
        let mut back = HashMap::with_capacity(embedding.len());
        for (i, &g) in embedding.iter().enumerate() {
            back.insert(g, i);
        }
        let m = embedding.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &embedding {
            for &b in &embedding {
                mul.push(back[&self.mul(a, b)]);
            }
        }
        let inv = embedding.iter().map(|&a| back[&self.inv[a]]).collect();
        let group = FiniteGroup {
            order: m,
            mul,
            identity: back[&self.identity],
            inv,
            labels: Some(embedding.iter().map(|&g| self.label(g)).collect()),
            name: None,
            permutations: self
                .permutations
                .as_ref()
                .map(|perms| embedding.iter().map(|&g| perms[g].clone()).collect()),
        };
        Ok((group, embedding))
    }

    /// Checks that `phi: domain -> self` (given on element indices) is multiplicative.
    pub fn check_homomorphism(&self, domain: &FiniteGroup, phi: &[usize]) -> Result<()> {
        if phi.len() != domain.order() || phi.iter().any(|&x| x >= self.order) {
            return Err(Error::Invalid("homomorphism has the wrong shape".into()));
        }
        for a in domain.elements() {
            for b in domain.elements() {
                if phi[domain.mul(a, b)] != self.mul(phi[a], phi[b]) {
                    return Err(Error::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(())
    }
}

fn not_a_group(reason: &str, witness: Option<(usize, usize, usize)>) -> Error {
    Error::NotAGroup {
        reason: reason.to_string(),
        witness,
    }
}

fn is_power_of(mut m: usize, p: usize) -> bool {
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

fn check_permutation(degree: usize, perm: &[usize]) -> Result<()> {
    if perm.len() != degree {
        return Err(Error::InvalidPermutation(format!(
            "{perm:?} has length {} instead of {degree}",
            perm.len()
        )));
    }
    let mut seen = vec![false; degree];
    for &x in perm {
        if x >= degree || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidPermutation(format!("{perm:?} is not a bijection")));
        }
    }
    Ok(())
}

/// `(a*b)(x) = a(b(x))`
pub fn compose(a: &[usize], b: &[usize]) -> Permutation {
    b.iter().map(|&x| a[x]).collect()
}

pub fn invert(a: &[usize]) -> Permutation {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Builds a permutation of `degree` points from disjoint cycles.
pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Permutation {
    let mut perm: Permutation = (0..degree).collect();
    for cycle in cycles {
        for (i, &x) in cycle.iter().enumerate() {
            perm[x] = cycle[(i + 1) % cycle.len()];
        }
    }
    perm
}

pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
