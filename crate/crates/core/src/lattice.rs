//! Subgroup lattice enumeration and conjugacy classes of subgroups.

use std::collections::HashMap;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Enumeration refuses groups with more subgroups than this.
pub const SUBGROUP_CAP: usize = 100_000;

/// `Cl(G)` with the subconjugation order.
///
/// Classes are listed in canonical order of their representatives (order,
/// then sorted member list), which is a linear extension of subconjugation.
#[derive(Clone, Debug)]
pub struct SubgroupClassTable {
    subgroups: Vec<Subgroup>,
    index: HashMap<BitSet, usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    subconj: Vec<Vec<bool>>,
}

/// Finds every subgroup: cyclic seeds, then joins with cyclic subgroups until
/// nothing new appears.
pub fn enumerate_subgroups(group: &FiniteGroup) -> Result<SubgroupClassTable> {
    let mut found: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    let mut index: HashMap<BitSet, usize> = HashMap::new();
    let mut cyclic: Vec<(Subgroup, usize)> = Vec::new();

    let mut push = |sub: Subgroup, gens: Vec<usize>, found: &mut Vec<(Subgroup, Vec<usize>)>| -> Result<bool> {
        if index.contains_key(sub.bits()) {
            return Ok(false);
        }
        if found.len() == SUBGROUP_CAP {
            return Err(Error::OrderCapExceeded { cap: SUBGROUP_CAP });
        }
        index.insert(sub.bits().clone(), found.len());
        found.push((sub, gens));
        Ok(true)
    };

    for g in group.elements() {
        let sub = group.generate(&[g]);
        if push(sub.clone(), vec![g], &mut found)? {
            cyclic.push((sub, g));
        }
    }
    let mut next = 0;
    while next < found.len() {
        let (base, gens) = found[next].clone();
        for (c, g) in &cyclic {
            if c.is_subgroup_of(&base) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(*g);
            let joined = group.generate(&joined_gens);
            push(joined, joined_gens, &mut found)?;
        }
        next += 1;
    }

    let mut subgroups: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
    subgroups.sort();
    let index: HashMap<BitSet, usize> = subgroups
        .iter()
        .enumerate()
        .map(|(i, s)| (s.bits().clone(), i))
        .collect();

    let mut class_of = vec![usize::MAX; subgroups.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..subgroups.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = Vec::new();
        for g in group.elements() {
            let j = index[group.conjugate(g, &subgroups[i]).bits()];
            if class_of[j] == usize::MAX {
                class_of[j] = c;
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }

    let k = classes.len();
    let mut subconj = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            let (p, q) = (&subgroups[classes[i][0]], &subgroups[classes[j][0]]);
            subconj[i][j] = i == j || group.is_subconjugate(p, q);
        }
    }

    Ok(SubgroupClassTable {
        subgroups,
        index,
        class_of,
        classes,
        subconj,
    })
}

impl SubgroupClassTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn rep(&self, class: usize) -> &Subgroup {
        &self.subgroups[self.classes[class][0]]
    }

    pub fn class_members(&self, class: usize) -> impl Iterator<Item = &Subgroup> {
        self.classes[class].iter().map(|&i| &self.subgroups[i])
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.classes[class].len()
    }

    pub fn class_of(&self, sub: &Subgroup) -> Option<usize> {
        self.class_of_bits(sub.bits())
    }

    pub fn class_of_bits(&self, bits: &BitSet) -> Option<usize> {
        self.index.get(bits).map(|&i| self.class_of[i])
    }

    /// `[P] <= [Q]` under subconjugation.
    pub fn subconj(&self, p: usize, q: usize) -> bool {
        self.subconj[p][q]
    }

    pub fn subconj_matrix(&self) -> &[Vec<bool>] {
        &self.subconj
    }

    /// Display label of a class: a generator string of its representative,
    /// e.g. `<r^2,s>`, or `1` for the trivial subgroup.
    pub fn label(&self, group: &FiniteGroup, class: usize) -> String {
        subgroup_label(group, self.rep(class))
    }
}

/// Picks generators with the fewest elements, then the shortest total label
/// length, then the smallest indices, and renders them as `<a,b>`.
pub fn subgroup_label(group: &FiniteGroup, sub: &Subgroup) -> String {
    if sub.order() == 1 {
        return "1".into();
    }
    let candidates: Vec<usize> = sub
        .members()
        .iter()
        .copied()
        .filter(|&g| g != group.identity())
        .collect();
    let cost = |gens: &[usize]| -> (usize, Vec<usize>) {
        (gens.iter().map(|&g| group.label(g).len()).sum(), gens.to_vec())
    };
    let render = |gens: &[usize]| {
        let names: Vec<String> = gens.iter().map(|&g| group.label(g)).collect();
        format!("<{}>", names.join(","))
    };
    for size in 1..=3.min(candidates.len()) {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for combo in combinations(candidates.len(), size) {
            let gens: Vec<usize> = combo.iter().map(|&i| candidates[i]).collect();
            if group.generate(&gens).bits() != sub.bits() {
                continue;
            }
            let c = cost(&gens);
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
        if let Some((_, gens)) = best {
            return render(&gens);
        }
    }
    // Large rank: greedy generating set in index order.
    let mut gens = Vec::new();
    let mut current = group.trivial_subgroup();
    for &g in &candidates {
        if !current.contains(g) {
            gens.push(g);
            current = group.generate(&gens);
        }
    }
    render(&gens)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(combo.clone());
        let mut i = k;
        while i > 0 && combo[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        combo[i - 1] += 1;
        for j in i..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}
