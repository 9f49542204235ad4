//! Fusion systems `F_S(G)` induced by an ambient group on a Sylow subgroup.
//!
//! The system is stored extensionally: the partition of `Cl(S)` into
//! `F`-isomorphism classes, the `F`-subconjugation order on those classes and
//! one fully normalized representative per class. Saturation follows from
//! `S` being Sylow in `G`, so that is the only thing checked.

use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::burnside::BurnsideRing;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::scalar::is_prime;

/// Selects a particular Sylow copy; `members[i]` (an element of the ambient
/// group) becomes element `i` of `S`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SylowPin {
    pub members: Vec<usize>,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct FusionSystem {
    p: u64,
    ring: BurnsideRing,
    ambient: Arc<FiniteGroup>,
    ambient_name: String,
    embedding: Vec<usize>,
    fusion_partition: Vec<usize>,
    classes: Vec<Vec<usize>>,
    f_subconj: Vec<Vec<bool>>,
    fully_normalized: Vec<usize>,
}

impl FusionSystem {
    /// `F_S(G)` for a Sylow `p`-subgroup `S` of `ambient`, either pinned or
    /// the canonical one.
    pub fn from_ambient(ambient: impl Into<Arc<FiniteGroup>>, p: u64, pin: Option<&SylowPin>) -> Result<Self> {
        let ambient: Arc<FiniteGroup> = ambient.into();
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let expected = ambient.p_part(p);
        let (sylow, order) = match pin {
            Some(pin) => {
                let mut sorted = pin.members.clone();
                sorted.sort_unstable();
                let sub = ambient.subgroup(&sorted)?;
                if sub.order() != expected {
                    return Err(Error::NotSylow {
                        p,
                        order: sub.order(),
                        expected,
                    });
                }
                (sub, Some(pin.members.as_slice()))
            }
            None => (ambient.sylow_subgroup(p)?, None),
        };
        let (mut s_group, embedding) = ambient.subgroup_as_group(&sylow, order)?;
        if let Some(labels) = pin.and_then(|pin| pin.labels.clone()) {
            s_group = s_group.with_labels(labels)?;
        }
        let ring = BurnsideRing::new(s_group)?;
        let ambient_name = ambient.name().unwrap_or("G").to_string();
        Ok(Self::build(p, ring, ambient, ambient_name, embedding))
    }

    /// The inner fusion system `F_S(S)` of a `p`-group.
    pub fn inner(s: FiniteGroup, p: u64) -> Result<Self> {
        let members: Vec<usize> = s.elements().collect();
        let pin = SylowPin {
            members,
            labels: s.labels().map(|l| l.to_vec()),
        };
        Self::from_ambient(s, p, Some(&pin))
    }

    fn build(p: u64, ring: BurnsideRing, ambient: Arc<FiniteGroup>, ambient_name: String, embedding: Vec<usize>) -> Self {
        let k = ring.rank();
        let embedded: Vec<Subgroup> = (0..k)
            .map(|c| {
                let members: Vec<usize> = ring.classes().rep(c).members().iter().map(|&x| embedding[x]).collect();
                let mut sorted = members;
                sorted.sort_unstable();
                ambient.subgroup(&sorted).expect("image of a subgroup")
            })
            .collect();
        let mut sub = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                sub[i][j] = i == j
                    || (ring.classes().subconj(i, j) || ambient.is_subconjugate(&embedded[i], &embedded[j]));
            }
        }

        // group mutually subconjugate S-classes; order F-classes by their
        // fully normalized representative
        let mut assigned = vec![false; k];
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        for i in 0..k {
            if assigned[i] {
                continue;
            }
            let members: Vec<usize> = (i..k).filter(|&j| sub[i][j] && sub[j][i]).collect();
            for &j in &members {
                assigned[j] = true;
            }
            let rep = members
                .iter()
                .copied()
                .max_by_key(|&j| (normalizer_order(&ring, j), Reverse(j)))
                .expect("nonempty");
            groups.push((rep, members));
        }
        groups.sort_by_key(|(rep, _)| *rep);

        let mut fusion_partition = vec![0; k];
        for (c, (_, members)) in groups.iter().enumerate() {
            for &j in members {
                fusion_partition[j] = c;
            }
        }
        let fully_normalized: Vec<usize> = groups.iter().map(|(rep, _)| *rep).collect();
        let classes: Vec<Vec<usize>> = groups.into_iter().map(|(_, m)| m).collect();
        let n = classes.len();
        let f_subconj = (0..n)
            .map(|a| (0..n).map(|b| sub[fully_normalized[a]][fully_normalized[b]]).collect())
            .collect();
        FusionSystem {
            p,
            ring,
            ambient,
            ambient_name,
            embedding,
            fusion_partition,
            classes,
            f_subconj,
            fully_normalized,
        }
    }

    /// Replaces the representative of `class` by another fully normalized
    /// `S`-class in it.
    pub fn with_representative(mut self, class: usize, s_class: usize) -> Result<Self> {
        if self.fusion_partition.get(s_class) != Some(&class) {
            return Err(Error::Invalid(format!("S-class {s_class} is not in F-class {class}")));
        }
        let best = self.classes[class]
            .iter()
            .map(|&j| normalizer_order(&self.ring, j))
            .max()
            .expect("nonempty");
        if normalizer_order(&self.ring, s_class) != best {
            return Err(Error::Invalid(format!("S-class {s_class} is not fully normalized")));
        }
        self.fully_normalized[class] = s_class;
        Ok(self)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `A(S)`.
    pub fn ring(&self) -> &BurnsideRing {
        &self.ring
    }

    pub fn sylow(&self) -> &FiniteGroup {
        self.ring.group()
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.ambient
    }

    pub fn ambient_name(&self) -> &str {
        &self.ambient_name
    }

    /// `S`-element index to ambient element index.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    /// `|Cl(F)|`.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn fusion_partition(&self) -> &[usize] {
        &self.fusion_partition
    }

    /// `F`-class of an `S`-class.
    pub fn f_class_of(&self, s_class: usize) -> usize {
        self.fusion_partition[s_class]
    }

    /// The `S`-classes merged into `class`, ascending.
    pub fn s_classes(&self, class: usize) -> &[usize] {
        &self.classes[class]
    }

    pub fn fully_normalized(&self, class: usize) -> usize {
        self.fully_normalized[class]
    }

    /// `[P]_F <= [Q]_F`.
    pub fn f_subconj(&self, a: usize, b: usize) -> bool {
        self.f_subconj[a][b]
    }

    /// `[S]_F`, the maximum of `Cl(F)`.
    pub fn top_class(&self) -> usize {
        self.class_count() - 1
    }

    pub fn label(&self, class: usize) -> String {
        self.ring.label(self.fully_normalized[class])
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.class_count()).map(|c| self.label(c)).collect()
    }

    /// `S`-class of a subgroup of `S` (in `S` element indices).
    pub fn s_class_of(&self, p: &Subgroup) -> Result<usize> {
        let s = self.sylow();
        let valid = p.members().iter().all(|&x| x < s.order()) && s.subgroup(p.members()).is_ok();
        if !valid {
            return Err(Error::NotASubgroupOfS(p.members().to_vec()));
        }
        self.ring
            .classes()
            .class_of(p)
            .ok_or_else(|| Error::NotASubgroupOfS(p.members().to_vec()))
    }

    /// `P` and `Q` are `F`-isomorphic.
    pub fn f_iso(&self, p: &Subgroup, q: &Subgroup) -> Result<bool> {
        Ok(self.f_class_of(self.s_class_of(p)?) == self.f_class_of(self.s_class_of(q)?))
    }

    /// The distinct maps `P -> S` induced by conjugation in the ambient group,
    /// each given as the image of `P.members()` (in `S` indices).
    pub fn morphisms_from(&self, p: &Subgroup) -> Vec<Vec<usize>> {
        let g = &self.ambient;
        let mut back = vec![usize::MAX; g.order()];
        for (i, &x) in self.embedding.iter().enumerate() {
            back[x] = i;
        }
        let mut maps = BTreeSet::new();
        for t in g.elements() {
            let image: Option<Vec<usize>> = p
                .members()
                .iter()
                .map(|&x| {
                    let y = back[g.conj(t, self.embedding[x])];
                    (y != usize::MAX).then_some(y)
                })
                .collect();
            if let Some(image) = image {
                maps.insert(image);
            }
        }
        maps.into_iter().collect()
    }
}

/// `|N_S(P)|` for the representative of an `S`-class.
fn normalizer_order(ring: &BurnsideRing, s_class: usize) -> u64 {
    ring.weyl_order(s_class) * ring.classes().rep(s_class).order() as u64
}
