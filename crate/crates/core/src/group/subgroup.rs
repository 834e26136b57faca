use alloc::vec;
use alloc::vec::Vec;

use super::{BitSet, Elem, Group};
use crate::arith::lcm;

/// A subgroup of a parent [`Group`], stored as its sorted element indices.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<Elem>,
    mask: BitSet,
    gens: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<::core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by size, then by member list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> ::core::cmp::Ordering {
        self.members
            .len()
            .cmp(&other.members.len())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl ::core::hash::Hash for Subgroup {
    fn hash<H: ::core::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Subgroup {
    pub fn trivial(g: &Group) -> Subgroup {
        let mut mask = BitSet::new(g.order());
        mask.insert(0);
        Subgroup { members: vec![0], mask, gens: Vec::new() }
    }

    pub fn whole(g: &Group) -> Subgroup {
        let mut mask = BitSet::new(g.order());
        for x in g.elements() {
            mask.insert(x);
        }
        Subgroup { members: g.elements().collect(), mask, gens: g.generators().to_vec() }
    }

    /// Subgroup with the given members, which must form a subgroup.
    pub fn from_members(g: &Group, members: &[Elem]) -> Subgroup {
        let mut mask = BitSet::new(g.order());
        for &x in members {
            mask.insert(x);
        }
        Self::from_mask(g, mask)
    }

    /// Subgroup whose members are the set bits of `mask`, which must form a subgroup.
    pub fn from_mask(g: &Group, mask: BitSet) -> Subgroup {
        let mut h = Subgroup::trivial(g);
        for x in mask.iter() {
            if !h.contains(x) {
                h = h.extend(g, x);
            }
        }
        debug_assert_eq!(h.mask, mask);
        h
    }

    /// Assembles a subgroup from parts already known to be consistent.
    pub(crate) fn from_parts(mut members: Vec<Elem>, mask: BitSet, gens: Vec<Elem>) -> Subgroup {
        members.sort_unstable();
        Subgroup { members, mask, gens }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn mask(&self) -> &BitSet {
        &self.mask
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.mask.is_subset(&other.mask)
    }

    /// `<self, x>` by adjoining right cosets of `self`.
    pub fn extend(&self, g: &Group, x: Elem) -> Subgroup {
        if self.contains(x) {
            return self.clone();
        }
        let mut gens = self.gens.clone();
        gens.push(x);
        let mut mask = self.mask.clone();
        let mut members = self.members.clone();
        let base = self.members.len();
        let mut reps = vec![0u32];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            i += 1;
            for &s in &gens {
                let c = g.mul(r, s);
                if !mask.contains(c) {
                    reps.push(c);
                    for j in 0..base {
                        let y = g.mul(members[j], c);
                        mask.insert(y);
                        members.push(y);
                    }
                }
            }
        }
        members.sort_unstable();
        Subgroup { members, mask, gens }
    }

    /// `x^-1 H x`.
    pub fn conjugate(&self, g: &Group, x: Elem) -> Subgroup {
        let mut mask = BitSet::new(g.order());
        let mut members: Vec<Elem> = self
            .members
            .iter()
            .map(|&h| {
                let y = g.conj(h, x);
                mask.insert(y);
                y
            })
            .collect();
        members.sort_unstable();
        let gens = self.gens.iter().map(|&h| g.conj(h, x)).collect();
        Subgroup { members, mask, gens }
    }

    /// Whether `x` normalises this subgroup.
    pub fn is_normalized_by(&self, g: &Group, x: Elem) -> bool {
        self.gens.iter().all(|&h| self.contains(g.conj(h, x)))
    }

    /// Normal in the parent group.
    pub fn is_normal(&self, g: &Group) -> bool {
        g.generators().iter().all(|&s| self.is_normalized_by(g, s))
    }

    /// Normal in the subgroup `k`.
    pub fn is_normal_in(&self, g: &Group, k: &Subgroup) -> bool {
        k.gens.iter().all(|&s| self.is_normalized_by(g, s))
    }

    pub fn is_abelian(&self, g: &Group) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn exponent(&self, g: &Group) -> u64 {
        self.members.iter().fold(1, |acc, &x| lcm(acc, g.elem_order(x)))
    }

    pub fn is_cyclic(&self, g: &Group) -> bool {
        self.members.iter().any(|&x| g.elem_order(x) == self.order() as u64)
    }

    pub fn intersection(&self, g: &Group, other: &Subgroup) -> Subgroup {
        Self::from_mask(g, self.mask.intersection(&other.mask))
    }

    /// The subgroup generated by two subgroups.
    pub fn join(&self, g: &Group, other: &Subgroup) -> Subgroup {
        let (mut big, small) = if self.order() >= other.order() { (self.clone(), other) } else { (other.clone(), self) };
        for &x in &small.gens {
            if !big.contains(x) {
                big = big.extend(g, x);
            }
        }
        big
    }

    /// Elements of `k` (a supergroup) commuting with every element of `self`.
    pub fn centralizer_in(&self, g: &Group, k: &Subgroup) -> Subgroup {
        let members: Vec<Elem> = k
            .members
            .iter()
            .copied()
            .filter(|&x| self.gens.iter().all(|&h| g.mul(x, h) == g.mul(h, x)))
            .collect();
        Self::from_members(g, &members)
    }
}

/// Smallest normal subgroup of `g` containing `gens`.
pub fn normal_closure(g: &Group, gens: &[Elem]) -> Subgroup {
    let mut h = subgroup_closure(g, gens);
    let mut i = 0;
    while i < h.gens.len() {
        let x = h.gens[i];
        i += 1;
        for &s in g.generators() {
            let c = g.conj(x, s);
            if !h.contains(c) {
                h = h.extend(g, c);
            }
        }
    }
    h
}

pub fn subgroup_closure(g: &Group, gens: &[Elem]) -> Subgroup {
    let mut h = Subgroup::trivial(g);
    for &x in gens {
        h = h.extend(g, x);
    }
    h
}

/// `N_G(H)`.
pub fn normalizer(g: &Group, h: &Subgroup) -> Subgroup {
    if h.is_normal(g) {
        return Subgroup::whole(g);
    }
    let mut n = h.clone();
    let mut rejected = BitSet::new(g.order());
    for x in g.elements() {
        if n.contains(x) || rejected.contains(x) {
            continue;
        }
        if h.is_normalized_by(g, x) {
            n = n.extend(g, x);
        } else {
            // the whole coset N x fails as well
            for &y in n.members() {
                rejected.insert(g.mul(y, x));
            }
        }
    }
    n
}

/// `core_G(H)`, the intersection of all conjugates of `H`.
pub fn core(g: &Group, h: &Subgroup) -> Subgroup {
    let mut k = h.clone();
    loop {
        let mut changed = false;
        for &s in g.generators() {
            let c = k.conjugate(g, s);
            if c != k {
                k = k.intersection(g, &c);
                changed = true;
            }
        }
        if !changed {
            return k;
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    /// Classes ordered by least member; each class sorted.
    pub classes: Vec<Vec<Elem>>,
    /// Class index of each element.
    pub class_of: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn conjugacy_classes(g: &Group) -> ConjugacyClasses {
    let mut class_of = vec![u32::MAX; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if class_of[x as usize] != u32::MAX {
            continue;
        }
        let id = classes.len() as u32;
        class_of[x as usize] = id;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            i += 1;
            for &s in g.generators() {
                let z = g.conj(y, s);
                if class_of[z as usize] == u32::MAX {
                    class_of[z as usize] = id;
                    orbit.push(z);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    ConjugacyClasses { classes, class_of }
}
