//! The lattice of normal subgroups and the choice of `A_N`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::gcd;
use crate::group::{conjugacy_classes, normal_closure, BitSet, Group, Subgroup};

#[derive(Clone, Debug)]
pub struct NormalLattice {
    /// Sorted by order, then member list.
    pub normals: Vec<Subgroup>,
}

impl NormalLattice {
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.normals.binary_search(h).ok()
    }

    /// Largest member of the lattice contained in the set `mask`; when `mask`
    /// is a subgroup this is its core.
    pub fn largest_contained_in(&self, mask: &BitSet) -> &Subgroup {
        self.normals
            .iter()
            .rev()
            .find(|n| n.mask().is_subset(mask))
            .expect("trivial subgroup is in every lattice")
    }
}

/// `MN` for normal subgroups `m`, `n`, filled coset by coset.
fn product(g: &Group, m: &Subgroup, n: &Subgroup) -> Subgroup {
    let mut mask = m.mask().clone();
    let mut members = m.members().to_vec();
    for &x in n.members() {
        if !mask.contains(x) {
            for &y in m.members() {
                let z = g.mul(y, x);
                mask.insert(z);
                members.push(z);
            }
        }
    }
    let mut gens = m.generators().to_vec();
    gens.extend_from_slice(n.generators());
    Subgroup::from_parts(members, mask, gens)
}

pub fn normal_subgroups(g: &Group) -> NormalLattice {
    let classes = conjugacy_classes(g);
    let mut done = vec![false; classes.len()];
    let mut principals: Vec<Subgroup> = Vec::new();
    for (i, class) in classes.classes.iter().enumerate().skip(1) {
        if done[i] {
            continue;
        }
        let x = class[0];
        let o = g.elem_order(x);
        for k in 1..o {
            if gcd(k, o) == 1 {
                done[classes.class_of[g.pow(x, k) as usize] as usize] = true;
            }
        }
        let p = normal_closure(g, &[x]);
        if !principals.contains(&p) {
            principals.push(p);
        }
    }
    principals.sort();

    let mut found: Vec<Subgroup> = vec![Subgroup::trivial(g)];
    let mut by_order: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    by_order.entry(1).or_default().push(0);
    for p in &principals {
        if !found.contains(p) {
            by_order.entry(p.order()).or_default().push(found.len());
            found.push(p.clone());
        }
    }
    let mut i = 0;
    while i < found.len() {
        for p in &principals {
            let m = &found[i];
            if p.is_subgroup_of(m) || m.is_subgroup_of(p) {
                continue;
            }
            let order = m.order() * p.order() / m.mask().intersection_count(p.mask());
            let known = by_order.get(&order).and_then(|ids| {
                ids.iter().copied().find(|&j| {
                    m.mask().is_subset(found[j].mask()) && p.mask().is_subset(found[j].mask())
                })
            });
            if known.is_none() {
                let j = product(g, m, p);
                debug_assert_eq!(j.order(), order);
                by_order.entry(order).or_default().push(found.len());
                found.push(j);
            }
        }
        i += 1;
    }
    found.sort();
    NormalLattice { normals: found }
}

/// Members `M` of the lattice containing `n` with `M/N` abelian.
pub fn abelian_over(g: &Group, n: &Subgroup, lattice: &NormalLattice) -> Vec<Subgroup> {
    lattice
        .normals
        .iter()
        .filter(|m| n.is_subgroup_of(m) && quotient_is_abelian(g, m, n))
        .cloned()
        .collect()
}

/// Whether `M/N` is abelian, by commutators of generators of `m`.
pub fn quotient_is_abelian(g: &Group, m: &Subgroup, n: &Subgroup) -> bool {
    let gens = m.generators();
    gens.iter()
        .enumerate()
        .all(|(i, &x)| gens[i + 1..].iter().all(|&y| n.contains(g.commutator(x, y))))
}

/// All choices of `A_N`: normal subgroups over `n` with abelian quotient of
/// maximal order, in lattice order.
pub fn maximal_abelian_normal_choices(g: &Group, n: &Subgroup, lattice: &NormalLattice) -> Vec<Subgroup> {
    let cands = abelian_over(g, n, lattice);
    let best = cands.iter().map(Subgroup::order).max().unwrap_or(0);
    cands.into_iter().filter(|m| m.order() == best).collect()
}

/// `A_N`, with ties broken by least member list.
pub fn maximal_abelian_normal_over(g: &Group, n: &Subgroup, lattice: &NormalLattice) -> Subgroup {
    maximal_abelian_normal_choices(g, n, lattice)
        .into_iter()
        .next()
        .expect("N itself qualifies")
}

/// Whether `h` is a union of conjugacy classes of `g`.
pub fn union_of_classes(g: &Group, h: &Subgroup) -> bool {
    let classes = conjugacy_classes(g);
    classes.classes.iter().all(|c| {
        let inside = c.iter().filter(|&&x| h.contains(x)).count();
        inside == 0 || inside == c.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cycles_to_images, PcPresentation};

    fn perm_group(degree: usize, gens: &[&[u32]]) -> Group {
        let gens: Vec<Vec<u32>> = gens.iter().map(|c| cycles_to_images(&[c.to_vec()], degree)).collect();
        Group::from_permutations(degree, &gens, 10_000).unwrap()
    }

    /// Normal subgroups as subsets of classes closed under multiplication.
    fn brute_force_count(g: &Group) -> usize {
        let classes = conjugacy_classes(g).classes;
        let k = classes.len() - 1;
        let mut count = 0;
        for bits in 0u32..(1 << k) {
            let mut mask = BitSet::new(g.order());
            mask.insert(0);
            for (i, c) in classes.iter().skip(1).enumerate() {
                if bits >> i & 1 == 1 {
                    for &x in c {
                        mask.insert(x);
                    }
                }
            }
            let members: Vec<u32> = mask.iter().collect();
            if g.order().is_multiple_of(members.len())
                && members.iter().all(|&x| members.iter().all(|&y| mask.contains(g.mul(x, y))))
            {
                count += 1;
            }
        }
        count
    }

    fn corpus() -> Vec<Group> {
        vec![
            perm_group(3, &[&[1, 2, 3], &[1, 2]]),
            perm_group(4, &[&[1, 2, 3, 4], &[1, 2]]),
            perm_group(4, &[&[1, 2, 3], &[2, 3, 4]]),
            perm_group(5, &[&[1, 2, 3, 4, 5], &[2, 5]]),
            PcPresentation::new(&[2, 4]).power(0, vec![(1, 2)]).conjugate(1, 0, vec![(1, 3)]).build(100).unwrap(),
            PcPresentation::new(&[2, 4]).conjugate(1, 0, vec![(1, 3)]).build(100).unwrap(),
            PcPresentation::new(&[2, 2, 2]).build(100).unwrap(),
            PcPresentation::new(&[3, 3, 3]).conjugate(1, 0, vec![(1, 1), (2, 1)]).build(100).unwrap(),
            PcPresentation::new(&[2, 2, 3]).conjugate(2, 0, vec![(2, 2)]).build(100).unwrap(),
        ]
    }

    #[test]
    fn symmetric_group_of_degree_three() {
        let g = perm_group(3, &[&[1, 2, 3], &[1, 2]]);
        let l = normal_subgroups(&g);
        let sizes: Vec<usize> = l.normals.iter().map(Subgroup::order).collect();
        assert_eq!(sizes, vec![1, 3, 6]);
    }

    #[test]
    fn lattice_matches_brute_force() {
        for g in corpus() {
            let l = normal_subgroups(&g);
            assert_eq!(l.len(), brute_force_count(&g));
            for n in &l.normals {
                assert!(n.is_normal(&g) && union_of_classes(&g, n));
            }
            for a in &l.normals {
                for b in &l.normals {
                    assert!(l.index_of(&a.intersection(&g, b)).is_some());
                    assert!(l.index_of(&a.join(&g, b)).is_some());
                }
            }
        }
    }

    #[test]
    fn abelian_groups_choose_everything() {
        let g = PcPresentation::new(&[2, 6]).build(100).unwrap();
        let l = normal_subgroups(&g);
        for n in &l.normals {
            assert_eq!(maximal_abelian_normal_over(&g, n, &l).order(), 12);
        }
    }

    #[test]
    fn choice_of_a_n_in_s4() {
        let g = perm_group(4, &[&[1, 2, 3, 4], &[1, 2]]);
        let l = normal_subgroups(&g);
        let one = Subgroup::trivial(&g);
        assert_eq!(maximal_abelian_normal_over(&g, &one, &l).order(), 4);
        let v4 = &l.normals[1];
        assert_eq!(maximal_abelian_normal_over(&g, v4, &l).order(), 12);
    }
}
