//! Strong Shoda pairs, one normal subgroup `N` at a time.
//!
//! For each normal `N` the pairs `(A, D)` with `core_G(D) = N` are found inside a
//! fixed normal subgroup `A = A_N` with `A/N` abelian of maximal order; when
//! `G/N` itself is abelian, `(G, N)` is the only candidate and it qualifies
//! exactly when `G/N` is cyclic.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::abelian::{abelian_basis, cyclic_quotient_subgroups};
use crate::arith::prime_divisors;
use crate::group::{normalizer, quotient, Elem, Group, Subgroup};
use crate::lattice::{maximal_abelian_normal_over, quotient_is_abelian, NormalLattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShodaPair {
    pub a: Subgroup,
    pub d: Subgroup,
    /// `core_G(D)`.
    pub core: Subgroup,
    /// `[A:D]`.
    pub index: u64,
    /// `N_G(D)`.
    pub normalizer: Subgroup,
}

/// Everything computed for one normal subgroup `N`.
#[derive(Clone, Debug)]
pub struct NormalBranch {
    pub normal: Subgroup,
    /// `A_N`; `None` when `G/N` is abelian.
    pub a: Option<Subgroup>,
    /// `D_N`, empty on the abelian-quotient path.
    pub candidates: Vec<Subgroup>,
    /// One pair per representative in the transversal.
    pub pairs: Vec<ShodaPair>,
}

/// Least `x` in `a` whose image generates the cyclic group `A/D` of order `n`.
pub fn quotient_generator(g: &Group, a: &Subgroup, d: &Subgroup, n: u64) -> Elem {
    let primes = prime_divisors(n);
    a.members()
        .iter()
        .copied()
        .find(|&x| primes.iter().all(|&r| !d.contains(g.pow(x, n / r))))
        .expect("A/D is cyclic")
}

/// Whether the cyclic group `A/D` (generated by `x` mod `D`) is its own
/// centraliser in `N/D`, `nd = N_G(D)`.
fn self_centralizing(g: &Group, a: &Subgroup, d: &Subgroup, x: Elem, nd: &Subgroup) -> bool {
    let count = nd
        .members()
        .iter()
        .filter(|&&y| d.contains(g.commutator(y, x)))
        .count();
    count == a.order()
}

fn pair(g: &Group, a: &Subgroup, d: Subgroup, core: &Subgroup) -> ShodaPair {
    let index = (a.order() / d.order()) as u64;
    ShodaPair { a: a.clone(), normalizer: normalizer(g, &d), d, core: core.clone(), index }
}

/// Conjugacy-class orbit of `d` under `g`, as a set of subgroups.
fn subgroup_orbit(g: &Group, d: &Subgroup) -> BTreeSet<Subgroup> {
    let mut orbit = BTreeSet::new();
    orbit.insert(d.clone());
    let mut queue = alloc::vec![d.clone()];
    while let Some(h) = queue.pop() {
        for &s in g.generators() {
            let c = h.conjugate(g, s);
            if !orbit.contains(&c) {
                orbit.insert(c.clone());
                queue.push(c);
            }
        }
    }
    orbit
}

/// Computes `S_N`, optionally with a prescribed choice of `A_N`.
pub fn branch(g: &Group, lattice: &NormalLattice, n: &Subgroup, a_n: Option<&Subgroup>) -> NormalBranch {
    let whole = Subgroup::whole(g);
    if quotient_is_abelian(g, &whole, n) {
        let q = quotient(g, &whole, n).expect("lattice members are normal");
        let pairs = if q.quotient.is_cyclic() {
            alloc::vec![ShodaPair {
                a: whole.clone(),
                d: n.clone(),
                core: n.clone(),
                index: q.quotient.order() as u64,
                normalizer: whole,
            }]
        } else {
            alloc::vec![]
        };
        return NormalBranch { normal: n.clone(), a: None, candidates: alloc::vec![], pairs };
    }

    let a = match a_n {
        Some(a) => a.clone(),
        None => maximal_abelian_normal_over(g, n, lattice),
    };
    general_branch(g, lattice, n, a)
}

/// `S_N` computed inside `a` without the abelian-quotient shortcut.
pub fn general_branch(g: &Group, lattice: &NormalLattice, n: &Subgroup, a: Subgroup) -> NormalBranch {
    let q = quotient(g, &a, n).expect("A_N contains N");
    let qg = &q.quotient;
    let basis = abelian_basis(qg, &Subgroup::whole(qg)).expect("A_N/N is abelian");
    let mut with_core: Vec<Subgroup> = cyclic_quotient_subgroups(qg, &basis)
        .into_iter()
        .filter_map(|k| {
            let members: Vec<Elem> = a.members().iter().copied().filter(|&x| k.contains(q.project(x))).collect();
            let d = Subgroup::from_members(g, &members);
            (lattice.largest_contained_in(d.mask()) == n).then_some(d)
        })
        .collect();
    with_core.sort();

    // the remaining conditions are invariant under conjugation, so they are
    // tested once per class
    let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
    let mut candidates = Vec::new();
    let mut pairs = Vec::new();
    for d in with_core {
        if seen.contains(&d) {
            continue;
        }
        let orbit = subgroup_orbit(g, &d);
        let rep = orbit.iter().next().expect("orbit contains d").clone();
        let index = (a.order() / rep.order()) as u64;
        let x = quotient_generator(g, &a, &rep, index);
        let p = pair(g, &a, rep, n);
        if self_centralizing(g, &a, &p.d, x, &p.normalizer) {
            candidates.extend(orbit.iter().cloned());
            pairs.push(p);
        }
        seen.extend(orbit);
    }
    candidates.sort();
    NormalBranch { normal: n.clone(), a: Some(a), candidates, pairs }
}

/// Canonical order: by `N` from the top of the lattice down, then by `D`.
pub fn assemble(branches: Vec<NormalBranch>) -> Vec<ShodaPair> {
    let mut branches = branches;
    branches.sort_by(|x, y| y.normal.cmp(&x.normal));
    branches.into_iter().flat_map(|b| b.pairs).collect()
}

/// The complete irredundant set `S(G)`.
pub fn strong_shoda_pairs(g: &Group, lattice: &NormalLattice) -> Vec<ShodaPair> {
    let branches = lattice.normals.iter().map(|n| branch(g, lattice, n, None)).collect();
    assemble(branches)
}

/// Conditions (i) and (ii): `H ⊴ K ⊴ N_G(H)` and `K/H` cyclic and maximal
/// abelian in `N_G(H)/H`.
pub fn satisfies_shoda_conditions(g: &Group, k: &Subgroup, h: &Subgroup) -> bool {
    if !h.is_subgroup_of(k) || !h.is_normal_in(g, k) {
        return false;
    }
    let nh = normalizer(g, h);
    if !k.is_subgroup_of(&nh) || !k.is_normal_in(g, &nh) {
        return false;
    }
    let q = quotient(g, k, h).expect("H is normal in K");
    if !q.quotient.is_cyclic() {
        return false;
    }
    let index = (k.order() / h.order()) as u64;
    let x = quotient_generator(g, k, h, index);
    self_centralizing(g, k, h, x, &nh)
}
