//! `q`-cyclotomic cosets of the generators of `Irr(A/D)` and the action of
//! `N_G(D)` on them.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{euler_phi, gcd, mult_order};
use crate::error::{Error, Result};
use crate::group::{Elem, Group, Subgroup};
use crate::shoda::{quotient_generator, ShodaPair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub n: u64,
    /// Sorted units `c q^i mod n`.
    pub members: Vec<u64>,
    /// Least member.
    pub label: u64,
}

/// Units mod `n` split into cosets `{c q^i}`, ordered by label. For `n = 1`
/// there is a single coset `{0}` standing for the trivial character.
pub fn cyclotomic_cosets(n: u64, q: u64) -> Result<Vec<CyclotomicCoset>> {
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { q, order: n });
    }
    if n == 1 {
        return Ok(vec![CyclotomicCoset { n, members: vec![0], label: 0 }]);
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for c in 1..n {
        if seen[c as usize] || gcd(c, n) != 1 {
            continue;
        }
        let mut members = Vec::new();
        let mut x = c;
        while !seen[x as usize] {
            seen[x as usize] = true;
            members.push(x);
            x = x * (q % n) % n;
        }
        members.sort_unstable();
        out.push(CyclotomicCoset { n, members, label: c });
    }
    Ok(out)
}

/// A fixed generator `x D` of the cyclic group `A/D` with discrete logarithms.
#[derive(Clone, Debug)]
pub struct CyclicQuotient {
    pub n: u64,
    pub generator: Elem,
    a_members: Vec<Elem>,
    dlog: Vec<u32>,
}

impl CyclicQuotient {
    pub fn new(g: &Group, pair: &ShodaPair) -> CyclicQuotient {
        let n = pair.index;
        let x = quotient_generator(g, &pair.a, &pair.d, n);
        let a_members = pair.a.members().to_vec();
        let mut dlog = vec![u32::MAX; a_members.len()];
        let mut c = 0;
        for k in 0..n as u32 {
            for &y in pair.d.members() {
                let i = a_members.binary_search(&g.mul(c, y)).expect("coset lies in A");
                dlog[i] = k;
            }
            c = g.mul(c, x);
        }
        CyclicQuotient { n, generator: x, a_members, dlog }
    }

    /// `k` with `y = x^k` modulo `D`, for `y` in `A`.
    pub fn dlog(&self, y: Elem) -> Option<u64> {
        self.a_members.binary_search(&y).ok().map(|i| self.dlog[i] as u64)
    }

    /// `m` with `h x h^-1 = x^m` modulo `D`.
    pub fn conj_exponent(&self, g: &Group, pair: &ShodaPair, h: Elem) -> Result<u64> {
        if !pair.normalizer.contains(h) {
            return Err(Error::NotInNormalizer);
        }
        let y = g.conj(self.generator, g.inv(h));
        Ok(self.dlog(y).expect("A is normal") % self.n.max(1))
    }
}

#[derive(Clone, Debug)]
pub struct OrbitData {
    pub quotient: CyclicQuotient,
    pub cosets: Vec<CyclotomicCoset>,
    /// Orbits as indices into `cosets`, each sorted, ordered by least label.
    pub orbits: Vec<Vec<usize>>,
    /// `E_G(A/D)`.
    pub stabilizer: Subgroup,
    /// `o_n(q)`.
    pub o: u64,
}

pub fn orbits_and_stabilizer(g: &Group, pair: &ShodaPair, q: u64) -> Result<OrbitData> {
    let n = pair.index;
    let cosets = cyclotomic_cosets(n, q)?;
    let o = mult_order(n, q)?;
    let cq = CyclicQuotient::new(g, pair);
    let coset_of = |c: u64| -> usize {
        cosets.iter().position(|k| k.members.binary_search(&(c % n.max(1))).is_ok()).expect("unit")
    };
    let index_of: Vec<usize> = (0..n.max(1)).map(|c| if gcd(c, n) == 1 { coset_of(c) } else { usize::MAX }).collect();
    let image = |c: u64, m: u64| index_of[((c * m) % n.max(1)) as usize];

    let gen_exps: Vec<u64> = pair
        .normalizer
        .generators()
        .iter()
        .map(|&h| cq.conj_exponent(g, pair, h))
        .collect::<Result<_>>()?;
    let mut orbit_of = vec![usize::MAX; cosets.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..cosets.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let c = cosets[orbit[i]].label;
            i += 1;
            for &m in &gen_exps {
                let t = image(c, m);
                if orbit_of[t] == usize::MAX {
                    orbit_of[t] = id;
                    orbit.push(t);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }

    let exps: Vec<(Elem, u64)> = pair
        .normalizer
        .members()
        .iter()
        .map(|&h| Ok((h, cq.conj_exponent(g, pair, h)?)))
        .collect::<Result<_>>()?;
    let mut ms: Vec<u64> = exps.iter().map(|&(_, m)| m).collect();
    ms.sort_unstable();
    ms.dedup();
    // the stabiliser of a coset is determined by which exponents fix it
    let fixers = |k: usize| -> Vec<bool> {
        let c = cosets[k].label;
        ms.iter().map(|&m| image(c, m) == k).collect()
    };
    let base = fixers(index_of[(1 % n.max(1)) as usize]);
    for orbit in &orbits {
        for &k in orbit {
            if fixers(k) != base {
                return Err(Error::StabilizerMismatch);
            }
        }
    }
    let members: Vec<Elem> = exps
        .iter()
        .filter(|&&(_, m)| base[ms.binary_search(&m).unwrap()])
        .map(|&(h, _)| h)
        .collect();
    let stabilizer = Subgroup::from_members(g, &members);
    let expected = euler_phi(n) as u128 * stabilizer.order() as u128;
    if expected != orbits.len() as u128 * pair.normalizer.order() as u128 * o as u128 {
        return Err(Error::StabilizerMismatch);
    }
    Ok(OrbitData { quotient: cq, cosets, orbits, stabilizer, o })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cycles_to_images, PcPresentation};
    use crate::lattice::normal_subgroups;
    use crate::shoda::strong_shoda_pairs;

    #[test]
    fn coset_examples() {
        let c = cyclotomic_cosets(5, 2).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].members, vec![1, 2, 3, 4]);
        let c = cyclotomic_cosets(7, 2).unwrap();
        assert_eq!(c.iter().map(|k| k.members.clone()).collect::<Vec<_>>(), vec![vec![1, 2, 4], vec![3, 5, 6]]);
        assert_eq!(cyclotomic_cosets(1, 2).unwrap()[0].members, vec![0]);
        assert_eq!(cyclotomic_cosets(4, 2).unwrap_err(), Error::NotCoprime { q: 2, order: 4 });
        for (n, q) in [(15u64, 2u64), (24, 5), (49, 3), (100, 3)] {
            let c = cyclotomic_cosets(n, q).unwrap();
            let o = mult_order(n, q).unwrap();
            assert_eq!(c.len() as u64, euler_phi(n) / o);
            assert!(c.iter().all(|k| k.members.len() as u64 == o));
        }
    }

    fn pair_with(g: &Group, a: usize, d: usize) -> ShodaPair {
        strong_shoda_pairs(g, &normal_subgroups(g))
            .into_iter()
            .find(|p| p.a.order() == a && p.d.order() == d)
            .unwrap()
    }

    #[test]
    fn symmetric_group() {
        let g = Group::from_permutations(
            3,
            &[cycles_to_images(&[vec![1, 2, 3]], 3), cycles_to_images(&[vec![1, 2]], 3)],
            100,
        )
        .unwrap();
        let p = pair_with(&g, 3, 1);
        let od = orbits_and_stabilizer(&g, &p, 7).unwrap();
        assert_eq!(od.cosets.len(), 2);
        assert_eq!(od.orbits.len(), 1);
        assert_eq!(od.stabilizer, p.a);
        let t = g.find_permutation(&[1, 0, 2]).unwrap();
        assert_eq!(od.quotient.conj_exponent(&g, &p, t).unwrap(), 2);
        assert_eq!(od.quotient.conj_exponent(&g, &p, 0).unwrap(), 1);
    }

    #[test]
    fn quaternion_and_dihedral() {
        let q8 = PcPresentation::new(&[2, 4])
            .power(0, vec![(1, 2)])
            .conjugate(1, 0, vec![(1, 3)])
            .build(100)
            .unwrap();
        let p = pair_with(&q8, 4, 1);
        let od = orbits_and_stabilizer(&q8, &p, 3).unwrap();
        assert_eq!(od.cosets.len(), 1);
        assert_eq!(od.orbits.len(), 1);
        assert_eq!(od.stabilizer.order(), 8);
        let d8 = PcPresentation::new(&[2, 4]).conjugate(1, 0, vec![(1, 3)]).build(100).unwrap();
        let p = pair_with(&d8, 4, 1);
        let od = orbits_and_stabilizer(&d8, &p, 5).unwrap();
        // b = g0 has index 4
        assert_eq!(od.quotient.conj_exponent(&d8, &p, 4).unwrap(), 3);
        assert_eq!(od.quotient.conj_exponent(&d8, &p, 1).unwrap(), 1);
    }

    #[test]
    fn abelian_groups_have_trivial_action() {
        let g = PcPresentation::new(&[7]).build(100).unwrap();
        let p = pair_with(&g, 7, 1);
        let od = orbits_and_stabilizer(&g, &p, 2).unwrap();
        assert_eq!(od.orbits.len(), 2);
        assert!(od.orbits.iter().all(|o| o.len() == 1));
        assert_eq!(od.stabilizer.order(), 7);
    }
}
