//! Elements of `F_q G` as dense coefficient vectors, and the idempotents
//! `ε(K,H)`, `ε_C(K,H)` and their sums of conjugates.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::gcd;
use crate::cyclo::{CyclotomicCoset, OrbitData};
use crate::error::{Error, Result};
use crate::gf::{root_of_unity_traces, FiniteField, Fq};
use crate::group::{ConjugacyClasses, Elem, Group, Subgroup};
use crate::shoda::{satisfies_shoda_conditions, ShodaPair};

/// `sum_g coeffs[g] g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraElement {
    pub coeffs: Vec<Fq>,
}

impl AlgebraElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `(g, c)` for every nonzero coefficient, by element index.
    pub fn support(&self) -> impl Iterator<Item = (Elem, Fq)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i as Elem, c))
    }
}

/// `F_q G`.
#[derive(Clone, Copy, Debug)]
pub struct GroupAlgebra<'a> {
    pub group: &'a Group,
    pub field: &'a FiniteField,
}

impl<'a> GroupAlgebra<'a> {
    pub fn new(group: &'a Group, field: &'a FiniteField) -> Self {
        GroupAlgebra { group, field }
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { coeffs: vec![0; self.group.order()] }
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(self.group.identity())
    }

    pub fn basis(&self, x: Elem) -> AlgebraElement {
        let mut e = self.zero();
        e.coeffs[x as usize] = 1;
        e
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| self.field.add(x, y)).collect();
        AlgebraElement { coeffs }
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| self.field.sub(x, y)).collect();
        AlgebraElement { coeffs }
    }

    pub fn scale(&self, a: &AlgebraElement, c: Fq) -> AlgebraElement {
        AlgebraElement { coeffs: a.coeffs.iter().map(|&x| self.field.mul(x, c)).collect() }
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let g = self.group;
        let f = self.field;
        let mut out = self.zero();
        let bs: Vec<(Elem, Fq)> = b.support().collect();
        for (x, c) in a.support() {
            for &(y, d) in &bs {
                let z = g.mul(x, y) as usize;
                out.coeffs[z] = f.add(out.coeffs[z], f.mul(c, d));
            }
        }
        out
    }

    /// `h^-1 a h`.
    pub fn conjugate(&self, a: &AlgebraElement, h: Elem) -> AlgebraElement {
        let mut out = self.zero();
        for (x, c) in a.support() {
            out.coeffs[self.group.conj(x, h) as usize] = c;
        }
        out
    }

    pub fn is_idempotent(&self, a: &AlgebraElement) -> bool {
        self.mul(a, a) == *a
    }

    /// Central elements are exactly the class functions.
    pub fn is_central(&self, a: &AlgebraElement, classes: &ConjugacyClasses) -> bool {
        classes.classes.iter().all(|cl| cl.iter().all(|&x| a.coeffs[x as usize] == a.coeffs[cl[0] as usize]))
    }

    fn inverse_order(&self, k: usize) -> Result<Fq> {
        let p = self.field.characteristic() as u64;
        if gcd(k as u64, p) != 1 {
            return Err(Error::NotCoprime { q: self.field.order() as u64, order: k as u64 });
        }
        Ok(self.field.inv(self.field.from_int((k as u64 % p) as i64)))
    }

    /// `K^ = |K|^-1 sum_{k in K} k`.
    pub fn hat(&self, k: &Subgroup) -> Result<AlgebraElement> {
        let c = self.inverse_order(k.order())?;
        let mut e = self.zero();
        for &x in k.members() {
            e.coeffs[x as usize] = c;
        }
        Ok(e)
    }

    /// `ε(K,H)`: `K^` when `K = H`, else the product of `H^ - L^` over the
    /// normal subgroups `L` of `K` minimal over `H`.
    pub fn epsilon(&self, k: &Subgroup, h: &Subgroup) -> Result<AlgebraElement> {
        if !h.is_subgroup_of(k) || !h.is_normal_in(self.group, k) {
            return Err(Error::NotNormalInK);
        }
        let h_hat = self.hat(h)?;
        if k == h {
            return Ok(h_hat);
        }
        self.inverse_order(k.order())?;
        let mut e = self.one();
        for l in minimal_normal_over(self.group, k, h) {
            e = self.mul(&e, &self.sub(&h_hat, &self.hat(&l)?));
        }
        Ok(e)
    }

    /// Sum of the distinct vectors `a^g`, `g` in `G`.
    pub fn sum_distinct_conjugates(&self, a: &AlgebraElement) -> AlgebraElement {
        let orbit = self.conjugates(a);
        orbit.iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Distinct `G`-conjugates of `a`, sorted.
    pub fn conjugates(&self, a: &AlgebraElement) -> Vec<AlgebraElement> {
        let mut seen = BTreeSet::new();
        seen.insert(a.clone());
        let mut queue = vec![a.clone()];
        while let Some(x) = queue.pop() {
            for &s in self.group.generators() {
                let y = self.conjugate(&x, s);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `ε_C(A,D) = |A|^-1 sum_{g in A} tr(χ(gD)) g^-1` for `χ` the character
    /// sending the fixed generator of `A/D` to `ζ_n^c`, `c` the label of `C`.
    pub fn epsilon_c(&self, pair: &ShodaPair, orbit_data: &OrbitData, coset: &CyclotomicCoset) -> Result<AlgebraElement> {
        let n = pair.index;
        let q = self.field.order() as u64;
        if gcd(q, self.group.order() as u64) != 1 {
            return Err(Error::NotCoprime { q, order: self.group.order() as u64 });
        }
        let inv = self.inverse_order(pair.a.order())?;
        let traces = traces_of_powers(self.field, n, orbit_data.o)?;
        let mut e = self.zero();
        for &x in pair.a.members() {
            let t = orbit_data.quotient.dlog(x).expect("x in A");
            let tr = traces[((coset.label * t) % n.max(1)) as usize];
            e.coeffs[self.group.inv(x) as usize] = self.field.mul(inv, tr);
        }
        Ok(e)
    }

    /// `e_C(G,A,D)`.
    pub fn e_c(&self, pair: &ShodaPair, orbit_data: &OrbitData, coset: &CyclotomicCoset) -> Result<AlgebraElement> {
        Ok(self.sum_distinct_conjugates(&self.epsilon_c(pair, orbit_data, coset)?))
    }

    /// Shoda's conditions together with orthogonality of the distinct
    /// conjugates of `ε(K,H)`.
    pub fn is_strong_shoda_pair(&self, k: &Subgroup, h: &Subgroup) -> Result<bool> {
        if !satisfies_shoda_conditions(self.group, k, h) {
            return Ok(false);
        }
        let conj = self.conjugates(&self.epsilon(k, h)?);
        Ok(pairwise_orthogonal(self, &conj))
    }
}

/// `tr(ζ_n^j)` for `j < n`, traces from `F_{q^o}` down to `F_q`.
pub fn traces_of_powers(field: &FiniteField, n: u64, o: u64) -> Result<Vec<Fq>> {
    let (degree, traces) = root_of_unity_traces(field, n)?;
    debug_assert_eq!(degree as u64, o, "o_n(q)");
    Ok(traces)
}

fn normal_closure_in(g: &Group, k: &Subgroup, s: Subgroup) -> Subgroup {
    let mut s = s;
    'outer: loop {
        for &t in s.generators() {
            for &y in k.generators() {
                let c = g.conj(t, y);
                if !s.contains(c) {
                    s = s.extend(g, c);
                    continue 'outer;
                }
            }
        }
        return s;
    }
}

/// Normal subgroups of `K` minimal among those properly containing `H`, sorted.
pub fn minimal_normal_over(g: &Group, k: &Subgroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut candidates = BTreeSet::new();
    let mut covered = h.mask().clone();
    for &x in k.members() {
        if covered.contains(x) {
            continue;
        }
        for &y in h.members() {
            covered.insert(g.mul(x, y));
        }
        candidates.insert(normal_closure_in(g, k, h.extend(g, x)));
    }
    let candidates: Vec<Subgroup> = candidates.into_iter().collect();
    candidates
        .iter()
        .filter(|l| !candidates.iter().any(|m| m.order() < l.order() && m.is_subgroup_of(l)))
        .cloned()
        .collect()
}

fn pairwise_orthogonal(alg: &GroupAlgebra<'_>, es: &[AlgebraElement]) -> bool {
    (0..es.len()).all(|i| (i + 1..es.len()).all(|j| alg.mul(&es[i], &es[j]).is_zero()))
}

/// One idempotent of `E` and where it came from.
#[derive(Clone, Debug)]
pub struct IdempotentEntry {
    pub pair: usize,
    pub orbit: usize,
    /// Label of the representative coset.
    pub coset_label: u64,
    /// `(n, f)` of the matching simple component.
    pub n: u64,
    pub f: u64,
    pub element: AlgebraElement,
}

#[derive(Clone, Debug)]
pub struct CompletenessReport {
    pub idempotents: Vec<IdempotentEntry>,
    pub sum: AlgebraElement,
    /// `sum n^2 f` over the entries.
    pub dimension_covered: u64,
    pub distinct: bool,
    pub idempotent: bool,
    pub central: bool,
    pub orthogonal: bool,
    pub normally_monomial: bool,
}

/// `e_C(G,A,D)` for every pair and every orbit, represented by the orbit's
/// least coset.
pub fn idempotent_set(alg: &GroupAlgebra<'_>, pairs: &[(ShodaPair, OrbitData)]) -> Result<Vec<IdempotentEntry>> {
    let mut out = Vec::new();
    for (i, (pair, od)) in pairs.iter().enumerate() {
        let n = (alg.group.order() / pair.a.order()) as u64;
        let e_index = (od.stabilizer.order() / pair.a.order()) as u64;
        if od.o % e_index != 0 {
            return Err(Error::DivisibilityViolation { index: e_index, order: od.o });
        }
        for (j, orbit) in od.orbits.iter().enumerate() {
            let coset = &od.cosets[orbit[0]];
            out.push(IdempotentEntry {
                pair: i,
                orbit: j,
                coset_label: coset.label,
                n,
                f: od.o / e_index,
                element: alg.e_c(pair, od, coset)?,
            });
        }
    }
    Ok(out)
}

pub fn completeness_check(alg: &GroupAlgebra<'_>, pairs: &[(ShodaPair, OrbitData)], classes: &ConjugacyClasses) -> Result<CompletenessReport> {
    let entries = idempotent_set(alg, pairs)?;
    let elems: Vec<AlgebraElement> = entries.iter().map(|e| e.element.clone()).collect();
    let sum = elems.iter().fold(alg.zero(), |acc, x| alg.add(&acc, x));
    let distinct = elems.iter().collect::<BTreeSet<_>>().len() == elems.len();
    let idempotent = elems.iter().all(|e| alg.is_idempotent(e));
    let central = elems.iter().all(|e| alg.is_central(e, classes));
    let orthogonal = pairwise_orthogonal(alg, &elems);
    let dimension_covered = entries.iter().map(|e| e.n * e.n * e.f).sum();
    let normally_monomial = sum == alg.one();
    Ok(CompletenessReport {
        idempotents: entries,
        sum,
        dimension_covered,
        distinct,
        idempotent,
        central,
        orthogonal,
        normally_monomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::orbits_and_stabilizer;
    use crate::group::{conjugacy_classes, cycles_to_images, PcPresentation};
    use crate::lattice::normal_subgroups;
    use crate::shoda::strong_shoda_pairs;

    fn cyclic(n: u32) -> Group {
        PcPresentation::new(&[n]).build(1000).unwrap()
    }

    fn s3() -> Group {
        Group::from_permutations(3, &[cycles_to_images(&[vec![1, 2, 3]], 3), cycles_to_images(&[vec![1, 2]], 3)], 100)
            .unwrap()
    }

    fn analysed(g: &Group, q: u64) -> Vec<(ShodaPair, OrbitData)> {
        strong_shoda_pairs(g, &normal_subgroups(g))
            .into_iter()
            .map(|p| {
                let od = orbits_and_stabilizer(g, &p, q).unwrap();
                (p, od)
            })
            .collect()
    }

    #[test]
    fn hats_and_epsilon_on_cyclic_three() {
        let g = cyclic(3);
        let f = FiniteField::new(2).unwrap();
        let alg = GroupAlgebra::new(&g, &f);
        let whole = Subgroup::whole(&g);
        let triv = Subgroup::trivial(&g);
        assert_eq!(alg.hat(&triv).unwrap(), alg.one());
        assert_eq!(alg.hat(&whole).unwrap().coeffs, vec![1, 1, 1]);
        assert_eq!(alg.epsilon(&whole, &triv).unwrap().coeffs, vec![0, 1, 1]);
        assert_eq!(alg.epsilon(&whole, &whole).unwrap(), alg.hat(&whole).unwrap());
        let f3 = FiniteField::new(3).unwrap();
        assert!(GroupAlgebra::new(&g, &f3).hat(&whole).is_err());
    }

    #[test]
    fn epsilon_c_examples() {
        let g = cyclic(3);
        let f = FiniteField::new(2).unwrap();
        let alg = GroupAlgebra::new(&g, &f);
        let pairs = analysed(&g, 2);
        let (p, od) = pairs.iter().find(|(p, _)| p.index == 3).unwrap();
        assert_eq!(alg.epsilon_c(p, od, &od.cosets[0]).unwrap().coeffs, vec![0, 1, 1]);
        let (p, od) = pairs.iter().find(|(p, _)| p.index == 1).unwrap();
        assert_eq!(alg.epsilon_c(p, od, &od.cosets[0]).unwrap().coeffs, vec![1, 1, 1]);

        let g = cyclic(5);
        let alg = GroupAlgebra::new(&g, &f);
        let pairs = analysed(&g, 2);
        let (p, od) = pairs.iter().find(|(p, _)| p.index == 5).unwrap();
        assert_eq!(alg.epsilon_c(p, od, &od.cosets[0]).unwrap().coeffs, vec![0, 1, 1, 1, 1]);
    }

    #[test]
    fn epsilon_is_idempotent_on_symmetric_group() {
        let g = s3();
        let f = FiniteField::new(7).unwrap();
        let alg = GroupAlgebra::new(&g, &f);
        let lat = normal_subgroups(&g);
        let classes = conjugacy_classes(&g);
        for k in &lat.normals {
            for h in &lat.normals {
                if h.is_subgroup_of(k) {
                    let e = alg.epsilon(k, h).unwrap();
                    assert!(alg.is_idempotent(&e));
                }
            }
        }
        let a3 = lat.normals.iter().find(|n| n.order() == 3).unwrap();
        let e = alg.epsilon(a3, &Subgroup::trivial(&g)).unwrap();
        assert!(alg.is_central(&e, &classes));
        assert_eq!(alg.sum_distinct_conjugates(&e), e);
        assert!(alg.is_strong_shoda_pair(a3, &Subgroup::trivial(&g)).unwrap());
        assert!(!alg.is_strong_shoda_pair(&Subgroup::whole(&g), &Subgroup::trivial(&g)).unwrap());
    }

    #[test]
    fn completeness_on_small_groups() {
        let q8 = PcPresentation::new(&[2, 4])
            .power(0, vec![(1, 2)])
            .conjugate(1, 0, vec![(1, 3)])
            .build(100)
            .unwrap();
        for (g, q, count) in [(cyclic(3), 2u64, 2usize), (q8, 3, 5), (s3(), 7, 3)] {
            let f = FiniteField::new(q).unwrap();
            let alg = GroupAlgebra::new(&g, &f);
            let report = completeness_check(&alg, &analysed(&g, q), &conjugacy_classes(&g)).unwrap();
            assert_eq!(report.idempotents.len(), count);
            assert!(report.normally_monomial && report.distinct && report.idempotent);
            assert!(report.central && report.orthogonal);
            assert_eq!(report.dimension_covered, g.order() as u64);
        }
    }

    #[test]
    fn quaternion_e_c_is_supported_on_centre() {
        let q8 = PcPresentation::new(&[2, 4])
            .power(0, vec![(1, 2)])
            .conjugate(1, 0, vec![(1, 3)])
            .build(100)
            .unwrap();
        let f = FiniteField::new(3).unwrap();
        let alg = GroupAlgebra::new(&q8, &f);
        let pairs = analysed(&q8, 3);
        let (p, od) = pairs.iter().find(|(p, _)| p.index == 4).unwrap();
        let e = alg.e_c(p, od, &od.cosets[0]).unwrap();
        assert!(alg.is_central(&e, &conjugacy_classes(&q8)));
        assert!(alg.is_idempotent(&e));
        // 1 - z over 2: nonzero exactly on the centre
        assert_eq!(e.support().count(), 2);
    }
}
