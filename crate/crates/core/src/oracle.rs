//! An independent referee: primitive central idempotents and simple
//! components of `F_q G` read off the centre alone, from class-sum structure
//! constants, minimal polynomials of central elements and factorisation over
//! `F_q`. Nothing here depends on Shoda pairs.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::gf::{factor_polynomial, poly, FiniteField, Fq, Poly};
use crate::group::{conjugacy_classes, ConjugacyClasses, Group};
use crate::idempotents::AlgebraElement;
use crate::wedderburn::{check_q, merge, SimpleComponent};

/// Largest group order the oracle accepts.
pub const ORACLE_LIMIT: usize = 2000;
const RANDOM_ATTEMPTS: usize = 64;
const SEED: u64 = 0x0c1a_55e5;

/// Number of orbits of `x -> x^q` on conjugacy classes.
pub fn q_classes(g: &Group, q: u64) -> Result<u64> {
    check_q(g.order() as u64, q)?;
    let classes = conjugacy_classes(g);
    let k = classes.len();
    let mut seen = vec![false; k];
    let mut count = 0;
    for start in 0..k {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            let x = classes.classes[c][0];
            c = classes.class_of[g.pow(x, q) as usize] as usize;
        }
    }
    Ok(count)
}

/// Row echelon form over `F_q`. Pivots are taken among the first `width`
/// coordinates; anything beyond rides along, which lets a reduction record
/// the combination that produced it.
struct Echelon<'f> {
    field: &'f FiniteField,
    width: usize,
    rows: Vec<(usize, Vec<Fq>)>,
}

impl<'f> Echelon<'f> {
    fn new(field: &'f FiniteField, width: usize) -> Self {
        Echelon { field, width, rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the rows so far; otherwise returns
    /// its reduction (zero on the first `width` coordinates).
    fn insert(&mut self, mut v: Vec<Fq>) -> core::result::Result<(), Vec<Fq>> {
        let f = self.field;
        for (p, row) in &self.rows {
            let c = v[*p];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        match v[..self.width].iter().position(|&x| x != 0) {
            Some(p) => {
                let s = f.inv(v[p]);
                v.iter_mut().for_each(|x| *x = f.mul(*x, s));
                self.rows.push((p, v));
                Ok(())
            }
            None => Err(v),
        }
    }
}

/// `Z(F_q G)` in the basis of class sums `C_0 = 1, C_1, ...`.
pub struct Centre<'a> {
    group: &'a Group,
    field: &'a FiniteField,
    pub classes: ConjugacyClasses,
    /// `table[i]` lists `(j, c, a)` with `a != 0` the coefficient of `C_c` in `C_i C_j`.
    table: Vec<Vec<(u32, u32, Fq)>>,
}

enum Split {
    Field,
    Parts(Vec<Vec<Fq>>),
}

impl<'a> Centre<'a> {
    pub fn new(group: &'a Group, field: &'a FiniteField) -> Self {
        let classes = conjugacy_classes(group);
        let mut table = vec![Vec::new(); classes.len()];
        let mut pairs = Vec::with_capacity(group.order());
        for (c, class) in classes.classes.iter().enumerate() {
            // coefficient of C_c in C_i C_j counts x in C_i with x^-1 z in C_j
            let z = class[0];
            pairs.clear();
            pairs.extend(group.elements().map(|x| {
                let y = group.mul(group.inv(x), z);
                (classes.class_of[x as usize], classes.class_of[y as usize])
            }));
            pairs.sort_unstable();
            for run in pairs.chunk_by(|a, b| a == b) {
                let (i, j) = run[0];
                let a = field.from_int(run.len() as i64);
                if a != 0 {
                    table[i as usize].push((j, c as u32, a));
                }
            }
        }
        for row in &mut table {
            row.sort_unstable();
        }
        Centre { group, field, classes, table }
    }

    pub fn dimension(&self) -> usize {
        self.classes.len()
    }

    fn unit(&self, i: usize) -> Vec<Fq> {
        let mut v = vec![0; self.dimension()];
        v[i] = 1;
        v
    }

    pub fn one(&self) -> Vec<Fq> {
        self.unit(0)
    }

    pub fn mul(&self, x: &[Fq], y: &[Fq]) -> Vec<Fq> {
        let f = self.field;
        let mut out = vec![0; self.dimension()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, c, s) in &self.table[i] {
                let b = y[j as usize];
                if b != 0 {
                    out[c as usize] = f.add(out[c as usize], f.mul(a, f.mul(b, s)));
                }
            }
        }
        out
    }

    /// The same element written on group elements.
    pub fn to_algebra(&self, x: &[Fq]) -> AlgebraElement {
        AlgebraElement { coeffs: self.classes.class_of.iter().map(|&c| x[c as usize]).collect() }
    }

    /// `dim_{F_q} e Z`.
    fn ideal_dimension(&self, e: &[Fq]) -> usize {
        let mut ech = Echelon::new(self.field, self.dimension());
        for i in 0..self.dimension() {
            let _ = ech.insert(self.mul(e, &self.unit(i)));
        }
        ech.rank()
    }

    /// Minimal polynomial of `z` in the algebra `e Z` with unit `e`.
    fn minimal_polynomial(&self, z: &[Fq], e: &[Fq]) -> Poly {
        let k = self.dimension();
        let mut ech = Echelon::new(self.field, k);
        let mut power = e.to_vec();
        for t in 0..=k {
            let mut v = power.clone();
            v.resize(k + t + 1, 0);
            v[k + t] = 1;
            if let Err(r) = ech.insert(v) {
                return poly::trim(r[k..].to_vec());
            }
            power = self.mul(&power, z);
        }
        unreachable!("{k} + 1 powers are dependent")
    }

    /// The idempotent of `e Z` on which `z` has minimal polynomial `g`, a
    /// factor of the minimal polynomial `m` of `z`.
    fn crt_idempotent(&self, m: &[Fq], g: &[Fq], z: &[Fq], e: &[Fq]) -> Vec<Fq> {
        let f = self.field;
        let (h, _) = poly::divrem(f, m, g);
        let inv = poly::inv_mod(f, &h, g).expect("squarefree minimal polynomial");
        let u = poly::rem(f, &poly::mul(f, &h, &inv), m);
        let mut acc = vec![0; self.dimension()];
        for &c in u.iter().rev() {
            acc = self.mul(&acc, z);
            for (a, &b) in acc.iter_mut().zip(e) {
                *a = f.add(*a, f.mul(c, b));
            }
        }
        acc
    }

    fn split(&self, e: &[Fq], dim: usize, rng: &mut ChaCha8Rng) -> Result<Split> {
        let k = self.dimension();
        let q = self.field.order();
        let random: Vec<Vec<Fq>> =
            (0..RANDOM_ATTEMPTS).map(|_| (0..k).map(|_| rng.next_u32() % q).collect()).collect();
        let sums = (0..k).map(|i| self.unit(i));
        let products = (0..k).flat_map(|i| (i..k).map(move |j| self.mul(&self.unit(i), &self.unit(j))));
        for candidate in random.into_iter().chain(sums).chain(products) {
            let z = self.mul(&candidate, e);
            let m = self.minimal_polynomial(&z, e);
            let factors = factor_polynomial(self.field, &m);
            debug_assert!(factors.iter().all(|&(_, mult)| mult == 1), "centre is semisimple");
            if factors.len() > 1 {
                let parts = factors.iter().map(|(g, _)| self.crt_idempotent(&m, g, &z, e)).collect();
                return Ok(Split::Parts(parts));
            }
            if m.len() - 1 == dim {
                return Ok(Split::Field);
            }
        }
        Err(Error::SplittingStalled)
    }

    /// Primitive idempotents of the centre with `f = dim e Z`, sorted by
    /// coefficient vector.
    pub fn primitive_idempotents(&self) -> Result<Vec<(Vec<Fq>, usize)>> {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut pending = vec![self.one()];
        let mut done = Vec::new();
        while let Some(e) = pending.pop() {
            let dim = self.ideal_dimension(&e);
            if dim == 1 {
                done.push((e, 1));
                continue;
            }
            match self.split(&e, dim, &mut rng)? {
                Split::Field => done.push((e, dim)),
                Split::Parts(parts) => pending.extend(parts),
            }
        }
        done.sort_unstable();
        Ok(done)
    }

    /// `dim_{F_q} e F_q G`: the span of `e` closed under right
    /// multiplication by the generators.
    pub fn ideal_dimension_in_algebra(&self, e: &AlgebraElement) -> usize {
        let g = self.group;
        let mut ech = Echelon::new(self.field, g.order());
        let mut queue = vec![e.coeffs.clone()];
        let _ = ech.insert(e.coeffs.clone());
        while let Some(v) = queue.pop() {
            for &s in g.generators() {
                let mut w = vec![0; g.order()];
                for (x, &c) in v.iter().enumerate() {
                    w[g.mul(x as u32, s) as usize] = c;
                }
                if ech.insert(w.clone()).is_ok() {
                    queue.push(w);
                }
            }
        }
        ech.rank()
    }
}

fn prepare(g: &Group, q: u64) -> Result<FiniteField> {
    check_q(g.order() as u64, q)?;
    if g.order() > ORACLE_LIMIT {
        return Err(Error::OracleLimit(ORACLE_LIMIT));
    }
    FiniteField::new(q)
}

/// Primitive central idempotents of `F_q G`, sorted by coefficient vector.
pub fn center_idempotents(g: &Group, q: u64) -> Result<Vec<AlgebraElement>> {
    let field = prepare(g, q)?;
    let centre = Centre::new(g, &field);
    Ok(centre.primitive_idempotents()?.iter().map(|(e, _)| centre.to_algebra(e)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub q_class_count: u64,
    /// Sorted by coefficient vector.
    pub idempotents: Vec<AlgebraElement>,
    /// `(n, f)` of the component cut out by each idempotent.
    pub components: Vec<(u64, u64)>,
    pub component_multiset: Vec<SimpleComponent>,
    pub center_dimension: usize,
}

pub fn oracle_decomposition(g: &Group, q: u64) -> Result<OracleReport> {
    let field = prepare(g, q)?;
    let centre = Centre::new(g, &field);
    let blocks = centre.primitive_idempotents()?;
    let mut idempotents = Vec::with_capacity(blocks.len());
    let mut components = Vec::with_capacity(blocks.len());
    for (e, f) in &blocks {
        let e = centre.to_algebra(e);
        let dim = centre.ideal_dimension_in_algebra(&e);
        let n = (dim / f).isqrt();
        if n * n * f != dim {
            return Err(Error::NonSquareDimension { dim, f: *f });
        }
        idempotents.push(e);
        components.push((n as u64, *f as u64));
    }
    let component_multiset =
        merge(components.iter().map(|&(n, f)| SimpleComponent { n, f, multiplicity: 1 }));
    Ok(OracleReport {
        q_class_count: q_classes(g, q)?,
        idempotents,
        components,
        component_multiset,
        center_dimension: centre.dimension(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};
    use crate::group::{cycles_to_images, PcPresentation};
    use crate::idempotents::{idempotent_set, GroupAlgebra};
    use crate::lattice::normal_subgroups;
    use crate::shoda::strong_shoda_pairs;
    use crate::wedderburn::analyse_pairs;

    fn cyclic(n: u32) -> Group {
        PcPresentation::new(&[n]).build(10_000).unwrap()
    }

    fn s3() -> Group {
        let a = cycles_to_images(&[vec![1, 2, 3]], 3);
        let b = cycles_to_images(&[vec![1, 2]], 3);
        Group::from_permutations(3, &[a, b], 100).unwrap()
    }

    fn family(spec: FamilySpec) -> Group {
        construct(&spec, 1 << 16).unwrap()
    }

    fn multiset(pairs: &[(u64, u64, u64)]) -> Vec<SimpleComponent> {
        merge(pairs.iter().map(|&(n, f, multiplicity)| SimpleComponent { n, f, multiplicity }))
    }

    #[test]
    fn q_class_examples() {
        assert_eq!(q_classes(&family(FamilySpec::Q8), 3).unwrap(), 5);
        assert_eq!(q_classes(&cyclic(3), 2).unwrap(), 2);
        assert_eq!(q_classes(&cyclic(6), 7).unwrap(), 6);
        assert_eq!(q_classes(&cyclic(6), 5).unwrap(), 4);
        assert_eq!(q_classes(&cyclic(4), 2).unwrap_err(), Error::NotCoprime { q: 2, order: 4 });
    }

    #[test]
    fn cyclic_of_order_three_over_f2() {
        let got = center_idempotents(&cyclic(3), 2).unwrap();
        let want = vec![AlgebraElement { coeffs: vec![0, 1, 1] }, AlgebraElement { coeffs: vec![1, 1, 1] }];
        assert_eq!(got, want);
    }

    #[test]
    fn trivial_group() {
        let g = PcPresentation::new(&[]).build(1).unwrap();
        assert_eq!(center_idempotents(&g, 2).unwrap(), vec![AlgebraElement { coeffs: vec![1] }]);
    }

    #[test]
    fn symmetric_group_idempotents_are_complete() {
        let g = s3();
        let field = FiniteField::new(7).unwrap();
        let alg = GroupAlgebra::new(&g, &field);
        let es = center_idempotents(&g, 7).unwrap();
        assert_eq!(es.len(), 3);
        let sum = es.iter().fold(alg.zero(), |acc, e| alg.add(&acc, e));
        assert_eq!(sum, alg.one());
        for (i, a) in es.iter().enumerate() {
            assert!(alg.is_idempotent(a));
            for b in &es[i + 1..] {
                assert!(alg.mul(a, b).is_zero());
            }
        }
    }

    #[test]
    fn report_examples() {
        let r = oracle_decomposition(&family(FamilySpec::Q8), 3).unwrap();
        assert_eq!(r.component_multiset, multiset(&[(1, 1, 4), (2, 1, 1)]));
        assert_eq!((r.q_class_count, r.center_dimension), (5, 5));
        let r = oracle_decomposition(&family(FamilySpec::H(1)), 3).unwrap();
        assert_eq!(r.component_multiset, multiset(&[(1, 1, 4), (1, 2, 2), (2, 2, 1)]));
        let r = oracle_decomposition(&cyclic(5), 2).unwrap();
        assert_eq!(r.component_multiset, multiset(&[(1, 1, 1), (1, 4, 1)]));
        assert_eq!(r.idempotents.len() as u64, r.q_class_count);
    }

    #[test]
    fn report_invariants() {
        for (g, q) in [(s3(), 5), (family(FamilySpec::Sl23), 5), (family(FamilySpec::H(4)), 7), (cyclic(21), 4)] {
            let r = oracle_decomposition(&g, q).unwrap();
            assert_eq!(r.idempotents.len() as u64, r.q_class_count);
            let dim: u64 = r.component_multiset.iter().map(|c| c.dimension() * c.multiplicity).sum();
            assert_eq!(dim, g.order() as u64);
            let fs: u64 = r.components.iter().map(|&(_, f)| f).sum();
            assert_eq!(fs, r.center_dimension as u64);
        }
    }

    #[test]
    fn order_limit() {
        assert_eq!(oracle_decomposition(&cyclic(2003), 2).unwrap_err(), Error::OracleLimit(ORACLE_LIMIT));
    }

    /// Every `e_C(G,A,D)` is a primitive central idempotent, including for a
    /// group that is not normally monomial.
    #[test]
    fn each_e_c_is_primitive_central() {
        let groups = [
            s3(),
            family(FamilySpec::Q8),
            family(FamilySpec::D8),
            family(FamilySpec::H(1)),
            family(FamilySpec::Sl23),
            cyclic(12),
        ];
        for g in &groups {
            for q in [5u64, 7, 11, 25] {
                let field = FiniteField::new(q).unwrap();
                let alg = GroupAlgebra::new(g, &field);
                let pairs = analyse_pairs(g, q, strong_shoda_pairs(g, &normal_subgroups(g))).unwrap();
                let oracle = center_idempotents(g, q).unwrap();
                for entry in idempotent_set(&alg, &pairs).unwrap() {
                    assert!(oracle.contains(&entry.element), "order {} q {q}", g.order());
                }
            }
        }
    }
}
