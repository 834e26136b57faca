//! Simple components `M_n(F_{q^f})` from strong Shoda pairs and orbit data,
//! and the symbolic description of `Aut(F_q G)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, prime_power};
use crate::cyclo::{orbits_and_stabilizer, OrbitData};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::normal_subgroups;
use crate::shoda::{strong_shoda_pairs, ShodaPair};

/// `M_n(F_{q^f})` with a multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleComponent {
    pub n: u64,
    pub f: u64,
    pub multiplicity: u64,
}

impl SimpleComponent {
    pub fn dimension(&self) -> u64 {
        self.n * self.n * self.f
    }
}

/// The pair a component came from and how many orbits it contributed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSource {
    pub pair: usize,
    pub n: u64,
    pub f: u64,
    pub orbits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub q: u64,
    pub group_order: u64,
    /// Merged by `(n, f)`, ascending.
    pub components: Vec<SimpleComponent>,
    pub sources: Vec<ComponentSource>,
    pub total_dimension: u64,
    pub normally_monomial: bool,
}

/// `[G:A]` copies of `F_{q^f}`, `f = o/[E:A]`, one per orbit.
pub fn component_for(g: &Group, pair: &ShodaPair, od: &OrbitData) -> Result<SimpleComponent> {
    let e_index = (od.stabilizer.order() / pair.a.order()) as u64;
    if !od.o.is_multiple_of(e_index) {
        return Err(Error::DivisibilityViolation { index: e_index, order: od.o });
    }
    Ok(SimpleComponent {
        n: (g.order() / pair.a.order()) as u64,
        f: od.o / e_index,
        multiplicity: od.orbits.len() as u64,
    })
}

/// Merges equal `(n, f)` and sorts ascending.
pub fn merge(components: impl IntoIterator<Item = SimpleComponent>) -> Vec<SimpleComponent> {
    let mut m: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for c in components {
        *m.entry((c.n, c.f)).or_default() += c.multiplicity;
    }
    m.into_iter()
        .filter(|&(_, k)| k > 0)
        .map(|((n, f), multiplicity)| SimpleComponent { n, f, multiplicity })
        .collect()
}

pub(crate) fn check_q(order: u64, q: u64) -> Result<()> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if gcd(q, order) != 1 {
        return Err(Error::NotCoprime { q, order });
    }
    Ok(())
}

/// Orbit data for each pair.
pub fn analyse_pairs(g: &Group, q: u64, pairs: Vec<ShodaPair>) -> Result<Vec<(ShodaPair, OrbitData)>> {
    check_q(g.order() as u64, q)?;
    pairs
        .into_iter()
        .map(|p| {
            let od = orbits_and_stabilizer(g, &p, q)?;
            Ok((p, od))
        })
        .collect()
}

impl Decomposition {
    pub fn from_pairs(g: &Group, q: u64, pairs: &[(ShodaPair, OrbitData)]) -> Result<Decomposition> {
        let mut sources = Vec::new();
        let mut comps = Vec::new();
        for (i, (p, od)) in pairs.iter().enumerate() {
            let c = component_for(g, p, od)?;
            sources.push(ComponentSource { pair: i, n: c.n, f: c.f, orbits: od.orbits.len() });
            comps.push(c);
        }
        Ok(Self::from_components(g.order() as u64, q, comps, sources))
    }

    pub fn from_components(
        group_order: u64,
        q: u64,
        components: impl IntoIterator<Item = SimpleComponent>,
        sources: Vec<ComponentSource>,
    ) -> Decomposition {
        let components = merge(components);
        let total_dimension = components.iter().map(|c| c.multiplicity * c.dimension()).sum();
        Decomposition {
            q,
            group_order,
            components,
            sources,
            total_dimension,
            normally_monomial: total_dimension == group_order,
        }
    }

    /// Number of simple components counted with multiplicity.
    pub fn count(&self) -> u64 {
        self.components.iter().map(|c| c.multiplicity).sum()
    }

    /// Same components, ignoring provenance.
    pub fn same_components(&self, other: &Decomposition) -> bool {
        self.q == other.q && self.components == other.components
    }
}

/// `F_q G` via the normal lattice, `S(G)` and the cyclotomic orbits.
pub fn decompose(g: &Group, q: u64) -> Result<Decomposition> {
    check_q(g.order() as u64, q)?;
    let lattice = normal_subgroups(g);
    let pairs = analyse_pairs(g, q, strong_shoda_pairs(g, &lattice))?;
    Decomposition::from_pairs(g, q, &pairs)
}

/// `F_{q^f}` written with its order when it fits in 64 bits.
pub fn field_name(q: u64, f: u64) -> String {
    let order = u32::try_from(f).ok().and_then(|f| q.checked_pow(f));
    match order {
        Some(o) => format!("F_{o}"),
        None => format!("F_({q}^{f})"),
    }
}

impl Decomposition {
    pub fn render_component(&self, c: &SimpleComponent) -> String {
        let field = field_name(self.q, c.f);
        let base = if c.n == 1 { field } else { format!("M_{}({field})", c.n) };
        if c.multiplicity == 1 {
            base
        } else {
            format!("{base}^({})", c.multiplicity)
        }
    }
}

impl fmt::Display for Decomposition {
    /// e.g. `F_3^(4) (+) M_2(F_3)`.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.components.iter().map(|c| self.render_component(c)).collect();
        if terms.is_empty() {
            return out.write_str("0");
        }
        out.write_str(&terms.join(" (+) "))
    }
}

/// The automorphism group of one isomorphism class of components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inner {
    Trivial,
    Cyclic(u64),
    Sl { n: u64, f: u64 },
    SlCyclic { n: u64, f: u64 },
}

/// `inner^(e) x| S_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutTerm {
    pub inner: Inner,
    pub copies: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutExpr {
    pub terms: Vec<AutTerm>,
}

pub fn aut_description(d: &Decomposition) -> Result<AutExpr> {
    if !d.normally_monomial {
        return Err(Error::IncompleteDecomposition);
    }
    let mut terms: Vec<AutTerm> = d
        .components
        .iter()
        .map(|c| {
            let inner = match (c.n, c.f) {
                (1, 1) => Inner::Trivial,
                (1, f) => Inner::Cyclic(f),
                (n, 1) => Inner::Sl { n, f: 1 },
                (n, f) => Inner::SlCyclic { n, f },
            };
            AutTerm { inner, copies: c.multiplicity }
        })
        .collect();
    // Frobenius twists come before the plain SL factors
    terms.sort_by_key(|t| match t.inner {
        Inner::Trivial => (0, 0, 0),
        Inner::Cyclic(f) => (1, 1, f),
        Inner::SlCyclic { n, f } => (2, n, f),
        Inner::Sl { n, f } => (3, n, f),
    });
    Ok(AutExpr { terms })
}

fn sl(n: u64, f: u64) -> String {
    if f == 1 {
        format!("SL({n}, q)")
    } else {
        format!("SL({n}, q^{f})")
    }
}

impl fmt::Display for AutTerm {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.copies;
        let inner = match &self.inner {
            Inner::Trivial => return write!(out, "S_{e}"),
            Inner::Cyclic(f) => format!("Z_{f}"),
            Inner::Sl { n, f } => sl(*n, *f),
            Inner::SlCyclic { n, f } => format!("({} x| Z_{f})", sl(*n, *f)),
        };
        if e == 1 {
            out.write_str(&inner)
        } else {
            write!(out, "({inner}^({e}) x| S_{e})")
        }
    }
}

impl fmt::Display for AutExpr {
    /// Terms joined by ` (+) `; a single trivial copy is left out.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self
            .terms
            .iter()
            .filter(|t| !(t.inner == Inner::Trivial && t.copies == 1))
            .map(|t| format!("{t}"))
            .collect();
        if shown.is_empty() {
            return out.write_str("1");
        }
        out.write_str(&shown.join(" (+) "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cycles_to_images, PcPresentation};

    fn q8() -> Group {
        PcPresentation::new(&[2, 4]).power(0, alloc::vec![(1, 2)]).conjugate(1, 0, alloc::vec![(1, 3)]).build(100).unwrap()
    }

    #[test]
    fn quaternion() {
        let g = q8();
        for q in [3u64, 5, 7, 9, 11, 13] {
            let d = decompose(&g, q).unwrap();
            assert_eq!(
                d.components,
                alloc::vec![
                    SimpleComponent { n: 1, f: 1, multiplicity: 4 },
                    SimpleComponent { n: 2, f: 1, multiplicity: 1 }
                ]
            );
            assert!(d.normally_monomial);
            assert_eq!(crate::oracle::q_classes(&g, q).unwrap(), d.count());
        }
        let d = decompose(&g, 3).unwrap();
        assert_eq!(format!("{d}"), "F_3^(4) (+) M_2(F_3)");
        assert_eq!(format!("{}", aut_description(&d).unwrap()), "S_4 (+) SL(2, q)");
        assert_eq!(decompose(&g, 2).unwrap_err(), Error::NotCoprime { q: 2, order: 8 });
        assert_eq!(decompose(&g, 6).unwrap_err(), Error::NotPrimePower(6));
    }

    #[test]
    fn symmetric_group() {
        let g = Group::from_permutations(
            3,
            &[cycles_to_images(&[alloc::vec![1, 2, 3]], 3), cycles_to_images(&[alloc::vec![1, 2]], 3)],
            100,
        )
        .unwrap();
        let d = decompose(&g, 7).unwrap();
        assert_eq!(format!("{d}"), "F_7^(2) (+) M_2(F_7)");
        let d = decompose(&g, 5).unwrap();
        assert_eq!(format!("{d}"), "F_5^(2) (+) M_2(F_5)");
    }

    #[test]
    fn cyclic_groups() {
        let g = PcPresentation::new(&[5]).build(100).unwrap();
        let d = decompose(&g, 2).unwrap();
        assert_eq!(format!("{d}"), "F_2 (+) F_16");
        assert_eq!(format!("{}", aut_description(&d).unwrap()), "Z_4");
        let g = PcPresentation::new(&[7]).build(100).unwrap();
        assert_eq!(format!("{}", decompose(&g, 2).unwrap()), "F_2 (+) F_8^(2)");
        let g = PcPresentation::new(&[]).build(100).unwrap();
        let d = decompose(&g, 2).unwrap();
        assert_eq!(format!("{d}"), "F_2");
        assert_eq!(format!("{}", aut_description(&d).unwrap()), "1");
    }

    #[test]
    fn aut_rendering() {
        let d = Decomposition::from_components(
            16,
            3,
            [
                SimpleComponent { n: 1, f: 1, multiplicity: 4 },
                SimpleComponent { n: 1, f: 2, multiplicity: 2 },
                SimpleComponent { n: 2, f: 2, multiplicity: 1 },
            ],
            alloc::vec![],
        );
        assert_eq!(format!("{d}"), "F_3^(4) (+) F_9^(2) (+) M_2(F_9)");
        assert_eq!(
            format!("{}", aut_description(&d).unwrap()),
            "S_4 (+) (Z_2^(2) x| S_2) (+) (SL(2, q^2) x| Z_2)"
        );
        let d = Decomposition::from_components(
            16,
            5,
            [SimpleComponent { n: 1, f: 1, multiplicity: 8 }, SimpleComponent { n: 2, f: 1, multiplicity: 2 }],
            alloc::vec![],
        );
        assert_eq!(format!("{}", aut_description(&d).unwrap()), "S_8 (+) (SL(2, q)^(2) x| S_2)");
        let d = Decomposition::from_components(8, 3, [SimpleComponent { n: 1, f: 1, multiplicity: 4 }], alloc::vec![]);
        assert_eq!(aut_description(&d).unwrap_err(), Error::IncompleteDecomposition);
        let d = Decomposition::from_components(
            32,
            3,
            [SimpleComponent { n: 2, f: 2, multiplicity: 4 }],
            alloc::vec![],
        );
        assert_eq!(format!("{}", aut_description(&d).unwrap()), "((SL(2, q^2) x| Z_2)^(4) x| S_4)");
    }
}
