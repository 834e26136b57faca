//! Built-in groups with closed-form Wedderburn decompositions.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{divisors, euler_phi, gcd, is_prime, mult_order, prime_power};
use crate::error::{Error, Result};
use crate::group::{Group, PcPresentation, Word};
use crate::wedderburn::{Decomposition, SimpleComponent};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Order `2 s p^2`, `s = o_p(r)`.
    T2 { p: u64, r: u64 },
    /// Order `p^7`, `p >= 5`.
    T3 { p: u64 },
    /// Nonabelian of order `p^3`: variant 1 has an element of order `p^2`,
    /// variant 2 is the Heisenberg group.
    P3Odd { p: u64, variant: u8 },
    /// Order 16, `1 <= i <= 9`.
    H(u8),
    /// Order `p^4`; `d` is only read for `i = 8`, `p > 3`.
    G { i: u8, p: u64, d: Option<u64> },
    Q8,
    D8,
    /// `SL(2,3)`, not normally monomial.
    Sl23,
    Cyclic(u64),
    Abelian(Vec<u64>),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::T2 { p, r } => write!(out, "T2:p={p},r={r}"),
            FamilySpec::T3 { p } => write!(out, "T3:p={p}"),
            FamilySpec::P3Odd { p, variant } => write!(out, "P3:p={p},v={variant}"),
            FamilySpec::H(i) => write!(out, "H:{i}"),
            FamilySpec::G { i, p, d: Some(d) } if *i == 8 => write!(out, "G:{i}@p={p},d={d}"),
            FamilySpec::G { i, p, .. } => write!(out, "G:{i}@p={p}"),
            FamilySpec::Q8 => out.write_str("Q8"),
            FamilySpec::D8 => out.write_str("D8"),
            FamilySpec::Sl23 => out.write_str("SL23"),
            FamilySpec::Cyclic(n) => write!(out, "cyclic:{n}"),
            FamilySpec::Abelian(v) => {
                let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
                write!(out, "abelian:{}", parts.join(","))
            }
        }
    }
}

fn invalid(msg: &str) -> Error {
    Error::InvalidParameters(String::from(msg))
}

fn odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(invalid("p must be an odd prime"));
    }
    Ok(())
}

fn small(x: u64) -> Result<u32> {
    u32::try_from(x).map_err(|_| invalid("parameter too large"))
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::T2 { p, r } => {
                odd_prime(*p)?;
                if gcd(*r, *p) != 1 {
                    return Err(invalid("r must be coprime to p"));
                }
                if mult_order(*p, *r)? <= 1 {
                    return Err(invalid("s = o_p(r) must exceed 1"));
                }
            }
            FamilySpec::T3 { p } => {
                if *p < 5 || !is_prime(*p) {
                    return Err(invalid("p must be a prime at least 5"));
                }
            }
            FamilySpec::P3Odd { p, variant } => {
                odd_prime(*p)?;
                if !matches!(variant, 1 | 2) {
                    return Err(invalid("variant must be 1 or 2"));
                }
            }
            FamilySpec::H(i) => {
                if !(1..=9).contains(i) {
                    return Err(invalid("H index must lie in 1..=9"));
                }
            }
            FamilySpec::G { i, p, d } => {
                odd_prime(*p)?;
                if !(1..=10).contains(i) {
                    return Err(invalid("G index must lie in 1..=10"));
                }
                if let Some(d) = d {
                    if d % p == 0 || d % p == 1 {
                        return Err(invalid("d must not be 0 or 1 mod p"));
                    }
                }
            }
            FamilySpec::Cyclic(n) => {
                if *n == 0 {
                    return Err(invalid("cyclic order must be positive"));
                }
            }
            FamilySpec::Abelian(v) => {
                if v.contains(&0) {
                    return Err(invalid("abelian factors must be positive"));
                }
            }
            FamilySpec::Q8 | FamilySpec::D8 | FamilySpec::Sl23 => {}
        }
        Ok(())
    }

    /// Order of the group described.
    pub fn order(&self) -> Option<u64> {
        Some(match self {
            FamilySpec::T2 { p, r } => 2 * mult_order(*p, *r).ok()? * p * p,
            FamilySpec::T3 { p } => p.checked_pow(7)?,
            FamilySpec::P3Odd { p, .. } => p.checked_pow(3)?,
            FamilySpec::H(_) => 16,
            FamilySpec::G { p, .. } => p.checked_pow(4)?,
            FamilySpec::Q8 | FamilySpec::D8 => 8,
            FamilySpec::Sl23 => 24,
            FamilySpec::Cyclic(n) => *n,
            FamilySpec::Abelian(v) => v.iter().try_fold(1u64, |a, &x| a.checked_mul(x))?,
        })
    }
}

/// `G_8` needs `d` not `0, 1` mod `p`; the least such residue is 2.
pub const DEFAULT_G8_D: u64 = 2;

/// Builder shorthand: relative orders, power relations, conjugation relations.
fn pc(orders: &[u64], powers: &[(usize, Word)], conjugates: &[(usize, usize, Word)], cap: usize) -> Result<Group> {
    let orders: Vec<u32> = orders.iter().map(|&m| small(m)).collect::<Result<_>>()?;
    let mut b = PcPresentation::new(&orders);
    for (i, w) in powers {
        b = b.power(*i, w.clone());
    }
    for (j, i, w) in conjugates {
        b = b.conjugate(*j, *i, w.clone());
    }
    b.build(cap)
}

fn e(x: u64) -> i64 {
    x as i64
}

pub fn construct(spec: &FamilySpec, cap: usize) -> Result<Group> {
    spec.validate()?;
    match spec {
        FamilySpec::T2 { p, r } => {
            let s = mult_order(*p, *r)?;
            let r = e(r % p);
            // y, x, a, b
            pc(
                &[2, s, *p, *p],
                &[],
                &[(2, 1, vec![(2, r)]), (3, 1, vec![(3, r)]), (2, 0, vec![(3, 1)]), (3, 0, vec![(2, 1)])],
                cap,
            )
        }
        FamilySpec::T3 { p } => {
            let m = e(p - 1);
            // s, r, b, c, d, a, z with z = [a,b] = [c,d] = [s,r] central
            pc(
                &[*p; 7],
                &[],
                &[
                    (1, 0, vec![(1, 1), (6, m)]),
                    (2, 0, vec![(2, 1), (3, 1)]),
                    (3, 0, vec![(3, 1), (4, 1), (5, 1)]),
                    (4, 0, vec![(4, 1), (5, 1)]),
                    (5, 2, vec![(5, 1), (6, 1)]),
                    (4, 3, vec![(4, 1), (6, m)]),
                ],
                cap,
            )
        }
        FamilySpec::P3Odd { p, variant: 1 } => pc(&[*p, p * p], &[], &[(1, 0, vec![(1, e(1 + p))])], cap),
        FamilySpec::P3Odd { p, .. } => pc(&[*p, *p, *p], &[], &[(1, 0, vec![(1, 1), (2, 1)])], cap),
        FamilySpec::H(i) => h_group(*i, cap),
        FamilySpec::G { i, p, d } => g_group(*i, *p, d.unwrap_or(DEFAULT_G8_D), cap),
        FamilySpec::Q8 => pc(&[2, 4], &[(0, vec![(1, 2)])], &[(1, 0, vec![(1, 3)])], cap),
        FamilySpec::D8 => pc(&[2, 4], &[], &[(1, 0, vec![(1, 3)])], cap),
        FamilySpec::Sl23 => pc(
            // t, i, j, z with z = -1
            &[3, 2, 2, 2],
            &[(1, vec![(3, 1)]), (2, vec![(3, 1)])],
            &[(1, 0, vec![(2, 1)]), (2, 0, vec![(1, 1), (2, 1)]), (2, 1, vec![(2, 1), (3, 1)])],
            cap,
        ),
        // trivial factors carry no generator
        FamilySpec::Cyclic(n) => pc(if *n == 1 { &[] } else { core::slice::from_ref(n) }, &[], &[], cap),
        FamilySpec::Abelian(v) => {
            let v: Vec<u64> = v.iter().copied().filter(|&x| x > 1).collect();
            pc(&v, &[], &[], cap)
        }
    }
}

/// Generators listed as `b, a` or `c, b, a`, most significant first.
fn h_group(i: u8, cap: usize) -> Result<Group> {
    match i {
        1 => pc(&[2, 8], &[], &[(1, 0, vec![(1, 5)])], cap),
        2 => pc(&[2, 2, 4], &[], &[(1, 0, vec![(1, 1), (2, 2)])], cap),
        3 => pc(&[4, 4], &[], &[(1, 0, vec![(1, 3)])], cap),
        4 => pc(&[2, 2, 4], &[], &[(2, 0, vec![(2, 3)])], cap),
        5 => pc(&[2, 2, 4], &[], &[(2, 0, vec![(1, 1), (2, 1)])], cap),
        6 => pc(&[2, 2, 4], &[(1, vec![(2, 2)])], &[(2, 1, vec![(2, 3)])], cap),
        7 => pc(&[2, 8], &[], &[(1, 0, vec![(1, 7)])], cap),
        8 => pc(&[2, 8], &[], &[(1, 0, vec![(1, 3)])], cap),
        9 => pc(&[2, 8], &[(0, vec![(1, 4)])], &[(1, 0, vec![(1, 7)])], cap),
        _ => Err(invalid("H index must lie in 1..=9")),
    }
}

/// Where a relation reads `c x c^-1 = w` the generator used is `c^-1`.
fn g_group(i: u8, p: u64, d: u64, cap: usize) -> Result<Group> {
    let p2 = p * p;
    // (1+p)^-1 = 1-p mod p^2
    let inv1p = e(p2 - p + 1);
    match (i, p) {
        (1, _) => {
            let p3 = p2 * p;
            pc(&[p, p3], &[], &[(1, 0, vec![(1, e(p3 - p2 + 1))])], cap)
        }
        // c, b, a
        (2, _) => pc(&[p, p, p2], &[], &[(1, 0, vec![(1, 1), (2, e(p2 - p))])], cap),
        // b, a
        (3, _) => pc(&[p2, p2], &[], &[(1, 0, vec![(1, inv1p)])], cap),
        // c, b, a
        (4, _) => pc(&[p, p, p2], &[], &[(2, 0, vec![(2, inv1p)])], cap),
        // c, a, b
        (5, _) => pc(&[p, p2, p], &[], &[(1, 0, vec![(1, 1), (2, e(p - 1))])], cap),
        // c, b, a
        (6, _) => pc(
            &[p, p, p2],
            &[],
            &[(2, 0, vec![(1, e(p - 1)), (2, e(1 + p))]), (2, 1, vec![(2, inv1p)])],
            cap,
        ),
        // c, b, a with c^3 = a^3 or a^-3
        (7 | 8, 3) => {
            let cp = if i == 7 { 3 } else { 6 };
            pc(
                &[3, 3, 9],
                &[(0, vec![(2, cp)])],
                &[(2, 0, vec![(1, 2), (2, 7)]), (2, 1, vec![(2, 4)])],
                cap,
            )
        }
        // c^-1, b, a
        (7 | 8, _) => {
            let d = if i == 7 { 1 } else { d % p };
            pc(
                &[p, p, p2],
                &[],
                &[
                    (2, 0, vec![(1, 1), (2, e((1 + d * p + p2 - p) % p2))]),
                    (1, 0, vec![(1, 1), (2, e(d * p % p2))]),
                    (2, 1, vec![(2, inv1p)]),
                ],
                cap,
            )
        }
        // d, c, b, a
        (9, _) => pc(&[p, p, p, p], &[], &[(1, 0, vec![(1, 1), (3, e(p - 1))])], cap),
        // c, b, a
        (10, 3) => pc(&[3, 3, 9], &[], &[(2, 0, vec![(1, 1), (2, 1)]), (1, 0, vec![(1, 1), (2, 6)])], cap),
        // d^-1, c, b, a
        (10, _) => pc(&[p, p, p, p], &[], &[(1, 0, vec![(1, 1), (2, 1)]), (2, 0, vec![(2, 1), (3, 1)])], cap),
        _ => Err(invalid("G index must lie in 1..=10")),
    }
}

fn comp(n: u64, f: u64, multiplicity: u64) -> SimpleComponent {
    SimpleComponent { n, f, multiplicity }
}

fn exact(num: u64, den: u64) -> Result<u64> {
    if den == 0 || !num.is_multiple_of(den) {
        return Err(invalid("closed form has a non-integral parameter"));
    }
    Ok(num / den)
}

fn gcd_all(xs: impl IntoIterator<Item = u64>) -> u64 {
    xs.into_iter().fold(0, gcd)
}

/// `(f, g, g')` for the order `2 s p^2` family.
pub fn t2_parameters(p: u64, s: u64, q: u64) -> Result<(u64, u64, u64)> {
    let f = mult_order(p, q)?;
    let g = gcd_all(divisors(s).into_iter().filter(|&d| f % (s / d) == 0));
    let g2 = if s.is_multiple_of(2) {
        let h = s / 2;
        gcd_all(divisors(h).into_iter().filter(|&d| (h / d) % 2 == 1 && f % (h / d) == 0))
    } else {
        0
    };
    Ok((f, g, g2))
}

fn t2_reference(p: u64, s: u64, q: u64) -> Result<Vec<SimpleComponent>> {
    let (f, g, g2) = t2_parameters(p, s, q)?;
    let mut out = Vec::new();
    for d in divisors(s) {
        let od = mult_order(d, q)?;
        out.push(comp(1, od, exact(2 * euler_phi(d), od)?));
    }
    let fg = f * g;
    let fgs = exact(fg, s)?;
    let odd_f = f % 2 == 1;
    if s % 2 == 1 {
        out.push(comp(s, fgs, exact(2 * (p - 1), fg)?));
        if odd_f {
            out.push(comp(2 * s, fgs, exact(p * p - p, 2 * fg)?));
        } else {
            out.push(comp(2 * s, exact(fg, 2 * s)?, exact(p - 1, fg)?));
            out.push(comp(2 * s, fgs, exact((p - 1) * (p - 1), 2 * fg)?));
        }
    } else if odd_f {
        out.push(comp(s, fgs, exact(2 * (p - 1), fg)?));
        out.push(comp(2 * s, fgs, exact((p - 1) * (p - 1), 2 * fg)?));
        out.push(comp(s, exact(2 * f * g2, s)?, exact(p - 1, f * g2)?));
    } else {
        out.push(comp(s, fgs, exact(4 * (p - 1), fg)?));
        out.push(comp(2 * s, fgs, exact((p - 1) * (p - 1), 2 * fg)?));
    }
    Ok(out)
}

fn h_reference(i: u8, q: u64) -> Vec<SimpleComponent> {
    let (m8, m4) = (q % 8, q % 4);
    let split = vec![comp(1, 1, 8), comp(2, 1, 2)];
    let dihedral = vec![comp(1, 1, 4), comp(2, 1, 3)];
    let dihedral_mixed = vec![comp(1, 1, 4), comp(2, 2, 1), comp(2, 1, 1)];
    let half = vec![comp(1, 1, 4), comp(1, 2, 2), comp(2, 1, 2)];
    match i {
        1 if matches!(m8, 1 | 5) => split,
        1 => vec![comp(1, 1, 4), comp(1, 2, 2), comp(2, 2, 1)],
        2 if m4 == 1 => split,
        2 => vec![comp(1, 1, 8), comp(2, 2, 1)],
        3 | 5 if m4 == 1 => split,
        3 | 5 => half,
        4 | 6 => split,
        7 | 9 if matches!(m8, 1 | 7) => dihedral,
        8 if matches!(m8, 1 | 3) => dihedral,
        _ => dihedral_mixed,
    }
}

fn g_reference(i: u8, p: u64, f: u64, e: u64) -> Vec<SimpleComponent> {
    let fp = f * p;
    let mut out = vec![comp(1, 1, 1)];
    match (i, p) {
        (1, _) => out.extend([comp(1, f, (1 + p) * e), comp(1, fp, p * e), comp(p, fp, e)]),
        (2, _) => out.extend([comp(1, f, (1 + p + p * p) * e), comp(p, fp, e)]),
        (3, _) => out.extend([comp(1, f, (1 + p) * e), comp(1, fp, e * p), comp(p, f, p * e)]),
        (4, _) | (9, _) => out.extend([comp(1, f, (1 + p + p * p) * e), comp(p, f, p * e)]),
        (5, _) => out.extend([comp(1, f, (1 + p) * e), comp(1, fp, p * e), comp(p, f, p * e)]),
        (6, _) => out.extend([comp(1, f, (1 + p) * e), comp(p, f, (1 + p) * e)]),
        (7, _) | (8, _) | (10, 3) => out.extend([comp(1, f, (1 + p) * e), comp(p, f, e), comp(p, fp, e)]),
        _ => out.extend([comp(1, f, (1 + p) * e), comp(p, f, (1 + p) * e)]),
    }
    out
}

/// The closed-form decomposition for a family with a published formula.
pub fn reference_decomposition(spec: &FamilySpec, q: u64) -> Result<Decomposition> {
    spec.validate()?;
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let order = spec.order().ok_or_else(|| invalid("order overflows"))?;
    if gcd(q, order) != 1 {
        return Err(Error::NotCoprime { q, order });
    }
    let comps = match spec {
        FamilySpec::T2 { p, r } => t2_reference(*p, mult_order(*p, *r)?, q)?,
        FamilySpec::T3 { p } => {
            let f = mult_order(*p, q)?;
            let p3 = p * p * p;
            vec![
                comp(1, 1, 1),
                comp(1, f, exact(p3 - 1, f)?),
                comp(*p, f, exact(p3 * p - p, f)?),
                comp(p3, f, exact(p - 1, f)?),
            ]
        }
        FamilySpec::P3Odd { p, .. } => {
            let f = mult_order(*p, q)?;
            let e = exact(p - 1, f)?;
            vec![comp(1, 1, 1), comp(1, f, (1 + p) * e), comp(*p, f, e)]
        }
        FamilySpec::H(i) => h_reference(*i, q),
        FamilySpec::G { i, p, .. } => {
            let f = mult_order(*p, q)?;
            g_reference(*i, *p, f, exact(p - 1, f)?)
        }
        FamilySpec::Q8 | FamilySpec::D8 => vec![comp(1, 1, 4), comp(2, 1, 1)],
        FamilySpec::Sl23 | FamilySpec::Cyclic(_) | FamilySpec::Abelian(_) => return Err(Error::UnsupportedFamily),
    };
    Ok(Decomposition::from_components(order, q, comps, Vec::new()))
}

/// `F_q A` for `A = Z_{n_1} x ... x Z_{n_k}`: one `F_{q^{o_d(q)}}` per
/// `q`-orbit of elements of order `d`.
pub fn abelian_decomposition(factors: &[u64], q: u64) -> Result<Decomposition> {
    let order = factors.iter().try_fold(1u64, |a, &x| a.checked_mul(x)).ok_or_else(|| invalid("order overflows"))?;
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if gcd(q, order) != 1 {
        return Err(Error::NotCoprime { q, order });
    }
    let exponent = factors.iter().fold(1, |a, &x| crate::arith::lcm(a, x));
    let ds = divisors(exponent);
    // solutions of x^d = 1, then Moebius inversion over divisors
    let fixed = |d: u64| factors.iter().map(|&n| gcd(n, d)).product::<u64>();
    let mut exact_order: Vec<u64> = Vec::with_capacity(ds.len());
    for (k, &d) in ds.iter().enumerate() {
        let below: u64 = ds[..k].iter().zip(&exact_order).filter(|(&c, _)| d % c == 0).map(|(_, &m)| m).sum();
        exact_order.push(fixed(d) - below);
    }
    let mut comps = Vec::new();
    for (&d, &count) in ds.iter().zip(&exact_order) {
        let o = mult_order(d, q)?;
        comps.push(comp(1, o, count / o));
    }
    Ok(Decomposition::from_components(order, q, comps, Vec::new()))
}

/// Every nonabelian family instance with its name, for listings.
pub fn catalogue() -> Vec<FamilySpec> {
    let mut out = vec![FamilySpec::Q8, FamilySpec::D8];
    out.extend((1..=9).map(FamilySpec::H));
    for p in [3u64, 5] {
        out.push(FamilySpec::P3Odd { p, variant: 1 });
        out.push(FamilySpec::P3Odd { p, variant: 2 });
        out.extend((1..=10).map(|i| FamilySpec::G { i, p, d: None }));
    }
    out.push(FamilySpec::T2 { p: 7, r: 2 });
    out.push(FamilySpec::T2 { p: 5, r: 2 });
    out.push(FamilySpec::T2 { p: 13, r: 3 });
    out.push(FamilySpec::T3 { p: 5 });
    out.push(FamilySpec::Sl23);
    out
}
