//! Finite abelian groups: invariant-factor bases, linear characters, and the
//! subgroups with cyclic quotient (kernels of linear characters).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{factorize, gcd, lcm};
use crate::error::{Error, Result};
use crate::group::{Elem, Group, Subgroup};

#[derive(Clone, Debug)]
pub struct AbelianBasis {
    pub group: Subgroup,
    pub basis: Vec<Elem>,
    /// Invariant factors `d_1 | d_2 | ... | d_k`, all greater than 1.
    pub divisors: Vec<u64>,
    /// Mixed-radix code of each parent element (first basis element least
    /// significant); `u64::MAX` outside the subgroup.
    code: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCharacter {
    /// `chi(b_i) = zeta_{d_i}^{c_i}`.
    pub exponents: Vec<u64>,
    pub order: u64,
}

impl AbelianBasis {
    pub fn exponent(&self) -> u64 {
        self.divisors.last().copied().unwrap_or(1)
    }

    /// Exponent vector of a member over the basis.
    pub fn coordinates(&self, x: Elem) -> Option<Vec<u64>> {
        let mut c = self.code[x as usize];
        if c == u64::MAX {
            return None;
        }
        Some(
            self.divisors
                .iter()
                .map(|&d| {
                    let v = c % d;
                    c /= d;
                    v
                })
                .collect(),
        )
    }

    pub fn character(&self, exponents: Vec<u64>) -> LinearCharacter {
        let order = exponents
            .iter()
            .zip(&self.divisors)
            .fold(1, |acc, (&c, &d)| lcm(acc, d / gcd(c, d)));
        LinearCharacter { exponents, order }
    }

    /// All `|A|` linear characters, in mixed-radix order of their exponents.
    pub fn linear_characters(&self) -> impl Iterator<Item = LinearCharacter> + '_ {
        let total: u64 = self.divisors.iter().product();
        (0..total).map(move |mut c| {
            let e = self
                .divisors
                .iter()
                .map(|&d| {
                    let v = c % d;
                    c /= d;
                    v
                })
                .collect();
            self.character(e)
        })
    }

    /// `t` with `chi(x) = zeta_e^t`, `e` the exponent of the group.
    pub fn value(&self, chi: &LinearCharacter, x: Elem) -> u64 {
        let e = self.exponent();
        let v = self.coordinates(x).expect("element outside the abelian group");
        chi.exponents
            .iter()
            .zip(&v)
            .zip(&self.divisors)
            .fold(0, |acc, ((&c, &vi), &d)| (acc + c * vi % d * (e / d)) % e)
    }

    pub fn kernel(&self, g: &Group, chi: &LinearCharacter) -> Subgroup {
        let members: Vec<Elem> = self
            .group
            .members()
            .iter()
            .copied()
            .filter(|&x| self.value(chi, x) == 0)
            .collect();
        Subgroup::from_members(g, &members)
    }
}

/// Basis of one Sylow subgroup: `(element, order)` with orders nonincreasing.
fn sylow_basis(g: &Group, p_part: &[Elem]) -> Vec<(Elem, u64)> {
    let mut basis: Vec<(Elem, u64)> = Vec::new();
    // code of members of the span S of the basis so far
    let mut code = vec![u64::MAX; g.order()];
    code[0] = 0;
    let mut span = vec![0u32];
    while span.len() < p_part.len() {
        let mut best = (0u64, 0u32);
        for &y in p_part {
            let mut m = 1;
            let mut z = y;
            while code[z as usize] == u64::MAX {
                z = g.mul(z, y);
                m += 1;
            }
            if m > best.0 {
                best = (m, y);
            }
        }
        let (m, y) = best;
        // y^m lies in S; divide its coordinates by m to get a complement
        let mut c = code[g.pow(y, m) as usize];
        let mut b = y;
        for &(bi, oi) in &basis {
            let v = c % oi;
            c /= oi;
            debug_assert_eq!(v % m, 0);
            b = g.mul(b, g.pow(g.inv(bi), v / m));
        }
        let radix = span.len() as u64;
        let mut added = Vec::with_capacity(span.len() * (m as usize - 1));
        let mut t = b;
        for k in 1..m {
            for &s in &span {
                let x = g.mul(s, t);
                debug_assert_eq!(code[x as usize], u64::MAX);
                code[x as usize] = code[s as usize] + k * radix;
                added.push(x);
            }
            t = g.mul(t, b);
        }
        span.extend(added);
        basis.push((b, m));
    }
    basis
}

pub fn abelian_basis(g: &Group, a: &Subgroup) -> Result<AbelianBasis> {
    if !a.is_abelian(g) {
        return Err(Error::NotAbelian);
    }
    let mut per_prime: Vec<Vec<(Elem, u64)>> = Vec::new();
    for (p, _) in factorize(a.order() as u64) {
        let part: Vec<Elem> = a
            .members()
            .iter()
            .copied()
            .filter(|&x| {
                let mut o = g.elem_order(x);
                while o.is_multiple_of(p) {
                    o /= p;
                }
                o == 1
            })
            .collect();
        per_prime.push(sylow_basis(g, &part));
    }
    let k = per_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut basis = vec![0u32; k];
    let mut divisors = vec![1u64; k];
    for part in &per_prime {
        for (t, &(b, o)) in part.iter().enumerate() {
            basis[k - 1 - t] = g.mul(basis[k - 1 - t], b);
            divisors[k - 1 - t] *= o;
        }
    }

    let mut code = vec![u64::MAX; g.order()];
    let mut digits = vec![0u64; k];
    let mut x = 0u32;
    let mut c = 0u64;
    loop {
        debug_assert_eq!(code[x as usize], u64::MAX);
        code[x as usize] = c;
        c += 1;
        let mut i = 0;
        loop {
            if i == k {
                return Ok(AbelianBasis { group: a.clone(), basis, divisors, code });
            }
            x = g.mul(x, basis[i]);
            digits[i] += 1;
            if digits[i] < divisors[i] {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Subgroups `D` of the abelian group with cyclic quotient, each once,
/// ordered by size then member list.
pub fn cyclic_quotient_subgroups(g: &Group, basis: &AbelianBasis) -> Vec<Subgroup> {
    let total: u64 = basis.divisors.iter().product();
    let mut seen = vec![false; total as usize];
    let encode = |e: &[u64]| {
        e.iter().zip(&basis.divisors).rev().fold(0u64, |acc, (&c, &d)| acc * d + c)
    };
    let mut out = BTreeSet::new();
    for chi in basis.linear_characters() {
        let id = encode(&chi.exponents) as usize;
        if seen[id] {
            continue;
        }
        for k in 1..=chi.order {
            if gcd(k, chi.order) == 1 {
                let e: Vec<u64> = chi
                    .exponents
                    .iter()
                    .zip(&basis.divisors)
                    .map(|(&c, &d)| c * k % d)
                    .collect();
                seen[encode(&e) as usize] = true;
            }
        }
        out.insert(basis.kernel(g, &chi));
    }
    out.into_iter().collect()
}
