//! Cyclotomic polynomials over `F_q` and traces of a primitive `n`-th root of
//! unity, with no arithmetic on the order of `F_q(zeta)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::ext::newton_power_sums;
use super::factor::factor_polynomial;
use super::field::{FiniteField, Fq};
use super::poly::{self, Poly};
use crate::arith::{divisors, gcd};
use crate::error::{Error, Result};

fn x_power_minus_one(f: &FiniteField, d: u64) -> Poly {
    let mut p = vec![0; d as usize + 1];
    p[0] = f.neg(1);
    p[d as usize] = 1;
    p
}

/// `Phi_n` over `F_q`: `x^n - 1` divided by `Phi_d` for the proper divisors `d`.
pub fn cyclotomic_polynomial(f: &FiniteField, n: u64) -> Poly {
    let mut known: BTreeMap<u64, Poly> = BTreeMap::new();
    for d in divisors(n) {
        let below = divisors(d)
            .into_iter()
            .filter(|&e| e < d)
            .fold(vec![1], |acc, e| poly::mul(f, &acc, &known[&e]));
        let (phi, r) = poly::divrem(f, &x_power_minus_one(f, d), &below);
        debug_assert!(r.is_empty());
        known.insert(d, phi);
    }
    known.remove(&n).expect("n divides itself")
}

/// Power sums `s_k = sum alpha^k`, `k < count`, over the roots of the monic `m`.
fn power_sums(f: &FiniteField, m: &[Fq], count: usize) -> Vec<Fq> {
    let d = m.len() - 1;
    let mut s = newton_power_sums(f, m);
    s.truncate(count);
    while s.len() < count {
        let k = s.len();
        let t = (1..=d).fold(0, |acc, i| f.add(acc, f.mul(m[d - i], s[k - i])));
        s.push(f.neg(t));
    }
    s
}

/// `(o, [tr(zeta^k) : k < n])` where `zeta` is a root of the least monic
/// irreducible factor of `Phi_n` over `F_q`, `o = [F_q(zeta) : F_q]`, and the
/// trace is taken from `F_q(zeta)` down to `F_q`.
pub fn root_of_unity_traces(f: &FiniteField, n: u64) -> Result<(usize, Vec<Fq>)> {
    if n == 0 || gcd(n, f.order() as u64) != 1 {
        return Err(Error::NotCoprime { q: f.order() as u64, order: n });
    }
    if n == 1 {
        return Ok((1, vec![1]));
    }
    let phi = cyclotomic_polynomial(f, n);
    let (m, _) = factor_polynomial(f, &phi).swap_remove(0);
    Ok((m.len() - 1, power_sums(f, &m, n as usize)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::mult_order;
    use crate::gf::ExtensionField;

    #[test]
    fn small_cyclotomic_polynomials() {
        let f = FiniteField::new(7).unwrap();
        assert_eq!(cyclotomic_polynomial(&f, 1), vec![6, 1]);
        assert_eq!(cyclotomic_polynomial(&f, 4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(&f, 6), vec![1, 6, 1]);
        let p12 = cyclotomic_polynomial(&f, 12);
        assert_eq!(p12, vec![1, 0, 6, 0, 1]);
    }

    #[test]
    fn degree_is_the_multiplicative_order() {
        for (q, n) in [(2u64, 7u64), (3, 125), (4, 45), (5, 24), (9, 91), (2, 255)] {
            let f = FiniteField::new(q).unwrap();
            let (o, tr) = root_of_unity_traces(&f, n).unwrap();
            assert_eq!(o as u64, mult_order(n, q).unwrap());
            assert_eq!(tr.len() as u64, n);
            assert_eq!(tr[0], f.from_int(o as i64));
        }
    }

    #[test]
    fn traces_agree_with_extension_arithmetic() {
        // trace sums over all primitive roots do not depend on which root is chosen
        for (q, n) in [(2u64, 21u64), (3, 13), (5, 12)] {
            let f = FiniteField::new(q).unwrap();
            let (o, tr) = root_of_unity_traces(&f, n).unwrap();
            let ext = ExtensionField::new(&f, o).unwrap();
            let z = ext.root_of_unity(n).unwrap();
            let units: Vec<u64> = (1..n).filter(|&c| gcd(c, n) == 1).collect();
            let by_ext = units.iter().fold(0, |acc, &c| f.add(acc, ext.trace(&ext.pow(&z, c as u128))));
            let by_sums = units.iter().fold(0, |acc, &c| f.add(acc, tr[c as usize]));
            assert_eq!(by_ext, by_sums);
        }
    }

    #[test]
    fn rejects_non_coprime() {
        let f = FiniteField::new(4).unwrap();
        assert!(root_of_unity_traces(&f, 6).is_err());
    }
}
