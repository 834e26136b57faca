//! Factorisation of univariate polynomials: squarefree decomposition,
//! distinct-degree splitting, then Cantor–Zassenhaus equal-degree splitting.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::field::{FiniteField, Fq};
use super::poly::{self, degree, divrem, gcd, monic, mulmod, powmod, sub, x_poly, Poly};

const SEED: u64 = 0x5eed_f00d;

fn is_one(a: &[Fq]) -> bool {
    a == [1]
}

fn quo(f: &FiniteField, a: &[Fq], b: &[Fq]) -> Poly {
    divrem(f, a, b).0
}

/// `a^(1/p)` for a polynomial all of whose exponents are multiples of `p`.
fn pth_root(f: &FiniteField, a: &[Fq]) -> Poly {
    let p = f.characteristic() as usize;
    let e = (f.order() / f.characteristic()) as u128;
    a.iter().step_by(p).map(|&c| f.pow(c, e)).collect()
}

/// Squarefree factors `(g, i)` with `a = prod g^i`, for monic `a`.
fn squarefree(f: &FiniteField, a: &[Fq]) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    let mut c = gcd(f, a, &poly::derivative(f, a));
    let mut w = quo(f, a, &c);
    let mut i = 1;
    while !is_one(&w) {
        let y = gcd(f, &w, &c);
        let fac = quo(f, &w, &y);
        if !is_one(&fac) {
            out.push((fac, i));
        }
        w = y;
        c = quo(f, &c, &w);
        i += 1;
    }
    if !is_one(&c) {
        let p = f.characteristic();
        for (g, j) in squarefree(f, &pth_root(f, &c)) {
            out.push((g, j * p));
        }
    }
    out
}

/// Distinct-degree factorisation of a squarefree monic polynomial.
fn distinct_degree(f: &FiniteField, a: &[Fq]) -> Vec<(Poly, usize)> {
    let q = f.order() as u128;
    let mut out = Vec::new();
    let mut g = a.to_vec();
    let mut h = x_poly();
    let mut i = 1;
    while degree(&g).unwrap_or(0) >= 2 * i {
        h = powmod(f, &h, q, &g);
        let d = gcd(f, &g, &sub(f, &h, &x_poly()));
        if !is_one(&d) {
            g = quo(f, &g, &d);
            h = poly::rem(f, &h, &g);
            out.push((d, i));
        }
        i += 1;
    }
    if degree(&g).unwrap_or(0) > 0 {
        let d = degree(&g).unwrap();
        out.push((g, d));
    }
    out
}

fn random_poly(f: &FiniteField, rng: &mut ChaCha8Rng, len: usize) -> Poly {
    poly::trim((0..len).map(|_| rng.next_u32() % f.order()).collect())
}

/// Splits a product of distinct monic irreducibles of degree `d`.
fn equal_degree(f: &FiniteField, a: &[Fq], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = degree(a).unwrap();
    if n == d {
        out.push(a.to_vec());
        return;
    }
    let q = f.order() as u128;
    loop {
        let r = random_poly(f, rng, n);
        if degree(&r).unwrap_or(0) == 0 {
            continue;
        }
        let b = if f.characteristic() == 2 {
            // absolute trace map to F_2: r + r^2 + ... + r^(2^(kd-1))
            let steps = f.degree() as usize * d;
            let mut t = r.clone();
            let mut acc = r;
            for _ in 1..steps {
                t = mulmod(f, &t, &t, a);
                acc = poly::add(f, &acc, &t);
            }
            acc
        } else {
            // r^((q^d - 1)/2) = (r^(1 + q + ... + q^(d-1)))^((q-1)/2)
            let mut t = r.clone();
            let mut acc = r;
            for _ in 1..d {
                t = powmod(f, &t, q, a);
                acc = mulmod(f, &acc, &t, a);
            }
            sub(f, &powmod(f, &acc, (q - 1) / 2, a), &[1])
        };
        let g = gcd(f, a, &b);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            equal_degree(f, &g, d, rng, out);
            equal_degree(f, &quo(f, a, &g), d, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors of `a` with multiplicities, sorted by degree then
/// coefficients. The leading coefficient of `a` is dropped.
pub fn factor_polynomial(f: &FiniteField, a: &[Fq]) -> Vec<(Poly, u32)> {
    let a = monic(f, &poly::trim(a.to_vec()));
    assert!(degree(&a).unwrap_or(0) >= 1, "factorisation of a constant");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    for (s, mult) in squarefree(f, &a) {
        for (g, d) in distinct_degree(f, &s) {
            let mut parts = Vec::new();
            equal_degree(f, &g, d, &mut rng, &mut parts);
            out.extend(parts.into_iter().map(|p| (p, mult)));
        }
    }
    out.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| x.0.iter().rev().cmp(y.0.iter().rev())));
    out
}

/// Product of factors with multiplicities.
pub fn expand(f: &FiniteField, factors: &[(Poly, u32)]) -> Poly {
    factors.iter().fold(vec![1], |acc, (g, m)| {
        (0..*m).fold(acc, |acc, _| poly::mul(f, &acc, g))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::poly::is_irreducible;

    #[test]
    fn small_examples() {
        let f3 = FiniteField::new(3).unwrap();
        // x^2 - 1 = (x - 1)(x + 1)
        assert_eq!(factor_polynomial(&f3, &[2, 0, 1]), vec![(vec![1, 1], 1), (vec![2, 1], 1)]);
        assert_eq!(factor_polynomial(&f3, &[1, 0, 1]), vec![(vec![1, 0, 1], 1)]);
        let f2 = FiniteField::new(2).unwrap();
        assert_eq!(factor_polynomial(&f2, &[1, 0, 0, 1]), vec![(vec![1, 1], 1), (vec![1, 1, 1], 1)]);
    }

    #[test]
    fn repeated_factors() {
        let f2 = FiniteField::new(2).unwrap();
        // (x+1)^4 (x^2+x+1)^2 x
        let a = expand(&f2, &[(vec![1, 1], 4), (vec![1, 1, 1], 2), (vec![0, 1], 1)]);
        let fac = factor_polynomial(&f2, &a);
        assert_eq!(fac, vec![(vec![0, 1], 1), (vec![1, 1], 4), (vec![1, 1, 1], 2)]);
    }

    #[test]
    fn refactor_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [2u64, 3, 4, 5, 7, 8, 9, 25] {
            let f = FiniteField::new(q).unwrap();
            for len in [2usize, 5, 9, 17] {
                let mut a = random_poly(&f, &mut rng, len);
                a.push(1);
                let fac = factor_polynomial(&f, &a);
                assert_eq!(expand(&f, &fac), a, "q={q}");
                for (g, _) in &fac {
                    assert!(is_irreducible(&f, g));
                }
            }
        }
    }

    #[test]
    fn cyclotomic_splitting() {
        // x^15 - 1 over F_2: one factor per 2-cyclotomic coset mod 15
        let f = FiniteField::new(2).unwrap();
        let mut a = vec![0u32; 16];
        a[0] = 1;
        a[15] = 1;
        let fac = factor_polynomial(&f, &a);
        let degs: Vec<usize> = fac.iter().map(|(g, _)| g.len() - 1).collect();
        assert_eq!(degs, vec![1, 2, 4, 4, 4]);
    }
}
