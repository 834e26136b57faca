//! Dense univariate polynomials over a [`FiniteField`], lowest coefficient
//! first, with no trailing zeros (the zero polynomial is empty).

use alloc::vec;
use alloc::vec::Vec;

use super::field::{FiniteField, Fq};
use crate::arith::prime_divisors;

pub type Poly = Vec<Fq>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[Fq]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn x_poly() -> Poly {
    vec![0, 1]
}

pub fn add(f: &FiniteField, a: &[Fq], b: &[Fq]) -> Poly {
    let n = a.len().max(b.len());
    let c = (0..n)
        .map(|i| f.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(c)
}

pub fn sub(f: &FiniteField, a: &[Fq], b: &[Fq]) -> Poly {
    let n = a.len().max(b.len());
    let c = (0..n)
        .map(|i| f.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
        .collect();
    trim(c)
}

pub fn scale(f: &FiniteField, a: &[Fq], c: Fq) -> Poly {
    trim(a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn mul(f: &FiniteField, a: &[Fq], b: &[Fq]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = f.add(c[i + j], f.mul(x, y));
        }
    }
    trim(c)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(f: &FiniteField, a: &[Fq], b: &[Fq]) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = f.inv(b[db]);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = f.mul(r[i], lead_inv);
        if c == 0 {
            continue;
        }
        q[i - db] = c;
        for j in 0..=db {
            r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b[j]));
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn rem(f: &FiniteField, a: &[Fq], b: &[Fq]) -> Poly {
    divrem(f, a, b).1
}

pub fn monic(f: &FiniteField, a: &[Fq]) -> Poly {
    match a.last() {
        Some(&l) => scale(f, a, f.inv(l)),
        None => Vec::new(),
    }
}

pub fn gcd(f: &FiniteField, a: &[Fq], b: &[Fq]) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

/// `a^-1 mod m` by the extended Euclidean algorithm, when `gcd(a, m) = 1`.
pub fn inv_mod(f: &FiniteField, a: &[Fq], m: &[Fq]) -> Option<Poly> {
    let (mut r0, mut r1) = (trim(m.to_vec()), rem(f, a, m));
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    Some(rem(f, &scale(f, &s0, f.inv(r0[0])), m))
}

pub fn mulmod(f: &FiniteField, a: &[Fq], b: &[Fq], m: &[Fq]) -> Poly {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: &FiniteField, a: &[Fq], mut e: u128, m: &[Fq]) -> Poly {
    let mut acc = rem(f, &[1], m);
    let mut base = rem(f, a, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(f, &base, &base, m);
        }
    }
    acc
}

pub fn derivative(f: &FiniteField, a: &[Fq]) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int(i as i64), c)).collect())
}

pub fn eval(f: &FiniteField, a: &[Fq], x: Fq) -> Fq {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Rabin's test: `m` of degree `d` is irreducible iff `x^(q^d) = x` mod `m`
/// and `gcd(x^(q^(d/r)) - x, m) = 1` for each prime `r | d`.
pub fn is_irreducible(f: &FiniteField, m: &[Fq]) -> bool {
    let d = match degree(m) {
        Some(0) | None => return false,
        Some(d) => d,
    };
    let q = f.order() as u128;
    let x = x_poly();
    // frob[i] = x^(q^i) mod m
    let mut frob = rem(f, &x, m);
    let mut powers = vec![frob.clone()];
    for _ in 1..=d {
        frob = powmod(f, &frob, q, m);
        powers.push(frob.clone());
    }
    if powers[d] != rem(f, &x, m) {
        return false;
    }
    prime_divisors(d as u64).into_iter().all(|r| {
        let t = sub(f, &powers[d / r as usize], &x);
        gcd(f, &t, m) == vec![1]
    })
}

/// Least monic irreducible of degree `d`, comparing coefficient tuples
/// `(c_0, ..., c_{d-1})` lexicographically.
pub fn least_irreducible(f: &FiniteField, d: usize) -> Poly {
    let q = f.order() as u128;
    let mut coeffs = vec![0u32; d];
    if d > 1 {
        // a zero constant term means x divides
        coeffs[0] = 1;
    }
    loop {
        let mut m = coeffs.clone();
        m.push(1);
        if is_irreducible(f, &m) {
            return m;
        }
        // increment with c_{d-1} least significant
        let mut i = d;
        loop {
            assert!(i > 0, "an irreducible polynomial of every degree exists");
            i -= 1;
            coeffs[i] += 1;
            if (coeffs[i] as u128) < q {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let f = FiniteField::new(9).unwrap();
        let a = vec![1, 2, 3, 4, 5, 6, 7];
        let b = vec![8, 0, 5];
        let (q, r) = divrem(&f, &a, &b);
        assert!(r.len() < b.len());
        assert_eq!(add(&f, &mul(&f, &q, &b), &r), trim(a));
    }

    #[test]
    fn irreducibility() {
        let f2 = FiniteField::prime(2);
        assert!(is_irreducible(&f2, &[1, 1, 1]));
        assert!(!is_irreducible(&f2, &[1, 0, 1]));
        assert_eq!(least_irreducible(&f2, 2), vec![1, 1, 1]);
        assert_eq!(least_irreducible(&f2, 3), vec![1, 0, 1, 1]);
        let f3 = FiniteField::prime(3);
        assert!(is_irreducible(&f3, &[1, 0, 1]));
        assert_eq!(least_irreducible(&f3, 2), vec![1, 0, 1]);
        // count of irreducible monic quadratics over F_4 is (16 - 4)/2 = 6
        let f4 = FiniteField::new(4).unwrap();
        let count = (0..16u32).filter(|&t| is_irreducible(&f4, &[t % 4, t / 4, 1])).count();
        assert_eq!(count, 6);
    }

    #[test]
    fn modular_inverse() {
        let f = FiniteField::prime(7);
        let m = vec![3, 0, 1, 1]; // x^3 + x^2 + 3
        for a in [vec![2], vec![1, 1], vec![5, 0, 4]] {
            let i = inv_mod(&f, &a, &m).unwrap();
            assert_eq!(mulmod(&f, &a, &i, &m), vec![1]);
        }
        assert!(inv_mod(&f, &[1, 1], &[6, 0, 1]).is_none()); // x^2 - 1
    }

    #[test]
    fn gcd_and_eval() {
        let f = FiniteField::prime(5);
        // (x-1)(x-2) and (x-1)(x-3)
        let a = mul(&f, &[4, 1], &[3, 1]);
        let b = mul(&f, &[4, 1], &[2, 1]);
        assert_eq!(gcd(&f, &a, &b), vec![4, 1]);
        assert_eq!(eval(&f, &a, 2), 0);
        assert_eq!(derivative(&f, &[1, 2, 3]), vec![2, 1]);
    }
}
