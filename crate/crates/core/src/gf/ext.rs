use alloc::vec;
use alloc::vec::Vec;

use super::field::{FiniteField, Fq};
use super::poly::{self, Poly};
use crate::arith::{factorize, prime_divisors};
use crate::error::{Error, Result};

/// `F_{q^o}` as polynomials over `F_q` modulo a monic irreducible of degree `o`.
///
/// Elements are reduced polynomials; the base field embeds as constants.
#[derive(Clone, Debug)]
pub struct ExtensionField {
    base: FiniteField,
    degree: usize,
    modulus: Poly,
    order: u128,
    /// `tr(x^i)` for `i < o`.
    trace_basis: Vec<Fq>,
}

impl ExtensionField {
    pub fn new(base: &FiniteField, degree: usize) -> Result<ExtensionField> {
        assert!(degree >= 1);
        let q = base.order() as u128;
        let order = (0..degree)
            .try_fold(1u128, |acc, _| acc.checked_mul(q))
            .filter(|&o| o < 1 << 127)
            .ok_or(Error::FieldTooLarge(base.order() as u64, degree as u64))?;
        let modulus = poly::least_irreducible(base, degree);
        let trace_basis = newton_power_sums(base, &modulus);
        Ok(ExtensionField { base: base.clone(), degree, modulus, order, trace_basis })
    }

    pub fn base(&self) -> &FiniteField {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[Fq] {
        &self.modulus
    }

    /// `q^o`.
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn one(&self) -> Poly {
        vec![1]
    }

    pub fn embed(&self, c: Fq) -> Poly {
        poly::trim(vec![c])
    }

    pub fn add(&self, a: &[Fq], b: &[Fq]) -> Poly {
        poly::add(&self.base, a, b)
    }

    pub fn mul(&self, a: &[Fq], b: &[Fq]) -> Poly {
        poly::mulmod(&self.base, a, b, &self.modulus)
    }

    pub fn pow(&self, a: &[Fq], e: u128) -> Poly {
        poly::powmod(&self.base, a, e, &self.modulus)
    }

    pub fn inv(&self, a: &[Fq]) -> Poly {
        assert!(!a.is_empty(), "inverse of zero");
        self.pow(a, self.order - 2)
    }

    /// `x -> x^q`.
    pub fn frobenius(&self, a: &[Fq]) -> Poly {
        self.pow(a, self.base.order() as u128)
    }

    /// Element with index `t`, digits base `q` with the constant term least significant.
    pub fn from_index(&self, mut t: u128) -> Poly {
        let q = self.base.order() as u128;
        let c = (0..self.degree)
            .map(|_| {
                let d = (t % q) as Fq;
                t /= q;
                d
            })
            .collect();
        poly::trim(c)
    }

    /// `tr(a) = sum_{i<o} a^(q^i)`, evaluated through the traces of the powers
    /// of the generator.
    pub fn trace(&self, a: &[Fq]) -> Fq {
        a.iter()
            .zip(&self.trace_basis)
            .fold(0, |acc, (&c, &t)| self.base.add(acc, self.base.mul(c, t)))
    }

    /// The same trace by summing Frobenius images.
    pub fn trace_by_frobenius(&self, a: &[Fq]) -> Poly {
        let mut acc = Vec::new();
        let mut y = poly::trim(a.to_vec());
        for _ in 0..self.degree {
            acc = self.add(&acc, &y);
            y = self.frobenius(&y);
        }
        acc
    }

    /// Multiplicative order of a nonzero element, given `q^o - 1` factored.
    fn has_order(&self, a: &[Fq], n: u128, primes: &[u128]) -> bool {
        self.pow(a, n) == self.one() && primes.iter().all(|&r| self.pow(a, n / r) != self.one())
    }

    /// `zeta_n = g^((q^o - 1)/n)` for the least primitive element `g`.
    ///
    /// When `q^o - 1` does not fit in 64 bits its factorisation is not
    /// attempted; `g` is then the least element whose power has order `n`.
    pub fn root_of_unity(&self, n: u64) -> Result<Poly> {
        let m = self.order - 1;
        if n == 0 || !m.is_multiple_of(n as u128) {
            return Err(Error::NoSuchRoot { n, field_order: self.order });
        }
        let e = m / n as u128;
        let n_primes: Vec<u128> = prime_divisors(n).into_iter().map(u128::from).collect();
        if let Ok(m64) = u64::try_from(m) {
            let primes: Vec<u128> = factorize(m64).into_iter().map(|(r, _)| r as u128).collect();
            let g = (1..self.order)
                .map(|t| self.from_index(t))
                .find(|g| self.has_order(g, m, &primes))
                .expect("multiplicative group is cyclic");
            return Ok(self.pow(&g, e));
        }
        let z = (1..self.order)
            .map(|t| self.pow(&self.from_index(t), e))
            .find(|z| self.has_order(z, n as u128, &n_primes))
            .expect("an element of order n exists");
        Ok(z)
    }
}

/// Power sums `s_i = sum alpha^i` over the roots of the monic `m`, `i < deg m`.
pub(super) fn newton_power_sums(f: &FiniteField, m: &[Fq]) -> Vec<Fq> {
    let d = m.len() - 1;
    // m = x^d + a_{d-1} x^{d-1} + ... + a_0; e_k = (-1)^k a_{d-k}
    let a = |i: usize| m[i];
    let mut s = vec![0; d.max(1)];
    s[0] = f.from_int(d as i64);
    for k in 1..d {
        let mut t = f.mul(f.from_int(k as i64), a(d - k));
        for i in 1..k {
            t = f.add(t, f.mul(a(d - i), s[k - i]));
        }
        s[k] = f.neg(t);
    }
    s
}
