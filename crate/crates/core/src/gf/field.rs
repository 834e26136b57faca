use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{is_prime, pow_mod, prime_divisors, prime_power};
use crate::error::{Error, Result};

/// Largest field order handled with log/exp tables.
pub const TABLE_LIMIT: u64 = 1 << 20;

/// Element of `F_q` encoded as `sum c_i p^i` over the polynomial basis.
pub type Fq = u32;

/// The finite field `F_q`, `q = p^k`.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic irreducible of degree `k` over `F_p`, lowest coefficient first.
    modulus: Vec<u32>,
    exp: Vec<Fq>,
    log: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    pub fn new(q: u64) -> Result<FiniteField> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > TABLE_LIMIT {
            return Err(Error::FieldTooLarge(p, k as u64));
        }
        if k == 1 {
            return Ok(Self::prime(p as u32));
        }
        let prime = Self::prime(p as u32);
        let modulus = super::poly::least_irreducible(&prime, k as usize);
        let mut f = FiniteField { p: p as u32, k, q: q as u32, modulus, exp: Vec::new(), log: Vec::new() };
        let order = q - 1;
        let primes = prime_divisors(order);
        let g = (2..q as u32)
            .find(|&g| primes.iter().all(|&r| f.pow_raw(g, order / r) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0; order as usize];
        let mut log = vec![u32::MAX; q as usize];
        let mut x = 1;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = x;
            log[x as usize] = i as u32;
            x = f.mul_raw(x, g);
        }
        f.exp = exp;
        f.log = log;
        Ok(f)
    }

    /// The prime field `F_p`.
    pub fn prime(p: u32) -> FiniteField {
        debug_assert!(is_prime(p as u64));
        FiniteField { p, k: 1, q: p, modulus: vec![0, 1], exp: Vec::new(), log: Vec::new() }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> Fq {
        0
    }

    pub fn one(&self) -> Fq {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fq {
        n.rem_euclid(self.p as i64) as Fq
    }

    pub fn digits(&self, x: Fq) -> Vec<u32> {
        let mut x = x;
        (0..self.k)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn from_digits(&self, d: &[u32]) -> Fq {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    #[inline]
    pub fn add(&self, x: Fq, y: Fq) -> Fq {
        if self.k == 1 {
            let s = x + y;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut x, mut y) = (x, y);
        let mut out = 0;
        let mut place = 1;
        while x > 0 || y > 0 {
            out += (x % self.p + y % self.p) % self.p * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, x: Fq) -> Fq {
        if self.k == 1 {
            return if x == 0 { 0 } else { self.p - x };
        }
        let d: Vec<u32> = self.digits(x).iter().map(|&c| (self.p - c) % self.p).collect();
        self.from_digits(&d)
    }

    #[inline]
    pub fn sub(&self, x: Fq, y: Fq) -> Fq {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Fq, y: Fq) -> Fq {
        if self.k == 1 {
            return ((x as u64 * y as u64) % self.p as u64) as Fq;
        }
        if x == 0 || y == 0 {
            return 0;
        }
        let s = self.log[x as usize] as u64 + self.log[y as usize] as u64;
        self.exp[(s % (self.q as u64 - 1)) as usize]
    }

    pub fn inv(&self, x: Fq) -> Fq {
        assert!(x != 0, "inverse of zero");
        if self.k == 1 {
            return pow_mod(x as u64, self.p as u64 - 2, self.p as u64) as Fq;
        }
        let l = self.log[x as usize];
        self.exp[((self.q - 1 - l) % (self.q - 1)) as usize]
    }

    pub fn pow(&self, x: Fq, e: u128) -> Fq {
        let mut acc = 1;
        let mut base = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Product by polynomial arithmetic modulo the defining polynomial.
    fn mul_raw(&self, x: Fq, y: Fq) -> Fq {
        let p = self.p as u64;
        let (a, b) = (self.digits(x), self.digits(y));
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + a[i] as u64 * b[j] as u64) % p;
            }
        }
        for i in (k..2 * k).rev() {
            let c = prod[i];
            if c != 0 {
                for j in 0..k {
                    prod[i - k + j] = (prod[i - k + j] + (p - c) * self.modulus[j] as u64) % p;
                }
                prod[i] = 0;
            }
        }
        let d: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.from_digits(&d)
    }

    fn pow_raw(&self, x: Fq, mut e: u64) -> Fq {
        let mut acc = 1;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    /// Coefficient tuple over `F_p`, e.g. `(1,0,2)`; a bare integer for prime fields.
    pub fn format(&self, x: Fq) -> String {
        if self.k == 1 {
            return format!("{x}");
        }
        let d: Vec<String> = self.digits(x).iter().map(|c| format!("{c}")).collect();
        format!("({})", d.join(","))
    }
}
