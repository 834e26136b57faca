//! Polycyclic presentations.
//!
//! Generators `g_0, ..., g_{k-1}` with relative orders `m_i`, power relations
//! `g_i^{m_i} = w_i` and conjugation relations `g_i^-1 g_j g_i = w_{ij}`
//! (`j > i`), every right-hand side a word in `g_{i+1}, ...`. Elements are the
//! collected normal forms `g_0^{e_0} ... g_{k-1}^{e_{k-1}}`, `0 <= e_i < m_i`.
//!
//! The right-multiplication tables are built bottom-up along the series
//! `G_{k-1} < ... < G_0`: multiplying `g_l^e s` (with `s` in `G_{l+1}`) by `g_l`
//! collects to `g_l^{e+1} s^{g_l}`, and the conjugation automorphism of
//! `G_{l+1}` is evaluated with the tables of the lower level. Consistency is
//! then verified by checking every defining relation on the regular action.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Backend, Group};
use crate::error::{Error, Result};

/// A word as `(generator, exponent)` letters; negative exponents allowed.
pub type Word = Vec<(usize, i64)>;

#[derive(Clone, Debug, Default)]
pub struct PcPresentation {
    orders: Vec<u32>,
    powers: BTreeMap<usize, Word>,
    conjugates: BTreeMap<(usize, usize), Word>,
}

impl PcPresentation {
    pub fn new(relative_orders: &[u32]) -> Self {
        PcPresentation { orders: relative_orders.to_vec(), ..Default::default() }
    }

    pub fn relative_orders(&self) -> &[u32] {
        &self.orders
    }

    /// `g_i^{m_i} = word`.
    pub fn power(mut self, i: usize, word: Word) -> Self {
        self.powers.insert(i, word);
        self
    }

    /// `g_i^-1 g_j g_i = word` for `j > i`.
    pub fn conjugate(mut self, j: usize, i: usize, word: Word) -> Self {
        self.conjugates.insert((j, i), word);
        self
    }

    /// Exponent-vector form `[e_0, ..., e_{k-1}]` of a word.
    pub fn exponent_word(exps: &[u32]) -> Word {
        exps.iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i, e as i64))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let k = self.orders.len();
        if let Some(&m) = self.orders.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidGroup(format!("relative order {m} < 2")));
        }
        let check = |w: &Word, above: usize, what: &str| -> Result<()> {
            for &(g, _) in w {
                if g >= k || g <= above {
                    return Err(Error::InvalidGroup(format!(
                        "{what}: letter g{g} is not below generator g{above}"
                    )));
                }
            }
            Ok(())
        };
        for (&i, w) in &self.powers {
            if i >= k {
                return Err(Error::InvalidGroup(format!("power relation for missing g{i}")));
            }
            check(w, i, "power relation")?;
        }
        for (&(j, i), w) in &self.conjugates {
            if j >= k || i >= j {
                return Err(Error::InvalidGroup(format!("conjugate relation ({j},{i})")));
            }
            check(w, i, "conjugate relation")?;
        }
        Ok(())
    }

    pub fn build(&self, cap: usize) -> Result<Group> {
        self.validate()?;
        let k = self.orders.len();
        let m: Vec<usize> = self.orders.iter().map(|&x| x as usize).collect();
        // size[l] = |G_l|
        let mut size = vec![1usize; k + 1];
        for l in (0..k).rev() {
            size[l] = size[l + 1]
                .checked_mul(m[l])
                .filter(|&s| s <= cap)
                .ok_or(Error::OrderLimitExceeded { cap })?;
        }
        let n = size[0];
        let stride = |i: usize| size[i + 1];
        let mut table: Vec<Vec<u32>> = vec![vec![u32::MAX; n]; k];

        for l in (0..k).rev() {
            let sub = size[l + 1];
            let mul_sub = |table: &Vec<Vec<u32>>, u: u32, v: u32| -> u32 {
                let mut digits = vec![0usize; k];
                let mut r = v as usize;
                for j in (l + 1..k).rev() {
                    digits[j] = r % m[j];
                    r /= m[j];
                }
                let mut z = u;
                for j in l + 1..k {
                    for _ in 0..digits[j] {
                        z = table[j][z as usize];
                    }
                }
                z
            };
            let eval = |table: &Vec<Vec<u32>>, w: &Word| -> u32 {
                let mut z = 0u32;
                for &(g, e) in w {
                    let mut ord = 1i64;
                    let mut y = table[g][0];
                    while y != 0 {
                        y = table[g][y as usize];
                        ord += 1;
                    }
                    for _ in 0..e.rem_euclid(ord) {
                        z = table[g][z as usize];
                    }
                }
                z
            };
            let images: Vec<u32> = (0..k)
                .map(|j| {
                    if j <= l {
                        return 0;
                    }
                    match self.conjugates.get(&(j, l)) {
                        Some(w) => eval(&table, w),
                        None => stride(j) as u32,
                    }
                })
                .collect();
            let mut phi = vec![0u32; sub];
            for s in 1..sub {
                let mut r = s;
                let mut last = k - 1;
                while r % m[last] == 0 {
                    r /= m[last];
                    last -= 1;
                }
                phi[s] = mul_sub(&table, phi[s - stride(last)], images[last]);
            }
            let w = self.powers.get(&l).map_or(0, |w| eval(&table, w));
            for e in 0..m[l] {
                for s in 0..sub {
                    let x = e * sub + s;
                    for j in l + 1..k {
                        let v = (e * sub) as u32 + table[j][s];
                        table[j][x] = v;
                    }
                    table[l][x] = if e + 1 < m[l] {
                        ((e + 1) * sub) as u32 + phi[s]
                    } else {
                        mul_sub(&table, w, phi[s])
                    };
                }
            }
        }

        self.check_relations(&table, n)?;
        Group::from_regular_action(table, n, Backend::Polycyclic { relative_orders: self.orders.clone() })
    }

    /// Verifies every defining relation on the regular action. If they all hold,
    /// the permutations generate a transitive quotient of the presented group
    /// on `n = prod m_i` points, so the presented group has exactly `n` elements.
    fn check_relations(&self, table: &[Vec<u32>], n: usize) -> Result<()> {
        let k = table.len();
        let mut inv = Vec::with_capacity(k);
        for (l, perm) in table.iter().enumerate() {
            let mut p = vec![u32::MAX; n];
            for (x, &y) in perm.iter().enumerate() {
                if p[y as usize] != u32::MAX {
                    return Err(Error::InconsistentPresentation(format!(
                        "generator g{l} does not act bijectively on normal forms"
                    )));
                }
                p[y as usize] = x as u32;
            }
            inv.push(p);
        }
        let apply = |x: u32, w: &[(usize, i64)]| -> u32 {
            let mut z = x;
            for &(g, e) in w {
                let perm = if e >= 0 { &table[g] } else { &inv[g] };
                for _ in 0..e.unsigned_abs() {
                    z = perm[z as usize];
                }
            }
            z
        };
        for l in 0..k {
            let lhs = [(l, self.orders[l] as i64)];
            let rhs = self.powers.get(&l).cloned().unwrap_or_default();
            if (0..n as u32).any(|x| apply(x, &lhs) != apply(x, &rhs)) {
                return Err(Error::InconsistentPresentation(format!(
                    "power relation of g{l} fails; fewer than {n} normal forms"
                )));
            }
            for j in l + 1..k {
                // g_j g_l = g_l (g_j)^{g_l}
                let lhs = [(j, 1), (l, 1)];
                let mut rhs: Word = vec![(l, 1)];
                match self.conjugates.get(&(j, l)) {
                    Some(w) => rhs.extend_from_slice(w),
                    None => rhs.push((j, 1)),
                }
                if (0..n as u32).any(|x| apply(x, &lhs) != apply(x, &rhs)) {
                    return Err(Error::InconsistentPresentation(format!(
                        "conjugation relation (g{j})^(g{l}) fails; fewer than {n} normal forms"
                    )));
                }
            }
        }
        Ok(())
    }
}
