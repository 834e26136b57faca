//! Finite groups given by their right regular action.
//!
//! Every backend (permutation generators, polycyclic presentations, quotients)
//! ends up as a [`Group`]: elements are `0..order` in canonical order with the
//! identity at index 0, and each generator is stored as the permutation
//! `x -> x * g` of element indices. Products are evaluated along a shortest
//! generator word of the right factor, or read from a Cayley table for small
//! groups.

mod bitset;
mod pc;
mod perm;
mod quotient;
mod subgroup;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::lcm;
use crate::error::{Error, Result};

pub use bitset::BitSet;
pub use pc::{PcPresentation, Word};
pub use perm::cycles_to_images;
pub use quotient::{quotient, QuotientData};
pub use subgroup::{
    conjugacy_classes, core, normal_closure, normalizer, subgroup_closure, ConjugacyClasses,
    Subgroup,
};

/// Element index inside a [`Group`].
pub type Elem = u32;

/// Default cap on the number of enumerated elements.
pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

const CAYLEY_TABLE_LIMIT: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    /// Images of every element on `0..degree`, in element order.
    Permutation { degree: usize, images: Vec<Vec<u32>> },
    /// Relative orders of the polycyclic generating sequence; elements are
    /// exponent vectors in mixed radix with the first generator most significant.
    Polycyclic { relative_orders: Vec<u32> },
    Quotient,
}

#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    gens: Vec<Elem>,
    right: Vec<Vec<Elem>>,
    right_inv: Vec<Vec<Elem>>,
    word_start: Vec<u32>,
    word_data: Vec<u8>,
    inverse: Vec<Elem>,
    table: Option<Vec<Elem>>,
    backend: Backend,
}

impl Group {
    /// Builds a group from the permutations `x -> x * g` of its own elements.
    ///
    /// Point 0 must be the identity; the point order becomes the element order.
    pub fn from_regular_action(right: Vec<Vec<Elem>>, order: usize, backend: Backend) -> Result<Self> {
        if right.len() > u8::MAX as usize {
            return Err(Error::InvalidGroup("too many generators".into()));
        }
        let mut right_inv = Vec::with_capacity(right.len());
        for perm in &right {
            if perm.len() != order {
                return Err(Error::InvalidGroup("generator action has wrong length".into()));
            }
            let mut inv = vec![u32::MAX; order];
            for (x, &y) in perm.iter().enumerate() {
                if y as usize >= order || inv[y as usize] != u32::MAX {
                    return Err(Error::InvalidGroup("generator action is not a permutation".into()));
                }
                inv[y as usize] = x as u32;
            }
            right_inv.push(inv);
        }

        // breadth-first spanning tree gives shortest positive words
        let mut parent = vec![u32::MAX; order];
        let mut label = vec![0u8; order];
        let mut depth = vec![0u32; order];
        let mut queue = VecDeque::new();
        parent[0] = 0;
        queue.push_back(0u32);
        let mut bfs_order = Vec::with_capacity(order);
        while let Some(x) = queue.pop_front() {
            bfs_order.push(x);
            for (l, perm) in right.iter().enumerate() {
                let y = perm[x as usize];
                if parent[y as usize] == u32::MAX {
                    parent[y as usize] = x;
                    label[y as usize] = l as u8;
                    depth[y as usize] = depth[x as usize] + 1;
                    queue.push_back(y);
                }
            }
        }
        if bfs_order.len() != order {
            return Err(Error::InvalidGroup("generators do not act transitively".into()));
        }

        let mut word_start = Vec::with_capacity(order + 1);
        let total: usize = depth.iter().map(|&d| d as usize).sum();
        let mut word_data = vec![0u8; total];
        let mut pos = 0usize;
        for x in 0..order {
            word_start.push(pos as u32);
            let d = depth[x] as usize;
            let mut y = x;
            for i in (0..d).rev() {
                word_data[pos + i] = label[y];
                y = parent[y] as usize;
            }
            pos += d;
        }
        word_start.push(pos as u32);

        let gens = right.iter().map(|p| p[0]).collect();
        let mut g = Group {
            order,
            gens,
            right,
            right_inv,
            word_start,
            word_data,
            inverse: Vec::new(),
            table: None,
            backend,
        };
        g.inverse = (0..order as u32)
            .map(|x| {
                let mut y = 0u32;
                for &l in g.word(x).iter().rev() {
                    y = g.right_inv[l as usize][y as usize];
                }
                y
            })
            .collect();
        if order <= CAYLEY_TABLE_LIMIT {
            // x y = (x parent(y)) label(y), filled along the spanning tree
            let mut table = vec![0u32; order * order];
            for x in 0..order {
                let row = &mut table[x * order..(x + 1) * order];
                row[0] = x as u32;
                for &y in &bfs_order[1..] {
                    let y = y as usize;
                    row[y] = g.right[label[y] as usize][row[parent[y] as usize] as usize];
                }
            }
            g.table = Some(table);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    /// Element indices of the generators used for the regular action.
    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    /// The right-multiplication permutation of generator `l`.
    pub fn generator_action(&self, l: usize) -> &[Elem] {
        &self.right[l]
    }

    fn word(&self, y: Elem) -> &[u8] {
        let s = self.word_start[y as usize] as usize;
        let e = self.word_start[y as usize + 1] as usize;
        &self.word_data[s..e]
    }

    #[inline]
    fn mul_by_word(&self, x: Elem, y: Elem) -> Elem {
        let mut z = x;
        for &l in self.word(y) {
            z = self.right[l as usize][z as usize];
        }
        z
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        match &self.table {
            Some(t) => t[x as usize * self.order + y as usize],
            None => self.mul_by_word(x, y),
        }
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inverse[x as usize]
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x^-1 y^-1 x y`.
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: Elem, mut k: u64) -> Elem {
        let mut acc = 0;
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn elem_order(&self, x: Elem) -> u64 {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as u32
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> u64 {
        self.elements().fold(1, |acc, x| lcm(acc, self.elem_order(x)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|x| self.elem_order(x) == self.order as u64)
    }

    /// Exponent vector of an element of a polycyclic group.
    pub fn exponents(&self, x: Elem) -> Option<Vec<u32>> {
        match &self.backend {
            Backend::Polycyclic { relative_orders } => {
                let mut e = vec![0; relative_orders.len()];
                let mut r = x;
                for (i, &m) in relative_orders.iter().enumerate().rev() {
                    e[i] = r % m;
                    r /= m;
                }
                Some(e)
            }
            _ => None,
        }
    }
}

/// Invariants expected of every group: identity, inverses, associativity
/// (exhaustive up to 512 elements, sampled above).
pub fn check_group_axioms(g: &Group, samples: usize, seed: u64) -> bool {
    use rand_core::{RngCore, SeedableRng};
    let n = g.order() as u32;
    for x in g.elements() {
        if g.mul(0, x) != x || g.mul(x, 0) != x || g.mul(x, g.inv(x)) != 0 {
            return false;
        }
    }
    if n <= 512 {
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul(x, y);
                for &z in g.generators() {
                    if g.mul(xy, z) != g.mul(x, g.mul(y, z)) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let x = rng.next_u32() % n;
        let y = rng.next_u32() % n;
        let z = rng.next_u32() % n;
        g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z))
    })
}
