use alloc::vec;
use alloc::vec::Vec;

use super::{Backend, Elem, Group, Subgroup};
use crate::error::{Error, Result};

/// The quotient `K/N` with its projection and a section.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub quotient: Group,
    /// Image of each parent element; `u32::MAX` for elements outside `K`.
    pub projection: Vec<Elem>,
    /// Least coset representative of each quotient element.
    pub section: Vec<Elem>,
}

impl QuotientData {
    #[inline]
    pub fn project(&self, x: Elem) -> Elem {
        self.projection[x as usize]
    }
}

/// `K/N` for `N` normal in `K`. Cosets are ordered by their least member.
pub fn quotient(g: &Group, k: &Subgroup, n: &Subgroup) -> Result<QuotientData> {
    if !n.is_subgroup_of(k) || !n.is_normal_in(g, k) {
        return Err(Error::NotNormal);
    }
    let mut projection = vec![u32::MAX; g.order()];
    let mut section = Vec::with_capacity(k.order() / n.order());
    for &x in k.members() {
        if projection[x as usize] != u32::MAX {
            continue;
        }
        let id = section.len() as u32;
        section.push(x);
        for &y in n.members() {
            projection[g.mul(x, y) as usize] = id;
        }
    }
    let right: Vec<Vec<Elem>> = k
        .generators()
        .iter()
        .map(|&s| section.iter().map(|&r| projection[g.mul(r, s) as usize]).collect())
        .collect();
    let quotient = Group::from_regular_action(right, section.len(), Backend::Quotient)?;
    Ok(QuotientData { quotient, projection, section })
}
