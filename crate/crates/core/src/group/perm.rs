use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{Backend, Group};
use crate::error::{Error, Result};

impl Group {
    /// Group generated by permutations of `0..degree`, given as image lists.
    ///
    /// Elements are sorted by image tuple. Products act on the right:
    /// `i^(xy) = (i^x)^y`.
    pub fn from_permutations(degree: usize, gens: &[Vec<u32>], cap: usize) -> Result<Group> {
        for g in gens {
            if g.len() != degree {
                return Err(Error::InvalidGroup(format!(
                    "permutation of length {} on {} points",
                    g.len(),
                    degree
                )));
            }
            let mut seen = alloc::vec![false; degree];
            for &i in g {
                if i as usize >= degree || core::mem::replace(&mut seen[i as usize], true) {
                    return Err(Error::InvalidGroup("not a permutation".into()));
                }
            }
        }
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut found: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
        found.insert(identity.clone(), ());
        let mut frontier = alloc::vec![identity];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y: Vec<u32> = x.iter().map(|&i| g[i as usize]).collect();
                if !found.contains_key(&y) {
                    if found.len() >= cap {
                        return Err(Error::OrderLimitExceeded { cap });
                    }
                    found.insert(y.clone(), ());
                    frontier.push(y);
                }
            }
        }
        let images: Vec<Vec<u32>> = found.into_keys().collect();
        let index: BTreeMap<&[u32], u32> = images
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i as u32))
            .collect();
        let right: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| {
                images
                    .iter()
                    .map(|x| {
                        let y: Vec<u32> = x.iter().map(|&i| g[i as usize]).collect();
                        index[y.as_slice()]
                    })
                    .collect()
            })
            .collect();
        let order = images.len();
        Group::from_regular_action(right, order, Backend::Permutation { degree, images })
    }

    /// Image list of an element of a permutation group.
    pub fn permutation(&self, x: u32) -> Option<&[u32]> {
        match self.backend() {
            Backend::Permutation { images, .. } => Some(&images[x as usize]),
            _ => None,
        }
    }

    /// Element index of a permutation, if it belongs to the group.
    pub fn find_permutation(&self, p: &[u32]) -> Option<u32> {
        match self.backend() {
            Backend::Permutation { images, .. } => images
                .binary_search_by(|x| x.as_slice().cmp(p))
                .ok()
                .map(|i| i as u32),
            _ => None,
        }
    }
}

/// Parses cycle notation such as `(1 2 3)(4 5)` (1-based points) into an
/// image list on `degree` points.
pub fn cycles_to_images(cycles: &[Vec<u32>], degree: usize) -> Vec<u32> {
    let mut img: Vec<u32> = (0..degree as u32).collect();
    for c in cycles {
        for i in 0..c.len() {
            img[(c[i] - 1) as usize] = c[(i + 1) % c.len()] - 1;
        }
    }
    img
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::check_group_axioms;

    fn s3() -> Group {
        let a = cycles_to_images(&[alloc::vec![1, 2, 3]], 3);
        let b = cycles_to_images(&[alloc::vec![1, 2]], 3);
        Group::from_permutations(3, &[a, b], 1000).unwrap()
    }

    #[test]
    fn symmetric_group_of_degree_three() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.permutation(0).unwrap(), &[0, 1, 2]);
        assert!(check_group_axioms(&g, 0, 1));
        assert!(!g.is_abelian());
    }

    #[test]
    fn trivial_group_on_one_point() {
        let g = Group::from_permutations(1, &[], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.is_cyclic());
    }

    #[test]
    fn composition_acts_on_the_right() {
        let g = s3();
        let a = g.find_permutation(&[1, 2, 0]).unwrap();
        let b = g.find_permutation(&[1, 0, 2]).unwrap();
        // i^(ab) = (i^a)^b: 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1
        assert_eq!(g.permutation(g.mul(a, b)).unwrap(), &[0, 2, 1]);
    }

    #[test]
    fn cap_is_enforced() {
        let a = cycles_to_images(&[alloc::vec![1, 2, 3, 4, 5]], 5);
        let b = cycles_to_images(&[alloc::vec![1, 2]], 5);
        assert_eq!(
            Group::from_permutations(5, &[a, b], 100).unwrap_err(),
            Error::OrderLimitExceeded { cap: 100 }
        );
    }
}
