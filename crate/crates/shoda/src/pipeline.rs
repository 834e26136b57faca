//! The decomposition pipeline with the per-`N` branches, the orbit
//! computations and the idempotents spread over the rayon pool. Results are
//! collected in lattice order, so output does not depend on the thread count.

use rayon::prelude::*;

use shoda_core::arith::{gcd, prime_power};
use shoda_core::cyclo::{orbits_and_stabilizer, OrbitData};
use shoda_core::gf::FiniteField;
use shoda_core::group::Group;
use shoda_core::idempotents::{idempotent_set, GroupAlgebra, IdempotentEntry};
use shoda_core::lattice::normal_subgroups;
use shoda_core::shoda::{assemble, branch, ShodaPair};
use shoda_core::wedderburn::Decomposition;
use shoda_core::{Error, Result};

pub struct Analysis {
    pub pairs: Vec<(ShodaPair, OrbitData)>,
    pub decomposition: Decomposition,
}

pub fn check_q(g: &Group, q: u64) -> Result<()> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let order = g.order() as u64;
    if gcd(q, order) != 1 {
        return Err(Error::NotCoprime { q, order });
    }
    Ok(())
}

pub fn analyse(g: &Group, q: u64) -> Result<Analysis> {
    check_q(g, q)?;
    let lattice = normal_subgroups(g);
    let branches = lattice.normals.par_iter().map(|n| branch(g, &lattice, n, None)).collect();
    let pairs: Vec<(ShodaPair, OrbitData)> = assemble(branches)
        .into_par_iter()
        .map(|p| orbits_and_stabilizer(g, &p, q).map(|od| (p, od)))
        .collect::<Result<_>>()?;
    let decomposition = Decomposition::from_pairs(g, q, &pairs)?;
    Ok(Analysis { pairs, decomposition })
}

/// `e_C(G,A,D)` for every pair and orbit, in pair order.
pub fn idempotents(g: &Group, field: &FiniteField, pairs: &[(ShodaPair, OrbitData)]) -> Result<Vec<IdempotentEntry>> {
    let alg = GroupAlgebra::new(g, field);
    let per_pair: Vec<Vec<IdempotentEntry>> = pairs
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let mut entries = idempotent_set(&alg, std::slice::from_ref(p))?;
            entries.iter_mut().for_each(|e| e.pair = i);
            Ok(entries)
        })
        .collect::<Result<_>>()?;
    Ok(per_pair.into_iter().flatten().collect())
}
