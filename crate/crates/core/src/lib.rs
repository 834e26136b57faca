#![no_std]

extern crate alloc;

pub mod abelian;
pub mod arith;
pub mod cyclo;
pub mod error;
pub mod families;
pub mod gf;
pub mod group;
pub mod idempotents;
pub mod lattice;
pub mod oracle;
pub mod shoda;
pub mod wedderburn;

pub use error::{Error, Result};
