//! Euler characteristics and volumes of arithmetic subgroups of SO(1, 2r).

pub mod covolume;
pub mod error;
pub mod exact;
pub mod localdata;
pub mod numberfields;
pub mod sieve;
pub mod zeta;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/exact.md")]
    pub struct Exact;
    #[doc = include_str!("../../../book/src/zeta.md")]
    pub struct Zeta;
    #[doc = include_str!("../../../book/src/localdata.md")]
    pub struct LocalData;
    #[doc = include_str!("../../../book/src/covolume.md")]
    pub struct Covolume;
    #[doc = include_str!("../../../book/src/sieve.md")]
    pub struct Sieve;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
