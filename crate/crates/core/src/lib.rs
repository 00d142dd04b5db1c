pub mod cli;
pub mod error;
pub mod freeprod;
pub mod groupring;
pub mod perm;
pub mod presentation;
pub mod primes;
pub mod suite;
pub mod thompson;
pub mod tower;

pub use error::{Error, Result};
