//! Plactic monoid centralizers.
//!
//! Row insertion and jeu de taquin on semistandard tableaux, Knuth
//! equivalence, finite slices of the centralizer `C(u) = {w : uw ≡ wu}`,
//! closed-form membership tests, stability probes for powers `u^k`, and the
//! exact counting machinery for `c_{n,m}(u)` and its binomial-basis
//! coefficients.

pub mod characterize;
pub mod config;
pub mod counting;
pub mod error;
pub mod exact;
pub mod plactic;
pub mod stability;
pub mod tableaux;
pub mod words;

pub use config::Config;
pub use error::{Error, Result};
pub use words::{Letter, Word};
