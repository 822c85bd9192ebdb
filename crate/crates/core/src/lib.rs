//! Factorability structures on monoids: local factorization tables and
//! their normal forms, the induced rewriting systems, index sequences,
//! Morse matchings on the normalized bar complex with the resulting small
//! complex and its homology, and factorability of Garside monoids and
//! groups.

pub mod error;
pub mod factorability;
pub mod fixtures;
pub mod foundation;
pub mod garside;
pub mod indexseq;
pub mod morse;
pub mod rewriting;
pub mod spec_file;

pub use error::{Error, Result};
pub use factorability::{PhiMonoid, PhiTable};
pub use foundation::{Alphabet, FactorableMonoid, FiniteMonoid, FiniteTable, Letter, Pointed, Word};
pub use garside::{ArtinMonoid, CoxeterMatrix, GarsideGroup, GarsideStructure, GroupElement};
pub use indexseq::IndexSequence;
pub use rewriting::{RewriteSystem, Strategy};
pub use spec_file::{Loaded, MonoidSpec};
