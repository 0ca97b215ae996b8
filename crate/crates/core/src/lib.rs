//! Rare correlated itemset mining under the `bond` measure.
//!
//! `bond(X) = Supp(∧X) / Supp(∨X)` is the Jaccard index of the tidsets of the
//! items of `X`. A pattern is *rare correlated* when its conjunctive support is
//! strictly below `minsupp` (and nonzero) and its bond is at least `minbond`.
//! The crate mines that set, three exact concise representations of it and one
//! approximate one, and answers queries against the representations.
//!
//! Everything here is `no_std` with `alloc`. File formats, the CLI and
//! threaded execution live in the `rbm` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;

pub mod closure;
pub mod exec;
pub mod measures;
pub mod miner;
pub mod oracle;
pub mod pattern;
pub mod rational;
pub mod representations;
pub mod tidset;
pub mod transactions;

pub use closure::{
    conjunctive_closure, disjunctive_closure, f_bond_closure, is_minimal_correlated, ClosureTriple,
};
pub use error::{Error, Result};
pub use exec::{Executor, Sequential};
pub use measures::{
    bond, conjunctive_support, cross_support_trivial_threshold, cross_support_violates,
    disjunctive_support, negative_support, MeasuredPattern,
};
pub use miner::{
    apriori_gen, derive_rminmf, derive_rminmmaxf, derive_rmmaxf, extract_mcmax, mine_mcr,
    mine_rmcr, Miner, MiningParams, MiningStats, Prunes,
};
pub use oracle::{oracle_f_bond, oracle_mcr, oracle_representation, oracle_sets, OracleSets};
pub use pattern::{Item, Pattern};
pub use rational::Rational;
pub use representations::{
    approximate_query, query_pattern, regenerate_all, BoundsAnswer, QueryAnswer, Range,
    Representation, RepresentationKind, RoleFlaggedPattern, Roles,
};
pub use tidset::TidSet;
pub use transactions::TransactionDatabase;

#[cfg(test)]
pub(crate) mod testutil;
