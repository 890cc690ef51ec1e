//! Balanced circular arrangements of two letters.
//!
//! Builds mechanical (Christoffel) words three ways: the ceiling formula, a
//! Euclid-ladder construction, and Smith's continued-fraction recursion. Also
//! decides when `n` spots with `k` letters `A` can be arranged so that every
//! run of `s` consecutive spots holds at least `t` of them (exactly when
//! `n t <= k s`), and checks all of it against exhaustive search.

pub mod admissibility;
pub mod cli;
pub mod error;
pub mod euclid;
pub mod oracle;
pub mod rotation;
pub mod sweep;
pub mod words;

pub use admissibility::{
    complement_check, construct_admissible, criterion, discrepancy, discrepancy_bound,
    is_admissible, window_weight_profile, AdmissibilityQuery, AdmissibilityVerdict,
    Configuration, WindowReport,
};
pub use error::{Error, Result};
pub use euclid::{
    arrange, arrange_traced, cf_expansion, euclid_trace, recurrence_reconstruct, smith_ladder,
    smith_to_mechanical, smith_word, Arrangement, CfExpansion, EuclidTrace, Symbol,
    SymbolSequence,
};
pub use oracle::{brute_force_exists, brute_force_exists_with, pigeonhole_witness, OracleOptions, OracleResult};
pub use rotation::{canonical_rotation, rotation_equivalent};
pub use words::{
    check_balance, concat, factor, mechanical_word, power, weight, Alphabet, BalanceReport,
    BinaryWord, Letter, PeriodicWord, Slope,
};
