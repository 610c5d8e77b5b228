//! Exact character theory of the symmetric groups.
//!
//! The crate computes irreducible characters of `S_n` with the
//! Murnaghan-Nakayama rule, evaluates closed-form character polynomials for
//! near-hook shapes, computes class-algebra structure constants (with a
//! brute-force permutation oracle) and searches for pairs of conjugacy
//! classes on which every non-linear irreducible character vanishes on at
//! least one member.

pub mod cache;
pub mod class_algebra;
pub mod error;
pub mod formula;
pub mod mn;
pub mod partition;
pub mod suites;
pub mod vanishing;

pub use cache::TableCache;
pub use class_algebra::{
    merge_lemma_check, predicted_coefficient, structure_constant, structure_constant_bruteforce,
    Permutation, Predicted, DEFAULT_BRUTE_FORCE_LIMIT,
};
pub use error::{Error, Result};
pub use formula::{
    hook_char_recursive, induced_value, near_hook_value, two_row_char_recursive, InnerCharacter,
    NearHookShape,
};
pub use mn::{
    border_strip_removals, character_table, degree, hook_length, mn_char, sign_value, CharTable,
    CharValue, MnEngine, RimHookRemoval,
};
pub use partition::{
    dominance_compare, format_partition, parse_partition, partitions_of, DominanceResult,
    MultiplicityVector, Partition,
};
pub use vanishing::{
    covers_all_nonlinear, find_covering_pairs, k_of_sn, vanishing_set, verify_main_theorem,
    CoveringPair, CoveringPairReport, PruningStats, TheoremCheck,
};
