//! Character theory of finite groups: irreducible character tables, the dual
//! action of an automorphism on them, and the character identities tying
//! fixed irreducible characters to twisted conjugacy classes.

mod cyclotomic;
mod inner;
mod isogredience;
mod table;

use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicField, CyclotomicLift};
pub use inner::{
    induced_trivial_character, twisted_coinvariants_dimension,
    twisted_coinvariants_dimension_full, twisted_inner_character, ClassFunction,
    TwistedInnerReport,
};
pub use isogredience::{isogredience_count, IsogredienceReport};
pub use table::{
    dual_action, tbft_check, tbft_check_with, CharacterTable, CharacterTableJson, DualAction,
    TablePair, TbftReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("PrimeSearchFailed: no prime below 2^31 fits the group exponent")]
    PrimeSearchFailed,
    #[error("RowMatchFailed: image of row {row} under the dual action matches no single row")]
    RowMatchFailed { row: usize },
    #[error("InconsistentPrimes: {first_count} fixed characters mod {first}, {second_count} mod {second}")]
    InconsistentPrimes { first: u64, second: u64, first_count: usize, second_count: usize },
    #[error("LiftFailed: row {row}, class {class} has no cyclotomic lift")]
    LiftFailed { row: usize, class: usize },
    #[error("Inconsistent: {0}")]
    Inconsistent(String),
}
