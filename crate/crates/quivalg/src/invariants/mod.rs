//! Stable invariants of finite-dimensional quiver algebras: Cartan data,
//! commutator space and center, radical/socle structure, Külshammer towers,
//! symmetrizing forms with orthogonal quotients, structural predicates, and
//! Hochschild cohomology dimensions.

mod cartan;
mod commutator;
mod flags;
mod forms;
mod hochschild;
mod kulshammer;
mod radical;

pub use cartan::{cartan, CartanData};
pub use commutator::{center, commutator_space};
pub use flags::{structural_flags, StructuralFlags};
pub use forms::{
    find_frobenius_form, find_symmetrizing_form, orthogonal_quotient_dims, BilinearFormData,
    Confidence, FormSearch, NotFoundCertificate,
};
pub use hochschild::{hochschild_dims, HochschildDims, DEFAULT_ENTRY_GUARD};
pub use kulshammer::{kulshammer_tower, KulshammerTower};
pub use radical::{radical_socle, RadicalSocle};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("{0} is defined only in positive characteristic")]
    CharacteristicZero(&'static str),
    #[error("radical is not nilpotent: powers stabilize at dimension {0}")]
    RadicalNotNilpotent(usize),
    #[error("form rejected: {0}")]
    FormRejected(&'static str),
    #[error("size guard exceeded building bar differential d^{level}: {rows} x {cols} with {stored} stored entries (guard {guard})")]
    SizeGuard {
        level: usize,
        rows: u128,
        cols: u128,
        stored: u128,
        guard: u64,
    },
    #[error("hochschild degree {0} unsupported (max 3)")]
    HochschildTooDeep(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
