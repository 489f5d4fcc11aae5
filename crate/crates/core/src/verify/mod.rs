//! Machine checks of every hypothesis of the regularity and non-degeneracy
//! criteria, and the resulting adapted pair.

mod basis;
mod classify;
mod heisenberg;
mod nondegeneracy;
mod pair;
mod regularity;

pub use basis::{check_basis_restriction, restriction_matrix, BasisReport};
pub use classify::{classify_roots, stationary_sets, Classification, ClassificationReport, SequenceTrace};
pub use heisenberg::{check_heisenberg, check_partition, HeisenbergReport, PartitionReport};
pub use nondegeneracy::{check_nondegeneracy, pairing_rows, NondegeneracyReport, POLYNOMIAL_LIMIT};
pub use pair::{eigenvalue_report, solve_h, AdaptedPair, EigenvalueReport};
pub use regularity::{check_regularity, coadjoint_rows, RegularityReport};
