//! Word combinatorics: heaps, commutation classes, FC/CFC tests, bands.

pub mod bands;
pub mod commutation;
pub mod fc;
pub mod heap;
pub mod logarithmic;

pub use bands::{detect_bands, Band, Direction};
pub use commutation::{braid_class, commutation_class, cyclic_class, DEFAULT_CLASS_CAP};
pub use fc::{
    has_braid_factor, is_cfc, is_cfc_exhaustive, is_cyclically_reduced, is_fc, is_fc_by_class,
    is_full_support, is_torsion_free, support,
};
pub use heap::{canonical_form, is_fc_word, Heap};
pub use logarithmic::{decide_logarithmic, LogVerdict, Outcome, Reason};
