//! Exact combinatorics of Coxeter groups.

pub mod catalog;
pub mod combinatorics;
pub mod enumeration;
pub mod error;
pub mod field;
pub mod orientations;
pub mod patterns;
mod poly;
pub mod roots;
pub mod system;
pub mod tutte;
pub mod word;

pub use catalog::Family;
pub use error::{Error, Result};
pub use field::{FieldContext, FieldElement, Sign};
pub use roots::{ReflectionAction, RootEngine, RootVector, Side};
pub use system::{Bond, CoxeterSystem, Endpoint, FiniteTypeReport, Verdict};
pub use word::Word;
