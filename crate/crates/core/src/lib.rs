//! Exact quasisymmetric functions.
//!
//! The crate implements QSym over the integers in the monomial and fundamental
//! bases together with the restricted products `≺`, `⪰`, `⪯`, `≻`, `▷`, `⋖`;
//! the dual immaculate functions by tableaux, by iterated `≺` and by the
//! creation operators `W_m`; NSym in the ribbon basis with its pairing and perp
//! operators; and the word algebras WQSym and FQSym with the projection back to
//! QSym. The [`oracle`] module evaluates all of these on truncated power
//! series, and [`verify`] runs the named identity checks used by the CLI.

pub mod composition;
pub mod dendriform;
pub mod element;
pub mod error;
pub mod format;
pub mod fqsym;
pub mod immaculate;
pub mod nsym;
pub mod ops;
pub mod oracle;
pub mod qsym;
pub mod verify;
pub mod words;
pub mod wqsym;

pub use composition::{compositions_of, compositions_up_to, Composition, PartialSumSet};
pub use element::{Basis, Element};
pub use error::{Error, Result};
pub use fqsym::FQSymElem;
pub use nsym::NSymElem;
pub use ops::Op;
pub use qsym::{FElem, QSymElem, TensorElem};
pub use words::{PackedWord, Permutation, Word};
pub use wqsym::WQSymElem;
