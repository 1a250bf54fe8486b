//! The lattice-based modal language and everything evaluated with it:
//! interpretation, frame validity, correspondence checking, and
//! algebra-class tests.

pub mod algebra;
pub mod correspondence;
pub mod formula;
pub mod semantics;

pub use algebra::{
    algebra_class_check, context_from_lattice, context_from_modal_algebra, AlgebraClass,
};
pub use correspondence::{
    correspondence_check, first_order_condition, CorrespondenceItem, CorrespondenceRecord,
    ALL_ITEMS,
};
pub use formula::{parse_formula, parse_sequent, Formula};
pub use semantics::{
    frame_valid, interpret, satisfies, satisfies_recursive, sequent_holds, Model, SatSide,
    Valuation,
};
