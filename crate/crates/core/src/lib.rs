//! Finite formal concept analysis enriched with modal structure.
//!
//! The crate implements, at desk scale and with exact arithmetic:
//!
//! - polarities (formal contexts), Galois derivations, and concept-lattice
//!   enumeration via NextClosure ([`polarity`], [`lattice`]);
//! - typed relations on a polarity, the modal operators they induce on the
//!   concept lattice, I-composition, and the frame conditions defining
//!   conceptual (co-)approximation spaces ([`relations`]);
//! - liftings of sets, Kripke frames, and approximation spaces into enriched
//!   polarities, with verification that the liftings preserve complex
//!   algebras, relation properties, and composition ([`lifting`]);
//! - the lattice-based modal language, model checking, frame validity,
//!   extensional correspondence checking, and algebra-class tests ([`logic`]);
//! - conceptual T-models with strict/tolerant semantics and sorites chain
//!   search ([`tmodel`]);
//! - many-valued polarities over finite Heyting algebras ([`manyvalued`]);
//! - belief and plausibility on concept lattices via subalgebra adjoints
//!   ([`dempster`]);
//! - seeded random generation of I-compatible structures ([`generate`]).

pub mod bitset;
pub mod dempster;
pub mod error;
pub mod generate;
pub mod lattice;
pub mod lifting;
pub mod logic;
pub mod manyvalued;
pub mod polarity;
pub mod relations;
pub mod tmodel;

pub use bitset::{BitSet, BoolMat};
pub use error::{Error, Result};
pub use lattice::{BoundKind, ConceptLattice, FormalConcept};
pub use polarity::{Polarity, Side};
pub use relations::{EnrichedContext, ModalOp, RelSort, TypedRelation};
