//! Handle slides on set systems, GF(2) symmetric matrices and ribbon graph
//! bouquets, with canonical forms for binary delta-matroids.

pub mod classify;
pub mod error;
pub mod formats;
pub mod gf2;
pub mod ribbon;
pub mod setsys;
pub mod sweep;

pub use classify::{
    check_conjecture_instance, match_canonical, normalize, normalize_checked, reachable_signatures,
    slide_orbit, ClassificationResult, ConjectureReport, DEFAULT_ORBIT_LIMIT,
};
pub use error::{Error, ParseError, Result};
pub use formats::{
    parse_bouquet, parse_matrix, parse_set_system, serialize_bouquet, serialize_classification,
    serialize_matrix, serialize_set_system,
};
pub use gf2::{binary_representation, is_binary, Block, CanonicalSignature, Representation, SymMatrix};
pub use ribbon::{delta_matroid_of_union, Bouquet, Side};
pub use setsys::{Mask, Parity, SetSystem, SlideSequence, MAX_GROUND};
