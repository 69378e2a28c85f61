//! Computational algebra on finite rings given by multiplication tables.
//!
//! `ringlab` works with rings on `{0, …, n-1}` presented by explicit
//! addition and multiplication tables, without assuming a unit element.
//! On top of validated tables it provides:
//!
//! * subset arithmetic — additive closures, subset products, ideal and
//!   subring classification, exhaustive ideal enumeration ([`subset`]);
//! * homomorphism checking, constrained enumeration, and isomorphism
//!   testing via canonical forms or direct search ([`hom`]);
//! * two unitizations — the Dorroh extension `R × ℤ_m` and the multiplier
//!   ring of compatible self-map pairs — with their canonical embeddings
//!   and the canonical maps relating them to any unital ring containing
//!   `R` as an ideal ([`extension`]);
//! * enlargement predicates (`T = TST`, `S = STS`) and bounded
//!   joint-enlargement search, the working notion of Morita equivalence
//!   for idempotent rings, plus replayable verification harnesses
//!   ([`morita`]);
//! * a catalog of all rings of order ≤ 8 up to isomorphism together with
//!   named order-16 constructions ([`catalog`]).
//!
//! ```
//! use ringlab::{FiniteRing, Subset};
//!
//! let z8 = FiniteRing::cyclic(8);
//! assert_eq!(z8.unit(), Some(1));
//!
//! // The even elements form an ideal that is not idempotent.
//! let evens = Subset::from_indices(8, &[0, 2, 4, 6]);
//! assert!(z8.classify_subset(evens).is_ideal);
//! assert_eq!(
//!     z8.subset_product(evens, evens).unwrap(),
//!     Subset::from_indices(8, &[0, 4]),
//! );
//! ```

pub mod catalog;
pub mod extension;
pub mod hom;
pub mod morita;
pub mod ring;
pub mod subset;
pub mod textio;

pub use catalog::{CatalogEntry, EntryProps};
pub use extension::{DorrohRing, Multiplier, MultiplierRing};
pub use hom::{HomConstraint, RingHom};
pub use ring::{
    BoundExceeded, CanonicalForm, FiniteRing, ValidateError, ValidationReport, Violation,
    ViolationCode,
};
pub use subset::{Subset, SubsetClass, SubsetError};
