//! Finite monoids, finite right acts over them, and the Hopfian family of
//! properties defined through endomorphism chains.
//!
//! The crate is organized bottom-up:
//!
//! - [`monoid`]: multiplication tables, products, the `Z/m` and prime-power
//!   families, and the relations `r(s)`.
//! - [`act`]: acts, subacts, homomorphisms, Rees and general factor acts.
//! - [`congruence`]: partitions, bit-packed relations, congruence closure,
//!   joins and meets, and enumeration of congruence lattices.
//! - [`endo`]: homomorphism enumeration, endomorphism monoids, retracts and
//!   strong π-regularity.
//! - [`decide`]: kernel/image chain indices and the property deciders.
//! - [`harness`]: exhaustive corpora of small monoids and acts, and the theorem
//!   registry checked over them.
//! - [`format`]: the text input format and the JSON report document.
//!
//! ```
//! use std::sync::Arc;
//! use hopfian::{Act, Decider, Criterion, monoid::zmod_mult_monoid};
//!
//! let z4 = Act::regular(Arc::new(zmod_mult_monoid(4)));
//! let verdict = Decider::default()
//!     .is_strongly_hopfian(&z4, Criterion::Consecutive)
//!     .unwrap();
//! assert!(verdict.holds);
//! assert_eq!(verdict.index, 2);
//! ```

pub mod act;
pub mod cli;
pub mod congruence;
pub mod decide;
pub mod endo;
pub mod error;
pub mod format;
pub mod harness;
pub mod monoid;

pub use act::{Act, ActHom, Endomorphism, Subact};
pub use congruence::{Congruence, Partition, Relation};
pub use decide::{Criterion, Decider, PropertyReport};
pub use endo::EndMonoid;
pub use error::{Error, Result};
pub use monoid::Monoid;
