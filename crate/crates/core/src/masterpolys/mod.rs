//! Generating-polynomial families over permutation classes and the
//! continued fractions they satisfy.
//!
//! Each family is a weight scheme mapping a permutation to one monomial in
//! the family's variable registry; the family polynomial is the exact sum
//! over the designated class.  Families are registered by name and looked
//! up at runtime (CLI `poly --family ...`); theorems pair a family with a
//! specialization and a closed-form coefficient display.

mod families;
mod pq;
mod theorems;

pub use families::{
    family_poly, family_poly_on, lookup_family, registry as family_registry, FamilyResult,
    NoClosedForm, PolyFamily,
};
pub use pq::pq_integer;
pub use theorems::{
    elliptic_theorem, lookup_theorem, registry as theorem_registry, Theorem, TheoremOutcome,
};
