//! Rough-set approximations over finite commutative rings.
//!
//! A finite commutative ring with identity, together with an ideal, yields a
//! partition of the ring into cosets; taking that partition as the
//! indiscernibility relation of an approximation space gives every ring
//! subset a lower approximation (union of cosets contained in it), an upper
//! approximation (union of cosets meeting it), a boundary, and a roughness
//! verdict.
//!
//! The crate provides:
//!
//! - [`space`]: generic finite approximation spaces over any equivalence
//!   partition, with the classical operators;
//! - [`ring`]: construction and full axiom validation of finite commutative
//!   rings (`Z_n`, direct products, explicit tables);
//! - [`ideal`]: ideal validation, generation, enumeration, maximality and
//!   primality tests, and coset partitions;
//! - [`rough`]: ideal-relative approximations plus the element-set sum and
//!   product they interact with;
//! - [`audit`] / [`report`]: an exhaustive or seeded-randomized auditor for
//!   the approximation identities, reporting re-verifiable minimal
//!   counterexamples where a claimed identity fails;
//! - [`cli`]: the command-line interface over all of the above.
//!
//! Everything is immutable after construction and safe to share across
//! threads; element sets are single machine words, so exhaustive subset
//! sweeps over rings of up to 64 elements stay practical.

pub mod audit;
pub mod cli;
pub mod ideal;
pub mod report;
pub mod ring;
pub mod rough;
pub mod set;
pub mod space;

pub use ideal::{Ideal, IdealClassification};
pub use ring::FiniteRing;
pub use rough::{RoughApproximation, SumMode};
pub use set::ElementSet;
pub use space::ApproximationSpace;
