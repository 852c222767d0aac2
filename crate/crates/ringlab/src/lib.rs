//! An exact-computation laboratory for factorization in finite commutative
//! rings with zero divisors.
//!
//! The crate builds small commutative rings from textual expressions
//! (`Z(4)`, `Z(2)xZ(3)`, `Z(2)[s,t]/(s^2,s*t,t^2)`, `Id(Z(4),2)`), computes
//! their structure exactly, classifies elements and polynomials under the
//! associate relations (~, ≈, ≅ and the regular variants) and the
//! irreducibility notions (irreducible, strongly, very strongly,
//! m-irreducible, prime, weakly prime), enumerates atomic factorizations and
//! sets of lengths in R[X], refines factorizations into U-decompositions,
//! and classifies rings and their polynomial rings against the classical
//! unique-factorization taxonomies (UFR, weak UFR, Fletcher UFR, factorial,
//! the reduced/μ-reduced families, BFR/HFR/FFR).
//!
//! Start with the runnable examples (one per capability):
//!
//! ```bash
//! cargo run --example build_and_describe
//! cargo run --example element_zoo
//! cargo run --example poly_basics
//! cargo run --example factor_poly
//! cargo run --example lengths_table
//! cargo run --example u_decomposition
//! cargo run --example ring_classes
//! cargo run --example run_checks
//! cargo run --example weakly_prime_probe
//! ```
//!
//! The same functionality is exposed on the command line through the
//! `ringlab` binary (`ring describe`, `classify`, `factor`, `lengths`,
//! `verify`, `probe weakly-prime`).

pub mod dsl;
pub mod elem;
pub mod cache;
pub mod classify;
pub mod factor;
pub mod harness;
pub mod poly;
mod error;
pub mod ring;

pub use error::{Error, Result};
pub use ring::{
    build, build_ring, find_isomorphism, product_of_rings, quotient_ring, BuildOptions,
    FiniteRing, StructureReport,
};
