//! Exact-arithmetic toolkit for the Witt algebra `W_n` and the supports of
//! its weight modules.
//!
//! The crate builds concrete weight-module families over `W_n` (tensor
//! families and box-truncated generalized Verma modules), takes exact
//! snapshots of their supports over the weight lattice `Z^n`, and classifies
//! those snapshots into the dense / punctured / cut trichotomy. Everything is
//! computed over `Q` or over the rational-function field `Q(g_1,...,g_n)` in
//! formal parameters; there is no floating point anywhere.
//!
//! Module map:
//!
//! * [`scalar`] — exact rationals and rational functions in formal parameters.
//! * [`lattice`] — geometry of `Z^n`: half-spaces, componentwise orders,
//!   unimodular basis changes, monoid generation, exact LP separation.
//! * [`witt`] — graded elements of `W_n`, the Lie bracket, subalgebras.
//! * [`wmod`] — weight-module families and their exact action matrices.
//! * [`supports`] — support windows, the trichotomy classifier, and the
//!   support-shape checkers (convexity, rays, up-sets, mixed refinement).
//! * [`ghw`] — generalized-highest-weight detection and the constructive
//!   basis recipes.
//! * [`families`] — serializable family descriptors and the built-in catalog.
//! * [`verify`] — seeded verification suites with independent oracles.
//! * [`report`] — versioned JSON/CSV reports.
//! * [`cli`] — batch front end used by the `witt-supports` binary.
//!
//! Each major capability has a runnable example under `examples/`.

pub mod cli;
pub mod error;
pub mod families;
pub mod ghw;
pub mod lattice;
pub mod report;
pub mod scalar;
pub mod supports;
pub mod verify;
pub mod witt;
pub mod wmod;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
