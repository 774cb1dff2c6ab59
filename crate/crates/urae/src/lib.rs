//! Desk-scale laboratory for ultra-resolution adaptation guidelines.
//!
//! Three findings about adapting large generative models to resolutions far
//! beyond their training data are reproduced here at a size where every claim
//! can be checked end to end on a laptop:
//!
//! * **Synthetic data helps when real data is scarce.** A linear-regression
//!   model of mixed real/synthetic training ([`sim`]) computes a closed-form
//!   risk bound alongside Monte Carlo gradient-descent trials, showing when a
//!   teacher model's outputs beat noisy ground truth and when they backfire.
//! * **Minor singular components are the efficient thing to tune.**
//!   [`adapter`] splits weight matrices by singular-value magnitude and
//!   builds low-rank adapters from the tail components, versus conventional
//!   zero-product initialization.
//! * **Guidance-distilled models should be tuned with guidance disabled.**
//!   [`flow`] trains tiny flow-matching networks, distills a guided teacher
//!   into a guidance-conditioned student, and compares adaptation with the
//!   guidance input left at its distillation default versus cranked up.
//!
//! [`archive`] provides the deterministic tensor container the experiments
//! persist weights in, and [`cli`] wires everything into the `urae` binary.

pub mod adapter;
pub mod archive;
pub mod cli;
pub mod error;
pub mod flow;
pub mod sim;
pub mod tensor;

pub use error::{Error, Result};
pub use tensor::{matmul, svd, sym_eigvals, SvdFactorization, WeightMatrix};
