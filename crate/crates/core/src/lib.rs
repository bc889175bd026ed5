//! Neuro-fuzzy regression with potential-based rule seeding.
//!
//! The crate builds Takagi-Sugeno fuzzy models whose rule premises come
//! from a clustering stage: a Parzen-window wave function defines a
//! Schrodinger-style potential over the data, samples are ranked by that
//! potential, and the lowest-potential samples become cluster centers.
//! Subtractive clustering fixes how many centers are taken. Consequent
//! coefficients are then fitted by least squares while premise parameters
//! are refined by gradient descent.
//!
//! The main flow is:
//!
//! 1. [`dataset`] — CSV ingestion, record cleaning, min-max normalization
//!    and the even/odd train-test split.
//! 2. [`subtractive`] — density-based selection that fixes the cluster
//!    count `k`.
//! 3. [`quantum`] — the wave function, its potential, and the
//!    gradient-descent dynamics kept as a comparison baseline.
//! 4. [`cluster`] — potential-sorted center selection and sample
//!    assignment.
//! 5. [`anfis`] — the five-layer TSK network built from the clusters.
//! 6. [`trainer`] — hybrid least-squares / backpropagation learning.

pub mod anfis;
pub mod cluster;
pub mod dataset;
pub mod quantum;
pub mod subtractive;
pub mod trainer;

mod linalg;
pub(crate) mod util;
