//! Binary linear codes with generator matrix `(I | A)`, where `A` is the
//! circulant matrix generated by a single binary vector.
//!
//! The crate covers the whole pipeline: building generator vectors from
//! circulant graphs, exact minimum distance and weight distribution,
//! classification against best-known bounds, and a bit-flip local search
//! that removes "bad" ones from a generator vector until a target distance
//! is reached.
//!
//! Positions are 0-based internally. Everything that is shown to a user
//! (row sets, flipped positions, supports) is 1-based.

pub mod bits;
pub mod bounds;
pub mod catalog;
pub mod distance;
mod error;
pub mod gf2;
mod kernel;
pub mod search;

pub use bits::BitVector;
pub use bounds::{load_bounds, lookup, BoundsEntry, BoundsTable};
pub use distance::{
    enumerator_string, macwilliams_dual, min_distance, parse_enumerator, weight_distribution,
    weight_distribution_with, weight_profile, DistanceResult, DistributionOptions,
    PerWeightMinimum, WeightDistribution,
};
pub use error::{Error, Result};
pub use gf2::{
    circulant_row, encode, is_graph_vector, min_degree_bound, paley_vector,
    vector_from_connection_set, CirculantCode, CirculantMatrix, Codeword, ConnectionSet,
    GeneratorVector,
};
pub use search::{
    classify, find_bad_codewords, flip, improve, score_element, BadCodewordCertificate,
    Classification, CodeClass, ElementScore, Outcome, SearchStep, SearchTrace,
};
