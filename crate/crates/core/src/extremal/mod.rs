//! Extremal numbers at desk scale: exhaustive graph sweeps, exact search for
//! the maximum number of hyperedges avoiding a Berge copy, and the bound
//! reports tying the two together.

mod bounds;
mod brute;
mod search;

pub use bounds::{
    bena_rhs, check_fre_bound, check_sandwich, pattern_weight, weighted_sums, BoundParams,
    BoundReport, Rational, WeightedSums,
};
pub use brute::{brute_gen_turan, brute_turan};
pub use search::{exact_berge_turan, SearchResult};
