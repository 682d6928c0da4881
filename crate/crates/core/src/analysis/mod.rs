//! Refinement checks, the subset decomposition behind the strong coloring
//! property, color censuses, bounds, and the small-`n` oracle.

pub mod bounds;
pub mod census;
pub mod oracle;
pub mod refine;
pub mod subset;

pub use bounds::{bound, choose_params, lower_bound_chain, BoundReport, ChainStep, Params};
pub use census::{
    count_colors, grid_counterexample, sample_colors, three_cube_counterexample, Census, GridCounterexample,
};
pub use oracle::{exact_min_colors, OracleResult};
pub use refine::{all_pairs, image_size, refines, Refinement};
pub use subset::{analyze_subset, emerging_injection, injective_index, EmergingInjection, IndexSearch, SubsetAnalysis};
