//! The recursive separator/biclique algorithms, the bound calculators that
//! accompany them, and crossing statistics for drawings.

mod biclique;
mod bound;
mod coloring;
mod drawings;
mod independent;
mod ramsey;

pub use biclique::{
    greedy_biclique, lemma2_target, max_biclique_exact, BicliqueResult, EXACT_BICLIQUE_MAX_N,
};
pub use bound::{certified_product, theorem3_bound, BoundParams, ProductBracket, PHI_CUTOFF};
pub use coloring::{color_graph, theorem1_color_bound, Coloring, ColoringOutcome};
pub use drawings::{
    crossing_count, crossing_pair_sets, quasi_planarity, CrossingPairSets, CrossingStats,
};
pub use independent::{
    density_threshold, eq1_target, find_independent_set, find_independent_set_traced,
    RecursionStats,
};
pub use ramsey::{clique_or_independent, Branch, RamseyOutcome};
