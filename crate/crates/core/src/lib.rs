//! Optimal adjacent vertex-distinguishing edge-colorings of circulant graphs
//! `C_n([1, R])`: constructions, an independent verifier and an exact oracle.

pub mod arith;
pub mod base;
pub mod clique;
pub mod color;
pub mod coloring;
pub mod graph;
pub mod oracle;
pub mod splice;
pub mod verify;

pub use base::{
    color_even_order, default_w, phi_dist, phi_w, two_vertex_extension, varphi, AnchorSequence,
    BaseError, EvenOrderColoring, PhiW,
};
pub use clique::{psi, sequence_c, sequence_c_even, sequence_c_odd, CliqueError};
pub use color::{Color, ColorError, ColorSequence, Palette};
pub use coloring::{ColoringError, EdgeColoring};
pub use graph::{
    build_circulant, components_of, length_partition, valuation, CanonicalEdge, CirculantGraph,
    GraphError, LengthPartition,
};
pub use oracle::{chi_a_exact, exists_avd_k, EdgeOrder, OracleError, SearchConfig, SearchOutcome};
pub use splice::{
    avd_color, build, coverage_count, insert_extension, plan_construction, plan_cuts, solve_counts,
    AvdError, Construction, ConstructionParams, ConstructionPlan, CountSolution, HalfEdge,
    MergeError, NotCovered, SpliceResult,
};
pub use verify::{
    check_avd, check_circulant_shape, check_gg, check_palette, check_periodicity, check_proper,
    VerificationReport, VerifyError, Violation, ViolationKind,
};
