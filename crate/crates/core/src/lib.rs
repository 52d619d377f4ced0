//! Offensive alliances in graphs: predicates, exact alliance numbers, the witnesses
//! behind the classical upper bounds, and a catalog of bounds checked against exact
//! values on small graphs.
//!
//! ```
//! use alliance_core::{gen, min_alliance, AllianceKind};
//!
//! let petersen = gen::petersen();
//! let r = min_alliance(&petersen, AllianceKind::GlobalOffensive).unwrap();
//! assert_eq!(r.value, 4);
//! ```

pub mod alliance;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod gen;
pub mod graph;
pub mod io;
pub mod params;
pub mod report;
pub mod search;
pub mod solvers;
pub mod spectral;
pub mod vertex_set;

pub use alliance::{
    check_alliance, is_alliance, is_minimal_alliance, AllianceKind, PredicateCertificate, Violation,
};
pub use bounds::{
    evaluate_all_bounds, tightness_survey, BoundId, BoundRecord, GraphProfile, Sense, SurveyTable,
    Verdict,
};
pub use constructions::{
    independent_complement_alliance, maxcut_refined_alliance, BaseSet, Construction, WitnessReport,
};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder};
pub use io::{parse_edge_list, write_edge_list, EdgeListOptions};
pub use params::{CutMode, CutPartition, Optimum};
pub use report::ReportDocument;
pub use search::Limits;
pub use solvers::{
    enumerate_minimal_global_alliances, min_alliance, min_connected_alliance, Connectedness,
    SolveOptions, SolveResult,
};
pub use spectral::{laplacian_spectral_radius, Scalar, SpectralOptions, SpectralResult};
pub use vertex_set::VertexSet;

/// Double-precision spectral result, the one every bound uses.
pub type SpectralResult64 = SpectralResult<f64>;
pub type SpectralResult32 = SpectralResult<f32>;
