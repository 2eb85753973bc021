//! Maximum weighted edge biclique (MWEB) toolkit.
//!
//! * [`graph`]: dense weighted bipartite graphs, bicliques, objectives.
//! * [`solve`]: exact enumeration, branch-and-bound and local search.
//! * [`reduce`]: clique to `{-1,0,1}` instances, the randomized
//!   `{gamma, {alpha, beta}}` product, block duplication, and verifiers.
//! * [`samba`]: statistical bicluster weights and scores.
//! * [`mdlh`]: two-level summarization with holes.
//! * [`io`]: JSON and TSV interchange formats.

pub mod binary;
pub mod error;
pub mod graph;
pub mod io;
pub mod mdlh;
pub mod reduce;
pub mod samba;
pub mod solve;

pub use binary::BinaryMatrix;
pub use error::{Error, Result, Side};
pub use graph::{
    biclique_weight, evaluate, problem_p_value, weight_set_of, Biclique, Objective, WeightSetDescriptor,
    WeightedBipartiteGraph,
};
pub use solve::{solve, Method, OptResult, SolverConfig};
