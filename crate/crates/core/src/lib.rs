//! Exact Gromov hyperbolicity of large sparse graphs.
//!
//! The search covers the graph with a hierarchy of distance-`k` dominating
//! sets, evaluates the four-point condition on quadruples of top-level
//! dominators, and descends into cells only where the bound says a better
//! quadruple may hide. Distances inside cells come from 2-hop hub labels
//! through a small LRU cache of distance matrices.
//!
//! ```
//! use hypdom::generators::gen_cycle;
//! use hypdom::hyperbolicity::hyperbolicity;
//!
//! let c12 = gen_cycle(12).unwrap();
//! assert_eq!(hyperbolicity(&c12, 2, 2.0).unwrap().delta.to_string(), "3.0");
//! ```

pub mod cache;
pub mod cli;
pub mod domination;
pub mod eccentricity;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hyperbolicity;
pub mod labeling;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use hyperbolicity::{compute_hyperbolicity, Doubled, QuadrupleResult, SearchConfig};
