//! Degree irregularity of simple graphs: exact degree-deviation measures,
//! adjacency spectra, regularization procedures with edit certificates, and
//! an audit harness for spectral inequalities.
//!
//! Vertices are `0..n`. Degree-based quantities are exact rationals; spectral
//! quantities are floating point, generic over [`Scalar`].
//!
//! ```
//! use irregularity::{graph_spectrum, measures::rational, rough_regularize, DegreeProfile, Graph};
//!
//! let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)])?;
//! let profile = DegreeProfile::new(&star);
//! assert_eq!((profile.s, profile.var), (rational(3, 1), rational(3, 4)));
//! let mu = graph_spectrum::<f64>(&star)?.largest();
//! assert!((mu - 3f64.sqrt()).abs() < 1e-12);
//! let outcome = rough_regularize(&star)?;
//! assert_eq!(outcome.edits(), 2);
//! assert!(outcome.within_bound());
//! # Ok::<(), irregularity::Error>(())
//! ```

pub mod audit;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod inequalities;
pub mod measures;
pub mod regularize;
pub mod scalar;
pub mod spectra;

pub use error::{Error, ParseError, Result};
pub use graph::{BipartiteLayout, Graph, SubsetEdgeCounts};
pub use measures::{degree_profile, s2_deviation, DegreeProfile, ExactValue, Rational};
pub use regularize::{
    bipartite_rough_regularize, fine_regularize, rho_bounds, rho_exact, rough_regularize,
    EditScript, EditStep, RegularizationOutcome,
};
pub use scalar::Scalar;
pub use spectra::{graph_spectrum, Spectrum, SymmetricMatrix};

/// Double-precision spectrum.
pub type Spectrum64 = Spectrum<f64>;
/// Double-precision symmetric matrix.
pub type SymmetricMatrix64 = SymmetricMatrix<f64>;
