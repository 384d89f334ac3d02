//! Rewiring a graph towards regularity with certified edit counts, and the
//! regularization distance `rho`.

mod algorithms;
mod rho;
mod script;

pub use algorithms::{
    bipartite_rough_regularize, fine_regularize, rough_regularize, RegularizationOutcome,
};
pub use rho::{
    biclique_rho_survey, rho_bounds, rho_degree_lower_bound, rho_exact, rho_exact_with_cap,
    BicliqueRho, RegularCatalog, DEFAULT_RHO_CAP,
};
pub use script::{EditScript, EditStep};
