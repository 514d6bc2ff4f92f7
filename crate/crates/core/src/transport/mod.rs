//! Probability measures on vertices, exact optimal transport and the
//! bipartite assignment problems behind the curvature formulas.

mod assignment;
mod flow;
mod measure;
mod wasserstein;

pub use assignment::{
    min_assignment_cost, min_cost_assignment, optimal_assignments, optimal_pair_support,
    Assignment, CostMatrix,
};
pub use flow::MinCostFlow;
pub use measure::{mu_alpha, Measure};
pub use wasserstein::{
    optimal_plan, wasserstein1, wasserstein1_oracle, wasserstein1_unreduced, TransportPlan,
    ORACLE_TOKEN_LIMIT,
};

pub(crate) use wasserstein::optimal_plan_within;
