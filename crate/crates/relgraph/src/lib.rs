//! Certified nearby-instance solving for NP-hard graph problems.
//!
//! Given an instance of a hard graph problem, the solvers in this crate
//! return a *nearby* instance — within a proven edit radius under either
//! the max-degree metric (`Δ(G △ H)`) or the edge-edit metric
//! (`|E(G △ H)|`) — together with a verified answer to it. The crate also
//! ships the exact oracles used to audit those answers, generators for
//! instance families whose answers survive bounded adversarial edits, and
//! the transfer routines that carry witnesses across small edit distances.
//!
//! The supported problems and radii:
//!
//! | problem            | max-degree radius | edge-edit radius |
//! |---------------------|-------------------|------------------|
//! | Hamiltonian Cycle   | 1                 | n/3              |
//! | Dominating Set      | —                 | n/e              |
//! | Independent Set     | √n                | n^{4/3}          |
//! | Clique              | √n                | n^{4/3}          |
//! | Vertex Cover        | √n                | n^{4/3}          |
//! | Coloring            | √n                | n^{4/3}          |
//! | Clique Cover        | √n                | n^{4/3}          |
//!
//! Every accept/reject decision is integer-exact; no floating point is
//! involved anywhere in budgets or verification.

pub mod budget;
pub mod certify;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod solvers;
pub mod transfer;

pub use budget::{Budget, BudgetBound};
pub use certify::{
    verify_certificate, verify_hint, verify_rel_answer, Answer, Certificate, NegativityHint,
    Problem, RelAnswer, VerifyReport,
};
pub use graph::{
    dist_edits, dist_instance, dist_maxdeg, symmetric_difference, Distance, EditSet, Graph,
    GraphError, Instance, Metric,
};
pub use io::{parse_graph, write_graph, ParseError};
pub use oracles::{OracleError, OracleLimits};
pub use solvers::{solve, SolveError, SolveOptions};
