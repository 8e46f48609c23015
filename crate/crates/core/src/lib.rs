//! Exact solvers for the five domination games on graphs (domination,
//! total domination, Z-, L- and LL-domination), with the graph plumbing and
//! corpus generators needed to check their properties exhaustively on small
//! graphs.

pub mod classical;
pub mod corpus;
pub mod engine;
pub mod graph;
pub mod solver;
pub mod verify;

pub use classical::{domination_number, total_domination_number, ClassicalResult};
pub use engine::{GameError, GameState, Neighborhood, Player, Variant};
pub use graph::{Graph, GraphError, VertexSet};
pub use solver::{brute_length, game_length, optimal_line, SolveError, SolveResult, Solver};
pub use verify::{GameValues, PathCheckReport, Report, VerifyError};
