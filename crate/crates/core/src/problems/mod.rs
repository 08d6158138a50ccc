//! Source problems of the four reductions, with validation and
//! brute-force deciders used as independent oracles.

mod cnf;
mod graph;
mod knapsack;
mod push1;

pub use cnf::{sat_oracle, CnfFormula, Literal, SatOracle};
pub use graph::{
    find_pivot_vertex, ham_cycle_oracle, validate_skull_door_graph, DegreeViolation, DirectedGraph,
    HamCycleOracle, SkullDoorReport,
};
pub use knapsack::{knapsack_oracle, Item, KnapsackInstance, KnapsackOracle};
pub use push1::{push1_oracle, Push1Instance, Push1Oracle};

use crate::Cell;

/// A source instance violates its type invariants.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ProblemError {
    #[error("formula must have at least one variable")]
    NoVariables,
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause}: literal variable {var} outside 1..={num_vars}")]
    LiteralOutOfRange {
        clause: usize,
        var: usize,
        num_vars: usize,
    },
    #[error("edge {edge}: vertex {vertex} outside 0..{num_vertices}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        num_vertices: usize,
    },
    #[error("edge {edge}: self-loop on vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("graph is not a skull-door graph ({violations} vertices with a bad degree profile)")]
    NotSkullDoorGraph { violations: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("item {item} has zero weight")]
    ZeroWeight { item: usize },
    #[error("grid must be at least 1x1")]
    EmptyGrid,
    #[error("{what} {cell} is outside the {width}x{height} grid")]
    CellOutOfBounds {
        what: &'static str,
        cell: Cell,
        width: usize,
        height: usize,
    },
    #[error("robot starts on block {cell}")]
    RobotOnBlock { cell: Cell },
}
