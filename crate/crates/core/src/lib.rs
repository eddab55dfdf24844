//! Abstract Enriques diagrams of plane curve singularities, their Milnor
//! numbers, the `≥` relation between weighted diagrams, and the jump of the
//! Milnor number under linear deformations of quasihomogeneous germs.

pub mod adjacency;
pub mod diagram;
pub mod error;
pub mod jump;
pub mod quasihomogeneous;

pub use adjacency::{
    check_geq_witness, geq, linear_adjacent, AdjacencyVerdict, GeqWitness, SubdiagramEmbedding,
};
pub use diagram::{
    enumerate_minimal_diagrams, DiagramType, EnumerationLimits, Kind, ProximityDiagram, VertexId,
    WeightedDiagram,
};
pub use error::{Error, Result};
pub use jump::{
    construct_adjacent_diagram, expected_jump, lambda_lin, lambda_lin_semi, verify_maximality,
    JumpReport, MaximalityBounds, MaximalityReport,
};
pub use quasihomogeneous::{
    build_enriques_diagram, derived_invariants, milnor_orlik, minimal_diagram, parse_spec,
    DerivedInvariants, QuasihomogeneousSpec,
};
