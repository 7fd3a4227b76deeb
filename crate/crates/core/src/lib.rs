pub mod gf2;
pub mod hypergraph;
pub mod pauli;
pub mod gram;
pub mod assign;
pub mod reduce;
pub mod dataset;
pub mod bound;
pub mod planarity;
pub mod orbits;
