//! Multi-term distributive homology of finite magmas.

pub mod error;
pub mod lattice;
pub mod magma;
pub mod matrix;
pub mod complex;
pub mod group;
pub mod snf;
pub mod homology;
pub mod closed_form;
pub mod algorithms;
pub mod enumeration;

pub use error::{Error, Result};
pub use magma::{compose_ops, classify, MultiMagma, OperationTable, StructureReport};
