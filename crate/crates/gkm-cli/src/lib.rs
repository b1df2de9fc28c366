//! Command-line front end for GKM graph cohomology: JSON (de)serialization
//! of graph and action documents, the shipped fixture catalog, DOT export,
//! and the subcommand implementations.

pub mod commands;
pub mod doc;
pub mod dot;
pub mod fixtures;
