//! Batch front end for the `gjcluster` library.

pub mod commands;
pub mod render;
pub mod tables;
