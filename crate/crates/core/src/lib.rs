//! Lattice-point sets of `(depth, dim)` pairs and `(depth, reg, dim, deg h)`
//! tuples realized by edge ideals of Cameron-Walker graphs, their closed-form
//! sizes, and tools to cross-check the two.

pub mod census;
pub mod cli;
pub mod closed_form;
pub mod cw;
pub mod error;
pub mod graph;
pub mod lattice;

pub use census::{run_census, CensusRecord, CensusReport, Family};
pub use closed_form::size;
pub use cw::{realize, CwStructure, Realization, RealizationKind};
pub use error::{Error, Result};
pub use graph::{is_cameron_walker, Graph};
pub use lattice::{contains, enumerate, LatticePoint2, LatticePoint4, NamedSet, Point, PointSet};
