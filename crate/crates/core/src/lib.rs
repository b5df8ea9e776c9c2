//! Coxeter diagrams, finite-type recognition, a ribbon-graph surface model
//! for small-type Artin groups, and certification traces for trivial centers.

pub mod certify;
pub mod citation;
pub mod cli;
pub mod diagram;
pub mod linalg;
pub mod spherical;
pub mod surface;
