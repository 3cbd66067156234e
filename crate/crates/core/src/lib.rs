pub mod convexgen;
pub mod geom;
pub mod lattice;
pub mod relative;
pub mod svg;
pub mod words;
