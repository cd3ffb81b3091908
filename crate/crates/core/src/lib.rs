pub mod checks;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod nc_complex;
pub mod partitions;
pub mod poset;
pub mod semistable;
pub mod string_modules;
pub mod tree;
pub mod vectors;
