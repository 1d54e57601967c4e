//! File formats, experiment runner and command-line front end for
//! [`sigbasis`].

pub mod cli;
pub mod experiment;
pub mod parse;
pub mod table;
