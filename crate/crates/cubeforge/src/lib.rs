//! Command-line front end for `cubeforge-core`: polynomial and generating
//! function parsing, JSON interchange, and the `cubeforge` subcommands.

pub mod cli;
pub mod json;
pub mod parse;

pub use cli::run;
pub use parse::{parse_gf, parse_matrix, parse_poly, ParseError};
