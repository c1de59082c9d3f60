//! Command-line front end: argument definitions, subcommand execution and the
//! polynomial expression parser.

pub mod commands;
pub mod parser;

pub use commands::{execute, Check, Cli, CliError, Command, Report};
pub use parser::{parse_expression, parse_poly, ParseError, PolyExpression};
