//! Expression parser and command front end for `qweyl`.

pub mod app;
pub mod parse;

pub use app::{run, verify, Cli, CliError, Command, Outcome, Suite, VerifyReport};
pub use parse::{parse_iqg, parse_poly, parse_weyl, ParseError};
