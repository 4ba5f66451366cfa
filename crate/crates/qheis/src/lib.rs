//! Expression language, JSON encodings and the `qheis` command line for
//! [`qheis_core`].

pub mod cli;
pub mod dsl;
pub mod json;

pub use cli::run;
pub use dsl::{element, parse_expr, univariate, DslError, Expr, QUsage};
