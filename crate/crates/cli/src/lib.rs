//! Support library for the `a2star` command-line tool: JSON schemas, the
//! named bundle corpus, and the built-in verification suite.

pub mod corpus;
pub mod json;
pub mod suite;
