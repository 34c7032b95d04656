//! Expression parsing, report rendering and check dispatch for the `qleft`
//! command-line tool.

pub mod parser;
pub mod render;
pub mod verify;
