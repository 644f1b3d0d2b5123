//! CLI frontend for the unirational-field engine: expression parsing,
//! command implementations, the golden-corpus runner, and the benchmark
//! harness. The binary in `main.rs` is a thin argument layer over this.

pub mod bench;
pub mod commands;
pub mod golden;
pub mod output;
pub mod parser;
