//! IO companion to `unsharp-core`: the structure file format, text and DOT
//! rendering, and the census table writer. The `unsharp` binary wires these
//! to a command-line interface.

pub mod format;
pub mod render;

pub use format::{parse_structure, render_structure, FileError, Structure};
