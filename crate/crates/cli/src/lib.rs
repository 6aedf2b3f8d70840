//! Serialization and command plumbing for the `circavd` binary.

pub mod document;

pub use document::{ColoringDocument, DocumentError, Format, PaletteEntry, Provenance};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INVALID_INPUT: u8 = 1;
    pub const NOT_COVERED: u8 = 2;
    pub const VERIFICATION_FAILED: u8 = 3;
    pub const PARSE_ERROR: u8 = 4;
    pub const TIMEOUT: u8 = 5;
}
