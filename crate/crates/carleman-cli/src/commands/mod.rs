use std::path::PathBuf;

use carleman_core::gquad::Precision;

use crate::Format;

pub mod certify;
pub mod coeffs;
pub mod harness;
pub mod identities;
pub mod integrals;
pub mod report;
pub mod verify;

/// Shared invocation context: format, output target, precision.
pub struct Ctx {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub precision: Precision,
}
