//! Library side of the `hdimp` command: document formats, dispatch,
//! generators and SVG output.

pub mod compute;
pub mod document;
pub mod error;
pub mod generate;
pub mod render;

pub use compute::{run_compute, run_oracle, Algorithm};
pub use document::{
    Guarantee, GuaranteeKind, InstanceDocument, OracleDocument, Quantity, ResultDocument, Side, Witness,
};
pub use error::CliError;
