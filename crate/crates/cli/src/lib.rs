//! IO side of `walkcount`: query dispatch, table rendering and verification
//! reports. The counting itself lives in [`walkcount_core`].

pub mod query;
pub mod table;
pub mod verify;

use std::fmt;

/// Bad user input; the CLI maps this to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<walkcount_core::Error> for UsageError {
    fn from(e: walkcount_core::Error) -> Self {
        UsageError(e.to_string())
    }
}
