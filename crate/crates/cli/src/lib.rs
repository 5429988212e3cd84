//! Command implementations behind the `octa` binary.

pub mod error;
pub mod poly;
pub mod report;
pub mod suites;
pub mod table;

pub use error::{exit_code, CliError, ErrorReport};
pub use poly::parse_poly;
pub use table::{parse_table, parse_table_str, verify_rows, TableRow, TableSummary};

/// Version of the JSON report layout.
pub const SCHEMA: u32 = 1;
