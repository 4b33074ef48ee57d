//! Text formats: exact decimals, tree files and result records.

pub mod decimal;
pub mod record;
pub mod tree_file;

pub use decimal::{format_half, format_scaled, parse_doubled_epsilon, parse_scaled, DecimalError};
pub use record::{ResultRecord, TraceRecord, VerdictKind};
pub use tree_file::{parse_tree, serialize_tree, ParseError};
