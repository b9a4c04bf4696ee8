pub mod bijections;
pub mod counting;
pub mod error;
pub mod oracle;
pub mod series;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use oracle::{Oracle, OracleBounds};
pub use series::TruncatedSeries;
pub use words::{CatalanWord, DyckWord, MotzkinWord, StarWord, Step};
