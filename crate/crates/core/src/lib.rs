//! Numerical invariants of threefold scrolls over Hirzebruch surfaces and of
//! the Hilbert scheme components they fill.

pub mod audit;
pub mod degeneration;
pub mod divisor;
pub mod error;
pub mod extension;
pub mod hrr;
pub mod report;
pub mod scroll;
pub mod splitting;

pub use divisor::DivisorClass;
pub use error::{Error, Result};
pub use extension::ScrollConfig;
pub use report::{analyze, ComponentReport};
pub use splitting::SplittingType;
