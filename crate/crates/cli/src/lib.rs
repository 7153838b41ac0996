//! Batch driver for the `superyangian` engine: configuration, caching,
//! parallel suite execution and JSON reports.

pub mod cache;
pub mod config;
pub mod run;
pub mod spot;
