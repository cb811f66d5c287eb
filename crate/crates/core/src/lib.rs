pub mod bench;
pub mod error;
pub mod freeway;
pub mod generate;
pub mod geom;
pub mod io;
pub mod metric;
pub mod oracle;
pub mod plot;
pub mod problem;
pub mod solution;
pub mod turnpike;

pub use error::{Error, Result};
