//! Real-root classification for cubics and quartics.

pub mod cubic;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod oracle;
pub mod poly;
pub mod quartic;
pub mod quintic;
pub mod reverse;
pub mod tolerance;

mod expr;

pub use error::{Error, Result};
