pub mod cover;
pub mod deform;
pub mod error;
pub mod geometry;
pub mod lab;
pub mod nystrom;
pub mod quad;
pub mod resonance;
pub mod resolvent;
pub mod special;

pub use cover::{LogPoint, SectorRegion};
pub use error::{Error, Result};
