//! Exact search for amicable Heron triangles: two Heron triangles where
//! each one's area equals the other's perimeter.
//!
//! * [`arith`]: checked integer arithmetic, square roots, divisors.
//! * [`triangle`]: side and `(x, y, z)` coordinates, Heron's formula.
//! * [`oracle`]: brute-force enumeration up to a perimeter bound.
//! * [`pipeline`]: the finite case analysis proving the pair is unique.
//! * [`report`] and [`cli`]: serialization and the command-line tool.

pub mod arith;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod pipeline;
pub mod report;
pub mod triangle;

pub use error::{Error, Result};
