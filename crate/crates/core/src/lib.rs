//! Exact complex continued fractions with partial quotients in `(1+i)Z[i]`.
//!
//! Three expansion maps are implemented over exact arithmetic in `Q(i)` and
//! its quadratic extensions:
//!
//! * the H map `z -> 1/z - floor_H(1/z)` on the closed square `X`-bar,
//! * the T map `z -> 1/z - floor_T(1/z)` on the half-open square `X`,
//! * the dual map `z -> 1/(z - floor_d(z))` on `|z| >= 1`.
//!
//! On top of the engine sit exact region predicates, the pure-periodicity
//! criteria for quadratic irrationals, and the natural-extension pair maps.

pub mod cfengine;
pub mod classify;
pub mod error;
pub mod exactnum;
pub mod expr;
pub mod natext;
pub mod notation;
pub mod regions;
pub mod sampling;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
