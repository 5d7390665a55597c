//! Weight-3 optical orthogonal signature pattern codes over `Z_m x Z_n`:
//! verification, type classification, size bounds, recursive constructions
//! and exact search.

// Divisibility reads better as `%` throughout the number theory here.
#![allow(clippy::manual_is_multiple_of)]

pub mod bounds;
pub mod cli;
pub mod code;
pub mod constructions;
pub mod error;
pub mod group;
pub mod io;
pub mod search;

pub use code::{Code, Codeword, Verdict, Violation};
pub use error::{Error, Result};
pub use group::{GridGroup, GroupElement};
