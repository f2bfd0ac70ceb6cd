//! Truncated elements of cyclotomic completions `R[q]^S`.
//!
//! A completed element is handled through one of its components
//! `R[q]/(g_k)` for a cofinal chain `g_0 | g_1 | ...`; arithmetic, digit
//! expansions and restriction maps all act level by level.

mod chain;
mod digits;
mod element;
mod series;
mod units;

pub use chain::{ChainKind, FiltrationChain, ProductEnumeration};
pub use digits::{from_digits, to_digits, DigitExpansion};
pub use element::{reduce, TruncOp, TruncatedElement, TruncatedElementJson};
pub use series::{
    check_q_inverse, pochhammer_level_for, series_realize, series_realize_bounded, SeriesSpec,
    DEFAULT_TERM_BOUND,
};
pub use units::{alternating_unit, unit_inverse_mod};
