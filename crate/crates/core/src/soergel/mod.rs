//! Light-leaves cellular calculus on diagrammatic Soergel bimodules and the
//! p-canonical basis engine.

pub mod braid;
pub mod gram;
pub mod leaves;
pub mod localized;
pub mod pcan;
pub mod subexpr;
pub mod transport;

pub use subexpr::{decorate, expressed_targets, subexpressions, BSWord, Decoration, Subexpression};
