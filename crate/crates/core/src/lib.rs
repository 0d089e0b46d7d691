//! Worm battles, ordinal notations below ε₀, and the Hardy and fast-growing
//! hierarchies.

pub mod battle;
pub mod budget;
pub mod error;
pub mod hierarchy;
pub mod ordinal;
mod syntax;
pub mod tree;
pub mod worm;

pub use budget::{Budget, Meter};
pub use error::{BudgetExceeded, DomainError, Error, ParseError, Resource, Result};
pub use ordinal::Ordinal;
pub use tree::TreeOrdinal;
pub use worm::Worm;
pub use battle::{battle, validate_battle, BattleTrace, Descent};
pub use hierarchy::{EvalTrace, Flavor};
