//! Words, noncommutative polynomials and the quadratic rewriting engine.

mod file;
mod poly;
mod presentation;
mod symbol;

use thiserror::Error;

pub use file::{dump_presentation, load_presentation, PresentationFile};
pub use poly::{NCPoly, Word};
pub use presentation::{
    step_limit_from_env, Generator, Grade, OverlapFailure, Presentation, RewriteRule, DEFAULT_STEP_LIMIT,
};
pub use symbol::{sym, Symbol};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("rewrite step limit {limit} exceeded in {universe}")]
    StepLimit { limit: usize, universe: String },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("unknown symbol '{symbol}' in universe {universe}")]
    UnknownSymbol { symbol: String, universe: String },
    #[error("presentation file: {0}")]
    File(String),
    #[error("{0}")]
    Other(String),
}
