//! Exact multivariate polynomials, divided differences, determinants and
//! basis changes.

mod det;
mod divided;
mod expand;
pub mod format;
mod monomial;
mod polynomial;
pub mod schur;
pub mod sem;

pub use det::determinant;
pub use divided::{
    divided_difference, divided_difference_by_division, divided_difference_letters,
    divided_difference_word,
};
pub use expand::schubert_expand;
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use schur::{conjugate, schur};
pub use sem::{elementary, sem_expand, sem_monomial, SemExpansion, SemIndex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("no SEM expansion with index bound m = {m}; retry with a larger bound")]
    InsufficientBound { m: usize },
    #[error("quantum variables are not allowed here")]
    QuantumVariables,
    #[error("invalid SEM index {0:?}: need j_k <= k")]
    BadSemIndex(Vec<u32>),
    #[error("polynomial is not in the span of Schubert polynomials for S_{n}")]
    NotInSpan { n: usize },
    #[error("coefficient does not fit the coefficient type")]
    Overflow,
    #[error("modular solve did not converge")]
    Unsolved,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
