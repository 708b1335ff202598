//! Proper learning of Boolean halfspaces with small nonnegative integer
//! weights from membership queries.
//!
//! The crate is `no_std` (it needs `alloc`) and contains every algorithm:
//!
//! * [`assignment`] and [`ball`]: bit-vector assignments and Hamming balls.
//! * [`halfspace`]: the `[w·x >= u]` representation, canonical thresholds and
//!   the structural predicates (minterms, relevance, symmetry).
//! * [`witness`]: ball-local witness searches.
//! * [`lemmas`]: constructive bounded-prefix permutation, zero-sum partition
//!   and pair-target subset.
//! * [`automaton`]: layered partial-sum automata, equivalence with a
//!   lexicographically smallest witness.
//! * [`oracle`]: round-structured membership oracles.
//! * [`learner`]: the two-round adaptive learner and the one-round
//!   non-adaptive learner.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod assignment;
pub mod automaton;
pub mod ball;
mod error;
pub mod halfspace;
pub mod learner;
pub mod lemmas;
pub mod oracle;
pub mod witness;

pub use assignment::{Assignment, MAX_DIM};
pub use automaton::{Combiner, Equivalence, LayeredAutomaton};
pub use error::Error;
pub use halfspace::Halfspace;
pub use oracle::{AnswerIndex, MembershipOracle, OracleStats, QueryTranscript, SimulatedOracle};

pub type Result<T, E = Error> = core::result::Result<T, E>;
