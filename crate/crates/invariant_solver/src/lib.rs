//! Commutants `S(g)^a`, slice invariants `S(m)^A`, generators with relations,
//! su(3) Casimirs, the shifted restriction `Res_W`, and Jacobian ranks.

pub mod casimir;
pub mod error;
pub mod generators;
pub mod rank;
pub mod space;

pub use casimir::{casimirs_su3, restrict_shift, EpsMode};
pub use error::{InvariantError, Result};
pub use generators::{indecomposable_generators, Generator, GeneratorSet};
pub use rank::{casimir_count, independence_rank};
pub use space::{invariant_space, is_invariant, InvariantBasis};
