//! Exact and numeric substrate for su(2) and su(3): scalars in Q(sqrt 3), structure
//! constants, the trace form, the adjoint action, centralizers and regularity.

pub mod algebra;
pub mod cmatrix;
pub mod error;
pub mod group;
pub mod linalg;
pub mod numeric;
pub mod scalar;
pub mod split;
pub mod su;

pub use algebra::{LieAlgebraSpec, Root, RootData};
pub use cmatrix::CMatrix;
pub use error::{LieError, Result};
pub use group::{adjoint_group, exp_map, GroupElement};
pub use numeric::NumericAlgebra;
pub use scalar::{CScalar, Scalar};
pub use split::{centralizer_basis, centralizer_of, regularity, regularity_f64, Regularity, SubalgebraSpec};
pub use su::{build_su2, build_su3_chevalley, build_su3_gellmann};
