//! Certificates for the superintegrable chains on `T*(SU(3)/T)` and `T*(SU(3)/S(U(2) x U(1)))`.

pub mod certify;
pub mod error;
pub mod irregular;
pub mod report;
pub mod restrictions;
pub mod sampled;
pub mod table;

pub use certify::{
    algebra_generators, center_check, center_generators, dimension_report, jacobian_rank_pi1, measure_dimensions,
    moment_generators, phase_rank, slice_generators, Dimensions, RankResult,
};
pub use error::{Result, VerifyError};
pub use irregular::{a_matrix, a_matrix_minors, a_matrix_rank, expected_minors, phi_relation_irregular, phi_residual, PhiForm};
pub use report::{CertificateReport, Check};
pub use restrictions::{casimir_restrictions, listed_irregular_restrictions, restriction_report};
pub use sampled::{mixed_block_check, moment_closure_check};
pub use table::{bracket_table_regular, cubic_relation_check, BracketTable, RegularChain, RegularTableReport};
