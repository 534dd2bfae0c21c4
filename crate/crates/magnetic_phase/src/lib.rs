//! Magnetic geodesic flows on `T*(G/A)` in left-trivialized coordinates `[g, X]`.

pub mod error;
pub mod fields;
pub mod flow;
pub mod integrals;
pub mod report;
pub mod sample;
pub mod system;

pub use error::{MagneticError, Result};
pub use fields::{bracket_shortcut, geodesic_field, hamiltonian_field, hvf_moment, hvf_slice, twisted_bracket};
pub use flow::{casimir_flow, closed_form_x, integrate_field, integrate_flow, FlowMethod, FlowTrajectory};
pub use integrals::{FunctionSpec, IntegralFunction, SliceFn, TaggedPoly};
pub use report::{conservation_json, conservation_report, write_trajectory_csv, ConservationEntry};
pub use sample::{is_generic, random_group, random_regular_point};
pub use system::{kinetic_energy, moment_map, omega, slice_map, CaseTag, MagneticSystem, PhasePoint, TangentVector};
