//! Action-angle data for the SU(3) magnetic systems: root phases, torus angles measured from
//! a local section, frequency matrices and canonically rescaled angles.

pub mod bracket;
pub mod chart;
pub mod error;
pub mod frame;
pub mod roots;
pub mod section;

pub use bracket::{action_bracket, differential, poisson_fd};
pub use chart::{normalizer, AngleChart, LiouvilleChart, FD_STEP};
pub use error::{AngleError, Result};
pub use frame::{frame_coefficients, frequency_exact, torus_frame, torus_shift, Casimirs};
pub use roots::{
    angles_from_phases, phases_of_matrix, reduce_angle, root_coordinates, root_phases, torus_angles, unwrap_near,
    LEFT_INVERSE, THETA,
};
pub use section::{default_offset, Section};
