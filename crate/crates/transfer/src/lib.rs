//! Transfers of finite groups and the noncommutative determinant route to
//! their properties: exact group algebras over pluggable coefficient rings,
//! left/right regular representations into matrices over RH, the determinant
//! det(psi(L_T(alpha))) in R(H/K), and a verification suite that checks the
//! transfer identities exhaustively on a fixed battery of groups.

pub mod algebra;
pub mod battery;
pub mod cli;
pub mod coset;
pub mod error;
pub mod group;
pub mod matrix;
pub mod ring;
pub mod spec_file;
pub mod transfer;

pub use algebra::{chi_dot, parse_element, project_element, AlgebraElement};
pub use battery::{standard_battery, BatteryMember};
pub use coset::{CosetPermutation, CosetSystem, Side};
pub use error::{Error, Result};
pub use group::{FiniteGroup, QuotientGroup, SubgroupRef};
pub use matrix::{
    change_of_basis, det_cofactor, det_commutative, left_regular_rep, psi_matrix,
    right_regular_rep, AlgebraMatrix,
};
pub use ring::{Coeff, Ring};
pub use transfer::{
    det_transfer, left_transfer, right_transfer, sign_of, verify_properties,
    verify_properties_with_systems, TransferValue, VerificationReport,
};
