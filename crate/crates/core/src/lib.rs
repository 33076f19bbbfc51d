//! Exact machinery for the six-dimensional representation of PSL(2,13):
//! cyclotomic arithmetic, invariant forms, q-series and the verification
//! suites built on top of them.

pub mod exact;
pub mod polynomial;
pub mod group;
pub mod forms;
pub mod qseries;
pub mod verify;
