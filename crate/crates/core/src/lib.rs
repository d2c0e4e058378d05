//! Truncated q-series, representation numbers and mod-3 congruence checks for
//! overpartitions, overpartitions into odd parts, `ped` and `pod`.

pub mod arith;
pub mod fivesquares;
pub mod partitions;
pub mod quadforms;
pub mod series;
pub mod verify;
