//! Exact q-series engine for the Bailey pairs of the `A_2^(2)` standard
//! modules and for the Capparelli partition identities.

pub mod bailey;
pub mod dsl;
pub mod identities;
pub mod partitions;
pub mod series;
pub mod suite;
