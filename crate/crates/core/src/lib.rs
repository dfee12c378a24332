//! Exactly solvable model of two non-interacting qubits (a system and a
//! probe) dephasing through a common bosonic bath, together with the
//! control-theoretic analyses it admits: reduced dynamics along three
//! cross-checked routes, reachable-set ellipsoids on the Bloch ball,
//! accessibility certificates, and the exact-swap time and coupling
//! design for commensurate baths.

pub mod cli;
pub mod dynamics;
pub mod model;
pub mod oracle;
pub mod reachability;
