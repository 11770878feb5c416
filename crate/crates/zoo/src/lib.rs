//! Worked examples of combinatorial Hopf algebras: Faà di Bruno, the
//! quasi-symmetric functions and the Malvenuto–Reutenauer algebra.

pub mod fdb;
pub mod mr;
pub mod qsym;
