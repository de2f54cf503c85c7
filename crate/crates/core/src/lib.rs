//! Exact Laguerre-Wronskian polynomials indexed by pairs of partitions, their
//! coalescence calculus, closed-form spectral data of the associated rational
//! extensions of the harmonic oscillator, and the free-field diagonalization
//! of the first quantum KdV hamiltonians at central charge -2.

pub mod coalescence;
pub mod error;
pub mod exactalg;
pub mod numeric;
pub mod par;
pub mod partitions;
pub mod qkdv;
pub mod shiftsym;
pub mod spectra;
pub mod verify;
pub mod wronskian;

pub use error::{Error, Result};
