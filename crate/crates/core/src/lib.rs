//! Time-periodic solutions of the cubic wave equation on a cylinder:
//! exact perturbative construction, the Duffing reduction, and a
//! pseudospectral simulator for numerical validation.

pub mod cli;
pub mod duffing;
pub mod modes;
pub mod pdesim;
pub mod rational;
pub mod resonant;
pub mod trigpoly;
