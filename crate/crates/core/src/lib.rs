//! Two thermally driven atoms coupled through a detuned cavity: master
//! equation solvers, closed-form solutions and entanglement measures.

pub mod adiabatic;
pub mod dynamics;
pub mod engine;
pub mod error;
pub mod measures;
pub mod model;
pub mod numkit;
pub mod state;

pub use error::{Error, Result};
