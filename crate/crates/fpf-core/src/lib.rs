//! Braids, train tracks and lifts on the five-marked disk, with the
//! combinatorial search for fixed-point-free pseudo-Anosov maps.

#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod braid;
pub mod dynnikov;
pub mod invariants;
pub mod matrix;
pub mod poly;
pub mod strata;
pub mod track;
pub mod path;
pub mod corridor;
pub mod trackmap;
pub mod lift;
pub mod fdtc;
pub mod search;
pub mod automaton;
pub mod elimination;
