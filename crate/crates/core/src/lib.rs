//! RO(C4)-graded homotopy Mackey functors of the Eilenberg-MacLane spectrum of the constant
//! Mackey functor Z, computed from cellular chains and checked against a closed-form answer.

pub mod chains;
pub mod intlin;
pub mod mackey;
pub mod engine;
pub mod closedform;
pub mod groupcoh;
pub mod cli;
