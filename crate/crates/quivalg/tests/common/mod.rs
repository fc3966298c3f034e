//! Shared test oracles, independent of the rewriting engine.

pub mod degreewise;
