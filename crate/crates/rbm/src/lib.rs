//! Standard-library side of the rare correlated itemset miner: FIMI
//! transaction files, representation files, a rayon-backed executor and the
//! `rbm` command-line front end. The algorithms live in [`rbm_core`].

pub mod cli;
pub mod fimi;
pub mod repfile;
pub mod threads;

pub use rbm_core;
