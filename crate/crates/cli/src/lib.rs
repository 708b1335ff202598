//! File formats, random targets, benchmarking and lemma verification on top
//! of [`hslearn`]. The `hslearn` binary is a thin clap front end over
//! these modules.

pub mod bench;
pub mod format;
pub mod generate;
pub mod run;
pub mod verify;
