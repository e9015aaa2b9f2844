pub mod bench;
pub mod decider;
pub mod formula;
pub mod oracle;
pub mod ordinal;
pub mod qbf;
pub mod sample;
pub mod selftest;
pub mod setcode;
