pub mod brute;
pub mod classify;
pub mod cli;
pub mod decomp;
pub mod descriptor;
pub mod error;
pub mod finite;
pub mod json;
pub mod ring;
pub mod smith;
pub mod survey;
pub mod verdict;
