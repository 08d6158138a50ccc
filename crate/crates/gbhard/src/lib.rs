//! File formats, parallel campaigns and the `gbhard` command line on top
//! of `gbhard-core`.

pub mod campaign;
pub mod cli;
pub mod formats;
pub mod level_file;
