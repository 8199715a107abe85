//! Text formats, a threaded verification runner and the `dmx` command line
//! on top of `dmx-core`.

pub mod app;
pub mod format;
pub mod runner;
