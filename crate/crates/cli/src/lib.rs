//! Library side of the `osp-capelli` command: report formatting, the
//! verification suite and the subcommands.

pub mod commands;
pub mod output;
pub mod suite;
