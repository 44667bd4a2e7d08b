//! Burrows-Wheeler transforms for string collections.
//!
//! A collection of byte strings admits several non-equivalent transforms
//! depending on how end-of-string markers are handled: the extended
//! transform over conjugates, the single- and multi-dollar forms, and the
//! concatenation-based forms. This crate builds all of them from one sorted
//! backbone, inverts them exactly, locates where they can differ (the
//! interesting intervals of the suffix skeleton), and minimizes the number
//! of runs over all input orders, both exactly and with the colex/plus
//! heuristics.
//!
//! The crate is `no_std` (alloc only); IO, file formats, and the command
//! line front end live in the companion `colbwt-cli` crate.
//!
//! ```
//! use colbwt::{StringCollection, transforms, optimize};
//!
//! let c = StringCollection::from_lines(b"CTGA\nTG\nGTCC\nTCA\nCGACC\nCGA\n").unwrap();
//! let t = transforms::mdol_ebwt(&c);
//! assert_eq!(t.count_runs(true), 19);
//! assert_eq!(optimize::opt_bwt(&c).runs, 14);
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arrays;
pub mod collection;
pub mod dynamics;
pub mod error;
pub mod intervals;
pub mod inversion;
pub mod meta;
pub mod optimize;
pub mod order;
pub mod transforms;

pub use collection::{Sequence, SentinelPolicy, StringCollection, DOLLAR, HASH};
pub use error::{Error, Result};
pub use transforms::{Transform, Variant};
