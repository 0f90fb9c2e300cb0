//! Exact combinatorics of the Young-Fibonacci lattice and its jump graph.
//!
//! The lattice lives on words over {1, 2}, graded by digit sum. The *jump
//! graph* puts a copy of the word set on every level n and draws an edge
//! from (w, n) to (v, n+1) whenever w <= v, so its length-n paths are the
//! nonstrict chains of the order. This crate computes, in exact big-integer
//! and rational arithmetic throughout:
//!
//! - saturated chain counts in the Hasse diagram and jump-graph path counts
//!   D(w, v, n), by three independent routes (the defining recursion, the
//!   first-digit sum recurrences, and a binomial closed form);
//! - the integer coefficient families F(w, v, i) behind the closed form;
//! - the boundary polynomials Q_{w,v}(p) tying those coefficients to the
//!   central measures;
//! - the two-parameter family of central measures (a tail word plus a
//!   rational p) on infinite paths of the jump graph restricted to words
//!   with at most K twos, including prelimit approximations, convergence
//!   tables, level-mass checks, and a seeded path sampler.
//!
//! The `yfib` binary exposes all of it on the command line.

pub mod count;
pub mod error;
pub mod fcoef;
pub mod measure;
pub mod poly;
pub mod word;

pub use error::{Error, Result};
pub use word::Word;
