//! Arithmetic of the Tribonacci numeration system and the structures built on it.
//!
//! - [`numeration`]: canonical Tribonacci words, the successor map `out`, canonization of improper words.
//! - [`array`](mod@array): the Trithoff array, its precolumns and occurrence census.
//! - [`extratrib`]: bi-infinite sequences obeying the Tribonacci rule and their location in the array.
//! - [`tribword`]: certified intervals for the Tribonacci constant, deviation records, the Tribonacci word.
//! - [`digitpatterns`]: Fibbinary, Tribbinary, Fibternary and Tribternary numbers.
//! - [`oeis`]: b-file parsing, caching and comparison against the generators.
//! - [`verify`]: verification suites producing structured reports.
//! - [`cli`]: the `trithoff` command line.

pub mod array;
pub mod cli;
pub mod digitpatterns;
pub mod extratrib;
pub mod numeration;
pub mod oeis;
pub mod tribword;
pub mod verify;

pub(crate) fn decimal<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn decimals<T: std::fmt::Display, S: serde::Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}
