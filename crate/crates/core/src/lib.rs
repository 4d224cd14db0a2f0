//! Toric reflection groups: presentations, coset enumeration,
//! Reidemeister–Schreier rewriting, Coxeter and Garside normal forms, and
//! the homomorphisms tying them together.

pub mod cli;
pub mod cosets;
pub mod coxeter;
pub mod cyclotomic;
pub mod garside;
pub mod maps;
pub mod presentations;
pub mod reps;
pub mod schreier;
pub mod words;
