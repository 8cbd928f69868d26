//! Degree-by-counting for homogeneous ideals: Groebner degeneration to the
//! initial ideal, polarization to a squarefree monomial ideal, prime
//! decomposition through the Stanley-Reisner correspondence, and rendering of
//! the resulting components as tablets of hieroglyphs. K-polynomials,
//! multidegrees and Hilbert functions provide independent cross-checks, and a
//! zoo of determinantal, Schubert, and commuting-matrix families exercises the
//! pipeline.

pub mod cli;
pub mod families;
pub mod fixtures;
pub mod groebner;
pub mod kpoly;
pub mod monomial;
pub mod parse;
pub mod ring;
pub mod stanley_reisner;
pub mod tablet;
