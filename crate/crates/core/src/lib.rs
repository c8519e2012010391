//! Exact computer algebra for graded quotients of polynomial rings over Q.

pub mod closedforms;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod parse;
pub mod seqprops;
pub mod poly;
pub mod resolution;
pub mod ring;

pub use groebner::{buchberger, normal_form, s_polynomial, GroebnerBasis};
pub use parse::{parse_polynomial, ParseError};
pub use poly::{Coeff, Homogeneity, PolyError, Polynomial};
pub use ring::{Monomial, MonomialOrder, Ring, RingSpec};
