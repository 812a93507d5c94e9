//! Exact symbolic toolkit for the PGL(3)/SL(3) deformation variety of the
//! figure-eight knot complement: gluing-equation generation, a Groebner
//! engine with the elimination/splitting/saturation pipeline, peripheral
//! eigenvalue ideals and the A-polynomial, exact tautological matrix
//! representations, and numeric Newton + LLL recovery machinery.

pub mod arith;
pub mod groebner;
pub mod poly;
pub mod ratfun;
pub mod triangulation;

pub use arith::{Coeff, Quad, Rat};
pub use groebner::{buchberger, Budget, GroebnerBasis, Ideal};
pub use poly::{MonomialOrder, Poly, QPoly, Vars};
