//! Noncommutative polynomials in two generators and the rewriting engines
//! that put them into normal (`A^i B^j`) or antinormal (`B^j A^i`) form
//! under a prescribed commutation relation.

mod algebra;
mod bivariate;
mod lmap;
mod poly;
mod relation;
mod rewrite;
mod word;

pub use algebra::{all_orderings, Algebra, Basis};
pub use lmap::l_map;
pub use poly::NCPoly;
pub use relation::{poly_of_gen, Relation};
pub use word::{Gen, NCWord};
