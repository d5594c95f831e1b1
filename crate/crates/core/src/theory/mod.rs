//! Signatures and terms, algebras over an ambient with a factorisation
//! system, and the lifting engine: factoring an oplax map `k: X → Y` over
//! the identity through `(E, M)` yields an algebra `Z`, whose operations on
//! morphisms and whose generating 2-cells are unique diagonal fillers.
//!
//! The main instantiation takes `X` the funny tensor, `Y` the cartesian
//! product and `k = (1, K)` in 2-Cat with (boba, lff); `Z` is then the Gray
//! tensor with its associator, unitors and symmetry.

pub mod algebra;
pub mod ambient;
pub mod coherence;
pub mod lifting;
pub mod monoidal;
pub mod term;

pub use algebra::{eval_term, eval_term_mor, evaluate_cell_expr, oplax_extend, Algebra, CellExpr, Generator, OplaxMap};
pub use ambient::{Ambient, FinCat, TwoCat};
pub use coherence::{
    check_naturality, check_oplax_monoidal, coherence_check, equations, Axiom, CoherenceReport, Equation, OplaxReport,
};
pub use lifting::{factor_operations, Factored, LeftMap, OpFactor, RightMap};
pub use monoidal::{
    generator, monoidal_generators, CartesianAlgebra, ComparisonK, Discrete, DiscreteMap, FunnyAlgebra, MonoidalSetup,
};
pub use term::{substitute, terms_up_to, Node, Signature, Term};
