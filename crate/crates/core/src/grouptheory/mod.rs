//! Finitely presented groups: words, Tietze simplification, abelianization,
//! coset enumeration, finite quotients and Alexander polynomials.

mod abelian;
mod coset;
mod finite;
mod fox;
mod order30;
mod snf;
mod tietze;
mod word;

pub use abelian::{abelianization, relation_matrix, AbelianInvariants};
pub use coset::{coset_enumeration_order, coset_table, CosetTable, DEFAULT_COSET_BOUND};
pub use finite::{find_epimorphisms, Epimorphism, FiniteGroupTable};
pub use fox::{alexander_polynomial, fox_derivative, fundamental_identity_holds, ring_mul, GroupRingElement};
pub use order30::{check_witness, identify_order30, Order30, Order30Verdict, WitnessCheck};
pub use snf::{integer_invariants, invariant_factors, Euclidean};
pub use tietze::{tietze_simplify, tietze_simplify_tracked, Simplified, TietzeLimits};
pub use word::{FreeWord, GroupPresentation};
