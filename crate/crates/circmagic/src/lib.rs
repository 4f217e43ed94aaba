//! Distance magic labelings of circulant graphs of valency 6.
//!
//! A circulant `Circ(n; S)` is the graph on the vertex set `Z_n` in which
//! `x` and `y` are adjacent exactly when `y - x` lies in the symmetric
//! connection set `S = {±a, ±b, ±c}`. A distance magic labeling is a
//! bijection from the vertices onto `{1, ..., n}` whose neighbor-label sum
//! is the same constant `κ` at every vertex; at valency 6 the only possible
//! constant is `κ = 3(n + 1)`.
//!
//! The crate decides, constructs and verifies such labelings:
//!
//! - [`modular`] — exact residue arithmetic (gcd, modular inverse, p-parts,
//!   a Chinese remainder solver).
//! - [`circulant`] — normalized connection sets, adjacency, multiplier
//!   action of `Z_n^*`, canonical forms and enumeration of all valency-6
//!   circulants of a given order up to multiplier equivalence.
//! - [`spectra`] — the admissible set `A_n(S) = {j : χ_j(S) = 0}` computed
//!   two independent ways: integer congruence tests that classify each
//!   admissible character into types 1, 2 and 3, and an exact cyclotomic
//!   polynomial oracle. No floating point anywhere.
//! - [`families`] — constructors and recognizers for the six classified
//!   parametric families, the type-3 necessary-condition filter, and the
//!   full decision procedure [`families::decide`].
//! - [`labelings`] — the constructive labelers for the classified families,
//!   labeling transport along multiplier isomorphisms, and the universal
//!   verifier.
//! - [`oracle`] — pruned backtracking search for labelings at desk scale,
//!   with kernel prefilters and symmetry breaking, plus an exhaustive scan
//!   harness comparing theorem verdicts against search verdicts.
//! - [`report`] / [`cli`] — JSON-line reports and the command layer behind
//!   the `circmagic` binary.
//!
//! Run `cargo run --example admissible_sets` (and the other examples) for a
//! tour of the main capabilities.

pub mod circulant;
pub mod cli;
pub mod families;
pub mod labelings;
pub mod modular;
pub mod oracle;
pub mod report;
pub mod selftest;
pub mod spectra;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(i64, i64),
    #[error("no inverse of {a} modulo {m}")]
    NoInverse { a: i64, m: i64 },
    #[error("degenerate connection set: {0}")]
    DegenerateSet(String),
    #[error("{q} is not a unit modulo {n}")]
    NotAUnit { q: i64, n: i64 },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("labels are not a bijection onto 1..={n}")]
    NotABijection { n: i64 },
    #[error("order mismatch: graph has {graph} vertices, labeling has {labeling}")]
    OrderMismatch { graph: i64, labeling: i64 },
    #[error("coordinate scaffold is not bijective: {0}")]
    ScaffoldDegenerate(String),
    #[error("multiplier {q} does not carry the set onto the target")]
    TransportMismatch { q: i64 },
    #[error("not distance magic: {0}")]
    NotDistanceMagic(String),
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("no contract labeling found for ({n0}, {c0}); this contradicts the tetravalent classification and indicates a bug")]
    ContractSearchFailed { n0: i64, c0: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
