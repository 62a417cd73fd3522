//! Markov transition matrices, Cuntz-Krieger K-groups and Bowen-Franks
//! groups for periodic kneading sequences of the quadratic family
//! `f_μ(x) = μx(1-x)`.
//!
//! ```
//! use kneading::{k_groups, parse_word, AbelianGroup};
//!
//! let report = k_groups(&parse_word("RLLRRC").unwrap()).unwrap();
//! assert_eq!(report.a_closed_form, 2);
//! assert_eq!(report.k0, AbelianGroup::cyclic(2));
//! assert!(report.k1.is_trivial());
//! ```

pub mod dynamics;
pub mod error;
pub mod intlinalg;
pub mod ktheory;
pub mod markov;
pub mod symbolic;

pub use error::{Error, Result};
pub use intlinalg::{
    cokernel, is_irreducible, is_unimodular, kernel_rank, smith_normal_form, AbelianGroup,
    IntMatrix, SmithForm,
};
pub use ktheory::{bf_group, closed_form_a, k_groups, verify_sweep, verify_word, KGroupReport};
pub use markov::{build_matrices, build_orbit, transition_matrix, OrbitModel, TheoremMatrices};
pub use symbolic::{
    enumerate_admissible, invariant_coordinate, is_admissible, mt_compare, parse_word,
    KneadingWord, Symbol, SymbolSeq,
};
