//! Splittings of an edge ideal along an induced chordless cycle.
//!
//! For a cycle `C_k` of `G`, `J` is the edge ideal of the cycle and `K` the
//! edge ideal of `G \ C_k`. A splitting function sends each minimal
//! generator `w` of `J ∩ K` to a pair `(phi(w), psi(w))` of generators of
//! `J` and `K` with `lcm(phi(w), psi(w)) = w`, such that for every nonempty
//! subset `S` both `lcm(phi(S))` and `lcm(psi(S))` strictly divide
//! `lcm(S)`.

mod abc;
mod certify;
mod function;

pub(crate) use abc::check_partition;
pub use abc::{abc_decomposition, complement_ideal, cycle_ideal, AbcDecomposition};
pub use certify::{certify, CertifyOptions, SplitCertificate, Verdict};
pub use function::{
    build_splitting_function, candidate_table, check_subset, first_candidate_function,
    lcm_candidates, search_splitting_function, verify_lcm_condition, verify_strict_divisibility,
    Assignment, SplittingFunction, SubsetCheck, DEFAULT_SEARCH_LIMIT, DEFAULT_VERIFY_LIMIT,
};
