//! Exact-arithmetic invariants of truncated λ-graph systems.
//!
//! A λ-graph system is a labeled Bratteli diagram `(V, E, λ, ι)` with
//! levels `V_l`, labeled edges `E_{l,l+1}`, and a surjection
//! `ι: V_{l+1} → V_l`, subject to three axioms: every symbol matrix is
//! 0/1 and left-resolving, ι is a genuine surjection (each column of its
//! 0/1 matrix carries exactly one 1, each row at least one), and the
//! pair satisfies the local property
//! `A(α)_{l,l+1} I_{l+1,l+2} = I_{l,l+1} A(α)_{l+1,l+2}` per symbol α.
//! This crate represents finite truncations of such systems over levels
//! `base..=top`, checks those axioms exactly, and computes the strong and
//! weak extension groups of the presented subshift:
//!
//! * `Ext_w^1 = ℤ_I / (I - A_𝔏) ℤ_I` and
//!   `Ext_s^1 = ℤ_I / (I - A_𝔏) ℤ_{I,0}` as towers of cokernels
//!   `ℤ^{m(L)} / (I - A)_{L,L+1} ℤ^{m(L+1)}` with connecting maps induced
//!   by ι, reported with a stabilization verdict;
//! * `Ext_w^0 = Ker(I - A_𝔏)` on `ℤ_I` and `Ext_s^0` its sum-zero part,
//!   as kernel lattices of the truncated window;
//! * the connecting data of the cyclic six-term sequence relating all
//!   four, with one verdict per junction.
//!
//! All arithmetic is exact over arbitrary-precision integers; groups are
//! reported in invariant-factor form. The crate is `no_std` (with
//! `alloc`) so the linear algebra core stays portable; IO lives in the
//! companion CLI crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod builders;
pub mod ext;
pub mod intlinalg;
pub mod lgs;

pub use intlinalg::{
    cokernel, column_hnf, hermite_normal_form, image_restricted, induced_map_on_presentations,
    kernel_basis, quotient_by_sublattice, smith_normal_form, sum_zero_basis, FGAbelianGroup,
    InducedMap, InducedMapError, IntMatrix, LatticeBasis, LatticeError, QuotientPresentation,
    SmithDecomposition,
};

pub use builders::{
    cuntz, cuntz_krieger, dyck, dyck_jkl_reference, dyck_with_cap, markov_coded, BuilderError,
    DirectedGraphSpec, DYCK_LEVEL_CAP_DEFAULT,
};

pub use lgs::{
    check_commutation, summed_matrix, symbol_matrix, validate, Alphabet, AxiomViolation,
    CommutationReport, DegeneracyWarning, LgsError, TruncatedLambdaGraphSystem, ValidationReport,
};

pub use ext::{
    a_hat, ck_six_term, ck_strong_ext, ck_weak_ext, iota_hat, is_primitive, s_map,
    six_term_check, strong_ext0_truncated, strong_ext1_tower, weak_ext0_truncated,
    weak_ext1_tower, ExtError, GroupTower, IotaHatClass, JunctionVerdict, KernelTruncation,
    SixTermReport, Stabilization,
};
