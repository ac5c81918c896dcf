//! Equivariant Euler calculus for finite group actions, with exact
//! rational arithmetic throughout.
//!
//! The crate models a variety with a finite group action as a list of
//! isotropy-constant strata and computes:
//!
//! - pushforward, pullback, products and integrals of constructible
//!   functions ([`constructible`]);
//! - canonical constructible functions counting commuting tuples in
//!   stabilizers, and orbifold Euler characteristics of all orders,
//!   including the symmetric-product generating functions ([`orbifold`]);
//! - exact truncated graded power series, Chern classes of torus
//!   weights, Hankel/Schur determinants and evaluation in the
//!   cohomology of projective space ([`series`]);
//! - Thom–Porteous degeneracy-locus classes and their Segre refinement,
//!   down to Euler characteristics of singular loci ([`thom`]);
//! - the rank-stabilization picture of the circle group's classifying
//!   space ([`homology`]).
//!
//! Everything is deterministic: group elements are enumerated in a
//! fixed order, series terms are stored sorted, and no floating point
//! appears anywhere.

pub mod constructible;
pub mod error;
pub mod group;
pub mod gspace;
pub mod homology;
pub mod json;
pub mod orbifold;
pub mod rational;
pub mod series;
pub mod thom;

pub use constructible::{cross, CellMap, ConstructibleFunction};
pub use error::{Error, Result};
pub use group::{ElemId, FiniteGroup, Permutation, Subgroup};
pub use gspace::{Atom, AtomSpace, GSpace, Space, SpaceAtom, SpaceViolation};
pub use homology::{bgl1_truncated, Bgl1Stage};
pub use orbifold::{
    canonical_function, degree_c0, orbifold_euler, power_fixed_chi, power_orbifold_euler,
    quo_orb_function, quotient_pushforward_check, symprod_genfun,
};
pub use rational::{format_rat, parse_rat, rat, ratio, Rat};
pub use series::{
    chern_of_weights, hankel_det, proj_integrate, proj_substitute, DegreePolicy, GradedSeries,
    GradedVariable, ProjPoly, ProjRing, SeriesRing,
};
pub use thom::{
    degeneracy_class, euler_of_singular_locus, porteous_tp, segre_sm_smooth, BundleData,
    PorteousSpec,
};
