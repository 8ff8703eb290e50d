//! A computational engine for finite categories.
//!
//! Everything in this crate works by exhaustive search over explicitly
//! tabulated finite data: a category is a composition table, a functor is a
//! pair of index maps, and every universal property (pullbacks, cartesian
//! morphisms, orthogonality, injectivity) is certified by brute force rather
//! than taken on faith. All constructions are deterministic: candidate
//! searches run in index order, so the same input always produces the same
//! witness.
//!
//! The crate is `no_std` (with `alloc`): it performs no IO and has no
//! dependencies, so it can be embedded anywhere. File formats and a command
//! line front end live in the companion crate `fincat-cli`.
//!
//! Module map:
//!
//! * [`category`] — finite categories, validation, pullbacks, isomorphisms.
//! * [`functor`] — functors, natural transformations, equivalences.
//! * [`ofs`] — orthogonal factorization systems and their lemma suite.
//! * [`cartfs`] — cartesian factorization systems, injective objects.
//! * [`fibration`] — Grothendieck fibrations and the round trip between
//!   fibrations and cartesian factorization systems.
//! * [`indexed`] — strict indexed categories, the Grothendieck construction,
//!   fiberwise opposites, and lens categories.
//! * [`dual`] — the fiberwise dual of a cartesian factorization system,
//!   built from spans.
//! * [`double`] — thin double categories of squares, and the equivalence
//!   between the lens-style and span-style constructions.
//! * [`fixtures`] — the built-in fixture categories used by the test suite
//!   and the CLI's bundled checks.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cartfs;
pub mod category;
pub mod double;
pub mod dual;
pub mod fibration;
pub mod fixtures;
pub mod functor;
pub mod indexed;
pub mod ofs;

pub use category::{FiniteCategory, MorId, ObjId, PullbackSquare};
pub use functor::{Functor, NaturalTransformation};
