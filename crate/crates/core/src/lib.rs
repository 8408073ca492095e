//! Antipodal-free open covers of spheres and mod-2 homology certificates for deleted squares.
//!
//! The crate has two halves. The combinatorial half builds skeleta of simplices
//! ([`simplicial`]), their deleted squares and swap quotients as regular CW complexes
//! ([`deleted_square`], [`cw`]) and computes mod-2 Betti numbers and free-facet structure
//! ([`homology`]). The geometric half builds and samples open covers of spheres by caps and
//! latitude bands ([`covers`]). [`checks`] ties both to the minimal-multiplicity tables and
//! drives the `antipodal` CLI.

pub mod checks;
pub mod covers;
pub mod cw;
pub mod deleted_square;
pub mod error;
pub mod homology;
pub mod simplicial;

pub use cw::CwComplex;
pub use deleted_square::{deleted_square, orbit_complex, swap, OrbitCell, ProductCell};
pub use error::{Error, Result};
pub use homology::{betti_profile, free_facet_report, gf2_rank, top_homology_vanishes, BettiProfile, Gf2Matrix};
pub use simplicial::{are_disjoint, facets_of, skeleton_complex, Face, SimplicialComplex};
