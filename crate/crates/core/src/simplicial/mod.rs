//! Finite simplicial complexes, their (co)chains, and (co)homology.

pub mod catalog;
pub mod cochain;
pub mod cohomology;
pub mod complex;

pub use catalog::{catalog, catalog_entry, catalog_names, CatalogEntry, CatalogError, CATALOG};
pub use cochain::{
    boundary, boundary_matrix, coboundary, coboundary_matrix, mod_one, Chain, Cochain, CochainError,
    DegreeOutOfRange, Ring,
};
pub use cohomology::{
    chain_boundary_matrix, cohomology, homology_basis, homology_group, integral_cocycle_basis,
    rational_betti, rational_cocycle_basis, BasisDefect, CohomologyGroup, HomologyBasis,
};
pub use complex::{simplex_label, validate, Simplex, SimplexListing, SimplicialComplex, Violation};
