//! Exact computations for the Seiberg-Witten theory of Seifert fibered
//! spaces: Seifert data arithmetic, Hirzebruch-Jung resolutions, the
//! Riemann-Roch dimension of flow moduli on the resolved ruled surface, and
//! irreducible Floer homology tables of Seifert homology spheres.
//!
//! Everything is computed with arbitrary precision rationals; no floating
//! point is used anywhere.

pub mod error;
pub mod foundation;
pub mod hj;
pub mod moduli;
pub mod notation;
pub mod orbifold;
pub mod resolution;

pub use error::{Error, Result};
pub use foundation::Rational;
pub use hj::{decompose, expand, Decomposition, HjChain};
pub use moduli::{
    cs_coefficient, enumerate_components, floer_table, floor_half_canonical, interpolation_dimension,
    ComponentKind, CriticalComponent, CriticalSet, Endpoint, FloerTable, Generator, Sign,
};
pub use orbifold::{BundleData, OrbifoldBase, SeifertFibration};
pub use resolution::{dim_y, flow_dimension, ChernVector, PlumbingLattice};
