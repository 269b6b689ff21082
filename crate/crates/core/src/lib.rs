//! Gain graphs over cyclic groups of roots of unity, with mixed graphs
//! (gains `1`, `i`, `-i`) as the main case.
//!
//! - [`switching`]: switching equivalence via fundamental cycles, balance,
//!   and the negation test.
//! - [`spectral`]: Hermitian spectra, characteristic polynomials from
//!   elementary subgraphs, Cartesian products.
//! - [`census`]: switching-class counts and sizes, brute force and closed forms.
//! - [`symmetry`]: automorphism groups and switching isomorphism.
//! - [`format`]: the `.gg` text format.
//!
//! Combinatorics runs on exact exponent arithmetic. Numerics are generic
//! over [`Scalar`] (`f32` or `f64`); the `*64` aliases fix `f64`.
//!
//! ```
//! use gainswitch::{spectrum, switching_equivalent, GainGraph};
//!
//! // A triangle with one arc: its cycle gain is i.
//! let g = GainGraph::from_exponents(3, 4, &[(0, 1, 1), (1, 2, 0), (2, 0, 0)], true).unwrap();
//! let s = spectrum::<f64>(&g, 1e-12).unwrap();
//! assert!((s.eigenvalues[2] - 3f64.sqrt()).abs() < 1e-12);
//! assert!(switching_equivalent(&g, &g).unwrap().is_equivalent());
//! ```

pub mod census;
pub mod error;
pub mod format;
pub mod gain;
pub mod gain_graph;
pub mod graph;
pub mod limits;
pub mod scalar;
pub mod spectral;
pub mod switching;
pub mod symmetry;

pub use census::{
    alpha_closed_form, alpha_vector, block_decompose, brute_force_census, class_count_bounds, class_size_by_blocks,
    cut_edge_lower_bound, cycle_class_size, enumerate_gamma, is_cactus, parse_face_structure, plane_class_count,
    plane_class_size, Census, ClassCountBounds, ClassCountVector, FaceStructure, GammaMatrix,
};
pub use error::{Error, Result};
pub use format::{parse_gg, write_gg, GgFile};
pub use gain::{gain_conj, gain_mul, Gain, GainGroup};
pub use gain_graph::{build_gain_graph, hermitian_matrix, GainGraph, HermitianMatrix, SwitchingFunction};
pub use graph::{EdgeId, SimpleGraph};
pub use limits::Limits;
pub use scalar::Scalar;
pub use spectral::{
    cartesian_product, char_poly_elementary, cospectral, is_balanced_spectrally, spectrum, CharPoly, Spectrum,
};
pub use switching::{
    cycle_gain, equivalent_to_negation, fundamental_cycles, gain_character, is_balanced, normalize_to_forest,
    spanning_forest, switching_equivalent, Equivalence, FundamentalCycleBasis, GainCharacter, SpanningForest,
};
pub use symmetry::{
    act, automorphisms, gain_automorphisms, mixed_aut_decomposition, orbit_of_class, switching_isomorphic, AutGroup,
    VertexPermutation,
};

pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type CharPoly64 = CharPoly<f64>;
pub type CharPoly32 = CharPoly<f32>;
pub type HermitianMatrix64 = HermitianMatrix<f64>;
pub type HermitianMatrix32 = HermitianMatrix<f32>;
