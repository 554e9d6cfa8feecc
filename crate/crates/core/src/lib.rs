//! Exact weighted factorization-length distributions for numerical
//! semigroups with three generators.
//!
//! For `S = ⟨n1, n2, n3⟩` and weights `m = (m1, m2, m3)`, every factorization
//! `x` of `n` has weighted length `m · x`. [`length_multiset`] tabulates these
//! by brute force; [`count_on_line`] counts them in closed form. As `n` grows,
//! the rescaled histogram approaches the triangular density [`TriangleDensity`],
//! and [`verify_bound`] measures the discrepancy against explicit bounds.

pub mod bounds;
pub mod enumeration;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod statistics;
pub mod supersymmetric;
pub mod system;

pub use bounds::{refined_bound, theorem_bound, verify_bound, BoundInputs, BoundReport};
pub use enumeration::{
    count_in_window, count_on_line, enumerate_factorizations, length_multiset, length_multiset_for,
    scaled_histogram, weighted_length, Factorization, HistogramPoint, LatticeSegment, LengthMultiset,
    LineCounter, ScaledHistogram,
};
pub use error::{Error, Result};
pub use exact::{parse_rational, to_decimal_string, Fraction, Rational};
pub use geometry::{
    density_f, integrate_f, normalized_segment_length, segment_endpoints, SegmentEndpoints,
    TriangleDensity,
};
pub use statistics::{empirical_stats, predicted_stats, StatsKind, StatsReport};
pub use supersymmetric::{
    canonicalize_pair, decompose, is_element, translation_offset, verify_translation,
    CanonicalPair, Decomposition, SupersymmetricSystem, TranslationCheck,
};
pub use system::{
    direction_data, integer_point, residue_class, validate, DirectionData, Generators,
    IntegerPointWitness, LineSolver, ResidueClass, WeightSystem,
};
