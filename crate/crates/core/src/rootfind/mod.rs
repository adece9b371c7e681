//! Purely iterative root-finding: Newton's method, user templates, the
//! fixed-point multiplier identity and non-archimedean obstructions.

pub mod algorithm;
pub mod obstruction;
pub mod probe;

pub use algorithm::{newton_map, AlgorithmKind, IterativeAlgorithm};
pub use obstruction::{fixed_point_sum_check, residue_obstruction, FixedPointSum, Obstruction, ObstructionReason};
pub use probe::{convergence_probe, require_determined, ProbeTrajectory, ProbeVerdict};
