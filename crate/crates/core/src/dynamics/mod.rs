//! Rational maps on P^1: iteration, conjugation, periodic points,
//! multipliers, critical orbits and conjugacy over finite fields.

pub mod conjugacy;
pub mod critical;
pub mod dynatomic;
pub mod map;
pub mod spectrum;

pub use conjugacy::conjugacy_test;
pub use critical::{critical_points, orbit, pcf_check, wronskian, CriticalOrbit, CriticalPoint, OrbitResult, PcfResult};
pub use dynatomic::{dynatomic, dynatomic_degree, fixed_point_form};
pub use map::{Form, MobiusTransform, ProjPoint, RationalMap};
pub use spectrum::{multiplier_at, multiplier_spectrum, MultiplierData};
