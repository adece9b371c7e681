//! One-parameter families of maps over GF(q)(t): isospectrality, the
//! wildly ramified family `ψ(z^p) + a z`, Lattès maps and triviality probes.

pub mod family;
pub mod lattes;

pub use family::{counterexample_family, isospectral_check, triviality_probe, Counterexample, Family, Isospectrality, Triviality};
pub use lattes::{lattes_from_curve, lattes_isospectral_probe, EllipticCurve, LattesProbe};
