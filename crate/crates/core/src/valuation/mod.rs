//! Non-archimedean places: valuations, Newton polygons, reduction of maps
//! and tameness.

pub mod newton;
pub mod place;
pub mod reduce;

pub use newton::{classify_spectrum, convention_self_test, newton_polygon, NewtonPolygon, Segment, SpectrumClassification};
pub use place::{valuation, Place};
pub use reduce::{ramification_index, reduce_at_place, tame_check, Reduction, TameResult};
