// Reduction at a place and the tameness test.

use isospec::algebra::Field;
use isospec::dynamics::RationalMap;
use isospec::valuation::{reduce_at_place, tame_check, Place, TameResult};
use isospec::Limits;

pub fn run_example() -> isospec::Result<()> {
    let l = Limits::default();
    let q = Field::rationals();
    for (num, p) in [(vec![0, 0, 0, 1], 3u64), (vec![0, 0, 1], 7), (vec![0, 0, 0, 0, 0, 1], 3)] {
        let phi = RationalMap::from_affine_i64(&q, &num, &[1])?;
        let place = Place::prime(p)?;
        let r = reduce_at_place(&phi, &place)?;
        print!("{} at {}: reduction degree {}", phi.spec(), place.spec(), r.degree);
        match tame_check(&phi, &place, 2, &l) {
            Ok(TameResult::Wild { e, point, field, .. }) => println!(", wild (e = {e} at {})", point.format(&field)),
            Ok(other) => println!(", {other:?}"),
            Err(e) => println!(", {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
