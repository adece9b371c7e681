// Root valuations from Newton polygons, and the attracting/repelling split
// of a spectrum at a place.

use isospec::algebra::{Field, Poly};
use isospec::dynamics::{multiplier_spectrum, RationalMap};
use isospec::valuation::{classify_spectrum, convention_self_test, newton_polygon, Place};
use isospec::Limits;

pub fn run_example() -> isospec::Result<()> {
    assert!(convention_self_test());
    let q = Field::rationals();
    // (x - 3)(x - 1/9)(x^2 - 6)
    let f = Poly::from_i64s(&q, &[-3, 1])
        .mul(&Poly::new(&q, vec![q.parse("-1/9")?, q.one()]))
        .mul(&Poly::from_i64s(&q, &[-6, 0, 1]));
    let np = newton_polygon(&f, &Place::Prime(3))?;
    for (v, m) in np.root_valuations() {
        println!("{m} root(s) of valuation {v}");
    }

    let phi = RationalMap::from_affine_i64(&q, &[0, 3, 0, 1], &[1])?;
    let m = multiplier_spectrum(&phi, 1, &Limits::default())?;
    let c = classify_spectrum(&m, &Place::Prime(3))?;
    println!(
        "z^3 + 3z at 3: {} attracting, {} indifferent, {} repelling",
        c.attracting, c.indifferent, c.repelling
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
