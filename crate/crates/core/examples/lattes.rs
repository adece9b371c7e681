// The doubling Lattès map of y^2 = x^3 + t x + 1 over GF(7)(t): its
// spectra lie in GF(7) although the curve's j-invariant varies.

use isospec::algebra::{Field, FiniteField};
use isospec::dynamics::ProjPoint;
use isospec::families::{lattes_from_curve, lattes_isospectral_probe, EllipticCurve};
use isospec::Limits;

pub fn run_example() -> isospec::Result<()> {
    let f = Field::rational_function(FiniteField::prime(7)?);
    let t = f.t().unwrap();
    let probe = lattes_isospectral_probe(&f, t, f.one(), 2, &Limits::default())?;
    println!("j = {}, constant: {}", f.format(&probe.j_invariant), probe.j_constant);
    println!("spectra constant for n <= 2: {}", probe.constant_coordinates);

    let f7 = Field::prime(7)?;
    let e = EllipticCurve::new(&f7, f7.from_i64(3), f7.one())?;
    let phi = lattes_from_curve(&e, 2, false)?;
    for (x, y) in e.points().unwrap_or_default() {
        let image = phi.evaluate(&ProjPoint::Affine(x.clone()));
        let doubled = e.double(&x, &y).map(|(x2, _)| x2);
        println!("  x = {} -> {}", f7.format(&x), image.format(&f7));
        assert_eq!(image, doubled.map_or(ProjPoint::Infinity, ProjPoint::Affine));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
