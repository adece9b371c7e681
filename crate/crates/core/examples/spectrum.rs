// Multiplier polynomials M_n and the symmetric functions Λ_n, including a
// check that conjugating the map leaves them unchanged.

use isospec::algebra::Field;
use isospec::dynamics::{multiplier_at, multiplier_spectrum, MobiusTransform, ProjPoint, RationalMap};
use isospec::Limits;

pub fn run_example() -> isospec::Result<()> {
    let l = Limits::default();
    let q = Field::rationals();
    let sq = RationalMap::from_affine_i64(&q, &[0, 0, 1], &[1])?;
    let m1 = multiplier_spectrum(&sq, 1, &l)?;
    println!("z^2 over Q: M1 = {}", m1.poly.pretty("T"));
    println!("  multiplier at 1: {}", q.format(&multiplier_at(&sq, &ProjPoint::affine(&q, 1), 1)?));

    let f = Field::prime(13)?;
    let phi = RationalMap::from_affine_i64(&f, &[1, 2, 0, 1], &[0, 0, 3])?;
    let a = MobiusTransform::from_i64(&f, 2, 1, 1, 5)?;
    let psi = phi.conjugate(&a);
    for n in 1..=2 {
        let m = multiplier_spectrum(&phi, n, &l)?;
        assert_eq!(m, multiplier_spectrum(&psi, n, &l)?);
        let sigma: Vec<String> = m.sigma.iter().map(|s| f.format(s)).collect();
        println!("{} n={n}: K = {}, Λ = ({})", phi.spec(), m.count, sigma.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
