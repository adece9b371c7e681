// Searching PGL_2 over finite fields for conjugacies, and critical orbits.

use isospec::algebra::Field;
use isospec::dynamics::{conjugacy_test, critical_points, pcf_check, MobiusTransform, PcfResult, RationalMap};
use isospec::Limits;

pub fn run_example() -> isospec::Result<()> {
    let l = Limits::default();
    let f = Field::prime(7)?;
    let phi = RationalMap::from_affine_i64(&f, &[3, 0, 1], &[1])?;
    let a = MobiusTransform::from_i64(&f, 1, 2, 3, 1)?;
    let psi = phi.conjugate(&a);
    let w = conjugacy_test(&phi, &psi, 1, &l)?.expect("conjugate by construction");
    println!("{} ~ {} via {}", phi.spec(), psi.spec(), w.format());
    assert_eq!(phi.conjugate(&w), psi);

    let other = RationalMap::from_affine_i64(&f, &[1, 0, 1], &[1])?;
    println!("z^2 + 3 vs z^2 + 1 conjugate: {}", conjugacy_test(&phi, &other, 2, &l)?.is_some());

    for c in critical_points(&phi, 2, &l)? {
        println!("critical point {} of multiplicity {}", c.point.format(&c.field), c.multiplicity);
    }
    if let PcfResult::Pcf(orbits) = pcf_check(&phi, 50, 2, &l)? {
        for o in orbits {
            println!("  orbit: tail {}, cycle {}", o.tail, o.cycle);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
