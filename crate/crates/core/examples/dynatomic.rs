// Dynatomic forms and the degree law K_n = sum over k | n of μ(n/k)(d^k + 1).

use isospec::algebra::Field;
use isospec::dynamics::{dynatomic, dynatomic_degree, RationalMap};
use isospec::Limits;

pub fn run_example() -> isospec::Result<()> {
    let f = Field::prime(11)?;
    let phi = RationalMap::from_affine_i64(&f, &[3, 0, 1], &[1])?;
    for n in 1..=4 {
        let form = dynatomic(&phi, n, &Limits::default())?;
        println!("Φ_{n} of z^2 + 3 over GF(11): degree {} (K_{n} = {})", form.degree(), dynatomic_degree(2, n));
        if n <= 2 {
            println!("  {}", form.poly().pretty("z"));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
