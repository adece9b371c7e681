// Arithmetic in GF(9), GF(5)(t) and Q through one `Field` handle.

use isospec::algebra::{Field, FiniteField};

pub fn run_example() -> isospec::Result<()> {
    let g9 = Field::make(3, 2, None)?;
    let g = g9.parse("g")?;
    let inv = g9.inv(&g)?;
    println!("GF(9) = {}: g^-1 = {}, g^8 = {}", g9.spec(), g9.format(&inv), g9.format(&g9.pow(&g, 8)));
    assert!(g9.is_one(&g9.mul(&g, &inv)));

    let ft = Field::rational_function(FiniteField::prime(5)?);
    let x = ft.parse("(t^2+1)/(t+3)")?;
    let y = ft.parse("t - 2")?;
    println!("in {}: x*y = {}, x/y = {}", ft.spec(), ft.format(&ft.mul(&x, &y)), ft.format(&ft.div(&x, &y)?));

    let q = Field::rationals();
    let r = q.parse("3/7 - 1/14")?;
    println!("in Q: 3/7 - 1/14 = {}", q.format(&r));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
