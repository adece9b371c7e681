// The census of quadratic maps over GF(5): buckets of equal (Λ_1, Λ_2)
// against conjugacy classes, and the fitted plane relation.

use isospec::cli::experiments;
use isospec::Limits;

pub fn run_example() -> isospec::Result<()> {
    let r = experiments::milnor(5, &Limits::default())?;
    println!(
        "{} maps, {} classes, {} buckets",
        r["maps"], r["classes_over_base"], r["buckets"]
    );
    for e in r["exceptional_buckets"].as_array().unwrap() {
        println!("exceptional bucket {} merges over degree {}", e["lambda1"], e["merges_over_degree"]);
    }
    println!("plane relation [c1,c2,c3,c0]: {}", r["plane"]["relations"]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
