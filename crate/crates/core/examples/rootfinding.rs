// Newton maps, the fixed-point multiplier identity, the arithmetic
// obstructions and the valuation-level convergence probe.

use isospec::algebra::{Field, Poly};
use isospec::dynamics::RationalMap;
use isospec::rootfind::{convergence_probe, fixed_point_sum_check, newton_map, residue_obstruction};
use isospec::valuation::Place;
use isospec::Limits;

pub fn run_example() -> isospec::Result<()> {
    let q = Field::rationals();
    let n = newton_map(&Poly::from_i64s(&q, &[-2, 0, 0, 1]))?;
    println!("Newton map of z^3 - 2: {} (degree {})", n.spec(), n.degree());
    println!("fixed-point identity: {:?}", fixed_point_sum_check(&n, &Limits::default())?);

    for (r, p, d) in [(2, 3, 2), (4, 3, 2), (4, 3, 5)] {
        println!("r={r} p={p} d={d}: {:?}", residue_obstruction(r, p, d)?);
    }

    let sq = RationalMap::from_affine_i64(&q, &[0, 0, 1], &[1])?;
    for t in convergence_probe(&sq, &Place::Prime(3), &[0, 1, -1], 6)? {
        let vals: Vec<String> = t.valuations.iter().map(|v| v.to_string()).collect();
        println!("seed v = {}: {} -> {:?}", t.seed, vals.join(" "), t.verdict);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
