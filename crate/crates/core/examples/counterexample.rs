// The characteristic-p family φ_t(z) = ψ_t(z^p) + a z: every Λ_n is
// constant in t, yet the members are not all conjugate.

use isospec::algebra::{extension, Field, FiniteField, Poly};
use isospec::dynamics::conjugacy_test;
use isospec::families::{counterexample_family, isospectral_check, Isospectrality};
use isospec::Limits;

pub fn run_example() -> isospec::Result<()> {
    let l = Limits::default();
    let f = Field::rational_function(FiniteField::prime(3)?);
    let psi = Poly::new(&f, vec![f.zero(), f.one(), f.t().unwrap()]);
    let ce = counterexample_family(&psi, &f.one(), 3)?;
    println!("family: {}", ce.family.map().spec());
    if let Isospectrality::Isospectral { spectra } = isospectral_check(&ce.family, 2, &l)? {
        for m in spectra {
            println!("  M_{} = {}", m.period, m.poly.pretty("T"));
        }
    }
    let emb = extension(&Field::prime(3)?, 2, &l)?;
    let g9 = emb.target().clone();
    let c1 = g9.one();
    let c2 = g9.parse("g+1")?;
    let m1 = ce.family.specialize_ext(&emb, &c1)?;
    let m2 = ce.family.specialize_ext(&emb, &c2)?;
    let conj = conjugacy_test(&m1, &m2, 2, &l)?;
    println!("t = 1 and t = g+1 conjugate over GF(9^j), j <= 2: {}", conj.is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
