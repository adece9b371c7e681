//! Acceptance suite: one PASS/FAIL line per criterion. Runtime limits are
//! pinned below and count as part of each criterion.

use std::time::{Duration, Instant};

use isospec::algebra::{extension, Field, FiniteField, Poly, Scalar};
use isospec::cli::{experiments, run_command};
use isospec::dynamics::{
    conjugacy_test, dynatomic, dynatomic_degree, fixed_point_form, multiplier_at, multiplier_spectrum, ProjPoint,
    RationalMap,
};
use isospec::families::{
    counterexample_family, isospectral_check, lattes_from_curve, lattes_isospectral_probe, EllipticCurve, Family,
    Isospectrality,
};
use isospec::rootfind::{
    convergence_probe, fixed_point_sum_check, residue_obstruction, FixedPointSum, Obstruction, ObstructionReason,
    ProbeVerdict,
};
use isospec::valuation::{convention_self_test, newton_polygon, tame_check, Place, TameResult};
use isospec::Limits;
use num_bigint::BigInt;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SECS: [u64; 12] = [60, 600, 1, 60, 120, 120, 900, 300, 60, 1, 1, 300];

type Outcome = Result<String, String>;

fn ft(p: u64) -> Field {
    Field::rational_function(FiniteField::prime(p).unwrap())
}

fn random_map(f: &Field, d: usize, rng: &mut ChaCha8Rng) -> RationalMap {
    loop {
        let num = (0..=d).map(|_| f.random(rng, 0)).collect();
        let den = (0..=d).map(|_| f.random(rng, 0)).collect();
        if let Ok(m) = RationalMap::from_forms(f, num, den) {
            return m;
        }
    }
}

fn psis(f: &Field) -> Vec<(&'static str, Poly)> {
    vec![
        ("w", Poly::new(f, vec![f.zero(), f.one()])),
        ("w+tw^2", Poly::new(f, vec![f.zero(), f.one(), f.t().unwrap()])),
    ]
}

fn counterexample_spectra() -> Outcome {
    let l = Limits::default();
    let mut checked = 0;
    for p in [3u64, 5] {
        let f = ft(p);
        for (name, psi) in psis(&f) {
            for a in 1..p as i64 {
                let a = f.from_i64(a);
                let ce = counterexample_family(&psi, &a, p).map_err(|e| e.to_string())?;
                let phi = ce.family.map();
                for n in 1..=2usize {
                    let m = multiplier_spectrum(phi, n, &l).map_err(|e| e.to_string())?;
                    // ∞ is a superattracting fixed point, so it only enters M_1
                    let at_inf = usize::from(n == 1);
                    let an = f.pow(&a, n as u64);
                    let expected = Poly::linear_root(&f, &an)
                        .pow((m.count - at_inf) as u64)
                        .mul(&Poly::monomial(&f, f.one(), at_inf));
                    if m.poly != expected {
                        return Err(format!("p={p} psi={name} n={n}: M_n = {}", m.poly.pretty("T")));
                    }
                    checked += 1;
                }
                match isospectral_check(&ce.family, 2, &l).map_err(|e| e.to_string())? {
                    Isospectrality::Isospectral { .. } => {}
                    w => return Err(format!("p={p} psi={name}: {w:?}")),
                }
            }
        }
    }
    Ok(format!("{checked} spectra equal (T - a^n)^K times the fixed point at infinity"))
}

fn counterexample_nontrivial() -> Outcome {
    let l = Limits::default();
    let f = ft(3);
    let f3 = Field::prime(3).unwrap();
    let psi = &psis(&f)[1].1;
    let mut witnesses = Vec::new();
    for a in 1..=2 {
        let ce = counterexample_family(psi, &f.from_i64(a), 3).map_err(|e| e.to_string())?;
        let m1 = ce.family.specialize(&f3.from_i64(1)).map_err(|e| e.to_string())?;
        let m2 = ce.family.specialize(&f3.from_i64(2)).map_err(|e| e.to_string())?;
        if let Some(w) = conjugacy_test(&m1, &m2, 2, &l).map_err(|e| e.to_string())? {
            witnesses.push(format!("a={a}: {} over {}", w.format(), w.field().spec()));
        }
    }
    if witnesses.is_empty() {
        Ok("t=1 and t=2 are not conjugate over GF(3^j), j <= 2".into())
    } else {
        Err(format!("t=1 and t=2 are conjugate: {}", witnesses.join("; ")))
    }
}

fn wildness() -> Outcome {
    let l = Limits::default();
    let mut wild = 0;
    for p in [3u64, 5] {
        let f = ft(p);
        let base = FiniteField::prime(p).unwrap();
        let fp = Field::prime(p).unwrap();
        for (name, psi) in psis(&f) {
            for a in 1..p as i64 {
                let ce = counterexample_family(&psi, &f.from_i64(a), p).map_err(|e| e.to_string())?;
                // one place t - c per family member
                let places: Vec<Place> = (0..p as u32)
                    .map(|c| Place::finite(base.clone(), vec![(p as u32 - c) % p as u32, 1]).unwrap())
                    .collect();
                for place in &places {
                    match tame_check(ce.family.map(), place, 2, &l).map_err(|e| e.to_string())? {
                        TameResult::Wild { .. } => wild += 1,
                        other => return Err(format!("p={p} psi={name} at {}: {other:?}", place.spec())),
                    }
                }
                // the specializations themselves, at the place p
                for c in 1..p as i64 {
                    let m = ce.family.specialize(&fp.from_i64(c)).map_err(|e| e.to_string())?;
                    match tame_check(&m, &Place::Prime(p), 2, &l).map_err(|e| e.to_string())? {
                        TameResult::Wild { .. } => wild += 1,
                        other => return Err(format!("p={p} psi={name} t={c}: {other:?}")),
                    }
                }
            }
        }
    }
    let q = Field::rationals();
    let z2 = RationalMap::from_affine_i64(&q, &[0, 0, 1], &[1]).unwrap();
    match tame_check(&z2, &Place::Prime(7), 2, &l).map_err(|e| e.to_string())? {
        TameResult::TameByDegree => Ok(format!("{wild} wild verdicts; z^2 at 7 is TameByDegree")),
        other => Err(format!("z^2 at 7: {other:?}")),
    }
}

fn fixed_point_identity() -> Outcome {
    let l = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut skipped = 0;
    for f in [Field::prime(7).unwrap(), Field::prime(11).unwrap(), Field::prime(13).unwrap(), Field::rationals()] {
        let mut held = 0;
        while held < 100 {
            let d = rng.gen_range(2..=4);
            let m = random_map(&f, d, &mut rng);
            match fixed_point_sum_check(&m, &l).map_err(|e| e.to_string())? {
                FixedPointSum::HoldsExactly => held += 1,
                FixedPointSum::MultiplierOne => skipped += 1,
                FixedPointSum::Value(v) => return Err(format!("{} gives {}", m.spec(), f.format(&v))),
            }
        }
    }
    Ok(format!("400 maps hold exactly, {skipped} with multiplier 1 skipped"))
}

fn dynatomic_law() -> Outcome {
    let l = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = Field::prime(101).unwrap();
    for d in 2..=3 {
        for n in 1..=4 {
            for _ in 0..20 {
                let phi = random_map(&f, d, &mut rng);
                let divs = isospec::algebra::mobius::divisors(n as u64);
                let expected: i64 = divs
                    .iter()
                    .map(|&k| isospec::algebra::mobius_mu(n as u64 / k) as i64 * (d.pow(k as u32) as i64 + 1))
                    .sum();
                let forms: Vec<_> = divs
                    .iter()
                    .map(|&k| dynatomic(&phi, k as usize, &l))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                let top = forms.last().unwrap();
                if top.degree() as i64 != expected || dynatomic_degree(d, n) != expected {
                    return Err(format!("{} n={n}: degree {}", phi.spec(), top.degree()));
                }
                // the Φ_k, k | n, multiply out to the fixed-point form of φ^n
                let product = forms[1..].iter().fold(forms[0].clone(), |acc, g| acc.mul(g));
                let fixed = fixed_point_form(&phi.iterate(n, &l).map_err(|e| e.to_string())?);
                if product.degree() != fixed.degree() || product.poly().monic() != fixed.poly().monic() {
                    return Err(format!("{} n={n}: product of Φ_k differs", phi.spec()));
                }
            }
        }
    }
    Ok("deg Φ_n matches the Möbius sum for 160 maps".into())
}

/// Product of `(T - λ)` over the formal period-n points found in
/// P^1(GF(q^j)), `j <= 4`, each with its multiplicity as a root.
fn spectrum_by_enumeration(phi: &RationalMap, n: usize) -> Option<Poly> {
    let l = Limits::default();
    let f = phi.field();
    let phin = dynatomic(phi, n, &l).ok()?;
    for j in 1..=4 {
        let emb = extension(f, j, &l).ok()?;
        let mj = phi.base_change(&emb);
        let tf = emb.target().clone();
        let mut poly = Poly::one(&tf);
        let mut found = 0;
        if let Some(e) = phin.z_order().filter(|&e| e > 0) {
            let lam = multiplier_at(&mj, &ProjPoint::Infinity, n).ok()?;
            poly = poly.mul(&Poly::linear_root(&tf, &lam).pow(e as u64));
            found += e;
        }
        let aff = emb.apply_poly(phin.poly());
        for x in tf.elements()? {
            if !tf.is_zero(&aff.eval(&x)) {
                continue;
            }
            let lin = Poly::linear_root(&tf, &x);
            let (mut g, mut mult) = (aff.clone(), 0);
            while let Ok(q) = g.exact_div(&lin) {
                g = q;
                mult += 1;
            }
            let lam = multiplier_at(&mj, &ProjPoint::Affine(x), n).ok()?;
            poly = poly.mul(&Poly::linear_root(&tf, &lam).pow(mult));
            found += mult as usize;
        }
        if found == phin.degree() {
            return emb.pull_poly(&poly);
        }
    }
    None
}

fn spectrum_oracle() -> Outcome {
    let l = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let f = Field::prime(5).unwrap();
    for _ in 0..25 {
        let phi = random_map(&f, 2, &mut rng);
        for n in 1..=2 {
            let m = multiplier_spectrum(&phi, n, &l).map_err(|e| e.to_string())?;
            match spectrum_by_enumeration(&phi, n) {
                Some(o) if o == m.poly => {}
                Some(o) => return Err(format!("{} n={n}: {} vs {}", phi.spec(), m.poly.pretty("T"), o.pretty("T"))),
                None => return Err(format!("{} n={n}: roots not found in GF(5^j), j <= 4", phi.spec())),
            }
        }
    }
    Ok("25 maps, n = 1, 2".into())
}

fn milnor_census() -> Outcome {
    let l = Limits::default();
    let mut notes = Vec::new();
    for q in [5u64, 7] {
        let r = experiments::milnor(q, &l).map_err(|e| e.to_string())?;
        let ex = r["exceptional_buckets"].as_array().unwrap();
        let rel = &r["plane"]["relations"];
        if r["pass"] != true || r["experiment"] != experiments::MILNOR {
            return Err(format!("q={q}: nullity {}, exceptions {ex:?}", r["plane"]["nullity"]));
        }
        // the fitted relation, up to scale, must be σ_3 = σ_1 - 2
        let f = experiments::field_of_order(q).unwrap();
        let c: Vec<Scalar> = rel[0].as_array().unwrap().iter().map(|v| f.parse(v.as_str().unwrap()).unwrap()).collect();
        let ok = f.is_zero(&c[1])
            && f.add(&c[0], &c[2]) == f.zero()
            && f.mul(&f.from_i64(-2), &c[0]) == c[3];
        if !ok {
            return Err(format!("q={q}: fitted relation {rel}"));
        }
        notes.push(format!(
            "GF({q}) {} classes in {} buckets, {} exceptional bucket(s) merging over degree {:?}",
            r["classes_over_base"],
            r["buckets"],
            ex.len(),
            ex.iter().map(|e| e["merges_over_degree"].as_u64()).collect::<Vec<_>>()
        ));
    }
    Ok(notes.join("; ") + "; one affine relation (s3 = s1 - 2)")
}

fn lattes() -> Outcome {
    let l = Limits::default();
    let f = ft(7);
    let t = f.t().unwrap();
    let probe = lattes_isospectral_probe(&f, t.clone(), f.one(), 2, &l).map_err(|e| e.to_string())?;
    if !matches!(probe.result, Isospectrality::Isospectral { .. }) || !probe.constant_coordinates {
        return Err(format!("{:?}", probe.result));
    }
    let e = EllipticCurve::new(&f, t, f.one()).map_err(|e| e.to_string())?;
    let fam = Family::new(lattes_from_curve(&e, 2, false).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let f7 = Field::prime(7).unwrap();
    let mut done = Vec::new();
    for c in 0..7 {
        if done.len() == 3 {
            break;
        }
        let Ok(ec) = EllipticCurve::new(&f7, f7.from_i64(c), f7.one()) else { continue };
        let phi = fam.specialize(&f7.from_i64(c)).map_err(|e| e.to_string())?;
        let points = ec.points().unwrap();
        for (x, y) in &points {
            let image = phi.evaluate(&ProjPoint::Affine(x.clone()));
            let expected = match ec.double(x, y) {
                Some((x2, _)) => ProjPoint::Affine(x2),
                None => ProjPoint::Infinity,
            };
            if image != expected {
                return Err(format!("t={c}: doubling fails at x={}", f7.format(x)));
            }
        }
        done.push(format!("t={c} ({} points)", points.len()));
    }
    Ok(format!("isospectral for n <= 2 with constant Λ_n; commutes with doubling at {}", done.join(", ")))
}

fn newton_polygons() -> Outcome {
    if !convention_self_test() {
        return Err("convention self-test".into());
    }
    let f = ft(5);
    let t = f.t().unwrap();
    let place = Place::finite(FiniteField::prime(5).unwrap(), vec![0, 1]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let r = rng.gen_range(1..=5);
        let mut poly = Poly::one(&f);
        let mut expected: Vec<i64> = Vec::new();
        for _ in 0..r {
            // root t^k u with u a unit at t = 0
            let k = rng.gen_range(-3i64..=3);
            let u0 = f.from_i64(rng.gen_range(1..5));
            let tail: Vec<Scalar> = (0..3).map(|_| f.from_i64(rng.gen_range(0..5))).collect();
            let u = f.add(&u0, &f.mul(&t, &Poly::new(&f, tail).eval(&t)));
            let tk = if k >= 0 { f.pow(&t, k as u64) } else { f.inv(&f.pow(&t, (-k) as u64)).unwrap() };
            poly = poly.mul(&Poly::linear_root(&f, &f.mul(&tk, &u)));
            expected.push(k);
        }
        expected.sort();
        let np = newton_polygon(&poly, &place).map_err(|e| e.to_string())?;
        let mut got: Vec<Rational64> = Vec::new();
        for (v, m) in np.root_valuations() {
            got.extend(std::iter::repeat(v).take(m));
        }
        let want: Vec<Rational64> = expected.iter().map(|&k| Rational64::from_integer(k)).collect();
        if got != want {
            return Err(format!("{}: {got:?} vs {want:?}", poly.to_list()));
        }
    }
    Ok("50 polynomials and the x - p self-test".into())
}

fn obstruction_gates() -> Outcome {
    let obstructed = |r, p, d| matches!(residue_obstruction(r, p, d), Ok(Obstruction::Obstructed { .. }));
    for p in (2..=50u64).filter(|&p| isospec::algebra::finite::is_prime(p)) {
        if !obstructed(2, p, 2) {
            return Err(format!("r=2 p={p}"));
        }
    }
    if !matches!(
        residue_obstruction(4, 5, 3),
        Ok(Obstruction::Obstructed { reason: ObstructionReason::ResidueCount, .. })
    ) {
        return Err("r=4 p=5 d=3".into());
    }
    if !matches!(
        residue_obstruction(4, 3, 2),
        Ok(Obstruction::Obstructed { reason: ObstructionReason::IsospectralCollapse, .. })
    ) {
        return Err("r=4 p=3 d=2".into());
    }
    if !matches!(residue_obstruction(4, 3, 5), Ok(Obstruction::NotObstructedByTheseTests { .. })) {
        return Err("r=4 p=3 d=5".into());
    }
    Ok("all gates as expected".into())
}

fn unit_sphere() -> Outcome {
    let q = Field::rationals();
    let z2 = RationalMap::from_affine_i64(&q, &[0, 0, 1], &[1]).unwrap();
    let out = convergence_probe(&z2, &Place::Prime(3), &[0, 1, -1], 20).map_err(|e| e.to_string())?;
    let zero = BigInt::from(0);
    let trapped = out[0].verdict == ProbeVerdict::NoConvergenceToSinks
        && out[0].valuations.len() == 21
        && out[0].valuations.iter().all(|v| *v == zero);
    let up = out[1].verdict == ProbeVerdict::ConvergesToZero && out[1].valuations.windows(2).all(|w| w[1] > w[0]);
    let down =
        out[2].verdict == ProbeVerdict::ConvergesToInfinity && out[2].valuations.windows(2).all(|w| w[1] < w[0]);
    if trapped && up && down {
        Ok("v=0 trapped for 20 steps; v=1 and v=-1 diverge monotonically".into())
    } else {
        Err(format!("{out:?}"))
    }
}

fn commands() -> Vec<Vec<&'static str>> {
    let z2 = "field: 7^1; num=[0,0,1]; den=[1]";
    let z3 = "field: Q; num=[0,0,0,1]; den=[1]";
    let fam = "field: 3^1(t); num=[0,1,0,1,0,0,t]; den=[1]";
    let sq = "field: Q; num=[0,0,1]; den=[1]";
    vec![
        vec!["spectrum", "--map", z2, "--n", "1"],
        vec!["spectrum", "--map", fam, "--n", "2"],
        vec!["dynatomic", "--map", z2, "--n", "3"],
        vec!["critical", "--map", z2],
        vec!["orbit", "--map", z2, "--point", "3"],
        vec!["pcf", "--map", z2],
        vec!["conjugate", "--map", "field: 3^1; num=[0,1,0,1,0,0,1]; den=[1]", "--map2", "field: 3^1; num=[0,1,0,1,0,0,2]; den=[1]"],
        vec!["tame", "--map", z3, "--place", "prime:3"],
        vec!["tame", "--map", sq, "--place", "prime:7"],
        vec!["reduce", "--map", fam, "--place", "place:t over 3^1"],
        vec!["polygon", "--poly", "[-3,0,1]", "--field", "Q", "--place", "prime:3"],
        vec!["polygon", "--self-test"],
        vec!["classify", "--map", z3, "--place", "prime:3"],
        vec!["family-iso", "--map", fam, "--N", "2"],
        vec!["lattes", "--spec", "lattes A=t B=1 m=2 over 7^1(t)"],
        vec!["trivial", "--map", fam, "--values", "1,2"],
        vec!["rootfind", "obstruct", "--r", "4", "--p", "3", "--d", "2"],
        vec!["rootfind", "newton", "--f", "[\u{2212}1,0,1]", "--field", "q:0"],
        vec!["rootfind", "probe", "--map", sq, "--place", "prime:3", "--seeds", "0,1,\u{2212}1", "--iters", "20"],
        vec!["rootfind", "sum", "--map", z2],
        vec!["experiment", "milnor", "--q", "5"],
        vec!["experiment", "milnor", "--q", "7"],
        vec!["experiment", "counterexample", "--q", "9"],
        vec!["experiment", "plane", "--q", "11"],
    ]
}

fn determinism() -> Outcome {
    let cmds = commands();
    for argv in &cmds {
        let args: Vec<String> = argv.iter().map(|s| s.to_string()).collect();
        let a = run_command(&args, &mut std::io::empty());
        let b = run_command(&args, &mut std::io::empty());
        if a.code != 0 {
            return Err(format!("{argv:?} exited {}: {}", a.code, a.json));
        }
        if a != b {
            return Err(format!("{argv:?} differs between runs"));
        }
    }
    Ok(format!("{} commands byte-identical across two runs", cmds.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("counterexample isospectrality", counterexample_spectra),
        ("counterexample non-triviality", counterexample_nontrivial),
        ("wildness flag", wildness),
        ("fixed-point identity", fixed_point_identity),
        ("dynatomic degree law", dynatomic_law),
        ("spectrum oracle", spectrum_oracle),
        ("quadratic census", milnor_census),
        ("Lattès isospectrality", lattes),
        ("Newton polygons", newton_polygons),
        ("obstruction gates", obstruction_gates),
        ("unit-sphere trapping", unit_sphere),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if took > Duration::from_secs(SECS[i]) {
            outcome = Err(format!("took {took:.1?}, limit {}s", SECS[i]));
        }
        match outcome {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{took:.1?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{took:.1?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
