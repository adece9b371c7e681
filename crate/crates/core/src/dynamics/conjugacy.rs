//! Conjugacy of maps over finite fields.
//!
//! A conjugacy `A φ A^{-1} = ψ` is determined by the images of three
//! points, and it carries every point of P^1 to a point with the same
//! dynamical signature (preperiod, period, cycle multiplier, number of
//! preimages). The search therefore fixes the three φ-points with the
//! rarest signatures and only tries ψ-triples with matching signatures,
//! which keeps it exhaustive.

use std::collections::HashMap;

use super::map::{MobiusTransform, ProjPoint, RationalMap};
use crate::algebra::{extension, Scalar};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Signature {
    tail: usize,
    cycle: usize,
    multiplier: Scalar,
    preimages: usize,
}

fn signatures(phi: &RationalMap, points: &[ProjPoint], index: &HashMap<ProjPoint, usize>) -> Vec<Signature> {
    let n = points.len();
    let succ: Vec<usize> = points.iter().map(|p| index[&phi.evaluate(p)]).collect();
    let mut indeg = vec![0usize; n];
    for &s in &succ {
        indeg[s] += 1;
    }
    // state: 0 unvisited, 1 on stack, 2 done
    let mut state = vec![0u8; n];
    let mut tail = vec![0usize; n];
    let mut cyc = vec![0usize; n];
    let mut mult: Vec<Option<Scalar>> = vec![None; n];
    let f = phi.field();
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        let mut path = Vec::new();
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            path.push(v);
            v = succ[v];
        }
        if state[v] == 1 {
            // new cycle starting at v
            let pos = path.iter().position(|&u| u == v).unwrap();
            let cycle = &path[pos..];
            let mut lam = f.one();
            for &u in cycle {
                lam = f.mul(&lam, &phi.local_derivative(&points[u]));
            }
            for &u in cycle {
                tail[u] = 0;
                cyc[u] = cycle.len();
                mult[u] = Some(lam.clone());
                state[u] = 2;
            }
            path.truncate(pos);
        }
        for &u in path.iter().rev() {
            let s = succ[u];
            tail[u] = tail[s] + 1;
            cyc[u] = cyc[s];
            mult[u] = mult[s].clone();
            state[u] = 2;
        }
    }
    (0..n)
        .map(|i| Signature {
            tail: tail[i],
            cycle: cyc[i],
            multiplier: mult[i].clone().unwrap(),
            preimages: indeg[i],
        })
        .collect()
}

/// Searches `PGL_2(GF(q^j))`, `j = 1..=max_ext`, for `A` with
/// `A φ A^{-1} = ψ`. Returns the first witness in canonical order, as a
/// transform over `GF(q^j)`.
pub fn conjugacy_test(
    phi: &RationalMap,
    psi: &RationalMap,
    max_ext: u32,
    limits: &Limits,
) -> Result<Option<MobiusTransform>> {
    if phi.field() != psi.field() {
        return Err(Error::FieldMismatch);
    }
    if !phi.field().is_finite() {
        return Err(Error::Unsupported("conjugacy search needs a finite field".into()));
    }
    if phi.degree() != psi.degree() {
        return Ok(None);
    }
    if phi == psi {
        return Ok(Some(MobiusTransform::identity(phi.field())));
    }
    for j in 1..=max_ext {
        let emb = extension(phi.field(), j, limits)?;
        let a = phi.base_change(&emb);
        let b = psi.base_change(&emb);
        if let Some(w) = search(&a, &b) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn search(phi: &RationalMap, psi: &RationalMap) -> Option<MobiusTransform> {
    let field = phi.field();
    let points = ProjPoint::all(field).expect("finite field");
    let index: HashMap<ProjPoint, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let sa = signatures(phi, &points, &index);
    let sb = signatures(psi, &points, &index);
    let mut classes: HashMap<&Signature, Vec<usize>> = HashMap::new();
    for (i, s) in sb.iter().enumerate() {
        classes.entry(s).or_default().push(i);
    }
    let mut count_a: HashMap<&Signature, usize> = HashMap::new();
    for s in &sa {
        *count_a.entry(s).or_default() += 1;
    }
    if count_a.len() != classes.len() || count_a.iter().any(|(s, c)| classes.get(s).map(|v| v.len()) != Some(*c)) {
        return None;
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_key(|&i| (classes[&sa[i]].len(), i));
    let (z0, z1, z2) = (order[0], order[1], order[2]);
    let from = [&points[z0], &points[z1], &points[z2]];
    // cheap pointwise screen before the full comparison
    let probes: Vec<usize> = order.iter().copied().skip(3).take(4).collect();
    for &w0 in &classes[&sa[z0]] {
        for &w1 in &classes[&sa[z1]] {
            if w1 == w0 {
                continue;
            }
            for &w2 in &classes[&sa[z2]] {
                if w2 == w0 || w2 == w1 {
                    continue;
                }
                let to = [&points[w0], &points[w1], &points[w2]];
                let Some(a) = MobiusTransform::from_triples(field, from, to) else {
                    continue;
                };
                let ok = probes.iter().all(|&i| {
                    let z = &points[i];
                    a.apply(&phi.evaluate(z)) == psi.evaluate(&a.apply(z))
                });
                if ok && &phi.conjugate(&a) == psi {
                    return Some(a);
                }
            }
        }
    }
    None
}
