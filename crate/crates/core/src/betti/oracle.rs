//! Order complexes of lower intervals in the lcm lattice.
//!
//! For a lattice element `a`, the open interval `(0, a)` consists of the lattice elements
//! strictly below `a`. Sending `x` to the meet of the coatoms above it is a closure operator
//! on that interval, so the interval is homotopy equivalent to the subposet of coatom meets.
//! That subposet has at most `2^k` elements for `k` coatoms; [`interval_faces`] lists the
//! chains of what remains of it after beat points are removed.
//!
//! Meets are taken in the lattice: the meet of `b` and `c` is the lcm of the generators
//! dividing both, or `0` when there are none.

use std::collections::BTreeSet;

use super::lattice::LcmLattice;
use crate::error::EngineError;
use crate::ideal::Multidegree;

/// Coatoms of `[0, a]`, the maximal proper elements among `m_k = lcm{g | a : g_k < a_k}`.
pub fn coatoms(lattice: &LcmLattice, a: &Multidegree) -> Vec<Multidegree> {
    let gens = lattice.generators();
    let atoms = lattice.atoms_below(a);
    let mut candidates: Vec<Multidegree> = a
        .support()
        .into_iter()
        .filter_map(|k| {
            atoms
                .iter()
                .filter(|&&g| gens[g].0[k] < a.0[k])
                .map(|&g| &gens[g])
                .fold(None::<Multidegree>, |acc, g| Some(acc.map_or_else(|| g.clone(), |x| x.join(g))))
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    candidates.iter().filter(|m| !candidates.iter().any(|x| x != *m && m.divides(x))).cloned().collect()
}

/// Lattice meet of `b` and `c`; `None` stands for the bottom element.
pub fn meet(lattice: &LcmLattice, b: &Multidegree, c: &Multidegree) -> Option<Multidegree> {
    lattice
        .generators()
        .iter()
        .filter(|g| g.divides(b) && g.divides(c))
        .fold(None, |acc: Option<Multidegree>, g| Some(acc.map_or_else(|| g.clone(), |x| x.join(g))))
}

/// Nonzero meets of nonempty sets of coatoms of `[0, a]`, sorted by degree.
pub fn coatom_meets(lattice: &LcmLattice, a: &Multidegree) -> Vec<Multidegree> {
    let co = coatoms(lattice, a);
    let mut seen: BTreeSet<Multidegree> = co.iter().cloned().collect();
    let mut frontier = co.clone();
    while let Some(x) = frontier.pop() {
        for c in &co {
            if let Some(y) = meet(lattice, &x, c) {
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    let mut out: Vec<Multidegree> = seen.into_iter().collect();
    out.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| x.cmp(y)));
    out
}

/// Removes beat points: elements whose strict down-set has a maximum or whose strict up-set
/// has a minimum. This is a strong deformation retraction of the order complex.
pub fn strip_beat_points(mut p: Vec<Multidegree>) -> Vec<Multidegree> {
    let extremum = |set: &[&Multidegree], top: bool| {
        set.iter().any(|x| set.iter().all(|y| if top { y.divides(x) } else { x.divides(y) }))
    };
    loop {
        let beat = (0..p.len()).find(|&i| {
            let below: Vec<&Multidegree> = p.iter().filter(|y| *y != &p[i] && y.divides(&p[i])).collect();
            let above: Vec<&Multidegree> = p.iter().filter(|y| *y != &p[i] && p[i].divides(y)).collect();
            (!below.is_empty() && extremum(&below, true)) || (!above.is_empty() && extremum(&above, false))
        });
        match beat {
            Some(i) => {
                p.remove(i);
            }
            None => return p,
        }
    }
}

/// Faces, grouped by size, of a complex homotopy equivalent to the order complex of `(0, a)`
/// for `a` the element at index `t`: the chains of the coatom meets once beat points are
/// gone. At most `cap` faces are produced.
pub fn interval_faces(lattice: &LcmLattice, t: usize, cap: usize) -> Result<Vec<Vec<Vec<u32>>>, EngineError> {
    let a = &lattice.elements()[t];
    if lattice.atoms_below(a).len() == 1 {
        return Ok(vec![vec![vec![]]]);
    }
    let m = coatom_meets(lattice, a);
    let m = if m.iter().all(|x| m[0].divides(x)) { vec![m[0].clone()] } else { strip_beat_points(m) };
    let up: Vec<Vec<u32>> =
        (0..m.len()).map(|p| (p + 1..m.len()).filter(|&q| m[p].divides(&m[q])).map(|q| q as u32).collect()).collect();
    let mut faces: Vec<Vec<Vec<u32>>> = vec![vec![vec![]]];
    let mut stack: Vec<Vec<u32>> = (0..m.len() as u32).rev().map(|p| vec![p]).collect();
    let mut count = 1;
    while let Some(chain) = stack.pop() {
        count += 1;
        if count > cap {
            return Err(EngineError::ComplexCap { cap });
        }
        let top = *chain.last().expect("chains are nonempty") as usize;
        for &q in up[top].iter().rev() {
            let mut c = chain.clone();
            c.push(q);
            stack.push(c);
        }
        if faces.len() <= chain.len() {
            faces.resize(chain.len() + 1, Vec::new());
        }
        faces[chain.len()].push(chain);
    }
    Ok(faces)
}
