use std::collections::HashSet;

use crate::error::EngineError;
use crate::ideal::{MonomialIdeal, Multidegree};

/// Default bound on the number of lattice elements before the engine gives up.
pub const DEFAULT_LATTICE_CAP: usize = 200_000;

/// Join-closure of the minimal generators under componentwise max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmLattice {
    /// Sorted by total degree, then lexicographically; every element is the lcm of the
    /// generators dividing it.
    elements: Vec<Multidegree>,
    generators: Vec<Multidegree>,
}

impl LcmLattice {
    pub fn elements(&self) -> &[Multidegree] {
        &self.elements
    }

    pub fn generators(&self) -> &[Multidegree] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: &Multidegree) -> bool {
        self.elements.binary_search_by(|e| order(e, a)).is_ok()
    }

    /// Indices of the generators dividing `a`, the atoms of the interval below it.
    pub fn atoms_below(&self, a: &Multidegree) -> Vec<usize> {
        (0..self.generators.len()).filter(|&g| self.generators[g].divides(a)).collect()
    }

    /// Elements strictly below `a`, in lattice order.
    pub fn open_interval_below(&self, a: &Multidegree) -> Vec<&Multidegree> {
        self.elements.iter().filter(|e| *e != a && e.divides(a)).collect()
    }
}

fn order(a: &Multidegree, b: &Multidegree) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.cmp(b))
}

pub fn lcm_lattice(i: &MonomialIdeal, cap: usize) -> Result<LcmLattice, EngineError> {
    if i.is_zero() {
        return Err(EngineError::ZeroIdeal);
    }
    let gens = i.gens().to_vec();
    let mut seen: HashSet<Multidegree> = gens.iter().cloned().collect();
    let mut frontier: Vec<Multidegree> = gens.clone();
    // joins with single generators suffice: every element is a join of generators
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                if g.divides(x) {
                    continue;
                }
                let y = x.join(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(EngineError::LatticeCap { cap });
                    }
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut elements: Vec<Multidegree> = seen.into_iter().collect();
    elements.sort_by(order);
    Ok(LcmLattice { elements, generators: gens })
}
