//! Monomials and monomial ideals over a named, ordered variable set.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::IdealError;
use crate::graph::Graph;
use crate::Exponent;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new(vars: Vec<String>) -> Result<Self, IdealError> {
        let mut seen = BTreeSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(IdealError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Ring { vars })
    }

    /// `x1, ..., xn`.
    pub fn standard(n: usize) -> Self {
        Ring { vars: (1..=n).map(|i| format!("x{i}")).collect() }
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }
}

/// Exponent vector; stands for the monomial `x^a` as well as the multidegree `a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(pub Vec<Exponent>);

impl Multidegree {
    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Multidegree(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn divides(&self, other: &Multidegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise max, i.e. the lcm.
    pub fn join(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn render(&self, ring: &Ring) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(ring.vars())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Componentwise caps in `N ∪ {∞}`; `None` is `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionVector {
    pub caps: Vec<Option<Exponent>>,
}

impl RestrictionVector {
    /// `(∞, …, ∞, 0, …, 0)` with `infinite` leading infinities.
    pub fn prefix(infinite: usize, zeros: usize) -> Self {
        RestrictionVector { caps: std::iter::repeat(None).take(infinite).chain(std::iter::repeat(Some(0)).take(zeros)).collect() }
    }

    pub fn admits(&self, a: &Multidegree) -> bool {
        self.caps.iter().zip(&a.0).all(|(c, &e)| c.map_or(true, |c| e <= c))
    }
}

/// A monomial ideal stored by its minimal generators in lexicographic order.
/// The zero ideal has no generators; the unit ideal is not representable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Multidegree>,
}

#[derive(Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: Vec<String>,
    pub gens: Vec<Vec<Exponent>>,
}

impl From<MonomialIdeal> for IdealJson {
    fn from(i: MonomialIdeal) -> Self {
        IdealJson { ring: i.ring.vars, gens: i.gens.into_iter().map(|g| g.0).collect() }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = IdealError;
    fn try_from(j: IdealJson) -> Result<Self, IdealError> {
        MonomialIdeal::new(Ring::new(j.ring)?, j.gens.into_iter().map(Multidegree).collect())
    }
}

impl MonomialIdeal {
    /// Minimalizes `gens`. Fails on length mismatch or on the unit monomial.
    pub fn new(ring: Ring, gens: Vec<Multidegree>) -> Result<Self, IdealError> {
        for g in &gens {
            if g.len() != ring.len() {
                return Err(IdealError::RingMismatch(format!(
                    "generator of length {} in a ring with {} variables",
                    g.len(),
                    ring.len()
                )));
            }
            if g.degree() == 0 {
                return Err(IdealError::UnitIdeal);
            }
        }
        Ok(MonomialIdeal { ring, gens: minimalize(gens) })
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Multidegree] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.ring.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Same minimal generators, ignoring variable names.
    pub fn same_generators(&self, other: &MonomialIdeal) -> bool {
        self.nvars() == other.nvars() && self.gens == other.gens
    }

    pub fn with_ring(&self, ring: Ring) -> Result<Self, IdealError> {
        if ring.len() != self.nvars() {
            return Err(IdealError::RingMismatch("renaming must keep the variable count".into()));
        }
        Ok(MonomialIdeal { ring, gens: self.gens.clone() })
    }

    /// Lcm of all generators.
    pub fn top(&self) -> Multidegree {
        self.gens.iter().fold(Multidegree::zero(self.nvars()), |acc, g| acc.join(g))
    }

    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(Multidegree::degree).max().unwrap_or(0)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.ring)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Drops every generator divisible by another and sorts the rest lexicographically.
fn minimalize(mut gens: Vec<Multidegree>) -> Vec<Multidegree> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Multidegree> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// `I(G)` in `x1..xn`: one generator `x_u x_v` per edge.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    let gens = g
        .edges()
        .map(|(u, v)| {
            let mut e = vec![0; n];
            e[u - 1] = 1;
            e[v - 1] = 1;
            Multidegree(e)
        })
        .collect();
    MonomialIdeal::new(Ring::standard(n), gens).expect("edge generators are valid")
}

/// `I + (x1^2, …, xn^2)`.
pub fn add_squares(i: &MonomialIdeal) -> MonomialIdeal {
    let n = i.nvars();
    let squares = (0..n).map(|k| {
        let mut e = vec![0; n];
        e[k] = 2;
        Multidegree(e)
    });
    MonomialIdeal { ring: i.ring.clone(), gens: minimalize(i.gens.iter().cloned().chain(squares).collect()) }
}

/// Generators are the pairwise products, minimalized.
pub fn product(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
    if a.ring != b.ring {
        return Err(IdealError::RingMismatch("product of ideals over different rings".into()));
    }
    let gens = a.gens.iter().flat_map(|x| b.gens.iter().map(move |y| x.mul(y))).collect();
    Ok(MonomialIdeal { ring: a.ring.clone(), gens: minimalize(gens) })
}

pub fn power(i: &MonomialIdeal, s: u32) -> Result<MonomialIdeal, IdealError> {
    if s == 0 {
        return Err(IdealError::ZeroPower);
    }
    let mut acc = i.clone();
    for _ in 1..s {
        acc = product(&acc, i)?;
    }
    Ok(acc)
}

pub fn contains(i: &MonomialIdeal, m: &Multidegree) -> Result<bool, IdealError> {
    if m.len() != i.nvars() {
        return Err(IdealError::RingMismatch(format!(
            "monomial of length {} tested against a ring with {} variables",
            m.len(),
            i.nvars()
        )));
    }
    Ok(i.gens.iter().any(|g| g.divides(m)))
}

/// Standard polarization.
///
/// Copy `j` of variable `v` (1-based) is `v` itself for `j = 1` and `v` followed by `j - 1`
/// primes otherwise, except that when no exponent exceeds 2 and the ring is standard, the
/// second copy of `xi` is named `yi`. New variables are appended copy-index-major: all second copies in the
/// original variable order, then all third copies, and so on. For `J = I(G) + (squares)` this
/// puts `x_{i,2}` at position `n + i`, the label [`crate::graph::whisker`] gives the leaf of `i`.
pub fn polarize(i: &MonomialIdeal) -> MonomialIdeal {
    let n = i.nvars();
    let maxexp: Vec<Exponent> = (0..n).map(|k| i.gens.iter().map(|g| g.0[k]).max().unwrap_or(0)).collect();
    let top = maxexp.iter().copied().max().unwrap_or(0);
    // position[k][j] for copies j >= 1 (0-based copy index)
    let mut position = vec![Vec::new(); n];
    let mut names = i.ring.vars.clone();
    for (k, p) in position.iter_mut().enumerate() {
        p.push(k);
    }
    let ys = top <= 2 && i.ring == Ring::standard(n);
    for j in 1..top {
        for k in 0..n {
            if maxexp[k] > j {
                position[k].push(names.len());
                names.push(match ys {
                    true => format!("y{}", k + 1),
                    false => format!("{}{}", i.ring.vars[k], "'".repeat(j as usize)),
                });
            }
        }
    }
    let total = names.len();
    let gens = i
        .gens
        .iter()
        .map(|g| {
            let mut e = vec![0; total];
            for k in 0..n {
                for j in 0..g.0[k] as usize {
                    e[position[k][j]] = 1;
                }
            }
            Multidegree(e)
        })
        .collect();
    MonomialIdeal { ring: Ring { vars: names }, gens: minimalize(gens) }
}

/// The ideal generated by the minimal generators whose multidegree is bounded by `caps`.
/// Variables capped at 0 are removed from the ring.
pub fn restrict(i: &MonomialIdeal, caps: &RestrictionVector) -> Result<MonomialIdeal, IdealError> {
    if caps.caps.len() != i.nvars() {
        return Err(IdealError::RingMismatch(format!(
            "restriction vector of length {} for a ring with {} variables",
            caps.caps.len(),
            i.nvars()
        )));
    }
    let keep: Vec<usize> = (0..i.nvars()).filter(|&k| caps.caps[k] != Some(0)).collect();
    let ring = Ring { vars: keep.iter().map(|&k| i.ring.vars[k].clone()).collect() };
    let gens = i
        .gens
        .iter()
        .filter(|g| caps.admits(g))
        .map(|g| Multidegree(keep.iter().map(|&k| g.0[k]).collect()))
        .collect();
    Ok(MonomialIdeal { ring, gens: minimalize(gens) })
}

/// Exponent of the smallest pure power of each variable among the generators.
fn pure_powers(j: &MonomialIdeal) -> Result<Vec<Exponent>, IdealError> {
    (0..j.nvars())
        .map(|k| {
            j.gens
                .iter()
                .filter(|g| g.0.iter().enumerate().all(|(l, &e)| l == k || e == 0))
                .map(|g| g.0[k])
                .min()
                .ok_or_else(|| IdealError::NotArtinian(j.ring.vars[k].clone()))
        })
        .collect()
}

/// All monomials outside an Artinian ideal, in lexicographic order.
pub fn standard_monomials(j: &MonomialIdeal) -> Result<Vec<Multidegree>, IdealError> {
    pure_powers(j)?;
    let n = j.nvars();
    let mut out = BTreeSet::new();
    let mut stack = vec![Multidegree::zero(n)];
    while let Some(m) = stack.pop() {
        if !out.insert(m.clone()) {
            continue;
        }
        for k in 0..n {
            let mut next = m.clone();
            next.0[k] += 1;
            if !j.gens.iter().any(|g| g.divides(&next)) && !out.contains(&next) {
                stack.push(next);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Standard monomials `u` with `x_k u ∈ j` for every variable.
pub fn socle_monomials(j: &MonomialIdeal) -> Result<Vec<Multidegree>, IdealError> {
    let n = j.nvars();
    Ok(standard_monomials(j)?
        .into_iter()
        .filter(|u| {
            (0..n).all(|k| {
                let mut m = u.clone();
                m.0[k] += 1;
                j.gens.iter().any(|g| g.divides(&m))
            })
        })
        .collect())
}

/// Degrees of the socle monomials, sorted ascending.
pub fn socle_degrees(j: &MonomialIdeal) -> Result<Vec<u64>, IdealError> {
    let mut d: Vec<u64> = socle_monomials(j)?.iter().map(Multidegree::degree).collect();
    d.sort_unstable();
    Ok(d)
}
