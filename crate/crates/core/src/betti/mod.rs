//! Multigraded Betti numbers and regularity of monomial ideals.
//!
//! Two independent routes are provided:
//!
//! * [`betti_multigraded`]: `β_{i,a}(I) = dim H̃_{i−1}(K^a(I))`, where `K^a(I)` is the upper
//!   Koszul complex on the support of `a` (see [`koszul_complex`]).
//! * [`betti_gpw_oracle`]: `β_{i,a}(I) = dim H̃_{i−1}` of the order complex of the open
//!   interval below `a` in the lcm lattice (see [`oracle`]).
//!
//! Both range over the lcm lattice, since no other multidegree can carry a Betti number.
//! Before homology is taken, the Koszul and crosscut complexes are shrunk to their strong
//! cores, which preserves homotopy type.

pub mod complex;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod table;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::error::EngineError;
use crate::ideal::{MonomialIdeal, Multidegree, Ring};
use complex::{homology_of_faces, reduced_homology_over, SimplicialComplex};
use lattice::{lcm_lattice, DEFAULT_LATTICE_CAP};
use oracle::interval_faces;
use table::BettiTable;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// Characteristic 0, the field of record.
    Rationals,
    /// `Z/p`; every rank is cross-checked against the rationals.
    Prime(u64),
}

/// Bound on the number of faces in a single order complex.
pub const DEFAULT_COMPLEX_CAP: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub field: Field,
    pub lattice_cap: usize,
    pub complex_cap: usize,
    /// Worker threads; `None` uses rayon's global pool.
    pub jobs: Option<usize>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { field: Field::Rationals, lattice_cap: DEFAULT_LATTICE_CAP, complex_cap: DEFAULT_COMPLEX_CAP, jobs: None }
    }
}

type CacheKey = (usize, Vec<Multidegree>);

/// Betti engine with its own worker pool and a per-ideal cache of Koszul Betti tables.
///
/// Tables are keyed by generator exponent vectors, so ideals differing only in variable
/// names share an entry.
pub struct Engine {
    config: EngineConfig,
    pool: Option<rayon::ThreadPool>,
    cache: RwLock<HashMap<CacheKey, Arc<BettiTable>>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(EngineConfig::default())
    }
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        let pool = config.jobs.map(|n| {
            rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().expect("thread pool construction")
        });
        Engine { config, pool, cache: RwLock::new(HashMap::new()) }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match &self.pool {
            Some(p) => p.install(f),
            None => f(),
        }
    }

    /// Koszul-route Betti table, cached.
    pub fn betti(&self, i: &MonomialIdeal) -> Result<Arc<BettiTable>, EngineError> {
        let key = (i.nvars(), i.gens().to_vec());
        if let Some(t) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(Arc::clone(t));
        }
        let lattice = lcm_lattice(i, self.config.lattice_cap)?;
        let field = self.config.field;
        let entries = self.run(|| {
            lattice
                .elements()
                .par_iter()
                .map(|a| betti_at(i, a, field).map(|h| (a, h)))
                .collect::<Result<Vec<_>, _>>()
        })?;
        let table = Arc::new(BettiTable::from_entries(
            entries.into_iter().flat_map(|(a, h)| h.into_iter().enumerate().map(move |(k, d)| ((k, a.clone()), d as u64))),
        ));
        self.cache.write().expect("cache lock").insert(key, Arc::clone(&table));
        Ok(table)
    }

    /// Every ideal with a cached table, over standard variable names, in a fixed order.
    pub fn cached(&self) -> Vec<(MonomialIdeal, Arc<BettiTable>)> {
        let cache = self.cache.read().expect("cache lock");
        let mut out: Vec<(MonomialIdeal, Arc<BettiTable>)> = cache
            .iter()
            .map(|((n, gens), t)| {
                let i = MonomialIdeal::new(Ring::standard(*n), gens.clone()).expect("cached ideals are valid");
                (i, Arc::clone(t))
            })
            .collect();
        out.sort_by(|a, b| (a.0.nvars(), a.0.gens()).cmp(&(b.0.nvars(), b.0.gens())));
        out
    }

    pub fn regularity(&self, i: &MonomialIdeal) -> Result<i64, EngineError> {
        Ok(self.betti(i)?.regularity().expect("nonzero ideals have generators"))
    }

    /// Lcm-lattice-route Betti table (uncached).
    pub fn oracle(&self, i: &MonomialIdeal) -> Result<BettiTable, EngineError> {
        let lattice = lcm_lattice(i, self.config.lattice_cap)?;
        let (field, cap) = (self.config.field, self.config.complex_cap);
        let entries = self.run(|| -> Result<Vec<_>, EngineError> {
            (0..lattice.len())
                .into_par_iter()
                .map(|t| {
                    let faces = interval_faces(&lattice, t, cap)?;
                    Ok((&lattice.elements()[t], homology_of_faces(&faces, field)?))
                })
                .collect()
        })?;
        Ok(BettiTable::from_entries(
            entries.into_iter().flat_map(|(a, h)| h.into_iter().enumerate().map(move |(k, d)| ((k, a.clone()), d as u64))),
        ))
    }
}

/// Upper Koszul complex `K^a(I)`: subsets `σ` of `supp(a)` with `x^a / x^σ ∈ I`.
/// Vertex labels are variable indices.
///
/// A generator `g | x^a` admits exactly the `σ` avoiding the coordinates where `g` and `a`
/// agree, so the facets are `supp(a) \ {k : g_k = a_k}` over the generators dividing `x^a`.
pub fn koszul_complex(i: &MonomialIdeal, a: &Multidegree) -> SimplicialComplex {
    let support = a.support();
    SimplicialComplex::from_faces(i.gens().iter().filter(|g| g.divides(a)).map(|g| {
        support.iter().filter(|&&k| g.0[k] < a.0[k]).map(|&k| k as u32).collect::<Vec<u32>>()
    }))
}

/// `dim H̃_{k−1}(K^a(I))` at index `k`, i.e. `β_{k,a}(I)`.
pub fn betti_at(i: &MonomialIdeal, a: &Multidegree, field: Field) -> Result<Vec<usize>, EngineError> {
    if a.support().len() > 64 {
        return Err(EngineError::TooManyVariables(a.support().len()));
    }
    let k = koszul_complex(i, a);
    reduced_homology_over(&k.strong_core(), field)
}

/// Koszul-route table with default settings.
pub fn betti_multigraded(i: &MonomialIdeal) -> Result<BettiTable, EngineError> {
    Engine::default().betti(i).map(|t| (*t).clone())
}

/// Lcm-lattice-route table with default settings.
pub fn betti_gpw_oracle(i: &MonomialIdeal) -> Result<BettiTable, EngineError> {
    Engine::default().oracle(i)
}

/// Regularity of the ideal (one more than that of the quotient).
pub fn regularity(i: &MonomialIdeal) -> Result<i64, EngineError> {
    Engine::default().regularity(i)
}
