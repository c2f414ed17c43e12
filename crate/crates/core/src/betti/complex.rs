//! Finite simplicial complexes stored by their facets, and their reduced homology.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use super::linalg::{rank_mod_p, rational_rank, SparseColumn};
use super::Field;
use crate::error::EngineError;

/// A simplicial complex given by its facets (maximal faces) over `u32` vertex labels.
///
/// The void complex has no facets at all. The irrelevant complex has the single facet `∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    facets: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    pub fn void() -> Self {
        SimplicialComplex { facets: Vec::new() }
    }

    pub fn irrelevant() -> Self {
        SimplicialComplex { facets: vec![Vec::new()] }
    }

    pub fn simplex(vertices: impl IntoIterator<Item = u32>) -> Self {
        Self::from_faces([vertices.into_iter().collect::<Vec<_>>()])
    }

    /// Downward closure of `faces`. Only the maximal ones are stored.
    pub fn from_faces<I, F>(faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        let mut fs: Vec<Vec<u32>> = faces
            .into_iter()
            .map(|f| f.into_iter().collect::<BTreeSet<u32>>().into_iter().collect())
            .collect();
        fs.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        fs.dedup();
        let mut kept: Vec<Vec<u32>> = Vec::new();
        for f in fs {
            // kept is sorted by decreasing size and only a larger face can contain f
            if !kept.iter().take_while(|k| k.len() > f.len()).any(|k| is_subset(&f, k)) {
                kept.push(f);
            }
        }
        kept.sort();
        SimplicialComplex { facets: kept }
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.facets.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        self.facets.iter().any(|k| is_subset(&f, k))
    }

    /// Largest face size minus one; `None` for the void complex.
    pub fn dimension(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    /// All faces grouped by size: entry `k` holds the faces with `k` vertices, sorted.
    pub fn faces_by_size(&self) -> Vec<Vec<Vec<u32>>> {
        let Some(top) = self.facets.iter().map(Vec::len).max() else {
            return Vec::new();
        };
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for f in &self.facets {
            if seen.contains(f) {
                continue;
            }
            let k = f.len();
            for mask in 0u64..(1u64 << k) {
                let sub: Vec<u32> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                seen.insert(sub);
            }
        }
        let mut by_size = vec![Vec::new(); top + 1];
        for f in seen {
            by_size[f.len()].push(f);
        }
        for group in &mut by_size {
            group.sort();
        }
        by_size
    }

    /// Face counts by size (entry 0 is the empty face).
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// Repeatedly deletes dominated vertices. A vertex `v` is dominated when some other vertex
    /// lies in every facet containing `v`; deleting it is a strong deformation retraction, so
    /// the result has the same homotopy type.
    pub fn strong_core(&self) -> SimplicialComplex {
        if self.facets.len() <= 1 {
            // a simplex: its core is a point, or it is {∅} / void already
            return match self.facets.first() {
                Some(f) if f.len() > 1 => SimplicialComplex { facets: vec![vec![f[0]]] },
                _ => self.clone(),
            };
        }
        let verts = self.vertices();
        let words = verts.len().div_ceil(64);
        let local: HashMap<u32, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut facets: Vec<Vec<u64>> = self
            .facets
            .iter()
            .map(|f| {
                let mut b = vec![0u64; words];
                for v in f {
                    let i = local[v];
                    b[i / 64] |= 1 << (i % 64);
                }
                b
            })
            .collect();
        let mut alive: Vec<bool> = vec![true; verts.len()];
        loop {
            let mut removed = None;
            for v in (0..verts.len()).filter(|&v| alive[v]) {
                let (w, bit) = (v / 64, 1u64 << (v % 64));
                let mut inter: Option<Vec<u64>> = None;
                for f in facets.iter().filter(|f| f[w] & bit != 0) {
                    inter = Some(match inter {
                        None => f.clone(),
                        Some(mut acc) => {
                            acc.iter_mut().zip(f).for_each(|(a, b)| *a &= b);
                            acc
                        }
                    });
                }
                let mut inter = inter.expect("live vertices lie in some facet");
                inter[w] &= !bit;
                if inter.iter().any(|&x| x != 0) {
                    removed = Some(v);
                    break;
                }
            }
            let Some(v) = removed else { break };
            alive[v] = false;
            let (w, bit) = (v / 64, 1u64 << (v % 64));
            for f in &mut facets {
                f[w] &= !bit;
            }
            facets = maximal_bitsets(facets);
        }
        SimplicialComplex::from_faces(facets.iter().map(|b| {
            (0..verts.len()).filter(|&i| b[i / 64] >> (i % 64) & 1 == 1).map(|i| verts[i]).collect::<Vec<u32>>()
        }))
    }
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.by_ref().any(|y| y == x))
}

fn maximal_bitsets(mut fs: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let pop = |b: &Vec<u64>| b.iter().map(|w| w.count_ones()).sum::<u32>();
    fs.sort_by_key(|b| std::cmp::Reverse(pop(b)));
    fs.dedup();
    let mut kept: Vec<Vec<u64>> = Vec::new();
    for f in fs {
        if !kept.iter().any(|k| k.iter().zip(&f).all(|(a, b)| b & !a == 0)) {
            kept.push(f);
        }
    }
    kept
}

/// Counters over every homology evaluation in the process.
#[derive(Debug, Default)]
pub struct HomologyStats {
    calls: AtomicU64,
    euler_failures: AtomicU64,
}

impl HomologyStats {
    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    pub fn euler_failures(&self) -> u64 {
        self.euler_failures.load(Ordering::Relaxed)
    }
}

pub static HOMOLOGY_STATS: HomologyStats = HomologyStats { calls: AtomicU64::new(0), euler_failures: AtomicU64::new(0) };

/// Reduced homology over the rationals. Entry `k + 1` is `dim H̃_k` for `k >= -1`;
/// the void complex gives an empty vector (all groups zero).
pub fn reduced_homology(k: &SimplicialComplex) -> Vec<usize> {
    reduced_homology_over(k, Field::Rationals).expect("rational homology cannot fail")
}

/// Reduced homology over `field`. For a prime field the ranks are also computed over the
/// rationals and any disagreement is an error.
pub fn reduced_homology_over(k: &SimplicialComplex, field: Field) -> Result<Vec<usize>, EngineError> {
    homology_of_faces(&k.faces_by_size(), field)
}

/// Reduced homology from an explicit face list: entry `k` holds the faces with `k` sorted
/// vertices, and the lists must be closed under taking subsets. `[[[]]]` is the irrelevant
/// complex and an empty list the void one.
pub fn homology_of_faces(faces: &[Vec<Vec<u32>>], field: Field) -> Result<Vec<usize>, EngineError> {
    let f: Vec<usize> = faces.iter().map(Vec::len).collect();
    let index: Vec<HashMap<&[u32], usize>> =
        faces.iter().map(|g| g.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect()).collect();
    // rank[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut rank = vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        let cols: Vec<SparseColumn> = faces[s]
            .iter()
            .map(|face| {
                let mut col: SparseColumn = (0..face.len())
                    .map(|j| {
                        let sub: Vec<u32> = face.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &v)| v).collect();
                        (index[s - 1][sub.as_slice()], if j % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        let r = rational_rank(&cols);
        if let Field::Prime(p) = field {
            let m = rank_mod_p(&cols, p);
            if m != r {
                return Err(EngineError::FieldDisagreement { p, modular: m, rational: r });
            }
        }
        rank[s] = r;
    }
    let h: Vec<usize> = (0..faces.len()).map(|s| f[s] - rank[s] - rank[s + 1]).collect();
    HOMOLOGY_STATS.calls.fetch_add(1, Ordering::Relaxed);
    if !euler_identity(&f, &h) {
        HOMOLOGY_STATS.euler_failures.fetch_add(1, Ordering::Relaxed);
    }
    Ok(h)
}

/// `Σ (−1)^k f_k = Σ (−1)^k dim H̃_k`, both indexed by face size.
pub fn euler_identity(f: &[usize], h: &[usize]) -> bool {
    let alt = |v: &[usize]| v.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) }).sum::<i64>();
    alt(f) == alt(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points() {
        let k = SimplicialComplex::from_faces([vec![1], vec![2]]);
        assert_eq!(reduced_homology(&k), vec![0, 1]);
    }

    #[test]
    fn hollow_triangle() {
        let k = SimplicialComplex::from_faces([vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(reduced_homology(&k), vec![0, 0, 1]);
        assert_eq!(k.f_vector(), vec![1, 3, 3]);
    }

    #[test]
    fn full_simplex_is_acyclic() {
        let k = SimplicialComplex::simplex([1, 2, 3]);
        assert_eq!(reduced_homology(&k), vec![0, 0, 0, 0]);
    }

    #[test]
    fn void_and_irrelevant() {
        assert_eq!(reduced_homology(&SimplicialComplex::void()), Vec::<usize>::new());
        assert_eq!(reduced_homology(&SimplicialComplex::irrelevant()), vec![1]);
        assert!(SimplicialComplex::void().is_void());
        assert!(!SimplicialComplex::irrelevant().is_void());
    }

    #[test]
    fn hollow_tetrahedron_and_torus_like() {
        let sphere = SimplicialComplex::from_faces([vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]);
        assert_eq!(reduced_homology(&sphere), vec![0, 0, 0, 1]);
        // two hollow triangles sharing a vertex: wedge of two circles
        let wedge = SimplicialComplex::from_faces([
            vec![1, 2],
            vec![2, 3],
            vec![1, 3],
            vec![3, 4],
            vec![4, 5],
            vec![3, 5],
        ]);
        assert_eq!(reduced_homology(&wedge), vec![0, 0, 2]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // 6-vertex RP^2
        let rp2 = SimplicialComplex::from_faces([
            vec![1, 2, 3],
            vec![1, 3, 4],
            vec![1, 4, 5],
            vec![1, 5, 6],
            vec![1, 2, 6],
            vec![2, 3, 5],
            vec![3, 4, 6],
            vec![2, 4, 5],
            vec![2, 4, 6],
            vec![3, 5, 6],
        ]);
        assert_eq!(reduced_homology(&rp2), vec![0, 0, 0, 0]);
        assert!(matches!(
            reduced_homology_over(&rp2, Field::Prime(2)),
            Err(EngineError::FieldDisagreement { p: 2, .. })
        ));
        assert_eq!(reduced_homology_over(&rp2, Field::Prime(10007)).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn from_faces_keeps_maximal() {
        let k = SimplicialComplex::from_faces([vec![2, 1], vec![1], vec![3], vec![]]);
        assert_eq!(k.facets(), &[vec![1, 2], vec![3]]);
        assert!(k.contains_face(&[2]));
        assert!(!k.contains_face(&[2, 3]));
    }

    #[test]
    fn strong_core_preserves_homology() {
        let cases = [
            SimplicialComplex::from_faces([vec![1, 2], vec![2, 3], vec![1, 3]]),
            SimplicialComplex::from_faces([vec![1, 2, 3], vec![3, 4], vec![4, 5, 6], vec![1, 6]]),
            SimplicialComplex::from_faces([vec![1, 2, 3], vec![2, 3, 4], vec![5]]),
            SimplicialComplex::simplex([1, 2, 3, 4]),
            SimplicialComplex::irrelevant(),
            SimplicialComplex::void(),
        ];
        for k in cases {
            let core = k.strong_core();
            let trim = |mut v: Vec<usize>| {
                while v.last() == Some(&0) {
                    v.pop();
                }
                v
            };
            assert_eq!(trim(reduced_homology(&core)), trim(reduced_homology(&k)), "{k:?}");
            assert!(core.vertices().len() <= k.vertices().len().max(1));
        }
        // a cone collapses to a point
        let cone = SimplicialComplex::from_faces([vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1]]);
        assert_eq!(cone.strong_core().vertices().len(), 1);
    }

    #[test]
    fn euler_identity_holds_on_examples() {
        let k = SimplicialComplex::from_faces([vec![1, 2], vec![1, 3], vec![2, 3], vec![4]]);
        let h = reduced_homology(&k);
        assert!(euler_identity(&k.f_vector(), &h));
        assert!(!euler_identity(&[1, 3, 3], &[0, 0, 0]));
    }
}
