//! Finite simple graphs on vertices `1..=n` and their stability invariants.
//!
//! Vertex sets are handled as `u64` bitmasks internally (bit `i - 1` is vertex `i`), so every
//! search routine here is limited to `n <= 64`. The exhaustive searches are meant for the
//! small graphs the regularity engine can digest anyway.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::Rational;

/// Largest vertex count supported by the bitmask searches.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson { n: g.n, edges: g.edges.iter().map(|&(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;
    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        Graph::new(j.n, j.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)` and dropping duplicates.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Family(format!("at most {MAX_VERTICES} vertices supported, got {n}")));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(GraphError::InvalidEdge(u, v));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Returns a copy with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        Graph::new(self.n, self.edges().chain(std::iter::once((u, v))))
    }

    /// Open-neighborhood bitmasks, index `i` for vertex `i + 1`.
    fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all_bits(self.n)
    }

    pub fn is_stable(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

fn all_bits(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

fn mask_to_vertices(mask: u64) -> Vec<usize> {
    bits(mask).map(|i| i + 1).collect()
}

/// Parses the edge-list format: a header `n m` followed by `m` lines `u v`.
///
/// Blank lines and lines starting with `#` are skipped. Line numbers in errors are 1-based
/// positions in the input text.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(GraphError::Parse { line: 1, msg: "missing header `n m`".into() })?;
    let nums = parse_pair(hline, header)?;
    let (n, m) = (nums.0, nums.1);
    if n > MAX_VERTICES {
        return Err(GraphError::Parse { line: hline, msg: format!("at most {MAX_VERTICES} vertices supported") });
    }
    let mut edges = BTreeSet::new();
    let mut count = 0;
    for (line, l) in lines {
        if count == m {
            return Err(GraphError::Parse { line, msg: format!("more than the declared {m} edges") });
        }
        let (u, v) = parse_pair(line, l)?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(GraphError::OutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop { line, vertex: u });
        }
        edges.insert((u.min(v), u.max(v)));
        count += 1;
    }
    if count < m {
        return Err(GraphError::Parse { line: text.lines().count().max(1), msg: format!("expected {m} edges, found {count}") });
    }
    Ok(Graph { n, edges })
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize), GraphError> {
    let parts: Vec<&str> = l.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(GraphError::Parse { line, msg: format!("expected two integers, got `{l}`") });
    }
    let p = |s: &str| s.parse::<usize>().map_err(|_| GraphError::Parse { line, msg: format!("not a nonnegative integer: `{s}`") });
    Ok((p(parts[0])?, p(parts[1])?))
}

/// Renders a graph in the edge-list format accepted by [`parse_graph`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n, g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSetReport {
    pub alpha: usize,
    /// Dimension of the stable complex, `alpha - 1`.
    pub c: i64,
    /// Lexicographically least maximum stable set.
    pub witness: Vec<usize>,
    /// Sizes of all inclusion-maximal stable sets, sorted ascending.
    pub maximal_set_sizes: Vec<usize>,
}

pub fn alpha(g: &Graph) -> StableSetReport {
    let adj = g.adjacency();
    let (alpha, witness) = maximum_stable_set(&adj, g.n);
    let mut sizes: Vec<usize> = maximal_stable_sets(g).iter().map(Vec::len).collect();
    sizes.sort_unstable();
    StableSetReport { alpha, c: alpha as i64 - 1, witness: mask_to_vertices(witness), maximal_set_sizes: sizes }
}

/// Branch and bound, include-before-exclude in vertex order, so the first maximum found is
/// the lexicographically least one.
fn maximum_stable_set(adj: &[u64], n: usize) -> (usize, u64) {
    fn go(adj: &[u64], cand: u64, cur: u64, best: &mut (usize, u64)) {
        let size = cur.count_ones() as usize;
        if cand == 0 {
            if size > best.0 {
                *best = (size, cur);
            }
            return;
        }
        if size + cand.count_ones() as usize <= best.0 {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        go(adj, cand & !bit & !adj[v], cur | bit, best);
        go(adj, cand & !bit, cur, best);
    }
    let mut best = (0, 0);
    go(adj, all_bits(n), 0, &mut best);
    best
}

/// All inclusion-maximal stable sets (Bron–Kerbosch with pivoting on the complement).
pub fn maximal_stable_sets(g: &Graph) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let all = all_bits(g.n);
    let comp: Vec<u64> = (0..g.n).map(|v| all & !adj[v] & !(1u64 << v)).collect();
    let mut out = Vec::new();
    fn bk(comp: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = bits(p | x).max_by_key(|&u| (p & comp[u]).count_ones()).unwrap();
        let (mut p, mut x) = (p, x);
        for v in bits(p & !comp[pivot]) {
            let bit = 1u64 << v;
            bk(comp, r | bit, p & comp[v], x & comp[v], out);
            p &= !bit;
            x |= bit;
        }
    }
    let mut masks = Vec::new();
    if g.n == 0 {
        masks.push(0);
    } else {
        bk(&comp, 0, all, 0, &mut masks);
    }
    masks.sort_unstable();
    out.extend(masks.into_iter().map(mask_to_vertices));
    out
}

/// Induced matching number: the most pairwise disjoint edges whose endpoints induce no other edge.
pub fn induced_matching_number(g: &Graph) -> usize {
    induced_matching(g).len()
}

/// A maximum induced matching, as edges `(u, v)` with `u < v`.
pub fn induced_matching(g: &Graph) -> Vec<(usize, usize)> {
    let adj = g.adjacency();
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u - 1, v - 1)).collect();
    let all = all_bits(g.n);

    fn go(
        edges: &[(usize, usize)],
        adj: &[u64],
        all: u64,
        from: usize,
        blocked: u64,
        cur: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        let free = (all & !blocked).count_ones() as usize;
        if cur.len() + free / 2 <= best.len() {
            return;
        }
        for i in from..edges.len() {
            let (u, v) = edges[i];
            if blocked & ((1 << u) | (1 << v)) != 0 {
                continue;
            }
            // Closed neighborhoods of both endpoints become unusable.
            let nb = adj[u] | adj[v] | (1 << u) | (1 << v);
            cur.push(i);
            go(edges, adj, all, i + 1, blocked | nb, cur, best);
            cur.pop();
        }
    }

    let mut best = Vec::new();
    go(&edges, &adj, all, 0, 0, &mut Vec::new(), &mut best);
    best.into_iter().map(|i| (edges[i].0 + 1, edges[i].1 + 1)).collect()
}

/// Attaches a pendant leaf `n + i` to every vertex `i`.
pub fn whisker(g: &Graph) -> Result<Graph, GraphError> {
    if g.n == 0 {
        return Err(GraphError::EmptyWhisker);
    }
    let n = g.n;
    Graph::new(2 * n, g.edges().chain((1..=n).map(|i| (i, n + i))))
}

/// Even vertex count, no isolated vertices, and every maximal stable set of size `|V| / 2`.
pub fn is_very_well_covered(g: &Graph) -> bool {
    if g.n == 0 || g.n % 2 == 1 {
        return false;
    }
    if (1..=g.n).any(|v| g.degree(v) == 0) {
        return false;
    }
    maximal_stable_sets(g).iter().all(|s| s.len() == g.n / 2)
}

/// `floor(1/2 + sqrt(1/4 + n^2 - n - 2e))`, computed as the largest `k` with
/// `k(k - 1) <= n^2 - n - 2e`.
pub fn hansen_bound(n: u64, e: u64) -> Result<u64, GraphError> {
    let n = n as i128;
    let d = n * n - n - 2 * e as i128;
    if d < 0 {
        return Err(GraphError::NegativeRadicand);
    }
    // k(k-1) <= d is monotone in k, start near sqrt(d) and walk.
    let mut k = (d as f64).sqrt() as i128 + 1;
    while k * (k - 1) > d {
        k -= 1;
    }
    while (k + 1) * k <= d {
        k += 1;
    }
    Ok(k as u64)
}

/// `n - e / Δ` as an exact rational.
pub fn kwok_bound(g: &Graph) -> Result<Rational, GraphError> {
    let delta = g.max_degree();
    if delta == 0 {
        return Err(GraphError::NoEdges);
    }
    Ok(Ratio::from_integer(g.n as i64) - Ratio::new(g.edge_count() as i64, delta as i64))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Erdős–Rényi `G(n, p)` with `p = num / den`.
    Random { n: usize, p: Ratio<u64>, seed: u64 },
}

impl Family {
    /// Parses `path:N`, `cycle:N`, `complete:N` or `random:N:P`, where `P` is a fraction
    /// `a/b` or a decimal in `[0, 1]`.
    pub fn parse(spec: &str, seed: u64) -> Result<Family, GraphError> {
        let bad = || GraphError::Family(spec.to_string());
        let parts: Vec<&str> = spec.split(':').collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["path", n] => Ok(Family::Path(num(n)?)),
            ["cycle", n] => Ok(Family::Cycle(num(n)?)),
            ["complete", n] => Ok(Family::Complete(num(n)?)),
            ["random", n, p] => Ok(Family::Random { n: num(n)?, p: parse_probability(p).ok_or_else(bad)?, seed }),
            ["random", n, p, s] => Ok(Family::Random {
                n: num(n)?,
                p: parse_probability(p).ok_or_else(bad)?,
                seed: s.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }

    /// Short display name, e.g. `C5`, `P3`, `K4`.
    pub fn label(&self) -> String {
        match self {
            Family::Path(n) => format!("P{n}"),
            Family::Cycle(n) => format!("C{n}"),
            Family::Complete(n) => format!("K{n}"),
            Family::Random { n, p, seed } => format!("G({n},{p},{seed})"),
        }
    }

    pub fn id(&self) -> String {
        match self {
            Family::Path(n) => format!("path:{n}"),
            Family::Cycle(n) => format!("cycle:{n}"),
            Family::Complete(n) => format!("complete:{n}"),
            Family::Random { n, p, seed } => format!("random:{n}:{p}:{seed}"),
        }
    }
}

fn parse_probability(s: &str) -> Option<Ratio<u64>> {
    let r = if let Some((a, b)) = s.split_once('/') {
        let (a, b): (u64, u64) = (a.parse().ok()?, b.parse().ok()?);
        if b == 0 {
            return None;
        }
        Ratio::new(a, b)
    } else if let Some((int, frac)) = s.split_once('.') {
        let int: u64 = if int.is_empty() { 0 } else { int.parse().ok()? };
        if frac.len() > 9 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let den = 10u64.pow(frac.len() as u32);
        let f: u64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
        Ratio::new(int * den + f, den)
    } else {
        Ratio::from_integer(s.parse().ok()?)
    };
    (r <= Ratio::from_integer(1)).then_some(r)
}

pub fn family(f: &Family) -> Result<Graph, GraphError> {
    match *f {
        Family::Path(n) => Graph::new(n, (1..n).map(|i| (i, i + 1))),
        Family::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::Family(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::new(n, (1..n).map(|i| (i, i + 1)).chain(std::iter::once((n, 1))))
        }
        Family::Complete(n) => Graph::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)))),
        Family::Random { n, p, seed } => {
            if *p.numer() > *p.denom() {
                return Err(GraphError::Family(format!("p = {p} outside [0, 1]")));
            }
            // ChaCha8 seeded from `seed`; pairs visited in lexicographic order, each kept
            // when a uniform draw from 0..den falls below num.
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    if rng.gen_range(0..*p.denom()) < *p.numer() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges)
        }
    }
}

/// All connected graphs on `n` vertices up to isomorphism, each in its canonical labeling,
/// ordered by edge count and then canonical code. Intended for `n <= 6`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "canonical enumeration by permutation is only practical for n <= 7");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = k;
        index[v][u] = k;
    }
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for code in 0u64..(1u64 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|perm| {
                let mut c = 0u64;
                for k in bits(code) {
                    let (u, v) = pairs[k];
                    c |= 1 << index[perm[u]][perm[v]];
                }
                c
            })
            .min()
            .unwrap_or(0);
        if canon == code {
            let g = Graph::new(n, bits(code).map(|k| (pairs[k].0 + 1, pairs[k].1 + 1))).unwrap();
            if g.is_connected() {
                seen.insert((code.count_ones(), code));
            }
        }
    }
    seen.into_iter()
        .map(|(_, code)| Graph::new(n, bits(code).map(|k| (pairs[k].0 + 1, pairs[k].1 + 1))).unwrap())
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::new(2, [(1, 2)]).unwrap()
    }

    fn c5() -> Graph {
        family(&Family::Cycle(5)).unwrap()
    }

    fn p5() -> Graph {
        family(&Family::Path(5)).unwrap()
    }

    /// Brute-force stability number over all subsets.
    fn alpha_brute(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .filter(|&m| g.is_stable(&mask_to_vertices(m)))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_graph("2 1\n1 2").unwrap(), k2());
        assert_eq!(parse_graph("5 5\n1 2\n2 3\n3 4\n4 5\n5 1").unwrap(), c5());
        assert_eq!(parse_graph("3 1\n1 1"), Err(GraphError::Loop { line: 2, vertex: 1 }));
    }

    #[test]
    fn parse_errors_name_the_line() {
        assert_eq!(parse_graph("3 2\n1 2\n2 4"), Err(GraphError::OutOfRange { line: 3, vertex: 4, n: 3 }));
        assert!(matches!(parse_graph("3 1\n1 x"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("3 2\n1 2"), Err(GraphError::Parse { .. })));
        // duplicates collapse
        assert_eq!(parse_graph("2 2\n1 2\n2 1").unwrap(), k2());
    }

    #[test]
    fn alpha_examples() {
        let r = alpha(&k2());
        assert_eq!((r.alpha, r.c), (1, 0));
        let r = alpha(&c5());
        assert_eq!((r.alpha, r.c), (2, 1));
        assert_eq!(alpha_brute(&c5()), 2);
        let r = alpha(&p5());
        assert_eq!((r.alpha, r.c, r.witness.clone()), (3, 2, vec![1, 3, 5]));
        assert_eq!(alpha_brute(&p5()), 3);
    }

    #[test]
    fn alpha_of_empty_and_edgeless() {
        let r = alpha(&Graph::empty(0));
        assert_eq!((r.alpha, r.c), (0, -1));
        assert_eq!(r.maximal_set_sizes, vec![0]);
        assert_eq!(alpha(&Graph::empty(4)).alpha, 4);
    }

    #[test]
    fn witness_is_lex_least() {
        // C6 maximum stable sets: {1,3,5} and {2,4,6}
        let r = alpha(&family(&Family::Cycle(6)).unwrap());
        assert_eq!(r.witness, vec![1, 3, 5]);
    }

    #[test]
    fn maximal_sets_of_c5() {
        let sets = maximal_stable_sets(&c5());
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 2));
    }

    #[test]
    fn induced_matching_examples() {
        assert_eq!(induced_matching_number(&k2()), 1);
        assert_eq!(induced_matching_number(&p5()), 2);
        assert_eq!(induced_matching(&p5()), vec![(1, 2), (4, 5)]);
        assert_eq!(induced_matching_number(&whisker(&k2()).unwrap()), 1);
        assert_eq!(induced_matching_number(&Graph::empty(3)), 0);
        assert_eq!(induced_matching_number(&c5()), 1);
    }

    #[test]
    fn whisker_examples() {
        let w = whisker(&k2()).unwrap();
        assert_eq!(w, Graph::new(4, [(1, 2), (1, 3), (2, 4)]).unwrap());
        let w = whisker(&c5()).unwrap();
        assert_eq!((w.n(), w.edge_count()), (10, 10));
        assert_eq!(whisker(&Graph::empty(1)).unwrap(), k2().clone());
        assert_eq!(whisker(&Graph::empty(0)), Err(GraphError::EmptyWhisker));
    }

    #[test]
    fn very_well_covered_examples() {
        assert!(is_very_well_covered(&whisker(&k2()).unwrap()));
        assert!(!is_very_well_covered(&c5()));
        assert!(is_very_well_covered(&whisker(&c5()).unwrap()));
        // C4 has an even vertex count but maximal stable sets of size 2 = 4/2: very well-covered
        assert!(is_very_well_covered(&family(&Family::Cycle(4)).unwrap()));
        // isolated vertex
        assert!(!is_very_well_covered(&Graph::new(4, [(1, 2), (2, 3)]).unwrap()));
    }

    #[test]
    fn hansen_examples() {
        assert_eq!(hansen_bound(2, 1).unwrap(), 1);
        assert_eq!(hansen_bound(3, 2).unwrap(), 2);
        assert_eq!(hansen_bound(5, 5).unwrap(), 3);
        assert_eq!(hansen_bound(0, 0).unwrap(), 1);
        assert_eq!(hansen_bound(3, 4), Err(GraphError::NegativeRadicand));
    }

    #[test]
    fn hansen_matches_float_evaluation_away_from_boundaries() {
        for n in 0u64..40 {
            for e in 0..=n * n.saturating_sub(1) / 2 {
                let x = 0.5 + (0.25 + (n * n) as f64 - n as f64 - 2.0 * e as f64).sqrt();
                let h = hansen_bound(n, e).unwrap();
                if (x - x.round()).abs() > 1e-9 {
                    assert_eq!(h, x.floor() as u64, "n={n} e={e}");
                } else {
                    // exact integer values: the closed form equals k exactly when k(k-1) = d
                    assert_eq!(h, x.round() as u64, "n={n} e={e}");
                }
            }
        }
    }

    #[test]
    fn kwok_examples() {
        assert_eq!(kwok_bound(&c5()).unwrap(), Ratio::new(5, 2));
        assert_eq!(kwok_bound(&k2()).unwrap(), Ratio::from_integer(1));
        assert_eq!(kwok_bound(&family(&Family::Complete(4)).unwrap()).unwrap(), Ratio::from_integer(2));
        assert_eq!(kwok_bound(&Graph::empty(3)), Err(GraphError::NoEdges));
    }

    #[test]
    fn family_examples() {
        assert_eq!(family(&Family::Path(3)).unwrap(), Graph::new(3, [(1, 2), (2, 3)]).unwrap());
        assert_eq!(family(&Family::Cycle(5)).unwrap(), c5());
        assert_eq!(family(&Family::Complete(4)).unwrap().edge_count(), 6);
        assert!(family(&Family::Cycle(2)).is_err());
    }

    #[test]
    fn random_family_is_reproducible() {
        let f = Family::parse("random:8:1/2", 7).unwrap();
        let a = family(&f).unwrap();
        assert_eq!(a, family(&f).unwrap());
        let full = family(&Family::parse("random:6:1", 3).unwrap()).unwrap();
        assert_eq!(full.edge_count(), 15);
        let none = family(&Family::parse("random:6:0.0", 3).unwrap()).unwrap();
        assert_eq!(none.edge_count(), 0);
        assert!(Family::parse("random:6:3/2", 0).is_err());
    }

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn json_roundtrip() {
        let s = serde_json::to_string(&c5()).unwrap();
        assert_eq!(s, r#"{"n":5,"edges":[[1,2],[1,5],[2,3],[3,4],[4,5]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c5());
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }
}
