//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Every comparison is exact. The corpus is the default one: connected graphs on 2..=5
//! vertices, paths and cycles up to 8 vertices, and 20 seeded random graphs on at most 6.

use std::process::ExitCode;
use std::time::Instant;

use regbound::betti::complex::HOMOLOGY_STATS;
use regbound::betti::Engine;
use regbound::graph::{self, family, Family, Graph};
use regbound::harness::{self, CorpusEntry, CorpusSpec, TheoremReport};
use regbound::ideal::{self, RestrictionVector};

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: Vec<String>, summary: String) -> Self {
        match failures.first() {
            None => Outcome { passed: true, detail: summary },
            Some(first) => Outcome {
                passed: false,
                detail: format!("{summary}; {} failures, first: {first}", failures.len()),
            },
        }
    }
}

/// Tallies verdicts of the reports, turning instance errors into failures.
struct Tally {
    verdicts: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { verdicts: 0, failures: Vec::new() }
    }

    fn add(&mut self, r: Result<TheoremReport, regbound::HarnessError>, id: &str) {
        match r {
            Ok(r) => {
                for v in &r.verdicts {
                    self.verdicts += 1;
                    if !v.passed {
                        self.failures.push(format!("{id} {}: {}", v.name, v.detail));
                    }
                }
            }
            Err(e) => self.failures.push(format!("{id}: {e}")),
        }
    }

    fn outcome(self, what: &str) -> Outcome {
        let summary = format!("{} verdicts {what}", self.verdicts);
        Outcome::new(self.failures, summary)
    }
}

struct Suite {
    engine: Engine,
    corpus: Vec<CorpusEntry>,
}

impl Suite {
    fn graphs(&self, max_n: usize) -> impl Iterator<Item = &CorpusEntry> {
        self.corpus.iter().filter(move |e| e.graph.n() <= max_n && e.graph.edge_count() > 0)
    }

    /// Connected graphs on 2..=5 vertices at s <= 2, paths and cycles up to 8 at s = 1.
    fn criterion_one_corpus(&self) -> Vec<(&CorpusEntry, u32)> {
        self.corpus
            .iter()
            .filter_map(|e| {
                if e.id.starts_with("connected:") && e.graph.n() >= 2 {
                    Some((e, 2))
                } else if e.id.starts_with("path:") || e.id.starts_with("cycle:") {
                    Some((e, 1))
                } else {
                    None
                }
            })
            .collect()
    }
}

fn main_bound(s: &Suite) -> Outcome {
    let mut t = Tally::new();
    for (e, smax) in s.criterion_one_corpus() {
        t.add(harness::check_main(&e.id, &e.graph, smax, &s.engine), &e.id);
    }
    t.outcome("reg I(G)^s <= 2s + c")
}

fn tightness(s: &Suite) -> Outcome {
    let mut failures = Vec::new();
    let c5 = family(&Family::Cycle(5)).unwrap();
    let k2 = family(&Family::Path(2)).unwrap();
    let c = |g: &Graph| graph::alpha(g).c;
    let reg = |g: &Graph, p: u32| s.engine.regularity(&ideal::power(&ideal::edge_ideal(g), p).unwrap()).unwrap();
    if (reg(&c5, 1), c(&c5)) != (3, 1) {
        failures.push(format!("C5: reg = {}, c = {}", reg(&c5, 1), c(&c5)));
    }
    for p in 1..=3 {
        let r = reg(&k2, p);
        if r != 2 * p as i64 + c(&k2) || c(&k2) != 0 {
            failures.push(format!("K2 s={p}: reg = {r}"));
        }
    }
    Outcome::new(failures, "reg I(C5) = 3 = 2 + c and reg I(K2)^s = 2s for s = 1..3".into())
}

fn equal(s: &Suite) -> Outcome {
    let mut t = Tally::new();
    for e in s.graphs(5) {
        let smax = if e.graph.n() <= 4 { 3 } else { 2 };
        t.add(harness::check_equal(&e.id, &e.graph, smax, &s.engine), &e.id);
    }
    t.outcome("reg I^s <= reg J^s = reg (J^pol)^s and reg J^s = 2s + c")
}

fn whisker_js(s: &Suite) -> Outcome {
    let mut t = Tally::new();
    for e in s.corpus.iter().filter(|e| e.graph.n() <= 4) {
        t.add(harness::check_whisker_js(&e.id, &e.graph, 2, &s.engine), &e.id);
    }
    t.outcome("reg I(G*)^s = 2s + nu(G*) - 1, nu(G*) = c + 1")
}

fn restriction(s: &Suite) -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for e in s.graphs(5) {
        let n = e.graph.n();
        let i = ideal::edge_ideal(&e.graph);
        let istar = ideal::edge_ideal(&graph::whisker(&e.graph).unwrap());
        for p in 1..=3 {
            count += 1;
            let lhs = ideal::restrict(&ideal::power(&istar, p).unwrap(), &RestrictionVector::prefix(n, n)).unwrap();
            let rhs = ideal::power(&i, p).unwrap();
            if lhs.gens() != rhs.gens() || lhs.ring() != rhs.ring() {
                failures.push(format!("{} s={p}: {lhs} vs {rhs}", e.id));
            }
        }
    }
    Outcome::new(failures, format!("{count} identities (I(G*)^s) restricted = I(G)^s"))
}

fn socle(s: &Suite) -> Outcome {
    let mut t = Tally::new();
    for e in s.graphs(4) {
        t.add(harness::check_witness_socle(&e.id, &e.graph, 3, &s.engine), &e.id);
    }
    t.outcome("socle degree c + 1, reg J = c + 2, witness in the socle of J^s")
}

fn bounds(s: &Suite) -> Outcome {
    let mut graphs: Vec<(String, Graph)> = s.corpus.iter().map(|e| (e.id.clone(), e.graph.clone())).collect();
    let probabilities = [(3, 10), (1, 2), (7, 10)];
    for k in 0..100u64 {
        let (a, b) = probabilities[k as usize % 3];
        let f = Family::Random { n: 1 + k as usize % 12, p: num_rational::Ratio::new(a, b), seed: 1000 + k };
        graphs.push((f.id(), family(&f).unwrap()));
    }
    let mut failures = Vec::new();
    for (id, g) in &graphs {
        let alpha = graph::alpha(g).alpha as u64;
        let hansen = graph::hansen_bound(g.n() as u64, g.edge_count() as u64).unwrap();
        if alpha > hansen {
            failures.push(format!("{id}: alpha {alpha} > hansen {hansen}"));
        }
        if let Ok(kwok) = graph::kwok_bound(g) {
            if num_rational::Ratio::from_integer(alpha as i64) > kwok {
                failures.push(format!("{id}: alpha {alpha} > kwok {kwok}"));
            }
        }
    }
    Outcome::new(failures, format!("alpha <= hansen and alpha <= kwok on {} graphs", graphs.len()))
}

fn bht(s: &Suite) -> Outcome {
    let mut t = Tally::new();
    for (e, smax) in s.criterion_one_corpus() {
        t.add(harness::check_bht_lower(&e.id, &e.graph, smax, &s.engine), &e.id);
    }
    t.outcome("2s + nu(G) - 1 <= reg I(G)^s")
}

/// Runs last: replays every ideal whose table the other criteria computed.
fn soundness(s: &Suite) -> Outcome {
    let mut failures = Vec::new();
    let mut polarized = 0;
    for e in s.graphs(5) {
        let smax = if e.graph.n() <= 4 { 3 } else { 2 };
        let j = ideal::add_squares(&ideal::edge_ideal(&e.graph));
        for p in 1..=smax {
            let js = ideal::power(&j, p).unwrap();
            let pol = ideal::polarize(&js);
            match (s.engine.betti(&js), s.engine.betti(&pol)) {
                (Ok(a), Ok(b)) if a.graded() == b.graded() => polarized += 1,
                (Ok(_), Ok(_)) => failures.push(format!("{} s={p}: polarization changed graded Betti numbers", e.id)),
                (a, b) => failures.push(format!("{} s={p}: {:?} {:?}", e.id, a.err(), b.err())),
            }
        }
    }
    let cached = s.engine.cached();
    for (i, table) in &cached {
        match s.engine.oracle(i) {
            Ok(o) if o == **table => {}
            Ok(_) => failures.push(format!("oracle disagrees on {i}")),
            Err(err) => failures.push(format!("oracle failed on {i}: {err}")),
        }
    }
    let (calls, euler) = (HOMOLOGY_STATS.calls(), HOMOLOGY_STATS.euler_failures());
    if euler > 0 {
        failures.push(format!("{euler} homology calls broke the Euler identity"));
    }
    Outcome::new(
        failures,
        format!(
            "oracle = Koszul on {} ideals, {polarized} polarizations preserve graded Betti numbers, Euler identity on {calls} homology calls",
            cached.len()
        ),
    )
}

fn main() -> ExitCode {
    let suite = Suite {
        engine: Engine::default(),
        corpus: CorpusSpec::parse("default").unwrap().entries(0).unwrap(),
    };
    let criteria: [(u32, &str, fn(&Suite) -> Outcome); 9] = [
        (1, "main bound", main_bound),
        (2, "tightness witnesses", tightness),
        (3, "equality through J", equal),
        (4, "whisker regularity", whisker_js),
        (5, "restriction identity", restriction),
        (6, "socle witness", socle),
        (8, "independence bounds", bounds),
        (9, "induced matching lower bound", bht),
        (7, "engine soundness", soundness),
    ];
    let mut results = Vec::new();
    for (n, name, f) in criteria {
        let start = Instant::now();
        let o = f(&suite);
        println!(
            "{} criterion {n} ({name}): {} [{:.1}s]",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
        results.push(o.passed);
    }
    let failed = results.iter().filter(|p| !**p).count();
    println!("acceptance: {} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
