//! Executable verdicts for the regularity bound and the steps of its proof.
//!
//! Every check takes a graph, a largest power `smax` and an [`Engine`], and returns a
//! [`TheoremReport`] whose verdicts carry the computed numbers. Failed verdicts also carry
//! the graph, the ideals and their Betti tables so the instance can be replayed.
//!
//! The imported formula for very well-covered graphs is checked in the form
//! `reg I(G*)^s = 2s + ν(G*) − 1`. The form `s + ν − 1` also circulates for it; it is
//! inconsistent with the lower bound `2s + ν(G) − 1` already at `G = K2`, so it is not used.
//! Likewise `ν(G*)` is compared with `dim Δ(G) + 1`; `dim Δ(G*)` is recorded separately
//! and always equals `n − 1`.

pub mod corpus;
pub mod report;

use std::collections::BTreeMap;

use crate::betti::Engine;
use crate::error::HarnessError;
use crate::graph::{self, Graph};
use crate::ideal::{self, MonomialIdeal, Multidegree, RestrictionVector};
pub use corpus::{default_smax, CorpusEntry, CorpusSpec};
pub use report::{CorpusReport, Failure, InstanceError, Invariants, PowerRow, TheoremReport, Verdict};

/// Check names in the order `check --all` runs them.
pub const ALL_CHECKS: [&str; 8] =
    ["main", "hansen", "equal", "whisker_js", "bht_lower", "restriction", "eh_monotone", "witness_socle"];

/// The ideals attached to one graph.
struct Instance<'a> {
    id: String,
    g: &'a Graph,
    engine: &'a Engine,
    inv: Invariants,
    /// `I(G)`; zero for edgeless graphs.
    i: MonomialIdeal,
    /// `I(G) + (x_1^2, …, x_n^2)`.
    j: MonomialIdeal,
    jpol: MonomialIdeal,
    /// `I(G*)`.
    istar: MonomialIdeal,
}

impl<'a> Instance<'a> {
    fn new(id: &str, g: &'a Graph, engine: &'a Engine) -> Result<Self, HarnessError> {
        let whisker = graph::whisker(g)?;
        let stable = graph::alpha(g);
        let kwok = graph::kwok_bound(g).ok();
        let inv = Invariants {
            n: g.n(),
            e: g.edge_count(),
            alpha: stable.alpha,
            c: stable.c,
            nu_g: graph::induced_matching_number(g),
            nu_gstar: graph::induced_matching_number(&whisker),
            c_gstar: graph::alpha(&whisker).c,
            hansen: graph::hansen_bound(g.n() as u64, g.edge_count() as u64)?,
            kwok: kwok.map(|k| k.to_string()),
            kwok_floor: kwok.map(|k| k.floor().to_integer()),
        };
        let i = ideal::edge_ideal(g);
        let j = ideal::add_squares(&i);
        let jpol = ideal::polarize(&j);
        let istar = ideal::edge_ideal(&whisker);
        Ok(Instance { id: id.to_string(), g, engine, inv, i, j, jpol, istar })
    }

    fn report(&self, smax: u32) -> TheoremReport {
        TheoremReport {
            graph_id: self.id.clone(),
            graph: self.g.clone(),
            smax,
            invariants: self.inv.clone(),
            rows: (1..=smax).map(|s| PowerRow { s, ..PowerRow::default() }).collect(),
            verdicts: Vec::new(),
        }
    }

    fn power(&self, base: &MonomialIdeal, s: u32) -> Result<MonomialIdeal, HarnessError> {
        Ok(ideal::power(base, s)?)
    }

    fn reg(&self, ideal: &MonomialIdeal, s: u32) -> Result<i64, HarnessError> {
        self.engine
            .regularity(ideal)
            .map_err(|source| HarnessError::Engine { graph_id: self.id.clone(), s, source })
    }

    /// Replay data for a failure, Betti tables included when already computed.
    fn failure(&self, s: Option<u32>, values: &[(&str, i64)], ideals: &[(&str, &MonomialIdeal)]) -> Failure {
        let mut betti = BTreeMap::new();
        for (name, i) in ideals {
            if !i.is_zero() {
                if let Ok(t) = self.engine.betti(i) {
                    betti.insert(name.to_string(), (*t).clone());
                }
            }
        }
        Failure {
            graph: self.g.clone(),
            s,
            values: values.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            ideals: ideals.iter().map(|(k, i)| (k.to_string(), (*i).clone())).collect(),
            betti,
        }
    }

    fn require_edges(&self) -> Result<(), HarnessError> {
        if self.g.edge_count() == 0 {
            Err(HarnessError::NoEdges)
        } else {
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verdict(
    inst: &Instance,
    check: &str,
    name: &str,
    s: Option<u32>,
    passed: bool,
    detail: String,
    values: &[(&str, i64)],
    ideals: &[(&str, &MonomialIdeal)],
) -> Verdict {
    Verdict {
        check: check.into(),
        name: name.into(),
        s,
        passed,
        detail,
        failure: (!passed).then(|| inst.failure(s, values, ideals)),
    }
}

fn validate(smax: u32) -> Result<(), HarnessError> {
    if smax == 0 {
        Err(HarnessError::BadSmax)
    } else {
        Ok(())
    }
}

/// `reg I(G)^s ≤ 2s + c` for `s = 1..=smax`.
pub fn check_main(id: &str, g: &Graph, smax: u32, engine: &Engine) -> Result<TheoremReport, HarnessError> {
    validate(smax)?;
    let inst = Instance::new(id, g, engine)?;
    inst.require_edges()?;
    let mut rep = inst.report(smax);
    let c = inst.inv.c;
    for s in 1..=smax {
        let is = inst.power(&inst.i, s)?;
        let reg = inst.reg(&is, s)?;
        let bound = 2 * s as i64 + c;
        rep.rows[s as usize - 1].reg_i = Some(reg);
        rep.verdicts.push(verdict(
            &inst,
            "main",
            "main",
            Some(s),
            reg <= bound,
            format!("reg I^{s} = {reg} <= 2s + c = {bound} (slack {})", bound - reg),
            &[("reg_I", reg), ("c", c)],
            &[("I^s", &is)],
        ));
    }
    Ok(rep)
}

/// `reg I(G)^s ≤ 2s + hansen − 1`, and `c ≤ hansen − 1`.
pub fn check_hansen(id: &str, g: &Graph, smax: u32, engine: &Engine) -> Result<TheoremReport, HarnessError> {
    validate(smax)?;
    let inst = Instance::new(id, g, engine)?;
    inst.require_edges()?;
    let mut rep = inst.report(smax);
    let (c, h) = (inst.inv.c, inst.inv.hansen as i64);
    rep.verdicts.push(verdict(
        &inst,
        "hansen",
        "hansen_chain",
        None,
        c <= h - 1,
        format!("c = {c} <= hansen - 1 = {}", h - 1),
        &[("c", c), ("hansen", h)],
        &[],
    ));
    for s in 1..=smax {
        let is = inst.power(&inst.i, s)?;
        let reg = inst.reg(&is, s)?;
        let bound = 2 * s as i64 + h - 1;
        rep.rows[s as usize - 1].reg_i = Some(reg);
        rep.verdicts.push(verdict(
            &inst,
            "hansen",
            "hansen",
            Some(s),
            reg <= bound,
            format!("reg I^{s} = {reg} <= 2s + hansen - 1 = {bound}"),
            &[("reg_I", reg), ("hansen", h)],
            &[("I^s", &is)],
        ));
    }
    Ok(rep)
}

/// `reg I(G)^s ≤ reg J^s = reg (J^pol)^s`, plus the constancy `reg J^s = 2s + c` as its own
/// verdict.
pub fn check_equal(id: &str, g: &Graph, smax: u32, engine: &Engine) -> Result<TheoremReport, HarnessError> {
    validate(smax)?;
    let inst = Instance::new(id, g, engine)?;
    inst.require_edges()?;
    let mut rep = inst.report(smax);
    let c = inst.inv.c;
    for s in 1..=smax {
        let is = inst.power(&inst.i, s)?;
        let js = inst.power(&inst.j, s)?;
        let jps = inst.power(&inst.jpol, s)?;
        let (ri, rj, rjp) = (inst.reg(&is, s)?, inst.reg(&js, s)?, inst.reg(&jps, s)?);
        let row = &mut rep.rows[s as usize - 1];
        row.reg_i = Some(ri);
        row.reg_j = Some(rj);
        row.reg_jpol = Some(rjp);
        let values = [("reg_I", ri), ("reg_J", rj), ("reg_Jpol", rjp), ("c", c)];
        let ideals = [("I^s", &is), ("J^s", &js), ("(J^pol)^s", &jps)];
        rep.verdicts.push(verdict(
            &inst,
            "equal",
            "equal",
            Some(s),
            ri <= rj && rj == rjp,
            format!("reg I^{s} = {ri} <= reg J^{s} = {rj} = reg (J^pol)^{s} = {rjp}"),
            &values,
            &ideals,
        ));
        let target = 2 * s as i64 + c;
        rep.verdicts.push(verdict(
            &inst,
            "equal",
            "equal_constancy",
            Some(s),
            rj == target,
            format!("reg J^{s} = {rj} = 2s + c = {target}"),
            &values,
            &ideals,
        ));
    }
    Ok(rep)
}

/// `reg I(G*)^s = 2s + ν(G*) − 1` and `ν(G*) = c + 1`; also that `G*` is very well-covered.
/// Edgeless graphs with at least one vertex are accepted.
pub fn check_whisker_js(id: &str, g: &Graph, smax: u32, engine: &Engine) -> Result<TheoremReport, HarnessError> {
    validate(smax)?;
    let inst = Instance::new(id, g, engine)?;
    let mut rep = inst.report(smax);
    let (c, nu) = (inst.inv.c, inst.inv.nu_gstar as i64);
    let whisker = graph::whisker(g)?;
    let vwc = graph::is_very_well_covered(&whisker);
    rep.verdicts.push(verdict(
        &inst,
        "whisker_js",
        "whisker_very_well_covered",
        None,
        vwc,
        format!("G* very well-covered: {vwc} (maximal stable sets all of size n = {})", g.n()),
        &[],
        &[],
    ));
    rep.verdicts.push(verdict(
        &inst,
        "whisker_js",
        "nu_whisker",
        None,
        nu == c + 1,
        format!("nu(G*) = {nu} = c + 1 = {} (dim of the stable complex of G* is {})", c + 1, inst.inv.c_gstar),
        &[("nu_Gstar", nu), ("c", c), ("c_Gstar", inst.inv.c_gstar)],
        &[],
    ));
    for s in 1..=smax {
        let iss = inst.power(&inst.istar, s)?;
        let reg = inst.reg(&iss, s)?;
        let target = 2 * s as i64 + nu - 1;
        rep.rows[s as usize - 1].reg_istar = Some(reg);
        rep.verdicts.push(verdict(
            &inst,
            "whisker_js",
            "whisker_js",
            Some(s),
            reg == target,
            format!("reg I(G*)^{s} = {reg} = 2s + nu(G*) - 1 = {target}"),
            &[("reg_Istar", reg), ("nu_Gstar", nu)],
            &[("I(G*)^s", &iss)],
        ));
    }
    Ok(rep)
}

/// `reg I(G)^s ≥ 2s + ν(G) − 1`.
pub fn check_bht_lower(id: &str, g: &Graph, smax: u32, engine: &Engine) -> Result<TheoremReport, HarnessError> {
    validate(smax)?;
    let inst = Instance::new(id, g, engine)?;
    inst.require_edges()?;
    let mut rep = inst.report(smax);
    let nu = inst.inv.nu_g as i64;
    for s in 1..=smax {
        let is = inst.power(&inst.i, s)?;
        let reg = inst.reg(&is, s)?;
        let bound = 2 * s as i64 + nu - 1;
        rep.rows[s as usize - 1].reg_i = Some(reg);
        rep.verdicts.push(verdict(
            &inst,
            "bht_lower",
            "bht_lower",
            Some(s),
            reg >= bound,
            format!("reg I^{s} = {reg} >= 2s + nu(G) - 1 = {bound}"),
            &[("reg_I", reg), ("nu_G", nu)],
            &[("I^s", &is)],
        ));
    }
    Ok(rep)
}

/// Outcome of the socle-witness construction at one power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleWitness {
    pub s: u32,
    /// The maximum stable set `F` used for `u`.
    pub facet: Vec<usize>,
    /// The vertex playing the role of `x_1`: the least vertex of `F`.
    pub pivot: usize,
    pub w: Multidegree,
    pub degree: u64,
    /// Variables `x_k` (1-based) with `x_k · w ∉ J^s`; empty on success.
    pub escaping_variables: Vec<usize>,
    pub w_in_js: bool,
}

impl SocleWitness {
    pub fn passed(&self) -> bool {
        self.escaping_variables.is_empty() && !self.w_in_js
    }
}

/// `w = u · x_v^{2(s−1)}` for `u` the product over the lexicographically least maximum
/// stable set and `v` its least vertex; `w` must lie outside `J^s` while every `x_k w` lies in it.
pub fn witness_socle(g: &Graph, s: u32) -> Result<SocleWitness, HarnessError> {
    if s == 0 {
        return Err(HarnessError::BadSmax);
    }
    if g.n() == 0 {
        return Err(HarnessError::Graph(crate::error::GraphError::EmptyWhisker));
    }
    let n = g.n();
    let facet = graph::alpha(g).witness;
    let pivot = facet[0];
    let mut w = Multidegree::zero(n);
    for &v in &facet {
        w.0[v - 1] = 1;
    }
    w.0[pivot - 1] += 2 * (s - 1);
    let js = ideal::power(&ideal::add_squares(&ideal::edge_ideal(g)), s)?;
    let escaping = (0..n)
        .filter(|&k| {
            let mut m = w.clone();
            m.0[k] += 1;
            !ideal::contains(&js, &m).expect("same ring")
        })
        .map(|k| k + 1)
        .collect();
    let w_in_js = ideal::contains(&js, &w)?;
    Ok(SocleWitness { s, facet, pivot, degree: w.degree(), w, escaping_variables: escaping, w_in_js })
}

/// Socle witness for `s = 1..=smax`, plus the facts it rests on at `s = 1`:
/// the standard monomials of `J` are the stable-set monomials, the top socle degree is
/// `c + 1`, and `reg J = c + 2`.
pub fn check_witness_socle(id: &str, g: &Graph, smax: u32, engine: &Engine) -> Result<TheoremReport, HarnessError> {
    validate(smax)?;
    let inst = Instance::new(id, g, engine)?;
    inst.require_edges()?;
    let mut rep = inst.report(smax);
    let c = inst.inv.c;

    let standard = ideal::standard_monomials(&inst.j)?;
    let stable_sets: Vec<Multidegree> = (0u64..1 << g.n())
        .filter_map(|mask| {
            let set: Vec<usize> = (1..=g.n()).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            g.is_stable(&set).then(|| {
                let mut m = Multidegree::zero(g.n());
                set.iter().for_each(|v| m.0[v - 1] = 1);
                m
            })
        })
        .collect();
    let mut sorted = stable_sets.clone();
    sorted.sort();
    let basis_ok = sorted == standard;
    rep.verdicts.push(verdict(
        &inst,
        "witness_socle",
        "standard_basis",
        None,
        basis_ok,
        format!("{} standard monomials of J, {} stable sets of G", standard.len(), stable_sets.len()),
        &[],
        &[("J", &inst.j)],
    ));

    let top = *ideal::socle_degrees(&inst.j)?.last().expect("Artinian quotients have a socle") as i64;
    let reg_j = inst.reg(&inst.j, 1)?;
    rep.rows[0].reg_j = Some(reg_j);
    rep.verdicts.push(verdict(
        &inst,
        "witness_socle",
        "socle_degree",
        None,
        top == c + 1 && reg_j == top + 1 && reg_j == c + 2,
        format!("max socle degree = {top} = c + 1 = {}; reg J = {reg_j} = c + 2 = {}", c + 1, c + 2),
        &[("socle_top", top), ("reg_J", reg_j), ("c", c)],
        &[("J", &inst.j)],
    ));

    for s in 1..=smax {
        let w = witness_socle(g, s)?;
        let js = inst.power(&inst.j, s)?;
        let expected_degree = (c + 1 + 2 * (s as i64 - 1)) as u64;
        let ok = w.passed() && w.degree == expected_degree;
        rep.verdicts.push(verdict(
            &inst,
            "witness_socle",
            "witness_socle",
            Some(s),
            ok,
            format!(
                "w = {} of degree {} (c + 1 + 2(s - 1) = {expected_degree}); m*w in J^{s}: {}; w in J^{s}: {}",
                w.w.render(inst.j.ring()),
                w.degree,
                w.escaping_variables.is_empty(),
                w.w_in_js
            ),
            &[("deg_w", w.degree as i64), ("c", c)],
            &[("J^s", &js)],
        ));
    }
    Ok(rep)
}

/// `reg J^s − 2s` is non-increasing over `s = 1..=smax`.
pub fn check_eh_monotone(id: &str, g: &Graph, smax: u32, engine: &Engine) -> Result<TheoremReport, HarnessError> {
    validate(smax)?;
    let inst = Instance::new(id, g, engine)?;
    inst.require_edges()?;
    let mut rep = inst.report(smax);
    let mut offsets = Vec::new();
    for s in 1..=smax {
        let js = inst.power(&inst.j, s)?;
        let reg = inst.reg(&js, s)?;
        rep.rows[s as usize - 1].reg_j = Some(reg);
        offsets.push(reg - 2 * s as i64);
    }
    let monotone = offsets.windows(2).all(|w| w[0] >= w[1]);
    let values: Vec<(String, i64)> = offsets.iter().enumerate().map(|(k, b)| (format!("b_{}", k + 1), *b)).collect();
    let values: Vec<(&str, i64)> = values.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    rep.verdicts.push(verdict(
        &inst,
        "eh_monotone",
        "eh_monotone",
        None,
        monotone,
        format!("reg J^s - 2s over s = 1..{smax}: {offsets:?}"),
        &values,
        &[("J", &inst.j)],
    ));
    Ok(rep)
}

/// `(I(G*)^s)^{≤(∞…∞,0…0)} = I(G)^s` and `reg I(G)^s ≤ reg I(G*)^s`.
pub fn check_restriction(id: &str, g: &Graph, smax: u32, engine: &Engine) -> Result<TheoremReport, HarnessError> {
    validate(smax)?;
    let inst = Instance::new(id, g, engine)?;
    inst.require_edges()?;
    let mut rep = inst.report(smax);
    let n = g.n();
    let caps = RestrictionVector::prefix(n, n);
    for s in 1..=smax {
        let is = inst.power(&inst.i, s)?;
        let iss = inst.power(&inst.istar, s)?;
        let restricted = ideal::restrict(&iss, &caps)?;
        let same = restricted == is;
        let (ri, rs) = (inst.reg(&is, s)?, inst.reg(&iss, s)?);
        let row = &mut rep.rows[s as usize - 1];
        row.reg_i = Some(ri);
        row.reg_istar = Some(rs);
        rep.verdicts.push(verdict(
            &inst,
            "restriction",
            "restriction_identity",
            Some(s),
            same,
            format!("restriction of I(G*)^{s} has {} generators, I^{s} has {}", restricted.gens().len(), is.gens().len()),
            &[],
            &[("restricted", &restricted), ("I^s", &is)],
        ));
        rep.verdicts.push(verdict(
            &inst,
            "restriction",
            "restriction_reg",
            Some(s),
            ri <= rs,
            format!("reg I^{s} = {ri} <= reg I(G*)^{s} = {rs}"),
            &[("reg_I", ri), ("reg_Istar", rs)],
            &[("I^s", &is), ("I(G*)^s", &iss)],
        ));
    }
    Ok(rep)
}

pub fn run_check(check: &str, id: &str, g: &Graph, smax: u32, engine: &Engine) -> Result<TheoremReport, HarnessError> {
    match check {
        "main" => check_main(id, g, smax, engine),
        "hansen" => check_hansen(id, g, smax, engine),
        "equal" => check_equal(id, g, smax, engine),
        "whisker_js" => check_whisker_js(id, g, smax, engine),
        "bht_lower" => check_bht_lower(id, g, smax, engine),
        "restriction" => check_restriction(id, g, smax, engine),
        "eh_monotone" => check_eh_monotone(id, g, smax, engine),
        "witness_socle" => check_witness_socle(id, g, smax, engine),
        other => Err(HarnessError::UnknownCheck(other.to_string())),
    }
}

/// Runs `checks` in order on one graph and merges the reports.
pub fn run_checks(checks: &[&str], id: &str, g: &Graph, smax: u32, engine: &Engine) -> Result<TheoremReport, HarnessError> {
    let mut merged: Option<TheoremReport> = None;
    for c in checks {
        let r = run_check(c, id, g, smax, engine)?;
        match merged.as_mut() {
            Some(m) => m.merge(r),
            None => merged = Some(r),
        }
    }
    match merged {
        Some(m) => Ok(m),
        None => {
            validate(smax)?;
            Ok(Instance::new(id, g, engine)?.report(smax))
        }
    }
}

/// Runs `checks` over every corpus entry. Edgeless graphs are skipped; per-instance errors
/// are recorded and do not stop the sweep.
pub fn run_corpus(entries: &[CorpusEntry], checks: &[&str], smax: Option<u32>, engine: &Engine) -> CorpusReport {
    let mut out = CorpusReport { checks: checks.iter().map(|c| c.to_string()).collect(), ..CorpusReport::default() };
    for e in entries {
        if e.graph.edge_count() == 0 {
            out.skipped.push(InstanceError { graph_id: e.id.clone(), message: "edgeless graph".into(), resource: false });
            continue;
        }
        match run_checks(checks, &e.id, &e.graph, smax.unwrap_or(e.smax), engine) {
            Ok(r) => out.reports.push(r),
            Err(err) => {
                let resource = matches!(&err, HarnessError::Engine { source, .. } if source.is_resource());
                out.errors.push(InstanceError { graph_id: e.id.clone(), message: err.to_string(), resource });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, Family};

    fn g(f: Family) -> Graph {
        family(&f).unwrap()
    }

    fn regs_i(r: &TheoremReport) -> Vec<i64> {
        r.rows.iter().map(|x| x.reg_i.unwrap()).collect()
    }

    #[test]
    fn main_examples() {
        let e = Engine::default();
        let r = check_main("C5", &g(Family::Cycle(5)), 1, &e).unwrap();
        assert!(r.passed());
        assert_eq!(regs_i(&r), vec![3]);
        let r = check_main("K2", &g(Family::Path(2)), 3, &e).unwrap();
        assert!(r.passed());
        assert_eq!(regs_i(&r), vec![2, 4, 6]);
        let r = check_main("P5", &g(Family::Path(5)), 1, &e).unwrap();
        assert_eq!(regs_i(&r), vec![3]);
        assert!(r.verdicts[0].detail.contains("slack 1"));
    }

    #[test]
    fn hansen_examples() {
        let e = Engine::default();
        for (f, reg, bound) in [(Family::Cycle(5), 3, 4), (Family::Path(2), 2, 2), (Family::Path(3), 2, 3)] {
            let r = check_hansen("x", &g(f), 1, &e).unwrap();
            assert!(r.passed());
            assert_eq!(regs_i(&r), vec![reg]);
            assert!(r.verdicts[1].detail.ends_with(&format!("= {bound}")));
        }
    }

    #[test]
    fn equal_examples() {
        let e = Engine::default();
        let r = check_equal("K2", &g(Family::Path(2)), 3, &e).unwrap();
        assert!(r.passed());
        for row in &r.rows {
            let t = 2 * row.s as i64;
            assert_eq!((row.reg_i, row.reg_j, row.reg_jpol), (Some(t), Some(t), Some(t)));
        }
        let r = check_equal("P3", &g(Family::Path(3)), 1, &e).unwrap();
        assert_eq!((r.rows[0].reg_j, r.rows[0].reg_jpol), (Some(3), Some(3)));
        let r = check_equal("C5", &g(Family::Cycle(5)), 2, &e).unwrap();
        assert!(r.passed());
        assert_eq!(r.rows[1].reg_j, r.rows[1].reg_jpol);
    }

    #[test]
    fn whisker_js_examples() {
        let e = Engine::default();
        let r = check_whisker_js("K2", &g(Family::Path(2)), 2, &e).unwrap();
        assert!(r.passed());
        assert_eq!(r.rows.iter().map(|x| x.reg_istar.unwrap()).collect::<Vec<_>>(), vec![2, 4]);
        let r = check_whisker_js("P3", &g(Family::Path(3)), 1, &e).unwrap();
        assert_eq!((r.invariants.nu_gstar, r.rows[0].reg_istar), (2, Some(3)));
        let r = check_whisker_js("K1", &Graph::empty(1), 3, &e).unwrap();
        assert!(r.passed());
        assert_eq!((r.invariants.nu_gstar, r.invariants.c), (1, 0));
        assert_eq!(r.rows.iter().map(|x| x.reg_istar.unwrap()).collect::<Vec<_>>(), vec![2, 4, 6]);
    }

    #[test]
    fn bht_examples() {
        let e = Engine::default();
        assert!(check_bht_lower("K2", &g(Family::Path(2)), 3, &e).unwrap().passed());
        let r = check_bht_lower("C5", &g(Family::Cycle(5)), 1, &e).unwrap();
        assert!(r.verdicts[0].detail.contains(">= 2s + nu(G) - 1 = 2"));
        let r = check_bht_lower("P5", &g(Family::Path(5)), 1, &e).unwrap();
        assert!(r.verdicts[0].detail.contains("= 3 >= 2s + nu(G) - 1 = 3"));
    }

    #[test]
    fn witness_examples() {
        let w = witness_socle(&g(Family::Path(2)), 2).unwrap();
        assert_eq!(w.w, Multidegree(vec![3, 0]));
        assert!(w.passed());
        let w = witness_socle(&g(Family::Path(3)), 1).unwrap();
        assert_eq!((w.facet.clone(), w.w.clone()), (vec![1, 3], Multidegree(vec![1, 0, 1])));
        assert!(w.passed());
        let e = Engine::default();
        assert!(check_witness_socle("P3", &g(Family::Path(3)), 3, &e).unwrap().passed());
    }

    #[test]
    fn eh_examples() {
        let e = Engine::default();
        let offsets = |r: &TheoremReport| r.rows.iter().map(|x| x.reg_j.unwrap() - 2 * x.s as i64).collect::<Vec<_>>();
        let r = check_eh_monotone("K2", &g(Family::Path(2)), 3, &e).unwrap();
        assert_eq!(offsets(&r), vec![0, 0, 0]);
        let r = check_eh_monotone("P3", &g(Family::Path(3)), 2, &e).unwrap();
        assert_eq!(offsets(&r), vec![1, 1]);
        let r = check_eh_monotone("C5", &g(Family::Cycle(5)), 2, &e).unwrap();
        assert_eq!(offsets(&r), vec![1, 1]);
        assert!(r.passed());
    }

    #[test]
    fn restriction_examples() {
        let e = Engine::default();
        assert!(check_restriction("K2", &g(Family::Path(2)), 2, &e).unwrap().passed());
        assert!(check_restriction("C5", &g(Family::Cycle(5)), 1, &e).unwrap().passed());
    }

    #[test]
    fn errors() {
        let e = Engine::default();
        assert!(matches!(check_main("E", &Graph::empty(3), 1, &e), Err(HarnessError::NoEdges)));
        assert!(matches!(check_main("K2", &g(Family::Path(2)), 0, &e), Err(HarnessError::BadSmax)));
        assert!(matches!(run_check("nope", "K2", &g(Family::Path(2)), 1, &e), Err(HarnessError::UnknownCheck(_))));
    }

    #[test]
    fn resource_errors_carry_the_instance() {
        let e = Engine::new(crate::betti::EngineConfig { lattice_cap: 2, ..Default::default() });
        let err = check_main("C5", &g(Family::Cycle(5)), 1, &e).unwrap_err();
        assert!(matches!(err, HarnessError::Engine { ref graph_id, s: 1, .. } if graph_id == "C5"));
    }

    #[test]
    fn failures_carry_replay_data() {
        let e = Engine::default();
        let c5 = g(Family::Cycle(5));
        let inst = Instance::new("C5", &c5, &e).unwrap();
        let v = verdict(&inst, "main", "main", Some(1), false, "forced".into(), &[("reg_I", 3)], &[("I^s", &inst.i)]);
        let f = v.failure.unwrap();
        assert_eq!(f.values["reg_I"], 3);
        assert_eq!(f.ideals["I^s"], inst.i);
        assert_eq!(f.betti["I^s"].regularity(), Some(3));
    }

    #[test]
    fn run_all_checks_and_csv() {
        let e = Engine::default();
        let entries = vec![CorpusEntry { id: "path:3".into(), graph: g(Family::Path(3)), smax: 2 }];
        let rep = run_corpus(&entries, &ALL_CHECKS, None, &e);
        assert!(rep.all_passed(), "{:#?}", rep.reports[0].failures().collect::<Vec<_>>());
        let csv = rep.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("graph_id,n,e,s,c,nu_G,nu_Gstar,reg_I,reg_J,reg_Jpol,reg_Istar,hansen,kwok_floor,main,"));
        assert_eq!(lines[1], "path:3,3,2,1,1,1,2,2,3,3,3,2,2,pass,pass,pass,pass,pass,pass,pass,pass");
        assert_eq!(run_corpus(&[], &ALL_CHECKS, None, &e).reports.len(), 0);
    }
}
