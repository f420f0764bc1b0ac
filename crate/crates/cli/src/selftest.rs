//! Invariant grid: an exhaustive sweep over small pair lists plus seeded
//! random ones, each checked against the brute-force oracle.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use unibranch::oracle::{
    candidate_set, coefficient_lemma_check, compare_reports, oracle_jumping_numbers,
    r_set_bruteforce, term_ideal_initial_check, Verification,
};
use unibranch::{
    canonicalize_generators, characteristic_from_semigroup, characteristic_to_pairs, from_pairs,
    jumping_numbers_from_semigroup, jumping_numbers_from_tree, pairs_to_characteristic, r_m_set,
    semigroup_from_characteristic, JumpingReportI64, PairListI64, RationalI64, Segment,
};

/// Deliberate corruption used to prove the failure path is live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Drop the largest element of every formula R-set.
    RSet,
}

#[derive(Debug, Clone)]
pub struct SelftestConfig {
    pub max_g: usize,
    pub max_p: i64,
    pub max_q: i64,
    pub random_max_p: i64,
    pub random_max_q: i64,
    pub seeds: u64,
    pub rset_max_q: i64,
    pub rset_max_m: i64,
    pub fault: Option<Fault>,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            max_g: 3,
            max_p: 5,
            max_q: 13,
            random_max_p: 7,
            random_max_q: 17,
            seeds: 100,
            rset_max_q: 50,
            rset_max_m: 4,
            fault: None,
        }
    }
}

/// Largest genus swept exhaustively; higher genera come from random seeds.
pub const GRID_MAX_G: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct PropertyRow {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first: Option<Counterexample>,
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub rows: Vec<PropertyRow>,
    pub grid_cases: usize,
    pub random_cases: usize,
    pub elapsed: Duration,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.failures == 0)
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Counterexample)> {
        self.rows
            .iter()
            .find_map(|r| r.first.as_ref().map(|c| (r.name, c)))
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{:<28} {:>7} {:>9}", "property", "cases", "failures").unwrap();
        for r in &self.rows {
            writeln!(out, "{:<28} {:>7} {:>9}", r.name, r.cases, r.failures).unwrap();
        }
        writeln!(
            out,
            "pair lists: {} exhaustive, {} random; {:.2}s",
            self.grid_cases,
            self.random_cases,
            self.elapsed.as_secs_f64()
        )
        .unwrap();
        out
    }
}

fn coprime_pairs(max_p: i64, max_q: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in 2..=max_p {
        for q in p + 1..=max_q {
            if p.gcd(&q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

/// Every pair list of length `1..=max_g` with `p_j ≤ max_p`, `q_j ≤ max_q`.
pub fn grid_pair_lists(max_g: usize, max_p: i64, max_q: i64) -> Vec<Vec<(i64, i64)>> {
    let base = coprime_pairs(max_p, max_q);
    let mut out = Vec::new();
    let mut layer: Vec<Vec<(i64, i64)>> = vec![Vec::new()];
    for _ in 0..max_g {
        layer = layer
            .iter()
            .flat_map(|prefix| {
                base.iter().map(move |&pq| {
                    let mut next = prefix.clone();
                    next.push(pq);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn random_pair_list(
    rng: &mut impl Rng,
    max_g: usize,
    max_p: i64,
    max_q: i64,
) -> Vec<(i64, i64)> {
    let base = coprime_pairs(max_p.min(max_q - 1), max_q);
    let g = rng.gen_range(1..=max_g);
    (0..g)
        .map(|_| *base.choose(rng).expect("nonempty pair pool"))
        .collect()
}

/// Seed `i` of the random sweep.
pub fn seeded_pair_list(seed: u64, max_g: usize, max_p: i64, max_q: i64) -> Vec<(i64, i64)> {
    random_pair_list(&mut ChaCha8Rng::seed_from_u64(seed), max_g, max_p, max_q)
}

/// A pair list of genus `1..=max_g` whose characteristic `(m; β_1, …, β_g)`
/// has every entry at most `bound`, by rejection. The genus is drawn first
/// so each genus is represented; `bound` must admit genus `max_g`
/// (genus 4 needs at least 31).
pub fn bounded_pair_list(rng: &mut impl Rng, max_g: usize, bound: i64) -> Vec<(i64, i64)> {
    let g = rng.gen_range(1..=max_g);
    let max_p = [0, 12, 8, 4, 3][g.min(4)].max(2);
    loop {
        let pairs: Vec<(i64, i64)> = (0..g)
            .map(|_| loop {
                let p = rng.gen_range(2..=max_p);
                let q = rng.gen_range(p + 1..=p + 16);
                if p.gcd(&q) == 1 {
                    break (p, q);
                }
            })
            .collect();
        let pl = PairListI64::new(pairs.clone()).expect("coprime pairs");
        let c = pairs_to_characteristic(&pl).expect("nonempty list");
        if *c.multiplicity() <= bound && c.exponents().iter().all(|&x| x <= bound) {
            return pairs;
        }
    }
}

fn corrupt(report: &JumpingReportI64) -> JumpingReportI64 {
    let segments = report
        .segments()
        .iter()
        .map(|s| {
            let mut numerators = s.numerators.clone();
            numerators.pop();
            Segment {
                vertex: s.vertex,
                denominator: s.denominator,
                numerators,
            }
        })
        .collect();
    JumpingReportI64::from_segments(
        segments,
        report.qbar().to_vec(),
        report.gcd_chain().to_vec(),
    )
}

fn verdict(v: Verification) -> Result<(), String> {
    match v.first_failure() {
        None => Ok(()),
        Some(c) => Err(format!("{}: {}", c.name, c.detail)),
    }
}

fn agreement(pl: &PairListI64, fault: Option<Fault>) -> Result<(), String> {
    let mut by_tree = jumping_numbers_from_tree(pl);
    if fault == Some(Fault::RSet) {
        by_tree = corrupt(&by_tree);
    }
    let c = pairs_to_characteristic(pl).ok_or("smooth germ in grid")?;
    let by_semigroup = jumping_numbers_from_semigroup(&semigroup_from_characteristic(&c));
    let tree = from_pairs(pl.pairs()).map_err(|e| e.to_string())?;
    let by_oracle = oracle_jumping_numbers(&tree);
    let mut v = Verification::new();
    compare_reports(
        &mut v,
        ("tree formula", "semigroup formula"),
        &by_tree,
        &by_semigroup,
    );
    compare_reports(&mut v, ("tree formula", "oracle"), &by_tree, &by_oracle);
    verdict(v)
}

fn candidates(pl: &PairListI64) -> Result<(), String> {
    let tree = from_pairs(pl.pairs()).map_err(|e| e.to_string())?;
    let pool = candidate_set(&tree);
    match oracle_jumping_numbers(&tree)
        .values()
        .into_iter()
        .find(|x| !pool.contains(x))
    {
        None => Ok(()),
        Some(x) => Err(format!("{x} is not of the form (k_α + n)/e_α")),
    }
}

fn howald(pl: &PairListI64) -> Result<(), String> {
    let [(p, q)] = pl.pairs() else {
        return Ok(());
    };
    let mut expected = BTreeSet::new();
    for a in 1..*p {
        for b in 1..*q {
            let x = RationalI64::new(a, *p) + RationalI64::new(b, *q);
            if x < RationalI64::from_integer(1) {
                expected.insert(x);
            }
        }
    }
    let got: BTreeSet<_> = jumping_numbers_from_tree(pl).values().into_iter().collect();
    if got == expected {
        Ok(())
    } else {
        let first = got.symmetric_difference(&expected).next().cloned();
        Err(format!(
            "sets differ, first at {}",
            first.map_or("?".into(), |x| x.to_string())
        ))
    }
}

fn round_trip(pl: &PairListI64, rng: &mut impl Rng) -> Result<(), String> {
    let c = pairs_to_characteristic(pl).ok_or("smooth germ in grid")?;
    let s = semigroup_from_characteristic(&c);
    let c2 = characteristic_from_semigroup(&s);
    if c2 != c {
        return Err(format!("characteristic {c} came back as {c2}"));
    }
    let back = characteristic_to_pairs(&c2);
    if back != *pl {
        return Err(format!("pairs came back as {back}"));
    }
    let mut elements = s.generators().to_vec();
    let extra: Vec<i64> = (0..3)
        .map(|_| {
            let i = rng.gen_range(0..s.generators().len());
            let j = rng.gen_range(0..s.generators().len());
            s.generators()[i] + s.generators()[j]
        })
        .collect();
    elements.extend(extra);
    elements.shuffle(rng);
    let canon = canonicalize_generators(&elements).map_err(|e| e.to_string())?;
    if canon != s {
        return Err(format!(
            "canonicalize({elements:?}) gave {canon}, expected {s}"
        ));
    }
    Ok(())
}

type CaseCheck = fn(&PairListI64, Option<Fault>, u64) -> Result<(), String>;

const CASE_PROPERTIES: [(&str, CaseCheck); 6] = [
    ("formula/oracle agreement", |pl, f, _| agreement(pl, f)),
    ("candidate soundness", |pl, _, _| candidates(pl)),
    ("coefficient lemmas", |pl, _, _| {
        verdict(coefficient_lemma_check(pl))
    }),
    ("term-ideal head", |pl, _, _| {
        verdict(term_ideal_initial_check(pl))
    }),
    ("encoding round trips", |pl, _, seed| {
        round_trip(pl, &mut ChaCha8Rng::seed_from_u64(seed))
    }),
    ("howald set (g = 1)", |pl, _, _| howald(pl)),
];

fn rset_cases(max_q: i64, max_m: i64, fault: Option<Fault>) -> Vec<Result<(), Counterexample>> {
    let pairs = coprime_pairs(max_q - 1, max_q);
    pairs
        .par_iter()
        .flat_map_iter(|&(p, q)| {
            (1..=max_m).map(move |m| {
                let mut formula = r_m_set(p, q, m).expect("valid pair");
                if fault == Some(Fault::RSet) {
                    formula.pop();
                }
                let brute = r_set_bruteforce(p, q, m).expect("valid pair");
                if formula == brute {
                    Ok(())
                } else {
                    Err(Counterexample {
                        input: format!("r_m_set p={p} q={q} m={m}"),
                        detail: format!("{} elements vs {} by scan", formula.len(), brute.len()),
                    })
                }
            })
        })
        .collect()
}

fn tally(name: &'static str, results: Vec<Result<(), Counterexample>>) -> PropertyRow {
    let failures = results.iter().filter(|r| r.is_err()).count();
    PropertyRow {
        name,
        cases: results.len(),
        failures,
        first: results.into_iter().find_map(Result::err),
    }
}

pub fn run_selftest(cfg: &SelftestConfig) -> SelftestReport {
    let start = Instant::now();
    let grid = grid_pair_lists(cfg.max_g.min(GRID_MAX_G), cfg.max_p, cfg.max_q);
    let random: Vec<_> = (0..cfg.seeds)
        .map(|seed| seeded_pair_list(seed, cfg.max_g, cfg.random_max_p, cfg.random_max_q))
        .collect();
    let cases: Vec<(u64, PairListI64)> = grid
        .iter()
        .chain(&random)
        .enumerate()
        .map(|(i, pairs)| {
            (
                i as u64,
                PairListI64::new(pairs.clone()).expect("grid pairs are valid"),
            )
        })
        .collect();

    let mut rows = Vec::new();
    for (name, check) in CASE_PROPERTIES {
        let results = cases
            .par_iter()
            .map(|(seed, pl)| {
                check(pl, cfg.fault, *seed).map_err(|detail| Counterexample {
                    input: format!("--pairs \"{pl}\""),
                    detail,
                })
            })
            .collect();
        rows.push(tally(name, results));
    }
    rows.push(tally(
        "r-set dual definitions",
        rset_cases(cfg.rset_max_q, cfg.rset_max_m, cfg.fault),
    ));

    SelftestReport {
        rows,
        grid_cases: grid.len(),
        random_cases: random.len(),
        elapsed: start.elapsed(),
    }
}
