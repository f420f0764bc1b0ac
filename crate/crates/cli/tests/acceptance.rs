//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//!
//! Every comparison is exact. The only tolerances are wall-clock limits,
//! measured on the test profile (opt-level 2).

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::result::Result;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use unibranch::oracle::{
    coefficient_lemma_check, contribution_test, oracle_jumping_numbers, r_set_bruteforce,
    term_ideal_initial_check, verify_formula,
};
use unibranch::*;
use unibranch_cli::selftest::{bounded_pair_list, grid_pair_lists, seeded_pair_list};

const LIMIT_EXAMPLE: Duration = Duration::from_secs(1);
const LIMIT_HOWALD: Duration = Duration::from_secs(10);
const LIMIT_ORACLE_GRID: Duration = Duration::from_secs(60);
const LIMIT_RSET: Duration = Duration::from_secs(30);
/// Criteria 8-10 state no limit; this only bounds a hung run.
const LIMIT_UNSTATED: Duration = Duration::from_secs(120);

const GRID_G: usize = 2;
const GRID_P: i64 = 5;
const GRID_Q: i64 = 13;
const RANDOM_SEEDS: u64 = 100;
const RANDOM_G: usize = 3;
const RANDOM_P: i64 = 7;
const RANDOM_Q: i64 = 17;
const ROUND_TRIPS: usize = 1000;
const ROUND_TRIP_G: usize = 4;
const ROUND_TRIP_BOUND: i64 = 200;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn r(n: i64, d: i64) -> RationalI64 {
    RationalI64::new(n, d)
}

fn pl(pairs: &[(i64, i64)]) -> PairListI64 {
    PairListI64::new(pairs.to_vec()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The exhaustive grid plus the seeded random lists of criterion 5.
fn criterion5_grid() -> Vec<PairListI64> {
    grid_pair_lists(GRID_G, GRID_P, GRID_Q)
        .into_iter()
        .chain((0..RANDOM_SEEDS).map(|s| seeded_pair_list(s, RANDOM_G, RANDOM_P, RANDOM_Q)))
        .map(|pairs| pl(&pairs))
        .collect()
}

fn c1_two_pair_example() -> Outcome {
    let list = pl(&[(2, 3), (5, 11)]);
    let report = jumping_numbers_from_tree(&list);
    let hit = report.get(&r(11, 30)).ok_or("11/30 missing")?;
    let expected: BTreeSet<usize> = [3, 9].into();
    ensure(hit.contributors == expected, || {
        format!("contributors {:?}", hit.contributors)
    })?;
    let tree = from_pairs(list.pairs()).unwrap();
    for rho in [3, 9] {
        ensure(
            contribution_test(&tree, rho, &r(11, 30)).map_err(|e| e.to_string())?,
            || format!("E_{rho} does not contribute 11/30"),
        )?;
    }
    Ok("11/30 contributed by E_3 and E_9".into())
}

fn c2_as_usual() -> Outcome {
    let out = unibranch_cli::run(["unibranch", "convert", "--char", "4;6,7", "--to", "pairs"]);
    ensure(out.code == 0 && out.stdout == "2,3;2,3\n", || {
        format!("convert gave {:?}", out)
    })?;
    let c = PuiseuxCharacteristicI64::new(4, vec![6, 7]).unwrap();
    let tree = from_pairs(characteristic_to_pairs(&c).pairs()).unwrap();
    let w = branch_divisor(&tree).w().to_vec();
    ensure(tree.vertex_count() == 5, || {
        format!("{} vertices", tree.vertex_count())
    })?;
    ensure(w == [4, 2, 2, 1, 1], || format!("weights {w:?}"))?;
    Ok("2,3;2,3 with weights 4 2 2 1 1".into())
}

fn c3_t57() -> Outcome {
    use EdgeKind::*;
    let tree = build_tpq(5i64, 7).unwrap();
    let w = branch_divisor(&tree).w().to_vec();
    ensure(w == [5, 2, 2, 1, 1], || format!("weights {w:?}"))?;
    ensure(
        tree.edges() == [Slant, Horizontal, Horizontal, Vertical],
        || format!("edges {:?}", tree.edges()),
    )?;
    Ok("weights 5 2 2 1 1, edges slant h h v".into())
}

fn c4_howald() -> Outcome {
    let mut count = 0;
    for p in 2..=30i64 {
        for q in p + 1..=30 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let mut expected = BTreeSet::new();
            for a in 1..p {
                for b in 1..q {
                    let x = r(a, p) + r(b, q);
                    if x < r(1, 1) {
                        expected.insert(x);
                    }
                }
            }
            let report = jumping_numbers_from_tree(&pl(&[(p, q)]));
            let got: BTreeSet<_> = report.values().into_iter().collect();
            ensure(got == expected, || {
                format!("({p},{q}) differs from the Howald set")
            })?;
            ensure(report.lct() == Some(r(1, p) + r(1, q)), || {
                format!("lct of ({p},{q})")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} coprime pairs"))
}

fn c5_formula_oracle() -> Outcome {
    let grid = criterion5_grid();
    let failure = grid.par_iter().find_map_first(|list| {
        let v = verify_formula(list);
        v.first_failure()
            .map(|c| format!("{list}: {}: {}", c.name, c.detail))
    });
    match failure {
        Some(f) => Err(f),
        None => Ok(format!(
            "{} pair lists, three routes with contributors",
            grid.len()
        )),
    }
}

fn c6_rset() -> Outcome {
    let cases: Vec<(i64, i64, i64)> = (2..50i64)
        .flat_map(|p| {
            (p + 1..=50)
                .filter(move |q| p.gcd(q) == 1)
                .map(move |q| (p, q))
        })
        .flat_map(|(p, q)| (1..=4).map(move |m| (p, q, m)))
        .collect();
    let failure = cases.par_iter().find_map_first(|&(p, q, m)| {
        (r_m_set(p, q, m).unwrap() != r_set_bruteforce(p, q, m).unwrap())
            .then(|| format!("p={p} q={q} m={m}"))
    });
    match failure {
        Some(f) => Err(f),
        None => Ok(format!("{} (p, q, m) triples", cases.len())),
    }
}

fn c7_derived_case() -> Outcome {
    let expected = vec![
        r(5, 12),
        r(15, 26),
        r(17, 26),
        r(19, 26),
        r(21, 26),
        r(23, 26),
        r(11, 12),
        r(25, 26),
    ];
    let s = canonicalize_generators(&[4i64, 6, 13]).map_err(|e| e.to_string())?;
    let c = characteristic_from_semigroup(&s);
    let tree = from_pairs(characteristic_to_pairs(&c).pairs()).unwrap();
    let oracle = oracle_jumping_numbers(&tree).values();
    ensure(oracle == expected, || format!("oracle gave {oracle:?}"))?;
    let formula = jumping_numbers_from_semigroup(&s).values();
    ensure(formula == oracle, || format!("formula gave {formula:?}"))?;
    Ok("oracle then formula: 8 values".into())
}

fn c8_lemmas() -> Outcome {
    let tree = build_tpq(5i64, 7).unwrap();
    let e = branch_divisor(&tree).e().to_vec();
    ensure(e == [5, 7, 14, 20, 35], || format!("e(B_5) = {e:?}"))?;
    let k = canonical_coeffs(&tree);
    ensure(k == [1, 2, 4, 6, 11], || format!("k = {k:?}"))?;
    let grid = criterion5_grid();
    let failure = grid.par_iter().find_map_first(|list| {
        coefficient_lemma_check(list)
            .first_failure()
            .map(|c| format!("{list}: {}: {}", c.name, c.detail))
    });
    match failure {
        Some(f) => Err(f),
        None => Ok(format!("spot values and {} pair lists", grid.len())),
    }
}

fn c9_round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut genera = BTreeMap::new();
    for _ in 0..ROUND_TRIPS {
        let list = pl(&bounded_pair_list(&mut rng, ROUND_TRIP_G, ROUND_TRIP_BOUND));
        *genera.entry(list.genus()).or_insert(0) += 1;
        let c = pairs_to_characteristic(&list).unwrap();
        let s = semigroup_from_characteristic(&c);
        ensure(characteristic_from_semigroup(&s) == c, || {
            format!("semigroup {s} lost {c}")
        })?;
        ensure(characteristic_to_pairs(&c) == list, || {
            format!("characteristic {c} lost {list}")
        })?;

        let mut elements = s.generators().to_vec();
        for _ in 0..rng.gen_range(0..4) {
            let a = *s.generators().choose(&mut rng).unwrap();
            let b = *s.generators().choose(&mut rng).unwrap();
            elements.push(a + b);
        }
        elements.shuffle(&mut rng);
        let canon = canonicalize_generators(&elements).map_err(|e| format!("{elements:?}: {e}"))?;
        ensure(canon == s, || {
            format!("{elements:?} canonicalized to {canon}")
        })?;
    }
    ensure(genera.len() == ROUND_TRIP_G, || {
        format!("genera drawn {genera:?}")
    })?;
    Ok(format!("{ROUND_TRIPS} inputs, genus counts {genera:?}"))
}

fn c10_term_ideal() -> Outcome {
    let grid = criterion5_grid();
    let failure = grid.par_iter().find_map_first(|list| {
        term_ideal_initial_check(list)
            .first_failure()
            .map(|c| format!("{list}: {}: {}", c.name, c.detail))
    });
    match failure {
        Some(f) => Err(f),
        None => Ok(format!("{} pair lists", grid.len())),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("two-pair example 11/30", c1_two_pair_example, LIMIT_EXAMPLE),
        ("characteristic (4;6,7)", c2_as_usual, LIMIT_EXAMPLE),
        ("T_{5,7} weights and edges", c3_t57, LIMIT_EXAMPLE),
        ("Howald set, q <= 30", c4_howald, LIMIT_HOWALD),
        (
            "formula = oracle = semigroup",
            c5_formula_oracle,
            LIMIT_ORACLE_GRID,
        ),
        ("R-set dual definitions", c6_rset, LIMIT_RSET),
        ("semigroup (4,6,13)", c7_derived_case, LIMIT_EXAMPLE),
        ("coefficient lemmas", c8_lemmas, LIMIT_UNSTATED),
        ("encoding round trips", c9_round_trips, LIMIT_UNSTATED),
        ("term-ideal head", c10_term_ideal, LIMIT_UNSTATED),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; too slow")),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {status} {name}: {detail} [{:.3}s / {}s]",
            i + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
