use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;

use super::{oracle_jumping_numbers, Verification};
use crate::enriques::from_pairs;
use crate::invariants::{pairs_to_characteristic, semigroup_from_characteristic, PairList};
use crate::jumping::{jumping_numbers_from_semigroup, jumping_numbers_from_tree, JumpingReport};
use crate::Int;

type Annotated<T> = BTreeMap<Ratio<T>, BTreeSet<usize>>;

fn diff<T: Int>(
    left: &Annotated<T>,
    right: &Annotated<T>,
    with_contributors: bool,
) -> Option<String> {
    let keys: BTreeSet<&Ratio<T>> = left.keys().chain(right.keys()).collect();
    for key in keys {
        match (left.get(key), right.get(key)) {
            (Some(_), None) => return Some(format!("{key} only on the left")),
            (None, Some(_)) => return Some(format!("{key} only on the right")),
            (Some(a), Some(b)) if with_contributors && a != b => {
                return Some(format!("{key} contributed by {a:?} vs {b:?}"))
            }
            _ => {}
        }
    }
    None
}

/// Records a values check and a contributors check between two reports.
pub fn compare_reports<T: Int>(
    report: &mut Verification,
    names: (&str, &str),
    left: &JumpingReport<T>,
    right: &JumpingReport<T>,
) {
    let (a, b) = (left.annotated(), right.annotated());
    for (with_contributors, what) in [(false, "values"), (true, "contributors")] {
        let name = format!("{} vs {} ({what})", names.0, names.1);
        let result = match diff(&a, &b, with_contributors) {
            None => Ok(format!("{} jumping numbers", a.len())),
            Some(d) => Err(d),
        };
        report.record(name, result);
    }
}

/// Compares the tree formula, the semigroup formula (after conversion) and
/// the contribution oracle, both as sets and with contributors.
pub fn verify_formula<T: Int>(pl: &PairList<T>) -> Verification {
    let mut report = Verification::new();
    let by_tree = jumping_numbers_from_tree(pl);
    let by_semigroup = match pairs_to_characteristic(pl) {
        Some(c) => jumping_numbers_from_semigroup(&semigroup_from_characteristic(&c)),
        None => JumpingReport::from_segments(Vec::new(), Vec::new(), pl.gcd_chain()),
    };
    let tree = from_pairs(pl.pairs()).expect("validated pairs");
    let by_oracle = oracle_jumping_numbers(&tree);
    compare_reports(
        &mut report,
        ("tree formula", "semigroup formula"),
        &by_tree,
        &by_semigroup,
    );
    compare_reports(
        &mut report,
        ("tree formula", "oracle"),
        &by_tree,
        &by_oracle,
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pl(p: &[(i64, i64)]) -> PairList<i64> {
        PairList::new(p.to_vec()).unwrap()
    }

    #[test]
    fn examples_agree() {
        for (pairs, count) in [
            (vec![(2, 3), (5, 11)], None),
            (vec![(5, 7)], Some(12)),
            (vec![(2, 3)], Some(1)),
        ] {
            let v = verify_formula(&pl(&pairs));
            assert!(v.passed(), "{pairs:?}\n{v}");
            if let Some(n) = count {
                assert_eq!(jumping_numbers_from_tree(&pl(&pairs)).len(), n);
            }
        }
        assert!(verify_formula(&PairList::<i64>::smooth()).passed());
    }

    #[test]
    fn diff_reports_contributor_mismatch() {
        let mut a: Annotated<i64> = BTreeMap::new();
        let mut b = BTreeMap::new();
        a.insert(Ratio::new(1, 2), BTreeSet::from([3]));
        b.insert(Ratio::new(1, 2), BTreeSet::from([3, 9]));
        assert!(diff(&a, &b, false).is_none());
        assert!(diff(&a, &b, true).unwrap().contains("contributed"));
    }
}
