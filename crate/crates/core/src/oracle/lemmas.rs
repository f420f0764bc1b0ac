use num_rational::Ratio;

use super::Verification;
use crate::enriques::{branch_divisor, build_tpq, from_pairs, proximity, LatticeDivisor};
use crate::euclid::EuclidData;
use crate::invariants::PairList;
use crate::jumping::{jumping_numbers_from_tree, qbar_sequence, r_set};
use crate::{lift, Int};

fn compare<T: Int>(what: &str, got: &[T], expected: &[T]) -> Result<String, String> {
    match got.iter().zip(expected).position(|(a, b)| a != b) {
        _ if got.len() != expected.len() => Err(format!(
            "{what}: length {} vs closed form {}",
            got.len(),
            expected.len()
        )),
        Some(i) => Err(format!(
            "{what}: index {} is {} but closed form gives {}",
            i + 1,
            got[i],
            expected[i]
        )),
        None => Ok(format!("{what}: {} values agree", got.len())),
    }
}

/// Closed forms for `T_{p,q}`: `e(B_r)` and `e(W_1)` from the `f, δ`
/// sequences, indexed by position `a_1 + … + a_j + k`.
fn tpq_closed_forms<T: Int>(euclid: &EuclidData<T>) -> (Vec<T>, Vec<T>) {
    let (p, q) = (euclid.p(), euclid.q());
    let mut branch = Vec::new();
    let mut w1 = Vec::new();
    for j in 0..euclid.len() {
        let jj = j as isize;
        let a_next = euclid.quotient(j + 1).to_usize().unwrap();
        for k in 1..=a_next {
            let k: T = lift(k);
            let core = euclid.f(jj - 1).clone() + k.clone() * euclid.delta(j + 1).clone();
            if j % 2 == 0 {
                branch.push(core.clone() * p.clone());
                w1.push(euclid.delta(j).clone() + k * euclid.f(jj).clone());
            } else {
                branch.push(core.clone() * q.clone());
                w1.push(core);
            }
        }
    }
    (branch, w1)
}

fn unit_w<T: Int>(tree_size: usize, at: usize) -> Vec<T> {
    let mut w = vec![T::zero(); tree_size];
    w[at - 1] = T::one();
    w
}

/// Recomputes the closed-form coefficient identities for a pair list and
/// compares each with the lattice linear algebra.
pub fn coefficient_lemma_check<T: Int>(pl: &PairList<T>) -> Verification {
    let mut report = Verification::new();
    let pairs = pl.pairs();
    let m = pl.gcd_chain();
    let qbar = qbar_sequence(pl);

    for (p, q) in pairs {
        let euclid = EuclidData::new(p.clone(), q.clone()).expect("validated pair");
        let tree = build_tpq(p.clone(), q.clone()).expect("validated pair");
        let table = proximity(&tree);
        let branch = branch_divisor(&tree);
        let w1 = LatticeDivisor::from_w(&table, unit_w::<T>(tree.vertex_count(), 1));
        let (closed_branch, closed_w1) = tpq_closed_forms(&euclid);
        let tag = format!("T_{{{p},{q}}}");
        report.record(
            format!("e-coefficients of B_r in {tag}"),
            compare("e(B_r)", branch.e(), &closed_branch),
        );
        report.record(
            format!("e-coefficients of W_1 in {tag}"),
            compare("e(W_1)", w1.e(), &closed_w1),
        );

        // Weights are the remainders repeated per quotient, and every
        // satellite obeys e_β = e_α' + e_α'' + r_β.
        let mut weights = Vec::new();
        for (i, a) in euclid.quotients().iter().enumerate() {
            let n = a.to_usize().unwrap();
            weights.extend(std::iter::repeat_n(euclid.remainder(i + 1).clone(), n));
        }
        report.record(
            format!("weights of {tag}"),
            compare("w(B_r)", branch.w(), &weights),
        );
        let e = branch.e();
        let star: Vec<T> = (1..=tree.vertex_count())
            .filter(|&b| table.is_satellite(b))
            .map(|b| {
                let pr = table.prox(b);
                e[pr[0] - 1].clone() + e[pr[1] - 1].clone() + weights[b - 1].clone()
            })
            .collect();
        let actual: Vec<T> = (1..=tree.vertex_count())
            .filter(|&b| table.is_satellite(b))
            .map(|b| e[b - 1].clone())
            .collect();
        report.record(
            format!("satellite sum rule in {tag}"),
            compare("e_β", &actual, &star),
        );
    }

    if pairs.is_empty() {
        return report;
    }

    let full = from_pairs(pairs).expect("validated pairs");
    let full_div = branch_divisor(&full);
    let prefixes: Vec<_> = (1..=pairs.len())
        .map(|j| from_pairs(&pairs[..j]).expect("validated pairs"))
        .collect();

    // Prefix coefficients scale by the weight at the prefix top.
    for prefix in &prefixes[..prefixes.len() - 1] {
        let r = prefix.vertex_count();
        let scale = full_div.w()[r - 1].clone();
        let expected: Vec<T> = branch_divisor(prefix)
            .e()
            .iter()
            .map(|x| x.clone() * scale.clone())
            .collect();
        report.record(
            format!("prefix scaling, first {} segment(s)", prefix.genus()),
            compare("e_α", &full_div.e()[..r], &expected),
        );
    }

    // Junction values w = m_{j+1}, e = m_j q̄_j.
    let junctions = full.junctions();
    let w_got: Vec<T> = junctions
        .iter()
        .map(|&v| full_div.w()[v - 1].clone())
        .collect();
    let e_got: Vec<T> = junctions
        .iter()
        .map(|&v| full_div.e()[v - 1].clone())
        .collect();
    let w_expected: Vec<T> = m[1..].to_vec();
    let e_expected: Vec<T> = qbar
        .iter()
        .enumerate()
        .map(|(j, qb)| m[j].clone() * qb.clone())
        .collect();
    report.record(
        "junction weights m_{j+1}",
        compare("w", &w_got, &w_expected),
    );
    report.record(
        "junction coefficients m_j q̄_j",
        compare("e", &e_got, &e_expected),
    );

    // Suffix relation for S = T' # T_{p,q}:
    // e_{r'-1+α} = (e_{r'}(T') - 1) e_α(W_1) p + e_α(B_r).
    for j in 1..pairs.len() {
        let lower = &prefixes[j - 1];
        let whole = branch_divisor(&prefixes[j]);
        let (p, q) = &pairs[j];
        let piece = build_tpq(p.clone(), q.clone()).expect("validated pair");
        let piece_table = proximity(&piece);
        let piece_branch = branch_divisor(&piece);
        let piece_w1 = LatticeDivisor::from_w(&piece_table, unit_w::<T>(piece.vertex_count(), 1));
        let r_lower = lower.vertex_count();
        let top_lower = branch_divisor(lower).e()[r_lower - 1].clone();
        let expected: Vec<T> = (0..piece.vertex_count())
            .map(|a| {
                (top_lower.clone() - T::one()) * piece_w1.e()[a].clone() * p.clone()
                    + piece_branch.e()[a].clone()
            })
            .collect();
        report.record(
            format!("suffix relation at segment {}", j + 1),
            compare("e", &whole.e()[r_lower - 1..], &expected),
        );
    }
    report
}

/// The first `|R(p_1,q_1)|` jumping numbers of the curve equal those of the
/// monomial term ideal, `(a p_1 + b q_1) / (p_1 q_1 π)` with `π = p_2 ⋯ p_g`.
pub fn term_ideal_initial_check<T: Int>(pl: &PairList<T>) -> Verification {
    let mut report = Verification::new();
    let Some((p1, q1)) = pl.pairs().first().cloned() else {
        return report;
    };
    let pi = pl.gcd_chain()[1].clone();
    let pq = p1.clone() * q1.clone();
    let denominator = pq.clone() * pi.clone();

    let mut numerators = Vec::new();
    let mut ap = p1.clone();
    while ap.clone() + q1.clone() < denominator {
        let mut value = ap.clone() + q1.clone();
        while value < denominator {
            numerators.push(value.clone());
            value = value + q1.clone();
        }
        ap = ap + p1.clone();
    }
    numerators.sort();
    numerators.dedup();

    let count = r_set(p1.clone(), q1.clone()).expect("validated pair").len();
    let head = &numerators[..count.min(numerators.len())];
    let inside = head.len() == count && head.iter().all(|x| *x < pq);
    report.record(
        "term ideal head is R(p_1,q_1)",
        if inside {
            Ok(format!("{count} monomial values below 1/π"))
        } else {
            Err(format!(
                "first {count} monomial numerators are not all below {pq}"
            ))
        },
    );

    let monomial: Vec<Ratio<T>> = head
        .iter()
        .map(|x| Ratio::new(x.clone(), denominator.clone()))
        .collect();
    let curve: Vec<Ratio<T>> = jumping_numbers_from_tree(pl)
        .values()
        .into_iter()
        .take(count)
        .collect();
    let result = match curve.iter().zip(&monomial).position(|(a, b)| a != b) {
        _ if curve.len() != monomial.len() => Err(format!(
            "curve has {} values, term ideal {}",
            curve.len(),
            monomial.len()
        )),
        Some(i) => Err(format!(
            "value {} differs: curve {} vs term ideal {}",
            i + 1,
            curve[i],
            monomial[i]
        )),
        None => Ok(format!("first {count} jumping numbers agree")),
    };
    report.record("term ideal initial jumping numbers", result);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pl(p: &[(i64, i64)]) -> PairList<i64> {
        PairList::new(p.to_vec()).unwrap()
    }

    #[test]
    fn closed_forms_t57() {
        let e = EuclidData::new(5i64, 7).unwrap();
        let (b, w1) = tpq_closed_forms(&e);
        assert_eq!(b, vec![5, 7, 14, 20, 35]);
        assert_eq!(w1, vec![1, 1, 2, 3, 5]);
    }

    #[test]
    fn lemma_checks_pass_on_examples() {
        for pairs in [
            vec![(5, 7)],
            vec![(2, 3), (5, 11)],
            vec![(2, 3), (2, 3)],
            vec![(3, 8), (2, 5), (4, 7)],
        ] {
            let v = coefficient_lemma_check(&pl(&pairs));
            assert!(v.passed(), "{pairs:?}\n{v}");
        }
    }

    #[test]
    fn junction_values_for_two_pair_example() {
        let v = coefficient_lemma_check(&pl(&[(2, 3), (5, 11)]));
        let junction = v
            .checks
            .iter()
            .find(|c| c.name == "junction coefficients m_j q̄_j")
            .unwrap();
        assert!(junction.passed);
    }

    #[test]
    fn term_ideal_examples() {
        for pairs in [vec![(2, 3), (5, 11)], vec![(2, 3), (2, 3)], vec![(5, 7)]] {
            let v = term_ideal_initial_check(&pl(&pairs));
            assert!(v.passed(), "{pairs:?}\n{v}");
        }
        let first = jumping_numbers_from_tree(&pl(&[(2, 3), (5, 11)])).values()[0];
        assert_eq!(first, Ratio::new(5, 30));
        assert!(term_ideal_initial_check(&PairList::<i64>::smooth())
            .checks
            .is_empty());
    }
}
