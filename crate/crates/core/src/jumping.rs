//! Closed formulas for the jumping numbers below 1.
//!
//! For a pair list with `m_j = p_j ⋯ p_g` and the normalised invariants
//! `q̄_1 = q_1`, `q̄_j = (m_{j-1}/m_{j+1}) q̄_{j-1} - p_j + q_j`, segment `j`
//! contributes `R^{m_{j+1}}(p_j, q̄_j) / (m_j q̄_j)` where
//! `R(p,q) = {ap + bq < pq : a,b ≥ 1}` and `R^m` is the union of its
//! translates by `0, pq, …, (m-1)pq`.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::euclid::{validate_pair, EuclidData};
use crate::invariants::{
    characteristic_from_semigroup, characteristic_to_pairs, PairList, SemigroupGenerators,
};
use crate::{Error, Int, Result};

/// Parameters of `R^m(p,q)` together with `q'`, the unique `0 < q' < p`
/// with `q q' ≡ -1 (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RSetParams<T> {
    p: T,
    q: T,
    translates: T,
    q_prime: T,
}

impl<T: Int> RSetParams<T> {
    pub fn new(p: T, q: T, translates: T) -> Result<Self> {
        validate_pair(&p, &q)?;
        if !translates.is_positive() {
            return Err(Error::invalid(format!(
                "translate count m = {translates} must be at least 1"
            )));
        }
        // 1 = x q + y p, so q (-x) ≡ -1.
        let x = q.extended_gcd(&p).x;
        let q_prime = (-x).mod_floor(&p);
        Ok(RSetParams {
            p,
            q,
            translates,
            q_prime,
        })
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn translates(&self) -> &T {
        &self.translates
    }

    pub fn q_prime(&self) -> &T {
        &self.q_prime
    }

    /// `{ap + bq : a, b ≥ 1, ap + bq < pq}`, ascending.
    pub fn base_set(&self) -> Vec<T> {
        let (p, q) = (&self.p, &self.q);
        let pq = p.clone() * q.clone();
        let mut out = Vec::new();
        let mut ap = p.clone();
        while ap.clone() + q.clone() < pq {
            let mut value = ap.clone() + q.clone();
            while value < pq {
                out.push(value.clone());
                value = value + q.clone();
            }
            ap = ap + p.clone();
        }
        out.sort();
        out
    }

    /// `⋃_{k < m} (k pq + R(p,q))`, ascending.
    pub fn translated_set(&self) -> Vec<T> {
        let base = self.base_set();
        let pq = self.p.clone() * self.q.clone();
        let mut out = Vec::new();
        let mut shift = T::zero();
        let end = self.translates.clone() * pq.clone();
        while shift < end {
            out.extend(base.iter().map(|x| x.clone() + shift.clone()));
            shift = shift + pq.clone();
        }
        out
    }
}

pub fn r_set<T: Int>(p: T, q: T) -> Result<Vec<T>> {
    Ok(RSetParams::new(p, q, T::one())?.base_set())
}

pub fn r_m_set<T: Int>(p: T, q: T, m: T) -> Result<Vec<T>> {
    Ok(RSetParams::new(p, q, m)?.translated_set())
}

/// `q̄_1, …, q̄_g`.
pub fn qbar_sequence<T: Int>(pl: &PairList<T>) -> Vec<T> {
    let m = pl.gcd_chain();
    let mut qbar: Vec<T> = Vec::with_capacity(pl.genus());
    for (j, (p, q)) in pl.pairs().iter().enumerate() {
        let value = match qbar.last() {
            None => q.clone(),
            Some(prev) => {
                m[j - 1].clone() / m[j + 1].clone() * prev.clone() - p.clone() + q.clone()
            }
        };
        qbar.push(value);
    }
    qbar
}

/// A jumping number `0 < ξ < 1` with the relevant vertices contributing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JumpingNumber<T: Clone + Integer> {
    pub value: Ratio<T>,
    pub contributors: BTreeSet<usize>,
}

/// Jumping numbers `ξ = x / denominator` contributed at one relevant vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment<T> {
    pub vertex: usize,
    pub denominator: T,
    /// Ascending numerators `x`, not reduced.
    pub numerators: Vec<T>,
}

impl<T: Int> Segment<T> {
    pub fn values(&self) -> impl Iterator<Item = Ratio<T>> + '_ {
        self.numerators
            .iter()
            .map(|x| Ratio::new(x.clone(), self.denominator.clone()))
    }
}

/// The sorted jumping numbers below 1 and their per-segment decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JumpingReport<T: Clone + Integer> {
    numbers: Vec<JumpingNumber<T>>,
    segments: Vec<Segment<T>>,
    qbar: Vec<T>,
    gcd_chain: Vec<T>,
}

impl<T: Int> JumpingReport<T> {
    /// Merges segments; a number reached from several segments keeps the
    /// union of their contributors.
    pub fn from_segments(segments: Vec<Segment<T>>, qbar: Vec<T>, gcd_chain: Vec<T>) -> Self {
        let mut merged: BTreeMap<Ratio<T>, BTreeSet<usize>> = BTreeMap::new();
        for seg in &segments {
            for value in seg.values() {
                merged.entry(value).or_default().insert(seg.vertex);
            }
        }
        let numbers = merged
            .into_iter()
            .map(|(value, contributors)| JumpingNumber {
                value,
                contributors,
            })
            .collect();
        JumpingReport {
            numbers,
            segments,
            qbar,
            gcd_chain,
        }
    }

    pub fn numbers(&self) -> &[JumpingNumber<T>] {
        &self.numbers
    }

    pub fn values(&self) -> Vec<Ratio<T>> {
        self.numbers.iter().map(|n| n.value.clone()).collect()
    }

    /// Value → contributors, for comparing reports.
    pub fn annotated(&self) -> BTreeMap<Ratio<T>, BTreeSet<usize>> {
        self.numbers
            .iter()
            .map(|n| (n.value.clone(), n.contributors.clone()))
            .collect()
    }

    pub fn segments(&self) -> &[Segment<T>] {
        &self.segments
    }

    pub fn qbar(&self) -> &[T] {
        &self.qbar
    }

    /// `m_1, …, m_{g+1}`; `[1]` for the smooth germ.
    pub fn gcd_chain(&self) -> &[T] {
        &self.gcd_chain
    }

    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbers.is_empty()
    }

    pub fn contains(&self, value: &Ratio<T>) -> bool {
        self.numbers
            .binary_search_by(|n| n.value.cmp(value))
            .is_ok()
    }

    pub fn get(&self, value: &Ratio<T>) -> Option<&JumpingNumber<T>> {
        self.numbers
            .binary_search_by(|n| n.value.cmp(value))
            .ok()
            .map(|i| &self.numbers[i])
    }

    /// The log-canonical threshold, `None` for the smooth germ.
    pub fn lct(&self) -> Option<Ratio<T>> {
        self.numbers.first().map(|n| n.value.clone())
    }
}

/// Junction vertex of every segment: `r_1 + … + r_j - (j - 1)`.
pub(crate) fn junction_vertices<T: Int>(pl: &PairList<T>) -> Vec<usize> {
    let mut out = Vec::with_capacity(pl.genus());
    let mut top = 1usize;
    for (p, q) in pl.pairs() {
        let r = EuclidData::new(p.clone(), q.clone())
            .expect("pair list is validated")
            .quotient_sum();
        top += r - 1;
        out.push(top);
    }
    out
}

pub fn jumping_numbers_from_tree<T: Int>(pl: &PairList<T>) -> JumpingReport<T> {
    let m = pl.gcd_chain();
    let qbar = qbar_sequence(pl);
    let segments = pl
        .pairs()
        .iter()
        .zip(&qbar)
        .zip(junction_vertices(pl))
        .enumerate()
        .map(|(j, (((p, _), qb), vertex))| Segment {
            vertex,
            denominator: m[j].clone() * qb.clone(),
            numerators: r_m_set(p.clone(), qb.clone(), m[j + 1].clone())
                .expect("p_j < q̄_j are coprime"),
        })
        .collect();
    JumpingReport::from_segments(segments, qbar, m)
}

pub fn jumping_numbers_from_semigroup<T: Int>(s: &SemigroupGenerators<T>) -> JumpingReport<T> {
    let m = s.gcd_chain();
    let gens = s.generators();
    let vertices = junction_vertices(&characteristic_to_pairs(&characteristic_from_semigroup(s)));
    let mut qbar = Vec::with_capacity(s.genus());
    let mut segments = Vec::with_capacity(s.genus());
    for j in 1..=s.genus() {
        let (mj, next, beta) = (&m[j - 1], &m[j], &gens[j]);
        let qb = beta.clone() / next.clone();
        segments.push(Segment {
            vertex: vertices[j - 1],
            denominator: mj.lcm(beta),
            numerators: r_m_set(mj.clone() / next.clone(), qb.clone(), next.clone())
                .expect("m_j/m_{j+1} < β̄_j/m_{j+1} are coprime"),
        });
        qbar.push(qb);
    }
    JumpingReport::from_segments(segments, qbar, m.to_vec())
}

pub fn lct<T: Int>(report: &JumpingReport<T>) -> Option<Ratio<T>> {
    report.lct()
}

/// `{ξ + n : ξ ∈ report ∪ {1}, n ≥ 0} ∩ (0, bound]`, using periodicity of
/// jumping numbers with period 1.
pub fn extend_by_periodicity<T: Int>(
    report: &JumpingReport<T>,
    bound: &Ratio<T>,
) -> Result<Vec<Ratio<T>>> {
    if *bound < Ratio::one() {
        return Err(Error::Contract(format!("bound {bound} must be at least 1")));
    }
    let mut base = report.values();
    base.push(Ratio::one());
    let mut out = Vec::new();
    let mut shift = Ratio::zero();
    while shift < *bound {
        out.extend(
            base.iter()
                .map(|x| x.clone() + shift.clone())
                .take_while(|x| x <= bound),
        );
        shift = shift + Ratio::one();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::SemigroupGenerators;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    fn pl(p: &[(i64, i64)]) -> PairList<i64> {
        PairList::new(p.to_vec()).unwrap()
    }

    #[test]
    fn r_set_examples() {
        assert_eq!(r_set(2i64, 3).unwrap(), vec![5]);
        assert_eq!(
            r_set(5i64, 7).unwrap(),
            vec![12, 17, 19, 22, 24, 26, 27, 29, 31, 32, 33, 34]
        );
        assert_eq!(r_set(2i64, 13).unwrap(), vec![15, 17, 19, 21, 23, 25]);
    }

    #[test]
    fn r_m_set_examples() {
        assert_eq!(r_m_set(2i64, 3, 5).unwrap(), vec![5, 11, 17, 23, 29]);
        assert_eq!(r_m_set(7i64, 9, 1).unwrap(), r_set(7, 9).unwrap());
        assert_eq!(r_m_set(2i64, 3, 2).unwrap(), vec![5, 11]);
        assert!(r_m_set(2i64, 3, 0).is_err());
        assert!(r_set(4i64, 6).is_err());
    }

    #[test]
    fn q_prime_values() {
        let params = RSetParams::new(2i64, 13, 1).unwrap();
        assert_eq!(*params.q_prime(), 1);
        let params = RSetParams::new(5i64, 7, 1).unwrap();
        assert_eq!(*params.q_prime(), 2); // 7·2 = 14 ≡ -1 (mod 5)
        for q in 3..40i64 {
            for p in 2..q {
                if p.gcd(&q) == 1 {
                    let qp = *RSetParams::new(p, q, 1).unwrap().q_prime();
                    assert!(0 < qp && qp < p);
                    assert_eq!((q * qp + 1) % p, 0);
                }
            }
        }
    }

    #[test]
    fn qbar_examples() {
        assert_eq!(qbar_sequence(&pl(&[(2, 3), (5, 11)])), vec![3, 36]);
        assert_eq!(qbar_sequence(&pl(&[(2, 3), (2, 3)])), vec![3, 13]);
        assert_eq!(qbar_sequence(&pl(&[(4, 9)])), vec![9]);
    }

    #[test]
    fn tree_formula_examples() {
        let report = jumping_numbers_from_tree(&pl(&[(2, 3), (5, 11)]));
        let n = report.get(&r(11, 30)).expect("11/30 present");
        assert_eq!(n.contributors, BTreeSet::from([3, 9]));

        let report = jumping_numbers_from_tree(&pl(&[(5, 7)]));
        let expected: Vec<_> = [12, 17, 19, 22, 24, 26, 27, 29, 31, 32, 33, 34]
            .iter()
            .map(|&x| r(x, 35))
            .collect();
        assert_eq!(report.values(), expected);

        let report = jumping_numbers_from_tree(&pl(&[(2, 3), (2, 3)]));
        let mut expected = vec![r(5, 12), r(11, 12)];
        expected.extend([15, 17, 19, 21, 23, 25].iter().map(|&x| r(x, 26)));
        expected.sort();
        assert_eq!(report.values(), expected);
        assert_eq!(report.segments().len(), 2);
        assert_eq!(report.segments()[0].vertex, 3);
        assert_eq!(report.segments()[1].vertex, 5);
    }

    #[test]
    fn semigroup_formula_examples() {
        let s = SemigroupGenerators::new(vec![4i64, 6, 13]).unwrap();
        let report = jumping_numbers_from_semigroup(&s);
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
        assert_eq!(report.values(), expected);
        assert_eq!(report.lct(), Some(r(5, 12)));
        assert_eq!(report.qbar(), &[3, 13]);

        let s = SemigroupGenerators::new(vec![10i64, 15, 36]).unwrap();
        assert!(jumping_numbers_from_semigroup(&s).contains(&r(11, 30)));
    }

    #[test]
    fn lct_examples() {
        assert_eq!(
            lct(&jumping_numbers_from_tree(&pl(&[(5, 7)]))),
            Some(r(12, 35))
        );
        assert_eq!(
            lct(&jumping_numbers_from_tree(&pl(&[(2, 3)]))),
            Some(r(5, 6))
        );
        assert_eq!(
            lct(&jumping_numbers_from_tree(&PairList::<i64>::smooth())),
            None
        );
    }

    #[test]
    fn periodicity() {
        let cusp = jumping_numbers_from_tree(&pl(&[(2, 3)]));
        assert_eq!(
            extend_by_periodicity(&cusp, &r(2, 1)).unwrap(),
            vec![r(5, 6), r(1, 1), r(11, 6), r(2, 1)]
        );
        let smooth = jumping_numbers_from_tree(&PairList::<i64>::smooth());
        assert_eq!(
            extend_by_periodicity(&smooth, &r(2, 1)).unwrap(),
            vec![r(1, 1), r(2, 1)]
        );
        let t57 = jumping_numbers_from_tree(&pl(&[(5, 7)]));
        let mut expected = t57.values();
        expected.push(r(1, 1));
        assert_eq!(extend_by_periodicity(&t57, &r(1, 1)).unwrap(), expected);
        assert!(extend_by_periodicity(&t57, &r(1, 2)).is_err());
    }

    #[test]
    fn report_invariants_hold() {
        let report = jumping_numbers_from_tree(&pl(&[(3, 5), (2, 7), (3, 4)]));
        let values = report.values();
        assert!(values.windows(2).all(|w| w[0] < w[1]));
        for n in report.numbers() {
            assert!(n.value > Ratio::zero() && n.value < Ratio::one());
            assert!(!n.contributors.is_empty());
        }
        let union: BTreeSet<_> = report.segments().iter().flat_map(|s| s.values()).collect();
        assert_eq!(union.into_iter().collect::<Vec<_>>(), values);
    }
}
