use std::collections::BTreeSet;

use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::enriques::{
    branch_divisor_of, intersection_matrix_of, proximity, relevant_positions_of, EnriquesTree,
    IntersectionMatrix, LatticeDivisor,
};
use crate::invariants::PairList;
use crate::jumping::{qbar_sequence, JumpingReport, Segment};
use crate::{lift, Error, Int, Result};

/// Precomputed lattice data for repeated contribution tests on one tree.
#[derive(Debug, Clone)]
pub struct ContributionContext<T> {
    divisor: LatticeDivisor<T>,
    matrix: IntersectionMatrix,
    relevant: Vec<usize>,
}

impl<T: Int> ContributionContext<T> {
    pub fn new(tree: &EnriquesTree<T>) -> Self {
        let table = proximity(tree);
        let matrix = intersection_matrix_of(&table);
        ContributionContext {
            divisor: branch_divisor_of(&table),
            relevant: relevant_positions_of(&matrix),
            matrix,
        }
    }

    pub fn relevant(&self) -> &[usize] {
        &self.relevant
    }

    pub fn divisor(&self) -> &LatticeDivisor<T> {
        &self.divisor
    }

    /// `-⌊ξ μ*C⌋ · E_ρ` for `ξ = x / e_ρ`, in integers:
    /// `-Σ_α ⌊x e_α / e_ρ⌋ (E_α · E_ρ)`.
    pub fn contribution_value(&self, rho: usize, x: &T) -> T {
        let e = self.divisor.e();
        let e_rho = &e[rho - 1];
        self.matrix
            .row(rho)
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .fold(T::zero(), |acc, (a, &v)| {
                let floor = (x.clone() * e[a].clone()).div_floor(e_rho);
                acc - floor * T::from_i64(v).unwrap()
            })
    }

    /// Whether `E_ρ` contributes `ξ`: `ξ e_ρ ∈ ℤ` and `-⌊ξ μ*C⌋ · E_ρ ≥ 2`.
    pub fn test(&self, rho: usize, xi: &Ratio<T>) -> Result<bool> {
        if !self.relevant.contains(&rho) {
            return Err(Error::Contract(format!(
                "vertex {rho} is not a relevant position"
            )));
        }
        if *xi <= Ratio::zero() || *xi >= Ratio::one() {
            return Err(Error::Contract(format!("ξ = {xi} must lie in (0, 1)")));
        }
        let scaled = xi.clone() * Ratio::from_integer(self.divisor.e()[rho - 1].clone());
        if !scaled.is_integer() {
            return Ok(false);
        }
        Ok(self.contribution_value(rho, &scaled.to_integer()) >= lift(2))
    }

    /// Every `x ∈ [1, e_ρ)` whose `ξ = x / e_ρ` is contributed by `E_ρ`.
    pub fn scan(&self, rho: usize) -> Vec<T> {
        let e_rho = self.divisor.e()[rho - 1].clone();
        let two: T = lift(2);
        match e_rho.to_u64() {
            Some(end) => (1..end)
                .into_par_iter()
                .filter_map(|x| {
                    let x = T::from_u64(x).unwrap();
                    (self.contribution_value(rho, &x) >= two).then_some(x)
                })
                .collect(),
            None => {
                let mut out = Vec::new();
                let mut x = T::one();
                while x < e_rho {
                    if self.contribution_value(rho, &x) >= two {
                        out.push(x.clone());
                    }
                    x = x + T::one();
                }
                out
            }
        }
    }
}

pub fn contribution_test<T: Int>(
    tree: &EnriquesTree<T>,
    rho: usize,
    xi: &Ratio<T>,
) -> Result<bool> {
    ContributionContext::new(tree).test(rho, xi)
}

/// Jumping numbers below 1 rediscovered from the contribution inequality at
/// every relevant vertex.
pub fn oracle_jumping_numbers<T: Int>(tree: &EnriquesTree<T>) -> JumpingReport<T> {
    let ctx = ContributionContext::new(tree);
    let segments = ctx
        .relevant
        .iter()
        .map(|&rho| Segment {
            vertex: rho,
            denominator: ctx.divisor.e()[rho - 1].clone(),
            numerators: ctx.scan(rho),
        })
        .collect();
    let pairs = PairList::new(tree.pairs()).expect("tree pairs are validated");
    JumpingReport::from_segments(segments, qbar_sequence(&pairs), pairs.gcd_chain())
}

/// `{(k_α + n) / e_α < 1 : α a vertex, n ≥ 0}`.
pub fn candidate_set<T: Int>(tree: &EnriquesTree<T>) -> BTreeSet<Ratio<T>> {
    let table = proximity(tree);
    let e = branch_divisor_of::<T>(&table).e().to_vec();
    let k = table.e_from_w(&vec![T::one(); table.vertex_count()]);
    let mut out = BTreeSet::new();
    for (k_alpha, e_alpha) in k.into_iter().zip(e) {
        let mut num = k_alpha;
        while num < e_alpha {
            out.insert(Ratio::new(num.clone(), e_alpha.clone()));
            num = num + T::one();
        }
    }
    out
}
