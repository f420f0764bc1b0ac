//! The exceptional lattice `Λ = ⊕ ℤ E_α` of a resolution and its three bases.
//!
//! `E_α` are strict transforms, `W_α` total transforms (`W_α · W_β = -δ_{αβ}`)
//! and `B_α` the branch basis, dual to `-E_α`. With `E = Π W` a divisor
//! `D = Σ e_α E_α = Σ w_α W_α = Σ b_α B_α` satisfies `w = Πᵀ e` and
//! `b = Π w`, so every basis change is a unitriangular substitution.

use super::proximity::{proximity, ProximityTable};
use super::tree::EnriquesTree;
use crate::Int;

/// Coefficients of one divisor of the exceptional lattice in all three bases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeDivisor<T> {
    e: Vec<T>,
    w: Vec<T>,
    b: Vec<T>,
}

impl<T: Int> LatticeDivisor<T> {
    pub fn from_e(table: &ProximityTable, e: Vec<T>) -> Self {
        let w = table.w_from_e(&e);
        let b = table.b_from_w(&w);
        LatticeDivisor { e, w, b }
    }

    pub fn from_w(table: &ProximityTable, w: Vec<T>) -> Self {
        let e = table.e_from_w(&w);
        let b = table.b_from_w(&w);
        LatticeDivisor { e, w, b }
    }

    pub fn from_b(table: &ProximityTable, b: Vec<T>) -> Self {
        let w = table.w_from_b(&b);
        let e = table.e_from_w(&w);
        LatticeDivisor { e, w, b }
    }

    /// Strict-transform coefficients `e_α`.
    pub fn e(&self) -> &[T] {
        &self.e
    }

    /// Total-transform coefficients `w_α` (the weights for `B_s`).
    pub fn w(&self) -> &[T] {
        &self.w
    }

    /// Branch-basis coefficients `b_α`.
    pub fn b(&self) -> &[T] {
        &self.b
    }

    /// `D · E_β`, through the intersection matrix.
    pub fn dot_e(&self, matrix: &IntersectionMatrix, beta: usize) -> T {
        self.e
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (a, coeff)| {
                acc + coeff.clone() * T::from_i64(matrix.get(a + 1, beta)).unwrap()
            })
    }
}

/// Intersection numbers `E_α · E_β = -(Π Πᵀ)_{αβ}`, 1-based access.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl IntersectionMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, alpha: usize, beta: usize) -> i64 {
        self.entries[(alpha - 1) * self.size + (beta - 1)]
    }

    pub fn row(&self, alpha: usize) -> &[i64] {
        &self.entries[(alpha - 1) * self.size..alpha * self.size]
    }

    /// Off-diagonal nonzero entries of row `alpha`.
    pub fn neighbours(&self, alpha: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.row(alpha)
            .iter()
            .enumerate()
            .filter(move |&(b, &v)| b + 1 != alpha && v != 0)
            .map(|(b, &v)| (b + 1, v))
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=self.size).all(|a| (1..=self.size).all(|b| self.get(a, b) == self.get(b, a)))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.size.max(1)).take(self.size)
    }
}

pub fn intersection_matrix<T: Int>(tree: &EnriquesTree<T>) -> IntersectionMatrix {
    intersection_matrix_of(&proximity(tree))
}

pub(crate) fn intersection_matrix_of(table: &ProximityTable) -> IntersectionMatrix {
    let pi = table.matrix();
    let s = pi.len();
    let mut entries = vec![0i64; s * s];
    for a in 0..s {
        for b in 0..s {
            let dot: i64 = pi[a].iter().zip(&pi[b]).map(|(x, y)| x * y).sum();
            entries[a * s + b] = -dot;
        }
    }
    IntersectionMatrix { size: s, entries }
}

/// `D = B_s = μ*C - C̃`: the unique divisor with `D · E_β = -δ_{βs}`.
///
/// Its `w` vector is the weight (multiplicity) sequence and its `e` vector
/// the coefficients of the total transform along the strict transforms.
pub fn branch_divisor<T: Int>(tree: &EnriquesTree<T>) -> LatticeDivisor<T> {
    let table = proximity(tree);
    branch_divisor_of(&table)
}

pub(crate) fn branch_divisor_of<T: Int>(table: &ProximityTable) -> LatticeDivisor<T> {
    let s = table.vertex_count();
    let mut b = vec![T::zero(); s];
    if let Some(top) = b.last_mut() {
        *top = T::one();
    }
    LatticeDivisor::from_b(table, b)
}

/// Coefficients `k_α` of the relative canonical divisor `K_μ = Σ W_α`.
pub fn canonical_coeffs<T: Int>(tree: &EnriquesTree<T>) -> Vec<T> {
    let table = proximity(tree);
    table.e_from_w(&vec![T::one(); table.vertex_count()])
}

/// Vertices `ρ` whose exceptional curve meets at least three other
/// components of the reduced total transform (the strict transform `C̃`
/// meets only `E_s`).
pub fn relevant_positions<T: Int>(tree: &EnriquesTree<T>) -> Vec<usize> {
    relevant_positions_of(&intersection_matrix(tree))
}

pub(crate) fn relevant_positions_of(matrix: &IntersectionMatrix) -> Vec<usize> {
    let s = matrix.size();
    (1..=s)
        .filter(|&rho| {
            let valence: i64 =
                matrix.neighbours(rho).map(|(_, v)| v).sum::<i64>() + i64::from(rho == s);
            valence >= 3
        })
        .collect()
}
