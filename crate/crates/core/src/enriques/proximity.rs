use super::tree::{EdgeKind, EnriquesTree};
use crate::Int;

/// For every vertex `β`, the vertices `α < β` that `P_β` is proximate to.
///
/// Always contains `β - 1` for `β ≥ 2`; satellite points carry a second
/// entry. The proximity matrix `Π` has `1` on the diagonal and `-1` at
/// `(α, β)` whenever `α ∈ prox(β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProximityTable {
    /// `prox[β - 1]`, with `β - 1` listed first.
    prox: Vec<Vec<usize>>,
    /// `inverse[α - 1]`: all `β` proximate to `α`, ascending.
    inverse: Vec<Vec<usize>>,
}

/// Proximities read off the tree: a satellite `P_β` (incoming edge horizontal
/// or vertical) is also proximate to the start of the proper L-shape branch
/// ending at `β`, i.e. the foot of the maximal run of edges sharing the kind
/// of `[P_{β-1} P_β]`.
pub fn proximity<T: Int>(tree: &EnriquesTree<T>) -> ProximityTable {
    let s = tree.vertex_count();
    let mut prox = vec![Vec::new(); s];
    for beta in 2..=s {
        let entry = &mut prox[beta - 1];
        entry.push(beta - 1);
        let kind = tree.edge_kind(beta - 1);
        if kind == EdgeKind::Slant {
            continue;
        }
        let mut alpha = beta - 1;
        while alpha >= 2 && tree.edge_kind(alpha - 1) == kind {
            alpha -= 1;
        }
        assert!(alpha >= 2, "horizontal/vertical run reaches the root");
        entry.push(alpha - 1);
    }
    ProximityTable::from_lists(prox)
}

impl ProximityTable {
    fn from_lists(prox: Vec<Vec<usize>>) -> Self {
        let mut inverse = vec![Vec::new(); prox.len()];
        for (b, list) in prox.iter().enumerate() {
            for &a in list {
                inverse[a - 1].push(b + 1);
            }
        }
        ProximityTable { prox, inverse }
    }

    pub fn vertex_count(&self) -> usize {
        self.prox.len()
    }

    /// `prox(β)`.
    pub fn prox(&self, beta: usize) -> &[usize] {
        &self.prox[beta - 1]
    }

    /// Points proximate to `P_α`, ascending.
    pub fn proximate_to(&self, alpha: usize) -> &[usize] {
        &self.inverse[alpha - 1]
    }

    pub fn is_satellite(&self, beta: usize) -> bool {
        self.prox(beta).len() == 2
    }

    /// The proximity matrix `Π` as dense rows.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let s = self.vertex_count();
        let mut pi = vec![vec![0i64; s]; s];
        for (b, list) in self.prox.iter().enumerate() {
            pi[b][b] = 1;
            for &a in list {
                pi[a - 1][b] = -1;
            }
        }
        pi
    }

    /// Strict-basis coefficients to total-basis coefficients: `w = Πᵀ e`.
    pub fn w_from_e<T: Int>(&self, e: &[T]) -> Vec<T> {
        self.check_len(e.len());
        (1..=e.len())
            .map(|b| {
                self.prox(b)
                    .iter()
                    .fold(e[b - 1].clone(), |acc, &a| acc - e[a - 1].clone())
            })
            .collect()
    }

    /// Inverse of [`Self::w_from_e`] by forward substitution:
    /// `e_β = w_β + Σ_{α ∈ prox(β)} e_α`.
    pub fn e_from_w<T: Int>(&self, w: &[T]) -> Vec<T> {
        self.check_len(w.len());
        let mut e: Vec<T> = Vec::with_capacity(w.len());
        for b in 1..=w.len() {
            let value = self
                .prox(b)
                .iter()
                .fold(w[b - 1].clone(), |acc, &a| acc + e[a - 1].clone());
            e.push(value);
        }
        e
    }

    /// Total-basis coefficients to branch-basis coefficients: `b = Π w`.
    pub fn b_from_w<T: Int>(&self, w: &[T]) -> Vec<T> {
        self.check_len(w.len());
        (1..=w.len())
            .map(|a| {
                self.proximate_to(a)
                    .iter()
                    .fold(w[a - 1].clone(), |acc, &b| acc - w[b - 1].clone())
            })
            .collect()
    }

    /// Inverse of [`Self::b_from_w`] by back substitution from the top.
    pub fn w_from_b<T: Int>(&self, b: &[T]) -> Vec<T> {
        self.check_len(b.len());
        let mut w = vec![T::zero(); b.len()];
        for a in (1..=b.len()).rev() {
            let value = self
                .proximate_to(a)
                .iter()
                .fold(b[a - 1].clone(), |acc, &beta| acc + w[beta - 1].clone());
            w[a - 1] = value;
        }
        w
    }

    fn check_len(&self, n: usize) {
        assert_eq!(n, self.vertex_count(), "coefficient vector length");
    }
}
