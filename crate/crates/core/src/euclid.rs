//! Euclidean-algorithm data of a coprime pair `p < q`.
//!
//! Besides quotients and remainders this keeps the two auxiliary sequences
//! `f_{-1}, …, f_m` and `δ_0, …, δ_{m+1}` that express every remainder as an
//! integral combination of `p` and `q`:
//!
//! ```text
//! f_{-1} = f_0 = 0,  δ_0 = δ_1 = 1
//! f_j = f_{j-2} + a_j δ_j          (1 ≤ j ≤ m)
//! δ_j = δ_{j-2} + a_{j-1} f_{j-2}  (2 ≤ j ≤ m+1)
//! ```

use crate::{Error, Int, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EuclidData<T> {
    p: T,
    q: T,
    quotients: Vec<T>,
    remainders: Vec<T>,
    /// `f[j + 1]` holds `f_j`, `j ≥ -1`.
    f: Vec<T>,
    /// `delta[j]` holds `δ_j`, `j ≥ 0`.
    delta: Vec<T>,
}

/// Checks `2 ≤ p < q` and `gcd(p, q) = 1`.
pub(crate) fn validate_pair<T: Int>(p: &T, q: &T) -> Result<()> {
    let two = T::one() + T::one();
    if *p < two {
        return Err(Error::invalid(format!("p = {p} must be at least 2")));
    }
    if p >= q {
        return Err(Error::invalid(format!(
            "p = {p} must be smaller than q = {q}"
        )));
    }
    let g = p.gcd(q);
    if !g.is_one() {
        return Err(Error::invalid(format!(
            "gcd({p}, {q}) = {g}, the pair must be coprime"
        )));
    }
    Ok(())
}

pub fn euclid_expand<T: Int>(p: T, q: T) -> Result<EuclidData<T>> {
    EuclidData::new(p, q)
}

impl<T: Int> EuclidData<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        validate_pair(&p, &q)?;

        let mut remainders = vec![q.clone(), p.clone()];
        let mut quotients = Vec::new();
        loop {
            let n = remainders.len();
            let (a, r) = remainders[n - 2].div_rem(&remainders[n - 1]);
            quotients.push(a);
            if r.is_zero() {
                break;
            }
            remainders.push(r);
        }
        let m = quotients.len();

        let mut f = vec![T::zero(); m + 2];
        let mut delta = vec![T::zero(); m + 2];
        delta[0] = T::one();
        delta[1] = T::one();
        for j in 1..=m + 1 {
            if j >= 2 {
                // δ_j = δ_{j-2} + a_{j-1} f_{j-2}; f_{j-2} lives at f[j-1].
                delta[j] = delta[j - 2].clone() + quotients[j - 2].clone() * f[j - 1].clone();
            }
            if j <= m {
                // f_j = f_{j-2} + a_j δ_j
                f[j + 1] = f[j - 1].clone() + quotients[j - 1].clone() * delta[j].clone();
            }
        }

        Ok(EuclidData {
            p,
            q,
            quotients,
            remainders,
            f,
            delta,
        })
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    /// Number of division steps `m`.
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// `a_1, …, a_m`.
    pub fn quotients(&self) -> &[T] {
        &self.quotients
    }

    /// `a_j`, 1-based.
    pub fn quotient(&self, j: usize) -> &T {
        &self.quotients[j - 1]
    }

    /// `r_0 = q, r_1 = p, …, r_m = 1`.
    pub fn remainders(&self) -> &[T] {
        &self.remainders
    }

    pub fn remainder(&self, j: usize) -> &T {
        &self.remainders[j]
    }

    /// `f_j` for `-1 ≤ j ≤ m`.
    pub fn f(&self, j: isize) -> &T {
        &self.f[usize::try_from(j + 1).expect("f index starts at -1")]
    }

    /// `δ_j` for `0 ≤ j ≤ m + 1`.
    pub fn delta(&self, j: usize) -> &T {
        &self.delta[j]
    }

    /// The raw `f` storage, offset by one (`[f_{-1}, f_0, …, f_m]`).
    pub fn f_sequence(&self) -> &[T] {
        &self.f
    }

    pub fn delta_sequence(&self) -> &[T] {
        &self.delta
    }

    /// `a_1 + … + a_m`, the vertex count of `T_{p,q}`.
    pub fn quotient_sum(&self) -> usize {
        self.quotients
            .iter()
            .map(|a| a.to_usize().expect("quotient fits in usize"))
            .sum()
    }
}
