use num_rational::Ratio;
use num_traits::One;

use crate::euclid::validate_pair;
use crate::{Error, Int, Result};

fn fract<T: Int>(r: Ratio<T>) -> Ratio<T> {
    let floor = r.floor();
    r - floor
}

/// `R^m(p,q)` by direct scan of `1 ≤ k < mpq` with
/// `{k/pq} + {q'k/p} > 1`, where `q'` is found by search rather than by the
/// extended Euclidean algorithm.
pub fn r_set_bruteforce<T: Int>(p: T, q: T, m: T) -> Result<Vec<T>> {
    validate_pair(&p, &q)?;
    if !m.is_positive() {
        return Err(Error::invalid(format!(
            "translate count m = {m} must be at least 1"
        )));
    }
    let mut q_prime = T::one();
    while !(q.clone() * q_prime.clone() + T::one()).is_multiple_of(&p) {
        q_prime = q_prime + T::one();
    }
    let pq = p.clone() * q.clone();
    let end = m * pq.clone();
    let mut out = Vec::new();
    let mut k = T::one();
    while k < end {
        let a = fract(Ratio::new(k.clone(), pq.clone()));
        let b = fract(Ratio::new(q_prime.clone() * k.clone(), p.clone()));
        if a + b > Ratio::one() {
            out.push(k.clone());
        }
        k = k + T::one();
    }
    Ok(out)
}
