//! The three encodings of a unibranch singularity and the conversions
//! between them.
//!
//! Indices follow the usual convention: `m_1 = m` is the multiplicity and
//! `m_{j+1} = gcd(m_j, β_j)`, ending at `m_{g+1} = 1`. The gcd chain vectors
//! below store `m_1, …, m_{g+1}` at positions `0, …, g`.

use std::fmt;

use crate::euclid::validate_pair;
use crate::{Error, Int, Result};

/// Puiseux characteristic `(m; β_1, …, β_g)` of a singular branch, `g ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PuiseuxCharacteristic<T> {
    multiplicity: T,
    exponents: Vec<T>,
    gcd_chain: Vec<T>,
}

/// Canonical minimal generators `β̄_0, …, β̄_g` of the semigroup of a
/// singular branch, `g ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemigroupGenerators<T> {
    generators: Vec<T>,
    gcd_chain: Vec<T>,
}

/// `(p_1,q_1), …, (p_g,q_g)`; the Enriques tree is `T_{p_1,q_1} # … # T_{p_g,q_g}`.
/// The empty list is the smooth germ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PairList<T> {
    pairs: Vec<(T, T)>,
}

/// Result of blowing up the singular point of a branch.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Blowup<T> {
    Singular(PuiseuxCharacteristic<T>),
    Smooth,
}

fn chain_from<T: Int>(first: &T, rest: &[T]) -> Vec<T> {
    let mut chain = Vec::with_capacity(rest.len() + 1);
    chain.push(first.clone());
    for b in rest {
        let next = chain.last().unwrap().gcd(b);
        chain.push(next);
    }
    chain
}

impl<T: Int> PuiseuxCharacteristic<T> {
    pub fn new(multiplicity: T, exponents: Vec<T>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Smooth(
                "a characteristic needs at least one exponent".into(),
            ));
        }
        let two = T::one() + T::one();
        if multiplicity < two {
            return Err(Error::invalid(format!(
                "multiplicity m = {multiplicity} must be at least 2"
            )));
        }
        if exponents[0] <= multiplicity {
            return Err(Error::invalid(format!(
                "β_1 = {} must exceed m = {multiplicity}",
                exponents[0]
            )));
        }
        for (j, w) in exponents.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(Error::invalid(format!(
                    "β_{} = {} must exceed β_{} = {}",
                    j + 2,
                    w[1],
                    j + 1,
                    w[0]
                )));
            }
        }
        let gcd_chain = chain_from(&multiplicity, &exponents);
        for (j, beta) in exponents.iter().enumerate() {
            if beta.is_multiple_of(&gcd_chain[j]) {
                return Err(Error::invalid(format!(
                    "β_{} = {beta} divisible by m_{} = {}",
                    j + 1,
                    j + 1,
                    gcd_chain[j]
                )));
            }
        }
        let last = gcd_chain.last().unwrap();
        if !last.is_one() {
            return Err(Error::invalid(format!(
                "m_{} = {last}, the gcd chain must end at 1",
                gcd_chain.len()
            )));
        }
        Ok(PuiseuxCharacteristic {
            multiplicity,
            exponents,
            gcd_chain,
        })
    }

    /// `m = m_1`.
    pub fn multiplicity(&self) -> &T {
        &self.multiplicity
    }

    /// `β_1, …, β_g`.
    pub fn exponents(&self) -> &[T] {
        &self.exponents
    }

    /// `m_1, …, m_{g+1}`.
    pub fn gcd_chain(&self) -> &[T] {
        &self.gcd_chain
    }

    pub fn genus(&self) -> usize {
        self.exponents.len()
    }
}

impl<T: Int> SemigroupGenerators<T> {
    pub fn new(generators: Vec<T>) -> Result<Self> {
        if generators.len() < 2 {
            return Err(Error::Smooth(
                "at least two generators are needed for a singular branch".into(),
            ));
        }
        let two = T::one() + T::one();
        if generators[0] < two {
            return Err(Error::invalid(format!(
                "β̄_0 = {} must be at least 2",
                generators[0]
            )));
        }
        if generators[1] <= generators[0] {
            return Err(Error::invalid(format!(
                "β̄_1 = {} must exceed β̄_0 = {}",
                generators[1], generators[0]
            )));
        }
        let gcd_chain = chain_from(&generators[0], &generators[1..]);
        for j in 1..generators.len() {
            if generators[j].is_multiple_of(&gcd_chain[j - 1]) {
                return Err(Error::invalid(format!(
                    "β̄_{j} = {} divisible by m_{j} = {}",
                    generators[j],
                    gcd_chain[j - 1]
                )));
            }
        }
        let last = gcd_chain.last().unwrap();
        if !last.is_one() {
            return Err(Error::invalid(format!(
                "m_{} = {last}, the gcd chain must end at 1",
                gcd_chain.len()
            )));
        }
        for j in 1..generators.len() - 1 {
            // β̄_{j+1} > (m_j / m_{j+1}) β̄_j
            let bound = gcd_chain[j - 1].clone() / gcd_chain[j].clone() * generators[j].clone();
            if generators[j + 1] <= bound {
                return Err(Error::invalid(format!(
                    "β̄_{} = {} must exceed (m_{j}/m_{}) β̄_{j} = {bound}",
                    j + 1,
                    generators[j + 1],
                    j + 1
                )));
            }
        }
        Ok(SemigroupGenerators {
            generators,
            gcd_chain,
        })
    }

    /// `β̄_0, …, β̄_g`.
    pub fn generators(&self) -> &[T] {
        &self.generators
    }

    /// `m_1, …, m_{g+1}`.
    pub fn gcd_chain(&self) -> &[T] {
        &self.gcd_chain
    }

    pub fn genus(&self) -> usize {
        self.generators.len() - 1
    }

    /// Membership via the unique expansion `x = c_0 β̄_0 + Σ c_j β̄_j` with
    /// `0 ≤ c_j < m_j / m_{j+1}`; `x` is in the semigroup iff `c_0 ≥ 0`.
    pub fn contains(&self, x: &T) -> bool {
        if x.is_negative() {
            return false;
        }
        let m = &self.gcd_chain;
        let mut rest = x.clone();
        for j in (1..self.generators.len()).rev() {
            let (mj, next) = (&m[j - 1], &m[j]);
            let n = mj.clone() / next.clone();
            let b = self.generators[j].clone() / next.clone();
            let inverse = b.extended_gcd(&n).x;
            let c = (rest.clone() / next.clone() * inverse).mod_floor(&n);
            rest = rest - c * self.generators[j].clone();
        }
        !rest.is_negative()
    }
}

impl<T: Int> PairList<T> {
    pub fn new(pairs: Vec<(T, T)>) -> Result<Self> {
        for (index, (p, q)) in pairs.iter().enumerate() {
            validate_pair(p, q).map_err(|e| e.at_pair(index + 1))?;
        }
        Ok(PairList { pairs })
    }

    pub fn smooth() -> Self {
        PairList { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(T, T)] {
        &self.pairs
    }

    pub fn genus(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `m_1, …, m_{g+1}` with `m_j = p_j ⋯ p_g`.
    pub fn gcd_chain(&self) -> Vec<T> {
        let mut chain = vec![T::one()];
        for (p, _) in self.pairs.iter().rev() {
            let next = p.clone() * chain.last().unwrap().clone();
            chain.push(next);
        }
        chain.reverse();
        chain
    }
}

impl<T: Int> fmt::Display for PuiseuxCharacteristic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.multiplicity)?;
        write_joined(f, &self.exponents, ",")
    }
}

impl<T: Int> fmt::Display for SemigroupGenerators<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.generators, ",")
    }
}

impl<T: Int> fmt::Display for PairList<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, q)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p},{q}")?;
        }
        Ok(())
    }
}

fn write_joined<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: &[T],
    sep: &str,
) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// `β̄_0 = m`, `β̄_1 = β_1`, `β̄_{j+1} = (m_j/m_{j+1}) β̄_j + β_{j+1} - β_j`.
pub fn semigroup_from_characteristic<T: Int>(
    c: &PuiseuxCharacteristic<T>,
) -> SemigroupGenerators<T> {
    let m = &c.gcd_chain;
    let beta = &c.exponents;
    let mut gens = vec![c.multiplicity.clone(), beta[0].clone()];
    for j in 1..beta.len() {
        let prev = gens[j].clone();
        gens.push(m[j - 1].clone() / m[j].clone() * prev + beta[j].clone() - beta[j - 1].clone());
    }
    SemigroupGenerators::new(gens).expect("generators of a valid characteristic are valid")
}

/// Inverse of [`semigroup_from_characteristic`].
pub fn characteristic_from_semigroup<T: Int>(
    s: &SemigroupGenerators<T>,
) -> PuiseuxCharacteristic<T> {
    let m = &s.gcd_chain;
    let gens = &s.generators;
    let mut beta = vec![gens[1].clone()];
    for j in 1..gens.len() - 1 {
        let prev = beta[j - 1].clone();
        beta.push(gens[j + 1].clone() - m[j - 1].clone() / m[j].clone() * gens[j].clone() + prev);
    }
    PuiseuxCharacteristic::new(gens[0].clone(), beta)
        .expect("characteristic of valid generators is valid")
}

/// Canonical generators of the numerical semigroup spanned by `elements`:
/// `β̄_0` is its least nonzero element and `β̄_j` the least element not
/// divisible by `m_j`.
///
/// An element of the semigroup not divisible by `m_j` has a summand with the
/// same property, so each `β̄_j` is found among the supplied elements and no
/// closure is enumerated. Rejects sets whose semigroup is not that of a plane
/// branch, including sets containing elements the extracted generators do
/// not span.
pub fn canonicalize_generators<T: Int>(elements: &[T]) -> Result<SemigroupGenerators<T>> {
    if elements.is_empty() {
        return Err(Error::invalid("empty generator set"));
    }
    if let Some(bad) = elements.iter().find(|x| !x.is_positive()) {
        return Err(Error::invalid(format!("generator {bad} is not positive")));
    }
    let g = elements.iter().fold(T::zero(), |acc, x| acc.gcd(x));
    if !g.is_one() {
        return Err(Error::NotPlaneBranch(format!(
            "gcd of the generators is {g}, not 1"
        )));
    }
    let min = elements.iter().min().unwrap().clone();
    if min.is_one() {
        return Err(Error::Smooth("the semigroup contains 1".into()));
    }

    let mut gens = vec![min.clone()];
    let mut m = min;
    while !m.is_one() {
        let next = elements
            .iter()
            .filter(|x| !x.is_multiple_of(&m))
            .min()
            .expect("the overall gcd is 1")
            .clone();
        m = m.gcd(&next);
        gens.push(next);
    }
    let canonical =
        SemigroupGenerators::new(gens).map_err(|e| Error::NotPlaneBranch(e.to_string()))?;
    if let Some(x) = elements.iter().find(|x| !canonical.contains(x)) {
        return Err(Error::NotPlaneBranch(format!(
            "{x} is not in the semigroup spanned by {canonical}"
        )));
    }
    Ok(canonical)
}

/// `p_j = m_j / m_{j+1}`, `q_j = (β_j - β_{j-1} + m_j) / m_{j+1}` with `β_0 = m`.
pub fn characteristic_to_pairs<T: Int>(c: &PuiseuxCharacteristic<T>) -> PairList<T> {
    let m = &c.gcd_chain;
    let mut prev = c.multiplicity.clone();
    let mut pairs = Vec::with_capacity(c.genus());
    for (j, beta) in c.exponents.iter().enumerate() {
        let p = m[j].clone() / m[j + 1].clone();
        let q = (beta.clone() - prev + m[j].clone()) / m[j + 1].clone();
        pairs.push((p, q));
        prev = beta.clone();
    }
    PairList::new(pairs).expect("pairs of a valid characteristic are valid")
}

/// Inverse of [`characteristic_to_pairs`]; `None` for the smooth germ.
pub fn pairs_to_characteristic<T: Int>(pl: &PairList<T>) -> Option<PuiseuxCharacteristic<T>> {
    if pl.is_empty() {
        return None;
    }
    let m = pl.gcd_chain();
    let mut prev = m[0].clone();
    let mut beta = Vec::with_capacity(pl.genus());
    for (j, (_, q)) in pl.pairs.iter().enumerate() {
        let b = q.clone() * m[j + 1].clone() + prev - m[j].clone();
        beta.push(b.clone());
        prev = b;
    }
    Some(
        PuiseuxCharacteristic::new(m[0].clone(), beta)
            .expect("characteristic of a valid pair list is valid"),
    )
}

/// Characteristic of the strict transform after blowing up the singular point.
pub fn blowup_characteristic<T: Int>(c: &PuiseuxCharacteristic<T>) -> Blowup<T> {
    let m = c.multiplicity.clone();
    let b1 = c.exponents[0].clone();
    let two_m = m.clone() + m.clone();
    let (mult, exps) = if b1 > two_m {
        (
            m.clone(),
            c.exponents
                .iter()
                .map(|b| b.clone() - m.clone())
                .collect::<Vec<_>>(),
        )
    } else {
        let d = b1.clone() - m.clone();
        let shifted = c.exponents[1..]
            .iter()
            .map(|b| b.clone() - b1.clone() + m.clone());
        if m.is_multiple_of(&d) {
            (d, shifted.collect())
        } else {
            (d, std::iter::once(m.clone()).chain(shifted).collect())
        }
    };
    if exps.is_empty() {
        debug_assert!(mult.is_one());
        Blowup::Smooth
    } else {
        Blowup::Singular(
            PuiseuxCharacteristic::new(mult, exps).expect("blow-up of a valid characteristic"),
        )
    }
}

/// Multiplicities at the successive points of the minimal log resolution.
///
/// Records the multiplicity of every singular strict transform; once the
/// branch becomes smooth after a step of multiplicity `n`, `n` further points
/// of multiplicity 1 are needed to reach normal crossings.
pub fn multiplicity_sequence<T: Int>(c: &PuiseuxCharacteristic<T>) -> Vec<T> {
    let mut seq = Vec::new();
    let mut current = c.clone();
    loop {
        seq.push(current.multiplicity.clone());
        match blowup_characteristic(&current) {
            Blowup::Singular(next) => current = next,
            Blowup::Smooth => break,
        }
    }
    let tail = current
        .multiplicity
        .to_usize()
        .expect("multiplicity fits in usize");
    seq.extend(std::iter::repeat_n(T::one(), tail));
    seq
}

/// All three encodings of one germ, kept mutually consistent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveInvariants<T> {
    pairs: PairList<T>,
    characteristic: Option<PuiseuxCharacteristic<T>>,
    semigroup: Option<SemigroupGenerators<T>>,
}

impl<T: Int> CurveInvariants<T> {
    pub fn smooth() -> Self {
        CurveInvariants {
            pairs: PairList::smooth(),
            characteristic: None,
            semigroup: None,
        }
    }

    pub fn from_characteristic(c: PuiseuxCharacteristic<T>) -> Self {
        CurveInvariants {
            pairs: characteristic_to_pairs(&c),
            semigroup: Some(semigroup_from_characteristic(&c)),
            characteristic: Some(c),
        }
    }

    pub fn from_semigroup(s: SemigroupGenerators<T>) -> Self {
        let c = characteristic_from_semigroup(&s);
        CurveInvariants {
            pairs: characteristic_to_pairs(&c),
            characteristic: Some(c),
            semigroup: Some(s),
        }
    }

    pub fn from_pairs(pairs: PairList<T>) -> Self {
        match pairs_to_characteristic(&pairs) {
            None => Self::smooth(),
            Some(c) => CurveInvariants {
                semigroup: Some(semigroup_from_characteristic(&c)),
                characteristic: Some(c),
                pairs,
            },
        }
    }

    /// From arbitrary semigroup elements; a semigroup containing 1 is smooth.
    pub fn from_semigroup_elements(elements: &[T]) -> Result<Self> {
        match canonicalize_generators(elements) {
            Ok(s) => Ok(Self::from_semigroup(s)),
            Err(Error::Smooth(_)) => Ok(Self::smooth()),
            Err(e) => Err(e),
        }
    }

    pub fn pairs(&self) -> &PairList<T> {
        &self.pairs
    }

    pub fn characteristic(&self) -> Option<&PuiseuxCharacteristic<T>> {
        self.characteristic.as_ref()
    }

    pub fn semigroup(&self) -> Option<&SemigroupGenerators<T>> {
        self.semigroup.as_ref()
    }

    pub fn gcd_chain(&self) -> Vec<T> {
        self.pairs.gcd_chain()
    }

    pub fn is_smooth(&self) -> bool {
        self.pairs.is_empty()
    }
}
