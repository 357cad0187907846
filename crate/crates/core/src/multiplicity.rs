//! Hilbert–Samuel, mixed and Buchsbaum–Rim multiplicities at the origin.
//!
//! Generic reductions are sampled: each trial draws integer coefficients
//! uniformly from `{-B, ..., B} \ {0}` and the smallest local colength over
//! all trials is reported. Trial `t` uses the ChaCha8 stream `t` of the
//! configured seed, so results do not depend on scheduling.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grobner::{
    is_submodule, local_is_submodule, local_quotient, monomials_of_degree, Colength, DEFAULT_TRUNCATION_CAP,
};
use crate::matrix::{Ideal, PolyMatrix, Submodule};
use crate::modtools::row_ideal;
use crate::poly::{rat, ExponentVector, Polynomial};
use crate::polyhedra::{covolume, Covolume, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RandomSpec {
    pub seed: u64,
    pub bound: u32,
    pub trials: u32,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec {
            seed: 42,
            bound: 100,
            trials: 5,
        }
    }
}

impl RandomSpec {
    pub fn validate(&self) -> Result<()> {
        if self.bound == 0 || self.trials == 0 {
            return Err(Error::InvalidInput(
                "random spec needs bound >= 1 and trials >= 1".into(),
            ));
        }
        Ok(())
    }

    fn rng(&self, trial: u32) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ColengthDirect,
    GenericReduction,
    Volume,
    /// Sum of mixed multiplicities.
    MixedSum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityValue {
    pub value: u64,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u32>,
    /// Per-trial local colengths; `None` marks a draw that was not m-primary.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<Option<u64>>,
    /// Mixed multiplicities `(exponents, value)` summed by [`delta`].
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<(Vec<u32>, u64)>,
}

impl MultiplicityValue {
    fn direct(value: u64) -> Self {
        MultiplicityValue {
            value,
            method: Method::ColengthDirect,
            seed: None,
            trials: None,
            samples: Vec::new(),
            components: Vec::new(),
        }
    }
}

fn nonzero_coeff(rng: &mut ChaCha8Rng, bound: u32) -> i64 {
    let b = bound as i64;
    let v = rng.gen_range(1..=b);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

fn combination(gens: &[Polynomial], rng: &mut ChaCha8Rng, bound: u32) -> Polynomial {
    let ring = gens[0].ring();
    gens.iter().fold(Polynomial::zero(ring), |acc, g| {
        acc.add(&g.scale(&rat(nonzero_coeff(rng, bound))))
    })
}

/// Local colength, with `None` for infinite or not stabilized.
fn try_local_length(n: &Submodule) -> Option<u64> {
    local_quotient(n, DEFAULT_TRUNCATION_CAP).ok().map(|q| q.length)
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a, PRIME - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

fn coeff_mod(c: &num_rational::BigRational) -> Option<u64> {
    let p = num_bigint::BigInt::from(PRIME);
    let num = c.numer().mod_floor(&p).to_u64()?;
    let den = c.denom().mod_floor(&p).to_u64()?;
    (den != 0).then(|| mul_mod(num, inv_mod(den)))
}

/// `dim_F (F^p)_{<k} / (N + m^k)` over `F = Z/PRIME`, by rank of the
/// truncated multiples of the generators.
fn modular_truncated_colength(gens: &[Vec<Polynomial>], nvars: usize, rank: usize, k: u32) -> Option<u64> {
    let monos: Vec<ExponentVector> = (0..k).flat_map(|d| monomials_of_degree(nvars, d)).collect();
    let mut index = HashMap::new();
    for pos in 0..rank {
        for m in &monos {
            let next = index.len();
            index.insert((m.clone(), pos), next);
        }
    }
    let ncols = index.len();
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for g in gens {
        for a in &monos {
            let mut row = vec![0u64; ncols];
            let mut any = false;
            for (pos, f) in g.iter().enumerate() {
                for (e, c) in f.terms() {
                    let prod = e.mul(a);
                    if prod.degree() < k {
                        let col = index[&(prod, pos)];
                        row[col] = (row[col] + coeff_mod(c)?) % PRIME;
                        any = true;
                    }
                }
            }
            if !any {
                continue;
            }
            // reduce against existing pivots, lowest column first
            let mut col = 0;
            while col < ncols {
                if row[col] != 0 {
                    match pivots.get(&col) {
                        Some(prow) => {
                            let f = row[col];
                            for j in col..ncols {
                                if prow[j] != 0 {
                                    row[j] = (row[j] + PRIME - mul_mod(f, prow[j])) % PRIME;
                                }
                            }
                        }
                        None => {
                            let inv = inv_mod(row[col]);
                            for v in row.iter_mut().skip(col) {
                                *v = mul_mod(*v, inv);
                            }
                            pivots.insert(col, row);
                            break;
                        }
                    }
                }
                col += 1;
            }
        }
    }
    Some((ncols - pivots.len()) as u64)
}

/// Local colength of a sampled generic module, computed modulo a large
/// prime. Reduction mod a prime can only raise the colength, so together
/// with the minimum over trials this keeps the usual genericity argument.
fn sampled_length(n: &Submodule) -> Option<u64> {
    let gens: Vec<Vec<Polynomial>> = n.columns().into_iter().filter(|c| c.iter().any(|f| !f.is_zero())).collect();
    let nvars = n.ring().nvars();
    let mut prev = None;
    for k in n.max_degree() + 1..=DEFAULT_TRUNCATION_CAP {
        let cur = modular_truncated_colength(&gens, nvars, n.nrows(), k)?;
        if prev == Some(cur) {
            return Some(cur);
        }
        prev = Some(cur);
    }
    None
}

fn require_finite(n: &Submodule) -> Result<u64> {
    match local_quotient(n, DEFAULT_TRUNCATION_CAP) {
        Ok(q) => Ok(q.length),
        Err(Error::NoStabilization { .. }) => Err(Error::InfiniteColength),
        Err(e) => Err(e),
    }
}

/// Runs `trial` for every trial index in parallel and keeps the minimum.
fn sampled(rs: &RandomSpec, trial: impl Fn(&mut ChaCha8Rng) -> Option<u64> + Sync) -> Result<MultiplicityValue> {
    rs.validate()?;
    let samples: Vec<Option<u64>> = (0..rs.trials)
        .into_par_iter()
        .map(|t| trial(&mut rs.rng(t)))
        .collect();
    let value = samples
        .iter()
        .flatten()
        .copied()
        .min()
        .ok_or(Error::InfiniteColength)?;
    Ok(MultiplicityValue {
        value,
        method: Method::GenericReduction,
        seed: Some(rs.seed),
        trials: Some(rs.trials),
        samples,
        components: Vec::new(),
    })
}

/// `e(I)` at the origin.
pub fn hs_multiplicity(i: &Ideal, rs: &RandomSpec) -> Result<MultiplicityValue> {
    if i.is_zero() {
        return Err(Error::ZeroInput);
    }
    let n = i.ring().nvars();
    let direct = require_finite(&i.to_module())?;
    if i.gens().len() <= n {
        return Ok(MultiplicityValue::direct(direct));
    }
    sampled(rs, |rng| {
        let fs: Vec<Polynomial> = (0..n).map(|_| combination(i.gens(), rng, rs.bound)).collect();
        sampled_length(&Ideal::new(i.ring(), fs).ok()?.to_module())
    })
}

/// `e(I_1, ..., I_n)` for `n` ideals in `n` variables.
pub fn mixed_multiplicity(ideals: &[Ideal], rs: &RandomSpec) -> Result<MultiplicityValue> {
    let Some(first) = ideals.first() else {
        return Err(Error::ZeroInput);
    };
    let ring = first.ring();
    let n = ring.nvars();
    if ideals.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: ideals.len(),
        });
    }
    for i in ideals {
        ring.check_same(i.ring())?;
        if i.is_zero() {
            return Err(Error::ZeroInput);
        }
    }
    let mut distinct: Vec<&Ideal> = Vec::new();
    for i in ideals {
        if !distinct.contains(&i) {
            distinct.push(i);
        }
    }
    for i in &distinct {
        require_finite(&i.to_module())?;
    }
    if distinct.len() == 1 {
        return hs_multiplicity(first, rs);
    }
    sampled(rs, |rng| {
        let fs: Vec<Polynomial> = ideals
            .iter()
            .map(|i| combination(i.gens(), rng, rs.bound))
            .collect();
        sampled_length(&Ideal::new(ring, fs).ok()?.to_module())
    })
}

/// Compositions of `d` into `p` nonnegative parts.
fn compositions(d: u32, p: usize) -> Vec<Vec<u32>> {
    if p == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, p - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `delta(M)`: sum of the mixed multiplicities of the row ideals over all
/// exponent vectors `(i_1, ..., i_p)` with `i_1 + ... + i_p = n`.
pub fn delta(m: &Submodule, rs: &RandomSpec) -> Result<MultiplicityValue> {
    let n = m.ring().nvars();
    let p = m.nrows();
    if p == 0 || m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let rows: Vec<Ideal> = (0..p).map(|i| row_ideal(m, i)).collect::<Result<_>>()?;
    let mut total = 0;
    let mut components = Vec::new();
    for comp in compositions(n as u32, p) {
        let family: Vec<Ideal> = comp
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(rows[i].clone(), k as usize))
            .collect();
        let v = mixed_multiplicity(&family, rs)?.value;
        total += v;
        components.push((comp, v));
    }
    Ok(MultiplicityValue {
        value: total,
        method: Method::MixedSum,
        seed: Some(rs.seed),
        trials: Some(rs.trials),
        samples: Vec::new(),
        components,
    })
}

/// Buchsbaum–Rim multiplicity `e(M)` of a finite-colength `M ⊆ R^p`.
pub fn buchsbaum_rim(m: &Submodule, rs: &RandomSpec) -> Result<MultiplicityValue> {
    let n = m.ring().nvars();
    let p = m.nrows();
    let target = n + p - 1;
    let direct = require_finite(m)?;
    if m.ncols() <= target {
        return Ok(MultiplicityValue::direct(direct));
    }
    let cols = m.columns();
    sampled(rs, |rng| {
        let gens: Vec<Vec<Polynomial>> = (0..target)
            .map(|_| random_column(&cols, rng, rs.bound))
            .collect();
        sampled_length(&PolyMatrix::from_columns(m.ring(), p, gens).ok()?)
    })
}

fn random_column(cols: &[Vec<Polynomial>], rng: &mut ChaCha8Rng, bound: u32) -> Vec<Polynomial> {
    let p = cols[0].len();
    let ring = cols[0][0].ring();
    let mut out = vec![Polynomial::zero(ring); p];
    for c in cols {
        let k = rat(nonzero_coeff(rng, bound));
        for (o, e) in out.iter_mut().zip(c) {
            *o = o.add(&e.scale(&k));
        }
    }
    out
}

/// `n! * covolume` of the Newton polyhedron.
pub fn monomial_multiplicity(i: &MonomialIdeal) -> Result<MultiplicityValue> {
    let p = i.newton_polyhedron()?;
    match covolume(&p) {
        Covolume::Infinite => Err(Error::InfiniteCovolume),
        Covolume::Finite(v) => {
            let fact: u64 = (1..=p.dim() as u64).product();
            let scaled = v * rat(fact as i64);
            let value = scaled
                .to_integer()
                .to_u64()
                .ok_or_else(|| Error::InvalidInput("covolume out of range".into()))?;
            Ok(MultiplicityValue {
                value,
                method: Method::Volume,
                seed: None,
                trials: None,
                samples: Vec::new(),
                components: Vec::new(),
            })
        }
    }
}

pub const DEFAULT_REDUCTION_CAP: u32 = 10;

/// Smallest `k <= cap` with `I L^k = L^(k+1)` locally, or `None` when no such
/// `k` was found (which does not prove that `I` is not a reduction).
pub fn ideal_reduction_check(i: &Ideal, l: &Ideal, cap: u32) -> Result<Option<u32>> {
    i.ring().check_same(l.ring())?;
    if !is_submodule(&i.to_module(), &l.to_module())? {
        return Err(Error::Containment("I is not contained in L".into()));
    }
    let mut lk = Ideal::unit(l.ring());
    for k in 0..=cap {
        let lhs = i.product(&lk);
        let rhs = lk.product(l);
        if local_is_submodule(&rhs.to_module(), &lhs.to_module())? {
            return Ok(Some(k));
        }
        lk = rhs;
    }
    Ok(None)
}

/// Convenience: the local colength as a [`Colength`].
pub fn local_length(n: &Submodule) -> Colength {
    match try_local_length(n) {
        Some(v) => Colength::Finite(v),
        None => Colength::Infinite,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ExponentVector, Ring};

    fn xy() -> Ring {
        Ring::new(&["x", "y"])
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::parse(&xy(), gens).unwrap()
    }

    #[test]
    fn hs_examples() {
        let rs = RandomSpec::default();
        assert_eq!(hs_multiplicity(&ideal(&["x", "y"]), &rs).unwrap().value, 1);
        assert_eq!(hs_multiplicity(&ideal(&["x^2*y", "x*y^3", "x^2+y^5"]), &rs).unwrap().value, 11);
        assert_eq!(hs_multiplicity(&ideal(&["x^2", "x*y", "y^2"]), &rs).unwrap().value, 4);
        assert_eq!(
            hs_multiplicity(&ideal(&["x^2", "x*y"]), &rs).unwrap_err(),
            Error::InfiniteColength
        );
    }

    #[test]
    fn mixed_examples() {
        let rs = RandomSpec::default();
        let v = mixed_multiplicity(&[ideal(&["x^2", "y"]), ideal(&["x", "y^2"])], &rs).unwrap();
        assert_eq!(v.value, 1);
        let m = ideal(&["x", "y"]);
        assert_eq!(mixed_multiplicity(&[m.clone(), m], &rs).unwrap().value, 1);
        let v = mixed_multiplicity(&[ideal(&["x^5", "x*y", "y^5"]), ideal(&["y^2", "x+y"])], &rs).unwrap();
        assert_eq!(v.value, 2);
    }

    #[test]
    fn brim_and_delta_examples() {
        let rs = RandomSpec::default();
        let r = xy();
        let m = PolyMatrix::parse(&r, &[vec!["x^5", "x*y", "y^5"], vec!["y^2", "x+y", "y^2"]]).unwrap();
        assert_eq!(buchsbaum_rim(&m, &rs).unwrap().value, 22);
        let d = delta(&m, &rs).unwrap();
        assert_eq!(d.value, 14);
        assert_eq!(d.components, vec![(vec![2, 0], 10), (vec![1, 1], 2), (vec![0, 2], 2)]);

        let m = PolyMatrix::parse(&r, &[vec!["x^2", "y", "0"], vec!["0", "x", "y^2"]]).unwrap();
        assert_eq!(buchsbaum_rim(&m, &rs).unwrap().value, 8);
        assert_eq!(delta(&m, &rs).unwrap().value, 5);
    }

    #[test]
    fn monomial_examples() {
        let e = |v: &[u32]| ExponentVector(v.to_vec());
        let m = MonomialIdeal::new(2, vec![e(&[1, 0]), e(&[0, 1])]).unwrap();
        assert_eq!(monomial_multiplicity(&m).unwrap().value, 1);
        let m = MonomialIdeal::new(2, vec![e(&[5, 0]), e(&[1, 1]), e(&[0, 5])]).unwrap();
        assert_eq!(monomial_multiplicity(&m).unwrap().value, 10);
        let m = MonomialIdeal::new(2, vec![e(&[2, 0]), e(&[0, 5])]).unwrap();
        assert_eq!(monomial_multiplicity(&m).unwrap().value, 10);
        let m = MonomialIdeal::new(2, vec![e(&[2, 0]), e(&[1, 1])]).unwrap();
        assert_eq!(monomial_multiplicity(&m).unwrap_err(), Error::InfiniteCovolume);
    }

    #[test]
    fn reduction_examples() {
        let i = ideal(&["x^2*y", "x*y^3", "x^2+y^5"]);
        let l = ideal(&["x^2+y^5", "x*y^3", "x^2*y", "x^3", "y^6"]);
        // x^3 = x*f - y^2*(x*y^3) and y^6 = y*f - x^2*y, so L = I already
        assert_eq!(ideal_reduction_check(&i, &l, 10).unwrap(), Some(0));
        assert!(crate::grobner::ideal_eq(&i.product(&l), &l.power(2)).unwrap());
        assert_eq!(ideal_reduction_check(&i, &i, 10).unwrap(), Some(0));
        let m2 = ideal(&["x^2", "x*y", "y^2"]);
        assert_eq!(ideal_reduction_check(&ideal(&["x^2", "y^2"]), &m2, 10).unwrap(), Some(1));
        assert!(matches!(
            ideal_reduction_check(&m2, &ideal(&["x^2", "y^2"]), 3),
            Err(Error::Containment(_))
        ));
    }

    #[test]
    fn seeded_runs_repeat() {
        let rs = RandomSpec {
            seed: 7,
            bound: 3,
            trials: 4,
        };
        let i = ideal(&["x^3", "x*y", "y^4", "x^2+y^3"]);
        let a = hs_multiplicity(&i, &rs).unwrap();
        let b = hs_multiplicity(&i, &rs).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.samples.len(), 4);
    }
}
