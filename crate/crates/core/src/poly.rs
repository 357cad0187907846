//! Exact multivariate polynomials over the rationals.
//!
//! Every [`Polynomial`] carries its [`Ring`] (the ordered variable list).
//! Terms are stored in descending graded reverse-lexicographic order with
//! no zero coefficients, so structural equality is semantic equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ambient polynomial ring: an ordered list of variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Arc<Vec<String>>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Self {
        Ring {
            vars: Arc::new(vars.iter().map(|v| v.as_ref().to_string()).collect()),
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Ring with one extra variable placed in front of the existing ones.
    pub(crate) fn with_leading_var(&self, name: &str) -> Ring {
        let mut vars = Vec::with_capacity(self.nvars() + 1);
        vars.push(name.to_string());
        vars.extend(self.vars.iter().cloned());
        Ring { vars: Arc::new(vars) }
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.vars.join(","),
                right: other.vars.join(","),
            })
        }
    }
}

/// Exponent vector of a monomial `x_1^{k_1} ... x_n^{k_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn dot(&self, w: &WeightVector) -> u64 {
        self.0
            .iter()
            .zip(w.entries())
            .map(|(a, b)| *a as u64 * b)
            .sum()
    }
}

/// Graded reverse-lexicographic comparison of exponent vectors.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Nonnegative integer weights, not all zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.iter().all(|&e| e == 0) {
            return Err(Error::InvalidInput("weight vector must have a positive entry".into()));
        }
        Ok(WeightVector(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.0.iter().all(|&e| e > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(ExponentVector, BigRational)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: BigRational) -> Self {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.push((ExponentVector::zero(ring.nvars()), c));
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, BigRational::one())
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        Polynomial::constant(ring, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial::monomial(ring, ExponentVector::unit(ring.nvars(), i), BigRational::one())
    }

    pub fn monomial(ring: &Ring, exp: ExponentVector, c: BigRational) -> Self {
        assert_eq!(exp.len(), ring.nvars(), "exponent length must match the ring");
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.push((exp, c));
        }
        p
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigRational)>,
    {
        let mut acc: HashMap<ExponentVector, BigRational> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), ring.nvars(), "exponent length must match the ring");
            *acc.entry(e).or_insert_with(BigRational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grevlex_cmp(&b.0 .0, &a.0 .0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(ExponentVector, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.degree() == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading term in grevlex order.
    pub fn leading(&self) -> Option<&(ExponentVector, BigRational)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e.degree()).max()
    }

    /// Lowest total degree among the terms (the order at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| e.degree()).min()
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.iter().map(|(e, _)| e.clone()).collect()
    }

    pub fn coeff(&self, e: &ExponentVector) -> BigRational {
        self.terms
            .iter()
            .find(|(x, _)| x == e)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        self.ring.check_same(&other.ring)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match grevlex_cmp(&ea.0, &eb.0) {
                Ordering::Greater => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((eb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ea.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, exp: &ExponentVector, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // multiplying by a monomial preserves the grevlex order of terms
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.mul(exp), a * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut acc: HashMap<ExponentVector, BigRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea.mul(eb)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grevlex_cmp(&b.0 .0, &a.0 .0));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (ld, cd) = d.leading()?.clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((lr, cr)) = rem.leading().cloned() {
            if !ld.divides(&lr) {
                return None;
            }
            let e = lr.div(&ld);
            let c = cr / &cd;
            rem = rem.sub(&d.mul_term(&e, &c));
            quot.push((e, c));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate(&self, bound: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() < bound)
                .cloned()
                .collect(),
        }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Substitutes `images[i]` for the i-th variable; the result lives in the images' ring.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for im in images {
            target.check_same(&im.ring)?;
        }
        let mut out = Polynomial::zero(&target);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&images[i].pow(k));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Re-embeds into a ring with extra leading variables (exponent 0 there).
    pub(crate) fn lift_leading(&self, target: &Ring, extra: usize) -> Polynomial {
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(e, c)| {
                let mut v = vec![0; extra];
                v.extend_from_slice(&e.0);
                (ExponentVector(v), c.clone())
            }),
        )
    }

    /// Drops `extra` leading variables, which must not occur.
    pub(crate) fn drop_leading(&self, target: &Ring, extra: usize) -> Polynomial {
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(e, c)| {
                debug_assert!(e.0[..extra].iter().all(|&k| k == 0));
                (ExponentVector(e.0[extra..].to_vec()), c.clone())
            }),
        )
    }

    fn check_weight(&self, w: &WeightVector) -> Result<()> {
        if w.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: w.len(),
            });
        }
        Ok(())
    }

    /// `min <w, k>` over the support; `None` stands for +infinity (zero polynomial).
    pub fn weighted_min_degree(&self, w: &WeightVector) -> Result<Option<u64>> {
        self.check_weight(w)?;
        Ok(self.terms.iter().map(|(e, _)| e.dot(w)).min())
    }

    /// Sum of the terms whose exponent has `w`-degree exactly `d`.
    pub fn face_part(&self, w: &WeightVector, d: u64) -> Result<Polynomial> {
        self.check_weight(w)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.dot(w) == d)
                .cloned()
                .collect(),
        })
    }

    pub fn is_weighted_homogeneous(&self, w: &WeightVector) -> bool {
        let mut it = self.terms.iter().map(|(e, _)| e.dot(w));
        match it.next() {
            None => false,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Parses the textual grammar; see [`parse_poly`].
    pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
        crate::parse::parse_poly(text, ring)
    }
}

fn write_coeff_abs(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    let a = c.abs();
    if a.is_integer() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_one = c.abs().is_one();
            let mut first = true;
            if !is_one || e.degree() == 0 {
                write_coeff_abs(f, c)?;
                first = false;
            }
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ring.vars()[i])?;
                if k > 1 {
                    write!(f, "^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    crate::parse::parse_poly(text, ring)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Ring {
        Ring::new(&["x", "y"])
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, &xy()).unwrap()
    }

    fn w(v: &[u64]) -> WeightVector {
        WeightVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn parse_canonical_terms() {
        let f = p("x^2+y^5");
        let terms: Vec<_> = f.terms().iter().map(|(e, c)| (e.0.clone(), c.clone())).collect();
        assert_eq!(terms.len(), 2);
        assert!(terms.contains(&(vec![2, 0], rat(1))));
        assert!(terms.contains(&(vec![0, 5], rat(1))));
        assert!(p("0").is_zero());
        let g = p("x^2*y + 3*y^5 - x^2*y");
        assert_eq!(g, Polynomial::monomial(&xy(), ExponentVector(vec![0, 5]), rat(3)));
    }

    #[test]
    fn weighted_degree_examples() {
        assert_eq!(p("x^2+y^5").weighted_min_degree(&w(&[5, 2])).unwrap(), Some(10));
        assert_eq!(p("0").weighted_min_degree(&w(&[3, 1])).unwrap(), None);
        assert_eq!(p("x^3+x*y").weighted_min_degree(&w(&[1, 1])).unwrap(), Some(2));
        assert!(p("x").weighted_min_degree(&w(&[1, 1, 1])).is_err());
    }

    #[test]
    fn face_part_examples() {
        assert_eq!(p("x*(x+y)").face_part(&w(&[1, 1]), 2).unwrap(), p("x^2+x*y"));
        assert!(p("x^3").face_part(&w(&[1, 1]), 2).unwrap().is_zero());
        assert_eq!(
            p("x^2+y^5+x^3*y").face_part(&w(&[5, 2]), 10).unwrap(),
            p("x^2+y^5")
        );
    }

    #[test]
    fn display_round_trip() {
        for s in ["-x^2*y + 1/2*y - 7", "x^4 - x^3*y + 3", "0", "-1", "y^6"] {
            let f = p(s);
            assert_eq!(p(&f.to_string()), f, "{s}");
        }
        assert_eq!(p("1/2*x - y").to_string(), "1/2*x - y");
    }

    #[test]
    fn exact_division() {
        let f = p("x^3 - y^3");
        let d = p("x - y");
        assert_eq!(f.div_exact(&d).unwrap(), p("x^2 + x*y + y^2"));
        assert!(p("x^2 + y").div_exact(&p("x")).is_none());
    }

    #[test]
    fn compose_into_curve() {
        let t = Ring::new(&["t"]);
        let phi = vec![
            Polynomial::parse("-t+t^3", &t).unwrap(),
            Polynomial::parse("t", &t).unwrap(),
        ];
        let g = p("x+y").compose(&phi).unwrap();
        assert_eq!(g, Polynomial::parse("t^3", &t).unwrap());
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = p("x");
        let b = Polynomial::parse("x", &Ring::new(&["x", "z"])).unwrap();
        assert!(a.try_add(&b).is_err());
        assert!(a.try_mul(&b).is_err());
    }
}
