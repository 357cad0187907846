//! Buchberger's algorithm for submodules of free modules `R^p`.
//!
//! Vectors are stored as sorted lists of `(monomial, position, coefficient)`
//! terms. Ideals are handled as submodules of `R^1`. Pair selection uses the
//! normal strategy (smallest lcm first) and the Gebauer–Möller
//! criteria, so runs are deterministic.
//! Coefficients are kept as primitive integer vectors during the run, which
//! avoids the denominator growth of monic rational arithmetic.
//!
//! Besides bases and normal forms this module provides syzygies,
//! intersections, colon ideals, saturation, and global and local colengths.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{Ideal, PolyMatrix, Submodule};
use crate::poly::{grevlex_cmp, ExponentVector, Polynomial, Ring};

/// Default cap on the truncation degree used by [`local_colength`].
pub const DEFAULT_TRUNCATION_CAP: u32 = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Eliminates the first `k` variables: their total degree is compared
    /// first, ties are broken by grevlex.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex_cmp(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Elimination(k) => {
                let da: u32 = a[..k].iter().sum();
                let db: u32 = b[..k].iter().sum();
                da.cmp(&db).then_with(|| grevlex_cmp(a, b))
            }
        }
    }
}

/// Monomial order extended to `(monomial, position)` pairs. Lower positions
/// rank higher.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub position_over_term: bool,
}

impl Default for ModuleOrder {
    fn default() -> Self {
        ModuleOrder {
            base: MonomialOrder::GrevLex,
            position_over_term: false,
        }
    }
}

impl ModuleOrder {
    pub fn term_over_position(base: MonomialOrder) -> Self {
        ModuleOrder {
            base,
            position_over_term: false,
        }
    }

    pub fn position_over_term(base: MonomialOrder) -> Self {
        ModuleOrder {
            base,
            position_over_term: true,
        }
    }

    pub fn cmp(&self, a: &ExponentVector, pa: usize, b: &ExponentVector, pb: usize) -> Ordering {
        if self.position_over_term {
            pb.cmp(&pa).then_with(|| self.base.cmp(&a.0, &b.0))
        } else {
            self.base.cmp(&a.0, &b.0).then_with(|| pb.cmp(&pa))
        }
    }
}

/// Colength of a submodule: a finite count of standard monomials or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(v) => Some(v),
            Colength::Infinite => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    exp: ExponentVector,
    pos: usize,
    coeff: BigInt,
}

type Vector = Vec<Term>;

fn max_degree(v: &Vector) -> u32 {
    v.iter().map(|t| t.exp.degree()).max().unwrap_or(0)
}

/// Integer vector proportional to `v`, together with the factor `f` such
/// that `v = f * result`.
fn to_vector_scaled(v: &[Polynomial], order: &ModuleOrder, trunc: Option<u32>) -> (Vector, BigRational) {
    let mut terms: Vec<(ExponentVector, usize, &BigRational)> = Vec::new();
    for (pos, p) in v.iter().enumerate() {
        for (e, c) in p.terms() {
            if trunc.is_some_and(|k| e.degree() >= k) {
                continue;
            }
            terms.push((e.clone(), pos, c));
        }
    }
    let den = terms.iter().fold(BigInt::one(), |acc, (_, _, c)| acc.lcm(c.denom()));
    let mut out: Vector = terms
        .into_iter()
        .map(|(exp, pos, c)| Term {
            exp,
            pos,
            coeff: c.numer() * (&den / c.denom()),
        })
        .collect();
    out.sort_by(|a, b| order.cmp(&b.exp, b.pos, &a.exp, a.pos));
    let content = make_primitive(&mut out);
    (out, BigRational::new(content, den))
}

fn to_vector(v: &[Polynomial], order: &ModuleOrder, trunc: Option<u32>) -> Vector {
    to_vector_scaled(v, order, trunc).0
}

/// Polynomials of `scale * v`.
fn from_vector_scaled(v: &Vector, scale: &BigRational, ring: &Ring, rank: usize) -> Vec<Polynomial> {
    let mut comps: Vec<Vec<(ExponentVector, BigRational)>> = vec![Vec::new(); rank];
    for t in v {
        comps[t.pos].push((t.exp.clone(), scale * BigRational::from_integer(t.coeff.clone())));
    }
    comps
        .into_iter()
        .map(|terms| Polynomial::from_terms(ring, terms))
        .collect()
}

/// Monic rational form of `v`.
fn from_vector(v: &Vector, ring: &Ring, rank: usize) -> Vec<Polynomial> {
    let scale = match v.first() {
        Some(t) => BigRational::new(BigInt::one(), t.coeff.clone()),
        None => BigRational::one(),
    };
    from_vector_scaled(v, &scale, ring, rank)
}

/// Divides by the content and makes the leading coefficient positive.
/// Returns the signed content removed.
fn make_primitive(v: &mut Vector) -> BigInt {
    let Some(first) = v.first() else {
        return BigInt::one();
    };
    let mut g = first.coeff.abs();
    for t in &v[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(&t.coeff);
    }
    if first.coeff.sign() == Sign::Minus {
        g = -g;
    }
    if !g.is_one() {
        for t in v.iter_mut() {
            t.coeff = &t.coeff / &g;
        }
    }
    g
}

/// `s1 * a - s2 * m * b`, dropping terms of degree `>= trunc`.
fn sub_mul(
    a: &[Term],
    s1: &BigInt,
    s2: &BigInt,
    m: &ExponentVector,
    b: &[Term],
    order: &ModuleOrder,
    trunc: Option<u32>,
) -> Vector {
    let scale_a = |t: &Term| Term {
        exp: t.exp.clone(),
        pos: t.pos,
        coeff: if s1.is_one() { t.coeff.clone() } else { &t.coeff * s1 },
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let keep = |e: &ExponentVector| trunc.is_none_or(|k| e.degree() < k);
    let (mut i, mut j) = (0, 0);
    let mut pending: Option<Term> = None;
    loop {
        if pending.is_none() && j < b.len() {
            let t = &b[j];
            let e = t.exp.mul(m);
            j += 1;
            if keep(&e) {
                pending = Some(Term {
                    exp: e,
                    pos: t.pos,
                    coeff: -(&t.coeff * s2),
                });
            } else {
                continue;
            }
        }
        match (i < a.len(), pending.take()) {
            (false, None) => break,
            (true, None) => {
                out.push(scale_a(&a[i]));
                i += 1;
            }
            (false, Some(t)) => out.push(t),
            (true, Some(t)) => match order.cmp(&a[i].exp, a[i].pos, &t.exp, t.pos) {
                Ordering::Greater => {
                    out.push(scale_a(&a[i]));
                    i += 1;
                    pending = Some(t);
                }
                Ordering::Less => out.push(t),
                Ordering::Equal => {
                    let s = &a[i].coeff * s1 + &t.coeff;
                    if !s.is_zero() {
                        out.push(Term {
                            exp: t.exp,
                            pos: t.pos,
                            coeff: s,
                        });
                    }
                    i += 1;
                }
            },
        }
    }
    out
}

struct Elem {
    v: Vector,
    active: bool,
}

impl Elem {
    fn lead(&self) -> &Term {
        &self.v[0]
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
    pos: usize,
}

struct Buchberger {
    order: ModuleOrder,
    trunc: Option<u32>,
    /// Product criterion only holds for ideals.
    is_ideal: bool,
    elems: Vec<Elem>,
    pairs: Vec<Pair>,
}

impl Buchberger {
    fn find_reducer(&self, t: &Term) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (idx, e) in self.elems.iter().enumerate() {
            if !e.active {
                continue;
            }
            let l = e.lead();
            if l.pos == t.pos && l.exp.divides(&t.exp) {
                match best {
                    Some(b) if self.elems[b].v.len() <= e.v.len() => {}
                    _ => best = Some(idx),
                }
            }
        }
        best
    }

    /// Cancels the term `t` of `v` against the element `g`; returns the new
    /// vector and the factor `s1` it was multiplied by.
    fn cancel(&self, v: &[Term], t: &Term, g: &[Term]) -> (Vector, BigInt) {
        let m = t.exp.div(&g[0].exp);
        let d = t.coeff.gcd(&g[0].coeff);
        let s1 = &g[0].coeff / &d;
        let s2 = &t.coeff / &d;
        (sub_mul(v, &s1, &s2, &m, g, &self.order, self.trunc), s1)
    }

    /// Top reduction; the result is primitive and proportional to a
    /// remainder of `v`.
    fn top_reduce(&self, mut v: Vector) -> Vector {
        while let Some(t) = v.first() {
            let Some(r) = self.find_reducer(t) else {
                break;
            };
            let t = t.clone();
            v = self.cancel(&v, &t, &self.elems[r].v).0;
            make_primitive(&mut v);
        }
        v
    }

    /// Reduces the terms of `v` from index `start` on, returning `(w, f)`
    /// with `f * w` the resulting remainder.
    fn full_reduce_scaled(&self, mut v: Vector, skip: Option<usize>, start: usize) -> (Vector, BigRational) {
        let mut factor = BigRational::one();
        let mut i = start;
        while i < v.len() {
            let t = &v[i];
            let reducer = self
                .elems
                .iter()
                .enumerate()
                .filter(|(idx, e)| e.active && Some(*idx) != skip)
                .find(|(_, e)| e.lead().pos == t.pos && e.lead().exp.divides(&t.exp))
                .map(|(idx, _)| idx);
            match reducer {
                Some(r) => {
                    let t = t.clone();
                    let (w, s1) = self.cancel(&v, &t, &self.elems[r].v);
                    v = w;
                    factor /= BigRational::from_integer(s1);
                    factor *= BigRational::from_integer(make_primitive(&mut v));
                }
                None => i += 1,
            }
        }
        (v, factor)
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let a = &self.elems[p.i].v;
        let ma = p.lcm.div(&a[0].exp);
        let ma_a: Vector = a
            .iter()
            .map(|t| Term {
                exp: t.exp.mul(&ma),
                pos: t.pos,
                coeff: t.coeff.clone(),
            })
            .filter(|t| self.trunc.is_none_or(|k| t.exp.degree() < k))
            .collect();
        let b = &self.elems[p.j].v;
        let mb = p.lcm.div(&b[0].exp);
        let d = a[0].coeff.gcd(&b[0].coeff);
        let (s1, s2) = (&b[0].coeff / &d, &a[0].coeff / &d);
        let mut s = sub_mul(&ma_a, &s1, &s2, &mb, b, &self.order, self.trunc);
        make_primitive(&mut s);
        s
    }

    /// Gebauer–Möller update after adding a new (monic, top-reduced) element.
    fn add(&mut self, v: Vector) {
        let h = self.elems.len();
        let hlead = v[0].exp.clone();
        let hpos = v[0].pos;
        self.elems.push(Elem {
            v,
            active: true,
        });

        let mut cands: Vec<(usize, ExponentVector, bool)> = Vec::new();
        for (g, e) in self.elems[..h].iter().enumerate() {
            if !e.active || e.lead().pos != hpos {
                continue;
            }
            let lcm = hlead.lcm(&e.lead().exp);
            let coprime = self.is_ideal && hlead.is_coprime(&e.lead().exp);
            cands.push((g, lcm, coprime));
        }
        let mut kept: Vec<(usize, ExponentVector, bool)> = Vec::new();
        for idx in 0..cands.len() {
            let (_, lcm1, cop1) = &cands[idx];
            let dominated = cands[idx + 1..].iter().any(|(_, l2, _)| l2.divides(lcm1))
                || kept.iter().any(|(_, l2, _)| l2.divides(lcm1));
            if *cop1 || !dominated {
                kept.push(cands[idx].clone());
            }
        }

        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.pos != hpos || !hlead.divides(&p.lcm) {
                return true;
            }
            let l1 = hlead.lcm(&elems[p.i].lead().exp);
            let l2 = hlead.lcm(&elems[p.j].lead().exp);
            l1 == p.lcm || l2 == p.lcm
        });

        for (g, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            self.pairs.push(Pair {
                i: g,
                j: h,
                lcm,
                pos: hpos,
            });
        }

        for e in self.elems[..h].iter_mut() {
            if e.active && e.lead().pos == hpos && hlead.divides(&e.lead().exp) {
                e.active = false;
            }
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = order.cmp(&a.lcm, a.pos, &b.lcm, b.pos) == Ordering::Less;
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn run(mut self, mut input: Vec<Vector>) -> Vec<Vector> {
        input.retain(|v| !v.is_empty());
        input.sort_by(|a, b| {
            max_degree(a)
                .cmp(&max_degree(b))
                .then_with(|| self.order.cmp(&a[0].exp, a[0].pos, &b[0].exp, b[0].pos))
        });
        for v in input {
            let mut r = self.top_reduce(v);
            if !r.is_empty() {
                make_primitive(&mut r);
                self.add(r);
            }
        }
        while let Some(p) = self.pop_pair() {
            let s = self.spoly(&p);
            let r = self.top_reduce(s);
            if !r.is_empty() {
                let (mut r, _) = self.full_reduce_scaled(r, None, 1);
                make_primitive(&mut r);
                self.add(r);
            }
        }
        // inter-reduce the minimal basis
        let active: Vec<usize> = (0..self.elems.len()).filter(|&i| self.elems[i].active).collect();
        let mut out: Vec<Vector> = Vec::with_capacity(active.len());
        for &i in &active {
            let (mut full, _) = self.full_reduce_scaled(self.elems[i].v.clone(), Some(i), 1);
            make_primitive(&mut full);
            out.push(full);
        }
        let order = self.order;
        out.sort_by(|a, b| order.cmp(&a[0].exp, a[0].pos, &b[0].exp, b[0].pos));
        out
    }
}

fn compute_basis(vs: Vec<Vector>, order: ModuleOrder, rank: usize) -> Vec<Vector> {
    Buchberger {
        order,
        trunc: None,
        is_ideal: rank == 1,
        elems: Vec::new(),
        pairs: Vec::new(),
    }
    .run(vs)
}

/// Reduced Gröbner basis of a submodule of `R^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    rank: usize,
    order: ModuleOrder,
    elems: Vec<Vector>,
    trunc: Option<u32>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Ambient free rank `p`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> ModuleOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn generators(&self) -> Vec<Vec<Polynomial>> {
        self.elems
            .iter()
            .map(|v| from_vector(v, &self.ring, self.rank))
            .collect()
    }

    pub fn to_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_columns(&self.ring, self.rank, self.generators()).expect("consistent shape")
    }

    /// Generators of a basis of an ideal (`p = 1`).
    pub fn to_ideal(&self) -> Ideal {
        assert_eq!(self.rank, 1);
        Ideal::new(
            &self.ring,
            self.generators().into_iter().map(|mut g| g.remove(0)).collect(),
        )
        .expect("same ring")
    }

    pub fn leading_terms(&self) -> Vec<(ExponentVector, usize)> {
        self.elems.iter().map(|v| (v[0].exp.clone(), v[0].pos)).collect()
    }

    fn engine(&self) -> Buchberger {
        Buchberger {
            order: self.order,
            trunc: self.trunc,
            is_ideal: self.rank == 1,
            elems: self
                .elems
                .iter()
                .map(|v| Elem {
                    v: v.clone(),
                    active: true,
                })
                .collect(),
            pairs: Vec::new(),
        }
    }

    fn check_vector(&self, v: &[Polynomial]) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: v.len(),
            });
        }
        for p in v {
            self.ring.check_same(p.ring())?;
        }
        Ok(())
    }

    /// Fully reduced normal form of `v`.
    pub fn reduce(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        self.check_vector(v)?;
        let (vec, scale) = to_vector_scaled(v, &self.order, self.trunc);
        let (r, f) = self.engine().full_reduce_scaled(vec, None, 0);
        Ok(from_vector_scaled(&r, &(scale * f), &self.ring, self.rank))
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        self.check_vector(v)?;
        let vec = to_vector(v, &self.order, self.trunc);
        Ok(self.engine().top_reduce(vec).is_empty())
    }

    pub fn contains_all(&self, m: &Submodule) -> Result<bool> {
        for c in m.columns() {
            if !self.contains(&c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> bool {
        self.rank == 1 && self.elems.iter().any(|v| v[0].exp.degree() == 0)
    }

    /// Number of standard `(monomial, position)` pairs.
    pub fn colength(&self) -> Colength {
        let n = self.ring.nvars();
        if let Some(k) = self.trunc {
            let mut total = 0u64;
            for pos in 0..self.rank {
                let leads: Vec<&ExponentVector> = self
                    .elems
                    .iter()
                    .filter(|v| v[0].pos == pos)
                    .map(|v| &v[0].exp)
                    .collect();
                for d in 0..k {
                    total += monomials_of_degree(n, d)
                        .iter()
                        .filter(|e| !leads.iter().any(|l| l.divides(e)))
                        .count() as u64;
                }
            }
            return Colength::Finite(total);
        }
        let mut total: u64 = 0;
        for pos in 0..self.rank {
            let leads: Vec<&ExponentVector> = self
                .elems
                .iter()
                .filter(|v| v[0].pos == pos)
                .map(|v| &v[0].exp)
                .collect();
            if leads.iter().any(|e| e.degree() == 0) {
                continue;
            }
            let mut bounds = vec![0u32; n];
            for (j, b) in bounds.iter_mut().enumerate() {
                let pure = leads
                    .iter()
                    .filter(|e| e.0.iter().enumerate().all(|(i, &k)| i == j || k == 0))
                    .map(|e| e.0[j])
                    .min();
                match pure {
                    Some(a) => *b = a,
                    None => return Colength::Infinite,
                }
            }
            total += count_standard(&bounds, &leads);
        }
        Colength::Finite(total)
    }
}

fn count_standard(bounds: &[u32], leads: &[&ExponentVector]) -> u64 {
    let n = bounds.len();
    let mut cur = vec![0u32; n];
    let mut count = 0u64;
    loop {
        let e = ExponentVector(cur.clone());
        if !leads.iter().any(|l| l.divides(&e)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            cur[i] += 1;
            if cur[i] < bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

pub fn groebner_basis(m: &Submodule, order: ModuleOrder) -> GroebnerBasis {
    let vs = m.columns().iter().map(|c| to_vector(c, &order, None)).collect();
    GroebnerBasis {
        ring: m.ring().clone(),
        rank: m.nrows(),
        order,
        elems: compute_basis(vs, order, m.nrows()),
        trunc: None,
    }
}

pub fn ideal_basis(i: &Ideal, order: ModuleOrder) -> GroebnerBasis {
    groebner_basis(&i.to_module(), order)
}

/// Basis of `N + m^k R^p`. Terms of degree `>= k` are dropped throughout, so
/// the `m^k R^p` part stays implicit.
///
/// `(N + m^k) / m^k` is a finite-dimensional space spanned by the truncated
/// multiples `x^a g`, so the basis is read off its reduced row echelon form
/// over `Q`, with columns in module order. Running Buchberger on the implicit
/// generators of `m^k` instead makes coefficients grow exponentially.
pub fn truncated_basis(n: &Submodule, k: u32) -> GroebnerBasis {
    let order = ModuleOrder::default();
    let ring = n.ring();
    let p = n.nrows();
    let nv = ring.nvars();

    let mut cols: Vec<(ExponentVector, usize)> = Vec::new();
    for d in 0..k {
        for e in monomials_of_degree(nv, d) {
            for pos in 0..p {
                cols.push((e.clone(), pos));
            }
        }
    }
    cols.sort_by(|a, b| order.cmp(&b.0, b.1, &a.0, a.1));
    let index: HashMap<(ExponentVector, usize), usize> =
        cols.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();

    let mut rows: Vec<Vec<(usize, BigRational)>> = Vec::new();
    let mut shifts: Vec<ExponentVector> = Vec::new();
    for d in 0..k {
        shifts.extend(monomials_of_degree(nv, d));
    }
    for c in n.columns() {
        let terms: Vec<(ExponentVector, usize, BigRational)> = c
            .iter()
            .enumerate()
            .flat_map(|(pos, f)| f.terms().iter().map(move |(e, v)| (e.clone(), pos, v.clone())))
            .filter(|t| t.0.degree() < k)
            .collect();
        if terms.is_empty() {
            continue;
        }
        let low = terms.iter().map(|t| t.0.degree()).min().unwrap_or(0);
        for a in shifts.iter().filter(|a| a.degree() + low < k) {
            let mut row: Vec<(usize, BigRational)> = terms
                .iter()
                .filter_map(|(e, pos, v)| {
                    let m = e.mul(a);
                    index.get(&(m, *pos)).map(|&i| (i, v.clone()))
                })
                .collect();
            row.sort_by_key(|t| t.0);
            rows.push(row);
        }
    }

    let echelon = rref(rows, cols.len());
    let mut elems: Vec<Vector> = Vec::new();
    for row in &echelon {
        let (le, lp) = &cols[row[0].0];
        let minimal = !echelon.iter().any(|other| {
            let (oe, op) = &cols[other[0].0];
            other[0].0 != row[0].0 && op == lp && oe.divides(le)
        });
        if !minimal {
            continue;
        }
        let denom = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
        let mut v: Vector = row
            .iter()
            .map(|(i, c)| Term {
                exp: cols[*i].0.clone(),
                pos: cols[*i].1,
                coeff: (c * BigRational::from_integer(denom.clone())).to_integer(),
            })
            .collect();
        make_primitive(&mut v);
        elems.push(v);
    }
    GroebnerBasis {
        ring: ring.clone(),
        rank: p,
        order,
        elems,
        trunc: Some(k),
    }
}

/// Reduced row echelon form of sparse rows over `Q`. Rows come back sorted
/// by pivot column, each monic with a zero in every other pivot column.
fn rref(rows: Vec<Vec<(usize, BigRational)>>, ncols: usize) -> Vec<Vec<(usize, BigRational)>> {
    let mut pivots: Vec<Option<Vec<(usize, BigRational)>>> = vec![None; ncols];
    let mut dense: Vec<BigRational> = vec![BigRational::zero(); ncols];
    for row in rows {
        let mut touched: Vec<usize> = Vec::new();
        for (i, v) in row {
            dense[i] = v;
            touched.push(i);
        }
        // pivot rows are zero in the other pivot columns, so subtracting
        // them only fills non-pivot columns
        for idx in 0..touched.len() {
            let c = touched[idx];
            let Some(prow) = &pivots[c] else { continue };
            let f = dense[c].clone();
            for (j, v) in prow {
                if dense[*j].is_zero() {
                    touched.push(*j);
                }
                dense[*j] -= &f * v;
            }
        }
        touched.sort_unstable();
        touched.dedup();
        let mut new: Vec<(usize, BigRational)> = Vec::new();
        for &c in &touched {
            let v = std::mem::replace(&mut dense[c], BigRational::zero());
            if !v.is_zero() {
                new.push((c, v));
            }
        }
        if new.is_empty() {
            continue;
        }
        let lead = new[0].0;
        let inv = new[0].1.recip();
        for t in new.iter_mut() {
            t.1 *= &inv;
        }
        for other in pivots.iter_mut().flatten() {
            let Ok(pos) = other.binary_search_by_key(&lead, |t| t.0) else {
                continue;
            };
            let f = other[pos].1.clone();
            *other = merge_sub(other, &f, &new);
        }
        pivots[lead] = Some(new);
    }
    pivots.into_iter().flatten().collect()
}

/// `a - f * b` for sorted sparse rows.
fn merge_sub(a: &[(usize, BigRational)], f: &BigRational, b: &[(usize, BigRational)]) -> Vec<(usize, BigRational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// All exponent vectors of total degree `k` in `n` variables.
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<ExponentVector> {
    fn rec(n: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if prefix.len() + 1 == n {
            prefix.push(k);
            out.push(ExponentVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a);
            rec(n, k - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

fn monomial_ideal_fast_path(n: &Submodule) -> Option<Vec<ExponentVector>> {
    if n.nrows() != 1 {
        return None;
    }
    let row = n.row(0);
    let nonzero: Vec<&Polynomial> = row.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.iter().all(|p| p.is_monomial()) {
        Some(nonzero.iter().map(|p| p.terms()[0].0.clone()).collect())
    } else {
        None
    }
}

/// Submodule membership `h ∈ N`.
pub fn membership(h: &[Polynomial], n: &Submodule) -> Result<bool> {
    if h.len() != n.nrows() {
        return Err(Error::DimensionMismatch {
            expected: n.nrows(),
            found: h.len(),
        });
    }
    for p in h {
        n.ring().check_same(p.ring())?;
    }
    if let Some(gens) = monomial_ideal_fast_path(n) {
        return Ok(h[0]
            .terms()
            .iter()
            .all(|(e, _)| gens.iter().any(|g| g.divides(e))));
    }
    groebner_basis(n, ModuleOrder::default()).contains(h)
}

pub fn ideal_membership(f: &Polynomial, i: &Ideal) -> Result<bool> {
    membership(std::slice::from_ref(f), &i.to_module())
}

/// `a ⊆ b`.
pub fn is_submodule(a: &Submodule, b: &Submodule) -> Result<bool> {
    a.ring().check_same(b.ring())?;
    if a.nrows() != b.nrows() {
        return Err(Error::DimensionMismatch {
            expected: b.nrows(),
            found: a.nrows(),
        });
    }
    groebner_basis(b, ModuleOrder::default()).contains_all(a)
}

/// Module equality by double inclusion.
pub fn module_eq(a: &Submodule, b: &Submodule) -> Result<bool> {
    Ok(is_submodule(a, b)? && is_submodule(b, a)?)
}

pub fn ideal_eq(a: &Ideal, b: &Ideal) -> Result<bool> {
    module_eq(&a.to_module(), &b.to_module())
}

/// Generators of `{v : A v = 0}`.
pub fn syzygy_kernel(a: &PolyMatrix) -> PolyMatrix {
    let ring = a.ring();
    let (p, m) = (a.nrows(), a.ncols());
    let order = ModuleOrder::position_over_term(MonomialOrder::GrevLex);
    let mut vs = Vec::with_capacity(m);
    for j in 0..m {
        let mut col = a.column(j);
        for k in 0..m {
            col.push(if k == j {
                Polynomial::one(ring)
            } else {
                Polynomial::zero(ring)
            });
        }
        vs.push(to_vector(&col, &order, None));
    }
    let basis = compute_basis(vs, order, p + m);
    let cols: Vec<Vec<Polynomial>> = basis
        .iter()
        .filter(|v| v[0].pos >= p)
        .map(|v| from_vector(v, ring, p + m).split_off(p))
        .collect();
    PolyMatrix::from_columns(ring, m, cols).expect("consistent shape")
}

/// Generators of `A ∩ B`, via `t A + (1 - t) B` with `t` eliminated.
pub fn intersect(a: &Submodule, b: &Submodule) -> Result<Submodule> {
    a.ring().check_same(b.ring())?;
    if a.nrows() != b.nrows() {
        return Err(Error::DimensionMismatch {
            expected: a.nrows(),
            found: b.nrows(),
        });
    }
    let ring = a.ring();
    let p = a.nrows();
    let ext = ring.with_leading_var("_t");
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&t);
    let order = ModuleOrder::term_over_position(MonomialOrder::Elimination(1));
    let mut vs = Vec::new();
    for c in a.columns() {
        let lifted: Vec<Polynomial> = c.iter().map(|q| q.lift_leading(&ext, 1).mul(&t)).collect();
        vs.push(to_vector(&lifted, &order, None));
    }
    for c in b.columns() {
        let lifted: Vec<Polynomial> = c
            .iter()
            .map(|q| q.lift_leading(&ext, 1).mul(&one_minus_t))
            .collect();
        vs.push(to_vector(&lifted, &order, None));
    }
    let basis = compute_basis(vs, order, p);
    let cols: Vec<Vec<Polynomial>> = basis
        .iter()
        .filter(|v| v.iter().all(|t| t.exp.0[0] == 0))
        .map(|v| {
            from_vector(v, &ext, p)
                .iter()
                .map(|q| q.drop_leading(ring, 1))
                .collect()
        })
        .collect();
    PolyMatrix::from_columns(ring, p, cols)
}

pub fn intersect_ideals(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let m = intersect(&a.to_module(), &b.to_module())?;
    Ideal::new(a.ring(), m.row(0))
}

/// `I : f`.
pub fn colon(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    i.ring().check_same(f.ring())?;
    if f.is_zero() {
        return Err(Error::InvalidInput("colon by the zero polynomial".into()));
    }
    let principal = Ideal::new(i.ring(), vec![f.clone()])?;
    let inter = intersect_ideals(i, &principal)?;
    let gens = inter
        .gens()
        .iter()
        .map(|g| g.div_exact(f).expect("element of (f) is divisible by f"))
        .collect();
    Ideal::new(i.ring(), gens)
}

/// `I : f^∞`, by iterated colon ideals until two consecutive ones agree.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::InvalidInput("saturation by the zero polynomial".into()));
    }
    let mut cur = ideal_basis(i, ModuleOrder::default());
    loop {
        if cur.is_unit() || cur.is_empty() {
            return Ok(cur.to_ideal());
        }
        let next = ideal_basis(&colon(&cur.to_ideal(), f)?, ModuleOrder::default());
        if next == cur {
            return Ok(cur.to_ideal());
        }
        cur = next;
    }
}

/// Vector-space dimension of `R^p / N`.
pub fn colength(n: &Submodule) -> Colength {
    groebner_basis(n, ModuleOrder::default()).colength()
}

/// Outcome of the truncation scheme behind [`local_colength`].
#[derive(Clone, Debug)]
pub struct LocalQuotient {
    /// Length of `R^p / N` localized at the origin.
    pub length: u64,
    /// Truncation degree `k` at which `N + m^k R^p` stabilized.
    pub degree: u32,
    basis: GroebnerBasis,
}

impl LocalQuotient {
    /// Local membership: `h ∈ N` after localizing at the origin.
    pub fn contains(&self, h: &[Polynomial]) -> Result<bool> {
        self.basis.contains(h)
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }
}

/// Stabilized colength of `N + m^k R^p`; errors when `k` would exceed `cap`.
pub fn local_quotient(n: &Submodule, cap: u32) -> Result<LocalQuotient> {
    let mut k = n.max_degree() + 1;
    if k > cap {
        return Err(Error::NoStabilization { cap });
    }
    let mut basis = truncated_basis(n, k);
    let mut prev = basis.colength().finite().expect("truncated quotient is finite");
    loop {
        if k + 1 > cap {
            return Err(Error::NoStabilization { cap });
        }
        let next_basis = truncated_basis(n, k + 1);
        let next = next_basis.colength().finite().expect("truncated quotient is finite");
        if next == prev {
            return Ok(LocalQuotient {
                length: prev,
                degree: k,
                basis,
            });
        }
        prev = next;
        basis = next_basis;
        k += 1;
    }
}

/// Length of `R^p / N` localized at the origin.
pub fn local_colength(n: &Submodule) -> Result<Colength> {
    local_colength_with_cap(n, DEFAULT_TRUNCATION_CAP)
}

pub fn local_colength_with_cap(n: &Submodule, cap: u32) -> Result<Colength> {
    Ok(Colength::Finite(local_quotient(n, cap)?.length))
}

/// Membership after localizing at the origin when `N` has finite local
/// colength; plain membership otherwise.
pub fn local_membership(h: &[Polynomial], n: &Submodule) -> Result<bool> {
    match local_quotient(n, DEFAULT_TRUNCATION_CAP) {
        Ok(q) => q.contains(h),
        Err(Error::NoStabilization { .. }) => membership(h, n),
        Err(e) => Err(e),
    }
}

/// `a ⊆ b` after localizing at the origin; falls back to global inclusion
/// when `b` has no finite local colength below the default cap.
pub fn local_is_submodule(a: &Submodule, b: &Submodule) -> Result<bool> {
    a.ring().check_same(b.ring())?;
    if a.nrows() != b.nrows() {
        return Err(Error::DimensionMismatch {
            expected: b.nrows(),
            found: a.nrows(),
        });
    }
    match local_quotient(b, DEFAULT_TRUNCATION_CAP) {
        Ok(q) => {
            for c in a.columns() {
                if !q.contains(&c)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Err(Error::NoStabilization { .. }) => is_submodule(a, b),
        Err(e) => Err(e),
    }
}

pub fn local_module_eq(a: &Submodule, b: &Submodule) -> Result<bool> {
    Ok(local_is_submodule(a, b)? && local_is_submodule(b, a)?)
}

pub fn local_ideal_eq(a: &Ideal, b: &Ideal) -> Result<bool> {
    local_module_eq(&a.to_module(), &b.to_module())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Ring {
        Ring::new(&["x", "y"])
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::parse(&xy(), gens).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, &xy()).unwrap()
    }

    #[test]
    fn basis_examples() {
        let g = ideal_basis(&ideal(&["y^2", "x+y"]), ModuleOrder::default()).to_ideal();
        assert_eq!(g.gens().len(), 2);
        assert!(g.gens().contains(&p("x+y")));
        assert!(g.gens().contains(&p("y^2")));

        let g = ideal_basis(&ideal(&["x", "y", "x^2+y"]), ModuleOrder::default());
        assert_eq!(g.len(), 2);
        assert!(g.leading_terms().iter().all(|(e, _)| e.degree() == 1));
    }

    #[test]
    fn s_vectors_reduce_to_zero() {
        // Buchberger criterion as its own oracle
        let i = ideal(&["x^2-x*y", "x*y-y^2"]);
        let g = ideal_basis(&i, ModuleOrder::default());
        let gens = g.to_ideal();
        for a in gens.gens() {
            for b in gens.gens() {
                let (ea, ca) = a.leading().unwrap().clone();
                let (eb, cb) = b.leading().unwrap().clone();
                let l = ea.lcm(&eb);
                let s = a
                    .mul_term(&l.div(&ea), &cb)
                    .sub(&b.mul_term(&l.div(&eb), &ca));
                assert!(g.reduce(&[s]).unwrap()[0].is_zero());
            }
        }
        assert!(g.contains(&[p("x^2-y^2")]).unwrap());
        // normal form idempotent
        let f = p("x^3 + 2*x*y + 7");
        let nf = g.reduce(&[f]).unwrap();
        assert_eq!(g.reduce(&nf).unwrap(), nf);
    }

    #[test]
    fn membership_examples() {
        assert!(ideal_membership(&p("x*y"), &ideal(&["x^2", "x+y"])).unwrap());
        let mut gens = vec!["x*(x+y)", "y*(x+y)"];
        gens.extend(["x^3", "x^2*y", "x*y^2", "y^3"]);
        assert!(!ideal_membership(&p("x^2"), &ideal(&gens)).unwrap());
        assert!(ideal_membership(&p("x^2*y"), &ideal(&["x^2", "y^3"])).unwrap());
        assert!(membership(&[p("x"), p("y")], &ideal(&["x"]).to_module()).is_err());
    }

    #[test]
    fn syzygy_examples() {
        let r = xy();
        let a = PolyMatrix::parse(&r, &[vec!["x", "y"]]).unwrap();
        let k = syzygy_kernel(&a);
        assert_eq!(k.ncols(), 1);
        let expect = PolyMatrix::parse(&r, &[vec!["-y"], vec!["x"]]).unwrap();
        assert!(module_eq(&k, &expect).unwrap());

        let a = PolyMatrix::parse(&r, &[vec!["x^2", "x+y"]]).unwrap();
        let k = syzygy_kernel(&a);
        let expect = PolyMatrix::parse(&r, &[vec!["x+y"], vec!["-x^2"]]).unwrap();
        assert!(module_eq(&k, &expect).unwrap());
        for c in k.columns() {
            assert!(a.apply(&c).unwrap().iter().all(Polynomial::is_zero));
        }

        let a = PolyMatrix::parse(&r, &[vec!["x"], vec!["y"]]).unwrap();
        assert_eq!(syzygy_kernel(&a).ncols(), 0);
    }

    #[test]
    fn intersection_examples() {
        let i = intersect_ideals(&ideal(&["x"]), &ideal(&["y"])).unwrap();
        assert!(ideal_eq(&i, &ideal(&["x*y"])).unwrap());
        let i = intersect_ideals(&ideal(&["x^2", "y"]), &ideal(&["x", "y^2"])).unwrap();
        assert!(ideal_eq(&i, &ideal(&["x^2", "x*y", "y^2"])).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let xy_ = p("x*y");
        assert!(ideal_basis(&saturate(&ideal(&["x^2*y"]), &xy_).unwrap(), ModuleOrder::default()).is_unit());
        let s = saturate(&ideal(&["x+y"]), &xy_).unwrap();
        assert!(ideal_eq(&s, &ideal(&["x+y"])).unwrap());
        let s = saturate(&ideal(&["x^2+y^5"]), &xy_).unwrap();
        assert!(ideal_eq(&s, &ideal(&["x^2+y^5"])).unwrap());
    }

    #[test]
    fn colength_examples() {
        assert_eq!(colength(&ideal(&["x^3", "x^2*y^2", "y^3"]).to_module()), Colength::Finite(8));
        assert_eq!(colength(&ideal(&["y^2", "x+y"]).to_module()), Colength::Finite(2));
        assert_eq!(colength(&ideal(&["x", "y"]).to_module()), Colength::Finite(1));
        assert_eq!(colength(&ideal(&["x^2"]).to_module()), Colength::Infinite);
    }

    #[test]
    fn local_colength_examples() {
        let m = ideal(&["x+y", "y^2"]).to_module();
        assert_eq!(local_colength(&m).unwrap(), Colength::Finite(2));
        let m = ideal(&["x*(x-1)", "y"]).to_module();
        assert_eq!(colength(&m), Colength::Finite(2));
        assert_eq!(local_colength(&m).unwrap(), Colength::Finite(1));
        let m = Ideal::maximal_power(&xy(), 3).to_module();
        assert_eq!(local_colength(&m).unwrap(), Colength::Finite(6));
        let m = ideal(&["x^2"]).to_module();
        assert_eq!(
            local_colength_with_cap(&m, 12).unwrap_err(),
            Error::NoStabilization { cap: 12 }
        );
    }

    #[test]
    fn module_colength() {
        let r = xy();
        // R^2 / (x e1, y e1, x e2 + y e1, y^2 e2): standard pairs 1*e1, 1*e2, y*e2
        let m = PolyMatrix::parse(&r, &[vec!["x", "y", "y", "0"], vec!["0", "0", "x", "y^2"]]).unwrap();
        assert_eq!(colength(&m), Colength::Finite(3));
        assert_eq!(local_colength(&m).unwrap(), Colength::Finite(3));
    }
}
