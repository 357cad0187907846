//! Newton polyhedra `conv(S) + R^n_+` in dimension at most 3.
//!
//! A polyhedron is stored through its facets (inequalities `w . k >= c` with
//! `w >= 0` primitive) and its vertices. Compact faces carry a strictly
//! positive witness weight whose minimizing face is exactly that face.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::matrix::Ideal;
use crate::poly::{ExponentVector, Polynomial, Ring, WeightVector};

pub const MAX_DIMENSION: usize = 3;

/// Supporting inequality `normal . k >= level`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<u64>,
    pub level: u64,
}

impl Facet {
    fn value(&self, k: &[u32]) -> u64 {
        self.normal.iter().zip(k).map(|(a, &b)| a * b as u64).sum()
    }

    fn is_compact_direction_free(&self) -> bool {
        self.normal.iter().all(|&a| a > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactFace {
    pub vertices: Vec<ExponentVector>,
    pub dim: usize,
    pub witness: WeightVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    vertices: Vec<ExponentVector>,
    facets: Vec<Facet>,
    faces: Vec<CompactFace>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Covolume {
    Finite(BigRational),
    Infinite,
}

/// Monomial ideal given by its minimal exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Keeps only the minimal elements of `exps`.
    pub fn new(dim: usize, exps: Vec<ExponentVector>) -> Result<Self> {
        for e in &exps {
            if e.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: e.len(),
                });
            }
        }
        let set: BTreeSet<ExponentVector> = exps.into_iter().collect();
        let all: Vec<ExponentVector> = set.into_iter().collect();
        let gens = all
            .iter()
            .filter(|e| !all.iter().any(|f| f != *e && f.divides(e)))
            .cloned()
            .collect();
        Ok(MonomialIdeal { dim, gens })
    }

    /// `None` when some generator is not a monomial.
    pub fn from_ideal(i: &Ideal) -> Option<Self> {
        if !i.is_monomial() {
            return None;
        }
        let exps = i.gens().iter().map(|g| g.terms()[0].0.clone()).collect();
        MonomialIdeal::new(i.ring().nvars(), exps).ok()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(e))
    }

    pub fn to_ideal(&self, ring: &Ring) -> Result<Ideal> {
        if ring.nvars() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: ring.nvars(),
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|e| Polynomial::monomial(ring, e.clone(), BigRational::from_integer(1.into())))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn newton_polyhedron(&self) -> Result<NewtonPolyhedron> {
        newton_polyhedron(&self.gens)
    }
}

/// Support of all generators.
pub fn ideal_support(i: &Ideal) -> Vec<ExponentVector> {
    let set: BTreeSet<ExponentVector> = i.gens().iter().flat_map(|g| g.support()).collect();
    set.into_iter().collect()
}

pub fn newton_polyhedron_of_ideal(i: &Ideal) -> Result<NewtonPolyhedron> {
    if i.is_zero() {
        return Err(Error::ZeroInput);
    }
    newton_polyhedron(&ideal_support(i))
}

fn minimal_points(points: &[ExponentVector]) -> Vec<ExponentVector> {
    let set: BTreeSet<ExponentVector> = points.iter().cloned().collect();
    let all: Vec<ExponentVector> = set.into_iter().collect();
    all.iter()
        .filter(|e| !all.iter().any(|f| f != *e && f.divides(e)))
        .cloned()
        .collect()
}

fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &a| acc.gcd(&a));
    if g == 0 {
        v
    } else {
        v.into_iter().map(|a| a / g).collect()
    }
}

fn facets_2d(pts: &[ExponentVector]) -> Vec<Facet> {
    // minimal points sorted by x ascending have y descending
    let mut sorted: Vec<&ExponentVector> = pts.iter().collect();
    sorted.sort_by_key(|e| e.0[0]);
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for e in sorted {
        let p = (e.0[0] as i64, e.0[1] as i64);
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut facets = vec![
        Facet {
            normal: vec![1, 0],
            level: hull[0].0 as u64,
        },
        Facet {
            normal: vec![0, 1],
            level: hull[hull.len() - 1].1 as u64,
        },
    ];
    for w in hull.windows(2) {
        let n = primitive(vec![w[0].1 - w[1].1, w[1].0 - w[0].0]);
        let normal: Vec<u64> = n.iter().map(|&a| a as u64).collect();
        let level = normal[0] * w[0].0 as u64 + normal[1] * w[0].1 as u64;
        facets.push(Facet { normal, level });
    }
    facets
}

fn cross3(u: &[i64; 3], v: &[i64; 3]) -> [i64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

/// Every plane through a point of the support spanned by two of
/// {point differences, unit vectors} with a nonnegative normal that leaves
/// all points on one side. Quadratic in the number of points per base point,
/// which is ample for exponent sets of a few dozen points.
fn facets_3d(pts: &[ExponentVector]) -> Vec<Facet> {
    let coords: Vec<[i64; 3]> = pts
        .iter()
        .map(|e| [e.0[0] as i64, e.0[1] as i64, e.0[2] as i64])
        .collect();
    let mut found: BTreeSet<Facet> = BTreeSet::new();
    for base in &coords {
        let mut dirs: Vec<[i64; 3]> = vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for q in &coords {
            if q != base {
                dirs.push([q[0] - base[0], q[1] - base[1], q[2] - base[2]]);
            }
        }
        for i in 0..dirs.len() {
            for j in i + 1..dirs.len() {
                let c = cross3(&dirs[i], &dirs[j]);
                if c == [0, 0, 0] {
                    continue;
                }
                let c = if c.iter().all(|&a| a >= 0) {
                    c
                } else if c.iter().all(|&a| a <= 0) {
                    [-c[0], -c[1], -c[2]]
                } else {
                    continue;
                };
                let n = primitive(c.to_vec());
                let level: i64 = (0..3).map(|k| n[k] * base[k]).sum();
                if coords
                    .iter()
                    .all(|q| (0..3).map(|k| n[k] * q[k]).sum::<i64>() >= level)
                {
                    found.insert(Facet {
                        normal: n.iter().map(|&a| a as u64).collect(),
                        level: level as u64,
                    });
                }
            }
        }
    }
    found.into_iter().collect()
}

/// Rank of a small integer matrix by fraction-free elimination.
fn int_rank(rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&a| a as i128).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let (a, b) = (m[rank][col], m[r][col]);
                for c in 0..ncols {
                    m[r][c] = m[r][c] * a - m[rank][c] * b;
                }
                let g = m[r].iter().fold(0i128, |acc, &x| acc.gcd(&x));
                if g > 1 {
                    for x in m[r].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Newton polyhedron of a finite support set.
pub fn newton_polyhedron(support: &[ExponentVector]) -> Result<NewtonPolyhedron> {
    let Some(first) = support.first() else {
        return Err(Error::EmptySupport);
    };
    let n = first.len();
    for e in support {
        if e.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: e.len(),
            });
        }
    }
    if n == 0 || n > MAX_DIMENSION {
        return Err(Error::UnsupportedDimension(n));
    }
    let pts = minimal_points(support);
    let facets = match n {
        1 => vec![Facet {
            normal: vec![1],
            level: pts[0].0[0] as u64,
        }],
        2 => facets_2d(&pts),
        _ => facets_3d(&pts),
    };
    let tight = |p: &ExponentVector| -> Vec<usize> {
        (0..facets.len())
            .filter(|&f| facets[f].value(&p.0) == facets[f].level)
            .collect()
    };
    let vertices: Vec<ExponentVector> = pts
        .iter()
        .filter(|p| {
            let normals: Vec<Vec<u64>> = tight(p).iter().map(|&f| facets[f].normal.clone()).collect();
            int_rank(&normals) == n
        })
        .cloned()
        .collect();

    // candidate vertex sets: facets, pairwise facet intersections, vertices
    let on = |f: usize| -> BTreeSet<usize> {
        (0..vertices.len())
            .filter(|&v| facets[f].value(&vertices[v].0) == facets[f].level)
            .collect()
    };
    let facet_vertices: Vec<BTreeSet<usize>> = (0..facets.len()).map(on).collect();
    let mut candidates: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (a, va) in facet_vertices.iter().enumerate() {
        candidates.insert(va.iter().copied().collect());
        for vb in &facet_vertices[a + 1..] {
            candidates.insert(va.intersection(vb).copied().collect());
        }
    }
    for v in 0..vertices.len() {
        candidates.insert(vec![v]);
    }
    let mut faces = Vec::new();
    for cand in candidates {
        if cand.is_empty() {
            continue;
        }
        let containing: Vec<usize> = (0..facets.len())
            .filter(|&f| cand.iter().all(|v| facet_vertices[f].contains(v)))
            .collect();
        let compact = (0..n).all(|i| containing.iter().any(|&f| facets[f].normal[i] > 0));
        if !compact {
            continue;
        }
        let normals: Vec<Vec<u64>> = containing.iter().map(|&f| facets[f].normal.clone()).collect();
        let dim = n - int_rank(&normals);
        let mut witness = vec![0u64; n];
        for nm in &normals {
            for (w, a) in witness.iter_mut().zip(nm) {
                *w += a;
            }
        }
        faces.push(CompactFace {
            vertices: cand.iter().map(|&v| vertices[v].clone()).collect(),
            dim,
            witness: WeightVector::new(witness).expect("compact face has a positive witness"),
        });
    }
    faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));

    Ok(NewtonPolyhedron {
        dim: n,
        vertices,
        facets,
        faces,
    })
}

impl NewtonPolyhedron {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices in increasing lexicographic order.
    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Compact faces ordered by dimension, vertices included.
    pub fn compact_faces(&self) -> &[CompactFace] {
        &self.faces
    }

    /// Whether every coordinate axis meets the polyhedron.
    pub fn meets_all_axes(&self) -> bool {
        (0..self.dim).all(|i| {
            self.vertices
                .iter()
                .any(|v| v.0.iter().enumerate().all(|(j, &a)| j == i || a == 0))
        })
    }

    pub fn vertex_bounds(&self) -> Vec<u32> {
        (0..self.dim)
            .map(|i| self.vertices.iter().map(|v| v.0[i]).max().unwrap_or(0))
            .collect()
    }
}

pub fn minkowski_sum(p: &NewtonPolyhedron, q: &NewtonPolyhedron) -> Result<NewtonPolyhedron> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim,
            found: q.dim,
        });
    }
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            sums.push(a.mul(b));
        }
    }
    newton_polyhedron(&sums)
}

pub fn contains_point(p: &NewtonPolyhedron, k: &ExponentVector) -> Result<bool> {
    if k.len() != p.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim,
            found: k.len(),
        });
    }
    Ok(p.facets.iter().all(|f| f.value(&k.0) >= f.level))
}

/// Monomials whose exponents lie in `P`.
pub fn term_ideal(p: &NewtonPolyhedron) -> MonomialIdeal {
    let bounds = p.vertex_bounds();
    let n = p.dim;
    let inside = |k: &[u32]| p.facets.iter().all(|f| f.value(k) >= f.level);
    let mut gens = Vec::new();
    let mut cur = vec![0u32; n];
    'outer: loop {
        if inside(&cur) {
            let minimal = (0..n).all(|i| {
                if cur[i] == 0 {
                    return true;
                }
                let mut d = cur.clone();
                d[i] -= 1;
                !inside(&d)
            });
            if minimal {
                gens.push(ExponentVector(cur.clone()));
            }
        }
        for i in 0..n {
            if cur[i] < bounds[i] {
                cur[i] += 1;
                continue 'outer;
            }
            cur[i] = 0;
        }
        break;
    }
    MonomialIdeal::new(n, gens).expect("consistent dimension")
}

fn det2(a: &[u32], b: &[u32]) -> i128 {
    a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128
}

fn det3(a: &[u32], b: &[u32], c: &[u32]) -> i128 {
    let (a, b, c) = (
        a.iter().map(|&x| x as i128).collect::<Vec<_>>(),
        b.iter().map(|&x| x as i128).collect::<Vec<_>>(),
        c.iter().map(|&x| x as i128).collect::<Vec<_>>(),
    );
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// Vertices of a planar polygon in cyclic order, via a 2D hull of a
/// coordinate projection that is injective on the facet plane.
fn cyclic_order(vs: &[ExponentVector], normal: &[u64]) -> Vec<ExponentVector> {
    let drop = (0..3).max_by_key(|&i| normal[i]).expect("three coordinates");
    let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
    let mut pts: Vec<(i64, i64, usize)> = vs
        .iter()
        .enumerate()
        .map(|(idx, v)| (v.0[keep[0]] as i64, v.0[keep[1]] as i64, idx))
        .collect();
    pts.sort();
    if pts.len() < 3 {
        return pts.iter().map(|p| vs[p.2].clone()).collect();
    }
    let cross = |o: (i64, i64, usize), a: (i64, i64, usize), b: (i64, i64, usize)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(i64, i64, usize)> = Vec::new();
    for pass in [pts.clone(), pts.iter().rev().copied().collect()] {
        let start = hull.len();
        for p in pass {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull.iter().map(|p| vs[p.2].clone()).collect()
}

/// Volume of `R^n_+ \ P`.
pub fn covolume(p: &NewtonPolyhedron) -> Covolume {
    if !p.meets_all_axes() {
        return Covolume::Infinite;
    }
    let mut twice_or_six: i128 = 0;
    let denom: i128 = match p.dim {
        1 => return Covolume::Finite(BigRational::from_integer(p.vertices[0].0[0].into())),
        2 => 2,
        _ => 6,
    };
    for f in &p.facets {
        if f.level == 0 || !f.is_compact_direction_free() {
            continue;
        }
        let vs: Vec<ExponentVector> = p
            .vertices
            .iter()
            .filter(|v| f.value(&v.0) == f.level)
            .cloned()
            .collect();
        if p.dim == 2 {
            if vs.len() == 2 {
                twice_or_six += det2(&vs[0].0, &vs[1].0).abs();
            }
        } else {
            let ring = cyclic_order(&vs, &f.normal);
            for k in 1..ring.len().saturating_sub(1) {
                twice_or_six += det3(&ring[0].0, &ring[k].0, &ring[k + 1].0).abs();
            }
        }
    }
    Covolume::Finite(BigRational::new(twice_or_six.into(), denom.into()))
}

/// `n! * covolume`, the multiplicity of the term ideal.
pub fn normalized_covolume(p: &NewtonPolyhedron) -> Option<u64> {
    match covolume(p) {
        Covolume::Infinite => None,
        Covolume::Finite(v) => {
            let fact: u64 = (1..=p.dim as u64).product();
            let scaled = v * BigRational::from_integer(fact.into());
            debug_assert!(scaled.is_integer());
            scaled.to_integer().to_u64()
        }
    }
}

pub fn compact_faces_max_dim(p: &NewtonPolyhedron) -> usize {
    p.faces.iter().map(|f| f.dim).max().unwrap_or(0)
}

pub fn polyhedra_equal(p: &NewtonPolyhedron, q: &NewtonPolyhedron) -> Result<bool> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim,
            found: q.dim,
        });
    }
    Ok(p.vertices == q.vertices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector(v.to_vec())
    }

    fn poly2(pts: &[[u32; 2]]) -> NewtonPolyhedron {
        newton_polyhedron(&pts.iter().map(|p| ev(p)).collect::<Vec<_>>()).unwrap()
    }

    fn verts(p: &NewtonPolyhedron) -> Vec<Vec<u32>> {
        p.vertices().iter().map(|v| v.0.clone()).collect()
    }

    #[test]
    fn hull_examples() {
        let p = poly2(&[[2, 1], [1, 3], [2, 0], [0, 5]]);
        assert_eq!(verts(&p), vec![vec![0, 5], vec![2, 0]]);
        assert_eq!(p.compact_faces().iter().filter(|f| f.dim == 1).count(), 1);
        let edge = p.compact_faces().iter().find(|f| f.dim == 1).unwrap();
        assert_eq!(edge.witness.entries(), &[5, 2]);

        let p = poly2(&[[6, 0], [1, 3], [0, 6], [3, 2], [2, 3]]);
        assert_eq!(verts(&p), vec![vec![0, 6], vec![1, 3], vec![6, 0]]);
        assert_eq!(compact_faces_max_dim(&p), 1);

        let p = poly2(&[[3, 4]]);
        assert_eq!(verts(&p), vec![vec![3, 4]]);
        assert_eq!(compact_faces_max_dim(&p), 0);
        assert_eq!(p.compact_faces()[0].witness.entries(), &[1, 1]);
    }

    #[test]
    fn minkowski_examples() {
        let a = poly2(&[[5, 0], [1, 1], [0, 5]]);
        let b = poly2(&[[1, 0], [0, 1]]);
        let s = minkowski_sum(&a, &b).unwrap();
        assert_eq!(verts(&s), vec![vec![0, 6], vec![1, 2], vec![2, 1], vec![6, 0]]);
        let s = minkowski_sum(&a, &poly2(&[[0, 0]])).unwrap();
        assert!(polyhedra_equal(&s, &a).unwrap());
        let s = minkowski_sum(&poly2(&[[2, 0], [0, 1]]), &poly2(&[[1, 0], [0, 2]])).unwrap();
        assert_eq!(verts(&s), vec![vec![0, 3], vec![1, 1], vec![3, 0]]);
    }

    #[test]
    fn containment_examples() {
        let p = poly2(&[[2, 0], [0, 5]]);
        assert!(contains_point(&p, &ev(&[1, 3])).unwrap());
        assert!(!contains_point(&p, &ev(&[1, 1])).unwrap());
        for v in p.vertices() {
            assert!(contains_point(&p, v).unwrap());
        }
        assert!(contains_point(&p, &ev(&[1])).is_err());
    }

    #[test]
    fn term_ideal_examples() {
        let t = term_ideal(&poly2(&[[3, 0], [2, 2], [0, 3]]));
        let g: Vec<Vec<u32>> = t.gens().iter().map(|e| e.0.clone()).collect();
        assert_eq!(g, vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]);
        let t = term_ideal(&poly2(&[[6, 0], [1, 3], [0, 6]]));
        let g: Vec<Vec<u32>> = t.gens().iter().map(|e| e.0.clone()).collect();
        assert_eq!(g, vec![vec![0, 6], vec![1, 3], vec![3, 2], vec![5, 1], vec![6, 0]]);
        let t = term_ideal(&poly2(&[[2, 3]]));
        assert_eq!(t.gens(), &[ev(&[2, 3])]);
    }

    #[test]
    fn covolume_examples() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(covolume(&poly2(&[[1, 0], [0, 1]])), Covolume::Finite(half));
        assert_eq!(normalized_covolume(&poly2(&[[5, 0], [1, 1], [0, 5]])), Some(10));
        assert_eq!(normalized_covolume(&poly2(&[[2, 0], [0, 5]])), Some(10));
        assert_eq!(covolume(&poly2(&[[2, 0], [1, 1]])), Covolume::Infinite);
    }

    #[test]
    fn equality_examples() {
        let a = poly2(&[[3, 0], [2, 2], [0, 3]]);
        let b = poly2(&[[3, 0], [0, 3]]);
        assert!(polyhedra_equal(&a, &b).unwrap());
        let a = poly2(&[[2, 0], [0, 5]]);
        let b = poly2(&[[2, 0], [1, 3], [0, 5]]);
        assert!(polyhedra_equal(&a, &b).unwrap());
    }

    #[test]
    fn three_dimensional() {
        // m in three variables: one compact triangle, covolume 1/6
        let p = newton_polyhedron(&[ev(&[1, 0, 0]), ev(&[0, 1, 0]), ev(&[0, 0, 1])]).unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(compact_faces_max_dim(&p), 2);
        assert_eq!(normalized_covolume(&p), Some(1));
        // xyz lies above the plane x + y + z = 2
        let p = newton_polyhedron(&[ev(&[2, 0, 0]), ev(&[0, 2, 0]), ev(&[0, 0, 2]), ev(&[1, 1, 1])]).unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(normalized_covolume(&p), Some(8));
        // (x^4, y^4, z^4, xyz) has xyz as a vertex below the plane x+y+z=4
        let p = newton_polyhedron(&[ev(&[4, 0, 0]), ev(&[0, 4, 0]), ev(&[0, 0, 4]), ev(&[1, 1, 1])]).unwrap();
        assert_eq!(p.vertices().len(), 4);
        // three triangles through (1,1,1), each spanning a cone of volume 16/6
        assert_eq!(covolume(&p), Covolume::Finite(BigRational::new(8.into(), 1.into())));
        let t = term_ideal(&p);
        assert!(t.contains(&ev(&[1, 1, 1])));
        assert!(t.contains(&ev(&[2, 2, 0])));
        assert!(!t.contains(&ev(&[3, 0, 0])));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(newton_polyhedron(&[]), Err(Error::EmptySupport));
        assert_eq!(
            newton_polyhedron(&[ev(&[1, 1, 1, 1])]),
            Err(Error::UnsupportedDimension(4))
        );
    }
}
