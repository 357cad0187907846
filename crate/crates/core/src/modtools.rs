//! Matrix-level calculus on submodules: ranks, Fitting ideals, row
//! selections, the rank-preserving module `Z(M)` and reduction builders.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grobner::{groebner_basis, syzygy_kernel, ModuleOrder};
use crate::matrix::{Ideal, PolyMatrix, Submodule};
use crate::poly::{rat, ExponentVector, Polynomial, Ring};
use crate::polyhedra::{newton_polyhedron, MonomialIdeal};

/// Rank over the fraction field, by fraction-free Gaussian elimination.
pub fn rank(m: &PolyMatrix) -> usize {
    let (p, q) = (m.nrows(), m.ncols());
    let mut a: Vec<Vec<Polynomial>> = (0..p).map(|i| m.row(i)).collect();
    let mut prev = Polynomial::one(m.ring());
    let mut r = 0;
    while r < p.min(q) {
        // lowest-degree nonzero pivot in the trailing block
        let mut best: Option<(usize, usize, u32)> = None;
        for (i, row) in a.iter().enumerate().skip(r) {
            for (j, e) in row.iter().enumerate().skip(r) {
                if let Some(d) = e.total_degree() {
                    if best.is_none_or(|b| d < b.2) {
                        best = Some((i, j, d));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else {
            break;
        };
        a.swap(r, pi);
        for row in a.iter_mut() {
            row.swap(r, pj);
        }
        let piv = a[r][r].clone();
        for i in r + 1..p {
            for j in r + 1..q {
                let num = piv.mul(&a[i][j]).sub(&a[i][r].mul(&a[r][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][r] = Polynomial::zero(m.ring());
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Memoized Laplace expansion of minors of one matrix.
pub struct MinorCache<'a> {
    m: &'a PolyMatrix,
    memo: HashMap<(u64, u64), Polynomial>,
}

impl<'a> MinorCache<'a> {
    pub fn new(m: &'a PolyMatrix) -> Self {
        assert!(m.nrows() <= 64 && m.ncols() <= 64, "matrix too large for minor masks");
        MinorCache {
            m,
            memo: HashMap::new(),
        }
    }

    /// Determinant of the submatrix on `rows x cols` (equal lengths, sorted).
    pub fn minor(&mut self, rows: &[usize], cols: &[usize]) -> Polynomial {
        debug_assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return Polynomial::one(self.m.ring());
        }
        if rows.len() == 1 {
            return self.m.get(rows[0], cols[0]).clone();
        }
        let key = (mask(rows), mask(cols));
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut acc = Polynomial::zero(self.m.ring());
        let r0 = rows[0];
        for (k, &c) in cols.iter().enumerate() {
            let e = self.m.get(r0, c).clone();
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = self.minor(&rows[1..], &sub_cols);
            let term = e.mul(&sub);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0u64, |m, &i| m | (1 << i))
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Ideal of `i x i` minors; `(1)` for `i = 0` and `(0)` past the shape.
pub fn fitting_ideal(m: &PolyMatrix, i: usize) -> Ideal {
    let ring = m.ring();
    if i == 0 {
        return Ideal::unit(ring);
    }
    let mut cache = MinorCache::new(m);
    let mut gens = Vec::new();
    for rows in subsets(m.nrows(), i) {
        for cols in subsets(m.ncols(), i) {
            gens.push(cache.minor(&rows, &cols));
        }
    }
    Ideal::new(ring, gens).expect("same ring")
}

/// Row tuples (0-based) of size `rank(M)` carrying a nonzero maximal minor.
pub fn lambda_set(m: &PolyMatrix) -> Vec<Vec<usize>> {
    let r = rank(m);
    if r == 0 {
        return Vec::new();
    }
    subsets(m.nrows(), r)
        .into_iter()
        .filter(|rows| rank(&m.select_rows(rows).expect("valid rows")) == r)
        .collect()
}

pub fn project_rows(m: &Submodule, rows: &[usize]) -> Result<Submodule> {
    if rows.is_empty() {
        return Err(Error::InvalidInput("empty row selection".into()));
    }
    m.select_rows(rows)
}

/// Ideal generated by the entries of row `i` (0-based).
pub fn row_ideal(m: &Submodule, i: usize) -> Result<Ideal> {
    if i >= m.nrows() {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: m.nrows(),
        });
    }
    Ideal::new(m.ring(), m.row(i))
}

/// `Z(M) = {h : rank [M | h] = rank M}`, as `ker((ker M^T)^T)`, returned as a
/// reduced Gröbner basis. Full rank gives the whole free module.
pub fn z_module(m: &Submodule) -> Submodule {
    let p = m.nrows();
    if rank(m) == p {
        return PolyMatrix::identity(m.ring(), p);
    }
    let k = syzygy_kernel(&m.transpose());
    let z = syzygy_kernel(&k.transpose());
    groebner_basis(&z, ModuleOrder::default()).to_matrix()
}

/// Banded `p x (s + p - 1)` matrix with row `i` holding `a` shifted by `i`.
pub fn reduction_matrix_ap(a: &[Polynomial], p: usize) -> Result<PolyMatrix> {
    let Some(first) = a.first() else {
        return Err(Error::InvalidInput("empty generator list".into()));
    };
    if p == 0 {
        return Err(Error::InvalidInput("p must be positive".into()));
    }
    let ring = first.ring();
    let s = a.len();
    let mut out = PolyMatrix::zeros(ring, p, s + p - 1);
    for i in 0..p {
        for (k, g) in a.iter().enumerate() {
            ring.check_same(g.ring())?;
            out.set(i, i + k, g.clone());
        }
    }
    Ok(out)
}

/// For a monomial ideal in two variables: sums of the Newton vertices at odd
/// and at even positions, vertices ordered by the first exponent.
pub fn vertex_alternation_reduction(i: &MonomialIdeal, ring: &Ring) -> Result<(Polynomial, Polynomial)> {
    if i.dim() != 2 || ring.nvars() != 2 {
        return Err(Error::UnsupportedDimension(i.dim()));
    }
    if i.gens().is_empty() {
        return Err(Error::ZeroInput);
    }
    let poly = newton_polyhedron(i.gens())?;
    let mut verts: Vec<ExponentVector> = poly.vertices().to_vec();
    if verts.len() < 2 {
        return Err(Error::NotApplicable(
            "Newton polyhedron has fewer than two vertices".into(),
        ));
    }
    verts.sort_by_key(|v| v.0[0]);
    let mono = |e: &ExponentVector| Polynomial::monomial(ring, e.clone(), rat(1));
    let mut g1 = Polynomial::zero(ring);
    let mut g2 = Polynomial::zero(ring);
    for (k, v) in verts.iter().enumerate() {
        if k % 2 == 0 {
            g1 = g1.add(&mono(v));
        } else {
            g2 = g2.add(&mono(v));
        }
    }
    Ok((g1, g2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grobner::{ideal_eq, local_ideal_eq, module_eq};

    fn xy() -> Ring {
        Ring::new(&["x", "y"])
    }

    fn mat(rows: &[&[&str]]) -> PolyMatrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        PolyMatrix::parse(&xy(), &rows).unwrap()
    }

    fn exidcd() -> PolyMatrix {
        mat(&[
            &["x^2*y", "x*y^3", "x^2+y^5"],
            &["x*y^3", "x^2+y^5", "x^2*y"],
            &["x^2*y-x*y^3", "x*y^3-x^2-y^5", "x^2+y^5-x^2*y"],
        ])
    }

    fn cmnotid() -> PolyMatrix {
        mat(&[&["x^2", "y", "0"], &["0", "x", "y^2"], &["x^2", "x+y", "y^2"]])
    }

    fn irjmcb() -> PolyMatrix {
        mat(&[&["x^3", "x^2*y"], &["x*(x+y)", "y*(x+y)"]])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&exidcd()), 2);
        assert_eq!(rank(&PolyMatrix::zeros(&xy(), 2, 3)), 0);
        assert_eq!(rank(&irjmcb()), 1);
        assert_eq!(rank(&cmnotid()), 2);
        assert_eq!(rank(&PolyMatrix::identity(&xy(), 3)), 3);
    }

    #[test]
    fn fitting_examples() {
        let r = xy();
        let ex = |a: u32| {
            let xa = format!("x^{a}");
            let ya = format!("y^{a}");
            mat(&[
                &[&xa, "x*y", &ya],
                &[&ya, &xa, "x*y"],
                &[&format!("{xa}+{ya}"), &format!("x*y+{xa}"), &format!("{ya}+x*y")],
            ])
        };
        // one 2-minor is x^2*y^2 - x^a*y^a: a unit multiple of x^2*y^2 for a = 3
        let expect = Ideal::parse(&r, &["x*y^4-x^6", "x^4*y-y^6", "x^2*y^2"]).unwrap();
        assert!(local_ideal_eq(&fitting_ideal(&ex(3), 2), &expect).unwrap());
        // and identically zero for a = 2, leaving (x^3 - y^3)(x, y)
        let expect = Ideal::parse(&r, &["x*(x^3-y^3)", "y*(x^3-y^3)"]).unwrap();
        assert!(ideal_eq(&fitting_ideal(&ex(2), 2), &expect).unwrap());
        let expect = Ideal::parse(&r, &["x^3", "x^2*y^2", "y^3"]).unwrap();
        assert!(ideal_eq(&fitting_ideal(&cmnotid(), 2), &expect).unwrap());
        let one = fitting_ideal(&PolyMatrix::identity(&r, 2), 2);
        assert_eq!(one.gens(), &[Polynomial::one(&r)]);
        assert!(fitting_ideal(&cmnotid(), 4).is_zero());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_set(&exidcd()), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(lambda_set(&PolyMatrix::identity(&xy(), 2)), vec![vec![0, 1]]);
        assert_eq!(lambda_set(&irjmcb()), vec![vec![0], vec![1]]);
    }

    #[test]
    fn row_examples() {
        let i = row_ideal(&exidcd(), 0).unwrap();
        assert_eq!(i, Ideal::parse(&xy(), &["x^2*y", "x*y^3", "x^2+y^5"]).unwrap());
        let i = row_ideal(&cmnotid(), 2).unwrap();
        assert_eq!(i, Ideal::parse(&xy(), &["x^2", "x+y", "y^2"]).unwrap());
        let m = exidcd();
        assert_eq!(project_rows(&m, &[0, 1, 2]).unwrap(), m);
        assert!(row_ideal(&m, 3).is_err());
    }

    #[test]
    fn z_module_examples() {
        let expect = mat(&[&["1", "0"], &["0", "1"], &["1", "1"]]);
        assert!(module_eq(&z_module(&cmnotid()), &expect).unwrap());
        let expect = mat(&[&["x^2"], &["x+y"]]);
        assert!(module_eq(&z_module(&irjmcb()), &expect).unwrap());
        let z = z_module(&exidcd());
        for c in exidcd().columns() {
            assert!(groebner_basis(&z, ModuleOrder::default()).contains(&c).unwrap());
        }
        for c in z.columns() {
            assert_eq!(rank(&exidcd().with_column(&c).unwrap()), 2);
        }
        assert_eq!(z_module(&PolyMatrix::identity(&xy(), 2)), PolyMatrix::identity(&xy(), 2));
    }

    #[test]
    fn reduction_builders() {
        let r = xy();
        let a = Polynomial::parse("x", &r).unwrap();
        let b = Polynomial::parse("y^2", &r).unwrap();
        let m = reduction_matrix_ap(&[a.clone(), b.clone()], 2).unwrap();
        assert_eq!(m, mat(&[&["x", "y^2", "0"], &["0", "x", "y^2"]]));
        let m1 = reduction_matrix_ap(&[a.clone(), b.clone()], 1).unwrap();
        assert_eq!(m1, mat(&[&["x", "y^2"]]));
        let c = Polynomial::parse("x*y", &r).unwrap();
        let m = reduction_matrix_ap(&[a.clone(), b.clone(), c.clone()], 2).unwrap();
        let abc = Ideal::new(&r, vec![a, b, c]).unwrap();
        assert!(ideal_eq(&fitting_ideal(&m, 2), &abc.power(2)).unwrap());

        let e = |v: &[u32]| ExponentVector(v.to_vec());
        let i = MonomialIdeal::new(2, vec![e(&[0, 3]), e(&[1, 1]), e(&[3, 0])]).unwrap();
        let (g1, g2) = vertex_alternation_reduction(&i, &r).unwrap();
        assert_eq!(g1, Polynomial::parse("y^3+x^3", &r).unwrap());
        assert_eq!(g2, Polynomial::parse("x*y", &r).unwrap());
        let i = MonomialIdeal::new(2, vec![e(&[0, 2]), e(&[2, 0])]).unwrap();
        let (g1, g2) = vertex_alternation_reduction(&i, &r).unwrap();
        assert_eq!((g1.to_string(), g2.to_string()), ("y^2".into(), "x^2".into()));
        let i = MonomialIdeal::new(2, vec![e(&[2, 2])]).unwrap();
        assert!(vertex_alternation_reduction(&i, &r).is_err());
    }
}
