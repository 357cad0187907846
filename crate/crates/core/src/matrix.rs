//! Polynomial matrices, submodules of free modules and ideals.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

/// A `p x m` matrix of polynomials, row-major.
///
/// Used as a submodule of `R^p`: the columns are the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

/// Submodule of `R^p` given by a (possibly redundant) generator matrix.
pub type Submodule = PolyMatrix;

impl PolyMatrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            for e in row {
                ring.check_same(e.ring())?;
                data.push(e);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Builds a `rows x cols.len()` matrix whose columns are the given vectors.
    pub fn from_columns(ring: &Ring, rows: usize, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        let mut m = PolyMatrix::zeros(ring, rows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, e) in col.into_iter().enumerate() {
                ring.check_same(e.ring())?;
                m.set(i, j, e);
            }
        }
        Ok(m)
    }

    /// Parses a row-major array of polynomial strings.
    pub fn parse<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Polynomial::parse(s.as_ref(), ring))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::from_rows(ring, parsed)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.ring.check_same(&other.ring)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        PolyMatrix::from_columns(&self.ring, self.rows, cols)
    }

    /// `[self | h]`.
    pub fn with_column(&self, h: &[Polynomial]) -> Result<PolyMatrix> {
        if h.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: h.len(),
            });
        }
        let mut cols = self.columns();
        cols.push(h.to_vec());
        PolyMatrix::from_columns(&self.ring, self.rows, cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Result<PolyMatrix> {
        for &r in rows {
            if r >= self.rows {
                return Err(Error::IndexOutOfRange {
                    index: r,
                    bound: self.rows,
                });
            }
        }
        let data = rows.iter().flat_map(|&r| self.row(r)).collect();
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: self.cols,
            data,
        })
    }

    pub fn select_cols(&self, cols: &[usize]) -> PolyMatrix {
        let c = cols.iter().map(|&j| self.column(j)).collect();
        PolyMatrix::from_columns(&self.ring, self.rows, c).expect("consistent shape")
    }

    /// Drops zero columns and repeated columns.
    pub fn compact_columns(&self) -> PolyMatrix {
        let mut seen: Vec<Vec<Polynomial>> = Vec::new();
        for c in self.columns() {
            if c.iter().all(Polynomial::is_zero) || seen.contains(&c) {
                continue;
            }
            seen.push(c);
        }
        PolyMatrix::from_columns(&self.ring, self.rows, seen).expect("consistent shape")
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Polynomial::zero(&self.ring), |acc, j| {
                    acc.add(&self.get(i, j).mul(&v[j]))
                })
            })
            .collect())
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Applies `f` entrywise where the result may live in another ring.
    pub fn map_into(&self, ring: &Ring, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<PolyMatrix> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Rows as strings, for reports.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.to_string()).collect())
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.data.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Ideal given by generators; zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            ring.check_same(g.ring())?;
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Self> {
        let g = gens
            .iter()
            .map(|s| Polynomial::parse(s.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, g)
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
        }
    }

    /// The maximal ideal `(x_1, ..., x_n)` raised to the power `k`.
    pub fn maximal_power(ring: &Ring, k: u32) -> Self {
        let m = Ideal {
            ring: ring.clone(),
            gens: (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect(),
        };
        m.power(k)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut out = Ideal::unit(&self.ring);
        for _ in 0..k {
            out = out.product(self);
        }
        out
    }

    /// The ideal as a `1 x m` submodule of `R^1`.
    pub fn to_module(&self) -> Submodule {
        PolyMatrix::from_rows(&self.ring, vec![self.gens.clone()]).expect("single row")
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}
