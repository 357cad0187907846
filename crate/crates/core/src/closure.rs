//! Integral closures of modules, Newton non-degeneracy, integral
//! decomposability, analytic spreads and the arc membership test.
//!
//! All statements are about the local ring at the origin. Closures are
//! computed with global Gröbner bases on modules that agree with their
//! localizations (direct sums of m-primary ideals intersected with `Z(M)`),
//! and comparisons go through the local helpers in [`crate::grobner`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grobner::{
    groebner_basis, ideal_basis, is_submodule, local_is_submodule, local_quotient, saturate,
    syzygy_kernel, ModuleOrder, DEFAULT_TRUNCATION_CAP,
};
use crate::matrix::{Ideal, PolyMatrix, Submodule};
use crate::modtools::{fitting_ideal, lambda_set, rank, row_ideal, subsets, z_module, MinorCache};
use crate::multiplicity::{buchsbaum_rim, delta, hs_multiplicity, RandomSpec};
use crate::poly::{Polynomial, Ring};
use crate::polyhedra::{
    compact_faces_max_dim, minkowski_sum, newton_polyhedron, newton_polyhedron_of_ideal, polyhedra_equal,
    term_ideal, CompactFace, MonomialIdeal, NewtonPolyhedron,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Nondegenerate,
    Degenerate,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceEvidence {
    pub vertices: Vec<Vec<u32>>,
    pub dim: usize,
    pub witness: Vec<u64>,
    /// Face ideal generators, or the rows of the face matrix for modules.
    pub face_system: Vec<Vec<String>>,
    pub saturated_is_unit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NNDReport {
    pub verdict: Verdict,
    pub faces: Vec<FaceEvidence>,
    /// Per row selection (0-based) when the module has submaximal rank.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sub_reports: Vec<(Vec<usize>, NNDReport)>,
}

impl NNDReport {
    pub fn is_nondegenerate(&self) -> bool {
        self.verdict == Verdict::Nondegenerate
    }

    /// First face whose saturated system is proper.
    pub fn degenerate_face(&self) -> Option<&FaceEvidence> {
        self.faces
            .iter()
            .find(|f| !f.saturated_is_unit)
            .or_else(|| self.sub_reports.iter().find_map(|(_, r)| r.degenerate_face()))
    }
}

fn torus_product(ring: &Ring) -> Polynomial {
    (0..ring.nvars()).fold(Polynomial::one(ring), |acc, i| acc.mul(&Polynomial::var(ring, i)))
}

/// Whether `I : (x_1 ... x_n)^∞ = (1)`, i.e. `V(I)` misses the torus.
fn avoids_torus(i: &Ideal) -> Result<bool> {
    if i.is_zero() {
        return Ok(false);
    }
    if i.gens().iter().any(|g| g.is_monomial()) {
        return Ok(true);
    }
    let sat = saturate(i, &torus_product(i.ring()))?;
    Ok(ideal_basis(&sat, ModuleOrder::default()).is_unit())
}

fn face_evidence(face: &CompactFace, system: Vec<Vec<String>>, unit: bool) -> FaceEvidence {
    FaceEvidence {
        vertices: face.vertices.iter().map(|v| v.0.clone()).collect(),
        dim: face.dim,
        witness: face.witness.entries().to_vec(),
        face_system: system,
        saturated_is_unit: unit,
    }
}

/// Newton non-degeneracy of an ideal with respect to its generators.
pub fn nnd_check_ideal(i: &Ideal) -> Result<NNDReport> {
    if i.is_zero() {
        return Err(Error::ZeroInput);
    }
    let poly = newton_polyhedron_of_ideal(i)?;
    let mut faces = Vec::new();
    let mut all = true;
    for face in poly.compact_faces() {
        let w = &face.witness;
        let level = i
            .gens()
            .iter()
            .filter_map(|g| g.weighted_min_degree(w).transpose())
            .collect::<Result<Vec<u64>>>()?
            .into_iter()
            .min()
            .expect("nonzero generators");
        let parts = i
            .gens()
            .iter()
            .map(|g| g.face_part(w, level))
            .collect::<Result<Vec<_>>>()?;
        let face_ideal = Ideal::new(i.ring(), parts)?;
        let unit = avoids_torus(&face_ideal)?;
        all &= unit;
        faces.push(face_evidence(face, vec![face_ideal.to_strings()], unit));
    }
    Ok(NNDReport {
        verdict: if all { Verdict::Nondegenerate } else { Verdict::Degenerate },
        faces,
        sub_reports: Vec::new(),
    })
}

/// `Γ₊(M_1) + ... + Γ₊(M_p)`; every row must be nonzero.
pub fn module_polyhedron(m: &Submodule) -> Result<NewtonPolyhedron> {
    let mut acc: Option<NewtonPolyhedron> = None;
    for i in 0..m.nrows() {
        let p = newton_polyhedron_of_ideal(&row_ideal(m, i)?)?;
        acc = Some(match acc {
            None => p,
            Some(a) => minkowski_sum(&a, &p)?,
        });
    }
    acc.ok_or(Error::ZeroInput)
}

fn nnd_full_rank(m: &Submodule) -> Result<NNDReport> {
    let p = m.nrows();
    let poly = module_polyhedron(m)?;
    let mut faces = Vec::new();
    let mut all = true;
    for face in poly.compact_faces() {
        let w = &face.witness;
        let mut fm = PolyMatrix::zeros(m.ring(), p, m.ncols());
        for i in 0..p {
            let row = m.row(i);
            let level = row
                .iter()
                .filter_map(|g| g.weighted_min_degree(w).transpose())
                .collect::<Result<Vec<u64>>>()?
                .into_iter()
                .min()
                .expect("nonzero row");
            for (j, g) in row.iter().enumerate() {
                fm.set(i, j, g.face_part(w, level)?);
            }
        }
        let unit = avoids_torus(&fitting_ideal(&fm, p))?;
        all &= unit;
        faces.push(face_evidence(face, fm.to_strings(), unit));
    }
    Ok(NNDReport {
        verdict: if all { Verdict::Nondegenerate } else { Verdict::Degenerate },
        faces,
        sub_reports: Vec::new(),
    })
}

/// Newton non-degeneracy of a module: through its face matrices when the
/// rank is maximal, through every `M_L` with `L ∈ Λ_M` otherwise.
pub fn nnd_check_module(m: &Submodule) -> Result<NNDReport> {
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let r = rank(m);
    if r == m.nrows() {
        return nnd_full_rank(m);
    }
    let mut subs = Vec::new();
    let mut all = true;
    for rows in lambda_set(m) {
        let sub = nnd_full_rank(&m.select_rows(&rows)?)?;
        all &= sub.is_nondegenerate();
        subs.push((rows, sub));
    }
    Ok(NNDReport {
        verdict: if all { Verdict::Nondegenerate } else { Verdict::Degenerate },
        faces: Vec::new(),
        sub_reports: subs,
    })
}

/// `J_M = Σ_{L ∈ Λ_M} Π_{i ∈ L} M_i` and the term ideal of its Newton
/// polyhedron.
pub fn jm_ideal(m: &Submodule) -> Result<(Ideal, MonomialIdeal)> {
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ring = m.ring();
    let mut j = Ideal::new(ring, Vec::new())?;
    let mut points = Vec::new();
    for rows in lambda_set(m) {
        let mut prod = Ideal::unit(ring);
        for &i in &rows {
            prod = prod.product(&row_ideal(m, i)?);
        }
        j = j.sum(&prod);
        points.extend(module_polyhedron(&m.select_rows(&rows)?)?.vertices().iter().cloned());
    }
    let poly = newton_polyhedron(&points)?;
    Ok((j, term_ideal(&poly)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ComputedNnd,
    UserSupplied,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    pub generators: Submodule,
    /// The integrally closed ideal `K = closure of I_r(M)` that was used.
    pub k: Ideal,
    pub provenance: Provenance,
}

/// Drops generators lying in the span of the remaining ones.
pub fn prune_generators(m: &Submodule) -> Submodule {
    let mut cols = m.compact_columns().columns();
    let mut j = cols.len();
    while j > 0 {
        j -= 1;
        let others: Vec<Vec<Polynomial>> = cols
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != j)
            .map(|(_, c)| c.clone())
            .collect();
        let rest = PolyMatrix::from_columns(m.ring(), m.nrows(), others).expect("shape");
        if groebner_basis(&rest, ModuleOrder::default()).contains(&cols[j]).expect("shape") {
            cols.remove(j);
        }
    }
    PolyMatrix::from_columns(m.ring(), m.nrows(), cols).expect("shape")
}

/// Block module `I_1 ⊕ ... ⊕ I_p ⊆ R^p`.
pub fn direct_sum(ring: &Ring, ideals: &[Ideal]) -> Submodule {
    let p = ideals.len();
    let mut cols = Vec::new();
    for (i, id) in ideals.iter().enumerate() {
        for g in id.gens() {
            let mut c = vec![Polynomial::zero(ring); p];
            c[i] = g.clone();
            cols.push(c);
        }
    }
    PolyMatrix::from_columns(ring, p, cols).expect("shape")
}

/// `Z(M) ∩ (I_1 ⊕ ... ⊕ I_p)`.
pub fn c_module(m: &Submodule, ideals: &[Ideal]) -> Result<Submodule> {
    if ideals.len() != m.nrows() {
        return Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: ideals.len(),
        });
    }
    let d = direct_sum(m.ring(), ideals);
    if rank(m) == m.nrows() {
        return Ok(prune_generators(&d));
    }
    let z = z_module(m);
    let inter = crate::grobner::intersect(&z, &d)?;
    Ok(prune_generators(&inter))
}

/// Term ideals `M_i^0` of the row ideals.
pub fn row_term_ideals(m: &Submodule) -> Result<Vec<Ideal>> {
    (0..m.nrows())
        .map(|i| {
            let row = row_ideal(m, i)?;
            if row.is_zero() {
                return Ok(row);
            }
            term_ideal(&newton_polyhedron_of_ideal(&row)?).to_ideal(m.ring())
        })
        .collect()
}

/// `C^0(M) = Z(M) ∩ (M_1^0 ⊕ ... ⊕ M_p^0)`.
pub fn c0_module(m: &Submodule) -> Result<Submodule> {
    c_module(m, &row_term_ideals(m)?)
}

/// Closure as `C^0(M)` once `closure(I_r(M)) = J_M^0` is certified through
/// Newton non-degeneracy of `I_r(M)`.
pub fn closure_nnd(m: &Submodule) -> Result<ClosureResult> {
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let r = rank(m);
    let ir = fitting_ideal(m, r);
    let (_, j0) = jm_ideal(m)?;
    let nnd = nnd_check_ideal(&ir)?;
    let same = polyhedra_equal(&newton_polyhedron_of_ideal(&ir)?, &j0.newton_polyhedron()?)?;
    if !nnd.is_nondegenerate() || !same {
        return Err(Error::NotCertified(
            "closure of I_r(M) = J_M^0 is not certified; supply a closed Fitting ideal and use the minors engine"
                .into(),
        ));
    }
    Ok(ClosureResult {
        generators: c0_module(m)?,
        k: j0.to_ideal(m.ring())?,
        provenance: Provenance::ComputedNnd,
    })
}

/// `K + m^k` for the stabilization degree `k` of `K`, which equals `K` after
/// localizing and is m-primary, so global and local computations agree.
fn localize_ideal(k: &Ideal) -> Result<Ideal> {
    match local_quotient(&k.to_module(), DEFAULT_TRUNCATION_CAP) {
        Ok(q) => {
            let power = Ideal::maximal_power(k.ring(), q.degree);
            let basis = groebner_basis(&k.to_module(), ModuleOrder::default());
            let missing: Vec<Polynomial> = power
                .gens()
                .iter()
                .filter(|g| !basis.contains(std::slice::from_ref(g)).expect("rank one"))
                .cloned()
                .collect();
            if missing.is_empty() {
                return Ok(k.clone());
            }
            Ok(k.sum(&Ideal::new(k.ring(), missing)?))
        }
        Err(Error::NoStabilization { .. }) => Ok(k.clone()),
        Err(e) => Err(e),
    }
}

/// Cofactors of the `h` column: for rows `rows` and columns `cols` of `M`
/// (`|cols| = |rows| - 1`), the vector `c` with `det [M_cols | h]_rows = c . h`.
fn cofactor_vector(
    cache: &mut MinorCache,
    ring: &Ring,
    p: usize,
    rows: &[usize],
    cols: &[usize],
) -> Vec<Polynomial> {
    let r = rows.len();
    let mut c = vec![Polynomial::zero(ring); p];
    for k in 0..r {
        let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != rows[k]).collect();
        let minor = cache.minor(&sub_rows, cols);
        c[rows[k]] = if (k + r - 1) % 2 == 0 { minor } else { minor.neg() };
    }
    c
}

fn check_k_contains_minors(m: &Submodule, k: &Ideal) -> Result<usize> {
    m.ring().check_same(k.ring())?;
    let r = rank(m);
    if r == 0 {
        return Err(Error::ZeroInput);
    }
    let ir = fitting_ideal(m, r);
    if !local_is_submodule(&ir.to_module(), &k.to_module())? {
        return Err(Error::Containment("I_r(M) is not contained in K".into()));
    }
    Ok(r)
}

/// `{h ∈ Z(M) : every r-minor of [M | h] lies in K}`, the closure of `M` when
/// `K` is the integral closure of `I_r(M)`.
pub fn closure_via_minors(m: &Submodule, k: &Ideal) -> Result<ClosureResult> {
    let r = check_k_contains_minors(m, k)?;
    let ring = m.ring();
    let p = m.nrows();
    let kl = localize_ideal(k)?;
    let z = z_module(m);

    let mut constraints: Vec<Vec<Polynomial>> = Vec::new();
    let mut cache = MinorCache::new(m);
    for rows in subsets(p, r) {
        for cols in subsets(m.ncols(), r - 1) {
            let c = cofactor_vector(&mut cache, ring, p, &rows, &cols);
            if c.iter().any(|e| !e.is_zero()) && !constraints.contains(&c) {
                constraints.push(c);
            }
        }
    }

    // h = Z u; the constraints c_j . Z u ∈ K become one syzygy computation of
    // [C Z | K ⊕ ... ⊕ K] projected onto the u coordinates.
    let t = z.ncols();
    let s = kl.gens().len();
    let nc = constraints.len();
    let mut big = PolyMatrix::zeros(ring, nc, t + nc * s);
    for (j, c) in constraints.iter().enumerate() {
        for col in 0..t {
            let v = (0..p).fold(Polynomial::zero(ring), |acc, i| acc.add(&c[i].mul(z.get(i, col))));
            big.set(j, col, v);
        }
        for (q, g) in kl.gens().iter().enumerate() {
            big.set(j, t + j * s + q, g.clone());
        }
    }
    let us = if nc == 0 {
        PolyMatrix::identity(ring, t)
    } else {
        let ker = syzygy_kernel(&big);
        let rows: Vec<usize> = (0..t).collect();
        ker.select_rows(&rows)?
    };
    let hs: Vec<Vec<Polynomial>> = us.columns().iter().map(|u| z.apply(u).expect("shape")).collect();
    let gens = PolyMatrix::from_columns(ring, p, hs)?;
    Ok(ClosureResult {
        generators: prune_generators(&gens),
        k: k.clone(),
        provenance: Provenance::UserSupplied,
    })
}

/// `h ∈ closure(M)` given `K = closure of I_r(M)`: the rank does not grow and
/// every `r`-minor of `[M | h]` lies in `K`.
pub fn integral_membership(h: &[Polynomial], m: &Submodule, k: &Ideal) -> Result<bool> {
    let r = check_k_contains_minors(m, k)?;
    let mh = m.with_column(h)?;
    if rank(&mh) != r {
        return Ok(false);
    }
    let hcol = m.ncols();
    let mut cache = MinorCache::new(&mh);
    let mut minors = Vec::new();
    for rows in subsets(m.nrows(), r) {
        for cols in subsets(m.ncols(), r - 1) {
            let mut all = cols.clone();
            all.push(hcol);
            minors.push(cache.minor(&rows, &all));
        }
    }
    let minors = Ideal::new(m.ring(), minors)?;
    local_is_submodule(&minors.to_module(), &k.to_module())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decomposable {
    Yes,
    No,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelectionNumbers {
    pub rows: Vec<usize>,
    pub e: Option<u64>,
    pub delta: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecomposabilityReport {
    pub verdict: Decomposable,
    pub method: &'static str,
    pub selections: Vec<SelectionNumbers>,
}

/// Integral decomposability through `e(M_L) = δ(M_L)` for all `L ∈ Λ_M`.
pub fn decomposable_check(m: &Submodule, rs: &RandomSpec) -> Result<DecomposabilityReport> {
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut selections = Vec::new();
    let mut verdict = Decomposable::Yes;
    for rows in lambda_set(m) {
        let ml = m.select_rows(&rows)?;
        let e = match buchsbaum_rim(&ml, rs) {
            Ok(v) => v.value,
            Err(Error::InfiniteColength) => {
                selections.push(SelectionNumbers {
                    rows,
                    e: None,
                    delta: None,
                });
                verdict = Decomposable::NotApplicable;
                continue;
            }
            Err(e) => return Err(e),
        };
        let d = delta(&ml, rs)?.value;
        if e != d && verdict == Decomposable::Yes {
            verdict = Decomposable::No;
        }
        selections.push(SelectionNumbers {
            rows,
            e: Some(e),
            delta: Some(d),
        });
    }
    Ok(DecomposabilityReport {
        verdict,
        method: "numerical",
        selections,
    })
}

/// Whether `closure(I_r(M)) = closure(J_M)`: polyhedrally when `I_r(M)` is
/// Newton non-degenerate, by multiplicities when both ideals are m-primary.
pub fn wdcentral_condition2(m: &Submodule, rs: &RandomSpec) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let ir = fitting_ideal(m, rank(m));
    let (j, _) = jm_ideal(m)?;
    if nnd_check_ideal(&ir)?.is_nondegenerate() {
        return polyhedra_equal(&newton_polyhedron_of_ideal(&ir)?, &newton_polyhedron_of_ideal(&j)?);
    }
    let e1 = hs_multiplicity(&ir, rs);
    let e2 = hs_multiplicity(&ir.sum(&j), rs);
    match (e1, e2) {
        (Ok(a), Ok(b)) => Ok(a.value == b.value),
        (Err(Error::InfiniteColength), _) | (_, Err(Error::InfiniteColength)) => Err(Error::NotApplicable(
            "I_r(M) is Newton degenerate and not m-primary".into(),
        )),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

pub fn analytic_spread_monomial_ideal(i: &MonomialIdeal) -> Result<usize> {
    if i.gens().is_empty() {
        return Err(Error::ZeroInput);
    }
    Ok(compact_faces_max_dim(&i.newton_polyhedron()?) + 1)
}

/// `ℓ(M) = max dim of a compact face of Γ₊(M) + p` for Newton
/// non-degenerate `M` of maximal rank.
pub fn analytic_spread_nnd_module(m: &Submodule) -> Result<usize> {
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    if rank(m) != m.nrows() {
        return Err(Error::NotApplicable("module rank is not maximal".into()));
    }
    if !nnd_check_module(m)?.is_nondegenerate() {
        return Err(Error::NotCertified("module is not Newton non-degenerate".into()));
    }
    Ok(compact_faces_max_dim(&module_polyhedron(m)?) + m.nrows())
}

/// `ℓ(I_1 ⊕ ... ⊕ I_p) = ℓ(I_1 ... I_p) + p - 1` for monomial ideals.
pub fn spread_direct_sum(ideals: &[MonomialIdeal]) -> Result<usize> {
    let Some(first) = ideals.first() else {
        return Err(Error::ZeroInput);
    };
    let mut prod = first.clone();
    for i in &ideals[1..] {
        if i.dim() != prod.dim() {
            return Err(Error::DimensionMismatch {
                expected: prod.dim(),
                found: i.dim(),
            });
        }
        let mut exps = Vec::new();
        for a in prod.gens() {
            for b in i.gens() {
                exps.push(a.mul(b));
            }
        }
        prod = MonomialIdeal::new(prod.dim(), exps)?;
    }
    Ok(analytic_spread_monomial_ideal(&prod)? + ideals.len() - 1)
}

/// Same as [`spread_direct_sum`] for ideals that must be monomial.
pub fn spread_direct_sum_ideals(ideals: &[Ideal]) -> Result<usize> {
    let mono = ideals
        .iter()
        .map(|i| {
            MonomialIdeal::from_ideal(i).ok_or_else(|| Error::InvalidInput("ideal is not monomial".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    spread_direct_sum(&mono)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcOrders {
    pub size: usize,
    /// Least `t`-order among `size`-minors of `φ*(M)`; `None` is infinity.
    pub module: Option<u32>,
    /// Same for `[φ*(M) | φ*(h)]`.
    pub extended: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcReport {
    pub member: bool,
    pub orders: Vec<ArcOrders>,
}

fn min_order(m: &PolyMatrix, size: usize) -> Option<u32> {
    let mut cache = MinorCache::new(m);
    let mut best: Option<u32> = None;
    for rows in subsets(m.nrows(), size) {
        for cols in subsets(m.ncols(), size) {
            if let Some(o) = cache.minor(&rows, &cols).order() {
                best = Some(best.map_or(o, |b| b.min(o)));
            }
        }
    }
    best
}

/// Pulls `M` and `h` back along the arc `φ` and compares minor orders.
/// A negative answer proves `h` is not integral over `M`.
pub fn arc_pullback_test(m: &Submodule, h: &[Polynomial], phi: &[Polynomial]) -> Result<ArcReport> {
    let n = m.ring().nvars();
    if phi.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: phi.len(),
        });
    }
    let tring = phi[0].ring().clone();
    for f in phi {
        tring.check_same(f.ring())?;
        if tring.nvars() != 1 {
            return Err(Error::InvalidInput("arc components must be univariate".into()));
        }
        if f.terms().iter().any(|(e, _)| e.degree() == 0) {
            return Err(Error::InvalidInput("arc must pass through the origin".into()));
        }
    }
    let pm = m.map_into(&tring, |e| e.compose(phi))?;
    let ph = h.iter().map(|e| e.compose(phi)).collect::<Result<Vec<_>>>()?;
    let pmh = pm.with_column(&ph)?;
    let r = rank(m);
    let mut orders = Vec::new();
    let mut member = true;
    for size in 1..=r {
        let a = min_order(&pm, size);
        let b = min_order(&pmh, size);
        member &= a == b;
        orders.push(ArcOrders {
            size,
            module: a,
            extended: b,
        });
    }
    Ok(ArcReport { member, orders })
}

/// Whether `a` and `b` generate the same submodule after localizing.
pub fn same_local_module(a: &Submodule, b: &Submodule) -> Result<bool> {
    Ok(local_is_submodule(a, b)? && local_is_submodule(b, a)?)
}

/// Global inclusion test re-exported for closure invariants.
pub fn contained_in(a: &Submodule, b: &Submodule) -> Result<bool> {
    is_submodule(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Ring {
        Ring::new(&["x", "y"])
    }

    fn mat(rows: &[&[&str]]) -> PolyMatrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        PolyMatrix::parse(&xy(), &rows).unwrap()
    }

    fn ideal(g: &[&str]) -> Ideal {
        Ideal::parse(&xy(), g).unwrap()
    }

    #[test]
    fn nnd_ideal_examples() {
        let dekod_i2 = fitting_ideal(&mat(&[&["x^5", "x*y", "y^5"], &["y^2", "x+y", "y^2"]]), 2);
        assert!(nnd_check_ideal(&dekod_i2).unwrap().is_nondegenerate());
        let i1 = ideal(&["x^3", "x^2*y", "x*(x+y)", "y*(x+y)"]);
        let rep = nnd_check_ideal(&i1).unwrap();
        assert_eq!(rep.verdict, Verdict::Degenerate);
        assert_eq!(rep.degenerate_face().unwrap().dim, 1);
        assert!(nnd_check_ideal(&ideal(&["x^3", "x*y", "y^4"])).unwrap().is_nondegenerate());
        assert_eq!(nnd_check_ideal(&ideal(&[])).unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn nnd_module_examples() {
        let mon = mat(&[&["x^3", "x*y", "y^3", "y^3"], &["x^5", "x^2*y", "x*y^2", "x^5+x^2*y"]]);
        assert!(nnd_check_module(&mon).unwrap().is_nondegenerate());
        let cm = mat(&[&["x^2", "y", "0"], &["0", "x", "y^2"], &["x^2", "x+y", "y^2"]]);
        let rep = nnd_check_module(&cm).unwrap();
        assert_eq!(rep.verdict, Verdict::Degenerate);
        // degenerate at the vertex (1,1) of Γ₊(x^2, y) + Γ₊(x, y^2)
        let face = rep.degenerate_face().unwrap();
        assert_eq!(face.vertices, vec![vec![1, 1]]);
    }

    #[test]
    fn jm_examples() {
        let cm = mat(&[&["x^2", "y", "0"], &["0", "x", "y^2"], &["x^2", "x+y", "y^2"]]);
        let (j, _) = jm_ideal(&cm).unwrap();
        assert!(crate::grobner::ideal_eq(&j, &Ideal::maximal_power(&xy(), 2)).unwrap());
        let ir = mat(&[&["x^3", "x^2*y"], &["x*(x+y)", "y*(x+y)"]]);
        let (j, _) = jm_ideal(&ir).unwrap();
        let sum = row_ideal(&ir, 0).unwrap().sum(&row_ideal(&ir, 1).unwrap());
        assert!(crate::grobner::ideal_eq(&j, &sum).unwrap());
    }

    #[test]
    fn closure_of_monomial_sum_is_itself() {
        let m = mat(&[&["x^2", "y", "0", "0"], &["0", "0", "x", "y^3"]]);
        let c = closure_nnd(&m).unwrap();
        assert!(same_local_module(&c.generators, &m).unwrap());
    }

    #[test]
    fn membership_examples() {
        let m = mat(&[&["x+y", "x^3", "y^3"], &["x", "y", "x"]]);
        // locally I_2(M) = (v^2, v*y, y^6) with v = x + y - y^3
        let k = ideal(&["(x+y-y^3)^2", "(x+y-y^3)*y", "y^6"]);
        let p = |s: &str| Polynomial::parse(s, &xy()).unwrap();
        assert!(!integral_membership(&[p("x^3"), p("x")], &m, &k).unwrap());
        assert!(integral_membership(&[p("x^3*y^2"), p("x+y")], &m, &k).unwrap());
        assert!(integral_membership(&m.column(1), &m, &k).unwrap());
    }

    #[test]
    fn arc_example() {
        let m = mat(&[&["x+y", "x^3", "y^3"], &["x", "y", "x"]]);
        let t = Ring::new(&["t"]);
        let phi = vec![
            Polynomial::parse("-t+t^3", &t).unwrap(),
            Polynomial::parse("t", &t).unwrap(),
        ];
        let p = |s: &str| Polynomial::parse(s, &xy()).unwrap();
        let rep = arc_pullback_test(&m, &[p("x^3"), p("x")], &phi).unwrap();
        assert!(!rep.member);
        assert_eq!(rep.orders[1].module, Some(6));
        assert_eq!(rep.orders[1].extended, Some(4));
        assert!(arc_pullback_test(&m, &m.column(0), &phi).unwrap().member);
        assert!(arc_pullback_test(&m, &[p("0"), p("0")], &phi).unwrap().member);
        let bad = vec![Polynomial::parse("1+t", &t).unwrap(), phi[1].clone()];
        assert!(arc_pullback_test(&m, &m.column(0), &bad).is_err());
    }

    #[test]
    fn spread_examples() {
        let e = |v: &[u32]| crate::poly::ExponentVector(v.to_vec());
        let m = MonomialIdeal::new(2, vec![e(&[1, 0]), e(&[0, 1])]).unwrap();
        assert_eq!(analytic_spread_monomial_ideal(&m).unwrap(), 2);
        let pr = MonomialIdeal::new(2, vec![e(&[2, 3])]).unwrap();
        assert_eq!(analytic_spread_monomial_ideal(&pr).unwrap(), 1);
        assert_eq!(spread_direct_sum(&[m.clone(), m.clone()]).unwrap(), 3);
        assert_eq!(spread_direct_sum(&[pr.clone(), pr.clone(), pr]).unwrap(), 3);
        let mm = mat(&[&["x", "y", "0", "0"], &["0", "0", "x", "y"]]);
        assert_eq!(analytic_spread_nnd_module(&mm).unwrap(), 3);
        let mon = mat(&[&["x^3", "x*y", "y^3", "y^3"], &["x^5", "x^2*y", "x*y^2", "x^5+x^2*y"]]);
        assert_eq!(analytic_spread_nnd_module(&mon).unwrap(), 3);
    }
}
