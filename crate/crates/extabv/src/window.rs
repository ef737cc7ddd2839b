//! Finite symplectic windows of the Laurent quotient and their subspace
//! algebra.
//!
//! A window holds the exponents `-N..=-1, 1..=M` (zero is excluded by the
//! quotient modulo constants). On monomials the residue form is
//! `<z^a, z^b> = b` when `a + b = 0` and `0` otherwise; with `M >= N` a
//! window shadow of a truncated series pairs exactly like the series
//! itself, provided both valuations are `>= -N`. The form restricted to
//! the window is nondegenerate precisely on square windows (`N = M`);
//! asymmetric windows exist to hold shadows and carry a radical spanned by
//! the exponents above `N`.
//!
//! Subspaces are stored in reduced row echelon form over the coefficient
//! field, so subspace equality is representation equality.

use thiserror::Error;

use crate::scalar::CoeffField;
use crate::series::LaurentSeries;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WindowError {
    #[error("window requires pos_height >= neg_depth >= 1, got neg {neg}, pos {pos}")]
    BadShape { neg: i64, pos: i64 },
    #[error("vector has {got} coordinates, window has dimension {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("subspace is not isotropic")]
    NotIsotropic,
}

/// Exponent range `[-N..=-1, 1..=M]` with the soundness rule `M >= N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    neg: i64,
    pos: i64,
}

impl WindowSpec {
    pub fn new(neg_depth: i64, pos_height: i64) -> Result<Self, WindowError> {
        if neg_depth < 1 || pos_height < neg_depth {
            return Err(WindowError::BadShape {
                neg: neg_depth,
                pos: pos_height,
            });
        }
        Ok(WindowSpec {
            neg: neg_depth,
            pos: pos_height,
        })
    }

    pub fn square(n: i64) -> Result<Self, WindowError> {
        Self::new(n, n)
    }

    pub fn neg_depth(&self) -> i64 {
        self.neg
    }

    pub fn pos_height(&self) -> i64 {
        self.pos
    }

    pub fn dim(&self) -> usize {
        (self.neg + self.pos) as usize
    }

    pub fn is_square(&self) -> bool {
        self.neg == self.pos
    }

    /// Exponents in coordinate order.
    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        (-self.neg..=-1).chain(1..=self.pos)
    }

    pub fn index_of(&self, e: i64) -> Option<usize> {
        if e >= -self.neg && e <= -1 {
            Some((e + self.neg) as usize)
        } else if e >= 1 && e <= self.pos {
            Some((self.neg + e - 1) as usize)
        } else {
            None
        }
    }

    pub fn exponent_at(&self, idx: usize) -> i64 {
        let idx = idx as i64;
        if idx < self.neg {
            idx - self.neg
        } else {
            idx - self.neg + 1
        }
    }

    /// Window shadow of a series: its coefficients on the window exponents,
    /// constant term dropped.
    pub fn shadow<K: CoeffField>(&self, s: &LaurentSeries<K>) -> Vec<K> {
        self.exponents().map(|e| s.coeff(e)).collect()
    }

    /// The residue pairing of two coordinate vectors.
    pub fn pairing<K: CoeffField>(&self, v: &[K], w: &[K]) -> K {
        let mut s = K::zero();
        for (i, a) in self.exponents().enumerate() {
            if let Some(j) = self.index_of(-a) {
                if v[i].is_zero() || w[j].is_zero() {
                    continue;
                }
                s = s.add(&v[i].mul(&w[j]).mul(&K::from_i64(-a)));
            }
        }
        s
    }
}

/// A subspace of a window, kept as a canonical reduced basis.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowSubspace<K: CoeffField> {
    window: WindowSpec,
    basis: Vec<Vec<K>>,
}

/// Reduced row echelon form in place. `tol` is the negligibility threshold
/// used for pivot detection (exact backends ignore it). Returns the pivot
/// column of each surviving row.
fn rref<K: CoeffField>(rows: &mut Vec<Vec<K>>, width: usize, tol: f64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        // best pivot in column `col` at or below row r
        let mut best: Option<(usize, f64)> = None;
        for i in r..rows.len() {
            if !rows[i][col].is_negligible(tol) {
                let m = rows[i][col].magnitude();
                if best.map_or(true, |(_, bm)| m > bm) {
                    best = Some((i, m));
                }
            }
        }
        let Some((i, _)) = best else { continue };
        rows.swap(r, i);
        let inv = K::one().div(&rows[r][col].clone());
        for c in col..width {
            rows[r][c] = rows[r][c].mul(&inv);
        }
        rows[r][col] = K::one();
        for j in 0..rows.len() {
            if j == r || rows[j][col].is_zero() {
                continue;
            }
            let f = rows[j][col].clone();
            for c in col..width {
                let t = rows[r][c].mul(&f);
                rows[j][c] = rows[j][c].sub(&t);
            }
            rows[j][col] = K::zero();
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    // scrub numeric dust so canonical-form comparisons behave
    for row in rows.iter_mut() {
        for c in row.iter_mut() {
            if c.is_negligible(tol) {
                *c = K::zero();
            }
        }
    }
    pivots
}

impl<K: CoeffField> WindowSubspace<K> {
    /// Canonicalizes a spanning set. Vectors are coordinate rows in window
    /// order.
    pub fn reduce_basis(
        window: WindowSpec,
        vectors: Vec<Vec<K>>,
        tol: f64,
    ) -> Result<Self, WindowError> {
        let want = window.dim();
        for v in &vectors {
            if v.len() != want {
                return Err(WindowError::DimensionMismatch {
                    got: v.len(),
                    want,
                });
            }
        }
        let mut rows = vectors;
        rref(&mut rows, want, tol);
        Ok(WindowSubspace {
            window,
            basis: rows,
        })
    }

    pub fn empty(window: WindowSpec) -> Self {
        WindowSubspace {
            window,
            basis: Vec::new(),
        }
    }

    /// Span of window shadows of series.
    pub fn from_series(
        window: WindowSpec,
        series: &[LaurentSeries<K>],
        tol: f64,
    ) -> Result<Self, WindowError> {
        let vecs = series.iter().map(|s| window.shadow(s)).collect();
        Self::reduce_basis(window, vecs, tol)
    }

    pub fn window(&self) -> WindowSpec {
        self.window
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<K>] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|c| !c.is_zero()).expect("nonzero row"))
            .collect()
    }

    /// Membership test; reduces `v` against the basis and checks the
    /// remainder is negligible.
    pub fn contains(&self, v: &[K], tol: f64) -> bool {
        self.reduce_mod(v).iter().all(|c| c.is_negligible(tol))
    }

    /// Remainder of `v` after elimination by the basis rows.
    pub fn reduce_mod(&self, v: &[K]) -> Vec<K> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(self.pivots().iter()) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (wi, ri) in w.iter_mut().zip(row.iter()) {
                let t = ri.mul(&f);
                *wi = wi.sub(&t);
            }
        }
        w
    }

    /// Sum of subspaces.
    pub fn join(&self, other: &Self, tol: f64) -> Result<Self, WindowError> {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::reduce_basis(self.window, rows, tol)
    }

    pub fn is_subspace_of(&self, other: &Self, tol: f64) -> bool {
        self.basis.iter().all(|row| other.contains(row, tol))
    }

    /// All window vectors pairing to zero with every element of `self`.
    ///
    /// On a square window the form is nondegenerate, so
    /// `dim S + dim S^perp = N + M` and `S^perp^perp = S`.
    pub fn annihilator(&self, tol: f64) -> Self {
        let w = self.window;
        let n = w.dim();
        // Constraint matrix: row per basis vector s, column per window
        // exponent a, entry s_{-a} * (-a).
        let mut cons: Vec<Vec<K>> = Vec::with_capacity(self.basis.len());
        for s in &self.basis {
            let mut row = vec![K::zero(); n];
            for (i, a) in w.exponents().enumerate() {
                if let Some(j) = w.index_of(-a) {
                    if !s[j].is_zero() {
                        row[i] = s[j].mul(&K::from_i64(-a));
                    }
                }
            }
            cons.push(row);
        }
        let pivots = rref(&mut cons, n, tol);
        // Nullspace basis: one vector per free column.
        let mut basis = Vec::new();
        let piv_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for free in 0..n {
            if piv_set.contains(&free) {
                continue;
            }
            let mut v = vec![K::zero(); n];
            v[free] = K::one();
            for (r, &p) in pivots.iter().enumerate() {
                // pivot variable = -coefficient of the free column
                let c = cons[r][free].clone();
                if !c.is_zero() {
                    v[p] = c.neg();
                }
            }
            basis.push(v);
        }
        let mut rows = basis;
        rref(&mut rows, n, tol);
        WindowSubspace {
            window: w,
            basis: rows,
        }
    }

    /// Pairwise pairings vanish.
    pub fn is_isotropic(&self, tol: f64) -> bool {
        let w = self.window;
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i..] {
                if !w.pairing(a, b).is_negligible(tol) {
                    return false;
                }
            }
        }
        true
    }

    /// Isotropy and maximality relative to the window.
    pub fn isotropy_check(&self, tol: f64) -> IsotropyReport {
        let iso = self.is_isotropic(tol);
        IsotropyReport {
            isotropic: iso,
            maximal: iso && 2 * self.dim() == self.window.dim(),
            relative_to_window: !self.window.is_square(),
        }
    }

    /// Gram matrix of the residue pairing on the canonical complement of
    /// `self` inside its annihilator, together with the chosen complement
    /// basis (annihilator rows whose pivots extend the pivot set of `self`,
    /// lowest exponent first).
    pub fn quotient_gram(&self, tol: f64) -> Result<QuotientData<K>, WindowError> {
        if !self.is_isotropic(tol) {
            return Err(WindowError::NotIsotropic);
        }
        let ann = self.annihilator(tol);
        let own: std::collections::BTreeSet<usize> = self.pivots().into_iter().collect();
        let mut qbasis = Vec::new();
        for (row, p) in ann.basis.iter().zip(ann.pivots()) {
            if !own.contains(&p) {
                qbasis.push(row.clone());
            }
        }
        let d = qbasis.len();
        let mut gram = vec![vec![K::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                gram[i][j] = self.window.pairing(&qbasis[i], &qbasis[j]);
            }
        }
        Ok(QuotientData {
            window: self.window,
            basis: qbasis,
            gram,
        })
    }

    /// Express a vector known to lie in `span(self) + span(qbasis)` in the
    /// quotient coordinates; the part inside `self` is discarded. Returns
    /// `None` when the remainder is not in the span (beyond `tol`).
    ///
    /// The quotient rows are annihilator RREF rows, so after reducing
    /// modulo `self` the coefficient on each row is just the coordinate at
    /// its pivot.
    pub fn quotient_coords(
        &self,
        q: &QuotientData<K>,
        v: &[K],
        tol: f64,
    ) -> Option<Vec<K>> {
        let mut w = self.reduce_mod(v);
        let mut coords = Vec::with_capacity(q.basis.len());
        for row in &q.basis {
            let p = row.iter().position(|c| !c.is_zero()).expect("nonzero row");
            let c = w[p].clone();
            if !c.is_zero() {
                for (wi, ri) in w.iter_mut().zip(row.iter()) {
                    let t = ri.mul(&c);
                    *wi = wi.sub(&t);
                }
            }
            coords.push(c);
        }
        let w = self.reduce_mod(&w);
        if w.iter().all(|c| c.is_negligible(tol)) {
            Some(coords)
        } else {
            None
        }
    }
}

/// Canonical complement basis of an isotropic subspace inside its
/// annihilator, with the Gram matrix of the residue pairing on it.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientData<K: CoeffField> {
    pub window: WindowSpec,
    pub basis: Vec<Vec<K>>,
    pub gram: Vec<Vec<K>>,
}

impl<K: CoeffField> QuotientData<K> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Pairing of two quotient-coordinate vectors through the Gram matrix.
    pub fn pair_coords(&self, x: &[K], y: &[K]) -> K {
        let mut s = K::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                s = s.add(&xi.mul(yj).mul(&self.gram[i][j]));
            }
        }
        s
    }

    /// Canonical window lift of a quotient-coordinate vector.
    pub fn lift(&self, coords: &[K]) -> Vec<K> {
        let n = self.window.dim();
        let mut v = vec![K::zero(); n];
        for (c, row) in coords.iter().zip(self.basis.iter()) {
            if c.is_zero() {
                continue;
            }
            for (vi, ri) in v.iter_mut().zip(row.iter()) {
                let t = ri.mul(c);
                *vi = vi.add(&t);
            }
        }
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsotropyReport {
    pub isotropic: bool,
    pub maximal: bool,
    /// Set when the window is not square, where maximality is only
    /// meaningful relative to the window.
    pub relative_to_window: bool,
}
