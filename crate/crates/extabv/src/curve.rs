//! Hyperelliptic models `y^2 = f(x)` with the marked Weierstrass point at
//! infinity, and the Laurent data they induce.
//!
//! The local parameter at infinity is pinned so that `x = z^{-2}` exactly;
//! then `y = z^{-(2g+1)} sqrt(z^{2(2g+1)} f(z^{-2}))` and every expansion
//! is a series in even powers of z shifted by the pole order. Functions
//! with poles only at infinity span the pole-order semigroup <2, 2g+1>;
//! their window shadows build the K0 subspace. The differentials
//! `x^{i-1} dx/y` (first kind) and `x^{g+j-1} dx/y` (second kind) have
//! antiderivatives that extend K0 to its annihilator.

use thiserror::Error;

use crate::scalar::{CoeffField, Rat};
use crate::series::{residue_pair, LaurentSeries, OneForm, SeriesError};
use crate::window::{QuotientData, WindowError, WindowSpec, WindowSubspace};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error("curve is singular: f has a repeated root")]
    SingularCurve,
    #[error("hyperelliptic model requires odd degree, got {0}")]
    OddDegreeRequired(usize),
    #[error("degree must be at least 3, got {0}")]
    DegreeTooSmall(usize),
    #[error("series error: {0}")]
    Series(#[from] SeriesError),
    #[error("window error: {0}")]
    Window(#[from] WindowError),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
}

/// `y^2 = f(x)` with `deg f = 2g + 1`, squarefree.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperellipticCurve {
    /// coefficients of f, ascending degree, leading coefficient nonzero
    f: Vec<Rat>,
    genus: i64,
}

impl HyperellipticCurve {
    pub fn new(f_coeffs: Vec<Rat>) -> Result<Self, CurveError> {
        let mut f = f_coeffs;
        while f.last().map_or(false, |c| c.is_zero()) {
            f.pop();
        }
        if f.len() < 2 {
            return Err(CurveError::DegreeTooSmall(f.len().saturating_sub(1)));
        }
        if !squarefree(&f) {
            return Err(CurveError::SingularCurve);
        }
        let deg = f.len() - 1;
        if deg % 2 == 0 {
            return Err(CurveError::OddDegreeRequired(deg));
        }
        if deg < 3 {
            return Err(CurveError::DegreeTooSmall(deg));
        }
        Ok(HyperellipticCurve {
            genus: ((deg - 1) / 2) as i64,
            f,
        })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.f.len() - 1
    }

    pub fn f_coeffs(&self) -> &[Rat] {
        &self.f
    }

    /// Expansions of x and y at the point at infinity, with y known
    /// through z^order. Requires order >= 2g+1.
    pub fn expand_at_infinity(&self, order: i64) -> Result<CurveExpansion, CurveError> {
        let d = self.degree() as i64; // 2g+1
        assert!(order >= d, "expansion order must be at least 2g+1");
        let x = LaurentSeries::monomial(-2, Rat::one());
        // w = z^{2d} f(z^{-2}) = sum_i f_i z^{2d - 2i}, constant term = lc(f)
        let w = LaurentSeries::from_terms(
            self.f
                .iter()
                .enumerate()
                .map(|(i, c)| (2 * d - 2 * i as i64, c.clone()))
                .collect(),
            order + d,
        );
        let y = w.sqrt()?.shift(-d);
        Ok(CurveExpansion { x, y })
    }

    /// K0 window: shadows of the monomials x^i y^e with pole order
    /// 2i + (2g+1)e <= neg_depth, constant terms dropped.
    pub fn k0_window(
        &self,
        window: WindowSpec,
    ) -> Result<WindowSubspace<Rat>, CurveError> {
        assert!(
            window.neg_depth() >= 2,
            "k0 window requires neg_depth >= 2"
        );
        // Multiplying by x^i = z^{-2i} lowers the known window by 2i, so
        // expand far enough that every shadow is sound through pos_height.
        let order = window.pos_height() + window.neg_depth();
        let exp = self.expand_at_infinity(order.max(self.degree() as i64))?;
        let series = self.k0_series(&exp, window.neg_depth(), window.pos_height());
        for s in &series {
            debug_assert!(s.known_through() >= window.pos_height());
        }
        Ok(WindowSubspace::from_series(window, &series, 0.0)?)
    }

    /// The K0 generators as series: monomials x^i y^e of pole order <= n,
    /// known through kt, constant dropped.
    fn k0_series(
        &self,
        exp: &CurveExpansion,
        n: i64,
        kt: i64,
    ) -> Vec<LaurentSeries<Rat>> {
        let d = self.degree() as i64;
        let mut out = Vec::new();
        for eps in 0..=1i64 {
            let base = if eps == 0 {
                LaurentSeries::one()
            } else {
                exp.y.clone()
            };
            let mut i = if eps == 0 { 1 } else { 0 };
            loop {
                let pole = 2 * i + d * eps;
                if pole > n {
                    break;
                }
                let m = exp.x.pow(i as u32).mul(&base);
                out.push(m.with_known_through(kt).project_hprime());
                i += 1;
            }
        }
        out
    }

    /// First- and second-kind differentials with their antiderivatives,
    /// all known through at least `order`.
    pub fn differential_basis(&self, order: i64) -> Result<DifferentialData, CurveError> {
        let g = self.genus;
        let d = self.degree() as i64;
        let exp = self.expand_at_infinity(order + 2 * d + 2)?;
        let dx = exp.x.differentiate(); // -2 z^-3 dz, exact
        let inv_y = exp.y.invert()?;
        let base = dx.0.mul(&inv_y); // dx/y coefficient series
        let mut omega_forms = Vec::new();
        let mut eta_forms = Vec::new();
        let mut f_antiderivs = Vec::new();
        let mut g_antiderivs = Vec::new();
        for i in 1..=g {
            let w = OneForm(exp.x.pow((i - 1) as u32).mul(&base));
            let f = w.antidifferentiate()?; // zero residue: expansions are even
            assert!(f.valuation() >= 1, "first-kind antiderivative must lie in z C[[z]]");
            omega_forms.push(w);
            f_antiderivs.push(f);
        }
        for j in 1..=g {
            let w = OneForm(exp.x.pow((g + j - 1) as u32).mul(&base));
            let gg = w.antidifferentiate()?;
            eta_forms.push(w);
            g_antiderivs.push(gg);
        }
        Ok(DifferentialData {
            omega_forms,
            eta_forms,
            f_antiderivs,
            g_antiderivs,
        })
    }

    /// Checks the annihilator identity on a window: the span of K0 together
    /// with the differential antiderivatives equals the annihilator of K0,
    /// the induced quotient has dimension 2g, K0 is isotropic, and the Gram
    /// blocks have the expected shape.
    pub fn verify_annihilator_lemma(
        &self,
        window: WindowSpec,
    ) -> Result<AnnihilatorReport, CurveError> {
        let g = self.genus;
        let d = self.degree() as i64; // 2g+1
        if window.neg_depth() < d {
            return Err(CurveError::WindowTooSmall(format!(
                "neg_depth {} below pole order 2g+1 = {d}",
                window.neg_depth()
            )));
        }
        let k0 = self.k0_window(window)?;
        let ann = k0.annihilator(0.0);
        let dd = self.differential_basis(window.pos_height() + 1)?;
        let m = window.pos_height();
        let mut gens: Vec<LaurentSeries<Rat>> = Vec::new();
        gens.extend(dd.f_antiderivs.iter().map(|s| s.with_known_through(m)));
        gens.extend(dd.g_antiderivs.iter().map(|s| s.with_known_through(m)));
        let fg = WindowSubspace::from_series(window, &gens, 0.0)?;
        let omega = k0.join(&fg, 0.0)?;

        let omega_matches = omega == ann;
        if !omega_matches {
            // Boundary diagnosis: exponents above neg_depth cannot pair with
            // anything a K0 shadow sees, so they always enter the window
            // annihilator. If that tail accounts for the whole mismatch the
            // window was simply too small / too asymmetric.
            let tail: Vec<Vec<Rat>> = (window.neg_depth() + 1..=window.pos_height())
                .map(|e| {
                    let mut v = vec![Rat::zero(); window.dim()];
                    v[window.index_of(e).unwrap()] = Rat::one();
                    v
                })
                .collect();
            let tail_space = WindowSubspace::reduce_basis(window, tail, 0.0)?;
            let padded = omega.join(&tail_space, 0.0)?;
            if ann.is_subspace_of(&padded, 0.0) {
                return Err(CurveError::WindowTooSmall(format!(
                    "annihilator matches only up to the boundary tail of window ({}, {})",
                    window.neg_depth(),
                    window.pos_height()
                )));
            }
        }

        let quotient_dim = ann.dim() - k0.dim();
        let k0_isotropic = k0.is_isotropic(0.0);

        // Gram block structure on (f_1..f_g, g_1..g_g).
        let mut ff_zero = true;
        let mut fg_block = vec![vec![Rat::zero(); g as usize]; g as usize];
        for (i, fi) in dd.f_antiderivs.iter().enumerate() {
            for fj in &dd.f_antiderivs {
                if !residue_pair(fi, fj)?.is_zero() {
                    ff_zero = false;
                }
            }
            for (j, gj) in dd.g_antiderivs.iter().enumerate() {
                fg_block[i][j] = residue_pair(fi, gj)?;
            }
        }
        let mut k0f_zero = true;
        let exp = self.expand_at_infinity(window.pos_height() + 2 * d)?;
        for s in self.k0_series(&exp, window.neg_depth(), exp.y.known_through()) {
            for fi in &dd.f_antiderivs {
                if !residue_pair(&s, fi)?.is_zero() {
                    k0f_zero = false;
                }
            }
        }
        let fg_det = det(&fg_block);

        Ok(AnnihilatorReport {
            window,
            genus: g,
            k0_dim: k0.dim(),
            annihilator_dim: ann.dim(),
            quotient_dim,
            omega_matches_annihilator: omega_matches,
            k0_isotropic,
            ff_block_zero: ff_zero,
            k0f_block_zero: k0f_zero,
            fg_block,
            fg_det,
        })
    }
}

/// x and y as Laurent series in the local parameter at infinity.
#[derive(Debug, Clone)]
pub struct CurveExpansion {
    pub x: LaurentSeries<Rat>,
    pub y: LaurentSeries<Rat>,
}

/// Differentials of the first and second kind with antiderivatives.
#[derive(Debug, Clone)]
pub struct DifferentialData {
    pub omega_forms: Vec<OneForm<Rat>>,
    pub eta_forms: Vec<OneForm<Rat>>,
    pub f_antiderivs: Vec<LaurentSeries<Rat>>,
    pub g_antiderivs: Vec<LaurentSeries<Rat>>,
}

impl DifferentialData {
    /// Gram matrix of the residue pairing on (f_1..f_g, g_1..g_g).
    pub fn gram(&self) -> Result<Vec<Vec<Rat>>, SeriesError> {
        let all: Vec<&LaurentSeries<Rat>> = self
            .f_antiderivs
            .iter()
            .chain(self.g_antiderivs.iter())
            .collect();
        let n = all.len();
        let mut m = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = residue_pair(all[i], all[j])?;
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone)]
pub struct AnnihilatorReport {
    pub window: WindowSpec,
    pub genus: i64,
    pub k0_dim: usize,
    pub annihilator_dim: usize,
    pub quotient_dim: usize,
    pub omega_matches_annihilator: bool,
    pub k0_isotropic: bool,
    pub ff_block_zero: bool,
    pub k0f_block_zero: bool,
    pub fg_block: Vec<Vec<Rat>>,
    pub fg_det: Rat,
}

impl AnnihilatorReport {
    pub fn passed(&self) -> bool {
        self.omega_matches_annihilator
            && self.quotient_dim == 2 * self.genus as usize
            && self.k0_isotropic
            && self.ff_block_zero
            && self.k0f_block_zero
            && !self.fg_det.is_zero()
    }
}

/// Pole-order semigroup data at the marked point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupData {
    pub generators: (i64, i64),
    pub gaps: Vec<i64>,
}

/// The Weierstrass semigroup <2, 2g+1> and its gap set {1, 3, ..., 2g-1}.
pub fn weierstrass_semigroup(g: i64) -> SemigroupData {
    assert!(g >= 1, "genus must be at least 1");
    SemigroupData {
        generators: (2, 2 * g + 1),
        gaps: (0..g).map(|k| 2 * k + 1).collect(),
    }
}

/// Quotient scaffold for a curve: K0 window, its annihilator quotient, and
/// the classes of the differential antiderivatives in quotient coordinates.
#[derive(Debug, Clone)]
pub struct CurveQuotient {
    pub k0: WindowSubspace<Rat>,
    pub quotient: QuotientData<Rat>,
    /// quotient coordinates of the f_i classes, then the g_j classes
    pub f_classes: Vec<Vec<Rat>>,
    pub g_classes: Vec<Vec<Rat>>,
}

impl HyperellipticCurve {
    /// Builds the quotient picture used by the extended-variety layer.
    pub fn quotient_data(&self, window: WindowSpec) -> Result<CurveQuotient, CurveError> {
        let k0 = self.k0_window(window)?;
        let quotient = k0.quotient_gram(0.0)?;
        let dd = self.differential_basis(window.pos_height() + 1)?;
        let m = window.pos_height();
        let mut f_classes = Vec::new();
        let mut g_classes = Vec::new();
        for s in &dd.f_antiderivs {
            let shadow = window.shadow(&s.with_known_through(m));
            let coords = k0
                .quotient_coords(&quotient, &shadow, 0.0)
                .ok_or_else(|| {
                    CurveError::WindowTooSmall(
                        "antiderivative class does not lie in the window annihilator".into(),
                    )
                })?;
            f_classes.push(coords);
        }
        for s in &dd.g_antiderivs {
            let shadow = window.shadow(&s.with_known_through(m));
            let coords = k0
                .quotient_coords(&quotient, &shadow, 0.0)
                .ok_or_else(|| {
                    CurveError::WindowTooSmall(
                        "antiderivative class does not lie in the window annihilator".into(),
                    )
                })?;
            g_classes.push(coords);
        }
        Ok(CurveQuotient {
            k0,
            quotient,
            f_classes,
            g_classes,
        })
    }
}

fn squarefree(f: &[Rat]) -> bool {
    // gcd(f, f') is constant
    let fp: Vec<Rat> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.mul(&Rat::from_i64(i as i64)))
        .collect();
    poly_gcd_degree(f.to_vec(), fp) == 0
}

fn poly_degree(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_gcd_degree(mut a: Vec<Rat>, mut b: Vec<Rat>) -> usize {
    loop {
        let Some(db) = poly_degree(&b) else {
            return poly_degree(&a).unwrap_or(0);
        };
        let da = match poly_degree(&a) {
            Some(d) => d,
            None => return db,
        };
        if da < db {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // a -= (lead_a / lead_b) x^{da-db} * b
        let factor = a[da].div(&b[db]);
        for i in 0..=db {
            let t = b[i].mul(&factor);
            a[i + da - db] = a[i + da - db].sub(&t);
        }
        a[da] = Rat::zero();
    }
}

fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    let mut a = m.to_vec();
    let mut d = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            a.swap(p, col);
            d = d.neg();
        }
        d = d.mul(&a[col][col]);
        let inv = Rat::one().div(&a[col][col]);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul(&inv);
            for c in col..n {
                let t = a[col][c].mul(&f);
                a[r][c] = a[r][c].sub(&t);
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> Rat {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn curve(coeffs: &[i64]) -> HyperellipticCurve {
        HyperellipticCurve::new(coeffs.iter().map(|&c| rat(c, 1)).collect()).unwrap()
    }

    #[test]
    fn construction_errors() {
        // x^2: not squarefree (checked before parity)
        assert_eq!(
            HyperellipticCurve::new(vec![rat(0, 1), rat(0, 1), rat(1, 1)]).unwrap_err(),
            CurveError::SingularCurve
        );
        // x^3: triple root
        assert_eq!(
            HyperellipticCurve::new(vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)])
                .unwrap_err(),
            CurveError::SingularCurve
        );
        // x^2 - 1: squarefree but even degree
        assert_eq!(
            HyperellipticCurve::new(vec![rat(-1, 1), rat(0, 1), rat(1, 1)]).unwrap_err(),
            CurveError::OddDegreeRequired(2)
        );
        // x: degree too small
        assert_eq!(
            HyperellipticCurve::new(vec![rat(0, 1), rat(1, 1)]).unwrap_err(),
            CurveError::DegreeTooSmall(1)
        );
    }

    #[test]
    fn expansion_cubic_plus_one() {
        // y^2 = x^3 + 1: y = z^-3 + z^3/2 - z^9/8 + O(z^15)
        let c = curve(&[1, 0, 0, 1]);
        let e = c.expand_at_infinity(14).unwrap();
        assert_eq!(e.x, LaurentSeries::monomial(-2, rat(1, 1)));
        assert_eq!(e.y.coeff(-3), rat(1, 1));
        assert_eq!(e.y.coeff(3), rat(1, 2));
        assert_eq!(e.y.coeff(9), rat(-1, 8));
        assert!(e.y.known_through() >= 14);
        // y^2 - f(x) = 0 through precision
        let diff = e.y.mul(&e.y).sub(
            &e.x.pow(3).add(&LaurentSeries::one()).with_known_through(11),
        );
        assert!(diff.is_zero());
    }

    #[test]
    fn expansion_lemniscatic_shape() {
        // y^2 = x^3 - x: y = z^-3 - z/2 - z^5/8 + O(z^9)
        let c = curve(&[0, -1, 0, 1]);
        let e = c.expand_at_infinity(8).unwrap();
        assert_eq!(e.y.coeff(-3), rat(1, 1));
        assert_eq!(e.y.coeff(1), rat(-1, 2));
        assert_eq!(e.y.coeff(5), rat(-1, 8));
    }

    #[test]
    fn expansion_genus_two() {
        // y^2 = x^5 + 1: y = z^-5 + z^5/2 + O(z^15)
        let c = curve(&[1, 0, 0, 0, 0, 1]);
        assert_eq!(c.genus(), 2);
        let e = c.expand_at_infinity(15).unwrap();
        assert_eq!(e.y.coeff(-5), rat(1, 1));
        assert_eq!(e.y.coeff(5), rat(1, 2));
        assert_eq!(e.y.coeff(15), rat(-1, 8));
    }

    #[test]
    fn expansion_nonmonic_square_lead() {
        // y^2 = 4x^3 - 4x: y = 2z^-3 - z - z^5/4 + ...
        let c = curve(&[0, -4, 0, 4]);
        let e = c.expand_at_infinity(8).unwrap();
        assert_eq!(e.y.coeff(-3), rat(2, 1));
        assert_eq!(e.y.coeff(1), rat(-1, 1));
        assert_eq!(e.y.coeff(5), rat(-1, 4));
    }

    #[test]
    fn semigroup_gaps() {
        assert_eq!(weierstrass_semigroup(1).gaps, vec![1]);
        assert_eq!(weierstrass_semigroup(2).gaps, vec![1, 3]);
        assert_eq!(weierstrass_semigroup(3).gaps, vec![1, 3, 5]);
        assert_eq!(weierstrass_semigroup(2).generators, (2, 5));
    }

    #[test]
    fn k0_dimensions() {
        let c = curve(&[1, 0, 0, 1]);
        let w = WindowSpec::new(5, 8).unwrap();
        assert_eq!(c.k0_window(w).unwrap().dim(), 4); // orders 2,3,4,5

        let c2 = curve(&[1, 0, 0, 0, 0, 1]);
        let w = WindowSpec::new(6, 8).unwrap();
        assert_eq!(c2.k0_window(w).unwrap().dim(), 4); // orders 2,4,5,6
    }

    #[test]
    fn k0_pole_orders_match_semigroup() {
        let c = curve(&[1, 0, 0, 0, 0, 1]); // g = 2
        let n = 11;
        let w = WindowSpec::new(n, n).unwrap();
        let k0 = c.k0_window(w).unwrap();
        let sg = weierstrass_semigroup(2);
        let realized: Vec<i64> = k0
            .basis()
            .iter()
            .map(|row| -w.exponent_at(row.iter().position(|c| !c.is_zero()).unwrap()))
            .collect();
        let expected: Vec<i64> = (2..=n)
            .filter(|k| !sg.gaps.contains(k))
            .collect();
        let mut sorted = realized.clone();
        sorted.sort();
        assert_eq!(sorted, expected);
    }

    #[test]
    fn differential_basis_cubic() {
        let c = curve(&[1, 0, 0, 1]);
        let dd = c.differential_basis(12).unwrap();
        // f1 = -2z + z^7/7 + O(z^13)
        assert_eq!(dd.f_antiderivs[0].coeff(1), rat(-2, 1));
        assert_eq!(dd.f_antiderivs[0].coeff(7), rat(1, 7));
        // g1 = 2z^-1 + z^5/5 + O(z^11)
        assert_eq!(dd.g_antiderivs[0].coeff(-1), rat(2, 1));
        assert_eq!(dd.g_antiderivs[0].coeff(5), rat(1, 5));
        // <f1, g1> = 4
        assert_eq!(
            residue_pair(&dd.f_antiderivs[0], &dd.g_antiderivs[0]).unwrap(),
            rat(4, 1)
        );
    }

    #[test]
    fn differential_basis_genus_two() {
        let c = curve(&[1, 0, 0, 0, 0, 1]);
        let dd = c.differential_basis(13).unwrap();
        // f1 = -(2/3) z^3 + O(z^13), f2 = -2z + O(z^11)
        assert_eq!(dd.f_antiderivs[0].coeff(3), rat(-2, 3));
        assert_eq!(dd.f_antiderivs[1].coeff(1), rat(-2, 1));
        // antidiagonal pairing block: <f_i, g_j> = 4/(2j-1) when i+j = g+1
        assert_eq!(
            residue_pair(&dd.f_antiderivs[0], &dd.g_antiderivs[1]).unwrap(),
            rat(4, 3)
        );
        assert_eq!(
            residue_pair(&dd.f_antiderivs[1], &dd.g_antiderivs[0]).unwrap(),
            rat(4, 1)
        );
        assert_eq!(
            residue_pair(&dd.f_antiderivs[0], &dd.g_antiderivs[0]).unwrap(),
            rat(0, 1)
        );
    }

    #[test]
    fn first_kind_lands_in_positive_part() {
        for coeffs in [vec![1i64, 0, 0, 1], vec![0, -1, 0, 1], vec![1, 0, 0, 0, 0, 1]] {
            let c = curve(&coeffs);
            let dd = c.differential_basis(12).unwrap();
            for f in &dd.f_antiderivs {
                assert!(f.valuation() >= 1);
            }
        }
    }

    #[test]
    fn annihilator_lemma_cubic() {
        let c = curve(&[1, 0, 0, 1]);
        let w = WindowSpec::square(8).unwrap();
        let r = c.verify_annihilator_lemma(w).unwrap();
        assert!(r.passed(), "report: {r:?}");
        assert_eq!(r.quotient_dim, 2);
    }

    #[test]
    fn annihilator_lemma_genus_two() {
        let c = curve(&[1, 0, 0, 0, 0, 1]);
        let w = WindowSpec::square(12).unwrap();
        let r = c.verify_annihilator_lemma(w).unwrap();
        assert!(r.passed(), "report: {r:?}");
        assert_eq!(r.quotient_dim, 4);
    }

    #[test]
    fn quotient_data_classes() {
        let c = curve(&[1, 0, 0, 1]);
        let w = WindowSpec::square(8).unwrap();
        let q = c.quotient_data(w).unwrap();
        assert_eq!(q.quotient.dim(), 2);
        // the pairing of the classes reproduces <f1, g1> = 4
        let p = q
            .quotient
            .pair_coords(&q.f_classes[0], &q.g_classes[0]);
        assert_eq!(p, rat(4, 1));
    }
}
