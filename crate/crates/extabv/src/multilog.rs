//! Multivariate residues of log-type forms.
//!
//! `MultiLogForm` models `psi = h dt_1 ∧ ... ∧ dt_n / (t_1^m t_2 ... t_n)`
//! with `h` polynomial, so the poles along `t_2, ..., t_n` are simple by
//! construction. The residue `Res psi` is the coefficient `a_{-1,...,-1}`
//! of the Laurent expansion; it also equals the one-variable residue
//! `res_0(h~ dt_1 / t_1^m)` with `h~(t_1) = h(t_1, 0, ..., 0)`. The
//! operation computes both and insists they agree.

use std::collections::BTreeMap;

use crate::scalar::CoeffField;
use crate::series::{LaurentSeries, OneForm, KT_EXACT};

/// A polynomial numerator over `n` variables with a pole order `m` on the
/// first coordinate and simple poles on the rest.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiLogForm<K: CoeffField> {
    n: usize,
    m: u32,
    /// exponent vector (length n) -> coefficient
    h: BTreeMap<Vec<u32>, K>,
}

impl<K: CoeffField> MultiLogForm<K> {
    /// `n >= 2` variables, pole order `m >= 1` on `t_1`, numerator terms as
    /// (exponent vector, coefficient) pairs.
    pub fn new(n: usize, m: u32, terms: Vec<(Vec<u32>, K)>) -> Result<Self, String> {
        if n < 2 {
            return Err(format!("need at least two variables, got {n}"));
        }
        if m < 1 {
            return Err("pole order m must be >= 1".into());
        }
        let mut h: BTreeMap<Vec<u32>, K> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n {
                return Err(format!(
                    "exponent vector length {} does not match n = {n}",
                    e.len()
                ));
            }
            let entry = h.entry(e).or_insert_with(K::zero);
            *entry = entry.add(&c);
        }
        h.retain(|_, c| !c.is_zero());
        Ok(MultiLogForm { n, m, h })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn pole_order(&self) -> u32 {
        self.m
    }

    /// Direct route: shift the exponents of `h` by the pole divisor and read
    /// off the coefficient at (-1, ..., -1).
    fn residue_direct(&self) -> K {
        let mut out = K::zero();
        for (e, c) in &self.h {
            // exponent of t_1 in psi: e[0] - m; of t_j (j >= 2): e[j] - 1
            let mut hits = i64::from(e[0]) - i64::from(self.m) == -1;
            for &ej in &e[1..] {
                hits &= i64::from(ej) - 1 == -1;
            }
            if hits {
                out = out.add(c);
            }
        }
        out
    }

    /// Reduced route: restrict `h` to the `t_1`-axis and take the usual
    /// one-variable residue of `h~ dt_1 / t_1^m` through the series engine.
    fn residue_reduced(&self) -> K {
        let terms: Vec<(i64, K)> = self
            .h
            .iter()
            .filter(|(e, _)| e[1..].iter().all(|&ej| ej == 0))
            .map(|(e, c)| (i64::from(e[0]) - i64::from(self.m), c.clone()))
            .collect();
        let form = OneForm(LaurentSeries::from_terms(terms, KT_EXACT));
        form.residue().expect("polynomial data is exact")
    }

    /// `Res psi = a_{-1,...,-1}`, computed by both routes; the two must
    /// agree (polynomial numerators make both exact).
    pub fn residue(&self) -> K {
        let direct = self.residue_direct();
        let reduced = self.residue_reduced();
        assert!(
            direct == reduced,
            "multivariate residue reduction mismatch: direct {direct:?} vs reduced {reduced:?}"
        );
        direct
    }
}
