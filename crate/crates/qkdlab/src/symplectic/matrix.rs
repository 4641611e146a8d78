//! Covariance and symplectic matrices for zero-mean Gaussian states.
//!
//! Quadratures are ordered `(x1, p1, ..., xn, pn)` and normalised to
//! shot-noise units, so a vacuum mode has unit variance on both
//! quadratures. Every state carries one label per mode, and operations
//! that single out modes address them by label: silent mode-ordering
//! drift is the dominant bug class in this kind of code, so reorderings
//! are always explicit.

use nalgebra::{DMatrix, Matrix2};

use crate::error::{Error, Result};

/// Maximum allowed `|Γ - Γᵀ|` entry for a covariance matrix.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Maximum allowed `|S Ω Sᵀ - Ω|` entry for a symplectic matrix.
pub const SYMPLECTIC_TOL: f64 = 1e-10;

/// The quadrature a homodyne detector reads out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrature {
    X,
    P,
}

pub(crate) fn sigma_z() -> Matrix2<f64> {
    Matrix2::new(1.0, 0.0, 0.0, -1.0)
}

/// The symplectic form Ω = ⊕ [[0, 1], [-1, 0]], one block per mode.
///
/// Antisymmetric with Ω² = -I.
pub fn symplectic_form(n_modes: usize) -> DMatrix<f64> {
    let mut omega = DMatrix::zeros(2 * n_modes, 2 * n_modes);
    for m in 0..n_modes {
        omega[(2 * m, 2 * m + 1)] = 1.0;
        omega[(2 * m + 1, 2 * m)] = -1.0;
    }
    omega
}

/// Second moments of a zero-mean Gaussian state, in shot-noise units.
#[derive(Debug, Clone)]
pub struct CovarianceMatrix {
    mat: DMatrix<f64>,
    labels: Vec<String>,
}

impl CovarianceMatrix {
    /// Wraps a symmetric `2n x 2n` matrix with one label per mode.
    ///
    /// Symmetry is enforced to [`SYMMETRY_TOL`] and the matrix is then
    /// symmetrised exactly; mode variances must be positive. Full
    /// physicality (`Γ + iΩ ⪰ 0`) is checked by the spectrum routines,
    /// not here, since it needs an eigendecomposition.
    pub fn new(entries: DMatrix<f64>, labels: Vec<String>) -> Result<Self> {
        let dim = entries.nrows();
        if entries.ncols() != dim || dim == 0 || dim % 2 != 0 {
            return Err(Error::DimensionMismatch(format!(
                "covariance matrix must be square with even dimension, got {}x{}",
                dim,
                entries.ncols()
            )));
        }
        if labels.len() * 2 != dim {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} modes",
                labels.len(),
                dim / 2
            )));
        }
        let mut max_asym = 0.0f64;
        for i in 0..dim {
            for j in (i + 1)..dim {
                max_asym = max_asym.max((entries[(i, j)] - entries[(j, i)]).abs());
            }
        }
        if max_asym > SYMMETRY_TOL {
            return Err(Error::NotSymmetric(max_asym));
        }
        let mat = (&entries + entries.transpose()) * 0.5;
        for m in 0..dim / 2 {
            for q in 0..2 {
                let v = mat[(2 * m + q, 2 * m + q)];
                if !(v > 0.0) {
                    return Err(Error::Unphysical(format!(
                        "mode {} has non-positive quadrature variance {v}",
                        labels[m]
                    )));
                }
            }
        }
        Ok(Self { mat, labels })
    }

    /// `n` vacuum modes with labels `m0..m{n-1}`.
    pub fn vacuum(n_modes: usize) -> Self {
        Self {
            mat: DMatrix::identity(2 * n_modes, 2 * n_modes),
            labels: (0..n_modes).map(|i| format!("m{i}")).collect(),
        }
    }

    pub fn n_modes(&self) -> usize {
        self.labels.len()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mode_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownMode(label.to_string()))
    }

    /// Replaces the mode labels, keeping the entries.
    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Self> {
        if labels.len() != self.n_modes() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} modes",
                labels.len(),
                self.n_modes()
            )));
        }
        self.labels = labels.into_iter().map(Into::into).collect();
        Ok(self)
    }

    /// The 2x2 block of second moments between modes `i` and `j`.
    pub fn mode_block(&self, i: usize, j: usize) -> Matrix2<f64> {
        Matrix2::new(
            self.mat[(2 * i, 2 * j)],
            self.mat[(2 * i, 2 * j + 1)],
            self.mat[(2 * i + 1, 2 * j)],
            self.mat[(2 * i + 1, 2 * j + 1)],
        )
    }

    /// Tensor product of two states (direct sum of covariance matrices).
    pub fn tensor(&self, other: &Self) -> Self {
        let (da, db) = (self.mat.nrows(), other.mat.nrows());
        let mut mat = DMatrix::zeros(da + db, da + db);
        mat.view_mut((0, 0), (da, da)).copy_from(&self.mat);
        mat.view_mut((da, da), (db, db)).copy_from(&other.mat);
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Self { mat, labels }
    }

    /// Restricts the state to the listed modes, in the listed order.
    ///
    /// Dropping modes is the partial trace of a Gaussian state; listing
    /// all modes in a new order is a pure relabelling permutation.
    pub fn keep_modes(&self, labels: &[&str]) -> Result<Self> {
        let idx: Vec<usize> = labels
            .iter()
            .map(|l| self.mode_index(l))
            .collect::<Result<_>>()?;
        for (a, &i) in idx.iter().enumerate() {
            if idx[..a].contains(&i) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate mode label {}",
                    labels[a]
                )));
            }
        }
        let k = idx.len();
        let mut mat = DMatrix::zeros(2 * k, 2 * k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                mat.view_mut((2 * a, 2 * b), (2, 2))
                    .copy_from(&self.mat.view((2 * i, 2 * j), (2, 2)));
            }
        }
        Ok(Self {
            mat,
            labels: labels.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// Reorders all modes to the given label sequence.
    pub fn permute(&self, order: &[&str]) -> Result<Self> {
        if order.len() != self.n_modes() {
            return Err(Error::DimensionMismatch(format!(
                "permutation lists {} of {} modes",
                order.len(),
                self.n_modes()
            )));
        }
        self.keep_modes(order)
    }

    /// Largest absolute entry; used for scale-aware tolerances.
    pub fn max_abs(&self) -> f64 {
        self.mat.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()))
    }

    pub(crate) fn from_parts(mat: DMatrix<f64>, labels: Vec<String>) -> Self {
        Self { mat, labels }
    }
}

/// A linear canonical (symplectic) transformation `S` with `S Ω Sᵀ = Ω`.
#[derive(Debug, Clone)]
pub struct SymplecticMatrix {
    mat: DMatrix<f64>,
}

impl SymplecticMatrix {
    pub fn new(mat: DMatrix<f64>) -> Result<Self> {
        let dim = mat.nrows();
        if mat.ncols() != dim || dim == 0 || dim % 2 != 0 {
            return Err(Error::DimensionMismatch(format!(
                "symplectic matrix must be square with even dimension, got {}x{}",
                dim,
                mat.ncols()
            )));
        }
        let omega = symplectic_form(dim / 2);
        let residual = &mat * &omega * mat.transpose() - &omega;
        let max = residual.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()));
        if max > SYMPLECTIC_TOL {
            return Err(Error::NotSymplectic(max));
        }
        Ok(Self { mat })
    }

    pub fn identity(n_modes: usize) -> Self {
        Self {
            mat: DMatrix::identity(2 * n_modes, 2 * n_modes),
        }
    }

    pub fn n_modes(&self) -> usize {
        self.mat.nrows() / 2
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }

    /// Embeds this transformation into an `n_total`-mode identity, acting
    /// on the listed modes (in this matrix's own mode order).
    pub fn embed(&self, n_total: usize, modes: &[usize]) -> Result<Self> {
        if modes.len() != self.n_modes() {
            return Err(Error::DimensionMismatch(format!(
                "{} target modes for a {}-mode transformation",
                modes.len(),
                self.n_modes()
            )));
        }
        for (a, &i) in modes.iter().enumerate() {
            if i >= n_total {
                return Err(Error::InvalidParameter(format!(
                    "mode index {i} out of range for {n_total} modes"
                )));
            }
            if modes[..a].contains(&i) {
                return Err(Error::InvalidParameter(format!("duplicate mode index {i}")));
            }
        }
        let mut mat = DMatrix::identity(2 * n_total, 2 * n_total);
        for (a, &i) in modes.iter().enumerate() {
            for (b, &j) in modes.iter().enumerate() {
                mat.view_mut((2 * i, 2 * j), (2, 2))
                    .copy_from(&self.mat.view((2 * a, 2 * b), (2, 2)));
            }
        }
        Ok(Self { mat })
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &Self) -> Result<Self> {
        if self.mat.nrows() != first.mat.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "composing {}x{} with {}x{}",
                self.mat.nrows(),
                self.mat.ncols(),
                first.mat.nrows(),
                first.mat.ncols()
            )));
        }
        Ok(Self {
            mat: &self.mat * &first.mat,
        })
    }
}

/// Transforms a state: `Γ → S Γ Sᵀ`. Labels are kept; callers relabel
/// when the transformation changes the physical meaning of a slot.
pub fn apply_symplectic(gamma: &CovarianceMatrix, s: &SymplecticMatrix) -> Result<CovarianceMatrix> {
    if gamma.matrix().nrows() != s.matrix().nrows() {
        return Err(Error::DimensionMismatch(format!(
            "{}-mode state under a {}-mode transformation",
            gamma.n_modes(),
            s.n_modes()
        )));
    }
    let raw = s.matrix() * gamma.matrix() * s.matrix().transpose();
    // the product is symmetric up to round-off; symmetrise exactly
    let mat = (&raw + raw.transpose()) * 0.5;
    Ok(CovarianceMatrix::from_parts(mat, gamma.labels().to_vec()))
}

/// Two-mode beam splitter of transmittance `t`:
/// `[[√t I, √(1-t) I], [-√(1-t) I, √t I]]`.
pub fn beam_splitter(t: f64) -> Result<SymplecticMatrix> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "beam-splitter transmittance {t} outside [0, 1]"
        )));
    }
    let (c, s) = (t.sqrt(), (1.0 - t).sqrt());
    let mut mat = DMatrix::zeros(4, 4);
    for q in 0..2 {
        mat[(q, q)] = c;
        mat[(q, q + 2)] = s;
        mat[(q + 2, q)] = -s;
        mat[(q + 2, q + 2)] = c;
    }
    Ok(SymplecticMatrix { mat })
}

/// Single-mode phase rotation by `theta`.
pub fn phase_rotation(theta: f64) -> SymplecticMatrix {
    let (s, c) = theta.sin_cos();
    SymplecticMatrix {
        mat: DMatrix::from_row_slice(2, 2, &[c, s, -s, c]),
    }
}

/// Single-mode squeezer `diag(e^r, e^-r)`.
pub fn squeezer(r: f64) -> SymplecticMatrix {
    SymplecticMatrix {
        mat: DMatrix::from_row_slice(2, 2, &[r.exp(), 0.0, 0.0, (-r).exp()]),
    }
}

/// Continuous-variable C-NOT (quantum non-demolition sum) gate on two
/// modes, in `(x1, p1, x2, p2)` ordering:
/// `x1 → x1 - k x2`, `p2 → p2 + k p1`, other quadratures unchanged.
pub fn cnot_gate(k: f64) -> SymplecticMatrix {
    SymplecticMatrix {
        mat: DMatrix::from_row_slice(
            4,
            4,
            &[
                1.0, 0.0, -k, 0.0, //
                0.0, 1.0, 0.0, 0.0, //
                0.0, 0.0, 1.0, 0.0, //
                0.0, k, 0.0, 1.0,
            ],
        ),
    }
}

/// Two-mode squeezed vacuum of variance `v`: diagonal blocks `v I`,
/// off-diagonal `√(v²-1) σ_z`. Pure for every `v ≥ 1`.
pub fn epr_covariance(v: f64) -> Result<CovarianceMatrix> {
    if !(v >= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "two-mode squeezing variance {v} below the vacuum limit 1"
        )));
    }
    let c = (v * v - 1.0).sqrt();
    let mat = DMatrix::from_row_slice(
        4,
        4,
        &[
            v, 0.0, c, 0.0, //
            0.0, v, 0.0, -c, //
            c, 0.0, v, 0.0, //
            0.0, -c, 0.0, v,
        ],
    );
    Ok(CovarianceMatrix {
        mat,
        labels: vec!["epr0".into(), "epr1".into()],
    })
}

/// Conditional state after a homodyne measurement of one quadrature of
/// one mode: `Γ' = γ_rest - c cᵀ / v`, where `v` is the measured
/// variance and `c` the correlation column.
///
/// The generalised inverse of the rank-one measured block reduces to the
/// scalar division by `v`; no general pseudo-inverse is involved.
pub fn condition_on_homodyne(
    gamma: &CovarianceMatrix,
    mode: &str,
    quadrature: Quadrature,
) -> Result<CovarianceMatrix> {
    let n = gamma.n_modes();
    if n < 2 {
        return Err(Error::DimensionMismatch(
            "cannot condition away the only mode".into(),
        ));
    }
    let m = gamma.mode_index(mode)?;
    let q = 2 * m
        + match quadrature {
            Quadrature::X => 0,
            Quadrature::P => 1,
        };
    let v = gamma.matrix()[(q, q)];
    if v <= 1e-12 {
        return Err(Error::InvalidParameter(format!(
            "measured quadrature of mode {mode} has zero variance"
        )));
    }
    let rest: Vec<usize> = (0..2 * n).filter(|&i| i / 2 != m).collect();
    let k = rest.len();
    let mut mat = DMatrix::zeros(k, k);
    for (a, &i) in rest.iter().enumerate() {
        let ci = gamma.matrix()[(i, q)];
        for (b, &j) in rest.iter().enumerate() {
            mat[(a, b)] = gamma.matrix()[(i, j)] - ci * gamma.matrix()[(j, q)] / v;
        }
    }
    let labels = gamma
        .labels()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != m)
        .map(|(_, l)| l.clone())
        .collect();
    Ok(CovarianceMatrix::from_parts(mat, labels))
}

/// Conditional state after a heterodyne measurement of one mode:
/// `Γ' = γ_rest - C (γ_mode + I)⁻¹ Cᵀ`.
pub fn condition_on_heterodyne(gamma: &CovarianceMatrix, mode: &str) -> Result<CovarianceMatrix> {
    let n = gamma.n_modes();
    if n < 2 {
        return Err(Error::DimensionMismatch(
            "cannot condition away the only mode".into(),
        ));
    }
    let m = gamma.mode_index(mode)?;
    let block = gamma.mode_block(m, m) + Matrix2::identity();
    let inv = block.try_inverse().ok_or_else(|| {
        Error::Numerical(format!("heterodyne block of mode {mode} is singular"))
    })?;
    let rest: Vec<usize> = (0..2 * n).filter(|&i| i / 2 != m).collect();
    let k = rest.len();
    // correlation columns against (x_mode, p_mode)
    let mut c = DMatrix::zeros(k, 2);
    for (a, &i) in rest.iter().enumerate() {
        c[(a, 0)] = gamma.matrix()[(i, 2 * m)];
        c[(a, 1)] = gamma.matrix()[(i, 2 * m + 1)];
    }
    let correction = &c * inv * c.transpose();
    let mut mat = DMatrix::zeros(k, k);
    for (a, &i) in rest.iter().enumerate() {
        for (b, &j) in rest.iter().enumerate() {
            mat[(a, b)] = gamma.matrix()[(i, j)] - correction[(a, b)];
        }
    }
    let mat = (&mat + mat.transpose()) * 0.5;
    let labels = gamma
        .labels()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != m)
        .map(|(_, l)| l.clone())
        .collect();
    Ok(CovarianceMatrix::from_parts(mat, labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn thermal(v: f64, label: &str) -> CovarianceMatrix {
        CovarianceMatrix::new(
            DMatrix::from_diagonal_element(2, 2, v),
            vec![label.to_string()],
        )
        .unwrap()
    }

    #[test]
    fn symplectic_form_single_mode() {
        let o = symplectic_form(1);
        assert_eq!(o, DMatrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]));
    }

    #[test]
    fn symplectic_form_squares_to_minus_identity() {
        let o = symplectic_form(2);
        assert_eq!(&o * &o, -DMatrix::<f64>::identity(4, 4));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(o[(i, j)], -o[(j, i)]);
            }
        }
    }

    #[test]
    fn beam_splitter_limits() {
        let id = beam_splitter(1.0).unwrap();
        assert_eq!(id.matrix(), &DMatrix::identity(4, 4));

        let swap = beam_splitter(0.0).unwrap();
        let mut expect = DMatrix::zeros(4, 4);
        for q in 0..2 {
            expect[(q, q + 2)] = 1.0;
            expect[(q + 2, q)] = -1.0;
        }
        assert_eq!(swap.matrix(), &expect);

        let half = beam_splitter(0.5).unwrap();
        let r = 0.5f64.sqrt();
        for q in 0..2 {
            assert_eq!(half.matrix()[(q, q)], r);
            assert_eq!(half.matrix()[(q, q + 2)], r);
            assert_eq!(half.matrix()[(q + 2, q)], -r);
        }

        assert!(beam_splitter(-0.1).is_err());
        assert!(beam_splitter(1.1).is_err());
    }

    #[test]
    fn beam_splitter_is_orthogonal_symplectic() {
        let s = beam_splitter(0.37).unwrap();
        let prod = s.matrix().transpose() * s.matrix();
        let max = (prod - DMatrix::identity(4, 4))
            .iter()
            .fold(0.0f64, |a, &v| a.max(v.abs()));
        assert!(max < 1e-14);
        SymplecticMatrix::new(s.matrix().clone()).unwrap();
    }

    #[test]
    fn cnot_gate_is_symplectic_and_identity_at_zero() {
        SymplecticMatrix::new(cnot_gate(0.73).matrix().clone()).unwrap();
        assert_eq!(cnot_gate(0.0).matrix(), &DMatrix::identity(4, 4));
    }

    #[test]
    fn epr_limits() {
        let vac = epr_covariance(1.0).unwrap();
        assert_eq!(vac.matrix(), &DMatrix::identity(4, 4));

        let e = epr_covariance(2.0).unwrap();
        let c = 3.0f64.sqrt();
        assert_eq!(e.matrix()[(0, 2)], c);
        assert_eq!(e.matrix()[(1, 3)], -c);
        assert_eq!(e.matrix()[(0, 0)], 2.0);

        assert!(epr_covariance(0.9).is_err());
    }

    #[test]
    fn apply_identity_and_zero_cnot_leave_state_unchanged() {
        let gamma = epr_covariance(3.0).unwrap();
        for s in [SymplecticMatrix::identity(2), cnot_gate(0.0)] {
            let out = apply_symplectic(&gamma, &s).unwrap();
            assert_eq!(out.matrix(), gamma.matrix());
        }
    }

    #[test]
    fn apply_rejects_dimension_mismatch() {
        let gamma = epr_covariance(3.0).unwrap();
        assert!(apply_symplectic(&gamma, &SymplecticMatrix::identity(3)).is_err());
    }

    #[test]
    fn constructor_rejects_bad_input() {
        let asym = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.3, 1.0]);
        assert!(matches!(
            CovarianceMatrix::new(asym, vec!["a".into()]),
            Err(Error::NotSymmetric(_))
        ));

        let odd = DMatrix::identity(3, 3);
        assert!(CovarianceMatrix::new(odd, vec!["a".into()]).is_err());

        // label count must match the mode count
        let two_modes = DMatrix::identity(4, 4);
        assert!(CovarianceMatrix::new(two_modes, vec!["a".into()]).is_err());

        let mut neg = DMatrix::identity(2, 2);
        neg[(0, 0)] = -1.0;
        assert!(matches!(
            CovarianceMatrix::new(neg, vec!["a".into()]),
            Err(Error::Unphysical(_))
        ));
    }

    #[test]
    fn homodyne_on_uncorrelated_mode_leaves_rest_unchanged() {
        let gamma = CovarianceMatrix::vacuum(1)
            .with_labels(vec!["vac"])
            .unwrap()
            .tensor(&epr_covariance(4.0).unwrap());
        let out = condition_on_homodyne(&gamma, "vac", Quadrature::X).unwrap();
        assert_eq!(out.labels(), &["epr0".to_string(), "epr1".to_string()]);
        assert_eq!(out.matrix(), epr_covariance(4.0).unwrap().matrix());
    }

    #[test]
    fn homodyne_on_epr_half_gives_squeezed_remainder() {
        // x-measurement on one half of a two-mode squeezed state leaves
        // the other half in diag(1/v, v); p-measurement mirrors it.
        let v = 5.0;
        let gamma = epr_covariance(v).unwrap();
        let out = condition_on_homodyne(&gamma, "epr0", Quadrature::X).unwrap();
        assert!((out.matrix()[(0, 0)] - 1.0 / v).abs() < 1e-14);
        assert!((out.matrix()[(1, 1)] - v).abs() < 1e-14);
        assert!(out.matrix()[(0, 1)].abs() < 1e-14);

        let out_p = condition_on_homodyne(&gamma, "epr0", Quadrature::P).unwrap();
        assert!((out_p.matrix()[(0, 0)] - v).abs() < 1e-14);
        assert!((out_p.matrix()[(1, 1)] - 1.0 / v).abs() < 1e-14);
    }

    #[test]
    fn heterodyne_on_epr_half_prepares_vacuum() {
        // remote coherent-state preparation: the conditional state of the
        // other half is exactly the vacuum
        let gamma = epr_covariance(7.0).unwrap();
        let out = condition_on_heterodyne(&gamma, "epr0").unwrap();
        let residual = (out.matrix() - DMatrix::identity(2, 2))
            .iter()
            .fold(0.0f64, |a, &v| a.max(v.abs()));
        assert!(residual < 1e-12, "residual {residual}");
    }

    #[test]
    fn heterodyne_on_uncorrelated_vacuum_leaves_rest_unchanged() {
        let gamma = thermal(6.0, "t").tensor(&CovarianceMatrix::vacuum(1));
        let out = condition_on_heterodyne(&gamma, "m0").unwrap();
        assert_eq!(out.matrix(), thermal(6.0, "t").matrix());
    }

    #[test]
    fn keep_modes_reorders_and_traces() {
        let gamma = thermal(2.0, "a").tensor(&thermal(3.0, "b")).tensor(&thermal(4.0, "c"));
        let sub = gamma.keep_modes(&["c", "a"]).unwrap();
        assert_eq!(sub.labels(), &["c".to_string(), "a".to_string()]);
        assert_eq!(sub.matrix()[(0, 0)], 4.0);
        assert_eq!(sub.matrix()[(2, 2)], 2.0);

        assert!(gamma.keep_modes(&["a", "a"]).is_err());
        assert!(gamma.keep_modes(&["z"]).is_err());
        assert!(gamma.permute(&["a", "b"]).is_err());
    }

    #[test]
    fn embed_beam_splitter_into_three_modes() {
        let s = beam_splitter(0.3).unwrap().embed(3, &[2, 0]).unwrap();
        SymplecticMatrix::new(s.matrix().clone()).unwrap();
        let (c, r) = (0.3f64.sqrt(), 0.7f64.sqrt());
        // first listed mode (index 2) carries the √t diagonal
        assert_eq!(s.matrix()[(4, 4)], c);
        assert_eq!(s.matrix()[(4, 0)], r);
        assert_eq!(s.matrix()[(0, 4)], -r);
        assert_eq!(s.matrix()[(0, 0)], c);
        // untouched mode
        assert_eq!(s.matrix()[(2, 2)], 1.0);

        assert!(beam_splitter(0.3).unwrap().embed(3, &[0]).is_err());
        assert!(beam_splitter(0.3).unwrap().embed(3, &[0, 3]).is_err());
        assert!(beam_splitter(0.3).unwrap().embed(3, &[1, 1]).is_err());
    }
}
