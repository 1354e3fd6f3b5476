//! Transfer-matrix engine over integer polynomials in `q`, with the
//! constrained spin models on paths and lanes that drive the growth-rate
//! bounds.
//!
//! A model is a square matrix of polynomials with an initial column and a
//! final row; its length-`n` partition function is `final · Mⁿ · init`,
//! computed by repeated mat-vec. Scalar per-step prefactors (the lane's
//! `(q²+q³)²`) are kept apart so polynomial degrees stay small and are
//! multiplied in at evaluation.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{NsgError, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

type IPoly = Poly<BigInt>;

/// Square matrix of polynomials with boundary vectors and an optional
/// per-step scalar prefactor.
#[derive(Debug, Clone, PartialEq)]
pub struct TransferModel {
    matrix: Vec<Vec<IPoly>>,
    init: Vec<IPoly>,
    exit: Vec<IPoly>,
    prefactor: Option<IPoly>,
}

impl TransferModel {
    pub fn new(
        matrix: Vec<Vec<IPoly>>,
        init: Vec<IPoly>,
        exit: Vec<IPoly>,
        prefactor: Option<IPoly>,
    ) -> Self {
        let n = matrix.len();
        assert!(matrix.iter().all(|row| row.len() == n));
        assert_eq!(init.len(), n);
        assert_eq!(exit.len(), n);
        TransferModel { matrix, init, exit, prefactor }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<IPoly>] {
        &self.matrix
    }

    /// Exact partition polynomial `final · Mⁿ · init` (times the n-th power
    /// of the prefactor), by repeated polynomial mat-vec.
    pub fn partition_polynomial(&self, n: usize) -> IPoly {
        let mut v: Vec<IPoly> = self.init.clone();
        for _ in 0..n {
            v = self.apply(&v);
        }
        let mut out = IPoly::new(vec![]);
        for (e, vi) in self.exit.iter().zip(&v) {
            out = out + (e * vi);
        }
        if let Some(pf) = &self.prefactor {
            let mut scale = IPoly::monomial(BigInt::one(), 0);
            for _ in 0..n {
                scale = &scale * pf;
            }
            out = &out * &scale;
        }
        out
    }

    fn apply(&self, v: &[IPoly]) -> Vec<IPoly> {
        self.matrix
            .iter()
            .map(|row| {
                let mut acc = IPoly::new(vec![]);
                for (a, b) in row.iter().zip(v) {
                    acc = acc + (a * b);
                }
                acc
            })
            .collect()
    }

    /// Numeric partition value at a point, in any scalar type.
    pub fn partition_value<S: Scalar>(&self, n: usize, q: &S) -> S {
        let step: Vec<Vec<S>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|p| p.eval_scalar(q)).collect())
            .collect();
        let pf = self.prefactor.as_ref().map(|p| p.eval_scalar(q));
        let mut v: Vec<S> = self.init.iter().map(|p| p.eval_scalar(q)).collect();
        for _ in 0..n {
            let mut next = vec![S::zero(); v.len()];
            for (out, row) in next.iter_mut().zip(&step) {
                for (a, b) in row.iter().zip(&v) {
                    *out = out.clone() + a.clone() * b.clone();
                }
            }
            if let Some(pf) = &pf {
                for x in next.iter_mut() {
                    *x = x.clone() * pf.clone();
                }
            }
            v = next;
        }
        let mut acc = S::zero();
        for (e, vi) in self.exit.iter().zip(&v) {
            acc = acc + e.eval_scalar(q) * vi.clone();
        }
        acc
    }

    /// Eigenvalues of the numeric matrix at `q0` (prefactor folded in),
    /// sorted by modulus descending. Sizes one and two use closed forms;
    /// larger matrices go through the characteristic polynomial with a
    /// simultaneous root iteration, polished by Newton to residuals below
    /// 1e-9.
    pub fn spectrum_at(&self, q0: f64) -> Vec<Complex64> {
        let n = self.dim();
        let scale = self.prefactor.as_ref().map_or(1.0, |p| p.eval_scalar(&q0));
        let m: Vec<Vec<f64>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|p| p.eval_scalar(&q0) * scale).collect())
            .collect();
        let mut eig = match n {
            0 => vec![],
            1 => vec![Complex64::new(m[0][0], 0.0)],
            2 => {
                let tr = m[0][0] + m[1][1];
                let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                let disc = Complex64::new(tr * tr - 4.0 * det, 0.0).sqrt();
                vec![
                    (Complex64::new(tr, 0.0) + disc) * 0.5,
                    (Complex64::new(tr, 0.0) - disc) * 0.5,
                ]
            }
            _ => {
                let charpoly = characteristic_polynomial(&m);
                polynomial_roots(&charpoly)
            }
        };
        eig.sort_by(|a, b| b.norm().partial_cmp(&a.norm()).unwrap());
        eig
    }
}

/// Monic characteristic polynomial coefficients (index = power of lambda)
/// via the Faddeev-LeVerrier recursion.
fn characteristic_polynomial(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut a: Vec<Vec<f64>> = m.to_vec();
    for k in 1..=n {
        if k > 1 {
            // A <- M (A + c_{n-k+1} I)
            let mut shifted = a.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] += coeffs[n - k + 1];
            }
            let mut next = vec![vec![0.0; n]; n];
            for i in 0..n {
                for j in 0..n {
                    next[i][j] = (0..n).map(|t| m[i][t] * shifted[t][j]).sum();
                }
            }
            a = next;
        }
        let trace: f64 = (0..n).map(|i| a[i][i]).sum();
        coeffs[n - k] = -trace / k as f64;
    }
    coeffs
}

/// All complex roots of a real polynomial by Durand-Kerner iteration with a
/// Newton polish.
fn polynomial_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let deriv = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &c) in coeffs.iter().enumerate().skip(1).rev() {
            acc = acc * z + c * i as f64;
        }
        acc
    };
    let radius = 1.0 + coeffs[..deg].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|i| radius * seed.powu(i as u32 + 1)).collect();
    for _ in 0..200 {
        let mut moved: f64 = 0.0;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved < 1e-14 * radius {
            break;
        }
    }
    for r in roots.iter_mut() {
        for _ in 0..8 {
            let d = deriv(*r);
            if d.norm() < 1e-300 {
                break;
            }
            let step = eval(*r) / d;
            *r -= step;
            if step.norm() < 1e-15 * radius {
                break;
            }
        }
        debug_assert!(eval(*r).norm() <= 1e-9 * radius.max(1.0), "unpolished root");
    }
    roots
}

/// The built-in models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelName {
    /// Spins {1,2,3,4} on a path, adjacent sums >= 4, free endpoints.
    Max5Path,
    /// Same path constraint with the first spin restricted to {1,2,3}.
    Max4Left,
    /// Spins {1,2,3} on a lane of stacked hexagons, adjacent sums >= 3.
    Lane,
    /// Two-state walk whose even powers bound the odd-lane-count correction.
    M3,
    /// Spins {1,2,3} on a path, adjacent sums >= 3, first spin in {1,2}.
    C3Path,
    /// Spins {1,2} on a path, adjacent sums >= 3; the flags allow spin 1 at
    /// the first and last vertex.
    PFlagged { start_one: bool, end_one: bool },
}

impl ModelName {
    pub fn all() -> Vec<ModelName> {
        let mut v = vec![
            ModelName::Max5Path,
            ModelName::Max4Left,
            ModelName::Lane,
            ModelName::M3,
            ModelName::C3Path,
        ];
        for &start_one in &[false, true] {
            for &end_one in &[false, true] {
                v.push(ModelName::PFlagged { start_one, end_one });
            }
        }
        v
    }
}

impl std::fmt::Display for ModelName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelName::Max5Path => write!(f, "MAX5_PATH"),
            ModelName::Max4Left => write!(f, "MAX4_LEFT"),
            ModelName::Lane => write!(f, "LANE"),
            ModelName::M3 => write!(f, "M3"),
            ModelName::C3Path => write!(f, "C3_PATH"),
            ModelName::PFlagged { start_one, end_one } => {
                write!(f, "P_FLAGGED_{}{}", u8::from(*start_one), u8::from(*end_one))
            }
        }
    }
}

impl std::str::FromStr for ModelName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "MAX5_PATH" => Ok(ModelName::Max5Path),
            "MAX4_LEFT" => Ok(ModelName::Max4Left),
            "LANE" => Ok(ModelName::Lane),
            "M3" => Ok(ModelName::M3),
            "C3_PATH" => Ok(ModelName::C3Path),
            "P_FLAGGED_00" => Ok(ModelName::PFlagged { start_one: false, end_one: false }),
            "P_FLAGGED_01" => Ok(ModelName::PFlagged { start_one: false, end_one: true }),
            "P_FLAGGED_10" => Ok(ModelName::PFlagged { start_one: true, end_one: false }),
            "P_FLAGGED_11" => Ok(ModelName::PFlagged { start_one: true, end_one: true }),
            other => Err(format!("unknown model {other:?}")),
        }
    }
}

fn mono(power: usize) -> IPoly {
    IPoly::monomial(BigInt::one(), power)
}

fn poly(coeffs: &[i64]) -> IPoly {
    IPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Build one named model.
pub fn builtin_model(name: ModelName) -> TransferModel {
    let q = poly(&[0, 1]);
    let q2 = poly(&[0, 0, 1]);
    let q3 = poly(&[0, 0, 0, 1]);
    let q34 = poly(&[0, 0, 0, 1, 1]); // q^3 + q^4
    let q23 = poly(&[0, 0, 1, 1]); // q^2 + q^3
    let one = mono(0);
    match name {
        ModelName::Max5Path | ModelName::Max4Left => {
            let matrix = vec![
                vec![IPoly::zero(), IPoly::zero(), q.clone()],
                vec![IPoly::zero(), q2.clone(), q2.clone()],
                vec![q34.clone(), q34.clone(), q34.clone()],
            ];
            let init = if name == ModelName::Max5Path {
                vec![q.clone(), q2.clone(), q34.clone()]
            } else {
                vec![q.clone(), q2.clone(), q3.clone()]
            };
            TransferModel::new(matrix, init, vec![one.clone(), one.clone(), one], None)
        }
        ModelName::Lane => {
            let q123 = poly(&[0, 1, 1, 1]); // q + q^2 + q^3
            let matrix = vec![
                vec![&q * &q123, &q * &q23, &q * &q123],
                vec![&q * &q23, &q * &q123, &q * &q123],
                vec![&q23 * &q123, &q23 * &q123, &q123 * &q123],
            ];
            let init = vec![&q * &q23, &q23 * &q, &q23 * &q23];
            TransferModel::new(
                matrix,
                init,
                vec![one.clone(), one.clone(), one],
                Some(&q23 * &q23),
            )
        }
        ModelName::M3 => {
            let matrix = vec![
                vec![IPoly::zero(), q.clone()],
                vec![q23.clone(), q23.clone()],
            ];
            TransferModel::new(matrix, vec![q, q23], vec![one.clone(), one], None)
        }
        ModelName::C3Path => {
            let matrix = vec![
                vec![IPoly::zero(), q.clone()],
                vec![q23.clone(), q23.clone()],
            ];
            TransferModel::new(matrix, vec![q, q2], vec![one.clone(), one], None)
        }
        ModelName::PFlagged { start_one, end_one } => {
            let matrix = vec![
                vec![IPoly::zero(), q.clone()],
                vec![q2.clone(), q2.clone()],
            ];
            let init = vec![if start_one { q } else { IPoly::zero() }, q2];
            let exit = vec![if end_one { one.clone() } else { IPoly::zero() }, one];
            TransferModel::new(matrix, init, exit, None)
        }
    }
}

/// All built-in models, keyed by name.
pub fn builtin_models() -> Vec<(ModelName, TransferModel)> {
    ModelName::all()
        .into_iter()
        .map(|n| (n, builtin_model(n)))
        .collect()
}

/// Transfer model for a general constrained spin path: one state per spin,
/// transitions where adjacent spins sum to at least `min_adjacent_sum`,
/// endpoint spins restricted to the given sets.
pub fn spin_path_model(
    spins: &[u32],
    min_adjacent_sum: u32,
    start: &[u32],
    end: &[u32],
) -> TransferModel {
    let n = spins.len();
    let mut matrix = vec![vec![IPoly::zero(); n]; n];
    for (to, &s_to) in spins.iter().enumerate() {
        for (from, &s_from) in spins.iter().enumerate() {
            if s_from + s_to >= min_adjacent_sum {
                matrix[to][from] = mono(s_to as usize);
            }
        }
    }
    let init = spins
        .iter()
        .map(|s| if start.contains(s) { mono(*s as usize) } else { IPoly::zero() })
        .collect();
    let exit = spins
        .iter()
        .map(|s| if end.contains(s) { mono(0) } else { IPoly::zero() })
        .collect();
    TransferModel::new(matrix, init, exit, None)
}

/// Explicit lane graph of `n` stacked hexagons: `4n + 2` vertices and the
/// rung/side edges. Vertices `2(i-1)` and `2(i-1)+1` are the left/right
/// rung endpoints at height `i`; the side midpoints follow after. Built
/// independently of the transfer matrix so enumeration over it can act as
/// an oracle for the lane model.
pub fn lane_graph(n: usize) -> (usize, Vec<(usize, usize)>) {
    let vertices = 4 * n + 2;
    let l = |i: usize| 2 * (i - 1);
    let r = |i: usize| 2 * (i - 1) + 1;
    let lp = |i: usize| 2 * (n + 1) + 2 * (i - 1);
    let rp = |i: usize| 2 * (n + 1) + 2 * (i - 1) + 1;
    let mut edges = Vec::with_capacity(5 * n + 1);
    for i in 1..=n + 1 {
        edges.push((l(i), r(i)));
    }
    for i in 1..=n {
        edges.push((l(i), lp(i)));
        edges.push((lp(i), l(i + 1)));
        edges.push((r(i), rp(i)));
        edges.push((rp(i), r(i + 1)));
    }
    (vertices, edges)
}

/// Cylinder partition bound `S_n = L_n (1 + M_n) / (1 - L_n)` evaluated at
/// `q0`; diverges when the lane value reaches 1.
pub fn s_series_term(n: usize, q0: f64) -> Result<f64> {
    let lane = builtin_model(ModelName::Lane);
    let m3 = builtin_model(ModelName::M3);
    let l_n = lane.partition_value(n, &q0);
    if l_n >= 1.0 {
        return Err(NsgError::Divergent { n, value: l_n });
    }
    let m_n = m3.partition_value(2 * n, &q0);
    Ok(l_n * (1.0 + m_n) / (1.0 - l_n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::DoubleDouble;

    /// Independent oracle: enumerate all spin sequences of length `n + 1`
    /// directly and collect the weight polynomial.
    fn enumerate_path(
        spins: &[u32],
        min_sum: u32,
        start: &[u32],
        end: &[u32],
        n: usize,
    ) -> IPoly {
        let mut counts: Vec<u64> = vec![];
        let mut seq = vec![0u32; n + 1];
        fn rec(
            spins: &[u32],
            min_sum: u32,
            start: &[u32],
            end: &[u32],
            seq: &mut Vec<u32>,
            pos: usize,
            counts: &mut Vec<u64>,
        ) {
            if pos == seq.len() {
                let total: u32 = seq.iter().sum();
                if counts.len() <= total as usize {
                    counts.resize(total as usize + 1, 0);
                }
                counts[total as usize] += 1;
                return;
            }
            for &s in spins {
                if pos == 0 && !start.contains(&s) {
                    continue;
                }
                if pos > 0 && seq[pos - 1] + s < min_sum {
                    continue;
                }
                if pos == seq.len() - 1 && !end.contains(&s) {
                    continue;
                }
                seq[pos] = s;
                rec(spins, min_sum, start, end, seq, pos + 1, counts);
            }
        }
        rec(spins, min_sum, start, end, &mut seq, 0, &mut counts);
        IPoly::new(counts.into_iter().map(BigInt::from).collect())
    }

    fn golden() -> f64 {
        Scalar::golden_ratio_inv()
    }

    #[test]
    fn max5_matrix_row_and_base_case() {
        let m = builtin_model(ModelName::Max5Path);
        let q34 = poly(&[0, 0, 0, 1, 1]);
        assert_eq!(m.matrix()[2], vec![q34.clone(), q34.clone(), q34]);
        // n = 0 partition is the sum of the initial weights
        assert_eq!(m.partition_polynomial(0), poly(&[0, 1, 1, 1, 1]));
    }

    #[test]
    fn path_models_match_exhaustive_enumeration() {
        let all = [1, 2, 3, 4];
        let first3 = [1, 2, 3];
        let onetwo = [1, 2];
        let two = [2];
        for n in 0..=6 {
            assert_eq!(
                builtin_model(ModelName::Max5Path).partition_polynomial(n),
                enumerate_path(&all, 4, &all, &all, n),
                "MAX5 n={n}"
            );
            assert_eq!(
                builtin_model(ModelName::Max4Left).partition_polynomial(n),
                enumerate_path(&all, 4, &first3, &all, n),
                "MAX4_LEFT n={n}"
            );
            assert_eq!(
                builtin_model(ModelName::C3Path).partition_polynomial(n),
                enumerate_path(&first3, 3, &onetwo, &first3, n),
                "C3 n={n}"
            );
            for (ea, eo) in [(false, false), (false, true), (true, false), (true, true)] {
                let start: &[u32] = if ea { &onetwo } else { &two };
                let end: &[u32] = if eo { &onetwo } else { &two };
                assert_eq!(
                    builtin_model(ModelName::PFlagged { start_one: ea, end_one: eo })
                        .partition_polynomial(n),
                    enumerate_path(&onetwo, 3, start, end, n),
                    "P_FLAGGED {ea}{eo} n={n}"
                );
            }
        }
    }

    #[test]
    fn spin_path_constructor_agrees_with_grouped_builtin() {
        let custom = spin_path_model(&[1, 2, 3, 4], 4, &[1, 2, 3, 4], &[1, 2, 3, 4]);
        let grouped = builtin_model(ModelName::Max5Path);
        for n in 0..=6 {
            assert_eq!(custom.partition_polynomial(n), grouped.partition_polynomial(n));
        }
    }

    #[test]
    fn lane_polynomial_matches_graph_enumeration() {
        for n in 0..=2 {
            let (vertices, edges) = lane_graph(n);
            assert_eq!(vertices, 4 * n + 2);
            let mut counts: Vec<u64> = vec![];
            let mut spins = vec![1u32; vertices];
            loop {
                if edges.iter().all(|&(a, b)| spins[a] + spins[b] >= 3) {
                    let total: u32 = spins.iter().sum();
                    if counts.len() <= total as usize {
                        counts.resize(total as usize + 1, 0);
                    }
                    counts[total as usize] += 1;
                }
                // odometer over {1,2,3}^vertices
                let mut pos = 0;
                loop {
                    if pos == vertices {
                        break;
                    }
                    if spins[pos] < 3 {
                        spins[pos] += 1;
                        break;
                    }
                    spins[pos] = 1;
                    pos += 1;
                }
                if pos == vertices {
                    break;
                }
            }
            let oracle = IPoly::new(counts.into_iter().map(BigInt::from).collect());
            let lane = builtin_model(ModelName::Lane);
            assert_eq!(lane.partition_polynomial(n), oracle, "lane n={n}");
        }
    }

    #[test]
    fn c3_value_at_golden_point() {
        // P~_2(1/omega) = (13 - 5 sqrt 5)/2
        let v: f64 = builtin_model(ModelName::C3Path).partition_value(2, &golden());
        let expect = (13.0 - 5.0 * 5.0_f64.sqrt()) / 2.0;
        assert!((v - expect).abs() < 1e-12);
        assert!(v < 1.0);
    }

    #[test]
    fn spectra_at_golden_point() {
        let q = golden();
        let eig = builtin_model(ModelName::Max5Path).spectrum_at(q);
        let mags: Vec<f64> = eig.iter().map(|z| z.re).collect();
        assert!((mags[0] - 0.9143).abs() < 1e-3);
        assert!((mags[1] - -0.3981).abs() < 1e-3);
        assert!((mags[2] - 0.2476).abs() < 1e-3);
        assert!(eig.iter().all(|z| z.im.abs() < 1e-9));

        let eig = builtin_model(ModelName::Lane).spectrum_at(q);
        assert!((eig[0].re - 0.9297).abs() < 1e-3);
        assert!((eig[1].re - 0.1459).abs() < 1e-3);
        assert!((eig[2].re - 0.0916).abs() < 1e-3);

        let eig = builtin_model(ModelName::M3).spectrum_at(q);
        let winv = golden();
        assert!((eig[0].re - 1.0).abs() < 1e-9);
        assert!((eig[1].re + winv * winv).abs() < 1e-9);
    }

    #[test]
    fn spectral_decay_ratio() {
        let q = golden();
        for name in [
            ModelName::Max5Path,
            ModelName::Max4Left,
            ModelName::Lane,
            ModelName::PFlagged { start_one: true, end_one: true },
        ] {
            let model = builtin_model(name);
            let radius = model.spectrum_at(q)[0].norm();
            assert!(radius < 1.0, "{name} radius {radius}");
            let p40: f64 = model.partition_value(40, &q);
            let p41: f64 = model.partition_value(41, &q);
            assert!(p41 < p40, "{name} fails to decay");
            assert!(
                (p41 / p40 - radius).abs() < 1e-2,
                "{name}: ratio {} vs radius {radius}",
                p41 / p40
            );
        }
    }

    #[test]
    fn s_series_divergence_and_decay() {
        let q = golden();
        // the lane value sits above 1 for very short lanes
        assert!(matches!(
            s_series_term(0, q),
            Err(NsgError::Divergent { n: 0, .. })
        ));
        let mut prev = f64::INFINITY;
        let mut defined_from = None;
        for n in 0..=60 {
            match s_series_term(n, q) {
                Ok(s) => {
                    defined_from.get_or_insert(n);
                    assert!(s < prev, "S_n must decrease once defined");
                    prev = s;
                }
                Err(_) => assert!(defined_from.is_none()),
            }
        }
        assert_eq!(defined_from, Some(2));
        // decay is geometric at the lane spectral radius ~0.93
        assert!(prev < 0.05, "S_60 = {prev}");
        // at q = 0 everything vanishes
        assert_eq!(s_series_term(3, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn partition_value_consistent_across_scalars() {
        let lane = builtin_model(ModelName::Lane);
        let qd = DoubleDouble::golden_ratio_inv();
        let qf: f64 = golden();
        for n in 0..6 {
            let via_dd: DoubleDouble = lane.partition_value(n, &qd);
            let via_f: f64 = lane.partition_value(n, &qf);
            assert!((via_dd.to_f64() - via_f).abs() < 1e-13);
            let via_poly = lane.partition_polynomial(n).eval_scalar(&qf);
            assert!((via_poly - via_f).abs() < 1e-13);
        }
    }
}
