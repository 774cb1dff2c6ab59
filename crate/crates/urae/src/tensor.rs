//! Dense double-precision linear algebra: matrix products, a full SVD with a
//! fixed sign convention, symmetric eigenvalues, and norms.
//!
//! Everything here is sized for matrices of at most a few thousand entries
//! and tuned for reproducibility rather than throughput: the SVD and
//! eigenvalue routines are one-sided/cyclic Jacobi iterations, which are
//! deterministic for a given input and accurate to near machine precision on
//! well-conditioned inputs.

use crate::error::{Error, Result};

/// Relative threshold below which a Jacobi rotation is skipped.
const JACOBI_TOL: f64 = 1.0e-15;

/// Maximum number of Jacobi sweeps before reporting non-convergence.
const MAX_SWEEPS: usize = 60;

/// Eigenvalues of a Gram matrix in `[-1e-10, 0)` are rounding noise; they are
/// clamped to exactly zero.
const EIG_CLAMP: f64 = 1.0e-10;

/// Dense real matrix, row-major, double precision.
///
/// Zero-sized dimensions are permitted so that rank-0 adapter factors
/// (`c_in x 0` times `0 x c_out`) behave as exact zero products.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl WeightMatrix {
    /// Build a matrix from row-major data, validating length and finiteness.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Validation(format!(
                "data length {} does not match {}x{} = {}",
                data.len(),
                rows,
                cols,
                rows * cols
            )));
        }
        if let Some(idx) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::Validation(format!(
                "non-finite entry {} at flat index {idx}",
                data[idx]
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Identity matrix of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Build from nested rows; rows must have equal lengths.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Validation("ragged rows".into()));
        }
        Self::new(r, c, rows.iter().flatten().copied().collect())
    }

    /// Column vector (n x 1) from a slice.
    pub fn column(values: &[f64]) -> Result<Self> {
        Self::new(values.len(), 1, values.to_vec())
    }

    /// Square diagonal matrix with the given diagonal.
    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m.data[i * n + i] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        debug_assert!(row < self.rows && col < self.cols);
        self.data[row * self.cols + col] = value;
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    /// Elementwise sum; shapes must match.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "matrix addition", |a, b| a + b)
    }

    /// Elementwise difference; shapes must match.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "matrix subtraction", |a, b| a - b)
    }

    /// Every entry multiplied by `factor`.
    pub fn scale(&self, factor: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    fn zip_with(&self, other: &Self, context: &'static str, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Shape {
                context,
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// `self * v` for a length-`cols` vector.
    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.cols {
            return Err(Error::Shape {
                context: "matrix-vector product",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a * b)
                    .sum::<f64>()
            })
            .collect())
    }

    /// `self^T * v` for a length-`rows` vector.
    pub fn tr_mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.rows {
            return Err(Error::Shape {
                context: "transposed matrix-vector product",
                left_rows: self.cols,
                left_cols: self.rows,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        let mut out = vec![0.0; self.cols];
        for i in 0..self.rows {
            let vi = v[i];
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o += a * vi;
            }
        }
        Ok(out)
    }

    /// Frobenius norm: square root of the sum of squared entries.
    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Largest absolute entry (0 for empty matrices).
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Full SVD `W = U * diag(S) * V` with `U: c_in x c`, `S: c`, `V: c x c_out`
/// and `c = min(c_in, c_out)`.
///
/// Singular values are sorted descending; `U` has orthonormal columns and `V`
/// orthonormal rows. The sign convention (first nonzero entry of every `U`
/// column is non-negative) makes the factorization deterministic.
#[derive(Debug, Clone)]
pub struct SvdFactorization {
    pub u: WeightMatrix,
    pub s: Vec<f64>,
    pub v: WeightMatrix,
}

impl SvdFactorization {
    /// `U * diag(S) * V`, the reconstructed matrix.
    pub fn reconstruct(&self) -> WeightMatrix {
        let c = self.s.len();
        let mut scaled = self.v.clone();
        for k in 0..c {
            for j in 0..scaled.cols() {
                let v = scaled.get(k, j) * self.s[k];
                scaled.set(k, j, v);
            }
        }
        matmul(&self.u, &scaled).expect("factor shapes are consistent by construction")
    }
}

/// Standard matrix product.
pub fn matmul(a: &WeightMatrix, b: &WeightMatrix) -> Result<WeightMatrix> {
    if a.cols() != b.rows() {
        return Err(Error::Shape {
            context: "matrix product",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    let (m, k, n) = (a.rows(), a.cols(), b.cols());
    let mut out = vec![0.0; m * n];
    for i in 0..m {
        for l in 0..k {
            let ail = a.data[i * k + l];
            let brow = &b.data[l * n..(l + 1) * n];
            let orow = &mut out[i * n..(i + 1) * n];
            for (o, &bv) in orow.iter_mut().zip(brow) {
                *o += ail * bv;
            }
        }
    }
    Ok(WeightMatrix {
        rows: m,
        cols: n,
        data: out,
    })
}

/// Full singular value decomposition via one-sided Jacobi.
///
/// Deterministic for a given input; errors if the rotation sweeps fail to
/// converge within the iteration cap.
pub fn svd(w: &WeightMatrix) -> Result<SvdFactorization> {
    let (m, n) = w.shape();
    let (mut u, s, mut v) = if m >= n {
        jacobi_svd_tall(w)?
    } else {
        // Decompose the transpose and swap the roles of the factors.
        let (ut, s, vt) = jacobi_svd_tall(&w.transpose())?;
        (vt.transpose(), s, ut.transpose())
    };
    apply_sign_convention(&mut u, &mut v);
    Ok(SvdFactorization { u, s, v })
}

/// One-sided Jacobi SVD for `m >= n`. Returns `(U, S, V)` with `S` sorted
/// descending, before the sign convention is applied.
fn jacobi_svd_tall(w: &WeightMatrix) -> Result<(WeightMatrix, Vec<f64>, WeightMatrix)> {
    let (m, n) = w.shape();
    debug_assert!(m >= n);
    if n == 0 {
        return Ok((WeightMatrix::zeros(m, 0), Vec::new(), WeightMatrix::zeros(0, 0)));
    }

    let mut a = w.clone();
    // Accumulates the product of rotations Q; at convergence A*Q = U*Sigma,
    // so V = Q^T.
    let mut q = WeightMatrix::identity(n);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for qi in p + 1..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = 0.0;
                for i in 0..m {
                    let x = a.data[i * n + p];
                    let y = a.data[i * n + qi];
                    app += x * x;
                    aqq += y * y;
                    apq += x * y;
                }
                if apq == 0.0 || apq.abs() <= JACOBI_TOL * (app * aqq).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (aqq - app) / (2.0 * apq);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate_columns(&mut a, p, qi, c, s);
                rotate_columns(&mut q, p, qi, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numerical(format!(
            "SVD did not converge within {MAX_SWEEPS} sweeps for a {m}x{n} matrix"
        )));
    }

    // Column norms are the singular values; sort descending, stable in the
    // post-rotation column order so ties resolve deterministically.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|i| a.data[i * n + j].powi(2)).sum::<f64>().sqrt())
        .collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).unwrap().then(x.cmp(&y)));

    let mut u = WeightMatrix::zeros(m, n);
    let mut s = Vec::with_capacity(n);
    let mut v = WeightMatrix::zeros(n, n);
    for (slot, &j) in order.iter().enumerate() {
        s.push(norms[j]);
        if norms[j] > 0.0 {
            for i in 0..m {
                u.data[i * n + slot] = a.data[i * n + j] / norms[j];
            }
        }
        // V = Q^T: row `slot` of V is column `j` of Q.
        for i in 0..n {
            v.data[slot * n + i] = q.data[i * n + j];
        }
    }

    // Exactly-zero singular values leave their U columns undefined; complete
    // them to an orthonormal basis. Among the standard basis vectors, keep
    // the one with the largest component outside the span of the columns
    // already placed, then re-orthogonalize once for accuracy.
    for slot in 0..n {
        if s[slot] > 0.0 {
            continue;
        }
        let filled: Vec<usize> = (0..n)
            .filter(|&k| k != slot && !(s[k] == 0.0 && k > slot))
            .collect();
        let residual_of = |seed: &[f64]| -> Vec<f64> {
            let mut col = seed.to_vec();
            for &k in &filled {
                let dot: f64 = (0..m).map(|i| u.data[i * n + k] * col[i]).sum();
                for (i, c) in col.iter_mut().enumerate() {
                    *c -= dot * u.data[i * n + k];
                }
            }
            col
        };
        let mut best: Option<(f64, Vec<f64>)> = None;
        for cand in 0..m {
            let mut seed = vec![0.0; m];
            seed[cand] = 1.0;
            let col = residual_of(&seed);
            let norm = col.iter().map(|x| x * x).sum::<f64>().sqrt();
            if best.as_ref().map_or(true, |(b, _)| norm > *b) {
                let done = norm > 0.9;
                best = Some((norm, col));
                if done {
                    break;
                }
            }
        }
        let (norm, col) = best.expect("m >= n >= 1, so at least one candidate exists");
        if norm < 1.0e-8 {
            return Err(Error::Numerical(format!(
                "failed to complete orthonormal basis for a {m}x{n} matrix"
            )));
        }
        let refined = residual_of(&col);
        let refined_norm = refined.iter().map(|x| x * x).sum::<f64>().sqrt();
        for i in 0..m {
            u.data[i * n + slot] = refined[i] / refined_norm;
        }
    }

    Ok((u, s, v))
}

fn rotate_columns(a: &mut WeightMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.cols();
    for i in 0..a.rows() {
        let x = a.data[i * n + p];
        let y = a.data[i * n + q];
        a.data[i * n + p] = c * x - s * y;
        a.data[i * n + q] = s * x + c * y;
    }
}

/// Flip signs so the first nonzero entry of every `U` column is non-negative,
/// negating the matching `V` row to preserve the product.
fn apply_sign_convention(u: &mut WeightMatrix, v: &mut WeightMatrix) {
    let c = u.cols();
    for j in 0..c {
        let lead = (0..u.rows()).map(|i| u.get(i, j)).find(|&x| x != 0.0);
        if let Some(x) = lead {
            if x < 0.0 {
                for i in 0..u.rows() {
                    let val = -u.get(i, j);
                    u.set(i, j, val);
                }
                for i in 0..v.cols() {
                    let val = -v.get(j, i);
                    v.set(j, i, val);
                }
            }
        }
    }
}

/// Eigenvalues of a symmetric matrix, sorted descending.
///
/// The input must be square and symmetric to `1e-10` in max-abs deviation.
/// Values in `[-1e-10, 0)` are clamped to zero so Gram-matrix spectra stay
/// non-negative.
pub fn sym_eigvals(m: &WeightMatrix) -> Result<Vec<f64>> {
    let (r, c) = m.shape();
    if r != c {
        return Err(Error::Contract(format!(
            "symmetric eigenvalues need a square matrix, got {r}x{c}"
        )));
    }
    let mut max_asym = 0.0_f64;
    for i in 0..r {
        for j in (i + 1)..r {
            max_asym = max_asym.max((m.get(i, j) - m.get(j, i)).abs());
        }
    }
    if max_asym > 1.0e-10 {
        return Err(Error::Contract(format!(
            "matrix is asymmetric: max |a_ij - a_ji| = {max_asym:e}"
        )));
    }
    if r == 0 {
        return Ok(Vec::new());
    }

    // Work on the symmetrized copy so rotations preserve exact symmetry.
    let mut a = m.clone();
    for i in 0..r {
        for j in (i + 1)..r {
            let avg = 0.5 * (m.get(i, j) + m.get(j, i));
            a.set(i, j, avg);
            a.set(j, i, avg);
        }
    }

    let scale = a.frob_norm().max(f64::MIN_POSITIVE);
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..r - 1 {
            for q in p + 1..r {
                let apq = a.get(p, q);
                if apq.abs() <= JACOBI_TOL * scale {
                    continue;
                }
                rotated = true;
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                jacobi_rotate_sym(&mut a, p, q, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numerical(format!(
            "eigenvalue iteration did not converge within {MAX_SWEEPS} sweeps for a {r}x{r} matrix"
        )));
    }

    let mut eigs: Vec<f64> = (0..r).map(|i| a.get(i, i)).collect();
    for e in &mut eigs {
        if *e < 0.0 && *e >= -EIG_CLAMP {
            *e = 0.0;
        }
    }
    eigs.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(eigs)
}

fn jacobi_rotate_sym(a: &mut WeightMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.rows();
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let apq = a.get(p, q);
    a.set(p, p, c * c * app - 2.0 * s * c * apq + s * s * aqq);
    a.set(q, q, s * s * app + 2.0 * s * c * apq + c * c * aqq);
    a.set(p, q, 0.0);
    a.set(q, p, 0.0);
    for i in 0..n {
        if i == p || i == q {
            continue;
        }
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, c * aip - s * aiq);
        a.set(p, i, c * aip - s * aiq);
        a.set(i, q, s * aip + c * aiq);
        a.set(q, i, s * aip + c * aiq);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> WeightMatrix {
        let data: Vec<f64> = (0..rows * cols).map(|_| rng.sample(StandardNormal)).collect();
        WeightMatrix::new(rows, cols, data).unwrap()
    }

    #[test]
    fn construction_rejects_bad_length_and_nonfinite() {
        assert!(WeightMatrix::new(2, 2, vec![1.0; 3]).is_err());
        assert!(WeightMatrix::new(1, 2, vec![1.0, f64::NAN]).is_err());
        assert!(WeightMatrix::new(1, 2, vec![1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn matmul_identity_passthrough() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = random_matrix(3, 5, &mut rng);
        let out = matmul(&WeightMatrix::identity(3), &m).unwrap();
        assert_eq!(out.data(), m.data());
    }

    #[test]
    fn matmul_hand_example() {
        let a = WeightMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let b = WeightMatrix::from_rows(&[vec![0.0], vec![1.0]]).unwrap();
        let out = matmul(&a, &b).unwrap();
        assert_eq!(out.data(), &[2.0, 4.0]);
    }

    #[test]
    fn matmul_matches_naive_oracle() {
        // Independent oracle: textbook dot-product accumulation per entry.
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_matrix(5, 4, &mut rng);
        let b = random_matrix(4, 3, &mut rng);
        let out = matmul(&a, &b).unwrap();
        for i in 0..5 {
            for j in 0..3 {
                let expected: f64 = (0..4).map(|k| a.get(i, k) * b.get(k, j)).sum();
                assert!((out.get(i, j) - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn matmul_shape_error_names_both_shapes() {
        let a = WeightMatrix::zeros(2, 3);
        let b = WeightMatrix::zeros(2, 2);
        let err = matmul(&a, &b).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("2x3") && msg.contains("2x2"), "{msg}");
    }

    #[test]
    fn matmul_zero_inner_dimension_gives_zero_matrix() {
        let a = WeightMatrix::zeros(3, 0);
        let b = WeightMatrix::zeros(0, 4);
        let out = matmul(&a, &b).unwrap();
        assert_eq!(out.shape(), (3, 4));
        assert!(out.data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn matmul_associativity_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let a = random_matrix(4, 6, &mut rng);
            let b = random_matrix(6, 5, &mut rng);
            let c = random_matrix(5, 3, &mut rng);
            let left = matmul(&matmul(&a, &b).unwrap(), &c).unwrap();
            let right = matmul(&a, &matmul(&b, &c).unwrap()).unwrap();
            let diff = left.sub(&right).unwrap().frob_norm();
            assert!(diff <= 1e-9 * left.frob_norm().max(1.0));
        }
    }

    #[test]
    fn svd_identity() {
        let f = svd(&WeightMatrix::identity(3)).unwrap();
        assert_eq!(f.s, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn svd_diagonal() {
        let f = svd(&WeightMatrix::diag(&[3.0, 1.0])).unwrap();
        assert_eq!(f.s, vec![3.0, 1.0]);
    }

    fn check_factorization(w: &WeightMatrix, f: &SvdFactorization) {
        let c = w.rows().min(w.cols());
        assert_eq!(f.u.shape(), (w.rows(), c));
        assert_eq!(f.s.len(), c);
        assert_eq!(f.v.shape(), (c, w.cols()));
        for i in 0..c.saturating_sub(1) {
            assert!(f.s[i] >= f.s[i + 1]);
        }
        assert!(f.s.iter().all(|&s| s >= 0.0));
        let recon_err = f.reconstruct().sub(w).unwrap().frob_norm();
        assert!(
            recon_err <= 1e-10 * w.frob_norm().max(1.0),
            "reconstruction error {recon_err:e}"
        );
        let utu = matmul(&f.u.transpose(), &f.u).unwrap();
        let vvt = matmul(&f.v, &f.v.transpose()).unwrap();
        let gram_dev = |g: &WeightMatrix| {
            g.sub(&WeightMatrix::identity(c)).unwrap().max_abs()
        };
        assert!(gram_dev(&utu) <= 1e-10, "U^T U deviates by {:e}", gram_dev(&utu));
        assert!(gram_dev(&vvt) <= 1e-10, "V V^T deviates by {:e}", gram_dev(&vvt));
    }

    #[test]
    fn svd_random_shapes_roundtrip_and_orthogonality() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for &(m, n) in &[(4, 3), (3, 4), (1, 1), (6, 6), (8, 2), (2, 8), (64, 64), (64, 48)] {
            let w = random_matrix(m, n, &mut rng);
            let f = svd(&w).unwrap();
            check_factorization(&w, &f);
        }
    }

    #[test]
    fn svd_rank_deficient_and_zero_matrices() {
        // Duplicate columns force a zero singular value.
        let w = WeightMatrix::from_rows(&[
            vec![1.0, 1.0, 2.0],
            vec![2.0, 2.0, 0.0],
            vec![3.0, 3.0, 1.0],
            vec![0.0, 0.0, 4.0],
        ])
        .unwrap();
        let f = svd(&w).unwrap();
        check_factorization(&w, &f);
        assert!(f.s[2] <= 1e-12 * f.s[0]);

        let z = WeightMatrix::zeros(3, 2);
        let f = svd(&z).unwrap();
        check_factorization(&z, &f);
        assert_eq!(f.s, vec![0.0, 0.0]);
    }

    #[test]
    fn svd_is_deterministic_with_sign_convention() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let w = random_matrix(7, 5, &mut rng);
        let f1 = svd(&w).unwrap();
        let f2 = svd(&w).unwrap();
        assert_eq!(f1.u.data(), f2.u.data());
        assert_eq!(f1.s, f2.s);
        assert_eq!(f1.v.data(), f2.v.data());
        for j in 0..f1.u.cols() {
            let lead = (0..f1.u.rows()).map(|i| f1.u.get(i, j)).find(|&x| x != 0.0);
            assert!(lead.unwrap_or(0.0) >= 0.0);
        }
    }

    #[test]
    fn sym_eigvals_diagonal() {
        let eigs = sym_eigvals(&WeightMatrix::diag(&[4.0, 2.0, 0.0])).unwrap();
        assert_eq!(eigs, vec![4.0, 2.0, 0.0]);
    }

    #[test]
    fn sym_eigvals_gram_hand_example() {
        let phi = WeightMatrix::diag(&[1.0, 2.0]);
        let gram = matmul(&phi.transpose(), &phi).unwrap();
        let eigs = sym_eigvals(&gram).unwrap();
        assert_eq!(eigs, vec![4.0, 1.0]);
    }

    #[test]
    fn sym_eigvals_rejects_asymmetric_input() {
        let m = WeightMatrix::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(sym_eigvals(&m), Err(Error::Contract(_))));
        let rect = WeightMatrix::zeros(2, 3);
        assert!(matches!(sym_eigvals(&rect), Err(Error::Contract(_))));
    }

    #[test]
    fn eigenvalues_match_squared_singular_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let phi = random_matrix(8, 5, &mut rng);
        let gram = matmul(&phi.transpose(), &phi).unwrap();
        let eigs = sym_eigvals(&gram).unwrap();
        let sv = svd(&phi).unwrap().s;
        for (lambda, s) in eigs.iter().zip(&sv) {
            let expected = s * s;
            assert!(
                (lambda - expected).abs() <= 1e-9 * expected.max(1e-30),
                "eig {lambda} vs squared singular value {expected}"
            );
        }
    }

    #[test]
    fn frob_norm_cases() {
        assert_eq!(WeightMatrix::zeros(3, 4).frob_norm(), 0.0);
        let m = WeightMatrix::from_rows(&[vec![3.0, 4.0]]).unwrap();
        assert_eq!(m.frob_norm(), 5.0);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let w = random_matrix(6, 6, &mut rng);
        let oracle: f64 = w.data().iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!((w.frob_norm() - oracle).abs() < 1e-12);
    }
}
