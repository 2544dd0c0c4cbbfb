//! Dense symmetric and symmetric-definite generalized eigensolvers.
//!
//! The generalized problem `A v = lambda B v` (A symmetric, B symmetric
//! positive definite) is reduced to a standard symmetric problem through the
//! Cholesky factor of B; the returned eigenvectors are B-orthonormal. The
//! rest of the crate depends only on this contract: eigenvalues sorted
//! ascending, eigenvectors as columns, and a reported residual
//! `max_i ||A v_i - lambda_i B v_i|| / ||A||`.

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};

const SYMMETRY_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct SymmetricEigenResult {
    /// Eigenvalues sorted ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `i` is the eigenvector of `eigenvalues[i]`; B-orthonormal for
    /// the generalized solver, orthonormal for the standard one.
    pub eigenvectors: DMatrix<f64>,
    /// `max_i ||A v_i - lambda_i B v_i||_2 / ||A||_F`.
    pub residual: f64,
}

fn symmetry_defect(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let mut defect: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            defect = defect.max((a[(i, j)] - a[(j, i)]).abs());
        }
    }
    defect
}

fn check_symmetric(a: &DMatrix<f64>) -> Result<()> {
    let scale = a.amax().max(1.0);
    let defect = symmetry_defect(a);
    if defect > SYMMETRY_TOL * scale {
        return Err(Error::NotSymmetric { defect });
    }
    Ok(())
}

fn sort_ascending(values: DVector<f64>, vectors: DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).unwrap());
    let sorted_values: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let mut sorted_vectors = DMatrix::zeros(vectors.nrows(), vectors.ncols());
    for (dst, &src) in order.iter().enumerate() {
        sorted_vectors.set_column(dst, &vectors.column(src));
    }
    (sorted_values, sorted_vectors)
}

fn pencil_residual(
    a: &DMatrix<f64>,
    b: Option<&DMatrix<f64>>,
    values: &[f64],
    vectors: &DMatrix<f64>,
) -> f64 {
    let norm_a = a.norm().max(f64::MIN_POSITIVE);
    let mut worst: f64 = 0.0;
    for (i, &lambda) in values.iter().enumerate() {
        let v = vectors.column(i);
        let bv = match b {
            Some(b) => b * v,
            None => v.clone_owned(),
        };
        let r = a * v - lambda * bv;
        worst = worst.max(r.norm());
    }
    worst / norm_a
}

/// Full spectrum of the standard symmetric problem `A v = lambda v`.
pub fn symmetric_eig(a: &DMatrix<f64>) -> Result<SymmetricEigenResult> {
    check_symmetric(a)?;
    let sym = SymmetricEigen::new(a.clone());
    let (eigenvalues, eigenvectors) = sort_ascending(sym.eigenvalues, sym.eigenvectors);
    let residual = pencil_residual(a, None, &eigenvalues, &eigenvectors);
    Ok(SymmetricEigenResult {
        eigenvalues,
        eigenvectors,
        residual,
    })
}

/// Full spectrum of `A v = lambda B v` with A symmetric and B symmetric
/// positive definite.
pub fn generalized_symmetric_eig(
    a: &DMatrix<f64>,
    b: &DMatrix<f64>,
) -> Result<SymmetricEigenResult> {
    assert_eq!(a.nrows(), a.ncols(), "A must be square");
    assert_eq!(b.nrows(), b.ncols(), "B must be square");
    assert_eq!(a.nrows(), b.nrows(), "A and B must have matching size");
    check_symmetric(a)?;
    check_symmetric(b)?;

    let chol = Cholesky::new(b.clone()).ok_or(Error::NotPositiveDefinite)?;
    let l = chol.l();

    // C = L^{-1} A L^{-T}, symmetrized against roundoff.
    let z = l
        .solve_lower_triangular(a)
        .ok_or(Error::NotPositiveDefinite)?;
    let c_t = l
        .solve_lower_triangular(&z.transpose())
        .ok_or(Error::NotPositiveDefinite)?;
    let c = 0.5 * (&c_t + c_t.transpose());

    let sym = SymmetricEigen::new(c);
    let q = sym.eigenvectors;
    // Back-substitute: V = L^{-T} Q, so V' B V = Q'Q = I.
    let v = l
        .transpose()
        .solve_upper_triangular(&q)
        .ok_or(Error::NotPositiveDefinite)?;

    let (eigenvalues, eigenvectors) = sort_ascending(sym.eigenvalues, v);
    let residual = pencil_residual(a, Some(b), &eigenvalues, &eigenvectors);
    Ok(SymmetricEigenResult {
        eigenvalues,
        eigenvectors,
        residual,
    })
}
