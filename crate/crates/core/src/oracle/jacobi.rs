//! Dense symmetric eigensolver based on cyclic Jacobi rotations.

use crate::error::Error;

use super::{LaplacianMatrix, NumericSpectrum};

const MAX_SWEEPS: usize = 100;

/// All eigenvalues of the Laplacian, ascending. Sweeps of plane rotations run
/// until the off-diagonal Frobenius norm drops below `tol` (capped at 100
/// sweeps). Tiny negative values within rounding error of zero are clamped
/// to zero; the matrix is positive semidefinite.
pub fn numeric_spectrum(l: &LaplacianMatrix, tol: f64) -> Result<Vec<f64>, Error> {
    assert!(tol > 0.0, "tolerance must be positive");
    Ok(numeric_spectrum_full(l, tol)?.values)
}

pub(crate) fn numeric_spectrum_full(l: &LaplacianMatrix, tol: f64) -> Result<NumericSpectrum, Error> {
    let n = l.n();
    let mut a: Vec<f64> = l.rows().flatten().map(|&v| v as f64).collect();
    if n <= 1 {
        return Ok(NumericSpectrum { values: vec![0.0; n], residual: 0.0 });
    }

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                let v = a[p * n + q];
                s += 2.0 * v * v;
            }
        }
        s.sqrt()
    };

    let mut residual = off_norm(&a);
    let mut sweeps = 0;
    while residual > tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NonConvergence { residual, sweeps });
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = 0.5 * (aqq - app) / apq;
                let t = if theta.abs() > 1e150 {
                    // Rotation angle underflows; 1/(2*theta) is the stable limit.
                    0.5 / theta
                } else {
                    let sign = if theta < 0.0 { -1.0 } else { 1.0 };
                    sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let ajp = a[j * n + p];
                    let ajq = a[j * n + q];
                    let new_p = ajp - s * (ajq + tau * ajp);
                    let new_q = ajq + s * (ajp - tau * ajq);
                    a[j * n + p] = new_p;
                    a[p * n + j] = new_p;
                    a[j * n + q] = new_q;
                    a[q * n + j] = new_q;
                }
            }
        }
        sweeps += 1;
        residual = off_norm(&a);
    }

    let scale = (0..n).map(|i| a[i * n + i].abs()).fold(1.0f64, f64::max);
    let clamp = tol.max(f64::EPSILON * n as f64 * scale);
    let mut values: Vec<f64> = (0..n)
        .map(|i| {
            let v = a[i * n + i];
            if v < 0.0 && v >= -clamp {
                0.0
            } else {
                v
            }
        })
        .collect();
    values.sort_by(f64::total_cmp);
    Ok(NumericSpectrum { values, residual })
}
