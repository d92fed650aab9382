use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// returned in ascending order.
///
/// `a` is row-major `n x n` and is consumed as workspace.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Result<Vec<f64>> {
    let n = a.len();
    let scale: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    if scale == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let target = (f64::EPSILON * scale).powi(2);

    for _sweep in 0..MAX_SWEEPS {
        let off = off_diagonal(&a);
        if off <= target {
            return Ok(sorted_diagonal(&a));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p][p], a[q][q]);
                let small = 100.0 * apq.abs();
                if app.abs() + small == app.abs() && aqq.abs() + small == aqq.abs() && small < scale {
                    a[p][q] = 0.0;
                    a[q][p] = 0.0;
                    continue;
                }
                // annihilate a[p][q] with the smaller rotation angle
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                #[allow(clippy::needless_range_loop)]
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let (arp, arq) = (a[r][p], a[r][q]);
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[r][p] = new_rp;
                    a[p][r] = new_rp;
                    a[r][q] = new_rq;
                    a[q][r] = new_rq;
                }
            }
        }
    }
    let residual = off_diagonal(&a).sqrt();
    Err(Error::Convergence {
        sweeps: MAX_SWEEPS,
        residual,
    })
}

fn off_diagonal(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s += x * x;
            }
        }
    }
    s
}

fn sorted_diagonal(a: &[Vec<f64>]) -> Vec<f64> {
    let mut d: Vec<f64> = (0..a.len()).map(|i| a[i][i]).collect();
    d.sort_by(|x, y| x.total_cmp(y));
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let ev = symmetric_eigenvalues(vec![vec![0.0, 3.0], vec![3.0, 0.0]]).unwrap();
        assert!((ev[0] + 3.0).abs() < 1e-14 && (ev[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn known_spectrum() {
        // tridiagonal 2,-1 of order 5: 2 - 2cos(k pi / 6)
        let n = 5;
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n {
            a[i][i] = 2.0;
            if i + 1 < n {
                a[i][i + 1] = -1.0;
                a[i + 1][i] = -1.0;
            }
        }
        let ev = symmetric_eigenvalues(a).unwrap();
        for (k, got) in ev.iter().enumerate() {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / 6.0).cos();
            assert!((got - want).abs() < 1e-13, "{got} vs {want}");
        }
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(symmetric_eigenvalues(vec![vec![0.0; 3]; 3]).unwrap(), vec![0.0; 3]);
    }
}
