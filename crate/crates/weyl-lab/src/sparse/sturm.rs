//! Sturm sequence eigenvalue counting for symmetric tridiagonal matrices.
//! The LDLT recurrence on T - x I yields pivots whose negative signs count
//! eigenvalues below x (Sylvester inertia).

/// Counts eigenvalues of the tridiagonal matrix (diag, off) strictly below
/// `x`. Returns the count together with the smallest |pivot| encountered
/// before clamping, as a conditioning diagnostic.
#[must_use]
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> (usize, f64) {
    let n = diag.len();
    assert!(n == 0 || off.len() == n - 1, "band length mismatch");
    if n == 0 {
        return (0, f64::INFINITY);
    }
    // Pivot floor sized so that e^2 / pivmin cannot overflow.
    let max_off_sq = off.iter().fold(0.0f64, |m, e| m.max(e * e));
    let pivmin = 1e-292 * max_off_sq.max(1.0);

    let mut count = 0usize;
    let mut min_abs = f64::INFINITY;
    let mut q = diag[0] - x;
    for i in 0..n {
        if i > 0 {
            q = diag[i] - x - off[i - 1] * off[i - 1] / q;
        }
        min_abs = min_abs.min(q.abs());
        if q.abs() < pivmin {
            // Treat an exact tie as a negative pivot, matching the
            // shifted-count convention used upstream.
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    (count, min_abs)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Free-particle Dirichlet Laplacian on n nodes: eigenvalues are known in
    /// closed form, 2 - 2 cos(k pi / (n+1)) for the unit-coefficient stencil.
    fn laplacian_eigs(n: usize) -> Vec<f64> {
        (1..=n)
            .map(|k| 2.0 - 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos())
            .collect()
    }

    #[test]
    fn counts_match_closed_form_spectrum() {
        let n = 63;
        let diag = vec![2.0; n];
        let off = vec![-1.0; n - 1];
        let eigs = laplacian_eigs(n);
        for x in [0.0, 0.5, 1.0, 2.0, 3.3, 4.1] {
            let expected = eigs.iter().filter(|&&e| e < x).count();
            let (got, _) = sturm_count(&diag, &off, x);
            assert_eq!(got, expected, "x = {x}");
        }
    }

    #[test]
    fn diagonal_matrix_counts() {
        let diag = [0.5, 1.5, 2.5];
        let off = [0.0, 0.0];
        assert_eq!(sturm_count(&diag, &off, 2.0).0, 2);
        assert_eq!(sturm_count(&diag, &off, 0.5).0, 0);
        assert_eq!(sturm_count(&diag, &off, 99.0).0, 3);
    }

    #[test]
    fn tie_at_pivot_survives() {
        // x exactly on an eigenvalue of [[0,1],[1,0]]: pivots hit zero and the
        // clamp must keep the recurrence finite.
        let diag = [0.0, 0.0];
        let off = [1.0];
        let (c, min_abs) = sturm_count(&diag, &off, 1.0);
        assert_eq!(c, 1);
        assert!(min_abs.abs() < 1e-12);
        let (c, _) = sturm_count(&diag, &off, 0.0);
        assert_eq!(c, 1, "eigenvalue -1 sits below 0");
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(sturm_count(&[], &[], 1.0).0, 0);
    }
}
