//! Dense symmetric eigensolver (cyclic Jacobi rotations).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::Error;

/// Square matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, Error> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::precondition("matrix rows must all have the matrix size"));
        }
        Ok(Matrix { n, data: rows.concat() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }

    /// `x^T M y` for columns `x`, `y` of `v`.
    pub fn bilinear(&self, v: &Matrix, x: usize, y: usize) -> f64 {
        let n = self.n;
        let mut total = 0.0;
        for i in 0..n {
            let vi = v.get(i, x);
            if vi == 0.0 {
                continue;
            }
            let mut row = 0.0;
            for j in 0..n {
                row += self.get(i, j) * v.get(j, y);
            }
            total += vi * row;
        }
        total
    }
}

/// Eigenvalues (decreasing) with orthonormal eigenvectors as the matching columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    pub vectors: Matrix,
    pub sweeps: usize,
}

/// Cyclic Jacobi until the off-diagonal norm is at most `1e-10 max(1, ||A||_F)`.
pub fn jacobi(matrix: &Matrix) -> Result<Eigensystem, Error> {
    if !matrix.is_symmetric() {
        return Err(Error::precondition("Jacobi rotations need a symmetric matrix"));
    }
    let n = matrix.size();
    let mut a = matrix.clone();
    let mut v = Matrix::identity(n);
    let target = 1e-10 * matrix.frobenius().max(1.0);
    let mut sweeps = 0;
    while a.off_diagonal() > target {
        sweeps += 1;
        if sweeps > 100 {
            return Err(Error::consistency(format!("Jacobi on {n}x{n} did not converge"), a.off_diagonal(), target));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a.get(y, y).total_cmp(&a.get(x, x)));
    let values = order.iter().map(|&i| a.get(i, i)).collect();
    let mut vectors = Matrix::zeros(n);
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            vectors.set(k, new, v.get(k, old));
        }
    }
    Ok(Eigensystem { values, vectors, sweeps })
}

/// Eigenvalues of a tridiagonal matrix whose off-diagonal products are positive, via the
/// symmetric matrix with off-diagonal `sqrt(upper_i lower_i)`.
pub fn symmetrized_tridiagonal_eigenvalues(diag: &[f64], upper: &[f64], lower: &[f64]) -> Result<Vec<f64>, Error> {
    let n = diag.len();
    if upper.len() + 1 != n || lower.len() + 1 != n {
        return Err(Error::precondition("tridiagonal bands have inconsistent lengths"));
    }
    let mut m = Matrix::zeros(n);
    for i in 0..n {
        m.set(i, i, diag[i]);
    }
    for i in 0..n - 1 {
        let prod = upper[i] * lower[i];
        if !(prod > 0.0) {
            return Err(Error::precondition("off-diagonal products must be positive to symmetrize"));
        }
        m.set(i, i + 1, prod.sqrt());
        m.set(i + 1, i, prod.sqrt());
    }
    Ok(jacobi(&m)?.values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three_vertices() {
        let m = Matrix::from_rows(&[vec![0.0, 1.0, 0.0], vec![1.0, 0.0, 1.0], vec![0.0, 1.0, 0.0]]).unwrap();
        let e = jacobi(&m).unwrap();
        let s = 2f64.sqrt();
        for (got, want) in e.values.iter().zip([s, 0.0, -s]) {
            assert!((got - want).abs() < 1e-12);
        }
        // A v = θ v for the leading column
        let theta = e.values[0];
        for i in 0..3 {
            let av: f64 = (0..3).map(|j| m.get(i, j) * e.vectors.get(j, 0)).sum();
            assert!((av - theta * e.vectors.get(i, 0)).abs() < 1e-10);
        }
    }

    #[test]
    fn symmetrized_coxeter_quotient() {
        let ev = symmetrized_tridiagonal_eigenvalues(
            &[0.0, 0.0, 0.0, 1.0, 1.0],
            &[3.0, 2.0, 2.0, 1.0],
            &[1.0, 1.0, 1.0, 2.0],
        )
        .unwrap();
        let s = 2f64.sqrt();
        for (got, want) in ev.iter().zip([3.0, 2.0, s - 1.0, -1.0, -1.0 - s]) {
            assert!((got - want).abs() < 1e-9);
        }
    }
}
