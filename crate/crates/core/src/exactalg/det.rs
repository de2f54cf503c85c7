use super::poly::{ExactDiv, Ring};
use crate::error::Result;

/// Fraction-free (Bareiss) determinant over an integral domain.
pub fn ff_determinant<T: ExactDiv>(mut m: Vec<Vec<T>>) -> Result<T> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return Ok(T::one());
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j]
                    .mul_ref(&m[k][k])
                    .sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = t.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg_ref() } else { det })
}

/// Laplace expansion along the first row; exponential, used as a test oracle
/// and for tiny matrices over rings without exact division.
pub fn cofactor_determinant<T: Ring>(m: &[Vec<T>]) -> T {
    fn rec<T: Ring>(m: &[Vec<T>], rows: usize, cols: &mut Vec<usize>) -> T {
        let k = m.len() - rows;
        if rows == 0 {
            return T::one();
        }
        let mut acc = T::zero();
        for idx in 0..cols.len() {
            let c = cols.remove(idx);
            let entry = &m[k][c];
            if !entry.is_zero() {
                let minor = rec(m, rows - 1, cols);
                let term = entry.mul_ref(&minor);
                acc = if idx % 2 == 0 {
                    acc.add_ref(&term)
                } else {
                    acc.sub_ref(&term)
                };
            }
            cols.insert(idx, c);
        }
        acc
    }
    let mut cols: Vec<usize> = (0..m.len()).collect();
    rec(m, m.len(), &mut cols)
}
