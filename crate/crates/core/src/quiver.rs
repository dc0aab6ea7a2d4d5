//! Cartan and Coxeter matrices of directed algebras.

use num_bigint::BigUint;

use crate::bwb::{schur_dim, GLWeight};
use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i64>>;

/// Upper unitriangular integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix(IntMatrix);

impl CartanMatrix {
    pub fn new(rows: IntMatrix) -> Result<Self> {
        let r = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidMatrix(format!("row {i} has length {}, expected {r}", row.len())));
            }
            if row[i] != 1 || row[..i].iter().any(|&c| c != 0) {
                return Err(Error::InvalidMatrix(format!("row {i} is not upper unitriangular")));
            }
        }
        Ok(CartanMatrix(rows))
    }

    pub fn identity(r: usize) -> Self {
        CartanMatrix((0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect())
    }

    pub fn rows(&self) -> &IntMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// `A^{-1}` by back substitution.
    pub fn inverse(&self) -> Result<IntMatrix> {
        let r = self.size();
        let a = &self.0;
        let mut inv = vec![vec![0i64; r]; r];
        for col in 0..r {
            for i in (0..r).rev() {
                let mut v = i64::from(i == col);
                for k in i + 1..r {
                    v = a[i][k]
                        .checked_mul(inv[k][col])
                        .and_then(|x| v.checked_sub(x))
                        .ok_or(Error::Overflow("Cartan inverse"))?;
                }
                inv[i][col] = v;
            }
        }
        Ok(inv)
    }
}

/// The Cartan matrix of the tilting algebra on `Sym^2 P^1`.
pub fn sym2_p1_cartan() -> CartanMatrix {
    CartanMatrix::new(vec![
        vec![1, 0, 2, 3, 1],
        vec![0, 1, 2, 1, 3],
        vec![0, 0, 1, 2, 2],
        vec![0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 1],
    ])
    .unwrap()
}

pub fn matmul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let (n, m) = (a.len(), b.first().map_or(0, Vec::len));
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut s = 0i64;
            for (k, bk) in b.iter().enumerate() {
                s = a[i][k].checked_mul(bk[j]).and_then(|x| s.checked_add(x)).ok_or(Error::Overflow("matmul"))?;
            }
            out[i][j] = s;
        }
    }
    Ok(out)
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

/// `C = -A^{-1} A^T`.
pub fn coxeter(a: &CartanMatrix) -> Result<IntMatrix> {
    let c = matmul(&a.inverse()?, &transpose(a.rows()))?;
    Ok(c.into_iter().map(|row| row.into_iter().map(|x| -x).collect()).collect())
}

/// `χ(HH^•) = -tr C`.
pub fn hh_euler_characteristic(a: &CartanMatrix) -> Result<i64> {
    let c = coxeter(a)?;
    Ok(-(0..c.len()).map(|i| c[i][i]).sum::<i64>())
}

/// `(h^0, h^1, h^2)` of Hochschild cohomology of the `Sym^2 P^1` algebra: `h^0 = 1`,
/// `h^1 = dim sl_2`, and `h^2` from the Euler characteristic.
pub fn sym2_p1_series() -> Result<[BigUint; 3]> {
    let h0 = 1i64;
    let h1 = i64::try_from(&schur_dim(&GLWeight(vec![1, -1]))?).map_err(|_| Error::Overflow("sl2"))?;
    let chi = hh_euler_characteristic(&sym2_p1_cartan())?;
    let h2 = chi - h0 + h1;
    if h2 < 0 {
        return Err(Error::Inconsistent(format!("Euler characteristic {chi} forces h^2 = {h2}")));
    }
    Ok([BigUint::from(h0 as u64), BigUint::from(h1 as u64), BigUint::from(h2 as u64)])
}
