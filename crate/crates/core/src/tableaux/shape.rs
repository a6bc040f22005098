use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The shape `(d^r, 1^(n - rd))`: an `r × d` rectangle with a one-column tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlamingoShape {
    pub n: usize,
    pub d: usize,
    pub r: usize,
}

impl FlamingoShape {
    pub fn new(n: usize, d: usize, r: usize) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidShape(format!("n and d must be positive (n={n}, d={d})")));
        }
        if r < 2 {
            return Err(Error::InvalidShape(format!("r must be at least 2 (r={r})")));
        }
        if r * d > n {
            return Err(Error::InvalidShape(format!("r*d = {} exceeds n = {n}", r * d)));
        }
        Ok(FlamingoShape { n, d, r })
    }

    /// Shape with three rows, the setting of augmented webs.
    pub fn sl3(n: usize, d: usize) -> Result<Self> {
        Self::new(n, d, 3)
    }

    /// Number of tail boxes, `n - rd`.
    pub fn tail_len(&self) -> usize {
        self.n - self.r * self.d
    }

    /// Length of the first column, which is also the number of rows of the variable matrix.
    pub fn nu(&self) -> usize {
        self.tail_len() + self.r
    }

    /// Row lengths of λ.
    pub fn lambda(&self) -> Vec<usize> {
        let mut rows = vec![self.d; self.r];
        rows.extend(std::iter::repeat_n(1, self.tail_len()));
        rows
    }

    /// Column lengths of λ (the conjugate partition λ′).
    pub fn conjugate(&self) -> Vec<usize> {
        let mut cols = vec![self.r; self.d];
        cols[0] = self.nu();
        cols
    }
}

/// Hook lengths of λ, row by row.
pub fn hook_lengths(shape: &FlamingoShape) -> Vec<Vec<usize>> {
    let rows = shape.lambda();
    let cols = shape.conjugate();
    rows.iter().enumerate().map(|(i, &len)| (0..len).map(|j| (len - j - 1) + (cols[j] - i - 1) + 1).collect()).collect()
}

/// Number of standard Young tableaux of shape λ, by the hook length formula.
pub fn count_syt(shape: &FlamingoShape) -> BigUint {
    let mut num = BigUint::from(1u32);
    for k in 2..=shape.n {
        num *= BigUint::from(k);
    }
    let mut den = BigUint::from(1u32);
    for h in hook_lengths(shape).into_iter().flatten() {
        den *= BigUint::from(h);
    }
    num / den
}
