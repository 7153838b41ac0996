//! The algebra context: shape `m|n`, characteristic `p` and truncation `N`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field;

/// Shape, characteristic and series truncation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraContext {
    pub m: usize,
    pub n: usize,
    pub p: u32,
    /// Highest power of `u^{-1}` kept in series.
    pub trunc: usize,
}

impl AlgebraContext {
    pub fn new(m: usize, n: usize, p: u32, trunc: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidContext("m and n must be positive".into()));
        }
        Self::build(m, n, p, trunc)
    }

    /// The non-super Yangian `Y_k`, all indices even. Used as an oracle.
    pub fn ordinary(k: usize, p: u32, trunc: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidContext("k must be positive".into()));
        }
        Self::build(k, 0, p, trunc)
    }

    fn build(m: usize, n: usize, p: u32, trunc: usize) -> Result<Self> {
        if !field::is_prime(p) {
            return Err(Error::InvalidContext(format!("p = {p} must be prime")));
        }
        if trunc == 0 {
            return Err(Error::InvalidContext("truncation must be positive".into()));
        }
        if m + n > 200 {
            return Err(Error::InvalidContext("m + n too large".into()));
        }
        Ok(AlgebraContext { m, n, p, trunc })
    }

    /// Same algebra with a different truncation order.
    pub fn with_trunc(self, trunc: usize) -> Self {
        AlgebraContext { trunc, ..self }
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    /// `|i|`: 0 for `i <= m`, 1 otherwise.
    #[inline]
    pub fn parity(&self, i: usize) -> u32 {
        u32::from(i > self.m)
    }

    /// `(-1)^e` in F_p.
    #[inline]
    pub fn sign(&self, e: u32) -> u32 {
        field::sign(e, self.p)
    }

    /// Whether odd generators square to `[x,x]/2`.
    pub fn odd_cap(&self) -> bool {
        self.p != 2
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.size() {
            Err(Error::IndexOutOfRange(format!("index {i} not in 1..={}", self.size())))
        } else {
            Ok(())
        }
    }

    /// Scalar `c` reduced into F_p.
    pub fn scalar(&self, c: i64) -> u32 {
        field::from_i64(c, self.p)
    }

    pub fn label(&self) -> String {
        format!("Y({}|{}) p={} N={}", self.m, self.n, self.p, self.trunc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(AlgebraContext::new(1, 1, 4, 3).is_err());
        assert!(AlgebraContext::new(0, 1, 3, 3).is_err());
        assert!(AlgebraContext::new(1, 1, 3, 0).is_err());
        assert!(AlgebraContext::new(2, 1, 3, 3).is_ok());
    }

    #[test]
    fn parity_blocks() {
        let c = AlgebraContext::new(2, 1, 3, 3).unwrap();
        assert_eq!((c.parity(1), c.parity(2), c.parity(3)), (0, 0, 1));
        assert_eq!(c.sign(1), 2);
        let c2 = AlgebraContext::new(2, 1, 2, 3).unwrap();
        assert_eq!(c2.sign(1), 1);
    }
}
