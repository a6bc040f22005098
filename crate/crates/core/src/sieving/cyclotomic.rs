//! Exact evaluation at roots of unity through reduction modulo `Φ_m`.

use num_bigint::BigInt;
use num_integer::Integer;

use super::QPolynomial;
use crate::error::{Error, Result};

/// The `m`-th cyclotomic polynomial: `q^m − 1` divided by `Φ_e` for every proper divisor `e` of `m`.
pub fn cyclotomic(m: usize) -> QPolynomial {
    assert!(m > 0, "cyclotomic polynomials start at m = 1");
    let mut p = QPolynomial::monomial(m).sub(&QPolynomial::one());
    for e in (1..m).filter(|e| m.is_multiple_of(*e)) {
        p = p.div_exact(&cyclotomic(e)).expect("Φ_e divides q^m - 1");
    }
    p
}

/// A residue modulo `Φ_m`: the value of a polynomial at a primitive `m`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicValue {
    m: usize,
    residue: QPolynomial,
}

impl CyclotomicValue {
    pub fn of(p: &QPolynomial, m: usize) -> Self {
        let (_, residue) = p.div_rem(&cyclotomic(m)).expect("Φ_m is monic");
        CyclotomicValue { m, residue }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn residue(&self) -> &QPolynomial {
        &self.residue
    }

    /// The integer value, when the residue is constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.residue.degree() {
            None => Some(BigInt::from(0)),
            Some(0) => Some(self.residue.coeffs()[0].clone()),
            Some(_) => None,
        }
    }
}

/// `p(ζ^i)` for a primitive `n`-th root of unity `ζ`, computed modulo `Φ_m`
/// with `m = n / gcd(n, i)`. Fails when the residue is not constant, since the
/// value would then depend on the choice of `ζ`.
pub fn eval_at_root(p: &QPolynomial, n: usize, i: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Arithmetic("roots of unity need n ≥ 1".into()));
    }
    let m = n / n.gcd(&i);
    let v = CyclotomicValue::of(p, m);
    v.as_integer().ok_or_else(|| {
        Error::Arithmetic(format!("p(ζ^{i}) for n = {n} is not an integer: residue {} mod Φ_{m}", v.residue()))
    })
}
