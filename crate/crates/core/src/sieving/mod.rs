//! Cyclic sieving for augmented webs under rotation.
//!
//! The fake-degree polynomial `X_{n,d}(q)` of `S^(d^3, 1^(n-3d))` is evaluated
//! exactly at roots of unity and compared with rotation fixed-point counts.
//! For even `n` only absolute values are compared, because the orientation
//! signs of rotation-symmetric webs can make `c^i` act with a `−1` diagonal.

mod cyclotomic;
mod qpoly;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde_json::{json, Value};

pub use cyclotomic::{cyclotomic, eval_at_root, CyclotomicValue};
pub use qpoly::{q_binomial, q_factorial, q_int, QPolynomial};

use crate::error::{Error, Result};
use crate::invariants::{find_perfect_orientation, orientation_sign};
use crate::plabic::{canonicalize, rotate};
use crate::tableaux::{hook_lengths, FlamingoShape};
use crate::webs::{enumerate_aw, fixed_points, rotation_orbits, AugmentedWeb};

/// `b(λ) = Σ (i − 1) λ_i`.
pub fn shift_exponent(shape: &FlamingoShape) -> usize {
    shape.lambda().iter().enumerate().map(|(i, &len)| i * len).sum()
}

/// `X_{n,d}(q) = q^{3(d−1) + C(n−3(d−1), 2)} [n]!_q / Π [h]_q` over the hooks of `(d^3, 1^{n−3d})`.
pub fn fake_degree(n: usize, d: usize) -> Result<QPolynomial> {
    let shape = FlamingoShape::sl3(n, d)?;
    let m = n - 3 * (d - 1);
    let shift = 3 * (d - 1) + m * (m - 1) / 2;
    if shift != shift_exponent(&shape) {
        return Err(Error::Arithmetic(format!("shift {shift} differs from b(λ) = {}", shift_exponent(&shape))));
    }
    let hooks = hook_lengths(&shape).into_iter().flatten().fold(QPolynomial::one(), |acc, h| acc.mul(&q_int(h)));
    Ok(q_factorial(n).div_exact(&hooks)?.shifted(shift))
}

fn to_json_int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

/// One line of a [`CspReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspRow {
    pub i: usize,
    /// Order of `ζ^i`.
    pub m: usize,
    pub fixed: usize,
    pub value: BigInt,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CspReport {
    pub n: usize,
    pub d: usize,
    pub total: usize,
    pub orbits: usize,
    pub polynomial: QPolynomial,
    pub rows: Vec<CspRow>,
    /// `(1/n) Σ_i |fix(c^i)|` equals the number of orbits.
    pub burnside: bool,
}

impl CspReport {
    /// Strict comparison for odd `n`, absolute values for even `n`.
    pub fn strict(&self) -> bool {
        self.n % 2 == 1
    }

    pub fn passed(&self) -> bool {
        self.burnside && self.rows.iter().all(|r| r.pass)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.rows.iter().find(|r| !r.pass).map(|r| r.i)
    }

    pub fn fixed_vector(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.fixed).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "d": self.d,
            "total": self.total,
            "orbits": self.orbits,
            "polynomial": self.polynomial.coeffs().iter().map(to_json_int).collect::<Vec<_>>(),
            "comparison": if self.strict() { "equal" } else { "absolute value" },
            "burnside": self.burnside,
            "rows": self.rows.iter().map(|r| json!({
                "i": r.i, "m": r.m, "fixed": r.fixed, "value": to_json_int(&r.value), "pass": r.pass,
            })).collect::<Vec<_>>(),
            "pass": self.passed(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "AW({}, {}): {} webs in {} orbits\nX(q) = {}\ncomparison: {}\n",
            self.n,
            self.d,
            self.total,
            self.orbits,
            self.polynomial,
            if self.strict() { "equal" } else { "absolute value" }
        );
        out.push_str(&format!("{:>4} {:>4} {:>8} {:>10}  result\n", "i", "m", "fixed", "X(ζ^i)"));
        for r in &self.rows {
            out.push_str(&format!(
                "{:>4} {:>4} {:>8} {:>10}  {}\n",
                r.i,
                r.m,
                r.fixed,
                r.value.to_string(),
                if r.pass { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(&format!("burnside: {}\n", if self.burnside { "pass" } else { "FAIL" }));
        out
    }
}

/// Compare `|AW(n,d)^{c^i}|` with `X_{n,d}(ζ^i)` for `i = 1..n`.
pub fn verify_csp(n: usize, d: usize) -> Result<CspReport> {
    let webs = enumerate_aw(n, d)?;
    csp_report(n, d, &webs)
}

/// [`verify_csp`] on an already enumerated `AW(n, d)`.
pub fn csp_report(n: usize, d: usize, webs: &[AugmentedWeb]) -> Result<CspReport> {
    let polynomial = fake_degree(n, d)?;
    let strict = n % 2 == 1;
    let rows: Vec<CspRow> = (1..=n)
        .into_par_iter()
        .map(|i| -> Result<CspRow> {
            let fixed = fixed_points(webs, i);
            let value = eval_at_root(&polynomial, n, i)?;
            let target = BigInt::from(fixed);
            let pass = if strict { value == target } else { value.abs() == target };
            Ok(CspRow { i, m: n / num_integer::gcd(n, i), fixed, value, pass })
        })
        .collect::<Result<_>>()?;
    let orbits = rotation_orbits(webs).len();
    let sum: usize = rows.iter().map(|r| r.fixed).sum();
    Ok(CspReport { n, d, total: webs.len(), orbits, polynomial, rows, burnside: sum == n * orbits })
}

/// Which alternative of the rotation-sign lemma applies to `n/i` and `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RotationCase {
    /// `n/i | d`, with `k = di/n`.
    DividesD,
    /// `n/i | d − 1`, with `k = (d − 1)i/n`.
    DividesDMinusOne,
    /// `n/i = 3` and `3 | d + 1`, with `k = (d + 1)i/n`.
    ThreeDividesDPlusOne,
}

impl RotationCase {
    pub fn name(self) -> &'static str {
        match self {
            RotationCase::DividesD => "n/i | d",
            RotationCase::DividesDMinusOne => "n/i | d-1",
            RotationCase::ThreeDividesDPlusOne => "n/i = 3, n/i | d+1",
        }
    }
}

/// All alternatives that hold for `(n, d, i)`.
pub fn rotation_cases(n: usize, d: usize, i: usize) -> Vec<RotationCase> {
    if i == 0 || !n.is_multiple_of(i) {
        return Vec::new();
    }
    let p = n / i;
    let mut out = Vec::new();
    if d.is_multiple_of(p) {
        out.push(RotationCase::DividesD);
    }
    if (d - 1).is_multiple_of(p) {
        out.push(RotationCase::DividesDMinusOne);
    }
    if p == 3 && (d + 1).is_multiple_of(3) {
        out.push(RotationCase::ThreeDividesDPlusOne);
    }
    out
}

/// `(−1)^{(n/i − 1) k}` for the given case.
pub fn predicted_rotation_sign(n: usize, d: usize, i: usize, case: RotationCase) -> i32 {
    let p = n / i;
    let k = match case {
        RotationCase::DividesD => d * i / n,
        RotationCase::DividesDMinusOne => (d - 1) * i / n,
        RotationCase::ThreeDividesDPlusOne => (d + 1) * i / n,
    };
    if ((p - 1) * k).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `sign(O, rot^i(O))` for a web fixed by `rot^i`, with `O` its canonical orientation.
pub fn rotation_sign(w: &AugmentedWeb, i: usize) -> Result<i32> {
    let g = w.graph();
    let o = find_perfect_orientation(g)?;
    let mut h = g.clone();
    for _ in 0..i {
        h = rotate(&h);
    }
    // Rotation keeps vertex and edge ids, so `o` is an orientation of `h` as well.
    let (cg, rg) = canonicalize(g)?;
    let (ch, rh) = canonicalize(&h)?;
    if cg != ch {
        return Err(Error::Verification(format!("web is not fixed by rotation {i}")));
    }
    orientation_sign(&cg, &o.relabelled(&cg, &rg)?, &o.relabelled(&cg, &rh)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSignRow {
    /// Index into `enumerate_aw(n, d)`.
    pub web: usize,
    pub i: usize,
    pub case: Option<RotationCase>,
    pub expected: Option<i32>,
    pub actual: i32,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSignReport {
    pub n: usize,
    pub d: usize,
    pub rows: Vec<RotationSignRow>,
}

impl RotationSignReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "d": self.d,
            "rows": self.rows.iter().map(|r| json!({
                "web": r.web,
                "i": r.i,
                "case": r.case.map(RotationCase::name),
                "expected": r.expected,
                "actual": r.actual,
                "pass": r.pass,
            })).collect::<Vec<_>>(),
            "pass": self.passed(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("rotation-symmetric webs of AW({}, {}): {} checks\n", self.n, self.d, self.rows.len());
        for r in &self.rows {
            out.push_str(&format!(
                "web {:>4}  i = {:>2}  {:<20} expected {:>2}  actual {:>2}  {}\n",
                r.web,
                r.i,
                r.case.map(RotationCase::name).unwrap_or("no unique case"),
                r.expected.map(|e| e.to_string()).unwrap_or_else(|| "?".into()),
                r.actual,
                if r.pass { "pass" } else { "FAIL" }
            ));
        }
        out
    }
}

/// Check the rotation-sign formula on every web fixed by `rot^i` for each
/// proper divisor `i` of `n`. A web fixed by `rot^i` is fixed by `rot^{gcd(i, n)}`,
/// so other `i` add nothing.
pub fn rotation_sign_check(n: usize, d: usize) -> Result<RotationSignReport> {
    let webs = enumerate_aw(n, d)?;
    let jobs: Vec<(usize, usize)> =
        (0..webs.len()).flat_map(|w| (1..n).filter(move |i| n.is_multiple_of(*i)).map(move |i| (w, i))).collect();
    let rows: Vec<Option<RotationSignRow>> = jobs
        .par_iter()
        .map(|&(k, i)| -> Result<Option<RotationSignRow>> {
            let w = &webs[k];
            let mut r = w.clone();
            for _ in 0..i {
                r = r.rotate();
            }
            if r.encoding() != w.encoding() {
                return Ok(None);
            }
            let actual = rotation_sign(w, i)?;
            let cases = rotation_cases(n, d, i);
            let case = (cases.len() == 1).then(|| cases[0]);
            let expected = case.map(|c| predicted_rotation_sign(n, d, i, c));
            Ok(Some(RotationSignRow { web: k, i, case, expected, actual, pass: expected == Some(actual) }))
        })
        .collect::<Result<_>>()?;
    Ok(RotationSignReport { n, d, rows: rows.into_iter().flatten().collect() })
}
