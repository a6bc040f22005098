//! Sparse polynomials in the matrix variables `x_{i,j}`, one variable per column.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest supported number of columns.
pub const MAX_COLUMNS: usize = 16;
/// Largest supported row index.
pub const MAX_ROW: u8 = 15;

/// A column monomial `x_{w_1,1} x_{w_2,2} ⋯ x_{w_n,n}`, packed four bits per
/// column with column 1 in the top nibble, so integer order is word order.
/// A zero nibble means the column carries no variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    fn shift(j: usize) -> u32 {
        (4 * (MAX_COLUMNS - j)) as u32
    }

    /// Build from a word of rows; `word[j-1]` is the row used in column `j`.
    pub fn from_word(word: &[u8]) -> Result<Self> {
        if word.len() > MAX_COLUMNS {
            return Err(Error::Arithmetic(format!("at most {MAX_COLUMNS} columns are supported")));
        }
        let mut m = Monomial::ONE;
        for (j, &w) in word.iter().enumerate() {
            if w > MAX_ROW {
                return Err(Error::Arithmetic(format!("row {w} exceeds {MAX_ROW}")));
            }
            m = m.with(j + 1, w);
        }
        Ok(m)
    }

    /// Row used in column `j` (1-based), 0 when the column is empty.
    pub fn get(self, j: usize) -> u8 {
        ((self.0 >> Self::shift(j)) & 0xF) as u8
    }

    /// The monomial with column `j` set to `row`.
    pub fn with(self, j: usize, row: u8) -> Monomial {
        let s = Self::shift(j);
        Monomial((self.0 & !(0xF << s)) | ((row as u64) << s))
    }

    /// The first `n` entries of the word.
    pub fn word(self, n: usize) -> Vec<u8> {
        (1..=n).map(|j| self.get(j)).collect()
    }

    pub fn raw(self) -> u64 {
        self.0
    }

    fn support(self) -> u64 {
        let mut s = 0;
        for j in 1..=MAX_COLUMNS {
            if self.get(j) != 0 {
                s |= 0xF << Self::shift(j);
            }
        }
        s
    }

    /// Product of monomials on disjoint columns.
    pub fn times(self, other: Monomial) -> Option<Monomial> {
        if self.support() & other.support() != 0 {
            None
        } else {
            Some(Monomial(self.0 | other.0))
        }
    }
}

/// Compare two monomials in the lexicographic order on variables read row by
/// row, with row `r` read right to left; the earliest variable decides, and
/// the monomial containing it is the larger one.
pub fn cmp_leading(a: Monomial, b: Monomial, n: usize, r: usize) -> Ordering {
    let key = |m: Monomial| {
        let mut pos: Vec<usize> = (1..=n)
            .filter(|&j| m.get(j) != 0)
            .map(|j| {
                let i = m.get(j) as usize;
                let within = if i == r { n - j } else { j - 1 };
                (i - 1) * n + within
            })
            .collect();
        pos.sort_unstable();
        pos
    };
    key(b).cmp(&key(a))
}

/// A polynomial with exact rational coefficients over column monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    /// The single term `c · m`.
    pub fn term(n: usize, m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(m, c);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    pub fn coefficient(&self, m: Monomial) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest row index used by any term.
    pub fn max_row(&self) -> u8 {
        self.terms.keys().flat_map(|m| m.word(self.n)).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: &BigRational) {
        assert_eq!(self.n, other.n, "polynomials on different numbers of columns");
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(*m, a * c);
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// Product of polynomials whose terms use disjoint columns.
    pub fn mul_disjoint(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.n.max(other.n));
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let m = a.times(*b).ok_or_else(|| Error::Arithmetic("product of terms sharing a column".into()))?;
                out.add_term(m, x * y);
            }
        }
        Ok(out)
    }

    /// The substitution `x_{i,j} -> x_{i,σ(j)}`, with `sigma[j-1] = σ(j)`.
    pub fn permute(&self, sigma: &[usize]) -> Result<Polynomial> {
        check_permutation(sigma, self.n)?;
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let mut image = Monomial::ONE;
            for j in 1..=self.n {
                image = image.with(sigma[j - 1], m.get(j));
            }
            out.add_term(image, c.clone());
        }
        Ok(out)
    }

    /// Left multiplication of the top three rows of the variable matrix by `X`:
    /// `x_{i,j} -> Σ_k X_{i,k} x_{k,j}` for `i ≤ 3`. Requires `det X = 1`.
    pub fn apply_sl3(&self, x: &[[BigRational; 3]; 3]) -> Result<Polynomial> {
        if det3(x) != BigRational::one() {
            return Err(Error::Arithmetic("matrix does not have determinant 1".into()));
        }
        let mut current = self.terms.clone();
        for j in 1..=self.n {
            let mut next: BTreeMap<Monomial, BigRational> = BTreeMap::new();
            for (m, c) in current {
                let i = m.get(j) as usize;
                if !(1..=3).contains(&i) {
                    *next.entry(m).or_insert_with(BigRational::zero) += c;
                    continue;
                }
                for k in 0..3 {
                    let a = &x[i - 1][k];
                    if !a.is_zero() {
                        *next.entry(m.with(j, k as u8 + 1)).or_insert_with(BigRational::zero) += &c * a;
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            current = next;
        }
        Ok(Polynomial { n: self.n, terms: current })
    }

    /// Leading monomial for the order of [`cmp_leading`] with reversed row `r`.
    pub fn leading_term(&self, r: usize) -> Result<Monomial> {
        self.terms
            .keys()
            .copied()
            .max_by(|a, b| cmp_leading(*a, *b, self.n, r))
            .ok_or_else(|| Error::Arithmetic("the zero polynomial has no leading term".into()))
    }

    /// One term per line, `num/den: w_1 … w_n`, in monomial order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in &self.terms {
            let word: Vec<String> = m.word(self.n).iter().map(|w| w.to_string()).collect();
            out.push_str(&format!("{}/{}: {}\n", c.numer(), c.denom(), word.join(" ")));
        }
        out
    }

    /// `{"n": n, "terms": [{"coefficient": "a/b", "word": [..]}, ..]}` in monomial order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| serde_json::json!({ "coefficient": c.to_string(), "word": m.word(self.n) }))
            .collect();
        serde_json::json!({ "n": self.n, "terms": terms })
    }

    /// Parse the text format of [`Polynomial::to_text`]; an integer coefficient may omit `/den`.
    pub fn from_text(n: usize, text: &str) -> Result<Polynomial> {
        let mut p = Polynomial::zero(n);
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let (coef, word) = line.split_once(':').ok_or_else(|| err("missing ':'"))?;
            let coef = parse_rational(coef.trim()).ok_or_else(|| err("bad coefficient"))?;
            let word: Vec<u8> = word
                .split_whitespace()
                .map(|w| w.parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("bad word"))?;
            if word.len() != n {
                return Err(err("word length differs from n"));
            }
            p.add_term(Monomial::from_word(&word).map_err(|_| err("row out of range"))?, coef);
        }
        Ok(p)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let den: BigInt = b.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(a.trim().parse().ok()?, den))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

pub(crate) fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n + 1];
    if sigma.len() != n {
        return Err(Error::Arithmetic(format!("permutation has length {} instead of {n}", sigma.len())));
    }
    for &s in sigma {
        if s == 0 || s > n || seen[s] {
            return Err(Error::Arithmetic(format!("{sigma:?} is not a permutation of 1..{n}")));
        }
        seen[s] = true;
    }
    Ok(())
}

/// Sign of a permutation given as a sequence of distinct comparable values.
pub fn permutation_sign<T: Ord>(values: &[T]) -> i32 {
    if inversions(values).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Number of pairs `i < j` with `values[i] > values[j]`.
pub fn inversions<T: Ord>(values: &[T]) -> usize {
    let mut count = 0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                count += 1;
            }
        }
    }
    count
}

pub fn det3(x: &[[BigRational; 3]; 3]) -> BigRational {
    let m = |i: usize, j: usize| &x[i][j];
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}·")?;
            }
            let vars: Vec<String> =
                (1..=self.n).filter(|&j| m.get(j) != 0).map(|j| format!("x{},{}", m.get(j), j)).collect();
            write!(f, "{}", vars.join(" "))?;
        }
        Ok(())
    }
}

impl std::ops::Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigRational::one());
        out
    }
}

impl std::ops::Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigRational::one());
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scaled(&-BigRational::one())
    }
}

/// `a/b` as a rational.
pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}
