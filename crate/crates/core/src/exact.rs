//! Arbitrary-precision integer/rational kernel: dense integer polynomials,
//! reduced row-echelon forms over Q, fraction-free rank, and Smith normal
//! form with transformation witnesses that are re-multiplied before return.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Binomial coefficient as an exact integer; 0 when k > n.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

pub fn gcd_u64(values: &[u64]) -> u64 {
    values.iter().fold(0u64, |g, &v| g.gcd(&v))
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g, g = gcd(a,b) >= 0.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Bezout vector for a slice: (g, c) with sum c_i d_i = g = gcd(d).
pub fn bezout(ds: &[i64]) -> (i64, Vec<i64>) {
    let mut g = 0i64;
    let mut coeffs = vec![0i64; ds.len()];
    for (i, &d) in ds.iter().enumerate() {
        let (g2, x, y) = ext_gcd(g, d);
        for c in coeffs.iter_mut() {
            *c *= x;
        }
        coeffs[i] = y;
        g = g2;
    }
    (g, coeffs)
}

pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense integer polynomial with a variable-name tag. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    var: String,
    coeffs: Vec<Int>,
}

impl IntPolynomial {
    pub fn new(var: impl Into<String>, mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { var: var.into(), coeffs }
    }

    pub fn from_i64(var: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero(var: impl Into<String>) -> Self {
        IntPolynomial { var: var.into(), coeffs: Vec::new() }
    }

    pub fn one(var: impl Into<String>) -> Self {
        Self::new(var, vec![Int::one()])
    }

    pub fn monomial(var: impl Into<String>, coeff: Int, degree: usize) -> Self {
        let mut coeffs = vec![Int::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::new(var, coeffs)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Int {
        self.coeffs.last().cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    pub fn with_var(&self, var: impl Into<String>) -> Self {
        IntPolynomial { var: var.into(), coeffs: self.coeffs.clone() }
    }

    pub fn neg(&self) -> Self {
        Self::new(self.var.clone(), self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(self.var.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var.clone());
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.var.clone(), coeffs)
    }

    pub fn mul_scalar(&self, s: &Int) -> Self {
        Self::new(self.var.clone(), self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.var.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(g.var.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::new(g.var.clone(), vec![c.clone()]));
        }
        acc
    }

    /// Exact division by a monic divisor; error when a remainder survives.
    pub fn divide_exact(&self, den: &Self) -> Result<Self> {
        if !den.is_monic() {
            return Err(Error::domain("divisor must be monic"));
        }
        let dd = den.degree().expect("monic divisor is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let lead = rem.last().cloned().unwrap_or_else(Int::zero);
            quot[k] = lead.clone();
            for (j, c) in den.coeffs.iter().enumerate() {
                let idx = k + j;
                let v = &rem[idx] - c * &lead;
                rem[idx] = v;
            }
            while rem.last().map_or(false, Zero::is_zero) {
                rem.pop();
            }
            // the leading term was cancelled; guard against a stall
            if rem.len() > k + dd {
                return Err(Error::internal("polynomial division failed to reduce"));
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::internal("inexact polynomial division"));
        }
        Ok(Self::new(self.var.clone(), quot))
    }

    /// Power-series quotient mod var^len; the divisor's constant term must be a unit.
    pub fn series_div_truncated(&self, den: &Self, len: usize) -> Result<Self> {
        let d0 = den.coeff(0);
        if !d0.abs().is_one() {
            return Err(Error::domain("series division needs a unit constant term"));
        }
        let mut q = vec![Int::zero(); len];
        for k in 0..len {
            let mut acc = self.coeff(k);
            for j in 0..k {
                acc -= &q[j] * den.coeff(k - j);
            }
            q[k] = acc * &d0; // d0 = ±1, so this is exact division
        }
        Ok(Self::new(self.var.clone(), q))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "{}", self.var)?;
                } else {
                    write!(f, "{}^{}", self.var, i)?;
                }
            }
        }
        Ok(())
    }
}

/// The two Poincaré-polynomial substitutions, both under the `(-t)^d` sign
/// convention: `Hyperplane` maps chi to `(-t)^d * chi(-1/t)` and `Toric`
/// maps chi to `(-t)^d * chi(-1/t - 1)`, where `d` is the ambient dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoincareKind {
    Hyperplane { ambient_dim: usize },
    Toric { ambient_dim: usize },
}

/// Apply a Poincaré substitution to a characteristic polynomial in `q`,
/// producing a polynomial in `t`. Coefficient negativity means the input was
/// not a characteristic polynomial of the advertised kind and is reported as
/// a sign-convention violation.
pub fn poly_eval_substitute(p: &IntPolynomial, kind: PoincareKind) -> Result<IntPolynomial> {
    let d = match kind {
        PoincareKind::Hyperplane { ambient_dim } | PoincareKind::Toric { ambient_dim } => ambient_dim,
    };
    if p.degree().map_or(false, |deg| deg > d) {
        return Err(Error::domain(format!(
            "polynomial degree {} exceeds ambient dimension {d}",
            p.degree().unwrap()
        )));
    }
    let result = match kind {
        PoincareKind::Hyperplane { .. } => {
            // (-t)^d * sum c_k (-1/t)^k  =  sum (-1)^(d-k) c_k t^(d-k)
            let mut coeffs = vec![Int::zero(); d + 1];
            for k in 0..=d {
                let c = p.coeff(k);
                coeffs[d - k] = if (d - k) % 2 == 0 { c } else { -c };
            }
            IntPolynomial::new("t", coeffs)
        }
        PoincareKind::Toric { .. } => {
            // (-t)^d * sum c_k (-(1+t)/t)^k  =  sum (-1)^(d-k) c_k (1+t)^k t^(d-k)
            let one_plus_t = IntPolynomial::from_i64("t", &[1, 1]);
            let mut acc = IntPolynomial::zero("t");
            for k in 0..=d {
                let mut c = p.coeff(k);
                if (d - k) % 2 == 1 {
                    c = -c;
                }
                let term = one_plus_t.pow(k).mul_scalar(&c).mul(&IntPolynomial::monomial("t", Int::one(), d - k));
                acc = acc.add(&term);
            }
            acc
        }
    };
    if result.coeffs().iter().any(|c| c.is_negative()) {
        return Err(Error::internal(format!(
            "sign convention violated: substitution produced a negative coefficient in {result}"
        )));
    }
    Ok(result)
}

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::domain("ragged matrix rows"));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
            .expect("literal rows have equal length")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &Int) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &Int) {
        for i in 0..self.rows {
            let v = self.get(i, dst) + q * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    fn scale_row(&mut self, i: usize, s: &Int) {
        for j in 0..self.cols {
            let v = self.get(i, j) * s;
            self.set(i, j, v);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination; square matrices only.
    pub fn determinant(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut denom = Int::one();
        let mut sign = 1i32;
        for t in 0..n - 1 {
            if m.get(t, t).is_zero() {
                match (t + 1..n).find(|&i| !m.get(i, t).is_zero()) {
                    Some(i) => {
                        m.swap_rows(t, i);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in t + 1..n {
                for j in t + 1..n {
                    let v = (m.get(i, j) * m.get(t, t) - m.get(i, t) * m.get(t, j)) / &denom;
                    m.set(i, j, v);
                }
                m.set(i, t, Int::zero());
            }
            denom = m.get(t, t).clone();
        }
        let det = m.get(n - 1, n - 1).clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }
}

/// Rank over the rationals by fraction-free elimination.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    let mut denom = Int::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).find(|&i| !a.get(i, col).is_zero());
        let Some(p) = pivot else { continue };
        a.swap_rows(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = (a.get(i, j) * a.get(rank, col) - a.get(i, col) * a.get(rank, j)) / &denom;
                a.set(i, j, v);
            }
            a.set(i, col, Int::zero());
        }
        denom = a.get(rank, col).clone();
        rank += 1;
    }
    rank
}

/// Rank over the prime field F_p.
pub fn modular_rank(m: &IntMatrix, p: u64) -> Result<usize> {
    if !is_prime_u64(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let pi = Int::from(p);
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| {
            (0..m.cols)
                .map(|j| {
                    let r = m.get(i, j).mod_floor(&pi);
                    u64::try_from(r).expect("residue fits in u64")
                })
                .collect()
        })
        .collect();
    let inv = |x: u64| -> u64 {
        // Fermat inverse; p is prime and x nonzero mod p
        let mut base = x as u128;
        let mut e = p - 2;
        let mut acc: u128 = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u128;
            }
            base = base * base % p as u128;
            e >>= 1;
        }
        acc as u64
    };
    let (rows, cols) = (m.rows, m.cols);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| a[i][col] != 0) else { continue };
        a.swap(rank, piv);
        let iv = inv(a[rank][col]);
        for j in col..cols {
            a[rank][j] = (a[rank][j] as u128 * iv as u128 % p as u128) as u64;
        }
        for i in 0..rows {
            if i != rank && a[i][col] != 0 {
                let f = a[i][col];
                for j in col..cols {
                    let sub = (f as u128 * a[rank][j] as u128) % p as u128;
                    a[i][j] = ((a[i][j] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Smith normal form `u * a * v = d` with unimodular transforms.
#[derive(Debug, Clone)]
pub struct SNFResult {
    pub diagonal: Vec<Int>,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SNFResult {
    /// Diagonal entries > 1: the torsion part of the cokernel.
    pub fn torsion(&self) -> Vec<Int> {
        self.diagonal.iter().filter(|d| d.abs() > Int::one()).cloned().collect()
    }
}

/// Smith normal form over the integers. The returned transforms are always
/// re-multiplied against the input and checked to reproduce the diagonal
/// before the result is returned.
pub fn smith_normal_form(a: &IntMatrix) -> Result<SNFResult> {
    let mut m = a.clone();
    let mut u = IntMatrix::identity(a.rows);
    let mut v = IntMatrix::identity(a.cols);
    let n = a.rows.min(a.cols);

    for t in 0..n {
        // pick the nonzero entry of smallest magnitude in the trailing block
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..a.rows {
                for j in t..a.cols {
                    if !m.get(i, j).is_zero()
                        && best.map_or(true, |(bi, bj)| m.get(i, j).abs() < m.get(bi, bj).abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            m.swap_rows(t, bi);
            u.swap_rows(t, bi);
            m.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let mut dirty = false;
            for i in t + 1..a.rows {
                if !m.get(i, t).is_zero() {
                    let q = -(m.get(i, t) / m.get(t, t));
                    m.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    if !m.get(i, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..a.cols {
                if !m.get(t, j).is_zero() {
                    let q = -(m.get(t, j) / m.get(t, t));
                    m.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    if !m.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // row and column are clear; make the pivot divide the rest
            let pivot = m.get(t, t).clone();
            let offender = (t + 1..a.rows)
                .flat_map(|i| (t + 1..a.cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(m.get(i, j) % &pivot).is_zero());
            match offender {
                Some((i, _)) => {
                    m.add_row_multiple(t, i, &Int::one());
                    u.add_row_multiple(t, i, &Int::one());
                }
                None => break,
            }
        }
        if m.get(t, t).is_negative() {
            m.scale_row(t, &-Int::one());
            u.scale_row(t, &-Int::one());
        }
    }

    let diagonal: Vec<Int> = (0..n).map(|i| m.get(i, i).clone()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    for w in diagonal.windows(2) {
        if !w[1].is_zero() && w[0].is_zero() {
            return Err(Error::internal("smith normal form: zero before nonzero on diagonal"));
        }
        if !w[0].is_zero() && !(&w[1] % &w[0]).is_zero() {
            return Err(Error::internal("smith normal form: divisibility chain broken"));
        }
    }

    let product = u.mul(a).mul(&v);
    let mut expect = IntMatrix::zero(a.rows, a.cols);
    for (i, d) in diagonal.iter().enumerate() {
        expect.set(i, i, d.clone());
    }
    if product != expect {
        return Err(Error::internal("smith normal form witnesses do not reproduce the diagonal"));
    }
    Ok(SNFResult { diagonal, u, v, rank })
}

/// A consistent linear system over Q in reduced row-echelon form. Rows are
/// `[a_0, ..., a_{d-1}, c]` encoding the equation `sum a_i x_i = c`; the RREF
/// (pivots 1, pivot columns cleared, rows ordered by pivot column) is a
/// canonical witness for the affine solution set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rref {
    dim: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

/// Outcome of pushing one more equation into an [`Rref`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RrefGrow {
    Redundant,
    Extended,
    Inconsistent,
}

impl Rref {
    pub fn new(dim: usize) -> Self {
        Rref { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn solution_dim(&self) -> usize {
        self.dim - self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    fn reduce(&self, row: &mut [Rat]) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(r) {
                    *x -= &f * y;
                }
            }
        }
    }

    /// Push `sum coeffs_i x_i = constant`; reports whether the system grew,
    /// was unchanged, or became inconsistent (in which case it is untouched).
    pub fn push(&mut self, coeffs: &[Rat], constant: &Rat) -> RrefGrow {
        debug_assert_eq!(coeffs.len(), self.dim);
        let mut row: Vec<Rat> = coeffs.to_vec();
        row.push(constant.clone());
        self.reduce(&mut row);
        let pivot = (0..self.dim).find(|&j| !row[j].is_zero());
        match pivot {
            None => {
                if row[self.dim].is_zero() {
                    RrefGrow::Redundant
                } else {
                    RrefGrow::Inconsistent
                }
            }
            Some(p) => {
                let lead = row[p].clone();
                for x in row.iter_mut() {
                    *x /= &lead;
                }
                for (r, &q) in self.rows.iter_mut().zip(&self.pivots) {
                    debug_assert_ne!(q, p);
                    if !r[p].is_zero() {
                        let f = r[p].clone();
                        for (x, y) in r.iter_mut().zip(&row) {
                            *x -= &f * y;
                        }
                    }
                }
                let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
                self.rows.insert(at, row);
                self.pivots.insert(at, p);
                RrefGrow::Extended
            }
        }
    }

    /// Whether the equation is implied by the system.
    pub fn implies(&self, coeffs: &[Rat], constant: &Rat) -> bool {
        let mut row: Vec<Rat> = coeffs.to_vec();
        row.push(constant.clone());
        self.reduce(&mut row);
        row.iter().all(Zero::is_zero)
    }

    /// Whether `self`'s solution set contains `other`'s, i.e. every equation
    /// of `self` is implied by `other`.
    pub fn contains(&self, other: &Rref) -> bool {
        self.rows
            .iter()
            .all(|r| other.implies(&r[..self.dim], &r[self.dim]))
    }
}

impl fmt::Display for Rref {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let terms: Vec<String> = (0..self.dim)
                .filter(|&j| !row[j].is_zero())
                .map(|j| format!("{}*x{}", row[j], j))
                .collect();
            write!(f, "{} = {}", terms.join(" + "), row[self.dim])?;
        }
        Ok(())
    }
}

/// Total order on RREF witnesses for canonical node ordering.
pub fn rref_cmp(a: &Rref, b: &Rref) -> Ordering {
    a.cmp(b)
}
