//! Exact rational scalars and dense matrices.
//!
//! Everything here is exact: scalars are `BigRational`, and rank is computed
//! by fraction-free (Bareiss) elimination over the integers after clearing
//! row denominators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = num_rational::BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a scalar as `p/q`, or `p` when the denominator is one.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `p` or `p/q` (optional sign, decimal digits only).
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::Parse {
        line: 1,
        column: 1,
        message: format!("invalid rational literal `{t}`"),
    };
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(n, d))
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn scalar(n: usize, s: Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self {
            rows,
            cols,
            entries: data.iter().map(|&x| int(x)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Scalar::zero(), |a, b| a + b)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `XY - YX`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if piv != col {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            let p = a[(col, col)].recip();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] * &p;
                inv[(col, j)] = &inv[(col, j)] * &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let da = &f * &a[(col, j)];
                    let di = &f * &inv[(col, j)];
                    a[(r, j)] -= da;
                    inv[(r, j)] -= di;
                }
            }
        }
        Some(inv)
    }

    /// A solution of `self * x = b`, free variables set to zero; `None` when
    /// the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let (m, n) = (self.rows, self.cols);
        let mut a: Vec<Vec<Scalar>> = (0..m)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(piv) = (row..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, piv);
            let p = a[row][col].recip();
            for x in a[row].iter_mut() {
                *x *= &p;
            }
            for r in 0..m {
                if r == row || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in col..=n {
                    let d = &f * &a[row][c];
                    a[r][c] -= d;
                }
            }
            pivots.push(col);
            row += 1;
            if row == m {
                break;
            }
        }
        if a[row..].iter().any(|r| !r[n].is_zero()) {
            return None;
        }
        let mut x = vec![Scalar::zero(); n];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = a[r][n].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact rank.
    ///
    /// Each row is scaled by the lcm of its denominators, then Bareiss
    /// elimination runs over `BigInt`; every division in the recurrence is
    /// exact.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect();
        bareiss_rank(&mut m, self.cols)
    }
}

fn bareiss_rank(m: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(fmt_scalar).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Serialized as nested arrays of `"p/q"` strings.
impl Serialize for RationalMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(fmt_scalar).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        RationalMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    m.rank()
}

/// `M - (Tr M / n) I`.
pub fn traceless(m: &RationalMatrix) -> Result<RationalMatrix> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "traceless needs a square matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(m.clone());
    }
    let shift = m.trace() / int(n as i64);
    Ok(m - &RationalMatrix::scalar(n, shift))
}

/// `M^4 - ½Tr(M²)M² - ⅓Tr(M³)M + ⅛(Tr²(M²) - 2Tr(M⁴))I` for a traceless 4×4
/// matrix. Cayley-Hamilton makes this vanish identically.
pub fn cayley_hamilton_residual(m: &RationalMatrix) -> Result<RationalMatrix> {
    if m.rows != 4 || m.cols != 4 {
        return Err(Error::Shape(format!(
            "expected 4x4 matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    if !m.trace().is_zero() {
        return Err(Error::NotTraceless);
    }
    let m2 = m * m;
    let m3 = &m2 * m;
    let m4 = &m3 * m;
    let t2 = m2.trace();
    let t3 = m3.trace();
    let t4 = m4.trace();
    let c0 = (&t2 * &t2 - int(2) * t4) * frac(1, 8);
    let out = &(&(&m4 - &m2.scale(&(t2 * frac(1, 2)))) - &m.scale(&(t3 * frac(1, 3))))
        + &RationalMatrix::scalar(4, c0);
    Ok(out)
}

/// A point of the quadruple model: `XY - YX + I = v w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmQuadruple {
    pub n: usize,
    pub x: RationalMatrix,
    pub y: RationalMatrix,
    /// Column vector.
    #[serde(with = "scalar_vec")]
    pub v: Vec<Scalar>,
    /// Row vector.
    #[serde(with = "scalar_vec")]
    pub w: Vec<Scalar>,
}

impl CmQuadruple {
    /// Checks the defining identity exactly and returns the quadruple.
    pub fn new(x: RationalMatrix, y: RationalMatrix, v: Vec<Scalar>, w: Vec<Scalar>) -> Result<Self> {
        let n = x.rows();
        if !x.is_square() || y.rows() != n || y.cols() != n || v.len() != n || w.len() != n {
            return Err(Error::Shape("quadruple dimensions disagree".into()));
        }
        let q = Self { n, x, y, v, w };
        if !q.residual().is_zero() {
            return Err(Error::InvalidPoint(
                "XY - YX + I differs from v w".into(),
            ));
        }
        Ok(q)
    }

    /// `XY - YX + I - v w`.
    pub fn residual(&self) -> RationalMatrix {
        let lhs = &self.x.commutator(&self.y) + &RationalMatrix::identity(self.n);
        let vw = RationalMatrix::from_fn(self.n, self.n, |i, j| &self.v[i] * &self.w[j]);
        &lhs - &vw
    }

    /// `w v`, which equals `n` by taking traces of the defining identity.
    pub fn wv(&self) -> Scalar {
        self.w
            .iter()
            .zip(&self.v)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }
}

pub(crate) mod scalar_vec {
    use super::{fmt_scalar, parse_scalar, Scalar};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(fmt_scalar).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Scalar>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter()
            .map(|s| parse_scalar(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Uniformly random integer matrix with entries in `[-bound, bound]`.
pub fn random_int_matrix<R: rand::Rng>(rng: &mut R, n: usize, bound: i64) -> RationalMatrix {
    RationalMatrix::from_fn(n, n, |_, _| int(rng.gen_range(-bound..=bound)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_consistent_and_inconsistent() {
        // x + y = 3, 2x + 2y = 6: underdetermined, y free
        let a = RationalMatrix::from_i64(2, 2, &[1, 1, 2, 2]);
        assert_eq!(a.solve(&[int(3), int(6)]), Some(vec![int(3), int(0)]));
        assert_eq!(a.solve(&[int(3), int(7)]), None);
        let b = RationalMatrix::from_i64(3, 2, &[1, 0, 0, 2, 1, 1]);
        assert_eq!(b.solve(&[int(1), int(1), frac(3, 2)]), Some(vec![int(1), frac(1, 2)]));
    }
    use rand::SeedableRng;

    fn diag(xs: &[i64]) -> RationalMatrix {
        RationalMatrix::diagonal(&xs.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_examples() {
        let ones = RationalMatrix::from_fn(4, 4, |_, _| int(1));
        assert_eq!(ones.rank(), 1);
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
        assert_eq!(RationalMatrix::zeros(3, 5).rank(), 0);
        let m = RationalMatrix::from_rows(vec![
            vec![frac(1, 2), frac(1, 3), int(1)],
            vec![int(3), int(2), int(6)],
            vec![int(0), int(1), int(0)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_matches_inverse_existence() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let m = random_int_matrix(&mut rng, 4, 2);
            assert_eq!(m.rank() == 4, m.inverse().is_some());
            if let Some(inv) = m.inverse() {
                assert_eq!(&m * &inv, RationalMatrix::identity(4));
            }
        }
    }

    #[test]
    fn traceless_examples() {
        assert!(traceless(&RationalMatrix::identity(4)).unwrap().is_zero());
        let t = traceless(&diag(&[0, 1, 2, 3])).unwrap();
        let want = RationalMatrix::diagonal(&[frac(-3, 2), frac(-1, 2), frac(1, 2), frac(3, 2)]);
        assert_eq!(t, want);
        assert_eq!(traceless(&t).unwrap(), t);
        assert!(traceless(&RationalMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn cayley_hamilton_examples() {
        assert!(cayley_hamilton_residual(&RationalMatrix::zeros(4, 4))
            .unwrap()
            .is_zero());
        let d = RationalMatrix::diagonal(&[frac(-3, 2), frac(-1, 2), frac(1, 2), frac(3, 2)]);
        assert!(cayley_hamilton_residual(&d).unwrap().is_zero());
        assert!(matches!(
            cayley_hamilton_residual(&RationalMatrix::identity(4)),
            Err(Error::NotTraceless)
        ));
        assert!(cayley_hamilton_residual(&RationalMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn quadruple_checks_identity() {
        // X = diag(0,1), Y off-diagonal Cauchy entries, v = w = (1,1).
        let x = diag(&[0, 1]);
        let y = RationalMatrix::from_rows(vec![vec![int(0), int(-1)], vec![int(1), int(0)]]).unwrap();
        let q = CmQuadruple::new(x.clone(), y, vec![int(1), int(1)], vec![int(1), int(1)]).unwrap();
        assert_eq!(q.wv(), int(2));
        let bad = CmQuadruple::new(x, RationalMatrix::zeros(2, 2), vec![int(1), int(1)], vec![int(1), int(1)]);
        assert!(bad.is_err());
    }

    #[test]
    fn scalar_text_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7"] {
            assert_eq!(fmt_scalar(&parse_scalar(s).unwrap()), s);
        }
        assert_eq!(parse_scalar("6/8").unwrap(), frac(3, 4));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = RationalMatrix::from_rows(vec![vec![frac(1, 2), int(-3)], vec![int(0), frac(5, 7)]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","-3"],["0","5/7"]]"#);
        let back: RationalMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    proptest::proptest! {
        #[test]
        fn traceless_is_idempotent(data in proptest::collection::vec(-9i64..=9, 16)) {
            let m = RationalMatrix::from_i64(4, 4, &data);
            let t = traceless(&m).unwrap();
            proptest::prop_assert!(t.trace().is_zero());
            proptest::prop_assert_eq!(traceless(&t).unwrap(), t);
        }

        #[test]
        fn cayley_hamilton_vanishes(data in proptest::collection::vec(-5i64..=5, 16)) {
            let m = traceless(&RationalMatrix::from_i64(4, 4, &data)).unwrap();
            proptest::prop_assert!(cayley_hamilton_residual(&m).unwrap().is_zero());
        }
    }
}
