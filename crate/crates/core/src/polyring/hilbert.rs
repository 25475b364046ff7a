//! Weighted Hilbert series of quotients by monomial ideals.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Monomial;

/// Univariate polynomial in `T` with integer coefficients; `coeffs[k]` is the
/// coefficient of `T^k`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `1 - T^w`.
    pub fn one_minus_t_pow(w: u32) -> Self {
        let mut c = vec![BigInt::zero(); w as usize + 1];
        c[0] = BigInt::one();
        c[w as usize] -= BigInt::one();
        Self::from_coeffs(c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn shift(&self, k: u32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k as usize];
        c.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(c)
    }

    /// Exact division by `1 - T^w`; `None` if it does not divide.
    pub fn div_one_minus_t_pow(&self, w: u32) -> Option<Self> {
        // q(T) (1 - T^w) = p(T)  =>  q_k = p_k + q_{k-w}
        let w = w as usize;
        let n = self.coeffs.len();
        if n == 0 {
            return Some(Self::default());
        }
        if n <= w {
            return None;
        }
        let mut q = vec![BigInt::zero(); n - w];
        for k in 0..n - w {
            q[k] = self.coeff(k) + if k >= w { q[k - w].clone() } else { BigInt::zero() };
        }
        let back = Self::from_coeffs(q.clone()).mul(&Self::one_minus_t_pow(w as u32));
        (back == *self).then(|| Self::from_coeffs(q))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "T".into(),
                _ => format!("T^{k}"),
            };
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// `numerator / Π (1 - T^w)^mult`.
#[derive(Clone, Debug)]
pub struct HilbertSeries {
    pub numerator: UniPoly,
    /// weight -> multiplicity
    pub denominator: BTreeMap<u32, u32>,
}

impl HilbertSeries {
    pub fn new(numerator: UniPoly, factors: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut denominator = BTreeMap::new();
        for (w, m) in factors {
            if m > 0 {
                *denominator.entry(w).or_insert(0) += m;
            }
        }
        Self {
            numerator,
            denominator,
        }
    }

    fn denominator_poly(&self) -> UniPoly {
        self.denominator
            .iter()
            .fold(UniPoly::one(), |acc, (&w, &m)| {
                (0..m).fold(acc, |a, _| a.mul(&UniPoly::one_minus_t_pow(w)))
            })
    }

    /// Multiplies by `1 / (1 - T^w)` for each given weight.
    pub fn times_free_variables(&self, weights: &[u32]) -> Self {
        let mut out = self.clone();
        for &w in weights {
            *out.denominator.entry(w).or_insert(0) += 1;
        }
        out
    }

    /// Rewrites the series over another denominator, if the numerator comes
    /// out polynomial.
    pub fn numerator_over(&self, denominator: &BTreeMap<u32, u32>) -> Option<UniPoly> {
        let mut num = self.numerator.clone();
        for (&w, &m) in denominator {
            let have = self.denominator.get(&w).copied().unwrap_or(0);
            for _ in have..m {
                num = num.mul(&UniPoly::one_minus_t_pow(w));
            }
        }
        for (&w, &have) in &self.denominator {
            let want = denominator.get(&w).copied().unwrap_or(0);
            for _ in want..have {
                num = num.div_one_minus_t_pow(w)?;
            }
        }
        Some(num)
    }

    /// Same rational function.
    pub fn same_series(&self, other: &Self) -> bool {
        self.numerator.mul(&other.denominator_poly()) == other.numerator.mul(&self.denominator_poly())
    }

    /// First `n` coefficients of the power series expansion.
    pub fn expand(&self, n: usize) -> Vec<BigInt> {
        let mut c: Vec<BigInt> = (0..n).map(|k| self.numerator.coeff(k)).collect();
        for (&w, &m) in &self.denominator {
            for _ in 0..m {
                // multiply by 1/(1 - T^w): prefix sums with stride w
                for k in w as usize..n {
                    let prev = c[k - w as usize].clone();
                    c[k] += prev;
                }
            }
        }
        c
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den: Vec<String> = self
            .denominator
            .iter()
            .rev()
            .map(|(&w, &m)| {
                let base = if w == 1 { "(1-T)".to_string() } else { format!("(1-T^{w})") };
                if m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect();
        write!(f, "({}) / ({})", self.numerator, den.join("*"))
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N` with `H = N / Π_i (1 - T^{w_i})` for the monomial ideal
/// generated by `gens`, by pivoting on a single variable:
/// `N(I) = N(I + x) + T^{w(x)} N(I : x)`.
fn numerator(gens: Vec<Monomial>, weights: &[u32]) -> UniPoly {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return UniPoly::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return UniPoly::default();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(UniPoly::one(), |acc, m| {
            acc.mul(&UniPoly::one_minus_t_pow(m.weighted_degree(weights)))
        });
    }
    // pivot on the variable shared by the most generators
    let nvars = gens[0].len();
    let var = (0..nvars)
        .max_by_key(|&v| (gens.iter().filter(|m| m.0[v] > 0).count(), std::cmp::Reverse(v)))
        .unwrap();
    let x = Monomial::var(nvars, var);
    let mut plus = gens.clone();
    plus.push(x.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut q = m.clone();
            if q.0[var] > 0 {
                q.0[var] -= 1;
            }
            q
        })
        .collect();
    numerator(plus, weights).add(&numerator(colon, weights).shift(weights[var]))
}

/// Hilbert series of `k[x_1..x_n] / (gens)` graded by `weights`.
pub fn hilbert_series(leading_monomials: &[Monomial], weights: &[u32]) -> HilbertSeries {
    let num = numerator(leading_monomials.to_vec(), weights);
    HilbertSeries::new(num, weights.iter().map(|&w| (w, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn trivial_ideals() {
        let h = hilbert_series(&[], &[1]);
        assert_eq!(h.numerator, UniPoly::one());
        assert_eq!(h.denominator, BTreeMap::from([(1, 1)]));
        let h = hilbert_series(&[m(&[1])], &[1]);
        assert_eq!(h.numerator, UniPoly::from_i64(&[1, -1]));
        assert_eq!(h.expand(4), vec![1.into(), 0.into(), 0.into(), 0.into()]);
    }

    #[test]
    fn counts_standard_monomials() {
        // (x^2, xy, y^3) in k[x,y]: standard monomials 1, x, y, y^2
        let h = hilbert_series(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 3])], &[1, 1]);
        let e = h.expand(6);
        assert_eq!(e, [1, 2, 1, 0, 0, 0].map(BigInt::from).to_vec());
        assert_eq!(h.numerator_over(&BTreeMap::new()).unwrap(), UniPoly::from_i64(&[1, 2, 1]));
    }

    #[test]
    fn weighted_grading() {
        // k[x,y]/(xy), weights 1, 2: 1 + T + T^2 + T^2 + T^3 + T^4 + ...
        let h = hilbert_series(&[m(&[1, 1])], &[1, 2]);
        let e = h.expand(5);
        assert_eq!(e, [1, 1, 2, 1, 2].map(BigInt::from).to_vec());
    }

    #[test]
    fn exact_division() {
        let p = UniPoly::from_i64(&[1, 0, -1]);
        assert_eq!(p.div_one_minus_t_pow(2), Some(UniPoly::one()));
        assert_eq!(p.div_one_minus_t_pow(1), Some(UniPoly::from_i64(&[1, 1])));
        assert_eq!(UniPoly::from_i64(&[1, 1]).div_one_minus_t_pow(1), None);
    }

    proptest::proptest! {
        #[test]
        fn order_independent(gens in proptest::collection::vec(proptest::collection::vec(0u16..3, 3), 1..6)) {
            let ms: Vec<Monomial> = gens.iter().map(|e| m(e)).collect();
            let mut rev = ms.clone();
            rev.reverse();
            let w = [1, 2, 3];
            let a = hilbert_series(&ms, &w);
            let b = hilbert_series(&rev, &w);
            proptest::prop_assert_eq!(&a.numerator, &b.numerator);
            // brute-force count of standard monomials by degree
            let e = a.expand(8);
            let mut counts = vec![0i64; 8];
            for i in 0..8u16 { for j in 0..8u16 { for k in 0..8u16 {
                let mono = m(&[i, j, k]);
                let d = mono.weighted_degree(&w) as usize;
                if d < 8 && !ms.iter().any(|g| g.divides(&mono)) { counts[d] += 1; }
            }}}
            proptest::prop_assert_eq!(e, counts.into_iter().map(BigInt::from).collect::<Vec<_>>());
        }
    }
}
