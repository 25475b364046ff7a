//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is a canonical map from [`Monomial`] to nonzero
//! coefficient, tied to a [`Ring`] that names the variables and assigns each
//! a positive weight. Term orders are not baked into the storage; the
//! Gröbner kernel sorts terms by a [`TermOrder`] on demand.

mod field;
mod groebner;
mod hilbert;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exactmat::{fmt_scalar, Scalar};

pub use groebner::{
    buchberger, buchberger_with_progress, divide, gb_check, interreduce, modular_basis, normal_form,
    s_polynomial, Division, GbCheck, ModularBasis, PairFailure, Progress,
};
pub use hilbert::{hilbert_series, HilbertSeries, UniPoly};
pub(crate) use parse::{parse_expr, Expr};

/// Variable names and weights of a polynomial ring over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl Ring {
    pub fn new(names: Vec<String>, weights: Vec<u32>) -> Arc<Self> {
        assert_eq!(names.len(), weights.len(), "one weight per variable");
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        Arc::new(Self { names, weights })
    }

    /// Variables `prefix1..prefixN`, all of weight one.
    pub fn numbered(prefix: &str, count: usize) -> Arc<Self> {
        Self::new(
            (1..=count).map(|i| format!("{prefix}{i}")).collect(),
            vec![1; count],
        )
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        Polynomial::var(self, i)
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial(self, text)
    }

    /// Weighted degree reverse lexicographic order with the ring's weights
    /// and variable precedence equal to declaration order.
    pub fn default_order(&self) -> TermOrder {
        TermOrder::weighted_degrevlex(self.weights.clone(), (0..self.nvars()).collect())
    }
}

/// Exponent vector, one slot per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(SmallVec<[u16; 16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Self(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(Self(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u16) -> Self {
        Self(self.0.iter().map(|e| e * k).collect())
    }

    /// Renders against a ring's variable names, e.g. `a3^2*a5`; `1` for the
    /// unit monomial.
    pub fn display(&self, ring: &Ring) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    ring.names[i].clone()
                } else {
                    format!("{}^{}", ring.names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Weighted degree reverse lexicographic order.
///
/// Monomials are compared by weighted degree first; ties are broken by the
/// exponent of the lowest-precedence variable, the monomial with the smaller
/// exponent being larger, then the next-lowest, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    weights: Vec<u32>,
    /// `precedence[0]` is the largest variable.
    precedence: Vec<usize>,
}

impl TermOrder {
    pub fn weighted_degrevlex(weights: Vec<u32>, precedence: Vec<usize>) -> Self {
        assert_eq!(weights.len(), precedence.len());
        let mut seen = vec![false; precedence.len()];
        for &p in &precedence {
            assert!(!seen[p], "precedence must be a permutation");
            seen[p] = true;
        }
        Self { weights, precedence }
    }

    /// Same weights, precedence given by variable names, highest first.
    pub fn with_precedence(ring: &Ring, names: &[&str]) -> Result<Self> {
        let prec = names
            .iter()
            .map(|n| {
                ring.index_of(n)
                    .ok_or_else(|| Error::RingMismatch(format!("no variable `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if prec.len() != ring.nvars() {
            return Err(Error::RingMismatch(
                "precedence must list every variable once".into(),
            ));
        }
        let mut sorted = prec.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != ring.nvars() {
            return Err(Error::RingMismatch("repeated variable in precedence".into()));
        }
        Ok(Self::weighted_degrevlex(ring.weights.clone(), prec))
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let da = a.weighted_degree(&self.weights);
        let db = b.weighted_degree(&self.weights);
        da.cmp(&db).then_with(|| {
            for &v in self.precedence.iter().rev() {
                match a.0[v].cmp(&b.0[v]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        })
    }

    /// Human-readable description, e.g. `wdegrevlex(a3>a4>...)`.
    pub fn describe(&self, ring: &Ring) -> String {
        let names: Vec<&str> = self
            .precedence
            .iter()
            .map(|&i| ring.names[i].as_str())
            .collect();
        format!("weighted degrevlex [{}]", names.join(" > "))
    }
}

/// A polynomial with rational coefficients; the term map never stores zeros.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Scalar) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), Scalar::one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.len(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Leading monomial and coefficient under `ord`.
    pub fn leading_term(&self, ord: &TermOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, ord: &TermOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|t| t.0)
    }

    /// Terms sorted from largest to smallest under `ord`.
    pub fn sorted_terms(&self, ord: &TermOrder) -> Vec<(Monomial, Scalar)> {
        let mut v: Vec<(Monomial, Scalar)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        v
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c * s)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(&self.ring, Scalar::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient under `ord`.
    pub fn monic(&self, ord: &TermOrder) -> Self {
        match self.leading_term(ord) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.0.iter().zip(point) {
                for _ in 0..*e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`; images share a target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::constant(&target, Scalar::one()), p.clone()])
            .collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[var] -= 1;
            out.add_term(d, c * Scalar::from_integer(e.into()));
        }
        out
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Largest weighted degree of a term under the ring weights.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(&self.ring.weights))
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let w = &self.ring.weights;
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(w));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The weighted-homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Self {
        let w = &self.ring.weights;
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(w) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Returns `c` with `self = c * other`, if such a nonzero `c` exists.
    pub fn scalar_ratio(&self, other: &Self) -> Option<Scalar> {
        if self.is_zero() || other.is_zero() || self.num_terms() != other.num_terms() {
            return if self.is_zero() && other.is_zero() {
                Some(Scalar::one())
            } else {
                None
            };
        }
        let (m0, c0) = self.terms.iter().next()?;
        let ratio = c0 / other.terms.get(m0)?;
        for (m, c) in &self.terms {
            match other.terms.get(m) {
                Some(d) if &(d * &ratio) == c => {}
                _ => return None,
            }
        }
        Some(ratio)
    }

    /// Re-expresses the polynomial in another ring with the same variable
    /// count (variables matched by position).
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars());
        Self {
            ring: ring.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Canonical text: terms by decreasing default order of the ring.
    pub fn to_text(&self) -> String {
        self.to_text_with(&self.ring.default_order())
    }

    pub fn to_text_with(&self, ord: &TermOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(ord).iter().enumerate() {
            let neg = c < &Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&fmt_scalar(&abs));
            } else if abs.is_one() {
                out.push_str(&m.display(&self.ring));
            } else {
                out.push_str(&fmt_scalar(&abs));
                out.push('*');
                out.push_str(&m.display(&self.ring));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.same_ring(rhs), "ring mismatch in addition");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.same_ring(rhs), "ring mismatch in subtraction");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.same_ring(rhs), "ring mismatch in multiplication");
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Top weighted-homogeneous component (ring weights).
pub fn drop_lower_terms(f: &Polynomial) -> Polynomial {
    match f.weighted_degree() {
        Some(d) => f.component(d),
        None => f.clone(),
    }
}

/// Parses a file of polynomials: one per line, `#` comments and blank lines
/// skipped. Errors report the file line.
pub fn parse_polynomial_list(ring: &Arc<Ring>, text: &str) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let p = parse::parse_polynomial(ring, line).map_err(|e| match e {
            Error::Parse { column, message, .. } => Error::Parse {
                line: ln + 1,
                column,
                message,
            },
            other => other,
        })?;
        out.push(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::{frac, int};

    fn xy() -> Arc<Ring> {
        Ring::new(vec!["x".into(), "y".into()], vec![1, 1])
    }

    #[test]
    fn degrevlex_compares_weight_first() {
        let r = Ring::new(vec!["a".into(), "b".into(), "c".into()], vec![1, 2, 3]);
        let ord = r.default_order();
        let m = |e: &[u16]| Monomial::from_exponents(e);
        // same weight 3: the one with more c is smaller
        assert_eq!(ord.cmp(&m(&[3, 0, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[3, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[4, 0, 0])), Ordering::Less);
        // equal weight 4: a^2*b vs a*c: c is last so a*c is smaller
        assert_eq!(ord.cmp(&m(&[2, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn arithmetic_and_text() {
        let r = xy();
        let p = r.parse("x^2*y + y - 3/2").unwrap();
        assert_eq!(p.to_text(), "x^2*y + y - 3/2");
        let q = r.parse("(x + y)^2").unwrap();
        assert_eq!(q.to_text(), "x^2 + 2*x*y + y^2");
        assert_eq!((&q - &q).to_text(), "0");
        assert_eq!(r.parse("-x + x").unwrap(), Polynomial::zero(&r));
        assert_eq!(p.eval(&[int(2), int(1)]), frac(7, 2));
    }

    #[test]
    fn drop_lower_terms_keeps_top_component() {
        let r = xy();
        let f = r.parse("x^3 + x*y^2 - 5*x + 7").unwrap();
        assert_eq!(drop_lower_terms(&f).to_text(), "x^3 + x*y^2");
        let h = r.parse("x*y - y^2").unwrap();
        assert_eq!(drop_lower_terms(&h), h);
        assert!(drop_lower_terms(&Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn substitute_and_derivative() {
        let r = xy();
        let f = r.parse("x^2*y").unwrap();
        let g = f.substitute(&[r.parse("x + 1").unwrap(), r.parse("2*y").unwrap()]);
        assert_eq!(g.to_text(), "2*x^2*y + 4*x*y + 2*y");
        assert_eq!(f.derivative(0).to_text(), "2*x*y");
    }

    #[test]
    fn scalar_ratio_detects_multiples() {
        let r = xy();
        let f = r.parse("2*x - 4*y").unwrap();
        let g = r.parse("-x + 2*y").unwrap();
        assert_eq!(f.scalar_ratio(&g), Some(int(-2)));
        assert_eq!(f.scalar_ratio(&r.parse("x - y").unwrap()), None);
    }

    #[test]
    fn list_parsing_reports_line() {
        let r = xy();
        let ok = parse_polynomial_list(&r, "# header\nx + y\n\n x*y \n").unwrap();
        assert_eq!(ok.len(), 2);
        let err = parse_polynomial_list(&r, "x\n# c\nx + 1/0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    proptest::proptest! {
        #[test]
        fn top_component_is_multiplicative(
            a in proptest::collection::vec((0u16..3, 0u16..3, -3i64..=3), 1..5),
            b in proptest::collection::vec((0u16..3, 0u16..3, -3i64..=3), 1..5),
        ) {
            let r = Ring::new(vec!["x".into(), "y".into()], vec![1, 2]);
            let mk = |v: &[(u16, u16, i64)]| Polynomial::from_terms(
                &r, v.iter().map(|&(i, j, c)| (Monomial::from_exponents(&[i, j]), int(c))));
            let (f, g) = (mk(&a), mk(&b));
            proptest::prop_assume!(!f.is_zero() && !g.is_zero());
            proptest::prop_assert_eq!(
                drop_lower_terms(&(&f * &g)),
                &drop_lower_terms(&f) * &drop_lower_terms(&g)
            );
        }

        #[test]
        fn text_round_trip(
            a in proptest::collection::vec((0u16..4, 0u16..4, -20i64..=20, 1i64..6), 0..6),
        ) {
            let r = xy();
            let f = Polynomial::from_terms(
                &r, a.iter().map(|&(i, j, n, d)| (Monomial::from_exponents(&[i, j]), frac(n, d))));
            proptest::prop_assert_eq!(r.parse(&f.to_text()).unwrap(), f);
        }
    }
}
