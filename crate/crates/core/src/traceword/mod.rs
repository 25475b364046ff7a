//! Cyclic words in two letters, the necklace bracket, trace polynomials and
//! their exact evaluation on matrix pairs.
//!
//! Letters are written `x` and `y`. A cyclic word stands for the trace of the
//! corresponding matrix product; the empty word is the trace of the identity.

mod identities;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::catalogue::bidegree;
use crate::error::{Error, Result};
use crate::exactmat::{fmt_scalar, int, traceless, RationalMatrix, Scalar};
use crate::polyring::{parse_expr, Expr};
use crate::varieties::VarietyPoint;

pub use identities::{
    cayley_hamilton_identities, lemma_identities, necklace_identities, Identity,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    fn from_char(c: char) -> Option<Self> {
        match c {
            'x' => Some(Letter::X),
            'y' => Some(Letter::Y),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// The symplectic pairing on letters.
fn omega(a: Letter, b: Letter) -> i64 {
    match (a, b) {
        (Letter::X, Letter::Y) => 1,
        (Letter::Y, Letter::X) => -1,
        _ => 0,
    }
}

/// A word up to rotation, stored as its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        let n = letters.len();
        let mut best = letters.clone();
        for r in 1..n {
            let rot: Vec<Letter> = letters[r..].iter().chain(&letters[..r]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
        CyclicWord(best)
    }

    pub fn empty() -> Self {
        CyclicWord(Vec::new())
    }

    /// `x^p y^q`.
    pub fn power(p: u32, q: u32) -> Self {
        let mut w = vec![Letter::X; p as usize];
        w.extend(std::iter::repeat(Letter::Y).take(q as usize));
        Self::new(w)
    }

    /// A string over `{x, y}`; `""` and `"1"` give the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "1" {
            return Ok(Self::empty());
        }
        let mut letters = Vec::with_capacity(text.len());
        for (k, c) in text.chars().enumerate() {
            letters.push(Letter::from_char(c).ok_or_else(|| Error::Parse {
                line: 1,
                column: k + 1,
                message: format!("`{c}` is not a letter of the word alphabet"),
            })?);
        }
        Ok(Self::new(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// The word read from just after position `i` round to just before it.
    fn cut_at(&self, i: usize) -> Vec<Letter> {
        self.0[i + 1..].iter().chain(&self.0[..i]).copied().collect()
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

fn add_term<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(k).or_insert_with(Scalar::zero);
    *slot += c;
    // the entry API cannot remove in place
    if slot.is_zero() {
        map.retain(|_, v| !v.is_zero());
    }
}

fn write_terms<'a, T: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a T, &'a Scalar)>,
    is_unit: impl Fn(&T) -> bool,
    show: impl Fn(&T) -> String,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        if is_unit(k) {
            write!(f, "{}", fmt_scalar(&a))?;
        } else if a.is_one() {
            write!(f, "{}", show(k))?;
        } else {
            write!(f, "{}*{}", fmt_scalar(&a), show(k))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Finite rational combination of cyclic words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordSum {
    terms: BTreeMap<CyclicWord, Scalar>,
}

impl WordSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: CyclicWord) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn term(w: CyclicWord, c: Scalar) -> Self {
        let mut s = Self::zero();
        add_term(&mut s.terms, w, c);
        s
    }

    pub fn terms(&self) -> &BTreeMap<CyclicWord, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            add_term(&mut out.terms, w.clone(), a * c);
        }
        out
    }

    /// Parse `3/2*xxyy - xy + 1`; a bare constant multiplies the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let p = TracePoly::parse(text)?;
        let mut out = Self::zero();
        for (factors, c) in &p.terms {
            let w = match factors.as_slice() {
                [] => CyclicWord::empty(),
                [w] => w.clone(),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        column: 1,
                        message: "products of traces are not linear".into(),
                    })
                }
            };
            add_term(&mut out.terms, w, c.clone());
        }
        Ok(out)
    }
}

impl Add for &WordSum {
    type Output = WordSum;
    fn add(self, o: &WordSum) -> WordSum {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            add_term(&mut out.terms, w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &WordSum {
    type Output = WordSum;
    fn sub(self, o: &WordSum) -> WordSum {
        self + &o.scale(&int(-1))
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // the empty word last, like a constant term
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by_key(|(w, _)| (w.is_empty(), std::cmp::Reverse(w.len())));
        write_terms(f, items.into_iter(), |w| w.is_empty(), |w| w.to_string())
    }
}

/// The necklace bracket of two cyclic words.
pub fn necklace_bracket(u: &CyclicWord, v: &CyclicWord) -> WordSum {
    let mut out = WordSum::zero();
    for (i, &a) in u.0.iter().enumerate() {
        for (j, &b) in v.0.iter().enumerate() {
            let s = omega(a, b);
            if s == 0 {
                continue;
            }
            let mut w = u.cut_at(i);
            w.extend(v.cut_at(j));
            add_term(&mut out.terms, CyclicWord::new(w), int(s));
        }
    }
    out
}

/// Bilinear extension of [`necklace_bracket`].
pub fn bracket_sums(f: &WordSum, g: &WordSum) -> WordSum {
    let mut out = WordSum::zero();
    for (u, a) in &f.terms {
        for (v, b) in &g.terms {
            out = &out + &necklace_bracket(u, v).scale(&(a * b));
        }
    }
    out
}

/// Rational combination of ordinary (non-cyclic) words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSum {
    terms: BTreeMap<Vec<Letter>, Scalar>,
}

impl LinearSum {
    pub fn terms(&self) -> &BTreeMap<Vec<Letter>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `c` times the plain word spelled by `letters`.
    pub fn term(letters: &str, c: Scalar) -> Result<Self> {
        let mut word = Vec::new();
        for (k, ch) in letters.chars().enumerate() {
            word.push(Letter::from_char(ch).ok_or_else(|| Error::Parse {
                line: 1,
                column: k + 1,
                message: format!("`{ch}` is not a letter of the word alphabet"),
            })?);
        }
        let mut out = Self::default();
        add_term(&mut out.terms, word, c);
        Ok(out)
    }

    pub fn eval(&self, x: &RationalMatrix, y: &RationalMatrix) -> RationalMatrix {
        let n = x.rows();
        let mut acc = RationalMatrix::zeros(n, n);
        for (w, c) in &self.terms {
            acc = &acc + &word_matrix(w, x, y).scale(c);
        }
        acc
    }
}

/// Cut each word open at every occurrence of `letter`.
pub fn cyclic_gradient(ws: &WordSum, letter: Letter) -> LinearSum {
    let mut out = LinearSum::default();
    for (w, c) in &ws.terms {
        for (i, &l) in w.0.iter().enumerate() {
            if l == letter {
                add_term(&mut out.terms, w.cut_at(i), c.clone());
            }
        }
    }
    out
}

fn word_matrix(w: &[Letter], x: &RationalMatrix, y: &RationalMatrix) -> RationalMatrix {
    let mut acc = RationalMatrix::identity(x.rows());
    for l in w {
        acc = &acc
            * match l {
                Letter::X => x,
                Letter::Y => y,
            };
    }
    acc
}

fn check_pair(x: &RationalMatrix, y: &RationalMatrix) -> Result<()> {
    if !x.is_square() || x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(Error::Shape(format!(
            "need two square matrices of one size, got {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    Ok(())
}

pub fn eval_wordsum(ws: &WordSum, x: &RationalMatrix, y: &RationalMatrix) -> Result<Scalar> {
    check_pair(x, y)?;
    Ok(ws
        .terms
        .iter()
        .map(|(w, c)| c * word_matrix(&w.0, x, y).trace())
        .sum())
}

/// Polynomial in traces of cyclic words. A monomial is the sorted list of its
/// trace factors; the empty list is the constant 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TracePoly {
    terms: BTreeMap<Vec<CyclicWord>, Scalar>,
}

impl TracePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Self::zero();
        add_term(&mut p.terms, Vec::new(), c);
        p
    }

    pub fn word(w: CyclicWord) -> Self {
        let mut p = Self::zero();
        add_term(&mut p.terms, vec![w], Scalar::one());
        p
    }

    pub fn terms(&self) -> &BTreeMap<Vec<CyclicWord>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            add_term(&mut out.terms, m.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(Scalar::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Grammar of polynomials whose atoms are words over `{x, y}`, or
    /// `a1`..`a14` for the generator words `x`, `y`, `x^p y^q`.
    pub fn parse(text: &str) -> Result<Self> {
        parse_expr(&Self::zero(), text)
    }

    pub fn eval(&self, x: &RationalMatrix, y: &RationalMatrix) -> Result<Scalar> {
        check_pair(x, y)?;
        let mut cache: HashMap<&CyclicWord, Scalar> = HashMap::new();
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for w in m {
                let t = cache
                    .entry(w)
                    .or_insert_with(|| word_matrix(&w.0, x, y).trace());
                v *= &*t;
            }
            total += v;
        }
        Ok(total)
    }

    /// Matrix gradient with respect to one letter, evaluated at `(x, y)`.
    fn gradient_at(&self, letter: Letter, x: &RationalMatrix, y: &RationalMatrix) -> RationalMatrix {
        let n = x.rows();
        let mut cache: HashMap<&CyclicWord, Scalar> = HashMap::new();
        let mut acc = RationalMatrix::zeros(n, n);
        for (m, c) in &self.terms {
            for k in 0..m.len() {
                let mut coeff = c.clone();
                for (l, w) in m.iter().enumerate() {
                    if l == k {
                        continue;
                    }
                    let t = cache
                        .entry(w)
                        .or_insert_with(|| word_matrix(&w.0, x, y).trace());
                    coeff *= &*t;
                }
                if coeff.is_zero() {
                    continue;
                }
                let g = cyclic_gradient(&WordSum::word(m[k].clone()), letter);
                acc = &acc + &g.eval(x, y).scale(&coeff);
            }
        }
        acc
    }
}

impl From<&WordSum> for TracePoly {
    fn from(ws: &WordSum) -> Self {
        let mut p = TracePoly::zero();
        for (w, c) in &ws.terms {
            add_term(&mut p.terms, vec![w.clone()], c.clone());
        }
        p
    }
}

impl Add for &TracePoly {
    type Output = TracePoly;
    fn add(self, o: &TracePoly) -> TracePoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            add_term(&mut out.terms, m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TracePoly {
    type Output = TracePoly;
    fn sub(self, o: &TracePoly) -> TracePoly {
        self + &(-o)
    }
}

impl Neg for &TracePoly {
    type Output = TracePoly;
    fn neg(self) -> TracePoly {
        self.scale(&int(-1))
    }
}

impl Mul for &TracePoly {
    type Output = TracePoly;
    fn mul(self, o: &TracePoly) -> TracePoly {
        let mut out = TracePoly::zero();
        for (m1, a) in &self.terms {
            for (m2, b) in &o.terms {
                let mut m: Vec<CyclicWord> = m1.iter().chain(m2).cloned().collect();
                m.sort();
                add_term(&mut out.terms, m, a * b);
            }
        }
        out
    }
}

impl Expr for TracePoly {
    fn constant(&self, c: Scalar) -> Self {
        TracePoly::constant(c)
    }
    fn atom(&self, name: &str) -> Option<Self> {
        if let Some(i) = name.strip_prefix('a').and_then(|s| s.parse::<usize>().ok()) {
            if !(1..=14).contains(&i) {
                return None;
            }
            let (p, q) = bidegree(i)?;
            return Some(TracePoly::word(CyclicWord::power(p, q)));
        }
        if name.chars().all(|c| c == 'x' || c == 'y') {
            return CyclicWord::parse(name).ok().map(TracePoly::word);
        }
        None
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn power(&self, k: u32) -> Self {
        self.pow(k)
    }
}

impl fmt::Display for TracePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by_key(|(m, _)| {
            let deg: usize = m.iter().map(|w| w.len()).sum();
            std::cmp::Reverse(deg)
        });
        write_terms(f, items.into_iter(), |m| m.is_empty(), |m| {
            let mut parts = Vec::new();
            let mut k = 0;
            while k < m.len() {
                let mut e = 1;
                while k + e < m.len() && m[k + e] == m[k] {
                    e += 1;
                }
                parts.push(if e == 1 {
                    m[k].to_string()
                } else {
                    format!("{}^{e}", m[k])
                });
                k += e;
            }
            parts.join("*")
        })
    }
}

/// A generator written as a trace polynomial in the untracelessed letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorExpansion {
    pub index: usize,
    pub n: usize,
    pub expansion: TracePoly,
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Expand `a_i` by substituting `A = x - Tr(x)/n`, `B = y - Tr(y)/n`.
pub fn expand_generator(i: usize, n: usize) -> Result<GeneratorExpansion> {
    if !(1..=14).contains(&i) {
        return Err(Error::IndexOutOfRange(i));
    }
    if n < 2 {
        return Err(Error::Precondition(format!("dimension {n} < 2")));
    }
    let tx = TracePoly::word(CyclicWord::power(1, 0));
    let ty = TracePoly::word(CyclicWord::power(0, 1));
    let expansion = match i {
        1 => tx,
        2 => ty,
        _ => {
            let (p, q) = bidegree(i).expect("index in range");
            let shift = Scalar::new((-1).into(), (n as i64).into());
            let mut acc = TracePoly::zero();
            for k in 0..=p {
                for l in 0..=q {
                    let c = shift.pow((p - k + q - l) as i32)
                        * int(binomial(p, k) * binomial(q, l));
                    let tr = if k + l == 0 {
                        TracePoly::constant(int(n as i64))
                    } else {
                        TracePoly::word(CyclicWord::power(k, l))
                    };
                    let term = &(&tx.pow(p - k) * &ty.pow(q - l)) * &tr;
                    acc = &acc + &term.scale(&c);
                }
            }
            acc
        }
    };
    Ok(GeneratorExpansion {
        index: i,
        n,
        expansion,
    })
}

/// `Tr(df/dX dg/dY - df/dY dg/dX)` at `(x, y)`, which gives `{a1, a2} = n`.
pub fn poisson_numeric(
    f: &TracePoly,
    g: &TracePoly,
    x: &RationalMatrix,
    y: &RationalMatrix,
) -> Result<Scalar> {
    check_pair(x, y)?;
    let fx = f.gradient_at(Letter::X, x, y);
    let fy = f.gradient_at(Letter::Y, x, y);
    let gx = g.gradient_at(Letter::X, x, y);
    let gy = g.gradient_at(Letter::Y, x, y);
    Ok((&fx * &gy).trace() - (&fy * &gx).trace())
}

/// Evaluate `lhs - rhs` with the letters bound to the traceless parts of the
/// point's matrices.
pub fn verify_identity_at(lhs: &TracePoly, rhs: &TracePoly, pt: &VarietyPoint) -> Result<bool> {
    pt.validate()?;
    let a = traceless(&pt.x)?;
    let b = traceless(&pt.y)?;
    Ok((lhs - rhs).eval(&a, &b)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::frac;
    use crate::varieties::cm_point;

    fn w(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    fn ws(s: &str) -> WordSum {
        WordSum::parse(s).unwrap()
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(w("yxx"), w("xxy"));
        assert_eq!(w("xyxy").to_string(), "xyxy");
        assert_eq!(w("yyxy").to_string(), "xyyy");
        assert!(w("1").is_empty());
        assert!(CyclicWord::parse("xz").is_err());
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(necklace_bracket(&w("x"), &w("y")), WordSum::word(CyclicWord::empty()));
        assert_eq!(necklace_bracket(&w("xx"), &w("yy")), ws("4*xy"));
        assert!(necklace_bracket(&w("xx"), &w("x")).is_zero());
        assert!(necklace_bracket(&w(""), &w("xy")).is_zero());
    }

    #[test]
    fn gradient_examples() {
        assert_eq!(cyclic_gradient(&ws("xx"), Letter::X), LinearSum::term("x", int(2)).unwrap());
        assert_eq!(cyclic_gradient(&ws("xyxy"), Letter::X), LinearSum::term("yxy", int(2)).unwrap());
        assert!(cyclic_gradient(&ws("x"), Letter::Y).is_zero());
    }

    #[test]
    fn wordsum_text() {
        let s = ws("3/2*xxyy - xy + 1");
        assert_eq!(s.to_string(), "3/2*xxyy - xy + 1");
        assert_eq!(ws(&s.to_string()), s);
        assert!(WordSum::parse("x*y").is_err());
    }

    #[test]
    fn evaluation_examples() {
        let d = RationalMatrix::diagonal(&[int(1), int(2), int(3), int(4)]);
        let i4 = RationalMatrix::identity(4);
        assert_eq!(eval_wordsum(&ws("xy"), &d, &i4).unwrap(), int(10));
        assert_eq!(eval_wordsum(&ws("1"), &d, &i4).unwrap(), int(4));
        let mut x = RationalMatrix::zeros(4, 4);
        x[(0, 1)] = int(1);
        x[(1, 0)] = int(1);
        let mut y = RationalMatrix::zeros(4, 4);
        y[(0, 0)] = int(1);
        assert_eq!(eval_wordsum(&ws("xxyy"), &x, &y).unwrap(), int(1));
        assert!(eval_wordsum(&ws("xy"), &d, &RationalMatrix::identity(3)).is_err());
    }

    #[test]
    fn generator_expansions() {
        let e = |i| expand_generator(i, 4).unwrap().expansion;
        assert_eq!(e(3), TracePoly::parse("xx - 1/4*x^2").unwrap());
        assert_eq!(e(4), TracePoly::parse("xy - 1/4*x*y").unwrap());
        assert_eq!(e(1), TracePoly::parse("x").unwrap());
        assert!(expand_generator(15, 4).is_err());
        assert!(expand_generator(0, 4).is_err());
    }

    #[test]
    fn poisson_examples() {
        let e = |i| expand_generator(i, 4).unwrap().expansion;
        let pt = cm_point(4, &[int(0), int(1), int(2), int(3)], &vec![int(0); 4]).unwrap();
        assert_eq!(poisson_numeric(&e(1), &e(2), &pt.x, &pt.y).unwrap(), int(4));
        assert_eq!(poisson_numeric(&e(3), &e(4), &pt.x, &pt.y).unwrap(), int(10));
        assert_eq!(e(3).eval(&pt.x, &pt.y).unwrap(), int(5));
        assert!(poisson_numeric(&e(4), &e(12), &pt.x, &pt.y).unwrap().is_zero());
        let other = cm_point(4, &[int(0), frac(1, 2), int(2), int(-3)], &[int(1), int(-1), int(2), frac(1, 3)]).unwrap();
        assert!(poisson_numeric(&e(4), &e(12), &other.x, &other.y).unwrap().is_zero());
    }

    #[test]
    fn lemma_examples() {
        let pt = cm_point(4, &[int(0), int(1), int(3), int(-2)], &[int(2), int(0), int(-1), frac(1, 2)]).unwrap();
        let t = |s: &str| TracePoly::parse(s).unwrap();
        assert!(verify_identity_at(&t("xyxy"), &t("xxyy + 6"), &pt).unwrap());
        assert!(verify_identity_at(&t("xxxyxy"), &t("xxxxyy + 5/2*xx"), &pt).unwrap());
        assert!(verify_identity_at(&t("xxyxy"), &t("xxxyy"), &pt).unwrap());
        assert!(!verify_identity_at(&t("xyxy"), &t("xxyy"), &pt).unwrap());
    }
}
