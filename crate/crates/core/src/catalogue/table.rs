//! The generator bracket table and its Leibniz extension.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::{a4_ring, data, involution, involution_index};
use crate::error::{Error, Result};
use crate::exactmat::{RationalMatrix, Scalar};
use crate::polyring::{Monomial, Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntrySource {
    Listed,
    /// Listed with a corrected right-hand side; holds the printed text.
    Corrected(String),
    /// Brackets with `a1` or `a2`.
    Central,
    /// Both generators are powers of one letter.
    PureLetter,
    /// Obtained from another entry through the involution.
    Involution,
    /// Interpolated from numeric brackets at sample points.
    Fitted,
}

impl EntrySource {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Listed => "listed",
            Self::Corrected(_) => "corrected",
            Self::Central => "central",
            Self::PureLetter => "pure-letter",
            Self::Involution => "involution",
            Self::Fitted => "fitted",
        }
    }
}

/// Brackets `{a_i, a_j}` for `1 <= i < j <= 14`.
#[derive(Clone, Debug)]
pub struct BracketTable {
    ring: Arc<Ring>,
    entries: BTreeMap<(usize, usize), (Polynomial, EntrySource)>,
}

const PURE_A: [usize; 3] = [3, 6, 10];
const PURE_B: [usize; 3] = [5, 9, 14];

impl BracketTable {
    /// Only the transcribed entries.
    pub fn listed() -> Self {
        let ring = a4_ring();
        let mut entries = BTreeMap::new();
        for &(i, j, text) in data::TABLE {
            let p = ring.parse(text).expect("table text parses");
            let src = match data::TABLE_CORRECTIONS.iter().find(|c| (c.0, c.1) == (i, j)) {
                Some(c) => EntrySource::Corrected(c.2.to_string()),
                None => EntrySource::Listed,
            };
            entries.insert((i, j), (p, src));
        }
        Self { ring, entries }
    }

    /// Listed entries completed by the central, pure-letter and involution
    /// rules. Pairs the rules cannot reach stay missing.
    pub fn standard() -> Self {
        let mut t = Self::listed();
        t.complete_by_rules();
        t
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn complete_by_rules(&mut self) {
        let zero = Polynomial::zero(&self.ring);
        for i in 1..=14 {
            for j in i + 1..=14 {
                if self.entries.contains_key(&(i, j)) {
                    continue;
                }
                if i <= 2 {
                    self.entries.insert((i, j), (zero.clone(), EntrySource::Central));
                } else if (PURE_A.contains(&i) && PURE_A.contains(&j))
                    || (PURE_B.contains(&i) && PURE_B.contains(&j))
                {
                    self.entries.insert((i, j), (zero.clone(), EntrySource::PureLetter));
                }
            }
        }
        loop {
            let mut added = Vec::new();
            for (&(i, j), (p, _)) in &self.entries {
                let (si, sj) = (involution_index(i), involution_index(j));
                let key = (si.min(sj), si.max(sj));
                if self.entries.contains_key(&key) || added.iter().any(|(k, _)| *k == key) {
                    continue;
                }
                // {a_i^s, a_j^s} = -{a_i, a_j}^s
                let img = involution(p);
                let val = if si < sj { -img } else { img };
                added.push((key, val));
            }
            if added.is_empty() {
                break;
            }
            for (k, v) in added {
                self.entries.insert(k, (v, EntrySource::Involution));
            }
        }
    }

    pub fn missing(&self) -> Vec<(usize, usize)> {
        (1..=14)
            .flat_map(|i| (i + 1..=14).map(move |j| (i, j)))
            .filter(|k| !self.entries.contains_key(k))
            .collect()
    }

    pub fn insert(&mut self, i: usize, j: usize, p: Polynomial, src: EntrySource) {
        assert!(i < j);
        self.entries.insert((i, j), (p, src));
    }

    pub fn remove(&mut self, i: usize, j: usize) {
        self.entries.remove(&(i.min(j), i.max(j)));
    }

    /// `{a_i, a_j}`, using antisymmetry for `i > j`.
    pub fn get(&self, i: usize, j: usize) -> Result<Polynomial> {
        if i == j {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let (p, _) = self.entries.get(&(lo, hi)).ok_or(Error::MissingBracket(lo, hi))?;
        Ok(if i < j { p.clone() } else { -p })
    }

    pub fn source(&self, i: usize, j: usize) -> Option<&EntrySource> {
        self.entries.get(&(i.min(j), i.max(j))).map(|(_, s)| s)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Polynomial, &EntrySource)> {
        self.entries.iter().map(|(&k, (p, s))| (k, p, s))
    }

    /// `{"(i,j)": "<polynomial>"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(i, j), (p, _))| (format!("({i},{j})"), p.to_text().into()))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// Bilinear, Leibniz extension of the table:
/// `{f, g} = sum_{i,j} df/da_i dg/da_j {a_i, a_j}`.
pub fn table_bracket(table: &BracketTable, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let n = f.ring().nvars();
    let df: Vec<(usize, Polynomial)> = (0..n)
        .filter(|&i| f.uses_var(i))
        .map(|i| (i, f.derivative(i)))
        .collect();
    let dg: Vec<(usize, Polynomial)> = (0..n)
        .filter(|&j| g.uses_var(j))
        .map(|j| (j, g.derivative(j)))
        .collect();
    let mut out = Polynomial::zero(f.ring());
    for (i, fi) in &df {
        for (j, gj) in &dg {
            if i == j {
                continue;
            }
            let t = table.get(i + 1, j + 1)?;
            if t.is_zero() {
                continue;
            }
            out = out + &(fi * gj) * &t;
        }
    }
    Ok(out)
}

/// `{{a_i,a_j},a_k} + {{a_k,a_i},a_j} + {{a_j,a_k},a_i}`.
pub fn jacobiator(table: &BracketTable, i: usize, j: usize, k: usize) -> Result<Polynomial> {
    let a = |m: usize| table.ring().var(m - 1);
    let t1 = table_bracket(table, &table.get(i, j)?, &a(k))?;
    let t2 = table_bracket(table, &table.get(k, i)?, &a(j))?;
    let t3 = table_bracket(table, &table.get(j, k)?, &a(i))?;
    Ok(t1 + t2 + t3)
}

/// Monomials in `a3..a14` of weighted degree at most `d`.
pub(crate) fn monomials_up_to(ring: &Ring, d: u32) -> Vec<Monomial> {
    let w = ring.weights();
    let n = ring.nvars();
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    fn rec(v: usize, left: u32, w: &[u32], exps: &mut [u16], out: &mut Vec<Monomial>) {
        if v == exps.len() {
            out.push(Monomial::from_exponents(exps));
            return;
        }
        let mut e = 0u16;
        while e as u32 * w[v] <= left {
            exps[v] = e;
            rec(v + 1, left - e as u32 * w[v], w, exps, out);
            e += 1;
        }
        exps[v] = 0;
    }
    rec(2, d, w, &mut exps, &mut out);
    out
}

/// Fits a polynomial of weighted degree at most `degree` in `a3..a14` to
/// samples `(generator values, bracket value)`, then checks it on the
/// held-out samples. Returns `None` if no fit reproduces every sample.
pub fn fit_bracket(
    ring: &Arc<Ring>,
    degree: u32,
    fit: &[(Vec<Scalar>, Scalar)],
    holdout: &[(Vec<Scalar>, Scalar)],
) -> Option<Polynomial> {
    let basis = monomials_up_to(ring, degree);
    let eval_mono = |m: &Monomial, vals: &[Scalar]| {
        Polynomial::monomial(ring, m.clone(), Scalar::from_integer(1.into())).eval(vals)
    };
    let rows: Vec<Vec<Scalar>> = fit
        .iter()
        .map(|(vals, _)| basis.iter().map(|m| eval_mono(m, vals)).collect())
        .collect();
    let rhs: Vec<Scalar> = fit.iter().map(|(_, b)| b.clone()).collect();
    let a = RationalMatrix::from_rows(rows).ok()?;
    let sol = a.solve(&rhs)?;
    let p = Polynomial::from_terms(
        ring,
        basis.into_iter().zip(sol).filter(|(_, c)| !c.is_zero()),
    );
    fit.iter()
        .chain(holdout)
        .all(|(vals, b)| &p.eval(vals) == b)
        .then_some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::{listed_basis, fourier};
    use crate::exactmat::int;

    #[test]
    fn rules_complete_the_table() {
        let t = BracketTable::standard();
        assert!(t.missing().is_empty(), "{:?}", t.missing());
        let r = t.ring().clone();
        assert_eq!(t.get(1, 2).unwrap(), r.parse("4").unwrap());
        assert_eq!(t.get(2, 1).unwrap(), r.parse("-4").unwrap());
        assert_eq!(t.get(5, 6).unwrap(), r.parse("-6*a7").unwrap());
        assert_eq!(t.source(5, 6), Some(&EntrySource::Involution));
        assert_eq!(t.source(3, 10), Some(&EntrySource::PureLetter));
        assert_eq!(t.source(1, 9), Some(&EntrySource::Central));
        assert!(matches!(t.source(3, 14), Some(EntrySource::Corrected(_))));
    }

    #[test]
    fn involution_law_is_consistent() {
        let t = BracketTable::standard();
        for i in 1..=14 {
            for j in 1..=14 {
                let lhs = t.get(involution_index(i), involution_index(j)).unwrap();
                let rhs = -involution(&t.get(i, j).unwrap());
                assert_eq!(lhs, rhs, "({i},{j})");
            }
        }
    }

    #[test]
    fn leibniz_examples() {
        let t = BracketTable::standard();
        let r = t.ring().clone();
        let b = |f: &str, g: &str| table_bracket(&t, &r.parse(f).unwrap(), &r.parse(g).unwrap()).unwrap();
        assert_eq!(b("a3", "a5"), r.parse("4*a4").unwrap());
        assert_eq!(b("a3", "a3"), r.parse("0").unwrap());
        // a5 {a3,a4} + a3 {a5,a4} = 2 a3 a5 - a3 (2 a5)
        let a54 = t.get(5, 4).unwrap();
        let expect = &(&r.parse("a5").unwrap() * &r.parse("2*a3").unwrap()) + &(&r.parse("a3").unwrap() * &a54);
        assert_eq!(b("a3*a5", "a4"), expect);
    }

    #[test]
    fn jacobiator_is_a_multiple_of_r1() {
        let t = BracketTable::standard();
        let r1 = listed_basis().get("r1").unwrap().clone();
        assert_eq!(jacobiator(&t, 5, 10, 12).unwrap(), r1.scale(&int(-8)));
        // with the printed {a3,a14} = 8a12 this one would be -32a13 + 16a14
        assert!(jacobiator(&t, 3, 5, 14).unwrap().is_zero());
        assert!(jacobiator(&t, 1, 2, 3).unwrap().is_zero());
    }

    #[test]
    fn fourier_is_a_bracket_automorphism() {
        // (X, Y) -> (Y, -X) is symplectic, so it commutes with the bracket
        let t = BracketTable::standard();
        let r = t.ring().clone();
        for i in 1..=14 {
            for j in i + 1..=14 {
                let lhs = table_bracket(&t, &fourier(&r.var(i - 1)), &fourier(&r.var(j - 1))).unwrap();
                let rhs = fourier(&t.get(i, j).unwrap());
                assert_eq!(lhs, rhs, "({i},{j})");
            }
        }
    }

    #[test]
    fn missing_pair_is_an_error() {
        let mut t = BracketTable::standard();
        t.remove(7, 8);
        let r = t.ring().clone();
        assert_eq!(table_bracket(&t, &r.var(6), &r.var(7)), Err(Error::MissingBracket(7, 8)));
        assert_eq!(t.missing(), vec![(7, 8)]);
    }

    #[test]
    fn monomial_enumeration() {
        let r = a4_ring();
        assert_eq!(monomials_up_to(&r, 0).len(), 1);
        assert_eq!(monomials_up_to(&r, 2).len(), 4);
        assert_eq!(monomials_up_to(&r, 3).len(), 8);
        assert!(monomials_up_to(&r, 6).iter().all(|m| m.weighted_degree(r.weights()) <= 6));
    }
}
