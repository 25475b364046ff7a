//! Division, S-polynomials, the Buchberger criterion and Buchberger's
//! algorithm with Gebauer-Möller pair pruning and sugar selection.
//!
//! Internally monomials are stored as [`Key`]s: exponents permuted so the
//! lowest-precedence variable comes first, with the weighted degree in
//! front. The derived `Ord` on keys is the term order, so a `BTreeMap` keyed
//! by them serves as the working polynomial during reduction.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use rayon::prelude::*;
use smallvec::SmallVec;

use super::field::{Coeff, Fp};
use super::{Monomial, Polynomial, Ring, TermOrder};
use crate::error::{Error, Result};
use crate::exactmat::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Key {
    deg: u32,
    rev: SmallVec<[u16; 16]>,
    mask: u64,
}

impl Ord for Key {
    fn cmp(&self, o: &Self) -> Ordering {
        // a smaller exponent in a lower-precedence variable wins
        self.deg.cmp(&o.deg).then_with(|| o.rev.cmp(&self.rev))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

fn mask_of(rev: &[u16]) -> u64 {
    rev.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |m, (k, _)| m | 1 << (k % 64))
}

impl Key {
    fn from_rev(deg: u32, rev: SmallVec<[u16; 16]>) -> Self {
        let mask = mask_of(&rev);
        Key { deg, rev, mask }
    }

    fn mul(&self, o: &Self) -> Self {
        Key {
            deg: self.deg + o.deg,
            rev: self.rev.iter().zip(&o.rev).map(|(a, b)| a + b).collect(),
            mask: self.mask | o.mask,
        }
    }

    fn divides(&self, o: &Self) -> bool {
        self.mask & !o.mask == 0 && self.rev.iter().zip(&o.rev).all(|(a, b)| a <= b)
    }

    /// `o / self` when `self | o`.
    fn quotient_of(&self, o: &Self) -> Option<Self> {
        self.divides(o).then(|| {
            Self::from_rev(
                o.deg - self.deg,
                self.rev.iter().zip(&o.rev).map(|(a, b)| b - a).collect(),
            )
        })
    }

    fn lcm(&self, o: &Self, weights_rev: &[u32]) -> Self {
        let rev: SmallVec<[u16; 16]> = self.rev.iter().zip(&o.rev).map(|(a, b)| *a.max(b)).collect();
        let deg = rev.iter().zip(weights_rev).map(|(&e, &w)| e as u32 * w).sum();
        Key {
            deg,
            rev,
            mask: self.mask | o.mask,
        }
    }

    fn is_coprime(&self, o: &Self) -> bool {
        self.mask & o.mask == 0 && self.rev.iter().zip(&o.rev).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Translation between monomials and keys for one term order.
struct Ctx {
    /// `perm[k]` is the variable stored at key position `k`.
    perm: Vec<usize>,
    weights_rev: Vec<u32>,
    weights: Vec<u32>,
}

impl Ctx {
    fn new(ord: &TermOrder) -> Self {
        let perm: Vec<usize> = ord.precedence.iter().rev().copied().collect();
        let weights_rev = perm.iter().map(|&v| ord.weights[v]).collect();
        Ctx {
            perm,
            weights_rev,
            weights: ord.weights.clone(),
        }
    }

    fn key(&self, m: &Monomial) -> Key {
        Key::from_rev(
            m.weighted_degree(&self.weights),
            self.perm.iter().map(|&v| m.0[v]).collect(),
        )
    }

    fn mono(&self, k: &Key) -> Monomial {
        let mut e = vec![0u16; self.perm.len()];
        for (pos, &v) in self.perm.iter().enumerate() {
            e[v] = k.rev[pos];
        }
        Monomial::from_exponents(&e)
    }
}

#[derive(Clone, Debug)]
struct Term<F> {
    key: Key,
    coeff: F,
}

/// Terms sorted from largest to smallest.
#[derive(Clone, Debug)]
struct Sorted<F> {
    terms: Vec<Term<F>>,
}

impl<F: Coeff> Sorted<F> {
    fn from_map(map: BTreeMap<Key, F>) -> Self {
        Sorted {
            terms: map
                .into_iter()
                .rev()
                .map(|(key, coeff)| Term { key, coeff })
                .collect(),
        }
    }

    fn lead(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    fn lead_key(&self) -> &Key {
        &self.terms[0].key
    }

    fn make_monic(&mut self) {
        if let Some(lc) = self.terms.first().map(|t| t.coeff.clone()) {
            if !lc.is_one() {
                let inv = lc.inv();
                for t in &mut self.terms {
                    t.coeff = t.coeff.mul(&inv);
                }
            }
        }
    }

    fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.key.deg).max().unwrap_or(0)
    }
}

impl Sorted<Scalar> {
    fn from_poly(ctx: &Ctx, p: &Polynomial) -> Self {
        let mut terms: Vec<Term<Scalar>> = p
            .terms()
            .map(|(m, c)| Term {
                key: ctx.key(m),
                coeff: c.clone(),
            })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        Sorted { terms }
    }

    fn to_poly(&self, ctx: &Ctx, ring: &Arc<Ring>) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|t| (ctx.mono(&t.key), t.coeff.clone())),
        )
    }
}

/// `map -= c * q * g`.
fn sub_scaled<F: Coeff>(map: &mut BTreeMap<Key, F>, g: &[Term<F>], c: &F, q: &Key) {
    for t in g {
        let k = t.key.mul(q);
        let d = c.mul(&t.coeff);
        match map.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(d.neg());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().sub(&d);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }
}

/// Full reduction modulo `basis` (nonzero, sorted). The first element whose
/// leading monomial divides the current term is used.
fn reduce<F: Coeff>(mut cur: BTreeMap<Key, F>, basis: &[&Sorted<F>]) -> Sorted<F> {
    let mut rem: Vec<Term<F>> = Vec::new();
    while let Some((key, coeff)) = cur.pop_last() {
        let hit = basis.iter().find_map(|g| {
            let lt = g.lead().expect("nonzero basis element");
            lt.key.quotient_of(&key).map(|q| (*g, q))
        });
        match hit {
            None => rem.push(Term { key, coeff }),
            Some((g, q)) => {
                let c = coeff.div(&g.terms[0].coeff);
                sub_scaled(&mut cur, &g.terms[1..], &c, &q);
            }
        }
    }
    Sorted { terms: rem }
}

fn to_map<F: Coeff>(s: &Sorted<F>) -> BTreeMap<Key, F> {
    s.terms.iter().map(|t| (t.key.clone(), t.coeff.clone())).collect()
}

fn spoly<F: Coeff>(ctx: &Ctx, f: &Sorted<F>, g: &Sorted<F>) -> BTreeMap<Key, F> {
    let (lf, lg) = (f.lead().unwrap(), g.lead().unwrap());
    let l = lf.key.lcm(&lg.key, &ctx.weights_rev);
    let qf = lf.key.quotient_of(&l).unwrap();
    let qg = lg.key.quotient_of(&l).unwrap();
    // (l/lt(f)) f - (l/lt(g)) g, leading terms cancel
    let mut map: BTreeMap<Key, F> = BTreeMap::new();
    sub_scaled(&mut map, &f.terms[1..], &lf.coeff.inv().neg(), &qf);
    sub_scaled(&mut map, &g.terms[1..], &lg.coeff.inv(), &qg);
    map
}

fn check_ring(f: &Polynomial, g: &[Polynomial]) -> Result<()> {
    if let Some(bad) = g.iter().find(|p| !p.same_ring(f)) {
        return Err(Error::RingMismatch(format!(
            "{:?} vs {:?}",
            f.ring().names(),
            bad.ring().names()
        )));
    }
    Ok(())
}

fn check_order(ring: &Ring, ord: &TermOrder) -> Result<()> {
    if ord.weights.len() != ring.nvars() {
        return Err(Error::RingMismatch(format!(
            "term order has {} variables, ring has {}",
            ord.weights.len(),
            ring.nvars()
        )));
    }
    Ok(())
}

/// Remainder of full multivariate division of `f` by `g`.
///
/// Zero entries of `g` are ignored. Divisors are tried in list order.
pub fn normal_form(f: &Polynomial, g: &[Polynomial], ord: &TermOrder) -> Result<Polynomial> {
    if g.is_empty() {
        return Err(Error::Precondition("normal_form needs a nonempty basis".into()));
    }
    check_ring(f, g)?;
    check_order(f.ring(), ord)?;
    let ctx = Ctx::new(ord);
    let basis: Vec<Sorted<Scalar>> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Sorted::from_poly(&ctx, p))
        .collect();
    let refs: Vec<&Sorted<Scalar>> = basis.iter().collect();
    let start = to_map(&Sorted::from_poly(&ctx, f));
    Ok(reduce(start, &refs).to_poly(&ctx, f.ring()))
}

/// Quotients and remainder of multivariate division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Textbook division algorithm recording quotients, so that
/// `f = Σ quotients[i] * g[i] + remainder`.
pub fn divide(f: &Polynomial, g: &[Polynomial], ord: &TermOrder) -> Result<Division> {
    if g.is_empty() {
        return Err(Error::Precondition("divide needs a nonempty basis".into()));
    }
    check_ring(f, g)?;
    check_order(f.ring(), ord)?;
    let ring = f.ring();
    let mut quotients = vec![Polynomial::zero(ring); g.len()];
    let mut remainder = Polynomial::zero(ring);
    let mut p = f.clone();
    let leads: Vec<Option<(Monomial, Scalar)>> = g
        .iter()
        .map(|q| q.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    while let Some((m, c)) = p.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())) {
        let hit = leads.iter().enumerate().find_map(|(i, lt)| {
            let (lm, lc) = lt.as_ref()?;
            lm.quotient_of(&m).map(|q| (i, q, &c / lc))
        });
        match hit {
            Some((i, q, s)) => {
                quotients[i].add_term(q.clone(), s.clone());
                p = &p - &g[i].mul_term(&q, &s);
            }
            None => {
                remainder.add_term(m.clone(), c.clone());
                p.add_term(m, -c);
            }
        }
    }
    Ok(Division {
        quotients,
        remainder,
    })
}

/// S-polynomial `(L/LT(f)) f - (L/LT(g)) g` with `L = lcm(LM(f), LM(g))`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_ring(f, std::slice::from_ref(g))?;
    check_order(f.ring(), ord)?;
    let ctx = Ctx::new(ord);
    let s = spoly(&ctx, &Sorted::from_poly(&ctx, f), &Sorted::from_poly(&ctx, g));
    Ok(Sorted::from_map(s).to_poly(&ctx, f.ring()))
}

/// An S-pair whose S-polynomial does not reduce to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFailure {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

/// Outcome of the Buchberger criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbCheck {
    pub pairs_total: usize,
    pub pairs_skipped: usize,
    pub failures: Vec<PairFailure>,
}

impl GbCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Buchberger criterion: every S-pair of `g` reduces to zero modulo `g`.
/// Pairs with coprime leading monomials are skipped (product criterion).
/// Indices in failures refer to positions in `g`.
pub fn gb_check(g: &[Polynomial], ord: &TermOrder) -> GbCheck {
    let Some(ring) = g.first().map(|p| p.ring().clone()) else {
        return GbCheck {
            pairs_total: 0,
            pairs_skipped: 0,
            failures: Vec::new(),
        };
    };
    let ctx = Ctx::new(ord);
    let sorted: Vec<(usize, Sorted<Scalar>)> = g
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, p)| (i, Sorted::from_poly(&ctx, p)))
        .collect();
    let refs: Vec<&Sorted<Scalar>> = sorted.iter().map(|(_, s)| s).collect();
    let pairs: Vec<(usize, usize)> = (0..sorted.len())
        .flat_map(|i| (i + 1..sorted.len()).map(move |j| (i, j)))
        .collect();
    let total = pairs.len();
    let live: Vec<(usize, usize)> = pairs
        .into_iter()
        .filter(|&(i, j)| !sorted[i].1.lead_key().is_coprime(sorted[j].1.lead_key()))
        .collect();
    let skipped = total - live.len();
    let mut failures: Vec<PairFailure> = live
        .par_iter()
        .filter_map(|&(i, j)| {
            let s = spoly(&ctx, &sorted[i].1, &sorted[j].1);
            let r = reduce(s, &refs);
            (!r.terms.is_empty()).then(|| PairFailure {
                i: sorted[i].0,
                j: sorted[j].0,
                remainder: r.to_poly(&ctx, &ring),
            })
        })
        .collect();
    failures.sort_by_key(|f| (f.i, f.j));
    GbCheck {
        pairs_total: total,
        pairs_skipped: skipped,
        failures,
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Key,
    sugar: u32,
}

fn make_pair<F: Coeff>(ctx: &Ctx, polys: &[Sorted<F>], sugars: &[u32], i: usize, j: usize) -> Pair {
    let (a, b) = (polys[i].lead_key(), polys[j].lead_key());
    let lcm = a.lcm(b, &ctx.weights_rev);
    let sugar = (sugars[i] + lcm.deg - a.deg).max(sugars[j] + lcm.deg - b.deg);
    Pair {
        i: i.min(j),
        j: i.max(j),
        lcm,
        sugar,
    }
}

/// Gebauer-Möller update after appending `polys[h]`.
fn update<F: Coeff>(
    ctx: &Ctx,
    polys: &[Sorted<F>],
    sugars: &[u32],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: usize,
) {
    let lh = polys[h].lead_key().clone();
    let lead = |k: usize| polys[k].lead_key();
    let other = |p: &Pair| if p.i == h { p.j } else { p.i };
    let mut candidates: VecDeque<Pair> = active
        .iter()
        .map(|&g| make_pair(ctx, polys, sugars, h, g))
        .collect();

    // Keep (h, g) when coprime, or when no other remaining or kept pair has
    // an lcm dividing its lcm. Coprime pairs stay long enough to dominate.
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = candidates.pop_front() {
        let coprime = lh.is_coprime(lead(other(&p)));
        let dominated = candidates
            .iter()
            .chain(kept.iter())
            .any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p);
        }
    }
    let new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|p| !lh.is_coprime(lead(other(p))))
        .collect();

    // Drop old pairs (g1, g2) with lm(h) | lcm(g1, g2) strictly inside.
    pairs.retain(|p| {
        if !lh.divides(&p.lcm) {
            return true;
        }
        let l1 = lh.lcm(lead(p.i), &ctx.weights_rev);
        let l2 = lh.lcm(lead(p.j), &ctx.weights_rev);
        l1 == p.lcm || l2 == p.lcm
    });
    pairs.extend(new_pairs);

    active.retain(|&g| !lh.divides(lead(g)));
    active.push(h);
}

/// Progress snapshot passed to the callback after each processed pair.
#[derive(Clone, Copy, Debug)]
pub struct Progress {
    pub processed: usize,
    pub pending: usize,
    pub basis: usize,
    pub sugar: u32,
}

fn buchberger_core<F: Coeff>(
    ctx: &Ctx,
    input: Vec<Sorted<F>>,
    progress: &mut dyn FnMut(Progress),
) -> Vec<Sorted<F>> {
    let mut polys: Vec<Sorted<F>> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for p in interreduce_sorted(input) {
        sugars.push(p.max_degree());
        polys.push(p);
        let h = polys.len() - 1;
        update(ctx, &polys, &sugars, &mut active, &mut pairs, h);
    }

    let mut processed = 0;
    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then(a.lcm.cmp(&b.lcm))
                    .then((a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)
            .unwrap();
        let pair = pairs.swap_remove(best);
        processed += 1;
        let s = spoly(ctx, &polys[pair.i], &polys[pair.j]);
        let basis: Vec<&Sorted<F>> = active.iter().map(|&k| &polys[k]).collect();
        let mut r = reduce(s, &basis);
        progress(Progress {
            processed,
            pending: pairs.len(),
            basis: active.len(),
            sugar: pair.sugar,
        });
        if r.terms.is_empty() {
            continue;
        }
        r.make_monic();
        sugars.push(pair.sugar.max(r.max_degree()));
        polys.push(r);
        let h = polys.len() - 1;
        update(ctx, &polys, &sugars, &mut active, &mut pairs, h);
    }

    let basis: Vec<Sorted<F>> = active.iter().map(|&k| polys[k].clone()).collect();
    let mut out = interreduce_sorted(basis);
    out.sort_by(|a, b| a.lead_key().cmp(b.lead_key()));
    out
}

/// Reduced Gröbner basis of the ideal generated by `f`, monic, sorted by
/// increasing leading monomial.
pub fn buchberger(f: &[Polynomial], ord: &TermOrder) -> Vec<Polynomial> {
    buchberger_with_progress(f, ord, |_| {})
}

pub fn buchberger_with_progress(
    f: &[Polynomial],
    ord: &TermOrder,
    mut progress: impl FnMut(Progress),
) -> Vec<Polynomial> {
    let Some(ring) = f.first().map(|p| p.ring().clone()) else {
        return Vec::new();
    };
    let ctx = Ctx::new(ord);
    let input = f
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Sorted::from_poly(&ctx, p))
        .collect();
    buchberger_core(&ctx, input, &mut progress)
        .into_iter()
        .map(|p| p.to_poly(&ctx, &ring))
        .collect()
}

/// Shape of a reduced Gröbner basis computed modulo the prime `2^31 - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularBasis {
    pub leading: Vec<Monomial>,
    pub term_counts: Vec<usize>,
}

/// Buchberger's algorithm over `Z/p` on the reductions of `f`. For all but
/// finitely many primes the leading monomials agree with the rational
/// computation, so this is a cheap probe, not a certificate. `None` if a
/// denominator vanishes mod p.
pub fn modular_basis(
    f: &[Polynomial],
    ord: &TermOrder,
    mut progress: impl FnMut(Progress),
) -> Option<ModularBasis> {
    let ctx = Ctx::new(ord);
    let mut input = Vec::new();
    for p in f.iter().filter(|p| !p.is_zero()) {
        let mut map = BTreeMap::new();
        for (m, c) in p.terms() {
            let c = Fp::from_scalar(c)?;
            if !c.is_zero() {
                map.insert(ctx.key(m), c);
            }
        }
        if !map.is_empty() {
            input.push(Sorted::from_map(map));
        }
    }
    let out = buchberger_core(&ctx, input, &mut progress);
    Some(ModularBasis {
        leading: out.iter().map(|p| ctx.mono(p.lead_key())).collect(),
        term_counts: out.iter().map(|p| p.terms.len()).collect(),
    })
}

/// Minimal, tail-reduced, monic version of a set of polynomials.
fn interreduce_sorted<F: Coeff>(mut polys: Vec<Sorted<F>>) -> Vec<Sorted<F>> {
    polys.retain(|p| !p.terms.is_empty());
    loop {
        // Drop elements whose leading monomial is divisible by another's,
        // keeping their information by reducing them.
        polys.sort_by(|a, b| a.lead_key().cmp(b.lead_key()));
        let mut minimal: Vec<Sorted<F>> = Vec::new();
        let mut changed = false;
        for p in polys {
            if minimal.iter().any(|q| q.lead_key().divides(p.lead_key())) {
                changed = true;
                let refs: Vec<&Sorted<F>> = minimal.iter().collect();
                let r = reduce(to_map(&p), &refs);
                if !r.terms.is_empty() {
                    minimal.push(r);
                }
            } else {
                minimal.push(p);
            }
        }
        polys = minimal;
        if !changed {
            break;
        }
    }
    let n = polys.len();
    for k in 0..n {
        let p = polys[k].clone();
        let others: Vec<&Sorted<F>> = (0..n).filter(|&i| i != k).map(|i| &polys[i]).collect();
        let tail: BTreeMap<Key, F> = p.terms[1..]
            .iter()
            .map(|t| (t.key.clone(), t.coeff.clone()))
            .collect();
        let mut terms = vec![p.terms[0].clone()];
        terms.extend(reduce(tail, &others).terms);
        let mut q = Sorted { terms };
        q.make_monic();
        polys[k] = q;
    }
    polys
}

/// Reduced form of a generating set: minimal leading terms, tails reduced,
/// monic, sorted by increasing leading monomial. Only a Gröbner basis if the
/// input already is one.
pub fn interreduce(f: &[Polynomial], ord: &TermOrder) -> Vec<Polynomial> {
    let Some(ring) = f.first().map(|p| p.ring().clone()) else {
        return Vec::new();
    };
    let ctx = Ctx::new(ord);
    let sorted = f
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Sorted::from_poly(&ctx, p))
        .collect();
    let mut out = interreduce_sorted(sorted);
    out.sort_by(|a, b| a.lead_key().cmp(b.lead_key()));
    out.into_iter().map(|p| p.to_poly(&ctx, &ring)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::int;

    fn xy() -> Arc<Ring> {
        Ring::new(vec!["x".into(), "y".into()], vec![1, 1])
    }

    #[test]
    fn normal_form_examples() {
        let r = xy();
        let ord = r.default_order();
        let f = r.parse("x^2").unwrap();
        assert!(normal_form(&f, &[r.parse("x").unwrap()], &ord).unwrap().is_zero());
        // x^2 y + y = y (x^2 - 1) + 2y
        let f = r.parse("x^2*y + y").unwrap();
        let nf = normal_form(&f, &[r.parse("x^2 - 1").unwrap()], &ord).unwrap();
        assert_eq!(nf, r.parse("2*y").unwrap());
        assert!(normal_form(&f, &[], &ord).is_err());
        let other = Ring::numbered("z", 2);
        assert!(matches!(
            normal_form(&f, &[other.parse("z1").unwrap()], &ord),
            Err(Error::RingMismatch(_))
        ));
    }

    #[test]
    fn division_records_quotients() {
        let r = xy();
        let ord = r.default_order();
        let f = r.parse("x^3*y + x*y^2 - 3*y + 2").unwrap();
        let g = vec![r.parse("x*y - 1").unwrap(), r.parse("y^2 - x").unwrap()];
        let d = divide(&f, &g, &ord).unwrap();
        let mut rebuilt = d.remainder.clone();
        for (q, gi) in d.quotients.iter().zip(&g) {
            rebuilt = &rebuilt + &(q * gi);
        }
        assert_eq!(rebuilt, f);
        assert_eq!(d.remainder, normal_form(&f, &g, &ord).unwrap());
    }

    #[test]
    fn s_polynomial_examples() {
        let r = xy();
        let ord = r.default_order();
        let f = r.parse("x^2 - y").unwrap();
        assert!(s_polynomial(&f, &f, &ord).unwrap().is_zero());
        let s = s_polynomial(&r.parse("x^2").unwrap(), &r.parse("x*y").unwrap(), &ord).unwrap();
        assert!(s.is_zero());
        // y^2 (x^2 - y) - x^2 (y^2 - 1) = x^2 - y^3
        let s = s_polynomial(&f, &r.parse("y^2 - 1").unwrap(), &ord).unwrap();
        assert_eq!(s, r.parse("x^2 - y^3").unwrap());
        assert_eq!(
            s_polynomial(&f, &Polynomial::zero(&r), &ord),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn gb_check_examples() {
        let r = xy();
        let ord = r.default_order();
        let ok = gb_check(&[r.parse("x").unwrap(), r.parse("y").unwrap()], &ord);
        assert!(ok.passed());
        assert_eq!(ok.pairs_skipped, 1);
        let bad = gb_check(&[r.parse("x^2 - y").unwrap(), r.parse("x").unwrap()], &ord);
        assert!(!bad.passed());
        assert_eq!(bad.failures[0].remainder.scalar_ratio(&r.parse("y").unwrap()).is_some(), true);
    }

    #[test]
    fn buchberger_examples() {
        let r = xy();
        let ord = r.default_order();
        assert_eq!(buchberger(&[r.parse("x").unwrap()], &ord), vec![r.parse("x").unwrap()]);
        let input = vec![r.parse("x^2 - y").unwrap(), r.parse("y^2 - 1").unwrap()];
        let gb = buchberger(&input, &ord);
        assert!(gb_check(&gb, &ord).passed());
        for f in &input {
            assert!(normal_form(f, &gb, &ord).unwrap().is_zero());
        }
        // The ideal contains x^4 - 1 but not x^2 - 1.
        assert!(normal_form(&r.parse("x^4 - 1").unwrap(), &gb, &ord).unwrap().is_zero());
        assert!(!normal_form(&r.parse("x^2 - 1").unwrap(), &gb, &ord).unwrap().is_zero());
        for g in &gb {
            assert_eq!(g.leading_term(&ord).unwrap().1, &int(1));
        }
    }

    #[test]
    fn buchberger_cyclic3() {
        let r = Ring::numbered("x", 3);
        let ord = r.default_order();
        let input = vec![
            r.parse("x1 + x2 + x3").unwrap(),
            r.parse("x1*x2 + x2*x3 + x3*x1").unwrap(),
            r.parse("x1*x2*x3 - 1").unwrap(),
        ];
        let gb = buchberger(&input, &ord);
        assert!(gb_check(&gb, &ord).passed());
        for f in &input {
            assert!(normal_form(f, &gb, &ord).unwrap().is_zero());
        }
        // reduced bases are unique; recomputing from the basis is a fixpoint
        assert_eq!(buchberger(&gb, &ord), gb);
    }
}
