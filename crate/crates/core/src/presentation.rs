//! End-to-end certification of the CM4 and COM4 presentations: Gröbner
//! bases, Hilbert series, the free-module basis, the passage from I to J,
//! the discriminant identity, and pointwise verification.

use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalogue::{
    a4_ring, a_ring, listed_basis, fit_bracket, fourier, jacobiator, relations, BracketTable,
    EntrySource, RelationSet, SetName,
};
use crate::error::Result;
use crate::exactmat::{fmt_scalar, int, Scalar};
use crate::polyring::{
    buchberger, drop_lower_terms, gb_check, hilbert_series, normal_form, GbCheck, HilbertSeries,
    Monomial, Polynomial, TermOrder, UniPoly,
};
use crate::traceword::{
    cayley_hamilton_identities, expand_generator, lemma_identities, necklace_identities,
    poisson_numeric, verify_identity_at, GeneratorExpansion,
};
use crate::varieties::{
    diagonal_ring, generators_at, on_diagonal, random_cm_point, random_com_point, Variety,
    VarietyPoint,
};

/// Weighted degrevlex with `a1 > a2 > a14 > a13 > ... > a3`. Under this
/// precedence the reduced basis of I has fifteen elements and the listed
/// free-module generators are standard monomials.
pub fn certification_order() -> TermOrder {
    let ring = a4_ring();
    let mut names = vec!["a1".to_string(), "a2".to_string()];
    names.extend((3..=14).rev().map(|i| format!("a{i}")));
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    TermOrder::with_precedence(&ring, &refs).expect("complete precedence")
}

/// The twelve generators of I.
pub fn cm4_generators() -> Vec<Polynomial> {
    relations(&SetName::Cm4).polys()
}

/// Reduced Gröbner basis of I under [`certification_order`].
pub fn cm4_basis() -> &'static [Polynomial] {
    static GB: OnceLock<Vec<Polynomial>> = OnceLock::new();
    GB.get_or_init(|| buchberger(&cm4_generators(), &certification_order()))
}

/// Reduced Gröbner basis of J under [`certification_order`].
pub fn com4_basis() -> &'static [Polynomial] {
    static GB: OnceLock<Vec<Polynomial>> = OnceLock::new();
    GB.get_or_init(|| buchberger(&relations(&SetName::Com4).polys(), &certification_order()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
    pub ms: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub suite: String,
    pub variety: Option<Variety>,
    pub order: Option<String>,
    pub checks: Vec<Check>,
}

impl PresentationReport {
    pub fn new(suite: &str, variety: Option<Variety>) -> Self {
        Self {
            suite: suite.to_string(),
            variety,
            order: None,
            checks: Vec::new(),
        }
    }

    /// Runs `f`, timing it; `Err(witness)` marks a failure.
    pub fn run(&mut self, name: &str, f: impl FnOnce() -> std::result::Result<Option<String>, String>) {
        let t = Instant::now();
        let out = f();
        let ms = t.elapsed().as_secs_f64() * 1000.0;
        let (status, witness) = match out {
            Ok(w) => (Status::Pass, w),
            Err(w) => (Status::Fail, Some(w)),
        };
        self.checks.push(Check {
            name: name.to_string(),
            status,
            witness,
            ms,
        });
    }

    pub fn extend(&mut self, other: PresentationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self, config: serde_json::Value) -> serde_json::Value {
        let mut v = serde_json::json!({
            "suite": self.suite,
            "checks": self.checks,
            "config": config,
        });
        if let Some(o) = &self.order {
            v["order"] = serde_json::Value::String(o.clone());
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        if let Some(o) = &self.order {
            out += &format!("order {o}\n");
        }
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            out += &format!("{tag} {} ({:.1} ms)", c.name, c.ms);
            if let Some(w) = &c.witness {
                out += &format!(": {w}");
            }
            out.push('\n');
        }
        out
    }
}

fn verdict(ok: bool, witness: String) -> std::result::Result<Option<String>, String> {
    if ok {
        Ok(Some(witness))
    } else {
        Err(witness)
    }
}

#[derive(Clone, Debug)]
pub struct GbCertificate {
    pub order: String,
    /// Buchberger criterion on the fifteen listed polynomials.
    pub criterion: GbCheck,
    /// Reduced basis of the twelve generators, when requested.
    pub completion: Option<Vec<Polynomial>>,
    /// For each completion element, the listed polynomial it is a scalar
    /// multiple of.
    pub matches: Vec<Option<String>>,
}

impl GbCertificate {
    pub fn completion_matches(&self) -> bool {
        match &self.completion {
            Some(c) => c.len() == 15 && self.matches.iter().all(Option::is_some),
            None => false,
        }
    }

    pub fn passed(&self) -> bool {
        self.criterion.passed() && self.completion_matches()
    }
}

/// Checks the fifteen listed polynomials against the Buchberger criterion
/// and, if `complete`, compares them with the completion of the twelve.
pub fn certify_gb_cm4(ord: &TermOrder, complete: bool) -> GbCertificate {
    certify_gb_of(&listed_basis(), ord, complete)
}

/// Same as [`certify_gb_cm4`] for an arbitrary candidate list.
pub fn certify_gb_of(candidates: &RelationSet, ord: &TermOrder, complete: bool) -> GbCertificate {
    let ring = a4_ring();
    let criterion = gb_check(&candidates.polys(), ord);
    let completion = complete.then(|| buchberger(&cm4_generators(), ord));
    let matches = completion
        .as_ref()
        .map(|c| {
            c.iter()
                .map(|g| {
                    candidates
                        .entries
                        .iter()
                        .find(|(_, p)| p.scalar_ratio(g).is_some())
                        .map(|(n, _)| n.clone())
                })
                .collect()
        })
        .unwrap_or_default();
    GbCertificate {
        order: ord.describe(&ring),
        criterion,
        completion,
        matches,
    }
}

/// `(1 + T^2 + 2T^3 + 4T^4 + 2T^5 + 4T^6 + 2T^7 + 4T^8 + 2T^9 + T^10 + T^12)
///  / ((1-T^4)^2 (1-T^3)^2 (1-T^2)^2 (1-T)^2)`.
pub fn expected_hilbert_series() -> HilbertSeries {
    HilbertSeries::new(
        UniPoly::from_i64(&[1, 0, 1, 2, 4, 2, 4, 2, 4, 2, 1, 0, 1]),
        [(4, 2), (3, 2), (2, 2), (1, 2)],
    )
}

#[derive(Clone, Debug)]
pub struct HilbertCertificate {
    pub series: HilbertSeries,
    /// Numerator over the expected denominator, if it divides.
    pub numerator: Option<UniPoly>,
    pub rank: Option<BigInt>,
    pub matches: bool,
}

fn hilbert_certificate(gb: &[Polynomial], ord: &TermOrder) -> HilbertCertificate {
    let ring = a4_ring();
    let lms: Vec<Monomial> = gb
        .iter()
        .map(|g| g.leading_monomial(ord).expect("nonzero").clone())
        .collect();
    let series = hilbert_series(&lms, ring.weights());
    let expected = expected_hilbert_series();
    let numerator = series.numerator_over(&expected.denominator);
    let rank = numerator.as_ref().map(UniPoly::value_at_one);
    HilbertCertificate {
        matches: series.same_series(&expected),
        series,
        numerator,
        rank,
    }
}

/// Hilbert series of `Q[a1..a14]/I` from the certified basis.
pub fn certify_hilbert_cm4() -> HilbertCertificate {
    hilbert_certificate(cm4_basis(), &certification_order())
}

/// Hilbert series of `Q[a1..a14]/J`.
pub fn certify_hilbert_com4() -> HilbertCertificate {
    hilbert_certificate(com4_basis(), &certification_order())
}

/// Free-module generators over the subring `Q[a1, a2, a3, a5, a6, a9, a10, a14]`.
pub const FREE_BASIS: [&str; 24] = [
    "1", "a4", "a7", "a8", "a4^2", "a11", "a12", "a13", "a4*a7", "a4*a8", "a4^3", "a4*a11",
    "a4*a12", "a4*a13", "a4^2*a7", "a4^2*a8", "a4^4", "a4^2*a11", "a4^2*a12", "a4^2*a13",
    "a4^3*a7", "a4^3*a8", "a4^5", "a4^6",
];

/// Variables adjoined to I for the free-basis check.
pub const ADJOINED: [&str; 6] = ["a3", "a5", "a6", "a9", "a10", "a14"];

#[derive(Clone, Debug)]
pub struct FreeBasisCertificate {
    pub basis_size: usize,
    /// Each listed monomial and whether it is a normal form.
    pub irreducible: Vec<(String, bool)>,
    /// Whether the listed monomials span exactly the standard monomials.
    pub complete: bool,
    /// Generating polynomial of the monomial weights.
    pub degree_polynomial: UniPoly,
    pub degrees_match: bool,
}

impl FreeBasisCertificate {
    pub fn passed(&self) -> bool {
        self.irreducible.iter().all(|(_, ok)| *ok) && self.complete && self.degrees_match
    }
}

/// Gröbner basis of `I + (a3, a5, a6, a9, a10, a14)` and the normal-form
/// test for the listed generators.
pub fn certify_free_basis() -> FreeBasisCertificate {
    let ring = a4_ring();
    let ord = certification_order();
    let mut gens = cm4_generators();
    gens.extend(ADJOINED.iter().map(|v| ring.parse(v).expect("variable")));
    let gb = buchberger(&gens, &ord);
    let lms: Vec<Monomial> = gb
        .iter()
        .map(|g| g.leading_monomial(&ord).expect("nonzero").clone())
        .collect();
    let monos: Vec<(String, Monomial)> = FREE_BASIS
        .iter()
        .map(|s| {
            let p = ring.parse(s).expect("monomial");
            (s.to_string(), p.leading_monomial(&ord).expect("nonzero").clone())
        })
        .collect();
    let irreducible = monos
        .iter()
        .map(|(s, m)| (s.clone(), !lms.iter().any(|l| l.divides(m))))
        .collect();
    // the quotient by the basis is finite over Q[a1, a2]; count its
    // standard monomials in a3..a14 through the Hilbert series
    let series = hilbert_series(&lms, ring.weights());
    let over_free = series.numerator_over(&[(1, 2)].into_iter().collect());
    let mut coeffs = vec![0i64; 13];
    for (_, m) in &monos {
        coeffs[m.weighted_degree(ring.weights()) as usize] += 1;
    }
    let degree_polynomial = UniPoly::from_i64(&coeffs);
    let expected = expected_hilbert_series();
    let target = expected
        .numerator_over(&expected.denominator)
        .expect("same denominator");
    FreeBasisCertificate {
        basis_size: gb.len(),
        irreducible,
        complete: over_free.as_ref() == Some(&degree_polynomial),
        degrees_match: degree_polynomial == target,
        degree_polynomial,
    }
}

#[derive(Clone, Debug)]
pub struct Com4Certificate {
    pub derived: RelationSet,
    /// Each listed CM4 polynomial lies in I.
    pub in_ideal: Vec<(String, bool)>,
    /// Each top component equals the listed COM4 polynomial exactly.
    pub literal: Vec<(String, bool)>,
    /// Each derived polynomial vanishes identically on diagonal pairs.
    pub vanishing: Vec<(String, bool)>,
    pub criterion: GbCheck,
}

impl Com4Certificate {
    pub fn passed(&self) -> bool {
        [&self.in_ideal, &self.literal, &self.vanishing]
            .iter()
            .all(|v| v.iter().all(|(_, ok)| *ok))
    }
}

/// Top weighted components of the fifteen CM4 polynomials, compared with
/// the COM4 list and checked on the diagonal model.
pub fn derive_com4() -> Com4Certificate {
    let ord = certification_order();
    let cm = listed_basis();
    let listed = relations(&SetName::Com4);
    let in_ideal = cm
        .entries
        .iter()
        .map(|(n, p)| {
            let nf = normal_form(p, cm4_basis(), &ord).expect("same ring");
            (n.clone(), nf.is_zero())
        })
        .collect();
    let entries: Vec<(String, Polynomial)> = cm
        .entries
        .iter()
        .map(|(n, p)| (n.clone(), drop_lower_terms(p)))
        .collect();
    let literal = entries
        .iter()
        .map(|(n, p)| (n.clone(), listed.get(n) == Some(p)))
        .collect();
    let vanishing = entries
        .par_iter()
        .map(|(n, p)| (n.clone(), on_diagonal(p, 4).map(|q| q.is_zero()).unwrap_or(false)))
        .collect();
    let derived = RelationSet {
        name: SetName::Com4,
        entries,
    };
    let criterion = gb_check(&derived.polys(), &ord);
    Com4Certificate {
        derived,
        in_ideal,
        literal,
        vanishing,
        criterion,
    }
}

pub const W1: &str = "288*a10^3 - 288*a10^2*a3^2 + 90*a10*a3^4 - 9*a3^6 - 144*a10*a3*a6^2 + 68*a3^3*a6^2 + 24*a6^4";

#[derive(Clone, Debug)]
pub struct DiscriminantReport {
    /// `c` with `w1 = c * prod_{i<j} (l_i - l_j)^2`, if proportional.
    pub constant: Option<Scalar>,
    pub w1_on_diagonal: Polynomial,
}

impl DiscriminantReport {
    pub fn passed(&self) -> bool {
        self.constant
            .as_ref()
            .is_some_and(|c| c == &int(72) || c == &int(-72))
    }
}

/// Substitutes centered power sums into `w1` and compares with the
/// discriminant of `l1..l4` as polynomials.
pub fn discriminant_check() -> DiscriminantReport {
    let ring = a4_ring();
    let w1 = ring.parse(W1).expect("w1 text");
    let on_diag = on_diagonal(&w1, 4).expect("generator ring");
    let dr = diagonal_ring(4);
    let mut disc = Polynomial::constant(&dr, int(1));
    for i in 0..4 {
        for j in i + 1..4 {
            let d = &dr.var(i) - &dr.var(j);
            disc = &disc * &(&d * &d);
        }
    }
    DiscriminantReport {
        constant: on_diag.scalar_ratio(&disc),
        w1_on_diagonal: on_diag,
    }
}

/// Generator expansions for `n = 4`, indexed from 1.
fn expansions() -> Vec<GeneratorExpansion> {
    (1..=14)
        .map(|i| expand_generator(i, 4).expect("index in range"))
        .collect()
}

/// Compares every table entry with the numeric bracket at `points`; returns
/// the pairs that disagree somewhere, with the first bad point index.
pub fn bracket_table_mismatches(
    table: &BracketTable,
    points: &[VarietyPoint],
) -> Result<Vec<((usize, usize), usize)>> {
    let ex = expansions();
    let values: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| generators_at(p).map(|g| g.values))
        .collect::<Result<_>>()?;
    let entries: Vec<((usize, usize), Polynomial)> =
        table.entries().map(|(k, p, _)| (k, p.clone())).collect();
    let bad = entries
        .par_iter()
        .filter_map(|((i, j), p)| {
            points.iter().zip(&values).enumerate().find_map(|(k, (pt, vals))| {
                let num = poisson_numeric(&ex[i - 1].expansion, &ex[j - 1].expansion, &pt.x, &pt.y)
                    .expect("matching sizes");
                (num != p.eval(vals)).then_some(((*i, *j), k))
            })
        })
        .collect();
    Ok(bad)
}

/// Fills every missing table entry by interpolating numeric brackets at CM
/// points; returns the filled pairs, or the ones no fit reproduces.
pub fn fill_missing_brackets(
    table: &mut BracketTable,
    seed: u64,
) -> std::result::Result<Vec<(usize, usize)>, Vec<(usize, usize)>> {
    let ring = table.ring().clone();
    let ex = expansions();
    let weights = ring.weights().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut filled = Vec::new();
    let mut failed = Vec::new();
    for (i, j) in table.missing() {
        let degree = (weights[i - 1] + weights[j - 1]).saturating_sub(2);
        let need = crate::catalogue::monomials_up_to(&ring, degree).len();
        let samples: Vec<(Vec<Scalar>, Scalar)> = (0..need + 10)
            .map(|_| {
                let pt = random_cm_point(&mut rng, 4);
                let vals = generators_at(&pt).expect("valid point").values;
                let b = poisson_numeric(&ex[i - 1].expansion, &ex[j - 1].expansion, &pt.x, &pt.y)
                    .expect("matching sizes");
                (vals, b)
            })
            .collect();
        match fit_bracket(&ring, degree, &samples[..need], &samples[need..]) {
            Some(p) => {
                table.insert(i, j, p, EntrySource::Fitted);
                filled.push((i, j));
            }
            None => failed.push((i, j)),
        }
    }
    if failed.is_empty() {
        Ok(filled)
    } else {
        Err(failed)
    }
}

/// Jacobiators of all triples from `a3..a14` with nonzero normal form
/// modulo the certified basis.
pub fn jacobi_failures(table: &BracketTable, triples: &[(usize, usize, usize)]) -> Result<Vec<(usize, usize, usize)>> {
    let ord = certification_order();
    let out: Result<Vec<Option<(usize, usize, usize)>>> = triples
        .par_iter()
        .map(|&(i, j, k)| {
            let jac = jacobiator(table, i, j, k)?;
            let nf = normal_form(&jac, cm4_basis(), &ord)?;
            Ok((!nf.is_zero()).then_some((i, j, k)))
        })
        .collect();
    Ok(out?.into_iter().flatten().collect())
}

fn first_nonvanishing(set: &RelationSet, points: &[Vec<Scalar>]) -> Option<String> {
    for (name, p) in &set.entries {
        for (k, vals) in points.iter().enumerate() {
            let v = p.eval(vals);
            if !v.is_zero() {
                return Some(format!("{name} = {} at point {k}", fmt_scalar(&v)));
            }
        }
    }
    None
}

fn vanishing_check(set: &RelationSet, points: &[VarietyPoint]) -> std::result::Result<Option<String>, String> {
    let vals: Vec<Vec<Scalar>> = points
        .par_iter()
        .map(|p| generators_at(p).map(|g| g.values))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    match first_nonvanishing(set, &vals) {
        None => Ok(Some(format!("{} relations at {} points", set.len(), points.len()))),
        Some(w) => Err(w),
    }
}

fn cm_points(rng: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<VarietyPoint> {
    (0..count).map(|_| random_cm_point(rng, n)).collect()
}

/// Runs every identity suite at the given points.
pub fn identity_checks(report: &mut PresentationReport, points: &[VarietyPoint]) {
    let suites = [
        ("cayley-hamilton identities", cayley_hamilton_identities()),
        ("reordering identities", lemma_identities(4)),
        ("degree five and six identities", necklace_identities()),
    ];
    for (name, ids) in suites {
        report.run(name, || {
            let bad: Vec<String> = ids
                .par_iter()
                .filter_map(|id| {
                    points
                        .iter()
                        .position(|p| !verify_identity_at(&id.lhs, &id.rhs, p).unwrap_or(false))
                        .map(|k| format!("{} fails at point {k}", id.name))
                })
                .collect();
            if bad.is_empty() {
                Ok(Some(format!("{} identities at {} points", ids.len(), points.len())))
            } else {
                Err(bad.join("; "))
            }
        });
    }
}

/// Evaluates the dimension-`n` catalogue of `variety` at `trials` seeded
/// points. For CM with `n = 4` the identity suites run at the same points;
/// for COM the relations are also substituted symbolically.
pub fn verify_variety(variety: Variety, n: usize, trials: usize, seed: u64) -> Result<PresentationReport> {
    if !(2..=4).contains(&n) {
        return Err(crate::error::Error::UnsupportedDimension(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PresentationReport::new(
        match variety {
            Variety::Cm => "verify cm",
            Variety::Com => "verify com",
        },
        Some(variety),
    );
    match variety {
        Variety::Cm => {
            let pts = cm_points(&mut rng, n, trials);
            let (name, set) = match n {
                2 => ("CM2 relation vanishes", relations(&SetName::Cm2)),
                3 => ("CM3 relations (v = 1) vanish", relations(&SetName::Cm3(int(1)))),
                _ => ("CM4 relations vanish", listed_basis()),
            };
            report.run(name, || vanishing_check(&set, &pts));
            if n == 4 {
                identity_checks(&mut report, &pts);
            }
        }
        Variety::Com => {
            let set = match n {
                2 => top_parts(&relations(&SetName::Cm2), SetName::Cm2),
                3 => relations(&SetName::Cm3(Scalar::zero())),
                _ => relations(&SetName::Com4),
            };
            let pts: Vec<VarietyPoint> = (0..trials).map(|_| random_com_point(&mut rng, n)).collect();
            report.run(&format!("COM{n} relations vanish"), || vanishing_check(&set, &pts));
            report.run(&format!("COM{n} relations vanish identically"), || {
                symbolic_vanishing(&set, n)
            });
        }
    }
    Ok(report)
}

fn top_parts(set: &RelationSet, name: SetName) -> RelationSet {
    RelationSet {
        name,
        entries: set
            .entries
            .iter()
            .map(|(n, p)| (n.clone(), drop_lower_terms(p)))
            .collect(),
    }
}

fn symbolic_vanishing(set: &RelationSet, n: usize) -> std::result::Result<Option<String>, String> {
    let ring = a_ring(n).map_err(|e| e.to_string())?;
    let bad: Vec<String> = set
        .entries
        .par_iter()
        .filter_map(|(name, p)| {
            let q = on_diagonal(&p.with_ring(&ring), n).ok()?;
            (!q.is_zero()).then(|| format!("{name} leaves {} terms", q.num_terms()))
        })
        .collect();
    if bad.is_empty() {
        Ok(Some(format!("{} relations are zero in l, m", set.len())))
    } else {
        Err(bad.join("; "))
    }
}

/// Table entries against numeric brackets at `count` seeded CM points.
pub fn verify_brackets(count: usize, seed: u64) -> PresentationReport {
    let mut report = PresentationReport::new("verify brackets", Some(Variety::Cm));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = cm_points(&mut rng, 4, count);
    let mut table = BracketTable::standard();
    report.run("table is complete", || {
        let filled = fill_missing_brackets(&mut table, seed).map_err(|f| format!("no fit for {f:?}"))?;
        Ok(Some(if filled.is_empty() {
            "rules reach every pair".to_string()
        } else {
            format!("fitted {filled:?}")
        }))
    });
    report.run("table matches numeric brackets", || {
        let bad = bracket_table_mismatches(&table, &pts).map_err(|e| e.to_string())?;
        let n = table.entries().count();
        verdict(bad.is_empty(), if bad.is_empty() {
            format!("{n} pairs at {} points", pts.len())
        } else {
            format!("{bad:?}")
        })
    });
    report
}

/// Random triples `i < j < k` from `3..=14`.
pub fn random_triples(count: usize, seed: u64) -> Vec<(usize, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut t = [0usize; 3];
            loop {
                for x in t.iter_mut() {
                    *x = rng.gen_range(3..=14);
                }
                t.sort_unstable();
                if t[0] < t[1] && t[1] < t[2] {
                    break;
                }
            }
            (t[0], t[1], t[2])
        })
        .collect()
}

/// Fourier images of the fifteen relations reduce to zero modulo I.
pub fn fourier_preserves_ideal() -> Vec<(String, bool)> {
    let ord = certification_order();
    listed_basis()
        .entries
        .iter()
        .map(|(n, p)| {
            let nf = normal_form(&fourier(p), cm4_basis(), &ord).expect("same ring");
            (n.clone(), nf.is_zero())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::frac;

    #[test]
    fn certified_basis_gives_the_series() {
        let h = certify_hilbert_cm4();
        assert!(h.matches);
        assert_eq!(h.rank, Some(BigInt::from(24)));
        let num = h.numerator.unwrap();
        assert_eq!(num.degree(), Some(12));
        assert!(num.coeffs().iter().all(|c| c >= &BigInt::zero()));
    }

    #[test]
    fn commuting_ideal_has_the_same_series() {
        assert!(certify_hilbert_com4().matches);
    }

    #[test]
    fn free_basis_is_standard() {
        let c = certify_free_basis();
        assert!(c.passed(), "{c:?}");
        assert_eq!(c.irreducible.len(), 24);
    }

    #[test]
    fn twelve_generators_alone_are_not_a_basis() {
        assert!(!gb_check(&cm4_generators(), &certification_order()).passed());
    }

    #[test]
    fn corrupted_relation_is_caught() {
        let ring = a4_ring();
        let mut set = listed_basis();
        assert_eq!(set.entries[1].0, "r2");
        let r2 = &set.entries[1].1 - &ring.parse("24*a6*a12").unwrap();
        set.entries[1].1 = r2;
        let ord = certification_order();
        let cert = certify_gb_of(&set, &ord, false);
        assert!(!cert.criterion.passed());
        assert!(!cert.criterion.failures.is_empty());
    }

    #[test]
    fn discriminant_constant() {
        let d = discriminant_check();
        assert_eq!(d.constant, Some(int(-72)));
        let ring = a4_ring();
        let w1 = ring.parse(W1).unwrap();
        let mut vals = vec![Scalar::zero(); 14];
        vals[2] = int(5);
        vals[9] = frac(41, 4);
        assert_eq!(w1.eval(&vals), int(-10368));
    }

    #[test]
    fn commuting_relations_come_from_the_cm_list() {
        let c = derive_com4();
        assert!(c.passed(), "{:?} {:?} {:?}", c.in_ideal, c.literal, c.vanishing);
    }

    #[test]
    fn jacobi_holds_modulo_the_ideal() {
        let t = BracketTable::standard();
        let all: Vec<_> = (3..=14)
            .flat_map(|i| (i + 1..=14).flat_map(move |j| (j + 1..=14).map(move |k| (i, j, k))))
            .collect();
        assert_eq!(all.len(), 220);
        assert!(jacobi_failures(&t, &all).unwrap().is_empty());
    }

    #[test]
    fn fourier_preserves_the_ideal() {
        assert!(fourier_preserves_ideal().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn missing_entries_are_refitted() {
        let mut t = BracketTable::standard();
        let expected = t.get(7, 8).unwrap();
        t.remove(7, 8);
        assert_eq!(t.missing(), vec![(7, 8)]);
        assert_eq!(fill_missing_brackets(&mut t, 3), Ok(vec![(7, 8)]));
        assert_eq!(t.get(7, 8).unwrap(), expected);
    }

    #[test]
    fn small_dimensions_verify() {
        for v in [Variety::Cm, Variety::Com] {
            for n in 2..=3 {
                let r = verify_variety(v, n, 5, 1).unwrap();
                assert!(r.passed(), "{}", r.to_text());
            }
        }
        assert!(verify_variety(Variety::Cm, 5, 1, 0).is_err());
    }

    #[test]
    fn report_text_and_json() {
        let mut r = PresentationReport::new("demo", None);
        r.run("ok", || Ok(None));
        r.run("bad", || Err("witness".into()));
        assert!(!r.passed());
        let js = r.to_json(serde_json::json!({"seed": 0}));
        assert_eq!(js["checks"][0]["status"], "pass");
        assert_eq!(js["checks"][1]["witness"], "witness");
        assert!(r.to_text().contains("FAIL bad"));
    }
}
