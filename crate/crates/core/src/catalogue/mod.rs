//! Named relation lists, the generator bracket table, and the Fourier and
//! involution symmetries of the trace generators.

mod data;
mod derive;
mod table;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::{fmt_scalar, Scalar};
use crate::polyring::{Polynomial, Ring};

pub use derive::{derive_cm4, Comparison, DerivedSet, EqualityMode};
pub use table::{fit_bracket, jacobiator, table_bracket, BracketTable, EntrySource};
pub(crate) use table::monomials_up_to;

/// Number of trace generators for `n x n` pairs: `n(n+3)/2`.
pub fn generator_count(n: usize) -> usize {
    n * (n + 3) / 2
}

/// `(p, q)` such that generator `i` (1-based) is `Tr(A^p B^q)`; for `i = 1, 2`
/// these are `Tr X` and `Tr Y`, reported as `(1, 0)` and `(0, 1)`.
pub fn bidegree(i: usize) -> Option<(u32, u32)> {
    match i {
        0 => None,
        1 => Some((1, 0)),
        2 => Some((0, 1)),
        _ => {
            let mut first = 3;
            for d in 2u32.. {
                let count = d as usize + 1;
                if i < first + count {
                    let k = (i - first) as u32;
                    return Some((d - k, k));
                }
                first += count;
            }
            unreachable!()
        }
    }
}

/// Ring `a1..ak` with weights equal to trace degree, shared per `n`.
pub fn a_ring(n: usize) -> Result<Arc<Ring>> {
    static RINGS: [OnceLock<Arc<Ring>>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    Ok(RINGS[n - 2]
        .get_or_init(|| {
            let k = generator_count(n);
            let names = (1..=k).map(|i| format!("a{i}")).collect();
            let weights = (1..=k)
                .map(|i| {
                    let (p, q) = bidegree(i).unwrap();
                    p + q
                })
                .collect();
            Ring::new(names, weights)
        })
        .clone())
}

pub fn a4_ring() -> Arc<Ring> {
    a_ring(4).expect("n = 4 is supported")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetName {
    Cm2,
    Cm3(Scalar),
    Cm4,
    Cm4Extra,
    Com4,
}

impl SetName {
    /// Accepts `CM2`, `CM3`, `CM4`, `CM4_EXTRA`, `COM4`; `v` is used by `CM3`.
    pub fn parse(name: &str, v: Scalar) -> Result<Self> {
        match name.to_ascii_uppercase().as_str() {
            "CM2" => Ok(Self::Cm2),
            "CM3" => Ok(Self::Cm3(v)),
            "CM4" => Ok(Self::Cm4),
            "CM4_EXTRA" => Ok(Self::Cm4Extra),
            "COM4" => Ok(Self::Com4),
            _ => Err(Error::UnknownSet(name.to_string())),
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            Self::Cm2 => 2,
            Self::Cm3(_) => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for SetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cm2 => f.write_str("CM2"),
            Self::Cm3(v) => write!(f, "CM3(v={})", fmt_scalar(v)),
            Self::Cm4 => f.write_str("CM4"),
            Self::Cm4Extra => f.write_str("CM4_EXTRA"),
            Self::Com4 => f.write_str("COM4"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationSet {
    pub name: SetName,
    pub entries: Vec<(String, Polynomial)>,
}

#[derive(Serialize)]
struct ExportEntry<'a> {
    name: &'a str,
    polynomial: String,
}

impl RelationSet {
    pub fn polys(&self) -> Vec<Polynomial> {
        self.entries.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Polynomial> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Polynomial text format: a `#` header then one `# name` comment and one
    /// polynomial per relation.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.name);
        for (n, p) in &self.entries {
            out.push_str(&format!("# {n}\n{p}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let list: Vec<ExportEntry> = self
            .entries
            .iter()
            .map(|(n, p)| ExportEntry {
                name: n,
                polynomial: p.to_text(),
            })
            .collect();
        serde_json::json!({ "set": self.name.to_string(), "relations": list })
    }
}

fn parse_list(ring: &Arc<Ring>, list: &[(&str, &str)]) -> Vec<(String, Polynomial)> {
    list.iter()
        .map(|(n, t)| (n.to_string(), ring.parse(t).expect("catalogue text parses")))
        .collect()
}

pub fn relations(name: &SetName) -> RelationSet {
    let entries = match name {
        SetName::Cm2 => parse_list(&a_ring(2).unwrap(), data::CM2),
        SetName::Cm3(v) => {
            let ring = a_ring(3).unwrap();
            let vt = format!("({})", fmt_scalar(v));
            data::CM3
                .iter()
                .map(|(n, t)| {
                    let text = t.replace("{v}", &vt);
                    (n.to_string(), ring.parse(&text).expect("catalogue text parses"))
                })
                .collect()
        }
        SetName::Cm4 => parse_list(&a4_ring(), data::CM4),
        SetName::Cm4Extra => parse_list(&a4_ring(), data::CM4_EXTRA),
        SetName::Com4 => {
            let ring = a4_ring();
            let full = listed_basis();
            data::COM4
                .iter()
                .map(|(n, base, tail)| {
                    let p = full.get(base).expect("known name");
                    let t = if tail.is_empty() { "0" } else { tail };
                    (n.to_string(), p + &ring.parse(t).expect("catalogue text parses"))
                })
                .collect()
        }
    };
    RelationSet {
        name: name.clone(),
        entries,
    }
}

/// The twelve generators followed by `r6, t5, t6`.
pub fn listed_basis() -> RelationSet {
    let mut set = relations(&SetName::Cm4);
    set.entries.extend(relations(&SetName::Cm4Extra).entries);
    set
}

/// Reorders a 15-element list into `r1..r6, t1..t6, s1..s3`.
pub fn paired_order(set: &RelationSet) -> RelationSet {
    let order = [
        "r1", "r2", "r3", "r4", "r5", "r6", "t1", "t2", "t3", "t4", "t5", "t6", "s1", "s2", "s3",
    ];
    let entries = order
        .iter()
        .filter_map(|n| set.get(n).map(|p| (n.to_string(), p.clone())))
        .collect();
    RelationSet {
        name: set.name.clone(),
        entries,
    }
}

/// Signed images `(index, sign)` of the generators under `(X, Y) -> (Y, -X)`.
const FOURIER: [(usize, i64); 14] = [
    (2, 1),
    (1, -1),
    (5, 1),
    (4, -1),
    (3, 1),
    (9, 1),
    (8, -1),
    (7, 1),
    (6, -1),
    (14, 1),
    (13, -1),
    (12, 1),
    (11, -1),
    (10, 1),
];

/// The swap `X <-> Y`; `a1 <-> a2` is included.
const INVOLUTION: [usize; 14] = [2, 1, 5, 4, 3, 9, 8, 7, 6, 14, 13, 12, 11, 10];

/// Image of `a_i` under the involution (1-based).
pub fn involution_index(i: usize) -> usize {
    INVOLUTION[i - 1]
}

pub fn fourier(f: &Polynomial) -> Polynomial {
    let ring = f.ring().clone();
    let images: Vec<Polynomial> = FOURIER
        .iter()
        .map(|&(j, s)| ring.var(j - 1).scale(&Scalar::from_integer(s.into())))
        .collect();
    f.substitute(&images)
}

pub fn involution(f: &Polynomial) -> Polynomial {
    let ring = f.ring().clone();
    let images: Vec<Polynomial> = INVOLUTION.iter().map(|&j| ring.var(j - 1)).collect();
    f.substitute(&images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::int;

    #[test]
    fn bidegrees() {
        assert_eq!(bidegree(3), Some((2, 0)));
        assert_eq!(bidegree(4), Some((1, 1)));
        assert_eq!(bidegree(9), Some((0, 3)));
        assert_eq!(bidegree(10), Some((4, 0)));
        assert_eq!(bidegree(14), Some((0, 4)));
        let w = a4_ring().weights().to_vec();
        assert_eq!(w, vec![1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4]);
        assert_eq!(a_ring(3).unwrap().nvars(), 9);
        assert_eq!(a_ring(2).unwrap().nvars(), 5);
        assert!(a_ring(5).is_err());
    }

    #[test]
    fn set_sizes() {
        assert_eq!(relations(&SetName::Cm4).len(), 12);
        assert_eq!(relations(&SetName::Cm4Extra).len(), 3);
        assert_eq!(relations(&SetName::Com4).len(), 15);
        assert_eq!(relations(&SetName::Cm2).len(), 1);
        assert_eq!(relations(&SetName::Cm3(int(0))).len(), 5);
        assert!(SetName::parse("CM9", int(0)).is_err());
    }

    #[test]
    fn r1_matches_expanded_form() {
        let r = a4_ring();
        let r1 = relations(&SetName::Cm4).get("r1").unwrap().clone();
        let e = r
            .parse("8*a3 + a3*a4^2 - a3^2*a5 - 2*a7^2 + 2*a6*a8 + 2*a3*a12 - 4*a4*a11 + 2*a5*a10")
            .unwrap();
        assert_eq!(r1, e);
    }

    #[test]
    fn cm3_parameter() {
        let s = relations(&SetName::Cm3(int(1)));
        let r = a_ring(3).unwrap();
        assert_eq!(
            s.get("r3").unwrap(),
            &r.parse("9*a3 - a3*a4^2 + a3^2*a5 + 6*a6*a8 - 6*a7^2").unwrap()
        );
    }

    #[test]
    fn com4_is_homogeneous_top_part() {
        let full = listed_basis();
        for (n, p) in &relations(&SetName::Com4).entries {
            assert!(p.is_homogeneous(), "{n}");
            assert_eq!(p, &crate::polyring::drop_lower_terms(full.get(n).unwrap()), "{n}");
        }
    }

    #[test]
    fn fourier_maps_r_to_t() {
        let set = listed_basis();
        for k in 1..=6 {
            let r = set.get(&format!("r{k}")).unwrap();
            let t = set.get(&format!("t{k}")).unwrap();
            assert!(fourier(r).scalar_ratio(t).is_some(), "r{k}");
        }
        // s1 is odd under the map, s2 and s3 are fixed
        let s1 = set.get("s1").unwrap();
        assert_eq!(fourier(s1), -s1);
        for k in 2..=3 {
            let s = set.get(&format!("s{k}")).unwrap();
            assert_eq!(&fourier(s), s, "s{k}");
        }
    }

    #[test]
    fn symmetries_have_expected_order() {
        let r = a4_ring();
        let f = r.parse("a1*a7^2 - 3*a4*a11 + a2*a13 + 5").unwrap();
        let f4 = fourier(&fourier(&fourier(&fourier(&f))));
        assert_eq!(f4, f);
        assert_ne!(fourier(&fourier(&f)), f);
        assert_eq!(involution(&involution(&f)), f);
        assert_eq!(fourier(&r.var(11)), r.var(11));
        assert_eq!(involution(&r.var(3)), r.var(3));
    }

    #[test]
    fn text_export_round_trips() {
        let set = relations(&SetName::Cm4);
        let text = set.to_text();
        let back = crate::polyring::parse_polynomial_list(&a4_ring(), &text).unwrap();
        assert_eq!(back, set.polys());
    }
}
