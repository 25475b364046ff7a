//! Bracket-driven derivation of the CM4 relations from `r1`.

use crate::error::Result;
use crate::exactmat::{frac, int, Scalar};
use crate::polyring::{normal_form, Polynomial, TermOrder};

use super::{listed_basis, fourier, table_bracket, BracketTable, RelationSet, SetName};

#[derive(Clone, Debug, PartialEq)]
pub enum EqualityMode {
    /// `derived = ratio * listed`.
    Literal(Scalar),
    /// `derived - ratio * listed` reduces to zero modulo the relations
    /// derived before it.
    ModuloEarlier(Scalar),
    Neither,
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub name: String,
    pub mode: EqualityMode,
}

#[derive(Clone, Debug)]
pub struct DerivedSet {
    pub set: RelationSet,
    pub comparisons: Vec<Comparison>,
}

impl DerivedSet {
    pub fn all_match(&self) -> bool {
        self.comparisons.iter().all(|c| c.mode != EqualityMode::Neither)
    }
}

/// Runs the recipe
/// `r2 = -6{r1,a7}, r3 = 1/6{r2,a5}, r4 = 1/2{{r1,a8},a6}, r5 = 1/2{{r1,a8},a9},
///  r6 = 3{r1,a8}, t_k = fourier(r_k), s1 = 1/4{r1,a5}, s2 = a3 t1 - 1/6{r5,a3},
///  s3 = -1/9{r2,a9}`
/// and compares every result with the listed relation of the same name.
///
/// `earlier` is a Gröbner basis (under `ord`) used for the second equality
/// mode; pass `None` to test literal equality only.
pub fn derive_cm4(
    table: &BracketTable,
    r1: &Polynomial,
    earlier: Option<(&[Polynomial], &TermOrder)>,
) -> Result<DerivedSet> {
    let ring = table.ring().clone();
    let a = |i: usize| ring.var(i - 1);
    let br = |f: &Polynomial, g: &Polynomial| table_bracket(table, f, g);

    let r1a8 = br(r1, &a(8))?;
    let r2 = br(r1, &a(7))?.scale(&int(-6));
    let r3 = br(&r2, &a(5))?.scale(&frac(1, 6));
    let r4 = br(&r1a8, &a(6))?.scale(&frac(1, 2));
    let r5 = br(&r1a8, &a(9))?.scale(&frac(1, 2));
    let r6 = r1a8.scale(&int(3));
    let rs = [r1.clone(), r2.clone(), r3, r4, r5.clone(), r6];
    let ts: Vec<Polynomial> = rs.iter().map(fourier).collect();
    let s1 = br(r1, &a(5))?.scale(&frac(1, 4));
    let s2 = &(&a(3) * &ts[0]) - &br(&r5, &a(3))?.scale(&frac(1, 6));
    let s3 = br(&r2, &a(9))?.scale(&frac(-1, 9));

    let mut entries = Vec::new();
    for (k, p) in rs.iter().enumerate() {
        entries.push((format!("r{}", k + 1), p.clone()));
    }
    for (k, p) in ts.iter().enumerate() {
        entries.push((format!("t{}", k + 1), p.clone()));
    }
    entries.push(("s1".into(), s1));
    entries.push(("s2".into(), s2));
    entries.push(("s3".into(), s3));

    let listed = listed_basis();
    let comparisons = entries
        .iter()
        .map(|(name, d)| {
            let c = listed.get(name).expect("listed relation");
            Comparison {
                name: name.clone(),
                mode: compare(d, c, earlier),
            }
        })
        .collect();
    Ok(DerivedSet {
        set: RelationSet {
            name: SetName::Cm4,
            entries,
        },
        comparisons,
    })
}

fn compare(
    derived: &Polynomial,
    listed: &Polynomial,
    earlier: Option<(&[Polynomial], &TermOrder)>,
) -> EqualityMode {
    if let Some(r) = derived.scalar_ratio(listed) {
        return EqualityMode::Literal(r);
    }
    let Some((gb, ord)) = earlier else {
        return EqualityMode::Neither;
    };
    // match the top weighted components first
    let dt = crate::polyring::drop_lower_terms(derived);
    let lt = crate::polyring::drop_lower_terms(listed);
    let Some(ratio) = dt.scalar_ratio(&lt) else {
        return EqualityMode::Neither;
    };
    let diff = derived - &listed.scale(&ratio);
    match normal_form(&diff, gb, ord) {
        Ok(nf) if nf.is_zero() => EqualityMode::ModuloEarlier(ratio),
        _ => EqualityMode::Neither,
    }
}
