//! Exact points of Calogero-Moser spaces and commuting varieties, generator
//! values at those points, and the symbolic diagonal model.

use std::sync::Arc;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalogue::{bidegree, generator_count};
use crate::error::{Error, Result};
use crate::exactmat::{
    fmt_scalar, frac, int, parse_scalar, random_int_matrix, rank, traceless, CmQuadruple, RationalMatrix,
    Scalar,
};
use crate::polyring::{Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variety {
    #[serde(rename = "CM")]
    Cm,
    #[serde(rename = "COM")]
    Com,
}

/// A pair `(X, Y)` on one of the two varieties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyPoint {
    pub variety: Variety,
    pub n: usize,
    pub x: RationalMatrix,
    pub y: RationalMatrix,
    pub witness: Option<CmQuadruple>,
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    variety: Variety,
    n: usize,
    #[serde(rename = "X")]
    x: RationalMatrix,
    #[serde(rename = "Y")]
    y: RationalMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    w: Option<Vec<String>>,
}

impl VarietyPoint {
    /// Checks the defining condition of the declared variety exactly.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for m in [&self.x, &self.y] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::InvalidPoint(format!("matrices are not {n}x{n}")));
            }
        }
        let c = self.x.commutator(&self.y);
        match self.variety {
            Variety::Com => {
                if !c.is_zero() {
                    return Err(Error::InvalidPoint("X and Y do not commute".into()));
                }
            }
            Variety::Cm => {
                if rank(&(&c + &RationalMatrix::identity(n))) != 1 {
                    return Err(Error::InvalidPoint("rank([X,Y] + I) is not 1".into()));
                }
                let q = self
                    .witness
                    .as_ref()
                    .ok_or_else(|| Error::InvalidPoint("missing v, w witness".into()))?;
                if q.x != self.x || q.y != self.y || !q.residual().is_zero() || q.wv() != int(n as i64) {
                    return Err(Error::InvalidPoint("witness does not match".into()));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let strings = |v: &[Scalar]| v.iter().map(fmt_scalar).collect::<Vec<_>>();
        let wire = PointJson {
            variety: self.variety,
            n: self.n,
            x: self.x.clone(),
            y: self.y.clone(),
            v: self.witness.as_ref().map(|q| strings(&q.v)),
            w: self.witness.as_ref().map(|q| strings(&q.w)),
        };
        serde_json::to_value(wire).expect("serializable")
    }

    /// Parse and validate a serialized point.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let wire: PointJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidPoint(e.to_string()))?;
        let scalars = |v: &[String]| v.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>>>();
        let witness = match (&wire.v, &wire.w) {
            (Some(v), Some(w)) => Some(CmQuadruple::new(
                wire.x.clone(),
                wire.y.clone(),
                scalars(v)?,
                scalars(w)?,
            )?),
            (None, None) => None,
            _ => return Err(Error::InvalidPoint("v and w must come together".into())),
        };
        let pt = VarietyPoint {
            variety: wire.variety,
            n: wire.n,
            x: wire.x,
            y: wire.y,
            witness,
        };
        pt.validate()?;
        Ok(pt)
    }
}

/// Moser point: `X = Diag[x]`, `Y_ii = p_i`, `Y_ij = 1/(x_i - x_j)`, so that
/// `[X, Y] + I` is the all-ones matrix.
pub fn cm_point(n: usize, x: &[Scalar], p: &[Scalar]) -> Result<VarietyPoint> {
    if x.len() != n || p.len() != n {
        return Err(Error::Shape(format!("need {n} positions and {n} momenta")));
    }
    for i in 0..n {
        for j in 0..i {
            if x[i] == x[j] {
                return Err(Error::RepeatedEntries(fmt_scalar(&x[i])));
            }
        }
    }
    let xm = RationalMatrix::diagonal(x);
    let ym = RationalMatrix::from_fn(n, n, |i, j| {
        if i == j {
            p[i].clone()
        } else {
            (&x[i] - &x[j]).recip()
        }
    });
    let ones = vec![Scalar::one(); n];
    let q = CmQuadruple::new(xm.clone(), ym.clone(), ones.clone(), ones)?;
    let pt = VarietyPoint {
        variety: Variety::Cm,
        n,
        x: xm,
        y: ym,
        witness: Some(q),
    };
    pt.validate()?;
    Ok(pt)
}

/// The diagonal pair `(Diag[lambda], Diag[mu])`.
pub fn com_point(lambda: &[Scalar], mu: &[Scalar]) -> Result<VarietyPoint> {
    if lambda.len() != mu.len() {
        return Err(Error::Shape("lambda and mu differ in length".into()));
    }
    Ok(VarietyPoint {
        variety: Variety::Com,
        n: lambda.len(),
        x: RationalMatrix::diagonal(lambda),
        y: RationalMatrix::diagonal(mu),
        witness: None,
    })
}

/// Values of `a1..ak` at a point, `k = n(n+3)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPoint {
    pub n: usize,
    pub values: Vec<Scalar>,
}

impl GeneratorPoint {
    /// Value of `a_i`, 1-based.
    pub fn get(&self, i: usize) -> &Scalar {
        &self.values[i - 1]
    }
}

/// Generator values of any square pair, on a variety or not.
pub fn generator_values(x: &RationalMatrix, y: &RationalMatrix) -> Result<GeneratorPoint> {
    let n = x.rows();
    if !x.is_square() || y.rows() != n || y.cols() != n {
        return Err(Error::Shape("need two square matrices of one size".into()));
    }
    let k = generator_count(n);
    let a = traceless(x)?;
    let b = traceless(y)?;
    let apow: Vec<RationalMatrix> = (0..=n).map(|e| a.pow(e as u32)).collect();
    let bpow: Vec<RationalMatrix> = (0..=n).map(|e| b.pow(e as u32)).collect();
    let mut values = vec![x.trace(), y.trace()];
    for i in 3..=k {
        let (p, q) = bidegree(i).expect("generator index");
        values.push((&apow[p as usize] * &bpow[q as usize]).trace());
    }
    Ok(GeneratorPoint { n, values })
}

pub fn generators_at(pt: &VarietyPoint) -> Result<GeneratorPoint> {
    pt.validate()?;
    generator_values(&pt.x, &pt.y)
}

/// Ring of the eigenvalue symbols `l1..ln, m1..mn`.
pub fn diagonal_ring(n: usize) -> Arc<Ring> {
    let names = (1..=n)
        .map(|i| format!("l{i}"))
        .chain((1..=n).map(|i| format!("m{i}")))
        .collect();
    Ring::new(names, vec![1; 2 * n])
}

/// Each generator as a polynomial in the diagonal entries, through centered
/// power sums.
pub fn symbolic_com_generators(n: usize) -> Result<Vec<Polynomial>> {
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    let ring = diagonal_ring(n);
    let lam: Vec<Polynomial> = (0..n).map(|i| ring.var(i)).collect();
    let mu: Vec<Polynomial> = (0..n).map(|i| ring.var(n + i)).collect();
    let sum = |v: &[Polynomial]| v.iter().fold(Polynomial::zero(&ring), |acc, p| &acc + p);
    let (s, t) = (sum(&lam), sum(&mu));
    let inv_n = frac(1, n as i64);
    let ca: Vec<Polynomial> = lam.iter().map(|l| l - &s.scale(&inv_n)).collect();
    let cb: Vec<Polynomial> = mu.iter().map(|m| m - &t.scale(&inv_n)).collect();
    let mut out = vec![s.clone(), t.clone()];
    for i in 3..=generator_count(n) {
        let (p, q) = bidegree(i).expect("generator index");
        let mut acc = Polynomial::zero(&ring);
        for k in 0..n {
            acc = &acc + &(&ca[k].pow(p) * &cb[k].pow(q));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Substitute the symbolic generators into a polynomial of the generator ring.
pub fn on_diagonal(f: &Polynomial, n: usize) -> Result<Polynomial> {
    let gens = symbolic_com_generators(n)?;
    if f.ring().nvars() != gens.len() {
        return Err(Error::RingMismatch(format!(
            "expected {} generator variables, found {}",
            gens.len(),
            f.ring().nvars()
        )));
    }
    Ok(f.substitute(&gens))
}

/// Small random rational with denominator in `1..=3`.
fn small_rational<R: Rng>(rng: &mut R, bound: i64) -> Scalar {
    frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

/// Moser point with random distinct positions and random momenta.
pub fn random_cm_point<R: Rng>(rng: &mut R, n: usize) -> VarietyPoint {
    let mut x: Vec<Scalar> = Vec::with_capacity(n);
    while x.len() < n {
        let c = small_rational(rng, 6);
        if !x.contains(&c) {
            x.push(c);
        }
    }
    let p: Vec<Scalar> = (0..n).map(|_| small_rational(rng, 6)).collect();
    cm_point(n, &x, &p).expect("distinct positions")
}

pub fn random_com_point<R: Rng>(rng: &mut R, n: usize) -> VarietyPoint {
    let l: Vec<Scalar> = (0..n).map(|_| small_rational(rng, 6)).collect();
    let m: Vec<Scalar> = (0..n).map(|_| small_rational(rng, 6)).collect();
    com_point(&l, &m).expect("equal lengths")
}

/// Integer 4x4 pair lying on neither variety, resampled until it does not.
pub fn random_offvariety_point(seed: u64) -> (RationalMatrix, RationalMatrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let x = random_int_matrix(&mut rng, 4, 5);
        let y = random_int_matrix(&mut rng, 4, 5);
        let c = x.commutator(&y);
        if !c.is_zero() && rank(&(&c + &RationalMatrix::identity(4))) != 1 {
            return (x, y);
        }
    }
}
