//! Trace identities, written in the letters `x`, `y` standing for the
//! traceless parts `A`, `B`. Generator names `a3`..`a14` abbreviate the
//! words `x^p y^q`.

use super::TracePoly;
use crate::exactmat::{frac, int, Scalar};

#[derive(Clone, Debug)]
pub struct Identity {
    pub name: String,
    pub lhs: TracePoly,
    pub rhs: TracePoly,
}

fn identity(name: &str, lhs: &str, rhs: &str) -> Identity {
    Identity {
        name: name.to_string(),
        lhs: TracePoly::parse(lhs).expect("identity text"),
        rhs: TracePoly::parse(rhs).expect("identity text"),
    }
}

/// Consequences of Cayley-Hamilton for traceless 4x4 matrices; they hold for
/// every traceless pair, on or off the varieties.
pub fn cayley_hamilton_identities() -> Vec<Identity> {
    vec![
        identity(
            "M^6",
            "xxxxxx",
            "3/4*xxxx*xx + 1/3*xxx^2 - 1/8*xx^3",
        ),
        identity(
            "A^4B^2",
            "xxxxyy",
            "1/2*xx*xxyy + 1/3*xxx*xyy - 1/8*(xx^2 - 2*xxxx)*yy",
        ),
    ]
}

/// Reordering identities valid on the Calogero-Moser space of dimension `n`.
pub fn lemma_identities(n: usize) -> Vec<Identity> {
    let n = n as i64;
    let c1: Scalar = frac(n * (n - 1), 2);
    let c2: Scalar = frac(2 * n - 3, 2);
    let c3: Scalar = int(n - 2);
    vec![
        identity("ABAB", "xyxy", &format!("xxyy + {c1}")),
        identity("A^3BAB", "xxxyxy", &format!("xxxxyy + {c2}*xx")),
        identity("A^2BA^2B", "xxyxxy", &format!("xxxxyy + {c3}*xx")),
    ]
}

/// Degree five and six reorderings on the fourth Calogero-Moser space.
pub fn necklace_identities() -> Vec<Identity> {
    vec![
        identity("A^2BAB", "xxyxy", "xxxyy"),
        identity("ABAB^2", "xyxyy", "xxyyy"),
        identity("A^2BAB^2", "xxyxyy", "xxyyxy - 8"),
        identity("(AB)^3", "xyxyxy", "xxyyxy + 3*a4 - 4"),
        identity("A^3B^3 reorder", "xxxyyy", "xxyyxy - 2*a4 - 4"),
        identity("A^2B^3", "xxyyy", "1/12*(a3*a9 + 6*a4*a8 + 3*a5*a7)"),
        identity("A^3B^2", "xxxyy", "1/12*(a5*a6 + 6*a4*a7 + 3*a3*a8)"),
        identity(
            "A^3B^3",
            "xxxyyy",
            "1/20*(-a4^3 + 6*a7*a8 + 3*a5*a11 + 9*a4*a12 + 3*a3*a13 + 2/3*a6*a9 - 3/2*a3*a4*a5 - 16*a4)",
        ),
    ]
}
