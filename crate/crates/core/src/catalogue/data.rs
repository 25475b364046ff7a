//! Relation lists in the polynomial text grammar (parentheses allowed).

pub(super) const CM2: &[(&str, &str)] = &[("r1", "a4^2 - a3*a5 - 1")];

/// `{v}` is replaced by the rational parameter.
pub(super) const CM3: &[(&str, &str)] = &[
    ("r1", "a3*a9 - 2*a4*a8 + a5*a7"),
    ("r2", "a5*a6 - 2*a4*a7 + a3*a8"),
    ("r3", "9*{v}*a3 - a3*a4^2 + a3^2*a5 + 6*a6*a8 - 6*a7^2"),
    ("r4", "9*{v}*a4 - a4^3 + a3*a4*a5 + 3*a6*a9 - 3*a7*a8"),
    ("r5", "9*{v}*a5 - a4^2*a5 + a3*a5^2 + 6*a7*a9 - 6*a8^2"),
];

pub(super) const CM4: &[(&str, &str)] = &[
    ("r1", "8*a3 + a3*(a4^2 - a3*a5) - 2*(a7^2 - a6*a8) + 2*(a3*a12 - 2*a4*a11 + a5*a10)"),
    ("r2", "48*a6 - a6*(4*a4^2 - a3*a5) - 3*a3*(a3*a8 - 2*a4*a7) + 12*(a6*a12 - 2*a7*a11 + a8*a10)"),
    ("r3", "-2*a4*a5*a6 + 3*a3*a5*a7 - a3^2*a9 + 4*(2*a6*a13 - 3*a7*a12 + a9*a10)"),
    ("r4", "-6*a3^2 + 24*a10 - 6*a10*(a4^2 + a3*a5) - 3*a3^2*(a4^2 - a3*a5) + 2*a6*(a3*a8 - 2*a4*a7 + a5*a6) - 12*a3*(a3*a12 - 2*a4*a11) + 24*(a10*a12 - a11^2)"),
    ("r5", "12*a4*a5 - 48*a13 + 3*a4*a5*(a3*a5 - a4^2) + 2*(a3*a8*a9 - 2*a4*a7*a9 + a5*a6*a9) - 3*a4*(a5*a12 - 4*a4*a13 + 3*a3*a14) + 3*a5*(a3*a13 - a5*a11) + 12*(a11*a14 - a12*a13)"),
    ("t1", "8*a5 + a5*(a4^2 - a3*a5) - 2*(a8^2 - a7*a9) + 2*(a5*a12 - 2*a4*a13 + a3*a14)"),
    ("t2", "48*a9 - a9*(4*a4^2 - a3*a5) - 3*a5*(a5*a7 - 2*a4*a8) + 12*(a9*a12 - 2*a8*a13 + a7*a14)"),
    ("t3", "-2*a3*a4*a9 + 3*a3*a5*a8 - a5^2*a6 + 4*(2*a9*a11 - 3*a8*a12 + a6*a14)"),
    ("t4", "-6*a5^2 + 24*a14 - 6*a14*(a4^2 + a3*a5) - 3*a5^2*(a4^2 - a3*a5) + 2*a9*(a5*a7 - 2*a4*a8 + a3*a9) - 12*a5*(a5*a12 - 2*a4*a13) + 24*(a12*a14 - a13^2)"),
    ("s1", "-4*a4 + a4*(a4^2 - a3*a5) + (a6*a9 - a7*a8) + 2*(a3*a13 - 2*a4*a12 + a5*a11)"),
    ("s2", "-96 + 2*(9*a3*a5 + 16*a4^2) - 72*a12 + 2*a4^2*(a3*a5 - a4^2) - a3*(a3*a14 - 2*a5*a12) + 2*(a3*a7*a9 - 2*a4*a7*a8 + a5*a6*a8) - a5*(a5*a10 - 2*a3*a12) - 2*a4*(3*a3*a13 - 5*a4*a12 + 3*a5*a11) + 4*(a10*a14 + 2*a11*a13 - 3*a12^2)"),
    ("s3", "12*a3*a5 - 48*a12 + 2*a12*(2*a4^2 + a3*a5) + a3*(a3*a14 - 4*a4*a13) + a5*(a5*a10 - 4*a4*a11) - 4*(a10*a14 - 4*a11*a13 + 3*a12^2)"),
];

pub(super) const CM4_EXTRA: &[(&str, &str)] = &[
    ("r6", "48*a7 - 3*a7*(4*a4^2 + a3*a5) + 4*a4*a5*a6 + 18*a3*a4*a8 - 7*a3^2*a9 + 12*(a9*a10 - 2*a8*a11 + a7*a12)"),
    ("t5", "12*a3*a4 - 48*a11 + 3*a3*a4*(a3*a5 - a4^2) + 2*(a5*a6*a7 - 2*a4*a6*a8 + a3*a6*a9) - 3*a4*(a3*a12 - 4*a4*a11 + 3*a5*a10) + 3*a3*(a5*a11 - a3*a13) + 12*(a10*a13 - a11*a12)"),
    ("t6", "48*a8 - 3*a8*(4*a4^2 + a3*a5) + 4*a3*a4*a9 + 18*a4*a5*a7 - 7*a5^2*a6 + 12*(a6*a14 - 2*a7*a13 + a8*a12)"),
];

/// Top weighted components, written as differences from the CM4 list.
pub(super) const COM4: &[(&str, &str, &str)] = &[
    ("r1", "r1", "- 8*a3"),
    ("r2", "r2", "- 48*a6"),
    ("r3", "r3", ""),
    ("r4", "r4", "+ 6*a3^2 - 24*a10"),
    ("r5", "r5", "- 12*a4*a5 + 48*a13"),
    ("r6", "r6", "- 48*a7"),
    ("t1", "t1", "- 8*a5"),
    ("t2", "t2", "- 48*a9"),
    ("t3", "t3", ""),
    ("t4", "t4", "+ 6*a5^2 - 24*a14"),
    ("t5", "t5", "- 12*a3*a4 + 48*a11"),
    ("t6", "t6", "- 48*a8"),
    ("s1", "s1", "+ 4*a4"),
    ("s2", "s2", "- 18*a3*a5 - 32*a4^2 + 72*a12 + 96"),
    ("s3", "s3", "- 12*a3*a5 + 48*a12"),
];

/// Generator brackets as printed; `(3,14)` carries the corrected entry.
pub(super) const TABLE: &[(usize, usize, &str)] = &[
    (1, 2, "4"),
    (3, 5, "4*a4"),
    (3, 9, "6*a8"),
    (3, 14, "8*a13"),
    (6, 9, "9*a12 - 9/4*a3*a5"),
    (6, 14, "6*a4*a8 + 3*a5*a7 - 2*a3*a9"),
    (10, 14, "-4/5*a4*(16 + 3/2*a3*a5 + a4^2) + 4/15*(18*a7*a8 - 13*a6*a9) + 12/5*(a5*a11 + 3*a4*a12 + a3*a13)"),
    (3, 4, "2*a3"),
    (3, 7, "2*a6"),
    (3, 8, "4*a7"),
    (3, 11, "2*a10"),
    (3, 12, "4*a11"),
    (3, 13, "6*a12 + 12"),
    (4, 6, "-3*a6"),
    (4, 7, "-a7"),
    (4, 10, "-4*a10"),
    (4, 11, "-2*a11"),
    (4, 12, "0"),
    (6, 7, "3*a10 - 3/4*a3^2"),
    (6, 8, "6*a11 - 3/2*a3*a4"),
    (6, 11, "7/4*a3*a6"),
    (6, 12, "2*a4*a6 + 3/2*a3*a7"),
    (6, 13, "3/4*a5*a6 + 9/2*a4*a7"),
    (7, 8, "3*a12 + 12 - a4^2 + 1/4*a3*a5"),
    (7, 10, "-7/3*a3*a6"),
    (7, 11, "-5/6*a4*a6 + 1/4*a3*a7"),
    (7, 12, "a3*a8 + 1/6*a5*a6"),
    (7, 13, "2/3*a3*a9 + a4*a8 + 5/4*a5*a7"),
    (7, 14, "4*a5*a8 + 2/3*a4*a9"),
    (10, 11, "-1/2*a3^3 + 1/3*a6^2 + 3*a3*a10"),
    (10, 12, "-a3^2*a4 + 2/3*a6*a7 + 4*a3*a11 + 2*a4*a10"),
    (10, 13, "10*a3 - 3/2*a3^2*a5 + a6*a8 + 6*a3*a12 + 3*a5*a10"),
    (11, 12, "9*a3 - 1/2*a3^2*a5 + 11/6*a6*a8 - 3/2*a7^2 + 2*a3*a12 + a5*a10"),
    (11, 13, "1/5*a4*(53 - 2*a4^2 - 3*a3*a5) + 6/5*(3*a4*a12 + a3*a13 + a5*a11) + 1/60*(9*a7*a8 + 31*a6*a9)"),
];

/// Entries whose printed form was corrected, with the printed text.
pub(super) const TABLE_CORRECTIONS: &[(usize, usize, &str)] = &[(3, 14, "8*a12")];
