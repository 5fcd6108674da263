use super::basis::*;
use super::products::*;
use crate::chains::Degree;
use crate::intlin::{hom_invariants, FinAbGroup, IntMatrix};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Generators that can be inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalGen {
    AAlpha,
    ALambda,
    U2Alpha,
}

impl LocalGen {
    pub fn class(self) -> NamedClass {
        match self {
            LocalGen::AAlpha => NamedClass::a_alpha(),
            LocalGen::ALambda => NamedClass::a_lambda(),
            LocalGen::U2Alpha => NamedClass::u_2alpha(),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            LocalGen::AAlpha => "aa",
            LocalGen::ALambda => "al",
            LocalGen::U2Alpha => "u2a",
        }
    }
}

impl std::str::FromStr for LocalGen {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "aa" | "a_alpha" | "aalpha" => Ok(LocalGen::AAlpha),
            "al" | "a_lambda" | "alambda" => Ok(LocalGen::ALambda),
            "u2a" | "u_2alpha" | "u2alpha" => Ok(LocalGen::U2Alpha),
            _ => Err(format!("unknown generator {s}")),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LocalizeError {
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error("multiplication by {gen:?} does not stabilize from {degree} within {steps} steps")]
    Unstable { gen: LocalGen, degree: Degree, steps: usize },
}

/// One degree of a localized ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalEntry {
    pub degree: Degree,
    pub group: FinAbGroup,
    /// Generator names written as `x / gen^n`.
    pub generators: Vec<String>,
    /// First step from which the maps are isomorphisms.
    pub stage: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizedTable {
    pub gen: LocalGen,
    pub entries: Vec<LocalEntry>,
}

const MAX_STEPS: usize = 48;
const STABLE_RUN: usize = 16;

/// Matrix of multiplication by `y` from `top_basis(d)` to `top_basis(d + deg y)`.
pub fn multiplication_matrix(d: Degree, y: &NamedClass) -> Result<IntMatrix, ProductError> {
    let src = top_basis(d);
    let tgt = top_basis(d + y.degree());
    let mut m = IntMatrix::zeros(tgt.len(), src.len());
    for (j, x) in src.iter().enumerate() {
        for (c, g) in multiply(x, y)?.terms {
            let i = tgt.iter().position(|t| *t == g).expect("product lies in target basis");
            m.set(i, j, BigInt::from(c));
        }
    }
    Ok(m)
}

/// The colimit of `pi_d -> pi_{d + g} -> pi_{d + 2g} -> ...` under multiplication by `g`.
pub fn localize_at(gen: LocalGen, d: Degree) -> Result<LocalEntry, LocalizeError> {
    let g = gen.class();
    // the last step that is not an isomorphism; chains of isomorphisms can be long but are
    // bounded by the exponents of the starting degree
    let mut last_bad: Option<usize> = None;
    for n in 0..MAX_STEPS {
        let dn = d + (n as i32) * g.degree();
        let m = multiplication_matrix(dn, &g)?;
        let inv = hom_invariants(&m, &top_group(dn), &top_group(dn + g.degree()));
        if !(inv.kernel.is_zero() && inv.cokernel.is_zero()) {
            last_bad = Some(n);
        }
    }
    let start = last_bad.map(|n| n + 1).unwrap_or(0);
    if start + STABLE_RUN > MAX_STEPS {
        return Err(LocalizeError::Unstable { gen, degree: d, steps: MAX_STEPS });
    }
    let ds = d + (start as i32) * g.degree();
    let generators = top_basis(ds)
        .iter()
        .map(|c| if start == 0 { c.name() } else { format!("{} / {}^{start}", c.name(), gen.symbol()) })
        .collect();
    Ok(LocalEntry { degree: d, group: top_group(ds), generators, stage: start })
}

pub fn localize(gen: LocalGen, degrees: &[Degree]) -> Result<LocalizedTable, LocalizeError> {
    let entries = degrees.iter().map(|&d| localize_at(gen, d)).collect::<Result<Vec<_>, _>>()?;
    Ok(LocalizedTable { gen, entries })
}

/// Exponent vectors `(p, q, r, s)` of monomials of degree `d` with or without a desuspension.
fn monomials(d: Degree, desusp: bool) -> Vec<(i32, i32, i32, i32)> {
    let e = desusp as i32;
    if (d.a + e).rem_euclid(2) != 0 {
        return vec![];
    }
    let half = (d.a + e) / 2;
    (-256..=256)
        .map(|r| {
            let s = half - r;
            (-d.b - 2 * r, -d.c - s, r, s)
        })
        .collect()
}

/// The localized rings as printed, read degree by degree: `a_a` gives
/// `Z/2[u_2a, a_a^±, a_l^±]`, `a_l` gives the ring of HZ with `a_l` inverted, `u_2a` gives the
/// Borel completion away from the free part.
pub fn localization_formula(gen: LocalGen, d: Degree) -> FinAbGroup {
    let mut g = FinAbGroup::zero();
    let mut add = |n: i64| g = g.direct_sum(&FinAbGroup::cyclic(n));
    match gen {
        LocalGen::AAlpha => {
            for (_, _, r, s) in monomials(d, false) {
                if r >= 0 && s == 0 {
                    add(2);
                }
            }
        }
        LocalGen::ALambda => {
            for (p, _, r, s) in monomials(d, false) {
                // Z/4[a_l^±, u_2a, u_l, a_a]/(2 a_l u_2a = a_2a u_l, 2 a_a)
                if p >= 0 && r >= 0 && s >= 0 && !(p >= 2 && s >= 1) {
                    add(if p == 0 { 4 } else { 2 });
                }
                // Z/4[a_l^±] <u_2a^-i u_l^j> <1, a_a> / 2a_a
                if (p == 0 || p == 1) && r <= -1 && s >= 1 {
                    add(if p == 0 { 4 } else { 2 });
                }
                // Z/2[a_l^±] <2 u_2a^-i>
                if p == 0 && r <= -1 && s == 0 {
                    add(2);
                }
            }
            // Z/2 <tr(e_3a)> [u_2a^-1, a_a^-1] [a_l^±]
            for (p, _, r, s) in monomials(d, true) {
                if p <= -1 && r <= -1 && s == 0 {
                    add(2);
                }
            }
        }
        LocalGen::U2Alpha => {
            for (p, q, _, s) in monomials(d, false) {
                // Z[u_2a^±, u_l, a_a, a_l]/(2a_a, 4a_l, a_2a u_l - 2 a_l u_2a)
                if p == 0 && q == 0 && s >= 0 {
                    add(0);
                }
                if p == 0 && q >= 1 && s >= 0 {
                    add(4);
                }
                if p >= 1 && q >= 0 && s == 0 {
                    add(2);
                }
                if p == 1 && q >= 0 && s >= 1 {
                    add(2);
                }
                // Z <2 u_l^-1> [u_2a^±], Z <4 u_l^-j> [u_2a^±]
                if p == 0 && q == 0 && s <= -1 {
                    add(0);
                }
                // Z/2 <a_a^i / a_l^j> [u_2a^±]
                if p >= 3 && q <= -1 && s == 0 {
                    add(2);
                }
            }
            for (p, q, _, s) in monomials(d, true) {
                if p == 0 && q <= -1 && s == -1 {
                    add(2);
                }
                if p == 1 && q <= -1 && s <= -1 {
                    add(2);
                }
                if p == 0 && q <= -1 && s <= -2 {
                    add(4);
                }
            }
        }
    }
    g.canonical()
}
