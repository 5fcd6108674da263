use crate::chains::Degree;
use crate::intlin::FinAbGroup;
use crate::mackey::{cyclic_mackey, MackeyC4, Subgroup};
use crate::intlin::IntMatrix;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Additive summands of the answer. The positive cone is split into its four
/// additive pieces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Summand {
    /// `Z[u_2a, u_l]`
    ConePoly,
    /// `Z/4[u_2a, u_l]<a_l^i>`
    ConeALambda,
    /// `Z/2[u_2a, a_l]<a_a^i>`
    ConeAAlpha,
    /// `Z/2[u_2a, a_l]<u_l^i><a_a>`
    ConeAAlphaULambda,
    TwoOverU2a,
    U2aInvULambda,
    TwoU2aOverULambda,
    FourOverULambda,
    FourU2aOverULambda,
    SigmaAAlphaOverALambdaULambda,
    SigmaOverALambdaULambda,
    SigmaOverALambdaULambdaOnce,
    SigmaU2aOverALambdaULambda,
    SigmaAAlphaOverALambdaU2a,
    SigmaOverALambdaU2a,
    AAlphaOverALambda,
    TrE3Alpha,
    AAlphaULambdaOverU2a,
    TwoOverU2aALambda,
    U2aInvULambdaALambda,
}

use Summand::*;

pub const ALL_SUMMANDS: [Summand; 20] = [
    ConePoly,
    ConeALambda,
    ConeAAlpha,
    ConeAAlphaULambda,
    TwoOverU2a,
    U2aInvULambda,
    TwoU2aOverULambda,
    FourOverULambda,
    FourU2aOverULambda,
    SigmaAAlphaOverALambdaULambda,
    SigmaOverALambdaULambda,
    SigmaOverALambdaULambdaOnce,
    SigmaU2aOverALambdaULambda,
    SigmaAAlphaOverALambdaU2a,
    SigmaOverALambdaU2a,
    AAlphaOverALambda,
    TrE3Alpha,
    AAlphaULambdaOverU2a,
    TwoOverU2aALambda,
    U2aInvULambdaALambda,
];

impl Summand {
    /// Index of the summand in the additive decomposition.
    pub fn line(self) -> u8 {
        match self {
            ConePoly | ConeALambda | ConeAAlpha | ConeAAlphaULambda => 1,
            TwoOverU2a => 2,
            U2aInvULambda => 3,
            TwoU2aOverULambda => 4,
            FourOverULambda => 5,
            FourU2aOverULambda => 6,
            SigmaAAlphaOverALambdaULambda => 7,
            SigmaOverALambdaULambda => 8,
            SigmaOverALambdaULambdaOnce => 9,
            SigmaU2aOverALambdaULambda => 10,
            SigmaAAlphaOverALambdaU2a => 11,
            SigmaOverALambdaU2a => 12,
            AAlphaOverALambda => 13,
            TrE3Alpha => 14,
            AAlphaULambdaOverU2a => 15,
            TwoOverU2aALambda => 16,
            U2aInvULambdaALambda => 17,
        }
    }

    pub fn theta(self) -> u8 {
        match self {
            TwoOverU2a | TwoU2aOverULambda | TwoOverU2aALambda => 2,
            FourOverULambda | FourU2aOverULambda => 4,
            _ => 1,
        }
    }

    pub fn desusp(self) -> bool {
        matches!(
            self,
            SigmaAAlphaOverALambdaULambda
                | SigmaOverALambdaULambda
                | SigmaOverALambdaULambdaOnce
                | SigmaU2aOverALambdaULambda
                | SigmaAAlphaOverALambdaU2a
                | SigmaOverALambdaU2a
                | TrE3Alpha
        )
    }

    /// Order of the cyclic summand, 0 for Z.
    pub fn order(self) -> u32 {
        match self {
            ConePoly | TwoOverU2a | U2aInvULambda | TwoU2aOverULambda | FourOverULambda
            | FourU2aOverULambda => 0,
            ConeALambda | SigmaOverALambdaULambda | SigmaOverALambdaULambdaOnce | U2aInvULambdaALambda => 4,
            _ => 2,
        }
    }

    /// Classes coming from the homotopy orbits through the Tate boundary.
    pub fn from_orbits(self) -> bool {
        self.desusp() && self != TrE3Alpha
    }

    /// Index-range predicate on `(exp_aa, exp_al, exp_u2a, exp_ul)`.
    pub fn contains(self, p: i32, q: i32, r: i32, s: i32) -> bool {
        match self {
            ConePoly => p == 0 && q == 0 && r >= 0 && s >= 0,
            ConeALambda => p == 0 && q >= 1 && r >= 0 && s >= 0,
            ConeAAlpha => p >= 1 && q >= 0 && r >= 0 && s == 0,
            ConeAAlphaULambda => p == 1 && q >= 0 && r >= 0 && s >= 1,
            TwoOverU2a => p == 0 && q == 0 && r <= -1 && s == 0,
            U2aInvULambda => p == 0 && q == 0 && r <= -1 && s >= 1,
            TwoU2aOverULambda => p == 0 && q == 0 && r >= 1 && s == -1,
            FourOverULambda => p == 0 && q == 0 && r <= 0 && s <= -1,
            FourU2aOverULambda => p == 0 && q == 0 && r >= 1 && s <= -2,
            SigmaAAlphaOverALambdaULambda => p == 1 && q <= -1 && s <= -1,
            SigmaOverALambdaULambda => p == 0 && q <= -1 && s <= -2,
            SigmaOverALambdaULambdaOnce => p == 0 && q <= -1 && s == -1 && r <= 0,
            SigmaU2aOverALambdaULambda => p == 0 && q <= -1 && s == -1 && r >= 1,
            SigmaAAlphaOverALambdaU2a => p == 1 && q <= -1 && s == 0 && r <= -1,
            SigmaOverALambdaU2a => p == 0 && q <= -1 && s == 0 && r <= -1,
            AAlphaOverALambda => p >= 3 && q <= -1 && r >= 0 && s == 0,
            TrE3Alpha => p <= -1 && r <= -1 && s == 0,
            AAlphaULambdaOverU2a => p == 1 && q >= 0 && r <= -1 && s >= 1,
            TwoOverU2aALambda => p == 0 && q >= 1 && r <= -1 && s == 0,
            U2aInvULambdaALambda => p == 0 && q >= 1 && r <= -1 && s >= 1,
        }
    }
}

/// A named additive generator of the top level.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NamedClass {
    pub theta: u8,
    pub desusp: bool,
    pub exp_aa: i32,
    pub exp_al: i32,
    pub exp_u2a: i32,
    pub exp_ul: i32,
    pub summand: Summand,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ClassError {
    #[error("exponents {0:?} do not lie in summand {1:?}")]
    NotInSummand((u8, bool, i32, i32, i32, i32), Summand),
}

/// Degree of a formal monomial.
pub fn monomial_degree(p: i32, q: i32, r: i32, s: i32, desusp: bool) -> Degree {
    Degree::new(2 * r + 2 * s - desusp as i32, -p - 2 * r, -q - s)
}

impl NamedClass {
    pub fn new(summand: Summand, p: i32, q: i32, r: i32, s: i32) -> Result<NamedClass, ClassError> {
        if !summand.contains(p, q, r, s) {
            return Err(ClassError::NotInSummand((summand.theta(), summand.desusp(), p, q, r, s), summand));
        }
        Ok(NamedClass {
            theta: summand.theta(),
            desusp: summand.desusp(),
            exp_aa: p,
            exp_al: q,
            exp_u2a: r,
            exp_ul: s,
            summand,
        })
    }

    /// The class with these tags and exponents, if some summand contains it.
    pub fn lookup(theta: u8, desusp: bool, p: i32, q: i32, r: i32, s: i32) -> Option<NamedClass> {
        ALL_SUMMANDS
            .iter()
            .find(|f| f.theta() == theta && f.desusp() == desusp && f.contains(p, q, r, s))
            .map(|&f| NamedClass::new(f, p, q, r, s).expect("contained"))
    }

    pub fn validate(&self) -> Result<(), ClassError> {
        let f = self.summand;
        if f.theta() != self.theta || f.desusp() != self.desusp || !f.contains(self.exp_aa, self.exp_al, self.exp_u2a, self.exp_ul) {
            return Err(ClassError::NotInSummand(
                (self.theta, self.desusp, self.exp_aa, self.exp_al, self.exp_u2a, self.exp_ul),
                f,
            ));
        }
        Ok(())
    }

    pub fn degree(&self) -> Degree {
        monomial_degree(self.exp_aa, self.exp_al, self.exp_u2a, self.exp_ul, self.desusp)
    }

    pub fn one() -> NamedClass {
        NamedClass::new(ConePoly, 0, 0, 0, 0).unwrap()
    }

    pub fn a_alpha() -> NamedClass {
        NamedClass::new(ConeAAlpha, 1, 0, 0, 0).unwrap()
    }

    pub fn a_lambda() -> NamedClass {
        NamedClass::new(ConeALambda, 0, 1, 0, 0).unwrap()
    }

    pub fn u_2alpha() -> NamedClass {
        NamedClass::new(ConePoly, 0, 0, 1, 0).unwrap()
    }

    pub fn u_lambda() -> NamedClass {
        NamedClass::new(ConePoly, 0, 0, 0, 1).unwrap()
    }

    /// `tr(e_3a) u_2a^{-x} a_a^{-y} a_l^z`.
    pub fn tr_e3alpha(x: i32, y: i32, z: i32) -> NamedClass {
        NamedClass::new(TrE3Alpha, -1 - y, z, -1 - x, 0).unwrap()
    }

    pub fn order(&self) -> u32 {
        self.summand.order()
    }

    /// Plain-text name, e.g. `2u2a^-1`, `S^-1 aa/(al ul^2)`, `tr(e3a) u2a^-1`.
    pub fn name(&self) -> String {
        if self.summand == TrE3Alpha {
            let (x, y, z) = (-1 - self.exp_u2a, -1 - self.exp_aa, self.exp_al);
            let mut s = "tr(e3a)".to_string();
            for (e, sym) in [(-x, "u2a"), (-y, "aa"), (z, "al")] {
                if e != 0 {
                    s.push_str(&format!(" {sym}{}", pow_text(e)));
                }
            }
            return s;
        }
        let mut s = String::new();
        if self.desusp {
            s.push_str("S^-1 ");
        }
        if self.theta != 1 {
            s.push_str(&self.theta.to_string());
        }
        let mut parts = vec![];
        for (e, sym) in [(self.exp_aa, "aa"), (self.exp_al, "al"), (self.exp_u2a, "u2a"), (self.exp_ul, "ul")] {
            if e != 0 {
                parts.push(format!("{sym}{}", pow_text(e)));
            }
        }
        if parts.is_empty() {
            s.push('1');
        } else {
            s.push_str(&parts.join(" "));
        }
        s
    }
}

fn pow_text(e: i32) -> String {
    if e == 1 {
        String::new()
    } else {
        format!("^{e}")
    }
}

impl fmt::Display for NamedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Top-level generators in degree `d`: one per cyclic summand, two in the exotic degrees
/// (torsion generator first).
pub fn top_basis(d: Degree) -> Vec<NamedClass> {
    let mut out = vec![];
    for f in ALL_SUMMANDS {
        let e = f.desusp() as i32;
        if (d.a + e).rem_euclid(2) != 0 {
            continue;
        }
        // a = 2r + 2s - e, b = -p - 2r, c = -q - s
        let half = (d.a + e) / 2;
        for r in -256..=256 {
            let p = -d.b - 2 * r;
            let s = half - r;
            let q = -d.c - s;
            if f.contains(p, q, r, s) {
                out.push(NamedClass::new(f, p, q, r, s).unwrap());
            }
        }
    }
    out.sort_by_key(|c| c.order() == 0);
    out
}

/// Whether `d` is one of the exotic degrees `4 (u_2a/u_l)^k u_2a^i`, `k >= 2`, `i >= 0`.
pub fn is_exotic(d: Degree) -> bool {
    let b = top_basis(d);
    b.len() == 2
}

pub fn top_group(d: Degree) -> FinAbGroup {
    let mut g = FinAbGroup::zero();
    for c in top_basis(d) {
        g = g.direct_sum(&FinAbGroup::cyclic(c.order() as i64));
    }
    g
}

/// The shape of the middle level in degree `d`, read off from the C2 answer in grading
/// `(a + b) + c (2 sigma)` with `e_alpha`-periodicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MidKind {
    /// `Z<u_2s^i>`, `i >= 0`
    Poly { i: i32 },
    /// `Z/2<u_2s^i a_2s^j>`, `j >= 1`
    Euler { i: i32, j: i32 },
    /// `Z<2 u_2s^-i>`, `i >= 1`
    TwoInv { i: i32 },
    /// `Z/2<S^-1 u_2s^-i a_2s^-j>`, `i, j >= 1`
    Sigma { i: i32, j: i32 },
    Zero,
}

impl MidKind {
    pub fn of(d: Degree) -> MidKind {
        let m = d.a + d.b;
        let n = d.c;
        if m >= 0 && m % 2 == 0 {
            let i = m / 2;
            if n == -i {
                return MidKind::Poly { i };
            }
            if n < -i {
                return MidKind::Euler { i, j: -n - i };
            }
        } else if m < 0 && m % 2 == 0 {
            let i = -m / 2;
            if n == i {
                return MidKind::TwoInv { i };
            }
        } else if m <= -3 {
            let i = (-1 - m) / 2;
            let j = n - i;
            if j >= 1 {
                return MidKind::Sigma { i, j };
            }
        }
        MidKind::Zero
    }

    pub fn group(self) -> FinAbGroup {
        match self {
            MidKind::Poly { .. } | MidKind::TwoInv { .. } => FinAbGroup::z(),
            MidKind::Euler { .. } | MidKind::Sigma { .. } => FinAbGroup::cyclic(2),
            MidKind::Zero => FinAbGroup::zero(),
        }
    }

    /// `(res21, tr21)` to the free bottom level.
    pub fn bottom_maps(self) -> (i64, i64) {
        match self {
            MidKind::Poly { .. } => (1, 2),
            MidKind::TwoInv { .. } => (2, 1),
            _ => (0, 0),
        }
    }
}

/// A generator of the middle or bottom level.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LevelClass {
    pub level: Subgroup,
    /// Torsion-free prefix, 2 for `2u_2s^-i`.
    pub theta: u8,
    pub desusp: bool,
    pub exp_u2s: i32,
    pub exp_a2s: i32,
    /// Power of `e_alpha` (negative powers are powers of `u_alpha`).
    pub exp_ea: i32,
}

impl LevelClass {
    pub fn degree(&self) -> Degree {
        // u_2s: (2,0,-1), a_2s: (0,0,-1), e_a: (-1,1,0), S^-1: (-1,0,0)
        Degree::new(
            2 * self.exp_u2s - self.exp_ea - self.desusp as i32,
            self.exp_ea,
            -self.exp_u2s - self.exp_a2s,
        )
    }

    /// Generator of the level in degree `d`, if nonzero.
    pub fn generator(d: Degree, level: Subgroup) -> Option<LevelClass> {
        match level {
            Subgroup::C4 => None,
            Subgroup::C2 => {
                let k = d.b;
                let (theta, desusp, u, a) = match MidKind::of(d) {
                    MidKind::Poly { i } => (1, false, i, 0),
                    MidKind::Euler { i, j } => (1, false, i, j),
                    MidKind::TwoInv { i } => (2, false, -i, 0),
                    MidKind::Sigma { i, j } => (1, true, -i, -j),
                    MidKind::Zero => return None,
                };
                Some(LevelClass { level, theta, desusp, exp_u2s: u, exp_a2s: a, exp_ea: k })
            }
            Subgroup::E => {
                if d.underlying() != 0 {
                    return None;
                }
                Some(LevelClass { level, theta: 1, desusp: false, exp_u2s: -d.c, exp_a2s: 0, exp_ea: d.b })
            }
        }
    }

    pub fn name(&self) -> String {
        let bar = if self.level == Subgroup::E { "'" } else { "" };
        let mut s = String::new();
        if self.desusp {
            s.push_str("S^-1 ");
        }
        if self.theta != 1 {
            s.push_str(&self.theta.to_string());
        }
        let mut parts = vec![];
        for (e, sym) in [(self.exp_u2s, "u2s"), (self.exp_a2s, "a2s"), (self.exp_ea, "ea")] {
            if e != 0 {
                parts.push(format!("{sym}{bar}{}", pow_text(e)));
            }
        }
        if parts.is_empty() {
            s.push('1');
        } else {
            s.push_str(&parts.join(" "));
        }
        s
    }
}

/// Group and named generators at one level.
pub fn basis_at(d: Degree, level: Subgroup) -> (FinAbGroup, Vec<String>) {
    match level {
        Subgroup::C4 => (top_group(d), top_basis(d).iter().map(|c| c.name()).collect()),
        _ => match LevelClass::generator(d, level) {
            Some(c) => {
                let g = if level == Subgroup::E { FinAbGroup::z() } else { MidKind::of(d).group() };
                (g, vec![c.name()])
            }
            None => (FinAbGroup::zero(), vec![]),
        },
    }
}

/// `(res42, tr42)` scalars of a top generator against the middle generator.
pub fn top_maps(c: &NamedClass) -> (i64, i64) {
    let (p, q) = (c.exp_aa, c.exp_al);
    match c.summand {
        ConePoly | ConeALambda | U2aInvULambda | TwoU2aOverULambda | U2aInvULambdaALambda
        | SigmaOverALambdaULambda | SigmaOverALambdaULambdaOnce => (1, 2),
        TwoOverU2a | FourOverULambda | FourU2aOverULambda => (2, 1),
        SigmaAAlphaOverALambdaULambda | SigmaAAlphaOverALambdaU2a => {
            if q == -1 {
                (0, 1)
            } else {
                (0, 0)
            }
        }
        SigmaU2aOverALambdaULambda => (1, 0),
        AAlphaOverALambda => {
            if p == 3 && q <= -2 {
                (1, 0)
            } else {
                (0, 0)
            }
        }
        TrE3Alpha => {
            if p == -1 && q >= 0 {
                (0, 1)
            } else {
                (0, 0)
            }
        }
        TwoOverU2aALambda => (0, 1),
        ConeAAlpha | ConeAAlphaULambda | SigmaOverALambdaU2a | AAlphaULambdaOverU2a => (0, 0),
    }
}

fn sign_of(k: i32) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The Mackey functor in degree `d` assembled from the listed functors.
pub fn mackey_at(d: Degree) -> MackeyC4 {
    let basis = top_basis(d);
    let mid_kind = MidKind::of(d);
    let mid = mid_kind.group();
    let bot = if d.underlying() == 0 { FinAbGroup::z() } else { FinAbGroup::zero() };
    let (res21, tr21) = mid_kind.bottom_maps();
    let w = sign_of(d.b);
    if basis.len() == 2 {
        // torsion (a_2a/a_l)^k u_2a^i first, then 4(u_2a/u_l)^k u_2a^i
        let top = top_group(d);
        let mut m = cyclic_mackey(FinAbGroup::zero(), mid.clone(), bot.clone(), 0, 0, res21, tr21, w, w);
        m.top = top;
        m.res42 = IntMatrix::from_rows(&[vec![0, 2]]);
        m.tr42 = IntMatrix::from_rows(&[vec![0], vec![1]]);
        return m;
    }
    let (top, res42, tr42) = match basis.first() {
        Some(c) => {
            let (r, t) = if mid.is_zero() { (0, 0) } else { top_maps(c) };
            (FinAbGroup::cyclic(c.order() as i64), r, t)
        }
        None => (FinAbGroup::zero(), 0, 0),
    };
    cyclic_mackey(top, mid, bot, res42, tr42, res21, tr21, w, w)
}

/// `res42` of a top generator as a multiple of the middle generator.
pub fn res42_scalar(c: &NamedClass) -> i64 {
    if MidKind::of(c.degree()) == MidKind::Zero {
        0
    } else if is_exotic(c.degree()) {
        if c.order() == 0 {
            2
        } else {
            0
        }
    } else {
        top_maps(c).0
    }
}

/// `tr42` of the middle generator in degree `d`, as coefficients on `top_basis(d)`.
pub fn tr42_of_mid(d: Degree) -> Vec<(i64, NamedClass)> {
    let basis = top_basis(d);
    if MidKind::of(d) == MidKind::Zero {
        return vec![];
    }
    if basis.len() == 2 {
        return vec![(1, basis[1].clone())];
    }
    match basis.first() {
        Some(c) if top_maps(c).1 != 0 => vec![(top_maps(c).1, c.clone())],
        _ => vec![],
    }
}
