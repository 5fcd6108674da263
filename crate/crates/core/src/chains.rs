//! Cellular chains of C4 representation spheres as permutation chain complexes.

use crate::intlin::IntMatrix;
use crate::mackey::{GSet, MackeyChainComplex, Subgroup};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// The grading `a + b*alpha + c*lambda` of RO(C4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Degree {
    pub a: i32,
    pub b: i32,
    pub c: i32,
}

impl Degree {
    pub const ZERO: Degree = Degree { a: 0, b: 0, c: 0 };
    pub const ONE: Degree = Degree { a: 1, b: 0, c: 0 };
    pub const ALPHA: Degree = Degree { a: 0, b: 1, c: 0 };
    pub const LAMBDA: Degree = Degree { a: 0, b: 0, c: 1 };

    pub const fn new(a: i32, b: i32, c: i32) -> Self {
        Degree { a, b, c }
    }

    /// Dimension of the underlying nonequivariant sphere.
    pub fn underlying(self) -> i32 {
        self.a + self.b + 2 * self.c
    }

    /// Dimension of the C2-fixed points (alpha restricts trivially to C2).
    pub fn c2_fixed(self) -> i32 {
        self.a + self.b
    }

    /// All degrees with `|a| <= wa`, `|b| <= wb`, `|c| <= wc`.
    pub fn window(wa: i32, wb: i32, wc: i32) -> Vec<Degree> {
        let mut out = vec![];
        for a in -wa..=wa {
            for b in -wb..=wb {
                for c in -wc..=wc {
                    out.push(Degree::new(a, b, c));
                }
            }
        }
        out
    }

    /// The default verification window, 2057 degrees.
    pub fn default_window() -> Vec<Degree> {
        Degree::window(8, 5, 5)
    }

    pub fn latex(self) -> String {
        let mut parts: Vec<String> = vec![];
        let mut push = |k: i32, sym: &str| {
            if k == 0 {
                return;
            }
            let mag = k.unsigned_abs();
            let body = if sym.is_empty() {
                mag.to_string()
            } else if mag == 1 {
                sym.to_string()
            } else {
                format!("{mag}{sym}")
            };
            if parts.is_empty() {
                parts.push(if k < 0 { format!("-{body}") } else { body });
            } else {
                parts.push(if k < 0 { format!("- {body}") } else { format!("+ {body}") });
            }
        };
        push(self.a, "");
        push(self.b, "\\alpha");
        push(self.c, "\\lambda");
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("expected three comma-separated integers a,b,c, got {0:?}")]
pub struct DegreeParseError(pub String);

impl FromStr for Degree {
    type Err = DegreeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = t.split(',').map(|x| x.trim()).collect();
        if parts.len() != 3 {
            return Err(DegreeParseError(s.to_string()));
        }
        let mut v = [0i32; 3];
        for (i, p) in parts.iter().enumerate() {
            v[i] = p.parse().map_err(|_| DegreeParseError(s.to_string()))?;
        }
        Ok(Degree::new(v[0], v[1], v[2]))
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, o: Degree) -> Degree {
        Degree::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Sub for Degree {
    type Output = Degree;
    fn sub(self, o: Degree) -> Degree {
        Degree::new(self.a - o.a, self.b - o.b, self.c - o.c)
    }
}

impl Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree::new(-self.a, -self.b, -self.c)
    }
}

impl Mul<Degree> for i32 {
    type Output = Degree;
    fn mul(self, d: Degree) -> Degree {
        Degree::new(self * d.a, self * d.b, self * d.c)
    }
}

/// A representation sphere (or a smash of several) with its chain model.
#[derive(Clone, Debug)]
pub struct SphereComplex {
    pub degree: Degree,
    pub complex: MackeyChainComplex,
    /// Orientation and sign choices made while building the model.
    pub conventions: Vec<String>,
}

// Multiplication by a group-ring element sum c_t gamma^t on Z[s].
fn ring_element(s: &GSet, coeffs: &[i64]) -> IntMatrix {
    let n = s.len();
    let mut m = IntMatrix::zeros(n, n);
    for x in 0..n {
        for (t, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                m.add_at(s.act_pow(x, t), x, &BigInt::from(c));
            }
        }
    }
    m
}

fn augmentation(s: &GSet) -> IntMatrix {
    let mut m = IntMatrix::zeros(1, s.len());
    for x in 0..s.len() {
        m.set(0, x, BigInt::from(1));
    }
    m
}

// Reduced cone on the periodic cell structure of the unit sphere S(nV): one fixed 0-cell,
// then one orbit of type `orbit` in each dimension 1..=top. Differentials alternate between
// `odd` and `even` after the augmentation.
fn periodic_sphere(orbit: Subgroup, top: usize, odd: &[i64], even: &[i64]) -> MackeyChainComplex {
    let pt = GSet::orbit(Subgroup::C4);
    let cell = GSet::orbit(orbit);
    let mut terms = vec![pt.clone()];
    let mut diffs = vec![IntMatrix::zeros(0, 1)];
    for k in 1..=top {
        terms.push(cell.clone());
        if k == 1 {
            diffs.push(augmentation(&cell));
        } else if k % 2 == 0 {
            diffs.push(ring_element(&cell, odd));
        } else {
            diffs.push(ring_element(&cell, even));
        }
    }
    MackeyChainComplex::new(0, terms, diffs)
}

/// `S^{n alpha}` for any integer `n`, negative powers through [`dual`].
pub fn sphere_alpha_power(n: i32) -> SphereComplex {
    if n < 0 {
        return dual(&sphere_alpha_power(-n));
    }
    let c = periodic_sphere(Subgroup::C2, n as usize, &[1, -1], &[1, 1]);
    SphereComplex {
        degree: n * Degree::ALPHA,
        complex: c,
        conventions: vec![format!(
            "S^{{{n}alpha}}: fixed 0-cell, C4/C2-cells in dims 1..{n}, d1 = augmentation, then 1-g, 1+g alternating"
        )],
    }
}

/// `S^{m lambda}` for any integer `m`.
pub fn sphere_lambda_power(m: i32) -> SphereComplex {
    if m < 0 {
        return dual(&sphere_lambda_power(-m));
    }
    let c = periodic_sphere(Subgroup::E, 2 * m as usize, &[1, -1], &[1, 1, 1, 1]);
    SphereComplex {
        degree: m * Degree::LAMBDA,
        complex: c,
        conventions: vec![format!(
            "S^{{{m}lambda}}: fixed 0-cell, free cells in dims 1..{}, d1 = augmentation, then 1-g, N alternating",
            2 * m
        )],
    }
}

pub fn sphere_alpha() -> SphereComplex {
    sphere_alpha_power(1)
}

pub fn sphere_lambda() -> SphereComplex {
    sphere_lambda_power(1)
}

/// The suspension `S^n` of the trivial sphere, a single fixed cell in degree `n`.
pub fn sphere_trivial(n: i32) -> SphereComplex {
    SphereComplex {
        degree: n * Degree::ONE,
        complex: MackeyChainComplex::new(n, vec![GSet::orbit(Subgroup::C4)], vec![IntMatrix::zeros(0, 1)]),
        conventions: vec![],
    }
}

/// Spanier-Whitehead dual: degrees negated, differentials transposed.
pub fn dual(s: &SphereComplex) -> SphereComplex {
    let c = &s.complex;
    let min = -c.max_deg();
    let max = -c.min_deg;
    let mut terms = vec![];
    let mut diffs = vec![];
    for n in min..=max {
        terms.push(c.term(-n));
        if n == min {
            diffs.push(IntMatrix::zeros(0, c.term(-n).len()));
        } else {
            diffs.push(c.diff(1 - n).transpose());
        }
    }
    let mut conventions = s.conventions.clone();
    conventions.push("dual: C_n = C_{-n}^*, d_n = (d_{1-n})^T with no sign".into());
    SphereComplex { degree: -s.degree, complex: MackeyChainComplex::new(min, terms, diffs), conventions }
}

/// Offsets of the `(i, j)` blocks inside each degree of a tensor product.
fn box_layout(
    a: &MackeyChainComplex,
    b: &MackeyChainComplex,
) -> BTreeMap<i32, Vec<(i32, i32, usize)>> {
    let mut layout = BTreeMap::new();
    for n in a.min_deg + b.min_deg..=a.max_deg() + b.max_deg() {
        let mut blocks = vec![];
        let mut off = 0;
        for i in a.min_deg..=a.max_deg() {
            let j = n - i;
            if j < b.min_deg || j > b.max_deg() {
                continue;
            }
            blocks.push((i, j, off));
            off += a.term(i).len() * b.term(j).len();
        }
        layout.insert(n, blocks);
    }
    layout
}

/// Tensor product with the Koszul sign `d(x*y) = dx*y + (-1)^|x| x*dy`.
pub fn box_complex(a: &MackeyChainComplex, b: &MackeyChainComplex) -> MackeyChainComplex {
    let layout = box_layout(a, b);
    let min = a.min_deg + b.min_deg;
    let max = a.max_deg() + b.max_deg();
    let mut terms = vec![];
    for n in min..=max {
        let mut t = GSet::empty();
        for &(i, j, _) in &layout[&n] {
            t = t.disjoint_union(&a.term(i).product(&b.term(j)));
        }
        terms.push(t);
    }
    let mut diffs = vec![IntMatrix::zeros(0, terms[0].len())];
    for n in min + 1..=max {
        let src = &terms[(n - min) as usize];
        let tgt = &terms[(n - 1 - min) as usize];
        let mut d = IntMatrix::zeros(tgt.len(), src.len());
        let tgt_off: BTreeMap<(i32, i32), usize> =
            layout[&(n - 1)].iter().map(|&(i, j, o)| ((i, j), o)).collect();
        for &(i, j, off) in &layout[&n] {
            let (ai, bj) = (a.term(i), b.term(j));
            let nb = bj.len();
            if let Some(&toff) = tgt_off.get(&(i - 1, j)) {
                let da = a.diff(i);
                for x in 0..ai.len() {
                    for x2 in 0..da.rows() {
                        let v = da.get(x2, x);
                        if v.is_zero() {
                            continue;
                        }
                        for y in 0..nb {
                            d.add_at(toff + x2 * nb + y, off + x * nb + y, v);
                        }
                    }
                }
            }
            if let Some(&toff) = tgt_off.get(&(i, j - 1)) {
                let db = b.diff(j);
                let nb2 = b.term(j - 1).len();
                let sign = if i.rem_euclid(2) == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                for x in 0..ai.len() {
                    for y in 0..nb {
                        for y2 in 0..nb2 {
                            let v = db.get(y2, y);
                            if !v.is_zero() {
                                d.add_at(toff + x * nb2 + y2, off + x * nb + y, &(v * &sign));
                            }
                        }
                    }
                }
            }
        }
        diffs.push(d);
    }
    MackeyChainComplex::new(min, terms, diffs)
}

pub fn box_spheres(a: &SphereComplex, b: &SphereComplex) -> SphereComplex {
    let mut conventions = a.conventions.clone();
    conventions.extend(b.conventions.iter().cloned());
    SphereComplex { degree: a.degree + b.degree, complex: box_complex(&a.complex, &b.complex), conventions }
}

/// Shift all chain degrees by `k`.
pub fn shift(s: &SphereComplex, k: i32) -> SphereComplex {
    let mut c = s.complex.clone();
    c.min_deg += k;
    SphereComplex { degree: s.degree + k * Degree::ONE, complex: c, conventions: s.conventions.clone() }
}

/// Chain model of `S^d`, built as the smash of `S^{b alpha}` and `S^{c lambda}` shifted by `a`.
pub fn assemble(d: Degree) -> SphereComplex {
    let s = box_spheres(&sphere_alpha_power(d.b), &sphere_lambda_power(d.c));
    shift(&s, d.a)
}

/// Same sphere built from single copies of `S^alpha`, `S^lambda` and their duals.
pub fn assemble_from_factors(d: Degree) -> SphereComplex {
    let mut s = sphere_trivial(0);
    let unit_a = if d.b >= 0 { sphere_alpha() } else { dual(&sphere_alpha()) };
    for _ in 0..d.b.abs() {
        s = box_spheres(&s, &unit_a);
    }
    let unit_l = if d.c >= 0 { sphere_lambda() } else { dual(&sphere_lambda()) };
    for _ in 0..d.c.abs() {
        s = box_spheres(&s, &unit_l);
    }
    shift(&s, d.a)
}

/// A degree-preserving chain map, one matrix per chain degree.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub components: BTreeMap<i32, IntMatrix>,
}

impl ChainMap {
    pub fn component(&self, n: i32, src: &MackeyChainComplex, tgt: &MackeyChainComplex) -> IntMatrix {
        self.components
            .get(&n)
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(tgt.term(n).len(), src.term(n).len()))
    }

    pub fn is_chain_map(&self, src: &MackeyChainComplex, tgt: &MackeyChainComplex) -> bool {
        let lo = src.min_deg.min(tgt.min_deg);
        let hi = src.max_deg().max(tgt.max_deg()) + 1;
        (lo..=hi).all(|n| {
            let f = self.component(n, src, tgt);
            let g = self.component(n - 1, src, tgt);
            tgt.diff(n).dot(&f) == g.dot(&src.diff(n))
        })
    }
}

/// `C -> C (x) S^gen` induced by the inclusion of the fixed 0-cell of `S^gen`.
pub fn euler_chain_map(gen: &SphereComplex, c: &MackeyChainComplex) -> (MackeyChainComplex, ChainMap) {
    let g = &gen.complex;
    assert!(g.min_deg <= 0 && g.max_deg() >= 0, "sphere has no 0-cell");
    let tgt = box_complex(c, g);
    let layout = box_layout(c, g);
    let ng = g.term(0).len();
    let mut comps = BTreeMap::new();
    for n in c.min_deg..=c.max_deg() {
        let blocks = &layout[&n];
        let Some(&(_, _, off)) = blocks.iter().find(|&&(i, j, _)| i == n && j == 0) else {
            continue;
        };
        let src_len = c.term(n).len();
        let mut m = IntMatrix::zeros(tgt.term(n).len(), src_len);
        for x in 0..src_len {
            m.set(off + x * ng, x, BigInt::from(1));
        }
        comps.insert(n, m);
    }
    (tgt, ChainMap { components: comps })
}

/// The skeletal inclusion `S^{n V} -> S^{(n+1) V}` (or its dual for negative `n`) realizing
/// multiplication by the Euler class; both models share the cells of the smaller one.
pub fn skeletal_map(src: &MackeyChainComplex, tgt: &MackeyChainComplex) -> ChainMap {
    let mut comps = BTreeMap::new();
    for n in src.min_deg..=src.max_deg() {
        if n < tgt.min_deg || n > tgt.max_deg() {
            continue;
        }
        let (s, t) = (src.term(n), tgt.term(n));
        assert_eq!(s.len(), t.len(), "cells differ in degree {n}");
        comps.insert(n, IntMatrix::identity(s.len()));
    }
    ChainMap { components: comps }
}

/// Tensor product of chain maps `f (x) g` on boxes, no signs since both have degree zero.
pub fn box_map(
    f: &ChainMap,
    fa: (&MackeyChainComplex, &MackeyChainComplex),
    g: &ChainMap,
    gb: (&MackeyChainComplex, &MackeyChainComplex),
) -> ChainMap {
    let src_layout = box_layout(fa.0, gb.0);
    let tgt_layout = box_layout(fa.1, gb.1);
    let src = box_complex(fa.0, gb.0);
    let tgt = box_complex(fa.1, gb.1);
    let mut comps = BTreeMap::new();
    for (&n, blocks) in &src_layout {
        let Some(tblocks) = tgt_layout.get(&n) else { continue };
        let mut m = IntMatrix::zeros(tgt.term(n).len(), src.term(n).len());
        for &(i, j, off) in blocks {
            let Some(&(_, _, toff)) = tblocks.iter().find(|&&(ti, tj, _)| ti == i && tj == j) else {
                continue;
            };
            let fi = f.component(i, fa.0, fa.1);
            let gj = g.component(j, gb.0, gb.1);
            let (sb, tb) = (gb.0.term(j).len(), gb.1.term(j).len());
            for x2 in 0..fi.rows() {
                for x in 0..fi.cols() {
                    let u = fi.get(x2, x);
                    if u.is_zero() {
                        continue;
                    }
                    for y2 in 0..gj.rows() {
                        for y in 0..gj.cols() {
                            let v = gj.get(y2, y);
                            if !v.is_zero() {
                                m.add_at(toff + x2 * tb + y2, off + x * sb + y, &(u * v));
                            }
                        }
                    }
                }
            }
        }
        comps.insert(n, m);
    }
    ChainMap { components: comps }
}

/// Identity chain map of a complex.
pub fn identity_map(c: &MackeyChainComplex) -> ChainMap {
    let mut comps = BTreeMap::new();
    for n in c.min_deg..=c.max_deg() {
        comps.insert(n, IntMatrix::identity(c.term(n).len()));
    }
    ChainMap { components: comps }
}
