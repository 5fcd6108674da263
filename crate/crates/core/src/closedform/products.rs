use super::basis::*;
use crate::chains::Degree;
use crate::mackey::Subgroup;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A formal sum of top-level generators in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sum {
    pub degree: Degree,
    pub terms: Vec<(i64, NamedClass)>,
}

fn reduce_coeff(c: i64, order: u32) -> i64 {
    if order == 0 {
        c
    } else {
        c.rem_euclid(order as i64)
    }
}

impl Sum {
    pub fn zero(degree: Degree) -> Sum {
        Sum { degree, terms: vec![] }
    }

    pub fn single(c: i64, x: NamedClass) -> Sum {
        Sum::zero(x.degree()).plus(c, x)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c x`, reducing modulo the order of `x` and dropping zero terms.
    pub fn plus(mut self, c: i64, x: NamedClass) -> Sum {
        debug_assert_eq!(x.degree(), self.degree);
        match self.terms.iter().position(|(_, y)| *y == x) {
            Some(i) => {
                let v = reduce_coeff(self.terms[i].0 + c, x.order());
                if v == 0 {
                    self.terms.remove(i);
                } else {
                    self.terms[i].0 = v;
                }
            }
            None => {
                let v = reduce_coeff(c, x.order());
                if v != 0 {
                    self.terms.push((v, x));
                    self.terms.sort_by(|a, b| a.1.cmp(&b.1));
                }
            }
        }
        self
    }

    pub fn add_sum(mut self, other: &Sum) -> Sum {
        for (c, x) in &other.terms {
            self = self.plus(*c, x.clone());
        }
        self
    }

    pub fn scale(&self, k: i64) -> Sum {
        let mut out = Sum::zero(self.degree);
        for (c, x) in &self.terms {
            out = out.plus(c * k, x.clone());
        }
        out
    }
}

impl fmt::Display for Sum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, x)| if *c == 1 { x.name() } else { format!("{c}*({})", x.name()) })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ProductError {
    #[error(transparent)]
    Invalid(#[from] ClassError),
    #[error("product {0} * {1} is unspecified by the closed form")]
    Unspecified(String, String),
    #[error("detector images disagree for {0} * {1}")]
    Inconsistent(String, String),
}

/// Which rule produced a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    ZeroTarget,
    OrbitOrbit,
    OrbitModule,
    TrList,
    Detectors,
    Frobenius,
}

/// A coefficient times `a_a^p a_l^q u_2a^r u_l^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Mono {
    c: i64,
    p: i32,
    q: i32,
    r: i32,
    s: i32,
}

impl Mono {
    fn of(c: &NamedClass) -> Mono {
        Mono { c: c.theta as i64, p: c.exp_aa, q: c.exp_al, r: c.exp_u2a, s: c.exp_ul }
    }

    fn times(self, o: Mono) -> Mono {
        Mono { c: self.c * o.c, p: self.p + o.p, q: self.q + o.q, r: self.r + o.r, s: self.s + o.s }
    }

    fn gold(self) -> Mono {
        Mono { c: 2 * self.c, p: self.p - 2, q: self.q + 1, r: self.r + 1, s: self.s - 1 }
    }

    fn same_monomial(&self, o: &Mono) -> bool {
        (self.p, self.q, self.r, self.s) == (o.p, o.q, o.r, o.s)
    }
}

/// Normal form in the Borel ring `Z[u_2a^±, u_l^±, a_l, a_a]/(2a_a, 4a_l, a_a^2 u_l = 2 a_l u_2a)`.
fn borel_normal(mut m: Mono) -> Option<Mono> {
    if m.q < 0 {
        return None;
    }
    while m.p >= 2 {
        m = m.gold();
    }
    m.c = if m.p == 1 {
        m.c.rem_euclid(2)
    } else if m.q >= 1 {
        m.c.rem_euclid(4)
    } else {
        m.c
    };
    (m.c != 0).then_some(m)
}

/// Normal form in the Tate ring, where `a_l` is a unit and everything is 4-torsion.
fn tate_normal(mut m: Mono) -> Option<Mono> {
    while m.p >= 2 {
        m = m.gold();
    }
    if m.p < 0 {
        return None;
    }
    m.c = m.c.rem_euclid(if m.p == 1 { 2 } else { 4 });
    (m.c != 0).then_some(m)
}

/// An element of the homotopy of HZ with `a_l` inverted: a monomial or a multiple of
/// `tr(e_3a) u_2a^-x a_a^-y a_l^z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Local {
    Zero,
    Mono(Mono),
    Tr { x: i32, y: i32, z: i32 },
}

fn local_normal(mut m: Mono) -> Result<Local, ()> {
    m.c = m.c.rem_euclid(4);
    loop {
        if m.c == 0 {
            return Ok(Local::Zero);
        }
        if m.s < 0 {
            if m.c % 2 != 0 {
                return Err(());
            }
            // 2 a_l u_2a = a_a^2 u_l
            m = Mono { c: m.c / 2, p: m.p + 2, q: m.q - 1, r: m.r - 1, s: m.s + 1 };
        } else if m.p >= 2 && m.s >= 1 {
            m = m.gold();
            m.c = m.c.rem_euclid(4);
        } else {
            break;
        }
    }
    if m.p >= 1 {
        m.c = m.c.rem_euclid(2);
    }
    if m.p < 0 {
        return Err(());
    }
    if m.r < 0 && m.s == 0 && (m.p >= 1 || m.c % 2 != 0) {
        return if m.c == 0 { Ok(Local::Zero) } else { Err(()) };
    }
    Ok(if m.c == 0 { Local::Zero } else { Local::Mono(m) })
}

fn tr_coords(c: &NamedClass) -> (i32, i32, i32) {
    (-1 - c.exp_u2a, -1 - c.exp_aa, c.exp_al)
}

fn local_image(c: &NamedClass) -> Result<Local, ()> {
    if c.summand == Summand::TrE3Alpha {
        let (x, y, z) = tr_coords(c);
        return Ok(Local::Tr { x, y, z });
    }
    if c.summand.from_orbits() {
        return Ok(Local::Zero);
    }
    local_normal(Mono::of(c))
}

fn borel_image(c: &NamedClass) -> Option<Mono> {
    if c.desusp {
        return None;
    }
    borel_normal(Mono::of(c))
}

fn tate_image(c: &NamedClass) -> Option<Mono> {
    if c.desusp {
        return None;
    }
    tate_normal(Mono::of(c))
}

fn w_is_tr(_t: &NamedClass, w: &NamedClass) -> bool {
    w.summand == Summand::TrE3Alpha
}

fn is_cone(c: &NamedClass) -> bool {
    matches!(
        c.summand,
        Summand::ConePoly | Summand::ConeALambda | Summand::ConeAAlpha | Summand::ConeAAlphaULambda
    )
}

pub fn multiply(x: &NamedClass, y: &NamedClass) -> Result<Sum, ProductError> {
    multiply_traced(x, y).map(|(s, _)| s)
}

/// The product together with the rule that decided it.
pub fn multiply_traced(x: &NamedClass, y: &NamedClass) -> Result<(Sum, Rule), ProductError> {
    x.validate()?;
    y.validate()?;
    let d = x.degree() + y.degree();
    let basis = top_basis(d);
    if basis.is_empty() {
        return Ok((Sum::zero(d), Rule::ZeroTarget));
    }
    let (xo, yo) = (x.summand.from_orbits(), y.summand.from_orbits());
    if xo && yo {
        return Ok((Sum::zero(d), Rule::OrbitOrbit));
    }
    if xo || yo {
        let (o, z) = if xo { (x, y) } else { (y, x) };
        return Ok((orbit_module(o, z, d, &basis), Rule::OrbitModule));
    }
    let (xt, yt) = (x.summand == Summand::TrE3Alpha, y.summand == Summand::TrE3Alpha);
    if xt || yt {
        let (t, w) = if xt { (x, y) } else { (y, x) };
        if !w_is_tr(t, w) {
            return Ok((tr_list(t, w, d), Rule::TrList));
        }
        return Ok((Sum::zero(d), Rule::TrList));
    } else if let Some(s) = detect(x, y, d, &basis)? {
        return Ok((s, Rule::Detectors));
    }
    if let Some(s) = frobenius(x, y)? {
        return Ok((s, Rule::Frobenius));
    }
    Err(ProductError::Unspecified(x.name(), y.name()))
}

/// `Sigma^-1 t * z = Sigma^-1 (t z)` with `z` read in the Tate ring.
fn orbit_module(o: &NamedClass, z: &NamedClass, d: Degree, basis: &[NamedClass]) -> Sum {
    match tate_image(z) {
        Some(zt) => orbit_times(o, zt, d, basis),
        None => Sum::zero(d),
    }
}

/// `Sigma^-1 t` times a Tate monomial.
fn orbit_times(o: &NamedClass, m: Mono, d: Degree, basis: &[NamedClass]) -> Sum {
    orbit_lookup(Mono { c: 1, ..Mono::of(o) }.times(m), d, basis)
}

/// The class `Sigma^-1 m` for a Tate monomial `m`, or 0 when no such class survives.
fn orbit_lookup(m: Mono, d: Degree, basis: &[NamedClass]) -> Sum {
    let Some(m) = tate_normal(m) else {
        return Sum::zero(d);
    };
    for g in basis {
        if g.summand.from_orbits() && Mono::of(g).same_monomial(&m) {
            return Sum::zero(d).plus(m.c, g.clone());
        }
    }
    Sum::zero(d)
}

fn tr_class(x: i32, y: i32, z: i32) -> NamedClass {
    NamedClass::tr_e3alpha(x, y, z)
}

/// `tr(e_3a) u_2a^-x a_a^-y a_l^z` times `a_a^p a_l^q u_2a^r u_l^s` with `p, r, s >= 0`.
fn tr_times(x: i32, y: i32, z: i32, m: Mono) -> Sum {
    let d = tr_class(x, y, z).degree() + monomial_degree(m.p, m.q, m.r, m.s, false);
    if m.s >= 1 {
        return Sum::zero(d);
    }
    let (x1, y1, z1) = (x - m.r, y - m.p, z + m.q);
    if x1 < 0 {
        return Sum::zero(d);
    }
    if y1 >= 0 {
        return Sum::single(m.c, tr_class(x1, y1, z1));
    }
    // tr(e_3a) a_l^z / u_2a^x * a_a = Sigma^-1 a_l^z / u_2a^(x+1)
    orbit_lookup(Mono { c: m.c, p: -y1 - 1, q: z1, r: -(x1 + 1), s: 0 }, d, &top_basis(d))
}

/// Products with `tr(e_3a) u_2a^-x a_a^-y a_l^z`.
fn tr_list(t: &NamedClass, w: &NamedClass, d: Degree) -> Sum {
    let (x, y, z) = tr_coords(t);
    if is_cone(w) {
        return tr_times(x, y, z, Mono::of(w));
    }
    // the remaining nonzero products follow from tr(e_3a) 2u_2a/u_l = Sigma^-1 a_a/(a_l u_2a),
    // then multiplying by names
    let rest = match w.summand {
        Summand::TwoU2aOverULambda => Mono { c: 1, p: 0, q: 0, r: w.exp_u2a - 1, s: 0 },
        Summand::AAlphaOverALambda => Mono { c: 1, p: w.exp_aa - 2, q: w.exp_al + 1, r: w.exp_u2a, s: 0 },
        _ => return Sum::zero(d),
    };
    if y >= 2 {
        return tr_times(x, y - 2, z - 1 + rest.q, Mono { q: 0, ..rest });
    }
    let first = Mono { c: 1, p: 1 - y, q: z - 1, r: -(x + 1), s: 0 };
    orbit_lookup(first.times(rest), d, &top_basis(d))
}

/// Products of classes detected jointly by the Borel completion and the `a_l`-localization.
/// Normal forms are unique per degree, so both images reduce to a coefficient.
fn detect(x: &NamedClass, y: &NamedClass, d: Degree, basis: &[NamedClass]) -> Result<Option<Sum>, ProductError> {
    let inconsistent = || ProductError::Inconsistent(x.name(), y.name());
    let borel = match (borel_image(x), borel_image(y)) {
        (Some(a), Some(b)) => borel_normal(a.times(b)),
        _ => None,
    };
    let local = match (local_image(x), local_image(y)) {
        (Ok(Local::Mono(a)), Ok(Local::Mono(b))) => local_normal(a.times(b)).map_err(|_| inconsistent())?,
        (Ok(_), Ok(_)) => Local::Zero,
        _ => return Err(inconsistent()),
    };
    let targets: Vec<&NamedClass> = basis.iter().filter(|g| !g.summand.from_orbits()).collect();
    let images: Vec<(Option<Mono>, Option<Mono>)> = targets
        .iter()
        .map(|g| {
            let l = match local_image(g) {
                Ok(Local::Mono(m)) => Some(m),
                _ => None,
            };
            (borel_image(g), l)
        })
        .collect();
    let monomials_agree = |a: Option<Mono>, b: Option<Mono>| match (a, b) {
        (Some(a), Some(b)) => a.same_monomial(&b),
        _ => true,
    };
    for (gb, gl) in &images {
        if !monomials_agree(borel, *gb) || !monomials_agree(local_mono(local), *gl) {
            return Err(inconsistent());
        }
    }
    let bval = borel.map(|m| m.c).unwrap_or(0);
    let lval = local_mono(local).map(|m| m.c).unwrap_or(0);
    let mut coeffs = vec![0i64; targets.len()];
    for (i, g) in targets.iter().enumerate() {
        let (gb, gl) = images[i];
        coeffs[i] = if g.order() == 0 {
            let gb = gb.ok_or_else(inconsistent)?;
            if bval % gb.c != 0 {
                return Err(inconsistent());
            }
            bval / gb.c
        } else {
            let gl = gl.ok_or_else(inconsistent)?;
            if lval % gl.c != 0 {
                return Err(inconsistent());
            }
            lval / gl.c
        };
    }
    // check both images of the answer
    let bsum: i64 = images.iter().zip(&coeffs).map(|((b, _), c)| b.map(|m| m.c).unwrap_or(0) * c).sum();
    let lsum: i64 = images.iter().zip(&coeffs).map(|((_, l), c)| l.map(|m| m.c).unwrap_or(0) * c).sum();
    let bmod = borel.or(images.iter().find_map(|(b, _)| *b)).map(borel_modulus).unwrap_or(0);
    let lmod = local_mono(local).or(images.iter().find_map(|(_, l)| *l)).map(local_modulus).unwrap_or(4);
    if reduce_coeff(bsum - bval, bmod) != 0 || (lsum - lval).rem_euclid(lmod) != 0 {
        return Err(inconsistent());
    }
    let mut out = Sum::zero(d);
    for (g, c) in targets.iter().zip(coeffs) {
        out = out.plus(c, (*g).clone());
    }
    if out.is_zero() && basis.iter().any(|g| g.summand.from_orbits()) {
        // the product may still be a nonzero class from the homotopy orbits
        return Ok(None);
    }
    Ok(Some(out))
}

fn local_mono(l: Local) -> Option<Mono> {
    match l {
        Local::Mono(m) => Some(m),
        _ => None,
    }
}

fn borel_modulus(m: Mono) -> u32 {
    if m.p == 1 {
        2
    } else if m.q >= 1 {
        4
    } else {
        0
    }
}

fn local_modulus(m: Mono) -> i64 {
    if m.p >= 1 {
        2
    } else {
        4
    }
}

/// `tr(m) y = tr(m res(y))` when one factor is exactly a transfer.
fn frobenius(x: &NamedClass, y: &NamedClass) -> Result<Option<Sum>, ProductError> {
    for (t, w) in [(x, y), (y, x)] {
        let dt = t.degree();
        if tr42_of_mid(dt) != vec![(1, t.clone())] {
            continue;
        }
        let r = res42_scalar(w);
        let dw = w.degree();
        let c = r * mid_product(dt, dw);
        let mut out = Sum::zero(dt + dw);
        for (k, g) in tr42_of_mid(dt + dw) {
            out = out.plus(c * k, g);
        }
        return Ok(Some(out));
    }
    Ok(None)
}

/// Extends [`multiply`] linearly in the first argument.
pub fn multiply_sum(s: &Sum, y: &NamedClass) -> Result<Sum, ProductError> {
    let mut out = Sum::zero(s.degree + y.degree());
    for (c, x) in &s.terms {
        out = out.add_sum(&multiply(x, y)?.scale(*c));
    }
    Ok(out)
}

/// Extends [`multiply`] linearly in the second argument.
pub fn multiply_left(x: &NamedClass, s: &Sum) -> Result<Sum, ProductError> {
    let mut out = Sum::zero(x.degree() + s.degree);
    for (c, y) in &s.terms {
        out = out.add_sum(&multiply(x, y)?.scale(*c));
    }
    Ok(out)
}

/// `tr42(m res42(y))` for the middle generator `m` in degree `d`.
pub fn frobenius_lhs(d: Degree, y: &NamedClass) -> Sum {
    let c = res42_scalar(y) * mid_product(d, y.degree());
    let mut out = Sum::zero(d + y.degree());
    for (k, g) in tr42_of_mid(d + y.degree()) {
        out = out.plus(c * k, g);
    }
    out
}

/// `tr42(m) y` for the middle generator `m` in degree `d`.
pub fn frobenius_rhs(d: Degree, y: &NamedClass) -> Result<Sum, ProductError> {
    let mut out = Sum::zero(d + y.degree());
    for (k, x) in tr42_of_mid(d) {
        out = out.add_sum(&multiply(&x, y)?.scale(k));
    }
    Ok(out)
}

/// `g(d1) g(d2) = c g(d1 + d2)` for the middle-level generators.
pub fn mid_product(d1: Degree, d2: Degree) -> i64 {
    let (Some(g1), Some(g2), Some(g)) = (
        LevelClass::generator(d1, Subgroup::C2),
        LevelClass::generator(d2, Subgroup::C2),
        LevelClass::generator(d1 + d2, Subgroup::C2),
    ) else {
        return 0;
    };
    let order = MidKind::of(d1 + d2).group().torsion.first().map(|t| t.to_u32_digits().1[0]).unwrap_or(0);
    let c = match (g1.desusp, g2.desusp) {
        (true, true) => 0,
        (true, false) | (false, true) => {
            let (s, p) = if g1.desusp { (&g1, &g2) } else { (&g2, &g1) };
            let ok = p.theta == 1
                && g.desusp
                && g.exp_u2s == s.exp_u2s + p.exp_u2s
                && g.exp_a2s == s.exp_a2s + p.exp_a2s;
            ok as i64
        }
        (false, false) => {
            let theta = (g1.theta * g2.theta) as i64;
            let same = !g.desusp && g.exp_u2s == g1.exp_u2s + g2.exp_u2s && g.exp_a2s == g1.exp_a2s + g2.exp_a2s;
            if same && theta % g.theta as i64 == 0 {
                theta / g.theta as i64
            } else {
                0
            }
        }
    };
    reduce_coeff(c, order)
}

/// Structure maps of the Mackey functor on named generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StructureMap {
    Res42,
    Res21,
    Tr42,
    Tr21,
    Weyl,
}

/// A class at any level.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AnyClass {
    Top(NamedClass),
    Level(LevelClass),
}

impl AnyClass {
    pub fn degree(&self) -> Degree {
        match self {
            AnyClass::Top(c) => c.degree(),
            AnyClass::Level(c) => c.degree(),
        }
    }

    pub fn level(&self) -> Subgroup {
        match self {
            AnyClass::Top(_) => Subgroup::C4,
            AnyClass::Level(c) => c.level,
        }
    }

    pub fn name(&self) -> String {
        match self {
            AnyClass::Top(c) => c.name(),
            AnyClass::Level(c) => c.name(),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("{0:?} does not start at level {1:?}")]
    WrongLevel(StructureMap, Subgroup),
    #[error("{0} is not a generator")]
    NotGenerator(String),
}

/// The image of a generator under a structure map, as `(coefficient, class)` terms.
pub fn structure_map(x: &AnyClass, which: StructureMap) -> Result<Vec<(i64, AnyClass)>, StructureError> {
    let d = x.degree();
    let lvl = x.level();
    let src_ok = match which {
        StructureMap::Res42 => lvl == Subgroup::C4,
        StructureMap::Tr42 | StructureMap::Res21 => lvl == Subgroup::C2,
        StructureMap::Tr21 => lvl == Subgroup::E,
        StructureMap::Weyl => lvl != Subgroup::C4,
    };
    if !src_ok {
        return Err(StructureError::WrongLevel(which, lvl));
    }
    if let AnyClass::Level(c) = x {
        if LevelClass::generator(d, c.level).as_ref() != Some(c) {
            return Err(StructureError::NotGenerator(c.name()));
        }
    }
    let kind = MidKind::of(d);
    let mid = || LevelClass::generator(d, Subgroup::C2).map(AnyClass::Level);
    let bot = || LevelClass::generator(d, Subgroup::E).map(AnyClass::Level);
    let keep = |c: i64, g: Option<AnyClass>| -> Vec<(i64, AnyClass)> {
        match g {
            Some(g) if c != 0 => vec![(c, g)],
            _ => vec![],
        }
    };
    Ok(match which {
        StructureMap::Res42 => {
            let AnyClass::Top(c) = x else { unreachable!() };
            let r = res42_scalar(c);
            let r = if kind.group().torsion.is_empty() { r } else { r.rem_euclid(2) };
            keep(r, mid())
        }
        StructureMap::Tr42 => tr42_of_mid(d).into_iter().map(|(k, g)| (k, AnyClass::Top(g))).collect(),
        StructureMap::Res21 => keep(kind.bottom_maps().0, bot()),
        StructureMap::Tr21 => keep(kind.bottom_maps().1, mid()),
        StructureMap::Weyl => {
            let s = if d.b.rem_euclid(2) == 0 { 1 } else { -1 };
            let s = if lvl == Subgroup::C2 && !kind.group().torsion.is_empty() { 1 } else { s };
            vec![(s, x.clone())]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(f: Summand, p: i32, q: i32, r: i32, s: i32) -> NamedClass {
        NamedClass::new(f, p, q, r, s).unwrap()
    }

    #[test]
    fn gold_and_torsion() {
        let aa = NamedClass::a_alpha();
        let ul = NamedClass::u_lambda();
        let al = NamedClass::a_lambda();
        let u2 = NamedClass::u_2alpha();
        let lhs = multiply_sum(&multiply(&aa, &aa).unwrap(), &ul).unwrap();
        let rhs = multiply(&al, &u2).unwrap().scale(2);
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
        assert!(multiply(&aa, &cls(Summand::ConePoly, 0, 0, 0, 0)).unwrap().terms[0].1 == aa);
        let two_aa = Sum::single(2, aa.clone());
        assert!(two_aa.is_zero());
        assert!(multiply_sum(&multiply(&al, &al).unwrap().scale(4), &u2).unwrap().is_zero());
    }

    #[test]
    fn exotic_square() {
        let f = cls(Summand::TwoU2aOverULambda, 0, 0, 1, -1);
        let sq = multiply(&f, &f).unwrap();
        let names: Vec<String> = sq.terms.iter().map(|(c, x)| format!("{c} {}", x.name())).collect();
        assert_eq!(names, vec!["1 aa^4 al^-2", "1 4u2a^2 ul^-2"]);
    }

    #[test]
    fn tr_relations() {
        let t = NamedClass::tr_e3alpha(0, 0, 0);
        let f = cls(Summand::TwoU2aOverULambda, 0, 0, 1, -1);
        let p = multiply(&t, &f).unwrap();
        assert_eq!(p.to_string(), "S^-1 aa al^-1 u2a^-1");
        let t1 = NamedClass::tr_e3alpha(0, 0, -1);
        let p = multiply(&t1, &NamedClass::a_alpha()).unwrap();
        assert_eq!(p.to_string(), "S^-1 al^-1 u2a^-1");
        assert!(multiply(&t, &NamedClass::u_lambda()).unwrap().is_zero());
        assert!(multiply(&t, &NamedClass::u_2alpha()).unwrap().is_zero());
        assert!(multiply(&t, &NamedClass::a_alpha()).unwrap().is_zero());
    }

    #[test]
    fn orbit_examples() {
        // u_l/u_2a * S^-1 1/(a_l u_l^2) = S^-1 1/(a_l u_l u_2a)
        let x = cls(Summand::U2aInvULambda, 0, 0, -1, 1);
        let y = cls(Summand::SigmaOverALambdaULambda, 0, -1, 0, -2);
        assert_eq!(multiply(&x, &y).unwrap().to_string(), "S^-1 al^-1 u2a^-1 ul^-1");
        let z = cls(Summand::AAlphaOverALambda, 3, -1, 0, 0);
        let w = cls(Summand::SigmaOverALambdaULambda, 0, -2, 0, -2);
        assert!(multiply(&z, &w).unwrap().is_zero());
        assert!(multiply(&y, &y).unwrap().is_zero());
    }

    #[test]
    fn theta_products() {
        let a = cls(Summand::FourU2aOverULambda, 0, 0, 2, -3);
        let b = cls(Summand::TwoU2aOverULambda, 0, 0, 4, -1);
        let p = multiply(&a, &b).unwrap();
        assert_eq!(p.to_string(), "2*(4u2a^6 ul^-4)");
        let c = cls(Summand::TwoOverU2a, 0, 0, -1, 0);
        let e = cls(Summand::TwoU2aOverULambda, 0, 0, 2, -1);
        assert_eq!(multiply(&c, &e).unwrap().to_string(), "2*(2u2a ul^-1)");
        let f = cls(Summand::TwoU2aOverULambda, 0, 0, 1, -1);
        let g = cls(Summand::FourU2aOverULambda, 0, 0, 2, -2);
        assert_eq!(multiply(&f, &g).unwrap().to_string(), "2*(4u2a^3 ul^-3)");
        let h = cls(Summand::FourU2aOverULambda, 0, 0, 3, -3);
        let k = cls(Summand::U2aInvULambda, 0, 0, -1, 1);
        assert_eq!(multiply(&h, &k).unwrap().to_string(), "4u2a^2 ul^-2");
    }

    #[test]
    fn a_lambda_times_two_u() {
        let f = cls(Summand::TwoU2aOverULambda, 0, 0, 1, -1);
        assert_eq!(multiply(&f, &NamedClass::a_lambda()).unwrap().to_string(), "aa^2");
        // disagrees with the printed claim that this product vanishes; see ker(a_a) = im(tr)
        assert_eq!(multiply(&f, &NamedClass::a_alpha()).unwrap().to_string(), "aa^3 al^-1");
    }

    #[test]
    fn structure_examples() {
        let ul = AnyClass::Top(NamedClass::u_lambda());
        let r = structure_map(&ul, StructureMap::Res42).unwrap();
        assert_eq!(r[0].1.name(), "u2s");
        let t = structure_map(&r[0].1, StructureMap::Tr42).unwrap();
        assert_eq!((t[0].0, t[0].1.name()), (2, "ul".to_string()));
        let e2 = AnyClass::Level(LevelClass::generator(Degree::new(-2, 2, 0), Subgroup::C2).unwrap());
        let t = structure_map(&e2, StructureMap::Tr42).unwrap();
        assert_eq!((t[0].0, t[0].1.name()), (1, "2u2a^-1".to_string()));
        let e1 = AnyClass::Level(LevelClass::generator(Degree::new(-1, 1, 0), Subgroup::C2).unwrap());
        assert_eq!(structure_map(&e1, StructureMap::Weyl).unwrap()[0].0, -1);
    }
}
