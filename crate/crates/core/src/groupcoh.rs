//! Cohomology of cyclic 2-groups from the periodic free resolution, cup products from the
//! explicit diagonal approximation, and the homotopy fixed point E2 column of HZ.

use crate::chains::Degree;
use crate::intlin::{FinAbGroup, IntMatrix};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GroupCohError {
    #[error("group order {0} is not a power of 2 greater than 1")]
    BadOrder(usize),
}

/// An element `sum c_i gamma^i` of the integral group ring of a cyclic group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElt(pub Vec<i64>);

impl GroupRingElt {
    pub fn mul(&self, other: &GroupRingElt) -> GroupRingElt {
        let n = self.0.len();
        let mut out = vec![0; n];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[(i + j) % n] += a * b;
            }
        }
        GroupRingElt(out)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }

    /// Matrix of multiplication on the lattice with basis `gamma^i`.
    pub fn matrix(&self) -> IntMatrix {
        let n = self.0.len();
        let mut m = IntMatrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.0.iter().enumerate() {
                m.add_at((j + k) % n, j, &BigInt::from(*c));
            }
        }
        m
    }
}

/// `... -> Z[G] -N-> Z[G] -(1-gamma)-> Z[G] -> Z` for `G` cyclic of order `2^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicResolution {
    pub order: usize,
}

impl PeriodicResolution {
    pub fn new(order: usize) -> Result<Self, GroupCohError> {
        if order < 2 || !order.is_power_of_two() {
            return Err(GroupCohError::BadOrder(order));
        }
        Ok(PeriodicResolution { order })
    }

    pub fn one_minus_gamma(&self) -> GroupRingElt {
        let mut v = vec![0; self.order];
        v[0] = 1;
        v[1] = -1;
        GroupRingElt(v)
    }

    pub fn norm(&self) -> GroupRingElt {
        GroupRingElt(vec![1; self.order])
    }

    /// `d_k: F_k -> F_{k-1}` for `k >= 1`.
    pub fn diff(&self, k: usize) -> GroupRingElt {
        assert!(k >= 1);
        if k % 2 == 1 {
            self.one_minus_gamma()
        } else {
            self.norm()
        }
    }

    /// Components of `Delta_pq(1)` in `F_p (x) F_q`, as `(i, j, c)` for `c gamma^i (x) gamma^j`.
    pub fn diagonal(&self, p: usize, q: usize) -> Vec<(usize, usize, i64)> {
        if p.is_multiple_of(2) {
            return vec![(0, 0, 1)];
        }
        if q.is_multiple_of(2) {
            return vec![(0, 1, 1)];
        }
        // the sign comes from using 1 - gamma in odd degrees
        let mut out = vec![];
        for i in 0..self.order {
            for j in i + 1..self.order {
                out.push((i, j, -1));
            }
        }
        out
    }
}

/// Rank one coefficient modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoeffModule {
    Z,
    ZTilde,
    Z2,
}

impl CoeffModule {
    /// Action of the generator.
    pub fn sign(self) -> i64 {
        match self {
            CoeffModule::ZTilde => -1,
            _ => 1,
        }
    }

    /// 0 for a free module.
    pub fn modulus(self) -> i64 {
        match self {
            CoeffModule::Z2 => 2,
            _ => 0,
        }
    }

    pub fn action_matrix(self) -> IntMatrix {
        IntMatrix::scalar(1, self.sign())
    }

    pub fn action_order(self) -> usize {
        if self.sign() == -1 {
            2
        } else {
            1
        }
    }

    pub fn tensor(self, other: CoeffModule) -> CoeffModule {
        match (self, other) {
            (CoeffModule::Z2, _) | (_, CoeffModule::Z2) => CoeffModule::Z2,
            (a, b) if a.sign() * b.sign() == -1 => CoeffModule::ZTilde,
            _ => CoeffModule::Z,
        }
    }

    fn reduce(self, x: i64) -> i64 {
        match self.modulus() {
            0 => x,
            m => x.rem_euclid(m),
        }
    }

    /// `x` acting on `M`.
    pub fn act(self, x: &GroupRingElt) -> i64 {
        let mut s = 0;
        let mut g = 1;
        for c in &x.0 {
            s += c * g;
            g *= self.sign();
        }
        self.reduce(s)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CoeffModule::Z => "Z",
            CoeffModule::ZTilde => "Z~",
            CoeffModule::Z2 => "Z/2",
        }
    }
}

impl std::str::FromStr for CoeffModule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Z" | "z" => Ok(CoeffModule::Z),
            "Z~" | "z~" | "Zt" | "zt" | "twisted" => Ok(CoeffModule::ZTilde),
            "Z/2" | "z/2" | "Z2" | "z2" => Ok(CoeffModule::Z2),
            _ => Err(format!("unknown coefficient module {s}")),
        }
    }
}

/// `delta^q: Hom(F_q, M) -> Hom(F_{q+1}, M)` as a scalar on `M`.
pub fn coboundary(res: &PeriodicResolution, m: CoeffModule, q: usize) -> i64 {
    m.act(&res.diff(q + 1))
}

/// `ker delta^q / im delta^{q-1}`; generated by the cochain with value 1 whenever nonzero.
pub fn cohomology_of(res: &PeriodicResolution, m: CoeffModule, q: usize) -> FinAbGroup {
    let out = coboundary(res, m, q);
    if out != 0 {
        return FinAbGroup::zero();
    }
    let inc = if q == 0 { 0 } else { coboundary(res, m, q - 1) };
    match (m.modulus(), inc) {
        (0, 0) => FinAbGroup::z(),
        (0, n) => FinAbGroup::cyclic(n.abs()),
        (_, 0) => FinAbGroup::cyclic(m.modulus()),
        _ => FinAbGroup::zero(),
    }
}

pub fn cohomology(order: usize, m: CoeffModule, q: usize) -> Result<FinAbGroup, GroupCohError> {
    Ok(cohomology_of(&PeriodicResolution::new(order)?, m, q))
}

/// `x_p y_q = coefficient * z_{p+q}` in terms of the standard generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CupPairing {
    pub p: usize,
    pub q: usize,
    pub left: FinAbGroup,
    pub right: FinAbGroup,
    pub target: FinAbGroup,
    pub coefficient: i64,
}

fn group_order(g: &FinAbGroup) -> i64 {
    if g.is_zero() {
        1
    } else if g.free > 0 {
        0
    } else {
        g.torsion.iter().map(|t| i64::try_from(t).unwrap()).product()
    }
}

fn reduce_in(g: &FinAbGroup, x: i64) -> i64 {
    match group_order(g) {
        0 => x,
        n => x.rem_euclid(n),
    }
}

impl CupPairing {
    /// `Hom(left (x) right, target)` as a 1x1 matrix, or empty when a group vanishes.
    pub fn matrix(&self) -> IntMatrix {
        if self.left.is_zero() || self.right.is_zero() || self.target.is_zero() {
            return IntMatrix::zeros(self.target.ngens(), self.left.ngens() * self.right.ngens());
        }
        IntMatrix::scalar(1, self.coefficient)
    }

    pub fn is_surjective(&self) -> bool {
        if self.target.is_zero() {
            return true;
        }
        if self.left.is_zero() || self.right.is_zero() {
            return false;
        }
        let n = group_order(&self.target);
        num_integer::Integer::gcd(&self.coefficient, &n).abs() == 1
    }

    /// The pairing is an isomorphism `left (x) right -> target`.
    pub fn is_iso(&self) -> bool {
        if !self.is_surjective() {
            return false;
        }
        let (a, b, t) = (group_order(&self.left), group_order(&self.right), group_order(&self.target));
        let tensor = match (a, b) {
            (0, 0) => 0,
            (0, n) | (n, 0) => n,
            (m, n) => num_integer::Integer::gcd(&m, &n),
        };
        tensor == t
    }
}

/// Cup product `H^p(M1) (x) H^q(M2) -> H^{p+q}(M1 (x) M2)` on standard generators.
pub fn cup_of(res: &PeriodicResolution, p: usize, q: usize, m1: CoeffModule, m2: CoeffModule) -> CupPairing {
    let m = m1.tensor(m2);
    let target = cohomology_of(res, m, p + q);
    let (left, right) = (cohomology_of(res, m1, p), cohomology_of(res, m2, q));
    let mut c = 0;
    for (i, j, k) in res.diagonal(p, q) {
        c += k * m1.sign().pow(i as u32) * m2.sign().pow(j as u32);
    }
    if left.is_zero() || right.is_zero() {
        c = 0;
    }
    CupPairing {
        p,
        q,
        left,
        right,
        coefficient: reduce_in(&target, m.reduce(c)),
        target,
    }
}

pub fn cup(order: usize, p: usize, q: usize, m1: CoeffModule, m2: CoeffModule) -> Result<CupPairing, GroupCohError> {
    Ok(cup_of(&PeriodicResolution::new(order)?, p, q, m1, m2))
}

/// One column `E_2^{V,s} = H^s(C_4; pi_V^{G/e} HZ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfpssColumn {
    pub degree: Degree,
    pub coefficients: Option<CoeffModule>,
    pub groups: Vec<FinAbGroup>,
    /// Concentration in underlying degree 0 forces collapse at E2.
    pub collapses: bool,
}

pub fn hfpss_e2(d: Degree, max_s: usize) -> HfpssColumn {
    let res = PeriodicResolution { order: 4 };
    let coefficients = if d.a + d.b + 2 * d.c != 0 {
        None
    } else if d.b.rem_euclid(2) == 0 {
        Some(CoeffModule::Z)
    } else {
        Some(CoeffModule::ZTilde)
    };
    let groups = (0..=max_s)
        .map(|s| coefficients.map(|m| cohomology_of(&res, m, s)).unwrap_or_else(FinAbGroup::zero))
        .collect();
    HfpssColumn { degree: d, coefficients, groups, collapses: true }
}

/// Top level of `pi_d` of the Borel completion, read off the collapsed E2 page: the only
/// contribution comes from filtration `s = -|d|`.
pub fn borel_group(d: Degree) -> FinAbGroup {
    let s = -(d.a + d.b + 2 * d.c);
    if s < 0 {
        return FinAbGroup::zero();
    }
    let col = hfpss_e2(Degree::new(d.a + s, d.b, d.c), s as usize);
    col.groups[s as usize].clone()
}

/// The Borel coefficients as presented: `Z[a_l, u_2a^±, u_l^±]/4a_l (+) Z/2<a_a>[a_l, u_2a^±, u_l^±]`.
pub fn borel_formula(d: Degree) -> FinAbGroup {
    let mut g = FinAbGroup::zero();
    if d.a.rem_euclid(2) != 0 {
        return g;
    }
    for p in 0..=1 {
        if (d.b + p).rem_euclid(2) != 0 {
            continue;
        }
        let r = -(d.b + p) / 2;
        let s = d.a / 2 - r;
        let q = -d.c - s;
        if q < 0 {
            continue;
        }
        let c = match (p, q) {
            (0, 0) => FinAbGroup::z(),
            (0, _) => FinAbGroup::cyclic(4),
            _ => FinAbGroup::cyclic(2),
        };
        g = g.direct_sum(&c);
    }
    g.canonical()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tensor_diff(res: &PeriodicResolution, n: usize) -> std::collections::BTreeMap<(usize, usize, usize), i64> {
        // (d (x) 1 + (-1)^p 1 (x) d) Delta(e_n), keyed by (p', i, j)
        let g = res.order;
        let mut out = std::collections::BTreeMap::new();
        for p in 0..=n {
            let q = n - p;
            for (i, j, c) in res.diagonal(p, q) {
                if p >= 1 {
                    for (k, e) in res.diff(p).0.iter().enumerate() {
                        *out.entry((p - 1, (i + k) % g, j)).or_insert(0) += c * e;
                    }
                }
                if q >= 1 {
                    let sgn = if p % 2 == 0 { 1 } else { -1 };
                    for (k, e) in res.diff(q).0.iter().enumerate() {
                        *out.entry((p, i, (j + k) % g)).or_insert(0) += sgn * c * e;
                    }
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    fn diag_of_diff(res: &PeriodicResolution, n: usize) -> std::collections::BTreeMap<(usize, usize, usize), i64> {
        let g = res.order;
        let mut out = std::collections::BTreeMap::new();
        for (k, e) in res.diff(n).0.iter().enumerate() {
            for p in 0..n {
                for (i, j, c) in res.diagonal(p, n - 1 - p) {
                    *out.entry((p, (i + k) % g, (j + k) % g)).or_insert(0) += c * e;
                }
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    #[test]
    fn resolution_is_exact_shape() {
        for order in [2, 4, 8] {
            let r = PeriodicResolution::new(order).unwrap();
            assert!(r.norm().mul(&r.one_minus_gamma()).is_zero());
            assert!(r.one_minus_gamma().mul(&r.norm()).is_zero());
            assert!(r.diff(2).matrix().dot(&r.diff(3).matrix()).is_zero());
        }
        assert!(PeriodicResolution::new(6).is_err());
    }

    #[test]
    fn diagonal_is_chain_map() {
        for order in [2, 4, 8] {
            let r = PeriodicResolution::new(order).unwrap();
            for n in 1..=9 {
                assert_eq!(tensor_diff(&r, n), diag_of_diff(&r, n), "order {order} n {n}");
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(cohomology(4, CoeffModule::Z, 0).unwrap(), FinAbGroup::z());
        assert_eq!(cohomology(4, CoeffModule::Z, 2).unwrap(), FinAbGroup::cyclic(4));
        assert_eq!(cohomology(4, CoeffModule::ZTilde, 1).unwrap(), FinAbGroup::cyclic(2));
        assert!(cohomology(4, CoeffModule::Z, 1).unwrap().is_zero());
        assert!(cohomology(4, CoeffModule::ZTilde, 0).unwrap().is_zero());
        assert_eq!(cohomology(2, CoeffModule::Z2, 5).unwrap(), FinAbGroup::cyclic(2));
        for m in [CoeffModule::Z, CoeffModule::ZTilde, CoeffModule::Z2] {
            assert_eq!(m.action_matrix().dot(&m.action_matrix()), IntMatrix::identity(1));
            assert_eq!(m.action_order(), if m == CoeffModule::ZTilde { 2 } else { 1 });
        }
    }

    #[test]
    fn cup_examples() {
        let xx = cup(4, 2, 2, CoeffModule::Z, CoeffModule::Z).unwrap();
        assert!(xx.is_surjective());
        for i in 0..5 {
            assert!(cup(4, 2 * i, 1, CoeffModule::Z, CoeffModule::ZTilde).unwrap().is_iso());
        }
        let yy = cup(4, 1, 1, CoeffModule::ZTilde, CoeffModule::ZTilde).unwrap();
        assert_eq!(yy.target, FinAbGroup::cyclic(4));
        assert_eq!(yy.coefficient, 2);
        let unit = cup(4, 0, 3, CoeffModule::Z, CoeffModule::ZTilde).unwrap();
        assert_eq!(unit.coefficient, 1);
    }

    #[test]
    fn hfpss_columns() {
        let c = hfpss_e2(Degree::ZERO, 4);
        let n: Vec<String> = c.groups.iter().map(|g| g.notation()).collect();
        assert_eq!(n, ["Z", "0", "Z/4", "0", "Z/4"]);
        let c = hfpss_e2(Degree::new(1, -1, 0), 4);
        let n: Vec<String> = c.groups.iter().map(|g| g.notation()).collect();
        assert_eq!(n, ["0", "Z/2", "0", "Z/2", "0"]);
        assert!(hfpss_e2(Degree::new(1, 0, 0), 4).groups.iter().all(|g| g.is_zero()));
    }

    #[test]
    fn borel_matches_presentation() {
        for d in Degree::default_window() {
            assert_eq!(borel_group(d), borel_formula(d), "{d}");
        }
    }

    fn module() -> impl Strategy<Value = CoeffModule> {
        prop_oneof![Just(CoeffModule::Z), Just(CoeffModule::ZTilde), Just(CoeffModule::Z2)]
    }

    proptest! {
        #[test]
        fn periodic(m in module(), q in 1usize..20) {
            prop_assert_eq!(cohomology(4, m, q).unwrap(), cohomology(4, m, q + 2).unwrap());
        }

        #[test]
        fn associative_and_unital(m1 in module(), m2 in module(), m3 in module(), p in 0usize..=6, q in 0usize..=6, r in 0usize..=6) {
            let res = PeriodicResolution::new(4).unwrap();
            let ab = cup_of(&res, p, q, m1, m2);
            let ab_c = cup_of(&res, p + q, r, m1.tensor(m2), m3);
            let bc = cup_of(&res, q, r, m2, m3);
            let a_bc = cup_of(&res, p, q + r, m1, m2.tensor(m3));
            let t = &ab_c.target;
            prop_assert_eq!(t, &a_bc.target);
            prop_assert_eq!(reduce_in(t, ab.coefficient * ab_c.coefficient), reduce_in(t, bc.coefficient * a_bc.coefficient));
            let unit = cup_of(&res, 0, q, CoeffModule::Z, m2);
            prop_assert_eq!(reduce_in(&unit.target, unit.coefficient), reduce_in(&unit.target, 1));
        }
    }
}
