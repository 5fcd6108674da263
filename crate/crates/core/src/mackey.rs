//! C4 Mackey functors, permutation chain complexes and their homology.

use crate::intlin::{
    hom_invariants, homology, induced_map, is_zero_hom, reduce_hom, FinAbGroup, HomInvariants,
    HomologyData, IntMatrix, LinError,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Subgroup {
    E,
    C2,
    C4,
}

impl Subgroup {
    pub const ALL: [Subgroup; 3] = [Subgroup::C4, Subgroup::C2, Subgroup::E];

    pub fn order(self) -> usize {
        match self {
            Subgroup::E => 1,
            Subgroup::C2 => 2,
            Subgroup::C4 => 4,
        }
    }

    /// Power of the generator that generates this subgroup.
    pub fn generator_power(self) -> usize {
        4 / self.order()
    }

    pub fn level_name(self) -> &'static str {
        match self {
            Subgroup::C4 => "top",
            Subgroup::C2 => "mid",
            Subgroup::E => "bot",
        }
    }
}

/// A finite C4-set: points `0..len` with the action of the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    gamma: Vec<usize>,
}

impl GSet {
    pub fn empty() -> Self {
        GSet { gamma: vec![] }
    }

    /// The orbit C4/H with points `0..|C4/H|` and the generator acting by `+1`.
    pub fn orbit(h: Subgroup) -> Self {
        let n = 4 / h.order();
        GSet { gamma: (0..n).map(|i| (i + 1) % n).collect() }
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    pub fn act(&self, x: usize) -> usize {
        self.gamma[x]
    }

    pub fn act_pow(&self, mut x: usize, k: usize) -> usize {
        for _ in 0..k % 4 {
            x = self.gamma[x];
        }
        x
    }

    pub fn disjoint_union(&self, other: &GSet) -> GSet {
        let n = self.len();
        let mut g = self.gamma.clone();
        g.extend(other.gamma.iter().map(|x| x + n));
        GSet { gamma: g }
    }

    /// Diagonal action on pairs, point `(i, j)` stored at `i * |other| + j`.
    pub fn product(&self, other: &GSet) -> GSet {
        let m = other.len();
        let mut g = Vec::with_capacity(self.len() * m);
        for i in 0..self.len() {
            for j in 0..m {
                g.push(self.gamma[i] * m + other.gamma[j]);
            }
        }
        GSet { gamma: g }
    }

    /// Orbits of the subgroup `k`, ordered by least element, each sorted.
    pub fn orbits(&self, k: Subgroup) -> Vec<Vec<usize>> {
        let p = k.generator_power();
        let mut seen = vec![false; self.len()];
        let mut out = vec![];
        for x in 0..self.len() {
            if seen[x] {
                continue;
            }
            let mut orb = vec![];
            let mut y = x;
            loop {
                if seen[y] {
                    break;
                }
                seen[y] = true;
                orb.push(y);
                y = self.act_pow(y, p);
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    /// Index of the `k`-orbit containing each point.
    pub fn orbit_index(&self, k: Subgroup) -> Vec<usize> {
        let mut idx = vec![0; self.len()];
        for (o, orb) in self.orbits(k).iter().enumerate() {
            for &x in orb {
                idx[x] = o;
            }
        }
        idx
    }

    /// Permutation matrix of `gamma^k` on the underlying lattice.
    pub fn gamma_matrix(&self, k: usize) -> IntMatrix {
        let n = self.len();
        let mut m = IntMatrix::zeros(n, n);
        for x in 0..n {
            m.set(self.act_pow(x, k), x, BigInt::one());
        }
        m
    }
}

/// Level-`k` matrix of an equivariant map `f: Z[src] -> Z[tgt]` on fixed sublattices, in the
/// orbit-sum bases.
pub fn fixed_matrix(f: &IntMatrix, src: &GSet, tgt: &GSet, k: Subgroup) -> IntMatrix {
    let so = src.orbits(k);
    let to = tgt.orbits(k);
    let mut m = IntMatrix::zeros(to.len(), so.len());
    for (j, orb) in so.iter().enumerate() {
        for (i, torb) in to.iter().enumerate() {
            let rep = torb[0];
            let mut s = BigInt::zero();
            for &x in orb {
                s += f.get(rep, x);
            }
            m.set(i, j, s);
        }
    }
    m
}

/// Restriction from level `l` to level `k` (`k <= l`): each `l`-orbit sum splits into `k`-orbit sums.
pub fn restriction_matrix(s: &GSet, l: Subgroup, k: Subgroup) -> IntMatrix {
    let lo = s.orbits(l);
    let kidx = s.orbit_index(k);
    let nk = s.orbits(k).len();
    let mut m = IntMatrix::zeros(nk, lo.len());
    for (j, orb) in lo.iter().enumerate() {
        for &x in orb {
            m.set(kidx[x], j, BigInt::one());
        }
    }
    m
}

/// Transfer from level `k` to level `l`: the relative norm over `l/k`.
pub fn transfer_matrix(s: &GSet, k: Subgroup, l: Subgroup) -> IntMatrix {
    let ko = s.orbits(k);
    let lo = s.orbits(l);
    let steps = l.order() / k.order();
    let p = l.generator_power();
    let mut m = IntMatrix::zeros(lo.len(), ko.len());
    for (j, orb) in ko.iter().enumerate() {
        // norm of the orbit sum, read off at each l-orbit representative
        let mut counts = vec![0i64; s.len()];
        for &x in orb {
            for t in 0..steps {
                counts[s.act_pow(x, p * t)] += 1;
            }
        }
        for (i, orb_l) in lo.iter().enumerate() {
            let c = counts[orb_l[0]];
            if c != 0 {
                m.set(i, j, BigInt::from(c));
            }
        }
    }
    m
}

/// Action of the generator on the level-`k` fixed sublattice.
pub fn weyl_matrix(s: &GSet, k: Subgroup) -> IntMatrix {
    let ko = s.orbits(k);
    let kidx = s.orbit_index(k);
    let mut m = IntMatrix::zeros(ko.len(), ko.len());
    for (j, orb) in ko.iter().enumerate() {
        m.set(kidx[s.act(orb[0])], j, BigInt::one());
    }
    m
}

/// A bounded chain complex of permutation modules with an equivariant differential.
/// Its Mackey chain complex has level `K` equal to the `K`-fixed sublattices.
#[derive(Clone, Debug)]
pub struct MackeyChainComplex {
    pub min_deg: i32,
    pub terms: Vec<GSet>,
    /// `diffs[i]` maps term `i` to term `i - 1`; `diffs[0]` is the zero map out of the bottom.
    pub diffs: Vec<IntMatrix>,
}

impl MackeyChainComplex {
    pub fn new(min_deg: i32, terms: Vec<GSet>, diffs: Vec<IntMatrix>) -> Self {
        MackeyChainComplex { min_deg, terms, diffs }
    }

    pub fn max_deg(&self) -> i32 {
        self.min_deg + self.terms.len() as i32 - 1
    }

    pub fn term(&self, n: i32) -> GSet {
        if n < self.min_deg || n > self.max_deg() {
            GSet::empty()
        } else {
            self.terms[(n - self.min_deg) as usize].clone()
        }
    }

    /// Underlying differential `C_n -> C_{n-1}`.
    pub fn diff(&self, n: i32) -> IntMatrix {
        let src = self.term(n).len();
        let tgt = self.term(n - 1).len();
        if n <= self.min_deg || n > self.max_deg() {
            IntMatrix::zeros(tgt, src)
        } else {
            self.diffs[(n - self.min_deg) as usize].clone()
        }
    }

    pub fn level_diff(&self, n: i32, k: Subgroup) -> IntMatrix {
        fixed_matrix(&self.diff(n), &self.term(n), &self.term(n - 1), k)
    }

    /// Checks `d^2 = 0` and equivariance of every differential.
    pub fn validate(&self) -> Result<(), String> {
        for n in self.min_deg..=self.max_deg() + 1 {
            let d = self.diff(n);
            let (s, t) = (self.term(n), self.term(n - 1));
            if d.rows() != t.len() || d.cols() != s.len() {
                return Err(format!("differential {n} has wrong shape"));
            }
            if d.dot(&s.gamma_matrix(1)) != t.gamma_matrix(1).dot(&d) {
                return Err(format!("differential {n} is not equivariant"));
            }
            if !self.diff(n - 1).dot(&d).is_zero() {
                return Err(format!("d^2 != 0 at {n}"));
            }
        }
        Ok(())
    }

    /// Total rank of the underlying lattices.
    pub fn size(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }
}

/// A C4 Mackey functor with all structure maps in group coordinates (torsion first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MackeyC4 {
    pub top: FinAbGroup,
    pub mid: FinAbGroup,
    pub bot: FinAbGroup,
    pub res42: IntMatrix,
    pub tr42: IntMatrix,
    pub res21: IntMatrix,
    pub tr21: IntMatrix,
    pub weyl_mid: IntMatrix,
    pub weyl_bot: IntMatrix,
}

impl MackeyC4 {
    pub fn zero() -> Self {
        MackeyC4 {
            top: FinAbGroup::zero(),
            mid: FinAbGroup::zero(),
            bot: FinAbGroup::zero(),
            res42: IntMatrix::zeros(0, 0),
            tr42: IntMatrix::zeros(0, 0),
            res21: IntMatrix::zeros(0, 0),
            tr21: IntMatrix::zeros(0, 0),
            weyl_mid: IntMatrix::zeros(0, 0),
            weyl_bot: IntMatrix::zeros(0, 0),
        }
    }

    pub fn level(&self, k: Subgroup) -> &FinAbGroup {
        match k {
            Subgroup::C4 => &self.top,
            Subgroup::C2 => &self.mid,
            Subgroup::E => &self.bot,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.top.is_zero() && self.mid.is_zero() && self.bot.is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, serde_json::Error> {
        serde_json::from_value(v.clone())
    }

    /// Short form such as `Z/4 | Z/2 | 0`.
    pub fn levels_notation(&self) -> String {
        format!("{} | {} | {}", self.top, self.mid, self.bot)
    }

    pub fn invariants(&self) -> MackeyInvariants {
        let wm = self.weyl_mid.sub(&IntMatrix::identity(self.mid.ngens()));
        let wb = self.weyl_bot.sub(&IntMatrix::identity(self.bot.ngens()));
        MackeyInvariants {
            top: self.top.clone(),
            mid: self.mid.clone(),
            bot: self.bot.clone(),
            res42: hom_invariants(&self.res42, &self.top, &self.mid),
            tr42: hom_invariants(&self.tr42, &self.mid, &self.top),
            res21: hom_invariants(&self.res21, &self.mid, &self.bot),
            tr21: hom_invariants(&self.tr21, &self.bot, &self.mid),
            weyl_mid_fixed: hom_invariants(&wm, &self.mid, &self.mid).kernel,
            weyl_bot_fixed: hom_invariants(&wb, &self.bot, &self.bot).kernel,
        }
    }
}

impl fmt::Display for MackeyC4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | res42={:?} tr42={:?} res21={:?} tr21={:?} weyl_mid={:?} weyl_bot={:?}",
            self.levels_notation(),
            self.res42,
            self.tr42,
            self.res21,
            self.tr21,
            self.weyl_mid,
            self.weyl_bot
        )
    }
}

/// Isomorphism invariants used by [`compare`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MackeyInvariants {
    pub top: FinAbGroup,
    pub mid: FinAbGroup,
    pub bot: FinAbGroup,
    pub res42: HomInvariants,
    pub tr42: HomInvariants,
    pub res21: HomInvariants,
    pub tr21: HomInvariants,
    pub weyl_mid_fixed: FinAbGroup,
    pub weyl_bot_fixed: FinAbGroup,
}

/// Isomorphism check through level groups, kernel/image/cokernel of every structure map
/// and the fixed subgroups of the Weyl actions.
pub fn compare(a: &MackeyC4, b: &MackeyC4) -> bool {
    a.invariants() == b.invariants()
}

/// Names of the invariants on which two functors differ.
pub fn differences(a: &MackeyC4, b: &MackeyC4) -> Vec<&'static str> {
    let (x, y) = (a.invariants(), b.invariants());
    let mut out = vec![];
    let pairs: [(&'static str, bool); 9] = [
        ("top", x.top == y.top),
        ("mid", x.mid == y.mid),
        ("bot", x.bot == y.bot),
        ("res42", x.res42 == y.res42),
        ("tr42", x.tr42 == y.tr42),
        ("res21", x.res21 == y.res21),
        ("tr21", x.tr21 == y.tr21),
        ("weyl_mid", x.weyl_mid_fixed == y.weyl_mid_fixed),
        ("weyl_bot", x.weyl_bot_fixed == y.weyl_bot_fixed),
    ];
    for (n, ok) in pairs {
        if !ok {
            out.push(n);
        }
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub failures: Vec<String>,
    pub checked: usize,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, name: &str, cond: bool) {
        self.checked += 1;
        if !cond {
            self.failures.push(name.to_string());
        }
    }
}

fn hom_eq(f: &IntMatrix, g: &IntMatrix, tgt: &FinAbGroup) -> bool {
    f.rows() == g.rows() && f.cols() == g.cols() && is_zero_hom(&f.sub(g), tgt)
}

fn well_defined(f: &IntMatrix, src: &FinAbGroup, tgt: &FinAbGroup) -> bool {
    if f.rows() != tgt.ngens() || f.cols() != src.ngens() {
        return false;
    }
    let r = f.dot(&src.relations());
    is_zero_hom(&r, tgt)
}

/// Mackey and Weyl axioms for a C4 Mackey functor of HZ-modules.
pub fn check_axioms(m: &MackeyC4) -> AxiomReport {
    let mut r = AxiomReport::default();
    let (t, md, b) = (&m.top, &m.mid, &m.bot);
    let it = IntMatrix::identity(t.ngens());
    let im = IntMatrix::identity(md.ngens());
    let ib = IntMatrix::identity(b.ngens());
    r.check("res42 well defined", well_defined(&m.res42, t, md));
    r.check("tr42 well defined", well_defined(&m.tr42, md, t));
    r.check("res21 well defined", well_defined(&m.res21, md, b));
    r.check("tr21 well defined", well_defined(&m.tr21, b, md));
    r.check("weyl_mid well defined", well_defined(&m.weyl_mid, md, md));
    r.check("weyl_bot well defined", well_defined(&m.weyl_bot, b, b));
    if !r.ok() {
        return r;
    }
    let two = BigInt::from(2);
    let wm = &m.weyl_mid;
    let wb = &m.weyl_bot;
    let wb2 = wb.dot(wb);
    r.check("weyl_mid^2 = 1", hom_eq(&wm.dot(wm), &im, md));
    r.check("weyl_bot^4 = 1", hom_eq(&wb2.dot(&wb2), &ib, b));
    r.check("tr42 res42 = 2", hom_eq(&m.tr42.dot(&m.res42), &it.scale(&two), t));
    r.check("tr21 res21 = 2", hom_eq(&m.tr21.dot(&m.res21), &im.scale(&two), md));
    r.check("res42 tr42 = 1 + weyl_mid", hom_eq(&m.res42.dot(&m.tr42), &im.add(wm), md));
    r.check("res21 tr21 = 1 + weyl_bot^2", hom_eq(&m.res21.dot(&m.tr21), &ib.add(&wb2), b));
    r.check("weyl_mid res42 = res42", hom_eq(&wm.dot(&m.res42), &m.res42, md));
    r.check("tr42 weyl_mid = tr42", hom_eq(&m.tr42.dot(wm), &m.tr42, t));
    r.check("res21 weyl_mid = weyl_bot res21", hom_eq(&m.res21.dot(wm), &wb.dot(&m.res21), b));
    r.check("tr21 weyl_bot = weyl_mid tr21", hom_eq(&m.tr21.dot(wb), &wm.dot(&m.tr21), md));
    r.check("weyl_bot^2 res21 = res21", hom_eq(&wb2.dot(&m.res21), &m.res21, b));
    r.check("tr21 weyl_bot^2 = tr21", hom_eq(&m.tr21.dot(&wb2), &m.tr21, md));
    r
}

/// Homology of one degree of a Mackey chain complex, with cycle data per level.
#[derive(Clone, Debug)]
pub struct LevelHomology {
    pub functor: MackeyC4,
    pub top: HomologyData,
    pub mid: HomologyData,
    pub bot: HomologyData,
}

impl LevelHomology {
    pub fn data(&self, k: Subgroup) -> &HomologyData {
        match k {
            Subgroup::C4 => &self.top,
            Subgroup::C2 => &self.mid,
            Subgroup::E => &self.bot,
        }
    }
}

pub fn level_homology(c: &MackeyChainComplex, n: i32, k: Subgroup) -> Result<HomologyData, LinError> {
    homology(&c.level_diff(n, k), &c.level_diff(n + 1, k))
}

pub fn homology_of_complex(c: &MackeyChainComplex, n: i32) -> Result<LevelHomology, LinError> {
    let s = c.term(n);
    let top = level_homology(c, n, Subgroup::C4)?;
    let mid = level_homology(c, n, Subgroup::C2)?;
    let bot = level_homology(c, n, Subgroup::E)?;
    let dt = c.level_diff(n, Subgroup::C4);
    let dm = c.level_diff(n, Subgroup::C2);
    let db = c.level_diff(n, Subgroup::E);
    let res42 = induced_map(&restriction_matrix(&s, Subgroup::C4, Subgroup::C2), &top, &mid, &dm)?;
    let tr42 = induced_map(&transfer_matrix(&s, Subgroup::C2, Subgroup::C4), &mid, &top, &dt)?;
    let res21 = induced_map(&restriction_matrix(&s, Subgroup::C2, Subgroup::E), &mid, &bot, &db)?;
    let tr21 = induced_map(&transfer_matrix(&s, Subgroup::E, Subgroup::C2), &bot, &mid, &dm)?;
    let weyl_mid = induced_map(&weyl_matrix(&s, Subgroup::C2), &mid, &mid, &dm)?;
    let weyl_bot = induced_map(&weyl_matrix(&s, Subgroup::E), &bot, &bot, &db)?;
    let functor = MackeyC4 {
        top: top.group.clone(),
        mid: mid.group.clone(),
        bot: bot.group.clone(),
        res42,
        tr42,
        res21,
        tr21,
        weyl_mid,
        weyl_bot,
    };
    Ok(LevelHomology { functor, top, mid, bot })
}

/// The permutation Mackey functor of the orbit `C4/h`.
pub fn permutation_mackey(h: Subgroup) -> MackeyC4 {
    let c = MackeyChainComplex::new(0, vec![GSet::orbit(h)], vec![IntMatrix::zeros(0, 4 / h.order())]);
    homology_of_complex(&c, 0).expect("single term complex").functor
}

/// Builds a functor from scalar data on cyclic levels, used for closed-form answers.
#[allow(clippy::too_many_arguments)]
pub fn cyclic_mackey(
    top: FinAbGroup,
    mid: FinAbGroup,
    bot: FinAbGroup,
    res42: i64,
    tr42: i64,
    res21: i64,
    tr21: i64,
    weyl_mid: i64,
    weyl_bot: i64,
) -> MackeyC4 {
    let scal = |r: &FinAbGroup, c: &FinAbGroup, x: i64| {
        let mut m = IntMatrix::zeros(r.ngens(), c.ngens());
        if r.ngens() == 1 && c.ngens() == 1 {
            m.set(0, 0, BigInt::from(x));
        }
        reduce_hom(&m, r)
    };
    MackeyC4 {
        res42: scal(&mid, &top, res42),
        tr42: scal(&top, &mid, tr42),
        res21: scal(&bot, &mid, res21),
        tr21: scal(&mid, &bot, tr21),
        weyl_mid: scal(&mid, &mid, weyl_mid),
        weyl_bot: scal(&bot, &bot, weyl_bot),
        top,
        mid,
        bot,
    }
}
