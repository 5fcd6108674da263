//! Exact integer linear algebra: Smith normal form, homology, finitely generated abelian groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("map does not commute with differentials")]
    NotChainMap,
}

/// Dense row-major matrix over Z.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn scalar(n: usize, c: i64) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::from(c);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = BigInt::from(x);
            }
        }
        m
    }

    /// Builds an `rows x cols` matrix from a column list.
    pub fn from_cols(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_i64(&self, i: usize, j: usize) -> Option<i64> {
        self.get(i, j).to_i64()
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &BigInt) {
        self.data[i * self.cols + j] += v;
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinError> {
        if self.cols != other.rows {
            return Err(LinError::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Panicking product for internal use where shapes are known.
    pub fn dot(&self, other: &IntMatrix) -> IntMatrix {
        self.mul(other).expect("matrix shapes")
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        s += self.get(i, j) * x;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        let data = self.data.iter().map(|a| a * c).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(idx.len(), self.cols);
        for (r, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m.set(r, j, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        let mut m = Self::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (c, &j) in idx.iter().enumerate() {
                m.set(i, c, self.get(i, j).clone());
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    // row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] += v;
        }
    }

    // col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -&self.data[i * self.cols + c];
            self.data[i * self.cols + c] = v;
        }
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<serde_json::Value> = self.row(i).iter().map(big_to_json).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<serde_json::Value>> = Vec::deserialize(d)?;
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(de::Error::custom("ragged matrix"));
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, json_to_big(v).map_err(de::Error::custom)?);
            }
        }
        Ok(m)
    }
}

pub(crate) fn big_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

pub(crate) fn json_to_big(v: &serde_json::Value) -> Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("non-integer entry {n}")),
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("bad integer {s}")),
        other => Err(format!("bad matrix entry {other}")),
    }
}

/// `u * m * v = s` with `s` diagonal, `s[i][i] | s[i+1][i+1]`, all diagonal entries nonnegative.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s.get(i, i).clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (r, c) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut v_inv = IntMatrix::identity(c);

    // Row op E on s: s <- E s, u <- E u, u_inv <- u_inv E^-1.
    // Col op F on s: s <- s F, v <- v F, v_inv <- F^-1 v_inv.
    let mut t = 0;
    while t < r.min(c) {
        // pivot of minimal absolute value
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = s.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..r {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = s.get(i, t).div_floor(s.get(t, t));
                let nq = -&q;
                s.add_row(i, t, &nq);
                u.add_row(i, t, &nq);
                u_inv.add_col(t, i, &q);
                if !s.get(i, t).is_zero() {
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    u_inv.swap_cols(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..c {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = s.get(t, j).div_floor(s.get(t, t));
                let nq = -&q;
                s.add_col(j, t, &nq);
                v.add_col(j, t, &nq);
                v_inv.add_row(t, j, &q);
                if !s.get(t, j).is_zero() {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    v_inv.swap_rows(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the remaining block
            let p = s.get(t, t).clone();
            let mut fix = None;
            'outer: for i in t + 1..r {
                for j in t + 1..c {
                    if !s.get(i, j).is_multiple_of(&p) {
                        fix = Some(i);
                        break 'outer;
                    }
                }
            }
            match fix {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                    u_inv.add_col(i, t, &-one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        t += 1;
    }
    Snf { s, u, u_inv, v, v_inv, rank: t }
}

/// A finitely generated abelian group `Z^free + sum Z/torsion[i]`, torsion orders > 1 and
/// ordered so that each divides the next.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FinAbGroup {
    pub free: usize,
    pub torsion: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn zero() -> Self {
        FinAbGroup::default()
    }

    pub fn z() -> Self {
        FinAbGroup { free: 1, torsion: vec![] }
    }

    pub fn cyclic(n: i64) -> Self {
        match n {
            0 => Self::z(),
            1 | -1 => Self::zero(),
            n => FinAbGroup { free: 0, torsion: vec![BigInt::from(n.abs())] },
        }
    }

    pub fn new(free: usize, torsion: &[i64]) -> Self {
        let mut g = FinAbGroup { free, torsion: vec![] };
        for &t in torsion {
            assert!(t > 1);
            g.torsion.push(BigInt::from(t));
        }
        g.canonical()
    }

    /// Recomputes invariant factors from an arbitrary list of cyclic orders.
    pub fn canonical(self) -> Self {
        let n = self.torsion.len();
        if n == 0 {
            return self;
        }
        let mut m = IntMatrix::zeros(n, n);
        for (i, t) in self.torsion.iter().enumerate() {
            m.set(i, i, t.clone());
        }
        let mut g = from_relations(&m);
        g.free += self.free;
        g
    }

    pub fn is_zero(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }

    /// Number of coordinates: torsion coordinates first, then free ones.
    pub fn ngens(&self) -> usize {
        self.torsion.len() + self.free
    }

    /// Order of coordinate `i`, zero meaning infinite.
    pub fn order(&self, i: usize) -> BigInt {
        if i < self.torsion.len() {
            self.torsion[i].clone()
        } else {
            BigInt::zero()
        }
    }

    pub fn reduce(&self, i: usize, x: &BigInt) -> BigInt {
        let o = self.order(i);
        if o.is_zero() {
            x.clone()
        } else {
            x.mod_floor(&o)
        }
    }

    pub fn reduce_vec(&self, v: &mut [BigInt]) {
        for (i, x) in v.iter_mut().enumerate() {
            *x = self.reduce(i, x);
        }
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut t = self.torsion.clone();
        t.extend(other.torsion.iter().cloned());
        FinAbGroup { free: self.free + other.free, torsion: t }.canonical()
    }

    /// Relation lattice generators as columns (one per torsion coordinate).
    pub fn relations(&self) -> IntMatrix {
        let n = self.ngens();
        let k = self.torsion.len();
        let mut m = IntMatrix::zeros(n, k);
        for i in 0..k {
            m.set(i, i, self.torsion[i].clone());
        }
        m
    }

    /// Conventional notation such as `Z+Z/2`, `0`.
    pub fn notation(&self) -> String {
        let mut parts = vec![];
        for _ in 0..self.free {
            parts.push("Z".to_string());
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

impl Serialize for FinAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let t: Vec<serde_json::Value> = self.torsion.iter().map(big_to_json).collect();
        serde_json::json!({"free": self.free, "torsion": t}).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinAbGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            free: usize,
            torsion: Vec<serde_json::Value>,
        }
        let raw = Raw::deserialize(d)?;
        let mut torsion = vec![];
        for v in &raw.torsion {
            torsion.push(json_to_big(v).map_err(de::Error::custom)?);
        }
        Ok(FinAbGroup { free: raw.free, torsion })
    }
}

/// Cokernel of a relation matrix: `Z^rows / col-span(m)`.
pub fn from_relations(m: &IntMatrix) -> FinAbGroup {
    let snf = smith_normal_form(m);
    let torsion = snf.diagonal().into_iter().filter(|d| !d.is_one()).collect();
    FinAbGroup { free: m.rows - snf.rank, torsion }
}

/// Homology `ker(d_out) / im(d_in)` together with generators and a cycle projection.
#[derive(Clone, Debug)]
pub struct HomologyData {
    pub group: FinAbGroup,
    /// Ambient chain rank.
    pub dim: usize,
    /// Cycle representatives of the group coordinates, as columns.
    pub generators: IntMatrix,
    /// `projection * z` gives the coordinates of a cycle `z`, before reduction.
    pub projection: IntMatrix,
}

impl HomologyData {
    pub fn class_of(&self, z: &[BigInt]) -> Vec<BigInt> {
        let mut v = self.projection.apply(z);
        self.group.reduce_vec(&mut v);
        v
    }

    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        self.generators.col(i)
    }
}

/// `d_out: C_n -> C_{n-1}` and `d_in: C_{n+1} -> C_n`.
pub fn homology(d_out: &IntMatrix, d_in: &IntMatrix) -> Result<HomologyData, LinError> {
    let n = d_out.cols;
    if d_in.rows != n {
        return Err(LinError::Shape(format!("d_in has {} rows, C_n has rank {n}", d_in.rows)));
    }
    if !d_out.dot(d_in).is_zero() {
        return Err(LinError::Shape("d_out * d_in != 0".into()));
    }
    let s1 = smith_normal_form(d_out);
    let r = s1.rank;
    let k = n - r;
    let kidx: Vec<usize> = (r..n).collect();
    let kernel = s1.v.select_cols(&kidx);
    let to_kernel = s1.v_inv.select_rows(&kidx);
    let x = to_kernel.dot(d_in);
    let s2 = smith_normal_form(&x);
    let diag = s2.diagonal();
    let mut keep = vec![];
    let mut torsion = vec![];
    for (i, d) in diag.iter().enumerate() {
        if !d.is_one() {
            keep.push(i);
            torsion.push(d.clone());
        }
    }
    keep.extend(s2.rank..k);
    let gens = kernel.dot(&s2.u_inv).select_cols(&keep);
    let proj = s2.u.dot(&to_kernel).select_rows(&keep);
    Ok(HomologyData {
        group: FinAbGroup { free: k - s2.rank, torsion },
        dim: n,
        generators: gens,
        projection: proj,
    })
}

/// Induced map on homology of a chain-level map `f: C_n -> C'_n`, as a matrix from source
/// coordinates to target coordinates.
pub fn induced_map(
    f: &IntMatrix,
    src: &HomologyData,
    tgt: &HomologyData,
    tgt_d_out: &IntMatrix,
) -> Result<IntMatrix, LinError> {
    if f.cols != src.dim || f.rows != tgt.dim {
        return Err(LinError::Shape("chain map does not match homology data".into()));
    }
    let img = f.dot(&src.generators);
    if !tgt_d_out.dot(&img).is_zero() {
        return Err(LinError::NotChainMap);
    }
    let mut m = tgt.projection.dot(&img);
    for i in 0..m.rows {
        for j in 0..m.cols {
            let v = tgt.group.reduce(i, m.get(i, j));
            m.set(i, j, v);
        }
    }
    // well defined on torsion of the source
    for (j, o) in src.group.torsion.iter().enumerate() {
        let col: Vec<BigInt> = (0..m.rows).map(|i| m.get(i, j) * o).collect();
        if !is_zero_in(&tgt.group, &col) {
            return Err(LinError::NotChainMap);
        }
    }
    Ok(m)
}

pub fn is_zero_in(g: &FinAbGroup, v: &[BigInt]) -> bool {
    v.iter().enumerate().all(|(i, x)| g.reduce(i, x).is_zero())
}

/// A sublattice of `Z^n` given by a basis (columns), used for subgroup comparisons.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub n: usize,
    snf: Snf,
}

impl Lattice {
    pub fn span(n: usize, gens: &IntMatrix) -> Lattice {
        assert_eq!(gens.rows, n);
        Lattice { n, snf: smith_normal_form(gens) }
    }

    pub fn rank(&self) -> usize {
        self.snf.rank
    }

    /// Coordinates in the lattice basis `u_inv[:, i] * s_i`, if `v` lies in the lattice.
    pub fn coords(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let w = self.snf.u.apply(v);
        let mut out = vec![];
        for (i, x) in w.iter().enumerate() {
            if i < self.snf.rank {
                let (q, rem) = x.div_rem(self.snf.s.get(i, i));
                if !rem.is_zero() {
                    return None;
                }
                out.push(q);
            } else if !x.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_all(&self, gens: &IntMatrix) -> bool {
        (0..gens.cols).all(|j| self.contains(&gens.col(j)))
    }

    pub fn basis(&self) -> IntMatrix {
        let mut cols = vec![];
        for i in 0..self.snf.rank {
            let c: Vec<BigInt> =
                self.snf.u_inv.col(i).iter().map(|x| x * self.snf.s.get(i, i)).collect();
            cols.push(c);
        }
        IntMatrix::from_cols(self.n, &cols)
    }

    pub fn same_as(&self, other: &Lattice) -> bool {
        self.n == other.n
            && self.rank() == other.rank()
            && self.contains_all(&other.basis())
            && other.contains_all(&self.basis())
    }
}

/// `L / M` for lattices `M <= L <= Z^n` given by generators.
pub fn lattice_quotient(n: usize, l: &IntMatrix, m: &IntMatrix) -> FinAbGroup {
    let big = Lattice::span(n, l);
    let mut cols = vec![];
    for j in 0..m.cols {
        cols.push(big.coords(&m.col(j)).expect("sublattice not contained"));
    }
    let rel = IntMatrix::from_cols(big.rank(), &cols);
    from_relations(&rel)
}

/// Integer kernel of `m`, as columns.
pub fn kernel(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let idx: Vec<usize> = (s.rank..m.cols).collect();
    s.v.select_cols(&idx)
}

/// Isomorphism invariants of a homomorphism `A -> B` given in group coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomInvariants {
    pub kernel: FinAbGroup,
    pub image: FinAbGroup,
    pub cokernel: FinAbGroup,
}

pub fn hom_invariants(f: &IntMatrix, a: &FinAbGroup, b: &FinAbGroup) -> HomInvariants {
    let na = a.ngens();
    let nb = b.ngens();
    assert_eq!((f.rows, f.cols), (nb, na), "hom shape");
    let rb = b.relations();
    let fr = f.hstack(&rb);
    let cokernel = from_relations(&fr);
    // x with f x in R_B
    let ker_full = kernel(&fr);
    let idx: Vec<usize> = (0..na).collect();
    let k_lift = ker_full.select_rows(&idx);
    let ra = a.relations();
    let k_all = k_lift.hstack(&ra);
    let kernel_g = lattice_quotient(na, &k_all, &ra);
    let image = lattice_quotient(na, &IntMatrix::identity(na), &k_all);
    HomInvariants { kernel: kernel_g, image, cokernel }
}

/// Whether `f: A -> B` is the zero homomorphism.
pub fn is_zero_hom(f: &IntMatrix, b: &FinAbGroup) -> bool {
    (0..f.cols).all(|j| is_zero_in(b, &f.col(j)))
}

/// Reduces every entry of a hom matrix modulo the target's coordinate orders.
pub fn reduce_hom(f: &IntMatrix, b: &FinAbGroup) -> IntMatrix {
    let mut m = f.clone();
    for i in 0..m.rows {
        for j in 0..m.cols {
            let v = b.reduce(i, m.get(i, j));
            m.set(i, j, v);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // Invariant factors via gcds of k-minors (determinantal divisors), brute force.
    fn oracle_invariant_factors(m: &[Vec<i64>]) -> Vec<i64> {
        let r = m.len();
        let c = if r == 0 { 0 } else { m[0].len() };
        fn det(m: &[Vec<i64>]) -> i64 {
            let n = m.len();
            if n == 0 {
                return 1;
            }
            let mut s = 0;
            for j in 0..n {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                s += sign * m[0][j] * det(&minor);
            }
            s
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let mut divisors = vec![1i64];
        for k in 1..=r.min(c) {
            let mut g = 0i64;
            for rs in subsets(r, k) {
                for cs in subsets(c, k) {
                    let sub: Vec<Vec<i64>> =
                        rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                    g = g.gcd(&det(&sub));
                }
            }
            if g == 0 {
                break;
            }
            divisors.push(g);
        }
        divisors.windows(2).map(|w| w[1] / w[0]).collect()
    }

    #[test]
    fn snf_small_example() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal(), big(&[2, 4]));
        assert_eq!(s.u.dot(&m).dot(&s.v), s.s);
    }

    #[test]
    fn snf_zero_and_empty() {
        let s = smith_normal_form(&IntMatrix::zeros(3, 2));
        assert_eq!(s.rank, 0);
        let s = smith_normal_form(&IntMatrix::zeros(0, 4));
        assert_eq!(s.rank, 0);
        assert_eq!(s.v.rows(), 4);
    }

    #[test]
    fn homology_of_cyclic_resolution_piece() {
        // Z --4--> Z with nothing coming in: cokernel side is H of the target.
        let d_out = IntMatrix::zeros(0, 1);
        let d_in = IntMatrix::from_rows(&[vec![4]]);
        let h = homology(&d_out, &d_in).unwrap();
        assert_eq!(h.group, FinAbGroup::cyclic(4));
        assert_eq!(h.class_of(&big(&[5])), big(&[1]));
    }

    #[test]
    fn hom_invariants_basic() {
        // Z/4 -> Z/2 reduction
        let a = FinAbGroup::cyclic(4);
        let b = FinAbGroup::cyclic(2);
        let f = IntMatrix::from_rows(&[vec![1]]);
        let h = hom_invariants(&f, &a, &b);
        assert_eq!(h.kernel, FinAbGroup::cyclic(2));
        assert_eq!(h.image, FinAbGroup::cyclic(2));
        assert!(h.cokernel.is_zero());
        // Z -> Z times 2
        let z = FinAbGroup::z();
        let h = hom_invariants(&IntMatrix::from_rows(&[vec![2]]), &z, &z);
        assert!(h.kernel.is_zero());
        assert_eq!(h.image, z);
        assert_eq!(h.cokernel, FinAbGroup::cyclic(2));
        // Z/2 -> Z/4 times 2
        let h = hom_invariants(&IntMatrix::from_rows(&[vec![2]]), &b, &a);
        assert!(h.kernel.is_zero());
        assert_eq!(h.cokernel, FinAbGroup::cyclic(2));
    }

    #[test]
    fn canonical_group_merges_coprime() {
        assert_eq!(FinAbGroup::new(0, &[2, 3]), FinAbGroup::cyclic(6));
        assert_eq!(FinAbGroup::new(1, &[2, 2]).notation(), "Z+Z/2+Z/2");
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-9i64..10, c), r)
        })
    }

    proptest! {
        #[test]
        fn snf_transform_identity(rows in small_matrix()) {
            let m = IntMatrix::from_rows(&rows);
            let s = smith_normal_form(&m);
            prop_assert_eq!(s.u.dot(&m).dot(&s.v), s.s.clone());
            prop_assert_eq!(s.u.dot(&s.u_inv), IntMatrix::identity(m.rows()));
            prop_assert_eq!(s.v.dot(&s.v_inv), IntMatrix::identity(m.cols()));
            let d = s.diagonal();
            for w in d.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            let want: Vec<BigInt> = oracle_invariant_factors(&rows).into_iter().map(BigInt::from).collect();
            prop_assert_eq!(d, want);
        }

        #[test]
        fn homology_rank_count(rows in small_matrix()) {
            // H of 0 -> Z^c -> Z^r -> 0 at the source is the kernel.
            let m = IntMatrix::from_rows(&rows);
            let h = homology(&m, &IntMatrix::zeros(m.cols(), 0)).unwrap();
            let rank = smith_normal_form(&m).rank;
            prop_assert_eq!(h.group.free, m.cols() - rank);
            prop_assert!(m.dot(&h.generators).is_zero());
        }

        #[test]
        fn cokernel_projection_consistent(rows in small_matrix()) {
            let m = IntMatrix::from_rows(&rows);
            let h = homology(&IntMatrix::zeros(0, m.rows()), &m).unwrap();
            for j in 0..m.cols() {
                prop_assert!(h.class_of(&m.col(j)).iter().all(|x| x.is_zero()));
            }
            for i in 0..h.group.ngens() {
                let mut e = vec![BigInt::zero(); h.group.ngens()];
                e[i] = BigInt::one();
                prop_assert_eq!(h.class_of(&h.generator(i)), e);
            }
        }
    }
}
