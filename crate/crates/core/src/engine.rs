//! Homotopy Mackey functors of HZ computed as Bredon homology of sphere chain complexes.

use crate::chains::{assemble, box_map, identity_map, skeletal_map, sphere_alpha_power, sphere_lambda_power, Degree};
use crate::intlin::{hom_invariants, induced_map, FinAbGroup, HomInvariants, IntMatrix, Lattice, LinError};
use crate::mackey::{check_axioms, homology_of_complex, LevelHomology, MackeyC4, MackeyChainComplex, Subgroup};
use num_bigint::BigInt;
use serde::Serialize;

/// Default limit on the total underlying rank of the three chain groups around degree 0.
pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("degree {degree} needs {needed} cells, budget is {budget}")]
    BudgetExceeded { degree: Degree, needed: usize, budget: usize },
    #[error("linear algebra: {0}")]
    Lin(#[from] LinError),
    #[error("no stable range found for {0} within {1} steps")]
    NoStableRange(Degree, i32),
}

/// The Euler classes available as chain maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EulerGen {
    Alpha,
    Lambda,
}

impl EulerGen {
    pub fn degree(self) -> Degree {
        match self {
            EulerGen::Alpha => Degree::ALPHA,
            EulerGen::Lambda => Degree::LAMBDA,
        }
    }
}

/// Which spectrum a computation refers to: HZ itself or its geometric C4-localization
/// obtained by inverting the Euler class of lambda.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Spectrum {
    H,
    /// HZ with the lambda Euler class inverted, computed at the given stage.
    LambdaLocal { stage: i32 },
}

/// Chain model whose homology in chain degree 0 is `pi_d`.
pub fn model(d: Degree) -> MackeyChainComplex {
    assemble(-d).complex
}

fn truncated_size(c: &MackeyChainComplex) -> usize {
    (-1..=1).map(|n| c.term(n).len()).sum()
}

pub fn homotopy_with_budget(d: Degree, budget: usize) -> Result<LevelHomology, EngineError> {
    let c = model(d);
    let needed = truncated_size(&c);
    if needed > budget {
        return Err(EngineError::BudgetExceeded { degree: d, needed, budget });
    }
    Ok(homology_of_complex(&c, 0)?)
}

/// `pi_d HZ` as a Mackey functor.
pub fn homotopy(d: Degree) -> Result<MackeyC4, EngineError> {
    Ok(homotopy_with_budget(d, DEFAULT_BUDGET)?.functor)
}

/// A homomorphism of Mackey functors, one matrix per level.
#[derive(Clone, Debug)]
pub struct MackeyMap {
    pub src: MackeyC4,
    pub tgt: MackeyC4,
    pub top: IntMatrix,
    pub mid: IntMatrix,
    pub bot: IntMatrix,
}

impl MackeyMap {
    pub fn level(&self, k: Subgroup) -> &IntMatrix {
        match k {
            Subgroup::C4 => &self.top,
            Subgroup::C2 => &self.mid,
            Subgroup::E => &self.bot,
        }
    }

    pub fn top_invariants(&self) -> HomInvariants {
        hom_invariants(&self.top, &self.src.top, &self.tgt.top)
    }
}

fn euler_chain_between(d: Degree, gen: EulerGen) -> (MackeyChainComplex, MackeyChainComplex, crate::chains::ChainMap) {
    // pi_d = H_0(S^{-d}); multiplication by a_V lands in pi_{d-V} = H_0(S^{-d+V}).
    let s = -d;
    let (a0, a1, l0, l1) = match gen {
        EulerGen::Alpha => (
            sphere_alpha_power(s.b),
            sphere_alpha_power(s.b + 1),
            sphere_lambda_power(s.c),
            sphere_lambda_power(s.c),
        ),
        EulerGen::Lambda => (
            sphere_alpha_power(s.b),
            sphere_alpha_power(s.b),
            sphere_lambda_power(s.c),
            sphere_lambda_power(s.c + 1),
        ),
    };
    let fa = match gen {
        EulerGen::Alpha => skeletal_map(&a0.complex, &a1.complex),
        EulerGen::Lambda => identity_map(&a0.complex),
    };
    let fl = match gen {
        EulerGen::Alpha => identity_map(&l0.complex),
        EulerGen::Lambda => skeletal_map(&l0.complex, &l1.complex),
    };
    let f = box_map(&fa, (&a0.complex, &a1.complex), &fl, (&l0.complex, &l1.complex));
    let mut src = crate::chains::box_complex(&a0.complex, &l0.complex);
    let mut tgt = crate::chains::box_complex(&a1.complex, &l1.complex);
    // shift by -a: chain degree n of the box becomes n - a
    let shift = s.a;
    src.min_deg += shift;
    tgt.min_deg += shift;
    let comps = f.components.into_iter().map(|(n, m)| (n + shift, m)).collect();
    (src, tgt, crate::chains::ChainMap { components: comps })
}

/// Multiplication by the Euler class `a_gen`: `pi_d -> pi_{d - gen}` on all three levels.
pub fn euler_action(d: Degree, gen: EulerGen) -> Result<MackeyMap, EngineError> {
    let (src, tgt, f) = euler_chain_between(d, gen);
    let hs = homology_of_complex(&src, 0)?;
    let ht = homology_of_complex(&tgt, 0)?;
    let f0 = f.component(0, &src, &tgt);
    let (s0, t0) = (src.term(0), tgt.term(0));
    let mut mats = vec![];
    for k in Subgroup::ALL {
        let fk = crate::mackey::fixed_matrix(&f0, &s0, &t0, k);
        mats.push(induced_map(&fk, hs.data(k), ht.data(k), &tgt.level_diff(0, k))?);
    }
    let bot = mats.pop().unwrap();
    let mid = mats.pop().unwrap();
    let top = mats.pop().unwrap();
    Ok(MackeyMap { src: hs.functor, tgt: ht.functor, top, mid, bot })
}

/// Image of a given top-level element of `pi_d` under `a_gen`, in coordinates of `pi_{d-gen}`.
pub fn euler_image(d: Degree, gen: EulerGen, x: &[BigInt]) -> Result<Vec<BigInt>, EngineError> {
    let m = euler_action(d, gen)?;
    let mut v = m.top.apply(x);
    m.tgt.top.reduce_vec(&mut v);
    Ok(v)
}

/// `pi_d` of HZ with `a_lambda` inverted, computed as `pi_{d - m lambda} HZ` at the stage `m`
/// after the last step below `max_stage` at which multiplication by `a_lambda` fails to be an
/// isomorphism. Runs of zero groups are not taken as stable.
pub fn lambda_local_stage(d: Degree, max_stage: i32) -> Result<i32, EngineError> {
    let mut last_bad = -1;
    for m in 0..max_stage {
        let inv = euler_action(d - m * Degree::LAMBDA, EulerGen::Lambda)?.top_invariants();
        if !(inv.kernel.is_zero() && inv.cokernel.is_zero()) {
            last_bad = m;
        }
    }
    if last_bad + 1 + LOCAL_STABLE_RUN > max_stage {
        return Err(EngineError::NoStableRange(d, max_stage));
    }
    Ok(last_bad + 1)
}

const LOCAL_STABLE_RUN: i32 = 8;

/// One group of a tower with the Euler map into the previous one.
#[derive(Clone, Debug, Serialize)]
pub struct TowerStep {
    pub degree: Degree,
    pub group: String,
    /// Kernel, image and cokernel of `a_gen` from this group to the previous step.
    pub map_kernel: Option<String>,
    pub map_image: Option<String>,
    pub map_cokernel: Option<String>,
    /// The map as a scalar when both groups are cyclic.
    pub map_scalar: Option<i64>,
}

/// The groups `pi_{d + k gen}` (top level) for `k = 0..=len` with the Euler maps
/// `pi_{d+(k+1)gen} -> pi_{d+k gen}`.
pub fn tower(d: Degree, gen: EulerGen, len: usize, spectrum: Spectrum) -> Result<Vec<TowerStep>, EngineError> {
    let shift = match spectrum {
        Spectrum::H => Degree::ZERO,
        Spectrum::LambdaLocal { stage } => -stage * Degree::LAMBDA,
    };
    let mut out = vec![];
    for k in 0..=len as i32 {
        let deg = d + k * gen.degree();
        let g = homotopy(deg + shift)?.top;
        let mut step = TowerStep {
            degree: deg,
            group: g.notation(),
            map_kernel: None,
            map_image: None,
            map_cokernel: None,
            map_scalar: None,
        };
        if k > 0 {
            let m = euler_action(deg + shift, gen)?;
            let inv = m.top_invariants();
            step.map_kernel = Some(inv.kernel.notation());
            step.map_image = Some(inv.image.notation());
            step.map_cokernel = Some(inv.cokernel.notation());
            step.map_scalar = cyclic_scalar(&m.top, &m.src.top, &m.tgt.top);
        }
        out.push(step);
    }
    Ok(out)
}

/// For a map between cyclic groups, the smallest positive multiplier `s` with image generated
/// by `s` times the target generator; 0 for the zero map.
pub fn cyclic_scalar(f: &IntMatrix, a: &FinAbGroup, b: &FinAbGroup) -> Option<i64> {
    if a.ngens() != 1 || b.ngens() != 1 {
        return if a.is_zero() || b.is_zero() { Some(0) } else { None };
    }
    let inv = hom_invariants(f, a, b);
    if inv.image.is_zero() {
        return Some(0);
    }
    // index of the image in the target
    let index = match (&b.free, inv.cokernel.torsion.first()) {
        _ if inv.cokernel.is_zero() => 1,
        (_, Some(t)) => i64::try_from(t.clone()).ok()?,
        _ => return None,
    };
    Some(index)
}

/// Outcome of the kernel/image comparison at one degree.
#[derive(Clone, Debug, Serialize)]
pub struct KerImReport {
    pub degree: Degree,
    pub ker_alpha_is_im_tr: bool,
    pub im_alpha_is_ker_res: bool,
}

impl KerImReport {
    pub fn ok(&self) -> bool {
        self.ker_alpha_is_im_tr && self.im_alpha_is_ker_res
    }
}

// Subgroup of the top level as a lattice in the coordinate cover, relations included.
fn subgroup_lattice(g: &FinAbGroup, gens: &IntMatrix) -> Lattice {
    Lattice::span(g.ngens(), &gens.hstack(&g.relations()))
}

fn kernel_lattice(f: &IntMatrix, a: &FinAbGroup, b: &FinAbGroup) -> Lattice {
    let fr = f.hstack(&b.relations());
    let k = crate::intlin::kernel(&fr);
    let idx: Vec<usize> = (0..a.ngens()).collect();
    subgroup_lattice(a, &k.select_rows(&idx))
}

/// At the top level of `pi_d`: `ker(a_alpha) = im(tr)` and `im(a_alpha) = ker(res)`.
pub fn verify_ker_im(d: Degree) -> Result<KerImReport, EngineError> {
    let out = euler_action(d, EulerGen::Alpha)?;
    let into = euler_action(d + Degree::ALPHA, EulerGen::Alpha)?;
    let m = &out.src;
    let ker_a = kernel_lattice(&out.top, &m.top, &out.tgt.top);
    let im_tr = subgroup_lattice(&m.top, &m.tr42);
    let im_a = subgroup_lattice(&m.top, &into.top);
    let ker_res = kernel_lattice(&m.res42, &m.top, &m.mid);
    Ok(KerImReport { degree: d, ker_alpha_is_im_tr: ker_a.same_as(&im_tr), im_alpha_is_ker_res: im_a.same_as(&ker_res) })
}

/// Runs `f` over a list of degrees, in parallel when the `parallel` feature is on.
pub fn sweep<T, F>(degrees: &[Degree], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Degree) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        degrees.par_iter().map(|&d| f(d)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(degrees, f)
    }
}

pub fn sweep_sequential<T, F>(degrees: &[Degree], f: F) -> Vec<T>
where
    F: Fn(Degree) -> T,
{
    degrees.iter().map(|&d| f(d)).collect()
}

/// Sets the worker count for parallel sweeps. Has no effect without the `parallel` feature.
pub fn configure_jobs(jobs: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
    }
}

/// Axiom check of the engine answer at one degree.
pub fn axioms_hold(d: Degree) -> Result<bool, EngineError> {
    Ok(check_axioms(&homotopy(d)?).ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn top(d: Degree) -> String {
        homotopy(d).unwrap().top.notation()
    }

    #[test]
    fn zero_stem_is_constant_functor() {
        let m = homotopy(Degree::ZERO).unwrap();
        assert_eq!(m.levels_notation(), "Z | Z | Z");
        assert_eq!(cyclic_scalar(&m.res42, &m.top, &m.mid), Some(1));
        assert_eq!(cyclic_scalar(&m.tr42, &m.mid, &m.top), Some(2));
    }

    #[test]
    fn euler_class_groups() {
        assert_eq!(top(Degree::new(0, -1, 0)), "Z/2");
        let m = homotopy(Degree::new(0, 0, -1)).unwrap();
        assert_eq!(m.levels_notation(), "Z/4 | Z/2 | 0");
        assert_eq!(cyclic_scalar(&m.res42, &m.top, &m.mid), Some(1));
        assert_eq!(top(Degree::new(1, 0, 0)), "0");
    }

    #[test]
    fn orientation_classes() {
        let m = homotopy(Degree::new(2, 0, -1)).unwrap();
        assert_eq!(m.levels_notation(), "Z | Z | Z");
        assert_eq!(cyclic_scalar(&m.res42, &m.top, &m.mid), Some(1));
        assert_eq!(cyclic_scalar(&m.tr42, &m.mid, &m.top), Some(2));
        let m = homotopy(Degree::new(-2, 0, 1)).unwrap();
        assert_eq!(cyclic_scalar(&m.res42, &m.top, &m.mid), Some(2));
    }

    #[test]
    fn weyl_acts_by_sign_on_odd_alpha_classes() {
        let m = homotopy(Degree::new(-1, 1, 0)).unwrap();
        assert_eq!(m.mid, FinAbGroup::z());
        assert_eq!(m.weyl_mid, IntMatrix::from_rows(&[vec![-1]]));
    }

    #[test]
    fn euler_map_out_of_unit() {
        let e = euler_action(Degree::ZERO, EulerGen::Alpha).unwrap();
        assert_eq!(e.tgt.top.notation(), "Z/2");
        assert!(e.top_invariants().cokernel.is_zero());
    }

    #[test]
    fn lambda_local_skips_zero_runs() {
        let d = Degree::new(-2, 8, 0);
        let m = lambda_local_stage(d, 24).unwrap();
        assert_eq!(m, 4);
        assert_eq!(top(d - m * Degree::LAMBDA), "Z/4");
    }

    #[test]
    fn budget_is_enforced() {
        let err = homotopy_with_budget(Degree::new(0, 3, 3), 5).unwrap_err();
        assert!(matches!(err, EngineError::BudgetExceeded { .. }));
    }
}
