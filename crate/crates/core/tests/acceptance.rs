//! Acceptance suite: one PASS/FAIL line per criterion. Expected values are written out here
//! independently of the library.

use c4hz::chains::Degree;
use c4hz::closedform::{self, *};
use c4hz::engine::{self, cyclic_scalar, euler_image, homotopy, sweep, EulerGen, Spectrum};
use c4hz::groupcoh::{self, CoeffModule};
use c4hz::intlin::FinAbGroup;
use c4hz::mackey::{check_axioms, compare, differences, MackeyC4, Subgroup};
use num_bigint::BigInt;
use rand::prelude::*;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn g(s: &str) -> FinAbGroup {
    match s {
        "0" => FinAbGroup::zero(),
        "Z" => FinAbGroup::z(),
        "Z+Z/2" => FinAbGroup::new(1, &[2]),
        _ => FinAbGroup::cyclic(s.trim_start_matches("Z/").parse().unwrap()),
    }
}

fn fail_list(what: &str, bad: Vec<String>) -> Outcome {
    if bad.is_empty() {
        Ok(what.to_string())
    } else {
        let shown: Vec<_> = bad.iter().take(5).cloned().collect();
        Err(format!("{} failures, e.g. {}", bad.len(), shown.join("; ")))
    }
}

fn full_window() -> Outcome {
    let ds = Degree::default_window();
    let t = Instant::now();
    let bad: Vec<String> = sweep(&ds, |d| match homotopy(d) {
        Ok(e) => {
            let c = mackey_at(d);
            (!compare(&e, &c)).then(|| format!("{d} differs on {:?}", differences(&e, &c)))
        }
        Err(e) => Some(format!("{d}: {e}")),
    })
    .into_iter()
    .flatten()
    .collect();
    let el = t.elapsed();
    if el > Duration::from_secs(600) {
        return Err(format!("took {el:?}"));
    }
    fail_list(&format!("{} degrees agree in {:.1}s", ds.len(), el.as_secs_f64()), bad)
}

struct Fixture {
    d: Degree,
    top: &'static str,
    mid: Option<&'static str>,
    bot: Option<&'static str>,
    res42: Option<i64>,
    tr42: Option<i64>,
    names: &'static [&'static str],
}

const fn fx(d: Degree, top: &'static str, names: &'static [&'static str]) -> Fixture {
    Fixture { d, top, mid: None, bot: None, res42: None, tr42: None, names }
}

fn check_fixture(f: &Fixture, m: &MackeyC4, who: &str) -> Vec<String> {
    let mut bad = vec![];
    let mut expect = |what: &str, ok: bool| {
        if !ok {
            bad.push(format!("{who} {} {what}", f.d));
        }
    };
    expect("top", m.top == g(f.top));
    if let Some(x) = f.mid {
        expect("mid", m.mid == g(x));
    }
    if let Some(x) = f.bot {
        expect("bot", m.bot == g(x));
    }
    if let Some(s) = f.res42 {
        let v = if s < 0 { cyclic_scalar(&m.res42, &m.top, &m.mid).is_some_and(|v| v != 0) } else { cyclic_scalar(&m.res42, &m.top, &m.mid) == Some(s) };
        expect("res42", v);
    }
    if let Some(s) = f.tr42 {
        expect("tr42", cyclic_scalar(&m.tr42, &m.mid, &m.top) == Some(s));
    }
    bad
}

fn fixtures() -> Outcome {
    let mut list = vec![
        Fixture { mid: Some("Z"), bot: Some("Z"), ..fx(Degree::new(0, 0, 0), "Z", &["1"]) },
        fx(Degree::new(0, -1, 0), "Z/2", &["aa"]),
        // res42 nonzero
        Fixture { res42: Some(-1), ..fx(Degree::new(0, 0, -1), "Z/4", &["al"]) },
        Fixture { mid: Some("Z"), bot: Some("Z"), res42: Some(1), tr42: Some(2), ..fx(Degree::new(2, 0, -1), "Z", &["ul"]) },
        Fixture { res42: Some(2), ..fx(Degree::new(-2, 0, 1), "Z", &["4ul^-1"]) },
        Fixture { res42: Some(0), tr42: Some(1), ..fx(Degree::new(-3, 3, 0), "Z/2", &["tr(e3a)"]) },
        fx(Degree::new(0, 2, -1), "Z", &[]),
        fx(Degree::new(0, -2, 1), "Z", &[]),
    ];
    // degrees of 4 (u_2a/u_l)^k u_2a^i
    for k in 2..=4 {
        for i in 0..=2 {
            if k + i <= 5 {
                list.push(fx(Degree::new(2 * i, -2 * k - 2 * i, k), "Z+Z/2", &[]));
            }
        }
    }
    let mut bad = vec![];
    for f in &list {
        match homotopy(f.d) {
            Ok(m) => bad.extend(check_fixture(f, &m, "engine")),
            Err(e) => bad.push(format!("{}: {e}", f.d)),
        }
        bad.extend(check_fixture(f, &mackey_at(f.d), "closedform"));
        let names: Vec<String> = top_basis(f.d).iter().map(|c| c.name()).collect();
        for n in f.names {
            if !names.iter().any(|x| x == n) {
                bad.push(format!("{} lacks generator {n}: {names:?}", f.d));
            }
        }
    }
    fail_list(&format!("{} fixture degrees on both sides", list.len()), bad)
}

fn ker_im() -> Outcome {
    let ds = Degree::default_window();
    let bad = sweep(&ds, |d| match engine::verify_ker_im(d) {
        Ok(r) if r.ok() => None,
        Ok(r) => Some(format!("{d}: ker=im(tr) {} im=ker(res) {}", r.ker_alpha_is_im_tr, r.im_alpha_is_ker_res)),
        Err(e) => Some(format!("{d}: {e}")),
    })
    .into_iter()
    .flatten()
    .collect();
    fail_list(&format!("{} degrees", ds.len()), bad)
}

fn gold() -> Outcome {
    let run = || -> Result<(Vec<BigInt>, Vec<BigInt>, FinAbGroup), engine::EngineError> {
        let u_l = Degree::new(2, 0, -1);
        let u_2a = Degree::new(2, -2, 0);
        let one = vec![BigInt::from(1)];
        let l1 = euler_image(u_l, EulerGen::Alpha, &one)?;
        let l2 = euler_image(u_l - Degree::ALPHA, EulerGen::Alpha, &l1)?;
        let r = euler_image(u_2a, EulerGen::Lambda, &one)?;
        Ok((l2, r, homotopy(Degree::new(2, -2, -1))?.top))
    };
    let (l, r, target) = run().map_err(|e| e.to_string())?;
    let diff = |s: i64| -> bool {
        let v: Vec<BigInt> = l.iter().zip(&r).map(|(x, y)| x - BigInt::from(2 * s) * y).collect();
        c4hz::intlin::is_zero_in(&target, &v)
    };
    let nonzero = !c4hz::intlin::is_zero_in(&target, &l);
    if nonzero && (diff(1) || diff(-1)) {
        Ok(format!("a_a^2 u_l = {}2 a_l u_2a != 0 in {}", if diff(1) { "" } else { "-" }, target))
    } else {
        Err(format!("a_a^2 u_l = {l:?}, a_l u_2a = {r:?} in {target}"))
    }
}

fn towers() -> Outcome {
    let run = |d: Degree| -> Result<Vec<engine::TowerStep>, engine::EngineError> {
        let mut stage = 0;
        for k in 0..=6 {
            stage = stage.max(engine::lambda_local_stage(d + k * Degree::ALPHA, 40)?);
        }
        engine::tower(d, EulerGen::Alpha, 6, Spectrum::LambdaLocal { stage })
    };
    let drb = run(Degree::new(-2, 2, 0)).map_err(|e| e.to_string())?;
    let b2 = run(Degree::new(-3, 2, 0)).map_err(|e| e.to_string())?;
    let groups = |t: &[engine::TowerStep]| t.iter().map(|s| s.group.clone()).collect::<Vec<_>>();
    let maps = |t: &[engine::TowerStep]| t.iter().skip(1).map(|s| s.map_scalar).collect::<Vec<_>>();
    let mut bad = vec![];
    if groups(&drb)[..4] != ["Z/2", "Z/2", "Z/4", "Z/2"] || maps(&drb)[..3] != [Some(1), Some(1), Some(2)] {
        bad.push(format!("drb groups {:?} maps {:?}", groups(&drb), maps(&drb)));
    }
    let b2_groups = groups(&b2);
    let b2_isos = b2.iter().skip(2).all(|s| s.map_kernel.as_deref() == Some("0") && s.map_cokernel.as_deref() == Some("0"));
    if b2_groups[0] != "0" || b2_groups[1..].iter().any(|x| x != "Z/2") || maps(&b2)[0] != Some(0) || !b2_isos {
        bad.push(format!("b^2 groups {b2_groups:?} maps {:?}", maps(&b2)));
    }
    fail_list(&format!("drb {:?} / {:?}, b^2 {:?}", groups(&drb), maps(&drb), b2_groups), bad)
}

fn group_cohomology() -> Outcome {
    let mut bad = vec![];
    for q in 0..=10usize {
        let z = match q {
            0 => g("Z"),
            _ if q % 2 == 0 => g("Z/4"),
            _ => g("0"),
        };
        let zt = if q % 2 == 1 { g("Z/2") } else { g("0") };
        if groupcoh::cohomology(4, CoeffModule::Z, q).unwrap() != z {
            bad.push(format!("H^{q}(Z)"));
        }
        if groupcoh::cohomology(4, CoeffModule::ZTilde, q).unwrap() != zt {
            bad.push(format!("H^{q}(Z~)"));
        }
    }
    for p in (0..=10).step_by(2) {
        for q in (0..=10 - p).step_by(2) {
            if !groupcoh::cup(4, p, q, CoeffModule::Z, CoeffModule::Z).unwrap().is_surjective() {
                bad.push(format!("x^{} x^{} not onto", p / 2, q / 2));
            }
        }
        if p < 10 && !groupcoh::cup(4, p, 1, CoeffModule::Z, CoeffModule::ZTilde).unwrap().is_iso() {
            bad.push(format!("x^{} y not iso", p / 2));
        }
    }
    let yy = groupcoh::cup(4, 1, 1, CoeffModule::ZTilde, CoeffModule::ZTilde).unwrap();
    if yy.coefficient != 2 {
        bad.push(format!("y^2 = {} x", yy.coefficient));
    }
    fail_list("Z[x]/4x and Z/2<y>[x] to degree 10 with pairings", bad)
}

fn localizations() -> Outcome {
    let ds = Degree::default_window();
    let mut bad = vec![];
    for gen in [LocalGen::AAlpha, LocalGen::ALambda, LocalGen::U2Alpha] {
        bad.extend(
            sweep(&ds, |d| match localize_at(gen, d) {
                Ok(e) if e.group == localization_formula(gen, d) => None,
                Ok(e) => Some(format!("{gen:?} {d}: {} vs {}", e.group, localization_formula(gen, d))),
                Err(e) => Some(e.to_string()),
            })
            .into_iter()
            .flatten(),
        );
    }
    fail_list(&format!("a_a, a_l, u_2a over {} degrees", ds.len()), bad)
}

fn cls(theta: u8, desusp: bool, p: i32, q: i32, r: i32, s: i32) -> NamedClass {
    NamedClass::lookup(theta, desusp, p, q, r, s).unwrap_or_else(|| panic!("no class {theta} {desusp} {p} {q} {r} {s}"))
}

fn consistent(x: &NamedClass, y: &NamedClass, p: &Sum) -> bool {
    let basis = top_basis(p.degree);
    p.degree == x.degree() + y.degree() && p.terms.iter().all(|(c, t)| basis.contains(t) && (t.order() == 0 || *c < t.order() as i64))
}

fn relation(bad: &mut Vec<String>, x: &NamedClass, y: &NamedClass, expect: Sum) {
    match multiply(x, y) {
        Ok(p) if p == expect && consistent(x, y, &p) => {}
        Ok(p) => bad.push(format!("{x} * {y} = {p}, expected {expect}")),
        Err(e) => bad.push(format!("{x} * {y}: {e}")),
    }
}

fn algebra() -> Outcome {
    let ds = Degree::default_window();
    let classes: Vec<NamedClass> = ds.iter().flat_map(|d| top_basis(*d)).collect();
    let mids: Vec<Degree> = ds.iter().copied().filter(|d| LevelClass::generator(*d, Subgroup::C2).is_some()).collect();
    let mut rng = StdRng::seed_from_u64(2024);
    let mut bad = vec![];
    let n = 10_000;
    for _ in 0..n {
        let x = classes.choose(&mut rng).unwrap();
        let y = classes.choose(&mut rng).unwrap();
        match (multiply(x, y), multiply(y, x)) {
            (Ok(a), Ok(b)) if a == b.scale(closedform::sign(x.degree(), y.degree()) as i64) => {}
            (a, b) => bad.push(format!("commute {x} {y}: {a:?} {b:?}")),
        }
        let d = *mids.choose(&mut rng).unwrap();
        match frobenius_rhs(d, y) {
            Ok(r) if r == frobenius_lhs(d, y) => {}
            r => bad.push(format!("frobenius at {d} with {y}: {r:?}")),
        }
    }
    for _ in 0..2_000 {
        let (x, y, z) = (classes.choose(&mut rng).unwrap(), classes.choose(&mut rng).unwrap(), classes.choose(&mut rng).unwrap());
        let l = multiply(x, y).and_then(|p| multiply_sum(&p, z));
        let r = multiply(y, z).and_then(|p| multiply_left(x, &p));
        if l != r {
            bad.push(format!("assoc {x} {y} {z}: {l:?} {r:?}"));
        }
    }
    let aa = NamedClass::a_alpha();
    // a_2a u_l = 2 a_l u_2a
    let a2 = cls(1, false, 2, 0, 0, 0);
    relation(&mut bad, &aa, &aa, Sum::single(1, a2.clone()));
    relation(&mut bad, &a2, &NamedClass::u_lambda(), Sum::single(2, cls(1, false, 0, 1, 1, 0)));
    // exotic: (2u_2a/u_l)^k u_2a^i = c 4 (u_2a/u_l)^k u_2a^i + a_a^{2k}/a_l^k u_2a^i, where c is
    // fixed by the Borel images 2^k and 4 of the two sides
    let two_u = cls(2, false, 0, 0, 1, -1);
    for k in 2..=4 {
        for i in 0..=2 {
            let mut p = Sum::single(1, two_u.clone());
            for _ in 1..k {
                p = multiply_sum(&p, &two_u).map_err(|e| e.to_string())?;
            }
            for _ in 0..i {
                p = multiply_sum(&p, &NamedClass::u_2alpha()).map_err(|e| e.to_string())?;
            }
            let c = (1i64 << k) / 4;
            let expect = Sum::zero(p.degree).plus(c, cls(4, false, 0, 0, k + i, -k)).plus(1, cls(1, false, 2 * k, -k, i, 0));
            if p != expect {
                bad.push(format!("exotic k={k} i={i}: {p}"));
            }
        }
    }
    // tr(e_3a) 2u_2a/u_l = Sigma^-1 a_a/(a_l u_2a)
    let tr = NamedClass::tr_e3alpha(0, 0, 0);
    relation(&mut bad, &tr, &two_u, Sum::single(1, cls(1, true, 1, -1, -1, 0)));
    // tr(e_3a)/(u_2a^i a_l^j) a_a = Sigma^-1 1/(u_2a^{i+1} a_l^j)
    for i in 0..=2 {
        for j in 1..=3 {
            relation(&mut bad, &NamedClass::tr_e3alpha(i, 0, -j), &aa, Sum::single(1, cls(1, true, 0, -j, -(i + 1), 0)));
        }
    }
    // trivial products
    let t = NamedClass::tr_e3alpha(1, 1, -1);
    relation(&mut bad, &t, &NamedClass::u_lambda(), Sum::zero(t.degree() + NamedClass::u_lambda().degree()));
    relation(&mut bad, &NamedClass::tr_e3alpha(0, 1, 2), &NamedClass::u_2alpha(), Sum::zero(NamedClass::tr_e3alpha(0, 1, 2).degree() + NamedClass::u_2alpha().degree()));
    relation(&mut bad, &NamedClass::tr_e3alpha(2, 0, 0), &aa, Sum::zero(NamedClass::tr_e3alpha(2, 0, 0).degree() + aa.degree()));
    // tr(e_3a)/a_l^2 a_2a^2 = 0
    let a4 = cls(1, false, 4, 0, 0, 0);
    let t2 = NamedClass::tr_e3alpha(0, 0, -2);
    relation(&mut bad, &t2, &a4, Sum::zero(t2.degree() + a4.degree()));
    fail_list(&format!("{n} commutativity and Frobenius samples, 2000 triples, named relations"), bad)
}

fn regression_family() -> Outcome {
    let mut bad = vec![];
    for j in 0..=4 {
        let d = Degree::new(2 * j, -3 - 2 * j, 1);
        match homotopy(d) {
            Ok(m) if m.top == g("Z/2") => {}
            Ok(m) => bad.push(format!("{d}: {}", m.top)),
            Err(e) => bad.push(format!("{d}: {e}")),
        }
    }
    fail_list("top Z/2 for j = 0..4", bad)
}

fn axioms() -> Outcome {
    let ds = Degree::default_window();
    let bad = sweep(&ds, |d| {
        let mut out = vec![];
        match homotopy(d) {
            Ok(m) => out.extend(check_axioms(&m).failures.into_iter().map(|f| format!("engine {d}: {f}"))),
            Err(e) => out.push(format!("{d}: {e}")),
        }
        out.extend(check_axioms(&mackey_at(d)).failures.into_iter().map(|f| format!("closedform {d}: {f}")));
        out
    })
    .into_iter()
    .flatten()
    .collect();
    fail_list(&format!("{} engine and {} closed-form functors", ds.len(), ds.len()), bad)
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("full-window agreement", full_window),
        ("fixture degrees", fixtures),
        ("ker/im lemma", ker_im),
        ("gold relation by chain maps", gold),
        ("a_alpha towers", towers),
        ("group cohomology", group_cohomology),
        ("localizations", localizations),
        ("algebra properties", algebra),
        ("regression family", regression_family),
        ("Mackey axioms", axioms),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match r {
            Ok(msg) => println!("PASS {:>2} {name}: {msg} [{:.1}s]", i + 1, t.elapsed().as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg} [{:.1}s]", i + 1, t.elapsed().as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
