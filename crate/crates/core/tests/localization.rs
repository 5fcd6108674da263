use c4hz::chains::Degree;
use c4hz::closedform::*;
use c4hz::engine::sweep;

fn check(gen: LocalGen) {
    let ds = Degree::window(6, 4, 4);
    let bad: Vec<String> = sweep(&ds, |d| match localize_at(gen, d) {
        Ok(e) if e.group == localization_formula(gen, d) => None,
        Ok(e) => Some(format!("{d}: colimit {} formula {}", e.group, localization_formula(gen, d))),
        Err(e) => Some(format!("{d}: {e}")),
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(bad.is_empty(), "{gen:?}: {bad:#?}");
}

#[test]
fn geometric_fixed_points() {
    check(LocalGen::AAlpha);
}

#[test]
fn a_lambda_local() {
    check(LocalGen::ALambda);
}

#[test]
fn u_2alpha_local() {
    check(LocalGen::U2Alpha);
}
