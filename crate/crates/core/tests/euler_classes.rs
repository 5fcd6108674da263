//! Multiplication by the Euler classes in the closed form against the chain-level maps.

use c4hz::chains::Degree;
use c4hz::closedform::*;
use c4hz::engine::{euler_action, sweep, EulerGen};
use c4hz::intlin::hom_invariants;

fn mismatches(gen: EulerGen, class: NamedClass) -> Vec<String> {
    let ds = Degree::default_window();
    sweep(&ds, |d| {
        let chain = euler_action(d, gen).map_err(|e| e.to_string())?.top_invariants();
        let m = multiplication_matrix(d, &class).map_err(|e| e.to_string())?;
        let closed = hom_invariants(&m, &top_group(d), &top_group(d + class.degree()));
        if closed == chain {
            Ok(())
        } else {
            Err(format!("{d}: chain {chain:?} closed {closed:?}"))
        }
    })
    .into_iter()
    .filter_map(Result::err)
    .collect()
}

#[test]
fn a_alpha_matches_chain_maps() {
    let bad = mismatches(EulerGen::Alpha, NamedClass::a_alpha());
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn a_lambda_matches_chain_maps() {
    let bad = mismatches(EulerGen::Lambda, NamedClass::a_lambda());
    assert!(bad.is_empty(), "{bad:#?}");
}
