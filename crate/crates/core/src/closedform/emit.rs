use super::basis::*;
use crate::chains::Degree;
use crate::mackey::Subgroup;
use serde_json::{json, Value};

fn latex_pow(sym: &str, e: i32) -> String {
    if e == 1 {
        sym.to_string()
    } else {
        format!("{sym}^{{{e}}}")
    }
}

fn latex_fraction(factors: &[(i32, &str)]) -> String {
    let num: String = factors.iter().filter(|(e, _)| *e > 0).map(|(e, s)| latex_pow(s, *e)).collect();
    let den: String = factors.iter().filter(|(e, _)| *e < 0).map(|(e, s)| latex_pow(s, -e)).collect();
    match (num.is_empty(), den.is_empty()) {
        (true, true) => "1".into(),
        (false, true) => num,
        (true, false) => format!("\\frac{{1}}{{{den}}}"),
        (false, false) => format!("\\frac{{{num}}}{{{den}}}"),
    }
}

/// LaTeX name of a top generator.
pub fn class_latex(c: &NamedClass) -> String {
    if c.summand == Summand::TrE3Alpha {
        let tail = latex_fraction(&[(c.exp_al, "a_{\\lambda}"), (c.exp_u2a + 1, "u_{2\\alpha}"), (c.exp_aa + 1, "a_{\\alpha}")]);
        return if tail == "1" { "tr^4_2(e_{3\\alpha})".into() } else { format!("tr^4_2(e_{{3\\alpha}}){tail}") };
    }
    let body = latex_fraction(&[
        (c.exp_aa, "a_{\\alpha}"),
        (c.exp_al, "a_{\\lambda}"),
        (c.exp_u2a, "u_{2\\alpha}"),
        (c.exp_ul, "u_{\\lambda}"),
    ]);
    let theta = if c.theta == 1 { String::new() } else { c.theta.to_string() };
    let body = if theta.is_empty() || body != "1" { body } else { String::new() };
    let sigma = if c.desusp { "\\Sigma^{-1}" } else { "" };
    format!("{sigma}{theta}{body}")
}

fn group_latex(g: &crate::intlin::FinAbGroup) -> String {
    g.notation().replace('Z', "\\mathbb{Z}").replace('+', "\\oplus ")
}

/// One table line: degree, top group with named generators, and the three levels.
pub fn degree_latex(d: Degree) -> String {
    let basis = top_basis(d);
    let gens: Vec<String> = basis.iter().map(class_latex).collect();
    let m = mackey_at(d);
    format!(
        "${}$ & ${}$ & ${}$ & ${}$ & ${}$ \\\\",
        d.latex(),
        group_latex(&m.top),
        if gens.is_empty() { "-".into() } else { gens.join(",\\ ") },
        group_latex(&m.mid),
        group_latex(&m.bot)
    )
}

pub fn degree_text(d: Degree) -> String {
    let m = mackey_at(d);
    let gens: Vec<String> = top_basis(d).iter().map(|c| c.name()).collect();
    format!("{d}  {}  [{}]", m.levels_notation(), gens.join(", "))
}

/// JSON record: degree, named generators per level and the Mackey functor in the shared schema.
pub fn degree_json(d: Degree) -> Value {
    let top: Vec<Value> = top_basis(d)
        .iter()
        .map(|c| json!({"name": c.name(), "latex": class_latex(c), "summand": c.summand, "line": c.summand.line()}))
        .collect();
    let level = |k: Subgroup| LevelClass::generator(d, k).map(|c| c.name());
    json!({
        "degree": [d.a, d.b, d.c],
        "top": top,
        "mid": level(Subgroup::C2),
        "bot": level(Subgroup::E),
        "mackey": mackey_at(d).to_json(),
    })
}
