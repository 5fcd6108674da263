//! The closed-form answer: named additive generators per degree, their Mackey functors,
//! products, localizations and the graded sign rule.

mod basis;
mod emit;
mod localize;
mod products;

pub use basis::*;
pub use emit::*;
pub use localize::*;
pub use products::*;

use crate::chains::Degree;

/// Graded commutativity sign `(-1)^{im} (-1)^{jn}` for degrees `i + j alpha + k lambda` and
/// `m + n alpha + o lambda`.
pub fn sign(x: Degree, y: Degree) -> i32 {
    let e = x.a * y.a + x.b * y.b;
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Whether `x y = y x` on the nose despite a sign: the product is 0 or lies in a group of
/// exponent 2.
pub fn commutes_on_the_nose(x: &NamedClass, y: &NamedClass) -> bool {
    if sign(x.degree(), y.degree()) == 1 {
        return true;
    }
    match multiply(x, y) {
        Ok(p) => p.terms.iter().all(|(_, c)| c.order() == 2),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_examples() {
        assert_eq!(sign(Degree::new(0, -1, 0), Degree::new(0, -1, 0)), -1);
        assert_eq!(sign(Degree::new(2, -2, 0), Degree::new(0, 0, -1)), 1);
        let aa = NamedClass::a_alpha();
        assert!(commutes_on_the_nose(&aa, &aa));
    }
}
