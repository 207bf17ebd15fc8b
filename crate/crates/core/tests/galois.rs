mod common;

use common::poly;
use lagrange::galois::{identify, solvable_quintic};
use lagrange::polyint::is_perfect_square;
use lagrange::{Error, PermutationGroup};

fn check(text: &str, name: &str, order: usize) {
    let f = poly(text);
    let r = identify(&f, 5).unwrap_or_else(|e| panic!("{text}: {e}"));
    assert_eq!((r.label.name(), r.label.order()), (name, order), "{text}");
    let n = f.degree().unwrap();
    let even = r
        .representative
        .is_subgroup_of(&PermutationGroup::alternating(n).unwrap());
    assert_eq!(
        is_perfect_square(&f.discriminant().unwrap()),
        even,
        "{text}"
    );
    for step in &r.evidence {
        assert!(step.remaining >= 1);
    }
    assert_eq!(r.evidence.last().map_or(1, |s| s.remaining), 1);
}

#[test]
fn low_degree() {
    check("x - 7", "S1", 1);
    check("x^2 - 1", "I2", 1);
    check("x^3 - x", "I3", 1);
    check("x^4 + 4", "T(4,2,2)", 2);
    check("x^4 - 2", "D4", 8);
    check("x^4 + x + 1", "S4", 24);
    check("x^4 + 8*x + 12", "A4", 12);
}

#[test]
fn quintics() {
    check("x^5 - 5*x + 12", "D5", 10);
    check("x^5 + 20*x + 16", "A5", 60);
    check("2*x^5 - 3*x + 7", "S5", 120);
    assert!(solvable_quintic(&poly("x^5 - 5*x + 12")).unwrap().solvable);
    assert!(!solvable_quintic(&poly("x^5 + 20*x + 16")).unwrap().solvable);
    assert!(matches!(
        solvable_quintic(&poly("x^5 - 1")),
        Err(Error::ReducibleInput)
    ));
}

#[test]
fn sextics() {
    check("x^6 + x^5 + x^4 + x^3 + x^2 + x + 1", "C6", 6);
    check("x^6 - 2", "D6(6)", 12);
    check("x^6 + 3", "S3(6)", 6);
    check("x^6 - 3*x^2 - 1", "A4(6)", 12);
    check("x^6 + 24*x - 20", "A6", 360);
    check("x^6 - 1", "T(6,2,4)", 2);
}

#[test]
fn septics() {
    check("x^7 - 2", "F42", 42);
    check("x^7 - 7*x^3 + 14*x^2 - 7*x + 1", "L(7)", 168);
    assert!(matches!(
        identify(&poly("x^7 - 1"), 5),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn rejects_bad_input() {
    assert!(matches!(
        identify(&poly("(x - 1)^2*(x + 3)"), 5),
        Err(Error::NotSquarefree)
    ));
    assert!(identify(&poly("x^8 - 2"), 5).is_err());
}
