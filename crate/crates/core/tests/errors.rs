mod common;

use common::*;
use serde_json::{json, Value};
use superquad::clifford::clifford_mul;
use superquad::kostant::Decomposition;
use superquad::liesuper::quadratic_structure_check;
use superquad::multilinear::lambda2_action;
use superquad::oracle::tensor_oracle_mul;
use superquad::schema::{LieFile, PairFile};
use superquad::{Error, ExtElem, Scalar};

fn pair_from(v: Value) -> Result<(), Error> {
    PairFile::parse(&v.to_string())?.load().map(|_| ())
}

fn rank1() -> Value {
    serde_json::from_str(&read("rank1_pair.json")).unwrap()
}

#[test]
fn nu_must_preserve_the_form() {
    let mut v = rank1();
    v["nu"]["x"] = json!([["1", "0"], ["0", "1"]]);
    match pair_from(v) {
        Err(Error::InvalidRepresentation(msg)) => assert!(msg.starts_with("ν lands in osp(p)"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn nu_must_be_even() {
    let mut v = rank1();
    v["p"] = json!({"even_basis": ["a"], "odd_basis": ["y1", "y2"], "gram_even": [["1"]], "gram_odd": [["0", "1"], ["-1", "0"]]});
    v["nu"]["x"] = json!([["0", "1", "0"], ["0", "0", "0"], ["-1", "0", "0"]]);
    match pair_from(v) {
        Err(Error::InvalidRepresentation(msg)) => assert!(msg.starts_with("parity preserving"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn nu_must_be_a_homomorphism() {
    let sl2: Value = serde_json::from_str(&read("sl2.json")).unwrap();
    let v = json!({
        "r": sl2,
        "p": {"odd_basis": ["y1", "y2"], "gram_odd": [["0", "1"], ["-1", "0"]]},
        "nu": {"h": [["1", "0"], ["0", "-1"]]}
    });
    match pair_from(v) {
        Err(Error::InvalidRepresentation(msg)) => assert!(msg.starts_with("homomorphism"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn phi_p_must_be_cubic() {
    let mut v = rank1();
    v["phi_p"] = json!([{"monomial": ["y1", "y2"], "c": "1"}]);
    assert!(matches!(pair_from(v), Err(Error::WrongDegree(_))));
}

#[test]
fn nu_shape_is_checked() {
    let mut v = rank1();
    v["nu"]["x"] = json!([["1"]]);
    assert!(matches!(pair_from(v), Err(Error::DimensionMismatch(_))));
    let mut v = rank1();
    v["nu"]["z"] = json!([["1", "0"], ["0", "-1"]]);
    assert!(matches!(pair_from(v), Err(Error::Input(_))));
}

#[test]
fn split_needs_a_subalgebra() {
    let g = lie("sl2.json");
    let r = ["e".to_string(), "f".to_string()];
    assert!(matches!(Decomposition::new(&g, &r), Err(Error::NotSubalgebra(_))));
    let r = ["e".to_string()];
    assert!(matches!(Decomposition::new(&g, &r), Err(Error::DegenerateForm(_))));
    let r = ["q".to_string()];
    assert!(matches!(Decomposition::new(&g, &r), Err(Error::Input(_))));
}

#[test]
fn split_needs_a_quadratic_algebra() {
    let g = lie("invalid_odd_block.json");
    assert!(matches!(Decomposition::new(&g, &[]), Err(Error::DegenerateForm(_))));
    let mut v: Value = serde_json::from_str(&read("sl2.json")).unwrap();
    v.as_object_mut().unwrap().remove("gram_even");
    v.as_object_mut().unwrap().remove("gram_odd");
    let bare = LieFile::parse(&v.to_string()).unwrap().to_lie().unwrap();
    assert!(matches!(Decomposition::new(&bare, &[]), Err(Error::NotQuadratic(_))));
}

#[test]
fn parse_errors_carry_a_location() {
    match LieFile::parse("{\n  \"name\": \"x\",\n  \"even_basis\": [1]\n}") {
        Err(Error::Parse(msg)) => assert!(msg.starts_with("line 3, column"), "{msg}"),
        other => panic!("{other:?}"),
    }
    assert!(matches!(LieFile::parse("{\"name\": \"x\", \"extra\": 1}"), Err(Error::Parse(_))));
    assert!(matches!("1/0".parse::<Scalar>(), Err(Error::Parse(_))));
}

#[test]
fn duplicate_brackets_are_rejected() {
    let mut v: Value = serde_json::from_str(&read("sl2.json")).unwrap();
    let first = v["brackets"][0].clone();
    v["brackets"].as_array_mut().unwrap().push(first);
    let f = LieFile::parse(&v.to_string()).unwrap();
    assert!(matches!(f.to_lie(), Err(Error::Input(_))));
}

#[test]
fn mixing_ambients_is_an_error() {
    let a = phi("sl2_phi.json");
    let b = phi("rank1_phi.json");
    assert_eq!(clifford_mul(&a, &b), Err(Error::AmbientMismatch));
    assert_eq!(a.wedge(&b), Err(Error::AmbientMismatch));
}

#[test]
fn degree_checks() {
    let phi = phi("sl2_phi.json");
    let qs = phi.space().clone();
    let one = ExtElem::one(&qs);
    assert!(matches!(quadratic_structure_check(&one), Err(Error::WrongDegree(_))));
    assert!(matches!(lambda2_action(&phi, &[Scalar::one(), Scalar::zero(), Scalar::zero()]), Err(Error::WrongDegree(_))));
    assert!(matches!(tensor_oracle_mul(&phi, &phi, 4), Err(Error::DegreeBudget(_))));
    assert!(matches!(phi.contract(&[Scalar::one()]), Err(Error::DimensionMismatch(_))));
}
