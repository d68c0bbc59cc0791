mod common;

use common::*;
use superquad::envelope::{box_anticommutator, dirac_square_check, DiracSetup};
use superquad::kostant::{assemble_algebra, criterion, nu_star_labeled, scalar_identity_check};
use superquad::liesuper::{phi_from_bracket, quadratic_structure_check, str_ad_casimir};
use superquad::schema::{LieFile, PairFile};
use superquad::{Error, ExtElem, Scalar};

fn q(s: &str) -> Scalar {
    s.parse().unwrap()
}

#[test]
fn algebras_validate() {
    for f in ["sl2.json", "osp12.json", "gl11.json", "abelian.json"] {
        let g = lie(f);
        let rep = g.validate();
        assert!(rep.passed(), "{f}: {:?}", rep.failures().collect::<Vec<_>>());
    }
}

#[test]
fn symmetric_odd_block_is_rejected() {
    let g = lie("invalid_odd_block.json");
    let names: Vec<_> = g.validate().failures().map(|c| c.name.clone()).collect();
    assert_eq!(names, ["odd block antisymmetric"]);
    match g.quad_space() {
        Err(Error::DegenerateForm(msg)) => assert_eq!(msg, "odd block antisymmetric"),
        other => panic!("expected a form error, got {other:?}"),
    }
}

#[test]
fn cubic_elements_and_casimir_traces() {
    // (file, φ, φ², str ad Cas)
    let table = [
        ("sl2.json", "1/2·h∧e∧f", "1/2", "12"),
        ("gl11.json", "", "0", "0"),
        ("osp12.json", "2·h∧e∧f + -1/2·h∧y1∧y2 + -1/2·e∧y2∧y2 + 1/2·f∧y1∧y1", "1/4", "6"),
        ("abelian.json", "0", "0", "0"),
    ];
    for (f, phi_text, sq, st) in table {
        let g = lie(f);
        let phi = phi_from_bracket(&g).unwrap();
        if !phi_text.is_empty() {
            assert_eq!(phi.to_string(), phi_text, "{f}");
        }
        let chk = quadratic_structure_check(&phi).unwrap();
        assert_eq!(chk.scalar, Some(q(sq)), "{f}");
        assert_eq!(str_ad_casimir(&g).unwrap(), q(st), "{f}");
    }
}

#[test]
fn rank1_cubic_is_not_lie() {
    let phi = phi("rank1_phi.json");
    let chk = quadratic_structure_check(&phi).unwrap();
    assert!(!chk.is_lie);
    assert_eq!(chk.defect.to_string(), "1/4·y1∧y1∧y2∧y2");
    assert!(quadratic_structure_check(&common::phi("zero_phi.json")).unwrap().is_lie);
}

#[test]
fn kappa_scan() {
    let scalars = ["-3/2", "-3/4", "-3/8", "-3/16", "-3/32"];
    let osp = lie("osp12.json");
    for (f, s) in KAPPA_PAIRS.iter().zip(scalars) {
        let (p, _) = pair(f);
        let c = criterion(&p).unwrap();
        assert!(c.is_lie_super_type, "{f}");
        assert_eq!(c.scalar, Some(q(s)), "{f}");
        assert!(c.phi_p_forced_zero);
        let g = assemble_algebra(&p).unwrap();
        assert!(g.validate().passed(), "{f}");
        let same = g.nonzero_brackets() == osp.nonzero_brackets() && g.form() == osp.form();
        assert_eq!(same, *f == "sl2_odd_pair_k1_2.json", "{f}");
        let id = scalar_identity_check(&p).unwrap();
        assert!(id.equal, "{f}: {id:?}");
    }
}

#[test]
fn nu_star_of_the_spin_representation() {
    let (p, _) = pair("sl2_odd_pair_k1_2.json");
    let table: Vec<(String, String)> = nu_star_labeled(&p).unwrap().into_iter().map(|(k, v)| (k, v.to_string())).collect();
    assert_eq!(
        table,
        [
            ("e".to_string(), "1/4·y1∧y1".to_string()),
            ("f".to_string(), "-1/4·y2∧y2".to_string()),
            ("h".to_string(), "-1/2·y1∧y2".to_string()),
        ]
    );
}

#[test]
fn rank1_pair_fails_on_odd_triple() {
    let (p, _) = pair("rank1_pair.json");
    let c = criterion(&p).unwrap();
    assert!(!c.is_lie_super_type);
    assert_eq!(c.scalar, None);
    assert!(matches!(scalar_identity_check(&p), Err(Error::Precondition(_))));
    let g = assemble_algebra(&p).unwrap();
    let failures = g.jacobi_failures();
    let s = g.space();
    for f in &failures {
        let (a, b, c) = f.triple;
        assert!(s.parity(a).is_odd() && s.parity(b).is_odd() && s.parity(c).is_odd());
    }
    let (a, b, c) = failures[0].triple;
    assert_eq!((s.label(a), s.label(b), s.label(c)), ("y1", "y1", "y2"));
}

#[test]
fn split_pairs_recover_their_algebra() {
    for f in DIRAC_CASES {
        let (p, d) = pair(f);
        let d = d.expect("split file");
        let c = criterion(&p).unwrap();
        assert!(c.is_lie_super_type, "{f}");
        let g = assemble_algebra(&p).unwrap();
        assert!(g.validate().passed(), "{f}");
        assert_eq!(g.dim(), d.g().dim());
    }
}

#[test]
fn dirac_constants() {
    let expected = [
        ("abelian_zero_split.json", "0"),
        ("osp12_even_split.json", "-3/4"),
        ("gl11_even_split.json", "0"),
        ("sl2_cartan_split.json", "1/2"),
        ("sl2_zero_split.json", "1/2"),
        ("osp12_cartan_split.json", "1/4"),
    ];
    for (f, c) in expected {
        let PairFile::Split(s) = PairFile::parse(&read(f)).unwrap() else {
            panic!("{f}");
        };
        let setup = DiracSetup::new(&s.g.to_lie().unwrap(), &s.r_span).unwrap();
        let sq = dirac_square_check(&setup).unwrap();
        assert!(sq.equal, "{f}");
        assert_eq!(sq.constant, q(c), "{f}");
        let (a, b) = box_anticommutator(&setup);
        assert_eq!(a, b, "{f}");
        assert_eq!(setup.zeta_casimir().unwrap(), setup.zeta_casimir_expanded().unwrap(), "{f}");
    }
}

#[test]
fn sl2_dirac_with_zero_r() {
    let PairFile::Split(s) = PairFile::parse(&read("sl2_zero_split.json")).unwrap() else {
        panic!();
    };
    let setup = DiracSetup::new(&s.g.to_lie().unwrap(), &s.r_span).unwrap();
    let phi_p = setup.decomposition().pair().phi_p();
    assert_eq!(phi_p.to_string(), "1/2·h∧e∧f");
    let alg = setup.algebra();
    assert_eq!(alg.display(&setup.dirac()), "1/2·1⊗h∧e∧f + 1·f⊗e + 1·e⊗f + 1/2·h⊗h");
}

#[test]
fn catalog_files_round_trip() {
    for f in ["sl2.json", "osp12.json", "gl11.json", "abelian.json"] {
        let g = lie(f);
        let back = LieFile::from_lie(&g).to_lie().unwrap();
        assert_eq!(back, g, "{f}");
    }
    let phi = phi("sl2_phi.json");
    let file = superquad::schema::CubicFile::from_phi("sl2", &phi);
    let again = file.to_phi().unwrap();
    assert_eq!(again.to_records(), phi.to_records());
    assert_ne!(again, ExtElem::zero(again.space()));
}
