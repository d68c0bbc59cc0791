use std::collections::BTreeMap;

use serde_json::Value;
use superquad::envelope::{box_anticommutator, dirac_square_check, DiracSetup};
use superquad::kostant::{assemble_algebra, criterion, nu_star_labeled, scalar_identity_check, PairData};
use superquad::liesuper::{bracket_summary, lie_from_phi, phi_from_bracket, quadratic_structure_check, str_ad_casimir, SuperLie};
use superquad::multilinear::ExtTermRecord;
use superquad::schema::{CubicFile, LieFile, PairFile};
use superquad::space::validate_form;
use superquad::{Error, ExtElem, Result, Scalar};

use crate::report::Report;

const FORM: &str = "validate_form: consistent, super-symmetric, non-degenerate form";
const LIE: &str = "validate_lie: skew super-symmetry, super Jacobi identity, invariance";
const ROUND_TRIP: &str = "phi_from_bracket: a quadratic Lie superalgebra is recovered from its cubic element";
const CUBIC: &str = "quadratic_structure_check: [·,·]^φ is a Lie superbracket iff φ² is a scalar";
const CUBIC_JACOBI: &str = "quadratic_structure_check agrees with brute-force super Jacobi on [·,·]^φ";
const CASIMIR: &str = "str_ad_casimir: φ² = str(Σ ad x_i ad x^i)/24";
const NU: &str = "nu_star: ν is an even homomorphism into osp(p)";
const CRITERION: &str = "criterion: of Lie super type iff ν_*(Cas_r) + φ_p² is a scalar";
const CRITERION_JACOBI: &str = "criterion agrees with validate_lie on the assembled algebra";
const SCALAR: &str = "scalar_identity_check: ν_*(Cas_r) + φ_p² = (str ad_g Cas_g − str ad_r Cas_r)/24";
const SQUARE: &str = "dirac_square_check: D² = ξ(Cas_g)⊗1 − ζ(Cas_r) + c·(1⊗1)";
const ANTI: &str = "dirac: □₁□₂ + □₂□₁ = −III";

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))
}

fn run(command: &str, file: &str, body: impl FnOnce(&mut Report) -> Result<()>) -> Report {
    let mut report = Report::new(command, file);
    match body(&mut report) {
        Ok(()) => report.finish(),
        Err(e) => report.fail_with(&e),
    }
}

fn records(e: &ExtElem) -> Vec<ExtTermRecord> {
    e.to_records()
}

fn structure_lines(report: &mut Report, g: &SuperLie) {
    for b in bracket_summary(g) {
        let terms: Vec<String> = b.value.iter().map(|(z, c)| format!("{c}·{z}")).collect();
        report.detail_line(format!("  [{}, {}] = {}", b.x, b.y, terms.join(" + ")));
    }
}

pub fn check(file: &str) -> Report {
    run("check", file, |report| {
        let lie = LieFile::parse(&read(file)?)?;
        let space = lie.space()?;
        report.line(format!(
            "algebra {} of dimension ({}|{})",
            space.name(),
            space.even_dim(),
            space.odd_dim()
        ));
        let g = lie.to_lie()?;
        let rep = g.validate();
        let form_checks = match g.form() {
            Some(f) => validate_form(&space, f)?.checks.into_iter().map(|c| c.name).collect(),
            None => {
                report.line("no form given; checking the bracket only");
                Vec::new()
            }
        };
        for c in &rep.checks {
            let which = if form_checks.contains(&c.name) { FORM } else { LIE };
            report.verdict(&c.name, c.passed, c.detail.clone(), which);
        }
        structure_lines(report, &g);
        report.put("name", space.name());
        report.put("dimension", [space.even_dim(), space.odd_dim()]);
        Ok(())
    })
}

fn synthesize(report: &mut Report, phi: &ExtElem) -> Result<()> {
    report.line(format!("φ = {phi}"));
    report.put("phi", records(phi));
    let chk = quadratic_structure_check(phi)?;
    report.put("is_lie", chk.is_lie);
    report.put("defect", records(&chk.defect));
    let g = lie_from_phi(phi)?;
    let jacobi = g.validate();
    match &chk.scalar {
        Some(s) => {
            report.line(format!("φ² = {s}"));
            report.put("scalar", s);
        }
        None => report.line(format!("degree-4 part of φ² = {}", chk.defect)),
    }
    let detail = (!chk.is_lie).then(|| format!("(φ²)₄ = {}", chk.defect));
    report.verdict("φ² is a scalar", chk.is_lie, detail, CUBIC);
    let agree = jacobi.passed() == chk.is_lie;
    report.verdict(
        "Jacobi cross-check",
        agree,
        Some(format!("validate_lie {}", if jacobi.passed() { "passes" } else { "fails" })),
        CUBIC_JACOBI,
    );
    if let Some(s) = &chk.scalar {
        let st = str_ad_casimir(&g)?;
        let expected = &st / &Scalar::from_int(24);
        report.put("str_ad_casimir", &st);
        report.verdict("φ² = str ad Cas / 24", *s == expected, Some(format!("{s} vs {st}/24")), CASIMIR);
    }
    structure_lines(report, &g);
    Ok(())
}

pub fn cubic(file: &str, phi_file: Option<&str>) -> Report {
    run("cubic", file, |report| {
        let text = read(file)?;
        let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        if value.get("phi").is_some() {
            report.put("mode", "synthesize");
            let phi = CubicFile::parse(&text)?.to_phi()?;
            return synthesize(report, &phi);
        }
        let g = LieFile::parse(&text)?.to_lie()?;
        if let Some(pf) = phi_file {
            report.put("mode", "synthesize");
            let recs: Vec<ExtTermRecord> = serde_json::from_str(&read(pf)?).map_err(|e| Error::Parse(e.to_string()))?;
            let qs = g.quad_space()?;
            let phi = ExtElem::from_records(&qs, &recs)?;
            return synthesize(report, &phi);
        }
        report.put("mode", "extract");
        let phi = phi_from_bracket(&g)?;
        report.line(format!("φ = {phi}"));
        report.put("phi", records(&phi));
        let back = lie_from_phi(&phi)?;
        let same = back.nonzero_brackets() == g.nonzero_brackets();
        report.verdict("bracket recovered from φ", same, None, ROUND_TRIP);
        let chk = quadratic_structure_check(&phi)?;
        report.verdict("φ² is a scalar", chk.is_lie, None, CUBIC);
        if let Some(s) = &chk.scalar {
            let st = str_ad_casimir(&g)?;
            report.line(format!("φ² = {s}, str ad Cas = {st}"));
            report.put("scalar", s);
            report.put("str_ad_casimir", &st);
            let expected = &st / &Scalar::from_int(24);
            report.verdict("φ² = str ad Cas / 24", *s == expected, None, CASIMIR);
        }
        Ok(())
    })
}

fn kostant_body(report: &mut Report, pair: &PairData) -> Result<()> {
    let r = pair.r();
    let p = pair.p();
    report.line(format!(
        "r = {} ({}|{}), p = ({}|{})",
        r.space().name(),
        r.space().even_dim(),
        r.space().odd_dim(),
        p.space().even_dim(),
        p.space().odd_dim()
    ));
    report.verdict("ν validated", true, None, NU);
    let table = nu_star_labeled(pair)?;
    for (x, e) in &table {
        report.line(format!("ν_*({x}) = {e}"));
    }
    let table_json: BTreeMap<String, Vec<ExtTermRecord>> = table.iter().map(|(k, v)| (k.clone(), records(v))).collect();
    report.put("nu_star", table_json);
    let phi_status = if pair.phi_p_forced_zero() {
        "forced zero"
    } else if pair.phi_p_given() {
        "given"
    } else {
        "defaulted to zero"
    };
    report.line(format!("φ_p = {} ({phi_status})", pair.phi_p()));
    report.put("phi_p", records(&pair.phi_p()));
    report.put("phi_p_status", phi_status);

    let c = criterion(pair)?;
    report.put("is_lie_super_type", c.is_lie_super_type);
    report.put("defect", records(&c.defect));
    let detail = if c.is_lie_super_type {
        c.scalar.as_ref().map(|s| format!("ν_*(Cas_r) + φ_p² = {s}"))
    } else {
        Some(format!("degree-4 defect {}", c.defect))
    };
    report.line(format!("verdict: {}", if c.is_lie_super_type { "PASS" } else { "FAIL" }));
    report.verdict("Lie super type", c.is_lie_super_type, detail, CRITERION);

    let g = assemble_algebra(pair)?;
    let jac = g.validate();
    let first = g.jacobi_failures().first().map(|f| {
        let s = g.space();
        format!("first failing triple ({}, {}, {})", s.label(f.triple.0), s.label(f.triple.1), s.label(f.triple.2))
    });
    report.verdict(
        "assembled algebra cross-check",
        jac.passed() == c.is_lie_super_type,
        first.or_else(|| Some("validate_lie passes".into())),
        CRITERION_JACOBI,
    );
    structure_lines(report, &g);
    report.put("assembled", LieFile::from_lie(&g));

    if let Some(scalar) = &c.scalar {
        report.put("scalar", scalar);
        let s = scalar_identity_check(pair)?;
        report.put("scalar_identity", BTreeMap::from([("lhs", &s.lhs), ("rhs", &s.rhs)]));
        report.verdict("two-sided scalar", s.equal, Some(format!("{} vs {}", s.lhs, s.rhs)), SCALAR);
    }
    Ok(())
}

pub fn kostant(file: &str) -> Report {
    run("kostant", file, |report| {
        let (pair, _) = PairFile::parse(&read(file)?)?.load()?;
        kostant_body(report, &pair)
    })
}

pub fn dirac(file: &str, r_labels: Option<&[String]>) -> Report {
    run("dirac", file, |report| {
        let text = read(file)?;
        let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
        let (g, span) = if value.get("g").is_some() {
            let PairFile::Split(s) = PairFile::parse(&text)? else {
                return Err(Error::Input("expected a split pair file".into()));
            };
            let span = r_labels.map(<[String]>::to_vec).unwrap_or(s.r_span);
            (s.g.to_lie()?, span)
        } else {
            let span = r_labels
                .ok_or_else(|| Error::Input("--r is required for an algebra file".into()))?
                .to_vec();
            (LieFile::parse(&text)?.to_lie()?, span)
        };
        report.put("r_span", &span);
        let setup = DiracSetup::new(&g, &span)?;
        let alg = setup.algebra();
        let sq = dirac_square_check(&setup)?;
        report.line(format!("r = span{{{}}}", span.join(", ")));
        report.line(format!("D = {}", alg.display(&sq.dirac)));
        report.line(format!("D² = {}", alg.display(&sq.lhs)));
        report.line(format!("ξ(Cas_g)⊗1 − ζ(Cas_r) + c = {}", alg.display(&sq.rhs)));
        report.line(format!("c = {}", sq.constant));
        report.line(if sq.equal { "EQUAL" } else { "UNEQUAL" });
        report.put("dirac", alg.to_records(&sq.dirac));
        report.put("lhs", alg.to_records(&sq.lhs));
        report.put("rhs", alg.to_records(&sq.rhs));
        report.put("constant", &sq.constant);
        report.put("equal", sq.equal);
        report.verdict("square formula", sq.equal, None, SQUARE);
        let (a, b) = box_anticommutator(&setup);
        report.verdict("anticommutator identity", a == b, None, ANTI);
        report.detail_line(format!("φ_p = {}", setup.decomposition().pair().phi_p()));
        report.detail_line(format!("□₁□₂ + □₂□₁ = {}", alg.display(&a)));
        Ok(())
    })
}
