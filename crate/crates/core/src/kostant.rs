//! Extensions `g = r ⊕ p` of a quadratic Lie superalgebra `r` by an
//! orthogonal representation `ν: r → osp(p)`, and the criterion deciding
//! when such data come from a quadratic Lie superalgebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::clifford::{clifford_mul_unchecked, supercommutator};
use crate::error::{Error, Result};
use crate::liesuper::{cubic_from_bracket, lie_from_phi, str_ad_casimir, SuperLie};
use crate::linalg::{add_scaled, is_zero_vector, unit_vector, zero_vector, Matrix, Vector};
use crate::multilinear::{lambda2_action, monomials_of_degree, ExtElem};
use crate::scalar::Scalar;
use crate::space::{Endo, GramForm, Parity, QuadSpace, SuperSpace, ValidationReport};

/// The data `(r, (·,·)_r, p, (·,·)_p, ν, φ_p)`.
#[derive(Clone, Debug)]
pub struct PairData {
    r: SuperLie,
    r_qs: Arc<QuadSpace>,
    p: Arc<QuadSpace>,
    nu: Vec<Endo>,
    phi_p: Option<ExtElem>,
}

/// Validates `ν` as an even homomorphism `r → osp(p)`.
pub fn validate_nu(r: &SuperLie, p: &QuadSpace, nu: &[Matrix]) -> ValidationReport {
    let mut report = ValidationReport::default();
    let rs = r.space();
    if nu.len() != r.dim() || nu.iter().any(|m| m.rows() != p.dim() || m.cols() != p.dim()) {
        report.push("representation shape", false, Some("one p-matrix per r-basis vector".into()));
        return report;
    }
    let mut endos = Vec::new();
    let mut parity_fail = None;
    for (i, m) in nu.iter().enumerate() {
        match Endo::new(p.space(), m.clone(), rs.parity(i)) {
            Ok(e) => endos.push(e),
            Err(_) => {
                parity_fail.get_or_insert_with(|| format!("ν({}) does not have the parity of {}", rs.label(i), rs.label(i)));
            }
        }
    }
    report.push("parity preserving", parity_fail.is_none(), parity_fail);
    if endos.len() != nu.len() {
        return report;
    }
    let osp_fail = endos
        .iter()
        .position(|e| !e.is_orthosymplectic(p))
        .map(|i| format!("ν({}) is not in osp(p)", rs.label(i)));
    report.push("ν lands in osp(p)", osp_fail.is_none(), osp_fail);

    let mut hom_fail = None;
    'hom: for i in 0..r.dim() {
        for j in 0..r.dim() {
            let lhs = endos[i].supercommutator(&endos[j]);
            let mut rhs = Matrix::zeros(p.dim(), p.dim());
            for (k, c) in r.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    rhs = &rhs + &nu[k].scale(c);
                }
            }
            if lhs.matrix() != &rhs {
                hom_fail = Some(format!("ν([{a}, {b}]) ≠ [ν({a}), ν({b})]", a = rs.label(i), b = rs.label(j)));
                break 'hom;
            }
        }
    }
    report.push("homomorphism", hom_fail.is_none(), hom_fail);
    report
}

impl PairData {
    pub fn new(r: SuperLie, p: Arc<QuadSpace>, nu: Vec<Matrix>, phi_p: Option<ExtElem>) -> Result<Self> {
        let r_report = r.validate();
        if r.form().is_none() || !r_report.passed() {
            let failed: Vec<_> = r_report.failures().map(|c| c.name.clone()).collect();
            return Err(Error::NotQuadratic(format!("r is not quadratic: {}", failed.join(", "))));
        }
        let report = validate_nu(&r, &p, &nu);
        if let Some(f) = report.failures().next() {
            return Err(Error::InvalidRepresentation(format!(
                "{}: {}",
                f.name,
                f.detail.clone().unwrap_or_default()
            )));
        }
        if let Some(phi) = &phi_p {
            if !Arc::ptr_eq(phi.space(), &p) && phi.space().as_ref() != p.as_ref() {
                return Err(Error::AmbientMismatch);
            }
            if phi.terms().keys().any(|m| m.degree() != 3) {
                return Err(Error::WrongDegree("φ_p must lie in Λ³(p)".into()));
            }
            if phi.parity() != Some(Parity::Even) {
                return Err(Error::NotHomogeneous("φ_p must be even".into()));
            }
        }
        let r_qs = r.quad_space()?;
        let nu = nu
            .into_iter()
            .enumerate()
            .map(|(i, m)| Endo::new(p.space(), m, r.space().parity(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { r, r_qs, p, nu, phi_p })
    }

    pub fn r(&self) -> &SuperLie {
        &self.r
    }

    pub fn r_space(&self) -> &Arc<QuadSpace> {
        &self.r_qs
    }

    pub fn p(&self) -> &Arc<QuadSpace> {
        &self.p
    }

    pub fn nu(&self, i: usize) -> &Endo {
        &self.nu[i]
    }

    /// The given φ_p, or zero.
    pub fn phi_p(&self) -> ExtElem {
        self.phi_p.clone().unwrap_or_else(|| ExtElem::zero(&self.p))
    }

    pub fn phi_p_given(&self) -> bool {
        self.phi_p.is_some()
    }

    /// True when `Λ³₀(p) = 0`, so that φ_p = 0 is the only choice.
    pub fn phi_p_forced_zero(&self) -> bool {
        monomials_of_degree(self.p.space(), 3)
            .iter()
            .all(|m| m.parity(self.p.space()).is_odd())
    }

    /// `ν_*(x)` for an r-vector in coordinates.
    pub fn nu_star_vector(&self, x: &[Scalar]) -> Result<ExtElem> {
        let mut out = ExtElem::zero(&self.p);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.nu_star(i)?);
            }
        }
        Ok(out)
    }

    /// `ν_*(x_i) = −¼ Σ (−1)^{|y^a||y^b|} (ν(x_i) y_a, y_b) y^a∧y^b`, checked
    /// against `[ν_*(x_i), y]_C = ν(x_i) y`.
    pub fn nu_star(&self, i: usize) -> Result<ExtElem> {
        let p = &self.p;
        let n = p.dim();
        let t = self.nu[i].matrix();
        let duals: Vec<ExtElem> = (0..n).map(|a| ExtElem::vector(p, p.dual(a))).collect();
        let mut out = ExtElem::zero(p);
        for a in 0..n {
            let image = t.column(a);
            if is_zero_vector(&image) {
                continue;
            }
            for b in 0..n {
                let c = p.pair(&image, &unit_vector(n, b));
                if c.is_zero() {
                    continue;
                }
                let neg = p.parity(a).both_odd(p.parity(b));
                let coeff = &c * &Scalar::ratio(if neg { 1 } else { -1 }, 4);
                out.add_scaled(&coeff, &duals[a].wedge_unchecked(&duals[b]));
            }
        }
        for a in 0..n {
            let y = unit_vector(n, a);
            if lambda2_action(&out, &y)? != self.nu[i].apply(&y) {
                return Err(Error::Internal(format!(
                    "ν_*({}) does not reproduce ν on {}",
                    self.r.space().label(i),
                    p.space().label(a)
                )));
            }
        }
        Ok(out)
    }

    pub fn nu_star_table(&self) -> Result<Vec<ExtElem>> {
        (0..self.r.dim()).map(|i| self.nu_star(i)).collect()
    }

    /// The orthogonal sum `r ⊕ p` and the index maps of both summands.
    pub fn total_space(&self) -> Result<(Arc<QuadSpace>, Vec<usize>, Vec<usize>)> {
        let name = format!("{}+{}", self.r.space().name(), self.p.space().name());
        let (g, rm, pm) = self.r_qs.orthogonal_sum(&self.p, &name)?;
        Ok((Arc::new(g), rm, pm))
    }

    fn embedding(map: &[usize], dim: usize) -> Vec<Vector> {
        map.iter().map(|&k| unit_vector(dim, k)).collect()
    }
}

/// The three cubic summands and their sum, all in Λ³(r ⊕ p).
#[derive(Clone, Debug)]
pub struct AssembledPhi {
    pub space: Arc<QuadSpace>,
    pub phi_r: ExtElem,
    pub phi_nu: ExtElem,
    pub phi_p: ExtElem,
    pub phi: ExtElem,
}

/// `φ_r` over r itself.
pub fn phi_r(pair: &PairData) -> ExtElem {
    cubic_from_bracket(&pair.r_qs, |i, j| pair.r.bracket_basis(i, j).clone())
}

/// `φ_ν = Σ ν_*(x_i)∧x^i` in Λ³(r ⊕ p).
pub fn phi_nu(pair: &PairData) -> Result<ExtElem> {
    let (g, rm, pm) = pair.total_space()?;
    phi_nu_in(pair, &g, &rm, &pm)
}

fn phi_nu_in(pair: &PairData, g: &Arc<QuadSpace>, rm: &[usize], pm: &[usize]) -> Result<ExtElem> {
    let p_emb = PairData::embedding(pm, g.dim());
    let mut out = ExtElem::zero(g);
    for i in 0..pair.r.dim() {
        let ns = pair.nu_star(i)?.map_linear(g, &p_emb)?;
        if ns.is_zero() {
            continue;
        }
        let mut dual = zero_vector(g.dim());
        for (k, c) in pair.r_qs.dual(i).iter().enumerate() {
            dual[rm[k]] = c.clone();
        }
        out.add_scaled(&Scalar::one(), &ns.wedge_unchecked(&ExtElem::vector(g, &dual)));
    }
    Ok(out)
}

/// `φ = φ_r + φ_ν + φ_p` on `r ⊕ p`.
pub fn assemble_phi(pair: &PairData) -> Result<AssembledPhi> {
    let (g, rm, pm) = pair.total_space()?;
    let phi_r = phi_r(pair).map_linear(&g, &PairData::embedding(&rm, g.dim()))?;
    let phi_nu = phi_nu_in(pair, &g, &rm, &pm)?;
    let phi_p = pair.phi_p().map_linear(&g, &PairData::embedding(&pm, g.dim()))?;
    let phi = &(&phi_r + &phi_nu) + &phi_p;
    Ok(AssembledPhi {
        space: g,
        phi_r,
        phi_nu,
        phi_p,
        phi,
    })
}

/// Verdict of the criterion `ν_*(Cas_r) + φ_p² ∈ ℂ`.
#[derive(Clone, Debug)]
pub struct Criterion {
    pub is_lie_super_type: bool,
    pub scalar: Option<Scalar>,
    /// Degree-4 part of `ν_*(Cas_r) + φ_p²`.
    pub defect: ExtElem,
    pub phi_p_forced_zero: bool,
    pub phi_p_given: bool,
}

/// `ν_*(Cas_r) = Σ ν_*(x_i)·ν_*(x^i)` in the Clifford algebra of p.
pub fn nu_star_casimir(pair: &PairData) -> Result<ExtElem> {
    let table = pair.nu_star_table()?;
    let mut out = ExtElem::zero(&pair.p);
    for (i, ns) in table.iter().enumerate() {
        if ns.is_zero() {
            continue;
        }
        let mut dual = ExtElem::zero(&pair.p);
        for (k, c) in pair.r_qs.dual(i).iter().enumerate() {
            if !c.is_zero() {
                dual.add_scaled(c, &table[k]);
            }
        }
        out.add_scaled(&Scalar::one(), &clifford_mul_unchecked(ns, &dual));
    }
    Ok(out)
}

/// Checks `[ν_*(x), φ_p]_C = 0` for every basis vector x of r.
pub fn check_phi_p_invariant(pair: &PairData) -> Result<()> {
    let phi = pair.phi_p();
    if phi.is_zero() {
        return Ok(());
    }
    for i in 0..pair.r.dim() {
        if !supercommutator(&pair.nu_star(i)?, &phi)?.is_zero() {
            return Err(Error::Precondition(format!(
                "φ_p is not r-invariant: [ν_*({}), φ_p] ≠ 0",
                pair.r.space().label(i)
            )));
        }
    }
    Ok(())
}

pub fn criterion(pair: &PairData) -> Result<Criterion> {
    check_phi_p_invariant(pair)?;
    let phi = pair.phi_p();
    let mut total = nu_star_casimir(pair)?;
    total.add_scaled(&Scalar::one(), &clifford_mul_unchecked(&phi, &phi));
    let mut comps = total.components();
    let scalar = comps.remove(&0).map(|e| e.scalar_part()).unwrap_or_default();
    let defect = comps.remove(&4).unwrap_or_else(|| ExtElem::zero(&pair.p));
    if let Some((d, _)) = comps.iter().next() {
        return Err(Error::Internal(format!(
            "ν_*(Cas_r) + φ_p² has a nonzero component in degree {d}"
        )));
    }
    let is_lie = defect.is_zero();
    Ok(Criterion {
        is_lie_super_type: is_lie,
        scalar: is_lie.then_some(scalar),
        defect,
        phi_p_forced_zero: pair.phi_p_forced_zero(),
        phi_p_given: pair.phi_p_given(),
    })
}

/// The algebra on `r ⊕ p` with bracket `2ι(z₁)ι(z₂)φ`, assembled whether or
/// not the criterion holds. Brackets `[r, r]` and `[r, p]` are checked to
/// agree with r and ν.
pub fn assemble_algebra(pair: &PairData) -> Result<SuperLie> {
    let (g_qs, rm, pm) = pair.total_space()?;
    let phi = assemble_phi(pair)?.phi;
    let g = lie_from_phi(&phi)?;
    let n = g_qs.dim();
    for i in 0..pair.r.dim() {
        for j in 0..pair.r.dim() {
            let mut expected = zero_vector(n);
            for (k, c) in pair.r.bracket_basis(i, j).iter().enumerate() {
                expected[rm[k]] = c.clone();
            }
            if g.bracket_basis(rm[i], rm[j]) != &expected {
                return Err(Error::Internal(format!(
                    "assembled [{}, {}] differs from r",
                    pair.r.space().label(i),
                    pair.r.space().label(j)
                )));
            }
        }
        for a in 0..pair.p.dim() {
            let mut expected = zero_vector(n);
            for (k, c) in pair.nu[i].apply(&unit_vector(pair.p.dim(), a)).iter().enumerate() {
                expected[pm[k]] = c.clone();
            }
            if g.bracket_basis(rm[i], pm[a]) != &expected {
                return Err(Error::Internal(format!(
                    "assembled [{}, {}] differs from ν",
                    pair.r.space().label(i),
                    pair.p.space().label(a)
                )));
            }
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarIdentity {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub equal: bool,
}

/// Compares the criterion scalar with `(str ad_g Cas_g − str ad_r Cas_r)/24`.
pub fn scalar_identity_check(pair: &PairData) -> Result<ScalarIdentity> {
    let c = criterion(pair)?;
    let lhs = c
        .scalar
        .ok_or_else(|| Error::Precondition("the pair is not of Lie super type".into()))?;
    let g = assemble_algebra(pair)?;
    let rhs = &(&str_ad_casimir(&g)? - &str_ad_casimir(&pair.r)?) / &Scalar::from_int(24);
    Ok(ScalarIdentity {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// An orthogonal splitting `g = r ⊕ p` of a quadratic Lie superalgebra
/// along a subalgebra spanned by basis vectors.
#[derive(Clone, Debug)]
pub struct Decomposition {
    g: SuperLie,
    g_qs: Arc<QuadSpace>,
    r_indices: Vec<usize>,
    /// Basis of p in g-coordinates, even vectors first.
    p_vectors: Vec<Vector>,
    pair: PairData,
}

impl Decomposition {
    pub fn new(g: &SuperLie, r_labels: &[String]) -> Result<Self> {
        let r_indices = Self::resolve_labels(g, r_labels)?;
        let qs = g.quad_space()?;
        let n = g.dim();
        let rows: Vec<Vector> = r_indices.iter().map(|&i| qs.gram().row(i).to_vec()).collect();
        let p_vectors = if rows.is_empty() {
            (0..n).map(|i| unit_vector(n, i)).collect()
        } else {
            Matrix::from_rows(rows)?.null_space()
        };
        Self::with_p_basis(g, r_labels, p_vectors)
    }

    /// Like [`Decomposition::new`] but with a caller-chosen basis of the
    /// orthogonal complement (homogeneous vectors; reordered even-first).
    pub fn with_p_basis(g: &SuperLie, r_labels: &[String], mut p_vectors: Vec<Vector>) -> Result<Self> {
        let r_indices = Self::resolve_labels(g, r_labels)?;
        let g_qs = g.quad_space()?;
        let gs = g.space();
        let n = g.dim();
        {
            let report = g.validate();
            if !report.passed() {
                let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
                return Err(Error::NotQuadratic(failed.join(", ")));
            }
        }
        let in_r = |v: &Vector| v.iter().enumerate().all(|(k, c)| c.is_zero() || r_indices.contains(&k));
        for &i in &r_indices {
            for &j in &r_indices {
                if !in_r(g.bracket_basis(i, j)) {
                    return Err(Error::NotSubalgebra(format!(
                        "[{}, {}] leaves the span",
                        gs.label(i),
                        gs.label(j)
                    )));
                }
            }
        }
        let r_gram = g_qs.gram().select(&r_indices, &r_indices);
        if !r_gram.is_invertible() {
            return Err(Error::DegenerateForm("the form restricted to r is degenerate".into()));
        }
        if p_vectors.len() + r_indices.len() != n {
            return Err(Error::DimensionMismatch("p basis has the wrong size".into()));
        }
        let mut parities = Vec::new();
        for v in &p_vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch("p vector has the wrong length".into()));
            }
            if r_indices.iter().any(|&i| !g_qs.pair(&unit_vector(n, i), v).is_zero()) {
                return Err(Error::Input("p vector is not orthogonal to r".into()));
            }
            parities.push(
                gs.vector_parity(v)
                    .filter(|_| !is_zero_vector(v))
                    .ok_or_else(|| Error::NotHomogeneous("p vector is not homogeneous".into()))?,
            );
        }
        let mut order: Vec<usize> = (0..p_vectors.len()).collect();
        order.sort_by_key(|&k| parities[k]);
        p_vectors = order.iter().map(|&k| p_vectors[k].clone()).collect();
        parities = order.iter().map(|&k| parities[k]).collect();

        // r as a quadratic Lie superalgebra
        let r_labels_sorted: Vec<String> = r_indices.iter().map(|&i| gs.label(i).to_string()).collect();
        let r_basis = r_indices.iter().map(|&i| (gs.label(i).to_string(), gs.parity(i))).collect();
        let (r_space, _) = SuperSpace::from_basis(&format!("{}_r", gs.name()), r_basis)?;
        let r_form = GramForm::from_full(&r_space, &r_gram)?;
        let rn = r_indices.len();
        let r = SuperLie::from_fn(r_space, Some(r_form), |a, b| {
            let v = g.bracket_basis(r_indices[a], r_indices[b]);
            r_indices.iter().map(|&k| v[k].clone()).collect()
        });
        debug_assert_eq!(r.dim(), rn);

        // p with its restricted form
        let mut used: Vec<String> = gs.labels();
        let mut p_labels = Vec::new();
        for (k, v) in p_vectors.iter().enumerate() {
            let unit = (0..n).find(|&i| v == &unit_vector(n, i));
            let mut label = match unit {
                Some(i) => gs.label(i).to_string(),
                None => format!("p{}", k + 1),
            };
            while p_labels.contains(&label) || (unit.is_none() && used.contains(&label)) || r_labels_sorted.contains(&label) {
                label.push('\'');
            }
            used.push(label.clone());
            p_labels.push(label);
        }
        let (p_space, _) = SuperSpace::from_basis(&format!("{}_p", gs.name()), p_labels.into_iter().zip(parities).collect())?;
        let pm = if p_vectors.is_empty() { Matrix::zeros(n, 0) } else { Matrix::from_columns(&p_vectors)? };
        let p_gram = &(&pm.transpose() * g_qs.gram()) * &pm;
        let p_qs = Arc::new(QuadSpace::new(p_space.clone(), GramForm::from_full(&p_space, &p_gram)?)?);

        let to_p = |v: &Vector| -> Vector { p_coordinates(&g_qs, &p_qs, &p_vectors, v) };
        let nu: Vec<Matrix> = r_indices
            .iter()
            .map(|&i| {
                let cols: Vec<Vector> = p_vectors.iter().map(|y| to_p(&g.bracket(&unit_vector(n, i), y))).collect();
                Matrix::from_columns(&cols)
            })
            .collect::<Result<_>>()?;
        let phi_p = cubic_from_bracket(&p_qs, |a, b| to_p(&g.bracket(&p_vectors[a], &p_vectors[b])));
        let pair = PairData::new(r, p_qs, nu, Some(phi_p))?;
        Ok(Self {
            g: g.clone(),
            g_qs,
            r_indices,
            p_vectors,
            pair,
        })
    }

    fn resolve_labels(g: &SuperLie, r_labels: &[String]) -> Result<Vec<usize>> {
        let mut idx = r_labels
            .iter()
            .map(|l| g.space().index_of(l))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        if idx.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("repeated label in the subalgebra span".into()));
        }
        Ok(idx)
    }

    pub fn g(&self) -> &SuperLie {
        &self.g
    }

    pub fn g_space(&self) -> &Arc<QuadSpace> {
        &self.g_qs
    }

    pub fn r_indices(&self) -> &[usize] {
        &self.r_indices
    }

    pub fn p_vectors(&self) -> &[Vector] {
        &self.p_vectors
    }

    pub fn pair(&self) -> &PairData {
        &self.pair
    }

    /// Coordinates in the p basis of a vector of p given in g-coordinates.
    pub fn p_coordinates(&self, v: &Vector) -> Vector {
        p_coordinates(&self.g_qs, &self.pair.p, &self.p_vectors, v)
    }

    /// `π_p` of a g-vector, in p coordinates.
    pub fn project_p(&self, v: &Vector) -> Vector {
        self.p_coordinates(v)
    }
}

// c_k = (y^k, v) with y^k the p-dual written in g-coordinates; this is also
// the orthogonal projection to p.
fn p_coordinates(g: &QuadSpace, p: &QuadSpace, p_vectors: &[Vector], v: &Vector) -> Vector {
    let n = g.dim();
    (0..p.dim())
        .map(|k| {
            let mut dual = zero_vector(n);
            for (l, c) in p.dual(k).iter().enumerate() {
                add_scaled(&mut dual, c, &p_vectors[l]);
            }
            g.pair(&dual, v)
        })
        .collect()
}

/// A ν_* table keyed by r-labels, for reports.
pub fn nu_star_labeled(pair: &PairData) -> Result<BTreeMap<String, ExtElem>> {
    pair.nu_star_table().map(|t| {
        t.into_iter()
            .enumerate()
            .map(|(i, e)| (pair.r.space().label(i).to_string(), e))
            .collect()
    })
}
