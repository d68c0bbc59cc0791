//! Lie superalgebras given by structure constants, and the correspondence
//! between quadratic Lie superalgebras and cubic elements of Λ(g).

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::clifford::clifford_square_components;
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vector, unit_vector, zero_vector, Matrix, Vector};
use crate::multilinear::ExtElem;
use crate::scalar::Scalar;
use crate::space::{
    check_basis_change, supertrace_matrix, validate_form, GramForm, Parity, QuadSpace, SuperSpace,
    ValidationReport,
};

/// A Lie superalgebra presented by the brackets of its basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperLie {
    space: SuperSpace,
    // table[i * n + j] = [x_i, x_j]
    table: Vec<Vector>,
    form: Option<GramForm>,
}

/// A basis triple on which the super Jacobi identity fails, with the
/// value of `[x,[y,z]] − [[x,y],z] − (−1)^{|x||y|}[y,[x,z]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub value: Vector,
}

impl SuperLie {
    /// Builds the algebra from brackets `[x_i, x_j]` listed for some pairs.
    /// A missing entry `(j, i)` is filled from `(i, j)` by skew
    /// super-symmetry; if both are given, both are kept and checked later
    /// by [`SuperLie::validate`].
    pub fn new(space: SuperSpace, brackets: BTreeMap<(usize, usize), Vector>, form: Option<GramForm>) -> Result<Self> {
        let n = space.dim();
        let mut table = vec![zero_vector(n); n * n];
        let mut given = vec![false; n * n];
        for (&(i, j), v) in &brackets {
            if i >= n || j >= n || v.len() != n {
                return Err(Error::DimensionMismatch(format!("bracket entry ({i},{j}) out of range")));
            }
            table[i * n + j] = v.clone();
            given[i * n + j] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if given[i * n + j] && !given[j * n + i] {
                    let both_odd = space.parity(i).both_odd(space.parity(j));
                    let v = &table[i * n + j];
                    // [x_j, x_i] = −(−1)^{|x_i||x_j|} [x_i, x_j]
                    table[j * n + i] = if both_odd { v.clone() } else { v.iter().map(|c| -c).collect() };
                }
            }
        }
        if let Some(f) = &form {
            if f.even_block.rows() != space.even_dim() || f.odd_block.rows() != space.odd_dim() {
                return Err(Error::DimensionMismatch("form blocks do not match the graded dimension".into()));
            }
        }
        Ok(Self { space, table, form })
    }

    /// The algebra with the brackets given by `f(i, j) = [x_i, x_j]` for all pairs.
    pub fn from_fn(space: SuperSpace, form: Option<GramForm>, f: impl Fn(usize, usize) -> Vector) -> Self {
        let n = space.dim();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(f(i, j));
            }
        }
        Self { space, table, form }
    }

    pub fn abelian(space: SuperSpace, form: Option<GramForm>) -> Self {
        let n = space.dim();
        Self::from_fn(space, form, |_, _| zero_vector(n))
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn form(&self) -> Option<&GramForm> {
        self.form.as_ref()
    }

    pub fn with_form(mut self, form: GramForm) -> Self {
        self.form = Some(form);
        self
    }

    /// `[x_i, x_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim() + j]
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    add_scaled(&mut out, &(a * b), self.bracket_basis(i, j));
                }
            }
        }
        out
    }

    /// Matrix of `ad x`; column j is `[x, x_j]`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &unit_vector(n, j))).collect();
        Matrix::from_fn(n, n, |i, j| cols[j][i].clone())
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad_matrix(&unit_vector(self.dim(), i))
    }

    fn sign_swap(&self, i: usize, j: usize) -> bool {
        self.space.parity(i).both_odd(self.space.parity(j))
    }

    /// Jacobiator on basis vectors.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let n = self.dim();
        let mut out = self.bracket(&unit_vector(n, i), self.bracket_basis(j, k));
        let t = self.bracket(self.bracket_basis(i, j), &unit_vector(n, k));
        add_scaled(&mut out, &Scalar::from_int(-1), &t);
        let u = self.bracket(&unit_vector(n, j), self.bracket_basis(i, k));
        let s = if self.sign_swap(i, j) { 1 } else { -1 };
        add_scaled(&mut out, &Scalar::from_int(s), &u);
        out
    }

    /// All basis triples where super Jacobi fails, in lexicographic order.
    pub fn jacobi_failures(&self) -> Vec<JacobiFailure> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let value = self.jacobiator(i, j, k);
                    if !is_zero_vector(&value) {
                        out.push(JacobiFailure { triple: (i, j, k), value });
                    }
                }
            }
        }
        out
    }

    fn triple_labels(&self, (i, j, k): (usize, usize, usize)) -> String {
        format!("({}, {}, {})", self.space.label(i), self.space.label(j), self.space.label(k))
    }

    /// Checks the grading of the brackets, skew super-symmetry, the super
    /// Jacobi identity on all basis triples and, when a form is attached,
    /// the form itself and its invariance.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let sp = &self.space;
        let mut report = ValidationReport::default();

        let mut parity_fail = None;
        let mut skew_fail = None;
        'pairs: for i in 0..n {
            for j in 0..n {
                let v = self.bracket_basis(i, j);
                let expect = sp.parity(i) + sp.parity(j);
                if parity_fail.is_none() && (0..n).any(|k| !v[k].is_zero() && sp.parity(k) != expect) {
                    parity_fail = Some(format!("[{}, {}] has the wrong parity", sp.label(i), sp.label(j)));
                }
                let w = self.bracket_basis(j, i);
                let ok = if self.sign_swap(i, j) {
                    v.iter().zip(w).all(|(a, b)| a == b)
                } else {
                    v.iter().zip(w).all(|(a, b)| (a + b).is_zero())
                };
                if skew_fail.is_none() && !ok {
                    skew_fail = Some(format!("[{}, {}] vs [{}, {}]", sp.label(i), sp.label(j), sp.label(j), sp.label(i)));
                }
                if parity_fail.is_some() && skew_fail.is_some() {
                    break 'pairs;
                }
            }
        }
        report.push("bracket parity", parity_fail.is_none(), parity_fail);
        report.push("skew super-symmetry", skew_fail.is_none(), skew_fail);

        let failures = self.jacobi_failures();
        let detail = failures.first().map(|f| {
            format!("fails on {} ({} failing triples)", self.triple_labels(f.triple), failures.len())
        });
        report.push("super Jacobi", failures.is_empty(), detail);

        if let Some(form) = &self.form {
            match validate_form(sp, form) {
                Ok(r) => report.extend(r),
                Err(e) => report.push("form shape", false, Some(e.to_string())),
            }
            let g = form.full();
            let mut inv_fail = None;
            'inv: for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        // ([x_i, x_j], x_k) = (x_i, [x_j, x_k])
                        let lhs: Scalar = (0..n).map(|a| &self.bracket_basis(i, j)[a] * &g[(a, k)]).sum();
                        let rhs: Scalar = (0..n).map(|a| &g[(i, a)] * &self.bracket_basis(j, k)[a]).sum();
                        if lhs != rhs {
                            inv_fail = Some(format!("fails on {}", self.triple_labels((i, j, k))));
                            break 'inv;
                        }
                    }
                }
            }
            report.push("form invariance", inv_fail.is_none(), inv_fail);
        }
        report
    }

    /// The underlying space with its form, as the ambient space of Λ(g).
    pub fn quad_space(&self) -> Result<Arc<QuadSpace>> {
        let form = self
            .form
            .clone()
            .ok_or_else(|| Error::NotQuadratic("no invariant form attached".into()))?;
        Ok(Arc::new(QuadSpace::new(self.space.clone(), form)?))
    }

    fn require_quadratic(&self) -> Result<()> {
        if self.form.is_none() {
            return Err(Error::NotQuadratic("no invariant form attached".into()));
        }
        let report = self.validate();
        if !report.passed() {
            let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
            return Err(Error::NotQuadratic(format!("failed checks: {}", failed.join(", "))));
        }
        Ok(())
    }

    /// The same algebra in the basis given by the columns of `change`.
    pub fn change_basis(&self, change: &Matrix, labels: &[String]) -> Result<SuperLie> {
        let parities = check_basis_change(&self.space, change)?;
        if labels.len() != parities.len() {
            return Err(Error::DimensionMismatch("label count differs from basis size".into()));
        }
        let (space, _) = SuperSpace::from_basis(self.space.name(), labels.iter().cloned().zip(parities).collect())?;
        let inv = change.inverse().ok_or_else(|| Error::Input("basis change is singular".into()))?;
        let cols: Vec<Vector> = (0..self.dim()).map(|j| change.column(j)).collect();
        let form = match &self.form {
            Some(f) => {
                let g = &(&change.transpose() * &f.full()) * change;
                Some(GramForm::from_full(&space, &g)?)
            }
            None => None,
        };
        Ok(SuperLie::from_fn(space, form, |a, b| inv.apply(&self.bracket(&cols[a], &cols[b]))))
    }

    /// Structure constants as a sparse map over basis pairs.
    pub fn nonzero_brackets(&self) -> BTreeMap<(usize, usize), Vector> {
        let n = self.dim();
        let mut out = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.bracket_basis(i, j);
                if !is_zero_vector(v) {
                    out.insert((i, j), v.clone());
                }
            }
        }
        out
    }
}

/// `validate_lie` as a free function.
pub fn validate_lie(g: &SuperLie) -> ValidationReport {
    g.validate()
}

fn check_cubic(phi: &ExtElem) -> Result<()> {
    if phi.terms().keys().any(|m| m.degree() != 3) {
        return Err(Error::WrongDegree("cubic element must lie in Λ³".into()));
    }
    if phi.parity() != Some(Parity::Even) {
        return Err(Error::NotHomogeneous("cubic element must be even".into()));
    }
    Ok(())
}

/// `[z₁, z₂]^φ = 2ι(z₁)ι(z₂)φ`.
pub fn bracket_from_phi(phi: &ExtElem, z1: &[Scalar], z2: &[Scalar]) -> Result<Vector> {
    check_cubic(phi)?;
    let n = phi.space().dim();
    if z1.len() != n || z2.len() != n {
        return Err(Error::DimensionMismatch("bracket arguments have the wrong length".into()));
    }
    phi.contract_linear(z2).contract_linear(z1).scale(&Scalar::from_int(2)).to_vector()
}

/// The algebra `(V, [·,·]^φ)` with the form of the ambient space of φ.
pub fn lie_from_phi(phi: &ExtElem) -> Result<SuperLie> {
    check_cubic(phi)?;
    let qs = phi.space();
    let n = qs.dim();
    let two = Scalar::from_int(2);
    let firsts: Vec<ExtElem> = (0..n).map(|j| phi.contract_basis(j)).collect();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for first in &firsts {
            table.push(first.contract_basis(i).scale(&two).to_vector()?);
        }
    }
    Ok(SuperLie {
        space: qs.space().clone(),
        table,
        form: Some(qs.form().clone()),
    })
}

/// `−1/12 Σ_{ijk} (−1)^{|e_i||e_j|+|e_k|} ([e_i,e_j], e_k) e^i∧e^j∧e^k`
/// over `qs`, for an arbitrary bilinear map `bracket` with values in `qs`.
pub(crate) fn cubic_from_bracket(qs: &Arc<QuadSpace>, bracket: impl Fn(usize, usize) -> Vector) -> ExtElem {
    let n = qs.dim();
    let duals: Vec<ExtElem> = (0..n).map(|i| ExtElem::vector(qs, qs.dual(i))).collect();
    let mut out = ExtElem::zero(qs);
    for i in 0..n {
        for j in 0..n {
            let b = bracket(i, j);
            if is_zero_vector(&b) {
                continue;
            }
            let ij = duals[i].wedge_unchecked(&duals[j]);
            for (k, dk) in duals.iter().enumerate() {
                let c = qs.pair(&b, &unit_vector(n, k));
                if c.is_zero() {
                    continue;
                }
                let neg = qs.parity(i).both_odd(qs.parity(j)) ^ qs.parity(k).is_odd();
                let coeff = &c * &Scalar::ratio(if neg { 1 } else { -1 }, 12);
                out.add_scaled(&coeff, &ij.wedge_unchecked(dk));
            }
        }
    }
    out
}

/// The cubic element of a quadratic Lie superalgebra.
pub fn phi_from_bracket(g: &SuperLie) -> Result<ExtElem> {
    g.require_quadratic()?;
    let qs = g.quad_space()?;
    Ok(cubic_from_bracket(&qs, |i, j| g.bracket_basis(i, j).clone()))
}

/// Outcome of testing whether `φ²` is a scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticCheck {
    pub is_lie: bool,
    pub scalar: Option<Scalar>,
    /// Degree-4 part of `φ²`.
    pub defect: ExtElem,
    /// Any other nonzero components (expected empty).
    pub stray: BTreeMap<usize, ExtElem>,
}

/// Decides whether `[·,·]^φ` is a Lie superbracket by testing `φ² ∈ ℂ`.
pub fn quadratic_structure_check(phi: &ExtElem) -> Result<QuadraticCheck> {
    check_cubic(phi)?;
    let mut comps = clifford_square_components(phi);
    let scalar = comps.remove(&0).map(|e| e.scalar_part()).unwrap_or_default();
    let defect = comps.remove(&4).unwrap_or_else(|| ExtElem::zero(phi.space()));
    let is_lie = defect.is_zero();
    Ok(QuadraticCheck {
        is_lie,
        scalar: is_lie.then_some(scalar),
        defect,
        stray: comps,
    })
}

/// The Casimir `Σ x_i ⊗ x^i` as ordered pairs of coordinate vectors.
pub fn casimir_pairs(g: &SuperLie) -> Result<Vec<(Vector, Vector)>> {
    let qs = g.quad_space()?;
    let n = g.dim();
    Ok((0..n).map(|i| (unit_vector(n, i), qs.dual(i).clone())).collect())
}

/// `Σ_i ad x_i ∘ ad x^i` as a matrix.
pub fn ad_casimir(g: &SuperLie) -> Result<Matrix> {
    let n = g.dim();
    let mut acc = Matrix::zeros(n, n);
    for (x, xd) in casimir_pairs(g)? {
        acc = &acc + &(&g.ad_matrix(&x) * &g.ad_matrix(&xd));
    }
    Ok(acc)
}

/// `str(Σ_i ad x_i ∘ ad x^i)`.
pub fn str_ad_casimir(g: &SuperLie) -> Result<Scalar> {
    Ok(supertrace_matrix(g.space(), &ad_casimir(g)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketSummary {
    pub x: String,
    pub y: String,
    pub value: BTreeMap<String, Scalar>,
}

/// Nonzero brackets `[x_i, x_j]` with `i ≤ j`, keyed by labels.
pub fn bracket_summary(g: &SuperLie) -> Vec<BracketSummary> {
    let sp = g.space();
    g.nonzero_brackets()
        .into_iter()
        .filter(|((i, j), _)| i <= j)
        .map(|((i, j), v)| BracketSummary {
            x: sp.label(i).to_string(),
            y: sp.label(j).to_string(),
            value: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (sp.label(k).to_string(), c.clone()))
                .collect(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multilinear::ext_pairing;

    fn int(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| v(r)).collect()).unwrap()
    }

    fn sl2() -> SuperLie {
        let s = SuperSpace::new("sl2", &["h", "e", "f"], &[] as &[&str]).unwrap();
        let mut b = BTreeMap::new();
        b.insert((0, 1), v(&[0, 2, 0]));
        b.insert((0, 2), v(&[0, 0, -2]));
        b.insert((1, 2), v(&[1, 0, 0]));
        let form = GramForm::new(mat(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]), Matrix::zeros(0, 0));
        SuperLie::new(s, b, Some(form)).unwrap()
    }

    fn rank_one_candidate() -> SuperLie {
        let s = SuperSpace::new("c", &["x"], &["y1", "y2"]).unwrap();
        let mut b = BTreeMap::new();
        b.insert((0, 1), v(&[0, 1, 0]));
        b.insert((0, 2), v(&[0, 0, -1]));
        b.insert((1, 2), v(&[1, 0, 0]));
        SuperLie::new(s, b, None).unwrap()
    }

    #[test]
    fn skew_fill() {
        let g = sl2();
        assert_eq!(g.bracket_basis(1, 0), &v(&[0, -2, 0]));
        let c = rank_one_candidate();
        assert_eq!(c.bracket_basis(2, 1), &v(&[1, 0, 0]));
    }

    #[test]
    fn validate_examples() {
        let ab = SuperLie::abelian(SuperSpace::new("a", &["a", "b"], &["c"]).unwrap(), None);
        assert!(ab.validate().passed());
        assert!(sl2().validate().passed());
        let c = rank_one_candidate();
        let report = c.validate();
        assert!(!report.passed());
        let first = &c.jacobi_failures()[0];
        assert_eq!(first.triple, (1, 1, 2));
        assert!(report.checks.iter().any(|r| r.detail.as_deref().is_some_and(|d| d.contains("(y1, y1, y2)"))));
    }

    #[test]
    fn sl2_cubic_round_trip() {
        let g = sl2();
        let phi = phi_from_bracket(&g).unwrap();
        let qs = phi.space().clone();
        assert_eq!(phi, ExtElem::wedge_word(&qs, &[0, 1, 2]).scale(&Scalar::ratio(1, 2)));
        let back = lie_from_phi(&phi).unwrap();
        assert_eq!(back.table, g.table);
        let hef = ExtElem::wedge_word(&qs, &[0, 1, 2]);
        assert_eq!(ext_pairing(&phi, &hef).unwrap(), int(-1));
        let chk = quadratic_structure_check(&phi).unwrap();
        assert!(chk.is_lie);
        assert_eq!(chk.scalar, Some(Scalar::ratio(1, 2)));
    }

    #[test]
    fn sl2_casimir() {
        let g = sl2();
        let pairs = casimir_pairs(&g).unwrap();
        assert_eq!(pairs[0].1, vec![Scalar::ratio(1, 2), int(0), int(0)]);
        assert_eq!(pairs[1].1, v(&[0, 0, 1]));
        assert_eq!(pairs[2].1, v(&[0, 1, 0]));
        assert_eq!(ad_casimir(&g).unwrap(), Matrix::identity(3).scale(&int(4)));
        assert_eq!(str_ad_casimir(&g).unwrap(), int(12));
    }

    #[test]
    fn zero_phi_is_abelian() {
        let g = sl2();
        let qs = g.quad_space().unwrap();
        let zero = ExtElem::zero(&qs);
        let chk = quadratic_structure_check(&zero).unwrap();
        assert!(chk.is_lie);
        assert_eq!(chk.scalar, Some(int(0)));
        assert!(lie_from_phi(&zero).unwrap().nonzero_brackets().is_empty());
    }

    #[test]
    fn rejects_non_cubic() {
        let qs = sl2().quad_space().unwrap();
        let e = ExtElem::wedge_word(&qs, &[0, 1]);
        assert!(matches!(bracket_from_phi(&e, &v(&[1, 0, 0]), &v(&[0, 1, 0])), Err(Error::WrongDegree(_))));
    }
}
