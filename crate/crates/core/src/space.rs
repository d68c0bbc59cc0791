//! Graded vector spaces, consistent super-symmetric forms, dual bases and
//! supertraces.

use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Self {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// True iff `(-1)^{|self||other|} = -1`.
    pub fn both_odd(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisVector {
    pub label: String,
    pub parity: Parity,
}

/// A super vector space with a homogeneous basis, even vectors first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    name: String,
    basis: Vec<BasisVector>,
    even_dim: usize,
}

impl SuperSpace {
    pub fn new<S: AsRef<str>>(name: &str, even: &[S], odd: &[S]) -> Result<Self> {
        let basis = even
            .iter()
            .map(|l| (l.as_ref().to_string(), Parity::Even))
            .chain(odd.iter().map(|l| (l.as_ref().to_string(), Parity::Odd)))
            .collect();
        Ok(Self::from_basis(name, basis)?.0)
    }

    /// Normalizes an arbitrary homogeneous basis into even-before-odd order.
    ///
    /// Returns the space and, for each input position, its canonical index.
    pub fn from_basis(name: &str, basis: Vec<(String, Parity)>) -> Result<(Self, Vec<usize>)> {
        let mut seen = HashSet::new();
        for (label, _) in &basis {
            if label.is_empty() {
                return Err(Error::Input("empty basis label".into()));
            }
            if !seen.insert(label.clone()) {
                return Err(Error::Input(format!("duplicate basis label {label:?}")));
            }
        }
        let mut order: Vec<usize> = (0..basis.len()).collect();
        order.sort_by_key(|&i| basis[i].1);
        let mut position = vec![0; basis.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let basis: Vec<BasisVector> = order
            .iter()
            .map(|&i| BasisVector {
                label: basis[i].0.clone(),
                parity: basis[i].1,
            })
            .collect();
        let even_dim = basis.iter().filter(|b| b.parity == Parity::Even).count();
        Ok((
            Self {
                name: name.to_string(),
                basis,
                even_dim,
            },
            position,
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn even_dim(&self) -> usize {
        self.even_dim
    }

    pub fn odd_dim(&self) -> usize {
        self.basis.len() - self.even_dim
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn parities(&self) -> Vec<Parity> {
        self.basis.iter().map(|b| b.parity).collect()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.iter().map(|b| b.label.clone()).collect()
    }

    pub fn even_labels(&self) -> Vec<String> {
        self.labels()[..self.even_dim].to_vec()
    }

    pub fn odd_labels(&self) -> Vec<String> {
        self.labels()[self.even_dim..].to_vec()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b.label == label)
            .ok_or_else(|| Error::Input(format!("unknown basis label {label:?} in space {:?}", self.name)))
    }

    /// Parity of a coordinate vector, `None` if it mixes parities. The zero
    /// vector counts as even.
    pub fn vector_parity(&self, v: &[Scalar]) -> Option<Parity> {
        let mut parity = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match parity {
                None => parity = Some(self.parity(i)),
                Some(p) if p != self.parity(i) => return None,
                _ => {}
            }
        }
        Some(parity.unwrap_or(Parity::Even))
    }

    /// Splits a vector into its even and odd parts.
    pub fn split_parity(&self, v: &[Scalar]) -> (Vector, Vector) {
        let mut even = v.to_vec();
        let mut odd = v.to_vec();
        for i in 0..v.len() {
            if self.parity(i).is_odd() {
                even[i] = Scalar::zero();
            } else {
                odd[i] = Scalar::zero();
            }
        }
        (even, odd)
    }
}

/// Consistent super-symmetric bilinear form, stored as its two diagonal
/// blocks. Cross pairings between even and odd vectors are zero by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GramForm {
    pub even_block: Matrix,
    pub odd_block: Matrix,
}

impl GramForm {
    pub fn new(even_block: Matrix, odd_block: Matrix) -> Self {
        Self { even_block, odd_block }
    }

    /// The full Gram matrix `G[i][j] = (e_i, e_j)` in even-then-odd order.
    pub fn full(&self) -> Matrix {
        Matrix::block_diag(&self.even_block, &self.odd_block)
    }

    /// Extracts the blocks of a full Gram matrix; fails if cross pairings
    /// are nonzero.
    pub fn from_full(space: &SuperSpace, g: &Matrix) -> Result<Self> {
        let n = space.dim();
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "Gram matrix is {}x{}, space has dimension {n}",
                g.rows(),
                g.cols()
            )));
        }
        let even: Vec<usize> = (0..space.even_dim()).collect();
        let odd: Vec<usize> = (space.even_dim()..n).collect();
        if !g.select(&even, &odd).is_zero() || !g.select(&odd, &even).is_zero() {
            return Err(Error::Input("form pairs even and odd vectors".into()));
        }
        Ok(Self::new(g.select(&even, &even), g.select(&odd, &odd)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

/// Pass/fail verdicts for a list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn push(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.checks.extend(other.checks);
    }
}

pub fn validate_form(space: &SuperSpace, form: &GramForm) -> Result<ValidationReport> {
    let (m, k) = (space.even_dim(), space.odd_dim());
    let shape = |b: &Matrix| (b.rows(), b.cols());
    if shape(&form.even_block) != (m, m) || shape(&form.odd_block) != (k, k) {
        return Err(Error::DimensionMismatch(format!(
            "form blocks {:?} and {:?} do not match graded dimension ({m}|{k})",
            shape(&form.even_block),
            shape(&form.odd_block)
        )));
    }
    let mut report = ValidationReport::default();
    report.push("even block symmetric", form.even_block.is_symmetric(), None);
    report.push("odd block antisymmetric", form.odd_block.is_antisymmetric(), None);
    report.push(
        "even block non-degenerate",
        form.even_block.is_invertible(),
        None,
    );
    let odd_ok = form.odd_block.is_invertible();
    report.push(
        "odd block non-degenerate",
        odd_ok,
        (!odd_ok && k % 2 == 1).then(|| format!("odd dimension {k} admits no non-degenerate antisymmetric form")),
    );
    Ok(report)
}

/// Dual basis with `(x^i, x_j) = δ_ij`, as coordinate columns.
pub fn dual_basis(space: &SuperSpace, form: &GramForm) -> Result<Vec<Vector>> {
    let report = validate_form(space, form)?;
    if !report.passed() {
        let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        return Err(Error::DegenerateForm(failed.join(", ")));
    }
    let inv = form
        .full()
        .inverse()
        .ok_or_else(|| Error::DegenerateForm("Gram matrix is singular".into()))?;
    // x^i = Σ_k A_ki e_k with A^T G = I, so the columns of A are the rows of G^{-1}
    Ok((0..space.dim()).map(|i| inv.row(i).to_vec()).collect())
}

/// A super space together with a validated non-degenerate form and its
/// cached dual basis. This is the ambient object for exterior and Clifford
/// algebra computations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSpace {
    space: SuperSpace,
    form: GramForm,
    gram: Matrix,
    dual: Vec<Vector>,
}

impl QuadSpace {
    pub fn new(space: SuperSpace, form: GramForm) -> Result<Self> {
        let report = validate_form(&space, &form)?;
        if !report.passed() {
            let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
            return Err(Error::DegenerateForm(failed.join(", ")));
        }
        let dual = dual_basis(&space, &form)?;
        let gram = form.full();
        Ok(Self {
            space,
            form,
            gram,
            dual,
        })
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn form(&self) -> &GramForm {
        &self.form
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    /// `(e_i, e_j)`.
    pub fn pairing(&self, i: usize, j: usize) -> &Scalar {
        &self.gram[(i, j)]
    }

    /// `(u, v)` for coordinate vectors.
    pub fn pair(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let gv = self.gram.apply(v);
        u.iter().zip(&gv).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum()
    }

    /// The dual vector `x^i`.
    pub fn dual(&self, i: usize) -> &Vector {
        &self.dual[i]
    }

    pub fn dual_basis(&self) -> &[Vector] {
        &self.dual
    }

    /// Coordinates of `v` read off through the form: `c_j = (x^j, v)`.
    pub fn coordinates_via_form(&self, v: &[Scalar]) -> Vector {
        (0..self.dim()).map(|j| self.pair(&self.dual[j], v)).collect()
    }

    /// Orthogonal direct sum `self ⊕ other`; returns the sum and the index
    /// maps of both summands into it.
    pub fn orthogonal_sum(&self, other: &QuadSpace, name: &str) -> Result<(QuadSpace, Vec<usize>, Vec<usize>)> {
        let a = &self.space;
        let b = &other.space;
        let mut basis: Vec<(String, Parity)> = Vec::new();
        for s in [a, b] {
            for v in s.basis() {
                basis.push((v.label.clone(), v.parity));
            }
        }
        let (space, position) = SuperSpace::from_basis(name, basis)?;
        let a_map = position[..a.dim()].to_vec();
        let b_map = position[a.dim()..].to_vec();
        let n = space.dim();
        let mut g = Matrix::zeros(n, n);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                g[(a_map[i], a_map[j])] = self.gram[(i, j)].clone();
            }
        }
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                g[(b_map[i], b_map[j])] = other.gram[(i, j)].clone();
            }
        }
        let form = GramForm::from_full(&space, &g)?;
        Ok((QuadSpace::new(space, form)?, a_map, b_map))
    }

    /// The same space in a new basis whose vectors are the columns of
    /// `change` (old coordinates). Columns must be homogeneous and listed
    /// even-first.
    pub fn change_basis(&self, change: &Matrix, labels: &[String]) -> Result<QuadSpace> {
        let parities = check_basis_change(&self.space, change)?;
        if labels.len() != parities.len() {
            return Err(Error::DimensionMismatch("label count differs from basis size".into()));
        }
        let basis = labels.iter().cloned().zip(parities).collect();
        let (space, _) = SuperSpace::from_basis(self.space.name(), basis)?;
        let g = &(&change.transpose() * &self.gram) * change;
        QuadSpace::new(space.clone(), GramForm::from_full(&space, &g)?)
    }
}

/// Validates a parity-preserving change of basis; returns the parities of
/// the new basis vectors.
pub fn check_basis_change(space: &SuperSpace, change: &Matrix) -> Result<Vec<Parity>> {
    let n = space.dim();
    if change.rows() != n || change.cols() != n {
        return Err(Error::DimensionMismatch("basis change must be square".into()));
    }
    if !change.is_invertible() {
        return Err(Error::Input("basis change is singular".into()));
    }
    let mut parities = Vec::with_capacity(n);
    for j in 0..n {
        let col = change.column(j);
        let p = space
            .vector_parity(&col)
            .filter(|_| !is_zero_vector(&col))
            .ok_or_else(|| Error::NotHomogeneous(format!("new basis vector {j}")))?;
        parities.push(p);
    }
    if parities.windows(2).any(|w| w[0] == Parity::Odd && w[1] == Parity::Even) {
        return Err(Error::Input("new basis must list even vectors first".into()));
    }
    Ok(parities)
}

/// An endomorphism of a super space, as a matrix in the even-then-odd basis
/// together with its parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endo {
    matrix: Matrix,
    parity: Parity,
}

impl Endo {
    /// Checks the block structure: even maps have vanishing off-diagonal
    /// blocks, odd maps vanishing diagonal blocks.
    pub fn new(space: &SuperSpace, matrix: Matrix, parity: Parity) -> Result<Self> {
        let n = space.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "endomorphism is {}x{}, space has dimension {n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        for i in 0..n {
            for j in 0..n {
                if !matrix[(i, j)].is_zero() && space.parity(i) + space.parity(j) != parity {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({i},{j}) breaks the block structure of a {parity} map"
                    )));
                }
            }
        }
        Ok(Self { matrix, parity })
    }

    /// Infers the parity from the nonzero entries; the zero map is even.
    pub fn infer(space: &SuperSpace, matrix: Matrix) -> Result<Self> {
        let n = matrix.rows().min(matrix.cols());
        let mut parity = Parity::Even;
        'outer: for i in 0..n.min(space.dim()) {
            for j in 0..matrix.cols().min(space.dim()) {
                if !matrix[(i, j)].is_zero() {
                    parity = space.parity(i) + space.parity(j);
                    break 'outer;
                }
            }
        }
        Self::new(space, matrix, parity)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    /// `str(T) = tr(α) − tr(δ)`.
    pub fn supertrace(&self, space: &SuperSpace) -> Scalar {
        supertrace_matrix(space, &self.matrix)
    }

    /// `[a, b] = ab − (−1)^{|a||b|} ba`.
    pub fn supercommutator(&self, other: &Endo) -> Endo {
        let ab = &self.matrix * &other.matrix;
        let ba = &other.matrix * &self.matrix;
        let matrix = if self.parity.both_odd(other.parity) {
            &ab + &ba
        } else {
            &ab - &ba
        };
        Endo {
            matrix,
            parity: self.parity + other.parity,
        }
    }

    /// Membership in `osp(V)`: `(T x, y) + (−1)^{|T||x|}(x, T y) = 0` on
    /// all basis pairs.
    pub fn is_orthosymplectic(&self, qs: &QuadSpace) -> bool {
        let n = qs.dim();
        let g = qs.gram();
        // (T e_i, e_j) = Σ_k T_ki G_kj = (T^T G)_ij ; (e_i, T e_j) = (G T)_ij
        let tg = &self.matrix.transpose() * g;
        let gt = g * &self.matrix;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let second = if self.parity.both_odd(qs.parity(i)) {
                    -&gt[(i, j)]
                } else {
                    gt[(i, j)].clone()
                };
                (&tg[(i, j)] + &second).is_zero()
            })
        })
    }
}

/// Supertrace of a matrix written in the even-then-odd basis of `space`.
pub fn supertrace_matrix(space: &SuperSpace, m: &Matrix) -> Scalar {
    (0..space.dim())
        .map(|i| {
            if space.parity(i).is_odd() {
                -&m[(i, i)]
            } else {
                m[(i, i)].clone()
            }
        })
        .sum()
}

pub fn supertrace(space: &SuperSpace, t: &Endo) -> Scalar {
    t.supertrace(space)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn validate_form_examples() {
        let even1 = SuperSpace::new("V", &["e"], &[] as &[&str]).unwrap();
        let ok = validate_form(&even1, &GramForm::new(mat(&[&[1]]), Matrix::zeros(0, 0))).unwrap();
        assert!(ok.passed());
        let zero = validate_form(&even1, &GramForm::new(mat(&[&[0]]), Matrix::zeros(0, 0))).unwrap();
        assert!(!zero.passed());
        let odd2 = SuperSpace::new("V", &[] as &[&str], &["y1", "y2"]).unwrap();
        let symp = validate_form(&odd2, &GramForm::new(Matrix::zeros(0, 0), mat(&[&[0, 1], &[-1, 0]]))).unwrap();
        assert!(symp.passed());
        let sym = validate_form(&odd2, &GramForm::new(Matrix::zeros(0, 0), mat(&[&[1, 0], &[0, 1]]))).unwrap();
        assert!(!sym.passed());
        assert!(matches!(
            validate_form(&odd2, &GramForm::new(mat(&[&[1]]), Matrix::zeros(0, 0))),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn odd_dimension_cannot_be_non_degenerate() {
        let odd1 = SuperSpace::new("V", &[] as &[&str], &["y"]).unwrap();
        let r = validate_form(&odd1, &GramForm::new(Matrix::zeros(0, 0), mat(&[&[0]]))).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn dual_basis_examples() {
        let v = SuperSpace::new("V", &["a", "b"], &[] as &[&str]).unwrap();
        let id = dual_basis(&v, &GramForm::new(Matrix::identity(2), Matrix::zeros(0, 0))).unwrap();
        assert_eq!(id, vec![mat(&[&[1, 0]]).row(0).to_vec(), mat(&[&[0, 1]]).row(0).to_vec()]);
        let swap = dual_basis(&v, &GramForm::new(mat(&[&[0, 1], &[1, 0]]), Matrix::zeros(0, 0))).unwrap();
        assert_eq!(swap[0], vec![Scalar::zero(), Scalar::one()]);
        assert_eq!(swap[1], vec![Scalar::one(), Scalar::zero()]);
        // (y1, y2) = 1  =>  y^1 = -y2, y^2 = y1
        let w = SuperSpace::new("W", &[] as &[&str], &["y1", "y2"]).unwrap();
        let d = dual_basis(&w, &GramForm::new(Matrix::zeros(0, 0), mat(&[&[0, 1], &[-1, 0]]))).unwrap();
        assert_eq!(d[0], vec![Scalar::zero(), Scalar::from_int(-1)]);
        assert_eq!(d[1], vec![Scalar::one(), Scalar::zero()]);
    }

    #[test]
    fn dual_pairs_to_kronecker_delta() {
        let v = SuperSpace::new("V", &["a", "b"], &["c", "d"]).unwrap();
        let form = GramForm::new(mat(&[&[2, 1], &[1, 3]]), mat(&[&[0, 5], &[-5, 0]]));
        let qs = QuadSpace::new(v, form).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let e_j = crate::linalg::unit_vector(4, j);
                let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(qs.pair(qs.dual(i), &e_j), expected);
            }
        }
    }

    #[test]
    fn supertrace_examples() {
        let v11 = SuperSpace::new("V", &["e"], &["y"]).unwrap();
        let id = Endo::new(&v11, Matrix::identity(2), Parity::Even).unwrap();
        assert_eq!(id.supertrace(&v11), Scalar::zero());
        let d = Endo::new(&v11, mat(&[&[2, 0], &[0, 3]]), Parity::Even).unwrap();
        assert_eq!(d.supertrace(&v11), Scalar::from_int(-1));
        let v3 = SuperSpace::new("V", &["a", "b", "c"], &[] as &[&str]).unwrap();
        let id3 = Endo::new(&v3, Matrix::identity(3), Parity::Even).unwrap();
        assert_eq!(id3.supertrace(&v3), Scalar::from_int(3));
    }

    #[test]
    fn endo_block_structure_enforced() {
        let v11 = SuperSpace::new("V", &["e"], &["y"]).unwrap();
        assert!(Endo::new(&v11, mat(&[&[0, 1], &[0, 0]]), Parity::Even).is_err());
        assert!(Endo::new(&v11, mat(&[&[0, 1], &[0, 0]]), Parity::Odd).is_ok());
        assert!(Endo::new(&v11, mat(&[&[1, 0], &[0, 0]]), Parity::Odd).is_err());
    }

    #[test]
    fn basis_normalized_even_first() {
        let (s, pos) = SuperSpace::from_basis(
            "V",
            vec![("y".into(), Parity::Odd), ("x".into(), Parity::Even)],
        )
        .unwrap();
        assert_eq!(s.labels(), vec!["x", "y"]);
        assert_eq!(pos, vec![1, 0]);
        assert!(SuperSpace::new("V", &["a", "a"], &[] as &[&str]).is_err());
    }
}
