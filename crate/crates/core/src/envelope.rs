//! The enveloping superalgebra in PBW normal form, the tensor product
//! `U(g) ⊗ C(p)`, and the cubic Dirac operator.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::clifford::clifford_mul_unchecked;
use crate::error::{Error, Result};
use crate::kostant::Decomposition;
use crate::liesuper::{str_ad_casimir, SuperLie};
use crate::linalg::{unit_vector, Matrix, Vector};
use crate::multilinear::{ExtElem, ExtMonomial};
use crate::scalar::Scalar;
use crate::space::{Parity, QuadSpace};

/// Exponent vector over the basis of g; odd exponents are at most 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial(Vec<u32>);

impl PbwMonomial {
    pub fn one(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// The ordered word `x_1^{e_1} x_2^{e_2} ⋯`.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree());
        for (i, &e) in self.0.iter().enumerate() {
            w.extend(std::iter::repeat_n(i, e as usize));
        }
        w
    }

    pub fn parity(&self, g: &SuperLie) -> Parity {
        let odd: u32 = self
            .0
            .iter()
            .enumerate()
            .filter(|(i, _)| g.space().parity(*i).is_odd())
            .map(|(_, &e)| e)
            .sum();
        Parity::from_bit(odd as usize % 2)
    }

    fn from_ordered_word(dim: usize, word: &[usize]) -> Self {
        let mut e = vec![0; dim];
        for &i in word {
            e[i] += 1;
        }
        Self(e)
    }
}

/// Element of U(g) in PBW normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UElem {
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl UElem {
    pub fn terms(&self) -> &BTreeMap<PbwMonomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &UElem) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }
}

/// U(g) with multiplication by PBW rewriting.
#[derive(Clone, Debug)]
pub struct Envelope {
    g: Arc<SuperLie>,
}

impl Envelope {
    pub fn new(g: Arc<SuperLie>) -> Self {
        Self { g }
    }

    pub fn algebra(&self) -> &SuperLie {
        &self.g
    }

    pub fn one(&self) -> UElem {
        let mut u = UElem::default();
        u.add_term(PbwMonomial::one(self.g.dim()), Scalar::one());
        u
    }

    /// `ξ(x)` for a vector of g.
    pub fn xi(&self, x: &[Scalar]) -> UElem {
        let n = self.g.dim();
        let mut u = UElem::default();
        for (i, c) in x.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            u.add_term(PbwMonomial(e), c.clone());
        }
        u
    }

    /// Normal form of a word of basis vectors.
    pub fn normalize_word(&self, word: &[usize]) -> UElem {
        let mut pending = BTreeMap::new();
        pending.insert(word.to_vec(), Scalar::one());
        self.normalize(pending)
    }

    fn normalize(&self, mut pending: BTreeMap<Vec<usize>, Scalar>) -> UElem {
        let g = &self.g;
        let sp = g.space();
        let n = g.dim();
        let mut out = UElem::default();
        let push = |pending: &mut BTreeMap<Vec<usize>, Scalar>, w: Vec<usize>, c: Scalar| {
            if c.is_zero() {
                return;
            }
            let entry = pending.entry(w.clone()).or_default();
            *entry += &c;
            if entry.is_zero() {
                pending.remove(&w);
            }
        };
        while let Some((word, c)) = pending.pop_last() {
            let bad = word
                .windows(2)
                .position(|w| w[0] > w[1] || (w[0] == w[1] && sp.parity(w[0]).is_odd()));
            let Some(k) = bad else {
                out.add_term(PbwMonomial::from_ordered_word(n, &word), c);
                continue;
            };
            let (a, b) = (word[k], word[k + 1]);
            let bracket = g.bracket_basis(a, b);
            // a > b: x_a x_b = (−1)^{|a||b|} x_b x_a + [x_a, x_b]
            // a = b odd: x x = ½[x, x]
            let factor = if a == b { Scalar::ratio(1, 2) } else { Scalar::one() };
            for (z, bz) in bracket.iter().enumerate() {
                if bz.is_zero() {
                    continue;
                }
                let mut w = word[..k].to_vec();
                w.push(z);
                w.extend_from_slice(&word[k + 2..]);
                push(&mut pending, w, &(&c * bz) * &factor);
            }
            if a != b {
                let mut w = word.clone();
                w.swap(k, k + 1);
                let sign = Scalar::sign(sp.parity(a).both_odd(sp.parity(b)));
                push(&mut pending, w, &c * &sign);
            }
        }
        out
    }

    pub fn mul(&self, a: &UElem, b: &UElem) -> UElem {
        let mut pending: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let mut w = ma.word();
                w.extend(mb.word());
                let entry = pending.entry(w).or_default();
                *entry += &(ca * cb);
            }
        }
        pending.retain(|_, c| !c.is_zero());
        self.normalize(pending)
    }

    /// Image under a representation given by the matrices of the basis
    /// vectors.
    pub fn represent(&self, u: &UElem, images: &[Matrix]) -> Matrix {
        let d = images.first().map_or(0, Matrix::rows);
        let mut out = Matrix::zeros(d, d);
        for (m, c) in &u.terms {
            let mut acc = Matrix::identity(d);
            for i in m.word() {
                acc = &acc * &images[i];
            }
            out = &out + &acc.scale(c);
        }
        out
    }
}

/// Element of `U(g) ⊗ C(p)`, with C(p) realized on Λ(p).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElem {
    terms: BTreeMap<(PbwMonomial, ExtMonomial), Scalar>,
}

/// Serialized term of a tensor element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermRecord {
    pub u: Vec<(String, u32)>,
    pub c: Scalar,
    pub w: Vec<String>,
}

impl TensorElem {
    pub fn terms(&self) -> &BTreeMap<(PbwMonomial, ExtMonomial), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, u: PbwMonomial, w: ExtMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (u, w);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &TensorElem) {
        for ((u, w), x) in &other.terms {
            self.add_term(u.clone(), w.clone(), c * x);
        }
    }

    pub fn scale(&self, c: &Scalar) -> TensorElem {
        let mut out = TensorElem::default();
        out.add_scaled(c, self);
        out
    }
}

impl std::ops::Add for &TensorElem {
    type Output = TensorElem;
    fn add(self, rhs: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl std::ops::Sub for &TensorElem {
    type Output = TensorElem;
    fn sub(self, rhs: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), rhs);
        out
    }
}

impl std::ops::Neg for &TensorElem {
    type Output = TensorElem;
    fn neg(self) -> TensorElem {
        self.scale(&Scalar::from_int(-1))
    }
}

/// The superalgebra `U(g) ⊗ C(p)`.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    env: Envelope,
    p: Arc<QuadSpace>,
}

impl TensorAlgebra {
    pub fn new(g: Arc<SuperLie>, p: Arc<QuadSpace>) -> Self {
        Self {
            env: Envelope::new(g),
            p,
        }
    }

    pub fn envelope(&self) -> &Envelope {
        &self.env
    }

    pub fn p(&self) -> &Arc<QuadSpace> {
        &self.p
    }

    pub fn one(&self) -> TensorElem {
        self.pure(&self.env.one(), &ExtElem::one(&self.p))
    }

    /// `a ⊗ w`.
    pub fn pure(&self, a: &UElem, w: &ExtElem) -> TensorElem {
        let mut out = TensorElem::default();
        for (u, c) in &a.terms {
            for (m, d) in w.terms() {
                out.add_term(u.clone(), m.clone(), c * d);
            }
        }
        out
    }

    /// `(a⊗u)(b⊗v) = (−1)^{|u||b|} ab ⊗ uv`.
    pub fn mul(&self, x: &TensorElem, y: &TensorElem) -> TensorElem {
        let g = self.env.algebra();
        let ps = self.p.space();
        let mut u_cache: HashMap<(&PbwMonomial, &PbwMonomial), UElem> = HashMap::new();
        let mut w_cache: HashMap<(&ExtMonomial, &ExtMonomial), ExtElem> = HashMap::new();
        let mut out = TensorElem::default();
        for ((a, u), c1) in &x.terms {
            let u_odd = u.parity(ps).is_odd();
            for ((b, v), c2) in &y.terms {
                let sign = Scalar::sign(u_odd && b.parity(g).is_odd());
                let ab = u_cache.entry((a, b)).or_insert_with(|| {
                    let mut w = a.word();
                    w.extend(b.word());
                    self.env.normalize_word(&w)
                });
                let uv = w_cache.entry((u, v)).or_insert_with(|| {
                    clifford_mul_unchecked(
                        &ExtElem::monomial(&self.p, u.clone(), Scalar::one()),
                        &ExtElem::monomial(&self.p, v.clone(), Scalar::one()),
                    )
                });
                let c = &(c1 * c2) * &sign;
                for (m, d) in &ab.terms {
                    for (n, e) in uv.terms() {
                        out.add_term(m.clone(), n.clone(), &(&c * d) * e);
                    }
                }
            }
        }
        out
    }

    pub fn to_records(&self, t: &TensorElem) -> Vec<TensorTermRecord> {
        let g = self.env.algebra().space();
        t.terms
            .iter()
            .map(|((u, w), c)| TensorTermRecord {
                u: u.0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (g.label(i).to_string(), e))
                    .collect(),
                c: c.clone(),
                w: w.labels(self.p.space()),
            })
            .collect()
    }

    /// Applies a linear map `p → target` on the Clifford factor.
    pub fn map_clifford(&self, t: &TensorElem, target: &Arc<QuadSpace>, images: &[Vector]) -> Result<TensorElem> {
        let mut out = TensorElem::default();
        for ((u, w), c) in &t.terms {
            let image = ExtElem::monomial(&self.p, w.clone(), c.clone()).map_linear(target, images)?;
            for (m, d) in image.terms() {
                out.add_term(u.clone(), m.clone(), d.clone());
            }
        }
        Ok(out)
    }

    pub fn display(&self, t: &TensorElem) -> String {
        TensorDisplay { alg: self, t }.to_string()
    }
}

struct TensorDisplay<'a> {
    alg: &'a TensorAlgebra,
    t: &'a TensorElem,
}

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return write!(f, "0");
        }
        let g = self.alg.env.algebra().space();
        let ps = self.alg.p.space();
        for (k, ((u, w), c)) in self.t.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let uw: Vec<String> = u
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { g.label(i).to_string() } else { format!("{}^{e}", g.label(i)) })
                .collect();
            let ww = w.labels(ps);
            let us = if uw.is_empty() { "1".to_string() } else { uw.join("·") };
            let ws = if ww.is_empty() { "1".to_string() } else { ww.join("∧") };
            write!(f, "{c}·{us}⊗{ws}")?;
        }
        Ok(())
    }
}

/// Context for the Dirac operator of a decomposition `g = r ⊕ p`.
#[derive(Clone, Debug)]
pub struct DiracSetup {
    decomposition: Decomposition,
    alg: TensorAlgebra,
}

impl DiracSetup {
    pub fn new(g: &SuperLie, r_span: &[String]) -> Result<Self> {
        Ok(Self::from_decomposition(Decomposition::new(g, r_span)?))
    }

    pub fn from_decomposition(decomposition: Decomposition) -> Self {
        let alg = TensorAlgebra::new(Arc::new(decomposition.g().clone()), decomposition.pair().p().clone());
        Self { decomposition, alg }
    }

    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    pub fn algebra(&self) -> &TensorAlgebra {
        &self.alg
    }

    fn r_vector(&self, coords: &[Scalar]) -> Vector {
        let d = &self.decomposition;
        let mut v = vec![Scalar::zero(); d.g().dim()];
        for (k, c) in coords.iter().enumerate() {
            v[d.r_indices()[k]] = c.clone();
        }
        v
    }

    /// `□₁ = Σ ξ(y_i)⊗y^i`.
    pub fn box1(&self) -> TensorElem {
        let d = &self.decomposition;
        let p = d.pair().p();
        let env = self.alg.envelope();
        let mut out = TensorElem::default();
        for (i, y) in d.p_vectors().iter().enumerate() {
            out.add_scaled(&Scalar::one(), &self.alg.pure(&env.xi(y), &ExtElem::vector(p, p.dual(i))));
        }
        out
    }

    /// `□₂ = 1⊗φ_p`.
    pub fn box2(&self) -> TensorElem {
        self.alg.pure(&self.alg.envelope().one(), &self.decomposition.pair().phi_p())
    }

    /// `D(g, r) = □₁ + □₂`.
    pub fn dirac(&self) -> TensorElem {
        &self.box1() + &self.box2()
    }

    /// `III = ½ Σ (−1)^{|y_i||y_j|} ξ([y_i, y_j]_p)⊗y^i∧y^j`.
    pub fn summand_three(&self) -> TensorElem {
        let d = &self.decomposition;
        let g = d.g();
        let p = d.pair().p();
        let env = self.alg.envelope();
        let ys = d.p_vectors();
        let mut out = TensorElem::default();
        for (i, yi) in ys.iter().enumerate() {
            for (j, yj) in ys.iter().enumerate() {
                let coords = d.p_coordinates(&g.bracket(yi, yj));
                if coords.iter().all(Scalar::is_zero) {
                    continue;
                }
                let mut proj = vec![Scalar::zero(); g.dim()];
                for (k, c) in coords.iter().enumerate() {
                    crate::linalg::add_scaled(&mut proj, c, &ys[k]);
                }
                let w = ExtElem::vector(p, p.dual(i)).wedge_unchecked(&ExtElem::vector(p, p.dual(j)));
                let sign = Scalar::ratio(if p.parity(i).both_odd(p.parity(j)) { -1 } else { 1 }, 2);
                out.add_scaled(&sign, &self.alg.pure(&env.xi(&proj), &w));
            }
        }
        out
    }

    /// `ζ(x) = ξ(x)⊗1 + 1⊗ν_*(x)` for x given in r-coordinates.
    pub fn zeta(&self, x: &[Scalar]) -> Result<TensorElem> {
        let env = self.alg.envelope();
        let p = self.decomposition.pair().p();
        let a = self.alg.pure(&env.xi(&self.r_vector(x)), &ExtElem::one(p));
        let b = self.alg.pure(&env.one(), &self.decomposition.pair().nu_star_vector(x)?);
        Ok(&a + &b)
    }

    /// `ζ(Cas_r) = Σ ζ(x_i) ζ(x^i)`.
    pub fn zeta_casimir(&self) -> Result<TensorElem> {
        let pair = self.decomposition.pair();
        let rq = pair.r_space();
        let mut out = TensorElem::default();
        for i in 0..rq.dim() {
            let zi = self.zeta(&unit_vector(rq.dim(), i))?;
            let zd = self.zeta(rq.dual(i))?;
            out.add_scaled(&Scalar::one(), &self.alg.mul(&zi, &zd));
        }
        Ok(out)
    }

    /// The expanded form `Σ (ξ(x_i)ξ(x^i)⊗1 + 2ξ(x_i)⊗ν_*(x^i) + 1⊗ν_*(x_i)ν_*(x^i))`.
    pub fn zeta_casimir_expanded(&self) -> Result<TensorElem> {
        let pair = self.decomposition.pair();
        let rq = pair.r_space();
        let p = pair.p();
        let env = self.alg.envelope();
        let mut out = TensorElem::default();
        for i in 0..rq.dim() {
            let xi = env.xi(&self.r_vector(&unit_vector(rq.dim(), i)));
            let xd = env.xi(&self.r_vector(rq.dual(i)));
            let ns_i = pair.nu_star(i)?;
            let ns_d = pair.nu_star_vector(rq.dual(i))?;
            out.add_scaled(&Scalar::one(), &self.alg.pure(&env.mul(&xi, &xd), &ExtElem::one(p)));
            out.add_scaled(&Scalar::from_int(2), &self.alg.pure(&xi, &ns_d));
            out.add_scaled(&Scalar::one(), &self.alg.pure(&env.one(), &clifford_mul_unchecked(&ns_i, &ns_d)));
        }
        Ok(out)
    }

    /// `ξ(Cas_g)⊗1`.
    pub fn casimir_g(&self) -> Result<TensorElem> {
        let g = self.decomposition.g();
        let qs = self.decomposition.g_space();
        let env = self.alg.envelope();
        let mut cas = UElem::default();
        for i in 0..g.dim() {
            let prod = env.mul(&env.xi(&unit_vector(g.dim(), i)), &env.xi(qs.dual(i)));
            cas.add_scaled(&Scalar::one(), &prod);
        }
        Ok(self.alg.pure(&cas, &ExtElem::one(self.decomposition.pair().p())))
    }

    /// `(str ad_g Cas_g − str ad_r Cas_r)/24`.
    pub fn constant(&self) -> Result<Scalar> {
        let d = &self.decomposition;
        Ok(&(&str_ad_casimir(d.g())? - &str_ad_casimir(d.pair().r())?) / &Scalar::from_int(24))
    }
}

/// Both sides of the square formula for D.
#[derive(Clone, Debug)]
pub struct DiracSquare {
    pub dirac: TensorElem,
    pub lhs: TensorElem,
    pub rhs: TensorElem,
    pub constant: Scalar,
    pub equal: bool,
}

pub fn dirac(g: &SuperLie, r_span: &[String]) -> Result<TensorElem> {
    Ok(DiracSetup::new(g, r_span)?.dirac())
}

pub fn zeta_casimir(g: &SuperLie, r_span: &[String]) -> Result<TensorElem> {
    DiracSetup::new(g, r_span)?.zeta_casimir()
}

/// Computes `D²` and `ξ(Cas_g)⊗1 − ζ(Cas_r) + c(1⊗1)` independently.
pub fn dirac_square_check(setup: &DiracSetup) -> Result<DiracSquare> {
    let d = setup.dirac();
    let lhs = setup.algebra().mul(&d, &d);
    let constant = setup.constant()?;
    let mut rhs = setup.casimir_g()?;
    rhs.add_scaled(&Scalar::from_int(-1), &setup.zeta_casimir()?);
    rhs.add_scaled(&constant, &setup.algebra().one());
    Ok(DiracSquare {
        equal: lhs == rhs,
        dirac: d,
        lhs,
        rhs,
        constant,
    })
}

/// Checks `□₁□₂ + □₂□₁ = −III`; returns both sides.
pub fn box_anticommutator(setup: &DiracSetup) -> (TensorElem, TensorElem) {
    let alg = setup.algebra();
    let b1 = setup.box1();
    let b2 = setup.box2();
    let lhs = &alg.mul(&b1, &b2) + &alg.mul(&b2, &b1);
    (lhs, -&setup.summand_three())
}

/// A Dirac operator recomputed with another basis of p, expressed back in
/// the Clifford algebra of `reference`'s p basis.
pub fn dirac_in_reference_basis(setup: &DiracSetup, reference: &DiracSetup) -> Result<TensorElem> {
    let rd = reference.decomposition();
    if rd.g() != setup.decomposition().g() {
        return Err(Error::Input("different algebras".into()));
    }
    let images: Vec<Vector> = setup.decomposition().p_vectors().iter().map(|v| rd.p_coordinates(v)).collect();
    setup.algebra().map_clifford(&setup.dirac(), rd.pair().p(), &images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{GramForm, SuperSpace};

    fn int(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn sl2() -> SuperLie {
        let s = SuperSpace::new("sl2", &["h", "e", "f"], &[] as &[&str]).unwrap();
        let mut b = BTreeMap::new();
        b.insert((0, 1), v(&[0, 2, 0]));
        b.insert((0, 2), v(&[0, 0, -2]));
        b.insert((1, 2), v(&[1, 0, 0]));
        let form = GramForm::new(
            Matrix::from_rows(vec![v(&[2, 0, 0]), v(&[0, 0, 1]), v(&[0, 1, 0])]).unwrap(),
            Matrix::zeros(0, 0),
        );
        SuperLie::new(s, b, Some(form)).unwrap()
    }

    #[test]
    fn pbw_examples() {
        let env = Envelope::new(Arc::new(sl2()));
        let fe = env.normalize_word(&[2, 1]);
        let mut expected = env.normalize_word(&[1, 2]);
        expected.add_scaled(&int(-1), &env.xi(&v(&[1, 0, 0])));
        assert_eq!(fe, expected);

        let s = SuperSpace::new("a", &["z"], &["u"]).unwrap();
        let mut b = BTreeMap::new();
        b.insert((1, 1), v(&[2, 0]));
        let g = SuperLie::new(s, b, None).unwrap();
        let env = Envelope::new(Arc::new(g));
        assert_eq!(env.normalize_word(&[1, 1]), env.xi(&v(&[1, 0])));
    }

    #[test]
    fn odd_sign_in_tensor_product() {
        let s = SuperSpace::new("a", &[] as &[&str], &["x"]).unwrap();
        let g = Arc::new(SuperLie::abelian(s, None));
        let ps = SuperSpace::new("p", &[] as &[&str], &["y1", "y2"]).unwrap();
        let odd = Matrix::from_rows(vec![v(&[0, 1]), v(&[-1, 0])]).unwrap();
        let p = Arc::new(QuadSpace::new(ps, GramForm::new(Matrix::zeros(0, 0), odd)).unwrap());
        let alg = TensorAlgebra::new(g, p.clone());
        let env = alg.envelope().clone();
        let one_y = alg.pure(&env.one(), &ExtElem::basis(&p, 0));
        let x_one = alg.pure(&env.xi(&v(&[1])), &ExtElem::one(&p));
        let prod = alg.mul(&one_y, &x_one);
        assert_eq!(prod, -&alg.pure(&env.xi(&v(&[1])), &ExtElem::basis(&p, 0)));
        assert_eq!(alg.mul(&alg.one(), &prod), prod);
    }

    #[test]
    fn sl2_cartan_square() {
        let setup = DiracSetup::new(&sl2(), &["h".to_string()]).unwrap();
        let sq = dirac_square_check(&setup).unwrap();
        assert!(sq.equal);
        let (a, b) = box_anticommutator(&setup);
        assert_eq!(a, b);
    }
}
