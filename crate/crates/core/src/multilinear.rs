//! The super exterior algebra Λ(V).
//!
//! Monomials are stored as sorted index words over the even-then-odd basis:
//! even indices appear at most once, odd indices may repeat (odd vectors
//! commute under the wedge). Every product is renormalized through
//! [`koszul_sign`], the single sign kernel used across the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::scalar::Scalar;
use crate::space::{Endo, Parity, QuadSpace, SuperSpace};

/// Sign of reordering `v_1 … v_n` into `v_{perm[0]} … v_{perm[n-1]}` in Λ(V).
///
/// Each pair that changes relative order contributes `−(−1)^{|v_i||v_j|}`,
/// i.e. the product is `(−1)^{N_σ} sgn(σ)`.
pub fn koszul_sign(parities: &[Parity], perm: &[usize]) -> bool {
    debug_assert_eq!(parities.len(), perm.len());
    let mut negative = false;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            // v_{perm[a]} now precedes v_{perm[b]}; inverted if perm[a] > perm[b]
            if perm[a] > perm[b] && !parities[perm[a]].both_odd(parities[perm[b]]) {
                negative = !negative;
            }
        }
    }
    negative
}

/// A canonical monomial of Λ(V): a nondecreasing word of basis indices with
/// no repeated even index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtMonomial(Vec<u16>);

impl Ord for ExtMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.len(), &self.0).cmp(&(other.0.len(), &other.0))
    }
}

impl PartialOrd for ExtMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl ExtMonomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// Wraps a word that is already canonical for `space`.
    pub fn from_canonical_word(space: &SuperSpace, word: Vec<u16>) -> Result<Self> {
        if word.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Input("monomial word not in canonical order".into()));
        }
        if word.iter().any(|&i| i as usize >= space.dim()) {
            return Err(Error::Input("monomial index out of range".into()));
        }
        if word
            .windows(2)
            .any(|w| w[0] == w[1] && space.parity(w[0] as usize) == Parity::Even)
        {
            return Err(Error::Input("repeated even factor".into()));
        }
        Ok(Self(word))
    }

    pub fn word(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn parity(&self, space: &SuperSpace) -> Parity {
        Parity::from_bit(self.0.iter().filter(|&&i| space.parity(i as usize).is_odd()).count())
    }

    pub fn even_indices(&self, space: &SuperSpace) -> Vec<usize> {
        self.0
            .iter()
            .map(|&i| i as usize)
            .filter(|&i| !space.parity(i).is_odd())
            .collect()
    }

    /// Exponent vector over the odd basis vectors.
    pub fn odd_exponents(&self, space: &SuperSpace) -> Vec<usize> {
        let mut exps = vec![0; space.odd_dim()];
        for &i in &self.0 {
            let i = i as usize;
            if space.parity(i).is_odd() {
                exps[i - space.even_dim()] += 1;
            }
        }
        exps
    }

    pub fn labels(&self, space: &SuperSpace) -> Vec<String> {
        self.0.iter().map(|&i| space.label(i as usize).to_string()).collect()
    }
}

/// Sorts an arbitrary word into canonical order. Returns `None` if the
/// product vanishes (a repeated even index), otherwise the sign flag and
/// the canonical monomial.
pub fn normalize_word(space: &SuperSpace, word: &[u16]) -> Option<(bool, ExtMonomial)> {
    let mut perm: Vec<usize> = (0..word.len()).collect();
    perm.sort_by_key(|&k| word[k]);
    let sorted: Vec<u16> = perm.iter().map(|&k| word[k]).collect();
    if sorted
        .windows(2)
        .any(|w| w[0] == w[1] && !space.parity(w[0] as usize).is_odd())
    {
        return None;
    }
    let parities: Vec<Parity> = word.iter().map(|&i| space.parity(i as usize)).collect();
    Some((koszul_sign(&parities, &perm), ExtMonomial(sorted)))
}

/// Sparse element of Λ(V) over a fixed quadratic space.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtElem {
    space: Arc<QuadSpace>,
    terms: BTreeMap<ExtMonomial, Scalar>,
}

pub(crate) fn same_ambient(a: &Arc<QuadSpace>, b: &Arc<QuadSpace>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl ExtElem {
    pub fn zero(space: &Arc<QuadSpace>) -> Self {
        Self {
            space: space.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(space: &Arc<QuadSpace>, c: Scalar) -> Self {
        let mut e = Self::zero(space);
        e.add_term(ExtMonomial::one(), c);
        e
    }

    pub fn one(space: &Arc<QuadSpace>) -> Self {
        Self::scalar(space, Scalar::one())
    }

    /// The basis vector `e_i` as a degree-one element.
    pub fn basis(space: &Arc<QuadSpace>, i: usize) -> Self {
        Self::monomial(space, ExtMonomial(vec![i as u16]), Scalar::one())
    }

    pub fn vector(space: &Arc<QuadSpace>, coords: &[Scalar]) -> Self {
        assert_eq!(coords.len(), space.dim(), "vector length differs from dimension");
        let mut e = Self::zero(space);
        for (i, c) in coords.iter().enumerate() {
            e.add_term(ExtMonomial(vec![i as u16]), c.clone());
        }
        e
    }

    pub fn monomial(space: &Arc<QuadSpace>, m: ExtMonomial, c: Scalar) -> Self {
        let mut e = Self::zero(space);
        e.add_term(m, c);
        e
    }

    /// Wedge product of basis vectors given by index, in the given order.
    pub fn wedge_word(space: &Arc<QuadSpace>, word: &[usize]) -> Self {
        let w: Vec<u16> = word.iter().map(|&i| i as u16).collect();
        match normalize_word(space.space(), &w) {
            None => Self::zero(space),
            Some((neg, m)) => Self::monomial(space, m, Scalar::sign(neg)),
        }
    }

    pub fn from_terms(space: &Arc<QuadSpace>, terms: impl IntoIterator<Item = (ExtMonomial, Scalar)>) -> Self {
        let mut e = Self::zero(space);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn space(&self) -> &Arc<QuadSpace> {
        &self.space
    }

    pub fn terms(&self) -> &BTreeMap<ExtMonomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &ExtMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficient of the unit monomial.
    pub fn scalar_part(&self) -> Scalar {
        self.coefficient(&ExtMonomial::one())
    }

    pub(crate) fn add_term(&mut self, m: ExtMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, c: &Scalar, other: &ExtElem) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut e = Self::zero(&self.space);
        e.add_scaled(c, self);
        e
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(ExtMonomial::degree).max()
    }

    /// The component `(u)_n` in Λⁿ(V).
    pub fn degree_component(&self, n: usize) -> Self {
        self.filter(|m| m.degree() == n)
    }

    /// All nonzero degree components.
    pub fn components(&self) -> BTreeMap<usize, ExtElem> {
        let mut out: BTreeMap<usize, ExtElem> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| ExtElem::zero(&self.space))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn parity_component(&self, p: Parity) -> Self {
        let s = self.space.clone();
        self.filter(|m| m.parity(s.space()) == p)
    }

    /// Parity of a homogeneous element; `None` if mixed. Zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.terms.keys().map(|m| m.parity(self.space.space()));
        let first = ps.next().unwrap_or(Parity::Even);
        ps.all(|p| p == first).then_some(first)
    }

    pub fn filter(&self, keep: impl Fn(&ExtMonomial) -> bool) -> Self {
        Self {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coordinates of a degree-≤1 element's linear part.
    pub fn to_vector(&self) -> Result<Vector> {
        let mut v = zero_vector(self.space.dim());
        for (m, c) in &self.terms {
            match m.word() {
                [i] => v[*i as usize] = c.clone(),
                _ => return Err(Error::WrongDegree(format!("expected a vector, found degree {}", m.degree()))),
            }
        }
        Ok(v)
    }

    fn check_ambient(&self, other: &ExtElem) -> Result<()> {
        if same_ambient(&self.space, &other.space) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Exterior product `u ∧ v`.
    pub fn wedge(&self, other: &ExtElem) -> Result<ExtElem> {
        self.check_ambient(other)?;
        Ok(self.wedge_unchecked(other))
    }

    pub(crate) fn wedge_unchecked(&self, other: &ExtElem) -> ExtElem {
        let space = self.space.space();
        let mut out = ExtElem::zero(&self.space);
        let mut word = Vec::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                word.clear();
                word.extend_from_slice(&m1.0);
                word.extend_from_slice(&m2.0);
                if let Some((neg, m)) = normalize_word(space, &word) {
                    let c = c1 * c2;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// Contraction `ι(e_a)` by a basis vector.
    pub(crate) fn contract_basis(&self, a: usize) -> ExtElem {
        let qs = &self.space;
        let pa = qs.parity(a);
        let mut out = ExtElem::zero(qs);
        for (m, c) in &self.terms {
            let mut odd_before = false;
            for (k, &x) in m.0.iter().enumerate() {
                let px = qs.parity(x as usize);
                let g = qs.pairing(a, x as usize);
                if !g.is_zero() {
                    // (−1)^{k}(−1)^{|a|(|x_1|+…+|x_{k}|)} with 0-based k
                    let neg = (k % 2 == 1) ^ (pa.is_odd() && odd_before);
                    let mut rest = m.0.clone();
                    rest.remove(k);
                    let coeff = c * g;
                    out.add_term(ExtMonomial(rest), if neg { -coeff } else { coeff });
                }
                if px.is_odd() {
                    odd_before = !odd_before;
                }
            }
        }
        out
    }

    /// Contraction `ι(x)u` for a homogeneous vector `x`: the odd-degree
    /// derivation with `ι(x)(y) = (x, y)`.
    pub fn contract(&self, x: &[Scalar]) -> Result<ExtElem> {
        if x.len() != self.space.dim() {
            return Err(Error::DimensionMismatch("contraction vector has wrong length".into()));
        }
        if self.space.space().vector_parity(x).is_none() {
            return Err(Error::NotHomogeneous("contraction requires a homogeneous vector".into()));
        }
        Ok(self.contract_linear(x))
    }

    /// Contraction extended linearly to mixed-parity vectors.
    pub fn contract_linear(&self, x: &[Scalar]) -> ExtElem {
        let mut out = ExtElem::zero(&self.space);
        for (a, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.contract_basis(a));
            }
        }
        out
    }

    /// Left exterior multiplication `ε(x)u = x ∧ u`.
    pub fn wedge_vector(&self, x: &[Scalar]) -> ExtElem {
        ExtElem::vector(&self.space, x).wedge_unchecked(self)
    }

    /// `α(u)`: multiplies the degree-n part by `(−1)^{n(n−1)/2}`.
    pub fn alpha(&self) -> ExtElem {
        let mut out = ExtElem::zero(&self.space);
        for (m, c) in &self.terms {
            let n = m.degree();
            let neg = (n * n.saturating_sub(1) / 2) % 2 == 1;
            out.add_term(m.clone(), if neg { -c } else { c.clone() });
        }
        out
    }

    /// Applies a linear map of the underlying spaces (columns = images of
    /// basis vectors in `target` coordinates), extended multiplicatively.
    pub fn map_linear(&self, target: &Arc<QuadSpace>, images: &[Vector]) -> Result<ExtElem> {
        if images.len() != self.space.dim() || images.iter().any(|v| v.len() != target.dim()) {
            return Err(Error::DimensionMismatch("linear map shape".into()));
        }
        let image_elems: Vec<ExtElem> = images.iter().map(|v| ExtElem::vector(target, v)).collect();
        let mut out = ExtElem::zero(target);
        for (m, c) in &self.terms {
            let mut acc = ExtElem::scalar(target, c.clone());
            for &i in &m.0 {
                acc = acc.wedge_unchecked(&image_elems[i as usize]);
            }
            out.add_scaled(&Scalar::one(), &acc);
        }
        Ok(out)
    }

    pub fn to_records(&self) -> Vec<ExtTermRecord> {
        let s = self.space.space();
        self.terms
            .iter()
            .map(|(m, c)| ExtTermRecord {
                monomial: m.labels(s),
                c: c.clone(),
            })
            .collect()
    }

    pub fn from_records(space: &Arc<QuadSpace>, records: &[ExtTermRecord]) -> Result<ExtElem> {
        let s = space.space();
        let mut out = ExtElem::zero(space);
        for r in records {
            let word = r
                .monomial
                .iter()
                .map(|l| s.index_of(l).map(|i| i as u16))
                .collect::<Result<Vec<_>>>()?;
            let m = ExtMonomial::from_canonical_word(s, word)
                .map_err(|e| Error::Input(format!("monomial {:?}: {e}", r.monomial)))?;
            out.add_term(m, r.c.clone());
        }
        Ok(out)
    }
}

/// Serialized term of an exterior element: labels in canonical order (odd
/// labels may repeat) and a scalar string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtTermRecord {
    pub monomial: Vec<String>,
    pub c: Scalar,
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let s = self.space.space();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "{c}·")?;
                }
                f.write_str(&m.labels(s).join("∧"))?;
            }
        }
        Ok(())
    }
}

impl Add for &ExtElem {
    type Output = ExtElem;
    /// Panics if the operands live in different ambient spaces.
    fn add(self, rhs: &ExtElem) -> ExtElem {
        self.check_ambient(rhs).expect("adding exterior elements of different spaces");
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &ExtElem {
    type Output = ExtElem;
    fn sub(self, rhs: &ExtElem) -> ExtElem {
        self.check_ambient(rhs).expect("subtracting exterior elements of different spaces");
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), rhs);
        out
    }
}

impl Neg for &ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        self.scale(&Scalar::from_int(-1))
    }
}

/// `ι(x)u` for a homogeneous vector.
pub fn contract(x: &[Scalar], u: &ExtElem) -> Result<ExtElem> {
    u.contract(x)
}

pub fn wedge(u: &ExtElem, v: &ExtElem) -> Result<ExtElem> {
    u.wedge(v)
}

pub fn alpha(u: &ExtElem) -> ExtElem {
    u.alpha()
}

/// The extended pairing on Λ(V): zero across different degrees, and on
/// degree n, `(x_1∧…∧x_n, v) = (−1)^{n(n−1)/2} ι(x_1)⋯ι(x_n) v`.
pub fn ext_pairing(u: &ExtElem, v: &ExtElem) -> Result<Scalar> {
    u.check_ambient(v)?;
    let mut total = Scalar::zero();
    for (m, c) in &u.terms {
        let n = m.degree();
        let mut acc = v.degree_component(n);
        for &x in m.word().iter().rev() {
            if acc.is_zero() {
                break;
            }
            acc = acc.contract_basis(x as usize);
        }
        let val = acc.scalar_part();
        if val.is_zero() {
            continue;
        }
        let neg = (n * n.saturating_sub(1) / 2) % 2 == 1;
        let term = c * &val;
        total += if neg { -term } else { term };
    }
    Ok(total)
}

/// `ad u(z) = −2(−1)^{|u||z|} ι(z)u` for `u ∈ Λ²(V)`.
pub fn lambda2_action(u: &ExtElem, z: &[Scalar]) -> Result<Vector> {
    if u.terms.keys().any(|m| m.degree() != 2) {
        return Err(Error::WrongDegree("the Λ² action needs an element of exterior degree 2".into()));
    }
    let qs = u.space.clone();
    let space = qs.space();
    let (z_even, z_odd) = space.split_parity(z);
    let mut out = ExtElem::zero(&qs);
    for up in [Parity::Even, Parity::Odd] {
        let part = u.parity_component(up);
        if part.is_zero() {
            continue;
        }
        for (zp, zv) in [(Parity::Even, &z_even), (Parity::Odd, &z_odd)] {
            let sign = if up.both_odd(zp) { 2 } else { -2 };
            out.add_scaled(&Scalar::from_int(sign), &part.contract_linear(zv));
        }
    }
    out.to_vector()
}

/// The matrix of `A(u) = (ad u)|_V` for parity-homogeneous `u ∈ Λ²(V)`.
pub fn lambda2_endo(u: &ExtElem) -> Result<Endo> {
    let parity = u
        .parity()
        .ok_or_else(|| Error::NotHomogeneous("Λ² element mixes parities".into()))?;
    let n = u.space.dim();
    let cols = (0..n)
        .map(|j| lambda2_action(u, &crate::linalg::unit_vector(n, j)))
        .collect::<Result<Vec<_>>>()?;
    Endo::new(u.space.space(), Matrix::from_columns(&cols)?, parity)
}

/// All canonical monomials of degree `n`.
pub fn monomials_of_degree(space: &SuperSpace, n: usize) -> Vec<ExtMonomial> {
    fn rec(space: &SuperSpace, start: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<ExtMonomial>) {
        if left == 0 {
            out.push(ExtMonomial(cur.clone()));
            return;
        }
        for i in start..space.dim() {
            cur.push(i as u16);
            // odd indices may repeat, even ones may not
            let next = if space.parity(i).is_odd() { i } else { i + 1 };
            rec(space, next, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(space, 0, n, &mut Vec::new(), &mut out);
    out
}
