//! Clifford multiplication realized on Λ(V).
//!
//! Left multiplication by a vector is `γ(x) = ε(x) + ι(x)`. A general
//! product `u · v` rewrites each canonical monomial `x₁∧w` of `u` as
//! `x₁·w − ι(x₁)w` and applies `γ` factor by factor to `v`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multilinear::{same_ambient, ExtElem, ExtMonomial};
use crate::scalar::Scalar;
use crate::space::Parity;

/// `γ(x)u = x∧u + ι(x)u`, left Clifford multiplication by a homogeneous vector.
pub fn gamma(x: &[Scalar], u: &ExtElem) -> Result<ExtElem> {
    let contracted = u.contract(x)?;
    Ok(&u.wedge_vector(x) + &contracted)
}

fn gamma_basis(a: usize, u: &ExtElem) -> ExtElem {
    let mut e = ExtElem::basis(u.space(), a).wedge_unchecked(u);
    e.add_scaled(&Scalar::one(), &u.contract_basis(a));
    e
}

/// `γ(η⁻¹(m)) v` for a single canonical monomial, lowest factor first.
fn left_mul_monomial(word: &[u16], v: &ExtElem) -> ExtElem {
    let Some((&first, rest)) = word.split_first() else {
        return v.clone();
    };
    let a = first as usize;
    let mut out = gamma_basis(a, &left_mul_monomial(rest, v));
    // rest is canonical because it is a suffix of a canonical word
    let rest_elem = ExtElem::monomial(v.space(), ExtMonomial::from_canonical_word(v.space().space(), rest.to_vec()).expect("suffix of canonical word"), Scalar::one());
    let correction = rest_elem.contract_basis(a);
    for (m, c) in correction.terms() {
        out.add_scaled(&-c, &left_mul_monomial(m.word(), v));
    }
    out
}

/// Clifford product `u · v` under the identification of C(V) with Λ(V).
pub fn clifford_mul(u: &ExtElem, v: &ExtElem) -> Result<ExtElem> {
    if !same_ambient(u.space(), v.space()) {
        return Err(Error::AmbientMismatch);
    }
    Ok(clifford_mul_unchecked(u, v))
}

pub(crate) fn clifford_mul_unchecked(u: &ExtElem, v: &ExtElem) -> ExtElem {
    let mut out = ExtElem::zero(u.space());
    if v.is_zero() {
        return out;
    }
    for (m, c) in u.terms() {
        out.add_scaled(c, &left_mul_monomial(m.word(), v));
    }
    out
}

/// The Clifford square `u·u`, split by exterior degree (zero components
/// omitted).
pub fn clifford_square_components(u: &ExtElem) -> BTreeMap<usize, ExtElem> {
    clifford_mul_unchecked(u, u).components()
}

/// Super-commutator `[u, v]_C = uv − (−1)^{|u||v|} vu`, extended bilinearly
/// over the parity decomposition of both arguments.
pub fn supercommutator(u: &ExtElem, v: &ExtElem) -> Result<ExtElem> {
    if !same_ambient(u.space(), v.space()) {
        return Err(Error::AmbientMismatch);
    }
    let mut out = ExtElem::zero(u.space());
    for pu in [Parity::Even, Parity::Odd] {
        let a = u.parity_component(pu);
        if a.is_zero() {
            continue;
        }
        for pv in [Parity::Even, Parity::Odd] {
            let b = v.parity_component(pv);
            if b.is_zero() {
                continue;
            }
            let ab = clifford_mul_unchecked(&a, &b);
            let ba = clifford_mul_unchecked(&b, &a);
            out.add_scaled(&Scalar::one(), &ab);
            out.add_scaled(&Scalar::sign(!pu.both_odd(pv)), &ba);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::multilinear::ext_pairing;
    use crate::space::{GramForm, QuadSpace, SuperSpace};
    use std::sync::Arc;

    fn int(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn odd2() -> Arc<QuadSpace> {
        let s = SuperSpace::new("W", &[] as &[&str], &["y1", "y2"]).unwrap();
        Arc::new(QuadSpace::new(s, GramForm::new(Matrix::zeros(0, 0), mat(&[&[0, 1], &[-1, 0]]))).unwrap())
    }

    fn sl2() -> Arc<QuadSpace> {
        let s = SuperSpace::new("sl2", &["h", "e", "f"], &[] as &[&str]).unwrap();
        Arc::new(QuadSpace::new(s, GramForm::new(mat(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]), Matrix::zeros(0, 0))).unwrap())
    }

    #[test]
    fn gamma_examples() {
        let g = sl2();
        let one = ExtElem::one(&g);
        let e = vec![int(0), int(1), int(0)];
        assert_eq!(gamma(&e, &one).unwrap(), ExtElem::basis(&g, 1));
        let h = vec![int(1), int(0), int(0)];
        assert_eq!(gamma(&h, &ExtElem::basis(&g, 0)).unwrap(), ExtElem::scalar(&g, int(2)));

        let w = odd2();
        let y1y2 = ExtElem::wedge_word(&w, &[0, 1]);
        let got = gamma(&[int(1), int(0)], &y1y2).unwrap();
        let expected = &ExtElem::wedge_word(&w, &[0, 0, 1]) + &ExtElem::basis(&w, 0);
        assert_eq!(got, expected);
    }

    #[test]
    fn clifford_examples() {
        let w = odd2();
        let y1 = ExtElem::basis(&w, 0);
        let y2 = ExtElem::basis(&w, 1);
        assert_eq!(clifford_mul(&y1, &y2).unwrap(), &ExtElem::wedge_word(&w, &[0, 1]) + &ExtElem::one(&w));
        let u = ExtElem::wedge_word(&w, &[0, 1]);
        let sq = clifford_mul(&u, &u).unwrap();
        assert_eq!(sq, &ExtElem::wedge_word(&w, &[0, 0, 1, 1]) - &ExtElem::one(&w));
    }

    #[test]
    fn sl2_cubic_square() {
        let g = sl2();
        let phi = ExtElem::wedge_word(&g, &[0, 1, 2]).scale(&Scalar::ratio(1, 2));
        let comps = clifford_square_components(&phi);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[&0], ExtElem::scalar(&g, Scalar::ratio(1, 2)));
        assert_eq!(comps[&0].scalar_part(), -&ext_pairing(&phi, &phi).unwrap());
        assert!(clifford_square_components(&ExtElem::zero(&g)).is_empty());
    }

    #[test]
    fn vector_anticommutator() {
        let g = sl2();
        for a in 0..3 {
            for b in 0..3 {
                let x = ExtElem::basis(&g, a);
                let y = ExtElem::basis(&g, b);
                let anti = &clifford_mul(&x, &y).unwrap() + &clifford_mul(&y, &x).unwrap();
                assert_eq!(anti, ExtElem::scalar(&g, g.pairing(a, b) * &int(2)));
            }
        }
    }
}
