//! Brute-force Clifford multiplication through the tensor algebra.
//!
//! Elements of Λ(V) are lifted to skew super-symmetric tensors, multiplied
//! by concatenation, reduced modulo the Clifford ideal by directed
//! transpositions toward ascending index order, and mapped back to Λ(V) by
//! inverting the triangular relation between ordered Clifford words and
//! exterior monomials. Nothing here calls into [`crate::clifford`]; it is
//! kept independent so the two can be checked against each other.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::multilinear::{ExtElem, ExtMonomial};
use crate::scalar::Scalar;
use crate::space::QuadSpace;

/// Element of the tensor algebra T(V): words of basis indices.
pub type TensorPoly = BTreeMap<Vec<u16>, Scalar>;

fn accumulate(poly: &mut TensorPoly, word: Vec<u16>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let entry = poly.entry(word.clone()).or_default();
    *entry += &c;
    if entry.is_zero() {
        poly.remove(&word);
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Skew super-symmetrization `s(x_1∧…∧x_n) = 1/n! Σ_σ (−1)^{N_σ} sgn(σ) x_{σ(1)}⊗…⊗x_{σ(n)}`,
/// with `N_σ` the number of odd pairs `i<j` with `σ⁻¹(i) > σ⁻¹(j)`.
pub fn skew_symmetrize(u: &ExtElem) -> TensorPoly {
    let qs = u.space();
    let mut out = TensorPoly::new();
    for (m, c) in u.terms() {
        let word = m.word();
        let n = word.len();
        let weight = c * &Scalar::ratio(1, factorial(n));
        for sigma in permutations(n) {
            // sigma[k] = σ(k+1)-1 ; inverse positions
            let mut inv = vec![0; n];
            for (k, &s) in sigma.iter().enumerate() {
                inv[s] = k;
            }
            let mut inversions = 0usize;
            let mut odd_pairs = 0usize;
            for i in 0..n {
                for j in i + 1..n {
                    if inv[i] > inv[j] {
                        inversions += 1;
                        if qs.parity(word[i] as usize).is_odd() && qs.parity(word[j] as usize).is_odd() {
                            odd_pairs += 1;
                        }
                    }
                }
            }
            let negative = (inversions + odd_pairs) % 2 == 1;
            let permuted: Vec<u16> = sigma.iter().map(|&s| word[s]).collect();
            accumulate(&mut out, permuted, if negative { -&weight } else { weight.clone() });
        }
    }
    out
}

/// Reduces a tensor modulo the Clifford ideal generated by
/// `x⊗y + (−1)^{|x||y|} y⊗x − 2(x,y)` into ordered words (nondecreasing
/// indices, even indices not repeated).
pub fn reduce_clifford(qs: &QuadSpace, poly: &TensorPoly) -> TensorPoly {
    let mut pending = poly.clone();
    let mut done = TensorPoly::new();
    while let Some((word, c)) = pending.pop_last() {
        let bad = word.windows(2).position(|w| {
            w[0] > w[1] || (w[0] == w[1] && !qs.parity(w[0] as usize).is_odd())
        });
        let Some(k) = bad else {
            accumulate(&mut done, word, c);
            continue;
        };
        let (a, b) = (word[k] as usize, word[k + 1] as usize);
        let mut shorter = word[..k].to_vec();
        shorter.extend_from_slice(&word[k + 2..]);
        if a == b {
            // even x: x⊗x = (x,x)
            accumulate(&mut pending, shorter, &c * qs.pairing(a, a));
            continue;
        }
        // x_a x_b = −(−1)^{|a||b|} x_b x_a + 2(x_a, x_b)
        let mut swapped = word.clone();
        swapped.swap(k, k + 1);
        let both_odd = qs.parity(a).is_odd() && qs.parity(b).is_odd();
        accumulate(&mut pending, swapped, if both_odd { c.clone() } else { -&c });
        let g = qs.pairing(a, b);
        if !g.is_zero() {
            accumulate(&mut pending, shorter, &(&c * g) * &Scalar::from_int(2));
        }
    }
    done
}

/// Maps a reduced Clifford element (ordered words) to Λ(V) through the
/// relation `η(π_C(s(u))) = u`: the ordered word of `u`'s monomial leads
/// `π_C(s(u))`, so peeling off the top-degree word repeatedly inverts it.
pub fn ordered_to_exterior(space: &Arc<QuadSpace>, reduced: &TensorPoly) -> ExtElem {
    let mut rest = reduced.clone();
    let mut out = ExtElem::zero(space);
    while let Some(word) = rest
        .keys()
        .max_by(|a, b| (a.len(), *a).cmp(&(b.len(), *b)))
        .cloned()
    {
        let c = rest[&word].clone();
        let mono = ExtMonomial::from_canonical_word(space.space(), word.clone())
            .expect("reduced words are canonical monomials");
        let lift = ExtElem::monomial(space, mono.clone(), Scalar::one());
        let image = reduce_clifford(space, &skew_symmetrize(&lift));
        debug_assert_eq!(image.get(&word), Some(&Scalar::one()));
        for (w, x) in image {
            accumulate(&mut rest, w, -(&c * &x));
        }
        out = &out + &ExtElem::monomial(space, mono, c);
    }
    out
}

fn concat_product(a: &TensorPoly, b: &TensorPoly) -> TensorPoly {
    let mut out = TensorPoly::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend_from_slice(wb);
            accumulate(&mut out, w, ca * cb);
        }
    }
    out
}

/// Clifford product computed in T(V)/I_C(V). Intended for small inputs:
/// the combined degree must not exceed `max_degree`.
pub fn tensor_oracle_mul(u: &ExtElem, v: &ExtElem, max_degree: usize) -> Result<ExtElem> {
    if !(Arc::ptr_eq(u.space(), v.space()) || u.space() == v.space()) {
        return Err(Error::AmbientMismatch);
    }
    let du = u.max_degree().unwrap_or(0);
    let dv = v.max_degree().unwrap_or(0);
    if du + dv > max_degree {
        return Err(Error::DegreeBudget(format!(
            "degrees {du} + {dv} exceed the oracle budget {max_degree}"
        )));
    }
    let qs = u.space();
    let lifted_u = reduce_clifford(qs, &skew_symmetrize(u));
    let lifted_v = reduce_clifford(qs, &skew_symmetrize(v));
    let product = reduce_clifford(qs, &concat_product(&lifted_u, &lifted_v));
    Ok(ordered_to_exterior(qs, &product))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::space::{GramForm, SuperSpace};

    fn int(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    fn space() -> Arc<QuadSpace> {
        let s = SuperSpace::new("V", &["e"], &["y1", "y2"]).unwrap();
        let odd = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(-1), int(0)]]).unwrap();
        Arc::new(QuadSpace::new(s, GramForm::new(Matrix::identity(1), odd)).unwrap())
    }

    #[test]
    fn vector_product_is_wedge_plus_pairing() {
        let v = space();
        for a in 0..3 {
            for b in 0..3 {
                let x = ExtElem::basis(&v, a);
                let y = ExtElem::basis(&v, b);
                let expected = &ExtElem::wedge_word(&v, &[a, b]) + &ExtElem::scalar(&v, v.pairing(a, b).clone());
                assert_eq!(tensor_oracle_mul(&x, &y, 2).unwrap(), expected);
            }
        }
    }

    #[test]
    fn odd_square_symmetrizes_to_itself() {
        let v = space();
        let y1y1 = ExtElem::wedge_word(&v, &[1, 1]);
        let s = skew_symmetrize(&y1y1);
        assert_eq!(s.len(), 1);
        assert_eq!(s[&vec![1u16, 1]], int(1));
    }

    #[test]
    fn odd_bivector_square() {
        let v = space();
        let u = ExtElem::wedge_word(&v, &[1, 2]);
        let expected = &ExtElem::wedge_word(&v, &[1, 1, 2, 2]) - &ExtElem::one(&v);
        assert_eq!(tensor_oracle_mul(&u, &u, 4).unwrap(), expected);
    }

    #[test]
    fn budget_enforced() {
        let v = space();
        let u = ExtElem::wedge_word(&v, &[0, 1, 2]);
        assert!(matches!(tensor_oracle_mul(&u, &u, 5), Err(Error::DegreeBudget(_))));
    }
}
