//! Seeded random spaces, elements and basis changes.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use superquad::multilinear::monomials_of_degree;
use superquad::space::{GramForm, QuadSpace, SuperSpace};
use superquad::{ExtElem, Matrix, Parity, Scalar, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational, occasionally with an imaginary part.
pub fn scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let re = Scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
    if rng.gen_bool(0.2) {
        &re + &(&Scalar::i() * &Scalar::from_int(rng.gen_range(-2..=2)))
    } else {
        re
    }
}

pub fn nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let c = scalar(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

fn invertible(rng: &mut ChaCha8Rng, n: usize, f: impl Fn(&mut ChaCha8Rng) -> Matrix) -> Matrix {
    if n == 0 {
        return Matrix::zeros(0, 0);
    }
    loop {
        let m = f(rng);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Random non-degenerate super-symmetric form on `(m|k)`, `k` even.
pub fn form(rng: &mut ChaCha8Rng, m: usize, k: usize) -> GramForm {
    assert!(k.is_multiple_of(2));
    let even = invertible(rng, m, |rng| {
        let mut a = Matrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let c = Scalar::from_int(rng.gen_range(-2..=2));
                a[(i, j)] = c.clone();
                a[(j, i)] = c;
            }
        }
        a
    });
    let odd = invertible(rng, k, |rng| {
        let mut a = Matrix::zeros(k, k);
        for i in 0..k {
            for j in i + 1..k {
                let c = Scalar::from_int(rng.gen_range(-2..=2));
                a[(i, j)] = c.clone();
                a[(j, i)] = -c;
            }
        }
        a
    });
    GramForm::new(even, odd)
}

pub fn space_of(rng: &mut ChaCha8Rng, m: usize, k: usize) -> Arc<QuadSpace> {
    let even: Vec<String> = (1..=m).map(|i| format!("a{i}")).collect();
    let odd: Vec<String> = (1..=k).map(|i| format!("b{i}")).collect();
    let s = SuperSpace::new("V", &even, &odd).unwrap();
    let f = form(rng, m, k);
    Arc::new(QuadSpace::new(s, f).unwrap())
}

/// A random nonzero space of dimension at most `(3|2)`.
pub fn space(rng: &mut ChaCha8Rng) -> Arc<QuadSpace> {
    loop {
        let m = rng.gen_range(0..=3);
        let k = 2 * rng.gen_range(0..=1);
        if m + k > 0 {
            return space_of(rng, m, k);
        }
    }
}

/// A random space that has vectors of both parities.
pub fn mixed_space(rng: &mut ChaCha8Rng) -> Arc<QuadSpace> {
    let m = rng.gen_range(1..=3);
    space_of(rng, m, 2)
}

pub fn parity(rng: &mut ChaCha8Rng, qs: &QuadSpace) -> Parity {
    let s = qs.space();
    match (s.even_dim(), s.odd_dim()) {
        (0, _) => Parity::Odd,
        (_, 0) => Parity::Even,
        _ if rng.gen_bool(0.5) => Parity::Odd,
        _ => Parity::Even,
    }
}

/// Homogeneous vector of the given parity (may be zero).
pub fn vector_of(rng: &mut ChaCha8Rng, qs: &QuadSpace, p: Parity) -> Vector {
    (0..qs.dim())
        .map(|i| if qs.parity(i) == p { scalar(rng) } else { Scalar::zero() })
        .collect()
}

/// Homogeneous vector of random parity, together with that parity.
pub fn vector(rng: &mut ChaCha8Rng, qs: &QuadSpace) -> (Vector, Parity) {
    let p = parity(rng, qs);
    (vector_of(rng, qs, p), p)
}

/// Sum of up to four random terms of exterior degree in `degrees`,
/// restricted to one parity when `p` is given.
pub fn elem(rng: &mut ChaCha8Rng, qs: &Arc<QuadSpace>, degrees: &[usize], p: Option<Parity>) -> ExtElem {
    let s = qs.space();
    let mut pool = Vec::new();
    for &d in degrees {
        for m in monomials_of_degree(s, d) {
            if p.is_none_or(|p| m.parity(s) == p) {
                pool.push(m);
            }
        }
    }
    let mut out = ExtElem::zero(qs);
    if pool.is_empty() {
        return out;
    }
    for _ in 0..rng.gen_range(1..=4) {
        let m = pool[rng.gen_range(0..pool.len())].clone();
        out = &out + &ExtElem::monomial(qs, m, scalar(rng));
    }
    out
}

/// Homogeneous element of a single degree, of random parity.
pub fn homogeneous(rng: &mut ChaCha8Rng, qs: &Arc<QuadSpace>, degree: usize) -> (ExtElem, Parity) {
    let p = if rng.gen_bool(0.5) { Parity::Odd } else { Parity::Even };
    (elem(rng, qs, &[degree], Some(p)), p)
}

fn square(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut a = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = Scalar::from_int(rng.gen_range(-2..=2));
        }
    }
    a
}

/// Random invertible block-diagonal matrix: a parity-preserving change of
/// basis for a space with `m` even and `k` odd basis vectors.
pub fn basis_change(rng: &mut ChaCha8Rng, m: usize, k: usize) -> Matrix {
    let a = invertible(rng, m, |rng| square(rng, m));
    let b = invertible(rng, k, |rng| square(rng, k));
    Matrix::block_diag(&a, &b)
}
