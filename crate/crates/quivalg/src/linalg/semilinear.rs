//! Kernels of Frobenius-semilinear maps v -> M * Frob^n(v) over GF(p^k),
//! where Frob raises every coordinate to the p-th power.
//!
//! Such a map is not GF(p^k)-linear when k > 1, but it is GF(p)-linear, and
//! its kernel is still a GF(p^k)-subspace because x -> x^{p^n} is a field
//! automorphism. We restrict scalars: expand each GF(p^k) coordinate into k
//! GF(p) coordinates, solve the k-fold larger linear system over GF(p), and
//! reassemble the GF(p)-kernel into a GF(p^k)-echelonized basis.

use crate::field::{FieldError, FieldSpec, Scalar};
use crate::linalg::{rank_kernel, Matrix, Subspace};

pub fn semilinear_kernel(
    m: &Matrix,
    frob_power: u32,
    field: &FieldSpec,
) -> Result<Subspace, FieldError> {
    let p = field.characteristic();
    if p == 0 {
        return Err(FieldError::CharacteristicZero);
    }
    let k = field.degree() as usize;
    if k == 1 {
        // Frobenius is the identity on GF(p): plain kernel.
        let (_, ker) = rank_kernel(m, field);
        return Ok(ker);
    }

    let prime = FieldSpec::prime_field(p).expect("characteristic is prime");
    let (rows, cols) = (m.rows(), m.cols());
    // u = t^{p^n}; Frob^n(sum_j v_j t^j) = sum_j v_j u^j with v_j in GF(p).
    let u = field.frobenius(&field.generator(), frob_power)?;
    let mut u_pow = Vec::with_capacity(k);
    let mut acc = field.one();
    for _ in 0..k {
        u_pow.push(acc.clone());
        acc = field.mul(&acc, &u);
    }

    // Big GF(p) system: rows (i, l) for l-th digit of output coordinate i,
    // columns (c, j) for the j-th digit of input coordinate c.
    let mut big = Matrix::zero(rows * k, cols * k, &prime);
    for i in 0..rows {
        for c in 0..cols {
            let entry = m.at(i, c);
            if field.is_zero(entry) {
                continue;
            }
            for (j, upj) in u_pow.iter().enumerate() {
                let val = field.mul(entry, upj);
                let Scalar::Fin(packed) = val else {
                    unreachable!()
                };
                for (l, digit) in field.decode(packed).into_iter().enumerate() {
                    if digit != 0 {
                        big.set(i * k + l, c * k + j, Scalar::Fin(digit));
                    }
                }
            }
        }
    }

    let (_, ker_p) = rank_kernel(&big, &prime);
    // Reassemble digit vectors into GF(p^k) vectors and echelonize over the
    // extension field.
    let mut spanning = Vec::with_capacity(ker_p.dim());
    for row in ker_p.basis_rows() {
        let mut v = Vec::with_capacity(cols);
        for c in 0..cols {
            let digits: Vec<u64> = (0..k)
                .map(|j| match &row[c * k + j] {
                    Scalar::Fin(d) => *d,
                    Scalar::Rat(_) => unreachable!(),
                })
                .collect();
            v.push(Scalar::Fin(field.encode(&digits)));
        }
        spanning.push(v);
    }
    let ker = Subspace::from_spanning(cols, spanning, field);
    debug_assert_eq!(
        ker.dim() * k,
        ker_p.dim(),
        "semilinear kernel must be a GF(p^k)-subspace"
    );
    Ok(ker)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_reduces_to_plain_kernel() {
        let f = FieldSpec::prime_field(5).unwrap();
        let m = Matrix::from_rows(
            vec![
                vec![f.from_int(1), f.from_int(2)],
                vec![f.from_int(2), f.from_int(4)],
            ],
            2,
            &f,
        );
        let ker = semilinear_kernel(&m, 3, &f).unwrap();
        let (_, plain) = rank_kernel(&m, &f);
        assert_eq!(ker, plain);
    }

    #[test]
    fn zero_matrix_full_kernel() {
        let f = FieldSpec::extension(2, &[1, 1, 1]).unwrap();
        let m = Matrix::zero(2, 2, &f);
        let ker = semilinear_kernel(&m, 1, &f).unwrap();
        assert_eq!(ker.dim(), 2);
    }

    #[test]
    fn gf4_t_times_square_has_trivial_kernel() {
        // v -> t * v^2 over GF(4): enumerating all four elements shows only 0
        // maps to 0.
        let f = FieldSpec::extension(2, &[1, 1, 1]).unwrap();
        let mut m = Matrix::zero(1, 1, &f);
        m.set(0, 0, f.generator());
        let ker = semilinear_kernel(&m, 1, &f).unwrap();
        assert_eq!(ker.dim(), 0);
    }

    #[test]
    fn characteristic_zero_rejected() {
        let f = FieldSpec::rationals();
        let m = Matrix::zero(1, 1, &f);
        assert_eq!(
            semilinear_kernel(&m, 1, &f),
            Err(FieldError::CharacteristicZero)
        );
    }

    #[test]
    fn matches_bruteforce_on_small_fields() {
        // Exhaustive check over GF(4) and GF(9), ambient dimension 2.
        for (p, modulus) in [(2u64, vec![1i64, 1, 1]), (3, vec![1, 0, 1])] {
            let f = FieldSpec::extension(p, &modulus).unwrap();
            let elems: Vec<Scalar> = f.elements().collect();
            for trial in 0..6u64 {
                let mut rng = crate::prng::SplitMix64::new(trial);
                let mut m = Matrix::zero(2, 2, &f);
                for r in 0..2 {
                    for c in 0..2 {
                        m.set(r, c, elems[rng.below(elems.len() as u64) as usize].clone());
                    }
                }
                for n in 1..=2u32 {
                    let ker = semilinear_kernel(&m, n, &f).unwrap();
                    let mut brute = 0usize;
                    for a in &elems {
                        for b in &elems {
                            let fa = f.frobenius(a, n).unwrap();
                            let fb = f.frobenius(b, n).unwrap();
                            let out = m.apply(&[fa, fb], &f);
                            if out.iter().all(|x| f.is_zero(x)) {
                                brute += 1;
                            }
                        }
                    }
                    let order = f.order().unwrap() as usize;
                    assert_eq!(order.pow(ker.dim() as u32), brute);
                }
            }
        }
    }
}
