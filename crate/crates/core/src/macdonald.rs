//! Nonsymmetric Macdonald polynomials: the monic joint eigenvectors of the
//! `Y` operators, triangular against dominance of sorted shapes, pairwise
//! orthogonal under the skein form.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::laurent::{ExpVec, PolyElement};
use crate::linalg;
use crate::pairing;
use crate::polyrep::apply_y;
use crate::qreduce::Reducer;
use crate::scalar::Scalar;

/// A computed eigenvector: `polynomial = X^composition + dominated terms`,
/// with `Y_i polynomial = eigenvalues[i-1] * polynomial` exactly.
#[derive(Debug, Clone)]
pub struct MacdonaldData {
    pub composition: ExpVec,
    pub polynomial: PolyElement,
    pub eigenvalues: Vec<Scalar>,
    pub support: Vec<ExpVec>,
}

/// Does the sorted shape `b` sit weakly below the sorted shape `a` in
/// dominance order? Both must have equal length and equal sums.
fn shape_dominated(b: &[i64], a: &[i64]) -> bool {
    let mut pa = 0i64;
    let mut pb = 0i64;
    for (x, y) in b.iter().zip(a) {
        pb += x;
        pa += y;
        if pb > pa {
            return false;
        }
    }
    pa == pb
}

/// The triangularity support of `a`: every `b` with the same total degree
/// whose sorted shape is dominated by `a`'s. Ordered deterministically —
/// shapes in lexicographic descending order (a linear extension of
/// dominance), vectors inside a shape in lexicographic descending order —
/// with `a` itself moved to the front.
pub fn mac_support(a: &ExpVec) -> Vec<ExpVec> {
    let kappa = a.kappa();
    let shape = a.shape();
    let hi = shape[0];
    let lo = shape[kappa - 1];
    let total = a.total();

    // enumerate candidate vectors with entries in [lo, hi] and the right sum
    fn go(
        kappa: usize,
        lo: i64,
        hi: i64,
        total: i64,
        prefix: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let left = kappa - prefix.len();
        if left == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if total < lo * left as i64 || total > hi * left as i64 {
            return;
        }
        for e in lo..=hi {
            prefix.push(e);
            go(kappa, lo, hi, total - e, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    go(kappa, lo, hi, total, &mut Vec::new(), &mut raw);

    let mut by_shape: Vec<(Vec<i64>, ExpVec)> = raw
        .into_iter()
        .map(ExpVec::new)
        .filter(|b| shape_dominated(&b.shape(), &shape))
        .map(|b| (b.shape(), b))
        .collect();
    // shapes lex-descending, then vectors lex-descending
    by_shape.sort_by(|(sa, va), (sb, vb)| sb.cmp(sa).then(vb.cmp(va)));

    let mut out: Vec<ExpVec> = vec![a.clone()];
    out.extend(by_shape.into_iter().map(|(_, v)| v).filter(|v| v != a));
    out
}

/// Compute the Macdonald polynomial for `a` by exact linear algebra: build
/// the matrices of every `Y_i` on the support span, read the target
/// eigenvalues off the diagonal, and intersect the eigenspaces.
pub fn mac_poly(a: &ExpVec) -> Result<MacdonaldData> {
    let kappa = a.kappa();
    let support = mac_support(a);
    let n = support.len();
    let index: HashMap<&ExpVec, usize> = support.iter().zip(0..).collect();

    // matrices[i][r][c] = coefficient of X^{support[r]} in Y_{i+1} X^{support[c]}
    let mut matrices: Vec<Vec<Vec<Scalar>>> = Vec::with_capacity(kappa);
    for i in 1..=kappa {
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (col, b) in support.iter().enumerate() {
            let image = apply_y(i, &PolyElement::monomial(b.clone(), Scalar::one()), 1)?;
            for (e, q) in image.iter() {
                match index.get(e) {
                    Some(&row) => m[row][col] = q.clone(),
                    None => {
                        return Err(Error::NonInvariantSupport {
                            index: i,
                            composition: a.entries().to_vec(),
                        })
                    }
                }
            }
        }
        matrices.push(m);
    }

    // target eigenvalues: the diagonal entries at the leading column
    let lead = index[a];
    let eigenvalues: Vec<Scalar> = matrices.iter().map(|m| m[lead][lead].clone()).collect();

    // joint kernel of the stacked (Y_i - y_i I)
    let mut stacked: Vec<Vec<Scalar>> = Vec::with_capacity(kappa * n);
    for (m, y) in matrices.iter().zip(&eigenvalues) {
        for (r, row) in m.iter().enumerate() {
            let mut shifted = row.clone();
            shifted[r] = shifted[r].sub_ref(y);
            stacked.push(shifted);
        }
    }
    let kernel = linalg::nullspace(&stacked, n);
    if kernel.len() != 1 {
        return Err(Error::DegenerateEigenspace {
            composition: a.entries().to_vec(),
            dimension: kernel.len(),
        });
    }
    let v = &kernel[0];
    if v[lead].is_zero() {
        return Err(Error::DegenerateEigenspace {
            composition: a.entries().to_vec(),
            dimension: 0,
        });
    }
    let norm = v[lead].inv().expect("leading coefficient nonzero");

    let mut polynomial = PolyElement::zero(kappa);
    for (b, coeff) in support.iter().zip(v) {
        polynomial.add_term(b.clone(), &coeff.mul_ref(&norm));
    }

    // the matrix route and the operator route must agree exactly
    for (i, y) in eigenvalues.iter().enumerate() {
        let lhs = apply_y(i + 1, &polynomial, 1)?;
        if lhs != polynomial.scale(y) {
            return Err(Error::Internal(format!(
                "eigenvector verification failed for Y_{} at {:?}",
                i + 1,
                a.entries()
            )));
        }
    }

    Ok(MacdonaldData {
        composition: a.clone(),
        polynomial,
        eigenvalues,
        support,
    })
}

/// Orthogonality under the skein form: distinct compositions pair to zero,
/// equal ones to something nonzero.
pub fn orthogonality_check(reducer: &Reducer, a: &ExpVec, b: &ExpVec) -> Result<bool> {
    let ea = mac_poly(a)?;
    let eb = mac_poly(b)?;
    let value = pairing::pair(reducer, &ea.polynomial, &eb.polynomial)?.value;
    Ok(if a == b {
        !value.is_zero()
    } else {
        value.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExpVec {
        ExpVec::new(v.to_vec())
    }

    #[test]
    fn support_examples() {
        assert_eq!(mac_support(&ev(&[0, 0])), vec![ev(&[0, 0])]);
        assert_eq!(mac_support(&ev(&[1, 0])), vec![ev(&[1, 0]), ev(&[0, 1])]);
        assert_eq!(
            mac_support(&ev(&[1, -1])),
            vec![ev(&[1, -1]), ev(&[-1, 1]), ev(&[0, 0])]
        );
    }

    #[test]
    fn constant_eigenvector() {
        // E_0 = 1 with eigenvalues (s^{k-1}, s^{k-3}, .., s^{1-k})
        for kappa in 1..=3usize {
            let data = mac_poly(&ExpVec::zero(kappa)).unwrap();
            assert_eq!(data.polynomial, PolyElement::one(kappa));
            for (i, y) in data.eigenvalues.iter().enumerate() {
                let e = kappa as i64 - 1 - 2 * i as i64;
                assert_eq!(*y, Scalar::s_pow(e));
            }
        }
    }

    #[test]
    fn kappa2_closed_forms() {
        // E_{(1,0)} = x1, eigenvalues (s^-1 c^2, s)
        let d10 = mac_poly(&ev(&[1, 0])).unwrap();
        assert_eq!(d10.polynomial, PolyElement::x(2, 1));
        assert_eq!(
            d10.eigenvalues,
            vec![Scalar::s_pow(-1) * Scalar::c_pow(2), Scalar::s()]
        );
        // E_{(0,1)} = x2 + ((s - s^-1) c^2 / (s - s^-1 c^2)) x1,
        // eigenvalues (s, s^-1 c^2)
        let d01 = mac_poly(&ev(&[0, 1])).unwrap();
        let gamma = (Scalar::hbar() * Scalar::c_pow(2))
            / (Scalar::s() - Scalar::s_pow(-1) * Scalar::c_pow(2));
        let expect = PolyElement::x(2, 2).add(&PolyElement::x(2, 1).scale(&gamma));
        assert_eq!(d01.polynomial, expect);
        assert_eq!(
            d01.eigenvalues,
            vec![Scalar::s(), Scalar::s_pow(-1) * Scalar::c_pow(2)]
        );
    }

    #[test]
    fn orthogonality_examples() {
        let r = Reducer::new(2);
        assert!(orthogonality_check(&r, &ev(&[1, 0]), &ev(&[0, 1])).unwrap());
        assert!(orthogonality_check(&r, &ev(&[1, 0]), &ev(&[1, 0])).unwrap());
        assert!(orthogonality_check(&r, &ev(&[0, 0]), &ev(&[1, -1])).unwrap());
    }

    #[test]
    fn monic_leading_coefficient() {
        let data = mac_poly(&ev(&[0, 1, -1])).unwrap();
        assert!(data.polynomial.coeff(&ev(&[0, 1, -1])).is_one());
        // eigenvector property for every Y_i is checked inside mac_poly
        assert_eq!(data.eigenvalues.len(), 3);
    }
}
