//! Reduction in the quotient of the affine Hecke algebra by the two-sided
//! corner and winding relations: every degree-zero class `[X^a]` is a scalar
//! multiple `lambda(a)` of the constant braid class `[1]`, and every class of
//! nonzero total degree vanishes.
//!
//! Classes are represented by elements of the polynomial representation; the
//! right-hand relations are already collapsed there, so the quotient is cut
//! out by the left relations only:
//!
//! * (R1)  `[T_i . f] = s [f]`,
//! * (R2)  `[X^a] = c^{-2 a_1} [X^{eta(a)}]`, `eta` the cyclic shift.
//!
//! [`Reducer`] computes `lambda` constructively: rotate the maximal entry to
//! the front by (R2), sweep it rightward with (R1) exchanges — each exchange
//! costs a pivot coefficient and spills correction monomials of strictly
//! smaller complexity `(sum |a_i|, max, #max)` — then eliminate the rotated
//! class with (R2) and recurse. [`oracle_reduce`] answers the same question
//! by exact linear algebra on an exponent box and is kept independent of the
//! recursion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::laurent::{ExpVec, PolyElement};
use crate::linalg;
use crate::polyrep::apply_t;
use crate::scalar::Scalar;

/// One applied rewriting rule, for audit traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleTag {
    /// Exchange across slot `i` using the left Hecke relation.
    R1Step(usize),
    /// Cyclic rotation using the winding relation.
    R2Rotate,
    /// Nonzero total degree forces the class to vanish.
    TotalDegreeKill,
    /// The zero exponent vector is the constant braid class itself.
    BaseCase,
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleTag::R1Step(i) => write!(f, "R1-step {i}"),
            RuleTag::R2Rotate => write!(f, "R2-rotate"),
            RuleTag::TotalDegreeKill => write!(f, "total-degree-kill"),
            RuleTag::BaseCase => write!(f, "base-case"),
        }
    }
}

/// The scalar `lambda(a)` with `[X^a] = lambda(a) [1]`, plus the rule trace
/// that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub lambda: Scalar,
    pub trace: Vec<RuleTag>,
}

/// Memoizing reducer for a fixed `kappa`. Safe to share across threads; the
/// memo table is transparent (results are identical with it disabled).
#[derive(Debug)]
pub struct Reducer {
    kappa: usize,
    memo: Option<Mutex<HashMap<Vec<i64>, ReductionResult>>>,
}

impl Reducer {
    pub fn new(kappa: usize) -> Self {
        assert!(kappa >= 1);
        Self {
            kappa,
            memo: Some(Mutex::new(HashMap::new())),
        }
    }

    /// A reducer with memoization disabled.
    pub fn without_memo(kappa: usize) -> Self {
        Self { kappa, memo: None }
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    /// `lambda(a)` with `[X^a] = lambda(a) [1]`.
    pub fn reduce_monomial(&self, a: &ExpVec) -> Result<ReductionResult> {
        assert_eq!(a.kappa(), self.kappa, "kappa mismatch");
        self.reduce_inner(a, None)
    }

    /// Linear extension: `sum coeff(a) * lambda(a)`.
    pub fn reduce_class(&self, f: &PolyElement) -> Result<Scalar> {
        assert_eq!(f.kappa(), self.kappa, "kappa mismatch");
        let mut out = Scalar::zero();
        for (e, q) in f.iter() {
            if e.total() != 0 {
                continue;
            }
            let r = self.reduce_inner(e, None)?;
            out = out.add_ref(&q.mul_ref(&r.lambda));
        }
        Ok(out)
    }

    /// Just the scalar, without the trace.
    pub fn lambda(&self, a: &ExpVec) -> Result<Scalar> {
        Ok(self.reduce_monomial(a)?.lambda)
    }

    fn memo_get(&self, key: &[i64]) -> Option<ReductionResult> {
        self.memo
            .as_ref()
            .and_then(|m| m.lock().unwrap().get(key).cloned())
    }

    fn memo_put(&self, key: Vec<i64>, value: &ReductionResult) {
        if let Some(m) = &self.memo {
            m.lock().unwrap().insert(key, value.clone());
        }
    }

    fn reduce_inner(
        &self,
        a: &ExpVec,
        bound: Option<crate::laurent::Complexity>,
    ) -> Result<ReductionResult> {
        // Every recursive call must strictly shrink the measure.
        if let Some(b) = bound {
            assert!(
                a.complexity() < b,
                "complexity must strictly decrease: {:?} under {:?}",
                a.complexity(),
                b
            );
        }
        if a.total() != 0 {
            return Ok(ReductionResult {
                lambda: Scalar::zero(),
                trace: vec![RuleTag::TotalDegreeKill],
            });
        }
        if a.is_zero() {
            return Ok(ReductionResult {
                lambda: Scalar::one(),
                trace: vec![RuleTag::BaseCase],
            });
        }
        if let Some(hit) = self.memo_get(a.entries()) {
            return Ok(hit);
        }

        let kappa = self.kappa;
        let max = a.max_entry();

        // (R2) rotation: bring a maximal entry to the front; among rotations
        // achieving that, take the lexicographically largest vector so traces
        // and memo keys are deterministic.
        let mut best: Option<(usize, ExpVec)> = None;
        let mut cur = a.clone();
        for k in 0..kappa {
            if cur.get(0) == max {
                let better = match &best {
                    None => true,
                    Some((_, b)) => cur > *b,
                };
                if better {
                    best = Some((k, cur.clone()));
                }
            }
            cur = cur.rotate_left();
        }
        let (ksteps, rot) = best.expect("some rotation starts with the maximum");
        // lambda(a) = c^{-2(a_1 + .. + a_k)} lambda(rot)
        let prefix: i64 = a.entries()[..ksteps].iter().sum();
        let outer = Scalar::c_pow(-2 * prefix);

        let mut trace = Vec::new();
        if ksteps > 0 {
            trace.push(RuleTag::R2Rotate);
        }

        // (R1) sweep: maintain lambda(v) = factor * lambda(rot) + sum
        // corr[m] * lambda(m) while the front maximum walks to the back.
        let mut v = rot.clone();
        let mut factor = Scalar::one();
        let mut corr: BTreeMap<ExpVec, Scalar> = BTreeMap::new();
        let s = Scalar::s();
        for i in 1..kappa {
            let w = v.swapped(i);
            if w == v {
                continue; // equal entries: the classes already coincide
            }
            let full = apply_t(i, &PolyElement::monomial(v.clone(), Scalar::one()))
                .expect("index in range");
            let pivot = full.coeff(&w);
            if pivot.is_zero() {
                return Err(Error::Internal(format!(
                    "vanishing exchange pivot at slot {i} for {:?}",
                    v.entries()
                )));
            }
            let pivot_inv = pivot.inv().expect("pivot is nonzero");
            // [X^w] = ((s - c_v) [X^v] - sum_{m != v, w} c_m [X^m]) / pivot,
            // folding any X^v term of the relation back into the factor.
            let scale = s.sub_ref(&full.coeff(&v)).mul_ref(&pivot_inv);
            factor = factor.mul_ref(&scale);
            for q in corr.values_mut() {
                *q = q.mul_ref(&scale);
            }
            for (m, c_m) in full.iter() {
                if *m == w || *m == v {
                    continue;
                }
                let delta = c_m.mul_ref(&pivot_inv);
                let entry = corr.entry(m.clone()).or_insert_with(Scalar::zero);
                *entry = entry.sub_ref(&delta);
                if entry.is_zero() {
                    corr.remove(m);
                }
            }
            v = w;
            trace.push(RuleTag::R1Step(i));
        }
        debug_assert_eq!(v, rot.rotate_left());

        // (R2) once more: lambda(eta(rot)) = c^{2 rot_1} lambda(rot), so
        // (c^{2 rot_1} - factor) lambda(rot) = sum corr[m] lambda(m).
        trace.push(RuleTag::R2Rotate);
        let pivot2 = Scalar::c_pow(2 * rot.get(0)).sub_ref(&factor);
        if pivot2.is_zero() {
            return Err(Error::Internal(format!(
                "vanishing rotation pivot for {:?}",
                rot.entries()
            )));
        }

        let limit = a.complexity();
        let mut sum = Scalar::zero();
        for (m, cm) in &corr {
            let sub = self.reduce_inner(m, Some(limit))?;
            sum = sum.add_ref(&cm.mul_ref(&sub.lambda));
        }
        let lambda = outer.mul_ref(&sum.div_ref(&pivot2).expect("pivot checked nonzero"));

        let result = ReductionResult { lambda, trace };
        self.memo_put(a.entries().to_vec(), &result);
        Ok(result)
    }
}

/// Enumerate all exponent vectors with entries in `[-bound, bound]` and the
/// given total degree, in lexicographic order.
pub fn box_monomials(kappa: usize, bound: i64, total: i64) -> Vec<ExpVec> {
    fn go(kappa: usize, bound: i64, total: i64, prefix: &mut Vec<i64>, out: &mut Vec<ExpVec>) {
        let left = kappa - prefix.len();
        if left == 0 {
            if total == 0 {
                out.push(ExpVec::new(prefix.clone()));
            }
            return;
        }
        // prune: remaining entries can sum to at most bound*left in magnitude
        if total.abs() > bound * left as i64 {
            return;
        }
        for e in -bound..=bound {
            prefix.push(e);
            go(kappa, bound, total - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(kappa, bound, total, &mut Vec::new(), &mut out);
    out
}

/// The dimension of the degree-`total` slice of the boxed quotient, computed
/// by exact linear algebra. The full quotient has dimension 1 in degree 0
/// and 0 elsewhere; a mismatch signals a bug (or a box with no relations).
pub fn oracle_slice_dimension(kappa: usize, bound: i64, total: i64) -> Result<usize> {
    let monomials = box_monomials(kappa, bound, total);
    if monomials.is_empty() {
        return Ok(0);
    }
    let (basis, _) = relation_basis(kappa, bound, &monomials)?;
    Ok(monomials.len() - basis.len())
}

fn relation_basis(
    kappa: usize,
    bound: i64,
    monomials: &[ExpVec],
) -> Result<(Vec<Vec<Scalar>>, Vec<usize>)> {
    let index: HashMap<&ExpVec, usize> = monomials.iter().zip(0..).collect();
    let n = monomials.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let push_poly = |p: &PolyElement, rows: &mut Vec<Vec<Scalar>>| -> Result<()> {
        let mut row = vec![Scalar::zero(); n];
        for (e, q) in p.iter() {
            match index.get(e) {
                Some(&j) => row[j] = q.clone(),
                None => {
                    return Err(Error::BoxTooSmall(format!(
                        "relation escapes the box [-{bound}, {bound}]^{kappa} at {:?}",
                        e.entries()
                    )))
                }
            }
        }
        rows.push(row);
        Ok(())
    };
    for b in monomials {
        let xb = PolyElement::monomial(b.clone(), Scalar::one());
        // (R1): T_i(X^b) - s X^b
        for i in 1..kappa {
            let rel = apply_t(i, &xb)
                .expect("index in range")
                .sub(&xb.scale(&Scalar::s()));
            if !rel.is_zero() {
                push_poly(&rel, &mut rows)?;
            }
        }
        // (R2): c^{-2 b_1} X^{eta(b)} - X^b
        let rel = PolyElement::monomial(b.rotate_left(), Scalar::c_pow(-2 * b.get(0))).sub(&xb);
        if !rel.is_zero() {
            push_poly(&rel, &mut rows)?;
        }
    }
    let pivots = linalg::rref(&mut rows);
    Ok((rows, pivots))
}

/// Independent brute-force evaluation of `[f]` against `[1]`: span the
/// relations on the exponent box, row reduce, verify the expected quotient
/// dimensions, and express `f` in terms of the constant class.
pub fn oracle_reduce(f: &PolyElement, bound: i64) -> Result<Scalar> {
    assert!(bound >= 1);
    let kappa = f.kappa();
    for (e, _) in f.iter() {
        if e.entries().iter().any(|&x| x.abs() > bound) {
            return Err(Error::BoxTooSmall(format!(
                "input monomial {:?} outside [-{bound}, {bound}]^{kappa}",
                e.entries()
            )));
        }
    }

    let mut degrees: Vec<i64> = f.iter().map(|(e, _)| e.total()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    if degrees.is_empty() {
        return Ok(Scalar::zero());
    }

    let mut total = Scalar::zero();
    for d in degrees {
        let monomials = box_monomials(kappa, bound, d);
        let (basis, pivots) = relation_basis(kappa, bound, &monomials)?;
        let dim = monomials.len() - basis.len();
        let expected = usize::from(d == 0);
        if dim != expected {
            return Err(Error::InconsistentQuotient {
                degree: d,
                dimension: dim,
                expected,
            });
        }
        let index: HashMap<&ExpVec, usize> = monomials.iter().zip(0..).collect();
        let mut vf = vec![Scalar::zero(); monomials.len()];
        for (e, q) in f.iter() {
            if e.total() == d {
                vf[index[e]] = q.clone();
            }
        }
        let residual = linalg::reduce_against(&basis, &pivots, &vf);
        if d == 0 {
            let zero_vec = ExpVec::zero(kappa);
            let mut unit = vec![Scalar::zero(); monomials.len()];
            unit[index[&zero_vec]] = Scalar::one();
            let r1 = linalg::reduce_against(&basis, &pivots, &unit);
            let Some(lead) = (0..r1.len()).find(|&j| !r1[j].is_zero()) else {
                return Err(Error::InconsistentQuotient {
                    degree: 0,
                    dimension: 0,
                    expected: 1,
                });
            };
            let lambda = residual[lead].div_ref(&r1[lead])?;
            // residual must be proportional to the reduced constant class
            for j in 0..r1.len() {
                if residual[j] != lambda.mul_ref(&r1[j]) {
                    return Err(Error::Internal(
                        "degree-0 residual not proportional to the constant class".into(),
                    ));
                }
            }
            total = total.add_ref(&lambda);
        } else {
            // dimension 0: everything in the slice reduces to zero
            debug_assert!(residual.iter().all(Scalar::is_zero));
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExpVec {
        ExpVec::new(v.to_vec())
    }

    /// The pinned value lambda((1,-1)) = (s - s^-1) / (s^-1 c^2 - s).
    fn pinned_lambda() -> Scalar {
        Scalar::hbar() / (Scalar::s_pow(-1) * Scalar::c_pow(2) - Scalar::s())
    }

    #[test]
    fn base_cases() {
        let r = Reducer::new(2);
        let zero = r.reduce_monomial(&ev(&[0, 0])).unwrap();
        assert!(zero.lambda.is_one());
        assert_eq!(zero.trace, vec![RuleTag::BaseCase]);
        // nonzero total degree dies
        let killed = r.reduce_monomial(&ev(&[1, 0])).unwrap();
        assert!(killed.lambda.is_zero());
        assert_eq!(killed.trace, vec![RuleTag::TotalDegreeKill]);
    }

    #[test]
    fn pinned_value() {
        let r = Reducer::new(2);
        let got = r.reduce_monomial(&ev(&[1, -1])).unwrap();
        assert_eq!(got.lambda, pinned_lambda());
        // and the rotated partner picks up c^2
        let rotated = r.reduce_monomial(&ev(&[-1, 1])).unwrap();
        assert_eq!(rotated.lambda, Scalar::c_pow(2) * pinned_lambda());
    }

    #[test]
    fn reduce_class_examples() {
        let r = Reducer::new(2);
        // 1 + x1 reduces to 1
        let f = PolyElement::one(2).add(&PolyElement::x(2, 1));
        assert!(r.reduce_class(&f).unwrap().is_one());
        assert!(r.reduce_class(&PolyElement::zero(2)).unwrap().is_zero());
        // relation kernel: [T_1 f] - s [f] = 0
        let g = PolyElement::monomial(ev(&[2, -2]), Scalar::one())
            .add(&PolyElement::monomial(ev(&[1, -1]), Scalar::hbar()));
        let rel = apply_t(1, &g).unwrap().sub(&g.scale(&Scalar::s()));
        assert!(r.reduce_class(&rel).unwrap().is_zero());
    }

    #[test]
    fn memoization_is_transparent() {
        let with = Reducer::new(3);
        let without = Reducer::without_memo(3);
        for a in box_monomials(3, 2, 0) {
            assert_eq!(
                with.reduce_monomial(&a).unwrap().lambda,
                without.reduce_monomial(&a).unwrap().lambda
            );
        }
    }

    #[test]
    fn oracle_examples() {
        assert!(oracle_reduce(&PolyElement::one(2), 1).unwrap().is_one());
        let f = PolyElement::monomial(ev(&[1, -1]), Scalar::one());
        assert_eq!(oracle_reduce(&f, 2).unwrap(), pinned_lambda());
        let g = PolyElement::monomial(ev(&[-1, 1]), Scalar::one());
        assert_eq!(
            oracle_reduce(&g, 2).unwrap(),
            Scalar::c_pow(2) * pinned_lambda()
        );
    }

    #[test]
    fn oracle_rejects_oversized_input() {
        let f = PolyElement::monomial(ev(&[3, -3]), Scalar::one());
        assert!(matches!(
            oracle_reduce(&f, 2),
            Err(Error::BoxTooSmall(_))
        ));
    }

    #[test]
    fn oracle_dimensions() {
        for kappa in 2..=3 {
            assert_eq!(oracle_slice_dimension(kappa, 2, 0).unwrap(), 1);
            assert_eq!(oracle_slice_dimension(kappa, 2, 1).unwrap(), 0);
            assert_eq!(oracle_slice_dimension(kappa, 2, -2).unwrap(), 0);
        }
    }

    #[test]
    fn reducer_matches_oracle_on_window() {
        for kappa in 2..=3usize {
            let r = Reducer::new(kappa);
            for a in box_monomials(kappa, 2, 0) {
                let fast = r.reduce_monomial(&a).unwrap().lambda;
                let slow =
                    oracle_reduce(&PolyElement::monomial(a.clone(), Scalar::one()), 2).unwrap();
                assert_eq!(fast, slow, "disagreement at {:?}", a.entries());
            }
        }
    }

    #[test]
    fn rotation_consistency() {
        // lambda(a) = c^{-2 a_1} lambda(eta(a))
        for kappa in 2..=3usize {
            let r = Reducer::new(kappa);
            for a in box_monomials(kappa, 2, 0) {
                let lhs = r.reduce_monomial(&a).unwrap().lambda;
                let rhs = Scalar::c_pow(-2 * a.get(0))
                    .mul_ref(&r.reduce_monomial(&a.rotate_left()).unwrap().lambda);
                assert_eq!(lhs, rhs, "rotation mismatch at {:?}", a.entries());
            }
        }
    }

    #[test]
    fn total_degree_kill_window() {
        for kappa in 2..=3usize {
            let r = Reducer::new(kappa);
            for d in [-3i64, -1, 1, 2, 3] {
                for a in box_monomials(kappa, 3, d) {
                    assert!(r.reduce_monomial(&a).unwrap().lambda.is_zero());
                }
            }
        }
    }
}
