//! Exact gcd of integer-coefficient polynomials in `s` and `c`.
//!
//! The bivariate gcd treats a polynomial as univariate in `c` with
//! coefficients in Z[s], splitting off contents and running a subresultant
//! remainder sequence on the primitive parts. Both levels share the same
//! structure; the univariate base case works over Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial over Z, ascending exponents, trimmed (empty = zero).
pub type UPoly = Vec<BigInt>;

pub fn u_trim(p: &mut UPoly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

pub fn u_is_zero(p: &UPoly) -> bool {
    p.is_empty()
}

pub fn u_deg(p: &UPoly) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

pub fn u_one() -> UPoly {
    vec![BigInt::one()]
}

pub fn u_is_one(p: &UPoly) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub fn u_neg(p: &UPoly) -> UPoly {
    p.iter().map(|c| -c).collect()
}

pub fn u_add(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    u_trim(&mut out);
    out
}

pub fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    u_add(a, &u_neg(b))
}

pub fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

pub fn u_scale(p: &UPoly, k: &BigInt) -> UPoly {
    if k.is_zero() {
        return Vec::new();
    }
    p.iter().map(|c| c * k).collect()
}

/// Positive gcd of all coefficients; zero for the zero polynomial.
pub fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

/// Exact division by an integer; panics on inexactness (internal use only).
pub fn u_divexact_int(p: &UPoly, k: &BigInt) -> UPoly {
    p.iter()
        .map(|c| {
            let (q, r) = c.div_rem(k);
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

/// Exact univariate division; `None` if the division is not exact.
pub fn u_divexact(p: &UPoly, d: &UPoly) -> Option<UPoly> {
    assert!(!u_is_zero(d), "division by zero polynomial");
    if u_is_zero(p) {
        return Some(Vec::new());
    }
    if p.len() < d.len() {
        return None;
    }
    let mut rem = p.clone();
    let mut quot = vec![BigInt::zero(); p.len() - d.len() + 1];
    let dl = d.last().unwrap();
    while !rem.is_empty() && rem.len() >= d.len() {
        let shift = rem.len() - d.len();
        let (q, r) = rem.last().unwrap().div_rem(dl);
        if !r.is_zero() {
            return None;
        }
        quot[shift] = q.clone();
        for (j, dc) in d.iter().enumerate() {
            rem[shift + j] -= &q * dc;
        }
        u_trim(&mut rem);
    }
    if rem.is_empty() {
        u_trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// Pseudo-remainder of `f` by `g`: the remainder of `lc(g)^(deg f - deg g + 1) * f`.
fn u_prem(f: &UPoly, g: &UPoly) -> UPoly {
    let dg = u_deg(g);
    let lg = g.last().unwrap().clone();
    let mut r = f.clone();
    let mut e = u_deg(f) as i64 - dg as i64 + 1;
    while !r.is_empty() && u_deg(&r) >= dg {
        let shift = u_deg(&r) - dg;
        let lr = r.last().unwrap().clone();
        let mut t = vec![BigInt::zero(); shift];
        t.extend(g.iter().map(|c| c * &lr));
        r = u_sub(&u_scale(&r, &lg), &t);
        e -= 1;
    }
    for _ in 0..e.max(0) {
        r = u_scale(&r, &lg);
    }
    r
}

/// Gcd of primitive inputs via the primitive pseudo-remainder sequence:
/// every remainder is divided by its integer content, which keeps the
/// coefficient growth flat at the cost of one integer gcd per step.
/// Returns a primitive polynomial with positive leading coefficient.
fn u_gcd_primitive(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut f, mut g) = if a.len() >= b.len() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    loop {
        if u_is_zero(&g) {
            break;
        }
        if u_deg(&g) == 0 {
            return u_one();
        }
        let r = u_prem(&f, &g);
        if u_is_zero(&r) {
            f = g;
            break;
        }
        if u_deg(&r) == 0 {
            return u_one();
        }
        let c = u_content(&r);
        f = g;
        g = u_divexact_int(&r, &c);
    }
    let c = u_content(&f);
    let mut out = u_divexact_int(&f, &c);
    if out.last().map(|l| l.is_negative()).unwrap_or(false) {
        out = u_neg(&out);
    }
    out
}

/// Full gcd over Z, content included; positive leading coefficient.
pub fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if u_is_zero(a) && u_is_zero(b) {
        return Vec::new();
    }
    if u_is_zero(a) {
        let c = u_content(b);
        let mut out = u_divexact_int(b, &c);
        if out.last().unwrap().is_negative() {
            out = u_neg(&out);
        }
        return u_scale(&out, &c);
    }
    if u_is_zero(b) {
        return u_gcd(b, a);
    }
    let ca = u_content(a);
    let cb = u_content(b);
    let c = ca.gcd(&cb);
    let pa = u_divexact_int(a, &ca);
    let pb = u_divexact_int(b, &cb);
    u_scale(&u_gcd_primitive(&pa, &pb), &c)
}

/// Bivariate polynomial: coefficients of ascending powers of `c`, each a
/// polynomial in `s`. Trimmed (empty = zero).
pub type BPoly = Vec<UPoly>;

pub fn b_trim(p: &mut BPoly) {
    while p.last().map(u_is_zero).unwrap_or(false) {
        p.pop();
    }
}

pub fn b_is_zero(p: &BPoly) -> bool {
    p.is_empty()
}

pub fn b_deg(p: &BPoly) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

pub fn b_one() -> BPoly {
    vec![u_one()]
}

pub fn b_is_one(p: &BPoly) -> bool {
    p.len() == 1 && u_is_one(&p[0])
}

pub fn b_neg(p: &BPoly) -> BPoly {
    p.iter().map(u_neg).collect()
}

pub fn b_sub(a: &BPoly, b: &BPoly) -> BPoly {
    let mut out = vec![Vec::new(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = c.clone();
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = u_sub(&out[i], c);
    }
    b_trim(&mut out);
    out
}

#[allow(dead_code)] // exercised by the gcd tests
pub fn b_mul(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if u_is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = u_add(&out[i + j], &u_mul(x, y));
        }
    }
    b_trim(&mut out);
    out
}

pub fn b_scale(p: &BPoly, k: &UPoly) -> BPoly {
    if u_is_zero(k) {
        return Vec::new();
    }
    p.iter().map(|c| u_mul(c, k)).collect()
}

/// Gcd in Z[s] of all coefficients.
pub fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        g = u_gcd(&g, c);
    }
    g
}

/// Exact division of every coefficient by a polynomial in `s`.
pub fn b_divexact_u(p: &BPoly, d: &UPoly) -> Option<BPoly> {
    let mut out = Vec::with_capacity(p.len());
    for c in p {
        out.push(u_divexact(c, d)?);
    }
    Some(out)
}

/// Exact bivariate division; `None` if not exact.
pub fn b_divexact(p: &BPoly, d: &BPoly) -> Option<BPoly> {
    assert!(!b_is_zero(d), "division by zero polynomial");
    if b_is_zero(p) {
        return Some(Vec::new());
    }
    if p.len() < d.len() {
        return None;
    }
    let mut rem = p.clone();
    let mut quot = vec![Vec::new(); p.len() - d.len() + 1];
    let dl = d.last().unwrap();
    while !rem.is_empty() && rem.len() >= d.len() {
        let shift = rem.len() - d.len();
        let q = u_divexact(rem.last().unwrap(), dl)?;
        quot[shift] = q.clone();
        for (j, dc) in d.iter().enumerate() {
            rem[shift + j] = u_sub(&rem[shift + j], &u_mul(&q, dc));
        }
        b_trim(&mut rem);
    }
    if rem.is_empty() {
        b_trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

fn b_prem(f: &BPoly, g: &BPoly) -> BPoly {
    let dg = b_deg(g);
    let lg = g.last().unwrap().clone();
    let mut r = f.clone();
    let mut e = b_deg(f) as i64 - dg as i64 + 1;
    while !r.is_empty() && b_deg(&r) >= dg {
        let shift = b_deg(&r) - dg;
        let lr = r.last().unwrap().clone();
        let mut t: BPoly = vec![Vec::new(); shift];
        t.extend(g.iter().map(|c| u_mul(c, &lr)));
        r = b_sub(&b_scale(&r, &lg), &t);
        e -= 1;
    }
    for _ in 0..e.max(0) {
        r = b_scale(&r, &lg);
    }
    r
}

/// Value of a polynomial in `s` at an integer point.
fn u_eval(p: &UPoly, e: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * e + c;
    }
    acc
}

/// Evaluate `s -> e`, producing a univariate polynomial in `c`.
fn b_eval_s(p: &BPoly, e: &BigInt) -> UPoly {
    let mut out: UPoly = p.iter().map(|coeff| u_eval(coeff, e)).collect();
    u_trim(&mut out);
    out
}

fn max_s_degree(p: &BPoly) -> usize {
    p.iter()
        .filter(|c| !u_is_zero(c))
        .map(|c| u_deg(c))
        .max()
        .unwrap_or(0)
}

/// Gcd of primitive inputs by evaluation and interpolation: take univariate
/// gcds of the images at integer values of `s`, interpolate the candidate,
/// and verify by exact division. A degree-zero image settles coprimality at
/// once; unlucky evaluation points are discarded by degree minimality, and
/// failed verification just gathers more points. Falls back to a primitive
/// pseudo-remainder sequence if the point supply is exhausted.
///
/// Returns `(g, a/g, b/g)`; the cofactors fall out of the verification.
fn b_gcd_primitive(a: &BPoly, b: &BPoly) -> (BPoly, BPoly, BPoly) {
    let lc_a = a.last().unwrap();
    let lc_b = b.last().unwrap();
    let gamma = u_gcd(lc_a, lc_b);
    let mut target = max_s_degree(a).min(max_s_degree(b)) + u_deg(&gamma) + 2;

    let mut min_deg = usize::MAX;
    // (point, image scaled so its leading coefficient is gamma(point))
    let mut points: Vec<(BigInt, Vec<BigRational>)> = Vec::new();
    let mut next = 1i64;
    while next <= 100_000 {
        let e = BigInt::from(next);
        next = if next > 0 { -next } else { -next + 1 };
        if u_eval(lc_a, &e).is_zero() || u_eval(lc_b, &e).is_zero() {
            continue;
        }
        let fe = b_eval_s(a, &e);
        let ge = b_eval_s(b, &e);
        let he = u_gcd(&fe, &ge);
        if u_deg(&he) == 0 {
            return (b_one(), a.clone(), b.clone());
        }
        if u_deg(&he) < min_deg {
            min_deg = u_deg(&he);
            points.clear();
        } else if u_deg(&he) > min_deg {
            continue;
        }
        let scale = BigRational::new(u_eval(&gamma, &e), he.last().unwrap().clone());
        let image: Vec<BigRational> = he
            .iter()
            .map(|c| BigRational::from_integer(c.clone()) * &scale)
            .collect();
        points.push((e, image));
        if points.len() < target {
            continue;
        }
        if let Some(candidate) = interpolate_candidate(&points, min_deg) {
            if let Some(qa) = b_divexact(a, &candidate) {
                if let Some(qb) = b_divexact(b, &candidate) {
                    return (candidate, qa, qb);
                }
            }
        }
        target += 2;
    }
    let g = b_gcd_prs(a, b);
    let qa = b_divexact(a, &g).expect("gcd divides");
    let qb = b_divexact(b, &g).expect("gcd divides");
    (g, qa, qb)
}

/// Lagrange-interpolate each `c`-coefficient from the scaled images. The
/// images are exact values of an integer polynomial, so with enough points
/// every interpolated coefficient reduces to an integer; any remaining
/// denominator means the point set was short and the caller retries.
fn interpolate_candidate(points: &[(BigInt, Vec<BigRational>)], deg_c: usize) -> Option<BPoly> {
    let n = points.len();
    // Lagrange basis weights w_j = prod_{k != j} 1 / (e_j - e_k)
    let mut weights = Vec::with_capacity(n);
    for j in 0..n {
        let mut denom = BigInt::one();
        for k in 0..n {
            if k != j {
                denom *= &points[j].0 - &points[k].0;
            }
        }
        if denom.is_zero() {
            return None;
        }
        weights.push(BigRational::new(BigInt::one(), denom));
    }
    let zero = || BigRational::from_integer(BigInt::zero());
    let mut out: BPoly = Vec::with_capacity(deg_c + 1);
    for ci in 0..=deg_c {
        // interpolate the polynomial in s whose value at e_j is image_j[ci]
        let mut coeffs = vec![zero(); n];
        for j in 0..n {
            let value = points[j].1.get(ci).cloned().unwrap_or_else(zero);
            if value.is_zero() {
                continue;
            }
            // value * w_j * prod_{k != j} (s - e_k), in the monomial basis
            let mut basis = vec![zero(); n];
            basis[0] = value * &weights[j];
            let mut len = 1;
            for k in 0..n {
                if k == j {
                    continue;
                }
                for idx in (0..len).rev() {
                    let v = basis[idx].clone();
                    basis[idx + 1] += &v;
                    basis[idx] = -(v * BigRational::from_integer(points[k].0.clone()));
                }
                len += 1;
            }
            for (idx, v) in basis.into_iter().enumerate() {
                coeffs[idx] += v;
            }
        }
        let mut upoly = Vec::with_capacity(n);
        for q in coeffs {
            if !q.denom().is_one() {
                return None;
            }
            upoly.push(q.numer().clone());
        }
        u_trim(&mut upoly);
        out.push(upoly);
    }
    b_trim(&mut out);
    if b_is_zero(&out) || b_deg(&out) != deg_c {
        return None;
    }
    let content = b_content(&out);
    let mut out = b_divexact_u(&out, &content)?;
    if out
        .last()
        .and_then(|l| l.last())
        .map(|x| x.is_negative())
        .unwrap_or(false)
    {
        out = b_neg(&out);
    }
    Some(out)
}

/// Primitive pseudo-remainder fallback.
fn b_gcd_prs(a: &BPoly, b: &BPoly) -> BPoly {
    let (mut f, mut g) = if a.len() >= b.len() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    loop {
        if b_is_zero(&g) {
            break;
        }
        if b_deg(&g) == 0 {
            return b_one();
        }
        let r = b_prem(&f, &g);
        if b_is_zero(&r) {
            f = g;
            break;
        }
        if b_deg(&r) == 0 {
            return b_one();
        }
        let c = b_content(&r);
        f = g;
        g = b_divexact_u(&r, &c).expect("content divides");
    }
    let c = b_content(&f);
    let mut out = b_divexact_u(&f, &c).expect("content divides");
    if out
        .last()
        .and_then(|l| l.last())
        .map(|x| x.is_negative())
        .unwrap_or(false)
    {
        out = b_neg(&out);
    }
    out
}

/// Full bivariate gcd over Z, content included. The result's leading
/// coefficient (of the leading `c`-coefficient) is positive.
#[cfg_attr(not(test), allow(dead_code))]
pub fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    b_gcd_cofactors(a, b).0
}

/// `(g, a/g, b/g)` in one pass, `g` with positive leading coefficient.
pub fn b_gcd_cofactors(a: &BPoly, b: &BPoly) -> (BPoly, BPoly, BPoly) {
    let (mut g, mut qa, mut qb) = b_gcd_cofactors_raw(a, b);
    if g.last()
        .and_then(|l| l.last())
        .map(|x| x.is_negative())
        .unwrap_or(false)
    {
        g = b_neg(&g);
        qa = b_neg(&qa);
        qb = b_neg(&qb);
    }
    (g, qa, qb)
}

fn b_gcd_cofactors_raw(a: &BPoly, b: &BPoly) -> (BPoly, BPoly, BPoly) {
    if b_is_zero(a) && b_is_zero(b) {
        return (Vec::new(), Vec::new(), Vec::new());
    }
    if b_is_zero(a) {
        let (g, qb, qa) = b_gcd_cofactors_raw(b, a);
        return (g, qa, qb);
    }
    if b_is_zero(b) {
        return (a.clone(), b_one(), Vec::new());
    }
    if a == b {
        return (a.clone(), b_one(), b_one());
    }
    // one exact division settles the common case of nested denominators
    if a.len() >= b.len() {
        if let Some(qa) = b_divexact(a, b) {
            return (b.clone(), qa, b_one());
        }
    } else if let Some(qb) = b_divexact(b, a) {
        return (a.clone(), b_one(), qb);
    }
    let ca = b_content(a);
    let cb = b_content(b);
    let c = u_gcd(&ca, &cb);
    let pa = b_divexact_u(a, &ca).unwrap();
    let pb = b_divexact_u(b, &cb).unwrap();
    let (g0, qa0, qb0) = b_gcd_primitive(&pa, &pb);
    let g = b_scale(&g0, &c);
    // a = ca*pa = ca*g0*qa0 = g * (ca/c) * qa0
    let qa = b_scale(&qa0, &u_divexact(&ca, &c).expect("content gcd divides"));
    let qb = b_scale(&qb0, &u_divexact(&cb, &c).expect("content gcd divides"));
    (g, qa, qb)
}
