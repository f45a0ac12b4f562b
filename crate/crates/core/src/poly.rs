//! Univariate polynomials over a `PrimePowerField`, plus factorization.
//!
//! Coefficients are little-endian with no trailing zeros (the zero
//! polynomial is the empty vector). Factorization is squarefree
//! decomposition, distinct-degree splitting, then Cantor-Zassenhaus
//! equal-degree splitting (with the additive-trace variant in
//! characteristic 2).

use rand::Rng;

use crate::field::{FEl, PrimePowerField};

pub type Poly = Vec<FEl>;

pub fn poly_normalize(a: &mut Poly) {
    while a.last() == Some(&FEl::ZERO) {
        a.pop();
    }
}

pub fn poly_deg(a: &Poly) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn poly_is_zero(a: &Poly) -> bool {
    a.is_empty()
}

pub fn poly_one() -> Poly {
    vec![FEl::ONE]
}

pub fn poly_x() -> Poly {
    vec![FEl::ZERO, FEl::ONE]
}

pub fn poly_add(f: &PrimePowerField, a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![FEl::ZERO; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(FEl::ZERO);
        let y = b.get(i).copied().unwrap_or(FEl::ZERO);
        *o = f.add(x, y);
    }
    poly_normalize(&mut out);
    out
}

pub fn poly_sub(f: &PrimePowerField, a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![FEl::ZERO; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(FEl::ZERO);
        let y = b.get(i).copied().unwrap_or(FEl::ZERO);
        *o = f.sub(x, y);
    }
    poly_normalize(&mut out);
    out
}

pub fn poly_scale(f: &PrimePowerField, a: &Poly, c: FEl) -> Poly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|&x| f.mul(x, c)).collect()
}

pub fn poly_mul(f: &PrimePowerField, a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FEl::ZERO; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = f.add(out[i + j], f.mul(ai, bj));
        }
    }
    poly_normalize(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub fn poly_divmod(f: &PrimePowerField, a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead_inv = f.inv(b[db]);
    let mut rem = a.clone();
    let mut quot = Vec::new();
    while let Some(dr) = poly_deg(&rem) {
        if dr < db {
            break;
        }
        let c = f.mul(rem[dr], lead_inv);
        let shift = dr - db;
        if quot.len() < shift + 1 {
            quot.resize(shift + 1, FEl::ZERO);
        }
        quot[shift] = c;
        for i in 0..=db {
            let t = f.mul(c, b[i]);
            rem[i + shift] = f.sub(rem[i + shift], t);
        }
        poly_normalize(&mut rem);
    }
    poly_normalize(&mut quot);
    (quot, rem)
}

pub fn poly_rem(f: &PrimePowerField, a: &Poly, b: &Poly) -> Poly {
    poly_divmod(f, a, b).1
}

pub fn poly_monic(f: &PrimePowerField, a: &Poly) -> Poly {
    match poly_deg(a) {
        None => Vec::new(),
        Some(d) => poly_scale(f, a, f.inv(a[d])),
    }
}

pub fn poly_gcd(f: &PrimePowerField, a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !poly_is_zero(&y) {
        let r = poly_rem(f, &x, &y);
        x = y;
        y = r;
    }
    poly_monic(f, &x)
}

pub fn poly_derivative(f: &PrimePowerField, a: &Poly) -> Poly {
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for (i, &c) in a.iter().enumerate().skip(1) {
        let mut acc = FEl::ZERO;
        for _ in 0..(i as u64 % f.characteristic()) {
            acc = f.add(acc, c);
        }
        out.push(acc);
    }
    poly_normalize(&mut out);
    out
}

pub fn poly_eval(f: &PrimePowerField, a: &Poly, x: FEl) -> FEl {
    let mut acc = FEl::ZERO;
    for &c in a.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// a^e mod m by square-and-multiply.
pub fn poly_powmod(f: &PrimePowerField, a: &Poly, mut e: u64, m: &Poly) -> Poly {
    let mut base = poly_rem(f, a, m);
    let mut acc = poly_one();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(f, &poly_mul(f, &acc, &base), m);
        }
        base = poly_rem(f, &poly_mul(f, &base, &base), m);
        e >>= 1;
    }
    acc
}

fn poly_pth_root(f: &PrimePowerField, a: &Poly) -> Poly {
    // over F_q with q = p^r, the p-th root of c is c^(q/p)
    let p = f.characteristic() as usize;
    let e = f.order() / f.characteristic();
    let mut out = Vec::new();
    let mut i = 0;
    while i < a.len() {
        out.push(f.pow(a[i], e));
        i += p;
    }
    poly_normalize(&mut out);
    out
}

/// Squarefree decomposition: returns (g, multiplicity) pairs with the g
/// squarefree, pairwise coprime, and prod g^mult equal to the monic input.
pub fn squarefree_decomposition(f: &PrimePowerField, a: &Poly) -> Vec<(Poly, u32)> {
    let a = poly_monic(f, a);
    let mut out: Vec<(Poly, u32)> = Vec::new();
    sqf_rec(f, &a, 1, &mut out);
    out.sort_by(|x, y| poly_key(&x.0).cmp(&poly_key(&y.0)).then(x.1.cmp(&y.1)));
    out
}

fn sqf_rec(f: &PrimePowerField, a: &Poly, mult: u32, out: &mut Vec<(Poly, u32)>) {
    if poly_deg(a) == Some(0) {
        return;
    }
    let da = poly_derivative(f, a);
    if poly_is_zero(&da) {
        // a is a p-th power
        let root = poly_pth_root(f, a);
        sqf_rec(f, &root, mult * f.characteristic() as u32, out);
        return;
    }
    let mut c = poly_gcd(f, a, &da);
    let mut w = poly_divmod(f, a, &c).0; // squarefree part
    let mut i = mult;
    while poly_deg(&w) != Some(0) {
        let y = poly_gcd(f, &w, &c);
        let fac = poly_divmod(f, &w, &y).0;
        if poly_deg(&fac).unwrap_or(0) > 0 {
            merge_factor(out, fac, i);
        }
        w = y.clone();
        c = poly_divmod(f, &c, &y).0;
        i += mult;
    }
    if poly_deg(&c) != Some(0) {
        // leftover is a p-th power; the zero-derivative branch above
        // applies the multiplicity bump
        sqf_rec(f, &c, mult, out);
    }
}

fn merge_factor(out: &mut Vec<(Poly, u32)>, fac: Poly, mult: u32) {
    for (g, m) in out.iter_mut() {
        if *m == mult && *g == fac {
            return;
        }
    }
    out.push((fac, mult));
}

fn poly_key(a: &Poly) -> (usize, Vec<u32>) {
    (a.len(), a.iter().rev().map(|c| c.0).collect())
}

/// All monic irreducible factors with multiplicities, deterministically
/// ordered by (degree, coefficients). The rng only drives equal-degree
/// splitting, whose output set is order-normalized afterwards.
pub fn factor_poly<R: Rng>(f: &PrimePowerField, a: &Poly, rng: &mut R) -> Vec<(Poly, u32)> {
    let mut out: Vec<(Poly, u32)> = Vec::new();
    for (sqf, mult) in squarefree_decomposition(f, a) {
        for irr in factor_squarefree(f, &sqf, rng) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|x, y| poly_key(&x.0).cmp(&poly_key(&y.0)));
    out
}

fn factor_squarefree<R: Rng>(f: &PrimePowerField, a: &Poly, rng: &mut R) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut rest = a.clone();
    // distinct-degree: gcd with x^(q^d) - x peels off factors of degree d
    let q = f.order();
    let mut d = 1usize;
    let mut xq = poly_powmod(f, &poly_x(), q, &rest); // x^(q^1) mod rest
    while let Some(dr) = poly_deg(&rest) {
        if dr == 0 {
            break;
        }
        if dr < 2 * d {
            out.push(poly_monic(f, &rest));
            break;
        }
        let diff = poly_sub(f, &xq, &poly_x());
        let g = poly_gcd(f, &diff, &rest);
        if poly_deg(&g).unwrap_or(0) > 0 {
            equal_degree_split(f, &g, d, rng, &mut out);
            rest = poly_divmod(f, &rest, &g).0;
            xq = poly_rem(f, &xq, &rest);
        }
        d += 1;
        xq = poly_powmod_poly(f, &xq, q, &rest);
    }
    out
}

/// base^(q) mod m where base is already reduced mod m.
fn poly_powmod_poly(f: &PrimePowerField, base: &Poly, mut e: u64, m: &Poly) -> Poly {
    let mut b = base.clone();
    let mut acc = poly_one();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(f, &poly_mul(f, &acc, &b), m);
        }
        b = poly_rem(f, &poly_mul(f, &b, &b), m);
        e >>= 1;
    }
    acc
}

fn equal_degree_split<R: Rng>(
    f: &PrimePowerField,
    a: &Poly,
    d: usize,
    rng: &mut R,
    out: &mut Vec<Poly>,
) {
    let da = poly_deg(a).unwrap();
    if da == d {
        out.push(poly_monic(f, a));
        return;
    }
    let q = f.order();
    loop {
        // random polynomial of degree < deg(a)
        let mut r: Poly = (0..da).map(|_| f.random_elem(rng)).collect();
        poly_normalize(&mut r);
        if poly_deg(&r).unwrap_or(0) == 0 {
            continue;
        }
        let g = if f.characteristic() == 2 {
            // additive trace: T(r) = r + r^2 + r^4 + ... over F_{2^k}, k*d terms
            let bits = (q.trailing_zeros() as usize) * d;
            let mut t = r.clone();
            let mut cur = r.clone();
            for _ in 1..bits {
                cur = poly_rem(f, &poly_mul(f, &cur, &cur), a);
                t = poly_add(f, &t, &cur);
            }
            poly_gcd(f, &t, a)
        } else {
            // r^((q^d - 1)/2) = norm(r)^((q-1)/2) with the norm taken as a
            // product of q-power Frobenius twists; avoids the huge exponent
            let mut prod = poly_rem(f, &r, a);
            let mut cur = prod.clone();
            for _ in 1..d {
                cur = poly_powmod_poly(f, &cur, q, a);
                prod = poly_rem(f, &poly_mul(f, &prod, &cur), a);
            }
            let pw = poly_powmod_poly(f, &prod, (q - 1) / 2, a);
            let shifted = poly_sub(f, &pw, &poly_one());
            poly_gcd(f, &shifted, a)
        };
        let dg = poly_deg(&g).unwrap_or(0);
        if dg > 0 && dg < da {
            equal_degree_split(f, &g, d, rng, out);
            let rest = poly_divmod(f, a, &g).0;
            equal_degree_split(f, &rest, d, rng, out);
            return;
        }
    }
}
