//! Exact arithmetic in small finite fields F_{p^m}.
//!
//! Elements are stored as `FEl` indices: the base-p digit expansion of the
//! index gives the coordinate vector over the prime field with respect to
//! the power basis of the modulus root. Multiplication uses discrete
//! log/antilog tables whenever the order is at most 2^16; addition uses a
//! precomputed table for very small fields and digit arithmetic otherwise.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field element, valid only together with the field it came from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FEl(pub u32);

impl FEl {
    pub const ZERO: FEl = FEl(0);
    pub const ONE: FEl = FEl(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

const MUL_TABLE_MAX: u64 = 1 << 16;
const ADD_TABLE_MAX: u64 = 1 << 10;
const ORDER_MAX: u64 = 1 << 20;

/// F_{p^m} with a fixed, deterministic modulus.
#[derive(Debug)]
pub struct PrimePowerField {
    characteristic: u64,
    degree: u32,
    order: u64,
    /// Monic irreducible modulus, little-endian coefficients over F_p.
    modulus: Vec<u32>,
    /// exp[k] = g^k for a fixed generator g of the unit group; empty above 2^16.
    exp: Vec<u32>,
    /// log[a] defined for a >= 1; log[0] unused.
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
    generator: FEl,
}

/// Serialized field descriptor: `{"char": p, "degree": m, "modulus": [c0,..,cm]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub degree: u32,
    pub modulus: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// --- polynomial helpers over the prime field, used only during construction ---

fn pdeg(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn pmod_reduce(a: &mut Vec<u32>, modulus: &[u32], p: u64) {
    let md = pdeg(modulus).unwrap();
    while let Some(d) = pdeg(a) {
        if d < md {
            break;
        }
        let lead = a[d] as u64;
        // modulus is monic
        let shift = d - md;
        for i in 0..=md {
            let sub = (lead * modulus[i] as u64) % p;
            let cur = a[i + shift] as u64;
            a[i + shift] = ((cur + p - sub) % p) as u32;
        }
    }
    a.truncate(md);
    a.resize(md, 0);
}

fn pmul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u64) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            prod[i + j] = ((prod[i + j] as u64 + ai as u64 * bj as u64) % p) as u32;
        }
    }
    pmod_reduce(&mut prod, modulus, p);
    prod
}

/// Trial division by every monic polynomial of degree <= deg(f)/2.
fn is_irreducible_over_prime(f: &[u32], p: u64) -> bool {
    let n = match pdeg(f) {
        Some(n) => n,
        None => return false,
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    for d in 1..=n / 2 {
        // monic divisors of degree d, low coefficients enumerated base p
        let count = p.pow(d as u32);
        for c in 0..count {
            let mut div = vec![0u32; d + 1];
            let mut cc = c;
            for coef in div.iter_mut().take(d) {
                *coef = (cc % p) as u32;
                cc /= p;
            }
            div[d] = 1;
            if divides(&div, f, p) {
                return false;
            }
        }
    }
    true
}

fn divides(div: &[u32], f: &[u32], p: u64) -> bool {
    let mut rem = f.to_vec();
    let dd = pdeg(div).unwrap();
    loop {
        let rd = match pdeg(&rem) {
            Some(rd) => rd,
            None => return true,
        };
        if rd < dd {
            return false;
        }
        let lead = rem[rd] as u64; // div is monic
        let shift = rd - dd;
        for i in 0..=dd {
            let sub = (lead * div[i] as u64) % p;
            let cur = rem[i + shift] as u64;
            rem[i + shift] = ((cur + p - sub) % p) as u32;
        }
    }
}

impl PrimePowerField {
    /// The canonical field of order `characteristic^degree`.
    ///
    /// The modulus is the irreducible monic polynomial whose non-leading
    /// coefficient vector, read as a base-p integer, is least; repeated
    /// calls hand back the same object.
    pub fn make(characteristic: u64, degree: u32) -> Result<Arc<PrimePowerField>> {
        if !is_prime(characteristic) {
            return Err(Error::NonPrime(characteristic));
        }
        if degree == 0 {
            return Err(Error::Invalid("field degree must be positive".into()));
        }
        let order = characteristic
            .checked_pow(degree)
            .filter(|&o| o <= ORDER_MAX)
            .ok_or_else(|| Error::FieldTooLarge(u64::MAX))?;

        static REGISTRY: OnceLock<Mutex<HashMap<(u64, u32), Arc<PrimePowerField>>>> =
            OnceLock::new();
        let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        {
            let guard = registry.lock().unwrap();
            if let Some(f) = guard.get(&(characteristic, degree)) {
                return Ok(f.clone());
            }
        }
        let field = Arc::new(Self::build(characteristic, degree, order));
        registry
            .lock()
            .unwrap()
            .entry((characteristic, degree))
            .or_insert_with(|| field.clone());
        Ok(field)
    }

    fn build(p: u64, m: u32, order: u64) -> PrimePowerField {
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            let mut found = None;
            for c in 0..p.pow(m) {
                let mut f = vec![0u32; m as usize + 1];
                let mut cc = c;
                for coef in f.iter_mut().take(m as usize) {
                    *coef = (cc % p) as u32;
                    cc /= p;
                }
                f[m as usize] = 1;
                if is_irreducible_over_prime(&f, p) {
                    found = Some(f);
                    break;
                }
            }
            found.expect("an irreducible polynomial of every degree exists")
        };

        let mut field = PrimePowerField {
            characteristic: p,
            degree: m,
            order,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
            generator: FEl::ZERO,
        };

        let gen = field.find_generator();
        field.generator = gen;
        if order <= MUL_TABLE_MAX {
            let units = (order - 1) as usize;
            let mut exp = Vec::with_capacity(units);
            let mut log = vec![0u32; order as usize];
            let mut cur = FEl::ONE;
            for k in 0..units {
                exp.push(cur.0);
                log[cur.0 as usize] = k as u32;
                cur = field.mul_slow(cur, gen);
            }
            debug_assert_eq!(cur, FEl::ONE);
            field.exp = exp;
            field.log = log;
        }
        if order <= ADD_TABLE_MAX {
            let o = order as usize;
            let mut table = vec![0u32; o * o];
            for a in 0..o {
                for b in 0..o {
                    table[a * o + b] = field.add_slow(FEl(a as u32), FEl(b as u32)).0;
                }
            }
            field.add_table = Some(table);
        }
        field
    }

    fn find_generator(&self) -> FEl {
        if self.order == 2 {
            return FEl::ONE;
        }
        let factors = prime_factors(self.order - 1);
        'cand: for g in 1..self.order {
            let g = FEl(g as u32);
            for &f in &factors {
                if self.pow_slow(g, (self.order - 1) / f) == FEl::ONE {
                    continue 'cand;
                }
            }
            return g;
        }
        unreachable!("unit group of a finite field is cyclic");
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// A fixed generator of the multiplicative group.
    pub fn generator(&self) -> FEl {
        self.generator
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            characteristic: self.characteristic,
            degree: self.degree,
            modulus: self.modulus.clone(),
        }
    }

    pub fn same_field(&self, other: &PrimePowerField) -> bool {
        self.characteristic == other.characteristic && self.degree == other.degree
    }

    #[inline]
    fn coeffs(&self, a: FEl) -> Vec<u32> {
        let p = self.characteristic;
        let mut v = vec![0u32; self.degree as usize];
        let mut x = a.0 as u64;
        for c in v.iter_mut() {
            *c = (x % p) as u32;
            x /= p;
        }
        v
    }

    fn from_coeffs(&self, v: &[u32]) -> FEl {
        let p = self.characteristic;
        let mut x = 0u64;
        for &c in v.iter().rev() {
            x = x * p + c as u64;
        }
        FEl(x as u32)
    }

    fn add_slow(&self, a: FEl, b: FEl) -> FEl {
        let p = self.characteristic;
        if self.degree == 1 {
            return FEl(((a.0 as u64 + b.0 as u64) % p) as u32);
        }
        let mut out = 0u64;
        let mut mult = 1u64;
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        for _ in 0..self.degree {
            out += ((x % p + y % p) % p) * mult;
            mult *= p;
            x /= p;
            y /= p;
        }
        FEl(out as u32)
    }

    fn mul_slow(&self, a: FEl, b: FEl) -> FEl {
        if a.is_zero() || b.is_zero() {
            return FEl::ZERO;
        }
        if self.degree == 1 {
            return FEl(((a.0 as u64 * b.0 as u64) % self.characteristic) as u32);
        }
        let prod = pmul_mod(
            &self.coeffs(a),
            &self.coeffs(b),
            &self.modulus,
            self.characteristic,
        );
        self.from_coeffs(&prod)
    }

    fn pow_slow(&self, a: FEl, mut e: u64) -> FEl {
        let mut base = a;
        let mut acc = FEl::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn add(&self, a: FEl, b: FEl) -> FEl {
        if let Some(t) = &self.add_table {
            return FEl(t[a.0 as usize * self.order as usize + b.0 as usize]);
        }
        if self.characteristic == 2 {
            return FEl(a.0 ^ b.0);
        }
        self.add_slow(a, b)
    }

    #[inline]
    pub fn neg(&self, a: FEl) -> FEl {
        if a.is_zero() {
            return a;
        }
        let p = self.characteristic;
        if p == 2 {
            return a;
        }
        if self.degree == 1 {
            return FEl((p - a.0 as u64) as u32);
        }
        let mut v = self.coeffs(a);
        for c in v.iter_mut() {
            if *c != 0 {
                *c = (p - *c as u64) as u32;
            }
        }
        self.from_coeffs(&v)
    }

    #[inline]
    pub fn sub(&self, a: FEl, b: FEl) -> FEl {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FEl, b: FEl) -> FEl {
        if a.is_zero() || b.is_zero() {
            return FEl::ZERO;
        }
        if !self.exp.is_empty() {
            let units = self.order - 1;
            let mut k = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
            if k >= units {
                k -= units;
            }
            return FEl(self.exp[k as usize]);
        }
        self.mul_slow(a, b)
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: FEl) -> FEl {
        assert!(!a.is_zero(), "inverse of zero");
        if !self.exp.is_empty() {
            let units = self.order - 1;
            let k = self.log[a.0 as usize] as u64;
            return FEl(self.exp[((units - k) % units) as usize]);
        }
        self.pow_slow(a, self.order - 2)
    }

    #[inline]
    pub fn div(&self, a: FEl, b: FEl) -> FEl {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: FEl, e: u64) -> FEl {
        if a.is_zero() {
            return if e == 0 { FEl::ONE } else { FEl::ZERO };
        }
        if !self.exp.is_empty() {
            let units = self.order - 1;
            let k = (self.log[a.0 as usize] as u128 * e as u128 % units as u128) as u64;
            return FEl(self.exp[k as usize]);
        }
        self.pow_slow(a, e)
    }

    /// Embeds an integer via the prime subfield.
    pub fn from_int(&self, k: u64) -> FEl {
        FEl((k % self.characteristic) as u32)
    }

    pub fn frobenius(&self, a: FEl) -> FEl {
        self.pow(a, self.characteristic)
    }

    /// Trace to the prime field, returned as an integer in [0, p).
    pub fn trace_to_prime(&self, a: FEl) -> u64 {
        let mut acc = FEl::ZERO;
        let mut cur = a;
        for _ in 0..self.degree {
            acc = self.add(acc, cur);
            cur = self.frobenius(cur);
        }
        debug_assert!(acc.0 < self.characteristic as u32);
        acc.0 as u64
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, a: FEl) -> u64 {
        assert!(!a.is_zero());
        let mut ord = self.order - 1;
        for f in prime_factors(self.order - 1) {
            while ord % f == 0 && self.pow(a, ord / f) == FEl::ONE {
                ord /= f;
            }
        }
        ord
    }

    pub fn random_elem<R: rand::Rng>(&self, rng: &mut R) -> FEl {
        FEl(rng.gen_range(0..self.order) as u32)
    }

    pub fn random_nonzero<R: rand::Rng>(&self, rng: &mut R) -> FEl {
        FEl(rng.gen_range(1..self.order) as u32)
    }

    /// The field homomorphism into an extension of degree a multiple of this
    /// degree, sending the power-basis root to the least root of our modulus.
    pub fn embedding_into(&self, big: &Arc<PrimePowerField>) -> Result<FieldEmbedding> {
        if big.characteristic != self.characteristic || big.degree % self.degree != 0 {
            return Err(Error::Invalid(format!(
                "no embedding of F_{} into F_{}",
                self.order, big.order
            )));
        }
        // scan the subfield of matching order for a root of our modulus
        let sub_units = self.order - 1;
        let big_units = big.order - 1;
        let step = big_units / sub_units;
        let mut root = None;
        let mut candidates: Vec<FEl> = vec![FEl::ZERO];
        if big.order <= MUL_TABLE_MAX {
            for k in 0..sub_units {
                candidates.push(FEl(big.exp[(k * step) as usize]));
            }
        } else {
            let g = big.pow(big.generator, step);
            let mut cur = FEl::ONE;
            for _ in 0..sub_units {
                candidates.push(cur);
                cur = big.mul(cur, g);
            }
        }
        candidates.sort_by_key(|e| e.0);
        for cand in candidates {
            let mut val = FEl::ZERO;
            let mut pw = FEl::ONE;
            for &c in &self.modulus {
                val = big.add(val, big.mul(big.from_int(c as u64), pw));
                pw = big.mul(pw, cand);
            }
            if val.is_zero() {
                root = Some(cand);
                break;
            }
        }
        let root = root.ok_or_else(|| {
            Error::Invalid("modulus has no root in the extension field".into())
        })?;
        // precompute images of the power basis
        let mut basis_images = Vec::with_capacity(self.degree as usize);
        let mut pw = FEl::ONE;
        for _ in 0..self.degree {
            basis_images.push(pw);
            pw = big.mul(pw, root);
        }
        Ok(FieldEmbedding {
            small: self.descriptor(),
            basis_images,
        })
    }
}

/// Images of the small field's power basis inside a larger field.
#[derive(Debug, Clone)]
pub struct FieldEmbedding {
    small: FieldDescriptor,
    basis_images: Vec<FEl>,
}

impl FieldEmbedding {
    pub fn apply(&self, small: &PrimePowerField, big: &PrimePowerField, a: FEl) -> FEl {
        debug_assert_eq!(small.descriptor(), self.small);
        let p = small.characteristic;
        let mut x = a.0 as u64;
        let mut out = FEl::ZERO;
        for &img in &self.basis_images {
            let c = x % p;
            if c != 0 {
                out = big.add(out, big.mul(big.from_int(c), img));
            }
            x /= p;
        }
        out
    }
}

/// The canonical field for `(characteristic, degree)`.
pub fn make_field(characteristic: u64, degree: u32) -> Result<Arc<PrimePowerField>> {
    PrimePowerField::make(characteristic, degree)
}

/// An element of exact multiplicative order `k`, for `k` dividing q - 1.
pub fn primitive_root_of_unity(field: &PrimePowerField, k: u64) -> Result<FEl> {
    if k == 0 || (field.order() - 1) % k != 0 {
        return Err(Error::NoSuchRoot {
            k,
            order: field.order(),
        });
    }
    let root = field.pow(field.generator(), (field.order() - 1) / k);
    debug_assert_eq!(field.elem_order(root), k);
    Ok(root)
}

/// The minimal m with p | l^m - 1, i.e. the multiplicative order of l mod p.
pub fn splitting_degree_for_characters(p: u64, l: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    if !is_prime(l) {
        return Err(Error::NonPrime(l));
    }
    if p == l {
        return Err(Error::EqualCharacteristic(p));
    }
    let mut pow = l % p;
    let mut m = 1u32;
    while pow != 1 {
        pow = pow * (l % p) % p;
        m += 1;
    }
    Ok(m)
}

/// The coefficient field F_{l^m} for a group over F_{p^r}; characteristics
/// must differ.
#[derive(Debug, Clone)]
pub struct CoefficientField {
    pub l: u64,
    pub m: u32,
    pub field: Arc<PrimePowerField>,
}

impl CoefficientField {
    pub fn new(l: u64, m: u32, p: u64) -> Result<CoefficientField> {
        if l == p {
            return Err(Error::EqualCharacteristic(p));
        }
        Ok(CoefficientField {
            l,
            m,
            field: make_field(l, m)?,
        })
    }

    /// The smallest coefficient field over l carrying the characters needed
    /// for groups of matrix characteristic p.
    pub fn splitting_for(l: u64, p: u64) -> Result<CoefficientField> {
        let m = splitting_degree_for_characters(p, l)?;
        CoefficientField::new(l, m, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_orders() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(f3.order(), 3);
        assert_eq!(f3.modulus(), &[0, 1]);
    }

    #[test]
    fn f4_modulus_is_unique_quadratic() {
        let f4 = make_field(2, 2).unwrap();
        // x^2 + x + 1 is the only irreducible quadratic over F_2
        assert_eq!(f4.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn f8_modulus_is_irreducible_by_trial_division() {
        let f8 = make_field(2, 3).unwrap();
        let m = f8.modulus();
        assert_eq!(m.len(), 4);
        assert_eq!(m[3], 1);
        // oracle: full trial division over F_2, plus no roots in F_2
        assert!(is_irreducible_over_prime(m, 2));
        for x in 0..2u64 {
            let val: u64 = m
                .iter()
                .enumerate()
                .map(|(i, &c)| c as u64 * x.pow(i as u32))
                .sum();
            assert_ne!(val % 2, 0);
        }
    }

    #[test]
    fn make_field_rejects_composite_characteristic() {
        assert!(make_field(6, 1).is_err());
        assert!(make_field(1, 1).is_err());
    }

    #[test]
    fn make_field_is_referentially_transparent() {
        for &(p, m) in &[(2u64, 4u32), (3, 2), (5, 1), (7, 1)] {
            let a = make_field(p, m).unwrap();
            let b = make_field(p, m).unwrap();
            assert_eq!(a.modulus(), b.modulus());
            assert!(Arc::ptr_eq(&a, &b));
        }
    }

    #[test]
    fn axioms_on_sampled_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for &(p, m) in &[(2u64, 1u32), (2, 2), (2, 4), (3, 1), (3, 4), (5, 1), (7, 1), (5, 4)] {
            let f = make_field(p, m).unwrap();
            for _ in 0..1000 {
                let a = f.random_elem(&mut rng);
                let b = f.random_elem(&mut rng);
                let c = f.random_elem(&mut rng);
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                // Frobenius is additive
                assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
            }
            for x in 1..f.order() {
                let x = FEl(x as u32);
                assert_eq!(f.mul(x, f.inv(x)), FEl::ONE);
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(primitive_root_of_unity(&f3, 2).unwrap(), FEl(2));

        let f4 = make_field(2, 2).unwrap();
        let z = primitive_root_of_unity(&f4, 3).unwrap();
        assert_eq!(f4.pow(z, 3), FEl::ONE);
        assert_ne!(z, FEl::ONE);

        let f7 = make_field(7, 1).unwrap();
        assert_eq!(primitive_root_of_unity(&f7, 2).unwrap(), FEl(6));

        assert!(primitive_root_of_unity(&f7, 4).is_err());
    }

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree_for_characters(2, 3).unwrap(), 1);
        // direct computation: order of 2 mod 3 is 2, order of 3 mod 7 is 6
        assert_eq!(splitting_degree_for_characters(3, 2).unwrap(), 2);
        assert_eq!(splitting_degree_for_characters(7, 3).unwrap(), 6);
        assert_eq!(splitting_degree_for_characters(5, 2).unwrap(), 4);
        assert!(splitting_degree_for_characters(3, 3).is_err());
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let small = make_field(2, 2).unwrap();
        let big = make_field(2, 4).unwrap();
        let emb = small.embedding_into(&big).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let a = small.random_elem(&mut rng);
            let b = small.random_elem(&mut rng);
            let fa = emb.apply(&small, &big, a);
            let fb = emb.apply(&small, &big, b);
            assert_eq!(emb.apply(&small, &big, small.add(a, b)), big.add(fa, fb));
            assert_eq!(emb.apply(&small, &big, small.mul(a, b)), big.mul(fa, fb));
        }
        assert_eq!(emb.apply(&small, &big, FEl::ONE), FEl::ONE);
    }

    #[test]
    fn trace_is_onto_prime_field() {
        let f9 = make_field(3, 2).unwrap();
        let mut seen = std::collections::HashSet::new();
        for x in 0..9 {
            seen.insert(f9.trace_to_prime(FEl(x)));
        }
        assert_eq!(seen.len(), 3);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let a = f9.random_elem(&mut rng);
            let b = f9.random_elem(&mut rng);
            let s = f9.trace_to_prime(f9.add(a, b));
            assert_eq!(s, (f9.trace_to_prime(a) + f9.trace_to_prime(b)) % 3);
        }
    }
}
