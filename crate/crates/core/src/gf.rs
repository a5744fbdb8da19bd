//! Exact arithmetic in `F_p` and small extensions `F_{p^e}`, plus monic
//! additive polynomials `X^{p^h} + a_{h-1} X^{p^{h-1}} + ... + a_0 X`.
//!
//! Elements are stored as their base-`p` digit encoding: the element
//! `c_0 + c_1 T + ... + c_{e-1} T^{e-1}` is the integer `sum c_i p^i`.
//! Extension multiplication goes through discrete log tables, so only
//! fields with at most `2^16` elements are accepted.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// A field element, encoded as an integer below the field order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FieldInner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    tables: Option<Tables>,
}

/// The context of a finite field `F_{p^e}`. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.modulus {
            None => write!(f, "F_{}", self.0.p),
            Some(m) => write!(f, "F_{}^{} mod {:?}", self.0.p, self.0.e, m),
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.modulus == other.0.modulus
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over F_p, coefficients low to high, used only while
// validating a modulus and building tables.
fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = pow_mod(b[db] as u64, (p - 2) as u64, p as u64) as u32;
    while r.len() > db {
        let dr = r.len() - 1;
        let c = (r[dr] as u64 * lead_inv as u64 % p as u64) as u32;
        let shift = dr - db;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let e = modulus.len() - 1;
    // Trial division by every monic polynomial of degree 1..=e/2.
    for k in 1..=e / 2 {
        let count = (p as u64).pow(k as u32);
        for code in 0..count {
            let mut f = Vec::with_capacity(k + 1);
            let mut c = code;
            for _ in 0..k {
                f.push((c % p as u64) as u32);
                c /= p as u64;
            }
            f.push(1);
            if poly_rem(modulus, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if p as u64 > MAX_ORDER {
            return Err(Error::FieldTooLarge(p as u64));
        }
        Ok(Field(Arc::new(FieldInner {
            p,
            e: 1,
            q: p,
            modulus: None,
            tables: None,
        })))
    }

    /// The extension `F_p[T]/(modulus)`; `modulus` lists coefficients from
    /// the constant term up and must be monic and irreducible.
    pub fn extension(p: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let e = modulus.len().saturating_sub(1);
        if e == 0 || modulus[e] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::ReducibleModulus(e));
        }
        if e == 1 {
            return Field::prime(p);
        }
        let q = (p as u64).checked_pow(e as u32).unwrap_or(u64::MAX);
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus(e));
        }
        let q = q as u32;
        let tables = build_tables(p, e, q, modulus);
        Ok(Field(Arc::new(FieldInner {
            p,
            e: e as u32,
            q,
            modulus: Some(modulus.to_vec()),
            tables: Some(tables),
        })))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.0.modulus.as_deref()
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> Fe {
        let p = self.0.p as i64;
        Fe(n.rem_euclid(p) as u32)
    }

    /// Element with the given coordinates in the basis `1, T, ..., T^{e-1}`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Fe {
        let p = self.0.p;
        let mut v = 0u32;
        for &c in coeffs.iter().take(self.0.e as usize).rev() {
            v = v * p + c % p;
        }
        Fe(v)
    }

    pub fn coeffs(&self, x: Fe) -> Vec<u32> {
        let p = self.0.p;
        let mut v = x.0;
        (0..self.0.e)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    /// The class of `T` (a generator of the extension over `F_p`).
    pub fn gen_t(&self) -> Fe {
        if self.0.e == 1 {
            Fe::ONE
        } else {
            Fe(self.0.p)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(Fe)
    }

    pub fn is_zero(&self, x: Fe) -> bool {
        x.0 == 0
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.0.p;
        if self.0.e == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= p { s - p } else { s });
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            let d = (x % p + y % p) % p;
            out += d * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Fe(out)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.0.p;
        if self.0.e == 1 {
            return Fe(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 {
            let d = x % p;
            out += ((p - d) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Fe(out)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        match &self.0.tables {
            None => Fe((a.0 as u64 * b.0 as u64 % self.0.p as u64) as u32),
            Some(t) => {
                let n = self.0.q - 1;
                let l = (t.log[a.0 as usize] + t.log[b.0 as usize]) % n;
                Fe(t.exp[l as usize])
            }
        }
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.tables {
            None => Fe(pow_mod(a.0 as u64, (self.0.p - 2) as u64, self.0.p as u64) as u32),
            Some(t) => {
                let n = self.0.q - 1;
                let l = (n - t.log[a.0 as usize]) % n;
                Fe(t.exp[l as usize])
            }
        })
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^k` for a non-negative exponent, with `0^0 = 1`.
    pub fn pow(&self, a: Fe, k: u64) -> Fe {
        if k == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        match &self.0.tables {
            None => Fe(pow_mod(a.0 as u64, k, self.0.p as u64) as u32),
            Some(t) => {
                let n = (self.0.q - 1) as u64;
                let l = (t.log[a.0 as usize] as u64 * (k % n)) % n;
                Fe(t.exp[l as usize])
            }
        }
    }

    /// The `k`-fold iterated Frobenius `x -> x^{p^k}`.
    pub fn frobenius(&self, x: Fe, k: u32) -> Fe {
        let k = k % self.0.e;
        if k == 0 {
            return x;
        }
        self.pow(x, (self.0.p as u64).pow(k))
    }

    /// Human readable form: an integer for prime fields, a polynomial in `T` otherwise.
    pub fn format(&self, x: Fe) -> String {
        if self.0.e == 1 {
            return x.0.to_string();
        }
        let c = self.coeffs(x);
        let mut parts = Vec::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{i}"),
            };
            parts.push(match (ci, i) {
                (_, 0) => ci.to_string(),
                (1, _) => mono,
                _ => format!("{ci}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

fn build_tables(p: u32, e: usize, q: u32, modulus: &[u32]) -> Tables {
    // Slow multiplication via polynomial reduction, used to find a primitive
    // element and fill the tables once.
    let slow_mul = |a: u32, b: u32| -> u32 {
        let da = digits(a, p, e);
        let db = digits(b, p, e);
        let mut prod = vec![0u32; 2 * e];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        let r = poly_rem(&prod, modulus, p);
        let mut v = 0u32;
        for &c in r.iter().rev() {
            v = v * p + c;
        }
        v
    };
    let n = q - 1;
    for g in 2..q {
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        let mut ok = true;
        for k in 0..n {
            if k > 0 && x == 1 {
                ok = false;
                break;
            }
            exp[k as usize] = x;
            log[x as usize] = k;
            x = slow_mul(x, g);
        }
        if ok && x == 1 {
            return Tables { exp, log };
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

fn digits(mut v: u32, p: u32, e: usize) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

/// A monic additive polynomial `g(X) = X^{p^h} + sum_{i<h} a_i X^{p^i}`.
///
/// Applied to an element of a Frobenius module, `X^{p^i}` acts as the
/// `i`-th Frobenius iterate and each `a_i` as scalar multiplication, so
/// `a_0 X` is allowed and `X^p - X` is expressible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PPolynomial {
    height: usize,
    lower: Vec<Fe>,
}

impl PPolynomial {
    pub fn new(height: usize, lower: Vec<Fe>) -> Result<Self> {
        if height == 0 {
            return Err(Error::InvalidInput("additive polynomial height must be >= 1".into()));
        }
        if lower.len() != height {
            return Err(Error::DimensionMismatch {
                expected: height,
                got: lower.len(),
            });
        }
        Ok(PPolynomial { height, lower })
    }

    /// `X^{p^h}`.
    pub fn pure(height: usize) -> Self {
        assert!(height >= 1);
        PPolynomial {
            height,
            lower: vec![Fe::ZERO; height],
        }
    }

    /// `X^p - c X`.
    pub fn artin_schreier(field: &Field, c: Fe) -> Self {
        PPolynomial {
            height: 1,
            lower: vec![field.neg(c)],
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn lower_coeffs(&self) -> &[Fe] {
        &self.lower
    }

    /// Coefficient of `X^{p^i}` for `0 <= i <= h`.
    pub fn coeff(&self, i: usize) -> Fe {
        if i == self.height {
            Fe::ONE
        } else {
            self.lower.get(i).copied().unwrap_or(Fe::ZERO)
        }
    }

    /// Degree as an ordinary polynomial, `p^h`.
    pub fn degree(&self, p: u32) -> u64 {
        (p as u64).pow(self.height as u32)
    }

    /// Combines precomputed Frobenius iterates `v, F(v), ..., F^h(v)`.
    pub fn combine<V>(
        &self,
        iterates: &[V],
        mut scale: impl FnMut(Fe, &V) -> V,
        mut add: impl FnMut(V, V) -> V,
    ) -> V
    where
        V: Clone,
    {
        assert!(iterates.len() > self.height);
        let mut acc = iterates[self.height].clone();
        for (i, &a) in self.lower.iter().enumerate() {
            if !a.is_zero() {
                acc = add(acc, scale(a, &iterates[i]));
            }
        }
        acc
    }

    /// `g(x)` for a scalar `x` of the coefficient field.
    pub fn eval_scalar(&self, field: &Field, x: Fe) -> Fe {
        let iterates: Vec<Fe> = (0..=self.height)
            .map(|i| field.frobenius(x, i as u32))
            .collect();
        self.combine(&iterates, |a, v| field.mul(a, *v), |u, v| field.add(u, v))
    }

    /// All roots of `g` lying in the coefficient field, by exhaustion.
    pub fn roots_in(&self, field: &Field) -> Vec<Fe> {
        field
            .elements()
            .filter(|&x| self.eval_scalar(field, x).is_zero())
            .collect()
    }

    pub fn format(&self, field: &Field) -> String {
        let p = field.p() as u64;
        let mut out = format!("X^{}", p.pow(self.height as u32));
        let minus_one = field.neg(Fe::ONE);
        for i in (0..self.height).rev() {
            let a = self.lower[i];
            if a.is_zero() {
                continue;
            }
            let mono = if i == 0 {
                "X".to_string()
            } else {
                format!("X^{}", p.pow(i as u32))
            };
            if a == Fe::ONE {
                out.push_str(&format!(" + {mono}"));
            } else if a == minus_one {
                out.push_str(&format!(" - {mono}"));
            } else {
                out.push_str(&format!(" + ({})*{}", field.format(a), mono));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::extension(2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn prime_field_examples() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.add(Fe(2), Fe(4)), Fe(1));
        assert_eq!(f.inv(Fe(3)).unwrap(), Fe(2));
        assert_eq!(f.mul(Fe(3), Fe(2)), Fe(1));
        assert_eq!(f.inv(Fe(0)), Err(Error::DivisionByZero));
        assert_eq!(f.frobenius(Fe(3), 1), Fe(3));
    }

    #[test]
    fn f4_examples() {
        let f = f4();
        let t = f.gen_t();
        let t1 = f.add(t, Fe::ONE);
        assert_eq!(f.mul(t, t1), Fe::ONE);
        assert_eq!(f.frobenius(t, 1), t1);
        assert_eq!(f.frobenius(t, 2), t);
        assert_eq!(f.format(t1), "T+1");
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(Field::prime(6).unwrap_err(), Error::NotPrime(6));
        // T^2 + 1 = (T+1)^2 over F_2
        assert_eq!(
            Field::extension(2, &[1, 0, 1]).unwrap_err(),
            Error::ReducibleModulus(2)
        );
        assert!(matches!(
            Field::extension(2, &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
            Err(Error::FieldTooLarge(_))
        ));
        // T^4 + T + 1 is irreducible over F_2
        assert_eq!(Field::extension(2, &[1, 1, 0, 0, 1]).unwrap().order(), 16);
        // T^4 + T^2 + 1 = (T^2+T+1)^2 has no roots but is reducible
        assert!(Field::extension(2, &[1, 0, 1, 0, 1]).is_err());
    }

    #[test]
    fn ppoly_examples() {
        let f3 = Field::prime(3).unwrap();
        let as3 = PPolynomial::artin_schreier(&f3, Fe::ONE);
        assert_eq!(as3.eval_scalar(&f3, Fe(1)), Fe(0));
        assert_eq!(as3.roots_in(&f3).len(), 3);
        assert_eq!(PPolynomial::pure(1).eval_scalar(&f3, Fe(2)), Fe(2));

        // g = X^4 + T X^2 over F_4 at x = T: T^4 = T, T*T^2 = T(T+1) = 1.
        let f = f4();
        let t = f.gen_t();
        let g = PPolynomial::new(2, vec![Fe::ZERO, t]).unwrap();
        assert_eq!(g.eval_scalar(&f, t), f.add(t, Fe::ONE));
        assert_eq!(g.format(&f), "X^4 + (T)*X^2");
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for f in [Field::prime(7).unwrap(), f4(), Field::extension(3, &[1, 0, 1]).unwrap()] {
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add(a, b), 1), f.add(f.frobenius(a, 1), f.frobenius(b, 1)));
                    assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                }
                assert_eq!(f.frobenius(a, f.degree()), a);
                assert_eq!(f.pow(a, f.order() as u64), a);
            }
        }
    }
}
