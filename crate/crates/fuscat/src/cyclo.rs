//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Every number in the library is a [`Cyc`]: a rational linear combination of
//! roots of unity, stored in canonical form (minimal conductor, coefficients
//! reduced against the N-th cyclotomic polynomial). Equality is structural,
//! so no floating-point tolerance ever enters the core logic. Floating-point
//! evaluation exists only for display ordering and numeric cross-checks.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

pub type Rat = BigRational;

/// Guard against runaway allocations from hostile input; every computation
/// in scope lives far below this.
pub const MAX_CONDUCTOR: u64 = 1 << 20;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn prime_factors(n: u64) -> Vec<u64> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Monic coefficients of the N-th cyclotomic polynomial, low degree first.
fn cyclotomic_poly(n: u64) -> std::sync::Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, std::sync::Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x), division exact in Z[x].
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    let mut divs: Vec<u64> = (1..n).filter(|d| n % d == 0).collect();
    divs.sort_unstable();
    for d in divs {
        let phi_d = cyclotomic_poly(d);
        num = poly_div_exact(&num, &phi_d);
    }
    let arc = std::sync::Arc::new(num);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// Exact division of integer polynomials, divisor monic.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * dj;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Reduce a coefficient vector in place against Phi_N, truncating to phi(N) entries.
fn reduce_mod_phi(coeffs: &mut Vec<Rat>, n: u64) {
    let deg = euler_phi(n) as usize;
    if coeffs.len() <= deg {
        coeffs.resize(deg, Rat::zero());
        return;
    }
    let phi = cyclotomic_poly(n);
    for i in (deg..coeffs.len()).rev() {
        if coeffs[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut coeffs[i], Rat::zero());
        // x^i = x^(i-deg) * x^deg with x^deg = -sum_{j<deg} phi_j x^j.
        for j in 0..deg {
            if !phi[j].is_zero() {
                let t = &c * Rat::from_integer(phi[j].clone());
                coeffs[i - deg + j] -= t;
            }
        }
    }
    coeffs.truncate(deg);
}

/// An exact element of a cyclotomic field, always in canonical form:
/// minimal conductor (1 or not congruent to 2 mod 4) and coefficients over
/// the power basis zeta_N^0 .. zeta_N^(phi(N)-1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyc {
    conductor: u64,
    coeffs: Vec<Rat>,
}

impl Cyc {
    pub fn zero() -> Cyc {
        Cyc { conductor: 1, coeffs: vec![Rat::zero()] }
    }

    pub fn one() -> Cyc {
        Cyc { conductor: 1, coeffs: vec![Rat::one()] }
    }

    pub fn from_rat(r: Rat) -> Cyc {
        Cyc { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_int(k: i64) -> Cyc {
        Cyc::from_rat(Rat::from_integer(BigInt::from(k)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Cyc {
        Cyc::from_rat(rat(num, den))
    }

    /// zeta_N^k in canonical form. Rejects N = 0.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Cyc, Error> {
        if n == 0 || n > MAX_CONDUCTOR {
            return Err(Error::BadConductor);
        }
        let k = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Rat::zero(); n as usize];
        coeffs[k] = Rat::one();
        Ok(Cyc::from_raw(n, coeffs))
    }

    pub fn i() -> Cyc {
        zeta(4, 1)
    }

    /// sqrt(2) = zeta_8 + zeta_8^(-1), the one definition routed everywhere.
    pub fn sqrt2() -> Cyc {
        &zeta(8, 1) + &zeta(8, 7)
    }

    /// Positive real square root of a positive integer, as an exact Cyc.
    /// Built from quadratic Gauss sums prime by prime.
    pub fn sqrt_of_int(n: u64) -> Result<Cyc, Error> {
        if n == 0 {
            return Ok(Cyc::zero());
        }
        let mut out = Cyc::one();
        let mut m = n;
        let mut p = 2u64;
        while p * p <= m {
            while m % (p * p) == 0 {
                out = &out * &Cyc::from_int(p as i64);
                m /= p * p;
            }
            if m % p == 0 {
                out = &out * &sqrt_of_prime(p);
                m /= p;
            }
            p += 1;
        }
        if m > 1 {
            out = &out * &sqrt_of_prime(m);
        }
        Ok(out)
    }

    /// Construct from an arbitrary coefficient list over zeta_N powers;
    /// input need not be canonical.
    pub fn from_coeffs(n: u64, coeffs: Vec<Rat>) -> Result<Cyc, Error> {
        if n == 0 || n > MAX_CONDUCTOR || coeffs.len() > n as usize {
            return Err(Error::BadConductor);
        }
        Ok(Cyc::from_raw(n, coeffs))
    }

    fn from_raw(n: u64, mut coeffs: Vec<Rat>) -> Cyc {
        reduce_mod_phi(&mut coeffs, n);
        let mut v = Cyc { conductor: n, coeffs };
        v.canonicalize();
        v
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients padded out to conductor length (basis zeta^0..zeta^(N-1)).
    pub fn padded_coeffs(&self) -> Vec<Rat> {
        let mut v = self.coeffs.clone();
        v.resize(self.conductor as usize, Rat::zero());
        v
    }

    fn canonicalize(&mut self) {
        loop {
            if self.coeffs.iter().all(|c| c.is_zero()) {
                self.conductor = 1;
                self.coeffs = vec![Rat::zero()];
                return;
            }
            if self.conductor == 1 {
                return;
            }
            // Conductor 2 mod 4 never minimal: zeta_{2m} = -zeta_m^((m+1)/2) for odd m.
            if self.conductor % 4 == 2 {
                let m = self.conductor / 2;
                let e = (m + 1) / 2;
                let mut next = vec![Rat::zero(); m as usize];
                for (i, c) in self.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let idx = ((i as u64) * e) % m;
                    let sign = if i % 2 == 1 { -c.clone() } else { c.clone() };
                    next[idx as usize] += sign;
                }
                reduce_mod_phi(&mut next, m);
                self.conductor = m;
                self.coeffs = next;
                continue;
            }
            // Index-gcd compression: all nonzero powers divisible by g > 1.
            let mut g = self.conductor;
            for (i, c) in self.coeffs.iter().enumerate() {
                if i > 0 && !c.is_zero() {
                    g = g.gcd(&(i as u64));
                }
            }
            if g > 1 {
                let m = self.conductor / g;
                let mut next = vec![Rat::zero(); 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    debug_assert_eq!((i as u64) % g, 0);
                    let idx = (i as u64 / g) as usize;
                    if idx >= next.len() {
                        next.resize(idx + 1, Rat::zero());
                    }
                    next[idx] += c.clone();
                }
                reduce_mod_phi(&mut next, m);
                self.conductor = m;
                self.coeffs = next;
                continue;
            }
            // Powers of two reduce fully through the gcd path.
            if self.conductor.is_power_of_two() {
                return;
            }
            if !self.try_descend() {
                return;
            }
        }
    }

    /// Attempt to rewrite into Q(zeta_M) for M = conductor/p, any prime p.
    /// Returns true if the conductor dropped.
    fn try_descend(&mut self) -> bool {
        let n = self.conductor;
        for p in prime_factors(n) {
            let mut m = n / p;
            if m % 4 == 2 {
                m /= 2;
            }
            if m == 0 || m == n || n % m != 0 {
                continue;
            }
            let step = n / m;
            let phi_m = euler_phi(m) as usize;
            let phi_n = euler_phi(n) as usize;
            // Columns: zeta_n^(step*j) reduced, j < phi(m).
            let mut cols = Vec::with_capacity(phi_m);
            for j in 0..phi_m {
                let mut col = vec![Rat::zero(); (step as usize) * j + 1];
                *col.last_mut().unwrap() = Rat::one();
                reduce_mod_phi(&mut col, n);
                col.resize(phi_n, Rat::zero());
                cols.push(col);
            }
            if let Some(sol) = solve_columns(&cols, &self.coeffs, phi_n) {
                let mut next = sol;
                reduce_mod_phi(&mut next, m);
                self.conductor = m;
                self.coeffs = next;
                return true;
            }
        }
        false
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn rational_value(&self) -> Option<Rat> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// True for rational integers and, more generally, algebraic integers:
    /// the power basis of Q(zeta_N) is an integral basis, so integrality is
    /// integrality of every coefficient.
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    fn embed(&self, l: u64) -> Vec<Rat> {
        debug_assert!(l % self.conductor == 0);
        let step = (l / self.conductor) as usize;
        let mut out = vec![Rat::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[i * step] = c.clone();
            }
        }
        reduce_mod_phi(&mut out, l);
        out
    }

    pub fn add(&self, rhs: &Cyc) -> Cyc {
        let l = self.conductor.lcm(&rhs.conductor);
        let mut a = self.embed(l);
        let b = rhs.embed(l);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x += y;
        }
        Cyc::from_raw(l, a)
    }

    pub fn sub(&self, rhs: &Cyc) -> Cyc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Cyc {
        Cyc {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Cyc) -> Cyc {
        if self.is_zero() || rhs.is_zero() {
            return Cyc::zero();
        }
        if self.is_rational() {
            let r = &self.coeffs[0];
            return Cyc {
                conductor: rhs.conductor,
                coeffs: rhs.coeffs.iter().map(|c| c * r).collect(),
            };
        }
        if rhs.is_rational() {
            return rhs.mul(self);
        }
        let l = self.conductor.lcm(&rhs.conductor);
        let a = self.embed(l);
        let b = rhs.embed(l);
        let mut prod = vec![Rat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Cyc::from_raw(l, prod)
    }

    /// Exact field division; zero divisor is a reported error.
    pub fn div(&self, rhs: &Cyc) -> Result<Cyc, Error> {
        Ok(self.mul(&rhs.inverse()?))
    }

    pub fn inverse(&self) -> Result<Cyc, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Cyc::from_rat(self.coeffs[0].recip()));
        }
        let n = self.conductor;
        let phi: Vec<Rat> = cyclotomic_poly(n).iter().map(|c| Rat::from_integer(c.clone())).collect();
        let inv = poly_mod_inverse(&self.coeffs, &phi).expect("unit in a field");
        Ok(Cyc::from_raw(n, inv))
    }

    pub fn pow(&self, k: i64) -> Result<Cyc, Error> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Cyc::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Complex conjugation zeta |-> zeta^(-1); a ring involution fixing Q.
    pub fn conj(&self) -> Cyc {
        self.galois(self.conductor - 1)
    }

    /// Galois action zeta |-> zeta^k for gcd(k, N) = 1.
    pub fn galois(&self, k: u64) -> Cyc {
        let n = self.conductor;
        if n == 1 {
            return self.clone();
        }
        assert_eq!(n.gcd(&k), 1, "Galois action needs gcd(k, N) = 1");
        let mut out = vec![Rat::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let idx = ((i as u64) * k % n) as usize;
                out[idx] += c.clone();
            }
        }
        Cyc::from_raw(n, out)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Multiplicative order when this is a root of unity. The roots of unity
    /// in Q(zeta_N) form a cyclic group of order lcm(2, N).
    pub fn root_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let l = if self.conductor % 2 == 0 { self.conductor } else { 2 * self.conductor };
        if self.pow(l as i64).unwrap() != Cyc::one() {
            return None;
        }
        let mut divs: Vec<u64> = (1..=l).filter(|d| l % d == 0).collect();
        divs.sort_unstable();
        divs.into_iter().find(|&d| self.pow(d as i64).unwrap() == Cyc::one())
    }

    /// For a root of unity of order d, the exponent k < d with self = zeta_d^k.
    pub fn as_root_power(&self) -> Option<(u64, u64)> {
        let d = self.root_order()?;
        let z = zeta(d, 1);
        let mut p = Cyc::one();
        for k in 0..d {
            if p == *self {
                return Some((d, k));
            }
            p = p.mul(&z);
        }
        None
    }

    pub fn classify(&self) -> ValueClass {
        ValueClass {
            is_real: self.is_real(),
            is_rational: self.is_rational(),
            rational_value: self.rational_value(),
            root_order: self.root_order(),
        }
    }

    /// Floating evaluation under zeta_N -> exp(2 pi i / N). Display and
    /// sort keys only; equality in core logic is always structural.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * (i as f64) / n;
            re += x * ang.cos();
            im += x * ang.sin();
        }
        (re, im)
    }

    /// Structural key for deterministic ordering of exact values.
    pub fn lex_key(&self) -> (u64, Vec<Rat>) {
        (self.conductor, self.coeffs.clone())
    }
}

/// Shorthand for internal construction with known-good parameters.
pub fn zeta(n: u64, k: i64) -> Cyc {
    Cyc::root_of_unity(n, k).expect("positive conductor")
}

/// A random exact value for property sampling: a short combination of root
/// monomials over a small conductor pool.
pub fn random_cyc<R: rand::Rng + ?Sized>(rng: &mut R) -> Cyc {
    const POOL: [u64; 8] = [1, 3, 4, 5, 8, 12, 16, 24];
    let n = POOL[rng.random_range(0..POOL.len())];
    let terms = rng.random_range(1..=3);
    let mut acc = Cyc::zero();
    for _ in 0..terms {
        let k = rng.random_range(0..n) as i64;
        let num = rng.random_range(-3..=3i64);
        let den = rng.random_range(1..=3i64);
        let coef = Cyc::from_rat(rat(num, den));
        acc = acc.add(&coef.mul(&zeta(n, k)));
    }
    acc
}

fn sqrt_of_prime(p: u64) -> Cyc {
    if p == 2 {
        return Cyc::sqrt2();
    }
    // Quadratic Gauss sum: sum_a legendre(a, p) zeta_p^a equals sqrt(p) for
    // p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4.
    let mut g = Cyc::zero();
    for a in 1..p {
        let mut leg = 1i64;
        // Euler criterion by repeated squaring mod p.
        let mut base = a % p;
        let mut e = (p - 1) / 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        if acc == p - 1 {
            leg = -1;
        }
        let term = zeta(p, a as i64);
        g = if leg == 1 { g.add(&term) } else { g.sub(&term) };
    }
    if p % 4 == 1 {
        g
    } else {
        g.div(&Cyc::i()).unwrap()
    }
}

/// Solve sum_j c_j col_j = target over the rationals, if possible.
fn solve_columns(cols: &[Vec<Rat>], target: &[Rat], rows: usize) -> Option<Vec<Rat>> {
    let ncols = cols.len();
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c.get(r).cloned().unwrap_or_else(Rat::zero)).collect();
            row.push(target.get(r).cloned().unwrap_or_else(Rat::zero));
            row
        })
        .collect();
    let mut pivot_of_col = vec![usize::MAX; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for v in m[rank].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=ncols {
                    let t = &m[rank][c] * &f;
                    m[r][c] -= t;
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
    }
    // Consistency: no pivot in the augmented column.
    for r in rank..rows {
        if !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Rat::zero(); ncols];
    for col in 0..ncols {
        if pivot_of_col[col] != usize::MAX {
            sol[col] = m[pivot_of_col[col]][ncols].clone();
        }
    }
    // Free columns default to zero; verify.
    for r in 0..rows {
        let mut acc = Rat::zero();
        for (c, s) in sol.iter().enumerate() {
            if !s.is_zero() {
                acc += &cols[c].get(r).cloned().unwrap_or_else(Rat::zero) * s;
            }
        }
        if acc != target.get(r).cloned().unwrap_or_else(Rat::zero) {
            return None;
        }
    }
    Some(sol)
}

/// Inverse of f modulo the monic polynomial m over Q, via extended Euclid.
fn poly_mod_inverse(f: &[Rat], m: &[Rat]) -> Option<Vec<Rat>> {
    fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
        while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }
    // r0 = m, r1 = f; maintain s with s*f = r1 mod m.
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(f.to_vec());
    let mut s0 = vec![Rat::zero()];
    let mut s1 = vec![Rat::one()];
    loop {
        if r1.len() == 1 {
            if r1[0].is_zero() {
                return None;
            }
            break;
        }
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = trim(r);
        s0 = s1;
        s1 = trim(s);
    }
    let c = r1[0].recip();
    Some(s1.into_iter().map(|x| &x * &c).collect())
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = den.iter().rposition(|c| !c.is_zero()).unwrap();
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    let nd = rem.len() - 1;
    if nd < dd {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] / &lead;
        quot[i - dd] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[i - dd + j] -= t;
        }
    }
    (quot, rem)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = a.to_vec();
    out.resize(a.len().max(b.len()), Rat::zero());
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValueClass {
    pub is_real: bool,
    pub is_rational: bool,
    #[serde(skip)]
    pub rational_value: Option<Rat>,
    pub root_order: Option<u64>,
}

impl std::ops::Add for &Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        Cyc::add(self, rhs)
    }
}

impl std::ops::Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        Cyc::sub(self, rhs)
    }
}

impl std::ops::Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        Cyc::mul(self, rhs)
    }
}

impl std::ops::Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc::neg(self)
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Cyc {
    /// Symbolic rendering: `0`, `-3/2`, `i`, `z16^5`, `sqrt2/2`, `1+i`,
    /// falling back to a sum of `c*zN^k` monomials. See the README grammar.
    pub fn symbolic(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        if let Some(r) = self.rational_value() {
            return fmt_rat(&r);
        }
        // Exact roots of unity print as zN^k (i and -1 specialized).
        if let Some((d, k)) = self.as_root_power() {
            if d == 4 {
                return if k == 1 { "i".into() } else { "-i".into() };
            }
            return if k == 1 { format!("z{d}") } else { format!("z{d}^{k}") };
        }
        // a + b*sqrt2 (conductor 8, pattern [a, b, 0, -b]).
        if self.conductor == 8 && self.coeffs[2].is_zero() && self.coeffs[1] == -self.coeffs[3].clone() {
            let a = &self.coeffs[0];
            let b = &self.coeffs[1];
            let sq = fmt_coef_unit(b, "sqrt2");
            if a.is_zero() {
                return sq;
            }
            return join_signed(fmt_rat(a), sq);
        }
        // a + b*i (conductor 4).
        if self.conductor == 4 {
            let a = &self.coeffs[0];
            let b = &self.coeffs[1];
            let im = fmt_coef_unit(b, "i");
            if a.is_zero() {
                return im;
            }
            return join_signed(fmt_rat(a), im);
        }
        // General monomial sum.
        let n = self.conductor;
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let unit = if i == 0 {
                None
            } else if i == 1 {
                Some(format!("z{n}"))
            } else {
                Some(format!("z{n}^{i}"))
            };
            let term = match unit {
                None => fmt_rat(c),
                Some(u) => fmt_coef_unit(c, &u),
            };
            if out.is_empty() {
                out = term;
            } else {
                out = join_signed(out, term);
            }
        }
        out
    }
}

fn fmt_coef_unit(c: &Rat, unit: &str) -> String {
    if c.is_one() {
        return unit.to_string();
    }
    if (-c.clone()).is_one() {
        return format!("-{unit}");
    }
    if c.denom().is_one() {
        return format!("{}{}", c.numer(), unit);
    }
    if c.numer().is_one() {
        return format!("{}/{}", unit, c.denom());
    }
    if (-c.numer().clone()).is_one() {
        return format!("-{}/{}", unit, c.denom());
    }
    format!("{}{}/{}", c.numer(), unit, c.denom())
}

fn join_signed(head: String, term: String) -> String {
    if let Some(rest) = term.strip_prefix('-') {
        format!("{head} - {rest}")
    } else {
        format!("{head} + {term}")
    }
}

impl Cyc {
    /// Parse the symbolic grammar produced by [`Cyc::symbolic`].
    pub fn parse(s: &str) -> Result<Cyc, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty value".into()));
        }
        let mut total = Cyc::zero();
        let mut term = String::new();
        let mut terms: Vec<String> = Vec::new();
        let mut prev_nonspace: Option<char> = None;
        for ch in s.chars() {
            match ch {
                '+' | '-' if !term.trim().is_empty() && prev_nonspace != Some('^') && prev_nonspace != Some('*') && prev_nonspace != Some('/') => {
                    terms.push(term.clone());
                    term.clear();
                    // Keep the sign with the next term; a dangling separator
                    // then fails in parse_term.
                    term.push(ch);
                }
                _ => term.push(ch),
            }
            if !ch.is_whitespace() {
                prev_nonspace = Some(ch);
            }
        }
        if !term.trim().is_empty() {
            terms.push(term);
        }
        for t in terms {
            total = total.add(&parse_term(t.trim())?);
        }
        Ok(total)
    }
}

fn parse_term(t: &str) -> Result<Cyc, Error> {
    let mut s = t.trim();
    let mut acc = Cyc::one();
    if let Some(rest) = s.strip_prefix('-') {
        acc = acc.neg();
        s = rest.trim_start();
    } else if let Some(rest) = s.strip_prefix('+') {
        s = rest.trim_start();
    }
    if s.is_empty() {
        return Err(Error::Parse(format!("bad term `{t}`")));
    }
    // Tokens separated by optional `*`; a trailing `/n` divides.
    let mut rest = s;
    let mut seen = false;
    while !rest.is_empty() {
        rest = rest.trim_start().trim_start_matches('*').trim_start();
        if rest.is_empty() {
            break;
        }
        let (tok, len) = next_token(rest)?;
        let val = match tok {
            Tok::Num(r) => Cyc::from_rat(r),
            Tok::Ident(name) => parse_unit(&name)?,
            Tok::Div(d) => {
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Cyc::from_rat(d.recip())
            }
        };
        acc = acc.mul(&val);
        seen = true;
        rest = &rest[len..];
    }
    if !seen {
        return Err(Error::Parse(format!("bad term `{t}`")));
    }
    Ok(acc)
}

enum Tok {
    Num(Rat),
    Ident(String),
    Div(Rat),
}

fn next_token(s: &str) -> Result<(Tok, usize), Error> {
    let bytes = s.as_bytes();
    if bytes[0] == b'/' {
        let rest = &s[1..];
        let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if end == 0 {
            return Err(Error::Parse(format!("bad token in `{s}`")));
        }
        let n: i64 = rest[..end].parse().map_err(|_| Error::Parse(format!("bad number in `{s}`")))?;
        return Ok((Tok::Div(rat(n, 1)), 1 + end));
    }
    if bytes[0].is_ascii_digit() {
        let end = s.find(|c: char| !c.is_ascii_digit()).unwrap_or(s.len());
        let num: i64 = s[..end].parse().map_err(|_| Error::Parse(format!("bad number in `{s}`")))?;
        // A following /digits is a rational only if what comes after is not a unit char.
        if s[end..].starts_with('/') {
            let rest = &s[end + 1..];
            let dend = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            if dend > 0 {
                let den: i64 = rest[..dend].parse().map_err(|_| Error::Parse(format!("bad number in `{s}`")))?;
                if den == 0 {
                    return Err(Error::DivisionByZero);
                }
                return Ok((Tok::Num(rat(num, den)), end + 1 + dend));
            }
        }
        return Ok((Tok::Num(rat(num, 1)), end));
    }
    if bytes[0].is_ascii_alphabetic() {
        let end = s
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '^'))
            .unwrap_or(s.len());
        return Ok((Tok::Ident(s[..end].to_string()), end));
    }
    Err(Error::Parse(format!("bad token in `{s}`")))
}

fn parse_unit(name: &str) -> Result<Cyc, Error> {
    match name {
        "i" => Ok(Cyc::i()),
        "sqrt2" => Ok(Cyc::sqrt2()),
        _ => {
            let rest = name.strip_prefix('z').ok_or_else(|| Error::Parse(format!("unknown unit `{name}`")))?;
            let (n_str, k_str) = match rest.split_once('^') {
                Some((a, b)) => (a, b),
                None => (rest, "1"),
            };
            let n: u64 = n_str.parse().map_err(|_| Error::Parse(format!("bad root `{name}`")))?;
            let k: i64 = k_str.parse().map_err(|_| Error::Parse(format!("bad root `{name}`")))?;
            Cyc::root_of_unity(n, k)
        }
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbolic())
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({})", self.symbolic())
    }
}

// JSON form: {"conductor": N, "coeffs": [[num, den], ...]} indexed by
// zeta_N^0..zeta_N^(N-1). Non-canonical input is accepted; output is canonical.
impl Serialize for Cyc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs: Vec<(i64, i64)> = self
            .padded_coeffs()
            .iter()
            .map(|c| {
                let n = c.numer().to_i64().ok_or(());
                let d = c.denom().to_i64().ok_or(());
                match (n, d) {
                    (Ok(n), Ok(d)) => Ok((n, d)),
                    _ => Err(()),
                }
            })
            .collect::<Result<_, _>>()
            .map_err(|_| serde::ser::Error::custom("coefficient exceeds i64 range"))?;
        let mut st = serializer.serialize_struct("Cyc", 2)?;
        st.serialize_field("conductor", &self.conductor)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Cyc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            conductor: u64,
            coeffs: Vec<(i64, i64)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        if raw.coeffs.len() > raw.conductor as usize {
            return Err(D::Error::custom("more coefficients than conductor"));
        }
        let coeffs: Vec<Rat> = raw
            .coeffs
            .iter()
            .map(|&(n, d)| {
                if d == 0 {
                    Err(D::Error::custom("zero denominator"))
                } else {
                    Ok(rat(n, d))
                }
            })
            .collect::<Result<_, _>>()?;
        Cyc::from_coeffs(raw.conductor, coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_basics() {
        assert_eq!(zeta(1, 0), Cyc::one());
        assert_eq!(zeta(16, 8), Cyc::from_int(-1));
        assert_eq!(zeta(16, 16), Cyc::one());
        assert_eq!(Cyc::root_of_unity(16, -1).unwrap(), zeta(16, 15));
        assert!(Cyc::root_of_unity(0, 1).is_err());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let r = &zeta(8, 1) + &zeta(8, 7);
        assert_eq!(r.mul(&r), Cyc::from_int(2));
        assert_eq!(Cyc::sqrt2(), r);
    }

    #[test]
    fn arithmetic_identities() {
        let z = zeta(16, 1);
        assert!(z.add(&z.neg()).is_zero());
        assert_eq!(z.mul(&zeta(16, 15)), Cyc::one());
        let half = Cyc::from_ratio(2, 3);
        assert_eq!(half.conj(), half);
        assert!(Cyc::one().div(&Cyc::zero()).is_err());
    }

    #[test]
    fn conjugation_flips_powers() {
        assert_eq!(zeta(16, 1).conj(), zeta(16, 15));
        let v = Cyc::one().add(&zeta(8, 1));
        assert_eq!(v.conj(), Cyc::one().add(&zeta(8, 7)));
        assert_eq!(v.conj().conj(), v);
    }

    #[test]
    fn conductor_is_minimized() {
        // zeta_16^4 = i lives in Q(zeta_4).
        assert_eq!(zeta(16, 4).conductor(), 4);
        assert_eq!(zeta(16, 4), Cyc::i());
        // zeta_12^4 = zeta_3 requires the descent through Phi_12 spreading.
        assert_eq!(zeta(12, 4), zeta(3, 1));
        assert_eq!(zeta(12, 4).conductor(), 3);
        // zeta_6 = -zeta_3^2.
        assert_eq!(zeta(6, 1), zeta(3, 2).neg());
        // zeta_15^5 = zeta_3; odd composite descent.
        assert_eq!(zeta(15, 5), zeta(3, 1));
        // sqrt2 genuinely needs conductor 8.
        assert_eq!(Cyc::sqrt2().conductor(), 8);
    }

    #[test]
    fn classify_values() {
        assert_eq!(zeta(16, 5).root_order(), Some(16));
        let minus_one = Cyc::from_int(-1);
        assert_eq!(minus_one.root_order(), Some(2));
        assert_eq!(minus_one.rational_value(), Some(rat(-1, 1)));
        let r = Cyc::sqrt2();
        let c = r.classify();
        assert!(c.is_real && !c.is_rational && c.root_order.is_none());
    }

    #[test]
    fn approx_matches() {
        let (re, im) = Cyc::one().approx();
        assert!((re - 1.0).abs() < 1e-12 && im.abs() < 1e-12);
        let (re, im) = zeta(4, 1).approx();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let (re, im) = Cyc::sqrt2().approx();
        assert!((re - 1.41421356).abs() < 1e-7 && im.abs() < 1e-12);
    }

    #[test]
    fn inverses_and_pow() {
        let v = Cyc::one().add(&zeta(8, 1));
        let inv = v.inverse().unwrap();
        assert_eq!(v.mul(&inv), Cyc::one());
        assert_eq!(zeta(16, 3).pow(-3).unwrap(), zeta(16, 7));
    }

    #[test]
    fn sqrt_of_small_ints() {
        for n in [1u64, 2, 3, 4, 5, 8, 9, 12, 32] {
            let s = Cyc::sqrt_of_int(n).unwrap();
            assert_eq!(s.mul(&s), Cyc::from_int(n as i64), "sqrt({n})^2");
            assert!(s.approx().0 > 0.0);
            assert!(s.approx().1.abs() < 1e-9);
        }
    }

    #[test]
    fn symbolic_round_trips() {
        let vals = [
            Cyc::zero(),
            Cyc::from_ratio(-3, 2),
            Cyc::i(),
            Cyc::i().neg(),
            zeta(16, 5),
            zeta(16, 9),
            Cyc::sqrt2().div(&Cyc::from_int(2)).unwrap(),
            Cyc::sqrt2().neg(),
            Cyc::one().add(&Cyc::i()),
            Cyc::one().add(&Cyc::sqrt2()),
            zeta(8, 1).add(&zeta(8, 3)),
            Cyc::from_int(4).add(&Cyc::i().mul(&Cyc::from_int(4))),
        ];
        for v in vals {
            let s = v.symbolic();
            let back = Cyc::parse(&s).unwrap_or_else(|e| panic!("parse `{s}`: {e}"));
            assert_eq!(back, v, "round trip of `{s}`");
        }
        assert_eq!(Cyc::parse("sqrt2/2").unwrap(), Cyc::sqrt2().div(&Cyc::from_int(2)).unwrap());
        assert_eq!(Cyc::parse("-z16^3").unwrap(), zeta(16, 3).neg());
        assert_eq!(Cyc::parse("z16^11").unwrap().symbolic(), "z16^11");
    }

    #[test]
    fn json_round_trip_and_canonicalization() {
        let v = zeta(16, 5).add(&Cyc::from_ratio(1, 2));
        let js = serde_json::to_string(&v).unwrap();
        let back: Cyc = serde_json::from_str(&js).unwrap();
        assert_eq!(back, v);
        // Non-canonical input: zeta_4^2 = -1 given with conductor 4.
        let raw = r#"{"conductor": 4, "coeffs": [[0,1],[0,1],[1,1]]}"#;
        let parsed: Cyc = serde_json::from_str(raw).unwrap();
        assert_eq!(parsed, Cyc::from_int(-1));
        assert_eq!(parsed.conductor(), 1);
    }

    #[test]
    fn canonical_idempotence() {
        let v = zeta(48, 7).add(&zeta(16, 3));
        let rebuilt = Cyc::from_coeffs(v.conductor(), v.padded_coeffs()).unwrap();
        assert_eq!(rebuilt, v);
    }
}
