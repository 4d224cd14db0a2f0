//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, ..., ζ^(d-1)` with
//! `d = φ(N)`, reduced modulo the `N`-th cyclotomic polynomial, so every
//! element has exactly one representation. Binary operations on elements of
//! different fields embed both into `Q(ζ_lcm)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CycError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not real")]
    NotReal,
    #[error("sign of {0} could not be decided in double precision")]
    Undecided(String),
}

/// The field `Q(ζ_n)` with its reduction table.
#[derive(Debug)]
pub struct CycField {
    n: u64,
    degree: usize,
    /// `ζ^e` in the power basis, for `0 <= e < n`.
    powers: Vec<Vec<BigInt>>,
}

fn poly_divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // both monic-ish integer polynomials, low degree first; den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![BigInt::zero(); qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_divide_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

impl CycField {
    fn build(n: u64) -> CycField {
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![BigInt::zero(); degree];
        if degree > 0 {
            cur[0] = BigInt::one();
        }
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic polynomial
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * &phi[i];
                }
            }
        }
        CycField { n, degree, powers }
    }

    /// Shared field instance for `Q(ζ_n)`.
    pub fn get(n: u64) -> Arc<CycField> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycField>>>> = OnceLock::new();
        let n = n.max(1);
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = cache.lock().expect("field cache poisoned");
        map.entry(n).or_insert_with(|| Arc::new(CycField::build(n))).clone()
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

#[derive(Clone)]
pub struct Cyc {
    field: Arc<CycField>,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc[{}]({})", self.field.n, self)
    }
}

impl Cyc {
    pub fn zero(n: u64) -> Cyc {
        let field = CycField::get(n);
        let coeffs = vec![BigRational::zero(); field.degree];
        Cyc { field, coeffs }
    }

    pub fn from_rational(n: u64, q: BigRational) -> Cyc {
        let mut c = Cyc::zero(n);
        c.coeffs[0] = q;
        c
    }

    pub fn from_int(n: u64, i: i64) -> Cyc {
        Cyc::from_rational(n, BigRational::from_integer(i.into()))
    }

    pub fn one(n: u64) -> Cyc {
        Cyc::from_int(n, 1)
    }

    /// `ζ_n^k`, any integer `k`.
    pub fn zeta(n: u64, k: i64) -> Cyc {
        let field = CycField::get(n);
        let e = k.rem_euclid(n as i64) as usize;
        let coeffs = field.powers[e]
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        Cyc { field, coeffs }
    }

    /// `ζ_n^k + ζ_n^-k`, i.e. `2 cos(2πk/n)`.
    pub fn two_cos(n: u64, k: i64) -> Cyc {
        &Cyc::zeta(n, k) + &Cyc::zeta(n, -k)
    }

    pub fn modulus(&self) -> u64 {
        self.field.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.first().is_some_and(One::is_one) && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// The same element viewed in `Q(ζ_n)`; `n` must be a multiple of the
    /// current modulus.
    pub fn embed(&self, n: u64) -> Cyc {
        assert!(
            n.is_multiple_of(self.field.n),
            "cannot embed Q(ζ_{}) into Q(ζ_{n})",
            self.field.n
        );
        if n == self.field.n {
            return self.clone();
        }
        let step = (n / self.field.n) as usize;
        let mut out = Cyc::zero(n);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled_power(j * step, c);
            }
        }
        out
    }

    fn add_scaled_power(&mut self, e: usize, c: &BigRational) {
        let row = &self.field.powers[e % self.field.n as usize];
        for (dst, r) in self.coeffs.iter_mut().zip(row) {
            if !r.is_zero() {
                *dst += c * BigRational::from_integer(r.clone());
            }
        }
    }

    fn common(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        if a.field.n == b.field.n {
            return (a.clone(), b.clone());
        }
        let n = a.field.n.lcm(&b.field.n);
        (a.embed(n), b.embed(n))
    }

    pub fn scale(&self, q: &BigRational) -> Cyc {
        Cyc {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Image under `ζ -> ζ^k` (`k` coprime to the modulus).
    pub fn galois(&self, k: i64) -> Cyc {
        let n = self.field.n;
        let mut out = Cyc::zero(n);
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (j as i64 * k).rem_euclid(n as i64) as usize;
                out.add_scaled_power(e, c);
            }
        }
        out
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Cyc {
        self.galois(-1)
    }

    pub fn inverse(&self) -> Result<Cyc, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let n = self.field.n;
        let nonzero: Vec<usize> = (0..self.coeffs.len()).filter(|&j| !self.coeffs[j].is_zero()).collect();
        if let [j] = nonzero[..] {
            // c ζ^j
            return Ok(Cyc::zeta(n, -(j as i64)).scale(&self.coeffs[j].recip()));
        }
        // product of the other Galois conjugates over the norm
        let mut others = Cyc::one(n);
        for k in 2..n as i64 {
            if (k as u64).gcd(&n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (&others * self)
            .as_rational()
            .expect("norm of a cyclotomic element is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn div(&self, other: &Cyc) -> Result<Cyc, CycError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Cyc, CycError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut result = Cyc::one(self.field.n);
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        Ok(result)
    }

    /// Approximate complex value.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.field.n as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * j as f64 / n;
            re += v * angle.cos();
            im += v * angle.sin();
        }
        (re, im)
    }

    /// Sign of a real element. Zero is decided exactly; otherwise the value
    /// is evaluated in double precision and accepted only outside a
    /// conservative error bound.
    pub fn real_sign(&self) -> Result<Ordering, CycError> {
        if self.is_zero() {
            return Ok(Ordering::Equal);
        }
        if self != &self.conj() {
            return Err(CycError::NotReal);
        }
        let (re, _) = self.to_complex();
        let mass: f64 = self
            .coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .sum();
        let bound = 1e-12 * (mass + 1.0);
        if re > bound {
            Ok(Ordering::Greater)
        } else if re < -bound {
            Ok(Ordering::Less)
        } else {
            Err(CycError::Undecided(self.to_string()))
        }
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Cyc) -> bool {
        let (a, b) = Cyc::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyc {}

impl Add for &Cyc {
    type Output = Cyc;
    fn add(self, other: &Cyc) -> Cyc {
        let (mut a, b) = Cyc::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, other: &Cyc) -> Cyc {
        let (mut a, b) = Cyc::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, other: &Cyc) -> Cyc {
        let (a, b) = Cyc::common(self, other);
        let n = a.field.n as usize;
        // multiply modulo x^n - 1 first, then reduce the high powers
        let mut acc: Vec<BigRational> = vec![BigRational::zero(); n.max(1)];
        let bn: Vec<(usize, &BigRational)> = b.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(j, y) in &bn {
                acc[(i + j) % n.max(1)] += x * y;
            }
        }
        let d = a.field.degree;
        let mut out = Cyc::zero(a.field.n);
        for (e, c) in acc.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e < d {
                out.coeffs[e] += c;
            } else {
                out.add_scaled_power(e, &c);
            }
        }
        out
    }
}

impl fmt::Display for Cyc {
    /// Power-basis terms in increasing exponent, `z` standing for `ζ_N`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z^{j}")?,
                (_, false) => write!(f, "{mag}*z^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// 2x2 matrices over a cyclotomic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub a: [[Cyc; 2]; 2],
}

impl Mat2 {
    pub fn new(a00: Cyc, a01: Cyc, a10: Cyc, a11: Cyc) -> Mat2 {
        Mat2 {
            a: [[a00, a01], [a10, a11]],
        }
    }

    pub fn identity(n: u64) -> Mat2 {
        Mat2::scalar(Cyc::one(n))
    }

    pub fn scalar(c: Cyc) -> Mat2 {
        let z = Cyc::zero(c.modulus());
        Mat2::new(c.clone(), z.clone(), z, c)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &(&self.a[i][0] * &o.a[0][j]) + &(&self.a[i][1] * &o.a[1][j]);
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn det(&self) -> Cyc {
        &(&self.a[0][0] * &self.a[1][1]) - &(&self.a[0][1] * &self.a[1][0])
    }

    pub fn inverse(&self) -> Result<Mat2, CycError> {
        let d = self.det().inverse()?;
        Ok(Mat2::new(
            &self.a[1][1] * &d,
            &(-&self.a[0][1]) * &d,
            &(-&self.a[1][0]) * &d,
            &self.a[0][0] * &d,
        ))
    }

    pub fn pow(&self, e: i64) -> Result<Mat2, CycError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut result = Mat2::identity(self.a[0][0].modulus());
        for _ in 0..e.unsigned_abs() {
            result = result.mul(&base);
        }
        Ok(result)
    }

    pub fn scale(&self, c: &Cyc) -> Mat2 {
        let s = |x: &Cyc| x * c;
        Mat2::new(s(&self.a[0][0]), s(&self.a[0][1]), s(&self.a[1][0]), s(&self.a[1][1]))
    }

    pub fn is_identity(&self) -> bool {
        self.a[0][0].is_one() && self.a[1][1].is_one() && self.a[0][1].is_zero() && self.a[1][0].is_zero()
    }

    /// Scalar value if the matrix is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Cyc> {
        (self.a[0][1].is_zero() && self.a[1][0].is_zero() && self.a[0][0] == self.a[1][1]).then(|| self.a[0][0].clone())
    }

    /// Least `k` in `1..=bound` with `M^k = I`.
    pub fn order(&self, bound: usize) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a[0][0], self.a[0][1], self.a[1][0], self.a[1][1]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let to_i64 = |v: Vec<BigInt>| v.into_iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(to_i64(cyclotomic_polynomial(1)), [-1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(6)), [1, -1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(12)), [1, 0, -1, 0, 1]);
        let p105 = to_i64(cyclotomic_polynomial(105));
        assert_eq!(p105.len() as u64 - 1, euler_phi(105));
        assert!(p105.contains(&-2));
    }

    #[test]
    fn zeta_identities() {
        for n in [1u64, 2, 5, 6, 12, 84] {
            assert!((&Cyc::zeta(n, 1) * &Cyc::zeta(n, n as i64 - 1)).is_one());
            assert!(Cyc::zeta(n, n as i64).is_one());
        }
        assert_eq!(Cyc::zeta(6, 3), Cyc::from_int(6, -1));
        // 2cos(π/3) = 1
        assert!(Cyc::two_cos(6, 1).is_one());
        let (re, _) = Cyc::two_cos(10, 1).to_complex();
        assert!((re - 2.0 * (std::f64::consts::PI / 5.0).cos()).abs() < 1e-12);
    }

    #[test]
    fn embedding_and_inverse() {
        let a = &Cyc::zeta(4, 1) + &Cyc::from_int(4, 2);
        let b = Cyc::two_cos(10, 1);
        let s = &a + &b;
        assert_eq!(s.modulus(), 20);
        assert_eq!(&s - &b, a);
        for x in [a, b, s, Cyc::two_cos(14, 3)] {
            let inv = x.inverse().unwrap();
            assert!((&x * &inv).is_one(), "{x}");
        }
        assert_eq!(Cyc::zero(5).inverse(), Err(CycError::DivisionByZero));
    }

    #[test]
    fn signs() {
        assert_eq!(Cyc::two_cos(14, 1).real_sign(), Ok(Ordering::Greater));
        let golden = Cyc::two_cos(10, 1); // golden ratio
        let x = &(&golden * &golden) - &(&golden + &Cyc::one(10));
        assert_eq!(x.real_sign(), Ok(Ordering::Equal));
        assert_eq!((&golden - &Cyc::from_int(10, 2)).real_sign(), Ok(Ordering::Less));
        assert_eq!(Cyc::zeta(4, 1).real_sign(), Err(CycError::NotReal));
    }

    #[test]
    fn render() {
        let x = &(&Cyc::zeta(5, 2) - &Cyc::from_int(5, 3)).scale(&BigRational::new(1.into(), 2.into())) + &Cyc::zero(5);
        assert_eq!(x.to_string(), "-3/2 + 1/2*z^2");
        assert_eq!(Cyc::zero(7).to_string(), "0");
    }
}
