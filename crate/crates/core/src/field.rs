//! Coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A coefficient field with exact arithmetic.
///
/// Elements are plain values; all operations go through the field so that
/// runtime parameters (the prime `p`) live in one place.
pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic(&self) -> u64;
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// `num / den`, or `None` when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// True when the canonical text of `a` starts with a minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    /// Canonical text; parses back to the same element.
    fn format(&self, a: &Self::Elem) -> String;

    /// Every element, for finite fields small enough to enumerate.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }
}

/// The field of rational numbers, with arbitrary precision.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }

    fn name(&self) -> String {
        "QQ".to_string()
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }

    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

const INVERSE_TABLE_LIMIT: u32 = 1 << 16;

/// The prime field `F_p` for a prime `p < 2^31`.
///
/// Elements are stored as `u32` in `0..p`. Small primes carry a table of
/// inverses.
#[derive(Clone)]
pub struct PrimeField {
    p: u32,
    inverses: Option<Arc<[u32]>>,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::Config(format!(
                "characteristic {p} is not a prime below 2^31"
            )));
        }
        let p = p as u32;
        let inverses = (p <= INVERSE_TABLE_LIMIT).then(|| {
            let mut table = vec![0u32; p as usize];
            if p > 1 {
                table[1] = 1;
            }
            // inv(i) = -(p / i) * inv(p mod i)
            for i in 2..p as u64 {
                let q = p as u64 / i;
                let r = p as u64 % i;
                table[i as usize] = ((p as u64 - q) * table[r as usize] as u64 % p as u64) as u32;
            }
            Arc::from(table)
        });
        Ok(PrimeField { p, inverses })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl PartialEq for PrimeField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl Eq for PrimeField {}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u64 {
        self.p as u64
    }

    fn name(&self) -> String {
        format!("F_{}", self.p)
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u32 {
        self.reduce_i64(n)
    }

    fn from_bigint(&self, n: &BigInt) -> u32 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u32().expect("residue fits in u32")
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<u32> {
        let d = self.from_bigint(den);
        self.inv(&d).map(|di| self.mul(&self.from_bigint(num), &di))
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (if s >= self.p as u64 { s - self.p as u64 } else { s }) as u32
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        match &self.inverses {
            Some(table) => Some(table[*a as usize]),
            None => Some(self.pow(a, self.p as u64 - 2)),
        }
    }

    fn is_negative(&self, _a: &u32) -> bool {
        false
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }

    fn elements(&self) -> Option<Vec<u32>> {
        (self.p <= 1024).then(|| (0..self.p).collect())
    }
}

fn is_prime(n: u64) -> bool {
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
