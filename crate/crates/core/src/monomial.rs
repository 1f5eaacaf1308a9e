//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::Error;

pub type Exponents = SmallVec<[u32; 8]>;

/// An exponent vector, optionally tagged with a free-module component.
///
/// Plain polynomials always use component 0. Module elements reuse the
/// polynomial machinery with `comp` naming the basis vector `e_comp`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    comp: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), comp: 0 }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps), comp: 0 }
    }

    pub fn with_component(mut self, comp: u32) -> Self {
        self.comp = comp;
        self
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn component(&self) -> u32 {
        self.comp
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.comp == 0 && self.exps.iter().all(|&e| e == 0)
    }

    /// Product; the component of a module monomial is preserved.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.comp == 0 || other.comp == 0);
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            comp: self.comp + other.comp,
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|a| a * e).collect(), comp: self.comp }
    }

    /// `self | other`, requiring equal components.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.comp == other.comp && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` as a plain monomial; `None` unless `other | self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            comp: 0,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.comp, other.comp);
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
            comp: self.comp,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Reorders and pads exponents: variable `i` moves to `map[i]`.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[i]] += e;
            }
        }
        Monomial { exps, comp: self.comp }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())?;
        if self.comp > 0 {
            write!(f, "e{}", self.comp)?;
        }
        Ok(())
    }
}

/// A global monomial order.
///
/// `Block(k)` compares the first `k` variables by degree-reverse-lex and
/// breaks ties with degree-reverse-lex on the rest; it eliminates the first
/// `k` variables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    Block(usize),
}

impl MonomialOrder {
    /// Position-over-term comparison: lower components are larger.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        b.comp.cmp(&a.comp).then_with(|| self.cmp_exponents(&a.exps, &b.exps))
    }

    pub fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                degrevlex(&a[..k], &b[..k]).then_with(|| degrevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block(k) => write!(f, "block:{k}"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "degrevlex" | "grevlex" => Ok(MonomialOrder::DegRevLex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => s
                .strip_prefix("block:")
                .and_then(|k| k.parse().ok())
                .map(MonomialOrder::Block)
                .ok_or_else(|| Error::Config(format!("unknown monomial order `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > xz in degrevlex with x > y > z
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_block() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let b = MonomialOrder::Block(1);
        assert_eq!(b.cmp(&m(&[1, 0, 0]), &m(&[0, 4, 4])), Ordering::Greater);
        assert_eq!(b.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn position_over_term() {
        let o = MonomialOrder::DegRevLex;
        let a = m(&[0, 0]).with_component(0);
        let b = m(&[5, 5]).with_component(1);
        assert_eq!(o.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn parse_order() {
        assert_eq!("block:3".parse::<MonomialOrder>().unwrap(), MonomialOrder::Block(3));
        assert!("weird".parse::<MonomialOrder>().is_err());
    }
}
