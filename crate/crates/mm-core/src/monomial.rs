//! Exponent vectors with the operations Buchberger's algorithm needs.
//!
//! A monomial does not know its ring; callers keep exponent-vector lengths
//! consistent (polynomials enforce this). Exponents are `u16`, wide enough
//! for the d^(2^r) powers the catalog produces at desk scale, and checked
//! on multiplication.

use alloc::vec::Vec;
use core::cmp::Ordering;
use smallvec::SmallVec;

/// Inline capacity covering the 8n + 2 + 1 variables of desk-scale rings.
type Exps = SmallVec<[u16; 32]>;

/// A power product of ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    deg: u32,
}

impl Monomial {
    /// The monomial 1 in a ring with `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, n),
            deg: 0,
        }
    }

    /// The single variable `v`.
    pub fn var(v: usize, n: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[v] = 1;
        m.deg = 1;
        m
    }

    /// Builds from an exponent slice.
    pub fn from_exps(exps: &[u16]) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            deg,
        }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, v: usize) -> u16 {
        self.exps[v]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            deg: self.deg * k as u32,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        if self.deg > other.deg {
            return false;
        }
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// other / self, when exact.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(&b, &a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            deg: other.deg - self.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bitmask of variables with positive exponent (rings stay below 64 vars).
    pub fn support(&self) -> u64 {
        let mut m = 0u64;
        for (v, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << v;
            }
        }
        m
    }

    /// Appends zero exponents for `extra` new trailing variables.
    pub fn extend_vars(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        for _ in 0..extra {
            exps.push(0);
        }
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Drops `extra` trailing variables, which must have exponent zero.
    pub fn truncate_vars(&self, extra: usize) -> Monomial {
        let keep = self.exps.len() - extra;
        debug_assert!(self.exps[keep..].iter().all(|&e| e == 0));
        Monomial {
            exps: SmallVec::from_slice(&self.exps[..keep]),
            deg: self.deg,
        }
    }

    /// Total degree over the variables in `mask`.
    pub fn deg_masked(&self, mask: u64) -> u32 {
        let mut d = 0u32;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if v >= self.exps.len() {
                break;
            }
            d += self.exps[v] as u32;
            m &= m - 1;
        }
        d
    }
}

/// Graded reverse-lexicographic comparison, the crate's canonical term order.
pub fn cmp_grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.exps.len(), b.exps.len());
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.exps.len()).rev() {
        if a.exps[i] != b.exps[i] {
            // On equal degree, the smaller trailing exponent wins.
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

/// Lexicographic comparison with variable 0 heaviest.
pub fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.exps.len(), b.exps.len());
    for i in 0..a.exps.len() {
        if a.exps[i] != b.exps[i] {
            return a.exps[i].cmp(&b.exps[i]);
        }
    }
    Ordering::Equal
}

/// Grevlex restricted to the variables in `mask`.
pub fn cmp_grevlex_masked(a: &Monomial, b: &Monomial, mask: u64) -> Ordering {
    match a.deg_masked(mask).cmp(&b.deg_masked(mask)) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.exps.len()).rev() {
        if mask & (1 << i) == 0 {
            continue;
        }
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

/// Enumerates all monomials in `n` variables of total degree at most `cap`,
/// in ascending grevlex order. Intended for small dense systems only.
pub fn monomials_up_to(n: usize, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = alloc::vec![0u16; n];
    loop {
        out.push(Monomial::from_exps(&exps));
        // Odometer over exponent vectors with total degree <= cap.
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(cmp_grevlex);
                return out;
            }
            exps[i] += 1;
            if exps.iter().map(|&e| e as u32).sum::<u32>() <= cap {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn grevlex_classic_comparison() {
        // x^2 y > x y^2 in grevlex.
        assert_eq!(cmp_grevlex(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        // Degree dominates.
        assert_eq!(cmp_grevlex(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // x z < y^2 in grevlex on (x, y, z).
        assert_eq!(
            cmp_grevlex(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn lex_comparison() {
        assert_eq!(cmp_lex(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(cmp_lex(&m(&[1, 1]), &m(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 0, 0]);
        assert!(b.divides(&a));
        assert_eq!(b.try_div(&a).unwrap(), m(&[1, 1, 0]));
        assert!(a.try_div(&b).is_none());
        assert_eq!(a.lcm(&m(&[0, 2, 1])), m(&[2, 2, 1]));
        assert!(m(&[1, 0, 0]).coprime_with(&m(&[0, 1, 1])));
        assert!(!m(&[1, 1, 0]).coprime_with(&m(&[0, 1, 1])));
    }

    #[test]
    fn support_and_masked_degree() {
        let a = m(&[2, 0, 3]);
        assert_eq!(a.support(), 0b101);
        assert_eq!(a.deg_masked(0b001), 2);
        assert_eq!(a.deg_masked(0b110), 3);
    }

    #[test]
    fn bounded_enumeration_counts() {
        // C(n + cap, cap) monomials of degree <= cap in n variables.
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(2, 5).len(), 21);
        let ms = monomials_up_to(2, 2);
        assert!(ms.windows(2).all(|w| cmp_grevlex(&w[0], &w[1]) == Ordering::Less));
    }
}
