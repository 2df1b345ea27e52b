//! Arithmetic in the prime field F_p and its roots of unity.
//!
//! Elements are canonical residues in `0..p`. A `Field` also remembers the
//! root order `d` the surrounding computation relies on; construction fails
//! unless `d` divides `p - 1`, which guarantees that F_p contains exactly
//! `d` distinct `d`-th roots of unity.

use crate::error::CoreError;
use alloc::vec::Vec;

/// Moduli are capped so that products of two residues fit in a `u64`.
const MAX_MODULUS: u64 = 1 << 31;

/// A prime field F_p carrying a promised root order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    p: u64,
    d: u64,
}

impl Field {
    /// Builds F_p and checks that elements of multiplicative order `d` exist.
    pub fn new(p: u64, d: u64) -> Result<Self, CoreError> {
        if p < 2 || p >= MAX_MODULUS || !is_prime(p) {
            return Err(CoreError::BadModulus(p));
        }
        if d == 0 || (p - 1) % d != 0 {
            return Err(CoreError::NoRoots { p, order: d });
        }
        Ok(Field { p, d })
    }

    /// The modulus p.
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// The root order d promised at construction.
    pub fn root_order(&self) -> u64 {
        self.d
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Reduces a signed integer to its canonical residue.
    pub fn from_i64(&self, a: i64) -> u64 {
        let m = self.p as i64;
        (((a % m) + m) % m) as u64
    }

    /// Smallest element of multiplicative order exactly `d`.
    pub fn primitive_root_of_unity(&self) -> u64 {
        primitive_root_of_unity(self.p, self.d).expect("checked at construction")
    }

    /// All solutions of x^d = 1, sorted ascending.
    pub fn enumerate_roots_of_unity(&self) -> Vec<u64> {
        enumerate_roots_of_unity(self.p, self.d).expect("checked at construction")
    }
}

/// Smallest x in F_p of multiplicative order exactly `order`.
pub fn primitive_root_of_unity(p: u64, order: u64) -> Result<u64, CoreError> {
    if p < 2 || !is_prime(p) {
        return Err(CoreError::BadModulus(p));
    }
    if order == 0 || (p - 1) % order != 0 {
        return Err(CoreError::NoRoots { p, order });
    }
    if order == 1 {
        return Ok(1);
    }
    let f = Field { p, d: order };
    let factors = prime_factors(order);
    for x in 2..p {
        if f.pow(x, order) != 1 {
            continue;
        }
        if factors.iter().all(|q| f.pow(x, order / q) != 1) {
            return Ok(x);
        }
    }
    unreachable!("a cyclic group of order p-1 has elements of every divisor order")
}

/// All solutions of x^order = 1 in F_p, sorted ascending.
pub fn enumerate_roots_of_unity(p: u64, order: u64) -> Result<Vec<u64>, CoreError> {
    let g = primitive_root_of_unity(p, order)?;
    let f = Field { p, d: order };
    let mut roots = Vec::with_capacity(order as usize);
    let mut x = 1u64;
    for _ in 0..order {
        roots.push(x);
        x = f.mul(x, g);
    }
    roots.sort_unstable();
    Ok(roots)
}

/// Smallest prime p > 2^15 with p = 1 mod `order`; the library default when
/// no explicit modulus is supplied.
pub fn choose_prime(order: u64) -> u64 {
    let ord = order.max(1);
    let mut p = (1u64 << 15) + 1;
    let r = p % ord;
    if r != 1 {
        p += if r == 0 { 1 } else { ord + 1 - r };
    }
    while !is_prime(p) {
        p += ord;
    }
    p
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
