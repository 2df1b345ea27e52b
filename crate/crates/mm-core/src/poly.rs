//! Sparse multivariate polynomials over a prime field.
//!
//! Terms are kept sorted descending by grevlex with nonzero coefficients;
//! every polynomial carries a handle to its ring, so arithmetic can check
//! compatibility and printing can use variable names.

use crate::error::CoreError;
use crate::monomial::{cmp_grevlex, Monomial};
use crate::order::MonomialOrder;
use crate::ring::{same_ring, Ring};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// A polynomial with terms sorted descending by grevlex.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, u64)>,
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<Ring>, c: u64) -> Self {
        let c = c % ring.field().modulus();
        let mut terms = Vec::new();
        if c != 0 {
            terms.push((Monomial::one(ring.num_vars()), c));
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<Ring>, v: usize) -> Self {
        Poly {
            ring: ring.clone(),
            terms: alloc::vec![(Monomial::var(v, ring.num_vars()), 1)],
        }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: u64) -> Self {
        debug_assert_eq!(m.num_vars(), ring.num_vars());
        let c = c % ring.field().modulus();
        let mut terms = Vec::new();
        if c != 0 {
            terms.push((m, c));
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds from arbitrary (monomial, coefficient) pairs, combining and
    /// sorting as needed.
    pub fn from_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, u64)>) -> Self {
        let p = ring.field().modulus();
        let mut ts: Vec<(Monomial, u64)> = terms
            .into_iter()
            .map(|(m, c)| (m, c % p))
            .filter(|&(_, c)| c != 0)
            .collect();
        ts.sort_by(|a, b| cmp_grevlex(&b.0, &a.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(ts.len());
        for (m, c) in ts {
            match out.last_mut() {
                Some(last) if last.0 == m => {
                    last.1 = ring.field().add(last.1, c);
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() || self.is_zero()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_deg(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.deg()).max().unwrap_or(0)
    }

    /// Union of the supports of all terms.
    pub fn support(&self) -> u64 {
        self.terms.iter().fold(0u64, |acc, (m, _)| acc | m.support())
    }

    /// Leading term under `order` (grevlex reads the stored head directly).
    pub fn leading(&self, order: MonomialOrder) -> Option<(&Monomial, u64)> {
        match order {
            MonomialOrder::Grevlex => self.terms.first().map(|(m, c)| (m, *c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.compare(&a.0, &b.0))
                .map(|(m, c)| (m, *c)),
        }
    }

    pub fn add_ref(&self, other: &Poly) -> Poly {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let f = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match cmp_grevlex(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(self.terms[i].1, other.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg_ref(&self) -> Poly {
        let f = self.ring.field();
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f.neg(*c)))
                .collect(),
        }
    }

    pub fn sub_ref(&self, other: &Poly) -> Poly {
        self.add_ref(&other.neg_ref())
    }

    /// Multiplies by a single term; preserves term ordering.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Poly {
        let f = self.ring.field();
        let c = c % f.modulus();
        if c == 0 {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), f.mul(*tc, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Poly {
        self.mul_term(&Monomial::one(self.ring.num_vars()), c)
    }

    pub fn mul_ref(&self, other: &Poly) -> Poly {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let f = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (am, ac) in &self.terms {
            for (bm, bc) in &other.terms {
                terms.push((am.mul(bm), f.mul(*ac, *bc)));
            }
        }
        Poly::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Divides the leading coefficient out, leaving a monic polynomial.
    pub fn monic(&self, order: MonomialOrder) -> Poly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) if c == 1 => self.clone(),
            Some((_, c)) => self.scale(self.ring.field().inv(c)),
        }
    }

    /// Whether variable `v` appears in any term.
    pub fn involves_var(&self, v: usize) -> bool {
        self.support() & (1u64 << v) != 0
    }

    /// Replaces variable `v` by `g` everywhere.
    pub fn substitute(&self, v: usize, g: &Poly) -> Poly {
        assert!(same_ring(&self.ring, &g.ring), "ring mismatch");
        let n = self.ring.num_vars();
        let mut acc = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let mut rest = m.exps().to_vec();
            rest[v] = 0;
            let base = Poly::monomial(&self.ring, Monomial::from_exps(&rest[..n]), *c);
            acc = acc.add_ref(&base.mul_ref(&g.pow(e as u32)));
        }
        acc
    }

    /// Exact division: self / divisor, failing if any remainder survives.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, CoreError> {
        assert!(same_ring(&self.ring, &divisor.ring), "ring mismatch");
        if divisor.is_zero() {
            return Err(CoreError::InexactDivision);
        }
        let f = self.ring.field();
        let order = MonomialOrder::Grevlex;
        let (dm, dc) = divisor.leading(order).expect("nonzero divisor");
        let dinv = f.inv(dc);
        let dm = dm.clone();
        let mut rem = self.clone();
        let mut quot_terms: Vec<(Monomial, u64)> = Vec::new();
        while let Some((lm, lc)) = rem.leading(order) {
            let q = match dm.try_div(lm) {
                Some(q) => q,
                None => return Err(CoreError::InexactDivision),
            };
            let qc = f.mul(lc, dinv);
            quot_terms.push((q.clone(), qc));
            rem = rem.sub_ref(&divisor.mul_term(&q, qc));
        }
        Ok(Poly::from_terms(&self.ring, quot_terms))
    }

    /// Lifts into a ring extended by trailing variables.
    pub fn lift(&self, bigger: &Arc<Ring>) -> Poly {
        let extra = bigger.num_vars() - self.ring.num_vars();
        Poly {
            ring: bigger.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extend_vars(extra), *c))
                .collect(),
        }
    }

    /// Projects back to a smaller ring; all trailing exponents must be zero.
    pub fn project(&self, smaller: &Arc<Ring>) -> Poly {
        let extra = self.ring.num_vars() - smaller.num_vars();
        Poly {
            ring: smaller.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.truncate_vars(extra), *c))
                .collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::print_poly(self, MonomialOrder::Grevlex))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.add_ref(rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.sub_ref(rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_ref(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}
