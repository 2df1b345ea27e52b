//! Ideal arithmetic built on elimination orders.
//!
//! Intersections use a single auxiliary variable t appended to the ring:
//! I cap J = (t*I + (1-t)*J) with t eliminated by a block order. Colons
//! divide the generators of I cap (f) by f; colon by an ideal folds the
//! per-generator colons pairwise, re-presenting intermediates by their
//! reduced bases. Saturation iterates the colon until it stabilizes and
//! reports the exponent at which it did.

use crate::error::CoreError;
use crate::groebner::{normal_form, Budget};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::{MonomialOrder, VarSet};
use crate::poly::Poly;
use crate::ring::same_ring;
use alloc::format;
use alloc::vec::Vec;

/// Saturation gives up after this many colon steps; the families verified
/// here stabilize within single digits.
pub const MAX_SATURATION_STEPS: u32 = 64;

/// Shared options for ideal operations.
#[derive(Clone, Copy, Debug, Default)]
pub struct Ctx {
    pub budget: Budget,
}

impl Ctx {
    pub fn new(budget: Budget) -> Ctx {
        Ctx { budget }
    }
}

/// I + J, by concatenating generators.
pub fn sum(a: &Ideal, b: &Ideal) -> Ideal {
    assert!(same_ring(a.ring(), b.ring()), "ring mismatch");
    let mut gens = a.generators().to_vec();
    gens.extend_from_slice(b.generators());
    Ideal::new(a.ring(), gens)
}

/// Sum of several ideals.
pub fn sum_many(parts: &[&Ideal]) -> Ideal {
    let first = parts.first().expect("at least one summand");
    let mut gens = Vec::new();
    for part in parts {
        assert!(same_ring(first.ring(), part.ring()), "ring mismatch");
        gens.extend_from_slice(part.generators());
    }
    Ideal::new(first.ring(), gens)
}

/// I * J, by all pairwise generator products.
pub fn product(a: &Ideal, b: &Ideal) -> Ideal {
    assert!(same_ring(a.ring(), b.ring()), "ring mismatch");
    let mut gens = Vec::with_capacity(a.num_gens() * b.num_gens());
    for x in a.generators() {
        for y in b.generators() {
            gens.push(x.mul_ref(y));
        }
    }
    Ideal::new(a.ring(), gens)
}

/// I cap J via one auxiliary variable and a block order.
pub fn intersect(cx: &Ctx, a: &Ideal, b: &Ideal) -> Result<Ideal, CoreError> {
    assert!(same_ring(a.ring(), b.ring()), "ring mismatch");
    let ring = a.ring();
    let big = ring.extended(&["@t"]);
    let t = Poly::var(&big, big.num_vars() - 1);
    let one_minus_t = Poly::one(&big).sub_ref(&t);
    let mut gens: Vec<Poly> = Vec::with_capacity(a.num_gens() + b.num_gens());
    for g in a.generators() {
        gens.push(g.lift(&big).mul_ref(&t));
    }
    for g in b.generators() {
        gens.push(g.lift(&big).mul_ref(&one_minus_t));
    }
    let head = VarSet::single(big.num_vars() - 1);
    let lifted = Ideal::new(&big, gens);
    let gb = lifted.groebner(MonomialOrder::Block { head }, cx.budget)?;
    let kept: Vec<Poly> = gb
        .polys()
        .iter()
        .filter(|p| p.support() & head.0 == 0)
        .map(|p| p.project(ring))
        .collect();
    Ok(Ideal::new(ring, kept))
}

/// Intersection of several ideals, folded pairwise with intermediate
/// reduced bases.
pub fn intersect_many(cx: &Ctx, parts: &[&Ideal]) -> Result<Ideal, CoreError> {
    let mut acc = parts.first().expect("at least one part").simplified(cx.budget)?;
    for part in &parts[1..] {
        acc = intersect(cx, &acc, part)?.simplified(cx.budget)?;
    }
    Ok(acc)
}

/// I : f, as (I cap (f)) / f.
pub fn colon_poly(cx: &Ctx, i: &Ideal, f: &Poly) -> Result<Ideal, CoreError> {
    assert!(same_ring(i.ring(), f.ring()), "ring mismatch");
    if f.is_zero() {
        return Err(CoreError::BadParams(format!(
            "colon by zero in a ring with {} variables",
            i.ring().num_vars()
        )));
    }
    let principal = Ideal::new(i.ring(), alloc::vec![f.clone()]);
    let meet = intersect(cx, i, &principal)?;
    let mut gens = Vec::with_capacity(meet.num_gens());
    for g in meet.generators() {
        gens.push(g.exact_div(f)?);
    }
    Ok(Ideal::new(i.ring(), gens))
}

/// I : J, as the intersection of the colons by each generator of J.
pub fn colon_ideal(cx: &Ctx, i: &Ideal, j: &Ideal) -> Result<Ideal, CoreError> {
    assert!(same_ring(i.ring(), j.ring()), "ring mismatch");
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        let c = colon_poly(cx, i, g)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(cx, &prev, &c)?.simplified(cx.budget)?,
        });
    }
    match acc {
        Some(r) => Ok(r),
        // I : (0) is the whole ring.
        None => Ok(Ideal::new(i.ring(), alloc::vec![Poly::one(i.ring())])),
    }
}

/// I : f^infinity along with the exponent k at which the chain stabilizes
/// (the smallest k with I : f^k = I : f^(k+1)).
pub fn saturate(cx: &Ctx, i: &Ideal, f: &Poly) -> Result<(Ideal, u32), CoreError> {
    let mut current = i.simplified(cx.budget)?;
    for k in 0..MAX_SATURATION_STEPS {
        let next = colon_poly(cx, &current, f)?.simplified(cx.budget)?;
        if equals(cx, &next, &current)? {
            return Ok((current, k));
        }
        current = next;
    }
    Err(CoreError::TooLarge(format!(
        "saturation did not stabilize within {MAX_SATURATION_STEPS} colon steps"
    )))
}

/// The elimination ideal: I with the variables in `kill` projected away.
/// The result lives in the same ring but involves none of those variables.
pub fn eliminate(cx: &Ctx, i: &Ideal, kill: VarSet) -> Result<Ideal, CoreError> {
    let gb = i.groebner(MonomialOrder::Block { head: kill }, cx.budget)?;
    let kept: Vec<Poly> = gb
        .polys()
        .iter()
        .filter(|p| p.support() & kill.0 == 0)
        .cloned()
        .collect();
    Ok(Ideal::new(i.ring(), kept))
}

/// Membership via the cached grevlex basis.
pub fn is_member(cx: &Ctx, f: &Poly, i: &Ideal) -> Result<bool, CoreError> {
    let gb = i.groebner(MonomialOrder::Grevlex, cx.budget)?;
    Ok(normal_form(f, &gb).is_zero())
}

/// I contains J: every generator of J reduces to zero.
pub fn contains(cx: &Ctx, i: &Ideal, j: &Ideal) -> Result<bool, CoreError> {
    assert!(same_ring(i.ring(), j.ring()), "ring mismatch");
    let gb = i.groebner(MonomialOrder::Grevlex, cx.budget)?;
    Ok(j.generators().iter().all(|g| normal_form(g, &gb).is_zero()))
}

/// Ideal equality, decided by comparing reduced grevlex bases.
pub fn equals(cx: &Ctx, a: &Ideal, b: &Ideal) -> Result<bool, CoreError> {
    assert!(same_ring(a.ring(), b.ring()), "ring mismatch");
    let ga = a.groebner(MonomialOrder::Grevlex, cx.budget)?;
    let gb = b.groebner(MonomialOrder::Grevlex, cx.budget)?;
    Ok(ga.polys() == gb.polys())
}

/// f in rad(I), by inverting f with an auxiliary variable: the extended
/// ideal I + (t*f - 1) is the unit ideal exactly for radical members.
pub fn radical_member(cx: &Ctx, f: &Poly, i: &Ideal) -> Result<bool, CoreError> {
    assert!(same_ring(i.ring(), f.ring()), "ring mismatch");
    if f.is_zero() {
        return Ok(true);
    }
    let big = i.ring().extended(&["@t"]);
    let t = Poly::var(&big, big.num_vars() - 1);
    let mut gens: Vec<Poly> = i.generators().iter().map(|g| g.lift(&big)).collect();
    gens.push(t.mul_ref(&f.lift(&big)).sub_ref(&Poly::one(&big)));
    let lifted = Ideal::new(&big, gens);
    let gb = lifted.groebner(MonomialOrder::Grevlex, cx.budget)?;
    Ok(gb.is_unit())
}

/// The monomial m as a polynomial, for witness products.
pub fn mono(i: &Ideal, m: Monomial) -> Poly {
    Poly::monomial(i.ring(), m, 1)
}
