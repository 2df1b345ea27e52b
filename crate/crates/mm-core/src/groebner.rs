//! Buchberger's algorithm with the Gebauer-Moeller pair update.
//!
//! Pairs are processed in normal-selection order (minimum lcm degree, with
//! a fixed tie-break), the coprime-leading-term and chain criteria prune
//! the queue, and the returned basis is the reduced Groebner basis sorted
//! ascending under its order, so equal ideals yield byte-identical bases
//! no matter how the input generators were listed.
//!
//! Work is metered in S-pairs: a computation that exhausts its budget stops
//! with `CoreError::BudgetExceeded` rather than returning a wrong answer.

use crate::error::CoreError;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Poly;
use crate::ring::Ring;
use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Default S-pair allowance, sized so the slow-tier chains finish with
/// generous headroom; budget overruns surface as skipped checks, never as
/// wrong verdicts.
pub const DEFAULT_MAX_SPAIRS: u64 = 4_000_000;

/// Resource limits for a single basis computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_spairs: u64,
}

impl Budget {
    pub const DEFAULT: Budget = Budget {
        max_spairs: DEFAULT_MAX_SPAIRS,
    };

    pub fn unlimited() -> Budget {
        Budget {
            max_spairs: u64::MAX,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Counters describing one basis computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    /// S-pairs actually reduced (after criteria pruning).
    pub spairs: u64,
    /// How many of those reduced to zero.
    pub zero_reductions: u64,
    /// Largest total degree of any basis element seen underway.
    pub max_degree: u32,
}

/// A reduced Groebner basis: monic, mutually reduced, sorted ascending.
#[derive(Clone, Debug)]
pub struct Gb {
    ring: Arc<Ring>,
    order: MonomialOrder,
    polys: Vec<Poly>,
    stats: GbStats,
    /// Engine-form copies (terms descending under `order`) for reductions.
    eng: Vec<EPoly>,
}

impl Gb {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    /// True when the basis is `{1}`, i.e. the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.eng.iter().map(|g| g[0].0.clone()).collect()
    }
}

type EPoly = Vec<(Monomial, u64)>;

fn to_engine(p: &Poly, order: MonomialOrder) -> EPoly {
    let mut t: EPoly = p.terms().to_vec();
    t.sort_by(|a, b| order.compare(&b.0, &a.0));
    t
}

fn from_engine(ring: &Arc<Ring>, e: &EPoly) -> Poly {
    Poly::from_terms(ring, e.clone())
}

/// work[cut..] - c * m * g[1..], merged under `order`. Used after the heads
/// cancel, so both are skipped by the caller.
fn sub_scaled(
    ring: &Ring,
    order: MonomialOrder,
    work: &[(Monomial, u64)],
    g: &[(Monomial, u64)],
    m: &Monomial,
    c: u64,
) -> EPoly {
    let f = ring.field();
    let mut out = Vec::with_capacity(work.len() + g.len());
    let mut i = 0;
    let mut j = 1;
    while i < work.len() && j < g.len() {
        let gm = g[j].0.mul(m);
        match order.compare(&work[i].0, &gm) {
            Ordering::Greater => {
                out.push(work[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((gm, f.neg(f.mul(c, g[j].1))));
                j += 1;
            }
            Ordering::Equal => {
                let coeff = f.sub(work[i].1, f.mul(c, g[j].1));
                if coeff != 0 {
                    out.push((work[i].0.clone(), coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&work[i..]);
    while j < g.len() {
        out.push((g[j].0.mul(m), f.neg(f.mul(c, g[j].1))));
        j += 1;
    }
    out
}

/// Fully reduces `work` against the monic divisors in `basis`; the first
/// divisor in index order wins, so the result is deterministic.
fn reduce_full(
    ring: &Ring,
    order: MonomialOrder,
    mut work: EPoly,
    basis: &[EPoly],
    skip: Option<usize>,
) -> EPoly {
    let mut rem: EPoly = Vec::new();
    let mut h = 0;
    'outer: while h < work.len() {
        let (lm, lc) = (&work[h].0, work[h].1);
        for (k, g) in basis.iter().enumerate() {
            if Some(k) == skip || g.is_empty() {
                continue;
            }
            if let Some(q) = g[0].0.try_div(lm) {
                work = sub_scaled(ring, order, &work[h + 1..], g, &q, lc);
                h = 0;
                continue 'outer;
            }
        }
        rem.push(work[h].clone());
        h += 1;
    }
    rem
}

fn make_monic(ring: &Ring, e: &mut EPoly) {
    if let Some(&(_, lc)) = e.first() {
        if lc != 1 {
            let inv = ring.field().inv(lc);
            for t in e.iter_mut() {
                t.1 = ring.field().mul(t.1, inv);
            }
        }
    }
}

/// Queue key: normal selection picks the minimum lcm degree, with the lcm
/// exponent vector and indices as a deterministic tie-break.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Pair {
    deg: u32,
    lcm: Monomial,
    i: u32,
    j: u32,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.lcm.exps().cmp(other.lcm.exps()))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Engine<'a> {
    ring: &'a Arc<Ring>,
    order: MonomialOrder,
    basis: Vec<EPoly>,
    pairs: BTreeSet<Pair>,
    stats: GbStats,
    budget: Budget,
}

impl<'a> Engine<'a> {
    fn lt(&self, i: usize) -> &Monomial {
        &self.basis[i][0].0
    }

    /// Gebauer-Moeller update after appending basis element `t`.
    fn update_pairs(&mut self, t: usize) {
        let lt_t = self.lt(t).clone();
        let mut cand: Vec<(usize, Monomial)> = (0..t)
            .filter(|&i| !self.basis[i].is_empty())
            .map(|i| (i, self.lt(i).lcm(&lt_t)))
            .collect();

        // Chain (M) rule: drop (i, t) when some (j, t) has a strictly
        // smaller lcm dividing it.
        let mut keep = alloc::vec![true; cand.len()];
        for a in 0..cand.len() {
            if !keep[a] {
                continue;
            }
            for b in 0..cand.len() {
                if a == b {
                    continue;
                }
                if cand[b].1 != cand[a].1 && cand[b].1.divides(&cand[a].1) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // F rule: one representative per lcm class, unless some member of
        // the class has coprime leading terms, which kills the class.
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        let mut a = 0;
        let cand: Vec<(usize, Monomial)> = cand
            .drain(..)
            .zip(keep)
            .filter_map(|(c, k)| k.then_some(c))
            .collect();
        let mut used = alloc::vec![false; cand.len()];
        while a < cand.len() {
            if used[a] {
                a += 1;
                continue;
            }
            let mut class = alloc::vec![a];
            for b in a + 1..cand.len() {
                if !used[b] && cand[b].1 == cand[a].1 {
                    class.push(b);
                    used[b] = true;
                }
            }
            let coprime = class
                .iter()
                .any(|&k| self.lt(cand[k].0).coprime_with(&lt_t));
            if !coprime {
                kept.push(cand[class[0]].clone());
            }
            a += 1;
        }
        // B rule: discard old pairs whose lcm is a proper multiple of lt_t.
        let doomed: Vec<Pair> = self
            .pairs
            .iter()
            .filter(|p| {
                lt_t.divides(&p.lcm)
                    && self.basis[p.i as usize][0].0.lcm(&lt_t) != p.lcm
                    && self.basis[p.j as usize][0].0.lcm(&lt_t) != p.lcm
            })
            .cloned()
            .collect();
        for p in doomed {
            self.pairs.remove(&p);
        }
        for (i, lcm) in kept {
            self.pairs.insert(Pair {
                deg: lcm.deg(),
                lcm,
                i: i as u32,
                j: t as u32,
            });
        }
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> EPoly {
        // Both inputs are monic, so the S-polynomial is uf*fi - ug*fj.
        let fi = &self.basis[i];
        let fj = &self.basis[j];
        let ui = fi[0].0.try_div(lcm).expect("lcm divisible by lt");
        let uj = fj[0].0.try_div(lcm).expect("lcm divisible by lt");
        let f = self.ring.field();
        let mut left: EPoly = fi.iter().map(|(m, c)| (m.mul(&ui), *c)).collect();
        let right: EPoly = fj.iter().map(|(m, c)| (m.mul(&uj), *c)).collect();
        // Heads are equal (the lcm) with coefficient 1; merge the tails.
        debug_assert_eq!(left[0].0, right[0].0);
        left.remove(0);
        let mut out = Vec::with_capacity(left.len() + right.len());
        let (mut a, mut b) = (0, 1);
        while a < left.len() && b < right.len() {
            match self.order.compare(&left[a].0, &right[b].0) {
                Ordering::Greater => {
                    out.push(left[a].clone());
                    a += 1;
                }
                Ordering::Less => {
                    out.push((right[b].0.clone(), f.neg(right[b].1)));
                    b += 1;
                }
                Ordering::Equal => {
                    let c = f.sub(left[a].1, right[b].1);
                    if c != 0 {
                        out.push((left[a].0.clone(), c));
                    }
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend_from_slice(&left[a..]);
        while b < right.len() {
            out.push((right[b].0.clone(), f.neg(right[b].1)));
            b += 1;
        }
        out
    }

    fn insert(&mut self, mut e: EPoly) -> bool {
        if e.is_empty() {
            return false;
        }
        make_monic(self.ring, &mut e);
        self.stats.max_degree = self.stats.max_degree.max(e[0].0.deg().max(
            e.iter().map(|(m, _)| m.deg()).max().unwrap_or(0),
        ));
        let is_unit = e[0].0.is_one();
        self.basis.push(e);
        if is_unit {
            return true;
        }
        self.update_pairs(self.basis.len() - 1);
        false
    }

    fn run(&mut self) -> Result<(), CoreError> {
        while let Some(p) = self.pairs.iter().next().cloned() {
            self.pairs.remove(&p);
            self.stats.spairs += 1;
            if self.stats.spairs > self.budget.max_spairs {
                return Err(CoreError::BudgetExceeded {
                    spairs: self.stats.spairs,
                });
            }
            let s = self.spoly(p.i as usize, p.j as usize, &p.lcm);
            let red = reduce_full(self.ring, self.order, s, &self.basis, None);
            if red.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            if self.insert(red) {
                // The ideal is the unit ideal; no further pairs matter.
                self.pairs.clear();
                self.basis = alloc::vec![alloc::vec![(
                    Monomial::one(self.ring.num_vars()),
                    1
                )]];
                return Ok(());
            }
        }
        Ok(())
    }

    /// Minimalizes and tail-reduces into the unique reduced basis.
    fn reduce_basis(&mut self) {
        self.basis.retain(|g| !g.is_empty());
        if self.basis.iter().any(|g| g[0].0.is_one()) {
            self.basis = alloc::vec![alloc::vec![(
                Monomial::one(self.ring.num_vars()),
                1
            )]];
            return;
        }
        // Minimal: keep only leading terms not divisible by another's.
        let mut idx: Vec<usize> = (0..self.basis.len()).collect();
        idx.sort_by(|&a, &b| self.order.compare(&self.basis[a][0].0, &self.basis[b][0].0));
        let mut kept: Vec<EPoly> = Vec::new();
        for &i in &idx {
            let lm = &self.basis[i][0].0;
            if !kept.iter().any(|g| g[0].0.divides(lm)) {
                kept.push(self.basis[i].clone());
            }
        }
        // Reduced: tail-reduce each against the others until stable.
        loop {
            let mut changed = false;
            for i in 0..kept.len() {
                let w = kept[i].clone();
                let r = reduce_full(self.ring, self.order, w, &kept, Some(i));
                if r != kept[i] {
                    kept[i] = r;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for g in kept.iter_mut() {
            make_monic(self.ring, g);
        }
        kept.sort_by(|a, b| self.order.compare(&a[0].0, &b[0].0));
        self.basis = kept;
    }
}

/// Computes the reduced Groebner basis of the ideal the generators span.
pub fn buchberger(
    ring: &Arc<Ring>,
    gens: &[Poly],
    order: MonomialOrder,
    budget: Budget,
) -> Result<Gb, CoreError> {
    let mut eng = Engine {
        ring,
        order,
        basis: Vec::new(),
        pairs: BTreeSet::new(),
        stats: GbStats::default(),
        budget,
    };
    let mut unit = false;
    for g in gens {
        assert!(
            crate::ring::same_ring(g.ring(), ring),
            "generator from a different ring"
        );
        if g.is_zero() {
            continue;
        }
        if eng.insert(to_engine(g, order)) {
            unit = true;
            break;
        }
    }
    if unit {
        eng.pairs.clear();
        eng.basis = alloc::vec![alloc::vec![(Monomial::one(ring.num_vars()), 1)]];
    } else {
        eng.run()?;
    }
    eng.reduce_basis();
    let polys: Vec<Poly> = eng.basis.iter().map(|e| from_engine(ring, e)).collect();
    Ok(Gb {
        ring: ring.clone(),
        order,
        polys,
        stats: eng.stats,
        eng: eng.basis,
    })
}

/// Remainder of `f` on full division by the basis; zero exactly for ideal
/// members, and canonical (the unique normal form) for everything else.
pub fn normal_form(f: &Poly, gb: &Gb) -> Poly {
    assert!(
        crate::ring::same_ring(f.ring(), &gb.ring),
        "polynomial from a different ring"
    );
    let w = to_engine(f, gb.order);
    let r = reduce_full(&gb.ring, gb.order, w, &gb.eng, None);
    from_engine(&gb.ring, &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::parse::{parse_poly, print_poly};

    fn xy_ring() -> Arc<Ring> {
        Ring::new(Field::new(13, 2).unwrap(), &["x", "y"])
    }

    fn basis_strings(gb: &Gb) -> Vec<alloc::string::String> {
        gb.polys().iter().map(|p| print_poly(p, gb.order())).collect()
    }

    #[test]
    fn normal_form_single_divisor() {
        // nf(x^3, {x^2 - y}) under lex is x*y.
        let r = xy_ring();
        let g = parse_poly(&r, "x^2 - y").unwrap();
        let gb = buchberger(&r, &[g], MonomialOrder::Lex, Budget::DEFAULT).unwrap();
        let f = parse_poly(&r, "x^3").unwrap();
        assert_eq!(print_poly(&normal_form(&f, &gb), gb.order()), "x*y");
    }

    #[test]
    fn lex_basis_of_two_parabolas() {
        // {x^2 - y, y^2 - x} under lex reduces to {y^4 - y, x - y^2}.
        let r = xy_ring();
        let gens = [
            parse_poly(&r, "x^2 - y").unwrap(),
            parse_poly(&r, "y^2 - x").unwrap(),
        ];
        let gb = buchberger(&r, &gens, MonomialOrder::Lex, Budget::DEFAULT).unwrap();
        assert_eq!(basis_strings(&gb), vec!["y^4 - y", "x - y^2"]);
    }

    #[test]
    fn unit_ideal_collapses_to_one() {
        let r = xy_ring();
        let gens = [
            parse_poly(&r, "x").unwrap(),
            parse_poly(&r, "x + 1").unwrap(),
        ];
        let gb = buchberger(&r, &gens, MonomialOrder::Grevlex, Budget::DEFAULT).unwrap();
        assert!(gb.is_unit());
        assert_eq!(basis_strings(&gb), vec!["1"]);
    }

    #[test]
    fn generator_permutations_yield_identical_bases() {
        let r = Ring::new(Field::new(13, 2).unwrap(), &["x", "y", "z"]);
        let gens = [
            parse_poly(&r, "x^2 + y*z - 2").unwrap(),
            parse_poly(&r, "y^2 - x*z").unwrap(),
            parse_poly(&r, "z^2 + x*y + 5").unwrap(),
        ];
        let reference = buchberger(&r, &gens, MonomialOrder::Grevlex, Budget::DEFAULT).unwrap();
        let perms: [[usize; 3]; 5] = [
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for perm in perms {
            let shuffled: Vec<Poly> = perm.iter().map(|&i| gens[i].clone()).collect();
            let gb = buchberger(&r, &shuffled, MonomialOrder::Grevlex, Budget::DEFAULT).unwrap();
            assert_eq!(basis_strings(&gb), basis_strings(&reference));
        }
    }

    #[test]
    fn every_spoly_of_the_basis_reduces_to_zero() {
        let r = Ring::new(Field::new(13, 2).unwrap(), &["x", "y", "z"]);
        let gens = [
            parse_poly(&r, "x*y - z").unwrap(),
            parse_poly(&r, "y*z - x").unwrap(),
            parse_poly(&r, "x*z - y").unwrap(),
        ];
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let gb = buchberger(&r, &gens, order, Budget::DEFAULT).unwrap();
            let polys = gb.polys().to_vec();
            for i in 0..polys.len() {
                for j in i + 1..polys.len() {
                    let (mi, _) = polys[i].leading(order).unwrap();
                    let (mj, _) = polys[j].leading(order).unwrap();
                    let lcm = mi.lcm(mj);
                    let a = polys[i].mul_term(&mi.try_div(&lcm).unwrap(), 1);
                    let b = polys[j].mul_term(&mj.try_div(&lcm).unwrap(), 1);
                    let s = a.sub_ref(&b);
                    assert!(normal_form(&s, &gb).is_zero());
                }
            }
            for g in &gens {
                assert!(normal_form(g, &gb).is_zero());
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error_not_an_answer() {
        let r = Ring::new(Field::new(13, 2).unwrap(), &["x", "y", "z"]);
        let gens = [
            parse_poly(&r, "x^3 - y*z + 1").unwrap(),
            parse_poly(&r, "y^3 - x*z + 2").unwrap(),
            parse_poly(&r, "z^3 - x*y + 3").unwrap(),
        ];
        let tiny = Budget { max_spairs: 1 };
        match buchberger(&r, &gens, MonomialOrder::Lex, tiny) {
            Err(CoreError::BudgetExceeded { spairs }) => assert!(spairs > 0),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn normal_forms_are_linear_over_the_quotient() {
        let r = xy_ring();
        let gens = [parse_poly(&r, "x^2 - y").unwrap()];
        let gb = buchberger(&r, &gens, MonomialOrder::Grevlex, Budget::DEFAULT).unwrap();
        let a = parse_poly(&r, "x^3 + x").unwrap();
        let b = parse_poly(&r, "x^2*y - 7").unwrap();
        let lhs = normal_form(&a.add_ref(&b), &gb);
        let rhs = normal_form(&a, &gb).add_ref(&normal_form(&b, &gb));
        assert_eq!(lhs, rhs);
    }
}
