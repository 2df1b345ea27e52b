//! Membership certificates with degree bounds.
//!
//! `bounded_degree_representation(f, I, D)` looks for coefficients a_i of
//! total degree at most D with f = sum a_i g_i over the listed generators.
//!
//! When every generator is a difference of two monomials (as in the J
//! family), the search is a graph problem: monomials are nodes, m*(u - v)
//! is an edge between m*u and m*v, and f lies in the span of the bounded
//! multiples exactly when its coefficients sum to zero on every connected
//! component. A spanning forest then reconstructs explicit coefficients.
//! General inputs fall back to a dense Macaulay-style linear system, which
//! also serves as an independent membership oracle for testing the
//! Groebner path.

use crate::error::CoreError;
use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::{monomials_up_to, Monomial};
use crate::order::MonomialOrder;
use crate::poly::Poly;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

/// Node guard for the monomial graph.
const MAX_GRAPH_NODES: usize = 1 << 20;
/// Entry guard for the dense solver.
const MAX_DENSE_ENTRIES: usize = 1 << 26;

/// Coefficients a_i with f = sum a_i g_i and deg a_i <= max_multiplier_deg,
/// aligned with `i.generators()`; `None` when no such representation exists.
pub fn bounded_degree_representation(
    f: &Poly,
    i: &Ideal,
    max_multiplier_deg: u32,
) -> Result<Option<Vec<Poly>>, CoreError> {
    represent(f, i, Some(max_multiplier_deg), None)
}

/// Membership in the span of generator multiples with product degree at
/// most `max_product_deg`, decided by dense linear algebra. Independent of
/// the Groebner machinery, so it can serve as its oracle.
pub fn truncated_membership(
    f: &Poly,
    i: &Ideal,
    max_product_deg: u32,
) -> Result<bool, CoreError> {
    Ok(dense_solve(f, i, None, Some(max_product_deg))?.is_some())
}

fn represent(
    f: &Poly,
    i: &Ideal,
    mult_cap: Option<u32>,
    prod_cap: Option<u32>,
) -> Result<Option<Vec<Poly>>, CoreError> {
    if f.is_zero() {
        return Ok(Some(alloc::vec![Poly::zero(i.ring()); i.num_gens()]));
    }
    if is_difference_family(i) {
        graph_solve(f, i, mult_cap, prod_cap)
    } else {
        dense_solve(f, i, mult_cap, prod_cap)
    }
}

/// Every generator is c*(u - v) for monomials u != v.
fn is_difference_family(i: &Ideal) -> bool {
    !i.generators().is_empty()
        && i.generators().iter().all(|g| {
            g.num_terms() == 2 && {
                let p = g.ring().field().modulus();
                let ts = g.terms();
                (ts[0].1 + ts[1].1) % p == 0
            }
        })
}

struct Edge {
    /// Node carrying +1 (the scaled leading monomial m*u).
    pos: usize,
    /// Node carrying -1 (m*v).
    neg: usize,
    gen: usize,
    mult: Monomial,
}

fn graph_solve(
    f: &Poly,
    i: &Ideal,
    mult_cap: Option<u32>,
    prod_cap: Option<u32>,
) -> Result<Option<Vec<Poly>>, CoreError> {
    let ring = i.ring();
    let field = *ring.field();
    // Normalize each generator to u - v with u the grevlex lead; remember
    // the scale factor to divide out of the final coefficients.
    let mut pairs: Vec<(Monomial, Monomial, u64)> = Vec::new();
    for g in i.generators() {
        let (u, cu) = g.leading(MonomialOrder::Grevlex).expect("nonzero");
        let other = g
            .terms()
            .iter()
            .find(|(m, _)| m != u)
            .expect("two distinct terms");
        pairs.push((u.clone(), other.0.clone(), cu));
    }

    // Interning a monomial also enqueues it for closure exploration.
    fn intern(
        m: &Monomial,
        nodes: &mut Vec<Monomial>,
        ids: &mut BTreeMap<Vec<u16>, usize>,
        queue: &mut Vec<usize>,
    ) -> usize {
        if let Some(&id) = ids.get(m.exps()) {
            return id;
        }
        let id = nodes.len();
        ids.insert(m.exps().to_vec(), id);
        nodes.push(m.clone());
        queue.push(id);
        id
    }

    let mut node_ids: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
    let mut nodes: Vec<Monomial> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    for (m, _) in f.terms() {
        intern(m, &mut nodes, &mut node_ids, &mut queue);
    }

    let within = |m: &Monomial, gen: usize| -> bool {
        let (u, v, _) = &pairs[gen];
        if let Some(cap) = mult_cap {
            if m.deg() > cap {
                return false;
            }
        }
        if let Some(cap) = prod_cap {
            if m.deg() + u.deg().max(v.deg()) > cap {
                return false;
            }
        }
        true
    };

    let mut edges: Vec<Edge> = Vec::new();
    let mut seen_edges: BTreeSet<(usize, Vec<u16>)> = BTreeSet::new();
    let mut head = 0;
    while head < queue.len() {
        let id = queue[head];
        head += 1;
        let w = nodes[id].clone();
        for (k, (u, v, _)) in pairs.iter().enumerate() {
            for (from, to) in [(u, v), (v, u)] {
                if let Some(m) = from.try_div(&w) {
                    if !within(&m, k) {
                        continue;
                    }
                    if !seen_edges.insert((k, m.exps().to_vec())) {
                        continue;
                    }
                    let other = m.mul(to);
                    let oid = intern(&other, &mut nodes, &mut node_ids, &mut queue);
                    if nodes.len() > MAX_GRAPH_NODES {
                        return Err(CoreError::TooLarge(format!(
                            "monomial graph exceeded {MAX_GRAPH_NODES} nodes"
                        )));
                    }
                    // pos end is m*u regardless of discovery direction.
                    let (pos, neg) = if core::ptr::eq(from, u) {
                        (id, oid)
                    } else {
                        (oid, id)
                    };
                    edges.push(Edge {
                        pos,
                        neg,
                        gen: k,
                        mult: m,
                    });
                }
            }
        }
    }

    // Component sums of f's coefficients must vanish.
    let mut x = alloc::vec![0u64; nodes.len()];
    for (m, c) in f.terms() {
        x[node_ids[m.exps()]] = *c;
    }
    let (forest, component) = spanning_forest(nodes.len(), &edges);
    let mut comp_sum: BTreeMap<usize, u64> = BTreeMap::new();
    for (id, &c) in x.iter().enumerate() {
        let e = comp_sum.entry(component[id]).or_insert(0);
        *e = field.add(*e, c);
    }
    if comp_sum.values().any(|&s| s != 0) {
        return Ok(None);
    }

    // Push subtree sums up the forest to get edge flows.
    let mut need = x;
    let mut coeffs = alloc::vec![Poly::zero(ring); i.num_gens()];
    for &id in forest.order.iter().rev() {
        if let Some((eid, at_pos)) = forest.parent_edge[id] {
            let s = need[id];
            if s != 0 {
                let lambda = if at_pos { s } else { field.neg(s) };
                let e = &edges[eid];
                // lambda * m on the monic difference; undo the lead scale.
                let scale = field.mul(lambda, field.inv(pairs[e.gen].2));
                coeffs[e.gen] = coeffs[e.gen]
                    .add_ref(&Poly::monomial(ring, e.mult.clone(), scale));
                let parent = if at_pos { e.neg } else { e.pos };
                need[parent] = field.add(need[parent], s);
            }
        }
    }

    let rebuilt = coeffs
        .iter()
        .zip(i.generators())
        .fold(Poly::zero(ring), |acc, (a, g)| acc.add_ref(&a.mul_ref(g)));
    assert_eq!(&rebuilt, f, "flow reconstruction must reproduce the input");
    Ok(Some(coeffs))
}

struct Forest {
    /// BFS order, roots first.
    order: Vec<usize>,
    /// For non-roots: (edge index, whether this node is the edge's pos end).
    parent_edge: Vec<Option<(usize, bool)>>,
}

fn spanning_forest(n: usize, edges: &[Edge]) -> (Forest, Vec<usize>) {
    let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for (eid, e) in edges.iter().enumerate() {
        adj[e.pos].push(eid);
        adj[e.neg].push(eid);
    }
    let mut component = alloc::vec![usize::MAX; n];
    let mut parent_edge = alloc::vec![None; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if component[root] != usize::MAX {
            continue;
        }
        component[root] = root;
        order.push(root);
        let mut frontier = alloc::vec![root];
        while let Some(v) = frontier.pop() {
            for &eid in &adj[v] {
                let e = &edges[eid];
                let w = if e.pos == v { e.neg } else { e.pos };
                if component[w] == usize::MAX {
                    component[w] = root;
                    parent_edge[w] = Some((eid, e.pos == w));
                    order.push(w);
                    frontier.push(w);
                }
            }
        }
    }
    (
        Forest {
            order,
            parent_edge,
        },
        component,
    )
}

fn dense_solve(
    f: &Poly,
    i: &Ideal,
    mult_cap: Option<u32>,
    prod_cap: Option<u32>,
) -> Result<Option<Vec<Poly>>, CoreError> {
    let ring = i.ring();
    let field = *ring.field();
    let n = ring.num_vars();
    if i.generators().is_empty() {
        return Ok(if f.is_zero() { Some(Vec::new()) } else { None });
    }
    // Column space: (generator, multiplier monomial).
    let mut columns: Vec<(usize, Monomial)> = Vec::new();
    for (k, g) in i.generators().iter().enumerate() {
        let dg = g.total_deg();
        let cap = match (mult_cap, prod_cap) {
            (Some(m), Some(p)) => m.min(p.saturating_sub(dg)),
            (Some(m), None) => m,
            (None, Some(p)) => {
                if p < dg {
                    continue;
                }
                p - dg
            }
            (None, None) => {
                return Err(CoreError::TooLarge(
                    "representation search needs a degree cap".into(),
                ))
            }
        };
        for m in monomials_up_to(n, cap) {
            columns.push((k, m.clone()));
        }
    }
    // Row space: every monomial any column or the target can touch.
    let mut row_ids: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
    let mut col_polys: Vec<Poly> = Vec::with_capacity(columns.len());
    for (k, m) in &columns {
        let cp = i.generators()[*k].mul_term(m, 1);
        for (mm, _) in cp.terms() {
            let next = row_ids.len();
            row_ids.entry(mm.exps().to_vec()).or_insert(next);
        }
        col_polys.push(cp);
    }
    for (mm, _) in f.terms() {
        let next = row_ids.len();
        row_ids.entry(mm.exps().to_vec()).or_insert(next);
    }
    let rows = row_ids.len();
    let cols = columns.len();
    if rows
        .checked_mul(cols + 1)
        .map(|e| e > MAX_DENSE_ENTRIES)
        .unwrap_or(true)
    {
        return Err(CoreError::TooLarge(format!(
            "dense system of {rows} x {cols} entries"
        )));
    }
    let mut a = alloc::vec![0u64; rows * (cols + 1)];
    for (c, cp) in col_polys.iter().enumerate() {
        for (mm, coeff) in cp.terms() {
            a[row_ids[mm.exps()] * (cols + 1) + c] = *coeff;
        }
    }
    for (mm, coeff) in f.terms() {
        a[row_ids[mm.exps()] * (cols + 1) + cols] = *coeff;
    }
    let solution = match gauss_solve(&mut a, rows, cols, &field) {
        Some(x) => x,
        None => return Ok(None),
    };
    let mut coeffs = alloc::vec![Poly::zero(ring); i.num_gens()];
    for (ci, (k, m)) in columns.iter().enumerate() {
        if solution[ci] != 0 {
            coeffs[*k] =
                coeffs[*k].add_ref(&Poly::monomial(ring, m.clone(), solution[ci]));
        }
    }
    let rebuilt = coeffs
        .iter()
        .zip(i.generators())
        .fold(Poly::zero(ring), |acc, (c, g)| acc.add_ref(&c.mul_ref(g)));
    assert_eq!(&rebuilt, f, "solver output must reproduce the input");
    Ok(Some(coeffs))
}

/// Row reduction of the augmented system; returns one solution (free
/// variables zero) or `None` when inconsistent.
fn gauss_solve(a: &mut [u64], rows: usize, cols: usize, field: &Field) -> Option<Vec<u64>> {
    let w = cols + 1;
    let mut pivot_of_col = alloc::vec![usize::MAX; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| a[r * w + col] != 0) else {
            continue;
        };
        for k in 0..w {
            a.swap(rank * w + k, pr * w + k);
        }
        let inv = field.inv(a[rank * w + col]);
        for k in col..w {
            a[rank * w + k] = field.mul(a[rank * w + k], inv);
        }
        for r in 0..rows {
            if r != rank && a[r * w + col] != 0 {
                let factor = a[r * w + col];
                for k in col..w {
                    let sub = field.mul(factor, a[rank * w + k]);
                    a[r * w + k] = field.sub(a[r * w + k], sub);
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // Inconsistent when a zero row has a nonzero augment.
    for r in rank..rows {
        if a[r * w + cols] != 0 {
            return None;
        }
    }
    let mut x = alloc::vec![0u64; cols];
    for col in 0..cols {
        if pivot_of_col[col] != usize::MAX {
            x[col] = a[pivot_of_col[col] * w + cols];
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ops::{is_member, Ctx};
    use crate::parse::parse_poly;
    use crate::ring::Ring;
    use alloc::sync::Arc;

    fn ring3() -> Arc<Ring> {
        Ring::new(Field::new(13, 2).unwrap(), &["x", "y", "z"])
    }

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect())
    }

    #[test]
    fn binomial_graph_finds_certificates() {
        let r = ring3();
        // x - z = (x - y) + (y - z); multipliers of degree 0 suffice.
        let i = ideal(&r, &["x - y", "y - z"]);
        let f = parse_poly(&r, "x - z").unwrap();
        let rep = bounded_degree_representation(&f, &i, 0).unwrap().unwrap();
        assert_eq!(rep.len(), 2);
        let total = rep
            .iter()
            .zip(i.generators())
            .fold(Poly::zero(&r), |acc, (a, g)| acc.add_ref(&a.mul_ref(g)));
        assert_eq!(total, f);
    }

    #[test]
    fn graph_respects_the_degree_cap() {
        let r = ring3();
        // x^2 - z^2 needs degree-1 multipliers of (x - z).
        let i = ideal(&r, &["x - z"]);
        let f = parse_poly(&r, "x^2 - z^2").unwrap();
        assert!(bounded_degree_representation(&f, &i, 0)
            .unwrap()
            .is_none());
        assert!(bounded_degree_representation(&f, &i, 1)
            .unwrap()
            .is_some());
    }

    #[test]
    fn graph_rejects_nonmembers() {
        let r = ring3();
        let i = ideal(&r, &["x - y"]);
        let f = parse_poly(&r, "x + y").unwrap();
        assert!(bounded_degree_representation(&f, &i, 6)
            .unwrap()
            .is_none());
    }

    #[test]
    fn dense_path_handles_general_generators() {
        let r = ring3();
        let i = ideal(&r, &["x^2 + y", "y^2 + z"]);
        let f = parse_poly(&r, "x^2 + y^2 + y + z").unwrap();
        let rep = bounded_degree_representation(&f, &i, 2).unwrap().unwrap();
        let total = rep
            .iter()
            .zip(i.generators())
            .fold(Poly::zero(&r), |acc, (a, g)| acc.add_ref(&a.mul_ref(g)));
        assert_eq!(total, f);
        let g = parse_poly(&r, "x^2 + 1").unwrap();
        assert!(bounded_degree_representation(&g, &i, 3).unwrap().is_none());
    }

    #[test]
    fn truncated_oracle_matches_groebner_on_small_cases() {
        let cx = Ctx::default();
        let r = ring3();
        let i = ideal(&r, &["x*y - z", "y^2 - x"]);
        let inside = parse_poly(&r, "x*y^2 - x^2 + y*z - z*y").unwrap();
        let outside = parse_poly(&r, "x + y + 1").unwrap();
        assert_eq!(
            truncated_membership(&inside, &i, 8).unwrap(),
            is_member(&cx, &inside, &i).unwrap()
        );
        assert_eq!(
            truncated_membership(&outside, &i, 8).unwrap(),
            is_member(&cx, &outside, &i).unwrap()
        );
    }

    #[test]
    fn zero_target_has_the_trivial_certificate() {
        let r = ring3();
        let i = ideal(&r, &["x - y"]);
        let z = Poly::zero(&r);
        let rep = bounded_degree_representation(&z, &i, 0).unwrap().unwrap();
        assert!(rep.iter().all(|p| p.is_zero()));
    }
}
