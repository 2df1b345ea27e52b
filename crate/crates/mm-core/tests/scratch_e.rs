//! Scratch cross-check for the (3, 2) colon gap; not part of the suite.

use mm_core::catalog::Catalog;
use mm_core::groebner::{normal_form, Budget};
use mm_core::ops::{self, Ctx};
use mm_core::order::MonomialOrder;
use mm_core::parse::parse_poly;
use mm_core::catalog::MMParams;
use std::collections::{HashSet, VecDeque};

/// Breadth-first connectivity of two monomials under difference moves
/// u <-> v (as exponent vectors), capped at total degree `cap`.
fn connected(start: &[u16], goal: &[u16], moves: &[(Vec<u16>, Vec<u16>)], cap: u32) -> bool {
    let apply = |w: &[u16], from: &[u16], to: &[u16]| -> Option<Vec<u16>> {
        let mut out = w.to_vec();
        for i in 0..w.len() {
            out[i] = out[i].checked_sub(from[i])?;
        }
        let mut deg = 0u32;
        for i in 0..w.len() {
            out[i] += to[i];
            deg += u32::from(out[i]);
        }
        (deg <= cap).then_some(out)
    };
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    let mut queue: VecDeque<Vec<u16>> = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(w) = queue.pop_front() {
        if w == goal {
            return true;
        }
        assert!(seen.len() < 4_000_000, "rewriting component too large");
        for (u, v) in moves {
            for (from, to) in [(u, v), (v, u)] {
                if let Some(next) = apply(&w, from, to) {
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    false
}

#[test]
#[ignore = "scratch"]
fn cross_check_colon_gap_at_3_2() {
    let params = MMParams::with_default_field(3, 2).unwrap();
    let cat = Catalog::new(params).unwrap();
    let j = cat.ideal_j();
    let jhat = cat.j_hat();
    let x = cat.x_multiplier();
    let e = parse_poly(cat.ring(), "c13*b04*(c02*b02*b03 - c04*b13)").unwrap();
    let xe = &x * &e;
    let cx = Ctx::new(Budget::default());

    // Route 1: grevlex Buchberger.
    assert!(ops::is_member(&cx, &xe, &j).unwrap(), "grevlex: x*e not in J");
    assert!(!ops::is_member(&cx, &e, &jhat).unwrap(), "grevlex: e in jhat");
    assert!(!ops::is_member(&cx, &e, &j).unwrap(), "grevlex: e in J itself");

    // Route 2: lex Buchberger on the smaller closed-form ideal.
    let gh = jhat.groebner(MonomialOrder::Lex, Budget::default()).unwrap();
    assert!(!normal_form(&e, &gh).is_zero(), "lex: e in jhat");
    println!("route 2 ok");

    // Route 3: pure monomial rewriting, no Buchberger involved. x*e expands
    // into (A - B)*(C - D); it lies in the binomial ideal J when AC ~ AD and
    // BC ~ BD under J's difference moves, each path telescoping to a member.
    let deg = xe.total_deg();
    let moves: Vec<(Vec<u16>, Vec<u16>)> = j
        .generators()
        .iter()
        .map(|g| {
            assert_eq!(g.num_terms(), 2, "J generator is not a binomial");
            let ts = g.terms();
            (ts[0].0.exps().to_vec(), ts[1].0.exps().to_vec())
        })
        .collect();
    let a = parse_poly(cat.ring(), "f^3*c21*b13*b21").unwrap();
    let b = parse_poly(cat.ring(), "f^3*c21*b13*b22").unwrap();
    let c = parse_poly(cat.ring(), "c02*b02*b03*b04*c13").unwrap();
    let dd = parse_poly(cat.ring(), "c04*b04*c13*b13").unwrap();
    let word = |p: &mm_core::poly::Poly, q: &mm_core::poly::Poly| -> Vec<u16> {
        let prod = p * q;
        assert_eq!(prod.num_terms(), 1);
        prod.terms()[0].0.exps().to_vec()
    };
    let ac = word(&a, &c);
    let ad = word(&a, &dd);
    let bc = word(&b, &c);
    let bd = word(&b, &dd);
    let mut proven = false;
    for cap in [deg, deg + 2, deg + 4, deg + 6, deg + 8] {
        let ac_ad = connected(&ac, &ad, &moves, cap);
        let bc_bd = connected(&bc, &bd, &moves, cap);
        let ac_bc = connected(&ac, &bc, &moves, cap);
        let ad_bd = connected(&ad, &bd, &moves, cap);
        println!(
            "cap {cap}: AC~AD {ac_ad}  BC~BD {bc_bd}  AC~BC {ac_bc}  AD~BD {ad_bd}"
        );
        if (ac_ad && bc_bd) || (ac_bc && ad_bd) {
            proven = true;
            break;
        }
    }
    assert!(proven, "rewriting: no pairing connected up to cap {}", deg + 8);
    println!("route 3 ok: a zero-sum pairing is connected under J's moves");

    // And the computed colon really picks e up.
    let colon = ops::colon_poly(&cx, &j, &x).unwrap();
    assert!(ops::is_member(&cx, &e, &colon).unwrap(), "e not in computed J : x");
    println!("all routes agree: e is in J : x but not in the closed form");
}
