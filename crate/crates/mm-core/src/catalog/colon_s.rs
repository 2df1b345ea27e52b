//! Closed forms for the colon ideals of J by s, c02, f, and powers of b01,
//! the level-one branch ideals those colons reduce to, and the probe
//! elements for the non-radical and bounded-degree membership checks.

use alloc::vec;
use alloc::vec::Vec;

use crate::ideal::Ideal;
use crate::poly::Poly;

use super::Catalog;

impl Catalog {
    /// (b01^d - b02^d, b04^d - b03^d, b01 - b04).
    fn level_zero_diffs(&self) -> Vec<Poly> {
        let d = self.d();
        vec![
            &self.b(0, 1).pow(d) - &self.b(0, 2).pow(d),
            &self.b(0, 4).pow(d) - &self.b(0, 3).pow(d),
            &self.b(0, 1) - &self.b(0, 4),
        ]
    }

    /// b01 b03^d - b04 b02^d.
    fn cross_diff(&self) -> Poly {
        let d = self.d();
        &(&self.b(0, 1) * &self.b(0, 3).pow(d)) - &(&self.b(0, 4) * &self.b(0, 2).pow(d))
    }

    /// b02 - b_{1i} b03 for i = 1..4.
    fn binding_bodies(&self) -> Vec<Poly> {
        (1..=4)
            .map(|i| &self.b(0, 2) - &(&self.b(1, i) * &self.b(0, 3)))
            .collect()
    }

    /// b_{1i} - b_{1j} for 1 <= i < j <= 4.
    fn pair_bodies(&self) -> Vec<Poly> {
        let mut out = Vec::new();
        for i in 1..=4u32 {
            for j in (i + 1)..=4 {
                out.push(&self.b(1, i) - &self.b(1, j));
            }
        }
        out
    }

    /// b01 - b_{1i}^d b04 for i = 1..4.
    fn shift_bodies(&self) -> Vec<Poly> {
        let d = self.d();
        (1..=4)
            .map(|i| &self.b(0, 1) - &(&self.b(1, i).pow(d) * &self.b(0, 4)))
            .collect()
    }

    /// 1 - b_{1i}^d for i = 1..4.
    fn unit_bodies(&self) -> Vec<Poly> {
        let d = self.d();
        (1..=4)
            .map(|i| &self.scalar(1) - &self.b(1, i).pow(d))
            .collect()
    }

    /// The c_{1i}-weighted rows c_{1i}(b02 - b_{1i} b03),
    /// c_{1i}c_{1j}(b_{1i} - b_{1j}), and c_{1i}(b01 - b_{1i}^d b04),
    /// each pre-multiplied by `weight`.
    fn weighted_level_one_rows(&self, weight: &Poly, include_shifts: bool) -> Vec<Poly> {
        let mut out = Vec::new();
        for (i, body) in self.binding_bodies().into_iter().enumerate() {
            out.push(&(weight * &self.c(1, i as u32 + 1)) * &body);
        }
        let mut pair = self.pair_bodies().into_iter();
        for i in 1..=4u32 {
            for j in (i + 1)..=4 {
                let body = pair.next().expect("six pair bodies");
                out.push(&(&(weight * &self.c(1, i)) * &self.c(1, j)) * &body);
            }
        }
        if include_shifts {
            for (i, body) in self.shift_bodies().into_iter().enumerate() {
                out.push(&(weight * &self.c(1, i as u32 + 1)) * &body);
            }
        }
        out
    }

    /// (c01 - c02 b01^d, c03 - c02, c04 - c02 b04^d): the level-zero ties
    /// rewritten so that every c_{0i} is an explicit multiple of c02.
    pub fn substituted_head(&self) -> Ideal {
        let d = self.d();
        self.ideal(vec![
            &self.c(0, 1) - &(&self.c(0, 2) * &self.b(0, 1).pow(d)),
            &self.c(0, 3) - &self.c(0, 2),
            &self.c(0, 4) - &(&self.c(0, 2) * &self.b(0, 4).pow(d)),
        ])
    }

    /// The six ideals whose intersection equals J + (s): the plane (s, f),
    /// the non-minimal factor (s, c01, c04, c02, c03), the components of
    /// P_{-2} and P_{-4}, the q_1 intersection, and P_{-3}.
    pub fn j_plus_s_factors(&self) -> Vec<Ideal> {
        vec![
            self.ideal(vec![self.s(), self.f()]),
            self.ideal(vec![
                self.s(),
                self.c(0, 1),
                self.c(0, 4),
                self.c(0, 2),
                self.c(0, 3),
            ]),
            self.p_neg2_component(),
            self.p_neg4_intersection(),
            self.q1_union(),
            self.p_neg3_ideal(),
        ]
    }

    /// The closed form of J : s.
    pub fn j_colon_s(&self) -> Ideal {
        let d = self.d();
        let c02 = self.c(0, 2);
        let c02_sq = &c02 * &c02;
        let fc02 = &self.f() * &c02;
        let mut gens = self.substituted_head().generators().to_vec();
        gens.extend(self.j2().generators().iter().cloned());
        gens.push(&c02 * &(&(&self.f() * &self.b(0, 1).pow(d)) - &self.s()));
        for diff in self.level_zero_diffs() {
            gens.push(&fc02 * &diff);
            gens.push(&c02_sq * &diff);
        }
        gens.push(&c02 * &self.cross_diff());
        gens.extend(self.weighted_level_one_rows(&c02, true));
        for (i, body) in self.unit_bodies().into_iter().enumerate() {
            gens.push(&(&c02_sq * &self.c(1, i as u32 + 1)) * &body);
        }
        self.ideal(gens)
    }

    /// The closed form of J : sc02.
    pub fn j_colon_s_c02(&self) -> Ideal {
        let d = self.d();
        let c02 = self.c(0, 2);
        let one = self.scalar(1);
        let mut gens = self.substituted_head().generators().to_vec();
        gens.extend(self.j2_prime_over_c02().generators().iter().cloned());
        gens.push(&(&self.f() * &self.b(0, 1).pow(d)) - &self.s());
        for diff in self.level_zero_diffs() {
            gens.push(&self.f() * &diff);
            gens.push(&c02 * &diff);
        }
        gens.push(self.cross_diff());
        gens.extend(self.weighted_level_one_rows(&one, true));
        for (i, body) in self.unit_bodies().into_iter().enumerate() {
            gens.push(&(&c02 * &self.c(1, i as u32 + 1)) * &body);
        }
        self.ideal(gens)
    }

    /// The closed form of J : sc02^2.
    pub fn j_colon_s_c02_sq(&self) -> Ideal {
        let d = self.d();
        let one = self.scalar(1);
        let mut gens = self.substituted_head().generators().to_vec();
        gens.extend(self.j2_prime_over_c02().generators().iter().cloned());
        gens.push(&(&self.f() * &self.b(0, 1).pow(d)) - &self.s());
        gens.extend(self.level_zero_diffs());
        gens.extend(self.weighted_level_one_rows(&one, false));
        for (i, body) in self.unit_bodies().into_iter().enumerate() {
            gens.push(&self.c(1, i as u32 + 1) * &body);
        }
        self.ideal(gens)
    }

    /// The closed form of (J : sc02) + (c02).
    pub fn j_colon_s_c02_plus_c02(&self) -> Ideal {
        let d = self.d();
        let one = self.scalar(1);
        let mut gens = self.aux_c(0).expect("C_0 exists").generators().to_vec();
        gens.extend(self.j2_prime_over_c02().generators().iter().cloned());
        gens.push(&(&self.f() * &self.b(0, 1).pow(d)) - &self.s());
        for diff in self.level_zero_diffs() {
            gens.push(&self.f() * &diff);
        }
        gens.push(self.cross_diff());
        gens.extend(self.weighted_level_one_rows(&one, true));
        self.ideal(gens)
    }

    /// The closed form of ((J : sc02) + (c02)) : f.
    pub fn j_colon_s_c02_plus_c02_colon_f(&self) -> Ideal {
        let d = self.d();
        let one = self.scalar(1);
        let mut gens = self.aux_c(0).expect("C_0 exists").generators().to_vec();
        gens.extend(self.j2_prime_over_c02().generators().iter().cloned());
        gens.push(&(&self.f() * &self.b(0, 1).pow(d)) - &self.s());
        gens.extend(self.level_zero_diffs());
        gens.extend(self.weighted_level_one_rows(&one, true));
        self.ideal(gens)
    }

    /// The closed form of (J : sc02) + (c02, f).
    pub fn j_colon_s_c02_plus_c02_f(&self) -> Ideal {
        let one = self.scalar(1);
        let mut gens = self.aux_c(0).expect("C_0 exists").generators().to_vec();
        gens.extend(self.j2_prime_over_c02().generators().iter().cloned());
        gens.push(self.s());
        gens.push(self.f());
        gens.push(self.cross_diff());
        gens.extend(self.weighted_level_one_rows(&one, true));
        self.ideal(gens)
    }

    /// The branch ideal over `head` (either C_0 or the substituted head):
    /// head + J_2'' + (s - f b01^d) + the level-zero differences + the
    /// c11-weighted level-one rows. J : sc02^2 b01^d has this form over the
    /// substituted head, and ((J : sc02) + (c02)) : f b01^d over C_0.
    pub fn branch_ideal(&self, head: &Ideal) -> Ideal {
        let d = self.d();
        let c11 = self.c(1, 1);
        let c11_sq = &c11 * &c11;
        let mut gens = head.generators().to_vec();
        gens.extend(self.j2_double_prime().generators().iter().cloned());
        gens.push(&self.s() - &(&self.f() * &self.b(0, 1).pow(d)));
        gens.extend(self.level_zero_diffs());
        for body in self.binding_bodies() {
            gens.push(&c11 * &body);
        }
        for body in self.pair_bodies() {
            gens.push(&c11_sq * &body);
        }
        for body in self.unit_bodies() {
            gens.push(&c11 * &body);
        }
        self.ideal(gens)
    }

    /// s c02 (b01 - b04): an element of the radical of J that is not in J,
    /// witnessing that J is not a radical ideal.
    pub fn non_radical_probe(&self) -> Poly {
        &(&self.s() * &self.c(0, 2)) * &(&self.b(0, 1) - &self.b(0, 4))
    }

    /// c02 b01^d c11 ... c_{n-2,1} (c_{n-1,1} - c_{n-1,4}): a member of
    /// J : s whose product with s has a representation over the generators
    /// of J with coefficients of degree at most 2d+1.
    pub fn membership_probe(&self) -> Poly {
        let n = self.n();
        let mut head = &self.c(0, 2) * &self.b(0, 1).pow(self.d());
        for k in 1..=(n - 2) {
            head = &head * &self.c(k, 1);
        }
        &head * &(&self.c(n - 1, 1) - &self.c(n - 1, 4))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Catalog, MMParams};
    use crate::field::Field;
    use crate::ops::{equals, product, sum, Ctx};
    use crate::parse::parse_poly;
    use crate::poly::Poly;
    use alloc::vec;

    fn catalog(n: u32, d: u32) -> Catalog {
        let order = MMParams {
            n,
            d,
            field: Field::new(13, 1).unwrap(),
        }
        .root_order()
        .unwrap();
        let params = MMParams::new(n, d, Field::new(13, order).unwrap()).unwrap();
        Catalog::new(params).unwrap()
    }

    fn p(cat: &Catalog, text: &str) -> Poly {
        parse_poly(cat.ring(), text).unwrap()
    }

    #[test]
    fn closed_form_generator_counts_at_2_2() {
        let cat = catalog(2, 2);
        assert_eq!(cat.j_colon_s().generators().len(), 34);
        assert_eq!(cat.j_colon_s_c02().generators().len(), 34);
        assert_eq!(cat.j_colon_s_c02_sq().generators().len(), 26);
        assert_eq!(cat.j_colon_s_c02_plus_c02().generators().len(), 28);
        assert_eq!(cat.j_colon_s_c02_plus_c02_colon_f().generators().len(), 27);
        assert_eq!(cat.j_colon_s_c02_plus_c02_f().generators().len(), 26);
        assert_eq!(cat.branch_ideal(&cat.substituted_head()).generators().len(), 26);
        assert_eq!(cat.branch_ideal(&cat.aux_c(0).unwrap()).generators().len(), 27);
        assert_eq!(cat.j_plus_s_factors().len(), 6);
    }

    #[test]
    fn closed_form_generator_counts_at_3_2() {
        let cat = catalog(3, 2);
        assert_eq!(cat.j_colon_s().generators().len(), 42);
        assert_eq!(cat.j_colon_s_c02().generators().len(), 42);
        assert_eq!(cat.j_colon_s_c02_sq().generators().len(), 34);
        assert_eq!(cat.j_colon_s_c02_plus_c02().generators().len(), 36);
        assert_eq!(cat.j_colon_s_c02_plus_c02_colon_f().generators().len(), 35);
        assert_eq!(cat.j_colon_s_c02_plus_c02_f().generators().len(), 34);
        assert_eq!(cat.branch_ideal(&cat.aux_c(0).unwrap()).generators().len(), 35);
    }

    #[test]
    fn head_and_probes_verbatim() {
        let cat = catalog(2, 2);
        let head = cat.substituted_head();
        assert_eq!(head.generators()[0], p(&cat, "c01 - c02*b01^2"));
        assert_eq!(head.generators()[1], p(&cat, "c03 - c02"));
        assert_eq!(head.generators()[2], p(&cat, "c04 - c02*b04^2"));
        assert_eq!(cat.non_radical_probe(), p(&cat, "s*c02*(b01 - b04)"));
        assert_eq!(cat.membership_probe(), p(&cat, "c02*b01^2*(c11 - c14)"));
        let cat3 = catalog(3, 2);
        assert_eq!(cat3.membership_probe(), p(&cat3, "c02*b01^2*c11*(c21 - c24)"));
    }

    #[test]
    fn colon_s_rows_verbatim_at_2_2() {
        let cat = catalog(2, 2);
        let gens = cat.j_colon_s().generators().to_vec();
        assert!(gens.contains(&p(&cat, "c02*(f*b01^2 - s)")));
        assert!(gens.contains(&p(&cat, "f*c02*(b01^2 - b02^2)")));
        assert!(gens.contains(&p(&cat, "c02^2*(b01 - b04)")));
        assert!(gens.contains(&p(&cat, "c02*(b01*b03^2 - b04*b02^2)")));
        assert!(gens.contains(&p(&cat, "c02*c11*(b02 - b11*b03)")));
        assert!(gens.contains(&p(&cat, "c02*c11*c12*(b11 - b12)")));
        assert!(gens.contains(&p(&cat, "c02*c14*(b01 - b14^2*b04)")));
        assert!(gens.contains(&p(&cat, "c02^2*c13*(1 - b13^2)")));
        let sq = cat.j_colon_s_c02_sq().generators().to_vec();
        assert!(sq.contains(&p(&cat, "b01^2 - b02^2")));
        assert!(sq.contains(&p(&cat, "c13*(1 - b13^2)")));
        let last = cat.j_colon_s_c02_plus_c02_f().generators().to_vec();
        assert!(last.contains(&p(&cat, "s")));
        assert!(last.contains(&p(&cat, "f")));
        assert!(last.contains(&p(&cat, "c12*(b01 - b12^2*b04)")));
    }

    #[test]
    fn shadow_presentations_generate_the_same_ideal() {
        let cx = Ctx::default();
        for (n, d) in [(2u32, 2u32), (3, 2)] {
            let cat = catalog(n, d);
            let closed = sum(
                &cat.aux_d(1).unwrap(),
                &product(&cat.ideal(vec![cat.c(1, 1)]), &cat.j2_triple_prime()),
            );
            assert!(
                equals(&cx, &cat.j2_double_prime(), &closed).unwrap(),
                "shadow closed form differs at ({n},{d})"
            );
        }
    }

    #[test]
    fn shadow_bridges_to_the_c02_quotient() {
        let cx = Ctx::default();
        for (n, d) in [(2u32, 2u32), (3, 2)] {
            let cat = catalog(n, d);
            let tie = cat.ideal(vec![&cat.b(0, 1) - &cat.b(0, 4)]);
            let lhs = sum(&cat.j2_prime_over_c02(), &tie);
            let scaled = product(
                &cat.j2_double_prime(),
                &cat.ideal(vec![cat.b(0, 1).pow(cat.d())]),
            );
            let rhs = sum(&scaled, &tie);
            assert!(
                equals(&cx, &lhs, &rhs).unwrap(),
                "b01^d bridge fails at ({n},{d})"
            );
        }
    }
}
