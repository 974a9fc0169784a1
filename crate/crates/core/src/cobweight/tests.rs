use proptest::prelude::*;

use super::*;

fn word_matrix(word: &[u8]) -> Mat2 {
    word.iter().fold(IDENTITY, |acc, g| {
        let m = match g % 3 {
            0 => S_GEN,
            1 => T_GEN,
            _ => mat_inv(&T_GEN),
        };
        mat_mul(&acc, &m)
    })
}

fn line_strategy() -> impl Strategy<Value = Line> {
    (-5i64..=5, -5i64..=5)
        .prop_filter("nonzero", |(x, y)| *x != 0 || *y != 0)
        .prop_map(|(x, y)| Line::new([x, y]).unwrap())
}

fn sl2_strategy() -> impl Strategy<Value = Mat2> {
    prop::collection::vec(0u8..3, 0..=6).prop_map(|w| word_matrix(&w))
}

/// Even weight for a mapping cylinder, offset by an even shift.
fn even_cylinder(m: Mat2, s: Line, t: Line, shift: i64) -> TorusCobordism {
    let mut n = TorusCobordism::new(m, 0, s, t).unwrap();
    if !is_even(&n.profile(), 0).unwrap() {
        n.weight = 1;
    }
    n.weight += 2 * shift;
    n
}

fn line_lag(l: Line) -> Lagrangian {
    Lagrangian::line(l.0).unwrap()
}

/// Lagrangian of Q^4 obtained by moving the standard one by symplectic transvections.
fn lagrangian4(moves: &[(Vec<i64>, i64)]) -> Lagrangian {
    let space = SymplecticSpace::standard(2);
    let mut basis = vec![vec![1, 0, 0, 0], vec![0, 0, 1, 0]];
    for (u, k) in moves {
        for v in basis.iter_mut() {
            let c = k * space.omega(u, v);
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi += c * ui;
            }
        }
    }
    Lagrangian::new(&space, basis).unwrap()
}

fn moves_strategy() -> impl Strategy<Value = Vec<(Vec<i64>, i64)>> {
    prop::collection::vec((prop::collection::vec(-1i64..=1, 4), -2i64..=2), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn maslov_antisymmetric_and_degenerate(a in line_strategy(), b in line_strategy(), c in line_strategy()) {
        let (a, b, c) = (line_lag(a), line_lag(b), line_lag(c));
        let t = maslov(&a, &b, &c).unwrap();
        prop_assert!(t.abs() <= 1);
        prop_assert_eq!(maslov(&b, &a, &c).unwrap(), -t);
        prop_assert_eq!(maslov(&a, &c, &b).unwrap(), -t);
        prop_assert_eq!(maslov(&c, &b, &a).unwrap(), -t);
        prop_assert_eq!(maslov(&b, &c, &a).unwrap(), t);
        prop_assert_eq!(maslov(&a, &a, &c).unwrap(), 0);
        prop_assert_eq!(maslov(&a, &b, &a).unwrap(), 0);
    }

    #[test]
    fn maslov_cocycle_in_q2(a in line_strategy(), b in line_strategy(), c in line_strategy(), d in line_strategy()) {
        let [a, b, c, d] = [a, b, c, d].map(line_lag);
        let m = |x: &Lagrangian, y: &Lagrangian, z: &Lagrangian| maslov(x, y, z).unwrap();
        prop_assert_eq!(m(&a, &b, &c) - m(&a, &b, &d) + m(&a, &c, &d) - m(&b, &c, &d), 0);
    }

    #[test]
    fn maslov_cocycle_in_q4(m1 in moves_strategy(), m2 in moves_strategy(), m3 in moves_strategy(), m4 in moves_strategy()) {
        let [a, b, c, d] = [m1, m2, m3, m4].map(|m| lagrangian4(&m));
        let m = |x: &Lagrangian, y: &Lagrangian, z: &Lagrangian| maslov(x, y, z).unwrap();
        prop_assert!(m(&a, &b, &c).abs() <= 2);
        prop_assert_eq!(m(&b, &a, &c), -m(&a, &b, &c));
        prop_assert_eq!(m(&a, &a, &c), 0);
        prop_assert_eq!(m(&a, &b, &c) - m(&a, &b, &d) + m(&a, &c, &d) - m(&b, &c, &d), 0);
    }

    #[test]
    fn compose_is_associative(
        ms in prop::collection::vec(sl2_strategy(), 3),
        ls in prop::collection::vec(line_strategy(), 4),
        ws in prop::collection::vec(-3i64..=3, 3),
    ) {
        let n: Vec<TorusCobordism> = (0..3)
            .map(|i| TorusCobordism::new(ms[i], ws[i], ls[i], ls[i + 1]).unwrap())
            .collect();
        for conv in [MaslovConvention::Walker, MaslovConvention::Turaev] {
            let left = compose_with(&n[2], &compose_with(&n[1], &n[0], conv).unwrap(), conv).unwrap();
            let right = compose_with(&compose_with(&n[2], &n[1], conv).unwrap(), &n[0], conv).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn composite_of_even_cylinders_is_even(
        m1 in sl2_strategy(), m2 in sl2_strategy(),
        ls in prop::collection::vec(line_strategy(), 3),
        s1 in -2i64..=2, s2 in -2i64..=2,
    ) {
        let a = even_cylinder(m1, ls[0], ls[1], s1);
        let b = even_cylinder(m2, ls[1], ls[2], s2);
        let c = compose(&b, &a).unwrap();
        prop_assert!(is_even(&c.profile(), c.weight).unwrap());
        prop_assert!(is_targeted(&c.profile()));
    }

    #[test]
    fn capped_form_agrees_on_cylinders(m in sl2_strategy(), s in line_strategy(), t in line_strategy(), w in -4i64..=4) {
        let n = TorusCobordism::new(m, w, s, t).unwrap();
        let k = CappedBetti { beta0_target: 1, beta1_target: 2, beta0_k: 1, beta1_k: n.capped_beta1() };
        prop_assert_eq!(is_even(&n.profile(), w).unwrap(), is_even_capped(&k, w).unwrap());
    }

    #[test]
    fn closure_is_cyclic(m1 in sl2_strategy(), m2 in sl2_strategy(), l1 in line_strategy(), l2 in line_strategy(), w1 in -2i64..=2, w2 in -2i64..=2) {
        let a = TorusCobordism::new(m1, w1, l1, l2).unwrap();
        let b = TorusCobordism::new(m2, w2, l2, l1).unwrap();
        prop_assert_eq!(
            closure_weight(&compose(&b, &a).unwrap()).unwrap(),
            closure_weight(&compose(&a, &b).unwrap()).unwrap()
        );
    }

    #[test]
    fn closure_of_even_cylinder_is_even(m in sl2_strategy(), l in line_strategy(), s in -2i64..=2) {
        let n = even_cylinder(m, l, l, s);
        let w = closure_weight(&n).unwrap();
        let b1 = bundle_beta1(&m);
        prop_assert!(is_even(&HomologyProfile::closed(1, b1), w).unwrap());
    }

    #[test]
    fn bundle_cover_defect_parity(m in sl2_strategy(), d in 1u32..=4, w in -2i64..=2) {
        let base = TorusCobordism::new(m, w, Line::meridian(), Line::meridian()).unwrap();
        let mut cover = base.clone();
        for _ in 1..d {
            cover = compose(&base, &cover).unwrap();
        }
        let wb = closure_weight(&base).unwrap();
        let wc = closure_weight(&cover).unwrap();
        let def = defect(d as i64, wb, wc);
        if is_even(&HomologyProfile::closed(1, bundle_beta1(&m)), wb).unwrap() {
            prop_assert!(defect_parity(d as i64, bundle_beta1(&m), bundle_beta1(&cover.monodromy), def));
        }
    }
}

#[test]
fn closure_independent_of_lagrangian_choice() {
    // The same bundle cut along the same torus with different lines on both ends.
    for w in [vec![1u8], vec![0], vec![0, 1], vec![1, 1, 0, 2], vec![]] {
        let m = word_matrix(&w);
        let mut seen = Vec::new();
        for l in [[1, 0], [0, 1], [1, 1], [2, -1]] {
            let l = Line::new(l).unwrap();
            let id_to = TorusCobordism::new(IDENTITY, 0, Line::meridian(), l).unwrap();
            let id_from = TorusCobordism::new(IDENTITY, 0, l, Line::meridian()).unwrap();
            let n = TorusCobordism::cylinder(m, 0).unwrap();
            let moved = compose(&id_to, &compose(&n, &id_from).unwrap()).unwrap();
            seen.push(closure_weight(&moved).unwrap() - closure_weight(&n).unwrap());
        }
        assert!(seen.iter().all(|&x| x == 0), "word {w:?}: {seen:?}");
    }
}
