use std::collections::HashSet;

use asinv::group_actions::{
    closed_form_small, enumerate_group, group_report, hdet, hdet_root, is_quasi_reflection, is_quasi_reflection_series, trace,
    GradedAut, GroupSpec, RootMatrix,
};
use asinv::skew_algebra::{AlgebraSpec, Mat2};
use asinv::CycloScalar;
use num_integer::Integer;
use num_traits::One;

fn gnk_pairs(max: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=max).flat_map(move |n| (1..=max).map(move |k| (n, k)))
}

#[test]
fn smallness_scan_matches_closed_form() {
    for (n, k) in gnk_pairs(12) {
        let g = GroupSpec::gnk(n, k).unwrap();
        let report = group_report(&g).unwrap();
        assert_eq!(report.is_small, k % 4 != 2 && n.gcd(&k) <= 2, "G({n},{k})");
        assert_eq!(closed_form_small(&g), Some(report.is_small));
    }
}

#[test]
fn series_oracle_agrees_with_rules() {
    for (n, k) in gnk_pairs(6) {
        let g = GroupSpec::gnk(n, k).unwrap();
        for aut in enumerate_group(&g).unwrap() {
            let rule = is_quasi_reflection(&g.ambient, &aut).unwrap();
            let plain = GradedAut::new(aut.matrix.clone()).unwrap();
            assert_eq!(is_quasi_reflection(&g.ambient, &plain).unwrap(), rule);
            assert_eq!(is_quasi_reflection_series(&g.ambient, &aut, 8).unwrap(), rule, "G({n},{k}) {}", aut.matrix);
        }
    }
    for n in 2..=6u32 {
        for a in 0..n {
            let g = GroupSpec::cyclic_raw(AlgebraSpec::quantum_root(5), n, a).unwrap();
            for aut in enumerate_group(&g).unwrap() {
                let rule = is_quasi_reflection(&g.ambient, &aut).unwrap();
                assert_eq!(is_quasi_reflection_series(&g.ambient, &aut, 8).unwrap(), rule);
            }
        }
    }
}

#[test]
fn quasi_reflection_examples() {
    let q5 = AlgebraSpec::quantum_root(5);
    let m1 = AlgebraSpec::qminus1();
    let w3 = CycloScalar::root(3, 1);
    let aut = |m: Mat2| GradedAut::new(m).unwrap();
    assert!(is_quasi_reflection(&q5, &aut(Mat2::diag(CycloScalar::one(), w3.clone()))).unwrap());
    assert!(!is_quasi_reflection(&m1, &aut(Mat2::diag(w3.clone(), w3.inv().unwrap()))).unwrap());
    assert!(is_quasi_reflection(&m1, &aut(Mat2::antidiag(CycloScalar::root(4, 1), CycloScalar::root(4, 1)))).unwrap());
    assert!(!is_quasi_reflection(&m1, &aut(Mat2::antidiag(CycloScalar::one(), CycloScalar::one()))).unwrap());
}

#[test]
fn half_n_groups_coincide() {
    for (n, k) in gnk_pairs(12) {
        if n % 4 != 2 || k % 4 != 0 {
            continue;
        }
        let big: HashSet<Mat2Key> = GroupSpec::gnk(n, k).unwrap().elements().unwrap().iter().map(key).collect();
        let small: HashSet<Mat2Key> = GroupSpec::gnk(n / 2, k).unwrap().elements().unwrap().iter().map(key).collect();
        assert_eq!(big, small, "G({n},{k}) vs G({},{k})", n / 2);
        assert_eq!(group_report(&GroupSpec::gnk(n, k).unwrap()).unwrap().reduces_to, Some((n / 2, k)));
    }
}

type Mat2Key = (bool, u32, u32);

/// Exponents at a common order large enough for every group compared here.
fn key(r: &RootMatrix) -> Mat2Key {
    let x = r.at_order(2 * 12 * 12 * 5 * 7 * 11 * 3);
    (x.anti, x.e1, x.e2)
}

#[test]
fn hdet_cases() {
    for (n, k) in gnk_pairs(12) {
        if k % 4 == 2 || n.gcd(&k) != 1 {
            continue;
        }
        let r = group_report(&GroupSpec::gnk(n, k).unwrap()).unwrap();
        assert_eq!(r.hdet_trivial, k == 1, "G({n},{k})");
        assert_eq!(r.gorenstein_flag, r.hdet_trivial);
    }
    for n in 2..=12u32 {
        for a in 1..n {
            if n.gcd(&a) != 1 {
                continue;
            }
            let r = group_report(&GroupSpec::cyclic(AlgebraSpec::quantum_root(7), n, a).unwrap()).unwrap();
            assert_eq!(r.hdet_trivial, a == n - 1, "1/{n}(1,{a})");
        }
        let r = group_report(&GroupSpec::cyclic(AlgebraSpec::jordan(), n, 1).unwrap()).unwrap();
        assert_eq!(r.hdet_trivial, n == 2);
        assert!(r.is_small);
    }
    let r = group_report(&GroupSpec::gnk(5, 1).unwrap()).unwrap();
    assert!(r.is_small && r.hdet_trivial);
    assert!(!group_report(&GroupSpec::gnk(3, 2).unwrap()).unwrap().is_small);
}

#[test]
fn hdet_multiplicative() {
    for (n, k) in gnk_pairs(6) {
        let g = GroupSpec::gnk(n, k).unwrap();
        let els = g.elements().unwrap();
        for x in &els {
            let hx = hdet(&g.ambient, &GradedAut::from_roots(*x)).unwrap();
            let (m, e) = hdet_root(&g.ambient, x).unwrap();
            assert_eq!(hx, CycloScalar::root(m, e as i64));
            for y in els.iter().step_by(3) {
                let hy = hdet(&g.ambient, &GradedAut::from_roots(*y)).unwrap();
                let hxy = hdet(&g.ambient, &GradedAut::from_roots(x.mul(y))).unwrap();
                assert_eq!(hxy, &hx * &hy);
            }
        }
    }
    let h = GroupSpec::gnk(3, 4).unwrap().generators()[1];
    assert_eq!(hdet(&AlgebraSpec::qminus1(), &GradedAut::from_roots(h)).unwrap(), CycloScalar::root(4, 1));
}

#[test]
fn defining_relations() {
    for (n, k) in gnk_pairs(10) {
        let g = GroupSpec::gnk(n, k).unwrap();
        let gens = g.generators();
        let (x, h) = (gens[0].to_mat2(), gens[1].to_mat2());
        assert_eq!(x.pow(n), Mat2::identity());
        assert_eq!(h.pow(2 * k), Mat2::identity());
        assert_eq!(h.mul(&x), x.pow(n - 1).mul(&h));
        assert_eq!(g.order().unwrap(), closure(&[x, h]), "G({n},{k})");
    }
    assert_eq!(enumerate_group(&GroupSpec::cyclic(AlgebraSpec::quantum_root(5), 3, 1).unwrap()).unwrap().len(), 3);
    assert_eq!(enumerate_group(&GroupSpec::gnk(3, 1).unwrap()).unwrap().len(), 6);
}

/// Size of the group generated by `gens`, by breadth-first multiplication.
fn closure(gens: &[Mat2]) -> usize {
    let mut seen = vec![Mat2::identity()];
    let mut frontier = seen.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let b = a.mul(g);
                if !seen.contains(&b) {
                    seen.push(b.clone());
                    next.push(b);
                }
            }
        }
        frontier = next;
    }
    seen.len()
}

#[test]
fn closed_form_traces() {
    let mut groups = Vec::new();
    for (n, k) in gnk_pairs(5) {
        groups.push(GroupSpec::gnk(n, k).unwrap());
    }
    for n in 2..=5 {
        groups.push(GroupSpec::cyclic(AlgebraSpec::jordan(), n, 1).unwrap());
        groups.push(GroupSpec::cyclic(AlgebraSpec::quantum_root(3), n, 1).unwrap());
    }
    groups.push(GroupSpec::dihedral(AlgebraSpec::commutative(), 5, 3).unwrap());
    for g in &groups {
        for aut in enumerate_group(g).unwrap() {
            let t = trace(&g.ambient, &aut, 24).unwrap();
            let f = t.closed_form.expect("monomial elements have closed forms");
            assert_eq!(f.expand(24), t.series);
        }
    }
    // a non-monomial element of finite order on the commutative plane
    let m = Mat2::new(CycloScalar::from_int(0), CycloScalar::from_int(-1), CycloScalar::one(), CycloScalar::from_int(-1));
    let aut = GradedAut::new(m).unwrap();
    let t = trace(&AlgebraSpec::commutative(), &aut, 24).unwrap();
    assert_eq!(t.closed_form.unwrap().expand(24), t.series);
    assert!(!is_quasi_reflection(&AlgebraSpec::commutative(), &aut).unwrap());
}
