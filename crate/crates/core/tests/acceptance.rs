//! Acceptance suite: one PASS/FAIL line per criterion. Exact comparisons throughout (tolerance 0).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use asinv::auslander::{finite_dim_witness, verify_gh_identities};
use asinv::group_actions::{enumerate_group, group_report, is_quasi_reflection_series, GroupSpec};
use asinv::hj_series::{nc_series, type_a_data};
use asinv::invariants::{
    binomial_times_uv, fixed_space, generator_set, gnk_basis, is_invariant, molien, noncommuting_pair, theta_correspondence,
    verify_generation, Target,
};
use asinv::presentations::{gnk73_presentation, jordan_presentation, quantum_presentation, verify_presentation};
use asinv::scalars::{factorial, rat};
use asinv::skew_algebra::{mul, pow, product, AlgebraElt, AlgebraSpec};
use asinv::CycloScalar;
use num_integer::{binomial, Integer};

/// Criterion 1 must finish inside this budget.
const MOLIEN_BUDGET: Duration = Duration::from_secs(30);

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

macro_rules! tryok {
    ($e:expr) => {
        $e.map_err(|e| e.to_string())?
    };
}

/// Coefficients of `num / Π (1 - t^a)` through degree `n`.
fn rational_series(num: &[(usize, i64)], dens: &[usize], n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n + 1];
    for &(e, x) in num {
        if e <= n {
            c[e] += x;
        }
    }
    for &a in dens {
        for i in a..=n {
            c[i] += c[i - a];
        }
    }
    c
}

fn uv(spec: &AlgebraSpec, r: u32) -> AlgebraElt {
    pow(spec, &AlgebraElt::monomial(1, 1), r)
}

fn odd_coprime(max: u32) -> Vec<(u32, u32)> {
    let odd = || (1..=max).step_by(2);
    odd().flat_map(|n| odd().map(move |k| (n, k))).filter(|&(n, k)| n.gcd(&k) == 1).collect()
}

fn criterion1() -> Check {
    let start = Instant::now();
    let g = tryok!(GroupSpec::gnk(7, 3));
    let got = tryok!(tryok!(molien(&g, 60)).integer_coeffs());
    let want = rational_series(&[(0, 1), (30, -1), (33, -1), (36, -1), (48, 1), (51, 1)], &[15, 9, 21, 12], 60);
    let elapsed = start.elapsed();
    ensure(got == want, || format!("coefficients differ: {got:?}"))?;
    ensure(elapsed < MOLIEN_BUDGET, || format!("took {elapsed:?}"))?;
    Ok("G(7,3) Molien series matches the rational function through t^60".into())
}

fn criterion2() -> Check {
    let spec = AlgebraSpec::qminus1();
    let g = tryok!(GroupSpec::gnk(7, 3));
    let gs = tryok!(generator_set(&g));
    let printed = vec![
        binomial_times_uv(&spec, 7, -1, 4),
        binomial_times_uv(&spec, 7, 1, 1),
        binomial_times_uv(&spec, 21, -1, 0),
        uv(&spec, 6),
    ];
    ensure(gs.degrees == [15, 9, 21, 12], || format!("G(7,3) degrees {:?}", gs.degrees))?;
    ensure(gs.generators == printed, || "G(7,3) elements differ from a, b, c, d".into())?;
    ensure(tryok!(verify_generation(&g, &gs, 60)).success, || "G(7,3) generation fails by degree 60".into())?;
    for n in [3u32, 5, 7] {
        let g = tryok!(GroupSpec::gnk(n, 1));
        let gs = tryok!(generator_set(&g));
        let want = vec![binomial_times_uv(&spec, n, 1, 1), binomial_times_uv(&spec, n, -1, 0), uv(&spec, 2)];
        ensure(gs.generators == want, || format!("G({n},1) generators differ"))?;
        ensure(tryok!(verify_generation(&g, &gs, 4 * n)).success, || format!("G({n},1) generation fails"))?;
    }
    let x = tryok!(nc_series(17, 11));
    let table = (vec![19, 8, 5, 2, 1, 0], vec![1, 1, 2, 3, 7, 11], vec![5, 3, 4, 5, 11, 17]);
    ensure((x.r.clone(), x.s.clone(), x.t.clone()) == table, || "n=17, k=11 table differs".into())?;
    let g = tryok!(GroupSpec::gnk(17, 11));
    let gs = tryok!(generator_set(&g));
    ensure(gs.generators.len() == 7, || format!("G(17,11) has {} generators", gs.generators.len()))?;
    ensure(tryok!(verify_generation(&g, &gs, 100)).success, || "G(17,11) generation fails by degree 100".into())?;
    Ok("G(7,3), G(n,1) for n = 3, 5, 7 and the (17,11) table reproduced; generation verified".into())
}

fn criterion3() -> Check {
    for n in 2..=4u32 {
        let g = tryok!(GroupSpec::cyclic(AlgebraSpec::jordan(), n, 1));
        let gens = tryok!(generator_set(&g)).generators;
        let rep = tryok!(verify_presentation(&g, &tryok!(jordan_presentation(n)), &gens, 6 * n));
        ensure(rep.success, || format!("Jordan n={n}: {rep:?}"))?;
    }
    for (n, a, m) in [(5u32, 2u32, 5u32), (7, 3, 7), (4, 1, 3)] {
        let q = CycloScalar::root(m, 1);
        let g = tryok!(GroupSpec::cyclic(tryok!(AlgebraSpec::quantum(q.clone())), n, a));
        let gens = tryok!(generator_set(&g)).generators;
        let rep = tryok!(verify_presentation(&g, &tryok!(quantum_presentation(n, a, &q)), &gens, 8 * n));
        ensure(rep.success, || format!("quantum ({n},{a}): {rep:?}"))?;
    }
    let g = tryok!(GroupSpec::gnk(7, 3));
    let gens = tryok!(generator_set(&g)).generators;
    let rep = tryok!(verify_presentation(&g, &gnk73_presentation(), &gens, 60));
    ensure(rep.success, || format!("G(7,3): {rep:?}"))?;
    let hilb = rational_series(&[(0, 1), (30, -1), (33, -1), (36, -1), (48, 1), (51, 1)], &[15, 9, 21, 12], 60);
    ensure(rep.quotient_dims.iter().map(|&d| d as i64).eq(hilb), || "G(7,3) quotient dims differ from the Hilbert series".into())?;
    Ok("Jordan n = 2..4, three quantum cases and the G(7,3) nine-relation presentation verified".into())
}

fn criterion4() -> Check {
    let mut fixtures = Vec::new();
    for n in 2..=6u32 {
        for a in 1..n {
            if n.gcd(&a) != 1 {
                continue;
            }
            let mut algebras = vec![AlgebraSpec::quantum_root(5)];
            if a == 1 {
                algebras.push(AlgebraSpec::jordan());
            }
            for spec in algebras {
                let g = tryok!(GroupSpec::cyclic(spec, n, a));
                let w = tryok!(finite_dim_witness(&g, 2 * (n - 1) + 4)).witness;
                ensure(w.is_some_and(|w| w <= 2 * (n - 1)), || format!("{} on {}: {w:?}", g.variant, g.ambient.label()))?;
                ensure(w == Some(n - 1), || format!("{} regression: {w:?}", g.variant))?;
            }
        }
    }
    for (n, k, expect) in [(3u32, 1u32, 4u32), (5, 1, 6), (3, 4, 13), (5, 3, 16), (1, 4, 7)] {
        let bound = 4 * n * k + 8;
        let w = tryok!(finite_dim_witness(&tryok!(GroupSpec::gnk(n, k)), bound)).witness;
        ensure(w.is_some_and(|w| w <= bound), || format!("G({n},{k}): no witness by {bound}"))?;
        ensure(w == Some(expect), || format!("G({n},{k}) regression: {w:?} vs {expect}"))?;
        fixtures.push(format!("({n},{k})->{expect}"));
    }
    Ok(format!("cyclic witnesses n-1 <= 2(n-1); G(n,k) witnesses {}", fixtures.join(" ")))
}

fn criterion5() -> Check {
    for n in 1..=12u32 {
        for k in 1..=12u32 {
            let g = tryok!(GroupSpec::gnk(n, k));
            let mut brute = true;
            for aut in tryok!(enumerate_group(&g)) {
                if tryok!(is_quasi_reflection_series(&g.ambient, &aut, 8)) {
                    brute = false;
                    break;
                }
            }
            let predicate = k % 4 != 2 && n.gcd(&k) <= 2;
            ensure(brute == predicate, || format!("G({n},{k}): scan {brute}, predicate {predicate}"))?;
            let report = tryok!(group_report(&g));
            ensure(report.is_small == predicate, || format!("G({n},{k}) report disagrees"))?;
            if n % 4 == 2 && k % 4 == 0 {
                let mut big: Vec<_> = tryok!(g.elements()).iter().map(|r| r.at_order(4 * n * k)).collect();
                let mut small: Vec<_> = tryok!(tryok!(GroupSpec::gnk(n / 2, k)).elements()).iter().map(|r| r.at_order(4 * n * k)).collect();
                big.sort_by_key(|r| (r.anti, r.e1, r.e2));
                small.sort_by_key(|r| (r.anti, r.e1, r.e2));
                ensure(big == small, || format!("G({n},{k}) != G({},{k})", n / 2))?;
            }
            if predicate && n.gcd(&k) == 1 {
                ensure(report.hdet_trivial == (k == 1), || format!("G({n},{k}) hdet"))?;
            }
        }
    }
    for n in 2..=12u32 {
        for a in (1..n).filter(|a| n.gcd(a) == 1) {
            let r = tryok!(group_report(&tryok!(GroupSpec::cyclic(AlgebraSpec::quantum_root(7), n, a))));
            ensure(r.hdet_trivial == (a == n - 1), || format!("1/{n}(1,{a}) hdet"))?;
        }
        let r = tryok!(group_report(&tryok!(GroupSpec::cyclic(AlgebraSpec::jordan(), n, 1))));
        ensure(r.hdet_trivial == (n == 2), || format!("Jordan 1/{n}(1,1) hdet"))?;
    }
    Ok("smallness scan, set equality and hdet cases agree for n, k <= 12".into())
}

fn y(n: u32, i: u32) -> AlgebraElt {
    let sign = if i % 2 == 0 { 1 } else { -1 };
    AlgebraElt::term(CycloScalar::from_rational(&rat(sign, i64::try_from(factorial(i)).unwrap())), n - i, i)
}

fn criterion6() -> Check {
    let mut parts = Vec::new();
    for (n, k) in odd_coprime(9) {
        let rep = tryok!(verify_gh_identities(n, k, 2 * n * k));
        ensure(rep.all_hold, || format!("G/H identities ({n},{k}): {:?}", rep.checks))?;
    }
    parts.push("G/H");

    let jordan = AlgebraSpec::jordan();
    for n in 2..=6u32 {
        for j in 1..=n {
            for i in 0..j {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let both = AlgebraElt::term(CycloScalar::from_rational(&rat(sign, i64::try_from(factorial(i) * factorial(j)).unwrap())), 2 * n - i - j, i + j);
                let side = |a: u32, b: u32| {
                    (0..=b).fold(AlgebraElt::zero(), |acc, t| {
                        acc.add(&mul(&jordan, &y(n, b - t), &y(n, a)).scale(&CycloScalar::from_int(binomial(n - a, t) as i64)))
                    })
                };
                ensure(side(i, j) == both && side(j, i) == both, || format!("commutation identity n={n} i={i} j={j}"))?;
            }
        }
        for i in 1..n {
            for j in i..n {
                let lhs = mul(&jordan, &y(n, i), &y(n, j)).scale(&CycloScalar::from_int(i as i64));
                let rhs = mul(&jordan, &y(n, i - 1), &y(n, j + 1))
                    .scale(&CycloScalar::from_int(j as i64 + 1))
                    .sub(&mul(&jordan, &y(n, i - 1), &y(n, j)).scale(&CycloScalar::from_int((n - 1 - (j - i)) as i64)));
                ensure(lhs == rhs, || format!("second family n={n} i={i} j={j}"))?;
            }
        }
    }
    parts.push("Jordan identities");

    let q = CycloScalar::root(5, 1);
    let qs = tryok!(AlgebraSpec::quantum(q.clone()));
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            for c in 0..=4u32 {
                let lhs = pow(&qs, &AlgebraElt::monomial(a, b), c);
                let e = (a * b * c * c.saturating_sub(1) / 2) as i64;
                ensure(lhs == AlgebraElt::term(tryok!(q.pow(e)), a * c, b * c), || format!("power identity ({a},{b},{c})"))?;
            }
        }
    }
    let small: Vec<(u32, u32)> = (0..=4).flat_map(|a| (0..=4).map(move |b| (a, b))).collect();
    for &(a1, b1) in &small {
        for &(a2, b2) in &small {
            for &(a3, b3) in small.iter().step_by(3) {
                let xs = [AlgebraElt::monomial(a1, b1), AlgebraElt::monomial(a2, b2), AlgebraElt::monomial(a3, b3)];
                let r = (a2 * b1 + a3 * b1 + a3 * b2) as i64;
                ensure(product(&qs, &xs) == AlgebraElt::term(tryok!(q.pow(r)), a1 + a2 + a3, b1 + b2 + b3), || "product identity".into())?;
            }
        }
    }
    parts.push("q-power identities");

    for (n, k) in odd_coprime(25).into_iter().filter(|(n, k)| n != k) {
        let x = tryok!(nc_series(n as i64, k as i64));
        let len = x.r.len();
        ensure(x.r[len - 2] == 1 && x.r[len - 1] == 0, || format!("({n},{k}) tail of r"))?;
        ensure(x.s[len - 1] == k as i64 && x.t[len - 1] == n as i64, || format!("({n},{k}) terminal values"))?;
        ensure(x.r.windows(2).all(|w| w[0] > w[1]), || format!("({n},{k}) r not decreasing"))?;
        for i in 0..len - 1 {
            ensure(x.r[i] * x.s[i + 1] - x.r[i + 1] * x.s[i] == k as i64, || format!("({n},{k}) r/s identity"))?;
            ensure(x.r[i] * x.t[i + 1] - x.r[i + 1] * x.t[i] == n as i64, || format!("({n},{k}) r/t identity"))?;
        }
    }
    parts.push("series");

    for (n, k) in odd_coprime(9) {
        let g = tryok!(GroupSpec::gnk(n, k));
        for d in 0..=24 {
            let basis = tryok!(gnk_basis(n, k, d));
            ensure(basis.len() == fixed_space(&g, d).len(), || format!("basis ({n},{k}) degree {d}"))?;
        }
        let (a, b) = tryok!(noncommuting_pair(n, k));
        let spec = &g.ambient;
        ensure(is_invariant(&g, &a) && is_invariant(&g, &b), || format!("witness invariance ({n},{k})"))?;
        ensure(mul(spec, &a, &b) != mul(spec, &b, &a), || format!("witnesses commute for ({n},{k})"))?;
    }
    parts.push("basis and witnesses");

    for n in 1..=8u32 {
        for k in (1..=8u32).filter(|k| n % 2 == 0 || k % 2 == 0) {
            let g = tryok!(GroupSpec::gnk(n, k));
            let basis: Vec<AlgebraElt> = (1..=16).flat_map(|d| fixed_space(&g, d)).collect();
            for (i, a) in basis.iter().enumerate() {
                for b in &basis[i + 1..] {
                    ensure(mul(&g.ambient, a, b) == mul(&g.ambient, b, a), || format!("G({n},{k}) invariants do not commute"))?;
                }
            }
        }
    }
    parts.push("commutativity");
    Ok(parts.join(", "))
}

fn criterion7() -> Check {
    let rep = tryok!(theta_correspondence(2, 1, 40));
    ensure(rep.target == Target::Cyclic { order: 4, weight: 3 }, || format!("(2,1) target {:?}", rep.target))?;
    let want = rational_series(&[(0, 1), (8, -1)], &[4, 4, 2], 40);
    ensure(rep.evidence.invariant_series == want, || "(2,1) series differs from k[x,y,z]/(xy - z^4)".into())?;
    ensure(rep.evidence.series_equal, || "(2,1) target series differs".into())?;
    for ((n, k), target) in [((1u32, 4u32), Target::Cyclic { order: 8, weight: 5 }), ((3, 4), Target::Dihedral { m: 5, q: 3 }), ((4, 3), Target::Dihedral { m: 5, q: 2 })] {
        let rep = tryok!(theta_correspondence(n, k, 40));
        ensure(rep.target == target, || format!("({n},{k}) target {:?}", rep.target))?;
        ensure(rep.evidence.series_equal, || format!("({n},{k}) Molien series differ"))?;
    }
    // the type A data of the (2,1) target gives generators u^4, uv, v^4 in degrees 4, 2, 4
    let a = tryok!(type_a_data(4, 3));
    ensure(a.i == [4, 1, 0] && a.j == [0, 1, 4], || "type A data for 1/4(1,3)".into())?;
    Ok("(2,1), (1,4), (3,4), (4,3) correspondences agree to degree 40".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("1 molien fixture", criterion1),
        ("2 generator fixtures", criterion2),
        ("3 presentation fixtures", criterion3),
        ("4 auslander witnesses", criterion4),
        ("5 classification", criterion5),
        ("6 identity batteries", criterion6),
        ("7 correspondences", criterion7),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let (tag, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(e) => {
                failed += 1;
                ("FAIL", e)
            }
        };
        println!("criterion {name}: {tag} ({:.1}s) {detail}", start.elapsed().as_secs_f64());
    }
    println!("acceptance: {} of 7 criteria passed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
