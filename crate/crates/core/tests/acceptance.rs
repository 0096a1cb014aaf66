//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test --test acceptance`; the lines are written straight to
//! stdout so they show up without `--nocapture`.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use motivecalc::formulas::{bb_fixed_loci_par_higgs, bb_poincare, motive_par_higgs, thaddeus_poincare_nl};
use motivecalc::motive::{chow_decomposition, expand_rational, poincare, ChowDecomposition, ChowSymbol};
use motivecalc::wallcross::{
    closed_formula_parabolic, exponents, minimal_chamber_motive, motive_by_path, walk,
};
use motivecalc::weights::{enumerate_walls, flip_type, sample_generic_weight};
use motivecalc::{CurveContext, Error, MotiveAtom, MotiveExpr, Parity, Poly, Wall, Weight};
use num::{BigInt, BigRational, Integer, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as i64
}

fn criterion_1() {
    assert_eq!(enumerate_walls(2, Parity::Odd).len(), 1);
    assert_eq!(enumerate_walls(3, Parity::Odd).len(), 4);
}

fn criterion_2() {
    for n in 0..=8usize {
        for w in enumerate_walls(n, Parity::Odd) {
            for g in 0..=10u32 {
                let fd = flip_type(&w, g, n, false).unwrap();
                let (g, n) = (g as i64, n as i64);
                for v in [fd.n_minus, fd.n_plus] {
                    assert!(g - 1 <= v && v <= g + n - 3, "g={g} N={n} {w}: {v}");
                }
                assert_eq!(fd.n_minus + fd.n_plus, 2 * g + n - 4, "g={g} N={n} {w}");
            }
        }
    }
}

/// `χ(L, M)` for parabolic line bundles with flags at the same points:
/// `deg M − deg L + 1 − g` minus the points where `L` sits in the upper step
/// and `M` in the lower one.
fn chi_line(deg_l: i64, upper_l: &[bool], deg_m: i64, upper_m: &[bool], g: i64) -> i64 {
    let jumps = upper_l.iter().zip(upper_m).filter(|(&a, &b)| a && !b).count() as i64;
    deg_m - deg_l + 1 - g - jumps
}

fn criterion_3() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut done = 0;
    while done < 1000 {
        let n = rng.gen_range(2..=8usize);
        let walls = enumerate_walls(n, Parity::Odd);
        let w = walls[rng.gen_range(0..walls.len())];
        let g = rng.gen_range(0..=12i64);
        let d = 2 * rng.gen_range(-6i64..=6) + 1;
        // The destabilising subbundle has degree (d + 2s + 1)/2 and takes the
        // lower flag step exactly at the points of I.
        let d1 = (d + 2 * w.s as i64 + 1) / 2;
        let upper1: Vec<bool> = (1..=n).map(|i| !w.contains(i)).collect();
        let upper2: Vec<bool> = upper1.iter().map(|u| !u).collect();
        let n_minus = -chi_line(d - d1, &upper2, d1, &upper1, g) - 1;
        let n_plus = -chi_line(d1, &upper1, d - d1, &upper2, g) - 1;
        let fd = flip_type(&w, g as u32, n, false).unwrap();
        assert_eq!((fd.n_minus, fd.n_plus), (n_minus, n_plus), "g={g} N={n} d={d} {w}");
        done += 1;
    }
}

/// `d_j` by direct enumeration of subsets, over a common denominator.
fn d_oracle(a: &Weight) -> Vec<i64> {
    let n = a.len();
    let l = a.coords().iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let l = l.to_i128().unwrap();
    let nums: Vec<i128> = a.coords().iter().map(|x| (x * BigRational::from_integer(l.into())).to_integer().to_i128().unwrap()).collect();
    let mut d = vec![0i64; n + 1];
    for mask in 0u32..1 << n {
        let k = mask.count_ones() as i128;
        let mut v = k * l;
        for (i, x) in nums.iter().enumerate() {
            v += if mask & (1 << i) != 0 { -x } else { *x };
        }
        for (j, slot) in d.iter_mut().enumerate() {
            let j = j as i128;
            if (j - k).rem_euclid(2) == 0 && (j - 1) * l < v && v < (j + 1) * l {
                *slot += 1;
            }
        }
    }
    d
}

fn criterion_4() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in 3..=10usize {
        let base = exponents(&Weight::near_origin(n, 3)).unwrap();
        let binoms: Vec<i64> = (0..=n as u64).map(|j| binomial(n as u64, j)).collect();
        assert_eq!(base.d, binoms);
        assert!(base.b.iter().all(|&b| b == 0));
        for _ in 0..100 {
            let a = sample_generic_weight(n, Parity::Odd, &mut rng);
            let t = exponents(&a).unwrap();
            assert_eq!(t.d, d_oracle(&a), "{a}");
            let lhs = &Poly::new(vec![1, -1, -1, 1]) * &Poly::new(t.b.iter().map(|&x| x as i128).collect());
            let rhs = &Poly::one_plus_t_pow(n as u32) - &Poly::new(t.d.iter().map(|&x| x as i128).collect());
            assert_eq!(lhs, rhs, "N={n} α={a}");
        }
    }
}

fn jac2(g: u32) -> MotiveExpr {
    let jac = MotiveExpr::atom(MotiveAtom::JacC);
    jac.tensor(&jac).twist(g as i64)
}

fn flagged_n(n: u32) -> MotiveExpr {
    let p1 = MotiveExpr::unit().dsum(&MotiveExpr::tate(1));
    (0..n).fold(MotiveExpr::atom(MotiveAtom::ModuliN { d: 1 }), |acc, _| acc.tensor(&p1))
}

fn criterion_5() {
    for g in 2..=6u32 {
        let ctx = CurveContext::new(g, 3);
        let inside = Weight::from_ratios(&[(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(exponents(&inside).unwrap().b, vec![1]);
        let expected = flagged_n(3).dsum(&jac2(g));
        assert_eq!(closed_formula_parabolic(&inside, &ctx, 1, false).unwrap(), expected);
        assert_eq!(motive_by_path(&inside, &ctx, 1, false).unwrap(), expected);

        let ctx = CurveContext::new(g, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(g as u64);
        let mut signs = std::collections::BTreeSet::new();
        for _ in 0..40 {
            let a = sample_generic_weight(2, Parity::Odd, &mut rng);
            signs.insert(motivecalc::weights::chamber_signature(&a, Parity::Odd).unwrap().signs);
            assert_eq!(closed_formula_parabolic(&a, &ctx, 1, false).unwrap(), flagged_n(2));
            assert_eq!(motive_by_path(&a, &ctx, 1, false).unwrap(), flagged_n(2));
        }
        assert_eq!(signs.len(), 2, "both chambers sampled");
    }
}

fn criterion_6() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut independent = 0;
    for _ in 0..200 {
        let g = rng.gen_range(2..=5u32);
        let n = rng.gen_range(2..=7usize);
        let ctx = CurveContext::new(g, n as u32);
        let a = sample_generic_weight(n, Parity::Odd, &mut rng);
        let closed = closed_formula_parabolic(&a, &ctx, 1, false).unwrap();
        assert_eq!(motive_by_path(&a, &ctx, 1, false).unwrap(), closed, "g={g} N={n} α={a}");
        let via = sample_generic_weight(n, Parity::Odd, &mut rng);
        let paths = [
            vec![Weight::near_origin(n, 3), a.clone()],
            vec![Weight::near_origin(n, 6), via, a.clone()],
        ];
        let mut results = Vec::new();
        for p in &paths {
            match walk(p, &ctx, 1, false) {
                Ok(r) => results.push(r.motive),
                Err(Error::DegeneratePath { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
        if results.len() == 2 {
            independent += 1;
            assert_eq!(results[0], results[1], "g={g} N={n} α={a}");
            assert_eq!(results[0], closed);
        }
    }
    assert!(independent >= 150, "only {independent} path pairs were non-degenerate");
}

fn criterion_7() {
    let g2 = Poly::new(vec![1, 0, 1, 4, 1, 0, 1]);
    for g in 2..=6u32 {
        let ctx = CurveContext::new(g, 0);
        let direct =
            poincare(&expand_rational(&MotiveExpr::atom(MotiveAtom::ModuliNL { d: 1 }), &ctx), &ctx).unwrap();
        if g == 2 {
            assert_eq!(direct, g2);
        }
        for delta in 0..=2 {
            assert_eq!(thaddeus_poincare_nl(g, delta).unwrap(), direct, "g={g} δ={delta}");
        }
    }
}

fn criterion_8() {
    for g in 0..=8u32 {
        let ctx = CurveContext::new(g, 0);
        let p = |a: MotiveAtom| poincare(&expand_rational(&MotiveExpr::atom(a), &ctx), &ctx).unwrap();
        let jac = Poly::new((0..=2 * g as u64).map(|k| binomial(2 * g as u64, k) as i128).collect());
        assert_eq!(p(MotiveAtom::ModuliN { d: 1 }), &p(MotiveAtom::ModuliNL { d: 1 }) * &jac, "g={g}");
    }
}

fn criterion_9() {
    let nl = MotiveExpr::atom(MotiveAtom::ModuliNL { d: 1 });
    let sym = |i: i64| if i == 0 { vec![] } else { vec![MotiveAtom::SymC { n: i as u32 }] };
    for g in 2..=12u32 {
        let ctx = CurveContext::new(g, 0);
        let e = expand_rational(&nl, &ctx);
        let mut ch1 = ChowDecomposition::default();
        ch1.add(ChowSymbol { codim: 0, atoms: sym(1) }, 1);
        assert_eq!(chow_decomposition(&e, 1, &ctx).unwrap(), ch1, "g={g}");
        for a in 0..=6i64 {
            if (g as i64) < a + 1 {
                continue;
            }
            let mut expected = ChowDecomposition::default();
            for i in (a + 1) / 2..=a {
                expected.add(ChowSymbol { codim: a - i, atoms: sym(i) }, 1);
            }
            assert_eq!(chow_decomposition(&e, a, &ctx).unwrap(), expected, "g={g} a={a}");
        }
    }
}

fn criterion_10() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for g in 2..=3u32 {
        for n in 0..=4usize {
            let ctx = CurveContext::new(g, n as u32);
            let closed = poincare(&expand_rational(&motive_par_higgs(&ctx, 1, false).unwrap(), &ctx), &ctx).unwrap();
            for _ in 0..20 {
                let a = sample_generic_weight(n, Parity::Odd, &mut rng);
                let comps = bb_fixed_loci_par_higgs(&ctx, 1, &a, false).unwrap();
                assert_eq!(bb_poincare(&comps, &ctx).unwrap(), closed, "g={g} N={n} α={a}");
            }
        }
    }
}

fn criterion_11() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in 2..=5u32 {
        for n in 0..=4usize {
            let ctx = CurveContext::new(g, n as u32);
            for _ in 0..5 {
                let a = sample_generic_weight(n, Parity::Odd, &mut rng);
                for c in bb_fixed_loci_par_higgs(&ctx, 1, &a, false).unwrap() {
                    let p = poincare(&expand_rational(&c.base, &ctx), &ctx).unwrap();
                    let dim = p.degree().expect("nonzero base") as i64 / 2;
                    assert_eq!(dim + c.codim, 4 * g as i64 - 3 + n as i64, "g={g} N={n} α={a}: {c:?}");
                }
            }
        }
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn()); 11] = [
        ("wall counts for N = 2, 3", criterion_1),
        ("flip-type window, N <= 8, g <= 10", criterion_2),
        ("flip types against the parabolic Euler pairing, 1000 walls", criterion_3),
        ("exponent identity and near-origin table", criterion_4),
        ("worked examples N = 2, 3", criterion_5),
        ("path walk equals closed formula, path independence", criterion_6),
        ("pair-flip oracle for N_L", criterion_7),
        ("fixed-determinant product law", criterion_8),
        ("Chow groups of N_L", criterion_9),
        ("weight independence of parabolic Higgs", criterion_10),
        ("Lagrangian codimension of fixed loci", criterion_11),
    ];
    let mut failed = Vec::new();
    let mut stdout = std::io::stdout();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
        let tag = if ok { "PASS" } else { "FAIL" };
        let line = format!("criterion {:>2}: {tag}  {name} ({:.2?})\n", i + 1, start.elapsed());
        stdout.write_all(line.as_bytes()).unwrap();
        if !ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn wall_type_is_public() {
    let w = Wall::new(0, &[1, 2, 3], Parity::Odd).unwrap();
    assert_eq!(flip_type(&w, 2, 3, false).unwrap().n_minus, 2);
    assert_eq!(minimal_chamber_motive(3, 1, false).unwrap(), flagged_n(3));
}
