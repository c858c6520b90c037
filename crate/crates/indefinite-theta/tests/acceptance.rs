//! Acceptance gate: every identity family at its pinned tolerance, with one
//! printed pass/fail line per criterion. Residuals follow the shared
//! convention (relative when |rhs| > 1, absolute otherwise).

use std::time::Instant;

use num_complex::Complex64;
use num_rational::Ratio;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use indefinite_theta::error::Error;
use indefinite_theta::family::{self, FamilyIndex, TorsorShift};
use indefinite_theta::modular;
use indefinite_theta::numerics::{partial_fraction_average, residual, TruncationBudget};
use indefinite_theta::phi::{self, AveragePart, PhiParams, Z2Shift};
use indefinite_theta::qkernels;
use indefinite_theta::suites::{run_suite, Suite, SuiteConfig};
use indefinite_theta::theta::ThetaSign;

const SEED: u64 = 0x5eed;

struct Draw {
    rng: ChaCha8Rng,
}

impl Draw {
    fn new(tag: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(SEED ^ tag),
        }
    }

    fn tau(&mut self) -> Complex64 {
        Complex64::new(self.rng.gen_range(-0.5..0.5), self.rng.gen_range(0.6..2.0))
    }

    fn tau_band(&mut self, lo: f64, hi: f64) -> Complex64 {
        Complex64::new(self.rng.gen_range(-0.5..0.5), self.rng.gen_range(lo..hi))
    }

    fn z(&mut self) -> Complex64 {
        Complex64::new(self.rng.gen_range(-0.7..0.7), self.rng.gen_range(-0.7..0.7))
    }
}

/// Retry pole-guard trips with fresh draws, like the verification harness.
fn sample<T>(draw: &mut Draw, mut f: impl FnMut(&mut Draw) -> Result<T, Error>) -> T {
    for _ in 0..64 {
        match f(draw) {
            Ok(v) => return v,
            Err(Error::PoleProximity(_)) => continue,
            Err(e) => panic!("check errored: {e}"),
        }
    }
    panic!("pole guard kept tripping after 64 redraws");
}

fn verdict(criterion: &str, pass: bool, detail: String) {
    println!(
        "acceptance {criterion}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion}: {detail}");
}

#[test]
fn criterion_01_gauss_quotient_exact() {
    let mut worst = 0.0f64;
    let mut ok = true;
    for m2 in [1i64, 2, 3, 4] {
        let start = Instant::now();
        let (lhs, rhs) = qkernels::gauss_quotient_check(m2, Ratio::new(20, 1)).unwrap();
        let dt = start.elapsed().as_secs_f64();
        ok &= lhs.agrees_with(&rhs) && dt < 1.0;
        worst = worst.max(dt);
    }
    verdict(
        "1 (gauss quotient to q^20)",
        ok,
        format!("slowest {worst:.3}s"),
    );
}

#[test]
fn criterion_02_h_specialization_exact() {
    let start = Instant::now();
    let mut ok = true;
    let mut cases = 0usize;
    for m2 in [1i64, 2, 3, 4] {
        for n in 0..m2 {
            for nu in 0..=m2 {
                let idx = FamilyIndex::new(m2, n, nu).unwrap();
                for a in 0..m2 {
                    if a == 0 {
                        // 2m | a is a genuine specialization pole
                        ok &= matches!(
                            qkernels::h_spec_qexp(&idx, a, 200, Ratio::new(10, 1)),
                            Err(Error::SpecializationPole(_))
                        );
                    } else {
                        let (d, r) =
                            qkernels::h_spec_qexp(&idx, a, 200, Ratio::new(10, 1)).unwrap();
                        ok &= d.agrees_with(&r);
                    }
                    cases += 1;
                }
            }
        }
    }
    let dt = start.elapsed().as_secs_f64();
    ok &= dt < 10.0;
    verdict(
        "2 (h elliptic specialization to q^10)",
        ok,
        format!("{cases} cases in {dt:.2}s"),
    );
}

#[test]
fn criterion_03_partial_fractions() {
    let start = Instant::now();
    let mut draw = Draw::new(3);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 1000 {
        let n = draw.rng.gen_range(1u32..=12);
        let k = draw.rng.gen_range(0..n);
        let x = Complex64::new(
            draw.rng.gen_range(-0.95..0.95),
            draw.rng.gen_range(-0.95..0.95),
        );
        match partial_fraction_average(n, k, x, 1e-8) {
            Ok((l, r)) => {
                worst = worst.max((l - r).norm());
                done += 1;
            }
            Err(Error::PoleProximity(_)) => continue,
            Err(e) => panic!("{e}"),
        }
    }
    let dt = start.elapsed().as_secs_f64();
    let ok = worst < 1e-12 && dt < 1.0;
    verdict(
        "3 (partial-fraction average x1000)",
        ok,
        format!("worst {worst:.2e} in {dt:.2}s"),
    );
}

#[test]
fn criterion_04_kac_peterson() {
    let mut worst = 0.0f64;
    for s2 in [1i64, 3, -5] {
        for k in [-1i64, 0, 2] {
            let mut draw = Draw::new(4 ^ (s2 as u64) << 8 ^ (k as u64) << 16);
            for _ in 0..20 {
                let res = sample(&mut draw, |d| {
                    let (l, r) = phi::kac_peterson_check(s2, k, d.tau(), d.z(), &budget())?;
                    Ok(residual(l, r))
                });
                worst = worst.max(res);
            }
        }
    }
    verdict(
        "4 (Kac-Peterson specialization)",
        worst < 1e-9,
        format!("worst {worst:.2e}"),
    );
}

#[test]
fn criterion_05_averaging_and_shift() {
    let mut worst = 0.0f64;
    for m2 in [1i64, 2] {
        // root-of-unity averaging, all four sign/direction variants
        for part in [AveragePart::One, AveragePart::Two] {
            for shift in [Z2Shift::Plus, Z2Shift::Minus] {
                let mut draw = Draw::new(5 ^ (m2 as u64) << 4);
                for _ in 0..20 {
                    let res = sample(&mut draw, |d| {
                        let (l, r) = phi::phi_average_check(
                            m2,
                            2,
                            1,
                            part,
                            shift,
                            d.tau(),
                            d.z(),
                            d.z(),
                            &budget(),
                        )?;
                        Ok(residual(l, r))
                    });
                    worst = worst.max(res);
                }
            }
        }
        // the half-level corollary: base 1/2, divisor 2m
        let mut draw = Draw::new(5 ^ 0xc0 ^ (m2 as u64));
        for _ in 0..20 {
            let res = sample(&mut draw, |d| {
                let p = if m2 > 1 { 1 } else { 0 };
                let (l, r) = phi::phi_average_check(
                    1,
                    m2 as u32,
                    p,
                    AveragePart::One,
                    Z2Shift::Plus,
                    d.tau(),
                    d.z(),
                    d.z(),
                    &budget(),
                )?;
                Ok(residual(l, r))
            });
            worst = worst.max(res);
        }
        // s-shift, both signs and directions
        for sign in [ThetaSign::Plus, ThetaSign::Minus] {
            for n_shift in [1i64, -1, 2, -2] {
                let mut draw = Draw::new(5 ^ 0xd0 ^ (m2 as u64) << 3 ^ (n_shift as u64) << 9);
                for _ in 0..20 {
                    let res = sample(&mut draw, |d| {
                        let p = PhiParams::new(m2, 1, sign)?;
                        let (l, r) = phi::phi_shift_check(
                            &p,
                            n_shift,
                            d.tau_band(0.6, 1.6),
                            d.z(),
                            d.z(),
                            &budget(),
                        )?;
                        Ok(residual(l, r))
                    });
                    worst = worst.max(res);
                }
            }
        }
    }
    verdict(
        "5 (averaging and s-shift laws)",
        worst < 1e-10,
        format!("worst {worst:.2e}"),
    );
}

#[test]
fn criterion_06_triple_sum_flow() {
    let mut worst = 0.0f64;
    for m2 in [1i64, 2] {
        for s2 in [1i64, 3] {
            let mut draw = Draw::new(6 ^ (m2 as u64) << 4 ^ (s2 as u64) << 8);
            for _ in 0..20 {
                let diff = sample(&mut draw, |d| {
                    let (flow, closed) =
                        phi::a_series_check(m2, s2, d.tau(), d.z(), d.z(), &budget())?;
                    Ok((flow - closed).norm())
                });
                worst = worst.max(diff);
            }
        }
    }
    verdict(
        "6 (auxiliary sum, two reindexings)",
        worst < 1e-8,
        format!("worst {worst:.2e}"),
    );
}

#[test]
fn criterion_07_quotient_expression() {
    let mut worst1 = 0.0f64;
    let mut worst2 = 0.0f64;
    for m2 in [1i64, 2, 3, 4] {
        for n in 0..m2 {
            for nu in 0..=m2 {
                let idx = FamilyIndex::new(m2, n, nu).unwrap();
                let mut draw =
                    Draw::new(7 ^ (m2 as u64) << 4 ^ (n as u64) << 8 ^ (nu as u64) << 12);
                for _ in 0..20 {
                    let res = sample(&mut draw, |d| {
                        let (l, r) = family::prop35_part1_check(&idx, d.tau(), d.z(), &budget())?;
                        Ok(residual(l, r))
                    });
                    worst1 = worst1.max(res);
                }
            }
        }
        for nu in 0..=m2 {
            let mut draw = Draw::new(7 ^ 0xf00 ^ (m2 as u64) << 4 ^ (nu as u64) << 8);
            for _ in 0..20 {
                let res = sample(&mut draw, |d| {
                    let (l, r) = family::prop35_part2_check(m2, nu, d.tau(), d.z(), &budget())?;
                    Ok(residual(l, r))
                });
                worst2 = worst2.max(res);
            }
        }
    }
    let ok = worst1 < 1e-8 && worst2 < 1e-8;
    verdict(
        "7 (G quotient expression, both parts)",
        ok,
        format!("part1 {worst1:.2e}, part2 {worst2:.2e}"),
    );
}

#[test]
fn criterion_08_translation_elliptic_reflection_torsor() {
    let mut worst = 0.0f64;
    for m2 in [1i64, 2, 3, 4] {
        for n in 0..m2 {
            for nu in 0..=m2 {
                let idx = FamilyIndex::new(m2, n, nu).unwrap();
                let mut draw =
                    Draw::new(8 ^ (m2 as u64) << 4 ^ (n as u64) << 8 ^ (nu as u64) << 12);
                let res = sample(&mut draw, |d| {
                    let (tau, z) = (d.tau(), d.z());
                    let c = d.rng.gen_range(1..=m2);
                    let (l1, r1) = family::g_translation_check(&idx, c, tau, z, &budget())?;
                    let (l2, r2) = family::g_elliptic_check(&idx, 1, 1, tau, z, &budget())?;
                    let (l3, r3) = family::g_reflection_check(&idx, tau, z, &budget())?;
                    let shift = TorsorShift::new(d.rng.gen_range(0..m2), d.rng.gen_range(0..m2));
                    let (l4, r4) = family::f_b_phase_check(&idx, &shift, 1, tau, z, &budget())?;
                    let (l5, r5) = family::f_periodicity_check(&idx, &shift, tau, z, &budget())?;
                    let mut worst = residual(l1, r1)
                        .max(residual(l2, r2))
                        .max(residual(l3, r3))
                        .max(residual(l4, r4))
                        .max(residual(l5, r5));
                    if m2 >= 2 {
                        let (l6, r6) = family::f_reflection_check(
                            &idx,
                            1 + (nu % (m2 - 1).max(1)),
                            tau,
                            &budget(),
                        )?;
                        worst = worst.max(residual(l6, r6));
                    }
                    Ok(worst)
                });
                worst = worst.max(res);
            }
        }
    }
    verdict(
        "8 (translation/elliptic/reflection/torsor laws)",
        worst < 1e-10,
        format!("worst {worst:.2e}"),
    );
}

#[test]
fn criterion_09_modular_action() {
    let mut worst_s = 0.0f64;
    let mut worst_t = 0.0f64;
    let mut worst_s2 = 0.0f64;
    let mut worst_st3 = 0.0f64;
    for m2 in [1i64, 2] {
        let mut draw = Draw::new(9 ^ (m2 as u64) << 4);
        for pt in 0..10u64 {
            let idx = FamilyIndex::new(m2, pt as i64 % m2, pt as i64 % (m2 + 1)).unwrap();
            let res = sample(&mut draw, |d| {
                let (l, r) = modular::g_s_rule_check(&idx, d.tau(), 0.25 * d.z(), &budget())?;
                Ok(residual(l, r))
            });
            worst_s = worst_s.max(res);
            if m2 == 2 {
                let res = sample(&mut draw, |d| {
                    let (l, r) = modular::g_t_rule_check(&idx, d.tau(), d.z(), &budget())?;
                    Ok(residual(l, r))
                });
                worst_t = worst_t.max(res);
            }
            let res = sample(&mut draw, |d| {
                let tau = d.tau();
                let z = 0.2 * d.z() + Complex64::new(0.05, 0.03);
                let (l, r) = modular::s_squared_roundtrip_check(m2, tau, z, &budget())?;
                Ok(residual(l, r))
            });
            worst_s2 = worst_s2.max(res);
            if m2 == 2 {
                let res = sample(&mut draw, |d| {
                    let tau = d.tau();
                    let z = 0.2 * d.z() + Complex64::new(0.05, 0.03);
                    let (l, r) = modular::st_cubed_vs_s_squared_check(m2, tau, z, &budget())?;
                    Ok(residual(l, r))
                });
                worst_st3 = worst_st3.max(res);
            }
        }
    }
    let ok = worst_s < 1e-7 && worst_t < 1e-9 && worst_s2 < 1e-6 && worst_st3 < 1e-5;
    verdict(
        "9 (S/T rules, round trips)",
        ok,
        format!("S {worst_s:.2e}, T {worst_t:.2e}, S^2 {worst_s2:.2e}, (ST)^3 {worst_st3:.2e}"),
    );
}

#[test]
fn criterion_10_mock_s_transform() {
    let mut worst_zfree = 0.0f64;
    let mut worst_51 = 0.0f64;
    let mut worst_54 = 0.0f64;
    let m2 = 2i64;
    for n in [0i64, 1] {
        let mut draw = Draw::new(10 ^ (n as u64) << 4);
        for pt in 0..10i64 {
            let res = sample(&mut draw, |d| {
                let tau = d.tau();
                let a = modular::g_quotient_expression(m2, n, tau, d.z(), &budget())?;
                let b = modular::g_quotient_expression(m2, n, tau, d.z(), &budget())?;
                Ok(residual(a, b))
            });
            worst_zfree = worst_zfree.max(res);
            let res = sample(&mut draw, |d| {
                let (l, r) = modular::lemma51_check(
                    m2,
                    n,
                    pt % m2,
                    (pt + 1) % m2,
                    d.tau(),
                    d.z(),
                    &budget(),
                )?;
                Ok(residual(l, r))
            });
            worst_51 = worst_51.max(res);
            let res = sample(&mut draw, |d| {
                let (l, r) = modular::g_mock_s_check(m2, n, d.tau(), &budget())?;
                Ok(residual(l, r))
            });
            worst_54 = worst_54.max(res);
        }
    }
    let ok = worst_zfree < 1e-9 && worst_51 < 1e-7 && worst_54 < 1e-7;
    verdict(
        "10 (z-independence, theta-product S rule, mock S-transform)",
        ok,
        format!("z-free {worst_zfree:.2e}, F-rule {worst_51:.2e}, mock-S {worst_54:.2e}"),
    );
}

#[test]
fn criterion_11_full_suite_deterministic() {
    let cfg = SuiteConfig {
        m2_list: vec![2],
        points: 10,
        seed: 42,
        order: 12,
        tol_override: None,
        budget: budget(),
    };
    let start = Instant::now();
    let doc = run_suite(Suite::All, &cfg);
    let dt = start.elapsed().as_secs_f64();
    let again = run_suite(Suite::All, &cfg);
    let deterministic = doc.to_json_string() == again.to_json_string();
    let ok = doc.all_pass() && dt < 60.0 && deterministic;
    verdict(
        "11 (verify --suite all --m 1 --points 10)",
        ok,
        format!(
            "{}/{} passed in {dt:.2}s, deterministic: {deterministic}",
            doc.summary.passed, doc.summary.total
        ),
    );
}

fn budget() -> TruncationBudget {
    TruncationBudget::default()
}
