//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rydberg_core::asymptotics::{asymptotic_norm, constant_c};
use rydberg_core::entropy::{
    angular_moment, f_closed_form, ln_f_closed_form, ln_f_closed_form_body, renyi_total, shannon_radial_exact,
    shannon_total, shannon_y00, Backend, EntropyConfig,
};
use rydberg_core::exec::{self, Strategy};
use rydberg_core::figures;
use rydberg_core::hydrogenic::{QuantumState, RadialDensity};
use rydberg_core::norms::{exact_norm, hydrogenic_norm_ln, NormParams};
use rydberg_core::quadrature::{
    integrate, integrate_breakpoints, integrate_oscillatory_semiinfinite, LobeKind, OscillatorySpec, QuadConfig,
};
use rydberg_core::specfun::{airy_ai, bessel_j, gamma_ln, laguerre_orthonormal, laguerre_zeros, BesselZeros};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: String) -> Outcome {
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn ln_norm(dim: u32, n: u32, l: u32, p: f64) -> f64 {
    let st = QuantumState::with_l(dim, 1.0, n, l).unwrap();
    hydrogenic_norm_ln(&st, p, 1e-9, Strategy::Parallel).unwrap().check().unwrap().ln_value
}

fn a1() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for alpha in [0.5, 1.0, 2.0, 5.0] {
        for p in [0.5, 1.0, 1.5, 2.0, 3.0] {
            for beta in [-1.5, -0.5, 0.0, 0.5, 1.0, 2.5] {
                let s = p * alpha + beta;
                if s <= -1.0 {
                    continue;
                }
                let params = NormParams::new(alpha, p, beta, 0).map_err(|e| e.to_string())?;
                let got = exact_norm(&params, 1e-12).map_err(|e| e.to_string())?.value;
                let want = (gamma_ln(s + 1.0).unwrap() - p * gamma_ln(alpha + 1.0).unwrap() - (s + 1.0) * p.ln()).exp();
                worst = worst.max((got / want - 1.0).abs());
                count += 1;
            }
        }
    }
    ensure(worst < 1e-10, format!("{count} cases, worst relative error {worst:.2e} (< 1e-10)"))
}

/// ∫ρ r^{D−1} dr by quadrature of the density itself, split at its nodes.
fn radial_mass(st: &QuantumState) -> f64 {
    let rho = RadialDensity::new(st).unwrap();
    let lam = st.lambda_scale();
    let d = st.dim as i32;
    let f = |r: f64| if r <= 0.0 { 0.0 } else { rho.eval(r) * r.powi(d - 1) };
    let mut pts = vec![0.0];
    pts.extend(laguerre_zeros(st.n_r(), st.alpha()).unwrap().into_iter().map(|x| x * lam));
    // past both the outermost node and the x ≈ α+1 bulk of a nodeless state
    let far = (pts.last().unwrap() / lam).max(st.alpha() + 1.0);
    pts.push(lam * far);
    let end = lam * (far + 60.0 + 10.0 * far.sqrt());
    pts.push(end);
    let cfg = QuadConfig::new(1e-12).with_max_subintervals(5000);
    integrate_breakpoints(f, &pts, &cfg, Strategy::Sequential).value + integrate(f, end, f64::INFINITY, &cfg).value
}

fn a2() -> Outcome {
    let mut states = Vec::new();
    for dim in [2u32, 3, 4, 6] {
        for z in [1.0, 10.0] {
            for n in 1..=50u32 {
                let mut ls = vec![0, 1, n - 1];
                ls.sort();
                ls.dedup();
                for l in ls.into_iter().filter(|&l| l < n) {
                    states.push(QuantumState::with_l(dim, z, n, l).unwrap());
                }
            }
        }
    }
    let errs = exec::map(Strategy::Parallel, &states, |st| {
        let ang = angular_moment(&st.harmonic(), 1.0, 1e-12).unwrap();
        (radial_mass(st) * ang - 1.0).abs()
    });
    let worst = errs.iter().cloned().fold(0.0, f64::max);
    ensure(worst < 1e-8, format!("{} states, worst |W1 - 1| = {worst:.2e} (< 1e-8)", states.len()))
}

fn a3() -> Outcome {
    let g = QuantumState::with_l(3, 1.0, 1, 0).unwrap();
    let mut worst_r: f64 = 0.0;
    for p in [0.5, 2.0, 3.0] {
        let r = renyi_total(&g, p, Backend::Exact).map_err(|e| e.to_string())?.r_p;
        worst_r = worst_r.max((r - (PI.ln() + 3.0 * p.ln() / (p - 1.0))).abs());
    }
    let s = shannon_total(&g, &EntropyConfig::default()).map_err(|e| e.to_string())?.s.unwrap();
    let ds = (s - (PI.ln() + 3.0)).abs();
    let w2 = renyi_total(&g, 2.0, Backend::Exact).map_err(|e| e.to_string())?.disequilibrium.unwrap();
    let dw = (w2 - 1.0 / (8.0 * PI)).abs();
    ensure(
        worst_r < 1e-8 && ds < 1e-7 && dw < 1e-10,
        format!("|ΔR_p| = {worst_r:.2e}, |ΔS| = {ds:.2e}, |ΔW2| = {dw:.2e}"),
    )
}

fn a4() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for (dim, p, name) in [(3, 1.5, "cosine"), (3, 3.0, "bessel"), (2, 3.0, "airy")] {
        let ratio = |n: u32| {
            let st = QuantumState::with_l(dim, 1.0, n, 0).unwrap();
            (ln_norm(dim, n, 0, p) - asymptotic_norm(&st, p).unwrap().ln_value).exp()
        };
        let (r50, r200) = (ratio(50), ratio(200));
        ok &= (r200 - 1.0).abs() < (r50 - 1.0).abs() && (0.8..=1.2).contains(&r200);
        lines.push(format!("{name} D={dim} p={p}: {r50:.6} -> {r200:.6}"));
    }
    ensure(ok, lines.join("; "))
}

fn a5() -> Outcome {
    // N·π²·n_r^{-e}/ln n_r with the printed power e of each log law
    let mut lines = Vec::new();
    let mut ok = true;
    for (dim, e) in [(3u32, -1.0), (2, 0.0)] {
        let stat = |n: u32| {
            let nr = (n - 1) as f64;
            ln_norm(dim, n, 0, 2.0).exp() * PI * PI * nr.powf(-e) / nr.ln()
        };
        let (a, b) = (stat(100), stat(200));
        let var = (a - b).abs() / a.min(b);
        ok &= var < 0.15;
        lines.push(format!("D={dim}: {a:.5} vs {b:.5} ({:.1}%)", 100.0 * var));
    }
    ensure(ok, lines.join("; "))
}

fn a6() -> Outcome {
    let c11 = constant_c(1.0, 1.0).map_err(|e| e.to_string())?;
    let mut ok = (c11 - 1.0).abs() < 1e-14;
    let mut lines = vec![format!("C(1,1) = {c11}")];
    let mut gaps = Vec::new();
    for n in [50u32, 200] {
        let st = QuantumState::with_l(3, 1.0, n, 0).unwrap();
        let exact = ln_norm(3, n, 0, 1.0).exp();
        let want = 2.0 * st.n_r() as f64 + st.alpha() + 1.0;
        let rel = (exact / want - 1.0).abs();
        let ratio = asymptotic_norm(&st, 1.0).unwrap().value() / exact;
        ok &= rel < 1e-9;
        gaps.push((1.0 - ratio) * n as f64);
        lines.push(format!("n={n}: |N/(2n_r+α+1) - 1| = {rel:.1e}, asym/exact = {ratio:.6}"));
    }
    // 1 − ratio = (α+1)/(2n_r+α+1) ≈ 1/n: n·(1 − ratio) stays near 1
    ok &= gaps.iter().all(|g| (0.9..1.1).contains(g));
    ensure(ok, lines.join("; "))
}

fn a7() -> Outcome {
    let mut worst_forms: f64 = 0.0;
    for d in 2..=12 {
        for p in [0.5, 1.0, 1.5, 2.0, 3.0] {
            let a = f_closed_form(p, d).unwrap();
            let b = ln_f_closed_form_body(p, d).unwrap().exp();
            worst_forms = worst_forms.max((a - b).abs() / a.max(1.0));
        }
    }
    let y3 = (shannon_y00(3).unwrap() - (4.0 * PI).ln()).abs();
    let mut worst_lim: f64 = 0.0;
    for d in 2..=8 {
        let h = 1e-5;
        let lo = ln_f_closed_form(1.0 - h, d).unwrap() / h;
        let hi = ln_f_closed_form(1.0 + h, d).unwrap() / -h;
        let s = shannon_y00(d).unwrap();
        worst_lim = worst_lim.max((lo - s).abs()).max((hi - s).abs());
    }
    ensure(
        worst_forms < 1e-12 && y3 < 1e-12 && worst_lim < 1e-4,
        format!("forms {worst_forms:.1e}, S(Y00,3) {y3:.1e}, p→1 limit {worst_lim:.1e}"),
    )
}

fn strictly(values: &[f64], increasing: bool) -> bool {
    values.windows(2).all(|w| if increasing { w[1] > w[0] } else { w[1] < w[0] })
}

fn a8() -> Outcome {
    let cfg = EntropyConfig::default();
    let mut lines = Vec::new();
    let mut ok = true;
    for s in figures::fig1(25) {
        let r: Vec<f64> = s.evaluate(Backend::Exact, &cfg).map_err(|e| e.to_string())?.iter().map(|r| r.r_p).collect();
        let inc = strictly(&r, true);
        ok &= inc;
        lines.push(format!("fig1 {}: {}", s.name, if inc { "increasing" } else { "NOT increasing" }));
    }
    for s in figures::fig2() {
        let r: Vec<f64> = s.evaluate(Backend::Exact, &cfg).map_err(|e| e.to_string())?.iter().map(|r| r.r_p).collect();
        let dec = strictly(&r, false);
        ok &= dec;
        lines.push(format!("fig2: {}", if dec { "decreasing" } else { "NOT decreasing" }));
    }
    let mut worst_z: f64 = 0.0;
    for s in figures::fig3() {
        let translated = s.evaluate(Backend::Exact, &cfg).map_err(|e| e.to_string())?;
        let r1 = translated[0].r_p;
        for rep in &translated {
            let want = r1 - s.dim as f64 * rep.state.z.ln();
            worst_z = worst_z.max((rep.r_p - want).abs());
        }
        // spot-check the identity against a direct evaluation
        let st = QuantumState::with_l(s.dim, 103.0, s.n, 0).unwrap();
        let direct = renyi_total(&st, s.p, Backend::Exact).map_err(|e| e.to_string())?.r_p;
        worst_z = worst_z.max((direct - translated.last().unwrap().r_p).abs());
        ok &= strictly(&translated.iter().map(|r| r.r_p).collect::<Vec<_>>(), false);
    }
    ok &= worst_z < 1e-10;
    lines.push(format!("fig3: Z-translation error {worst_z:.1e}"));
    for s in figures::fig4(1) {
        let r: Vec<f64> = s.evaluate(Backend::Asymptotic, &cfg).map_err(|e| e.to_string())?.iter().map(|r| r.r_p).collect();
        let inc = strictly(&r, true);
        ok &= inc;
        lines.push(format!("fig4 {}: {}", s.name, if inc { "increasing" } else { "NOT increasing" }));
    }
    ensure(ok, lines.join("; "))
}

fn a9() -> Outcome {
    let mut diffs = Vec::new();
    for n in [50u32, 100, 200] {
        let st = QuantumState::with_l(3, 1.0, n, 0).unwrap();
        let s = shannon_radial_exact(&st, 1e-9).map_err(|e| e.to_string())? + shannon_y00(3).unwrap();
        diffs.push((s - (6.0 * (n as f64).ln() + (2.0 * PI * PI).ln())).abs());
    }
    ensure(strictly(&diffs, false), format!("|S - (6 ln n + ln 2π²)| = {diffs:.4?}"))
}

fn a10() -> Outcome {
    // Laguerre orthonormality
    let mut worst_orth: f64 = 0.0;
    let cfg = QuadConfig::new(1e-13).with_max_subintervals(4000);
    let alpha = 0.5;
    let zeros = laguerre_zeros(40, alpha).unwrap();
    let mut pts = vec![0.0];
    pts.extend(zeros.iter().copied());
    pts.push(zeros.last().unwrap() + 60.0);
    for j in 0..30 {
        for k in j..30 {
            let f = |x: f64| {
                laguerre_orthonormal(j, alpha, x).unwrap()
                    * laguerre_orthonormal(k, alpha, x).unwrap()
                    * x.powf(alpha)
                    * (-x).exp()
            };
            let v = integrate_breakpoints(f, &pts, &cfg, Strategy::Sequential).value;
            let want = if j == k { 1.0 } else { 0.0 };
            worst_orth = worst_orth.max((v - want).abs());
        }
    }
    // Airy equation Ai'' = y·Ai by a fourth-order central difference
    let h = 1e-2;
    let mut worst_ode: f64 = 0.0;
    for i in 0..=300 {
        let y = -15.0 + 0.1 * i as f64;
        let d2 = (-airy_ai(y + 2.0 * h) + 16.0 * airy_ai(y + h) - 30.0 * airy_ai(y) + 16.0 * airy_ai(y - h)
            - airy_ai(y - 2.0 * h))
            / (12.0 * h * h);
        worst_ode = worst_ode.max((d2 - y * airy_ai(y)).abs());
    }
    let mut worst_half: f64 = 0.0;
    for i in 1..=1000 {
        let z = i as f64 * 0.5;
        worst_half = worst_half.max((bessel_j(0.5, z).unwrap() - (2.0 / (PI * z)).sqrt() * z.sin()).abs());
    }
    let mut zeros1 = BesselZeros::new(1.0).unwrap();
    let j1 = integrate_oscillatory_semiinfinite(
        OscillatorySpec::new(|t| bessel_j(1.0, t).unwrap(), move |k| zeros1.get(k), -0.5).lobes(LobeKind::Alternating),
        1e-10,
    )
    .map_err(|e| e.to_string())?
    .value;
    let sinc = integrate_oscillatory_semiinfinite(
        OscillatorySpec::new(|t: f64| if t == 0.0 { 1.0 } else { (t.sin() / t).powi(2) }, |k| k as f64 * PI, -2.0)
            .lobes(LobeKind::Positive { mean_amplitude: Some(0.5) }),
        1e-10,
    )
    .map_err(|e| e.to_string())?
    .value;
    let (dj, ds) = ((j1 - 1.0).abs(), (sinc - PI / 2.0).abs());
    ensure(
        worst_orth < 1e-10 && worst_ode < 1e-6 && worst_half < 1e-10 && dj < 1e-8 && ds < 1e-8,
        format!(
            "orthonormality {worst_orth:.1e}, Airy ODE {worst_ode:.1e}, J_1/2 {worst_half:.1e}, ∫J1 {dj:.1e}, ∫sinc² {ds:.1e}"
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("A1", a1, Some(Duration::from_secs(5))),
        ("A2", a2, Some(Duration::from_secs(60))),
        ("A3", a3, None),
        ("A4", a4, Some(Duration::from_secs(120))),
        ("A5", a5, None),
        ("A6", a6, None),
        ("A7", a7, None),
        ("A8", a8, None),
        ("A9", a9, None),
        ("A10", a10, None),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = t.elapsed();
        let late = budget.is_some_and(|b| took > b);
        let (tag, msg) = match (&outcome, late) {
            (Ok(m), false) => ("PASS", m.clone()),
            (Ok(m), true) => ("FAIL", format!("{m} [over runtime budget {:?}]", budget.unwrap())),
            (Err(m), _) => ("FAIL", m.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{name} {tag} ({:.1}s) {msg}", took.as_secs_f64());
    }
    let total = start.elapsed();
    let over = total > Duration::from_secs(600);
    println!("total {:.1}s{}", total.as_secs_f64(), if over { " [over 10 min]" } else { "" });
    if failed > 0 || over {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
