//! Acceptance criteria, one line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the pass/fail table is
//! always printed; the process exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;

use rand::Rng;
use trexp_core::closed_form::{density_dhat, f_closed, integrate, rho_closed, spectral_measure};
use trexp_core::convexity::{
    aggregate_verdict, check_exp_convex, gram_report, Verdict, CERTIFY_GRID,
};
use trexp_core::pauli::{eigen2, pauli_sigma, pauli_tau};
use trexp_core::reduction::{f_canonical, f_direct, reduce};
use trexp_core::sampling::{random_grids, random_hermitian, seeded, DEFAULT_SEED};
use trexp_core::word_measure::{
    binomial, build_rho_n, convergence_table, enumerate_position_sets, eval_e_n_direct,
    eval_e_n_measure, gap_count, gap_histogram_by_enumeration,
};

struct Outcome {
    pass: bool,
    measured: String,
    tolerance: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(pass: bool, measured: impl Into<String>, tolerance: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        measured: measured.into(),
        tolerance: tolerance.into(),
    }
}

fn closed_form_identity() -> Outcome {
    let params = [0.0, 0.5, 1.0, 2.0, 5.0];
    let mut worst = 0.0f64;
    for &alpha in &params {
        for &beta in &params {
            for i in -8..=8 {
                let t = 0.5 * i as f64;
                let f = f_direct(&pauli_sigma().scale(alpha), &pauli_tau().scale(beta), t);
                let rel = (f - f_closed(alpha, beta, t)).abs() / f;
                worst = worst.max(rel);
            }
        }
    }
    outcome(worst <= 1e-11, format!("max rel {worst:.2e}"), "1e-11 rel")
}

fn reduction_round_trip() -> Outcome {
    let mut rng = seeded(DEFAULT_SEED);
    let (mut worst_f, mut worst_tr) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let a = random_hermitian(&mut rng, 3.0);
        let b = random_hermitian(&mut rng, 3.0);
        let dec = reduce(&a, &b);
        for _ in 0..20 {
            let t = rng.gen_range(-5.0..=5.0);
            let direct = f_direct(&a, &b, t);
            worst_f = worst_f.max((f_canonical(&dec, t) - direct).abs() / direct);
        }
        let a0 = dec.reconstructed_a0();
        let b0 = dec.reconstructed_b0();
        worst_tr = worst_tr
            .max(a0.trace().norm())
            .max(b0.trace().norm())
            .max((a0 * b0).trace().norm());
    }
    outcome(
        worst_f <= 1e-10 && worst_tr <= 1e-12,
        format!("max rel residual {worst_f:.2e}, max trace {worst_tr:.2e}"),
        "1e-10 rel, 1e-12 abs",
    )
}

fn word_measure_exactness() -> Outcome {
    let mut worst = 0.0f64;
    let mut worst_weight = 0.0f64;
    let mut tables_match = true;
    for n in 2..=12usize {
        for l in 1..=n / 2 {
            let hist = gap_histogram_by_enumeration(n, l).expect("within guard");
            let formula: BTreeMap<usize, u128> = (l..=n - l)
                .map(|s| (s, gap_count(n, l, s).expect("in range")))
                .collect();
            tables_match &= hist == formula;
        }
        for beta in [0.5, 1.0, 3.0] {
            let rho = build_rho_n(n, beta).expect("valid n");
            // atom weights from the enumeration itself
            let x2 = (beta / n as f64).powi(2);
            let mut by_gap: BTreeMap<usize, f64> = BTreeMap::from([(0, 1.0)]);
            for l in 1..=n / 2 {
                for ps in enumerate_position_sets(n, 2 * l).expect("within guard") {
                    *by_gap.entry(ps.gap_sum().expect("even")).or_insert(0.0) += x2.powi(l as i32);
                }
            }
            let same_support = by_gap.len() == rho.atoms.len()
                && rho.atoms.iter().all(|a| by_gap.contains_key(&a.s));
            tables_match &= same_support;
            for atom in &rho.atoms {
                let w = by_gap.get(&atom.s).copied().unwrap_or(f64::NAN);
                worst_weight = worst_weight.max((atom.weight - w).abs() / w);
            }
            for t in [-2.0, 1.0] {
                let direct = eval_e_n_direct(t, 1.0, beta, n);
                let measure = eval_e_n_measure(t, 1.0, &rho);
                let scale = measure.max_abs();
                for (d, m) in direct.entries().iter().zip(measure.entries()) {
                    let denom = if m.norm() > 0.0 { m.norm() } else { scale };
                    worst = worst.max((d - m).norm() / denom);
                }
            }
        }
    }
    outcome(
        worst <= 1e-11 && tables_match && worst_weight <= 1e-12,
        format!(
            "max entrywise rel {worst:.2e}, multiplicity tables identical: {tables_match}, weight rel {worst_weight:.2e}"
        ),
        "1e-11 rel, exact tables, weights 1e-12 rel",
    )
}

fn combinatorial_counts() -> Outcome {
    let mut ok = true;
    for n in 1..=12usize {
        for m in 0..=n {
            let count = enumerate_position_sets(n, m).expect("within guard").len() as u128;
            ok &= Some(count) == binomial(n as u64, m as u64);
        }
        for l in 1..=n / 2 {
            let total: u128 = (l..=n - l)
                .map(|s| gap_count(n, l, s).expect("in range"))
                .sum();
            ok &= Some(total) == binomial(n as u64, 2 * l as u64);
        }
    }
    outcome(ok, format!("all counts binomial: {ok}"), "exact")
}

fn mass_bound() -> Outcome {
    let mut worst_ratio = 0.0f64;
    let mut nonneg = true;
    for n in [4, 16, 64, 256, 1024, 4096] {
        for beta in [0.5f64, 1.0, 2.0, 4.0] {
            let rho = build_rho_n(n, beta).expect("valid n");
            worst_ratio = worst_ratio.max(rho.total_mass() / beta.exp());
            nonneg &= rho.atoms.iter().all(|a| a.weight >= 0.0);
        }
    }
    outcome(
        worst_ratio < 1.0 && nonneg,
        format!("max mass / e^beta = {worst_ratio:.6}, weights non-negative: {nonneg}"),
        "< 1",
    )
}

fn lie_product_convergence() -> Outcome {
    let rows = convergence_table(1.0, 1.0, 1.0, &[64, 128, 256, 512]);
    let ratios: Vec<f64> = rows[1..]
        .iter()
        .map(|r| r.ratio.expect("not first row"))
        .collect();
    let err512 = rows[3].error;
    let pass = err512 <= 1e-2 && ratios.iter().all(|r| (1.7..=2.3).contains(r));
    outcome(
        pass,
        format!("error(512) = {err512:.3e}, ratios = {ratios:.4?}"),
        "error(512) <= 1e-2, ratios in [1.7, 2.3]",
    )
}

fn bessel_representation() -> Outcome {
    let mut worst_rep = 0.0f64;
    let mut worst_end = 0.0f64;
    let mut worst_int = 0.0f64;
    for beta in [0.5f64, 1.0, 2.0] {
        for i in 0..21 {
            let t = -5.0 + 0.5 * i as f64;
            let integral = integrate(
                |mu| density_dhat(mu, beta).unwrap() * (mu * t).exp(),
                -1.0,
                1.0,
            )
            .expect("smooth integrand");
            let residual = t.hypot(beta).cosh() - t.cosh() - integral;
            worst_rep = worst_rep.max(residual.abs());
        }
        for mu in [-1.0, 1.0] {
            worst_end = worst_end.max((density_dhat(mu, beta).unwrap() - beta * beta / 4.0).abs());
        }
    }
    for beta in [0.25f64, 0.5, 1.0, 2.0, 4.0, 8.0] {
        let integral =
            integrate(|mu| density_dhat(mu, beta).unwrap(), -1.0, 1.0).expect("smooth integrand");
        worst_int = worst_int.max((integral - (beta.cosh() - 1.0)).abs());
    }
    outcome(
        worst_rep <= 1e-8 && worst_end <= 1e-10 && worst_int <= 1e-10,
        format!(
            "representation {worst_rep:.2e}, endpoint {worst_end:.2e}, integral {worst_int:.2e}"
        ),
        "1e-8, 1e-10, 1e-10",
    )
}

fn measure_consistency() -> Outcome {
    let mut worst = 0.0f64;
    for beta in [0.5, 1.0, 2.0] {
        let discrete = build_rho_n(2048, beta).expect("valid n");
        let limit = rho_closed(beta).expect("beta in range");
        for k in 0..=6 {
            let gap = (discrete.moment(k) - limit.moment(k).expect("smooth integrand")).abs();
            worst = worst.max(gap);
        }
    }
    outcome(worst <= 5e-3, format!("max moment gap {worst:.3e}"), "5e-3")
}

fn gram_certification() -> Outcome {
    let mut rng = seeded(DEFAULT_SEED);
    let mut verdicts = Vec::new();
    let mut worst = f64::INFINITY;
    for _ in 0..50 {
        let a = random_hermitian(&mut rng, 3.0);
        let b = random_hermitian(&mut rng, 3.0);
        let grids = random_grids(&mut rng, 20, CERTIFY_GRID, -3.0, 3.0);
        let reports =
            check_exp_convex(|t| f_direct(&a, &b, t), &grids).expect("grids within limit");
        worst = reports
            .iter()
            .map(|r| r.min_eigenvalue / r.scale)
            .fold(worst, f64::min);
        verdicts.push(aggregate_verdict(&reports));
    }
    let all_certified = verdicts.iter().all(|v| *v == Verdict::CertifiedPsd);
    let square = gram_report(|t| t * t, &[-1.0, 0.0, 1.0]).expect("small grid");
    let flagged = square.verdict == Verdict::Violated;
    outcome(
        all_certified && flagged,
        format!(
            "50 pairs certified: {all_certified} (worst min_eig/scale {worst:.2e}); t^2 verdict {} (min_eig {:.4})",
            square.verdict, square.min_eigenvalue
        ),
        "min_eig >= -1e-9 scale",
    )
}

fn spectral_support() -> Outcome {
    let mut rng = seeded(DEFAULT_SEED + 1);
    let (mut worst_support, mut worst_transform) = (0.0f64, 0.0f64);
    for _ in 0..50 {
        let a = random_hermitian(&mut rng, 3.0);
        let b = random_hermitian(&mut rng, 3.0);
        let m = spectral_measure(&a, &b).expect("beta in range");
        let (l1, l2, _) = eigen2(&a);
        worst_support = worst_support
            .max((m.support_lo - l2).abs())
            .max((m.support_hi - l1).abs());
        for i in -6..=6 {
            let t = 0.5 * i as f64;
            let direct = f_direct(&a, &b, t);
            let got = m.laplace(t).expect("smooth integrand");
            worst_transform = worst_transform.max((got - direct).abs() / direct);
        }
    }
    outcome(
        worst_support <= 1e-10 && worst_transform <= 1e-8,
        format!("support error {worst_support:.2e}, transform rel {worst_transform:.2e}"),
        "1e-10, 1e-8 rel",
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1  closed-form identity", closed_form_identity),
        ("2  reduction round-trip", reduction_round_trip),
        ("3  word-measure exactness", word_measure_exactness),
        ("4  combinatorial counts", combinatorial_counts),
        ("5  mass bound", mass_bound),
        ("6  Lie-product convergence", lie_product_convergence),
        ("7  Bessel representation", bessel_representation),
        ("8  measure consistency", measure_consistency),
        ("9  Gram certification", gram_certification),
        ("10 spectral support", spectral_support),
    ];

    let mut failures = 0;
    for (name, check) in criteria {
        let o = check();
        if !o.pass {
            failures += 1;
        }
        println!(
            "[{}] {name:<28} measured: {} | tolerance: {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.measured,
            o.tolerance
        );
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
