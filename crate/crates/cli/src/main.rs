//! `liecli`: one binary driving the exact structure-constant tables, the
//! causal region maps, the star-product numerics, the four-dimensional
//! subalgebra classification, and the extension isomorphism checks.
//!
//! Every command is deterministic given its flags and the global `--seed`
//! (recorded in each output). Exit codes: 0 on success, 1 on a verification
//! failure, 2 on a configuration error.

use ads_causal::{
    circle_point, classify, fall_time_bisection, fall_times, rotation, AdSPoint,
    CausalLabel, HitTime, LightDirection,
};
use algebra_classifier::classification_report;
use clap::{Parser, Subcommand, ValueEnum};
use heisenberg_ext::{
    build_extension, check_extension_isomorphism, conjugate_x, kill_mu, scale_d,
    standard_omega,
};
use lie_core::algebras::{
    coefficient_map, phi_roots_to_so21, phi_sl2c_to_sp2r_images, psi_sl2r_to_su11,
    psi_so23_to_sp2r_images, sl2_abstract_roots, sl2_e, sl2_f, sl2_h, sl2_t, sl2c, sl2r,
    so21, so23_an_first, so23_named, so23_r_second, so23_reductive_q, so2n_full, sp2r,
    su11,
};
use lie_core::{
    bracket, cartan_decompose, format_q, iwasawa, qi, qr, verify_isomorphism, FMat,
    IwasawaSpec, KillingConvention, LieAlgebraBasis, Q, QMat,
};
use serde_json::json;
use star_engine::{
    closedness_check, default_closedness_pair, group_action_product, slope_report,
    Convention, Pullback,
};
use std::f64::consts::{FRAC_PI_2, PI};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "liecli", version, about = "Exact Lie-theoretic tables, causal maps, and star-product numerics")]
struct Cli {
    /// Seed recorded in every output for reproducibility.
    #[arg(long, global = true, default_value_t = 2026)]
    seed: u64,
    /// Write the output to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify all structure-constant tables, Killing fixtures,
    /// decompositions, and isomorphisms; nonzero exit names the offender.
    VerifyTables {
        /// Corrupt one expected constant to exercise the failure path.
        #[arg(long)]
        inject_fault: bool,
    },
    /// CSV causal map: rows (mu, w2, s_an, s_anbar, label).
    RegionMap {
        /// Quadric dimension, one of 2, 3, 4.
        #[arg(long)]
        l: usize,
        /// Grid points per axis (at least 8).
        #[arg(long, default_value_t = 64)]
        grid: usize,
    },
    /// Closed-form fall times at angle mu, direction component w2, with the
    /// root-finding cross-check.
    Geodesic {
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
        #[arg(long, allow_negative_numbers = true)]
        w2: f64,
    },
    /// Star-product numerics: asymptotic slope report, strong-closedness
    /// value pair, or the product of constant symbols.
    Star {
        #[arg(long, value_enum)]
        mode: StarMode,
        /// Exponent convention for the slope report.
        #[arg(long, value_enum, default_value_t = Conv::Scaled)]
        convention: Conv,
        /// Quadrature panels per axis (default 64 for slope, 48 for
        /// closedness).
        #[arg(long)]
        n: Option<usize>,
        /// First constant symbol (moyal mode).
        #[arg(long, default_value_t = 0.7, allow_negative_numbers = true)]
        c1: f64,
        /// Second constant symbol (moyal mode).
        #[arg(long, default_value_t = -1.2, allow_negative_numbers = true)]
        c2: f64,
    },
    /// JSON report of the four-dimensional subalgebra classification.
    ClassifyAlgebras,
    /// Extension determinant identity and isomorphism checks.
    Heisenberg,
    /// Numeric factorization g = exp(a) exp(nbar) k of a sample group
    /// element built from the rotation at angle mu (local Gauss-Newton).
    IwasawaFactor {
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum StarMode {
    Slope,
    Closedness,
    Moyal,
}

#[derive(ValueEnum, Clone, Copy)]
enum Conv {
    /// Phase exp(-(i/theta) S), amplitude 1/(3 pi^2 theta^2).
    Scaled,
    /// Phase exp((2i/theta) S), amplitude 4/(3 pi^2 theta^2).
    TwoIOverTheta,
}

enum CmdError {
    /// A mathematical check failed; the payload is still a full report.
    Verification(String),
    Config(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => match emit(&cli.out, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(msg) => {
                eprintln!("configuration error: {msg}");
                ExitCode::from(2)
            }
        },
        Err(CmdError::Verification(text)) => {
            let _ = emit(&cli.out, &text);
            ExitCode::from(1)
        }
        Err(CmdError::Config(msg)) => {
            eprintln!("configuration error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<String, CmdError> {
    match &cli.command {
        Cmd::VerifyTables { inject_fault } => cmd_verify_tables(cli.seed, *inject_fault),
        Cmd::RegionMap { l, grid } => cmd_region_map(cli.seed, *l, *grid),
        Cmd::Geodesic { mu, w2 } => cmd_geodesic(cli.seed, *mu, *w2),
        Cmd::Star { mode, convention, n, c1, c2 } => {
            cmd_star(cli.seed, *mode, *convention, *n, *c1, *c2)
        }
        Cmd::ClassifyAlgebras => cmd_classify_algebras(cli.seed),
        Cmd::Heisenberg => cmd_heisenberg(cli.seed),
        Cmd::IwasawaFactor { mu } => cmd_iwasawa_factor(cli.seed, *mu),
    }
}

// ---------------------------------------------------------------- tables

fn cmd_verify_tables(seed: u64, inject_fault: bool) -> Result<String, CmdError> {
    let mut checks: Vec<(String, bool, String)> = Vec::new();
    let mut add = |name: &str, ok: bool, detail: &str| {
        checks.push((name.to_string(), ok, detail.to_string()));
    };

    // sl(2,R) bracket fixtures on the defining matrices
    let (h, e, f) = (sl2_h(), sl2_e(), sl2_f());
    let he_factor = if inject_fault { qi(3) } else { qi(2) };
    add("[H,E]", bracket(&h, &e) == e.scale(&he_factor), "expected 2 E");
    add("[H,F]", bracket(&h, &f) == f.scale(&qi(-2)), "expected -2 F");
    add("[E,F]", bracket(&e, &f) == h, "expected H");

    // every shipped table closes with the exact Jacobi identity and
    // round-trips through its own structure constants
    for alg in [
        sl2r(),
        sl2_abstract_roots(),
        su11(),
        so21(),
        sl2c(),
        sp2r(),
        so23_named(),
        so23_an_first(),
        so23_r_second(),
    ] {
        let ok = LieAlgebraBasis::from_structure_constants(
            &alg.name,
            &alg.labels,
            alg.basis.clone(),
            alg.structure_constants.clone(),
        )
        .map(|r| r.structure_constants == alg.structure_constants)
        .unwrap_or(false);
        add(&format!("{} table", alg.name), ok, "exact closure and Jacobi");
    }
    add(
        "su(1,1) table equals sl(2,R)",
        su11().structure_constants == sl2r().structure_constants,
        "realified basis has identical constants",
    );

    // Killing fixtures
    let alg = sl2r();
    let hc = alg.unit("H").expect("H");
    let ec = alg.unit("E").expect("E");
    let tc = alg.expand(&sl2_t()).expect("T = E - F lies in the span");
    let b = |x: &[Q], y: &[Q]| alg.killing_form(x, y, KillingConvention::AdTrace);
    add("B(H,H)", b(&hc, &hc) == qi(8), "ad-trace, expected 8");
    add("B(T,T)", b(&tc, &tc) == qi(-8), "ad-trace, expected -8");
    add("B(T,E)", b(&tc, &ec) == qi(-4), "ad-trace, expected -4");
    let so = so2n_full(3);
    for (i, q) in so23_reductive_q().iter().enumerate() {
        let c = so.expand(q).expect("q_i lies in so(2,3)");
        let want = if i == 0 { qi(-2) } else { qi(2) };
        add(
            &format!("B(q{i},q{i})"),
            so.killing_form(&c, &c, KillingConvention::MatrixTrace) == want,
            "matrix-trace fixture",
        );
    }

    // decompositions
    let cart_ok = cartan_decompose(&sl2r())
        .map(|d| {
            d.part("K").map(|p| p.vectors.len()) == Some(1)
                && d.part("P").map(|p| p.vectors.len()) == Some(2)
        })
        .unwrap_or(false);
    add("Cartan decomposition of sl(2,R)", cart_ok, "dim K = 1, dim P = 2");
    let spec = IwasawaSpec { abelian_labels: vec!["H".into()], weights: vec![qi(1)] };
    let iw_ok = iwasawa(&sl2r(), &spec)
        .map(|d| {
            ["A", "N", "K"]
                .iter()
                .all(|n| d.part(n).map(|p| p.vectors.len()) == Some(1))
        })
        .unwrap_or(false);
    add("Iwasawa decomposition of sl(2,R)", iw_ok, "dim A = dim N = dim K = 1");

    // isomorphisms
    let r = verify_isomorphism(&sl2r(), &su11(), &psi_sl2r_to_su11())
        .expect("dimensions match");
    add("psi: sl(2,R) -> su(1,1)", r.is_isomorphism, "identity coefficient map");
    let r = verify_isomorphism(&sl2_abstract_roots(), &so21(), &phi_roots_to_so21())
        .expect("dimensions match");
    add(
        "phi: roots -> so(2,1)",
        r.is_isomorphism && r.det == Some(qi(-2)),
        "det -2",
    );
    let dst = sp2r();
    let map = coefficient_map(&dst, &psi_so23_to_sp2r_images()).expect("images lie in sp");
    let r = verify_isomorphism(&so23_named(), &dst, &map).expect("dimensions match");
    add("psi: so(2,3) -> sp(2,R)", r.is_isomorphism, "10-dimensional isomorphism");
    let map = coefficient_map(&dst, &phi_sl2c_to_sp2r_images()).expect("images lie in sp");
    let r = verify_isomorphism(&sl2c(), &dst, &map).expect("dimensions match");
    add(
        "phi: sl(2,C) -> sp(2,R)",
        r.is_homomorphism && map.rank() == 6,
        "injective homomorphism onto a 6-dimensional subalgebra",
    );

    // so(2,3) Iwasawa-subalgebra table, line by line
    let an = so23_an_first();
    let mut table = Vec::new();
    for i in 0..an.dim() {
        for j in (i + 1)..an.dim() {
            let terms: Vec<String> = an.structure_constants[i][j]
                .iter()
                .zip(&an.labels)
                .filter(|(c, _)| format_q(c) != "0")
                .map(|(c, l)| format!("({}) {}", format_q(c), l))
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            table.push(format!("[{}, {}] = {}", an.labels[i], an.labels[j], rhs));
        }
    }

    let failures: Vec<&(String, bool, String)> =
        checks.iter().filter(|(_, ok, _)| !ok).collect();
    let report = json!({
        "command": "verify-tables",
        "seed": seed,
        "failures": failures.len(),
        "failed": failures.iter().map(|(n, _, _)| n.clone()).collect::<Vec<_>>(),
        "checks": checks
            .iter()
            .map(|(n, ok, d)| json!({"name": n, "ok": ok, "detail": d}))
            .collect::<Vec<_>>(),
        "so23_iwasawa_table": table,
    });
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    if failures.is_empty() {
        Ok(text)
    } else {
        Err(CmdError::Verification(text))
    }
}

// ------------------------------------------------------------ region map

fn label_str(label: &CausalLabel) -> &'static str {
    match label {
        CausalLabel::Singular => "singular",
        CausalLabel::Interior => "interior",
        CausalLabel::Exterior => "exterior",
        CausalLabel::Horizon => "horizon",
    }
}

fn fmt_hit(t: &HitTime) -> String {
    match t {
        HitTime::At(s) => format!("{s:.12e}"),
        HitTime::Never => "inf".to_string(),
    }
}

fn cmd_region_map(seed: u64, l: usize, grid: usize) -> Result<String, CmdError> {
    if grid < 8 {
        return Err(CmdError::Config(format!(
            "grid must be at least 8 points per axis, got {grid}"
        )));
    }
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(["mu", "w2", "s_an", "s_anbar", "label"])
        .expect("header");
    match l {
        2 => {
            // cylinder grid (mu, x); the second column carries x
            for i in 0..grid {
                let mu = -3.0 + 6.0 * i as f64 / (grid - 1) as f64;
                for j in 0..grid {
                    let x = -4.0 + 8.0 * j as f64 / (grid - 1) as f64;
                    let r = (1.0 + x * x).sqrt();
                    let p = AdSPoint::new(2, vec![r * mu.cos(), -r * mu.sin(), x])
                        .map_err(|e| CmdError::Verification(e.to_string()))?;
                    let c = classify(&p, 8, 1e-9)
                        .map_err(|e| CmdError::Verification(e.to_string()))?;
                    wtr.write_record([
                        format!("{mu:.12e}"),
                        format!("{x:.12e}"),
                        String::new(),
                        String::new(),
                        label_str(&c.label).to_string(),
                    ])
                    .expect("row");
                }
            }
        }
        3 | 4 => {
            let mut mus: Vec<f64> = (0..grid)
                .map(|i| PI * i as f64 / (grid - 1) as f64)
                .collect();
            // make sure the cos(mu) = 0 marker is on the grid exactly
            if !mus.contains(&FRAC_PI_2) {
                mus.push(FRAC_PI_2);
                mus.sort_by(f64::total_cmp);
            }
            for mu in mus {
                let c = classify(&circle_point(mu, l), 16, 1e-9)
                    .map_err(|e| CmdError::Verification(e.to_string()))?;
                for j in 0..grid {
                    let w2 = -1.0 + 2.0 * j as f64 / (grid - 1) as f64;
                    let (sm, sp) = fall_times(mu, w2);
                    wtr.write_record([
                        format!("{mu:.12e}"),
                        format!("{w2:.12e}"),
                        fmt_hit(&sm),
                        fmt_hit(&sp),
                        label_str(&c.label).to_string(),
                    ])
                    .expect("row");
                }
            }
        }
        other => {
            return Err(CmdError::Config(format!(
                "l must be one of 2, 3, 4, got {other}"
            )))
        }
    }
    let data = String::from_utf8(wtr.into_inner().expect("csv buffer")).expect("utf8");
    Ok(format!("# seed={seed}\n{data}"))
}

// -------------------------------------------------------------- geodesic

fn cmd_geodesic(seed: u64, mu: f64, w2: f64) -> Result<String, CmdError> {
    if !(-1.0..=1.0).contains(&w2) {
        return Err(CmdError::Config(format!("|w2| must be at most 1, got {w2}")));
    }
    let (sm, sp) = fall_times(mu, w2);
    let w1 = (1.0 - w2 * w2).max(0.0).sqrt();
    let dir = LightDirection::new(vec![w1, w2])
        .map_err(|e| CmdError::Config(e.to_string()))?;
    let oracle = fall_time_bisection(mu, &dir, 3);
    let closed_min = match (&sm, &sp) {
        (HitTime::At(a), HitTime::At(b)) => HitTime::At(a.min(*b)),
        (HitTime::At(a), HitTime::Never) => HitTime::At(*a),
        (HitTime::Never, HitTime::At(b)) => HitTime::At(*b),
        _ => HitTime::Never,
    };
    let agreement = match (&closed_min, &oracle) {
        (HitTime::At(a), HitTime::At(b)) => {
            (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
        }
        (HitTime::Never, HitTime::Never) => true,
        _ => false,
    };
    let report = json!({
        "command": "geodesic",
        "seed": seed,
        "mu": mu,
        "w2": w2,
        "s_an": sm.value(),
        "s_anbar": sp.value(),
        "bisection_min": oracle.value(),
        "agreement": agreement,
        "sheet_convention": "the sheet y = t is reached at s = -sin(mu)/(cos(mu)+w2) \
            and the sheet y = -t at s = sin(mu)/(w2-cos(mu)); the sheet-to-formula \
            assignment follows the root-finding oracle on the geodesic components, \
            which fixes the sign in front of sin(mu)",
    });
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    if agreement {
        Ok(text)
    } else {
        Err(CmdError::Verification(text))
    }
}

// ------------------------------------------------------------------ star

fn cmd_star(
    seed: u64,
    mode: StarMode,
    convention: Conv,
    n: Option<usize>,
    c1: f64,
    c2: f64,
) -> Result<String, CmdError> {
    match mode {
        StarMode::Slope => {
            let conv = match convention {
                Conv::Scaled => Convention::Scaled,
                Conv::TwoIOverTheta => Convention::TwoIOverTheta,
            };
            let rep = slope_report(conv, n.unwrap_or(64));
            let ok = rep.worst < 0.05;
            let text = serde_json::to_string_pretty(&json!({
                "command": "star",
                "seed": seed,
                "mode": "slope",
                "report": rep,
                "ok": ok,
            }))
            .expect("report serializes");
            if ok {
                Ok(text)
            } else {
                Err(CmdError::Verification(text))
            }
        }
        StarMode::Closedness => {
            let (u, v) = default_closedness_pair();
            let n = n.unwrap_or(48);
            let rep = closedness_check(&u, &v, 0.4, n, n);
            let ok = rep.relative_error < 1e-3;
            let text = serde_json::to_string_pretty(&json!({
                "command": "star",
                "seed": seed,
                "mode": "closedness",
                "report": rep,
                "ok": ok,
            }))
            .expect("report serializes");
            if ok {
                Ok(text)
            } else {
                Err(CmdError::Verification(text))
            }
        }
        StarMode::Moyal => {
            let prod = group_action_product(
                &Pullback::Constant(c1),
                &Pullback::Constant(c2),
                0.0,
                0.0,
                0.1,
                16,
            )
            .map_err(|e| CmdError::Verification(e.to_string()))?;
            Ok(serde_json::to_string_pretty(&json!({
                "command": "star",
                "seed": seed,
                "mode": "moyal",
                "u": c1,
                "v": c2,
                "product": [prod.re, prod.im],
            }))
            .expect("report serializes"))
        }
    }
}

// -------------------------------------------------------- classification

fn cmd_classify_algebras(seed: u64) -> Result<String, CmdError> {
    let rep = classification_report();
    let all_verified = rep["isomorphisms"]
        .as_array()
        .map(|v| v.iter().all(|iso| iso["verified"].as_bool() == Some(true)))
        .unwrap_or(false);
    let text = serde_json::to_string_pretty(&json!({
        "command": "classify-algebras",
        "seed": seed,
        "report": rep,
    }))
    .expect("report serializes");
    if all_verified {
        Ok(text)
    } else {
        Err(CmdError::Verification(text))
    }
}

// ------------------------------------------------------------ heisenberg

fn cmd_heisenberg(seed: u64) -> Result<String, CmdError> {
    // a traceless symplectic part, so X = d id + S satisfies the membership
    // condition at every d
    let s2 = QMat::from_i64(&[&[1, 2], &[5, -1]]);
    let d_values = [qi(-2), qi(-1), qr(1, 2), qi(1), qi(3)];
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 1..=2usize {
        for d in &d_values {
            let x = if n == 1 {
                &QMat::identity(2).scale(d) + &s2
            } else {
                QMat::identity(4).scale(d)
            };
            let ext = build_extension(n, x, vec![qi(0); 2 * n], d.clone())
                .map_err(|e| CmdError::Verification(e.to_string()))?;
            let want = qi(4) * d.clone() * d.clone() * standard_omega(n).det();
            let got = ext.symplectic_det();
            let matches = got == want && ext.is_symplectic();
            ok &= matches;
            rows.push(json!({
                "n": n,
                "d": format_q(d),
                "det": format_q(&got),
                "expected": format_q(&want),
                "matches": matches,
            }));
        }
    }
    let ext0 = build_extension(1, s2.clone(), vec![qi(0); 2], qi(0))
        .map_err(|e| CmdError::Verification(e.to_string()))?;
    let d_zero_degenerate = !ext0.is_symplectic() && ext0.symplectic_det() == qi(0);
    ok &= d_zero_degenerate;

    let generic_x = QMat::from_i64(&[&[3, 2], &[5, 1]]);
    let mut isos = Vec::new();
    let scale_ok = scale_d(1, generic_x.clone(), vec![qi(2), qr(-1, 3)], qr(5, 7))
        .map(|(src, dst, map)| check_extension_isomorphism(&src, &dst, &map))
        .unwrap_or(false);
    isos.push(json!({"name": "scale d", "ok": scale_ok}));
    let kill_ok = build_extension(1, generic_x.clone(), vec![qi(4), qr(3, 2)], qi(2))
        .ok()
        .and_then(|ext| {
            kill_mu(&ext).ok().map(|(dst, map)| {
                format_q(&dst.mu[0]) == "0"
                    && format_q(&dst.mu[1]) == "0"
                    && check_extension_isomorphism(&ext, &dst, &map)
            })
        })
        .unwrap_or(false);
    isos.push(json!({"name": "kill mu", "ok": kill_ok}));
    let conj_ok = build_extension(1, generic_x.clone(), vec![qi(0); 2], qi(2))
        .ok()
        .and_then(|ext| {
            let m = QMat::from_i64(&[&[1, 3], &[0, 1]]);
            conjugate_x(&ext, &m)
                .ok()
                .map(|(dst, map)| check_extension_isomorphism(&ext, &dst, &map))
        })
        .unwrap_or(false);
    isos.push(json!({"name": "conjugate X", "ok": conj_ok}));
    ok &= scale_ok && kill_ok && conj_ok;

    let sample = build_extension(1, generic_x, vec![qi(0); 2], qi(2))
        .map_err(|e| CmdError::Verification(e.to_string()))?;
    let text = serde_json::to_string_pretty(&json!({
        "command": "heisenberg",
        "seed": seed,
        "determinant_identity": "det Omega^F = 4 d^2 det Omega_V",
        "rows": rows,
        "d_zero_degenerate": d_zero_degenerate,
        "isomorphisms": isos,
        "sample_label": sample.label(),
    }))
    .expect("report serializes");
    if ok {
        Ok(text)
    } else {
        Err(CmdError::Verification(text))
    }
}

// -------------------------------------------------------- iwasawa factor

fn fmat_add(a: &FMat, b: &FMat) -> FMat {
    a.sub(&b.scale(-1.0))
}

fn lin_comb(basis: &[FMat], coeffs: &[f64]) -> FMat {
    let mut acc = FMat::zeros(basis[0].n);
    for (b, &c) in basis.iter().zip(coeffs) {
        acc = fmat_add(&acc, &b.scale(c));
    }
    acc
}

/// Solve a dense 6x6 system by Gaussian elimination with partial pivoting.
fn solve6(mut a: [[f64; 6]; 6], mut b: [f64; 6]) -> Option<[f64; 6]> {
    for col in 0..6 {
        let piv = (col..6).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in (col + 1)..6 {
            let f = a[row][col] / a[col][col];
            for k in col..6 {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 6];
    for col in (0..6).rev() {
        let mut s = b[col];
        for k in (col + 1)..6 {
            s -= a[col][k] * x[k];
        }
        x[col] = s / a[col][col];
    }
    Some(x)
}

fn cmd_iwasawa_factor(seed: u64, mu: f64) -> Result<String, CmdError> {
    let an = so23_an_first();
    let a_basis: Vec<FMat> = ["H1", "H2"]
        .iter()
        .map(|l| FMat::from_qmat(an.by_label(l).expect("abelian label")))
        .collect();
    // negative-root vectors: transposes of the positive-root basis
    let nbar_basis: Vec<FMat> = ["V5", "W5", "M", "N"]
        .iter()
        .map(|l| FMat::from_qmat(&an.by_label(l).expect("root label").transpose()))
        .collect();
    // sample element: the rotation at angle mu times a fixed unipotent part
    let pos = lin_comb(
        &["V5", "W5", "M"]
            .iter()
            .map(|l| FMat::from_qmat(an.by_label(l).expect("root label")))
            .collect::<Vec<_>>(),
        &[0.3, 0.3, 0.3],
    );
    let g = rotation(mu, 5).mul(&pos.expm());

    // residual: off-block entries of k = exp(-nbar) exp(-a) g, which vanish
    // exactly when k lies in the block-diagonal subgroup
    let residual = |p: &[f64; 6]| -> Vec<f64> {
        let a = lin_comb(&a_basis, &p[..2]);
        let nb = lin_comb(&nbar_basis, &p[2..]);
        let k = nb.scale(-1.0).expm().mul(&a.scale(-1.0).expm()).mul(&g);
        let mut r = Vec::with_capacity(12);
        for i in 0..2 {
            for j in 2..5 {
                r.push(k.get(i, j));
                r.push(k.get(j, i));
            }
        }
        r
    };
    let norm = |r: &[f64]| r.iter().fold(0.0f64, |m, &x| m.max(x.abs()));

    let mut p = [0.0f64; 6];
    let mut res = residual(&p);
    let mut iterations = 0usize;
    for iter in 0..200 {
        iterations = iter;
        if norm(&res) < 1e-12 {
            break;
        }
        // finite-difference Jacobian and Gauss-Newton normal equations
        let h = 1e-6;
        let mut jac = [[0.0f64; 12]; 6];
        for (col, row) in jac.iter_mut().enumerate() {
            let mut q = p;
            q[col] += h;
            let rq = residual(&q);
            for (k, slot) in row.iter_mut().enumerate() {
                *slot = (rq[k] - res[k]) / h;
            }
        }
        let mut jtj = [[0.0f64; 6]; 6];
        let mut jtr = [0.0f64; 6];
        for i in 0..6 {
            for j in 0..6 {
                jtj[i][j] = (0..12).map(|k| jac[i][k] * jac[j][k]).sum();
            }
            jtj[i][i] += 1e-12;
            jtr[i] = (0..12).map(|k| jac[i][k] * res[k]).sum();
        }
        let delta = solve6(jtj, jtr)
            .ok_or_else(|| CmdError::Verification("singular normal equations".into()))?;
        // damped update: halve the step until the residual shrinks
        let mut lambda = 1.0;
        loop {
            let mut q = p;
            for i in 0..6 {
                q[i] -= lambda * delta[i];
            }
            let rq = residual(&q);
            if norm(&rq) < norm(&res) || lambda < 1e-6 {
                p = q;
                res = rq;
                break;
            }
            lambda *= 0.5;
        }
    }
    let final_residual = norm(&res);
    let converged = final_residual < 1e-9;
    let a = lin_comb(&a_basis, &p[..2]);
    let nb = lin_comb(&nbar_basis, &p[2..]);
    let k = nb.scale(-1.0).expm().mul(&a.scale(-1.0).expm()).mul(&g);
    let k_angle = k.get(0, 1).atan2(k.get(0, 0));
    let report = json!({
        "command": "iwasawa-factor",
        "seed": seed,
        "mu": mu,
        "converged": converged,
        "iterations": iterations,
        "residual": final_residual,
        "a_coefficients": {"H1": p[0], "H2": p[1]},
        "nbar_coefficients": {"V5^T": p[2], "W5^T": p[3], "M^T": p[4], "N^T": p[5]},
        "k_rotation_angle": k_angle,
    });
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    if converged {
        Ok(text)
    } else {
        Err(CmdError::Verification(text))
    }
}
