//! Deterministic command-line reports over the deformed-oscillator library.
//!
//! Every run prints one JSON envelope (or a CSV projection of its scalar
//! results) on stdout; diagnostics go to stderr. Exit codes: 0 success,
//! 2 invalid parameters, 3 numerical failure.

mod json;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use qdho_core::{
    antinormal_word_element, build_hamiltonian, build_ladder, build_momentum,
    build_momentum_xrep, build_position, build_representation, commutator_residual,
    deficiency_diagnostics, energy_level, eval_p, eval_qhermite, eval_qhermite_momentum,
    hamiltonian_eigenvalue_formula, hamiltonian_eigenvalue_ladder_route, j2_eigenvalue_formula,
    kernel_phase, normal_order_expansion, normal_ordered_xp_element, normal_word_element,
    p_coefficients, qhermite_coefficients, selection_rule_shifts, theta_identity_residual,
    weighted_hermiticity_residual, zeros, DeformedFrame, Error, Grid1D, QContext,
    TruncatedOperator,
};

use json::Json;

const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Parser)]
#[command(name = "qdho", about = "Deformed-oscillator numerics as deterministic reports")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct CommonOpts {
    /// Position deformation parameter (> 0)
    #[arg(long)]
    alpha: Option<f64>,
    /// Momentum deformation parameter (> 0)
    #[arg(long)]
    beta: Option<f64>,
    /// Direct q override (mutually exclusive with --alpha/--beta)
    #[arg(long)]
    q: Option<f64>,
    /// Truncation dimension
    #[arg(long)]
    dim: Option<usize>,
    /// Number of levels / series terms
    #[arg(long)]
    levels: Option<u32>,
    /// Polynomial degree
    #[arg(long)]
    degree: Option<u32>,
    /// Output format
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
    /// Evaluation or spatial grid, "min:max:points"
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Real part of the selfadjoint probe point
    #[arg(long, allow_negative_numbers = true)]
    probe_re: Option<f64>,
    /// Imaginary part of the selfadjoint probe point (nonzero)
    #[arg(long, allow_negative_numbers = true)]
    probe_im: Option<f64>,
    /// Polynomial family: p | hermite | hermite-momentum
    #[arg(long)]
    family: Option<String>,
    /// su(2) weight j
    #[arg(long)]
    j: Option<f64>,
    /// Creator power l
    #[arg(long)]
    l: Option<u32>,
    /// Annihilator power r
    #[arg(long)]
    r: Option<u32>,
    /// Bra index m
    #[arg(long)]
    m: Option<u32>,
    /// Ket index n
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Derive q and the ladder scale factors from (alpha, beta)
    Frame(CommonOpts),
    /// Energy levels with a truncated-matrix cross-check
    Spectrum(CommonOpts),
    /// Truncated operator matrices and identity residuals
    Operators(CommonOpts),
    /// Self-adjointness diagnostics of the position operator
    Selfadjoint(CommonOpts),
    /// Polynomial evaluations, coefficients, and zeros
    Polys(CommonOpts),
    /// Closed-form matrix elements with brute-force oracle deltas
    Matelem(CommonOpts),
    /// su(2) ladder representation residuals and eigenvalue formulas
    Su2(CommonOpts),
    /// Position-representation grid diagnostics
    Xrep(CommonOpts),
    /// Map a subcommand over a parameter grid (JSON-lines output)
    Sweep {
        /// Inner subcommand to run at each grid point
        command: String,
        /// Parameter to sweep: alpha | beta | q
        #[arg(long)]
        param: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Frame(o) => run_single("frame", o),
        Command::Spectrum(o) => run_single("spectrum", o),
        Command::Operators(o) => run_single("operators", o),
        Command::Selfadjoint(o) => run_single("selfadjoint", o),
        Command::Polys(o) => run_single("polys", o),
        Command::Matelem(o) => run_single("matelem", o),
        Command::Su2(o) => run_single("su2", o),
        Command::Xrep(o) => run_single("xrep", o),
        Command::Sweep { command, param, opts } => run_sweep(command, param, opts),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain(_) => ExitCode::from(2),
                Error::Overflow(_) | Error::Convergence(_) => ExitCode::from(3),
            }
        }
    }
}

fn run_single(name: &str, opts: &CommonOpts) -> Result<(), Error> {
    let envelope = execute(name, opts)?;
    if opts.format == "csv" {
        print!("{}", csv_projection(&envelope, &[]));
    } else {
        println!("{}", envelope.to_string());
    }
    Ok(())
}

fn run_sweep(command: &str, param: &str, opts: &CommonOpts) -> Result<(), Error> {
    use rayon::prelude::*;
    if command == "sweep" {
        return Err(Error::Domain("sweep cannot be nested".into()));
    }
    if !["alpha", "beta", "q"].contains(&param) {
        return Err(Error::Domain(format!("unknown sweep parameter {param}")));
    }
    let grid = opts
        .grid
        .as_deref()
        .ok_or_else(|| Error::Domain("sweep requires --grid min:max:points".into()))?;
    let values = parse_grid(grid)?;
    // grid values ascend, so index order is the lexicographic parameter order;
    // computation may be parallel but emission is buffered in order
    let results: Vec<Result<Json, Error>> = values
        .par_iter()
        .map(|v| {
            let mut point = opts.clone();
            match param {
                "alpha" => point.alpha = Some(*v),
                "beta" => point.beta = Some(*v),
                _ => point.q = Some(*v),
            }
            execute(command, &point)
        })
        .collect();
    let mut envelopes = Vec::with_capacity(results.len());
    for r in results {
        envelopes.push(r?);
    }
    if opts.format == "csv" {
        let mut out = String::new();
        for (i, (v, e)) in values.iter().zip(envelopes.iter()).enumerate() {
            let rows = csv_projection(e, &[(param, *v)]);
            if i == 0 {
                out.push_str(&rows);
            } else if let Some(idx) = rows.find('\n') {
                out.push_str(&rows[idx + 1..]);
            }
        }
        print!("{out}");
    } else {
        for e in &envelopes {
            println!("{}", e.to_string());
        }
    }
    Ok(())
}

// ---- envelope plumbing ----

fn envelope(command: &str, opts: &CommonOpts, results: Json, warnings: Vec<String>) -> Json {
    let mut params = Json::obj();
    let push_f = |p: &mut Json, k: &str, v: &Option<f64>| {
        if let Some(v) = v {
            p.push(k, Json::Num(*v));
        }
    };
    push_f(&mut params, "alpha", &opts.alpha);
    push_f(&mut params, "beta", &opts.beta);
    push_f(&mut params, "q", &opts.q);
    if let Some(v) = opts.dim {
        params.push("dim", Json::Int(v as i64));
    }
    if let Some(v) = opts.levels {
        params.push("levels", Json::Int(v as i64));
    }
    if let Some(v) = opts.degree {
        params.push("degree", Json::Int(v as i64));
    }
    if let Some(v) = &opts.grid {
        params.push("grid", Json::Str(v.clone()));
    }
    push_f(&mut params, "probe_re", &opts.probe_re);
    push_f(&mut params, "probe_im", &opts.probe_im);
    if let Some(v) = &opts.family {
        params.push("family", Json::Str(v.clone()));
    }
    push_f(&mut params, "j", &opts.j);
    for (k, v) in [("l", opts.l), ("r", opts.r), ("m", opts.m), ("n", opts.n)] {
        if let Some(v) = v {
            params.push(k, Json::Int(v as i64));
        }
    }
    let mut env = Json::obj();
    env.push("schema_version", Json::Str(SCHEMA_VERSION.into()));
    env.push("command", Json::Str(command.into()));
    env.push("parameters", params);
    env.push("results", results);
    env.push("warnings", Json::Arr(warnings.into_iter().map(Json::Str).collect()));
    env
}

/// Scalar fields of `results`, flattened one level, as a two-line CSV
/// (header + row); `prefix` carries swept parameters.
fn csv_projection(env: &Json, prefix: &[(&str, f64)]) -> String {
    let results = match env {
        Json::Obj(fields) => fields.iter().find(|(k, _)| k == "results").map(|(_, v)| v),
        _ => None,
    };
    let mut header = Vec::new();
    let mut row = Vec::new();
    for (k, v) in prefix {
        header.push(k.to_string());
        row.push(json::format_float(*v));
    }
    if let Some(Json::Obj(fields)) = results {
        for (k, v) in fields {
            match v {
                Json::Num(x) => {
                    header.push(k.clone());
                    row.push(json::format_float(*x));
                }
                Json::Int(i) => {
                    header.push(k.clone());
                    row.push(i.to_string());
                }
                Json::Bool(b) => {
                    header.push(k.clone());
                    row.push(b.to_string());
                }
                _ => {}
            }
        }
    }
    format!("{}\n{}\n", header.join(","), row.join(","))
}

// ---- parameter helpers ----

fn require_frame(opts: &CommonOpts) -> Result<DeformedFrame, Error> {
    if opts.q.is_some() {
        return Err(Error::Domain(
            "--q conflicts with --alpha/--beta; this command derives q from the frame".into(),
        ));
    }
    match (opts.alpha, opts.beta) {
        (Some(a), Some(b)) => DeformedFrame::derive(a, b),
        _ => Err(Error::Domain("this command requires --alpha and --beta".into())),
    }
}

fn require_ctx(opts: &CommonOpts) -> Result<QContext, Error> {
    match (opts.q, opts.alpha, opts.beta) {
        (Some(q), None, None) => QContext::new(q),
        (None, Some(a), Some(b)) => Ok(DeformedFrame::derive(a, b)?.q_context()),
        (Some(_), _, _) => {
            Err(Error::Domain("--q is mutually exclusive with --alpha/--beta".into()))
        }
        _ => Err(Error::Domain("provide either --q or both --alpha and --beta".into())),
    }
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Domain(format!("grid must be min:max:points, got {spec}")));
    }
    let min: f64 = parts[0]
        .parse()
        .map_err(|_| Error::Domain(format!("bad grid minimum {}", parts[0])))?;
    let max: f64 = parts[1]
        .parse()
        .map_err(|_| Error::Domain(format!("bad grid maximum {}", parts[1])))?;
    let n: usize = parts[2]
        .parse()
        .map_err(|_| Error::Domain(format!("bad grid point count {}", parts[2])))?;
    if n < 1 || (n == 1 && max != min) || (n > 1 && max <= min) {
        return Err(Error::Domain(format!("degenerate grid {spec}")));
    }
    if n == 1 {
        return Ok(vec![min]);
    }
    let h = (max - min) / (n - 1) as f64;
    Ok((0..n).map(|i| min + h * i as f64).collect())
}

fn complex_json(z: Complex64) -> Json {
    Json::Arr(vec![Json::Num(z.re), Json::Num(z.im)])
}

fn matrix_json(op: &TruncatedOperator) -> Json {
    let n = op.dim();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(complex_json(op.entries()[(i, j)]));
        }
        rows.push(Json::Arr(row));
    }
    Json::Arr(rows)
}

// ---- command payloads ----

fn execute(name: &str, opts: &CommonOpts) -> Result<Json, Error> {
    let (results, warnings) = match name {
        "frame" => cmd_frame(opts)?,
        "spectrum" => cmd_spectrum(opts)?,
        "operators" => cmd_operators(opts)?,
        "selfadjoint" => cmd_selfadjoint(opts)?,
        "polys" => cmd_polys(opts)?,
        "matelem" => cmd_matelem(opts)?,
        "su2" => cmd_su2(opts)?,
        "xrep" => cmd_xrep(opts)?,
        other => return Err(Error::Domain(format!("unknown command {other}"))),
    };
    Ok(envelope(name, opts, results, warnings))
}

fn cmd_frame(opts: &CommonOpts) -> Result<(Json, Vec<String>), Error> {
    let frame = require_frame(opts)?;
    let mut r = Json::obj();
    r.push("alpha", Json::Num(frame.alpha()));
    r.push("beta", Json::Num(frame.beta()));
    r.push("q", Json::Num(frame.q()));
    r.push("m_alpha", Json::Num(frame.m_alpha()));
    r.push("m_beta", Json::Num(frame.m_beta()));
    r.push("scale_product", Json::Num(frame.m_alpha() * frame.m_beta()));
    Ok((r, vec![]))
}

fn cmd_spectrum(opts: &CommonOpts) -> Result<(Json, Vec<String>), Error> {
    let ctx = require_ctx(opts)?;
    let levels = opts.levels.unwrap_or(10);
    let dim = opts.dim.unwrap_or((levels as usize + 8).max(16));
    if dim < levels as usize + 2 {
        return Err(Error::Domain(format!(
            "--dim {dim} too small for {levels} levels (need at least levels + 2)"
        )));
    }
    let energies: Vec<f64> = (0..=levels).map(|n| energy_level(n, &ctx)).collect();
    // truncated route: B B† + B† B is diagonal with entries 2 E_n below the cut
    let h = build_hamiltonian(&ctx, dim)?;
    let deltas: Vec<f64> = (0..=levels as usize)
        .map(|n| (h.entries()[(n, n)].re / 2.0 - energies[n]).abs())
        .collect();
    let mut r = Json::obj();
    r.push("q", Json::Num(ctx.q()));
    r.push("levels", Json::Int(levels as i64));
    r.push("dim", Json::Int(dim as i64));
    r.push("energies", Json::from_f64_slice(&energies));
    r.push("cross_check_deltas", Json::from_f64_slice(&deltas));
    r.push(
        "max_cross_check_delta",
        Json::Num(deltas.iter().copied().fold(0.0, f64::max)),
    );
    Ok((r, vec![]))
}

fn cmd_operators(opts: &CommonOpts) -> Result<(Json, Vec<String>), Error> {
    let frame = require_frame(opts)?;
    let dim = opts.dim.unwrap_or(8);
    if dim < 4 {
        return Err(Error::Domain("--dim must be at least 4".into()));
    }
    let ctx = frame.q_context();
    let (b, bd) = build_ladder(dim, &ctx)?;
    let mx = build_position(&frame, dim)?;
    let mp = build_momentum(&frame, dim)?;
    let h = build_hamiltonian(&ctx, dim)?;
    let comm = commutator_residual(&ctx, dim)?;
    let theta = theta_identity_residual(&frame, dim)?;
    let mut r = Json::obj();
    r.push("dim", Json::Int(dim as i64));
    r.push("q", Json::Num(frame.q()));
    r.push("annihilator", matrix_json(&b));
    r.push("creator", matrix_json(&bd));
    r.push("position", matrix_json(&mx));
    r.push("momentum", matrix_json(&mp));
    r.push("hamiltonian", matrix_json(&h));
    r.push("commutator_interior_max", Json::Num(comm.max_abs_interior(dim - 2)));
    r.push("theta_identity_interior_max", Json::Num(theta.max_abs_interior(dim - 3)));
    Ok((r, vec![]))
}

fn cmd_selfadjoint(opts: &CommonOpts) -> Result<(Json, Vec<String>), Error> {
    let frame = require_frame(opts)?;
    let n_terms = opts.levels.unwrap_or(200) as usize;
    let probe = Complex64::new(opts.probe_re.unwrap_or(0.0), opts.probe_im.unwrap_or(1.0));
    let rep = deficiency_diagnostics(&frame, n_terms, probe)?;
    let mut r = Json::obj();
    r.push("ratio_limit_target", Json::Num(rep.ratio_limit_target));
    r.push("final_ratio_estimate", Json::Num(*rep.ratio_estimates.last().unwrap()));
    r.push("log_concavity_ok", Json::Bool(rep.log_concavity_ok));
    r.push("norm_increment_ratio_fit", Json::Num(rep.norm_increment_ratio_fit));
    r.push("final_partial_sum", Json::Num(*rep.partial_sums.last().unwrap()));
    r.push(
        "final_deficiency_vector_norm",
        Json::Num(*rep.deficiency_vector_norms.last().unwrap()),
    );
    r.push("partial_sums", Json::from_f64_slice(&rep.partial_sums));
    r.push("ratio_estimates", Json::from_f64_slice(&rep.ratio_estimates));
    r.push("deficiency_vector_norms", Json::from_f64_slice(&rep.deficiency_vector_norms));
    Ok((r, vec![]))
}

fn cmd_polys(opts: &CommonOpts) -> Result<(Json, Vec<String>), Error> {
    let ctx = require_ctx(opts)?;
    let degree = opts.degree.unwrap_or(6);
    if degree > 200 {
        return Err(Error::Domain("--degree must be at most 200".into()));
    }
    let family = opts.family.as_deref().unwrap_or("p");
    let mut warnings = vec![];
    let mut r = Json::obj();
    r.push("family", Json::Str(family.into()));
    r.push("degree", Json::Int(degree as i64));
    r.push("q", Json::Num(ctx.q()));
    match family {
        "p" => {
            r.push("coefficients", Json::from_f64_slice(&p_coefficients(degree, &ctx)));
            r.push("zeros", Json::from_f64_slice(&zeros(degree, &ctx)?));
        }
        "hermite" => {
            r.push("coefficients", Json::from_f64_slice(&qhermite_coefficients(degree, &ctx)));
            warnings.push("zeros reported only for family p".into());
        }
        "hermite-momentum" => {
            warnings
                .push("coefficients and zeros reported only for real-coefficient families".into());
        }
        other => return Err(Error::Domain(format!("unknown polynomial family {other}"))),
    }
    if let Some(grid) = &opts.grid {
        let points = parse_grid(grid)?;
        let mut evals = Vec::with_capacity(points.len());
        for x in &points {
            let value = match family {
                "p" => eval_p(degree, Complex64::new(*x, 0.0), &ctx),
                "hermite" => Complex64::new(eval_qhermite(degree, *x, &ctx), 0.0),
                _ => eval_qhermite_momentum(degree, *x, &ctx),
            };
            let mut e = Json::obj();
            e.push("x", Json::Num(*x));
            e.push("value", complex_json(value));
            evals.push(e);
        }
        r.push("evaluations", Json::Arr(evals));
    }
    Ok((r, warnings))
}

fn cmd_matelem(opts: &CommonOpts) -> Result<(Json, Vec<String>), Error> {
    let has_frame = opts.alpha.is_some() && opts.beta.is_some();
    let ctx = require_ctx(opts)?;
    let l = opts.l.unwrap_or(1);
    let rr = opts.r.unwrap_or(1);
    let n = opts.n.unwrap_or(0);
    if l > 12 || rr > 12 || n > 40 {
        return Err(Error::Domain("matrix element indices out of the supported range".into()));
    }
    let dim = (n + l + rr + 4) as usize;
    let (b, bd) = build_ladder(dim, &ctx)?;
    let word_product = |creators_left: bool| -> ndarray::Array2<Complex64> {
        let mut m = ndarray::Array2::<Complex64>::eye(dim);
        if creators_left {
            for _ in 0..l {
                m = bd.entries().dot(&m);
            }
            for _ in 0..rr {
                m = m.dot(b.entries());
            }
        } else {
            for _ in 0..rr {
                m = b.entries().dot(&m);
            }
            for _ in 0..l {
                m = m.dot(bd.entries());
            }
        }
        m
    };

    let mut r = Json::obj();
    r.push("q", Json::Num(ctx.q()));
    let normal = normal_word_element(l, rr, n, &ctx)?;
    r.push("normal_word", Json::Num(normal));
    let normal_oracle = if n >= rr {
        word_product(true)[((n - rr + l) as usize, n as usize)].re
    } else {
        0.0
    };
    r.push("normal_word_oracle_delta", Json::Num((normal - normal_oracle).abs()));
    let anti = antinormal_word_element(l, rr, n, &ctx)?;
    r.push("antinormal_word", Json::Num(anti));
    let anti_oracle = if n + l >= rr {
        word_product(false)[((n + l - rr) as usize, n as usize)].re
    } else {
        0.0
    };
    r.push("antinormal_word_oracle_delta", Json::Num((anti - anti_oracle).abs()));
    r.push(
        "selection_rule_shifts",
        Json::Arr(selection_rule_shifts(l, rr).into_iter().map(Json::Int).collect()),
    );

    let mut warnings = vec![];
    if has_frame {
        let frame = DeformedFrame::derive(opts.alpha.unwrap(), opts.beta.unwrap())?;
        let m = opts.m.unwrap_or(if n + l >= rr { n + l - rr } else { 0 });
        let xp = normal_ordered_xp_element(l, rr, m, n, &frame)?;
        r.push("xp_bra_index", Json::Int(m as i64));
        r.push("xp_element", complex_json(xp));
        // oracle: word expansion contracted with the truncated ladder matrices
        let mut oracle = Complex64::new(0.0, 0.0);
        if (m as usize) < dim {
            for w in normal_order_expansion(l, rr, &frame) {
                if n >= w.plain_power && n - w.plain_power + w.dagger_power == m {
                    let row = (n - w.plain_power + w.dagger_power) as usize;
                    let mut word = ndarray::Array2::<Complex64>::eye(dim);
                    for _ in 0..w.dagger_power {
                        word = bd.entries().dot(&word);
                    }
                    for _ in 0..w.plain_power {
                        word = word.dot(b.entries());
                    }
                    oracle += w.coefficient * word[(row, n as usize)];
                }
            }
        }
        r.push("xp_oracle_delta", Json::Num((xp - oracle).norm()));
    } else {
        warnings.push("xp element omitted: requires --alpha and --beta".into());
    }
    Ok((r, warnings))
}

fn cmd_su2(opts: &CommonOpts) -> Result<(Json, Vec<String>), Error> {
    let j = opts.j.ok_or_else(|| Error::Domain("su2 requires --j".into()))?;
    let alpha = opts.alpha.ok_or_else(|| Error::Domain("su2 requires --alpha".into()))?;
    let rep = build_representation(j, alpha)?;
    let mut r = Json::obj();
    r.push("j", Json::Num(j));
    r.push("alpha", Json::Num(alpha));
    r.push("grid_points", Json::Int(rep.frame.n_points() as i64));
    let mut residuals = Json::obj();
    for (k, v) in &rep.residuals {
        residuals.push(k, Json::Num(*v));
    }
    r.push("residuals", residuals);
    r.push("m_values", Json::from_f64_slice(&rep.frame.m_values));
    r.push("commutator_diagonal", Json::from_f64_slice(&rep.commutator_diagonal()));
    let mut table = Vec::new();
    for &m in &rep.frame.m_values {
        let mut row = Json::obj();
        row.push("m", Json::Num(m));
        row.push("h_formula", Json::Num(hamiltonian_eigenvalue_formula(j, m, alpha)));
        row.push("h_ladder_route", Json::Num(hamiltonian_eigenvalue_ladder_route(j, m, alpha)));
        row.push("j2_formula", Json::Num(j2_eigenvalue_formula(j, m, alpha)));
        table.push(row);
    }
    r.push("eigenvalue_table", Json::Arr(table));
    Ok((r, vec![]))
}

fn cmd_xrep(opts: &CommonOpts) -> Result<(Json, Vec<String>), Error> {
    let alpha = opts.alpha.ok_or_else(|| Error::Domain("xrep requires --alpha".into()))?;
    let spec = opts.grid.as_deref().unwrap_or("-10:10:201");
    let base = parse_grid(spec)?;
    let (x_min, x_max, p0) = (base[0], *base.last().unwrap(), base.len());
    if p0 < 8 {
        return Err(Error::Domain("xrep grid needs at least 8 points".into()));
    }
    let mut warnings = vec![];
    let mut ladder = Vec::new();
    let mut residuals = Vec::new();
    for k in 0..3usize {
        let points = (p0 - 1) * (1 << k) + 1;
        let grid = Grid1D::new(x_min, x_max, points)?;
        let op = build_momentum_xrep(&grid, alpha)?;
        let f: Vec<Complex64> =
            grid.points().iter().map(|x| Complex64::new((-x * x).exp(), 0.0)).collect();
        let (res, boundary) = weighted_hermiticity_residual(&op, &f, &f)?;
        if boundary {
            warnings.push(format!("Gaussian does not decay at the {points}-point grid edges"));
        }
        let mut row = Json::obj();
        row.push("points", Json::Int(points as i64));
        row.push("h", Json::Num(grid.h));
        row.push("hermiticity_residual", Json::Num(res));
        ladder.push(row);
        residuals.push(res);
    }
    let mut r = Json::obj();
    r.push("alpha", Json::Num(alpha));
    r.push("hermiticity_ladder", Json::Arr(ladder));
    let ratios: Vec<f64> = residuals
        .windows(2)
        .map(|w| if w[1] > 0.0 { w[0] / w[1] } else { f64::INFINITY })
        .collect();
    r.push("refinement_ratios", Json::from_f64_slice(&ratios));
    let tests = [(0.5, 1.0), (1.0, 2.0), (2.0, 0.7), (1.5, 1.5)];
    let mut limit_table = Vec::new();
    for a in [1e-2, 1e-3, 1e-4] {
        let mut sup = 0.0f64;
        for &(x, p) in &tests {
            sup = sup.max((kernel_phase(x, p, a)? - p * x).abs() / a);
        }
        let mut row = Json::obj();
        row.push("alpha", Json::Num(a));
        row.push("sup_error_over_alpha", Json::Num(sup));
        limit_table.push(row);
    }
    r.push("kernel_limit_table", Json::Arr(limit_table));
    Ok((r, warnings))
}
