use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use harmconv::criteria::{max_modulus_search, theorem1_check, theorem2_check, MoebiusParams};
use harmconv::dilatation::{
    tilde_omega_general, tilde_omega_left_halfplane, tilde_omega_moebius, tilde_omega_monomial,
};
use harmconv::gallery::example_case;
use harmconv::io::{read_map, write_json, write_map, RationalMapJson};
use harmconv::mappings::{order_for_radius, HarmonicMap, DEFAULT_ORDER};
use harmconv::omega_spec::{as_moebius, as_unit_monomial, parse_omega};
use harmconv::plot::{image_curves, render_svg, PlotConfig};
use harmconv::scan::{run_scan, to_csv, ScanConfig};
use harmconv::verify::{full_report, CheckParams};
use harmconv::{Map, Rational};

const EXIT_FAILED: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;

#[derive(Parser)]
#[command(name = "harmconv", version, about = "Slanted half-plane harmonic maps and their convolution with f0")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a map onto {Re(e^{iγ}w) > -1/2} with a given dilatation
    Shear {
        #[command(flatten)]
        input: MapSpec,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Convolve a map with f0 (or with a second map)
    Convolve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        with: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Dilatation of f0 * f in closed form
    Dilatation {
        #[command(flatten)]
        input: MapSpec,
        #[arg(long, value_enum, default_value_t = Route::General)]
        route: Route,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the criteria and numerical checks; exit 0 passed, 2 failed, 3 degenerate input
    Check {
        #[command(flatten)]
        input: MapSpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Plot images of circles and radial segments as SVG
    Plot {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also plot f0 * f
        #[arg(long)]
        convolve: bool,
        #[arg(long)]
        out_conv: Option<PathBuf>,
        #[command(flatten)]
        plot: PlotArgs,
    },
    /// Sweep the Möbius parameter over the disk and write CSV
    Scan {
        #[arg(long, allow_negative_numbers = true)]
        gamma: f64,
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[arg(long, default_value_t = 0.995)]
        r_eval: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Regenerate the f / f0 * f figure pair for example 1, 2 or 3
    Example {
        id: u32,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[command(flatten)]
        plot: PlotArgs,
    },
}

#[derive(Args)]
struct MapSpec {
    #[arg(long, allow_negative_numbers = true)]
    gamma: f64,
    /// e.g. "z", "-z^2", "(z+0.5)/(1+0.5*z)"
    #[arg(long, allow_hyphen_values = true)]
    omega: String,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long, default_value_t = 10)]
    rings: usize,
    #[arg(long, default_value_t = 16)]
    rays: usize,
    #[arg(long, default_value_t = 0.99)]
    r_max: f64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 8.0)]
    clip: f64,
    #[arg(long, default_value_t = 800)]
    width: usize,
}

impl PlotArgs {
    fn config(&self) -> PlotConfig {
        PlotConfig {
            rings: self.rings,
            rays: self.rays,
            r_max: self.r_max,
            samples_per_curve: self.samples,
            clip_radius: self.clip,
            width_px: self.width,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    General,
    LeftHalfplane,
    Monomial,
    Moebius,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { input, out } => return check(&input, out.as_deref()),
        Command::Shear { input, order, out } => shear(&input, order, &out),
        Command::Convolve { input, with, out } => convolve(&input, with.as_deref(), &out),
        Command::Dilatation { input, route, out } => dilatation(&input, route, out.as_deref()),
        Command::Plot {
            map,
            out,
            convolve,
            out_conv,
            plot,
        } => plot_map(&map, &out, convolve, out_conv, &plot.config()),
        Command::Scan {
            gamma,
            grid,
            r_eval,
            out,
        } => scan(gamma, grid, r_eval, &out),
        Command::Example { id, out_dir, plot } => example(id, &out_dir, &plot.config()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn omega_of(spec: &MapSpec) -> Result<Rational> {
    parse_omega(&spec.omega).with_context(|| format!("cannot parse omega {:?}", spec.omega))
}

fn emit(value: &Value, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => write_json(path, value)?,
        None => writeln!(io::stdout().lock(), "{}", serde_json::to_string_pretty(value)?)?,
    }
    Ok(())
}

fn shear(spec: &MapSpec, order: usize, out: &Path) -> Result<()> {
    let omega = omega_of(spec)?;
    let f = HarmonicMap::shear(spec.gamma, &omega, order)?;
    write_map(out, &f, None)?;
    println!("shear residual {:e}", f.shear_residual());
    Ok(())
}

fn convolve(input: &Path, with: Option<&Path>, out: &Path) -> Result<()> {
    let (f, _) = read_map(input)?;
    let result = match with {
        Some(other) => f.convolve(&read_map(other)?.0),
        None => f.convolve_f0(),
    };
    write_map(out, &result, None)?;
    Ok(())
}

fn dilatation(spec: &MapSpec, route: Route, out: Option<&Path>) -> Result<()> {
    let omega = omega_of(spec)?;
    let value = match route {
        Route::General => json!({ "omega_tilde": RationalMapJson::from(&tilde_omega_general(spec.gamma, &omega)?) }),
        Route::LeftHalfplane => json!({ "omega_tilde": RationalMapJson::from(&tilde_omega_left_halfplane(&omega)?) }),
        Route::Monomial => {
            let (theta, n) = as_unit_monomial(&omega).ok_or_else(|| anyhow!("omega is not of the form e^(iθ) z^n"))?;
            json!({ "omega_tilde": RationalMapJson::from(&tilde_omega_monomial(spec.gamma, theta, n)?) })
        }
        Route::Moebius => {
            let a = as_moebius(&omega).ok_or_else(|| anyhow!("omega is not of the form (z+a)/(1+conj(a)z)"))?;
            let (map, f) = tilde_omega_moebius(spec.gamma, a)?;
            json!({
                "omega_tilde": RationalMapJson::from(&map),
                "factorization": {
                    "phi": f.phi,
                    "A": [f.a.re, f.a.im],
                    "B": [f.b.re, f.b.im],
                    "t_coeffs": f.t_coeffs.coeffs().iter().map(|c| [c.re, c.im]).collect::<Vec<_>>(),
                }
            })
        }
    };
    emit(&value, out)
}

fn check(spec: &MapSpec, out: Option<&Path>) -> ExitCode {
    match run_check(spec) {
        Ok((report, passed)) => {
            if let Err(e) = emit(&report, out) {
                eprintln!("error: {e:#}");
                return ExitCode::FAILURE;
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED)
            }
        }
        Err(e) => {
            eprintln!("degenerate input: {e:#}");
            ExitCode::from(EXIT_DEGENERATE)
        }
    }
}

fn run_check(spec: &MapSpec) -> Result<(Value, bool)> {
    let omega = omega_of(spec)?;
    let gamma = spec.gamma;
    let params = CheckParams::default();
    let f = HarmonicMap::shear(gamma, &omega, order_for_radius(params.r_max))?;
    let omega_tilde = tilde_omega_general(gamma, &omega)?;
    let criterion = if let Some((theta, n)) = as_unit_monomial(&omega) {
        json!({ "theorem1": theorem1_check(gamma, theta, n)? })
    } else if let Some(a) = as_moebius(&omega) {
        json!({ "theorem2": theorem2_check(&MoebiusParams::new(a, gamma)?)? })
    } else {
        Value::Null
    };
    let report = full_report(&f, &omega_tilde, -gamma, &params)?;
    let witness = if report.passed {
        Value::Null
    } else {
        let (z, modulus) = max_modulus_search(&omega_tilde);
        if modulus > 1.0 {
            json!({ "z": [z.re, z.im], "modulus_of_omega_tilde": modulus })
        } else {
            Value::Null
        }
    };
    let passed = report.passed;
    Ok((
        json!({
            "gamma": gamma,
            "omega": RationalMapJson::from(&omega),
            "b1": [f.b1().re, f.b1().im],
            "omega_tilde": RationalMapJson::from(&omega_tilde),
            "criterion": criterion,
            "verification": report,
            "witness": witness,
        }),
        passed,
    ))
}

/// Rebuilds a sheared map at an order adequate for plotting up to `r_max`.
fn refine(f: Map, r_max: f64) -> Result<Map> {
    let needed = order_for_radius(r_max);
    match f.omega() {
        Some(omega) if f.order() < needed => Ok(HarmonicMap::shear(f.gamma(), omega, needed)?),
        _ => {
            if f.order() < needed {
                log::warn!("map order {} is low for r_max = {r_max}; image may be inaccurate", f.order());
            }
            Ok(f)
        }
    }
}

fn write_svg(path: &Path, f: &Map, cfg: &PlotConfig, title: &str) -> Result<()> {
    let svg = render_svg(&image_curves(f, cfg)?, cfg, title);
    fs::write(path, svg).with_context(|| format!("writing {}", path.display()))
}

fn plot_map(map: &Path, out: &Path, also_convolve: bool, out_conv: Option<PathBuf>, cfg: &PlotConfig) -> Result<()> {
    cfg.validate()?;
    let (f, _) = read_map(map)?;
    let f = refine(f, cfg.r_max)?;
    write_svg(out, &f, cfg, "f")?;
    if also_convolve {
        let path = out_conv.unwrap_or_else(|| {
            let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("plot");
            out.with_file_name(format!("{stem}_f0f.svg"))
        });
        write_svg(&path, &f.convolve_f0(), cfg, "f0 * f")?;
    }
    Ok(())
}

fn scan(gamma: f64, grid: usize, r_eval: f64, out: &Path) -> Result<()> {
    let rows = run_scan(&ScanConfig {
        gamma,
        grid_n: grid,
        r_eval,
    })?;
    fs::write(out, to_csv(&rows)).with_context(|| format!("writing {}", out.display()))?;
    Ok(())
}

fn example(id: u32, out_dir: &Path, cfg: &PlotConfig) -> Result<()> {
    cfg.validate()?;
    let case = example_case(id)?;
    if !out_dir.exists() {
        fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    }
    let f = case.series_map(order_for_radius(cfg.r_max))?;
    write_map(&out_dir.join(format!("example{id}_map.json")), &case.series_map(DEFAULT_ORDER)?, Some(id))?;
    write_svg(&out_dir.join(format!("example{id}_f.svg")), &f, cfg, &format!("Example {id}: f"))?;
    write_svg(
        &out_dir.join(format!("example{id}_f0f.svg")),
        &f.convolve_f0(),
        cfg,
        &format!("Example {id}: f0 * f"),
    )?;
    Ok(())
}
