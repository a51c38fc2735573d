mod config;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use chenlee::{convergence_report, simulate, State, SystemSpec, Trajectory};
use report::{analyze_point, fmt_f64, invalid_row, ReportRow, REPORT_HEADER};

const EXIT_USAGE: u8 = 2;
const EXIT_DIVERGED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "chenlee",
    version,
    about = "Stability analysis and fractional integration of the controlled Chen-Lee system"
)]
struct Cli {
    /// Emit single-line JSON records instead of aligned text
    #[arg(long, global = true)]
    json: bool,
    /// Fail when the closed-form verdict disagrees with the cone test
    #[arg(long, global = true)]
    strict: bool,
    /// Output file path
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the controlled equilibrium (0, m, 0); m = 0 is the origin
    Analyze {
        #[arg(short, allow_negative_numbers = true)]
        a: f64,
        #[arg(short, allow_negative_numbers = true)]
        c: f64,
        #[arg(short, allow_negative_numbers = true)]
        k: f64,
        #[arg(short, allow_negative_numbers = true, default_value_t = 0.0)]
        m: f64,
        #[arg(short, allow_negative_numbers = true)]
        q: f64,
    },
    /// Run the integrator from a config file and write the trajectory CSV
    Simulate {
        /// Flat key = value configuration file
        config: PathBuf,
    },
    /// Classify along a parameter grid and write a report CSV
    Sweep {
        /// Which parameter the grid walks
        #[arg(long, value_parser = ["q", "m", "k"])]
        vary: String,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        #[arg(short, allow_negative_numbers = true)]
        a: f64,
        #[arg(short, allow_negative_numbers = true)]
        c: f64,
        /// Fixed gain (ignored when --vary k)
        #[arg(short, allow_negative_numbers = true)]
        k: Option<f64>,
        /// Fixed line parameter (ignored when --vary m)
        #[arg(short, allow_negative_numbers = true, default_value_t = 0.0)]
        m: f64,
        /// Fixed order (ignored when --vary q)
        #[arg(short, allow_negative_numbers = true, default_value_t = 0.9)]
        q: f64,
    },
}

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn write_or_stdout(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| format!("writing {path:?}: {e}")),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { a, c, k, m, q } => run_analyze(&cli, a, c, k, m, q),
        Command::Simulate { ref config } => run_simulate(&cli, &config.clone()),
        Command::Sweep {
            ref vary,
            from,
            to,
            steps,
            a,
            c,
            k,
            m,
            q,
        } => run_sweep(&cli, &vary.clone(), from, to, steps, a, c, k, m, q),
    }
}

fn run_analyze(cli: &Cli, a: f64, c: f64, k: f64, m: f64, q: f64) -> ExitCode {
    let row = match analyze_point(a, c, k, m, q) {
        Ok(row) => row,
        Err(e) => return fail(EXIT_USAGE, &e.to_string()),
    };
    if cli.strict && !row.agree {
        return strict_failure(&row);
    }
    if cli.json {
        println!("{}", row.to_json());
    } else {
        print!("{}", row.to_text());
    }
    if let Some(path) = &cli.out {
        let content = format!("{REPORT_HEADER}\n{}\n", row.to_csv());
        if let Err(e) = fs::write(path, content) {
            return fail(EXIT_USAGE, &format!("writing {path:?}: {e}"));
        }
    }
    ExitCode::SUCCESS
}

fn strict_failure(row: &ReportRow) -> ExitCode {
    eprintln!("strict mode: closed-form verdict disagrees with the cone test");
    eprintln!(
        "  at a={}, c={}, k={}, m={}, q={}: closed-form {} vs cone {:?}",
        row.a,
        row.c,
        row.k,
        row.m,
        row.q,
        row.verdict,
        report::cone_only_verdict(row.a, row.c, row.k, row.m, row.q)
    );
    ExitCode::from(1)
}

fn trajectory_csv(traj: &Trajectory, target: &State) -> String {
    let mut out = String::with_capacity(traj.points.len() * 96 + 32);
    out.push_str("j,t,x1,x2,x3,dist\n");
    for p in &traj.points {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            p.j,
            fmt_f64(p.t),
            fmt_f64(p.state.x1),
            fmt_f64(p.state.x2),
            fmt_f64(p.state.x3),
            fmt_f64(p.state.distance(target)),
        ));
    }
    out
}

fn run_simulate(cli: &Cli, config_path: &Path) -> ExitCode {
    let out = match &cli.out {
        Some(path) => path.clone(),
        None => return fail(EXIT_USAGE, "simulate requires --out <PATH>"),
    };
    let text = match fs::read_to_string(config_path) {
        Ok(text) => text,
        Err(e) => return fail(EXIT_USAGE, &format!("reading {config_path:?}: {e}")),
    };
    let cfg = match config::parse(&text) {
        Ok(cfg) => cfg,
        Err(e) => return fail(EXIT_USAGE, &e),
    };
    let anchor = State::new(0.0, cfg.m, 0.0);
    let sys = match SystemSpec::controlled(cfg.a, cfg.c, cfg.k, anchor) {
        Ok(sys) => sys,
        Err(e) => return fail(EXIT_USAGE, &e.to_string()),
    };
    let traj = match simulate(&cfg.integrator, &sys, &anchor) {
        Ok(traj) => traj,
        Err(e) => return fail(EXIT_USAGE, &e.to_string()),
    };

    if let Err(e) = fs::write(&out, trajectory_csv(&traj, &anchor)) {
        return fail(EXIT_USAGE, &format!("writing {out:?}: {e}"));
    }

    let report = convergence_report(&traj, &anchor);
    if cli.json {
        println!(
            "{{\"rows\":{},\"initial\":{},\"terminal\":{},\"minimum\":{},\"tail_non_increasing\":{},\"diverged\":{}}}",
            traj.points.len(),
            fmt_f64(report.initial),
            fmt_f64(report.terminal),
            fmt_f64(report.minimum),
            report.tail_non_increasing,
            traj.diverged
        );
    } else {
        println!("recorded states     {}", traj.points.len());
        println!("initial distance    {}", report.initial);
        println!("terminal distance   {}", report.terminal);
        println!("minimum distance    {}", report.minimum);
        println!("tail non-increasing {}", report.tail_non_increasing);
        if traj.diverged {
            println!("diverged            true (trajectory truncated)");
        }
    }
    if traj.diverged {
        ExitCode::from(EXIT_DIVERGED)
    } else {
        ExitCode::SUCCESS
    }
}

#[allow(clippy::too_many_arguments)]
fn run_sweep(
    cli: &Cli,
    vary: &str,
    from: f64,
    to: f64,
    steps: usize,
    a: f64,
    c: f64,
    k: Option<f64>,
    m: f64,
    q: f64,
) -> ExitCode {
    if !from.is_finite() || !to.is_finite() || from > to {
        return fail(EXIT_USAGE, &format!("invalid range [{from}, {to}]"));
    }
    if steps == 0 {
        return fail(EXIT_USAGE, "need at least one grid point");
    }
    if vary != "k" && k.is_none() {
        return fail(EXIT_USAGE, "-k is required unless --vary k");
    }
    let k = k.unwrap_or(0.0);

    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let value = if steps == 1 {
            from
        } else {
            from + (to - from) * i as f64 / (steps - 1) as f64
        };
        let (a_i, c_i, k_i, m_i, q_i) = match vary {
            "q" => (a, c, k, m, value),
            "m" => (a, c, k, value, q),
            _ => (a, c, value, m, q),
        };
        let row = match analyze_point(a_i, c_i, k_i, m_i, q_i) {
            Ok(row) => row,
            Err(e) => {
                let msg = e.to_string();
                let reason = if msg.contains("gain") {
                    "k=0"
                } else if msg.contains("order") {
                    "q-out-of-range"
                } else {
                    "parameters"
                };
                invalid_row(a_i, c_i, k_i, m_i, q_i, reason)
            }
        };
        rows.push(row);
    }

    if cli.strict {
        for row in rows.iter().filter(|r| !r.is_invalid()) {
            if !row.agree {
                return strict_failure(row);
            }
        }
    }

    let mut content = String::from(REPORT_HEADER);
    content.push('\n');
    for row in &rows {
        content.push_str(&row.to_csv());
        content.push('\n');
    }
    match write_or_stdout(&cli.out, &content) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(EXIT_USAGE, &e),
    }
}
