//! Command-line surface: `solve` for the analytic solution set, `oracle`
//! for brute-force cross-checks, and `vpal` for v-palindrome tooling.
//!
//! Exit codes: 0 success (including empty solution sets and `false`
//! answers), 1 cross-check mismatch, 2 usage errors, 3 capacity errors.

mod output;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use repcat::concat::digit_reverse;
use repcat::error::Error;
use repcat::oracle::{cross_check, default_kmax, CrossCheckReport};
use repcat::solver::{solve, CongruenceProblem};
use repcat::vpalindrome::{concat_family_check, is_v_palindrome, theorem_51_number, v};

#[derive(Parser)]
#[command(
    name = "repcat",
    version,
    about = "Which repetition counts k put the k-fold base-b concatenation of n in a residue class?"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve n(k) = a (mod m) for k, exactly
    Solve(SolveArgs),
    /// Compare the solver against brute-force evaluation
    Oracle(OracleArgs),
    /// v-palindrome checks and constructions
    Vpal {
        #[command(subcommand)]
        command: VpalCommand,
    },
}

#[derive(Args)]
struct SolveArgs {
    /// The number being concatenated
    #[arg(long)]
    n: u64,
    /// Base of the digit expansion, 2 to 36
    #[arg(long)]
    base: u64,
    /// Target residue (may be negative)
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Modulus
    #[arg(long)]
    m: u64,
    /// Print the algorithm steps and their bindings
    #[arg(long)]
    trace: bool,
    /// Also list the first COUNT solutions
    #[arg(long, value_name = "COUNT")]
    enumerate: Option<usize>,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, required_unless_present = "random")]
    n: Option<u64>,
    #[arg(long, required_unless_present = "random")]
    base: Option<u64>,
    #[arg(long, allow_negative_numbers = true, required_unless_present = "random")]
    a: Option<i64>,
    #[arg(long, required_unless_present = "random")]
    m: Option<u64>,
    /// Scan range; defaults to cover at least four progression members
    #[arg(long)]
    kmax: Option<u64>,
    /// Check COUNT random problems instead of one explicit problem
    #[arg(long, value_name = "COUNT", conflicts_with_all = ["n", "base", "a", "m"])]
    random: Option<u32>,
    /// Seed for --random
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum VpalCommand {
    /// Is N a v-palindrome?
    Check {
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check every k-fold decimal concatenation of N for k up to KMAX
    Family {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        kmax: u64,
        #[arg(long)]
        json: bool,
    },
    /// Multiply a 0/1 decimal palindrome RHO by 18 and verify the result
    Theorem {
        #[arg(long)]
        rho: u64,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Capacity(_) => 3,
                _ => 2,
            }
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Vpal { command } => cmd_vpal(command),
    }
}

fn checked_problem(n: u64, base: u64, a: i64, m: u64) -> Result<CongruenceProblem, Error> {
    if !(2..=36).contains(&base) {
        return Err(Error::Domain(format!("base {base} is outside 2..=36")));
    }
    CongruenceProblem::new(n, base, a, m)
}

fn cmd_solve(args: SolveArgs) -> Result<i32, Error> {
    let problem = checked_problem(args.n, args.base, args.a, args.m)?;
    let (set, trace) = solve(&problem)?;
    let members = args.enumerate.map(|count| set.enumerate(count));

    if args.json {
        let mut envelope = json!({
            "problem": output::problem_json(&problem),
            "solution": output::solution_json(&set),
        });
        if let Some(members) = &members {
            envelope["members"] = json!(members
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>());
        }
        if args.trace {
            envelope["trace"] = output::trace_json(&trace);
        }
        println!("{envelope}");
    } else {
        println!("{set}");
        if let Some(members) = &members {
            println!(
                "{}",
                members
                    .iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
        if args.trace {
            print!("{}", output::render_trace(&trace));
        }
    }
    Ok(0)
}

fn cmd_oracle(args: OracleArgs) -> Result<i32, Error> {
    if let Some(count) = args.random {
        return cmd_oracle_random(count, args.seed, args.kmax, args.json);
    }
    let problem = checked_problem(
        args.n.unwrap(),
        args.base.unwrap(),
        args.a.unwrap(),
        args.m.unwrap(),
    )?;
    let kmax = match args.kmax {
        Some(kmax) => kmax,
        None => default_kmax(&solve(&problem)?.0),
    };
    let report = cross_check(&problem, kmax)?;

    if args.json {
        println!("{}", report_json(&report));
    } else {
        if report.passed {
            println!("PASS (kmax {kmax})");
        } else {
            println!("FAIL (kmax {kmax}, {} mismatches)", report.mismatches.len());
            for m in &report.mismatches {
                println!("k={}: oracle={} solver={}", m.k, m.oracle, m.solver);
            }
        }
    }
    Ok(if report.passed { 0 } else { 1 })
}

fn report_json(report: &CrossCheckReport) -> serde_json::Value {
    json!({
        "problem": output::problem_json(&report.problem),
        "kmax": report.kmax.to_string(),
        "passed": report.passed,
        "mismatches": report.mismatches.iter().map(|m| json!({
            "k": m.k.to_string(),
            "oracle": m.oracle,
            "solver": m.solver,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_oracle_random(
    count: u32,
    seed: u64,
    kmax: Option<u64>,
    as_json: bool,
) -> Result<i32, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..count {
        let n = rng.gen_range(1..=1_000_000u64);
        let base = rng.gen_range(2..=16u64);
        let m = rng.gen_range(1..=100_000u64);
        let a = rng.gen_range(-(m as i64)..=m as i64);
        let problem = CongruenceProblem::new(n, base, a, m)?;
        let kmax = match kmax {
            Some(kmax) => kmax,
            None => default_kmax(&solve(&problem)?.0),
        };
        let report = cross_check(&problem, kmax)?;
        if !report.passed {
            failures.push(report);
        }
    }
    let passed = failures.is_empty();
    if as_json {
        println!(
            "{}",
            json!({
                "count": count.to_string(),
                "seed": seed.to_string(),
                "passed": passed,
                "failures": failures.iter().map(report_json).collect::<Vec<_>>(),
            })
        );
    } else if passed {
        println!("PASS ({count} problems, seed {seed})");
    } else {
        println!("FAIL ({} of {count} problems mismatched)", failures.len());
        for report in &failures {
            let p = &report.problem;
            println!(
                "n={} base={} a={} m={}: {} mismatches",
                p.n,
                p.b,
                p.a,
                p.m,
                report.mismatches.len()
            );
        }
    }
    Ok(if passed { 0 } else { 1 })
}

fn cmd_vpal(command: VpalCommand) -> Result<i32, Error> {
    match command {
        VpalCommand::Check { n, json: as_json } => {
            let answer = is_v_palindrome(n)?;
            let reversed = digit_reverse(n, 10)?;
            let v_n = v(n)?;
            let v_r = v(reversed)?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "n": n.to_string(),
                        "reverse": reversed.to_string(),
                        "v": v_n.to_string(),
                        "v_reverse": v_r.to_string(),
                        "v_palindrome": answer,
                    })
                );
            } else {
                println!("{answer} (v({n}) = {v_n}, v({reversed}) = {v_r})");
            }
            Ok(0)
        }
        VpalCommand::Family {
            n,
            kmax,
            json: as_json,
        } => {
            let rows = concat_family_check(n, kmax)?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "n": n.to_string(),
                        "kmax": kmax.to_string(),
                        "results": rows.iter().map(|(k, ok)| json!({
                            "k": k.to_string(),
                            "v_palindrome": ok,
                        })).collect::<Vec<_>>(),
                    })
                );
            } else {
                for (k, ok) in rows {
                    println!("k={k} {ok}");
                }
            }
            Ok(0)
        }
        VpalCommand::Theorem { rho, json: as_json } => {
            let number = theorem_51_number(rho)?;
            let answer = is_v_palindrome(number)?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "rho": rho.to_string(),
                        "number": number.to_string(),
                        "v_palindrome": answer,
                    })
                );
            } else {
                println!("{number} — v-palindrome: {answer}");
            }
            Ok(0)
        }
    }
}
