//! Text and JSON rendering. JSON emits every integer as a decimal string so
//! consumers limited to 64-bit floats never silently lose precision.

use repcat::solver::{CongruenceProblem, SolutionSet, StepLabel, TraceLog};
use serde_json::{json, Value};

pub fn problem_json(problem: &CongruenceProblem) -> Value {
    json!({
        "n": problem.n.to_string(),
        "base": problem.b.to_string(),
        "a": problem.a.to_string(),
        "m": problem.m.to_string(),
    })
}

pub fn solution_json(set: &SolutionSet) -> Value {
    match set {
        SolutionSet::Empty => json!({ "kind": "empty" }),
        SolutionSet::Finite(elements) => json!({
            "kind": "finite",
            "elements": elements.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
        }),
        SolutionSet::Progression {
            residue,
            modulus,
            min,
        } => json!({
            "kind": "progression",
            "residue": residue.to_string(),
            "modulus": modulus.to_string(),
            "min": min.to_string(),
        }),
    }
}

pub fn trace_json(trace: &TraceLog) -> Value {
    let steps: Vec<Value> = trace
        .steps()
        .iter()
        .map(|step| {
            let bindings: Vec<Value> = step
                .bindings()
                .iter()
                .map(|(symbol, value)| json!({ "symbol": symbol, "value": value.to_string() }))
                .collect();
            json!({ "step": step.label.as_str(), "bindings": bindings })
        })
        .collect();
    Value::Array(steps)
}

/// Human-readable trace: one line per step, symbols printed the way the
/// algorithm names them.
pub fn render_trace(trace: &TraceLog) -> String {
    let mut out = String::from("trace:\n");
    for step in trace.steps() {
        if step.label == StepLabel::I && !out.ends_with("trace:\n") {
            out.push('\n'); // blank line between prime-power runs
        }
        let mut parts: Vec<String> = Vec::new();
        let mut residue: Option<i128> = None;
        for &(symbol, value) in step.bindings() {
            match symbol {
                "k_residue" => residue = Some(value),
                "k_modulus" => {
                    let r = residue.take().unwrap_or(0);
                    if value == 1 {
                        parts.push("k unconstrained".to_string());
                    } else {
                        parts.push(format!("k ≡ {r} (mod {value})"));
                    }
                }
                "k_min" => parts.push(format!("k ≥ {value}")),
                "a2_signed" => {
                    if let Some(last) = parts.last_mut() {
                        last.push_str(&format!(" (≡ {value})"));
                    }
                }
                _ => parts.push(format!("{}={value}", display_symbol(symbol))),
            }
        }
        let label = format!("({})", step.label.as_str());
        if parts.is_empty() {
            out.push_str(&format!("  {label}\n"));
        } else {
            out.push_str(&format!("  {label:<7}{}\n", parts.join("  ")));
        }
    }
    out
}

fn display_symbol(symbol: &str) -> &str {
    match symbol {
        "alpha" => "α",
        "alpha1" => "α1",
        "alpha2" => "α2",
        "beta" => "β",
        "delta" => "δ",
        "epsilon" => "ε",
        "mu1" => "μ1",
        "mu2" => "μ2",
        "nu1" => "ν1",
        "nu2" => "ν2",
        "nu2_over_f" => "ν2/f",
        "ind_b" => "ind b",
        "ind_a2" => "ind a2",
        other => other,
    }
}
