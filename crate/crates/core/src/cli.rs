//! Command-line front end. [`run`] parses arguments, writes one document
//! (JSON or text) to `out`, and returns the process exit status.

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::hss_catalog::{record, HermitianSpace};
use crate::pluecker::named_map;
use crate::rep_theory::{enumerate_irreps_below, weyl_dimension, DominantWeight};
use crate::root_system::{build_root_system, delete_vertices, parabolic_split, system_name, TypeLabel};
use crate::schubert::{report, SchubertIndex};
use crate::verify::{verify, Scope, Status};

#[derive(Debug, Parser)]
#[command(name = "projrank", version, about = "Exact root-system, Schubert and Plücker computations for Hermitian symmetric spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Emit a single JSON document.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan matrix and positive roots, optionally split at a marked root
    /// or with vertices deleted.
    Roots {
        #[arg(long = "type")]
        type_label: TypeLabel,
        #[arg(long)]
        rank: usize,
        /// 1-based simple root index.
        #[arg(long)]
        marked: Option<usize>,
        /// Comma-separated 1-based vertices to delete.
        #[arg(long, value_delimiter = ',')]
        delete: Vec<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Weyl dimension of an irreducible module, or all modules up to a
    /// dimension bound.
    Dim {
        #[arg(long = "type")]
        type_label: TypeLabel,
        #[arg(long)]
        rank: usize,
        /// Comma-separated coefficients `m_i` of `λ = Σ m_i λ_i`.
        #[arg(long)]
        weight: Option<DominantWeight>,
        #[arg(long)]
        below: Option<u128>,
        #[command(flatten)]
        output: Output,
    },
    /// Dimension and degree of a Schubert variety.
    Schubert {
        /// Comma-separated strictly increasing entries `a_0, ..., a_d`.
        #[arg(long, value_delimiter = ',', required = true)]
        index: Vec<u32>,
        /// `d,n` for `Gr(d, n)`.
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        ambient: Vec<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Catalog entry of a Hermitian symmetric space.
    Hss {
        /// AIII, Gr, BDI, CI, DIII, EIII or EVII.
        #[arg(long)]
        kind: String,
        /// Comma-separated parameters: `p,q` for AIII, `d,n` for Gr, `m` or `n` otherwise.
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Degree of a named parametrized curve in a Grassmannian.
    Pluecker {
        /// grassmannian-line, symplectic-line, quadric-line, veronese-conic,
        /// ci-pencil or diii-pencil.
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run the reproduction suite.
    Verify {
        #[arg(long, default_value = "all")]
        scope: Scope,
        #[command(flatten)]
        output: Output,
    },
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cmd: Command) -> Result<(String, i32)> {
    match cmd {
        Command::Roots { type_label, rank, marked, delete, output } => roots(type_label, rank, marked, &delete, output.json),
        Command::Dim { type_label, rank, weight, below, output } => dim(type_label, rank, weight, below, output.json),
        Command::Schubert { index, ambient, output } => {
            let [d, n] = ambient[..] else {
                return Err(Error::Parameter("--ambient takes d,n".into()));
            };
            let idx = SchubertIndex::new(index, n)?;
            if idx.d() != d {
                return Err(Error::Parameter(format!("index has {} entries, Gr({d},{n}) needs {}", idx.d() + 1, d + 1)));
            }
            let r = report(&idx)?;
            let text = if output.json {
                to_json(&r)
            } else {
                format!("{idx} in Gr({d},{n}): dimension {}, degree {} (Pieri count {})", r.k, r.degree, r.oracle_degree)
            };
            Ok((text, 0))
        }
        Command::Hss { kind, params, output } => {
            let s = HermitianSpace::from_kind(&kind, &params)?;
            let r = record(&s)?;
            let text = if output.json {
                to_json(&r)
            } else {
                let mut lines = vec![
                    format!("{s}"),
                    format!("complex dimension  {}", r.dim_c),
                    format!("projective rank    {}", r.projective_rank),
                    format!("minimal degree     {}", r.min_degree),
                    format!("#P(M)              {}", r.count),
                ];
                for p in &r.pairs {
                    let v = serde_json::to_value(p).expect("serializable");
                    lines.push(format!("  M+ = {}, M- = {}  {}", v["m_plus"].as_str().unwrap_or(""), v["m_minus"].as_str().unwrap_or(""), p.constraint));
                }
                lines.extend(r.notes.iter().map(|n| format!("  note: {n}")));
                lines.join("\n")
            };
            Ok((text, 0))
        }
        Command::Pluecker { map, n, output } => {
            let r = named_map(&map, n)?;
            let text = if output.json {
                to_json(&r)
            } else {
                let mut lines = vec![format!("{} in {}: degree {}", r.map_name, r.ambient, r.degree)];
                lines.extend(r.membership_checks.iter().map(|c| format!("  {:<24} {}", c.name, if c.holds { "yes" } else { "no" })));
                lines.join("\n")
            };
            Ok((text, 0))
        }
        Command::Verify { scope, output } => {
            let r = verify(scope);
            let code = if r.ok() { 0 } else { 1 };
            let text = if output.json {
                to_json(&r)
            } else {
                let mut lines: Vec<String> = r
                    .checks
                    .iter()
                    .map(|c| {
                        let tag = if c.status == Status::Pass { "PASS" } else { "FAIL" };
                        format!("{tag}  {:<32} {}", c.check_id, c.detail)
                    })
                    .collect();
                lines.push(format!("{} checks, {} passed, {} failed", r.total, r.passed, r.failed));
                lines.join("\n")
            };
            Ok((text, code))
        }
    }
}

fn roots(label: TypeLabel, rank: usize, marked: Option<usize>, delete: &[usize], as_json: bool) -> Result<(String, i32)> {
    let rs = build_root_system(label, rank)?;
    let split = marked.map(|m| parabolic_split(&rs, m)).transpose()?;
    let components = if delete.is_empty() {
        None
    } else {
        Some(delete_vertices(&rs, &delete.iter().copied().collect::<BTreeSet<_>>())?)
    };
    if as_json {
        let mut v = serde_json::to_value(&rs).expect("serializable");
        v["positive_count"] = json!(rs.positive_roots().len());
        if let Some(s) = &split {
            v["parabolic"] = json!({
                "marked": s.marked,
                "dimension": s.dimension,
                "phi_1": s.phi_1,
                "phi_n_plus": s.phi_n_plus,
            });
        }
        if let Some(c) = &components {
            v["components"] = serde_json::to_value(c).expect("serializable");
        }
        return Ok((to_json(&v), 0));
    }
    let mut lines = vec![format!("{}: {} positive roots, algebra dimension {}", system_name(label, rank), rs.positive_roots().len(), rs.algebra_dimension())];
    lines.push("Cartan matrix:".into());
    for row in rs.cartan_matrix() {
        lines.push(format!("  {}", row.iter().map(|x| format!("{x:>3}")).collect::<String>()));
    }
    if let Some(s) = &split {
        lines.push(format!("marked α{}: |Φ(n+)| = {}, |Φ1 ∩ Φ+| = {}", s.marked, s.dimension, s.phi_1.len()));
    }
    if let Some(cs) = &components {
        let parts: Vec<String> = cs.iter().map(|c| format!("{} {:?}", system_name(c.type_label, c.rank), c.vertices)).collect();
        lines.push(format!("after deletion: {}", if parts.is_empty() { "empty".to_string() } else { parts.join(", ") }));
    }
    Ok((lines.join("\n"), 0))
}

fn dim(label: TypeLabel, rank: usize, weight: Option<DominantWeight>, below: Option<u128>, as_json: bool) -> Result<(String, i32)> {
    let rs = build_root_system(label, rank)?;
    match (weight, below) {
        (Some(w), None) => {
            let d = weyl_dimension(&rs, &w)?;
            let text = if as_json {
                to_json(&json!({"type": label, "rank": rank, "weight": w, "dimension": d}))
            } else {
                d.to_string()
            };
            Ok((text, 0))
        }
        (None, Some(bound)) => {
            let irreps = enumerate_irreps_below(&rs, bound)?;
            let text = if as_json {
                to_json(&json!({"type": label, "rank": rank, "bound": bound, "irreps": irreps}))
            } else {
                irreps.iter().map(|r| format!("{:>8}  {}", r.dimension, r.weight)).collect::<Vec<_>>().join("\n")
            };
            Ok((text, 0))
        }
        _ => Err(Error::Parameter("give exactly one of --weight and --below".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("projrank").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn dim_example() {
        let (code, out, _) = call(&["dim", "--type", "A", "--rank", "5", "--weight", "1,0,0,0,0"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "6");
    }

    #[test]
    fn hss_json() {
        let (code, out, _) = call(&["hss", "--kind", "EIII", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["projective_rank"], 5);
        assert_eq!(v["dim_C"], 16);
    }

    #[test]
    fn schubert_example() {
        let (code, out, _) = call(&["schubert", "--index", "1,2,3", "--ambient", "2,5", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["degree"], 1);
        assert_eq!(v["k"], 3);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["dim", "--type", "A", "--rank", "5", "--weight", "1,0", "--bogus"]).0, 2);
        let (code, _, err) = call(&["dim", "--type", "A", "--rank", "5", "--weight", "1,0"]);
        assert_eq!(code, 2);
        assert!(err.contains("error"));
        assert_eq!(call(&["hss", "--kind", "CI", "--params", "1"]).0, 2);
        assert_eq!(call(&["pluecker", "--map", "nope"]).0, 2);
    }
}
