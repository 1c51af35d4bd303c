//! Command-line front end: reads algebra documents, dispatches the solvers
//! and verification suites, and emits deterministic reports.
//!
//! Exit codes: 0 all checks passed (skips allowed), 1 some check failed,
//! 2 input or usage error.

mod report;
mod suites;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};

use nary_alg::extension::extend;
use nary_alg::io::{catalog_documents, document_from_algebra, AlgebraDocument};
use nary_alg::opspace::{operator_family, operator_space, OperatorClass};
use nary_alg::{Field, GradedAlgebra, Matrix};

use report::{Check, Report};

#[derive(Parser)]
#[command(
    name = "nary",
    version,
    about = "Operator spaces of color n-ary algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the dimension and RREF basis of an operator space.
    Spaces {
        /// Algebra document (JSON).
        #[arg(long)]
        input: PathBuf,
        /// Operator class: der|gder|qder|centroid|qcentroid|zder|end.
        #[arg(long)]
        class: String,
        /// Degree tuple "g1,g2,..." (all realizable degrees when omitted).
        #[arg(long)]
        degree: Option<String>,
        /// Write the full JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a verification suite against an algebra document.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// s1|s2-closures|s3-extension|s4-classification|appendix|all.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write a catalog algebra document.
    Catalog {
        /// A|D|LB|Lalpha|zero.
        #[arg(long)]
        make: String,
        /// Product arity n.
        #[arg(long)]
        n: Option<usize>,
        /// Matrix file for LB (JSON array of arrays, rational strings).
        #[arg(long)]
        b: Option<PathBuf>,
        /// Scalar for Lalpha, e.g. "5" or "2/3".
        #[arg(long)]
        alpha: Option<String>,
        /// Dimension for the zero algebra.
        #[arg(long)]
        dim: Option<usize>,
        /// Base field: "Q" (default) or "Fp:<prime>".
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the doubled algebra and run the extension checks on the base.
    Extend {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(failed) => {
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_algebra(path: &Path) -> Result<(GradedAlgebra, String)> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let digest: String = Sha256::digest(&bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    let text = String::from_utf8(bytes).context("input is not UTF-8")?;
    let doc = AlgebraDocument::parse(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    let alg = doc
        .to_algebra()
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok((alg, digest))
}

fn parse_field(text: Option<&str>) -> Result<Field> {
    match text {
        None | Some("Q") | Some("q") => Ok(Field::Q),
        Some(s) => {
            let p = s
                .strip_prefix("Fp:")
                .or_else(|| s.strip_prefix("fp:"))
                .ok_or_else(|| anyhow!("field must be Q or Fp:<prime>, got {s:?}"))?;
            let p: u64 = p.parse().context("prime parse")?;
            Ok(Field::prime(p)?)
        }
    }
}

fn parse_degree_tuple(alg: &GradedAlgebra, text: &str) -> Result<nary_alg::GroupElement> {
    let coords: Vec<i64> = if text.trim().is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|t| t.trim().parse::<i64>().context("degree coordinate parse"))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(alg.group().element(&coords)?)
}

fn write_json(report: &Report, path: Option<&PathBuf>) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, report.to_json()).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Spaces {
            input,
            class,
            degree,
            json,
        } => {
            let (alg, digest) = read_algebra(&input)?;
            let class = OperatorClass::parse(&class)?;
            let spaces = match degree {
                Some(text) => {
                    let theta = parse_degree_tuple(&alg, &text)?;
                    vec![operator_space(&alg, class, &theta)]
                }
                None => operator_family(&alg, class).spaces,
            };
            let mut checks = Vec::new();
            for s in &spaces {
                let mut witness = BTreeMap::new();
                witness.insert("dim".to_string(), s.dim().to_string());
                for (r, row) in s.basis.basis().rows_iter().enumerate() {
                    let entries: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    witness.insert(format!("basis{r:03}"), entries.join(","));
                }
                checks.push(Check {
                    id: format!("spaces.{}.degree{:?}", class.name(), s.theta.coords()),
                    anchor: "Defs 1.2-1.7".to_string(),
                    status: report::Status::Pass,
                    reason: None,
                    witness,
                });
                println!(
                    "class={} degree={:?} dim={}",
                    class.name(),
                    s.theta.coords(),
                    s.dim()
                );
                for row in s.basis.basis().rows_iter() {
                    let entries: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                    println!("  [{}]", entries.join(", "));
                }
            }
            let report = Report::new(
                format!("spaces --class {}", class.name()),
                input.display().to_string(),
                digest,
                checks,
            );
            write_json(&report, json.as_ref())?;
            Ok(false)
        }
        Cmd::Verify { input, suite, json } => {
            let (alg, digest) = read_algebra(&input)?;
            let checks = suites::run_suite(&alg, &suite)?;
            let report = Report::new(
                format!("verify --suite {suite}"),
                input.display().to_string(),
                digest,
                checks,
            );
            report.print();
            write_json(&report, json.as_ref())?;
            Ok(report.failed())
        }
        Cmd::Catalog {
            make,
            n,
            b,
            alpha,
            dim,
            field,
            out,
        } => {
            let field = parse_field(field.as_deref())?;
            let need_n = || n.ok_or_else(|| anyhow!("--n is required for --make {make}"));
            let doc = match make.as_str() {
                "A" => catalog_documents::a(need_n()?, field),
                "D" => catalog_documents::d(need_n()?, field),
                "LB" => {
                    let n = need_n()?;
                    let path = b.ok_or_else(|| anyhow!("--b FILE is required for --make LB"))?;
                    let mat = read_matrix(&path, field)?;
                    if mat.rows() != n + 1 || mat.cols() != n + 1 {
                        bail!(
                            "matrix must be {}x{}, found {}x{}",
                            n + 1,
                            n + 1,
                            mat.rows(),
                            mat.cols()
                        );
                    }
                    catalog_documents::l_b(n, &mat, None)
                }
                "Lalpha" => {
                    let n = need_n()?;
                    let a =
                        alpha.ok_or_else(|| anyhow!("--alpha is required for --make Lalpha"))?;
                    let a = field.parse(&a)?;
                    catalog_documents::l_alpha(n, &a)
                }
                "zero" => {
                    let dim = dim.ok_or_else(|| anyhow!("--dim is required for --make zero"))?;
                    catalog_documents::zero(dim, need_n()?, field)
                }
                other => bail!("unknown catalog algebra {other:?}; expected A|D|LB|Lalpha|zero"),
            };
            // every emitted document must parse and validate
            doc.to_algebra()?;
            std::fs::write(&out, doc.canonical_json())
                .with_context(|| format!("writing {}", out.display()))?;
            println!("wrote {}", out.display());
            Ok(false)
        }
        Cmd::Extend { input, out, json } => {
            let (alg, digest) = read_algebra(&input)?;
            let ext = extend(&alg);
            let doc = document_from_algebra(&ext.carrier, Some("extended".to_string()));
            std::fs::write(&out, doc.canonical_json())
                .with_context(|| format!("writing {}", out.display()))?;
            let checks = suites::suite_s3(&alg);
            let report = Report::new(
                "extend".to_string(),
                input.display().to_string(),
                digest,
                checks,
            );
            report.print();
            write_json(&report, json.as_ref())?;
            println!("wrote {}", out.display());
            Ok(report.failed())
        }
    }
}

fn read_matrix(path: &Path, field: Field) -> Result<Matrix> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text).context("matrix parse")?;
    let rows = value
        .as_array()
        .ok_or_else(|| anyhow!("matrix file must be a JSON array of arrays"))?;
    let mut parsed: Vec<Vec<nary_alg::Scalar>> = Vec::new();
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| anyhow!("matrix rows must be arrays"))?;
        let mut out = Vec::new();
        for v in row {
            let s = match v {
                serde_json::Value::String(s) => field.parse(s)?,
                serde_json::Value::Number(x) => {
                    let i = x
                        .as_i64()
                        .ok_or_else(|| anyhow!("matrix entries must be integers or strings"))?;
                    field.from_i64(i)
                }
                _ => bail!("matrix entries must be integers or rational strings"),
            };
            out.push(s);
        }
        parsed.push(out);
    }
    let c = parsed.first().map_or(0, Vec::len);
    if parsed.iter().any(|row| row.len() != c) {
        bail!("ragged matrix rows");
    }
    Ok(Matrix::from_rows(parsed, c, field))
}
