//! Command-line front end. All logic lives in [`run`] so it can be driven from tests.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bott::{bott, CohomologyAnswer, QDominantWeight};
use crate::error::Error;
use crate::resolution::{jpw_closed_form, render_polynomial, resolve, BettiJson, ConsistencyReport, JsonParams};
use crate::schubert::{desing_data, opposite_cell_pattern, DesingData, Group};
use crate::verify::{run_all, SuiteReport, VerifyConfig};
use crate::weyl::{
    family_element, smoothness_patterns, tangent_dim_at_id_c, w_max_rep, w_tilde_min_rep, ParabolicMarker,
    WeylElementC,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "schubres", version, about = "Free resolutions of symplectic Schubert opposite cells")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum GroupArg {
    H,
    G,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full pipeline for (n, k, r): geometry data, Betti table and K-polynomial check.
    Resolve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// Largest exterior power to enumerate.
        #[arg(long)]
        max_t: Option<usize>,
    },
    /// Closed-form Betti table of the (k+1)-minors of a symmetric n x n matrix.
    Betti {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_t: Option<usize>,
    },
    /// Bott's algorithm for a weight on GL_n / P_m.
    Bott {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Comma-separated entries, e.g. 2,0.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        weight: Vec<i64>,
    },
    /// Weyl group data, smoothness and the opposite-cell pattern for (n, k, r).
    Schubert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = GroupArg::H)]
        group: GroupArg,
    },
    /// Run the property suites.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random points per parameter triple.
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
}

/// A failure that ends the run: exit code plus a one-line reason.
struct Failure {
    code: i32,
    reason: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, reason) = match e {
            Error::InvariantBreach(_) | Error::RationalSingularityViolation { .. } => (EXIT_INTERNAL, "internal"),
            Error::Unsupported(_) => (EXIT_USAGE, "unsupported"),
            _ => (EXIT_USAGE, "usage"),
        };
        Failure { code, reason, message: e.to_string() }
    }
}

type Outcome = std::result::Result<(String, i32), Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let line: Vec<&str> = text.lines().take_while(|l| !l.trim().is_empty()).map(str::trim).collect();
            let _ = writeln!(err, "error[usage]: {}", line.join(" ").trim_start_matches("error: "));
            return EXIT_USAGE;
        }
    };
    let outcome = match cli.command {
        Command::Resolve { n, k, r, max_t } => cmd_resolve(n, k, r, max_t, cli.format),
        Command::Betti { n, k, max_t } => cmd_betti(n, k, max_t, cli.format),
        Command::Bott { n, m, weight } => cmd_bott(n, m, weight, cli.format),
        Command::Schubert { n, k, r, group } => cmd_schubert(n, k, r, group, cli.format),
        Command::Verify { seed, points } => cmd_verify(VerifyConfig { seed, points }, cli.format),
    };
    match outcome {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error[{}]: {}", f.reason, f.message.replace('\n', " "));
            f.code
        }
    }
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn internal(message: String) -> Failure {
    Failure { code: EXIT_INTERNAL, reason: "internal", message }
}

#[derive(Serialize)]
struct ResolveJson {
    params: JsonParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    betti: Option<Vec<crate::resolution::betti::EntryJson>>,
    codim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_polynomial: Option<Vec<serde_json::Number>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    consistency: Option<ConsistencyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unsupported: Option<String>,
    desing: DesingData,
    #[serde(skip_serializing_if = "Option::is_none")]
    enlarged: Option<BettiJson>,
}

fn render_desing(d: &DesingData) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ambient dim  {} (symmetric {}x{})", d.ambient_dim, d.n, d.n);
    let _ = writeln!(s, "base         GL_{} / P_{} (dim {})", d.base_rank, d.base_cut, d.base_dim);
    let _ = writeln!(s, "fibre dim    {}", d.fibre_dim);
    let _ = writeln!(s, "bundle rank  {}", d.bundle_rank);
    let _ = writeln!(s, "dim Y        {}", d.dim_y);
    let _ = writeln!(s, "codim        {}", d.codim);
    s
}

fn render_consistency(c: &ConsistencyReport, codim: usize) -> String {
    if c.divisible {
        format!("divisible by (1-z)^{codim}, degree {}", c.degree)
    } else {
        format!("NOT divisible by (1-z)^{codim}")
    }
}

fn cmd_resolve(n: usize, k: usize, r: usize, max_t: Option<usize>, format: Format) -> Outcome {
    let res = resolve(n, k, r, max_t)?;
    let codim = res.desing.codim;
    let params = JsonParams { n, k, r };
    // Truncated runs are exploratory; only full tables must satisfy the check.
    let inconsistent = max_t.is_none() && res.consistency.as_ref().is_some_and(|c| !c.passes());
    let text = match format {
        Format::Json => {
            let table_json = res.table.as_ref().map(|t| t.to_json(params, Some(codim)));
            to_json(&ResolveJson {
                params,
                betti: table_json.as_ref().map(|j| j.betti.clone()),
                codim,
                k_polynomial: table_json.map(|j| j.k_polynomial),
                consistency: res.consistency.clone(),
                unsupported: res.unsupported.clone(),
                desing: res.desing.clone(),
                enlarged: res.enlarged.as_ref().map(|t| t.to_json(params, None)),
            })
        }
        Format::Table => {
            let mut s = format!("(n, k, r) = ({n}, {k}, {r})\n");
            s.push_str(&render_desing(&res.desing));
            if let Some(msg) = &res.unsupported {
                let _ = writeln!(s, "\nunsupported: {msg}");
            }
            if let Some(t) = &res.table {
                let _ = writeln!(s, "\nBetti table (rows i, columns degree)\n{}", t.render_grid());
                let _ = writeln!(s, "K-polynomial  {}", render_polynomial(&t.k_polynomial()));
                if let Some(c) = &res.consistency {
                    let _ = writeln!(s, "consistency   {}", render_consistency(c, codim));
                }
            }
            if let Some(e) = &res.enlarged {
                let _ = writeln!(s, "\nenlarged space (contains the table above)\n{}", e.render_grid());
            }
            s
        }
    };
    if inconsistent {
        return Err(internal(format!("K-polynomial of ({n},{k},{r}) is not divisible by (1-z)^{codim}")));
    }
    Ok((text, EXIT_OK))
}

fn cmd_betti(n: usize, k: usize, max_t: Option<usize>, format: Format) -> Outcome {
    let table = jpw_closed_form(n, k, max_t)?;
    let codim = (n - k + 1) * (n - k) / 2;
    let text = match format {
        Format::Json => to_json(&table.to_json(JsonParams { n, k, r: n }, Some(codim))),
        Format::Table => format!(
            "{}K-polynomial  {}\nconsistency   {}\n",
            table.render_grid(),
            render_polynomial(&table.k_polynomial()),
            render_consistency(&table.consistency_check(codim), codim)
        ),
    };
    Ok((text, EXIT_OK))
}

#[derive(Serialize)]
struct BottJson {
    weight: Vec<i64>,
    cut: usize,
    result: CohomologyAnswer,
    dim: serde_json::Number,
}

fn cmd_bott(n: usize, m: usize, weight: Vec<i64>, format: Format) -> Outcome {
    if weight.len() != n {
        return Err(Failure {
            code: EXIT_USAGE,
            reason: "usage",
            message: format!("weight has {} entries, expected n = {n}", weight.len()),
        });
    }
    let w = QDominantWeight::new(weight.clone(), m)?;
    let answer = bott(&w)?;
    let dim = answer.dimension();
    let text = match format {
        Format::Json => to_json(&BottJson {
            weight,
            cut: m,
            result: answer,
            dim: crate::resolution::betti::big_number(&dim.to_string()),
        }),
        Format::Table => match &answer {
            CohomologyAnswer::Zero => "ZERO\n".to_string(),
            CohomologyAnswer::Nonzero { degree, label } => {
                let parts: Vec<String> = label.iter().map(ToString::to_string).collect();
                format!("j = {degree}\nbeta = ({})\ndim = {dim}\n", parts.join(","))
            }
        },
    };
    Ok((text, EXIT_OK))
}

#[derive(Serialize)]
struct SchubertJson {
    params: JsonParams,
    w: Vec<usize>,
    w_tilde: Vec<usize>,
    w_max: Vec<usize>,
    length_w: usize,
    length_w_tilde: usize,
    length_w_max: usize,
    avoids_4231_3142: bool,
    tangent_dim: usize,
    smooth: bool,
    group: &'static str,
    pattern: Vec<Vec<String>>,
    free_coordinates: Vec<(usize, usize)>,
    desing: DesingData,
}

fn cmd_schubert(n: usize, k: usize, r: usize, group: GroupArg, format: Format) -> Outcome {
    let w = family_element(n, k, r)?;
    let wt = w_tilde_min_rep(&w, &ParabolicMarker::p_tilde(n, k, r)?)?;
    let wmax = w_max_rep(n, k, r)?;
    let wmax_c = WeylElementC::from_full_word(&wmax)?;
    let length_w_max = wmax_c.length_c()?;
    let tangent_dim = tangent_dim_at_id_c(&wmax_c, &ParabolicMarker::borel_c(n))?;
    let avoids = wmax.avoids(&smoothness_patterns());
    let g = match group {
        GroupArg::H => Group::H,
        GroupArg::G => Group::G,
    };
    let pattern = opposite_cell_pattern(n, k, r, g)?;
    let desing = desing_data(n, k, r)?;
    let shown = 2 * n - (r - k);
    let w_tilde: Vec<usize> = wt.full_word().word()[..shown].to_vec();
    let cells = pattern.render();
    let text = match format {
        Format::Json => to_json(&SchubertJson {
            params: JsonParams { n, k, r },
            w: w.half_word().to_vec(),
            w_tilde,
            w_max: wmax.word().to_vec(),
            length_w: w.length_c()?,
            length_w_tilde: wt.length_c()?,
            length_w_max,
            avoids_4231_3142: avoids,
            tangent_dim,
            smooth: avoids && tangent_dim == length_w_max,
            group: if g == Group::H { "SL" } else { "Sp" },
            pattern: cells,
            free_coordinates: pattern.free_coordinates().to_vec(),
            desing,
        }),
        Format::Table => {
            let word = |v: &[usize]| format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
            let mut s = String::new();
            let _ = writeln!(s, "w        {w}  length {}", w.length_c()?);
            let _ = writeln!(s, "w~       {}  length {}", word(&w_tilde), wt.length_c()?);
            let _ = writeln!(s, "w_max    {wmax}  length {length_w_max}");
            let _ = writeln!(s, "avoids 4231, 3142: {}", if avoids { "yes" } else { "no" });
            let _ = writeln!(s, "tangent dim at identity: {tangent_dim}");
            let _ = writeln!(
                s,
                "\nopposite cell in {} ({} free coordinates)",
                if g == Group::H { format!("SL_{}", 2 * n) } else { format!("Sp_{}", 2 * n) },
                pattern.dimension()
            );
            s.push_str(&render_matrix(&cells));
            s.push('\n');
            s.push_str(&render_desing(&desing));
            s
        }
    };
    Ok((text, EXIT_OK))
}

fn render_matrix(cells: &[Vec<String>]) -> String {
    let cols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols).map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(1)).collect();
    let mut s = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        let _ = writeln!(s, "[ {} ]", line.join("  "));
    }
    s
}

fn cmd_verify(cfg: VerifyConfig, format: Format) -> Outcome {
    let reports: Vec<SuiteReport> = run_all(&cfg);
    let ok = reports.iter().all(SuiteReport::passed);
    let text = match format {
        Format::Json => to_json(&reports),
        Format::Table => {
            let mut s = format!("seed {}, {} points per triple\n", cfg.seed, cfg.points);
            for r in &reports {
                let _ = writeln!(s, "{r}");
            }
            s.push_str(if ok { "all suites passed\n" } else { "some suites FAILED\n" });
            s
        }
    };
    Ok((text, if ok { EXIT_OK } else { EXIT_VERIFY }))
}
