use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use irregularity::audit::{
    exhaustive_corpus, family_corpus, run_audit, AuditConfig, AuditReport, AuditStatus, CheckKind,
    CorpusItem, FamilySpec,
};
use irregularity::edgelist::{self, EdgeListDocument};
use irregularity::measures::to_f64;
use irregularity::spectra::{predicted_blow_up_spectrum, predicted_closed_blow_up_spectrum};
use irregularity::{
    bipartite_rough_regularize, fine_regularize, graph_spectrum, rough_regularize, s2_deviation,
    DegreeProfile, Error, Spectrum64,
};
use serde_json::json;

use crate::args::{
    CheckArgs, CorpusArgs, Format, GlobalArgs, InputArgs, Mode, RegularizeArgs, SpectrumArgs,
};

/// Failures, each mapped to a process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Input(Error),
    #[error(transparent)]
    Breach(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::AlgorithmInvariant(_)
            | Error::Convergence { .. }
            | Error::Replay { .. }
            | Error::SpectrumLength { .. } => CliError::Breach(e),
            other => CliError::Input(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Input(_) => 2,
            CliError::Breach(_) => 3,
        }
    }
}

pub type CliResult<T = u8> = Result<T, CliError>;

pub fn exit_code_for(status: AuditStatus) -> u8 {
    match status {
        AuditStatus::Clean => 0,
        AuditStatus::Findings => 1,
        AuditStatus::Breaches => 3,
    }
}

fn read_input(input: &InputArgs) -> CliResult<EdgeListDocument> {
    let path = &input.input;
    let io_err = |source| CliError::Io {
        path: path.clone(),
        source,
    };
    let text = if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
        text
    } else {
        fs::read_to_string(path).map_err(io_err)?
    };
    edgelist::parse(&text).map_err(|e| CliError::Input(e.into()))
}

fn write_output(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn to_csv<S: serde::Serialize>(rows: &[S]) -> CliResult<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer
            .serialize(row)
            .map_err(|e| CliError::Usage(format!("csv output: {e}")))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Usage(format!("csv output: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn pretty(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json values serialize");
    text.push('\n');
    text
}

pub fn measures(global: &GlobalArgs, input: &InputArgs) -> CliResult {
    let doc = read_input(input)?;
    let g = &doc.graph;
    let profile = DegreeProfile::new(g);
    let mu = graph_spectrum::<f64>(g)?.largest();
    let epsilon = mu - profile.mean_f64();
    let s2 = doc
        .layout
        .as_ref()
        .map(|l| s2_deviation(g, l))
        .transpose()?;

    let text = match global.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut t = String::new();
            let degrees: Vec<String> = g.degrees().iter().map(ToString::to_string).collect();
            writeln!(t, "n {}", g.n()).unwrap();
            writeln!(t, "m {}", g.m()).unwrap();
            writeln!(t, "degrees {}", degrees.join(" ")).unwrap();
            writeln!(
                t,
                "mean_degree {} ({:.6})",
                profile.mean_degree,
                profile.mean_f64()
            )
            .unwrap();
            writeln!(t, "s {} ({:.6})", profile.s, profile.s_f64()).unwrap();
            writeln!(t, "var {} ({:.6})", profile.var, profile.var_f64()).unwrap();
            if let Some(s2) = s2 {
                writeln!(t, "s2 {} ({:.6})", s2, to_f64(&s2)).unwrap();
            }
            writeln!(t, "mu {mu:.6}").unwrap();
            writeln!(t, "epsilon {epsilon:.6}").unwrap();
            t
        }
        Format::Json => pretty(&json!({
            "n": g.n(),
            "m": g.m(),
            "degrees": g.degrees(),
            "mean_degree": profile.mean_degree.to_string(),
            "s": profile.s.to_string(),
            "var": profile.var.to_string(),
            "s2": s2.map(|v| v.to_string()),
            "mean_degree_value": profile.mean_f64(),
            "s_value": profile.s_f64(),
            "var_value": profile.var_f64(),
            "mu": mu,
            "epsilon": epsilon,
        })),
        Format::Csv => {
            #[derive(serde::Serialize)]
            struct Row {
                n: usize,
                m: usize,
                mean_degree: String,
                s: String,
                var: String,
                s_value: f64,
                var_value: f64,
                mu: f64,
                epsilon: f64,
            }
            to_csv(&[Row {
                n: g.n(),
                m: g.m(),
                mean_degree: profile.mean_degree.to_string(),
                s: profile.s.to_string(),
                var: profile.var.to_string(),
                s_value: profile.s_f64(),
                var_value: profile.var_f64(),
                mu,
                epsilon,
            }])?
        }
    };
    write_output(global.out.as_deref(), &text)?;
    Ok(0)
}

pub fn spectrum(global: &GlobalArgs, args: &SpectrumArgs) -> CliResult {
    let doc = read_input(&args.input)?;
    let g = &doc.graph;
    let (values, predicted): (Spectrum64, Option<Spectrum64>) = match args.blow_up {
        None => (graph_spectrum(g)?, None),
        Some(t) => {
            let t = usize::try_from(t)
                .map_err(|_| CliError::Usage("blow-up factor too large".into()))?;
            let base = graph_spectrum::<f64>(g)?;
            if args.closed {
                (
                    graph_spectrum(&g.closed_blow_up(t)?)?,
                    Some(predicted_closed_blow_up_spectrum(&base, g.n(), t)?),
                )
            } else {
                (
                    graph_spectrum(&g.blow_up(t)?)?,
                    Some(predicted_blow_up_spectrum(&base, g.n(), t)?),
                )
            }
        }
    };
    let distance = predicted
        .as_ref()
        .map(|p| values.linf_distance(p))
        .transpose()?;

    let text = match global.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut t = String::new();
            for v in values.values() {
                writeln!(t, "{v:.12}").unwrap();
            }
            if let Some(d) = distance {
                writeln!(t, "# linf distance to predicted spectrum {d:.3e}").unwrap();
            }
            t
        }
        Format::Json => pretty(&json!({
            "eigenvalues": values.values(),
            "residual": values.residual(),
            "predicted": predicted.as_ref().map(|p| p.values()),
            "linf_distance": distance,
        })),
        Format::Csv => {
            #[derive(serde::Serialize)]
            struct Row {
                k: usize,
                eigenvalue: f64,
                predicted: Option<f64>,
            }
            let rows: Vec<Row> = values
                .values()
                .iter()
                .enumerate()
                .map(|(i, &eigenvalue)| Row {
                    k: i + 1,
                    eigenvalue,
                    predicted: predicted.as_ref().map(|p| p.values()[i]),
                })
                .collect();
            to_csv(&rows)?
        }
    };
    write_output(global.out.as_deref(), &text)?;
    Ok(0)
}

pub fn regularize(global: &GlobalArgs, args: &RegularizeArgs) -> CliResult {
    let doc = read_input(&args.input)?;
    let g = &doc.graph;
    let outcome = match args.mode {
        Mode::Rough => rough_regularize(g)?,
        Mode::Bipartite => {
            let layout = doc.layout.as_ref().ok_or_else(|| {
                CliError::Usage("bipartite mode needs a `bipartite <a>` header".into())
            })?;
            bipartite_rough_regularize(g, layout)?
        }
        Mode::Fine => fine_regularize(g)?,
    };
    // The procedures certify themselves; a replay mismatch is an internal bug.
    if outcome.script.replay(g)? != outcome.result {
        return Err(
            Error::AlgorithmInvariant("edit script does not reproduce the result".into()).into(),
        );
    }
    if !outcome.within_bound() {
        return Err(Error::AlgorithmInvariant(format!(
            "{} edits exceed the certified bound {}",
            outcome.edits(),
            outcome.certified_bound
        ))
        .into());
    }

    let layout = (args.mode == Mode::Bipartite)
        .then_some(doc.layout.as_ref())
        .flatten();
    write_output(
        global.out.as_deref(),
        &edgelist::write(&outcome.result, layout),
    )?;
    if let Some(path) = &args.trace {
        fs::write(path, outcome.script.to_text()).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    let summary = format!(
        "edits {} <= bound {} ({:.4})",
        outcome.edits(),
        outcome.certified_bound,
        to_f64(&outcome.certified_bound)
    );
    // Keep stdout clean when it carries the graph.
    if global.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn parse_checks(list: &str) -> CliResult<Vec<CheckKind>> {
    CheckKind::parse_list(list).map_err(|e| CliError::Usage(e.to_string()))
}

fn config(global: &GlobalArgs, corpus: String, checks: Vec<CheckKind>) -> CliResult<AuditConfig> {
    if !(global.tol >= 0.0 && global.tol.is_finite()) {
        return Err(CliError::Usage(format!(
            "tolerance must be a finite nonnegative number, got {}",
            global.tol
        )));
    }
    let mut config = AuditConfig::new(corpus, checks);
    config.tol = global.tol;
    config.seed = global.seed;
    Ok(config)
}

fn emit_report(global: &GlobalArgs, report: &AuditReport) -> CliResult {
    let text = match global.format.unwrap_or(Format::Json) {
        Format::Json | Format::Text => {
            let mut text = report.to_json();
            text.push('\n');
            text
        }
        Format::Csv => to_csv(&report.csv_rows())?,
    };
    write_output(global.out.as_deref(), &text)?;
    let status = report.status();
    if status == AuditStatus::Breaches {
        for entry in &report.entries {
            if let Some(err) = &entry.error {
                eprintln!("breach: graph {}: {err}", entry.graph_id);
            }
            for check in entry.checks.iter().filter(|c| c.is_breach()) {
                eprintln!(
                    "breach: graph {}: {} lhs {} rhs {} margin {}",
                    entry.graph_id, check.name, check.lhs, check.rhs, check.margin
                );
            }
        }
    }
    let s = &report.summary;
    eprintln!(
        "{} graphs, {} checks, {} hold, {} findings, {} breaches",
        s.graphs, s.checks_run, s.holds, s.findings, s.breaches
    );
    Ok(exit_code_for(status))
}

pub fn check(global: &GlobalArgs, args: &CheckArgs) -> CliResult {
    let checks = parse_checks(&args.checks)?;
    let doc = read_input(&args.input)?;
    let id = args.input.input.display().to_string();
    let items = [CorpusItem::new(id.clone(), doc.graph, doc.layout)];
    let report = run_audit(&items, config(global, format!("file={id}"), checks)?);
    emit_report(global, &report)
}

pub fn corpus(global: &GlobalArgs, args: &CorpusArgs) -> CliResult {
    let checks = parse_checks(&args.checks)?;
    let (description, items) = match (&args.family, args.exhaustive) {
        (_, Some(n)) => (format!("exhaustive n={n}"), exhaustive_corpus(n)?),
        (Some(name), None) => {
            let spec = FamilySpec {
                count: args.count,
                seed: global.seed,
                step: args.step,
                ..FamilySpec::new(name.parse()?, args.nmin, args.nmax)
            };
            (spec.describe(), family_corpus(&spec)?)
        }
        (None, None) => {
            return Err(CliError::Usage(
                "either --family or --exhaustive is required".into(),
            ))
        }
    };
    let mut report = run_audit(&items, config(global, description, checks)?);
    if args.only_failures {
        report.retain_failures();
    }
    emit_report(global, &report)
}
