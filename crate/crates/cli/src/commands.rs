use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use serde::Serialize;
use turanmatch::graph::{fixture, parse_graph, write_graph, Graph};
use turanmatch::hfree::{verify_proposition_with, ForbiddenPattern};
use turanmatch::invariants::{
    clique_number, gallai_edmonds, matching_number, tutte_berge_max_deficiency,
};
use turanmatch::oracle::theorem_report;
use turanmatch::symmetrization::{local_search_with, SearchConfig};
use turanmatch::{ex_edges, make_gks, make_turan, Error};

use crate::Construction;

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(String, io::Error),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::VerificationFailure { .. }) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CmdResult = Result<ExitCode, CliError>;

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).map_err(|e| CliError::Io(p.display().to_string(), e))
        }
        _ => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io("stdout".into(), e))
        }
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io("stdin".into(), e))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string(value).expect("report types serialize");
    write_output(None, &format!("{text}\n"))
}

#[derive(Serialize)]
struct FormulaJson {
    n: usize,
    k: usize,
    s: usize,
    turan_branch: u64,
    gks_branch: u64,
    value: u64,
    winner: &'static str,
}

pub fn formula(n: usize, k: usize, s: usize) -> CmdResult {
    let r = ex_edges(n, k, s)?;
    print_json(&FormulaJson {
        n,
        k,
        s,
        turan_branch: r.turan_branch,
        gks_branch: r.gks_branch,
        value: r.value,
        winner: r.winner.as_str(),
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn construct(
    kind: Construction,
    n: usize,
    k: usize,
    s: Option<usize>,
    out: Option<PathBuf>,
) -> CmdResult {
    let (g, _) = match kind {
        Construction::Turan => make_turan(n, k)?,
        Construction::Gks => {
            let s = s.ok_or_else(|| CliError::Usage("gks needs --s".into()))?;
            make_gks(n, k, s)?
        }
    };
    write_output(out.as_deref(), &write_graph(&g))?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct TutteBergeJson {
    #[serde(rename = "B")]
    set: Vec<usize>,
    bound: usize,
    odd_components: Vec<usize>,
    even_components: Vec<usize>,
}

#[derive(Serialize)]
struct GallaiEdmondsJson {
    #[serde(rename = "D")]
    d: Vec<usize>,
    #[serde(rename = "A")]
    a: Vec<usize>,
    #[serde(rename = "C")]
    c: Vec<usize>,
}

#[derive(Serialize)]
struct AnalyzeJson {
    n: usize,
    m: usize,
    clique_number: Option<usize>,
    clique: Option<Vec<usize>>,
    matching_number: usize,
    matching: Vec<(usize, usize)>,
    tutte_berge: Option<TutteBergeJson>,
    gallai_edmonds: Option<GallaiEdmondsJson>,
    notes: Vec<String>,
}

fn skipped<T>(
    field: &str,
    result: turanmatch::Result<T>,
    notes: &mut Vec<String>,
) -> Result<Option<T>, CliError> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::Capacity { .. }) => {
            notes.push(format!("{field} skipped: {e}"));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn analyze(input: &Path) -> CmdResult {
    let g = parse_graph(&read_input(input)?)?;
    let mut notes = Vec::new();
    let clique = skipped("clique_number", clique_number(&g), &mut notes)?;
    let (nu, matching) = matching_number(&g);
    let tb = skipped("tutte_berge", tutte_berge_max_deficiency(&g), &mut notes)?;
    let ge = skipped("gallai_edmonds", gallai_edmonds(&g), &mut notes)?;
    print_json(&AnalyzeJson {
        n: g.n(),
        m: g.edge_count(),
        clique_number: clique.as_ref().map(|c| c.0),
        clique: clique.map(|c| c.1),
        matching_number: nu,
        matching: matching.pairs().to_vec(),
        tutte_berge: tb.map(|w| TutteBergeJson {
            set: w.set,
            bound: w.bound,
            odd_components: w.odd_components,
            even_components: w.even_components,
        }),
        gallai_edmonds: ge.map(|p| GallaiEdmondsJson {
            d: p.d,
            a: p.a,
            c: p.c,
        }),
        notes,
    })?;
    Ok(ExitCode::SUCCESS)
}

pub fn verify(
    max_n: usize,
    threads: usize,
    csv: Option<PathBuf>,
    witness_dir: Option<PathBuf>,
) -> CmdResult {
    let report = theorem_report(max_n, threads)?;
    let csv_on_stdout = csv.as_deref() == Some(Path::new("-"));
    if let Some(path) = csv {
        write_output(Some(&path), &report.to_csv())?;
    }
    if let Some(dir) = witness_dir {
        fs::create_dir_all(&dir).map_err(|e| CliError::Io(dir.display().to_string(), e))?;
        for cell in &report.cells {
            let path = dir.join(format!("n{}_k{}_s{}.txt", cell.n, cell.k, cell.s));
            write_output(Some(&path), &write_graph(&cell.witness()))?;
        }
    }
    let failed: Vec<_> = report.failures().collect();
    let mut summary = String::new();
    for cell in &failed {
        summary.push_str(&format!(
            "FAIL n={} k={} s={} oracle={} formula={} turan_branch={} gks_branch={}\n",
            cell.n,
            cell.k,
            cell.s,
            cell.max_edges,
            cell.formula.value,
            cell.formula.turan_branch,
            cell.formula.gks_branch
        ));
    }
    let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
    summary.push_str(&format!(
        "{verdict} n<={max_n}: {} cells, {} passed, {} failed\n",
        report.cells.len(),
        report.cells.len() - failed.len(),
        failed.len()
    ));
    if csv_on_stdout {
        eprint!("{summary}");
    } else {
        write_output(None, &summary)?;
    }
    if failed.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        let first = failed[0];
        eprint!("counterexample:\n{}", write_graph(&first.witness()));
        Ok(ExitCode::from(1))
    }
}

pub fn search(
    n: usize,
    k: usize,
    s: usize,
    seed: u64,
    restarts: usize,
    iters: usize,
    witness: Option<PathBuf>,
) -> CmdResult {
    let config = SearchConfig {
        restarts,
        iters,
        ..SearchConfig::default()
    };
    let report = local_search_with(n, k, s, seed, &config)?;
    write_output(None, &report.to_csv())?;
    if let Some(path) = witness {
        write_output(Some(&path), &write_graph(&report.best.graph))?;
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct HfreeJson {
    h: String,
    h_vertices: usize,
    h_edges: usize,
    chromatic_number: usize,
    color_critical: bool,
    critical_edge: (usize, usize),
    k: usize,
    n: usize,
    s: usize,
    oracle_value: u64,
    g_value: u64,
    status: &'static str,
}

fn resolve_pattern(name: &str) -> Result<Graph, CliError> {
    if let Some(g) = fixture(name) {
        return Ok(g);
    }
    let path = Path::new(name);
    if path.exists() {
        return Ok(parse_graph(&read_input(path)?)?);
    }
    Err(CliError::Usage(format!(
        "unknown graph {name:?}: not a fixture name or a file"
    )))
}

pub fn hfree(name: &str, n: usize, s: usize, threads: usize) -> CmdResult {
    let h = resolve_pattern(name)?;
    let pattern = ForbiddenPattern::new(&h)?;
    if !pattern.critical() {
        return Err(CliError::Usage(format!(
            "{name} is not color-critical (chromatic number {})",
            pattern.chi
        )));
    }
    let r = verify_proposition_with(&h, n, s, threads)?;
    print_json(&HfreeJson {
        h: name.to_string(),
        h_vertices: h.n(),
        h_edges: h.edge_count(),
        chromatic_number: r.chi,
        color_critical: true,
        critical_edge: r.critical_edge,
        k: r.k,
        n,
        s,
        oracle_value: r.oracle_value,
        g_value: r.g_value,
        status: r.comparison.as_str(),
    })?;
    Ok(ExitCode::SUCCESS)
}
