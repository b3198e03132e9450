//! Command-line front end: argument parsing, reports and exit codes.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::analogs::{
    ab_rho, corollary36_checks, corollary36_sharpness, d_commutative, d_tilde_lambda_positive,
    de_tilde, e_commutative, lemma33_closed_forms, lemma33_sums, rho_lambda_to_e, verify_thm31,
    xtilde_path, PathForm,
};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::graphs::{csf_powersum, SimpleGraph, DEFAULT_MAX_EDGES};
use crate::rational::fmt_q;
use crate::sym::{positivity_report, PositivityClass, SymBasis, SymElement};
use crate::yamanouchi::{
    verify_lemma41, verify_lemma42, verify_lemma45, verify_prop10, verify_spider_schur,
    XyFixture, XReading,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

const DEFAULT_MAX_N: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "chromsym", version, about = "Chromatic symmetric functions and spider positivity checks")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Emit the report as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit the report as CSV (key,value).
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// TOML file with max_edges, max_n and threads.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest edge count for the power-sum expansion.
    #[arg(long, global = true)]
    max_edges: Option<usize>,
    /// Size cap for verification suites (default 20); also the range bound when --n is absent.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand X_G in a symmetric-function basis.
    Expand {
        /// path:N, spider:A,B,C or file:PATH
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "s")]
        basis: BasisArg,
    },
    /// Positivity class of a graph or of the spiders S(a,b,c) over a range of a.
    Classify {
        #[arg(long, conflicts_with = "family")]
        graph: Option<String>,
        /// Legs b,c of S(a,b,c).
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 2)]
        a_min: usize,
        #[arg(long, default_value_t = 10)]
        a_max: usize,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Noncommutative analogs of path functions.
    Analogs {
        #[command(subcommand)]
        what: AnalogCmd,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Size, or upper size bound for the range suites.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Long leg of S(a,b,1).
    #[arg(long)]
    a: Option<usize>,
    /// Middle leg of S(a,b,1), 2 or 4.
    #[arg(long)]
    b: Option<usize>,
    /// Largest z for the M_{2z} → M_{3(z−1)} injection.
    #[arg(long)]
    max_z: Option<usize>,
    /// Table of X/Y norms and witness words; the bundled copy is used when absent.
    #[arg(long)]
    fixture: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum AnalogCmd {
    /// X̃_{P_n} as a Ψ-, Λ- or R-expansion.
    Path {
        #[arg(long)]
        n: usize,
        /// psi, lambda or ribbon
        #[arg(long, default_value = "ribbon")]
        basis: String,
    },
    /// ρ(Ã_n) and ρ(B̃_n) in the e basis.
    Ab {
        #[arg(long)]
        n: usize,
    },
    /// D̃_{n,k} (Λ basis) and Ẽ_{n,k} (R basis).
    De {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Compare ρ of both against the commutative computation.
        #[arg(long)]
        check_oracle: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    M,
    E,
    H,
    P,
    S,
}

impl From<BasisArg> for SymBasis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::M => SymBasis::Monomial,
            BasisArg::E => SymBasis::E,
            BasisArg::H => SymBasis::H,
            BasisArg::P => SymBasis::P,
            BasisArg::S => SymBasis::S,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Thm31,
    Lemma33,
    Lemma41,
    Lemma42,
    Lemma45,
    Prop10,
    Cor36,
    Spider,
}

/// Optional settings read from `--config`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub max_edges: Option<usize>,
    pub max_n: Option<usize>,
    pub threads: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Parse {
            offset: 0,
            message: format!("{}: {e}", path.display()),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub key: String,
    pub value: String,
}

/// Result of one command. Exact values are strings, rationals as `num/den`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub records: Vec<Record>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    fn new(command: String) -> Self {
        Report {
            command,
            status: Status::Pass,
            records: Vec::new(),
            timing_ms: None,
        }
    }

    fn push(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.records.push(Record {
            key: key.into(),
            value: value.into(),
        });
    }

    /// Records a check; any false check fails the report.
    fn check(&mut self, key: impl Into<String>, ok: bool) {
        if !ok {
            self.status = Status::Fail;
        }
        self.push(key, if ok { "pass" } else { "fail" });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["key", "value"]).expect("in-memory write");
        w.write_record(["status", self.status_str()]).expect("in-memory write");
        for r in &self.records {
            w.write_record([&r.key, &r.value]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            s.push_str(&format!("{}: {}\n", r.key, r.value));
        }
        s.push_str(&format!("status: {}\n", self.status_str()));
        if let Some(t) = self.timing_ms {
            s.push_str(&format!("time: {t} ms\n"));
        }
        s
    }

    fn status_str(&self) -> &'static str {
        match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

struct Limits {
    max_edges: usize,
    max_n: usize,
    /// `--max-n` or the config value when one was given.
    explicit_max_n: Option<usize>,
}

/// Parses `path:N`, `spider:A,B,...` or `file:PATH`.
pub fn parse_graph_spec(spec: &str) -> Result<SimpleGraph> {
    let bad = |m: &str| Error::Parse {
        offset: 0,
        message: format!("graph spec {spec:?}: {m}"),
    };
    let (kind, rest) = spec.split_once(':').ok_or_else(|| bad("expected KIND:VALUE"))?;
    match kind {
        "path" => {
            let n: usize = rest.trim().parse().map_err(|_| bad("not a vertex count"))?;
            SimpleGraph::path(n)
        }
        "spider" => {
            let legs = rest
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| bad("bad leg length")))
                .collect::<Result<Vec<_>>>()?;
            SimpleGraph::spider(&Partition::from_unsorted(legs))
        }
        "file" => SimpleGraph::from_file(Path::new(rest)),
        _ => Err(bad("unknown kind")),
    }
}

fn push_terms(report: &mut Report, f: &SymElement) {
    let sym = f.basis().symbol();
    for (lam, c) in f.coeffs().iter().rev() {
        report.push(format!("{sym}{lam}"), fmt_q(c));
    }
}

fn class_name(c: PositivityClass) -> &'static str {
    match c {
        PositivityClass::EPositive => "e-positive",
        PositivityClass::SchurPositive => "schur-positive",
        PositivityClass::NotSchurPositive => "not-schur-positive",
    }
}

fn cmd_expand(report: &mut Report, graph: &str, basis: SymBasis, lim: &Limits) -> Result<()> {
    let g = parse_graph_spec(graph)?;
    let x = csf_powersum(&g, lim.max_edges)?.to_basis(basis);
    report.push("graph", graph);
    report.push("vertices", g.vertex_count().to_string());
    report.push("edges", g.edges().len().to_string());
    report.push("expansion", x.to_string());
    push_terms(report, &x);
    Ok(())
}

fn classify_one(report: &mut Report, label: &str, g: &SimpleGraph, lim: &Limits) -> Result<()> {
    let x = csf_powersum(g, lim.max_edges)?;
    let r = positivity_report(&x);
    report.push(label, class_name(r.class));
    if let Some((basis, lam, c)) = r.witness {
        report.push(format!("{label} witness"), format!("{}{lam}: {}", basis.symbol(), fmt_q(&c)));
    }
    Ok(())
}

fn cmd_classify(
    report: &mut Report,
    graph: Option<&str>,
    family: Option<&str>,
    a_min: usize,
    a_max: usize,
    lim: &Limits,
) -> Result<()> {
    if let Some(spec) = graph {
        return classify_one(report, spec, &parse_graph_spec(spec)?, lim);
    }
    let fam = family.ok_or_else(|| Error::InvalidArgument("give --graph or --family".into()))?;
    let legs = fam
        .split(',')
        .map(|s| {
            s.trim().parse::<usize>().map_err(|_| Error::Parse {
                offset: 0,
                message: format!("family {fam:?}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    for a in a_min..=a_max {
        let mut all = vec![a];
        all.extend(&legs);
        let n = all.iter().sum::<usize>() + 1;
        if n > lim.max_n {
            return Err(Error::CapExceeded {
                what: format!("spider with {n} vertices"),
                limit: lim.max_n,
                estimate: format!("{n} vertices"),
            });
        }
        let label = format!(
            "S({})",
            all.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        );
        let g = SimpleGraph::spider(&Partition::from_unsorted(all))?;
        classify_one(report, &label, &g, lim)?;
    }
    Ok(())
}

fn reading_name(r: XReading) -> &'static str {
    match r {
        XReading::Stated => "stated",
        XReading::Full => "full",
    }
}

fn check_cap(n: usize, lim: &Limits) -> Result<()> {
    if n > lim.max_n {
        return Err(Error::CapExceeded {
            what: format!("size {n}"),
            limit: lim.max_n,
            estimate: format!("{n}"),
        });
    }
    Ok(())
}

fn cmd_verify(report: &mut Report, v: &VerifyArgs, lim: &Limits) -> Result<()> {
    match v.suite {
        Suite::Thm31 => {
            let max_n = v.n.or(lim.explicit_max_n).unwrap_or(10);
            check_cap(max_n, lim)?;
            for n in 1..=max_n {
                let r = verify_thm31(n)?;
                report.check(format!("n={n}"), r.passed());
            }
        }
        Suite::Lemma33 => {
            let max_n = v.n.or(lim.explicit_max_n).unwrap_or(20);
            check_cap(max_n, lim)?;
            for n in 2..=max_n {
                let got = lemma33_sums(n)?;
                let want = lemma33_closed_forms(n);
                report.check(format!("n={n} sums={},{}", got.0, got.1), got == want);
            }
        }
        Suite::Lemma41 => {
            let n = v.n.unwrap_or(10);
            let k = v.k.unwrap_or(5);
            let r = verify_lemma41(n, k)?;
            report.check("ribbon coefficients", r.ribbon_coefficients_match);
            report.check("class decomposition", r.classes_match);
            report.check("prefix families", r.prefixes_match);
            report.push(
                "six-term form",
                if r.printed_match { "agrees" } else { "disagrees" },
            );
            for row in &r.rows {
                report.push(
                    format!("kappa={}", row.kappa),
                    format!(
                        "truth={} classes={} prefixes={} printed={}",
                        fmt_q(&row.ground_truth),
                        fmt_q(&row.classes),
                        fmt_q(&row.prefixes),
                        fmt_q(&row.printed)
                    ),
                );
            }
        }
        Suite::Lemma42 => {
            let n = v.n.unwrap_or(9);
            check_cap(n, lim)?;
            let rows = verify_lemma42(n)?;
            report.push("maps", rows.len().to_string());
            report.push("domain words", rows.iter().map(|r| r.domain_size).sum::<usize>().to_string());
            for r in rows.iter().filter(|r| !r.passed()) {
                report.check(format!("{} kappa={}", r.name, r.kappa), false);
                for f in &r.failures {
                    report.push("witness", f.clone());
                }
            }
            report.check("all", rows.iter().all(|r| r.passed()));
        }
        Suite::Lemma45 => {
            let n = v.n.unwrap_or(9);
            check_cap(n, lim)?;
            let rows = verify_lemma45(n, v.max_z.unwrap_or(6))?;
            report.push("maps", rows.len().to_string());
            report.push("domain words", rows.iter().map(|r| r.domain_size).sum::<usize>().to_string());
            for r in rows.iter().filter(|r| !r.passed()) {
                report.check(format!("{} kappa={}", r.name, r.kappa), false);
                for f in &r.failures {
                    report.push("witness", f.clone());
                }
            }
            report.check("all", rows.iter().all(|r| r.passed()));
        }
        Suite::Prop10 => {
            let fx = match &v.fixture {
                Some(p) => XyFixture::load(p)?,
                None => XyFixture::bundled(),
            };
            let r = verify_prop10(Some(&fx))?;
            for (reading, contents) in &r.nonempty_contents {
                report.push(
                    format!("nonempty contents ({})", reading_name(*reading)),
                    contents.len().to_string(),
                );
            }
            report.push("fixture records", r.fixture_records.to_string());
            for row in &r.rows {
                report.push(
                    format!("{} mu={} t={}", reading_name(row.reading), row.mu, row.t),
                    format!(
                        "X<={} Y<={} X>={} Y>={}",
                        fmt_q(&row.x_lt),
                        fmt_q(&row.y_lt),
                        fmt_q(&row.x_ge),
                        fmt_q(&row.y_ge)
                    ),
                );
            }
            report.check("inequalities", r.failures.is_empty());
            for m in &r.fixture_mismatches {
                report.push(format!("mismatch mu={} t={}", m.mu, m.t), m.message.clone());
            }
            report.check("fixture", r.fixture_mismatches.is_empty());
        }
        Suite::Cor36 => {
            let max_n = v.n.or(lim.explicit_max_n).unwrap_or(10);
            check_cap(max_n, lim)?;
            let ks: Vec<usize> = match v.k {
                Some(k) => vec![k],
                None => (1..=5).collect(),
            };
            for &k in &ks {
                let s = corollary36_sharpness(k)?;
                report.push(format!("sharpness k={k}"), fmt_q(&s));
                report.check(format!("sharpness k={k} equals -k"), s == crate::rational::q(-(k as i64)));
            }
            for n in 2..=max_n {
                for k in 1..=n {
                    if v.k.is_some_and(|kk| kk != k) {
                        continue;
                    }
                    let r = corollary36_checks(n, k)?;
                    report.check(format!("n={n} k={k} e-positive"), r.e_positive);
                    if k < n {
                        report.check(
                            format!("n={n} k={k} D Lambda-positive"),
                            d_tilde_lambda_positive(n, k)?,
                        );
                    }
                }
            }
        }
        Suite::Spider => {
            let b = v.b.unwrap_or(2);
            let a = v.a.unwrap_or(b);
            let r = verify_spider_schur(a, b, lim.max_n, lim.max_edges)?;
            report.push("graph", format!("S({a},{b},1)"));
            report.push("class", class_name(r.class));
            if let Some((basis, lam, c)) = &r.witness {
                report.push("witness", format!("{}{lam}: {}", basis.symbol(), fmt_q(c)));
            }
            report.check("schur positive", r.schur_positive());
            report.check("decomposition e1*D + E", r.decomposition_matches);
            report.check("D e-positive", r.d_part_e_positive);
            report.check("E schur positive", r.e_part_schur_positive);
            if let Some(c) = r.chain {
                report.check("bound M2 - M3/2", c);
            }
        }
    }
    Ok(())
}

fn cmd_analogs(report: &mut Report, what: &AnalogCmd) -> Result<()> {
    match what {
        AnalogCmd::Path { n, basis } => {
            let f: PathForm = basis.parse()?;
            let x = xtilde_path(*n, f)?;
            report.push("expansion", x.to_string());
        }
        AnalogCmd::Ab { n } => {
            let (a, b) = ab_rho(*n)?;
            report.push(format!("A_{n}"), a.to_string());
            report.push(format!("B_{n}"), b.to_string());
        }
        AnalogCmd::De { n, k, check_oracle } => {
            let (d, e) = de_tilde(*n, *k)?;
            report.push("D", d.to_string());
            report.push("E", e.to_string());
            if *check_oracle {
                let d_ok = rho_lambda_to_e(&d) == d_commutative(*n, *k)?;
                let e_ok = e.project_rho().to_basis(SymBasis::E) == e_commutative(*n, *k)?;
                report.check("D oracle", d_ok);
                report.check("E oracle", e_ok);
            }
        }
    }
    Ok(())
}

fn command_echo(cmd: &Command) -> String {
    match cmd {
        Command::Expand { graph, basis } => format!("expand --graph {graph} --basis {basis:?}").to_lowercase(),
        Command::Classify { graph, family, a_min, a_max } => match graph {
            Some(g) => format!("classify --graph {g}"),
            None => format!(
                "classify --family {} --a-min {a_min} --a-max {a_max}",
                family.as_deref().unwrap_or("")
            ),
        },
        Command::Verify(v) => {
            let mut s = format!("verify {:?}", v.suite).to_lowercase();
            for (name, val) in [("n", v.n), ("k", v.k), ("a", v.a), ("b", v.b), ("max-z", v.max_z)] {
                if let Some(x) = val {
                    s.push_str(&format!(" --{name} {x}"));
                }
            }
            s
        }
        Command::Analogs { what } => match what {
            AnalogCmd::Path { n, basis } => format!("analogs path --n {n} --basis {basis}"),
            AnalogCmd::Ab { n } => format!("analogs ab --n {n}"),
            AnalogCmd::De { n, k, check_oracle } => {
                format!("analogs de --n {n} --k {k}{}", if *check_oracle { " --check-oracle" } else { "" })
            }
        },
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI, writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_PASS;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let config = match &cli.global.config {
        Some(p) => match Config::load(p) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        },
        None => Config::default(),
    };
    let explicit_max_n = cli.global.max_n.or(config.max_n);
    let lim = Limits {
        max_edges: cli.global.max_edges.or(config.max_edges).unwrap_or(DEFAULT_MAX_EDGES),
        max_n: explicit_max_n.unwrap_or(DEFAULT_MAX_N),
        explicit_max_n,
    };
    let threads = cli.global.threads.or(config.threads).unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let start = Instant::now();
    let mut report = Report::new(command_echo(&cli.command));
    let result = pool.install(|| match &cli.command {
        Command::Expand { graph, basis } => cmd_expand(&mut report, graph, (*basis).into(), &lim),
        Command::Classify { graph, family, a_min, a_max } => cmd_classify(
            &mut report,
            graph.as_deref(),
            family.as_deref(),
            *a_min,
            *a_max,
            &lim,
        ),
        Command::Verify(v) => cmd_verify(&mut report, v, &lim),
        Command::Analogs { what } => cmd_analogs(&mut report, what),
    });
    if let Err(e) = result {
        let _ = writeln!(err, "error: {e}");
        return exit_code(&e);
    }
    if cli.global.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = if cli.global.json {
        report.to_json() + "\n"
    } else if cli.global.csv {
        report.to_csv()
    } else {
        report.to_text()
    };
    let _ = out.write_all(text.as_bytes());
    match report.status {
        Status::Pass => EXIT_PASS,
        Status::Fail => EXIT_FAIL,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("chromsym").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn graph_specs() {
        assert_eq!(parse_graph_spec("path:3").unwrap().vertex_count(), 3);
        assert_eq!(parse_graph_spec("spider:1,1,1").unwrap().degrees()[0], 3);
        assert!(parse_graph_spec("cycle:4").is_err());
        assert!(parse_graph_spec("path:x").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["expand", "--graph", "path:2", "--basis", "e"]).0, EXIT_PASS);
        assert_eq!(run_capture(&["expand", "--graph", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        let (code, _, err) = run_capture(&["expand", "--graph", "path:8", "--max-edges", "3"]);
        assert_eq!(code, EXIT_CAP, "{err}");
    }

    #[test]
    fn path_two() {
        let (_, out, _) = run_capture(&["expand", "--graph", "path:2", "--basis", "e"]);
        assert!(out.contains("expansion: 2e2"), "{out}");
    }

    #[test]
    fn json_round_trip() {
        let (_, out, _) = run_capture(&["--json", "expand", "--graph", "spider:1,1,1"]);
        let r: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(r.to_json() + "\n", out);
    }

    #[test]
    fn csv_output() {
        let (_, out, _) = run_capture(&["--csv", "verify", "lemma33", "--n", "4"]);
        assert!(out.starts_with("key,value\nstatus,pass\n"), "{out}");
    }

    #[test]
    fn config_file() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.toml");
        std::fs::write(&p, "max_edges = 2\n").unwrap();
        let (code, _, _) = run_capture(&["--config", p.to_str().unwrap(), "expand", "--graph", "path:5"]);
        assert_eq!(code, EXIT_CAP);
        std::fs::write(&p, "bogus = 1\n").unwrap();
        let (code, _, _) = run_capture(&["--config", p.to_str().unwrap(), "expand", "--graph", "path:5"]);
        assert_eq!(code, EXIT_USAGE);
    }
}
