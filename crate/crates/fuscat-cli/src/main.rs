//! Command-line workbench: table reproduction, verification sweeps, and JSON
//! input/output over the fuscat library. Exit codes: 0 success, 1 on
//! verification failure, 2 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use fuscat::covers;
use fuscat::cyclo::{random_cyc, Cyc};
use fuscat::extraspecial;
use fuscat::modular::Premodular;
use fuscat::products;
use fuscat::report::CheckReport;
use fuscat::tambara::{self, BraidingData, LabeledBraiding};

#[derive(Parser)]
#[command(name = "fuscat", version, about = "Exact workbench for fusion rings, Tambara-Yamagami braidings and modular data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized property samples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker count for verification sweeps (or FUSCAT_PARALLEL).
    #[arg(long, global = true)]
    parallel: Option<usize>,
    /// Row order: as printed in the reference tables, or the enumeration order.
    #[arg(long, global = true, value_enum, default_value_t = SortOrder::Reference)]
    sort: SortOrder,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SortOrder {
    Reference,
    Computed,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Ising braiding catalog.
    Ising {
        #[command(subcommand)]
        cmd: IsingCmd,
    },
    /// Tambara-Yamagami braidings over E_n.
    Ty {
        #[command(subcommand)]
        cmd: TyCmd,
    },
    /// Premodular data checks.
    Modular {
        #[command(subcommand)]
        cmd: ModularCmd,
    },
    /// Deligne products of Ising braidings.
    Product {
        /// Comma-separated factors, e.g. I1,I7.
        #[arg(long)]
        factors: String,
        /// Also extract the integral subcategory and its braiding data.
        #[arg(long)]
        integral: bool,
    },
    /// Classification sweeps.
    Classify {
        #[command(subcommand)]
        cmd: ClassifyCmd,
    },
    /// Minimal nondegenerate cover machinery.
    Cover {
        #[command(subcommand)]
        cmd: CoverCmd,
    },
    /// Extraspecial p-group character rings.
    Extraspecial {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
    /// Untwisted doubles from the group catalog.
    Double {
        #[arg(long)]
        group: String,
    },
    /// Verification corpus.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum IsingCmd {
    /// The 8 Ising braidings.
    List,
}

#[derive(Subcommand)]
enum TyCmd {
    /// Enumerate braiding equivalence classes on C(chi_n^k, tau).
    #[command(name = "enum")]
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<u8>,
    },
    /// Symmetric center of a braiding.
    Center {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u8,
        #[arg(long, allow_hyphen_values = true)]
        tau_sign: i64,
        /// Comma-separated q values on the basis g_1..g_n (symbolic).
        #[arg(long)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha_sign: i64,
    },
}

#[derive(Subcommand)]
enum ModularCmd {
    /// Check the modular axioms of premodular data from a JSON file.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// All 36 Ising pairs by central charge, data isomorphism and integral part.
    #[command(name = "ising-products")]
    IsingProducts,
}

#[derive(Subcommand)]
enum CoverCmd {
    /// Rank-11 cover candidates over a nonsymmetric chi_2^0 base.
    Chi20 {
        /// Base braiding alpha: i or -i.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Ising-factor cover of a chi_n^1 braiding from a JSON spec.
    #[command(name = "chi-n1")]
    ChiN1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        spec: PathBuf,
    },
    /// Obstruction trace for chi_2n^0 covers of dimension 2^(4n+1).
    Obstruct {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run the full verification corpus.
    All,
}

enum CliError {
    Usage(String),
    Verification(String),
}

impl From<fuscat::Error> for CliError {
    fn from(e: fuscat::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli
        .parallel
        .or_else(|| std::env::var("FUSCAT_PARALLEL").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(1)
        .max(1);
    let result = run(&cli, workers);
    let (output, code) = match result {
        Ok(output) => (output, ExitCode::SUCCESS),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Verification(msg)) => (msg, ExitCode::from(1)),
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, output) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{output}");
    }
    code
}

fn run(cli: &Cli, workers: usize) -> Result<String, CliError> {
    match &cli.command {
        Command::Ising { cmd: IsingCmd::List } => ising_list(cli.format),
        Command::Ty { cmd } => match cmd {
            TyCmd::Enumerate { n, k } => ty_enumerate(cli.format, *n, *k, cli.sort),
            TyCmd::Center { n, k, tau_sign, q, alpha_sign } => {
                ty_center(cli.format, *n, *k, *tau_sign, q, *alpha_sign)
            }
        },
        Command::Modular { cmd: ModularCmd::Check { input } } => modular_check(cli.format, input),
        Command::Product { factors, integral } => product(cli.format, factors, *integral),
        Command::Classify { cmd: ClassifyCmd::IsingProducts } => classify(cli.format),
        Command::Cover { cmd } => match cmd {
            CoverCmd::Chi20 { alpha } => cover_chi20(cli.format, alpha, cli.sort),
            CoverCmd::ChiN1 { n, spec } => cover_chi_n1(cli.format, *n, spec),
            CoverCmd::Obstruct { n } => cover_obstruct(cli.format, *n),
        },
        Command::Extraspecial { p, n } => extraspecial_cmd(cli.format, *p, *n),
        Command::Double { group } => double_cmd(cli.format, group),
        Command::Verify { cmd: VerifyCmd::All } => verify_all(cli.format, cli.seed, workers),
    }
}

// ---------------------------------------------------------------- rendering

fn md_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", headers.join(" | ")));
    out.push_str(&format!("|{}\n", "---|".repeat(headers.len())));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}

fn csv_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&headers.join(","));
    out.push('\n');
    for row in rows {
        let quoted: Vec<String> = row
            .iter()
            .map(|c| {
                if c.contains(',') || c.contains('"') {
                    format!("\"{}\"", c.replace('"', "\"\""))
                } else {
                    c.clone()
                }
            })
            .collect();
        out.push_str(&quoted.join(","));
        out.push('\n');
    }
    out
}

fn emit(format: Format, md: String, jsonv: serde_json::Value, csv: Option<String>) -> String {
    match format {
        Format::Md => md,
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&jsonv).expect("serializable")),
        Format::Csv => csv.unwrap_or(md),
    }
}

fn report_lines(report: &CheckReport) -> String {
    let mut out = String::new();
    for item in &report.items {
        let status = if item.passed { "pass" } else { "FAIL" };
        let prov = match &item.provenance {
            fuscat::report::Provenance::Recomputed => String::new(),
            fuscat::report::Provenance::ExternalAxiom { citation } => format!(" [axiom: {citation}]"),
        };
        out.push_str(&format!("  {status}  {}: {}{prov}\n", item.name, item.statement));
    }
    if let Some(c) = &report.conclusion {
        out.push_str(&format!("conclusion: {c}\n"));
    }
    out
}

fn s_matrix_block(p: &Premodular) -> String {
    let mut out = String::from("```\n");
    let r = p.rank();
    let cells: Vec<Vec<String>> =
        (0..r).map(|x| (0..r).map(|y| p.s(x, y).symbolic()).collect()).collect();
    let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
    for row in &cells {
        let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&padded.join(" "));
        out.push('\n');
    }
    out.push_str("```\n");
    out
}

fn braiding_json(b: &BraidingData) -> serde_json::Value {
    json!({
        "n": b.chi.n,
        "k": b.chi.k,
        "tau_sign": b.tau_sign(),
        "tau": b.tau,
        "q": b.q,
        "q_symbolic": b.q.iter().map(|v| v.symbolic()).collect::<Vec<_>>(),
        "alpha": b.alpha,
        "alpha_symbolic": b.alpha.symbolic(),
        "epsilon": b.epsilon(),
    })
}

// ---------------------------------------------------------------- commands

fn ising_list(format: Format) -> Result<String, CliError> {
    let cat = tambara::ising_catalog();
    let headers = ["C", "tau", "delta", "epsilon", "q(e)", "q(g)", "alpha"];
    let rows: Vec<Vec<String>> = cat
        .iter()
        .map(|e| {
            vec![
                format!("I{}", e.j),
                e.data.tau.symbolic(),
                e.data.delta(0).to_string(),
                e.data.epsilon().to_string(),
                e.data.q[0].symbolic(),
                e.data.q[1].symbolic(),
                e.data.alpha.symbolic(),
            ]
        })
        .collect();
    let md = format!("## Ising braidings\n\n{}", md_table(&headers, &rows));
    let jsonv = json!(cat
        .iter()
        .map(|e| {
            let mut v = braiding_json(&e.data);
            v["label"] = json!(format!("I{}", e.j));
            v
        })
        .collect::<Vec<_>>());
    let csv = csv_table(&headers, &rows);
    Ok(emit(format, md, jsonv, Some(csv)))
}

fn braiding_table(rows: &[LabeledBraiding], n: usize) -> (Vec<String>, Vec<Vec<String>>) {
    let mut headers: Vec<String> = vec!["C".into(), "tau".into()];
    for j in 1..=n {
        headers.push(format!("delta{j}"));
    }
    headers.push("epsilon".into());
    for g in 0..(1usize << n) {
        headers.push(format!("q({})", fuscat::fusion::e_group_label(g)));
    }
    headers.push("alpha".into());
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![r.label.clone(), r.data.tau.symbolic()];
            for j in 0..n {
                row.push(r.data.delta(j).to_string());
            }
            row.push(r.data.epsilon().to_string());
            for g in 0..(1usize << n) {
                row.push(r.data.q[g].symbolic());
            }
            row.push(r.data.alpha.symbolic());
            row
        })
        .collect();
    (headers, table)
}

fn ty_enumerate(format: Format, n: usize, k: Option<u8>, sort: SortOrder) -> Result<String, CliError> {
    let ks: Vec<u8> = match k {
        Some(k) => vec![k],
        None => {
            if n % 2 == 0 {
                vec![0, 1]
            } else {
                vec![1]
            }
        }
    };
    let mut md = String::new();
    let mut jsonv = serde_json::Map::new();
    let mut csv = String::new();
    for &k in &ks {
        let classes = tambara::enumerate_braiding_classes(n, k)?;
        if n == 2 && sort == SortOrder::Reference {
            // Reference-labeled rows, verified to biject with the classes.
            let sections: Vec<(String, Vec<LabeledBraiding>)> = if k == 0 {
                vec![
                    ("chi_2^0 braidings: symmetric".into(), tambara::chi20_symmetric_rows()),
                    ("chi_2^0 braidings: nonsymmetric".into(), tambara::chi20_nonsymmetric_rows()),
                ]
            } else {
                vec![("chi_2^1 braidings".into(), tambara::chi21_rows())]
            };
            let mut matched = 0usize;
            for (title, rows) in &sections {
                for r in rows {
                    let hits = classes
                        .iter()
                        .filter(|c| tambara::braiding_equivalent(&c.representative, &r.data).is_some())
                        .count();
                    if hits == 1 {
                        matched += 1;
                    }
                }
                let (headers, table) = braiding_table(rows, n);
                let h: Vec<&str> = headers.iter().map(|s| s.as_str()).collect();
                md.push_str(&format!("## {title}\n\n{}\n", md_table(&h, &table)));
                csv.push_str(&csv_table(&h, &table));
            }
            let total: usize = sections.iter().map(|(_, r)| r.len()).sum();
            let ok = matched == total && classes.len() == total;
            md.push_str(&format!(
                "classes over chi_{n}^{k}: {} computed; reference rows matched 1-1: {}\n\n",
                classes.len(),
                if ok { "pass" } else { "FAIL" }
            ));
            if !ok {
                return Err(CliError::Verification(md));
            }
            jsonv.insert(
                format!("chi_{n}^{k}"),
                json!({
                    "classes": classes.len(),
                    "rows": sections
                        .iter()
                        .flat_map(|(_, rows)| rows.iter())
                        .map(|r| {
                            let mut v = braiding_json(&r.data);
                            v["label"] = json!(r.label);
                            v
                        })
                        .collect::<Vec<_>>(),
                }),
            );
        } else {
            let headers = ["class", "tau_sign", "q", "alpha", "symmetric"];
            let rows: Vec<Vec<String>> = classes
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    vec![
                        format!("{}", i + 1),
                        c.representative.tau_sign().to_string(),
                        c.representative
                            .q
                            .iter()
                            .map(|v| v.symbolic())
                            .collect::<Vec<_>>()
                            .join(" "),
                        c.representative.alpha.symbolic(),
                        c.symmetric.to_string(),
                    ]
                })
                .collect();
            md.push_str(&format!(
                "## chi_{n}^{k} braiding classes ({})\n\n{}\n",
                classes.len(),
                md_table(&headers, &rows)
            ));
            csv.push_str(&csv_table(&headers, &rows));
            jsonv.insert(
                format!("chi_{n}^{k}"),
                json!({
                    "classes": classes.len(),
                    "representatives": classes
                        .iter()
                        .map(|c| braiding_json(&c.representative))
                        .collect::<Vec<_>>(),
                }),
            );
        }
    }
    if n == 2 && ks.len() == 2 {
        md.push_str(&format!("note: {}\n", tambara::E2_CLASS_COUNT_NOTE));
        jsonv.insert("note".into(), json!(tambara::E2_CLASS_COUNT_NOTE));
    }
    Ok(emit(format, md, serde_json::Value::Object(jsonv), Some(csv)))
}

fn parse_q_list(q: &str) -> Result<Vec<Cyc>, CliError> {
    q.split(',')
        .map(|s| Cyc::parse(s.trim()).map_err(|e| CliError::Usage(format!("bad q value `{s}`: {e}"))))
        .collect()
}

fn ty_center(
    format: Format,
    n: usize,
    k: u8,
    tau_sign: i64,
    q: &str,
    alpha_sign: i64,
) -> Result<String, CliError> {
    let qv = parse_q_list(q)?;
    let b = tambara::make_braiding(n, k, tau_sign, &qv, alpha_sign)?;
    let center = b.symmetric_center();
    let prem = b.to_premodular();
    let muger = prem.symmetric_center();
    let agrees = center == muger;
    let ring = prem.ring();
    let labels: Vec<String> = center.indices.iter().map(|&i| ring.label(i).to_string()).collect();
    let fpdim = center.fpdim(ring);
    let md = format!(
        "symmetric center of chi_{n}^{k} braiding (tau_sign {tau_sign}, q = [{}], alpha = {}):\n  objects: {}\n  FPdim: {}\n  matches the Muger center of the derived data: {}\n",
        b.q.iter().map(|v| v.symbolic()).collect::<Vec<_>>().join(", "),
        b.alpha.symbolic(),
        labels.join(", "),
        fpdim.symbolic(),
        if agrees { "pass" } else { "FAIL" }
    );
    if !agrees {
        return Err(CliError::Verification(md));
    }
    let jsonv = json!({
        "braiding": braiding_json(&b),
        "center_objects": labels,
        "center_fpdim": fpdim,
        "muger_match": agrees,
    });
    Ok(emit(format, md, jsonv, None))
}

fn modular_check(format: Format, input: &PathBuf) -> Result<String, CliError> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", input.display())))?;
    // Accept a bare premodular object or any wrapper carrying one.
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad JSON: {e}")))?;
    let body = value.get("premodular").cloned().unwrap_or(value);
    let prem: Premodular = serde_json::from_value(body)
        .map_err(|e| CliError::Usage(format!("bad premodular JSON: {e}")))?;
    let axioms = prem.check_modular_axioms();
    let gauss = prem.gauss_central_charge();
    let center = prem.symmetric_center();
    let mut md = String::from("## modular axioms\n\n");
    for (name, check) in [
        ("unitary", &axioms.unitary),
        ("verlinde-integral", &axioms.verlinde_integral),
        ("dims-match", &axioms.dims_match),
    ] {
        md.push_str(&format!(
            "  {}  {name}{}\n",
            if check.passed { "pass" } else { "FAIL" },
            check.counterexample.as_ref().map(|c| format!(": {c}")).unwrap_or_default()
        ));
    }
    md.push_str(&format!(
        "\nrank: {}\ndim: {}\nconductor: {}\nsymmetric center rank: {}\nxi: {}\n",
        prem.rank(),
        prem.dim().symbolic(),
        prem.conductor(),
        center.rank(),
        gauss.xi.as_ref().map(|x| x.symbolic()).unwrap_or_else(|| "undefined".into())
    ));
    let jsonv = json!({
        "axioms": axioms,
        "rank": prem.rank(),
        "dim": prem.dim(),
        "conductor": prem.conductor(),
        "center_rank": center.rank(),
        "xi": gauss.xi,
        "tau_plus": gauss.tau_plus,
    });
    let rendered = emit(format, md, jsonv, None);
    if axioms.all_passed() {
        Ok(rendered)
    } else {
        Err(CliError::Verification(rendered))
    }
}

fn parse_factors(factors: &str) -> Result<Vec<u64>, CliError> {
    factors
        .split(',')
        .map(|s| {
            let s = s.trim();
            let digits = s.strip_prefix('I').or_else(|| s.strip_prefix('i')).unwrap_or(s);
            digits
                .parse::<u64>()
                .ok()
                .filter(|j| j % 2 == 1 && *j <= 15)
                .ok_or_else(|| CliError::Usage(format!("bad Ising factor `{s}` (use I1..I15, odd)")))
        })
        .collect()
}

fn product(format: Format, factors: &str, integral: bool) -> Result<String, CliError> {
    let indices = parse_factors(factors)?;
    let prod = products::ising_product(&indices)?;
    let p = &prod.premodular;
    let headers = ["object", "d", "theta"];
    let rows: Vec<Vec<String>> = (0..p.rank())
        .map(|x| {
            vec![
                p.ring().label(x).to_string(),
                p.ring().fpdim(x).symbolic(),
                p.theta(x).symbolic(),
            ]
        })
        .collect();
    let gauss = p.gauss_central_charge();
    let mut md = format!(
        "## product I{}\n\nrank {}, dim {}, conductor {}, xi = {}\n\n{}\nS-matrix:\n{}",
        indices.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(" x I"),
        p.rank(),
        p.dim().symbolic(),
        p.conductor(),
        gauss.xi.as_ref().map(|x| x.symbolic()).unwrap_or_else(|| "undefined".into()),
        md_table(&headers, &rows),
        s_matrix_block(p)
    );
    let mut jsonv = json!({
        "factors": indices,
        "premodular": p,
        "xi": gauss.xi,
    });
    if integral {
        let (report, rec) = products::verify_ising_factorization(&indices)?;
        let sub = &rec.sub_premodular;
        let sub_rows: Vec<Vec<String>> = (0..sub.rank())
            .map(|x| {
                vec![
                    sub.ring().label(x).to_string(),
                    sub.ring().fpdim(x).symbolic(),
                    sub.theta(x).symbolic(),
                ]
            })
            .collect();
        md.push_str(&format!(
            "\n## integral part\n\n{}\nrecovered braiding: tau = {}, q = [{}], alpha = {}\n\n{}",
            md_table(&headers, &sub_rows),
            rec.braiding.tau.symbolic(),
            rec.braiding.q.iter().map(|v| v.symbolic()).collect::<Vec<_>>().join(", "),
            rec.braiding.alpha.symbolic(),
            report_lines(&report)
        ));
        jsonv["integral"] = json!({
            "premodular": sub,
            "braiding": braiding_json(&rec.braiding),
            "checks_passed": report.passed(),
        });
        if !report.passed() {
            return Err(CliError::Verification(md));
        }
    }
    Ok(emit(format, md, jsonv, None))
}

fn pairs_str(pairs: &[(u64, u64)]) -> String {
    pairs.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ")
}

fn classify(format: Format) -> Result<String, CliError> {
    let c = products::classify_ising_products()?;
    let headers = ["xi", "pairs", "product classes", "integral classes"];
    let rows: Vec<Vec<String>> = c
        .rows
        .iter()
        .map(|r| {
            vec![
                r.xi.symbolic(),
                pairs_str(&r.pairs),
                pairs_str(&r.product_classes),
                pairs_str(&r.integral_classes),
            ]
        })
        .collect();
    let mut md = format!("## Ising pair classification\n\n{}", md_table(&headers, &rows));
    md.push_str(&format!(
        "\ntotal product classes: {}\ntotal integral classes: {}\n\n{}",
        c.product_class_count,
        c.integral_class_count,
        report_lines(&c.checks)
    ));
    for note in &c.notes {
        md.push_str(&format!("note: {note}\n"));
    }
    let jsonv = json!({
        "rows": c.rows,
        "product_class_count": c.product_class_count,
        "integral_class_count": c.integral_class_count,
        "checks_passed": c.checks.passed(),
        "notes": c.notes,
    });
    let csv = csv_table(&headers, &rows);
    if !c.checks.passed() {
        return Err(CliError::Verification(md));
    }
    Ok(emit(format, md, jsonv, Some(csv)))
}

fn cover_chi20(format: Format, alpha: &str, sort: SortOrder) -> Result<String, CliError> {
    let base = match alpha {
        "i" => tambara::chi20_nonsymmetric_rows().remove(2),
        "-i" => tambara::chi20_nonsymmetric_rows().remove(3),
        other => {
            return Err(CliError::Usage(format!("--alpha must be i or -i, got `{other}`")));
        }
    };
    let mut cands = covers::chi20_cover_candidates(&base.data)?;
    if sort == SortOrder::Computed {
        // Enumeration order: per-component twist choice as a binary key, the
        // block-heading pair first.
        let u = cands[0].component_twists[0].clone();
        cands.sort_by_key(|c| {
            c.component_twists
                .iter()
                .fold(0usize, |acc, t| (acc << 1) | usize::from(*t != u))
        });
    }
    let theta_x = base.data.theta_x();
    let mut md = format!(
        "## minimal cover candidates over {} (alpha = {}, theta_x = {})\n\n",
        base.label,
        base.data.alpha.symbolic(),
        theta_x.symbolic()
    );
    let headers = [
        "#", "theta_y1", "theta_y1'", "theta_y2", "theta_y2'", "theta_y3", "theta_y3'", "eps1",
        "eps2", "eps3",
    ];
    let rows: Vec<Vec<String>> = cands
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut row = vec![format!("{}", i + 1)];
            for t in &c.component_twists {
                row.push(t.symbolic());
                row.push(format!("-{}", t.symbolic()));
            }
            for e in &c.epsilons {
                row.push(e.to_string());
            }
            row
        })
        .collect();
    md.push_str(&md_table(&headers, &rows));
    let mut all_pass = true;
    for (i, c) in cands.iter().enumerate() {
        let ax = c.premodular.check_modular_axioms();
        all_pass &= ax.all_passed();
        md.push_str(&format!(
            "\n### candidate {} (eps = {:?}; unitary: {}, Verlinde: {})\n\n{}",
            i + 1,
            c.epsilons,
            if ax.unitary.passed { "pass" } else { "FAIL" },
            if ax.verlinde_integral.passed { "pass" } else { "FAIL" },
            s_matrix_block(&c.premodular)
        ));
    }
    let jsonv = json!(cands
        .iter()
        .map(|c| {
            json!({
                "epsilons": c.epsilons,
                "component_twists": c.component_twists,
                "theta_x": c.theta_x,
                "premodular": c.premodular,
            })
        })
        .collect::<Vec<_>>());
    let csv = csv_table(&headers, &rows);
    if !all_pass || cands.len() != 8 {
        return Err(CliError::Verification(md));
    }
    Ok(emit(format, md, jsonv, Some(csv)))
}

#[derive(Deserialize)]
struct BraidingSpec {
    n: usize,
    k: u8,
    tau_sign: i64,
    q: Vec<serde_json::Value>,
    alpha_sign: i64,
}

fn cover_chi_n1(format: Format, n: usize, spec: &PathBuf) -> Result<String, CliError> {
    let text = std::fs::read_to_string(spec)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", spec.display())))?;
    let raw: BraidingSpec = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad braiding spec: {e}")))?;
    if raw.n != n {
        return Err(CliError::Usage(format!("--n {} disagrees with spec n = {}", n, raw.n)));
    }
    if raw.k != 1 {
        return Err(CliError::Usage("cover chi-n1 requires k = 1".into()));
    }
    let q: Vec<Cyc> = raw
        .q
        .iter()
        .map(|v| match v {
            serde_json::Value::String(s) => Cyc::parse(s).map_err(|e| CliError::Usage(e.to_string())),
            other => serde_json::from_value(other.clone())
                .map_err(|e| CliError::Usage(format!("bad q entry: {e}"))),
        })
        .collect::<Result<_, _>>()?;
    let b = tambara::make_braiding(raw.n, raw.k, raw.tau_sign, &q, raw.alpha_sign)?;
    let cover = products::build_cover_chi_n1(&b)?;
    let md = format!(
        "## Ising cover of the chi_{n}^1 braiding (tau = {}, q = [{}], alpha = {})\n\nfactors: {}\n\n{}",
        b.tau.symbolic(),
        b.q.iter().map(|v| v.symbolic()).collect::<Vec<_>>().join(", "),
        b.alpha.symbolic(),
        cover.indices.iter().map(|j| format!("I{j}")).collect::<Vec<_>>().join(" x "),
        report_lines(&cover.report)
    );
    let jsonv = json!({
        "braiding": braiding_json(&b),
        "factors": cover.indices,
        "checks_passed": cover.report.passed(),
    });
    if !cover.report.passed() {
        return Err(CliError::Verification(md));
    }
    Ok(emit(format, md, jsonv, None))
}

fn cover_obstruct(format: Format, n: u64) -> Result<String, CliError> {
    let report = covers::obstruction_report(n)?;
    let md = report.render_md();
    let jsonv = serde_json::to_value(&report).expect("serializable");
    if !report.passed() {
        return Err(CliError::Verification(md));
    }
    Ok(emit(format, md, jsonv, None))
}

fn extraspecial_cmd(format: Format, p: u64, n: u64) -> Result<String, CliError> {
    let ring = extraspecial::extraspecial_ring(p, n)?;
    let validation = ring.validate();
    let grading = ring.universal_grading()?;
    let section6 = extraspecial::section6_dimension_checks(p, n)?;
    let recognized = extraspecial::is_extraspecial_charring(&ring);
    let md = format!(
        "## extraspecial character ring p = {p}, n = {n}\n\nrank {}, FPdim {}, grading group {}\nring axioms: {}\nrecognizer: {:?}\n\n{}",
        ring.rank(),
        ring.global_fpdim().symbolic(),
        grading.group.name(),
        if validation.all_passed() { "pass" } else { "FAIL" },
        recognized,
        section6.render_md()
    );
    let jsonv = json!({
        "ring": ring,
        "validation": validation,
        "grading_group": grading.group.factors,
        "recognized": recognized,
        "section6_passed": section6.passed(),
    });
    if !validation.all_passed() || !section6.passed() {
        return Err(CliError::Verification(md));
    }
    Ok(emit(format, md, jsonv, None))
}

fn double_cmd(format: Format, group: &str) -> Result<String, CliError> {
    let g = extraspecial::catalog_group(group).map_err(|e| CliError::Usage(e.to_string()))?;
    let prem = extraspecial::double_untwisted(&g)?;
    let gauss = prem.gauss_central_charge();
    let headers = ["simple", "d", "theta"];
    let rows: Vec<Vec<String>> = (0..prem.rank())
        .map(|x| {
            vec![
                prem.ring().label(x).to_string(),
                prem.ring().fpdim(x).symbolic(),
                prem.theta(x).symbolic(),
            ]
        })
        .collect();
    let md = format!(
        "## untwisted double of {}\n\nrank {}, dim {}, conductor {}, xi = {}, nondegenerate: {}\n\n{}",
        g.name,
        prem.rank(),
        prem.dim().symbolic(),
        prem.conductor(),
        gauss.xi.as_ref().map(|x| x.symbolic()).unwrap_or_else(|| "undefined".into()),
        prem.is_nondegenerate(),
        md_table(&headers, &rows)
    );
    let jsonv = json!({
        "group": g.name,
        "premodular": prem,
        "xi": gauss.xi,
    });
    let csv = csv_table(&headers, &rows);
    Ok(emit(format, md, jsonv, Some(csv)))
}

// ---------------------------------------------------------------- verify all

struct SuiteResult {
    name: &'static str,
    outcome: Result<String, String>,
}

fn verify_all(format: Format, seed: u64, workers: usize) -> Result<String, CliError> {
    type Suite = (&'static str, Box<dyn Fn() -> Result<String, String> + Send + Sync>);
    let suites: Vec<Suite> = vec![
        ("cyclotomic-field-axioms", Box::new(move || suite_cyclo(seed))),
        ("ising-reference-rows", Box::new(suite_ising)),
        ("ty-e2-classification", Box::new(suite_ty_classes)),
        ("ty-center-cross-validation", Box::new(suite_ty_centers)),
        ("ising-product-classification", Box::new(suite_classify)),
        ("ising-factorization", Box::new(move || suite_factorization(seed))),
        ("cover-candidates", Box::new(suite_covers)),
        ("cover-candidate-distinctness", Box::new(suite_cover_distinctness)),
        ("cover-obstructions", Box::new(suite_obstructions)),
        ("extraspecial-rings", Box::new(suite_extraspecial)),
        ("group-doubles", Box::new(suite_doubles)),
        ("dimension-identity", Box::new(suite_eq1)),
        ("isomorphism-equivalence-laws", Box::new(suite_iso_laws)),
    ];
    let results: Vec<SuiteResult> = if workers <= 1 {
        suites.iter().map(|(name, f)| SuiteResult { name, outcome: f() }).collect()
    } else {
        let idx = std::sync::atomic::AtomicUsize::new(0);
        let slots: Vec<std::sync::Mutex<Option<SuiteResult>>> =
            (0..suites.len()).map(|_| std::sync::Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..workers.min(suites.len()) {
                scope.spawn(|| loop {
                    let i = idx.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if i >= suites.len() {
                        break;
                    }
                    let (name, f) = &suites[i];
                    *slots[i].lock().unwrap() = Some(SuiteResult { name, outcome: f() });
                });
            }
        });
        slots.into_iter().map(|s| s.into_inner().unwrap().unwrap()).collect()
    };
    let mut md = String::from("## verification corpus\n\n");
    let mut failed = false;
    let mut jsonv = Vec::new();
    for r in &results {
        match &r.outcome {
            Ok(detail) => {
                md.push_str(&format!("pass  {}: {detail}\n", r.name));
                jsonv.push(json!({"suite": r.name, "passed": true, "detail": detail}));
            }
            Err(msg) => {
                failed = true;
                md.push_str(&format!("FAIL  {}: {msg}\n", r.name));
                jsonv.push(json!({"suite": r.name, "passed": false, "detail": msg}));
            }
        }
    }
    md.push_str(&format!(
        "\n{} of {} suites passed\n",
        results.iter().filter(|r| r.outcome.is_ok()).count(),
        results.len()
    ));
    let rendered = emit(format, md, json!(jsonv), None);
    if failed {
        Err(CliError::Verification(rendered))
    } else {
        Ok(rendered)
    }
}

fn suite_cyclo(seed: u64) -> Result<String, String> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let samples = 1000;
    for i in 0..samples {
        let a = random_cyc(&mut rng);
        let b = random_cyc(&mut rng);
        let c = random_cyc(&mut rng);
        if a.add(&b).add(&c) != a.add(&b.add(&c)) {
            return Err(format!("additive associativity failed at sample {i}"));
        }
        if a.mul(&b) != b.mul(&a) {
            return Err(format!("commutativity failed at sample {i}"));
        }
        if a.mul(&b.add(&c)) != a.mul(&b).add(&a.mul(&c)) {
            return Err(format!("distributivity failed at sample {i}"));
        }
        if a.mul(&b).conj() != a.conj().mul(&b.conj()) {
            return Err(format!("conjugation homomorphism failed at sample {i}"));
        }
        if a.conj().conj() != a {
            return Err(format!("conjugation involution failed at sample {i}"));
        }
        if !a.is_zero() {
            let inv = a.inverse().map_err(|e| e.to_string())?;
            if a.mul(&inv) != Cyc::one() {
                return Err(format!("inverse failed at sample {i}"));
            }
        }
        let (re1, im1) = a.mul(&b).approx();
        let (ra, ia) = a.approx();
        let (rb, ib) = b.approx();
        let (re2, im2) = (ra * rb - ia * ib, ra * ib + ia * rb);
        if (re1 - re2).abs() > 1e-9 || (im1 - im2).abs() > 1e-9 {
            return Err(format!("approx multiplicativity failed at sample {i}"));
        }
    }
    Ok(format!("field axioms on {samples} random samples"))
}

fn suite_ising() -> Result<String, String> {
    let cat = tambara::ising_catalog();
    let expect: [(u64, i64, &str); 8] = [
        (1, 1, "i"),
        (3, -1, "-i"),
        (5, -1, "i"),
        (7, 1, "-i"),
        (9, 1, "i"),
        (11, -1, "-i"),
        (13, -1, "i"),
        (15, 1, "-i"),
    ];
    if cat.len() != 8 {
        return Err(format!("expected 8 entries, got {}", cat.len()));
    }
    for (e, (j, ts, qs)) in cat.iter().zip(expect.iter()) {
        let q = Cyc::parse(qs).unwrap();
        if e.j != *j || e.data.tau_sign() != *ts || e.data.q[1] != q {
            return Err(format!("row I{} disagrees with the reference table", e.j));
        }
        if e.data.alpha != fuscat::cyclo::zeta(16, *j as i64) {
            return Err(format!("alpha of I{} is not zeta16^{}", e.j, j));
        }
    }
    Ok("8 rows with exact (tau, q, alpha)".into())
}

fn suite_ty_classes() -> Result<String, String> {
    let c11 = tambara::enumerate_braiding_classes(1, 1).map_err(|e| e.to_string())?;
    if c11.len() != 8 {
        return Err(format!("chi_1^1: {} classes", c11.len()));
    }
    let c20 = tambara::enumerate_braiding_classes(2, 0).map_err(|e| e.to_string())?;
    let sym = c20.iter().filter(|c| c.symmetric).count();
    if c20.len() != 8 || sym != 4 {
        return Err(format!("chi_2^0: {} classes, {sym} symmetric", c20.len()));
    }
    let c21 = tambara::enumerate_braiding_classes(2, 1).map_err(|e| e.to_string())?;
    if c21.len() != 12 {
        return Err(format!("chi_2^1: {} classes", c21.len()));
    }
    for rows in [tambara::chi20_symmetric_rows(), tambara::chi20_nonsymmetric_rows()] {
        for r in rows {
            let hits = c20
                .iter()
                .filter(|c| tambara::braiding_equivalent(&c.representative, &r.data).is_some())
                .count();
            if hits != 1 {
                return Err(format!("reference row {} matches {hits} classes", r.label));
            }
        }
    }
    for r in tambara::chi21_rows() {
        let hits = c21
            .iter()
            .filter(|c| tambara::braiding_equivalent(&c.representative, &r.data).is_some())
            .count();
        if hits != 1 {
            return Err(format!("reference row {} matches {hits} classes", r.label));
        }
    }
    Ok("8 + (4+4) + 12 classes, reference rows matched 1-1".into())
}

fn suite_ty_centers() -> Result<String, String> {
    let mut checked = 0;
    for (n, k) in [(1usize, 1u8), (2, 0), (2, 1), (3, 1)] {
        for b in tambara::enumerate_braidings(n, k).map_err(|e| e.to_string())? {
            let direct = b.symmetric_center();
            let muger = b.to_premodular().symmetric_center();
            if direct != muger {
                return Err(format!("center mismatch for a chi_{n}^{k} braiding"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} braidings, direct center = Muger center"))
}

fn suite_classify() -> Result<String, String> {
    let c = products::classify_ising_products().map_err(|e| e.to_string())?;
    if !c.checks.passed() {
        return Err("internal checks failed".into());
    }
    if c.product_class_count != 20 || c.integral_class_count != 12 {
        return Err(format!(
            "{} product and {} integral classes",
            c.product_class_count, c.integral_class_count
        ));
    }
    let row0 = &c.rows[0];
    if row0.pairs != vec![(1, 15), (3, 13), (5, 11), (7, 9)]
        || row0.product_classes != vec![(1, 15), (3, 13)]
        || row0.integral_classes != vec![(1, 15)]
    {
        return Err("xi = 1 row content mismatch".into());
    }
    Ok("8 xi rows, 20 product classes, 12 integral classes".into())
}

fn suite_factorization(seed: u64) -> Result<String, String> {
    use rand::{Rng, SeedableRng};
    let odd: Vec<u64> = (0..8).map(|t| 2 * t + 1).collect();
    let mut count = 0;
    for (i, &j) in odd.iter().enumerate() {
        for &k in &odd[i..] {
            let (report, _) = products::verify_ising_factorization(&[j, k]).map_err(|e| e.to_string())?;
            if !report.passed() {
                return Err(format!("pair ({j},{k}) failed: {report}"));
            }
            count += 1;
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x7269706c65);
    for _ in 0..20 {
        let triple: Vec<u64> = (0..3).map(|_| odd[rng.random_range(0..8)]).collect();
        let (report, _) = products::verify_ising_factorization(&triple).map_err(|e| e.to_string())?;
        if !report.passed() {
            return Err(format!("triple {triple:?} failed: {report}"));
        }
        count += 1;
    }
    Ok(format!("{count} factorizations verified (36 pairs + 20 random triples)"))
}

fn suite_covers() -> Result<String, String> {
    let mut total = 0;
    for idx in [2usize, 3] {
        let base = tambara::chi20_nonsymmetric_rows().remove(idx);
        let cands = covers::chi20_cover_candidates(&base.data).map_err(|e| e.to_string())?;
        if cands.len() != 8 {
            return Err(format!("{}: {} candidates", base.label, cands.len()));
        }
        for c in &cands {
            if !c.premodular.check_modular_axioms().all_passed() {
                return Err(format!("{}: candidate fails the modular axioms", base.label));
            }
            let gauss = c.premodular.gauss_central_charge();
            let expect = Cyc::from_int(4).add(&Cyc::from_int(4).mul(&c.theta_x));
            if gauss.tau_plus != expect {
                return Err("Gauss sum cancellation failed".into());
            }
            let report = covers::lagrangian_match(c).map_err(|e| e.to_string())?;
            if !report.passed() {
                return Err(format!("Lagrangian match failed: {report}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} candidates pass axioms, Gauss cancellation and the Lagrangian test"))
}

fn suite_cover_distinctness() -> Result<String, String> {
    let mut all = Vec::new();
    for idx in [2usize, 3] {
        let base = tambara::chi20_nonsymmetric_rows().remove(idx);
        all.extend(covers::chi20_cover_candidates(&base.data).map_err(|e| e.to_string())?);
    }
    for i in 0..all.len() {
        for j in 0..i {
            if covers::cover_equivalent_rel_base(&all[i], &all[j]).is_some() {
                return Err(format!("candidates {i} and {j} coincide as extensions"));
            }
        }
    }
    // The stated invariant asks for pairwise distinctness under unrestricted
    // data isomorphism as well; the computed partition has 8 classes, so this
    // half is reported as a failure rather than weakened.
    let mut classes: Vec<usize> = Vec::new();
    let mut class_of = vec![usize::MAX; all.len()];
    for i in 0..all.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        class_of[i] = classes.len();
        for j in i + 1..all.len() {
            if class_of[j] == usize::MAX
                && all[i].premodular.data_isomorphic(&all[j].premodular).is_some()
            {
                class_of[j] = classes.len();
            }
        }
        classes.push(i);
    }
    if classes.len() != 16 {
        return Err(format!(
            "16 pairwise distinct as extensions of the identified base, but only {} classes under \
             unrestricted data isomorphism: permuting the three components together with the \
             matching Aut(E_2) action identifies equal epsilon-multisets",
            classes.len()
        ));
    }
    Ok("16 candidates pairwise distinct".into())
}

fn suite_obstructions() -> Result<String, String> {
    let r1 = covers::obstruction_report(1).map_err(|e| e.to_string())?;
    if !r1.passed() || r1.conclusion.as_deref() != Some("not obstructed; candidates exist") {
        return Err("n = 1 branch should report candidates".into());
    }
    for n in 2..=4 {
        let r = covers::obstruction_report(n).map_err(|e| e.to_string())?;
        if !r.passed() || r.conclusion.as_deref() != Some("obstructed (conductor axiom)") {
            return Err(format!("n = {n} obstruction trace failed"));
        }
    }
    Ok("n = 1 admits candidates; n = 2..4 obstructed via the conductor axiom".into())
}

fn suite_extraspecial() -> Result<String, String> {
    for (p, n) in [(2u64, 1u64), (2, 2), (3, 1), (3, 2), (5, 1), (5, 2)] {
        let ring = extraspecial::extraspecial_ring(p, n).map_err(|e| e.to_string())?;
        let v = ring.validate();
        if !v.all_passed() {
            return Err(format!("({p},{n}) ring axioms failed"));
        }
        if extraspecial::is_extraspecial_charring(&ring) != Some((p, n)) {
            return Err(format!("({p},{n}) recognizer failed"));
        }
        let report = extraspecial::section6_dimension_checks(p, n).map_err(|e| e.to_string())?;
        if !report.passed() {
            return Err(format!("({p},{n}) dimension checks failed"));
        }
    }
    Ok("rings, recognizer and dimension checks for p in {2,3,5}, n <= 2".into())
}

fn suite_doubles() -> Result<String, String> {
    for name in extraspecial::CATALOG_NAMES {
        let g = extraspecial::catalog_group(name).map_err(|e| e.to_string())?;
        let d = extraspecial::double_untwisted(&g).map_err(|e| e.to_string())?;
        if !d.is_nondegenerate() {
            return Err(format!("double of {name} is degenerate"));
        }
        let gauss = d.gauss_central_charge();
        match gauss.xi {
            Some(xi) if xi.is_one() => {}
            other => return Err(format!("double of {name} has xi = {other:?}")),
        }
    }
    let report = extraspecial::example_subcategory_checks().map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(format!("subcategory checks failed: {report}"));
    }
    Ok("6 doubles modular with xi = 1; S3/A4 subcategory checks pass".into())
}

fn suite_eq1() -> Result<String, String> {
    let mut corpus: Vec<Premodular> = Vec::new();
    for j in [1u64, 3, 7] {
        corpus.push(tambara::ising(j).map_err(|e| e.to_string())?.to_premodular());
    }
    for pair in [[1u64, 5], [1, 7]] {
        corpus.push(products::ising_product(&pair).map_err(|e| e.to_string())?.premodular);
    }
    let base = tambara::chi20_nonsymmetric_rows().remove(2);
    corpus.push(
        covers::chi20_cover_candidates(&base.data).map_err(|e| e.to_string())?.remove(0).premodular,
    );
    corpus.push(
        extraspecial::double_untwisted(&extraspecial::group_s3()).map_err(|e| e.to_string())?,
    );
    let mut pairs = 0;
    for p in &corpus {
        if !p.is_nondegenerate() {
            return Err("corpus member unexpectedly degenerate".into());
        }
        let mut subs = vec![
            p.ring().pointed_subring(),
            p.ring().adjoint_subring(),
            p.ring().rational_subring(),
        ];
        for x in 0..p.rank() {
            subs.push(p.ring().subring_generated(&[x]));
        }
        for sub in subs {
            if !p.dim_identity_holds(&sub) {
                return Err("dimension identity failed".into());
            }
            pairs += 1;
        }
    }
    Ok(format!("identity holds for {pairs} (subring, centralizer) pairs"))
}

fn suite_iso_laws() -> Result<String, String> {
    let a = products::ising_product(&[1, 5]).map_err(|e| e.to_string())?.premodular;
    let b = products::ising_product(&[9, 13]).map_err(|e| e.to_string())?.premodular;
    let c = products::ising_product(&[5, 1]).map_err(|e| e.to_string())?.premodular;
    let id = a.data_isomorphic(&a).ok_or("not reflexive")?;
    if id.iter().enumerate().any(|(i, &v)| i != v) {
        // Any self-witness is fine, but the identity must be found first by
        // the candidate ordering; report if not.
        return Err("self-isomorphism is not the identity".into());
    }
    let ab = a.data_isomorphic(&b).ok_or("shifted pair should be isomorphic")?;
    let ba = b.data_isomorphic(&a).ok_or("not symmetric")?;
    for x in 0..a.rank() {
        if b.theta(x) != a.theta(ba[x]) {
            return Err("backward witness does not match twists".into());
        }
    }
    let bc = b.data_isomorphic(&c).ok_or("reordered pair should be isomorphic")?;
    // Composition of witnesses is a witness.
    let comp: Vec<usize> = (0..a.rank()).map(|x| bc[ab[x]]).collect();
    for x in 0..a.rank() {
        for y in 0..a.rank() {
            if a.s(x, y) != c.s(comp[x], comp[y]) {
                return Err("witness composition is not a witness".into());
            }
        }
    }
    let neg = products::ising_product(&[1, 3]).map_err(|e| e.to_string())?.premodular;
    if a.data_isomorphic(&neg).is_some() {
        return Err("distinct xi classes cannot be isomorphic".into());
    }
    Ok("reflexive, symmetric, transitive with composable witnesses".into())
}
