//! Command-line front end: matroid inspection, positroid-order checks and
//! search, Grassmann necklaces, bonding, excluded-minor generation and
//! verification, certificate replay, and randomized self-tests.
//!
//! Exit codes: 0 verdict-true (or plain success), 1 verdict-false,
//! 2 input error, 3 search budget exhausted.

mod docs;
mod replay;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use docs::{MatroidDocument, ReportDocument, REPORT_FORMAT};
use positroids::bonding::{bond_theorem_check_1, bond_theorem_check_2, bonding};
use positroids::check::{
    grassmann_necklace, order_check, order_checks, run_all_order_checks, run_order_check,
};
use positroids::error::Error;
use positroids::exmin::{family_names, generate_family, sweep_parameters, Verifier};
use positroids::matroid::Matroid;
use positroids::order::LinearOrder;
use positroids::report::{Certificate, Verdict};
use positroids::search::{find_positroid_order, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(
    name = "positroids",
    about = "Matroid computations: positroid recognition, bonding, excluded minors",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print size, rank, bases, components, cyclic flats, clonal classes.
    Info { file: String },
    /// Test whether an order is a positroid order for the matroid.
    CheckOrder {
        file: String,
        /// Comma-separated labels, or the name of an order embedded in the document.
        #[arg(long)]
        order: String,
        /// One of: necklace, sorting, cip, dual-cip, rank2, arw2, flags.
        #[arg(long, default_value = "cip")]
        method: String,
        /// Run every applicable method and require agreement.
        #[arg(long)]
        all: bool,
    },
    /// Search for a positroid order.
    FindOrder {
        file: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print the Grassmann necklace of the matroid along an order.
    Necklace {
        file: String,
        #[arg(long)]
        order: String,
    },
    /// Bond two matroids along their shared elements.
    Bond {
        file_m: String,
        file_n: String,
        /// Write the bonded matroid document here instead of stdout only.
        #[arg(long, short)]
        output: Option<String>,
        /// Verify the clone-amalgam theorem's hypotheses and conclusion.
        #[arg(long)]
        check1: bool,
        /// Verify the split-clone theorem with this P (comma-separated labels).
        #[arg(long)]
        check2: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Verify excluded minors: a document, one family instance, or a sweep.
    Exmin {
        file: Option<String>,
        /// Family id (see --list-families).
        #[arg(long)]
        family: Option<String>,
        /// Comma-separated family parameters.
        #[arg(long)]
        params: Option<String>,
        /// Sweep the family over all valid parameter vectors with ground
        /// sets of at most this many elements, one report line each.
        #[arg(long)]
        sweep: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// List the known family identifiers and exit.
        #[arg(long)]
        list_families: bool,
    },
    /// Re-run the check recorded in a report and confirm the verdict.
    VerifyCertificate {
        report: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Randomized agreement batches over the order-test characterizations.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn verdict_exit(v: Verdict) -> ExitCode {
    match v {
        Verdict::True => ExitCode::SUCCESS,
        Verdict::False => ExitCode::from(1),
        Verdict::Undetermined => ExitCode::from(3),
    }
}

fn read_document(path: &str) -> Result<MatroidDocument, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read '{path}': {e}")))?;
    MatroidDocument::parse(&text)
}

fn emit(report: &ReportDocument) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serializes")
    );
}

fn base_report(
    command: String,
    verdict: Verdict,
    certificate: Certificate,
    started: Instant,
) -> ReportDocument {
    ReportDocument {
        format: REPORT_FORMAT.to_string(),
        command,
        matroid: None,
        second_matroid: None,
        order: None,
        method: None,
        verdict: verdict.to_string(),
        certificate,
        details: None,
        timing_ms: started.elapsed().as_millis() as u64,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Info { file } => cmd_info(&file),
        Command::CheckOrder {
            file,
            order,
            method,
            all,
        } => cmd_check_order(&file, &order, &method, all),
        Command::FindOrder { file, budget } => cmd_find_order(&file, budget),
        Command::Necklace { file, order } => cmd_necklace(&file, &order),
        Command::Bond {
            file_m,
            file_n,
            output,
            check1,
            check2,
            budget,
        } => cmd_bond(
            &file_m,
            &file_n,
            output.as_deref(),
            check1,
            check2.as_deref(),
            budget,
        ),
        Command::Exmin {
            file,
            family,
            params,
            sweep,
            budget,
            list_families,
        } => cmd_exmin(
            file.as_deref(),
            family.as_deref(),
            params.as_deref(),
            sweep,
            budget,
            list_families,
        ),
        Command::VerifyCertificate { report, budget } => cmd_verify_certificate(&report, budget),
        Command::Selftest { seed, count } => cmd_selftest(seed, count),
    }
}

fn cmd_info(file: &str) -> Result<ExitCode, Error> {
    let started = Instant::now();
    let doc = read_document(file)?;
    let m = doc.build()?;
    let details = serde_json::json!({
        "elements": m.n(),
        "rank": m.rank(),
        "bases": m.bases().len(),
        "loops": m.label_list(m.loops()),
        "coloops": m.label_list(m.coloops()),
        "components": m.components().blocks().iter().map(|&b| m.label_list(b)).collect::<Vec<_>>(),
        "cyclic_flats": m
            .cyclic_flats()
            .iter()
            .map(|&(f, r)| serde_json::json!({"set": m.label_list(f), "rank": r}))
            .collect::<Vec<_>>(),
        "clonal_classes": m.clonal_classes().blocks().iter().map(|&b| m.label_list(b)).collect::<Vec<_>>(),
    });
    let mut report = base_report(
        format!("info {file}"),
        Verdict::True,
        Certificate::None,
        started,
    );
    report.matroid = Some(MatroidDocument::from_matroid(doc.name.clone(), &m));
    report.details = Some(details);
    emit(&report);
    Ok(ExitCode::SUCCESS)
}

fn parse_order(doc: &MatroidDocument, arg: &str) -> Result<LinearOrder, Error> {
    LinearOrder::new(doc.resolve_order(arg)?)
}

fn cmd_check_order(
    file: &str,
    order_arg: &str,
    method: &str,
    all: bool,
) -> Result<ExitCode, Error> {
    let started = Instant::now();
    let doc = read_document(file)?;
    let m = doc.build()?;
    let ord = parse_order(&doc, order_arg)?;
    let (rep, details, used) = if all || method == "all" {
        let (shared, ran) = run_all_order_checks(&m, &ord)?;
        let listing: Vec<serde_json::Value> = ran
            .iter()
            .map(|(name, r)| serde_json::json!({"method": name, "verdict": r.verdict.to_string()}))
            .collect();
        (
            shared,
            Some(serde_json::json!({ "methods": listing, "agreement": true })),
            "all".to_string(),
        )
    } else {
        let check = order_check(method).ok_or_else(|| {
            let names: Vec<&str> = order_checks().iter().map(|c| c.name()).collect();
            Error::Input(format!(
                "unknown method '{method}'; known: {}",
                names.join(", ")
            ))
        })?;
        (run_order_check(check, &m, &ord)?, None, method.to_string())
    };
    let mut report = base_report(
        format!("check-order {file} --order {order_arg} --method {used}"),
        rep.verdict,
        rep.certificate,
        started,
    );
    report.matroid = Some(MatroidDocument::from_matroid(doc.name.clone(), &m));
    report.order = Some(ord.seq().to_vec());
    report.method = Some(used);
    report.details = details;
    emit(&report);
    Ok(verdict_exit(rep.verdict))
}

fn cmd_find_order(file: &str, budget: u64) -> Result<ExitCode, Error> {
    let started = Instant::now();
    let doc = read_document(file)?;
    let m = doc.build()?;
    let res = find_positroid_order(&m, budget)?;
    let mut report = base_report(
        format!("find-order {file}"),
        res.report.verdict,
        res.report.certificate.clone(),
        started,
    );
    report.matroid = Some(MatroidDocument::from_matroid(doc.name.clone(), &m));
    report.order = res.order.as_ref().map(|o| o.seq().to_vec());
    emit(&report);
    Ok(verdict_exit(res.report.verdict))
}

fn cmd_necklace(file: &str, order_arg: &str) -> Result<ExitCode, Error> {
    let started = Instant::now();
    let doc = read_document(file)?;
    let m = doc.build()?;
    let ord = parse_order(&doc, order_arg)?;
    let neck = grassmann_necklace(&m, &ord)?;
    neck.validate_exchange(&ord)?;
    let mut report = base_report(
        format!("necklace {file} --order {order_arg}"),
        Verdict::True,
        Certificate::None,
        started,
    );
    report.matroid = Some(MatroidDocument::from_matroid(doc.name.clone(), &m));
    report.order = Some(ord.seq().to_vec());
    report.details = Some(serde_json::json!({ "entries": neck.entries() }));
    emit(&report);
    Ok(ExitCode::SUCCESS)
}

fn cmd_bond(
    file_m: &str,
    file_n: &str,
    output: Option<&str>,
    check1: bool,
    check2: Option<&str>,
    budget: u64,
) -> Result<ExitCode, Error> {
    let started = Instant::now();
    let doc_m = read_document(file_m)?;
    let doc_n = read_document(file_n)?;
    let m = doc_m.build()?;
    let n = doc_n.build()?;
    let inst = bonding(&m, &n)?;
    let bond_doc = MatroidDocument::from_matroid(Some("bonding".to_string()), &inst.bond);

    if let Some(path) = output {
        let mut f = std::fs::File::create(path)
            .map_err(|e| Error::Input(format!("cannot write '{path}': {e}")))?;
        writeln!(
            f,
            "{}",
            serde_json::to_string_pretty(&bond_doc).expect("document serializes")
        )
        .map_err(|e| Error::Input(format!("cannot write '{path}': {e}")))?;
    }

    let mut verdict = Verdict::True;
    let mut details = serde_json::json!({
        "shared": inst.shared,
        "bond": { "elements": inst.bond.n(), "rank": inst.bond.rank() },
    });
    if check1 {
        let rep = bond_theorem_check_1(&m, &n, budget)?;
        verdict = rep.verdict;
        details["check1"] = serde_json::to_value(&rep).expect("report serializes");
    }
    if let Some(p_arg) = check2 {
        let p_labels: Vec<&str> = p_arg.split(',').map(|s| s.trim()).collect();
        let rep = bond_theorem_check_2(&m, &n, &p_labels, budget)?;
        verdict = rep.verdict;
        details["check2"] = serde_json::to_value(&rep).expect("report serializes");
    }
    let mut report = base_report(
        format!("bond {file_m} {file_n}"),
        verdict,
        Certificate::None,
        started,
    );
    report.matroid = Some(bond_doc);
    report.details = Some(details);
    emit(&report);
    if check1 || check2.is_some() {
        Ok(verdict_exit(verdict))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn parse_params(arg: Option<&str>) -> Result<Vec<usize>, Error> {
    let Some(arg) = arg else {
        return Ok(Vec::new());
    };
    arg.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parameter(format!("'{s}' is not a non-negative integer")))
        })
        .collect()
}

fn exmin_json(m: &Matroid, rep: &positroids::exmin::ExminReport) -> serde_json::Value {
    serde_json::json!({
        "elements": m.n(),
        "rank": m.rank(),
        "verdict": rep.verdict.to_string(),
        "base": rep.base,
        "minors": rep.minors,
    })
}

fn cmd_exmin(
    file: Option<&str>,
    family: Option<&str>,
    params: Option<&str>,
    sweep: Option<usize>,
    budget: u64,
    list_families: bool,
) -> Result<ExitCode, Error> {
    let started = Instant::now();
    if list_families {
        for name in family_names() {
            println!("{name}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let mut verifier = Verifier::new(budget);

    if let Some(max_total) = sweep {
        let family = family.ok_or_else(|| Error::Input("--sweep needs --family".into()))?;
        let points = sweep_parameters(family, max_total)?;
        let mut all = Verdict::True;
        for p in points {
            let m = generate_family(family, &p)?;
            let rep = verifier.verify_excluded_minor(&m)?;
            match rep.verdict {
                Verdict::True => {}
                Verdict::False => all = Verdict::False,
                Verdict::Undetermined => {
                    if all == Verdict::True {
                        all = Verdict::Undetermined;
                    }
                }
            }
            let line = serde_json::json!({
                "family": family,
                "params": p,
                "elements": m.n(),
                "rank": m.rank(),
                "verdict": rep.verdict.to_string(),
            });
            println!("{line}");
        }
        let report = base_report(
            format!("exmin --family {family} --sweep {max_total}"),
            all,
            Certificate::None,
            started,
        );
        emit(&report);
        return Ok(verdict_exit(all));
    }

    let (m, label) = if let Some(family) = family {
        let p = parse_params(params)?;
        (
            generate_family(family, &p)?,
            format!("--family {family} --params {p:?}"),
        )
    } else if let Some(file) = file {
        let doc = read_document(file)?;
        (doc.build()?, file.to_string())
    } else {
        return Err(Error::Input(
            "exmin needs a document, or --family with --params".into(),
        ));
    };
    let rep = verifier.verify_excluded_minor(&m)?;
    let mut report = base_report(
        format!("exmin {label}"),
        rep.verdict,
        rep.base.certificate.clone(),
        started,
    );
    report.matroid = Some(MatroidDocument::from_matroid(None, &m));
    report.details = Some(exmin_json(&m, &rep));
    emit(&report);
    Ok(verdict_exit(rep.verdict))
}

fn cmd_verify_certificate(path: &str, budget: u64) -> Result<ExitCode, Error> {
    let started = Instant::now();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read '{path}': {e}")))?;
    let original = ReportDocument::parse(&text)?;
    let reproduced = replay::replay(&original, budget)?;
    let matches = reproduced.to_string() == original.verdict;
    let mut report = base_report(
        format!("verify-certificate {path}"),
        if matches {
            Verdict::True
        } else {
            Verdict::False
        },
        Certificate::None,
        started,
    );
    report.details = Some(serde_json::json!({
        "recorded": original.verdict,
        "replayed": reproduced.to_string(),
    }));
    emit(&report);
    Ok(if matches {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_selftest(seed: u64, count: usize) -> Result<ExitCode, Error> {
    use positroids::check::{
        is_positroid_order_cip, is_positroid_order_necklace, is_positroid_order_rank2,
        is_positroid_order_sorting,
    };
    use positroids::corpus::{random_loopless_matroid, random_order, Rng};

    let started = Instant::now();
    let mut rng = Rng::new(seed);
    let mut disagreements = 0usize;
    for i in 0..count {
        let m = random_loopless_matroid(&mut rng, 7);
        let ord = random_order(&mut rng, &m);
        let verdicts = [
            is_positroid_order_necklace(&m, &ord)?.verdict,
            is_positroid_order_sorting(&m, &ord)?.verdict,
            is_positroid_order_cip(&m, &ord)?.verdict,
            is_positroid_order_rank2(&m, &ord)?.verdict,
        ];
        if verdicts.iter().any(|&v| v != verdicts[0]) {
            disagreements += 1;
            eprintln!("disagreement at instance {i}: {verdicts:?}");
        }
    }
    let verdict = if disagreements == 0 {
        Verdict::True
    } else {
        Verdict::False
    };
    let mut report = base_report(
        format!("selftest --seed {seed} --count {count}"),
        verdict,
        Certificate::None,
        started,
    );
    report.details = Some(serde_json::json!({
        "instances": count,
        "disagreements": disagreements,
        "methods": ["necklace", "sorting", "cip", "rank2"],
    }));
    emit(&report);
    Ok(verdict_exit(verdict))
}
