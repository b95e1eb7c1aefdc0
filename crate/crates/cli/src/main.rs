//! `lexseg`: command-line front end for the lexsegment library.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lexseg::lemmas::run_all_lemmas;
use lexseg::lexsegment::{classify_with_budget, completeness, LexSegmentIdeal};
use lexseg::monomial::{Monomial, MonomialOrder};
use lexseg::quotients::{
    has_linear_quotients, power_generators, prescribed_order, search_linear_quotient_order, OrderedGenerators,
    ORDER_SEARCH_LIMIT,
};
use lexseg::sweep::{sweep, summarize, SweepOptions};
use lexseg::tableau::{standard_tableau_from_support, Support, Tableau};
use lexseg::toric::{check_groebner, check_l_exchange, check_sigma_exchange, koszul_certificate, rees_gb, ExchangeReport, ProductOrder, TOrder};
use lexseg::worked_examples::worked_examples;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "lexseg", version, about = "Lexsegment ideals: classification, tableaux, Rees bases, powers")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SegmentArgs {
    /// Number of variables; inferred from `--u` when omitted.
    #[arg(long)]
    n: Option<usize>,
    /// Degree; inferred from `--u` when omitted.
    #[arg(long)]
    d: Option<u32>,
    /// Exponent vector of the lex-larger end, e.g. 1,0,1,1.
    #[arg(long)]
    u: Monomial,
    /// Exponent vector of the lex-smaller end.
    #[arg(long)]
    v: Monomial,
}

impl SegmentArgs {
    fn ideal(&self) -> Result<LexSegmentIdeal, Failure> {
        for (name, m) in [("u", &self.u), ("v", &self.v)] {
            if let Some(n) = self.n {
                if m.n() != n {
                    return Err(Failure::usage(format!("--{name} has {} entries, expected --n {n}", m.n())));
                }
            }
            if let Some(d) = self.d {
                if m.degree() != d {
                    return Err(Failure::usage(format!("--{name} has degree {}, expected --d {d}", m.degree())));
                }
            }
        }
        Ok(LexSegmentIdeal::new(self.u.clone(), self.v.clone())?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Sigma {
    #[value(name = "revlex-dec")]
    RevlexDec,
    Lex,
}

impl From<Sigma> for MonomialOrder {
    fn from(s: Sigma) -> Self {
        match s {
            Sigma::RevlexDec => MonomialOrder::RevLexDecreasingSigma,
            Sigma::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenOrder {
    Lex,
    #[value(name = "revlex-dec")]
    RevlexDec,
    Succ,
}

impl From<GenOrder> for MonomialOrder {
    fn from(o: GenOrder) -> Self {
        match o {
            GenOrder::Lex => MonomialOrder::Lex,
            GenOrder::RevlexDec => MonomialOrder::RevLexDecreasingSigma,
            GenOrder::Succ => MonomialOrder::Succ,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TOrderArg {
    Lex,
    Degrevlex,
    #[value(name = "lex-reversed")]
    LexReversed,
}

impl From<TOrderArg> for TOrder {
    fn from(t: TOrderArg) -> Self {
        match t {
            TOrderArg::Lex => TOrder::Lex,
            TOrderArg::Degrevlex => TOrder::DegRevLex,
            TOrderArg::LexReversed => TOrder::LexReversed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    L,
    Sigma,
}

#[derive(Subcommand)]
enum Command {
    /// Classify L(u, v) by linear resolution.
    Classify {
        #[command(flatten)]
        seg: SegmentArgs,
        /// Number of shadows checked for completeness (default n*d).
        #[arg(long)]
        shadow_iters: Option<usize>,
    },
    /// Build the standard tableau of a support, or check a given tableau.
    Tableau {
        #[arg(long)]
        n: usize,
        /// Row length.
        #[arg(long)]
        d: usize,
        /// Entries of the support, e.g. "1,1,2,3".
        #[arg(long, conflicts_with = "check", required_unless_present = "check")]
        support: Option<String>,
        /// Rows separated by ';', e.g. "1,3;2,2".
        #[arg(long)]
        check: Option<String>,
    },
    /// Certify linear quotients of a power of L(u, v).
    PowerQuotients {
        #[command(flatten)]
        seg: SegmentArgs,
        /// The power N.
        #[arg(long = "N", default_value_t = 1)]
        power: usize,
        /// Generator order; defaults to the order prescribed by the classification.
        #[arg(long, value_enum)]
        order: Option<GenOrder>,
    },
    /// Groebner basis of the Rees algebra of L(u, v).
    ReesGb {
        #[command(flatten)]
        seg: SegmentArgs,
        #[arg(long, value_enum, default_value = "revlex-dec")]
        sigma: Sigma,
        /// Check Buchberger's criterion and quadratic degrees.
        #[arg(long)]
        verify: bool,
        /// Check the sigma-exchange property up to this T-degree first.
        #[arg(long)]
        exchange_bound: Option<usize>,
    },
    /// Exhaustive exchange-property check on L(u, v).
    Exchange {
        #[command(flatten)]
        seg: SegmentArgs,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Largest T-degree checked.
        #[arg(long, default_value_t = 2)]
        bound: usize,
        #[arg(long, value_enum, default_value = "revlex-dec")]
        sigma: Sigma,
        /// Order deciding which T-monomials are standard.
        #[arg(long, value_enum, default_value = "lex")]
        t_order: TOrderArg,
    },
    /// Sweep all L(u, v) with x1 | u for small n and d.
    Sweep {
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        d_max: u32,
        #[arg(long = "N-max", default_value_t = 2)]
        power_max: usize,
        /// Skip Rees-basis verification.
        #[arg(long)]
        no_rees: bool,
        /// Skip exchange-property checks.
        #[arg(long)]
        no_exchange: bool,
    },
    /// Reproduce the worked examples against embedded golden values.
    PaperExamples,
    /// Randomized suites for the standard-product inequalities.
    Lemmas {
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Echo the pretty form of an exponent vector.
    Pretty { monomial: Monomial },
}

enum Failure {
    Refuted(String),
    Usage(String),
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }
}

impl From<lexseg::Error> for Failure {
    fn from(e: lexseg::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    json: bool,
}

impl Output {
    fn emit(&self, value: &Value, text: impl FnOnce() -> String) {
        let mut out = std::io::stdout().lock();
        let _ = if self.json {
            writeln!(out, "{}", serde_json::to_string(value).expect("JSON serializes"))
        } else {
            writeln!(out, "{}", text())
        };
    }
}

fn verdict_of(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Refuted(what.to_string()))
    }
}

fn parse_entries(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::usage(format!("bad entry {t:?} in {s:?}"))))
        .collect()
}

fn tableau_text(t: &Tableau) -> String {
    t.rows()
        .iter()
        .zip(t.row_monomials())
        .map(|(row, m)| {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            format!("{}    {}", cells.join(" "), m.pretty())
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn report_json(report: &ExchangeReport) -> Value {
    serde_json::to_value(report).expect("report serializes")
}

fn report_text(report: &ExchangeReport) -> String {
    let mut s = format!(
        "{}: {} pairs checked up to T-degree {}, {} violations",
        if report.satisfied { "satisfied" } else { "fails" },
        report.pairs_checked,
        report.bound,
        report.violations
    );
    if let Some(ce) = &report.counterexample {
        let prod = |fs: &[Monomial]| fs.iter().map(|f| format!("T[{}]", f.pretty())).collect::<Vec<_>>().join("*");
        s += &format!(
            "\ncounterexample at T-degree {}: u = {}, v = {}",
            ce.degree,
            prod(&ce.u_factors),
            prod(&ce.v_factors)
        );
        for a in &ce.attempts {
            s += &format!(
                "\n  delta={} q={} j={}: {} not in B",
                a.delta,
                a.q,
                a.j,
                a.candidate.pretty()
            );
        }
    }
    s
}

fn run(cli: Cli) -> Result<(), Failure> {
    let out = Output { json: cli.json };
    match cli.command {
        Command::Classify { seg, shadow_iters } => {
            let ideal = seg.ideal()?;
            let budget = shadow_iters.unwrap_or_else(|| ideal.default_shadow_iterations()).max(1);
            let class = classify_with_budget(&ideal, budget)?;
            let comp = completeness(ideal.generators(), budget)?;
            out.emit(
                &json!({
                    "u": ideal.u().to_string(),
                    "v": ideal.v().to_string(),
                    "generators": ideal.len(),
                    "verdict": class.verdict,
                    "label": class.verdict.label(),
                    "linear_resolution": class.verdict.is_positive(),
                    "completely": class.completely,
                    "shadow_iterations": class.shadow_iterations,
                    "failed_shadow": comp.failed_at,
                }),
                || {
                    format!(
                        "L({}, {}): {} generators, {} lexsegment up to {} shadows\n{}",
                        ideal.u().pretty(),
                        ideal.v().pretty(),
                        ideal.len(),
                        if class.completely { "completely" } else { "not completely" },
                        class.shadow_iterations,
                        class.verdict
                    )
                },
            );
            Ok(())
        }
        Command::Tableau { n, d, support, check } => {
            if let Some(rows) = check {
                let rows: Vec<Vec<usize>> = rows.split(';').map(parse_entries).collect::<Result<_, _>>()?;
                if rows.iter().any(|r| r.len() != d) {
                    return Err(Failure::usage(format!("every row must have {d} entries")));
                }
                let tableau = Tableau::new(n, rows)?;
                let standard = tableau.is_standard();
                out.emit(
                    &json!({"rows": tableau.rows(), "standard": standard}),
                    || format!("{}\n{}", tableau_text(&tableau), if standard { "standard" } else { "not standard" }),
                );
                return verdict_of(standard, "tableau is not standard");
            }
            let entries = parse_entries(support.as_deref().expect("clap requires one of the two"))?;
            if d == 0 || entries.len() % d != 0 {
                return Err(Failure::usage(format!("support of size {} does not split into rows of {d}", entries.len())));
            }
            let support = Support::from_entries(n, &entries)?;
            let tableau = standard_tableau_from_support(&support, entries.len() / d, d)?;
            out.emit(
                &json!({
                    "rows": tableau.rows(),
                    "monomials": tableau.row_monomials().iter().map(Monomial::to_string).collect::<Vec<_>>(),
                }),
                || tableau_text(&tableau),
            );
            Ok(())
        }
        Command::PowerQuotients { seg, power, order } => {
            let ideal = seg.ideal()?;
            if power == 0 {
                return Err(Failure::usage("--N must be at least 1"));
            }
            let verdict = classify_with_budget(&ideal, ideal.default_shadow_iterations().max(1))?.verdict;
            let order = match order.map(MonomialOrder::from).or_else(|| prescribed_order(&verdict)) {
                Some(o) => o,
                None => {
                    let search = search_linear_quotient_order(ideal.generators(), ORDER_SEARCH_LIMIT)?;
                    return Err(Failure::usage(format!(
                        "{verdict}: no order is prescribed; pass --order (exhaustive order search: {})",
                        serde_json::to_string(&search).expect("serializes")
                    )));
                }
            };
            let og = OrderedGenerators::sorted(power_generators(ideal.generators(), power)?, order)?;
            let cert = has_linear_quotients(&og);
            out.emit(
                &json!({
                    "verdict": verdict,
                    "power": power,
                    "order": order,
                    "generators": og.gens().iter().map(Monomial::to_string).collect::<Vec<_>>(),
                    "certificate": cert,
                }),
                || {
                    let mut s = format!(
                        "{verdict}; I^{power} has {} generators, {} order\n",
                        og.len(),
                        order
                    );
                    match cert.failure {
                        None => s += &format!("linear quotients: yes ({} witnesses)", cert.witnesses.len()),
                        Some((i, j)) => {
                            s += &format!(
                                "linear quotients: no, pair i={i} ({}) j={j} ({}) has no witness",
                                og.gens()[i - 1].pretty(),
                                og.gens()[j - 1].pretty()
                            )
                        }
                    }
                    s
                },
            );
            verdict_of(cert.ok, "linear quotients certificate failed")
        }
        Command::ReesGb {
            seg,
            sigma,
            verify,
            exchange_bound,
        } => {
            let ideal = seg.ideal()?;
            let sigma = MonomialOrder::from(sigma);
            let basis = rees_gb(&ideal, sigma, exchange_bound)?;
            let all = basis.all();
            let check = if verify {
                Some(check_groebner(&all, ProductOrder::new(sigma, TOrder::Lex))?)
            } else {
                None
            };
            let quadratic = koszul_certificate(&all);
            if basis.exchange_warning() {
                eprintln!("warning: the generators fail the {sigma} exchange property");
            }
            out.emit(
                &json!({
                    "sigma": sigma,
                    "binomials": all.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
                    "fiber": basis.fiber.len(),
                    "linear": basis.linear.len(),
                    "quadratic": quadratic,
                    "exchange": basis.exchange.as_ref().map(report_json),
                    "groebner": check,
                }),
                || {
                    let mut s: Vec<String> = all.iter().map(|g| g.pretty()).collect();
                    s.push(format!(
                        "{} fiber and {} linear relations, quadratic: {}",
                        basis.fiber.len(),
                        basis.linear.len(),
                        quadratic
                    ));
                    if let Some(c) = &check {
                        s.push(format!(
                            "Groebner basis: {} ({} S-pairs), reduced: {}",
                            c.groebner, c.s_pairs, c.reduced
                        ));
                    }
                    s.join("\n")
                },
            );
            match check {
                Some(c) => verdict_of(c.groebner && quadratic, "Rees basis failed verification"),
                None => Ok(()),
            }
        }
        Command::Exchange {
            seg,
            mode,
            bound,
            sigma,
            t_order,
        } => {
            let ideal = seg.ideal()?;
            if bound == 0 {
                return Err(Failure::usage("--bound must be at least 1"));
            }
            let report = match mode {
                Mode::L => check_l_exchange(ideal.generators(), bound, t_order.into())?,
                Mode::Sigma => check_sigma_exchange(ideal.generators(), sigma.into(), bound, t_order.into())?,
            };
            out.emit(&report_json(&report), || report_text(&report));
            Ok(())
        }
        Command::Sweep {
            n_max,
            d_max,
            power_max,
            no_rees,
            no_exchange,
        } => {
            let opts = SweepOptions {
                n_max,
                d_max,
                max_power: power_max,
                rees: !no_rees,
                exchange: !no_exchange,
                order_search_limit: ORDER_SEARCH_LIMIT,
            };
            let records = sweep(&opts)?;
            let summary = summarize(&records);
            let mut stdout = std::io::stdout().lock();
            for r in &records {
                let _ = if out.json {
                    writeln!(stdout, "{}", serde_json::to_string(&r.to_json()).expect("serializes"))
                } else {
                    let powers: Vec<String> = r
                        .power_status
                        .iter()
                        .map(|(n, ok)| format!("N={n}:{}", if *ok { "ok" } else { "FAIL" }))
                        .collect();
                    writeln!(
                        stdout,
                        "L({}, {})  {}  {}  {}",
                        r.u.pretty(),
                        r.v.pretty(),
                        r.verdict.verdict,
                        powers.join(" "),
                        if r.consistent { "consistent" } else { "INCONSISTENT" }
                    )
                };
            }
            eprintln!("{}", serde_json::to_string(&summary).expect("serializes"));
            verdict_of(summary.inconsistent == 0, "sweep found inconsistent records")
        }
        Command::PaperExamples => {
            let checks = worked_examples()?;
            let ok = checks.iter().all(|c| c.ok);
            out.emit(&json!({"ok": ok, "checks": checks}), || {
                checks
                    .iter()
                    .map(|c| {
                        format!(
                            "{} {}: {}",
                            if c.ok { "ok  " } else { "FAIL" },
                            c.name,
                            if c.ok { c.actual.clone() } else { format!("expected {}, got {}", c.expected, c.actual) }
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            verdict_of(ok, "a worked example does not reproduce")
        }
        Command::Lemmas { cases, seed } => {
            let reports = run_all_lemmas(cases, seed)?;
            let ok = reports.iter().all(|r| r.ok());
            out.emit(&json!({"ok": ok, "reports": reports}), || {
                reports
                    .iter()
                    .map(|r| {
                        format!(
                            "{:<10} {} cases, {} rejected, {} violations",
                            r.lemma.name(),
                            r.cases,
                            r.rejected,
                            r.violations
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            verdict_of(ok, "a lemma suite found a violation")
        }
        Command::Pretty { monomial } => {
            out.emit(
                &json!({"monomial": monomial.to_string(), "pretty": monomial.pretty()}),
                || monomial.pretty(),
            );
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refuted(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
