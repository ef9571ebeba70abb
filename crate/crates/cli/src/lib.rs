//! Command implementations behind the `mstep` binary.
//!
//! Every command writes to a caller-supplied sink and reports an [`Outcome`];
//! `main` only maps that to a process exit code.

pub mod args;
pub mod schema;

use std::fmt::Write as _;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use mstep::catalog::{self, Catalog, CatalogEntry, DiscrepancyReport, TABLE_IDS};
use mstep::rational::parse_list;
use mstep::simson::{closed_form, verify_simson, ClosedForm};
use mstep::{Algorithm, Error, Rational, SequenceSpec};
use serde::Serialize;
use sha2::{Digest, Sha256};

use args::{BenchArgs, CatalogArgs, Cli, Command, EvalArgs, Format, SimsonArgs, Source, TableArgs, MAX_INDEX};
use schema::{BenchDocument, BenchTiming, CatalogDetail, EvalDocument, EvalRow, SimsonDocument, TableDocument};

/// How a command ended, short of a hard error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A check ran and failed; its output was still written.
    Fail,
}

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or unknown ids. Exit code 2.
    Usage(String),
    /// The request was well formed but cannot be satisfied. Exit code 1.
    Domain(String),
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) | Failure::Io(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => f.write_str(m),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::NegativeIndexUnavailable { .. } | Error::DivisionByZero | Error::Data(_) => Failure::Domain(msg),
            Error::ZeroDenominator
            | Error::InvalidLiteral(_)
            | Error::OrderTooSmall(_)
            | Error::LengthMismatch { .. }
            | Error::EmptyRange { .. }
            | Error::UnknownSequence(_)
            | Error::UnknownTable(_) => Failure::Usage(msg),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

type CmdResult = Result<Outcome, Failure>;

pub fn run(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let format = cli.format;
    match &cli.command {
        Command::Eval(a) => eval(a, format, out),
        Command::Simson(a) => simson(a, format, out),
        Command::Table(a) => table(a, format, out),
        Command::Catalog(a) => catalog_cmd(a, format, out),
        Command::Bench(a) => bench(a, format, out),
    }
}

fn resolve(source: &Source) -> Result<SequenceSpec, Failure> {
    if let Some(id) = &source.id {
        return Ok(catalog::lookup(id)?.spec.clone());
    }
    if let (Some(kind), Some(order)) = (source.family, source.order) {
        return Ok(catalog::family(kind, order)?);
    }
    match (&source.coeffs, &source.init) {
        (Some(c), Some(i)) => Ok(SequenceSpec::new(parse_list(c)?, parse_list(i)?, None)?),
        _ => Err(Failure::Usage("give --id, --coeffs with --init, or --family with --order".into())),
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

fn join(values: &[Rational], sep: &str) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn eval(a: &EvalArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let spec = resolve(&a.source)?;
    let (lo, hi) = match (a.n, a.range) {
        (Some(n), _) => (n, n),
        (None, Some(r)) => (r.lo, r.hi),
        (None, None) => return Err(Failure::Usage("give --n or --range".into())),
    };
    let algo = Algorithm::from(a.algo);
    let values = match algo {
        Algorithm::Naive => spec.term_range(lo, hi)?,
        _ => (lo..=hi).map(|n| algo.term(&spec, n)).collect::<mstep::Result<_>>()?,
    };
    match format {
        Format::Plain => writeln!(out, "{}", join(&values, " "))?,
        Format::Json => {
            let rows = (lo..=hi).zip(values).map(|(n, value)| EvalRow { n, value }).collect();
            let doc = EvalDocument { spec, algorithm: algo.name().into(), lo, hi, rows };
            write_json(out, &doc)?;
        }
        Format::Csv => {
            let id = spec.id().unwrap_or("");
            let mut w = csv_writer(out);
            w.write_record(["id", "n", "value"])?;
            for (n, v) in (lo..=hi).zip(&values) {
                w.write_record([id, &n.to_string(), &v.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(Outcome::Pass)
}

pub fn describe(form: &ClosedForm) -> String {
    let mut s = format!("f(n) = {}", form.constant);
    if form.alternating {
        s.push_str(" * (-1)^n");
    }
    if !form.base.is_one() {
        let _ = write!(s, " * ({})^n", form.base);
    }
    s
}

fn simson(a: &SimsonArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let spec = resolve(&a.source)?;
    let report = verify_simson(&spec, a.range.lo, a.range.hi)?;
    let form = closed_form(&spec)?;
    let outcome = if report.pass { Outcome::Pass } else { Outcome::Fail };
    match format {
        Format::Plain => {
            let name = spec.id().unwrap_or("custom");
            writeln!(out, "{name} (order {}): {}", spec.order(), describe(&form))?;
            for row in &report.rows {
                let mark = if row.matches { "ok" } else { "MISMATCH" };
                writeln!(out, "{:>8}  {}  {}  {mark}", row.n, row.lhs, row.rhs)?;
            }
            writeln!(out, "{}", if report.pass { "pass" } else { "fail" })?;
        }
        Format::Json => write_json(out, &SimsonDocument { spec, closed_form: form, report })?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["id", "n", "lhs", "rhs", "match"])?;
            let id = spec.id().unwrap_or("");
            for row in &report.rows {
                w.write_record([id, &row.n.to_string(), &row.lhs.to_string(), &row.rhs.to_string(), &row.matches.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(outcome)
}

fn table(a: &TableArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let catalog = Catalog::builtin();
    let reports: Vec<DiscrepancyReport> = match &a.table {
        Some(id) => vec![catalog.verify_table(id)?],
        None => TABLE_IDS.iter().map(|id| catalog.verify_table(id)).collect::<mstep::Result<_>>()?,
    };
    let pass = reports.iter().all(DiscrepancyReport::pass);
    match format {
        Format::Plain => {
            for r in &reports {
                let verdict = if r.pass() { "pass".to_string() } else { format!("{} mismatches", r.mismatches.len()) };
                writeln!(out, "{}: {} cells, {verdict}", r.table, r.checked)?;
                for m in &r.mismatches {
                    writeln!(out, "  {}[{}]: printed {}, computed {}", m.sequence, m.index, m.printed, m.computed)?;
                }
            }
            writeln!(out, "{}", if pass { "pass" } else { "fail" })?;
        }
        Format::Json => write_json(out, &TableDocument { pass, tables: reports })?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["table", "sequence", "index", "printed", "computed"])?;
            for r in &reports {
                for m in &r.mismatches {
                    w.write_record([&r.table, &m.sequence, &m.index.to_string(), &m.printed.to_string(), &m.computed.to_string()])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(if pass { Outcome::Pass } else { Outcome::Fail })
}

fn detail(entry: &CatalogEntry) -> CatalogDetail {
    CatalogDetail {
        listing: entry.listing(),
        name: entry.name.clone(),
        symbol: entry.symbol.clone(),
        tables: entry.source_tables.clone(),
    }
}

fn catalog_cmd(a: &CatalogArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let catalog = Catalog::builtin();
    if let Some(id) = &a.show {
        let d = detail(catalog.lookup(id)?);
        match format {
            Format::Plain => {
                let l = &d.listing;
                writeln!(out, "id            {}", l.id)?;
                writeln!(out, "name          {} ({})", d.name, d.symbol)?;
                writeln!(out, "order         {}", l.order)?;
                writeln!(out, "coefficients  {}", join(&l.coefficients, ", "))?;
                writeln!(out, "initials      {}", join(&l.initials, ", "))?;
                if let Some(form) = &l.closed_form {
                    writeln!(out, "closed form   {}", describe(form))?;
                    writeln!(out, "  constant    {}", form.constant)?;
                    writeln!(out, "  base        {}", form.base)?;
                    writeln!(out, "  alternating {}", form.alternating)?;
                }
                writeln!(out, "tables        {}", d.tables.join(", "))?;
            }
            Format::Json => write_json(out, &d)?,
            Format::Csv => listing_csv(out, std::slice::from_ref(&d.listing))?,
        }
        return Ok(Outcome::Pass);
    }
    let listings: Vec<_> = catalog.entries().iter().map(CatalogEntry::listing).collect();
    match format {
        Format::Plain => {
            for l in &listings {
                writeln!(out, "{:<42} m={}  r=[{}]  init=[{}]", l.id, l.order, join(&l.coefficients, ","), join(&l.initials, ","))?;
            }
        }
        Format::Json => write_json(out, &listings)?,
        Format::Csv => listing_csv(out, &listings)?,
    }
    Ok(Outcome::Pass)
}

fn listing_csv(out: &mut dyn Write, listings: &[catalog::CatalogListing]) -> Result<(), Failure> {
    let mut w = csv_writer(out);
    w.write_record(["id", "order", "coefficients", "initials", "constant", "base", "alternating"])?;
    for l in listings {
        let (c, b, alt) = match &l.closed_form {
            Some(f) => (f.constant.to_string(), f.base.to_string(), f.alternating.to_string()),
            None => Default::default(),
        };
        w.write_record([&l.id, &l.order.to_string(), &join(&l.coefficients, " "), &join(&l.initials, " "), &c, &b, &alt])?;
    }
    w.flush()?;
    Ok(())
}

/// First 16 hex digits of SHA-256 over the value's literal form.
pub fn value_hash(value: &Rational) -> String {
    let digest = Sha256::digest(value.to_string().as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn bench(a: &BenchArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    if a.n < 0 {
        return Err(Failure::Usage(format!("bench needs n >= 0, got {}", a.n)));
    }
    if a.n > MAX_INDEX {
        return Err(Failure::Usage(format!("n must not exceed {MAX_INDEX}")));
    }
    let spec = resolve(&a.source)?;
    let mut algos: Vec<Algorithm> = a.algo.iter().copied().map(Algorithm::from).collect();
    algos.dedup();
    if algos.is_empty() {
        algos = Algorithm::ALL.to_vec();
    }

    // Correctness first: every timed evaluator must match a second one.
    let reference_algo = if algos.contains(&Algorithm::Kitamasa) && algos.len() == 1 {
        Algorithm::Matrix
    } else {
        Algorithm::Kitamasa
    };
    let reference = reference_algo.term(&spec, a.n)?;
    for &algo in &algos {
        let value = algo.term(&spec, a.n)?;
        if value != reference {
            return Err(Failure::Domain(format!(
                "evaluators disagree at n={}: {} gives {}, {} gives {}",
                a.n,
                algo.name(),
                value_hash(&value),
                reference_algo.name(),
                value_hash(&reference)
            )));
        }
    }

    let mut timings = Vec::new();
    for &algo in &algos {
        let mut runs = Vec::with_capacity(a.repeat as usize);
        for _ in 0..a.repeat {
            let start = Instant::now();
            let value = algo.term(&spec, a.n)?;
            runs.push(start.elapsed());
            std::hint::black_box(value);
        }
        let best = runs.iter().min().copied().unwrap_or_default();
        let mean = runs.iter().sum::<Duration>() / a.repeat;
        timings.push(BenchTiming { algorithm: algo.name().into(), best_ms: ms(best), mean_ms: ms(mean) });
    }
    let doc = BenchDocument {
        id: spec.id().map(str::to_owned),
        n: a.n,
        digits: reference.numer_digits(),
        hash: value_hash(&reference),
        repeat: a.repeat,
        timings,
    };
    match format {
        Format::Plain => {
            let name = doc.id.as_deref().unwrap_or("custom");
            writeln!(out, "{name} n={} digits={} hash={}", doc.n, doc.digits, doc.hash)?;
            for t in &doc.timings {
                writeln!(out, "{:<9} best {:.3} ms  mean {:.3} ms  ({} runs)", t.algorithm, t.best_ms, t.mean_ms, doc.repeat)?;
            }
        }
        Format::Json => write_json(out, &doc)?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["id", "n", "algorithm", "digits", "hash", "best_ms", "mean_ms"])?;
            let id = doc.id.clone().unwrap_or_default();
            for t in &doc.timings {
                w.write_record([
                    &id,
                    &doc.n.to_string(),
                    &t.algorithm,
                    &doc.digits.to_string(),
                    &doc.hash,
                    &format!("{:.3}", t.best_ms),
                    &format!("{:.3}", t.mean_ms),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(Outcome::Pass)
}
