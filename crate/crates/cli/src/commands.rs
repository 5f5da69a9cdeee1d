//! One function per subcommand, each returning a [`Report`].

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use monideal::borel::{borel_witness, is_borel_type, is_borel_type_by_saturation};
use monideal::witness::{classify_uniqueness, random_offsets, verify_witness, witness_from_component};
use monideal::{
    BorelReport, Decomposition, Monomial, MonomialIdeal, PrimeSupport, RingContext, Uniqueness, WitnessSpec,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::parse::{self, ParseError};
use crate::problem::{Construct, ProblemFile};
use crate::report::{component_json, monomial_json, prime_json, spaced, Report};
use crate::{Command, Input};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] monideal::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn load(path: &Path) -> CliResult<ProblemFile> {
    let shown = path.display().to_string();
    let text = if shown == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io { path: shown.clone(), source })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?
    };
    ProblemFile::parse(&text).map_err(|source| CliError::Parse { path: shown, source })
}

/// The selected construct and its name.
fn select<'a>(problem: &'a ProblemFile, input: &Input) -> CliResult<(&'a str, &'a Construct)> {
    match &input.name {
        Some(name) => problem
            .items
            .iter()
            .find(|(n, _)| n == name)
            .map(|(n, c)| (n.as_str(), c))
            .ok_or_else(|| CliError::Usage(format!("no construct named '{name}'"))),
        None => problem
            .first()
            .map(|(n, c)| (n.as_str(), c))
            .ok_or_else(|| CliError::Usage("the problem file defines no ideal, clutter or sym".into())),
    }
}

fn flag_error(flag: &str, e: ParseError) -> CliError {
    CliError::Usage(format!("--{flag}: column {}: {}", e.pos.column, e.message))
}

/// `--prime` as an index into `Ass(I)` or as a variable list.
fn resolve_prime(d: &Decomposition, ring: &std::sync::Arc<RingContext>, text: &str) -> CliResult<PrimeSupport> {
    let text = text.trim();
    if let Ok(index) = text.parse::<usize>() {
        let primes = d.associated_primes();
        return primes.get(index).cloned().ok_or_else(|| {
            CliError::Usage(format!("prime index {index} out of range; I has {} associated primes", primes.len()))
        });
    }
    let vars = parse::parse_var_list(text, ring).map_err(|e| flag_error("prime", e))?;
    Ok(PrimeSupport::new(ring.clone(), vars)?)
}

fn prime_label(d: &Decomposition, p: &PrimeSupport) -> String {
    match d.associated_primes().iter().position(|q| q == p) {
        Some(i) => format!("P{i} = {p}"),
        None => format!("P = {p}"),
    }
}

fn add_decomposition(report: &mut Report, d: &Decomposition) {
    let ring = d.ideal().ring();
    report.set("components", Value::Array(d.components().iter().map(|q| component_json(ring, q)).collect()));
    report.set("associated_primes", Value::Array(d.associated_primes().iter().map(prime_json).collect()));
}

fn header(report: &mut Report, name: &str, ideal: &MonomialIdeal) {
    report.line(format!("ring {}", ideal.ring()));
    report.line(format!("ideal {name} = {ideal}"));
}

pub fn execute(command: &Command) -> CliResult<Report> {
    let input = command.input();
    let problem = load(&input.file)?;
    let (name, construct) = select(&problem, input)?;
    let ideal = construct.to_ideal();
    let ring = problem.ring.clone();
    let mut report = Report::new(&ring, name, &ideal);
    header(&mut report, name, &ideal);

    match command {
        Command::Decompose { .. } => {
            let d = Decomposition::compute(&ideal)?;
            for (pi, p) in d.associated_primes().iter().enumerate() {
                report.line(format!("P{pi} = {p}"));
                for q in d.components_for(p)? {
                    report.line(format!("  {q}"));
                }
            }
            add_decomposition(&mut report, &d);
        }
        Command::Assprimes { .. } => {
            let d = Decomposition::compute(&ideal)?;
            for (pi, p) in d.associated_primes().iter().enumerate() {
                report.line(format!("P{pi} = {p}"));
            }
            add_decomposition(&mut report, &d);
        }
        Command::Witness { prime, component, offsets, seed, max_offset, list, .. } => {
            let d = Decomposition::compute(&ideal)?;
            add_decomposition(&mut report, &d);
            witness(&mut report, &d, prime.as_deref(), *component, offsets, *seed, *max_offset, *list)?;
        }
        Command::Verify { prime, v, .. } => {
            let vars = parse::parse_var_list(prime, &ring);
            let p = match vars {
                Ok(vars) => PrimeSupport::new(ring.clone(), vars)?,
                Err(_) => resolve_prime(&Decomposition::compute(&ideal)?, &ring, prime)?,
            };
            let v = parse::parse_monomial(v, &ring).map_err(|e| flag_error("v", e))?;
            let colon = ideal.colon_monomial(&v)?;
            let ok = verify_witness(&ideal, &p, &v)?;
            report.line(format!("prime {p}"));
            report.line(format!("v = {}", spaced(&ring, &v)));
            report.line(format!("({name} : v) = {colon}"));
            report.line(if ok { "VERIFIED" } else { "FAILED" });
            report.set(
                "witness",
                json!({ "prime": prime_json(&p), "monomial": monomial_json(&ring, &v), "colon": colon.generators_text() }),
            );
            report.verdict(ok);
        }
        Command::Colon { v, .. } => {
            let v = parse::parse_monomial(v, &ring).map_err(|e| flag_error("v", e))?;
            let colon = ideal.colon_monomial(&v)?;
            report.line(format!("v = {}", spaced(&ring, &v)));
            report.line(format!("({name} : v) = {colon}"));
            report.set("colon", json!({ "v": monomial_json(&ring, &v), "text": colon.generators_text() }));
        }
        Command::Borel { cross_check, .. } => borel(&mut report, &ideal, *cross_check)?,
        Command::Uniqueness { prime, .. } => {
            let d = Decomposition::compute(&ideal)?;
            add_decomposition(&mut report, &d);
            let primes = match prime {
                Some(text) => vec![resolve_prime(&d, &ring, text)?],
                None => d.associated_primes(),
            };
            let mut entries = Vec::new();
            for p in primes {
                let verdict = classify_uniqueness(&d, &p)?;
                let witnesses: Vec<&Monomial> = match &verdict {
                    Uniqueness::Unique { witness } => vec![witness],
                    Uniqueness::NonUnique { first, second } => vec![first, second],
                };
                let mut ok = true;
                for w in &witnesses {
                    ok &= verify_witness(&ideal, &p, w)?;
                }
                report.verdict(ok);
                let shown: Vec<String> = witnesses.iter().map(|w| format!("v = {}", spaced(&ring, w))).collect();
                report.line(format!(
                    "{}: {} {}{}",
                    prime_label(&d, &p),
                    if verdict.is_unique() { "UNIQUE" } else { "NOT UNIQUE" },
                    shown.join("; "),
                    if ok { "" } else { " (FAILED)" }
                ));
                entries.push(json!({
                    "prime": prime_json(&p),
                    "unique": verdict.is_unique(),
                    "witnesses": witnesses.iter().map(|w| monomial_json(&ring, w)).collect::<Vec<_>>(),
                }));
            }
            report.set("uniqueness", Value::Array(entries));
        }
        Command::ClutterBase { prime, .. } => {
            let Construct::Clutter(c) = construct else {
                return Err(CliError::Usage(format!("'{name}' is a {}, not a clutter", construct.kind())));
            };
            let d = Decomposition::compute(&ideal)?;
            add_decomposition(&mut report, &d);
            let primes = match prime {
                Some(text) => vec![resolve_prime(&d, &ring, text)?],
                None => d.associated_primes(),
            };
            let mut entries = Vec::new();
            for p in primes {
                let t_a: Monomial = c.witness_base(&p)?;
                let ok = verify_witness(&ideal, &p, &t_a)?;
                report.verdict(ok);
                report.line(format!(
                    "{}: t_A = {} {}",
                    prime_label(&d, &p),
                    spaced(&ring, &t_a),
                    if ok { "VERIFIED" } else { "FAILED" }
                ));
                entries.push(json!({ "prime": prime_json(&p), "monomial": monomial_json(&ring, &t_a) }));
            }
            report.set("clutter_base", Value::Array(entries));
        }
        Command::Symgen { break_index, prime, b, .. } => {
            let Construct::Symmetric(s) = construct else {
                return Err(CliError::Usage(format!("'{name}' is a {}, not a sym", construct.kind())));
            };
            let exps: Vec<String> = s.exps().iter().map(u32::to_string).collect();
            let breaks: Vec<String> = s.breaks().iter().map(usize::to_string).collect();
            report.line(format!("k = {}, exps = {}, breaks = {}", s.k(), exps.join(","), breaks.join(",")));
            report.line(format!("generators: {}", ideal.len()));
            if let Some(j) = break_index {
                let j0 = j
                    .checked_sub(1)
                    .filter(|&j0| j0 < s.breaks().len())
                    .ok_or_else(|| CliError::Usage(format!("--break must be between 1 and {}", s.breaks().len())))?;
                let size = s.prime_size(j0);
                let vars = match prime {
                    Some(text) => parse::parse_var_list(text, &ring).map_err(|e| flag_error("prime", e))?,
                    None => (0..size).collect(),
                };
                let floors: Vec<u32> = s.exps()[s.breaks()[j0]..].to_vec();
                let choices = b.clone().unwrap_or(floors);
                let (p, v) = s.witness(j0, &vars, &choices)?;
                let ok = verify_witness(&ideal, &p, &v)?;
                report.line(format!("prime {p}"));
                report.line(format!("v = {}", spaced(&ring, &v)));
                report.line(if ok { "VERIFIED" } else { "FAILED" });
                report.set(
                    "witness",
                    json!({ "prime": prime_json(&p), "break": j, "monomial": monomial_json(&ring, &v) }),
                );
                report.verdict(ok);
            }
        }
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn witness(
    report: &mut Report,
    d: &Decomposition,
    prime: Option<&str>,
    component: Option<usize>,
    offsets: &[String],
    seed: Option<u64>,
    max_offset: u32,
    list: bool,
) -> CliResult<()> {
    let ideal = d.ideal();
    let ring = ideal.ring();
    let primes = match prime {
        Some(text) => vec![resolve_prime(d, ring, text)?],
        None if list => d.associated_primes(),
        None => return Err(CliError::Usage("witness needs --prime (see --list)".into())),
    };
    if list {
        for p in &primes {
            report.line(prime_label(d, p));
            for (qi, q) in d.components_for(p)?.iter().enumerate() {
                report.line(format!("  [{qi}] {q}"));
            }
        }
        return Ok(());
    }
    let p = &primes[0];
    let candidates = d.components_for(p)?;
    let q = match (component, candidates.len()) {
        (Some(i), len) if i < len => candidates[i],
        (Some(i), len) => {
            return Err(CliError::Usage(format!("component index {i} out of range; {p} has {len} components")))
        }
        (None, 1) => candidates[0],
        (None, len) => {
            let listing: Vec<String> = candidates.iter().enumerate().map(|(i, q)| format!("  [{i}] {q}")).collect();
            return Err(CliError::Usage(format!(
                "{p} has {len} components; choose one with --component:\n{}",
                listing.join("\n")
            )));
        }
    };

    let mut chosen: BTreeMap<usize, u32> = match seed {
        Some(s) => random_offsets(&mut ChaCha8Rng::seed_from_u64(s), p, max_offset),
        None => BTreeMap::new(),
    };
    for text in offsets {
        let (var, k) = text
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--offset {text}: expected VAR=K")))?;
        let index = ring
            .index_of(var.trim())
            .ok_or_else(|| CliError::Usage(format!("--offset {text}: unknown variable '{}'", var.trim())))?;
        let k: u32 = k
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("--offset {text}: '{}' is not a non-negative integer", k.trim())))?;
        chosen.insert(index, k);
    }
    let spec = WitnessSpec::with_offsets(q.clone(), chosen.clone())?;
    let v = witness_from_component(d, &spec)?;
    let ok = verify_witness(ideal, p, &v)?;
    let colon = ideal.colon_monomial(&v)?;

    report.line(format!("prime {}", prime_label(d, p)));
    report.line(format!("component {q}"));
    if !chosen.is_empty() {
        let shown: Vec<String> = chosen.iter().map(|(&x, k)| format!("{}={k}", ring.name(x))).collect();
        report.line(format!("offsets {}", shown.join(" ")));
    }
    report.line(format!("v = {}", spaced(ring, &v)));
    report.line(format!("(I : v) = {colon}"));
    report.line(if ok { "VERIFIED" } else { "FAILED" });
    let offsets_json: serde_json::Map<String, Value> =
        chosen.iter().map(|(&x, &k)| (ring.name(x).to_string(), json!(k))).collect();
    report.set(
        "witness",
        json!({
            "prime": prime_json(p),
            "component": component_json(ring, q),
            "offsets": offsets_json,
            "monomial": monomial_json(ring, &v),
            "text": spaced(ring, &v),
        }),
    );
    report.verdict(ok);
    Ok(())
}

fn borel(report: &mut Report, ideal: &MonomialIdeal, cross_check: bool) -> CliResult<()> {
    let ring = ideal.ring();
    let verdict = is_borel_type(ideal)?;
    match &verdict {
        BorelReport::BorelType { .. } => {
            report.line("BOREL TYPE");
            let d = Decomposition::compute(ideal)?;
            add_decomposition(report, &d);
            let mut entries = Vec::new();
            for (pi, p) in d.associated_primes().iter().enumerate() {
                for q in d.components_for(p)? {
                    let v = borel_witness(&d, p, q)?;
                    let ok = verify_witness(ideal, p, &v)?;
                    report.verdict(ok);
                    report.line(format!(
                        "P{pi} = {p}  {q}  v = {} {}",
                        spaced(ring, &v),
                        if ok { "VERIFIED" } else { "FAILED" }
                    ));
                    entries.push(json!({
                        "prime": prime_json(p),
                        "component": component_json(ring, q),
                        "monomial": monomial_json(ring, &v),
                    }));
                }
            }
            report.set("borel", json!({ "borel_type": true, "witnesses": entries }));
        }
        BorelReport::NotBorelType { violation } => {
            report.line("NOT BOREL TYPE");
            report.line(format!(
                "generator {} with i = {}, j = {}, t = {}: {} is not in I",
                ring.format_monomial(&violation.generator),
                ring.name(violation.i),
                ring.name(violation.j),
                violation.bound,
                ring.format_monomial(&violation.probe())
            ));
            report.set(
                "borel",
                json!({
                    "borel_type": false,
                    "violation": {
                        "generator": monomial_json(ring, &violation.generator),
                        "i": ring.name(violation.i),
                        "j": ring.name(violation.j),
                        "t": violation.bound,
                    },
                }),
            );
        }
    }
    if cross_check {
        let agrees = is_borel_type_by_saturation(ideal)? == verdict.is_borel_type();
        report.line(format!("saturation cross-check: {}", if agrees { "agrees" } else { "DISAGREES" }));
        report.verdict(agrees);
    }
    Ok(())
}
