//! Command line driver: root systems, reduced words, PBW and global
//! bases, pair invariants, Q-data / AR quivers, cuspidal lines, and the
//! full verification suite.
//!
//! Exit codes: 0 success, 2 usage error, 3 verification failure,
//! 4 internal invariant violation, 1 any other error.

use clap::{Parser, Subcommand, ValueEnum};
use cuspidal::affine::cuspidal_line;
use cuspidal::gbasis::dual_canonical_at_weight;
use cuspidal::invariants::pair_invariants;
use cuspidal::liecore::{
    build_root_system, enumerate_reduced_words, CartanDatum, ReducedWord, RootSystem, RootVec,
};
use cuspidal::pbw::{exponents_of_weight, PbwContext, PbwExponent};
use cuspidal::qdata::{ar_quiver, DynkinQuiver, QDataT};
use cuspidal::verify::{run_all, Status, TypeFilter, DEFAULT_SEED};
use cuspidal::{Error, ShuffleElt};
use serde_json::json;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::rc::Rc;

#[derive(Parser)]
#[command(
    name = "cuspidal",
    version,
    about = "Exact convex-order, shuffle-basis and AR-quiver computations"
)]
struct Cli {
    /// Plain-text key=value defaults; explicit flags win
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots of an ADE type
    Roots {
        #[arg(long)]
        cartan: Option<String>,
    },
    /// Reduced words of the longest element, deterministic order
    Words {
        #[arg(long)]
        cartan: Option<String>,
        /// Truncate the enumeration at this many words
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Dual PBW basis of one weight space
    Pbw {
        #[arg(long)]
        cartan: Option<String>,
        /// Reduced word for w0, comma separated letters
        #[arg(long)]
        word: Option<String>,
        /// Weight coordinates, comma separated
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        height_bound: Option<i64>,
    },
    /// Global basis of one weight space with both transition matrices
    Gbasis {
        #[arg(long)]
        cartan: Option<String>,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        height_bound: Option<i64>,
    },
    /// Pair invariants of two global basis elements
    Invariants {
        #[arg(long)]
        cartan: Option<String>,
        #[arg(long)]
        word: Option<String>,
        /// Weight of x, comma separated
        #[arg(long)]
        weight_x: Option<String>,
        /// Exponent label of x, comma separated
        #[arg(long)]
        exp_x: Option<String>,
        #[arg(long)]
        weight_y: Option<String>,
        #[arg(long)]
        exp_y: Option<String>,
        #[arg(long)]
        height_bound: Option<i64>,
    },
    /// Validate Q-data and emit the knitted AR quiver
    Qdata {
        #[arg(long)]
        cartan: Option<String>,
        /// Arrows as from>to pairs, comma separated, e.g. 2>1,3>2
        #[arg(long)]
        arrows: Option<String>,
        /// Full height function, comma separated
        #[arg(long)]
        phi: Option<String>,
        /// Even height of vertex 1 (the rest is forced)
        #[arg(long)]
        phi1: Option<i64>,
    },
    /// Cuspidal line of Q-data and a reduced word
    Cuspline {
        #[arg(long)]
        cartan: Option<String>,
        #[arg(long)]
        arrows: Option<String>,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        phi1: Option<i64>,
        #[arg(long)]
        word: Option<String>,
        /// Index range lo:hi
        #[arg(long)]
        range: Option<String>,
        /// Sparse parameter k:a_k pairs, comma separated; when given the
        /// standard-module descriptor is emitted too
        #[arg(long)]
        param: Option<String>,
    },
    /// Run the acceptance sweeps; nonzero exit on failure
    Verify {
        /// Restrict the sweeps to one Cartan type
        #[arg(long)]
        cartan: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

enum CliError {
    Usage(String),
    VerifyFailed,
    Internal(String),
    Other(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(m) => CliError::Internal(m),
            Error::Config(m) | Error::InvalidWord(m) => CliError::Usage(m),
            other => CliError::Other(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::VerifyFailed) => {
            eprintln!("verification failed");
            ExitCode::from(3)
        }
        Err(CliError::Internal(m)) => {
            eprintln!("internal invariant violation: {m}");
            ExitCode::from(4)
        }
        Err(CliError::Other(m)) => {
            eprintln!("error: {m}");
            ExitCode::FAILURE
        }
    }
}

struct Defaults(BTreeMap<String, String>);

impl Defaults {
    fn load(path: &Option<PathBuf>) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        if let Some(p) = path {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("config {}: {e}", p.display())))?;
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (k, v) = line
                    .split_once('=')
                    .ok_or_else(|| CliError::Usage(format!("bad config line '{line}'")))?;
                map.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        Ok(Defaults(map))
    }

    /// String-valued flag parsed into T; flags win over config entries.
    fn merge_str<T>(
        &self,
        flag: &Option<String>,
        key: &str,
        parse: impl Fn(&str) -> Result<T, CliError>,
    ) -> Result<Option<T>, CliError> {
        match flag {
            Some(s) => parse(s).map(Some),
            None => match self.0.get(key) {
                Some(raw) => parse(raw).map(Some),
                None => Ok(None),
            },
        }
    }

    fn require_str<T>(
        &self,
        flag: &Option<String>,
        key: &str,
        parse: impl Fn(&str) -> Result<T, CliError>,
    ) -> Result<T, CliError> {
        self.merge_str(flag, key, parse)?
            .ok_or_else(|| CliError::Usage(format!("missing --{key}")))
    }

    /// Already-typed flag with a config fallback.
    fn merge_val<T: Clone>(
        &self,
        flag: &Option<T>,
        key: &str,
        parse: impl Fn(&str) -> Result<T, CliError>,
    ) -> Result<Option<T>, CliError> {
        if let Some(v) = flag {
            return Ok(Some(v.clone()));
        }
        match self.0.get(key) {
            Some(raw) => parse(raw).map(Some),
            None => Ok(None),
        }
    }
}

fn parse_cartan(s: &str) -> Result<CartanDatum, CliError> {
    CartanDatum::parse(s).map_err(CliError::from)
}

fn parse_ints(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("bad integer '{t}'")))
        })
        .collect()
}

fn parse_word(s: &str) -> Result<ReducedWord, CliError> {
    let ints = parse_ints(s)?;
    Ok(ReducedWord::new(ints.into_iter().map(|i| i as usize).collect()))
}

fn parse_exponent(s: &str) -> Result<PbwExponent, CliError> {
    let ints = parse_ints(s)?;
    Ok(PbwExponent { a: ints.into_iter().map(|i| i as u32).collect() })
}

fn parse_param(s: &str) -> Result<cuspidal::affine::CuspParam, CliError> {
    let mut out = cuspidal::affine::CuspParam::new();
    for t in s.split(',') {
        let (k, v) = t
            .trim()
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("bad parameter entry '{t}', expected k:a")))?;
        let k: i64 = k.parse().map_err(|_| CliError::Usage(format!("bad index '{k}'")))?;
        let v: u32 = v.parse().map_err(|_| CliError::Usage(format!("bad value '{v}'")))?;
        out.set(k, v);
    }
    Ok(out)
}

fn parse_arrows(s: &str) -> Result<Vec<(usize, usize)>, CliError> {
    s.split(',')
        .map(|t| {
            let (a, b) = t
                .trim()
                .split_once('>')
                .ok_or_else(|| CliError::Usage(format!("bad arrow '{t}', expected from>to")))?;
            Ok((
                a.parse().map_err(|_| CliError::Usage(format!("bad arrow '{t}'")))?,
                b.parse().map_err(|_| CliError::Usage(format!("bad arrow '{t}'")))?,
            ))
        })
        .collect()
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(p) => {
            let mut f = std::fs::File::create(p)
                .map_err(|e| CliError::Other(format!("output {}: {e}", p.display())))?;
            writeln!(f, "{text}").map_err(|e| CliError::Other(e.to_string()))
        }
    }
}

fn root_system_for(cartan: &CartanDatum) -> Result<Rc<RootSystem>, CliError> {
    Ok(Rc::new(build_root_system(cartan.series, cartan.rank)?))
}

fn qdata_from(
    defaults: &Defaults,
    cartan: &Option<String>,
    arrows: &Option<String>,
    phi: &Option<String>,
    phi1: &Option<i64>,
) -> Result<(Rc<RootSystem>, QDataT), CliError> {
    let cartan = defaults.require_str(cartan, "cartan", parse_cartan)?;
    let rs = root_system_for(&cartan)?;
    let arrows = defaults.require_str(arrows, "arrows", parse_arrows)?;
    let quiver = DynkinQuiver::new(rs.cartan.clone(), &arrows)?;
    let phi = defaults.merge_str(phi, "phi", parse_ints)?;
    let q = match phi {
        Some(phi) => QDataT::new(quiver, phi)?,
        None => {
            let phi1 = defaults.merge_val(phi1, "phi1", |s| {
                s.parse().map_err(|_| CliError::Usage("bad phi1".into()))
            })?;
            QDataT::from_orientation(quiver, phi1.unwrap_or(0))?
        }
    };
    Ok((rs, q))
}

fn elements_json(map: &BTreeMap<PbwExponent, ShuffleElt>) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    for (a, v) in map {
        let key = a
            .a
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        obj.insert(
            key,
            serde_json::from_str(&v.canonical_json()).expect("canonical json is valid"),
        );
    }
    serde_json::Value::Object(obj)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let defaults = Defaults::load(&cli.config)?;
    let format = cli.format.unwrap_or(Format::Json);
    match &cli.command {
        Command::Roots { cartan } => {
            let cartan = defaults.require_str(cartan, "cartan", parse_cartan)?;
            let rs = root_system_for(&cartan)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "cartan": cartan.label(),
                    "count": rs.num_positive(),
                    "roots": rs.positive_roots.iter().map(|r| r.coords.clone()).collect::<Vec<_>>(),
                }))
                .unwrap(),
                Format::Tsv => {
                    let mut t = String::from("root\theight\n");
                    for r in &rs.positive_roots {
                        t.push_str(&format!(
                            "{}\t{}\n",
                            r.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
                            r.height()
                        ));
                    }
                    t.trim_end().to_string()
                }
            };
            emit(&cli.output, &text)
        }
        Command::Words { cartan, cap } => {
            let cartan = defaults.require_str(cartan, "cartan", parse_cartan)?;
            let cap = defaults
                .merge_val(cap, "cap", |s| {
                    s.parse().map_err(|_| CliError::Usage("bad cap".into()))
                })?
                .unwrap_or(10_000);
            let rs = root_system_for(&cartan)?;
            let (words, truncated) = enumerate_reduced_words(&rs, cap);
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "cartan": cartan.label(),
                    "count": words.len(),
                    "truncated": truncated,
                    "words": words.iter().map(|w| w.letters.clone()).collect::<Vec<_>>(),
                }))
                .unwrap(),
                Format::Tsv => {
                    let mut t = String::from("word\n");
                    for w in &words {
                        t.push_str(&format!(
                            "{}\n",
                            w.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
                        ));
                    }
                    t.trim_end().to_string()
                }
            };
            emit(&cli.output, &text)
        }
        Command::Pbw { cartan, word, weight, height_bound } => {
            let (mut ctx, weight) =
                context_and_weight(&defaults, cartan, word, weight, height_bound)?;
            let exps = exponents_of_weight(&ctx.seq, &weight);
            let mut rows = Vec::new();
            for a in &exps {
                let m = ctx.dual_pbw_monomial(a)?;
                rows.push((a.clone(), m.leading_word.digits(), m.value));
            }
            let text = match format {
                Format::Tsv => {
                    let mut t = String::from("exponent\tleading_word\telement\n");
                    for (a, lw, v) in &rows {
                        t.push_str(&format!(
                            "{}\t{}\t{}\n",
                            a.a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                            lw,
                            v.canonical_json()
                        ));
                    }
                    t.trim_end().to_string()
                }
                Format::Json => {
                    let map: BTreeMap<PbwExponent, ShuffleElt> =
                        rows.iter().map(|(a, _, v)| (a.clone(), v.clone())).collect();
                    serde_json::to_string_pretty(&json!({
                        "weight": weight.coords,
                        "exponents": exps.iter().map(|a| a.a.clone()).collect::<Vec<_>>(),
                        "leading_words": rows.iter().map(|(_, lw, _)| lw.clone()).collect::<Vec<_>>(),
                        "monomials": elements_json(&map),
                    }))
                    .unwrap()
                }
            };
            emit(&cli.output, &text)
        }
        Command::Gbasis { cartan, word, weight, height_bound } => {
            let (mut ctx, weight) =
                context_and_weight(&defaults, cartan, word, weight, height_bound)?;
            let basis = dual_canonical_at_weight(&mut ctx, &weight)?;
            let wb = ctx.weight_basis(&weight)?;
            let to_strings = |m: &Vec<Vec<cuspidal::LaurentPoly>>| {
                m.iter()
                    .map(|row| row.iter().map(|c| c.canonical_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            };
            let globals: BTreeMap<PbwExponent, ShuffleElt> = basis
                .iter()
                .map(|g| (g.exponent.clone(), g.value.clone()))
                .collect();
            let monomials: BTreeMap<PbwExponent, ShuffleElt> = wb
                .exponents
                .iter()
                .cloned()
                .zip(wb.monomials.iter().cloned())
                .collect();
            let text = serde_json::to_string_pretty(&json!({
                "weight": weight.coords,
                "exponents": wb.exponents.iter().map(|a| a.a.clone()).collect::<Vec<_>>(),
                "globals": elements_json(&globals),
                "pbw_monomials": elements_json(&monomials),
                "pbw_to_global": to_strings(&wb.pbw_to_global),
                "global_to_pbw": to_strings(&wb.global_to_pbw),
            }))
            .unwrap();
            emit(&cli.output, &text)
        }
        Command::Invariants {
            cartan,
            word,
            weight_x,
            exp_x,
            weight_y,
            exp_y,
            height_bound,
        } => {
            let cartan = defaults.require_str(cartan, "cartan", parse_cartan)?;
            let rs = root_system_for(&cartan)?;
            let word = resolve_word(&defaults, word, &rs)?;
            let bound = defaults
                .merge_val(height_bound, "height-bound", |s| {
                    s.parse().map_err(|_| CliError::Usage("bad height-bound".into()))
                })?
                .unwrap_or(6);
            let mut ctx = PbwContext::new(rs, &word, bound)?;
            let x = find_global(&defaults, &mut ctx, weight_x, exp_x, "weight-x", "exp-x")?;
            let y = find_global(&defaults, &mut ctx, weight_y, exp_y, "weight-y", "exp-y")?;
            let inv = pair_invariants(&mut ctx, &x, &y)?;
            let text = serde_json::to_string_pretty(&inv).unwrap();
            emit(&cli.output, &text)
        }
        Command::Qdata { cartan, arrows, phi, phi1 } => {
            let (rs, q) = qdata_from(&defaults, cartan, arrows, phi, phi1)?;
            let violations = cuspidal::qdata::validate_qdata(&q);
            if !violations.is_empty() {
                let text = serde_json::to_string_pretty(&json!({
                    "valid": false,
                    "violations": violations,
                }))
                .unwrap();
                return emit(&cli.output, &text);
            }
            let ar = ar_quiver(&rs, &q)?;
            let text = match format {
                Format::Json => {
                    let verts: Vec<_> = ar
                        .vertices
                        .iter()
                        .map(|((i, p), r)| json!({"i": i, "p": p, "root": r.coords}))
                        .collect();
                    serde_json::to_string_pretty(&json!({
                        "valid": true,
                        "phi": q.phi,
                        "vertices": verts,
                        "meshes": ar.meshes,
                    }))
                    .unwrap()
                }
                Format::Tsv => ar_grid_tsv(&ar),
            };
            emit(&cli.output, &text)
        }
        Command::Cuspline { cartan, arrows, phi, phi1, word, range, param } => {
            let (rs, q) = qdata_from(&defaults, cartan, arrows, phi, phi1)?;
            let word = resolve_word(&defaults, word, &rs)?;
            let range = defaults
                .merge_str(range, "range", |s| Ok(s.to_string()))?
                .unwrap_or_else(|| format!("1:{}", rs.num_positive()));
            let (lo, hi) = range
                .split_once(':')
                .ok_or_else(|| CliError::Usage("range must be lo:hi".into()))?;
            let lo: i64 = lo.parse().map_err(|_| CliError::Usage("bad range".into()))?;
            let hi: i64 = hi.parse().map_err(|_| CliError::Usage("bad range".into()))?;
            let line = cuspidal_line(&rs, &q, &word, (lo, hi))?;
            let mut entries = serde_json::Map::new();
            for k in lo..=hi {
                entries.insert(k.to_string(), serde_json::to_value(line.label(k)?).unwrap());
            }
            let mut body = json!({
                "adapted": line.adapted,
                "word": word.letters,
                "range": [lo, hi],
                "entries": entries,
            });
            if let Some(param) = defaults.merge_str(param, "param", parse_param)? {
                let descriptor = cuspidal::affine::standard_descriptor(&line, &param)?;
                let factors: Vec<_> = descriptor
                    .factors
                    .iter()
                    .map(|(k, e, m)| json!({"k": k, "entry": e, "multiplicity": m}))
                    .collect();
                body["param"] = json!(param.sparse_string());
                body["standard_descriptor"] = json!(factors);
            }
            let text = serde_json::to_string_pretty(&body).unwrap();
            emit(&cli.output, &text)
        }
        Command::Verify { cartan, seed } => {
            let filter = match defaults.merge_str(cartan, "cartan", parse_cartan)? {
                None => TypeFilter::all(),
                Some(c) => TypeFilter(Some((c.series, c.rank))),
            };
            let seed = defaults
                .merge_val(seed, "seed", |s| {
                    s.parse().map_err(|_| CliError::Usage("bad seed".into()))
                })?
                .unwrap_or(DEFAULT_SEED);
            let reports = run_all(filter, seed);
            for r in &reports {
                eprintln!("{}", r.line());
            }
            let text = serde_json::to_string_pretty(&reports).unwrap();
            emit(&cli.output, &text)?;
            if reports.iter().any(|r| r.status == Status::Fail) {
                return Err(CliError::VerifyFailed);
            }
            Ok(())
        }
    }
}

fn find_global(
    defaults: &Defaults,
    ctx: &mut PbwContext,
    weight: &Option<String>,
    exp: &Option<String>,
    weight_key: &str,
    exp_key: &str,
) -> Result<cuspidal::gbasis::GlobalBasisElt, CliError> {
    let weight = RootVec {
        coords: defaults.require_str(weight, weight_key, parse_ints)?,
    };
    let exp = defaults.require_str(exp, exp_key, parse_exponent)?;
    let basis = dual_canonical_at_weight(ctx, &weight)?;
    basis
        .into_iter()
        .find(|g| g.exponent == exp)
        .ok_or_else(|| CliError::Usage(format!("no element labeled {exp} at weight {weight}")))
}

fn resolve_word(
    defaults: &Defaults,
    word: &Option<String>,
    rs: &Rc<RootSystem>,
) -> Result<ReducedWord, CliError> {
    match defaults.merge_str(word, "word", parse_word)? {
        Some(w) => Ok(w),
        None => Ok(enumerate_reduced_words(rs, 1).0.remove(0)),
    }
}

fn context_and_weight(
    defaults: &Defaults,
    cartan: &Option<String>,
    word: &Option<String>,
    weight: &Option<String>,
    height_bound: &Option<i64>,
) -> Result<(PbwContext, RootVec), CliError> {
    let cartan = defaults.require_str(cartan, "cartan", parse_cartan)?;
    let rs = root_system_for(&cartan)?;
    let word = resolve_word(defaults, word, &rs)?;
    let bound = defaults
        .merge_val(height_bound, "height-bound", |s| {
            s.parse().map_err(|_| CliError::Usage("bad height-bound".into()))
        })?
        .unwrap_or(6);
    let weight = RootVec {
        coords: defaults.require_str(weight, "weight", parse_ints)?,
    };
    if weight.coords.len() != rs.cartan.rank {
        return Err(CliError::Usage("weight length does not match the rank".into()));
    }
    let ctx = PbwContext::new(rs, &word, bound)?;
    Ok((ctx, weight))
}

fn ar_grid_tsv(ar: &cuspidal::qdata::ARQuiver) -> String {
    let min_p = ar.vertices.keys().map(|(_, p)| *p).min().unwrap();
    let max_p = ar.vertices.keys().map(|(_, p)| *p).max().unwrap();
    let max_i = ar.vertices.keys().map(|(i, _)| *i).max().unwrap();
    let mut t = String::from("i\\p");
    for p in min_p..=max_p {
        t.push_str(&format!("\t{p}"));
    }
    t.push('\n');
    for i in 1..=max_i {
        t.push_str(&i.to_string());
        for p in min_p..=max_p {
            match ar.vertices.get(&(i, p)) {
                Some(r) => t.push_str(&format!(
                    "\t{}",
                    r.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
                )),
                None => t.push('\t'),
            }
        }
        t.push('\n');
    }
    t.trim_end().to_string()
}
