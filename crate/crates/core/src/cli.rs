//! Command-line surface. Every subcommand prints JSON, CSV or plain text and maps library
//! errors to exit codes.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebraic::AlgBase;
use crate::b2core::{certify_b2, f_eval, prop62_pair, prop62_vectors, solve_qcd, v_base_witness, B2Witness};
use crate::bases::{alpha_digits, alpha_sequence, base_from_alpha, count_expansions, Count};
use crate::classify::{classify_alpha, probable_class, ALPHA_SEARCH};
use crate::dimension::{b2_local_bound, entropy, entropy_json, dim_from_entropy, local_bound_below_one};
use crate::enumerate::{derived_order_bound, enum_b2, ladder_entry, min_derived, qn_ladder};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::words::{omega, ComponentSpec, EPSeq, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_NOT_FOUND: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Parser)]
#[command(name = "univoque", about = "Expansions in non-integer bases and the bases of B₂")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Decimal digits printed for real numbers.
    #[arg(long, global = true, default_value_t = 30, value_parser = clap::value_parser!(u64).range(8..))]
    pub precision: u64,
    /// Largest finite exponent in representation vectors.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    pub jmax: u64,
    /// Largest ladder interval scanned.
    #[arg(long, global = true, default_value_t = 6)]
    pub nmax: usize,
    /// Search depth for digit expansions and expansion counts.
    #[arg(long, global = true, default_value_t = 64)]
    pub depth: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Digits of the quasi-greedy expansion of 1.
    Alpha {
        base: String,
        #[arg(long)]
        digits: Option<usize>,
    },
    /// U, Ubar\U, V\Ubar or not-V.
    Classify { base: String },
    /// The word ω_n of a component.
    Omega {
        #[arg(long, default_value = "0")]
        gen: String,
        #[arg(long)]
        n: usize,
    },
    /// The bases q_1 … q_N.
    Ladder {
        #[arg(long, default_value = "0")]
        gen: String,
        #[arg(long = "N", short = 'N')]
        big_n: usize,
    },
    /// The root of f_{c,d} on [lo, hi], with admissibility.
    Solve {
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        lo: String,
        #[arg(long)]
        hi: String,
    },
    /// B₂ ∩ (q_n, q_{n+1}] from vectors with j ≤ jmax.
    #[command(name = "enum-b2")]
    EnumB2 {
        #[arg(long)]
        n: usize,
    },
    /// Smallest base found with derived order at least J.
    Derived {
        #[arg(long)]
        min: usize,
    },
    /// Entropy of U'_q and the dimension of U_q.
    Entropy {
        base: String,
        /// Length of the longest word counted for the finite bounds.
        #[arg(long, default_value_t = 16)]
        n: usize,
    },
    /// Upper bound for the dimension of B₂ near q; `--delta auto` searches δ = 2^-k.
    #[command(name = "dim-bound")]
    DimBound {
        base: String,
        #[arg(long)]
        delta: String,
    },
    /// Number of expansions of x, up to a cap. x is `p/q` or `seq:SEQ`.
    Count {
        #[arg(long)]
        x: String,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 3)]
        cap: u64,
    },
    /// The two-expansion witness of a V-base, or the sign-changing pair at level N.
    Witness {
        #[arg(long)]
        gen: String,
        #[arg(long)]
        prop62: Option<usize>,
    },
}

/// What a command produced, in every format.
struct Output {
    json: Value,
    plain: String,
    table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
}

impl Output {
    fn new(json: Value, plain: impl Into<String>) -> Output {
        Output { json, plain: plain.into(), table: None }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// `p/q`, an integer, or a decimal such as `1.75`, exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || usage(format!("cannot read {s:?} as a rational"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((i, f)) = s.split_once('.') {
        if f.is_empty() || !f.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = format!("{i}{f}").parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), f.len());
        return Ok(BigRational::new(num, den));
    }
    Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?))
}

/// `poly:[c0,…,1]@[lo,hi]` or `alpha:SEQ`.
pub fn parse_base(spec: &str) -> Result<AlgBase> {
    let spec = spec.trim();
    if let Some(seq) = spec.strip_prefix("alpha:") {
        let a: EPSeq = seq.trim().trim_matches('"').parse()?;
        return base_from_alpha(&a);
    }
    if let Some(rest) = spec.strip_prefix("poly:") {
        let (coeffs, iv) = rest.split_once('@').ok_or_else(|| usage("expected poly:[c0,..,1]@[lo,hi]"))?;
        let list = |s: &str| -> Result<Vec<String>> {
            let inner = s.trim().strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(|| usage(format!("expected a bracketed list, got {s:?}")))?;
            Ok(inner.split(',').map(|x| x.trim().to_string()).collect())
        };
        let cs: Vec<BigInt> = list(coeffs)?.iter().map(|c| c.parse().map_err(|_| usage(format!("bad coefficient {c:?}")))).collect::<Result<_>>()?;
        let ends = list(iv)?;
        if ends.len() != 2 {
            return Err(usage("the interval needs two endpoints"));
        }
        let p = IntPoly::new(cs);
        if !p.is_monic() {
            return Err(usage("the polynomial must be monic"));
        }
        let (lo, hi) = (parse_rational(&ends[0])?, parse_rational(&ends[1])?);
        if p == IntPoly::from_i64(&[-2, 1]) {
            return Ok(AlgBase::two());
        }
        return AlgBase::from_poly_checked(&p, &lo, &hi);
    }
    Err(usage(format!("base spec {spec:?} is neither poly:… nor alpha:…")))
}

fn parse_seq(s: &str) -> Result<EPSeq> {
    s.trim().trim_matches('"').parse()
}

fn parse_word(s: &str) -> Result<Word> {
    s.trim().trim_matches('"').parse()
}

fn minpoly_json(q: &AlgBase) -> Value {
    Value::Array(q.minpoly().coeffs().iter().map(|c| i64::try_from(c).map(Value::from).unwrap_or_else(|_| c.to_string().into())).collect())
}

fn minpoly_text(q: &AlgBase) -> String {
    minpoly_json(q).to_string()
}

fn sign_text(s: num_bigint::Sign) -> &'static str {
    match s {
        num_bigint::Sign::Minus => "negative",
        num_bigint::Sign::NoSign => "zero",
        num_bigint::Sign::Plus => "positive",
    }
}

/// The ladder index `n` with `root ∈ (q_n, q_{n+1}]`, if `n ≤ nmax`.
fn interval_of(root: &AlgBase, nmax: usize) -> Option<usize> {
    let comp = ComponentSpec::first();
    (1..=nmax).find(|&n| {
        let (lo, hi) = (ladder_entry(&comp, n), ladder_entry(&comp, n + 1));
        matches!((lo, hi), (Ok(lo), Ok(hi)) if *root > lo.base && *root <= hi.base)
    })
}

fn witness_row(n: usize, w: &B2Witness, digits: usize) -> Vec<String> {
    vec![
        n.to_string(),
        w.root.approx(digits),
        minpoly_text(&w.root),
        w.c.to_string(),
        w.d.to_string(),
        w.derived_order.map(|o| o.to_string()).unwrap_or_default(),
        w.admissible.to_string(),
    ]
}

const WITNESS_COLUMNS: [&str; 7] = ["n", "root_approx", "minpoly", "c", "d", "derived_order", "admissible"];

fn execute(cfg: &RunConfig, err: &mut dyn Write) -> Result<Output> {
    let digits = cfg.precision as usize;
    match &cfg.command {
        Command::Alpha { base, digits: n } => {
            let q = parse_base(base)?;
            let n = n.unwrap_or(cfg.depth);
            let w = alpha_digits(&q, n);
            let periodic = alpha_sequence(&q, ALPHA_SEARCH).ok().map(|a| a.to_string());
            Ok(Output::new(json!({"base": q.to_json(digits), "digits": w.to_string(), "alpha": periodic}), w.to_string()))
        }
        Command::Classify { base } => {
            let q = parse_base(base)?;
            match alpha_sequence(&q, ALPHA_SEARCH) {
                Ok(a) => {
                    let c = classify_alpha(&a);
                    let mut j = serde_json::to_value(&c).expect("serializable");
                    j["alpha"] = a.to_string().into();
                    j["base"] = q.to_json(digits);
                    Ok(Output::new(j, format!("{}\t{}", c.tag.label(), a)))
                }
                Err(Error::UnsupportedBase(_)) => {
                    let tag = probable_class(&q, cfg.depth);
                    let j = json!({"class": tag.label(), "probable": true, "depth": cfg.depth, "base": q.to_json(digits)});
                    Ok(Output::new(j, format!("{}\t(probable, first {} digits)", tag.label(), cfg.depth)))
                }
                Err(e) => Err(e),
            }
        }
        Command::Omega { gen, n } => {
            let comp = ComponentSpec::new(parse_word(gen)?)?;
            let w = omega(&comp, *n);
            Ok(Output::new(json!({"gen": gen, "n": n, "omega": w.to_string()}), w.to_string()))
        }
        Command::Ladder { gen, big_n } => {
            if *big_n == 0 {
                return Err(Error::Domain("N must be at least 1".into()));
            }
            let comp = ComponentSpec::new(parse_word(gen)?)?;
            let entries = qn_ladder(&comp, *big_n)?;
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|e| vec![e.n.to_string(), e.base.approx(digits), minpoly_text(&e.base), e.alpha.to_string(), e.beta_word.to_string()])
                .collect();
            let j: Vec<Value> = entries
                .iter()
                .map(|e| json!({"n": e.n, "base": e.base.to_json(digits), "alpha": e.alpha.to_string(), "beta_word": e.beta_word.to_string()}))
                .collect();
            let plain = entries.iter().map(|e| format!("q{} = {}", e.n, e.base.approx(digits))).collect::<Vec<_>>().join("\n");
            Ok(Output { json: Value::Array(j), plain, table: Some((vec!["n", "root_approx", "minpoly", "alpha", "beta_word"], rows)) })
        }
        Command::Solve { c, d, lo, hi } => {
            let (c, d) = (parse_seq(c)?, parse_seq(d)?);
            let (lo, hi) = (parse_rational(lo)?, parse_rational(hi)?);
            match certify_b2(&c, &d, &lo, &hi)? {
                Some(w) => {
                    let plain = format!("{} {} admissible={}", w.root.approx(digits), minpoly_text(&w.root), w.admissible);
                    Ok(Output::new(w.to_json(digits), plain))
                }
                None => Ok(Output::new(json!({"c": c.to_string(), "d": d.to_string(), "root": null}), "no root in the bracket")),
            }
        }
        Command::EnumB2 { n } => {
            let jmax = cfg.jmax as usize;
            writeln!(err, "# complete only for vectors with every j <= {jmax}").ok();
            let ws = enum_b2(*n, jmax)?;
            let rows: Vec<Vec<String>> = ws.iter().map(|w| witness_row(*n, w, digits)).collect();
            let j: Vec<Value> = ws
                .iter()
                .map(|w| {
                    let mut v = w.to_json(digits);
                    v["n"] = (*n).into();
                    v
                })
                .collect();
            Ok(Output { json: Value::Array(j), plain: String::new(), table: Some((WITNESS_COLUMNS.to_vec(), rows)) })
        }
        Command::Derived { min } => {
            let jmax = cfg.jmax as usize;
            writeln!(err, "# searched n <= {}, j <= {jmax}", cfg.nmax).ok();
            let w = min_derived(*min, jmax, cfg.nmax)?;
            let n = interval_of(&w.root, cfg.nmax.max(1)).unwrap_or(0);
            let mut j = w.to_json(digits);
            j["n"] = n.into();
            j["j"] = (*min).into();
            let plain = format!("{} order {} in (q_{n}, q_{}]", w.root.approx(digits), w.derived_order.unwrap_or(0), n + 1);
            Ok(Output { json: j, plain, table: Some((WITNESS_COLUMNS.to_vec(), vec![witness_row(n, &w, digits)])) })
        }
        Command::Entropy { base, n } => {
            let q = parse_base(base)?;
            let h = entropy(&q, *n)?;
            let j = entropy_json(&q, &h);
            let d = dim_from_entropy(&q, &h);
            let (hl, hh) = h.log_bounds();
            let plain = if d.exact {
                format!("entropy {} dim {} states {}", j["entropy_log"].as_str().unwrap_or(""), d.lo, h.states)
            } else {
                format!("entropy [{hl:.12}, {hh:.12}] dim [{:.12}, {:.12}] states {}", d.lo, d.hi, h.states)
            };
            Ok(Output::new(j, plain))
        }
        Command::DimBound { base, delta } => {
            let q = parse_base(base)?;
            let b = if delta == "auto" { local_bound_below_one(&q, 40)? } else { b2_local_bound(&q, &parse_rational(delta)?)? };
            let mut j = serde_json::to_value(&b).expect("serializable");
            j["alpha_upper"] = b.alpha_upper.to_string().into();
            j["base"] = q.to_json(digits);
            let plain = format!("dim_H(B2 ∩ (q-δ, q+δ)) <= {:.12} at δ = {}", b.bound[1], b.delta);
            Ok(Output::new(j, plain))
        }
        Command::Count { x, base, cap } => {
            let q = parse_base(base)?;
            let xv = if let Some(s) = x.strip_prefix("seq:") { q.eval(&parse_seq(s)?) } else { q.from_rational(&parse_rational(x)?) };
            let c = count_expansions(&xv, &q, *cap, cfg.depth)?;
            let (kind, k) = match c {
                Count::Exact(k) => ("exact", k),
                Count::AtLeast(k) => ("at_least", k),
            };
            let plain = match c {
                Count::Exact(k) => format!("exactly {k}"),
                Count::AtLeast(k) => format!("at least {k}"),
            };
            Ok(Output::new(json!({"x": x, "count": k, "kind": kind, "cap": cap}), plain))
        }
        Command::Witness { gen, prop62 } => {
            let g = parse_word(gen)?;
            match prop62 {
                None => {
                    let w = v_base_witness(&g)?;
                    let plain = format!("c = {}  d = {}  root = {} admissible={}", w.c, w.d, w.root.approx(digits), w.admissible);
                    Ok(Output::new(w.to_json(digits), plain))
                }
                Some(n) => {
                    let comp = ComponentSpec::new(g)?;
                    let (c, d) = prop62_pair(&comp, *n)?;
                    let (lo, hi) = (ladder_entry(&comp, *n)?, ladder_entry(&comp, n + 1)?);
                    let (sl, sh) = (f_eval(&c, &d, &lo.base).sign(), f_eval(&c, &d, &hi.base).sign());
                    let mut j = json!({"c": c.to_string(), "d": d.to_string(), "n": n, "sign_at_qn": sign_text(sl), "sign_at_qn1": sign_text(sh)});
                    let (a, _) = lo.base.interval();
                    let (_, b) = hi.base.interval();
                    let mut plain = format!("c = {c}  d = {d}\nf(q_{n}) {}  f(q_{}) {}", sign_text(sl), n + 1, sign_text(sh));
                    if let Some(root) = solve_qcd(&c, &d, &a, &b)? {
                        let mut w = B2Witness::new(c, d, root)?;
                        if comp == ComponentSpec::first() {
                            let ((_, v), (_, vt)) = prop62_vectors(&comp, *n)?;
                            w.representations.push((v, vt));
                            w.derived_order = derived_order_bound(&w, *n).ok();
                        }
                        plain.push_str(&format!("\nroot = {} admissible={} derived_order={:?}", w.root.approx(digits), w.admissible, w.derived_order));
                        j["witness"] = w.to_json(digits);
                    }
                    Ok(Output::new(j, plain))
                }
            }
        }
    }
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()
}

/// Flatten a JSON object into one CSV row.
fn object_row(v: &Value) -> (Vec<String>, Vec<String>) {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| (k.clone(), match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            }))
            .unzip(),
        other => (vec!["value".into()], vec![other.to_string()]),
    }
}

fn emit(cfg: &RunConfig, o: &Output, out: &mut dyn Write) -> std::io::Result<()> {
    match (cfg.format, &o.table) {
        (Format::Json, _) => writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("serializable")),
        (Format::Csv, Some((h, rows))) => write_csv(out, h, rows),
        (Format::Plain, Some((h, rows))) if o.plain.is_empty() => write_csv(out, h, rows),
        (Format::Csv, None) => {
            let (h, r) = object_row(&o.json);
            let h: Vec<&str> = h.iter().map(String::as_str).collect();
            write_csv(out, &h, &[r])
        }
        (Format::Plain, _) => writeln!(out, "{}", o.plain),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotFoundWithinBounds(_) => EXIT_NOT_FOUND,
        Error::Parse(_) => EXIT_USAGE,
        Error::Domain(_) | Error::UnsupportedBase(_) | Error::NoRootByCase(_) => EXIT_DOMAIN,
    }
}

/// Run with `argv` (program name first), returning the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            if code == EXIT_OK {
                write!(out, "{}", e.render()).ok();
            } else {
                write!(err, "{}", e.render()).ok();
            }
            return code;
        }
    };
    match execute(&cfg, err) {
        Ok(o) => match emit(&cfg, &o, out) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                writeln!(err, "write error: {e}").ok();
                1
            }
        },
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("17/10").unwrap(), BigRational::new(17.into(), 10.into()));
        assert_eq!(parse_rational("1.75").unwrap(), BigRational::new(7.into(), 4.into()));
        assert_eq!(parse_rational("2").unwrap(), BigRational::from_integer(2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn base_specs() {
        let q = parse_base("poly:[-1,-1,1]@[3/2,2]").unwrap();
        assert_eq!(q.approx(5), "1.61803");
        let q = parse_base("alpha:(1100)").unwrap();
        assert_eq!(q.approx(5), "1.75487");
        assert!(parse_base("alpha:1*").unwrap().is_two());
        assert!(matches!(parse_base("poly:[-1,-1]@[1,2]"), Err(Error::Parse(_))));
        assert!(matches!(parse_base("nonsense"), Err(Error::Parse(_))));
    }
}
