use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};
use singspec::bounds::{alpha1_threshold, candidate_region, degree_bound, dimension_excluded, ell, lemma1_region_k2};
use singspec::huh_lists::verify_huh_lists;
use singspec::polar::huh_inequality_holds;
use singspec::scalar::{fmt_rational, parse_rational};
use singspec::search::{enumerate_configurations, Filter, SearchOptions};
use singspec::semicontinuity::{check, check_configuration, SemicontinuityReport};
use singspec::{BigInt, Bound, Error, Family, GermClass, GermKind, Rational, Result, Spectrum, WindowKind};

use crate::source;
use crate::{BoundsCmd, Command, Kind, Side, SpectrumCmd};

/// Result of one command in both output formats.
pub struct Output {
    pub json: Value,
    pub text: String,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Output { json, text: text.into() }
    }
}

/// `(command path, library operation, example arguments)` for every subcommand.
#[cfg_attr(not(test), allow(dead_code))]
pub const DISPATCH: &[(&str, &str, &[&str])] = &[
    ("spectrum germ", "GermClass::germ_spectrum", &["spectrum", "germ", "E6", "--vars", "3"]),
    ("spectrum table", "GermKind::table_spectrum", &["spectrum", "table", "E7"]),
    ("spectrum fermat", "fermat_spectrum", &["spectrum", "fermat", "4", "3"]),
    ("spectrum weights", "spectrum_from_weights", &["spectrum", "weights", "1/3", "1/4"]),
    ("spectrum make", "Spectrum::from_pairs", &["spectrum", "make", "-1/6:1", "1/6:1"]),
    ("spectrum sum", "Spectrum::sum", &["spectrum", "sum", "germ:A2", "germ:A1"]),
    ("spectrum join", "Spectrum::join", &["spectrum", "join", "fermat:1,3", "fermat:1,3"]),
    ("spectrum shift", "Spectrum::shift", &["spectrum", "shift", "germ:A2", "-1/2"]),
    ("spectrum suspend", "Spectrum::suspend", &["spectrum", "suspend", "germ:A2", "2"]),
    ("spectrum info", "Spectrum::is_symmetric", &["spectrum", "info", "fermat:5,3", "--center", "3/2"]),
    ("deg", "Spectrum::deg_window", &["deg", "fermat:5,3", "--from", "1", "--to", "2", "--right", "open"]),
    ("window", "Spectrum::unit_window", &["window", "fermat:4,3", "2/3", "--kind", "open"]),
    ("germ", "GermKind::milnor", &["germ", "J2_4"]),
    ("catalog", "GermKind::up_to_milnor", &["catalog", "8", "--families", "D,E"]),
    ("pol", "Configuration::polar_degree", &["pol", "--config", "2,4:D4,A1,A1,A1"]),
    ("huh", "huh_inequality_holds", &["huh", "--config", "2,4:A7", "--k", "2"]),
    ("check", "check_configuration", &["check", "--config", "3,3:E6"]),
    ("compare", "semicontinuity::check", &["compare", "germ:A2", "fermat:2,3"]),
    ("search", "enumerate_configurations", &["search", "2", "3", "2"]),
    ("region", "candidate_region", &["region", "2"]),
    ("bounds ell", "ell", &["bounds", "ell", "3", "2"]),
    ("bounds degree", "degree_bound", &["bounds", "degree", "3", "2"]),
    ("bounds dim", "dimension_excluded", &["bounds", "dim", "40", "3"]),
    ("bounds alpha1", "alpha1_threshold", &["bounds", "alpha1", "5", "2"]),
    ("bounds refined-k2", "lemma1_region_k2", &["bounds", "refined-k2"]),
    ("verify-huh", "verify_huh_lists", &["verify-huh"]),
];

pub fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Spectrum(s) => spectrum(s),
        Command::Deg { source, from, to, left, right } => {
            let s = source::spectrum(source)?;
            let (lo, hi) = (parse_bound(from)?, parse_bound(to)?);
            let (lo_open, hi_open) = (*left == Side::Open, *right == Side::Open);
            let deg = s.deg_window(&lo, &hi, lo_open, hi_open)?;
            let window = format!("{}{lo},{hi}{}", if lo_open { "]" } else { "[" }, if hi_open { "[" } else { "]" });
            Ok(Output::new(json!({ "window": window, "deg": deg }), format!("deg {window} = {deg}")))
        }
        Command::Window { source, a, kind } => {
            let s = source::spectrum(source)?;
            let a = parse_rational(a)?;
            let kind = window_kind(*kind);
            let deg = s.unit_window(&a, kind);
            let close = if kind.right_open() { "[" } else { "]" };
            let window = format!(
                "]{},{}{close}",
                fmt_rational(&a),
                fmt_rational(&(a.clone() + Rational::from_integer(1.into())))
            );
            Ok(Output::new(json!({ "window": window, "kind": kind, "deg": deg }), format!("deg {window} = {deg}")))
        }
        Command::Germ { class, vars } => germ(class, *vars),
        Command::Catalog { max_mu, families } => {
            let families = parse_families(families.as_deref())?;
            let kinds = GermKind::up_to_milnor(*max_mu, &families);
            let rows: Vec<Value> = kinds.iter().map(|k| json!({ "class": k, "mu": k.milnor().ok() })).collect();
            let mut text = String::new();
            for k in &kinds {
                let _ = writeln!(text, "{k:<8} mu = {}", k.milnor()?);
            }
            Ok(Output::new(Value::Array(rows), text))
        }
        Command::Pol { config } => {
            let c = source::configuration(config)?;
            let pol = c.polar_degree()?;
            Ok(Output::new(
                json!({ "config": c, "total_milnor": c.total_milnor(), "polar_degree": pol }),
                format!("{c}\ntotal mu = {}\npol = {pol}", c.total_milnor()),
            ))
        }
        Command::Huh { config, k } => {
            let c = source::configuration(config)?;
            let holds = huh_inequality_holds(&c, *k);
            Ok(Output::new(
                json!({ "config": c, "k": k, "holds": holds }),
                format!("{c}, k = {k}: {}", if holds { "holds" } else { "fails" }),
            ))
        }
        Command::Check { config, no_open_variant } => {
            let c = source::configuration(config)?;
            let report = check_configuration::<BigInt>(&c, !no_open_variant)?;
            let text = format!("{c}\n{}", report_text(&report));
            Ok(Output::new(json!({ "config": c, "report": report }), text))
        }
        Command::Compare { candidate, target, kind } => {
            let (cand, target) = (source::spectrum(candidate)?, source::spectrum(target)?);
            let report = check(&cand, &target, window_kind(*kind));
            Ok(Output::new(to_json(&report), report_text(&report)))
        }
        Command::Search { n, d, k, whitelist, no_filter, no_open_variant, threads } => {
            let mut opts = match whitelist {
                Some(w) => SearchOptions::with_whitelist(parse_families(Some(w))?),
                None => SearchOptions::for_polar_degree(*k)?,
            };
            for name in no_filter {
                opts = opts.without(name.parse::<Filter>()?);
            }
            opts.open_variant = !no_open_variant;
            let report = match threads {
                Some(0) => return Err(Error::InvalidArgument("--threads must be positive".into())),
                Some(1) => enumerate_configurations(*n, *d, *k, &opts.serial())?,
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*t)
                    .build()
                    .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?
                    .install(|| enumerate_configurations(*n, *d, *k, &opts))?,
                None => enumerate_configurations(*n, *d, *k, &opts)?,
            };
            let mut text = format!("(n, d, k) = ({n}, {d}, {k}), total Milnor number {}\n", report.target_mu);
            let filters: Vec<&str> = report.filters_applied.iter().map(|f| f.name()).collect();
            let _ = writeln!(text, "filters: {}", if filters.is_empty() { "none".into() } else { filters.join(", ") });
            let _ = writeln!(text, "examined: {}", report.examined);
            for (name, count) in &report.pruned_by {
                let _ = writeln!(text, "pruned by {name}: {count}");
            }
            let _ = writeln!(text, "candidates: {}", report.survivors.len());
            for c in &report.survivors {
                let _ = writeln!(text, "  {c}");
            }
            for w in &report.diagnostics {
                let _ = writeln!(text, "target deg {} = {}", w.window, w.target_degree);
            }
            Ok(Output::new(to_json(&report), text))
        }
        Command::Region { k } => {
            let r = candidate_region(*k)?;
            let pairs: Vec<String> = r.pairs.iter().map(|(n, d)| format!("({n}, {d})")).collect();
            let mut text =
                format!("k = {k}: {} candidate pairs in [2, {}] x [2, {}]\n", r.pairs.len(), r.n_max, r.d_max);
            let _ = writeln!(text, "{}", pairs.join(" "));
            for note in &r.notes {
                let _ = writeln!(text, "note: {note}");
            }
            Ok(Output::new(to_json(&r), text))
        }
        Command::Bounds(b) => bounds(b),
        Command::VerifyHuh => {
            let v = verify_huh_lists()?;
            let mut text = String::new();
            for e in &v.entries {
                let verdict = if e.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(text, "{verdict} {:>4} {} pol = {}", e.id, e.config, e.expected_pol);
                for line in &e.diagnosis {
                    let _ = writeln!(text, "       {line}");
                }
            }
            let _ = writeln!(text, "{}/{} entries pass", v.passed, v.total);
            Ok(Output::new(to_json(&v), text))
        }
    }
}

fn spectrum(cmd: &SpectrumCmd) -> Result<Output> {
    let s = match cmd {
        SpectrumCmd::Germ { class, vars } => GermClass::new(class.parse()?, *vars).germ_spectrum()?,
        SpectrumCmd::Table { class } => {
            let row = class.parse::<GermKind>()?.table_spectrum::<BigInt>()?;
            let mut text = format!("{}\ntotal {}", row.spectrum, row.spectrum.total());
            if let Some(note) = row.discrepancy {
                let _ = write!(text, "\nnote: {note}");
            }
            return Ok(Output::new(json!({ "spectrum": row.spectrum, "discrepancy": row.discrepancy }), text));
        }
        SpectrumCmd::Fermat { n, d } => singspec::fermat_spectrum(*n, *d)?,
        SpectrumCmd::Weights { w1, w2 } => singspec::spectrum_from_weights(&parse_rational(w1)?, &parse_rational(w2)?)?,
        SpectrumCmd::Make { pairs } => {
            let parsed = pairs
                .iter()
                .map(|p| {
                    let (v, m) = p.rsplit_once(':').unwrap_or((p.as_str(), "1"));
                    let m = m.parse::<u64>().map_err(|_| Error::Parse(format!("multiplicity in `{p}`")))?;
                    Ok((parse_rational(v)?, m))
                })
                .collect::<Result<Vec<_>>>()?;
            Spectrum::from_pairs(parsed)?
        }
        SpectrumCmd::Sum { a, b } => source::spectrum(a)?.sum(&source::spectrum(b)?),
        SpectrumCmd::Join { a, b } => source::spectrum(a)?.join(&source::spectrum(b)?),
        SpectrumCmd::Shift { source: src, q } => source::spectrum(src)?.shift(&parse_rational(q)?),
        SpectrumCmd::Suspend { source: src, m } => source::spectrum(src)?.suspend(*m),
        SpectrumCmd::Info { source: src, center } => {
            let s = source::spectrum(src)?;
            let center = center.as_deref().map(parse_rational).transpose()?;
            let symmetric = center.as_ref().map(|c| s.is_symmetric(c));
            let (min, max) = (s.min_spectral().ok().map(fmt_rational), s.max_spectral().ok().map(fmt_rational));
            let mut text = format!("{s}\ntotal {}\nsupport {}", s.total(), s.support_len());
            if let (Some(lo), Some(hi)) = (&min, &max) {
                let _ = write!(text, "\nrange [{lo}, {hi}]");
            }
            if let (Some(c), Some(sym)) = (&center, symmetric) {
                let _ = write!(text, "\nsymmetric about {}: {sym}", fmt_rational(c));
            }
            return Ok(Output::new(
                json!({
                    "spectrum": s,
                    "total": s.total(),
                    "support": s.support_len(),
                    "min": min,
                    "max": max,
                    "center": center.as_ref().map(fmt_rational),
                    "symmetric": symmetric,
                }),
                text,
            ));
        }
    };
    Ok(Output::new(to_json(&s), format!("{s}\ntotal {}", s.total())))
}

fn germ(class: &str, vars: u32) -> Result<Output> {
    let kind: GermKind = class.parse()?;
    let g = GermClass::new(kind, vars);
    let mu = g.milnor()?;
    let weights = kind.weights::<BigInt>().ok().map(|(w1, w2)| [fmt_rational(&w1), fmt_rational(&w2)]);
    let s: Spectrum = g.germ_spectrum()?;
    let min = fmt_rational(s.min_spectral()?);
    let mut text = format!("{kind} in {vars} variables\nmu = {mu}\ncorank = {}\n", g.corank());
    let _ = writeln!(text, "curve multiplicity = {}", kind.multiplicity_curve());
    match &weights {
        Some([w1, w2]) => {
            let _ = writeln!(text, "weights = ({w1}, {w2})");
        }
        None => text.push_str("not weighted homogeneous\n"),
    }
    let _ = writeln!(text, "smallest spectral number = {min}");
    Ok(Output::new(
        json!({
            "class": kind,
            "family": kind.family(),
            "vars": vars,
            "mu": mu,
            "corank": g.corank(),
            "curve_multiplicity": kind.multiplicity_curve(),
            "weighted_homogeneous": kind.is_weighted_homogeneous(),
            "weights": weights,
            "min_spectral": min,
        }),
        text,
    ))
}

fn bounds(cmd: &BoundsCmd) -> Result<Output> {
    Ok(match cmd {
        BoundsCmd::Ell { n, k } => {
            let l = ell(*n, *k);
            Output::new(json!({ "n": n, "k": k, "ell": l }), format!("ell({n}, {k}) = {l}"))
        }
        BoundsCmd::Degree { n, k } => {
            let b = fmt_rational(&degree_bound(*n, *k)?);
            Output::new(json!({ "n": n, "k": k, "degree_bound": b }), format!("d < {b}"))
        }
        BoundsCmd::Dim { n, k } => {
            let excluded = dimension_excluded(*n, *k)?;
            let text = format!("n = {n}, k = {k}: {}", if excluded { "excluded" } else { "not excluded" });
            Output::new(json!({ "n": n, "k": k, "excluded": excluded }), text)
        }
        BoundsCmd::Alpha1 { n, k } => {
            let t = fmt_rational(&alpha1_threshold(*n, *k)?);
            Output::new(json!({ "n": n, "k": k, "alpha1_threshold": t }), format!("alpha_1 > {t}"))
        }
        BoundsCmd::RefinedK2 => {
            let r = lemma1_region_k2();
            let pairs: Vec<[u32; 2]> = r.iter().map(|&(n, d)| [n, d]).collect();
            let text = r.iter().map(|(n, d)| format!("({n}, {d})")).collect::<Vec<_>>().join(" ");
            Output::new(json!({ "pairs": pairs }), text)
        }
    })
}

fn report_text<T: singspec::SpectralInt>(r: &SemicontinuityReport<T>) -> String {
    let kinds: Vec<&str> = r.kinds.iter().map(|k| k.label()).collect();
    let mut text = format!(
        "semicontinuity {} ({} windows: {} positions)",
        if r.holds { "holds" } else { "fails" },
        kinds.join(" and "),
        r.breakpoints_checked
    );
    for v in &r.violations {
        let close = if v.kind.right_open() { "[" } else { "]" };
        let b = v.a.clone() + T::one();
        let _ = write!(text, "\n  ]{}, {}{close}: {} > {}", fmt_rational(&v.a), fmt_rational(&b), v.lhs, v.rhs);
    }
    text
}

fn window_kind(k: Kind) -> WindowKind {
    match k {
        Kind::Open => WindowKind::OpenOpen,
        Kind::Half => WindowKind::OpenClosed,
    }
}

fn parse_bound(s: &str) -> Result<Bound> {
    match s.trim() {
        "-inf" | "−inf" => Ok(Bound::NegInf),
        "+inf" | "inf" => Ok(Bound::PosInf),
        other => Ok(Bound::Finite(parse_rational(other)?)),
    }
}

fn parse_families(s: Option<&str>) -> Result<Vec<Family>> {
    let Some(s) = s else { return Ok(Family::ALL.to_vec()) };
    let set = s.split(',').map(|f| f.trim().parse::<Family>()).collect::<Result<BTreeSet<_>>>()?;
    Ok(set.into_iter().collect())
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}
