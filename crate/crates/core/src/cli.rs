//! Run configuration, the report-producing commands, and report rendering.
//!
//! Every command returns a [`Report`]:
//!
//! ```text
//! { schema_version, command, config_echo, results: [{check, status, data, witness?}], timings }
//! ```
//!
//! Text and JSON renderings carry the same statuses. [`Report::exit_code`] is
//! 0 when no check failed and 2 otherwise; usage and parse errors (exit 1)
//! surface as [`Error`] before a report exists.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::freemonoid::{self, FreeWord, ReversibleLemmaCheck};
use crate::group::{
    canonical_tails, completeness_check, default_coset_cap, embedding_check, growth_g,
    index_report, normal_form, todd_coxeter_with_cap, verify_lemma_identities, CosetTable,
    EmbeddingVerdict, UniversalGroup, DEFAULT_STATE_CAP,
};
use crate::monoid::{self, cancellativity_check, decomposition_t, growth_s, Cancellativity};
use crate::permgroup::PermGroup;
use crate::presentation::Presentation;
use crate::word::{all_signed_words, PosWord, SignedWord};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest reduced-word count the completeness check may enumerate.
const COMPLETENESS_WORD_CAP: usize = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!(
                "unknown format {other:?}, expected text or json"
            ))),
        }
    }
}

/// Everything a command needs; echoed verbatim in each report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub l: Option<usize>,
    /// Generators of `H` in cycle notation.
    pub perms: Vec<String>,
    /// Word-length bound for cancellativity, embedding and decomposition.
    pub length_bound: usize,
    pub mmax_monoid: usize,
    pub mmax_group: usize,
    /// Relation-path horizon for the completeness check and search depth for
    /// free-monoid reversibility.
    pub depth: usize,
    /// Largest block length in the rewriting identities.
    pub u_max: usize,
    /// Longest signed word used in normal-form and completeness checks.
    pub word_length: usize,
    pub seed: u64,
    pub format: Format,
    pub parallel: bool,
    pub coset_cap: Option<usize>,
    pub state_cap: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: None,
            l: None,
            perms: Vec::new(),
            length_bound: 6,
            mmax_monoid: 10,
            mmax_group: 8,
            depth: 6,
            u_max: 3,
            word_length: 4,
            seed: crate::group::DEFAULT_LEMMA_SEED,
            format: Format::Text,
            parallel: false,
            coset_cap: None,
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("{key}: cannot parse {value:?}")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value.trim() {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        other => Err(Error::Config(format!(
            "{key}: expected a boolean, got {other:?}"
        ))),
    }
}

impl RunConfig {
    /// Sets one option from its textual form. Keys accept `-` or `_`;
    /// `perm` appends, `perms` replaces with a `;`-separated list.
    pub fn apply(&mut self, key: &str, value: &str) -> Result<()> {
        let key = key.trim().replace('-', "_");
        let value = value.trim();
        match key.as_str() {
            "n" => self.n = Some(parse_num(&key, value)?),
            "l" => self.l = Some(parse_num(&key, value)?),
            "perm" => self.perms.push(value.to_string()),
            "perms" => {
                self.perms = value
                    .split(';')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(String::from)
                    .collect()
            }
            "length_bound" => self.length_bound = parse_num(&key, value)?,
            "mmax" => {
                let m = parse_num(&key, value)?;
                self.mmax_monoid = m;
                self.mmax_group = m;
            }
            "mmax_monoid" => self.mmax_monoid = parse_num(&key, value)?,
            "mmax_group" => self.mmax_group = parse_num(&key, value)?,
            "depth" => self.depth = parse_num(&key, value)?,
            "u_max" => self.u_max = parse_num(&key, value)?,
            "word_length" => self.word_length = parse_num(&key, value)?,
            "seed" => self.seed = parse_num(&key, value)?,
            "format" => self.format = value.parse()?,
            "parallel" => self.parallel = parse_bool(&key, value)?,
            "coset_cap" => self.coset_cap = Some(parse_num(&key, value)?),
            "state_cap" => self.state_cap = parse_num(&key, value)?,
            other => return Err(Error::Config(format!("unknown key {other:?}"))),
        }
        Ok(())
    }

    /// Applies a `key = value` file. Blank lines and `#` comments are skipped;
    /// values may be wrapped in double quotes.
    pub fn apply_file_text(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            let value = value.trim();
            let value = value
                .strip_prefix('"')
                .and_then(|v| v.strip_suffix('"'))
                .unwrap_or(value);
            self.apply(key, value)?;
        }
        Ok(())
    }

    pub fn presentation(&self) -> Result<Presentation> {
        let n = self
            .n
            .ok_or_else(|| Error::Config("n is required".into()))?;
        let l = self
            .l
            .ok_or_else(|| Error::Config("l is required".into()))?;
        if n == 0 {
            return Err(Error::Config("n must be at least 1".into()));
        }
        for (name, v) in [
            ("length_bound", self.length_bound),
            ("depth", self.depth),
            ("u_max", self.u_max),
        ] {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be positive")));
            }
        }
        Presentation::new(n, l, PermGroup::from_cycles(n, &self.perms)?)
    }

    fn coset_table(&self, p: &Presentation) -> Result<CosetTable> {
        todd_coxeter_with_cap(p, self.coset_cap.unwrap_or_else(|| default_coset_cap(p)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CheckResult {
    fn new(check: &str, status: Status, data: Value) -> Self {
        CheckResult {
            check: check.to_string(),
            status,
            data,
            witness: None,
        }
    }

    fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    fn error(check: &str, err: &Error) -> Self {
        CheckResult::new(check, Status::Fail, json!({ "error": err.to_string() }))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timing {
    pub check: String,
    pub millis: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub config_echo: RunConfig,
    pub results: Vec<CheckResult>,
    pub timings: Vec<Timing>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }

    pub fn result(&self, check: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let header = match (self.config_echo.n, self.config_echo.l) {
            (Some(n), Some(l)) => format!(
                "{} n={n} l={l} H=<{}>",
                self.command,
                self.config_echo.perms.join(", ")
            ),
            _ => self.command.clone(),
        };
        let _ = writeln!(out, "{header}");
        for r in &self.results {
            let _ = writeln!(out, "{:<5} {}", r.status.label(), r.check);
            render_fields(&mut out, &r.data);
            if let Some(w) = &r.witness {
                let _ = writeln!(out, "      witness: {}", compact(w));
            }
        }
        let count = |s: Status| self.results.iter().filter(|r| r.status == s).count();
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} info",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Info)
        );
        let total: f64 = self.timings.iter().map(|t| t.millis).sum();
        let _ = writeln!(out, "time: {total:.1} ms");
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json() + "\n",
        }
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_fields(out: &mut String, data: &Value) {
    match data {
        Value::Object(map) => {
            for (k, v) in map {
                let _ = writeln!(out, "      {k}: {}", compact(v));
            }
        }
        Value::Null => {}
        other => {
            let _ = writeln!(out, "      {}", compact(other));
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values are plain JSON")
}

type Check<'a> = (
    &'static str,
    Box<dyn Fn() -> CheckResult + Send + Sync + 'a>,
);

fn run_checks(command: &str, config: &RunConfig, checks: Vec<Check<'_>>) -> Report {
    let timed = |(name, f): &Check<'_>| {
        let start = Instant::now();
        let r = f();
        (
            r,
            Timing {
                check: name.to_string(),
                millis: start.elapsed().as_secs_f64() * 1e3,
            },
        )
    };
    let outcomes: Vec<(CheckResult, Timing)> = if config.parallel {
        std::thread::scope(|s| {
            let handles: Vec<_> = checks.iter().map(|c| s.spawn(move || timed(c))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("check thread panicked"))
                .collect()
        })
    } else {
        checks.iter().map(timed).collect()
    };
    let (results, timings) = outcomes.into_iter().unzip();
    Report {
        schema_version: SCHEMA_VERSION,
        command: command.to_string(),
        config_echo: config.clone(),
        results,
        timings,
    }
}

fn presentation_data(p: &Presentation) -> Value {
    let c = p.group().classify();
    json!({
        "presentation": p.summary(),
        "classification": c,
    })
}

/// Orbits, representatives and the hypothesis predicates on `H`.
pub fn cmd_classify(config: &RunConfig) -> Result<Report> {
    let p = config.presentation()?;
    let checks: Vec<Check<'_>> = vec![(
        "classify",
        Box::new(|| {
            let mut data = presentation_data(&p);
            let c = p.group().classify();
            data["relation_count_bound"] =
                json!(p.group().generators().len() * p.n().pow(p.l() as u32));
            data["free"] = json!(p.group().order() == 1);
            data["growth_predicted"] = json!(if c.transitive {
                "linear"
            } else {
                "exponential"
            });
            CheckResult::new("classify", Status::Info, data)
        }),
    )];
    Ok(run_checks("classify", config, checks))
}

/// Verdicts of the structural checks on one presentation.
pub fn cmd_verify(config: &RunConfig) -> Result<Report> {
    let p = config.presentation()?;
    let ct = config.coset_table(&p)?;
    let p = &p;
    let ct = &ct;
    let cls = p.group().classify();
    let bound = config.length_bound.max(p.l());
    let mut checks: Vec<Check<'_>> = Vec::new();

    if p.group().order() == 1 {
        checks.push((
            "free_shortcut",
            Box::new(move || {
                CheckResult::new(
                    "free_shortcut",
                    Status::Info,
                    json!({
                        "monoid": format!("free monoid of rank {}", p.n()),
                        "group": format!("free group of rank {}", p.n()),
                        "index": 1,
                    }),
                )
            }),
        ));
    }

    checks.push((
        "index_bound",
        Box::new(move || match index_report(p, ct) {
            Ok(r) => {
                let valid = ct.validate(p);
                let ok = valid && r.within_bound && r.ker_pi_order == r.index;
                let mut data = to_value(&r);
                data["table_valid"] = json!(valid);
                CheckResult::new(
                    "index_bound",
                    if ok { Status::Pass } else { Status::Fail },
                    data,
                )
            }
            Err(e) => CheckResult::error("index_bound", &e),
        }),
    ));

    checks.push((
        "lemma_identities",
        Box::new(move || {
            let r = verify_lemma_identities(p, ct, config.u_max, config.seed);
            let data = json!({
                "instances": r.checked(),
                "failures": r.failures(),
                "seed": r.seed,
                "families": r.families.iter().map(|f| json!({
                    "identity": f.identity,
                    "u": f.u,
                    "instances": f.instances,
                    "exhaustive": f.exhaustive,
                    "failures": f.failures,
                })).collect::<Vec<_>>(),
            });
            let first = r.families.iter().find_map(|f| f.first_failure.clone());
            let res = CheckResult::new(
                "lemma_identities",
                if r.passed() {
                    Status::Pass
                } else {
                    Status::Fail
                },
                data,
            );
            match first {
                Some(f) => res.with_witness(to_value(&f)),
                None => res,
            }
        }),
    ));

    checks.push((
        "normal_form",
        Box::new(move || normal_form_check(p, ct, config.word_length)),
    ));

    checks.push((
        "embedding",
        Box::new(move || match embedding_check(p, ct, bound) {
            Ok(v) => {
                let status = match &v {
                    EmbeddingVerdict::Inconsistent { .. } => Status::Fail,
                    EmbeddingVerdict::NonEmbedding { .. } if cls.cancellative_predicted => {
                        Status::Fail
                    }
                    _ => Status::Pass,
                };
                let data = json!({
                    "bound": bound,
                    "verdict": match &v {
                        EmbeddingVerdict::Consistent { .. } => "consistent",
                        EmbeddingVerdict::NonEmbedding { .. } => "non_embedding",
                        EmbeddingVerdict::Inconsistent { .. } => "inconsistent",
                    },
                    "h_abelian": cls.abelian,
                });
                let res = CheckResult::new("embedding", status, data);
                match v {
                    EmbeddingVerdict::Consistent { .. } => res,
                    other => res.with_witness(to_value(&other)),
                }
            }
            Err(e) => CheckResult::error("embedding", &e),
        }),
    ));

    checks.push((
        "cancellativity",
        Box::new(move || match cancellativity_check(p, bound) {
            Ok(v) => {
                let agrees = v.is_cancellative() == cls.cancellative_predicted;
                let data = json!({
                    "bound": bound,
                    "cancellative_up_to_bound": v.is_cancellative(),
                    "predicted": cls.cancellative_predicted,
                });
                let res = CheckResult::new(
                    "cancellativity",
                    if agrees { Status::Pass } else { Status::Fail },
                    data,
                );
                match v {
                    Cancellativity::Witness { .. } => res.with_witness(to_value(&v)),
                    _ => res,
                }
            }
            Err(e) => CheckResult::error("cancellativity", &e),
        }),
    ));

    checks.push((
        "decomposition",
        Box::new(move || match decomposition_t(p, bound) {
            Ok(d) => {
                let covered = d.left.covered && d.right.covered;
                let stable = d.left.stabilized && d.right.stabilized;
                let status = if !covered {
                    Status::Fail
                } else if stable {
                    Status::Pass
                } else {
                    Status::Info
                };
                CheckResult::new("decomposition", status, to_value(&d))
            }
            Err(e) => CheckResult::error("decomposition", &e),
        }),
    ));

    checks.push((
        "invariant_completeness",
        Box::new(move || {
            match completeness_check(
                p,
                ct,
                config.word_length,
                config.depth,
                COMPLETENESS_WORD_CAP,
            ) {
                Ok(r) => {
                    let res = CheckResult::new(
                        "invariant_completeness",
                        if r.passed() {
                            Status::Pass
                        } else {
                            Status::Fail
                        },
                        json!({
                            "word_length": r.word_length,
                            "horizon": r.horizon,
                            "words_checked": r.words_checked,
                            "distinct_invariants": r.distinct_invariants,
                            "unexplained_pairs": r.unexplained_pairs,
                            "unsound_pairs": r.unsound_pairs,
                        }),
                    );
                    match &r.example {
                        Some((u, v)) => res.with_witness(json!({ "u": u, "v": v })),
                        None => res,
                    }
                }
                Err(e) => CheckResult::error("invariant_completeness", &e),
            }
        }),
    ));

    Ok(run_checks("verify", config, checks))
}

fn normal_form_check(p: &Presentation, ct: &CosetTable, max_len: usize) -> CheckResult {
    let tails = canonical_tails(p, ct);
    let orbit1: Vec<usize> = p.group().orbit_of(0).iter().map(|k| k + 1).collect();
    let words = all_signed_words(p.n(), max_len);
    let mut first_failure = None;
    let mut failures = 0;
    for w in &words {
        let nf = normal_form(w, p, ct, &tails);
        let eq = |x: &SignedWord| crate::group::equal_g(x, w, p, ct);
        let ok = eq(&nf.word())
            && eq(&nf.derived_word())
            && nf.tail.len() == p.l() - 1
            && nf
                .tail
                .iter()
                .chain(&nf.derived_tail)
                .all(|k| orbit1.contains(k))
            && nf.f == nf.derived_f;
        if !ok {
            failures += 1;
            first_failure.get_or_insert_with(|| json!({ "word": w, "normal_form": nf }));
        }
    }
    let data = json!({
        "words_checked": words.len(),
        "max_length": max_len,
        "failures": failures,
        "cosets": ct.num_cosets(),
        "tails": orbit1.len().pow(p.l() as u32 - 1),
        "cosets_with_several_tails": tails.collisions(),
    });
    let res = CheckResult::new(
        "normal_form",
        if failures == 0 {
            Status::Pass
        } else {
            Status::Fail
        },
        data,
    );
    match first_failure {
        Some(w) => res.with_witness(w),
        None => res,
    }
}

/// Verdict drawn from a growth sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthClass {
    Linear,
    Exponential,
    Undetermined,
}

impl GrowthClass {
    pub fn gk_dimension(self) -> &'static str {
        match self {
            GrowthClass::Linear => "1",
            GrowthClass::Exponential => "infinite",
            GrowthClass::Undetermined => "undetermined",
        }
    }
}

/// Least `m` such that `seq[m..]` is constant.
pub fn constant_from(seq: &[usize]) -> usize {
    let mut m = seq.len().saturating_sub(1);
    while m > 0 && seq[m - 1] == seq[m] {
        m -= 1;
    }
    m
}

/// Classifies per-length counts (`g(m)`, or ball increments `b(m) - b(m-1)`).
///
/// Linear when the counts are constant from `2l - 1` to the end of a horizon
/// of at least `2l + 1`; exponential when `count(m) ≥ r^m` throughout, with
/// `r ≥ 2` the number of orbits.
pub fn classify_growth(per_length: &[usize], l: usize, r: usize) -> GrowthClass {
    let start = 2 * l - 1;
    if per_length.len() > start + 2 && constant_from(per_length) <= start {
        return GrowthClass::Linear;
    }
    if r >= 2
        && per_length
            .iter()
            .enumerate()
            .all(|(m, &c)| (c as u128) >= (r as u128).pow(m as u32))
    {
        return GrowthClass::Exponential;
    }
    GrowthClass::Undetermined
}

/// `b(m) - b(m-1)` with `b(-1) = 0`.
pub fn increments(ball: &[usize]) -> Vec<usize> {
    let mut prev = 0;
    ball.iter()
        .map(|&b| {
            let d = b - prev;
            prev = b;
            d
        })
        .collect()
}

/// `g(m)` for `S`, `b(m)` for `G`, and the growth dichotomy verdict.
pub fn cmd_growth(config: &RunConfig) -> Result<Report> {
    let p = config.presentation()?;
    let ct = config.coset_table(&p)?;
    let (p, ct) = (&p, &ct);
    let cls = p.group().classify();
    let r = p.rank();
    let expected = if cls.transitive {
        GrowthClass::Linear
    } else {
        GrowthClass::Exponential
    };
    let verdict = move |check: &str, class: GrowthClass, mut data: Value| {
        data["class"] = to_value(&class);
        data["gk_dimension"] = json!(class.gk_dimension());
        data["expected"] = to_value(&expected);
        let status = match class {
            c if c == expected => Status::Pass,
            GrowthClass::Undetermined => Status::Info,
            _ => Status::Fail,
        };
        CheckResult::new(check, status, data)
    };
    let checks: Vec<Check<'_>> = vec![
        (
            "growth_monoid",
            Box::new(move || match growth_s(p, config.mmax_monoid) {
                Ok(g) => {
                    let class = classify_growth(&g, p.l(), r);
                    verdict(
                        "growth_monoid",
                        class,
                        json!({ "g": g, "constant_from": constant_from(&g), "orbits": r }),
                    )
                }
                Err(e) => CheckResult::error("growth_monoid", &e),
            }),
        ),
        (
            "growth_group",
            Box::new(
                move || match growth_g(p, ct, config.mmax_group, config.state_cap) {
                    Ok(b) => {
                        let inc = increments(&b);
                        let class = classify_growth(&inc, p.l(), r);
                        verdict(
                            "growth_group",
                            class,
                            json!({ "b": b, "increments": inc, "constant_from": constant_from(&inc), "orbits": r }),
                        )
                    }
                    Err(e) => CheckResult::error("growth_group", &e),
                },
            ),
        ),
    ];
    Ok(run_checks("growth", config, checks))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WpMode {
    Monoid,
    Group,
}

impl FromStr for WpMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monoid" => Ok(WpMode::Monoid),
            "group" => Ok(WpMode::Group),
            other => Err(Error::Config(format!(
                "unknown mode {other:?}, expected monoid or group"
            ))),
        }
    }
}

/// Decides `u = v` in `S` or in `G`.
pub fn cmd_wp(config: &RunConfig, u: &str, v: &str, mode: WpMode) -> Result<Report> {
    let p = config.presentation()?;
    let data = match mode {
        WpMode::Monoid => {
            let (a, b) = (PosWord::parse(u, p.n())?, PosWord::parse(v, p.n())?);
            let (ca, cb) = (monoid::class_of(&a, &p)?, monoid::class_of(&b, &p)?);
            json!({
                "mode": mode,
                "u": a,
                "v": b,
                "verdict": if ca.canonical == cb.canonical { "equal" } else { "distinct" },
                "u_class": ca,
                "v_class": cb,
            })
        }
        WpMode::Group => {
            let (a, b) = (SignedWord::parse(u, p.n())?, SignedWord::parse(v, p.n())?);
            let ct = config.coset_table(&p)?;
            let g = UniversalGroup::from_parts(p.clone(), ct);
            let tails = canonical_tails(&p, g.table());
            let (ia, ib) = (g.invariant(&a), g.invariant(&b));
            json!({
                "mode": mode,
                "u": a,
                "v": b,
                "verdict": if ia == ib { "equal" } else { "distinct" },
                "u_invariant": ia,
                "v_invariant": ib,
                "u_normal_form": normal_form(&a, &p, g.table(), &tails),
                "v_normal_form": normal_form(&b, &p, g.table(), &tails),
            })
        }
    };
    let checks: Vec<Check<'_>> = vec![(
        "word_problem",
        Box::new(move || CheckResult::new("word_problem", Status::Info, data.clone())),
    )];
    Ok(run_checks("wp", config, checks))
}

/// Tab-separated coset table of `F` in `G`.
pub fn cmd_cosets(config: &RunConfig) -> Result<(Report, String)> {
    let p = config.presentation()?;
    let ct = config.coset_table(&p)?;
    let tsv = ct.to_tsv();
    let data = json!({ "cosets": ct.num_cosets(), "tsv": tsv });
    let checks: Vec<Check<'_>> = vec![(
        "coset_table",
        Box::new(move || CheckResult::new("coset_table", Status::Info, data.clone())),
    )];
    Ok((run_checks("cosets", config, checks), tsv))
}

/// Right reversibility of the submonoid generated by free-monoid words.
pub fn cmd_reversible(config: &RunConfig, gens: &[String]) -> Result<Report> {
    let words: Vec<FreeWord> = gens
        .iter()
        .map(|g| FreeWord::new(g))
        .collect::<Result<_>>()?;
    if words.is_empty() {
        return Err(Error::Config(
            "at least one generator word is required".into(),
        ));
    }
    let depth = config.depth;
    let checks: Vec<Check<'_>> = vec![(
        "reversible_submonoid",
        Box::new(move || {
            let envelope = freemonoid::cyclic_envelope(&words);
            let bounded = freemonoid::right_reversible_bounded(&words, depth);
            let lemma = freemonoid::reversible_lemma_check(&words, depth, depth + 2);
            match (bounded, lemma) {
                (Ok(b), Ok(lemma)) => {
                    let status = match lemma {
                        ReversibleLemmaCheck::ViolationCandidate { .. } => Status::Fail,
                        _ => Status::Pass,
                    };
                    let data = json!({
                        "generators": words,
                        "depth": depth,
                        "reversibility": b,
                        "cyclic_envelope": envelope,
                        "lemma_check": lemma,
                    });
                    CheckResult::new("reversible_submonoid", status, data)
                }
                (Err(e), _) | (_, Err(e)) => CheckResult::error("reversible_submonoid", &e),
            }
        }),
    )];
    Ok(run_checks("reversible", config, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(n: usize, l: usize, perms: &[&str]) -> RunConfig {
        RunConfig {
            n: Some(n),
            l: Some(l),
            perms: perms.iter().map(|s| s.to_string()).collect(),
            ..RunConfig::default()
        }
    }

    #[test]
    fn config_file_round_trip() {
        let mut c = RunConfig::default();
        c.apply_file_text(
            "# sample\nn = 3\nl=2\nperm = \"(1 2 3)\"\nlength-bound = 5\nformat = json\n",
        )
        .unwrap();
        assert_eq!(
            c,
            RunConfig {
                length_bound: 5,
                format: Format::Json,
                ..config(3, 2, &["(1 2 3)"])
            }
        );
        assert!(c.apply("colour", "red").is_err());
        assert!(c.apply_file_text("n 3").is_err());
        assert!(RunConfig::default().presentation().is_err());
    }

    #[test]
    fn verify_sym2_passes() {
        let r = cmd_verify(&config(2, 2, &["(1 2)"])).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn verify_sym3_reports_non_embedding() {
        let r = cmd_verify(&config(3, 2, &["(1 2)", "(1 2 3)"])).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let emb = r.result("embedding").unwrap();
        assert_eq!(emb.data["verdict"], "non_embedding");
        assert!(emb.witness.is_some());
        assert!(r.result("cancellativity").unwrap().witness.is_some());
    }

    #[test]
    fn verify_trivial_reports_free() {
        let r = cmd_verify(&config(2, 3, &[])).unwrap();
        assert_eq!(r.result("free_shortcut").unwrap().status, Status::Info);
        assert!(r.passed());
    }

    #[test]
    fn text_and_json_agree() {
        let mut c = config(3, 2, &["(1 2 3)"]);
        c.mmax_monoid = 8;
        let r = cmd_growth(&c).unwrap();
        let json: Value = serde_json::from_str(&r.to_json()).unwrap();
        let text = r.to_text();
        for res in json["results"].as_array().unwrap() {
            let label = res["status"].as_str().unwrap().to_uppercase();
            let line = format!("{label:<5} {}", res["check"].as_str().unwrap());
            assert!(text.contains(&line), "{line} missing from\n{text}");
        }
        assert_eq!(json["schema_version"], SCHEMA_VERSION);
        assert!(r.passed());
    }

    #[test]
    fn parallel_matches_sequential() {
        let mut c = config(2, 3, &["(1 2)"]);
        let a = cmd_verify(&c).unwrap();
        c.parallel = true;
        let b = cmd_verify(&c).unwrap();
        let strip = |r: &Report| serde_json::to_value(&r.results).unwrap();
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn wp_examples() {
        let c = config(2, 2, &["(1 2)"]);
        let r = cmd_wp(&c, "x1 x2", "x2 x1", WpMode::Monoid).unwrap();
        assert_eq!(r.results[0].data["verdict"], "equal");
        let r = cmd_wp(&c, "x1", "x2", WpMode::Group).unwrap();
        assert_eq!(r.results[0].data["verdict"], "distinct");
        assert!(cmd_wp(&c, "x1", "x3", WpMode::Group).is_err());
    }

    #[test]
    fn growth_classes() {
        assert_eq!(
            classify_growth(&[1, 3, 3, 3, 3, 3, 3], 2, 1),
            GrowthClass::Linear
        );
        assert_eq!(
            classify_growth(&[1, 3, 5, 9, 17, 33], 2, 2),
            GrowthClass::Exponential
        );
        assert_eq!(classify_growth(&[1, 3, 5], 2, 1), GrowthClass::Undetermined);
        assert_eq!(increments(&[1, 5, 10, 14]), vec![1, 4, 5, 4]);
        assert_eq!(constant_from(&[0, 4, 5, 4, 4]), 3);
    }
}
