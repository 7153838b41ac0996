//! Command dispatch and report emission.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use superyangian::central::{berezinian, CentralCatalog, GradedFormula};
use superyangian::element::Canonical;
use superyangian::gauss::gauss_decompose;
use superyangian::maps;
use superyangian::series::USeries;
use superyangian::verify::{self, CheckReport, SuiteOptions};
use superyangian::{loop_degree, AlgebraContext, Element, Yangian};

use crate::cache::{Cache, CacheKey};
use crate::config::{Cli, Command, ConfigError, RunConfig};
use crate::spot::spot_checks;

/// Named series in canonical form, as stored in the cache.
type Table = Vec<(String, Vec<Canonical>)>;

#[derive(Serialize)]
struct SeriesOut {
    name: String,
    coefficients: Vec<String>,
    canonical: Vec<Canonical>,
}

#[derive(Serialize)]
struct SeriesReport {
    command: String,
    context: String,
    series: Vec<SeriesOut>,
}

#[derive(Serialize)]
struct CatalogLine {
    name: String,
    claimed_central: bool,
    vanishing_below: u32,
    graded: GradedFormula,
}

#[derive(Serialize)]
struct GradedOut {
    context: String,
    family: String,
    r: usize,
    element: String,
    loop_degree: Option<u32>,
    graded: Option<String>,
}

/// Bound used by a suite when `--bound` is absent.
pub fn default_bound(suite: &str) -> usize {
    match suite {
        "rtt" | "center" | "maps" => 4,
        "pbw" | "spot" => 2,
        "current" => 3,
        _ => 5,
    }
}

fn to_table(xs: Vec<(String, USeries)>) -> Table {
    xs.into_iter().map(|(n, s)| (n, s.coeffs().iter().map(Element::to_canonical).collect())).collect()
}

fn render(ctx: &AlgebraContext, command: &str, table: Table) -> Result<SeriesReport, ConfigError> {
    let mut series = Vec::new();
    for (name, cs) in table {
        let coefficients = cs
            .iter()
            .map(|c| Element::from_canonical(*ctx, c).map(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        series.push(SeriesOut { name, coefficients, canonical: cs });
    }
    Ok(SeriesReport { command: command.into(), context: ctx.label(), series })
}

fn cached_table(
    cache: &Option<Cache>,
    ctx: &AlgebraContext,
    name: &str,
    compute: impl FnOnce() -> Result<Table, ConfigError>,
) -> Result<Table, ConfigError> {
    match cache {
        None => compute(),
        Some(c) => Ok(c.get_or_insert(&CacheKey::new(ctx, name), compute)?.0),
    }
}

fn emit<T: Serialize>(cfg: &RunConfig, value: &T) -> Result<(), ConfigError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| ConfigError::Other(e.to_string()))?;
    match &cfg.output {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| ConfigError::Other(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{text}").map_err(|e| ConfigError::Other(e.to_string()))
        }
    }
}

fn run_target(cfg: &RunConfig, target: &str) -> Result<Vec<CheckReport>, ConfigError> {
    let bound = cfg.bound.unwrap_or_else(|| default_bound(target));
    let opts = if cfg.mutate { SuiteOptions::mutated(bound) } else { SuiteOptions::new(bound) };
    let ctx = &cfg.ctx;
    if verify::SUITES.contains(&target) {
        return Ok(verify::run_named(target, ctx, opts)?);
    }
    if target == "spot" {
        return Ok(vec![spot_checks(ctx, cfg.seed, bound as u32)]);
    }
    let id = target.strip_prefix("identity/").unwrap_or(target);
    if verify::identity_ids().contains(&id) {
        let opts = if cfg.mutate { SuiteOptions::mutated(default_bound("identities")) } else { opts };
        let opts = SuiteOptions { bound: cfg.bound.unwrap_or(opts.bound), ..opts };
        return Ok(vec![verify::verify_identity(id, ctx, opts)?]);
    }
    Err(ConfigError::UnknownSuite(target.to_string()))
}

/// Expand `all` and check every name before any computation starts.
fn targets(cfg: &RunConfig) -> Result<Vec<String>, ConfigError> {
    let mut out = Vec::new();
    for s in &cfg.suites {
        if s == "all" {
            out.extend(verify::SUITES.iter().map(|x| x.to_string()));
            out.push("spot".into());
            continue;
        }
        let id = s.strip_prefix("identity/").unwrap_or(s);
        if !(verify::SUITES.contains(&s.as_str()) || s == "spot" || verify::identity_ids().contains(&id)) {
            return Err(ConfigError::UnknownSuite(s.clone()));
        }
        out.push(s.clone());
    }
    if out.is_empty() {
        return Err(ConfigError::Other("nothing to verify: name a suite, an identity id, or all".into()));
    }
    Ok(out)
}

fn finish(cfg: &RunConfig, reports: Vec<CheckReport>) -> Result<i32, ConfigError> {
    let reports: Vec<CheckReport> =
        if cfg.timing { reports } else { reports.into_iter().map(CheckReport::without_timing).collect() };
    for r in &reports {
        let w = r.witness.as_ref().map(|w| format!(" at {}", w.indices)).unwrap_or_default();
        eprintln!("{:<6} {} [{}] {} checks{}", if r.passed() { "PASS" } else { "FAIL" }, r.id, r.context, r.checked, w);
    }
    emit(cfg, &reports)?;
    Ok(if reports.iter().all(CheckReport::passed) { 0 } else { 1 })
}

/// Execute a parsed command line. Returns the process exit code; `Err` means
/// a configuration problem (exit code 2).
pub fn execute(cli: &Cli) -> Result<i32, ConfigError> {
    let cfg = RunConfig::resolve(cli)?;
    let ctx = cfg.ctx;
    let cache = match &cfg.cache_dir {
        None => None,
        Some(d) => Some(Cache::open(d).map_err(|e| ConfigError::Other(format!("cache dir {}: {e}", d.display())))?),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| ConfigError::Other(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Gauss { name } => {
            let mut table = cached_table(&cache, &ctx, "gauss", || Ok(to_table(gauss_decompose(&Yangian::new(ctx)).named())))?;
            if let Some(name) = name {
                table.retain(|(n, _)| n == name);
                if table.is_empty() {
                    return Err(ConfigError::Other(format!("no Gauss series named {name}")));
                }
            }
            emit(&cfg, &render(&ctx, "gauss", table)?)?;
            Ok(0)
        }
        Command::Berezinian => {
            let table = cached_table(&cache, &ctx, "berezinian", || {
                Ok(to_table(vec![("c".into(), berezinian(&gauss_decompose(&Yangian::new(ctx))))]))
            })?;
            emit(&cfg, &render(&ctx, "berezinian", table)?)?;
            Ok(0)
        }
        Command::Center { list, emit: which } => {
            let catalog = || CentralCatalog::build(std::sync::Arc::new(gauss_decompose(&Yangian::new(ctx))));
            if let Some(name) = which {
                let table = cached_table(&cache, &ctx, &format!("center/{name}"), || {
                    let cat = catalog()?;
                    Ok(to_table(vec![(name.clone(), cat.series(name)?.clone())]))
                })?;
                emit(&cfg, &render(&ctx, "center", table)?)?;
            } else if *list {
                let cat = catalog()?;
                let lines: Vec<CatalogLine> = cat
                    .entries()
                    .iter()
                    .map(|(n, e)| CatalogLine {
                        name: n.clone(),
                        claimed_central: e.claimed_central,
                        vanishing_below: e.vanishing_below,
                        graded: e.graded,
                    })
                    .collect();
                emit(&cfg, &lines)?;
            } else {
                return Err(ConfigError::Other("center needs --list or --emit <name>".into()));
            }
            Ok(0)
        }
        Command::Gr { family, r } => {
            let cat = CentralCatalog::build(std::sync::Arc::new(gauss_decompose(&Yangian::new(ctx))))?;
            let s = cat.series(family)?;
            let x = s.try_coeff(*r)?.clone();
            let d = loop_degree(&x);
            let graded = match d {
                Some(d) => Some(cat.yangian().top_graded(&x, d)?.to_string()),
                None => None,
            };
            let out = GradedOut { context: ctx.label(), family: family.clone(), r: *r, element: x.to_string(), loop_degree: d, graded };
            emit(&cfg, &out)?;
            Ok(0)
        }
        Command::Maps { check } => {
            let y = Yangian::new(ctx);
            let map = maps::by_name(&y, check)?;
            let bound = cfg.bound.unwrap_or(default_bound("maps"));
            let mut reports = vec![verify::check_homomorphism(&map, bound)?];
            let opts = if cfg.mutate { SuiteOptions::mutated(bound) } else { SuiteOptions::new(bound) };
            reports.extend(verify::verify_maps(&ctx, opts)?.into_iter().filter(|r| !r.id.starts_with("maps/rtt/")));
            finish(&cfg, reports)
        }
        Command::Verify { .. } => {
            let list = targets(&cfg)?;
            let chunks = list.par_iter().map(|t| run_target(&cfg, t)).collect::<Result<Vec<_>, _>>()?;
            finish(&cfg, chunks.into_iter().flatten().collect())
        }
    })
}
