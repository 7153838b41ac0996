//! Check harness: reports, witnesses and the relation, identity, centrality,
//! graded-image and counting suites.

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use parking_lot::Mutex;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::context::AlgebraContext;
use crate::element::{Canonical, Element};
use crate::error::Result;
use crate::gauss::{gauss_decompose, GaussData};
use crate::yangian::Yangian;

pub mod counts;
pub mod current;
pub mod drinfeld;
pub mod graded;
pub mod identities;
pub mod maps;
pub mod rtt;
pub mod sy;

pub use counts::{verify_independence, verify_pbw_counts};
pub use current::verify_current;
pub use drinfeld::verify_drinfeld_presentation;
pub use graded::{verify_center, verify_central, verify_graded};
pub use identities::{identity_ids, verify_identities, verify_identity, IdentityRecord, IDENTITIES};
pub use maps::{check_homomorphism, verify_maps, verify_permutation_lemma};
pub use rtt::verify_rtt_consistency;
pub use sy::verify_sy_presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A violated instance: which indices, and `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: String,
    pub difference: Canonical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub context: String,
    pub status: Status,
    /// Number of exact equalities tested.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Drop the timing field so reports compare byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.millis = None;
        self
    }
}

/// Accumulates equality checks; keeps the first failure.
#[derive(Default)]
pub struct Tally {
    checked: usize,
    witness: Option<Witness>,
}

impl Tally {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record `lhs == rhs`; `label` is only evaluated on failure.
    pub fn eq(&mut self, label: impl FnOnce() -> String, lhs: &Element, rhs: &Element) -> bool {
        self.checked += 1;
        if lhs == rhs {
            return true;
        }
        if self.witness.is_none() {
            self.witness = Some(Witness { indices: label(), difference: lhs.sub(rhs).to_canonical() });
        }
        false
    }

    pub fn zero(&mut self, label: impl FnOnce() -> String, x: &Element) -> bool {
        self.checked += 1;
        if x.is_zero() {
            return true;
        }
        if self.witness.is_none() {
            self.witness = Some(Witness { indices: label(), difference: x.to_canonical() });
        }
        false
    }

    /// Record a failed non-element check (e.g. a count mismatch).
    pub fn fail_with(&mut self, label: impl FnOnce() -> String, difference: Canonical) {
        self.checked += 1;
        if self.witness.is_none() {
            self.witness = Some(Witness { indices: label(), difference });
        }
    }

    pub fn pass_one(&mut self) {
        self.checked += 1;
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn checked(&self) -> usize {
        self.checked
    }

    pub fn report(self, id: impl Into<String>, ctx: &AlgebraContext, start: Instant) -> CheckReport {
        CheckReport {
            id: id.into(),
            context: ctx.label(),
            status: if self.witness.is_some() { Status::Fail } else { Status::Pass },
            checked: self.checked,
            witness: self.witness,
            note: None,
            millis: Some(start.elapsed().as_millis() as u64),
        }
    }
}

/// Options shared by the suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Superscript bound (`r + s <= bound`, or the suite's own degree bound).
    pub bound: usize,
    /// Run the deliberately broken variant of the suite.
    pub mutate: bool,
}

impl SuiteOptions {
    pub fn new(bound: usize) -> Self {
        SuiteOptions { bound, mutate: false }
    }

    pub fn mutated(bound: usize) -> Self {
        SuiteOptions { bound, mutate: true }
    }
}

/// Gauss data of `ctx` computed to order `max(N, order)`, so relations whose
/// superscripts exceed `N` by a fixed amount stay exact.
pub fn working_gauss(ctx: &AlgebraContext, order: usize) -> Arc<GaussData> {
    static CACHE: OnceLock<Mutex<FxHashMap<AlgebraContext, Arc<GaussData>>>> = OnceLock::new();
    let w = ctx.with_trunc(ctx.trunc.max(order));
    let cache = CACHE.get_or_init(Default::default);
    if let Some(gd) = cache.lock().get(&w) {
        return gd.clone();
    }
    let gd = Arc::new(gauss_decompose(&Yangian::new(w)));
    cache.lock().entry(w).or_insert(gd).clone()
}

/// Wrap a fallible suite body into a report.
pub(crate) fn run_suite(
    id: &str,
    ctx: &AlgebraContext,
    body: impl FnOnce(&mut Tally) -> Result<()>,
) -> Result<CheckReport> {
    let start = Instant::now();
    let mut t = Tally::new();
    body(&mut t)?;
    Ok(t.report(id, ctx, start))
}

/// Suite names accepted by [`run_named`], in the order `all` runs them.
pub const SUITES: &[&str] = &["rtt", "drinfeld", "identities", "sy", "center", "pbw", "maps", "current"];

/// Run one suite by name.
pub fn run_named(name: &str, ctx: &AlgebraContext, opts: SuiteOptions) -> Result<Vec<CheckReport>> {
    match name {
        "rtt" => verify_rtt_consistency(ctx, opts),
        "drinfeld" => verify_drinfeld_presentation(ctx, opts),
        "identities" => verify_identities(ctx, opts),
        "sy" => verify_sy_presentation(ctx, opts),
        "center" => verify_center(ctx, opts),
        "pbw" => verify_pbw_counts(ctx, opts),
        "maps" => verify_maps(ctx, opts),
        "current" => verify_current(ctx, opts),
        _ => Err(crate::error::Error::Unknown(name.to_string())),
    }
}
