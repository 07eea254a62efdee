//! Ring-level reports, proposition checks on finite rings, and the
//! integer-matrix experiments.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::brute::Profile;
use crate::classify::{clean_from_unit_entry, clear_from_unit_regular, clear_witness};
use crate::decomp::{clear_decompose_full, verify_clear_decomposition};
use crate::descriptor::parse_ring;
use crate::error::{Error, Result};
use crate::finite::{radical_of, FiniteRing, DEFAULT_BUDGET};
use crate::json::elem_to_json;
use crate::ring::{Elem, Ring, RingKind};
use crate::smith::fullness;
use crate::verdict::{is_nontrivial_part, ClearWitness, UnitRegularWitness, Witness};

const DEFAULT_CATALOG: &str = include_str!("../catalog/default.txt");

/// Parse a catalog manifest: one descriptor per line, `#` comments.
pub fn parse_catalog(text: &str) -> Result<Vec<Ring>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(parse_ring)
        .collect()
}

pub fn default_catalog() -> Vec<Ring> {
    parse_catalog(DEFAULT_CATALOG).expect("bundled catalog parses")
}

/// Version line of the bundled catalog.
pub fn default_catalog_version() -> &'static str {
    DEFAULT_CATALOG
        .lines()
        .next()
        .unwrap_or("")
        .trim_start_matches('#')
        .trim()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub element: Elem,
    /// Second element for pair properties (stable range).
    pub partner: Option<Elem>,
}

impl Counterexample {
    fn single(e: &Elem) -> Self {
        Counterexample {
            element: e.clone(),
            partner: None,
        }
    }

    fn to_json(&self, ring: &Ring) -> Value {
        match &self.partner {
            None => elem_to_json(ring, &self.element),
            Some(p) => json!([elem_to_json(ring, &self.element), elem_to_json(ring, p)]),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.partner {
            None => write!(f, "{}", self.element),
            Some(p) => write!(f, "({}; {})", self.element, p),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingFlags {
    pub is_clean_ring: bool,
    pub is_clear_ring: bool,
    pub is_unit_regular_ring: bool,
    pub is_2good_ring: bool,
    pub is_2clean_ring: bool,
    pub is_exchange_ring: bool,
    pub has_ursr1: bool,
    pub is_semisimple: bool,
    pub has_nontrivial_idempotents: bool,
}

pub const FLAG_NAMES: [&str; 9] = [
    "is_clean_ring",
    "is_clear_ring",
    "is_unit_regular_ring",
    "is_2good_ring",
    "is_2clean_ring",
    "is_exchange_ring",
    "has_ursr1",
    "is_semisimple",
    "has_nontrivial_idempotents",
];

impl RingFlags {
    pub fn entries(&self) -> [(&'static str, bool); 9] {
        let values = [
            self.is_clean_ring,
            self.is_clear_ring,
            self.is_unit_regular_ring,
            self.is_2good_ring,
            self.is_2clean_ring,
            self.is_exchange_ring,
            self.has_ursr1,
            self.is_semisimple,
            self.has_nontrivial_idempotents,
        ];
        std::array::from_fn(|i| (FLAG_NAMES[i], values[i]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingReport {
    pub ring: Ring,
    pub cardinality: u64,
    pub flags: RingFlags,
    /// First failing element for each flag that is false.
    pub counterexamples: BTreeMap<&'static str, Counterexample>,
}

impl RingReport {
    pub fn to_json(&self) -> Value {
        let flags: Map<String, Value> = self
            .flags
            .entries()
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        let counterexamples: Map<String, Value> = self
            .counterexamples
            .iter()
            .map(|(k, c)| (k.to_string(), c.to_json(&self.ring)))
            .collect();
        json!({
            "ring": self.ring.to_string(),
            "cardinality": self.cardinality.to_string(),
            "flags": flags,
            "counterexamples": counterexamples,
        })
    }
}

fn first_failure(fr: &FiniteRing, ok: &[bool]) -> Option<Counterexample> {
    ok.iter()
        .position(|&b| !b)
        .map(|i| Counterexample::single(fr.elem(i)))
}

/// Exhaustive ring-level classification of a finite ring with at most
/// `budget` elements.
pub fn classify_ring(ring: &Ring, budget: usize) -> Result<RingReport> {
    let fr = FiniteRing::new(ring, budget)?;
    report_from_tables(&fr, &Profile::new(&fr)).validated()
}

fn report_from_tables(fr: &FiniteRing, p: &Profile) -> RingReport {
    let n = fr.len();
    let unit_regular: Vec<bool> = (0..n).map(|a| p.is_unit_regular(a)).collect();
    let clean: Vec<bool> = (0..n).map(|a| p.is_clean(a)).collect();
    let mut counterexamples = BTreeMap::new();
    let mut flag = |name: &'static str, table: &[bool]| match first_failure(fr, table) {
        Some(c) => {
            counterexamples.insert(name, c);
            false
        }
        None => true,
    };
    let is_clean_ring = flag("is_clean_ring", &clean);
    let is_clear_ring = flag("is_clear_ring", &p.clear);
    let is_unit_regular_ring = flag("is_unit_regular_ring", &unit_regular);
    let is_2good_ring = flag("is_2good_ring", &p.two_good);
    let is_2clean_ring = flag("is_2clean_ring", &p.two_clean);
    let is_exchange_ring = flag("is_exchange_ring", &p.exchange);
    let ursr1 = p.ursr1_counterexample();
    if let Some((a, b)) = ursr1 {
        counterexamples.insert(
            "has_ursr1",
            Counterexample {
                element: fr.elem(a).clone(),
                partner: Some(fr.elem(b).clone()),
            },
        );
    }
    let radical = radical_of(fr);
    if let Some(r) = radical
        .radical_elements
        .iter()
        .find(|e| !fr.ring().is_zero(e))
    {
        counterexamples.insert("is_semisimple", Counterexample::single(r));
    }
    RingReport {
        ring: fr.ring().clone(),
        cardinality: n as u64,
        flags: RingFlags {
            is_clean_ring,
            is_clear_ring,
            is_unit_regular_ring,
            is_2good_ring,
            is_2clean_ring,
            is_exchange_ring,
            has_ursr1: ursr1.is_none(),
            is_semisimple: radical.is_semisimple,
            has_nontrivial_idempotents: fr.has_nontrivial_idempotents(),
        },
        counterexamples,
    }
}

impl RingReport {
    /// Unit-regular and clean rings are clear; any other outcome is a bug in
    /// the tables, never data.
    fn validated(self) -> Result<Self> {
        let f = &self.flags;
        let fail = |what: &str| Err(Error::Invariant(format!("{what} fails on {}", self.ring)));
        if f.is_clean_ring && !f.is_clear_ring {
            return fail("clean ring => clear ring");
        }
        if f.is_unit_regular_ring && !f.is_clear_ring {
            return fail("unit-regular ring => clear ring");
        }
        if f.is_unit_regular_ring && !f.is_clean_ring {
            return fail("unit-regular ring => clean ring");
        }
        if f.has_ursr1 && !f.is_clear_ring {
            return fail("stable range 1 => clear ring");
        }
        Ok(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropositionId {
    P1,
    P2,
    P4,
    P5,
    L6,
    L7,
    P8,
    P109,
    P21i,
    P21iii,
}

impl PropositionId {
    pub const ALL: [PropositionId; 10] = [
        PropositionId::P1,
        PropositionId::P2,
        PropositionId::P4,
        PropositionId::P5,
        PropositionId::L6,
        PropositionId::L7,
        PropositionId::P8,
        PropositionId::P109,
        PropositionId::P21i,
        PropositionId::P21iii,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropositionId::P1 => "P1-clean-implies-clear",
            PropositionId::P2 => "P2-unitregular-implies-clear",
            PropositionId::P4 => "P4-hom-image",
            PropositionId::P5 => "P5-direct-product",
            PropositionId::L6 => "L6-ua-au",
            PropositionId::L7 => "L7-ursr1-implies-clear",
            PropositionId::P8 => "P8-2clean",
            PropositionId::P109 => "P109-no-idempotents",
            PropositionId::P21i => "P2.1i-unit-entry-clean",
            PropositionId::P21iii => "P2.1iii-clean-exchange",
        }
    }
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropositionId {
    type Err = Error;

    /// Accepts the full identifier or its prefix before the first `-`.
    fn from_str(s: &str) -> Result<Self> {
        PropositionId::ALL
            .into_iter()
            .find(|id| {
                let full = id.as_str();
                s == full || full.split('-').next() == Some(s)
            })
            .ok_or_else(|| {
                let known: Vec<&str> = PropositionId::ALL.iter().map(|i| i.as_str()).collect();
                Error::Unsupported(format!(
                    "unknown proposition {s:?}; expected one of {}",
                    known.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    /// Number of instances examined; zero when the statement does not
    /// apply to the ring.
    VerifiedExhaustively { checked: usize },
    Counterexample {
        counterexample: Counterexample,
        detail: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionCheck {
    pub id: PropositionId,
    pub ring: Ring,
    pub status: CheckStatus,
}

impl PropositionCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self.status, CheckStatus::VerifiedExhaustively { .. })
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("proposition".into(), json!(self.id.as_str()));
        m.insert("ring".into(), json!(self.ring.to_string()));
        match &self.status {
            CheckStatus::VerifiedExhaustively { checked } => {
                m.insert("status".into(), json!("verified-exhaustively"));
                m.insert("checked".into(), json!(checked.to_string()));
            }
            CheckStatus::Counterexample {
                counterexample,
                detail,
            } => {
                m.insert("status".into(), json!("counterexample"));
                m.insert("counterexample".into(), counterexample.to_json(&self.ring));
                m.insert("detail".into(), json!(detail));
            }
        }
        Value::Object(m)
    }
}

/// Outcome of scanning instances: `Ok(count)` or the first failure.
type Scan = std::result::Result<usize, (Counterexample, String)>;

fn scan_elements(fr: &FiniteRing, mut holds: impl FnMut(usize) -> Option<String>) -> Scan {
    for a in 0..fr.len() {
        if let Some(detail) = holds(a) {
            return Err((Counterexample::single(fr.elem(a)), detail));
        }
    }
    Ok(fr.len())
}

fn fails_if(cond: bool, detail: &str) -> Option<String> {
    cond.then(|| detail.to_string())
}

fn unit_regular_witness_of(fr: &FiniteRing, p: &Profile, a: usize) -> Option<UnitRegularWitness> {
    p.unit_regular[a].map(|u| UnitRegularWitness {
        element: fr.elem(a).clone(),
        inner_unit: fr.elem(u).clone(),
        inner_unit_inverse: fr.elem(fr.inverse(u).expect("unit")).clone(),
    })
}

/// Exhaustive check of one statement on a finite ring.
pub fn check_proposition(id: PropositionId, ring: &Ring) -> Result<PropositionCheck> {
    let fr = FiniteRing::new(ring, DEFAULT_BUDGET)?;
    let p = Profile::new(&fr);
    let scan = match id {
        PropositionId::P1 => scan_elements(&fr, |a| {
            fails_if(p.is_clean(a) && !p.clear[a], "clean but not clear")
        }),
        PropositionId::P2 => scan_elements(&fr, |a| {
            let w = unit_regular_witness_of(&fr, &p, a)?;
            if !p.clear[a] {
                return Some("unit-regular but not clear".into());
            }
            let cw = clear_from_unit_regular(ring, &w);
            fails_if(
                !cw.validate(ring),
                "a = u⁻¹ - e·u⁻¹ construction does not validate",
            )
        }),
        PropositionId::P4 => check_hom_images(ring, &fr, &p)?,
        PropositionId::P5 => check_direct_product(ring, &fr, &p)?,
        PropositionId::L6 => scan_elements(&fr, |a| {
            let via_units = fr
                .units()
                .iter()
                .any(|&u| p.is_clean(fr.mul(u, a)) && p.is_clean(fr.mul(a, u)));
            fails_if(
                via_units != p.clear[a],
                "clear does not match: u·a and a·u clean for some unit u",
            )
        }),
        PropositionId::L7 => {
            if p.ursr1_counterexample().is_some() {
                Ok(0)
            } else {
                scan_elements(&fr, |a| {
                    fails_if(!p.clear[a], "stable range 1 holds but element is not clear")
                })
            }
        }
        PropositionId::P8 => scan_elements(&fr, |a| {
            fails_if(p.clear[a] && !p.two_clean[a], "clear but not 2-clean")
        }),
        PropositionId::P109 => check_no_idempotents(&fr, &p),
        PropositionId::P21i => check_unit_entry(ring, &fr, &p),
        PropositionId::P21iii => scan_elements(&fr, |a| {
            fails_if(p.is_clean(a) && !p.exchange[a], "clean but not exchange")
        }),
    };
    Ok(PropositionCheck {
        id,
        ring: ring.clone(),
        status: match scan {
            Ok(checked) => CheckStatus::VerifiedExhaustively { checked },
            Err((counterexample, detail)) => CheckStatus::Counterexample {
                counterexample,
                detail,
            },
        },
    })
}

/// Both directions in the form that survives on finite rings:
/// clear without nontrivial idempotents gives "unit or 2-good" everywhere,
/// and "unit or 2-good" everywhere gives clear. The converse half about
/// idempotents is false in M2(Z/2), which has nontrivial idempotents while
/// every element is a sum of two units.
fn check_no_idempotents(fr: &FiniteRing, p: &Profile) -> Scan {
    let unit_or_2good = |a: usize| fr.is_unit(a) || p.two_good[a];
    let all_clear = p.clear.iter().all(|&c| c);
    if all_clear && !fr.has_nontrivial_idempotents() {
        scan_elements(fr, |a| {
            fails_if(
                !unit_or_2good(a),
                "clear ring without nontrivial idempotents, element neither unit nor 2-good",
            )
        })
    } else if (0..fr.len()).all(unit_or_2good) {
        scan_elements(fr, |a| {
            fails_if(
                !p.clear[a],
                "every element unit or 2-good, element not clear",
            )
        })
    } else {
        Ok(0)
    }
}

/// 2x2 matrices over a commutative base with a unit off-diagonal entry are
/// clean, and the explicit split validates.
fn check_unit_entry(ring: &Ring, fr: &FiniteRing, p: &Profile) -> Scan {
    let base = match ring.kind() {
        RingKind::Matrix(b, 2) if b.is_commutative() => b,
        _ => return Ok(0),
    };
    let mut checked = 0;
    for a in 0..fr.len() {
        let es = fr.elem(a).entries().expect("matrix");
        if !base.is_unit(&es[1]) && !base.is_unit(&es[2]) {
            continue;
        }
        checked += 1;
        let ok = p.is_clean(a)
            && clean_from_unit_entry(ring, fr.elem(a)).is_some_and(|w| w.validate(ring));
        if !ok {
            return Err((
                Counterexample::single(fr.elem(a)),
                "unit off-diagonal entry but no clean split".into(),
            ));
        }
    }
    Ok(checked)
}

fn leaf_modulus_gcd(ring: &Ring) -> u64 {
    match ring.kind() {
        RingKind::Integers => 0,
        RingKind::Modular(n) => *n,
        RingKind::Product(l, r) => leaf_modulus_gcd(l).gcd(&leaf_modulus_gcd(r)),
        RingKind::Matrix(b, _) => leaf_modulus_gcd(b),
    }
}

/// A named surjection onto `Ring`.
type Image<'a> = (String, Ring, Box<dyn Fn(&Elem) -> Elem + 'a>);

/// Surjective images of `ring` reachable by reduction or projection.
fn images(ring: &Ring) -> Result<Vec<Image<'_>>> {
    let mut out: Vec<Image<'_>> = Vec::new();
    let g = leaf_modulus_gcd(ring);
    let whole = matches!(ring.kind(), RingKind::Modular(_))
        || matches!(ring.kind(), RingKind::Matrix(b, _) if matches!(b.kind(), RingKind::Modular(_)));
    for m in 2..=g {
        if g.is_multiple_of(m) && !(whole && m == g) {
            let image = ring.reduction(m)?;
            out.push((
                format!("reduction mod {m}"),
                image,
                Box::new(move |a: &Elem| ring.reduce(a, m)),
            ));
        }
    }
    if let RingKind::Product(l, r) = ring.kind() {
        out.push((
            "left projection".into(),
            l.clone(),
            Box::new(|a: &Elem| match a {
                Elem::Pair(x, _) => (**x).clone(),
                _ => unreachable!("product element"),
            }),
        ));
        out.push((
            "right projection".into(),
            r.clone(),
            Box::new(|a: &Elem| match a {
                Elem::Pair(_, y) => (**y).clone(),
                _ => unreachable!("product element"),
            }),
        ));
    }
    Ok(out)
}

fn map_clear_witness(w: &ClearWitness, image: &Ring, f: &dyn Fn(&Elem) -> Elem) -> ClearWitness {
    let r = UnitRegularWitness {
        element: f(&w.unit_regular_part.element),
        inner_unit: f(&w.unit_regular_part.inner_unit),
        inner_unit_inverse: f(&w.unit_regular_part.inner_unit_inverse),
    };
    let nontrivial = is_nontrivial_part(image, &r.element);
    ClearWitness {
        element: f(&w.element),
        unit_regular_part: r,
        unit: f(&w.unit),
        unit_inverse: f(&w.unit_inverse),
        nontrivial,
    }
}

/// Every clear witness maps to a clear witness of the image.
fn check_hom_images(ring: &Ring, fr: &FiniteRing, p: &Profile) -> Result<Scan> {
    let maps = images(ring)?;
    let mut checked = 0;
    for a in 0..fr.len() {
        if !p.clear[a] {
            continue;
        }
        let w = clear_witness(ring, fr.elem(a), 0)?
            .into_witness()
            .ok_or_else(|| Error::Invariant(format!("{} lost its clear witness", fr.elem(a))))?;
        for (name, image, f) in &maps {
            checked += 1;
            if !map_clear_witness(&w, image, f.as_ref()).validate(image) {
                return Ok(Err((
                    Counterexample::single(fr.elem(a)),
                    format!("witness does not survive {name} onto {image}"),
                )));
            }
        }
    }
    Ok(Ok(checked))
}

/// Componentwise clearness, plus the CRT comparison with Z/(mk) when the
/// factors are Z/m and Z/k with coprime moduli.
fn check_direct_product(ring: &Ring, fr: &FiniteRing, p: &Profile) -> Result<Scan> {
    let (l, r) = match ring.kind() {
        RingKind::Product(l, r) => (l, r),
        _ => return Ok(Ok(0)),
    };
    let (fl, frr) = (
        FiniteRing::new(l, DEFAULT_BUDGET)?,
        FiniteRing::new(r, DEFAULT_BUDGET)?,
    );
    let (pl, pr) = (Profile::new(&fl), Profile::new(&frr));
    let crt = match (l.kind(), r.kind()) {
        (RingKind::Modular(m), RingKind::Modular(k)) if m.gcd(k) == 1 => {
            let fz = FiniteRing::new(&Ring::modular(m * k)?, DEFAULT_BUDGET)?;
            let clear = Profile::new(&fz).clear;
            Some((*m, *k, clear))
        }
        _ => None,
    };
    Ok(scan_elements(fr, |a| {
        let (x, y) = match fr.elem(a) {
            Elem::Pair(x, y) => (fl.index(x), frr.index(y)),
            _ => unreachable!("product element"),
        };
        if p.clear[a] != (pl.clear[x] && pr.clear[y]) {
            return Some("clear does not match componentwise clearness".into());
        }
        let (m, k, clear) = crt.as_ref()?;
        let (xv, yv) = (fl.elem(x).as_res()?, frr.elem(y).as_res()?);
        let z = (0..m * k).find(|z| z % m == xv && z % k == yv)?;
        fails_if(
            clear[z as usize] != p.clear[a],
            "clear does not match the CRT image",
        )
    }))
}

/// One row per n in `2..=n_max`, ordered by n. Rows are computed on worker
/// threads.
pub fn survey_zn(n_max: u64) -> Result<Vec<RingReport>> {
    if !(2..=512).contains(&n_max) {
        return Err(Error::Unsupported(format!(
            "survey range must satisfy 2 <= n_max <= 512, got {n_max}"
        )));
    }
    let workers = std::thread::available_parallelism()
        .map_or(1, |w| w.get())
        .min(16) as u64;
    let mut rows: Vec<RingReport> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                s.spawn(move || {
                    (2..=n_max)
                        .filter(|n| n % workers == w)
                        .map(|n| classify_ring(&Ring::modular(n)?, DEFAULT_BUDGET))
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("survey worker"))
            .collect::<Result<Vec<Vec<_>>>>()
    })?
    .into_iter()
    .flatten()
    .collect();
    rows.sort_by_key(|r| r.cardinality);
    for row in &rows {
        let f = &row.flags;
        if (f.is_clean_ring && !f.is_clear_ring) || (f.is_clear_ring && !f.is_2clean_ring) {
            return Err(Error::Invariant(format!(
                "clean => clear => 2-clean fails on {}",
                row.ring
            )));
        }
    }
    Ok(rows)
}

pub fn is_squarefree(n: u64) -> bool {
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Aligned-column rendering of report rows.
pub fn reports_text(rows: &[RingReport]) -> String {
    let names = FLAG_NAMES;
    let ring_w = rows
        .iter()
        .map(|r| r.ring.to_string().len())
        .chain(["ring".len()])
        .max()
        .unwrap_or(4);
    let card_w = rows
        .iter()
        .map(|r| r.cardinality.to_string().len())
        .chain(["size".len()])
        .max()
        .unwrap_or(4);
    let mut out = format!("{:<ring_w$}  {:>card_w$}", "ring", "size");
    for n in &names {
        out.push_str(&format!("  {n}"));
    }
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{:<ring_w$}  {:>card_w$}",
            row.ring.to_string(),
            row.cardinality
        ));
        for (n, v) in row.flags.entries() {
            out.push_str(&format!(
                "  {:<w$}",
                if v { "yes" } else { "no" },
                w = n.len()
            ));
        }
        let trimmed = out.trim_end().len();
        out.truncate(trimmed);
        out.push('\n');
    }
    out
}

/// Whether every commutative clear ring among the reports also has
/// unit-regular stable range 1. An observation about these rings only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableRangeObservation {
    pub commutative_clear: usize,
    pub with_ursr1: usize,
    pub exceptions: Vec<Ring>,
}

impl StableRangeObservation {
    pub fn from_reports(rows: &[RingReport]) -> Self {
        let clear: Vec<&RingReport> = rows
            .iter()
            .filter(|r| r.ring.is_commutative() && r.flags.is_clear_ring)
            .collect();
        let exceptions: Vec<Ring> = clear
            .iter()
            .filter(|r| !r.flags.has_ursr1)
            .map(|r| r.ring.clone())
            .collect();
        StableRangeObservation {
            commutative_clear: clear.len(),
            with_ursr1: clear.len() - exceptions.len(),
            exceptions,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "commutative_clear_rings": self.commutative_clear.to_string(),
            "with_unit_regular_stable_range_1": self.with_ursr1.to_string(),
            "exceptions": self.exceptions.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "kind": "observation",
        })
    }
}

/// Uniform 2x2 integer matrix with entries in `[-bound, bound]`.
pub fn random_int_matrix(rng: &mut impl Rng, bound: i64) -> Elem {
    Elem::Mat(
        (0..4)
            .map(|_| Elem::int(rng.gen_range(-bound..=bound)))
            .collect(),
    )
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Rejections {
    pub not_full: u64,
    pub singular: u64,
}

/// Rejection-sample a full nonsingular 2x2 integer matrix.
pub fn random_full_nonsingular(
    rng: &mut impl Rng,
    bound: i64,
    rejections: &mut Rejections,
) -> Elem {
    let ring = Ring::matrix(Ring::integers(), 2).expect("M2(Z)");
    loop {
        let a = random_int_matrix(rng, bound);
        let f = fullness(&ring, &a).expect("integer matrix");
        if !f.is_full {
            rejections.not_full += 1;
        } else if !f.is_nonsingular {
            rejections.singular += 1;
        } else {
            return a;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardReport {
    pub samples: u64,
    pub seed: u64,
    pub entry_bound: i64,
    pub passed: u64,
    pub failures: Vec<Elem>,
    pub rejections: Rejections,
}

impl ForwardReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.passed == self.samples
    }

    pub fn to_json(&self) -> Value {
        let ring = Ring::matrix(Ring::integers(), 2).expect("M2(Z)");
        json!({
            "samples": self.samples.to_string(),
            "seed": self.seed.to_string(),
            "entry_bound": self.entry_bound.to_string(),
            "passed": self.passed.to_string(),
            "failed": self.failures.len().to_string(),
            "failures": self.failures.iter().map(|a| elem_to_json(&ring, a)).collect::<Vec<_>>(),
            "rejected_not_full": self.rejections.not_full.to_string(),
            "rejected_singular": self.rejections.singular.to_string(),
        })
    }
}

/// Seeded full nonsingular integer matrices, each decomposed and checked for
/// a validating nontrivial clear decomposition. Z has zero Jacobson radical,
/// so it serves as the semisimple elementary divisor base.
pub fn theorem_1_3_forward_check(samples: u64, seed: u64, entry_bound: i64) -> ForwardReport {
    let ring = Ring::matrix(Ring::integers(), 2).expect("M2(Z)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rejections = Rejections::default();
    let mut passed = 0;
    let mut failures = Vec::new();
    for _ in 0..samples {
        let a = random_full_nonsingular(&mut rng, entry_bound.max(1), &mut rejections);
        let ok = clear_decompose_full(&ring, &a)
            .is_ok_and(|d| verify_clear_decomposition(&ring, &d).is_ok() && d.nontrivial);
        if ok {
            passed += 1;
        } else {
            failures.push(a);
        }
    }
    ForwardReport {
        samples,
        seed,
        entry_bound,
        passed,
        failures,
        rejections,
    }
}

/// One solution `(c, d)` of `5c - 12d = ±1` for an idempotent
/// `E = [[1-d, b], [c, d]]`; the candidate is refuted when `c ∤ (1-d)·d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCandidate {
    pub c: i64,
    pub d: i64,
    pub det: i64,
    /// `b = (1-d)·d / c` when it is an integer.
    pub b: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonCleanReport {
    pub c_bound: i64,
    pub d_bound: i64,
    /// `det(A - 0)` and `det(A - I)`.
    pub det_minus_zero: i64,
    pub det_minus_identity: i64,
    pub candidates: Vec<OracleCandidate>,
    /// Clean witnesses reconstructed from integral candidates.
    pub witnesses_found: usize,
    /// No divisor of 11 or 13 is 5 mod 12, which rules out every candidate
    /// regardless of bounds.
    pub residue_argument_holds: bool,
}

impl NonCleanReport {
    pub fn all_refuted(&self) -> bool {
        self.det_minus_zero.abs() != 1
            && self.det_minus_identity.abs() != 1
            && self.candidates.iter().all(|c| c.b.is_none())
            && self.witnesses_found == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "matrix": [["12", "5"], ["0", "0"]],
            "c_bound": self.c_bound.to_string(),
            "d_bound": self.d_bound.to_string(),
            "direct": [
                {"idempotent": "0", "det": self.det_minus_zero.to_string(), "refuted": self.det_minus_zero.abs() != 1},
                {"idempotent": "I", "det": self.det_minus_identity.to_string(), "refuted": self.det_minus_identity.abs() != 1},
            ],
            "candidates": self.candidates.iter().map(|c| json!({
                "c": c.c.to_string(),
                "d": c.d.to_string(),
                "det": c.det.to_string(),
                "b_integral": c.b.is_some(),
                "refuted": c.b.is_none(),
            })).collect::<Vec<_>>(),
            "witnesses_found": self.witnesses_found.to_string(),
            "residue_argument_holds": self.residue_argument_holds,
            "all_refuted": self.all_refuted(),
        })
    }
}

/// Exact search for a clean split of `[[12,5],[0,0]]` over Z. Idempotents
/// other than 0 and I have trace 1 and determinant 0, so with
/// `E = [[1-d, b], [c, d]]` and `bc = (1-d)·d` one gets
/// `det(A - E) = 5c - 12d`, which must be ±1.
pub fn non_clean_oracle_12_5(c_bound: i64, d_bound: i64) -> NonCleanReport {
    let ring = Ring::matrix(Ring::integers(), 2).expect("M2(Z)");
    let a = Elem::Mat([12, 5, 0, 0].iter().map(|&v| Elem::int(v)).collect());
    let det_of = |m: &Elem| {
        ring.det(m)
            .as_int()
            .and_then(|v| i64::try_from(v).ok())
            .unwrap_or(0)
    };
    let det_minus_zero = det_of(&a);
    let det_minus_identity = det_of(&ring.sub(&a, &ring.one()));
    let mut candidates = Vec::new();
    let mut witnesses_found = 0;
    for c in -c_bound..=c_bound {
        for d in -d_bound..=d_bound {
            let det = 5 * c - 12 * d;
            if det.abs() != 1 {
                continue;
            }
            // c = 0 would force 12d = ±1
            let num = (1 - d) * d;
            let b = (c != 0 && num % c == 0).then(|| num / c);
            if let Some(b) = b {
                let e = Elem::Mat([1 - d, b, c, d].iter().map(|&v| Elem::int(v)).collect());
                if ring.is_idempotent(&e) && ring.is_unit(&ring.sub(&a, &e)) {
                    witnesses_found += 1;
                }
            }
            candidates.push(OracleCandidate { c, d, det, b });
        }
    }
    NonCleanReport {
        c_bound,
        d_bound,
        det_minus_zero,
        det_minus_identity,
        candidates,
        witnesses_found,
        residue_argument_holds: residue_argument(),
    }
}

/// From `5c - 12d = ±1`, `gcd(c, d) = 1`, so `c | (1-d)·d` forces
/// `1 - d = kc` and then `c·(5 + 12k) = 12 ± 1`. No divisor of 11 or 13 is
/// congruent to 5 mod 12.
fn residue_argument() -> bool {
    [11i64, 13].iter().all(|&t| {
        (1..=t)
            .filter(|m| t % m == 0)
            .flat_map(|m| [m, -m])
            .all(|m| (m - 5).rem_euclid(12) != 0)
    })
}

/// Entries of a seeded sample of integer matrices, as big integers.
pub fn int_entries(a: &Elem) -> [BigInt; 4] {
    let es = a.entries().expect("matrix");
    [0, 1, 2, 3].map(|i| es[i].as_int().cloned().unwrap_or_else(BigInt::zero))
}

/// `d1 | d2`, `d1 = gcd`, `d1·d2 = |det A|`, unimodular transforms and
/// `P·A·Q = D` for an integer matrix.
pub fn snf_properties_hold(a: &Elem) -> bool {
    let ring = Ring::matrix(Ring::integers(), 2).expect("M2(Z)");
    let Ok(s) = crate::smith::smith_normal_form(&ring, a) else {
        return false;
    };
    let e = int_entries(a);
    let gcd = e.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let det = (&e[0] * &e[3] - &e[1] * &e[2]).abs();
    let d1 = s.d1.as_int().cloned().unwrap_or_default();
    let d2 = s.d2.as_int().cloned().unwrap_or_default();
    let unimodular = |m: &Elem| ring.det(m).as_int().is_some_and(|v| v.abs().is_one());
    let divides = if d1.is_zero() {
        d2.is_zero()
    } else {
        d2.is_multiple_of(&d1)
    };
    ring.mul_all([&s.p, a, &s.q]) == s.d
        && s.d.entries().is_some_and(|es| {
            ring.matrix_base()
                .is_some_and(|b| b.is_zero(&es[1]) && b.is_zero(&es[2]))
        })
        && unimodular(&s.p)
        && unimodular(&s.q)
        && divides
        && d1 == gcd
        && &d1 * &d2 == det
}
