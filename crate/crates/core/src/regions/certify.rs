//! Certificates for parabolic dust and non-free groups.
//!
//! If some iterate `f^n(lambda)` hits `+-i` (with `n >= 1`) the group contains
//! two commuting pairs of parabolics, lifted from the Whitehead parameters
//! `f^{n-1}(lambda)` through the tower `P_{n-1}`. A hit on `+-2` gives a
//! parabolic of trace `-2` in `<S, P_n>`. A hit on a catalog value gives a
//! subgroup `<S, P_n>` conjugate to a non-free group.

use serde::Serialize;

use super::catalog::{catalog_lookup_with, CatalogMatch, LookupOptions, MatchQuality};
use crate::dynamics::{self, EXACT_BIT_CAP};
use crate::error::{Error, Result};
use crate::group2p::{lift_word, make_group, tower_word, MarkedGroup, MATRIX_TOL};
use crate::moebius::{word, ComplexValue, MoebiusMatrix};

pub const DEFAULT_MAX_DEPTH: u32 = 8;

/// Beyond this modulus no catalog value can be reached again.
const ESCAPE_MODULUS: f64 = 32.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    DustOrNonfree,
    Nonfree,
    DustAndNonfree,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Target {
    PlusI,
    MinusI,
    PlusTwo,
    MinusTwo,
    Catalog { id: String, family: String, value: ComplexValue },
    External { name: String, value: ComplexValue },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    Numeric { tolerance: f64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub lambda: ComplexValue,
    pub kind: CertificateKind,
    pub depth: u32,
    pub target: Target,
    /// `f^depth(lambda)` as computed.
    pub iterate: ComplexValue,
    pub exactness: Exactness,
    pub witness_words: Vec<String>,
    /// Index pairs into `witness_words` that commute.
    pub commuting_pairs: Vec<(usize, usize)>,
    pub verified: bool,
    pub checks: Vec<String>,
}

/// A user-registered value, e.g. a cusp parameter.
#[derive(Clone, Debug)]
pub struct ExternalTarget {
    pub name: String,
    pub value: ComplexValue,
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub max_depth: u32,
    pub tolerance: f64,
    pub catalog: LookupOptions,
    pub external_targets: Vec<ExternalTarget>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            max_depth: DEFAULT_MAX_DEPTH,
            tolerance: 1e-12,
            catalog: LookupOptions::default(),
            external_targets: Vec::new(),
        }
    }
}

pub fn certify(lambda: &ComplexValue, max_depth: u32) -> Result<Option<Certificate>> {
    certify_with(lambda, &CertifyOptions { max_depth, ..CertifyOptions::default() })
}

fn hits(z: &ComplexValue, target: &ComplexValue, tol: f64) -> bool {
    z.approx_eq(target, tol)
}

pub fn certify_with(lambda: &ComplexValue, opts: &CertifyOptions) -> Result<Option<Certificate>> {
    let g = make_group(lambda.clone())?;
    let tol = opts.tolerance;
    let ext_max = opts.external_targets.iter().map(|e| e.value.abs_f64()).fold(0.0, f64::max);
    let escape = ESCAPE_MODULUS.max(2.0 * ext_max);
    let mut prev: Option<ComplexValue> = None;
    let mut z = lambda.clone();
    for n in 0..=opts.max_depth {
        if n > 0 {
            if z.bit_size() > EXACT_BIT_CAP {
                z = z.to_float();
            }
            prev = Some(z.clone());
            z = dynamics::f(&z);
        }
        let exactness = if z.is_exact() { Exactness::Exact } else { Exactness::Numeric { tolerance: tol } };
        if n >= 1 {
            for (t, target) in [(ComplexValue::i(), Target::PlusI), (-ComplexValue::i(), Target::MinusI)] {
                if hits(&z, &t, tol) {
                    let mu = prev.clone().expect("n >= 1");
                    return Ok(Some(dust_and_nonfree(&g, n, &mu, z, target, exactness)));
                }
            }
            for (t, target) in
                [(ComplexValue::int(2, 0), Target::PlusTwo), (ComplexValue::int(-2, 0), Target::MinusTwo)]
            {
                if hits(&z, &t, tol) {
                    return Ok(Some(dust_or_nonfree(&g, n, z, target, exactness)));
                }
            }
        }
        if let Some(m) = catalog_lookup_with(&z, &opts.catalog) {
            return Ok(Some(nonfree(&g, n, z, m)));
        }
        for ext in &opts.external_targets {
            if hits(&z, &ext.value, tol) {
                let target = Target::External { name: ext.name.clone(), value: ext.value.clone() };
                return Ok(Some(tower_certificate(
                    &g,
                    n,
                    z,
                    &ext.value,
                    CertificateKind::DustOrNonfree,
                    target,
                    exactness,
                )));
            }
        }
        if z.abs_f64() > escape {
            break;
        }
    }
    Ok(None)
}

fn check_tol(g: &MarkedGroup, m: &MoebiusMatrix) -> f64 {
    if g.is_exact() && m.is_exact() {
        0.0
    } else {
        let scale = [&m.a, &m.b, &m.c, &m.d].iter().map(|v| v.abs_f64()).fold(1.0, f64::max);
        MATRIX_TOL * scale * scale
    }
}

fn trace_is(g: &MarkedGroup, m: &MoebiusMatrix, t: i64) -> bool {
    m.trace().approx_eq(&ComplexValue::int(t, 0), check_tol(g, m).max(if g.is_exact() { 0.0 } else { MATRIX_TOL }))
}

fn dust_and_nonfree(
    g: &MarkedGroup,
    n: u32,
    mu: &ComplexValue,
    z: ComplexValue,
    target: Target,
    exactness: Exactness,
) -> Certificate {
    let k = n - 1;
    let mirrored = mu.re().sign_tol(0.0).is_lt();
    let m = |w: &str| if mirrored { word::mirror_s(w) } else { w.to_string() };
    let base = [m("T"), m("sTStSTst"), m("S"), m("tSTsTSts")];
    let words: Vec<String> = base.iter().map(|w| lift_word(w, k).expect("valid words")).collect();
    let mut checks = Vec::new();
    let mut ok = true;
    let mats: Vec<MoebiusMatrix> = words.iter().map(|w| g.evaluate_word(w).expect("valid words")).collect();
    for (i, w) in mats.iter().enumerate() {
        let par = trace_is(g, w, 2) || trace_is(g, w, -2);
        checks.push(format!("witness {} has trace +-2: {}", i, par));
        ok &= par;
    }
    for (a, b) in [(0usize, 1usize), (2, 3)] {
        let tol = check_tol(g, &mats[a]).max(check_tol(g, &mats[b]));
        let c = mats[a].commutes_with(&mats[b], tol);
        checks.push(format!("witnesses {} and {} commute: {}", a, b, c));
        ok &= c;
    }
    Certificate {
        schema_version: super::predicates::SCHEMA_VERSION,
        lambda: g.lambda().clone(),
        kind: CertificateKind::DustAndNonfree,
        depth: n,
        target,
        iterate: z,
        exactness,
        witness_words: words,
        commuting_pairs: vec![(0, 1), (2, 3)],
        verified: ok,
        checks,
    }
}

fn dust_or_nonfree(g: &MarkedGroup, n: u32, z: ComplexValue, target: Target, exactness: Exactness) -> Certificate {
    // At mu = 2, S T_mu^{-1} has trace 2 - 2 mu = -2; at mu = -2 use S T_mu.
    let base = if target == Target::PlusTwo { "St" } else { "ST" };
    let w = lift_word(base, n).expect("valid words");
    let m = g.evaluate_word(&w).expect("valid words");
    let ok = trace_is(g, &m, -2);
    Certificate {
        schema_version: super::predicates::SCHEMA_VERSION,
        lambda: g.lambda().clone(),
        kind: CertificateKind::DustOrNonfree,
        depth: n,
        target,
        iterate: z,
        exactness,
        witness_words: vec![tower_word(n), w],
        commuting_pairs: Vec::new(),
        verified: ok,
        checks: vec![format!("lifted word has trace -2: {}", ok)],
    }
}

fn nonfree(g: &MarkedGroup, n: u32, z: ComplexValue, m: CatalogMatch) -> Certificate {
    let exactness = match (&m.quality, z.is_exact()) {
        (MatchQuality::Exact, true) => Exactness::Exact,
        (MatchQuality::Numeric { tolerance, .. }, _) => Exactness::Numeric { tolerance: *tolerance },
        (MatchQuality::Exact, false) => Exactness::Numeric { tolerance: 1e-12 },
    };
    let target = Target::Catalog {
        id: m.entry.id.clone(),
        family: m.entry.family.code().to_string(),
        value: m.entry.value.clone(),
    };
    let value = z.clone();
    tower_certificate(g, n, z, &value, CertificateKind::Nonfree, target, exactness)
}

/// Witness `P_n`: parabolic, and `<S, P_n>` has the commutator trace of `G_mu`.
fn tower_certificate(
    g: &MarkedGroup,
    n: u32,
    z: ComplexValue,
    mu: &ComplexValue,
    kind: CertificateKind,
    target: Target,
    exactness: Exactness,
) -> Certificate {
    let p = g.parabolic_tower_capped(n, n.max(crate::group2p::DEFAULT_TOWER_DEPTH_CAP)).expect("depth within cap");
    let par = trace_is(g, &p, 2);
    let comm = MoebiusMatrix::commutator(g.s(), &p);
    let expected = &ComplexValue::int(2, 0) + &(&ComplexValue::int(4, 0) * &mu.square());
    let tol = if g.is_exact() && mu.is_exact() { 0.0 } else { check_tol(g, &comm).max(1e-9) };
    let ct = comm.trace().approx_eq(&expected, tol);
    Certificate {
        schema_version: super::predicates::SCHEMA_VERSION,
        lambda: g.lambda().clone(),
        kind,
        depth: n,
        target,
        iterate: z,
        exactness,
        witness_words: vec![tower_word(n)],
        commuting_pairs: Vec::new(),
        verified: par && ct,
        checks: vec![format!("P_{} has trace 2: {}", n, par), format!("Tr[S, P_{}] - 2 = 4 mu^2: {}", n, ct)],
    }
}

impl Certificate {
    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }
}

/// Errors only on `lambda = 0`.
pub fn certify_default(lambda: &ComplexValue) -> Result<Option<Certificate>> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    certify(lambda, DEFAULT_MAX_DEPTH)
}
